//! Independent checks of a built [`ARQuiver`].
//!
//! Nothing here reuses the hammock knit: dimension vectors of projectives
//! and injectives come from the ext-quiver directly, meshes are re-added,
//! and path lengths are aggregated over every path.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::ar_quiver::ARQuiver;
use crate::error::Result;
use crate::quiver::ValuedQuiver;
use crate::repetitive::{ArrowKind, ZVertex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    /// Where the first failure occurred.
    pub failure: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OracleReport {
    pub checks: Vec<Check>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn merge(mut self, other: OracleReport) -> OracleReport {
        self.checks.extend(other.checks);
        self
    }

    fn record(&mut self, name: &'static str, failure: Option<String>) {
        self.checks.push(Check {
            name,
            passed: failure.is_none(),
            failure,
        });
    }
}

/// `dim P_i = e_i + Σ_{i→j} d_ij dim P_j`, indexed `[i - 1]`.
pub fn recursive_projective_dims(q: &ValuedQuiver) -> Result<Vec<Vec<i64>>> {
    let n = q.n();
    let mut dims = vec![vec![0i64; n]; n];
    for &i in q.topological_order()?.iter().rev() {
        let mut d = vec![0i64; n];
        d[i - 1] = 1;
        for &id in q.out_arrows(i) {
            let a = q.arrow(id);
            for (x, y) in d.iter_mut().zip(&dims[a.dst - 1]) {
                *x += i64::from(a.val.0) * y;
            }
        }
        dims[i - 1] = d;
    }
    Ok(dims)
}

/// `dim I_l = e_l + Σ_{j→l} d'_jl dim I_j`, indexed `[l - 1]`.
pub fn recursive_injective_dims(q: &ValuedQuiver) -> Result<Vec<Vec<i64>>> {
    let n = q.n();
    let mut dims = vec![vec![0i64; n]; n];
    for &l in q.topological_order()?.iter() {
        let mut d = vec![0i64; n];
        d[l - 1] = 1;
        for &id in q.in_arrows(l) {
            let a = q.arrow(id);
            for (x, y) in d.iter_mut().zip(&dims[a.src - 1]) {
                *x += i64::from(a.val.1) * y;
            }
        }
        dims[l - 1] = d;
    }
    Ok(dims)
}

/// Mesh additivity, projective and injective recursions, and sanity of the
/// dimension vectors.
pub fn verify_mesh(arq: &ARQuiver) -> OracleReport {
    let mut report = OracleReport::default();
    let dim = |v: ZVertex| arq.dims.get(&v);

    let mut failure = None;
    for &v in &arq.vertices {
        if v.level == 0 {
            continue;
        }
        let tau = ZVertex::new(v.level - 1, v.base);
        let (Some(dv), Some(dt)) = (dim(v), dim(tau)) else {
            failure = Some(format!("missing dimension vector near {v}"));
            break;
        };
        let mut sum = vec![0i64; arq.n()];
        for a in arq.in_arrows(v) {
            for (s, x) in sum.iter_mut().zip(&arq.dims[&a.src]) {
                *s += i64::from(a.val.1) * x;
            }
        }
        let lhs: Vec<i64> = dv.iter().zip(dt).map(|(x, y)| x + y).collect();
        if lhs != sum {
            failure = Some(format!("mesh ending at {v}"));
            break;
        }
    }
    report.record("mesh additivity", failure);

    let q = &arq.q;
    let failure = match recursive_projective_dims(q) {
        Err(e) => Some(format!("{e}")),
        Ok(p) => q
            .vertices()
            .find(|&i| dim(arq.projective(i)) != Some(&p[i - 1]))
            .map(|i| format!("projective P_{i} at {}", arq.projective(i))),
    };
    report.record("projective recursion", failure);

    let failure = match recursive_injective_dims(q) {
        Err(e) => Some(format!("{e}")),
        Ok(inj) => q
            .vertices()
            .find(|&l| dim(arq.injective(l)) != Some(&inj[l - 1]))
            .map(|l| format!("injective I_{l} at {}", arq.injective(l))),
    };
    report.record("injective recursion", failure);

    let failure = arq
        .dims
        .iter()
        .find(|(_, d)| d.iter().any(|&x| x < 0) || d.iter().all(|&x| x == 0))
        .map(|(v, _)| format!("dimension vector at {v}"));
    report.record("dimension vectors positive", failure);

    let mut seen = BTreeMap::new();
    let failure = arq
        .dims
        .iter()
        .find_map(|(v, d)| seen.insert(d.clone(), *v).map(|w| format!("{w} and {v}")));
    report.record("dimension vectors distinct", failure);

    let failure = arq
        .vertices
        .iter()
        .find(|v| dim(**v).is_none())
        .map(|v| format!("{v}"))
        .or_else(|| (arq.dims.len() != arq.vertices.len()).then(|| String::from("extra entries")));
    report.record("every vertex has a dimension vector", failure);

    report
}

/// Aggregates over all paths of the quiver: parallel paths must have one
/// common length, and a sectional path must be the only path between its
/// endpoints.
pub fn audit_paths(arq: &ARQuiver) -> OracleReport {
    let mut report = OracleReport::default();
    let index: BTreeMap<ZVertex, usize> = arq
        .vertices
        .iter()
        .enumerate()
        .map(|(k, &v)| (v, k))
        .collect();
    let out: Vec<Vec<(usize, usize, ArrowKind)>> = arq
        .vertices
        .iter()
        .map(|&v| {
            arq.arrows
                .iter()
                .filter(|a| a.src == v)
                .map(|a| (index[&a.dst], a.arrow, a.kind))
                .collect()
        })
        .collect();

    let mut length_failure = None;
    let mut sectional_failure = None;
    for s in 0..arq.vertices.len() {
        // Path lengths and total path counts per vertex.
        let mut lengths: Vec<BTreeSet<u32>> = vec![BTreeSet::new(); arq.vertices.len()];
        let mut paths: Vec<u64> = vec![0; arq.vertices.len()];
        // Sectional paths counted by their last arrow (base arrow, kind).
        let mut sectional: Vec<BTreeMap<Option<(usize, ArrowKind)>, u64>> =
            vec![BTreeMap::new(); arq.vertices.len()];
        lengths[s].insert(0);
        paths[s] = 1;
        sectional[s].insert(None, 1);
        // Vertices are in topological order, so everything reachable from
        // `s` comes after it.
        for v in s..arq.vertices.len() {
            if paths[v] == 0 {
                continue;
            }
            let here: Vec<u32> = lengths[v].iter().copied().collect();
            let sect: Vec<_> = sectional[v].iter().map(|(k, c)| (*k, *c)).collect();
            for &(w, base, kind) in &out[v] {
                lengths[w].extend(here.iter().map(|l| l + 1));
                paths[w] = paths[w].saturating_add(paths[v]);
                for &(last, c) in &sect {
                    let cancels = matches!(last, Some((b, k)) if b == base && k != kind);
                    if !cancels {
                        let e = sectional[w].entry(Some((base, kind))).or_default();
                        *e = e.saturating_add(c);
                    }
                }
            }
        }
        for t in s..arq.vertices.len() {
            if lengths[t].len() > 1 && length_failure.is_none() {
                length_failure = Some(format!(
                    "paths {} -> {} of lengths {:?}",
                    arq.vertices[s], arq.vertices[t], lengths[t]
                ));
            }
            let n_sectional: u64 = sectional[t].values().sum();
            if n_sectional > 0 && paths[t] != 1 && sectional_failure.is_none() {
                sectional_failure = Some(format!(
                    "{} paths {} -> {} although one is sectional",
                    paths[t], arq.vertices[s], arq.vertices[t]
                ));
            }
        }
    }
    report.record("parallel paths have equal length", length_failure);
    report.record("sectional paths are unique", sectional_failure);
    report
}

/// Every oracle check at once.
pub fn run_all(arq: &ARQuiver) -> OracleReport {
    verify_mesh(arq).merge(audit_paths(arq))
}
