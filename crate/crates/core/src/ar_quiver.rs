//! The Auslander-Reiten quiver as a convex piece of `ZQ^op`.
//!
//! The vertex `(r, i)` stands for `τ^{-r} P_i`. Each τ-orbit runs from the
//! projective `P_i = (0, i)` to the injective `I_{ρ(i)} = (m(i), i)`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::dynkin::{self, DynkinClass, Family};
use crate::error::{Error, Result};
use crate::hammock::{self, HammockResult};
use crate::quiver::{ValuedQuiver, Vertex};
use crate::repetitive::{Repetitive, ZArrow, ZVertex};

#[derive(Debug, Clone)]
pub struct ARQuiver {
    /// The ext-quiver.
    pub q: ValuedQuiver,
    pub dynkin: DynkinClass,
    /// `m[i - 1]` is the pi-index `m(i)`.
    pub m: Vec<u32>,
    /// `rho[i - 1]` is `ρ(i)`.
    pub rho: Vec<Vertex>,
    /// Sorted in a topological order of the quiver.
    pub vertices: Vec<ZVertex>,
    pub arrows: Vec<ZArrow>,
    pub dims: BTreeMap<ZVertex, Vec<i64>>,
    /// `hammocks[k - 1]` is the knit of `h_k`.
    pub hammocks: Vec<HammockResult>,
    rep: Repetitive,
}

/// Number of indecomposables and nilpotency index of the radical.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModuleCounts {
    pub indecomposables: usize,
    pub nilpotency: u32,
}

impl ARQuiver {
    /// Knits every hammock of `q` and assembles the quiver.
    pub fn build(q: &ValuedQuiver) -> Result<ARQuiver> {
        let dynkin = dynkin::classify(&q.underlying_graph()).ok_or(Error::NotDynkin)?;
        let rep = Repetitive::new(q.opposite())?;
        let n = q.n();
        let hammocks = (1..=n)
            .map(|k| hammock::knit_in(&rep, k))
            .collect::<Result<Vec<_>>>()?;

        let mut m = vec![None; n];
        let mut rho = vec![0; n];
        for h in &hammocks {
            let (i, k) = h.rho_pair();
            if m[i - 1].replace(h.m_of()).is_some() {
                return Err(Error::CrossCheckFailed {
                    check: "pi-permutation is a bijection",
                });
            }
            rho[i - 1] = k;
        }
        let m: Vec<u32> = m
            .into_iter()
            .map(|x| x.expect("n hammocks fill n slots"))
            .collect();

        let mut vertices: Vec<ZVertex> = q
            .vertices()
            .flat_map(|i| (0..=i64::from(m[i - 1])).map(move |r| ZVertex::new(r, i)))
            .collect();
        vertices.sort_by_key(|&v| rep.knit_key(v));

        let mut arq = ARQuiver {
            q: q.clone(),
            dynkin,
            m,
            rho,
            vertices,
            arrows: Vec::new(),
            dims: BTreeMap::new(),
            hammocks,
            rep,
        };
        arq.arrows = arq
            .vertices
            .iter()
            .flat_map(|&v| arq.rep.out_arrows(v))
            .filter(|a| arq.is_vertex(a.dst))
            .collect();
        for &v in &arq.vertices {
            let dim = arq
                .hammocks
                .iter()
                .map(|h| h.composition_multiplicity(&arq.rep, v))
                .collect::<Result<Vec<_>>>()?;
            arq.dims.insert(v, dim);
        }
        Ok(arq)
    }

    pub fn n(&self) -> usize {
        self.q.n()
    }

    /// The ambient `ZQ^op`.
    pub fn repetitive(&self) -> &Repetitive {
        &self.rep
    }

    pub fn m_of(&self, i: Vertex) -> u32 {
        self.m[i - 1]
    }

    pub fn rho_of(&self, i: Vertex) -> Vertex {
        self.rho[i - 1]
    }

    pub fn is_vertex(&self, v: ZVertex) -> bool {
        (1..=self.n()).contains(&v.base) && v.level >= 0 && v.level <= i64::from(self.m_of(v.base))
    }

    pub fn projective(&self, i: Vertex) -> ZVertex {
        ZVertex::new(0, i)
    }

    /// Position of `I_i`, the end of the orbit `j` with `ρ(j) = i`.
    pub fn injective(&self, i: Vertex) -> ZVertex {
        let j = self
            .rho
            .iter()
            .position(|&x| x == i)
            .expect("rho is a permutation")
            + 1;
        ZVertex::new(i64::from(self.m_of(j)), j)
    }

    pub fn is_injective(&self, v: ZVertex) -> bool {
        self.is_vertex(v) && v.level == i64::from(self.m_of(v.base))
    }

    /// Arrows of the quiver ending at `v`.
    pub fn in_arrows(&self, v: ZVertex) -> Vec<ZArrow> {
        self.rep
            .in_arrows(v)
            .into_iter()
            .filter(|a| self.is_vertex(a.src))
            .collect()
    }

    pub fn dim_vector(&self, pos: ZVertex) -> Result<&[i64]> {
        self.dims
            .get(&pos)
            .map(Vec::as_slice)
            .ok_or(Error::PositionOutOfRange { at: pos })
    }

    /// Common length of all paths from `a` to `b`, or `None` when there is
    /// no path. Fails if two paths of different lengths are found.
    pub fn distance(&self, a: ZVertex, b: ZVertex) -> Result<Option<u32>> {
        for v in [a, b] {
            if !self.is_vertex(v) {
                return Err(Error::PositionOutOfRange { at: v });
            }
        }
        let mut best: BTreeMap<ZVertex, (u32, u32)> = BTreeMap::new();
        best.insert(a, (0, 0));
        let start = self
            .vertices
            .iter()
            .position(|&v| v == a)
            .expect("checked above");
        for &v in &self.vertices[start + 1..] {
            let mut acc: Option<(u32, u32)> = None;
            for arr in self.in_arrows(v) {
                if let Some(&(lo, hi)) = best.get(&arr.src) {
                    acc = Some(match acc {
                        None => (lo + 1, hi + 1),
                        Some((l, h)) => (l.min(lo + 1), h.max(hi + 1)),
                    });
                }
            }
            if let Some(x) = acc {
                best.insert(v, x);
            }
            if v == b {
                break;
            }
        }
        match best.get(&b) {
            None => Ok(None),
            Some(&(lo, hi)) if lo == hi => Ok(Some(lo)),
            Some(_) => Err(Error::CrossCheckFailed {
                check: "parallel paths of equal length",
            }),
        }
    }

    /// Counts vertices and finds the longest projective-to-injective
    /// distance; both are checked against the Coxeter order `order`.
    pub fn counts_and_nilpotency(&self, order: u32) -> Result<ModuleCounts> {
        let indecomposables: usize = self.m.iter().map(|&x| x as usize + 1).sum();
        if indecomposables != self.vertices.len()
            || 2 * indecomposables != self.n() * order as usize
        {
            return Err(Error::CrossCheckFailed {
                check: "number of indecomposables",
            });
        }
        let mut longest = 0;
        for i in self.q.vertices() {
            let d = self
                .distance(self.projective(i), self.injective(i))?
                .ok_or(Error::CrossCheckFailed {
                    check: "projective reaches its injective",
                })?;
            longest = longest.max(d);
        }
        if longest + 2 != order {
            return Err(Error::CrossCheckFailed {
                check: "radical nilpotency",
            });
        }
        Ok(ModuleCounts {
            indecomposables,
            nilpotency: longest + 1,
        })
    }

    /// `m(i) - m(j) = a⁺(ρ(i), ρ(j)) - a⁺(i, j)` for all `i, j`.
    pub fn pi_index_relation_check(&self) -> bool {
        let Ok(c) = self.q.arrow_count_table() else {
            return false;
        };
        self.q.vertices().all(|i| {
            self.q.vertices().all(|j| {
                let lhs = i64::from(self.m_of(i)) - i64::from(self.m_of(j));
                let (ri, rj) = (self.rho_of(i), self.rho_of(j));
                lhs == i64::from(c.plus(ri, rj)) - i64::from(c.plus(i, j))
            })
        })
    }

    pub fn rho_is_involution(&self) -> bool {
        self.q.vertices().all(|i| self.rho_of(self.rho_of(i)) == i)
    }
}

/// `(m, ρ)` from the closed formulas, indexed like [`ARQuiver::m`] and
/// [`ARQuiver::rho`].
pub fn closed_form_rho_m(q: &ValuedQuiver) -> Result<(Vec<u32>, Vec<Vertex>)> {
    let class = dynkin::classify(&q.underlying_graph()).ok_or(Error::NotDynkin)?;
    let canonical = q.relabeled(&class.relabel);
    let c = canonical.arrow_count_table()?;
    let n = q.n();
    let plus = |x, y| i64::from(c.plus(x, y));
    let minus = |x, y| i64::from(c.minus(x, y));
    let order = i64::from(class.ty.coxeter_order());
    let ni = n as i64;

    let rho_c: Vec<Vertex> = match (class.family(), n) {
        (Family::A, _) => (1..=n).map(|i| n + 1 - i).collect(),
        (Family::E, 6) => vec![6, 5, 3, 4, 2, 1],
        (Family::D, _) if n % 2 == 1 => {
            let mut r: Vec<Vertex> = (1..=n).collect();
            r.swap(0, 1);
            r
        }
        _ => (1..=n).collect(),
    };
    let m_c: Vec<i64> = (1..=n)
        .map(|i| match (class.family(), n) {
            (Family::A, _) => plus(1, i) + minus(1, n + 1 - i),
            (Family::E, 6) => 5 - plus(i, 3) + plus(rho_c[i - 1], 3),
            (Family::D, _) if n % 2 == 1 => match i {
                1 => ni - 2 - plus(1, 3) + plus(2, 3),
                2 => ni - 2 + plus(1, 3) - plus(2, 3),
                _ => ni - 2,
            },
            _ => order / 2 - 1,
        })
        .collect();

    let mut m = vec![0; n];
    let mut rho = vec![0; n];
    for x in q.vertices() {
        let cx = class.to_canonical(x);
        m[x - 1] = u32::try_from(m_c[cx - 1]).map_err(|_| Error::CrossCheckFailed {
            check: "closed-form pi-index",
        })?;
        rho[x - 1] = class.from_canonical(rho_c[cx - 1]);
    }
    Ok((m, rho))
}
