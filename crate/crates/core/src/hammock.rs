//! Extended hammock functions.
//!
//! For a vertex `k` of the ext-quiver `Q`, `h_k` lives on the successors of
//! `(0,k)` in `ZQ^op`. It is 1 at `(0,k)`, multiplies second valuation
//! components along the sectional paths leaving `(0,k)`, and is additive
//! elsewhere. Its first negative value is `-1`, reached one step past the
//! injective `I_k`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::quiver::{ValuedQuiver, Vertex};
use crate::repetitive::{Repetitive, ZArrow, ZVertex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HammockResult {
    pub k: Vertex,
    /// Values of `h_k` on the explored part of the successors of `(0,k)`.
    pub table: BTreeMap<ZVertex, i64>,
    /// First vertex with a negative value; the value is `-1`.
    pub terminator: ZVertex,
    hammock: Vec<ZVertex>,
}

impl HammockResult {
    /// `m(i_k) = s_k - 1` for the terminator `(s_k, i_k)`.
    pub fn m_of(&self) -> u32 {
        (self.terminator.level - 1) as u32
    }

    /// `(i_k, k)`: the vertex whose orbit ends in `I_k`, and `k`.
    pub fn rho_pair(&self) -> (Vertex, Vertex) {
        (self.terminator.base, self.k)
    }

    /// Position of the injective `I_k`.
    pub fn injective(&self) -> ZVertex {
        ZVertex::new(self.terminator.level - 1, self.terminator.base)
    }

    /// Positions with `h_k > 0` between `(0,k)` and the injective `I_k`.
    pub fn hammock_vertices(&self) -> &[ZVertex] {
        &self.hammock
    }

    /// Arrows of `ZQ^op` between hammock vertices (the induced subquiver).
    pub fn induced_arrows(&self, rep: &Repetitive) -> Vec<ZArrow> {
        self.hammock
            .iter()
            .flat_map(|&v| rep.out_arrows(v))
            .filter(|a| self.hammock.binary_search(&a.dst).is_ok())
            .collect()
    }

    /// Multiplicity of the simple `S_k` in the module at `pos`.
    pub fn composition_multiplicity(&self, rep: &Repetitive, pos: ZVertex) -> Result<i64> {
        if pos.level < 0 || pos.base == 0 || pos.base > rep.rank() {
            return Err(Error::PositionOutOfRange { at: pos });
        }
        match self.table.get(&pos) {
            Some(&h) if rep.reaches(pos, self.injective())? => Ok(h),
            _ => Ok(0),
        }
    }
}

/// Values of `h_k` on the source section of `(0,k)` in `ZQ^op`.
pub fn seed_section(rep: &Repetitive, k: Vertex) -> Result<BTreeMap<ZVertex, i64>> {
    let q = rep.base();
    let mut out = BTreeMap::new();
    for j in q.vertices() {
        let walk = q.reduced_walk(k, j)?;
        let path = rep.sectional_path_from_walk(&walk, 0)?;
        let mut value = 1i64;
        for a in &path.arrows {
            value = value
                .checked_mul(i64::from(a.val.1))
                .ok_or(Error::Overflow)?;
        }
        out.insert(path.end(), value);
    }
    Ok(out)
}

/// Knits `h_k` for the ext-quiver `q` level by level until the first
/// negative value, then one more level.
pub fn knit_hammock(q: &ValuedQuiver, k: Vertex) -> Result<HammockResult> {
    let rep = Repetitive::new(q.opposite())?;
    knit_in(&rep, k)
}

/// As [`knit_hammock`], reusing an existing `ZQ^op`.
pub fn knit_in(rep: &Repetitive, k: Vertex) -> Result<HammockResult> {
    let seed = seed_section(rep, k)?;
    let section = rep.source_section(ZVertex::new(0, k))?;
    let bound = rep.window_bound();
    let mut table = seed;
    let mut terminator: Option<ZVertex> = None;
    let mut level = 0;
    loop {
        if level > bound {
            return Err(Error::BoundExceeded { k, bound });
        }
        for &i in rep.topological_order() {
            let v = ZVertex::new(level, i);
            if level <= section.level(i) {
                continue;
            }
            let h = rep.mesh_value(v, |y| table.get(&y).copied().unwrap_or(0))?;
            table.insert(v, h);
            if h < 0 && terminator.is_none() {
                if h != -1 {
                    return Err(Error::KnitInconsistent { k, at: v, value: h });
                }
                terminator = Some(v);
            }
        }
        if let Some(t) = terminator {
            if level > t.level {
                break;
            }
        }
        level += 1;
    }
    let terminator = terminator.expect("loop exits after a terminator");
    let injective = ZVertex::new(terminator.level - 1, terminator.base);
    let mut hammock = Vec::new();
    for (&v, &h) in &table {
        if rep.reaches(v, injective)? {
            if h < 0 {
                return Err(Error::KnitInconsistent { k, at: v, value: h });
            }
            if h > 0 {
                hammock.push(v);
            }
        }
    }
    Ok(HammockResult {
        k,
        table,
        terminator,
        hammock,
    })
}
