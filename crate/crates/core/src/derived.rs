//! The derived Auslander-Reiten quiver and the cluster category, in
//! stalk-complex coordinates.
//!
//! A [`DerivedVertex`] `(r, i, s)` is the stalk complex `(τ^{-r} P_i)[s]`.
//! The derived quiver is `ZQ^op` again: even shifts `2q` occupy the levels
//! `q|C| + r` over `i`, odd shifts `2q + 1` sit over `ρ(i)` starting right
//! after the injective `I_i`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::ar_quiver::ARQuiver;
use crate::coxeter::CoxeterData;
use crate::error::{Error, Result};
use crate::quiver::Vertex;
use crate::repetitive::ZVertex;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DerivedVertex {
    pub pos: ZVertex,
    pub shift: i64,
}

impl DerivedVertex {
    pub const fn new(r: i64, i: Vertex, shift: i64) -> Self {
        DerivedVertex {
            pos: ZVertex::new(r, i),
            shift,
        }
    }
}

impl fmt::Display for DerivedVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.pos, self.shift)
    }
}

/// A vertex of the fundamental domain and the power of
/// `F = τ_D^{-1} ∘ [1]` carrying it to the normalized input.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ClusterRep {
    pub rep: DerivedVertex,
    pub power: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClusterCounts {
    pub objects: usize,
    pub nilpotency: u32,
}

/// Coordinate model of the derived quiver over a built [`ARQuiver`].
#[derive(Debug, Clone, Copy)]
pub struct DerivedQuiver<'a> {
    arq: &'a ARQuiver,
    period: i64,
}

impl<'a> DerivedQuiver<'a> {
    /// Fails unless `m(i) + m(ρ(i)) + 2` is the same for every `i`.
    pub fn new(arq: &'a ARQuiver) -> Result<Self> {
        let orbit = |i: Vertex| i64::from(arq.m_of(i)) + i64::from(arq.m_of(arq.rho_of(i))) + 2;
        let period = orbit(1);
        if arq.q.vertices().any(|i| orbit(i) != period) {
            return Err(Error::CrossCheckFailed {
                check: "orbit period",
            });
        }
        Ok(DerivedQuiver { arq, period })
    }

    /// `|C|`: the number of τ_D steps from `P_i` to `P_i[2]`.
    pub fn period(&self) -> i64 {
        self.period
    }

    fn m(&self, i: Vertex) -> i64 {
        i64::from(self.arq.m_of(i))
    }

    fn rho(&self, i: Vertex) -> Vertex {
        self.arq.rho_of(i)
    }

    fn check(&self, v: DerivedVertex) -> Result<()> {
        if self.arq.is_vertex(v.pos) {
            Ok(())
        } else {
            Err(Error::PositionOutOfRange { at: v.pos })
        }
    }

    /// Position of `v` in `ZQ^op`.
    pub fn to_coord(&self, v: DerivedVertex) -> Result<ZVertex> {
        self.check(v)?;
        let (q, odd) = (v.shift.div_euclid(2), v.shift.rem_euclid(2) == 1);
        let i = v.pos.base;
        Ok(if odd {
            let j = self.rho(i);
            ZVertex::new(q * self.period + self.m(j) + 1 + v.pos.level, j)
        } else {
            ZVertex::new(q * self.period + v.pos.level, i)
        })
    }

    pub fn from_coord(&self, z: ZVertex) -> DerivedVertex {
        let q = z.level.div_euclid(self.period);
        let t = z.level.rem_euclid(self.period);
        let j = z.base;
        if t <= self.m(j) {
            DerivedVertex::new(t, j, 2 * q)
        } else {
            DerivedVertex::new(t - self.m(j) - 1, self.rho(j), 2 * q + 1)
        }
    }

    pub fn tau_inverse(&self, v: DerivedVertex) -> Result<DerivedVertex> {
        self.check(v)?;
        let (r, i) = (v.pos.level, v.pos.base);
        Ok(if r < self.m(i) {
            DerivedVertex::new(r + 1, i, v.shift)
        } else {
            DerivedVertex::new(0, self.rho(i), v.shift + 1)
        })
    }

    pub fn tau(&self, v: DerivedVertex) -> Result<DerivedVertex> {
        self.check(v)?;
        let (r, i) = (v.pos.level, v.pos.base);
        Ok(if r > 0 {
            DerivedVertex::new(r - 1, i, v.shift)
        } else {
            let j = self.rho(i);
            DerivedVertex::new(self.m(j), j, v.shift - 1)
        })
    }

    /// `τ_D^t v`; negative `t` applies the inverse.
    pub fn tau_power(&self, v: DerivedVertex, t: i64) -> Result<DerivedVertex> {
        let z = self.to_coord(v)?;
        Ok(self.from_coord(ZVertex::new(z.level - t, z.base)))
    }

    /// Signed dimension vector `(-1)^s dim M` of `M[s]`.
    pub fn signed_dim(&self, v: DerivedVertex) -> Result<Vec<i64>> {
        let dim = self.arq.dim_vector(v.pos)?;
        let sign = if v.shift.rem_euclid(2) == 0 { 1 } else { -1 };
        Ok(dim.iter().map(|x| sign * x).collect())
    }

    /// Common length of all paths from `a` to `b`.
    pub fn distance(&self, a: DerivedVertex, b: DerivedVertex) -> Result<Option<u32>> {
        let (za, zb) = (self.to_coord(a)?, self.to_coord(b)?);
        self.arq.repetitive().audited_path_length(za, zb)
    }

    /// Radical nilpotency of the derived category, with its path-length
    /// certificates checked.
    pub fn derived_nilpotency(&self, cd: &CoxeterData) -> Result<u32> {
        let order = cd.order;
        if i64::from(order) != self.period {
            return Err(Error::CrossCheckFailed {
                check: "derived period equals Coxeter order",
            });
        }
        let rep = self.arq.repetitive();
        for i in self.arq.q.vertices() {
            let p = DerivedVertex::new(0, i, 0);
            let inj = self.arq.injective(i);
            let i0 = DerivedVertex { pos: inj, shift: 0 };
            let p1 = DerivedVertex::new(0, i, 1);
            // Rank one has no arrows at all, so only the trivial path exists.
            let across = if self.arq.n() == 1 { None } else { Some(order) };
            if self.distance(p, i0)? != Some(order - 2) || self.distance(p, p1)? != across {
                return Err(Error::CrossCheckFailed {
                    check: "derived distances",
                });
            }
        }
        // Longest path from a projective P_k to a stalk with S_k as a
        // composition factor, that is, to a target of a nonzero map.
        let mut longest = 0;
        for k in self.arq.q.vertices() {
            for (&b, dim) in &self.arq.dims {
                if dim[k - 1] > 0 {
                    let d = rep.path_length(self.arq.projective(k), b)?.ok_or(
                        Error::CrossCheckFailed {
                            check: "hammock lies after its projective",
                        },
                    )?;
                    longest = longest.max(d);
                }
            }
        }
        if longest + 2 != order {
            return Err(Error::CrossCheckFailed {
                check: "longest path in one shift",
            });
        }
        Ok(order - 1)
    }

    /// `F = τ_D^{-1} ∘ [1]`.
    pub fn cluster_shift(&self, v: DerivedVertex) -> Result<DerivedVertex> {
        self.tau_inverse(DerivedVertex {
            pos: v.pos,
            shift: v.shift + 1,
        })
    }

    /// `Γ[0]` together with the shifted projectives `P_i[1]`.
    pub fn fundamental_domain(&self) -> Vec<DerivedVertex> {
        let mut out: Vec<DerivedVertex> = self
            .arq
            .vertices
            .iter()
            .map(|&pos| DerivedVertex { pos, shift: 0 })
            .collect();
        out.extend(self.arq.q.vertices().map(|i| DerivedVertex::new(0, i, 1)));
        out
    }

    pub fn cluster_normalize(&self, v: DerivedVertex) -> Result<ClusterRep> {
        let z = self.to_coord(v)?;
        let width = self.period + 2;
        let q = z.level.div_euclid(width);
        let t = z.level.rem_euclid(width);
        let j = z.base;
        let (coord, power) = if t <= self.m(j) + 1 {
            (ZVertex::new(t, j), 2 * q)
        } else {
            (ZVertex::new(t - self.m(j) - 2, self.rho(j)), 2 * q + 1)
        };
        Ok(ClusterRep {
            rep: self.from_coord(coord),
            power,
        })
    }

    /// Size of the fundamental domain, cross-checked by counting
    /// representatives over one period of `F²`.
    pub fn cluster_counts(&self, cd: &CoxeterData) -> Result<ClusterCounts> {
        let objects = self.fundamental_domain().len();
        let n = self.arq.n();
        if 2 * objects != n * (cd.order as usize + 2) {
            return Err(Error::CrossCheckFailed {
                check: "cluster object count",
            });
        }
        let mut hits: BTreeMap<DerivedVertex, usize> = BTreeMap::new();
        for t in 0..self.period + 2 {
            for j in self.arq.q.vertices() {
                let v = self.from_coord(ZVertex::new(t, j));
                *hits.entry(self.cluster_normalize(v)?.rep).or_default() += 1;
            }
        }
        if hits.len() != objects || hits.values().any(|&c| c != 2) {
            return Err(Error::CrossCheckFailed {
                check: "F-orbit representatives",
            });
        }
        Ok(ClusterCounts {
            objects,
            nilpotency: cd.order - 1,
        })
    }
}
