//! The repetitive quiver `ZΔ` of a valued quiver `Δ` without oriented cycles.
//!
//! Every arrow `α: x → y` of `Δ` lifts to a plain arrow `(s,x) → (s,y)`
//! with valuation `v(α)` and a star arrow `(s,y) → (s+1,x)` with valuation
//! `v(α)°`. The translation is `τ(s,x) = (s-1,x)`. Nothing is materialized:
//! neighbours are generated on demand.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::RangeInclusive;

use crate::error::{Error, Result};
use crate::quiver::{ArrowCounts, Direction, Step, Valuation, ValuedQuiver, Vertex, Walk};

/// The vertex `(level, base)` of `ZΔ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZVertex {
    pub level: i64,
    pub base: Vertex,
}

impl ZVertex {
    pub const fn new(level: i64, base: Vertex) -> Self {
        ZVertex { level, base }
    }
}

impl fmt::Display for ZVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.level, self.base)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ArrowKind {
    Plain,
    Star,
}

/// An arrow of `ZΔ`. `arrow` is the id of the arrow of `Δ` it lifts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZArrow {
    pub src: ZVertex,
    pub dst: ZVertex,
    pub val: Valuation,
    pub kind: ArrowKind,
    pub arrow: usize,
}

impl ZArrow {
    /// Image under the covering map.
    pub fn step(&self) -> Step {
        match self.kind {
            ArrowKind::Plain => Step::forward(self.arrow),
            ArrowKind::Star => Step::inverse(self.arrow),
        }
    }
}

/// A path in `ZΔ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ZPath {
    pub start: ZVertex,
    pub arrows: Vec<ZArrow>,
}

impl ZPath {
    pub fn trivial(at: ZVertex) -> Self {
        ZPath {
            start: at,
            arrows: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn end(&self) -> ZVertex {
        self.arrows.last().map_or(self.start, |a| a.dst)
    }

    pub fn vertices(&self) -> Vec<ZVertex> {
        let mut v = vec![self.start];
        v.extend(self.arrows.iter().map(|a| a.dst));
        v
    }

    /// Whether consecutive arrows compose.
    pub fn is_composable(&self) -> bool {
        let mut at = self.start;
        for a in &self.arrows {
            if a.src != at {
                return false;
            }
            at = a.dst;
        }
        true
    }
}

/// A section given by one level per base vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Section {
    levels: Vec<i64>,
}

impl Section {
    /// Level of the section vertex over `base`.
    pub fn level(&self, base: Vertex) -> i64 {
        self.levels[base - 1]
    }

    pub fn vertices(&self) -> impl Iterator<Item = ZVertex> + '_ {
        self.levels
            .iter()
            .enumerate()
            .map(|(i, &l)| ZVertex::new(l, i + 1))
    }

    pub fn contains(&self, v: ZVertex) -> bool {
        (1..=self.levels.len()).contains(&v.base) && self.level(v.base) == v.level
    }

    pub fn min_level(&self) -> i64 {
        self.levels.iter().copied().min().unwrap_or(0)
    }

    pub fn max_level(&self) -> i64 {
        self.levels.iter().copied().max().unwrap_or(0)
    }

    /// Arrows of `ZΔ` with both ends on the section.
    pub fn arrows(&self, rep: &Repetitive) -> Vec<ZArrow> {
        self.vertices()
            .flat_map(|v| rep.out_arrows(v))
            .filter(|a| self.contains(a.dst))
            .collect()
    }
}

/// `ZΔ` for a fixed base quiver `Δ`.
#[derive(Debug, Clone)]
pub struct Repetitive {
    base: ValuedQuiver,
    topo_rank: Vec<usize>,
    topo: Vec<Vertex>,
    counts: Option<ArrowCounts>,
    potential: Vec<i64>,
}

impl Repetitive {
    /// Fails with `NotATree` when `base` has an oriented cycle.
    pub fn new(base: ValuedQuiver) -> Result<Self> {
        let topo = base.topological_order()?;
        let mut topo_rank = vec![0; base.n() + 1];
        for (pos, &v) in topo.iter().enumerate() {
            topo_rank[v] = pos;
        }
        let counts = base.arrow_count_table().ok();
        // Any function increasing by one along arrows; exists on forests.
        let mut potential = vec![0i64; base.n() + 1];
        let mut fixed = vec![false; base.n() + 1];
        for root in base.vertices() {
            if fixed[root] {
                continue;
            }
            fixed[root] = true;
            let mut stack = vec![root];
            while let Some(v) = stack.pop() {
                for &id in base.out_arrows(v) {
                    let w = base.arrow(id).dst;
                    if !fixed[w] {
                        fixed[w] = true;
                        potential[w] = potential[v] + 1;
                        stack.push(w);
                    }
                }
                for &id in base.in_arrows(v) {
                    let w = base.arrow(id).src;
                    if !fixed[w] {
                        fixed[w] = true;
                        potential[w] = potential[v] - 1;
                        stack.push(w);
                    }
                }
            }
        }
        Ok(Repetitive {
            base,
            topo_rank,
            topo,
            counts,
            potential,
        })
    }

    pub fn base(&self) -> &ValuedQuiver {
        &self.base
    }

    pub fn rank(&self) -> usize {
        self.base.n()
    }

    /// Base vertices in the fixed topological order of `Δ`.
    pub fn topological_order(&self) -> &[Vertex] {
        &self.topo
    }

    pub fn topo_rank(&self, base: Vertex) -> usize {
        self.topo_rank[base]
    }

    /// Sort key realizing a topological order of `ZΔ`.
    pub fn knit_key(&self, v: ZVertex) -> (i64, usize) {
        (v.level, self.topo_rank[v.base])
    }

    pub fn tau(&self, v: ZVertex) -> ZVertex {
        ZVertex::new(v.level - 1, v.base)
    }

    pub fn tau_inverse(&self, v: ZVertex) -> ZVertex {
        ZVertex::new(v.level + 1, v.base)
    }

    /// All arrows ending at `v`.
    pub fn in_arrows(&self, v: ZVertex) -> Vec<ZArrow> {
        let mut out = Vec::new();
        for &id in self.base.in_arrows(v.base) {
            let a = self.base.arrow(id);
            out.push(ZArrow {
                src: ZVertex::new(v.level, a.src),
                dst: v,
                val: a.val,
                kind: ArrowKind::Plain,
                arrow: id,
            });
        }
        for &id in self.base.out_arrows(v.base) {
            let a = self.base.arrow(id);
            out.push(ZArrow {
                src: ZVertex::new(v.level - 1, a.dst),
                dst: v,
                val: a.val.opposite(),
                kind: ArrowKind::Star,
                arrow: id,
            });
        }
        out
    }

    /// All arrows starting at `v`.
    pub fn out_arrows(&self, v: ZVertex) -> Vec<ZArrow> {
        let mut out = Vec::new();
        for &id in self.base.out_arrows(v.base) {
            let a = self.base.arrow(id);
            out.push(ZArrow {
                src: v,
                dst: ZVertex::new(v.level, a.dst),
                val: a.val,
                kind: ArrowKind::Plain,
                arrow: id,
            });
        }
        for &id in self.base.in_arrows(v.base) {
            let a = self.base.arrow(id);
            out.push(ZArrow {
                src: v,
                dst: ZVertex::new(v.level + 1, a.src),
                val: a.val.opposite(),
                kind: ArrowKind::Star,
                arrow: id,
            });
        }
        out
    }

    /// In-neighbours of `v` with the valuation of the connecting arrow.
    pub fn neighbors_in(&self, v: ZVertex) -> Vec<(ZVertex, Valuation)> {
        self.in_arrows(v)
            .into_iter()
            .map(|a| (a.src, a.val))
            .collect()
    }

    pub fn covering_map(&self, p: &ZPath) -> Walk {
        Walk {
            start: p.start.base,
            steps: p.arrows.iter().map(ZArrow::step).collect(),
        }
    }

    pub fn is_sectional(&self, p: &ZPath) -> bool {
        self.covering_map(p).is_reduced()
    }

    /// Lifts a reduced walk of `Δ` to the sectional path starting at
    /// `(start_level, w.start)`.
    pub fn sectional_path_from_walk(&self, w: &Walk, start_level: i64) -> Result<ZPath> {
        if let Some(step) = w.first_cancellation() {
            return Err(Error::WalkNotReduced { step });
        }
        let mut at = ZVertex::new(start_level, w.start);
        let mut arrows = Vec::with_capacity(w.len());
        for s in &w.steps {
            let a = self.base.arrow(s.arrow);
            let za = match s.dir {
                Direction::Forward => ZArrow {
                    src: at,
                    dst: ZVertex::new(at.level, a.dst),
                    val: a.val,
                    kind: ArrowKind::Plain,
                    arrow: s.arrow,
                },
                Direction::Inverse => ZArrow {
                    src: at,
                    dst: ZVertex::new(at.level + 1, a.src),
                    val: a.val.opposite(),
                    kind: ArrowKind::Star,
                    arrow: s.arrow,
                },
            };
            debug_assert_eq!(s.source(&self.base), at.base);
            at = za.dst;
            arrows.push(za);
        }
        Ok(ZPath {
            start: ZVertex::new(start_level, w.start),
            arrows,
        })
    }

    fn counts(&self) -> Result<&ArrowCounts> {
        self.counts.as_ref().ok_or(Error::NotATree)
    }

    /// The section of endpoints of sectional paths starting at `v`.
    pub fn source_section(&self, v: ZVertex) -> Result<Section> {
        let c = self.counts()?;
        let levels = self
            .base
            .vertices()
            .map(|j| v.level + i64::from(c.minus(v.base, j)))
            .collect();
        Ok(Section { levels })
    }

    /// The section of starting points of sectional paths ending at `v`.
    pub fn sink_section(&self, v: ZVertex) -> Result<Section> {
        let c = self.counts()?;
        let levels = self
            .base
            .vertices()
            .map(|j| v.level - i64::from(c.minus(j, v.base)))
            .collect();
        Ok(Section { levels })
    }

    /// Whether there is a path from `a` to `b`. Requires a tree base.
    pub fn reaches(&self, a: ZVertex, b: ZVertex) -> Result<bool> {
        let c = self.counts()?;
        if self.rank() == 1 {
            return Ok(a.level == b.level);
        }
        Ok(b.level >= a.level + i64::from(c.minus(a.base, b.base)))
    }

    /// Length of every path from `a` to `b`, if one exists.
    pub fn path_length(&self, a: ZVertex, b: ZVertex) -> Result<Option<u32>> {
        if !self.reaches(a, b)? {
            return Ok(None);
        }
        let d = self.height(b) - self.height(a);
        Ok(Some(u32::try_from(d).map_err(|_| {
            Error::CrossCheckFailed {
                check: "path length",
            }
        })?))
    }

    // Increases by exactly one along every arrow of ZΔ.
    fn height(&self, v: ZVertex) -> i64 {
        2 * v.level + self.potential[v.base]
    }

    /// Shortest and longest path lengths from `a` to `b` by dynamic
    /// programming over the vertices between them. Fails when the two
    /// disagree.
    pub fn audited_path_length(&self, a: ZVertex, b: ZVertex) -> Result<Option<u32>> {
        if b.level < a.level || b.level - a.level > self.window_bound() {
            if b.level < a.level {
                return Ok(None);
            }
            return Err(Error::WindowTooLarge {
                levels: b.level - a.level,
                bound: self.window_bound(),
            });
        }
        let mut best: BTreeMap<ZVertex, (u32, u32)> = BTreeMap::new();
        best.insert(a, (0, 0));
        for level in a.level..=b.level {
            for &i in &self.topo {
                let v = ZVertex::new(level, i);
                if v == a {
                    continue;
                }
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

    /// Largest number of levels a window may span.
    pub fn window_bound(&self) -> i64 {
        4 * self.rank().max(1) as i64 * 30
    }

    /// `Σ v'·f(y)` over arrows `y → v` minus `f(τv)`.
    pub fn mesh_value(&self, v: ZVertex, mut f: impl FnMut(ZVertex) -> i64) -> Result<i64> {
        let sum = self.weighted_in_sum(v, &mut f)?;
        sum.checked_sub(f(self.tau(v))).ok_or(Error::Overflow)
    }

    /// `Σ v'·f(y)` over arrows `y → v`.
    pub fn weighted_in_sum(&self, v: ZVertex, mut f: impl FnMut(ZVertex) -> i64) -> Result<i64> {
        let mut acc = 0i64;
        for a in self.in_arrows(v) {
            acc = i64::from(a.val.1)
                .checked_mul(f(a.src))
                .and_then(|x| acc.checked_add(x))
                .ok_or(Error::Overflow)?;
        }
        Ok(acc)
    }

    /// Extends values given on a full section to the unique additive
    /// function on the window of levels `window`, which is widened to
    /// contain the section when needed.
    pub fn knit_additive(
        &self,
        section_values: &BTreeMap<ZVertex, i64>,
        window: RangeInclusive<i64>,
    ) -> Result<BTreeMap<ZVertex, i64>> {
        let n = self.rank();
        let mut levels = vec![None; n + 1];
        for &v in section_values.keys() {
            if v.base == 0 || v.base > n || levels[v.base].replace(v.level).is_some() {
                return Err(Error::CrossCheckFailed {
                    check: "section meets each orbit once",
                });
            }
        }
        let levels: Vec<i64> = levels[1..]
            .iter()
            .map(|l| {
                l.ok_or(Error::CrossCheckFailed {
                    check: "section meets each orbit once",
                })
            })
            .collect::<Result<_>>()?;
        let section = Section { levels };
        for a in self.base.arrows() {
            let (x, y) = (section.level(a.src), section.level(a.dst));
            if !(x == y || x == y + 1) {
                return Err(Error::CrossCheckFailed {
                    check: "section is connected",
                });
            }
        }
        let lo = (*window.start()).min(section.min_level());
        let hi = (*window.end()).max(section.max_level());
        if hi - lo > self.window_bound() {
            return Err(Error::WindowTooLarge {
                levels: hi - lo,
                bound: self.window_bound(),
            });
        }

        let mut f: BTreeMap<ZVertex, i64> = section_values.clone();
        let get = |f: &BTreeMap<ZVertex, i64>, v: ZVertex| {
            *f.get(&v).expect("knitting order visits predecessors first")
        };
        for level in lo..=hi {
            for &i in &self.topo {
                let v = ZVertex::new(level, i);
                if level > section.level(i) {
                    let x = self.mesh_value(v, |y| get(&f, y))?;
                    f.insert(v, x);
                }
            }
        }
        for level in (lo..=hi).rev() {
            for &i in self.topo.iter().rev() {
                let v = ZVertex::new(level, i);
                if level < section.level(i) {
                    let up = self.tau_inverse(v);
                    let sum = self.weighted_in_sum(up, |y| get(&f, y))?;
                    let x = sum.checked_sub(get(&f, up)).ok_or(Error::Overflow)?;
                    f.insert(v, x);
                }
            }
        }
        f.retain(|v, _| window.contains(&v.level));
        Ok(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a3_op() -> Repetitive {
        let q = ValuedQuiver::trivially_valued(3, &[(1, 2), (2, 3)]).unwrap();
        Repetitive::new(q.opposite()).unwrap()
    }

    fn g2_op() -> Repetitive {
        Repetitive::new(ValuedQuiver::new(2, [(1, 2, (1, 3))]).unwrap().opposite()).unwrap()
    }

    fn z(level: i64, base: Vertex) -> ZVertex {
        ZVertex::new(level, base)
    }

    #[test]
    fn in_neighbours() {
        assert_eq!(
            g2_op().neighbors_in(z(1, 2)),
            vec![(z(0, 1), Valuation(1, 3))]
        );
        assert_eq!(g2_op().in_arrows(z(1, 2))[0].kind, ArrowKind::Star);
        assert_eq!(
            a3_op().neighbors_in(z(1, 1)),
            vec![(z(1, 2), Valuation(1, 1))]
        );
        let single = Repetitive::new(ValuedQuiver::new(1, []).unwrap()).unwrap();
        assert!(single.neighbors_in(z(4, 1)).is_empty());
    }

    #[test]
    fn in_and_out_arrows_agree() {
        let rep = g2_op();
        for l in -1..2 {
            for i in 1..=2 {
                for a in rep.out_arrows(z(l, i)) {
                    assert!(rep.in_arrows(a.dst).contains(&a));
                }
            }
        }
    }

    #[test]
    fn covering_and_sectional() {
        let rep = a3_op();
        let w = rep.base().reduced_walk(1, 3).unwrap();
        assert_eq!(w.counts(), (0, 2));
        let p = rep.sectional_path_from_walk(&w, 0).unwrap();
        assert_eq!(p.vertices(), vec![z(0, 1), z(1, 2), z(2, 3)]);
        assert!(p.is_composable());
        assert!(rep.is_sectional(&p));
        assert_eq!(rep.covering_map(&p), w);

        let trivial = rep.sectional_path_from_walk(&Walk::trivial(2), 5).unwrap();
        assert_eq!(trivial, ZPath::trivial(z(5, 2)));
        assert!(rep.is_sectional(&trivial));
        assert!(rep.covering_map(&trivial).is_empty());

        // (0,1) -> (1,2) -> (1,1) goes back along the same base arrow.
        let up = rep.out_arrows(z(0, 1))[0];
        let back = rep
            .out_arrows(z(1, 2))
            .into_iter()
            .find(|a| a.dst == z(1, 1))
            .unwrap();
        let p = ZPath {
            start: z(0, 1),
            arrows: vec![up, back],
        };
        assert!(p.is_composable());
        assert!(!rep.is_sectional(&p));
    }

    #[test]
    fn g2_sectional_valuation() {
        let rep = g2_op();
        let w = rep.base().reduced_walk(1, 2).unwrap();
        let p = rep.sectional_path_from_walk(&w, 0).unwrap();
        assert_eq!(p.arrows.len(), 1);
        assert_eq!(p.arrows[0].dst, z(1, 2));
        assert_eq!(p.arrows[0].val, Valuation(1, 3));
        assert_eq!(rep.covering_map(&p).steps, vec![Step::inverse(0)]);
    }

    #[test]
    fn rejects_unreduced_walk() {
        let rep = a3_op();
        let w = Walk {
            start: 2,
            steps: vec![Step::inverse(1), Step::forward(1)],
        };
        assert!(w.is_walk_in(rep.base()));
        assert_eq!(
            rep.sectional_path_from_walk(&w, 0),
            Err(Error::WalkNotReduced { step: 1 })
        );
    }

    #[test]
    fn sections() {
        let rep = a3_op();
        let s = rep.source_section(z(0, 1)).unwrap();
        assert_eq!(
            s.vertices().collect::<Vec<_>>(),
            vec![z(0, 1), z(1, 2), z(2, 3)]
        );
        assert_eq!(s.arrows(&rep).len(), 2);
        let t = rep.sink_section(z(2, 3)).unwrap();
        assert_eq!(t, s);
        let single = Repetitive::new(ValuedQuiver::new(1, []).unwrap()).unwrap();
        assert_eq!(
            single.source_section(z(0, 1)).unwrap().vertices().count(),
            1
        );
    }

    #[test]
    fn knit_a3() {
        let rep = a3_op();
        let seed = [(z(0, 1), 1), (z(1, 2), 1), (z(2, 3), 1)]
            .into_iter()
            .collect();
        let f = rep.knit_additive(&seed, 0..=3).unwrap();
        assert_eq!(f[&z(1, 1)], 0);
        assert_eq!(f[&z(2, 2)], 0);
        assert_eq!(f[&z(3, 3)], -1);
        let zero = seed.keys().map(|&v| (v, 0)).collect();
        assert!(rep
            .knit_additive(&zero, -3..=5)
            .unwrap()
            .values()
            .all(|&x| x == 0));
    }

    #[test]
    fn knit_g2() {
        let rep = g2_op();
        let seed = [(z(0, 1), 1), (z(1, 2), 3)].into_iter().collect();
        let f = rep.knit_additive(&seed, 0..=3).unwrap();
        assert_eq!(f[&z(1, 1)], 2);
        assert_eq!(f[&z(2, 2)], 3);
        assert_eq!(f[&z(2, 1)], 1);
        assert_eq!(f[&z(3, 2)], 0);
        assert_eq!(f[&z(3, 1)], -1);
    }

    #[test]
    fn knit_window_is_bounded() {
        let rep = a3_op();
        let seed = [(z(0, 1), 1), (z(1, 2), 1), (z(2, 3), 1)]
            .into_iter()
            .collect();
        assert!(matches!(
            rep.knit_additive(&seed, 0..=10_000),
            Err(Error::WindowTooLarge { .. })
        ));
    }

    #[test]
    fn path_lengths() {
        let rep = a3_op();
        assert_eq!(rep.path_length(z(0, 2), z(1, 2)).unwrap(), Some(2));
        assert_eq!(rep.audited_path_length(z(0, 2), z(1, 2)).unwrap(), Some(2));
        assert_eq!(rep.path_length(z(1, 2), z(0, 2)).unwrap(), None);
        assert_eq!(rep.audited_path_length(z(0, 3), z(0, 1)).unwrap(), Some(2));
        assert_eq!(rep.audited_path_length(z(0, 1), z(0, 3)).unwrap(), None);
        assert_eq!(rep.path_length(z(0, 1), z(0, 3)).unwrap(), None);
        assert_eq!(rep.path_length(z(0, 1), z(2, 3)).unwrap(), Some(2));
    }
}
