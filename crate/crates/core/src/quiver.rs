//! Valued quivers, valued graphs and walks.

use alloc::collections::{BTreeMap, BinaryHeap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;
use core::fmt;

use crate::error::{Error, Result};

/// 1-based vertex label.
pub type Vertex = usize;

/// A valuation pair `(a, b)` of positive integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Valuation(pub u32, pub u32);

impl Valuation {
    pub const TRIVIAL: Valuation = Valuation(1, 1);

    /// `(a, b)° = (b, a)`.
    pub fn opposite(self) -> Valuation {
        Valuation(self.1, self.0)
    }

    pub fn is_trivial(self) -> bool {
        self == Self::TRIVIAL
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrow {
    pub src: Vertex,
    pub dst: Vertex,
    pub val: Valuation,
}

/// A finite valued quiver on the vertices `1..=n`.
///
/// Construction goes through [`ValuedQuiver::new`], which rejects loops,
/// 2-cycles, multiple arrows and non-positive valuations. Arrows are kept
/// sorted by `(src, dst)`; an arrow id is its index in [`ValuedQuiver::arrows`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ValuedQuiver {
    n: usize,
    arrows: Vec<Arrow>,
    out: Vec<Vec<usize>>,
    inc: Vec<Vec<usize>>,
}

impl ValuedQuiver {
    /// Validates a raw description: `n` vertices and arrows
    /// `(src, dst, (a, b))`.
    pub fn new<I>(n: usize, arrows: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, (i64, i64))>,
    {
        let mut seen: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let mut list = Vec::new();
        for (idx, (src, dst, (a, b))) in arrows.into_iter().enumerate() {
            for v in [src, dst] {
                if v == 0 || v > n {
                    return Err(Error::DanglingVertexIndex {
                        arrow: idx,
                        vertex: v,
                    });
                }
            }
            if src == dst {
                return Err(Error::LoopArrow { arrow: idx });
            }
            if a < 1 || b < 1 || a > u32::MAX as i64 || b > u32::MAX as i64 {
                return Err(Error::BadValuation { arrow: idx });
            }
            if let Some(&other) = seen.get(&(src, dst)) {
                return Err(Error::MultipleArrow { arrow: idx, other });
            }
            if let Some(&other) = seen.get(&(dst, src)) {
                return Err(Error::TwoCycle { arrow: idx, other });
            }
            seen.insert((src, dst), idx);
            list.push(Arrow {
                src,
                dst,
                val: Valuation(a as u32, b as u32),
            });
        }
        Ok(Self::from_validated(n, list))
    }

    /// Shorthand for tests and fixtures: trivially valued arrows.
    pub fn trivially_valued(n: usize, arrows: &[(usize, usize)]) -> Result<Self> {
        Self::new(n, arrows.iter().map(|&(s, d)| (s, d, (1, 1))))
    }

    fn from_validated(n: usize, mut arrows: Vec<Arrow>) -> Self {
        arrows.sort();
        let mut out = vec![Vec::new(); n + 1];
        let mut inc = vec![Vec::new(); n + 1];
        for (id, a) in arrows.iter().enumerate() {
            out[a.src].push(id);
            inc[a.dst].push(id);
        }
        ValuedQuiver {
            n,
            arrows,
            out,
            inc,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + Clone {
        1..=self.n
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, id: usize) -> &Arrow {
        &self.arrows[id]
    }

    /// Ids of arrows starting at `v`.
    pub fn out_arrows(&self, v: Vertex) -> &[usize] {
        &self.out[v]
    }

    /// Ids of arrows ending at `v`.
    pub fn in_arrows(&self, v: Vertex) -> &[usize] {
        &self.inc[v]
    }

    pub fn arrow_between(&self, src: Vertex, dst: Vertex) -> Option<usize> {
        self.out[src]
            .iter()
            .copied()
            .find(|&id| self.arrows[id].dst == dst)
    }

    /// Arrows reversed, valuations flipped.
    pub fn opposite(&self) -> ValuedQuiver {
        let arrows = self
            .arrows
            .iter()
            .map(|a| Arrow {
                src: a.dst,
                dst: a.src,
                val: a.val.opposite(),
            })
            .collect();
        Self::from_validated(self.n, arrows)
    }

    pub fn underlying_graph(&self) -> ValuedGraph {
        ValuedGraph::from_pairs(self.n, self.arrows.iter().map(|a| (a.src, a.dst, a.val)))
    }

    /// Applies a relabeling `x ↦ perm[x - 1]`.
    pub fn relabeled(&self, perm: &[Vertex]) -> ValuedQuiver {
        debug_assert_eq!(perm.len(), self.n);
        let arrows = self
            .arrows
            .iter()
            .map(|a| Arrow {
                src: perm[a.src - 1],
                dst: perm[a.dst - 1],
                val: a.val,
            })
            .collect();
        Self::from_validated(self.n, arrows)
    }

    /// Topological order; among available vertices the smallest label goes
    /// first. Fails with `NotATree` if there is an oriented cycle.
    pub fn topological_order(&self) -> Result<Vec<Vertex>> {
        let mut indeg: Vec<usize> = (0..=self.n).map(|v| self.inc[v].len()).collect();
        let mut heap: BinaryHeap<Reverse<Vertex>> = self
            .vertices()
            .filter(|&v| indeg[v] == 0)
            .map(Reverse)
            .collect();
        let mut order = Vec::with_capacity(self.n);
        while let Some(Reverse(v)) = heap.pop() {
            order.push(v);
            for &id in &self.out[v] {
                let w = self.arrows[id].dst;
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    heap.push(Reverse(w));
                }
            }
        }
        if order.len() == self.n {
            Ok(order)
        } else {
            Err(Error::NotATree)
        }
    }

    /// Connected with `n - 1` arrows.
    pub fn is_tree(&self) -> bool {
        self.n > 0 && self.arrows.len() == self.n - 1 && self.underlying_graph().is_connected()
    }

    fn require_tree(&self) -> Result<()> {
        if self.is_tree() {
            Ok(())
        } else {
            Err(Error::NotATree)
        }
    }

    /// The unique reduced walk from `x` to `y` in a tree quiver.
    pub fn reduced_walk(&self, x: Vertex, y: Vertex) -> Result<Walk> {
        self.require_tree()?;
        Ok(self.tree_walk(x, y))
    }

    // Caller guarantees the quiver is a tree.
    fn tree_walk(&self, x: Vertex, y: Vertex) -> Walk {
        let mut prev: Vec<Option<Step>> = vec![None; self.n + 1];
        let mut visited = vec![false; self.n + 1];
        let mut queue = VecDeque::from([x]);
        visited[x] = true;
        while let Some(v) = queue.pop_front() {
            if v == y {
                break;
            }
            for &id in &self.out[v] {
                let w = self.arrows[id].dst;
                if !visited[w] {
                    visited[w] = true;
                    prev[w] = Some(Step {
                        arrow: id,
                        dir: Direction::Forward,
                    });
                    queue.push_back(w);
                }
            }
            for &id in &self.inc[v] {
                let w = self.arrows[id].src;
                if !visited[w] {
                    visited[w] = true;
                    prev[w] = Some(Step {
                        arrow: id,
                        dir: Direction::Inverse,
                    });
                    queue.push_back(w);
                }
            }
        }
        let mut steps = Vec::new();
        let mut v = y;
        while v != x {
            let step = prev[v].expect("tree is connected");
            v = step.source(self);
            steps.push(step);
        }
        steps.reverse();
        Walk { start: x, steps }
    }

    /// `(a⁺(x, y), a⁻(x, y))`: forward and inverse steps of the reduced walk.
    pub fn arrow_counts(&self, x: Vertex, y: Vertex) -> Result<(u32, u32)> {
        Ok(self.reduced_walk(x, y)?.counts())
    }

    /// All arrow counts at once, indexed `[x][y]` (1-based, row/column 0 unused).
    pub fn arrow_count_table(&self) -> Result<ArrowCounts> {
        self.require_tree()?;
        let mut table = vec![vec![(0, 0); self.n + 1]; self.n + 1];
        for x in self.vertices() {
            // BFS from x accumulating counts along the tree.
            let mut visited = vec![false; self.n + 1];
            let mut queue = VecDeque::from([x]);
            visited[x] = true;
            while let Some(v) = queue.pop_front() {
                let (p, m) = table[x][v];
                for &id in &self.out[v] {
                    let w = self.arrows[id].dst;
                    if !visited[w] {
                        visited[w] = true;
                        table[x][w] = (p + 1, m);
                        queue.push_back(w);
                    }
                }
                for &id in &self.inc[v] {
                    let w = self.arrows[id].src;
                    if !visited[w] {
                        visited[w] = true;
                        table[x][w] = (p, m + 1);
                        queue.push_back(w);
                    }
                }
            }
        }
        Ok(ArrowCounts { table })
    }
}

/// Precomputed `(a⁺, a⁻)` for every ordered pair of vertices of a tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrowCounts {
    table: Vec<Vec<(u32, u32)>>,
}

impl ArrowCounts {
    pub fn plus(&self, x: Vertex, y: Vertex) -> u32 {
        self.table[x][y].0
    }

    pub fn minus(&self, x: Vertex, y: Vertex) -> u32 {
        self.table[x][y].1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Forward,
    Inverse,
}

/// One step of a walk: an arrow, traversed forwards or as its formal inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Step {
    pub arrow: usize,
    pub dir: Direction,
}

impl Step {
    pub fn forward(arrow: usize) -> Self {
        Step {
            arrow,
            dir: Direction::Forward,
        }
    }

    pub fn inverse(arrow: usize) -> Self {
        Step {
            arrow,
            dir: Direction::Inverse,
        }
    }

    pub fn source(self, q: &ValuedQuiver) -> Vertex {
        let a = q.arrow(self.arrow);
        match self.dir {
            Direction::Forward => a.src,
            Direction::Inverse => a.dst,
        }
    }

    pub fn target(self, q: &ValuedQuiver) -> Vertex {
        let a = q.arrow(self.arrow);
        match self.dir {
            Direction::Forward => a.dst,
            Direction::Inverse => a.src,
        }
    }

    /// The formal inverse of this step.
    pub fn flipped(self) -> Step {
        let dir = match self.dir {
            Direction::Forward => Direction::Inverse,
            Direction::Inverse => Direction::Forward,
        };
        Step {
            arrow: self.arrow,
            dir,
        }
    }
}

/// A walk, listed from its start vertex outward.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Walk {
    pub start: Vertex,
    pub steps: Vec<Step>,
}

impl Walk {
    pub fn trivial(at: Vertex) -> Self {
        Walk {
            start: at,
            steps: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn end(&self, q: &ValuedQuiver) -> Vertex {
        self.steps.last().map_or(self.start, |s| s.target(q))
    }

    /// Whether consecutive steps compose.
    pub fn is_walk_in(&self, q: &ValuedQuiver) -> bool {
        let mut at = self.start;
        for s in &self.steps {
            if s.arrow >= q.arrows().len() || s.source(q) != at {
                return false;
            }
            at = s.target(q);
        }
        true
    }

    /// Index of the first step that cancels its predecessor, if any.
    pub fn first_cancellation(&self) -> Option<usize> {
        self.steps
            .windows(2)
            .position(|w| w[1] == w[0].flipped())
            .map(|i| i + 1)
    }

    pub fn is_reduced(&self) -> bool {
        self.first_cancellation().is_none()
    }

    /// `(forward steps, inverse steps)`.
    pub fn counts(&self) -> (u32, u32) {
        let fwd = self
            .steps
            .iter()
            .filter(|s| s.dir == Direction::Forward)
            .count() as u32;
        (fwd, self.steps.len() as u32 - fwd)
    }

    pub fn inverse(&self, q: &ValuedQuiver) -> Walk {
        Walk {
            start: self.end(q),
            steps: self.steps.iter().rev().map(|s| s.flipped()).collect(),
        }
    }
}

/// An undirected edge stored with `x < y`; `val = (v_xy, v_yx)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub x: Vertex,
    pub y: Vertex,
    pub val: Valuation,
}

/// A finite valued graph on `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ValuedGraph {
    n: usize,
    edges: Vec<Edge>,
}

impl ValuedGraph {
    /// Builds a graph from `(x, y, (v_xy, v_yx))` triples. Each edge is
    /// normalized to smaller endpoint first. Later duplicates of an edge
    /// are ignored.
    pub fn from_pairs<I>(n: usize, pairs: I) -> Self
    where
        I: IntoIterator<Item = (Vertex, Vertex, Valuation)>,
    {
        let mut map: BTreeMap<(Vertex, Vertex), Valuation> = BTreeMap::new();
        for (x, y, val) in pairs {
            let (key, val) = if x < y {
                ((x, y), val)
            } else {
                ((y, x), val.opposite())
            };
            map.entry(key).or_insert(val);
        }
        let edges = map
            .into_iter()
            .map(|((x, y), val)| Edge { x, y, val })
            .collect();
        ValuedGraph { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// `v_xy`, zero when there is no edge.
    pub fn v(&self, x: Vertex, y: Vertex) -> u32 {
        let (a, b, flip) = if x < y { (x, y, false) } else { (y, x, true) };
        match self.edges.binary_search_by(|e| (e.x, e.y).cmp(&(a, b))) {
            Ok(i) => {
                let val = self.edges[i].val;
                if flip {
                    val.1
                } else {
                    val.0
                }
            }
            Err(_) => 0,
        }
    }

    pub fn neighbors(&self, x: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.edges.iter().filter_map(move |e| {
            if e.x == x {
                Some(e.y)
            } else if e.y == x {
                Some(e.x)
            } else {
                None
            }
        })
    }

    pub fn degree(&self, x: Vertex) -> usize {
        self.neighbors(x).count()
    }

    /// `w(x) = Σ_y v_xy`.
    pub fn weight(&self, x: Vertex) -> u32 {
        self.neighbors(x).map(|y| self.v(x, y)).sum()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut seen = vec![false; self.n + 1];
        let mut stack = vec![1];
        seen[1] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.n > 0 && self.edges.len() == self.n - 1 && self.is_connected()
    }

    /// Applies `x ↦ perm[x - 1]`.
    pub fn relabeled(&self, perm: &[Vertex]) -> ValuedGraph {
        ValuedGraph::from_pairs(
            self.n,
            self.edges
                .iter()
                .map(|e| (perm[e.x - 1], perm[e.y - 1], e.val)),
        )
    }

    /// Whether `x ↦ perm[x - 1]` is a valued graph isomorphism onto `other`.
    pub fn is_isomorphism(&self, perm: &[Vertex], other: &ValuedGraph) -> bool {
        self.n == other.n && perm.len() == self.n && self.relabeled(perm) == *other
    }

    /// Orients every edge. Edge `e` (in [`ValuedGraph::edges`] order) becomes
    /// `x → y` unless `flip(e)` holds, in which case it becomes `y → x`. The
    /// arrow valuation is read from the graph at the arrow's source.
    pub fn orient(&self, mut flip: impl FnMut(usize) -> bool) -> ValuedQuiver {
        let arrows = self
            .edges
            .iter()
            .enumerate()
            .map(|(i, e)| {
                if flip(i) {
                    Arrow {
                        src: e.y,
                        dst: e.x,
                        val: e.val.opposite(),
                    }
                } else {
                    Arrow {
                        src: e.x,
                        dst: e.y,
                        val: e.val,
                    }
                }
            })
            .collect();
        ValuedQuiver::from_validated(self.n, arrows)
    }

    /// Every orientation, in the order of the flip bitmask `0..2^edges`.
    pub fn orientations(&self) -> impl Iterator<Item = ValuedQuiver> + '_ {
        let e = self.edges.len();
        assert!(e < 32, "too many edges to enumerate orientations");
        (0u32..(1u32 << e)).map(move |mask| self.orient(|i| mask >> i & 1 == 1))
    }
}
