//! Recognition of the canonical Dynkin diagrams.
//!
//! Canonical labels:
//!
//! ```text
//! A_n  1 - 2 - ... - n
//! B_n  1 -(1,2)- 2 - 3 - ... - n        n >= 2
//! C_n  1 -(2,1)- 2 - 3 - ... - n        n >= 3
//! D_n  1 - 3 - 4 - ... - n,  2 - 3      n >= 4
//! E_n  1 - 2 - 3 - 5 - ... - n,  3 - 4  n = 6, 7, 8
//! F_4  1 - 2 -(1,2)- 3 - 4
//! G_2  1 -(1,3)- 2
//! ```
//!
//! An edge `x -(a,b)- y` has `v_xy = a` and `v_yx = b`; unlabeled edges are
//! `(1,1)`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::quiver::{Valuation, ValuedGraph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.letter() == c.to_ascii_uppercase())
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A family together with a rank that occurs in the canonical list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DynkinType {
    family: Family,
    rank: usize,
}

impl DynkinType {
    pub fn new(family: Family, rank: usize) -> Option<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 3,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        ok.then_some(DynkinType { family, rank })
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// Every type of rank at most `max_rank`, ordered by family then rank.
    pub fn up_to_rank(max_rank: usize) -> impl Iterator<Item = DynkinType> {
        Family::ALL
            .into_iter()
            .flat_map(move |f| (1..=max_rank).filter_map(move |n| DynkinType::new(f, n)))
    }

    /// Order of the Coxeter transformation; independent of orientation.
    pub fn coxeter_order(self) -> u32 {
        let n = self.rank as u32;
        match (self.family, n) {
            (Family::A, _) => n + 1,
            (Family::B | Family::C, _) => 2 * n,
            (Family::D, _) => 2 * (n - 1),
            (Family::E, 6) => 12,
            (Family::E, 7) => 18,
            (Family::E, _) => 30,
            (Family::F, _) => 12,
            (Family::G, _) => 6,
        }
    }

    /// Number of positive roots of the corresponding root system.
    pub fn positive_roots(self) -> usize {
        let n = self.rank;
        match (self.family, n) {
            (Family::A, _) => n * (n + 1) / 2,
            (Family::B | Family::C, _) => n * n,
            (Family::D, _) => n * (n - 1),
            (Family::E, 6) => 36,
            (Family::E, 7) => 63,
            (Family::E, _) => 120,
            (Family::F, _) => 24,
            (Family::G, _) => 6,
        }
    }

    pub fn canonical_graph(self) -> ValuedGraph {
        let n = self.rank;
        let t = Valuation::TRIVIAL;
        let mut edges: Vec<(Vertex, Vertex, Valuation)> = Vec::new();
        match self.family {
            Family::A => edges.extend((1..n).map(|i| (i, i + 1, t))),
            Family::B | Family::C => {
                let v = if self.family == Family::B {
                    Valuation(1, 2)
                } else {
                    Valuation(2, 1)
                };
                edges.push((1, 2, v));
                edges.extend((2..n).map(|i| (i, i + 1, t)));
            }
            Family::D => {
                edges.push((1, 3, t));
                edges.push((2, 3, t));
                edges.extend((3..n).map(|i| (i, i + 1, t)));
            }
            Family::E => {
                edges.extend([(1, 2, t), (2, 3, t), (3, 4, t), (3, 5, t)]);
                edges.extend((5..n).map(|i| (i, i + 1, t)));
            }
            Family::F => edges.extend([(1, 2, t), (2, 3, Valuation(1, 2)), (3, 4, t)]),
            Family::G => edges.push((1, 2, Valuation(1, 3))),
        }
        ValuedGraph::from_pairs(n, edges)
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// A recognized type and an isomorphism onto its canonical diagram:
/// input vertex `x` corresponds to canonical vertex `relabel[x - 1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DynkinClass {
    pub ty: DynkinType,
    pub relabel: Vec<Vertex>,
}

impl DynkinClass {
    pub fn family(&self) -> Family {
        self.ty.family()
    }

    pub fn rank(&self) -> usize {
        self.ty.rank()
    }

    /// Canonical label of input vertex `x`.
    pub fn to_canonical(&self, x: Vertex) -> Vertex {
        self.relabel[x - 1]
    }

    /// Input vertex carrying canonical label `c`.
    pub fn from_canonical(&self, c: Vertex) -> Vertex {
        self.relabel
            .iter()
            .position(|&y| y == c)
            .expect("relabel is a bijection")
            + 1
    }
}

/// Matches `g` against the canonical list. When several isomorphisms exist,
/// ties are broken towards smaller input labels, so a canonical diagram is
/// recognized with the identity relabeling.
pub fn classify(g: &ValuedGraph) -> Option<DynkinClass> {
    let n = g.n();
    if !g.is_tree() {
        return None;
    }
    if n == 1 {
        return Some(DynkinClass {
            ty: DynkinType::new(Family::A, 1)?,
            relabel: vec![1],
        });
    }
    let special: Vec<_> = g
        .edges()
        .iter()
        .filter(|e| !e.val.is_trivial())
        .copied()
        .collect();
    for e in &special {
        let (a, b) = (e.val.0.min(e.val.1), e.val.0.max(e.val.1));
        if a != 1 || !(b == 2 || b == 3) {
            return None;
        }
    }
    if special.len() > 1 {
        return None;
    }
    let degrees: Vec<usize> = (0..=n)
        .map(|x| if x == 0 { 0 } else { g.degree(x) })
        .collect();
    if degrees.iter().any(|&d| d > 3) {
        return None;
    }
    let branches: Vec<Vertex> = (1..=n).filter(|&x| degrees[x] == 3).collect();

    let mut relabel = vec![0; n];
    let ty = match (branches.as_slice(), special.first()) {
        ([], None) => {
            let end = (1..=n).find(|&x| degrees[x] == 1)?;
            for (i, x) in path_from(g, end, None).into_iter().enumerate() {
                relabel[x - 1] = i + 1;
            }
            DynkinType::new(Family::A, n)?
        }
        ([], Some(e)) => {
            let big = e.val.0.max(e.val.1);
            // `lo` is the endpoint x with v_x,other = 1.
            let (lo, hi) = if e.val.0 == 1 { (e.x, e.y) } else { (e.y, e.x) };
            if big == 3 {
                if n != 2 {
                    return None;
                }
                relabel[lo - 1] = 1;
                relabel[hi - 1] = 2;
                DynkinType::new(Family::G, 2)?
            } else if n == 2 {
                relabel[lo - 1] = 1;
                relabel[hi - 1] = 2;
                DynkinType::new(Family::B, 2)?
            } else if degrees[e.x] == 1 || degrees[e.y] == 1 {
                let leaf = if degrees[e.x] == 1 { e.x } else { e.y };
                for (i, x) in path_from(g, leaf, None).into_iter().enumerate() {
                    relabel[x - 1] = i + 1;
                }
                DynkinType::new(if leaf == lo { Family::B } else { Family::C }, n)?
            } else if n == 4 {
                relabel[lo - 1] = 2;
                relabel[hi - 1] = 3;
                relabel[g.neighbors(lo).find(|&x| x != hi)? - 1] = 1;
                relabel[g.neighbors(hi).find(|&x| x != lo)? - 1] = 4;
                DynkinType::new(Family::F, 4)?
            } else {
                return None;
            }
        }
        ([center], None) => {
            let center = *center;
            let mut arms: Vec<Vec<Vertex>> = g
                .neighbors(center)
                .map(|x| path_from(g, x, Some(center)))
                .collect();
            arms.sort_by_key(|arm| (arm.len(), arm.iter().copied().min()));
            let lens = [arms[0].len(), arms[1].len(), arms[2].len()];
            relabel[center - 1] = 3;
            match lens {
                [1, 1, _] => {
                    relabel[arms[0][0] - 1] = 1;
                    relabel[arms[1][0] - 1] = 2;
                    for (i, &x) in arms[2].iter().enumerate() {
                        relabel[x - 1] = 4 + i;
                    }
                    DynkinType::new(Family::D, n)?
                }
                [1, 2, 2..=4] => {
                    relabel[arms[0][0] - 1] = 4;
                    relabel[arms[1][0] - 1] = 2;
                    relabel[arms[1][1] - 1] = 1;
                    for (i, &x) in arms[2].iter().enumerate() {
                        relabel[x - 1] = 5 + i;
                    }
                    DynkinType::new(Family::E, n)?
                }
                _ => return None,
            }
        }
        _ => return None,
    };
    g.is_isomorphism(&relabel, &ty.canonical_graph())
        .then_some(DynkinClass { ty, relabel })
}

// Walks a chain starting at `start`, never stepping back to `avoid` or to
// an already visited vertex. Stops at a leaf.
fn path_from(g: &ValuedGraph, start: Vertex, avoid: Option<Vertex>) -> Vec<Vertex> {
    let mut path = vec![start];
    let mut prev = avoid;
    let mut cur = start;
    while let Some(next) = g
        .neighbors(cur)
        .find(|&y| Some(y) != prev && !path.contains(&y))
    {
        prev = Some(cur);
        cur = next;
        path.push(cur);
    }
    path
}
