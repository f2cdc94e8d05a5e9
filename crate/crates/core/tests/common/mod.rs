#![allow(dead_code)]

use arq_core::dynkin::{DynkinType, Family};
use arq_core::quiver::{ValuedGraph, ValuedQuiver, Vertex};
use rand::seq::SliceRandom;
use rand::Rng;

/// The types exercised by the acceptance suite.
pub fn tested_types() -> Vec<DynkinType> {
    let mut out = Vec::new();
    let mut push = |f, ranks: std::ops::RangeInclusive<usize>| {
        for n in ranks {
            out.push(DynkinType::new(f, n).unwrap());
        }
    };
    push(Family::A, 1..=8);
    push(Family::B, 2..=8);
    push(Family::C, 3..=8);
    push(Family::D, 4..=8);
    push(Family::E, 6..=8);
    push(Family::F, 4..=4);
    push(Family::G, 2..=2);
    out
}

/// Random orientation of the canonical diagram, canonical labels kept.
pub fn random_canonical_orientation(ty: DynkinType, rng: &mut impl Rng) -> ValuedQuiver {
    ty.canonical_graph().orient(|_| rng.gen_bool(0.5))
}

/// Random orientation under a random relabeling of the vertices.
pub fn random_orientation(ty: DynkinType, rng: &mut impl Rng) -> ValuedQuiver {
    let mut perm: Vec<Vertex> = (1..=ty.rank()).collect();
    perm.shuffle(rng);
    let g: ValuedGraph = ty.canonical_graph().relabeled(&perm);
    g.orient(|_| rng.gen_bool(0.5))
}

/// Every orientation of the canonical diagram.
pub fn all_orientations(ty: DynkinType) -> Vec<ValuedQuiver> {
    ty.canonical_graph().orientations().collect()
}

pub fn quiver(n: usize, arrows: &[(usize, usize, i64, i64)]) -> ValuedQuiver {
    ValuedQuiver::new(n, arrows.iter().map(|&(s, d, a, b)| (s, d, (a, b)))).unwrap()
}

pub fn e6_example() -> ValuedQuiver {
    quiver(
        6,
        &[
            (1, 2, 1, 1),
            (2, 3, 1, 1),
            (3, 5, 1, 1),
            (6, 5, 1, 1),
            (3, 4, 1, 1),
        ],
    )
}

pub fn f4_example() -> ValuedQuiver {
    quiver(4, &[(1, 2, 1, 1), (2, 3, 1, 2), (4, 3, 1, 1)])
}
