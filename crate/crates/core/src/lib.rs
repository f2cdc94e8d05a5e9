//! Combinatorial construction of Auslander-Reiten quivers for hereditary
//! artin algebras of Dynkin type.
//!
//! The input is the ext-quiver of the algebra, a [`ValuedQuiver`]. From it the
//! crate knits the extended hammock functions inside the repetitive quiver
//! `ZQ^op`, reads off the pi-permutation and pi-index, assembles the full
//! Auslander-Reiten quiver with dimension vectors, and derives the Coxeter
//! matrix, the derived translation and the cluster-category statistics.
//!
//! Everything here is pure integer arithmetic over small finite structures.
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

pub mod ar_quiver;
pub mod coxeter;
pub mod derived;
pub mod dynkin;
mod error;
pub mod hammock;
pub mod matrix;
pub mod oracle;
pub mod quiver;
pub mod repetitive;

pub use ar_quiver::{ARQuiver, ModuleCounts};
pub use coxeter::CoxeterData;
pub use derived::{ClusterCounts, ClusterRep, DerivedQuiver, DerivedVertex};
pub use dynkin::{DynkinClass, DynkinType, Family};
pub use error::{Error, Result};
pub use hammock::HammockResult;
pub use matrix::IntMatrix;
pub use oracle::OracleReport;
pub use quiver::{Arrow, Direction, Step, Valuation, ValuedGraph, ValuedQuiver, Vertex, Walk};
pub use repetitive::{ArrowKind, Repetitive, Section, ZArrow, ZPath, ZVertex};
