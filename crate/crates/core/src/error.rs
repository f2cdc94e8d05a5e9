use core::fmt;

use crate::repetitive::ZVertex;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Everything that can go wrong while validating input or building the
/// Auslander-Reiten data.
///
/// Arrow indices refer to the position of the arrow in the raw input list,
/// so a front end can map them back to source lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    LoopArrow { arrow: usize },
    TwoCycle { arrow: usize, other: usize },
    MultipleArrow { arrow: usize, other: usize },
    BadValuation { arrow: usize },
    DanglingVertexIndex { arrow: usize, vertex: usize },
    NotATree,
    NotDynkin,
    WalkNotReduced { step: usize },
    WindowTooLarge { levels: i64, bound: i64 },
    KnitInconsistent { k: usize, at: ZVertex, value: i64 },
    BoundExceeded { k: usize, bound: i64 },
    PositionOutOfRange { at: ZVertex },
    SingularCartan,
    OrderBoundExceeded { bound: u32 },
    Overflow,
    CrossCheckFailed { check: &'static str },
}

impl Error {
    /// True for errors caused by the input rather than by an internal
    /// inconsistency of the computation.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::LoopArrow { .. }
                | Error::TwoCycle { .. }
                | Error::MultipleArrow { .. }
                | Error::BadValuation { .. }
                | Error::DanglingVertexIndex { .. }
                | Error::NotATree
                | Error::NotDynkin
                | Error::WalkNotReduced { .. }
                | Error::WindowTooLarge { .. }
                | Error::PositionOutOfRange { .. }
        )
    }

    /// Index of the offending input arrow, when there is one.
    pub fn arrow(&self) -> Option<usize> {
        match *self {
            Error::LoopArrow { arrow }
            | Error::TwoCycle { arrow, .. }
            | Error::MultipleArrow { arrow, .. }
            | Error::BadValuation { arrow }
            | Error::DanglingVertexIndex { arrow, .. } => Some(arrow),
            _ => None,
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::LoopArrow { arrow } => write!(f, "arrow #{arrow} is a loop"),
            Error::TwoCycle { arrow, other } => {
                write!(f, "arrows #{other} and #{arrow} form a 2-cycle")
            }
            Error::MultipleArrow { arrow, other } => {
                write!(f, "arrow #{arrow} duplicates arrow #{other}")
            }
            Error::BadValuation { arrow } => {
                write!(f, "arrow #{arrow} has a non-positive valuation component")
            }
            Error::DanglingVertexIndex { arrow, vertex } => {
                write!(
                    f,
                    "arrow #{arrow} refers to vertex {vertex}, which does not exist"
                )
            }
            Error::NotATree => f.write_str("underlying graph is not a connected tree"),
            Error::NotDynkin => f.write_str("underlying valued graph is not a Dynkin diagram"),
            Error::WalkNotReduced { step } => {
                write!(
                    f,
                    "walk is not reduced: step {step} cancels its predecessor"
                )
            }
            Error::WindowTooLarge { levels, bound } => {
                write!(
                    f,
                    "level window of {levels} levels exceeds the bound {bound}"
                )
            }
            Error::KnitInconsistent { k, at, value } => write!(
                f,
                "hammock knit for vertex {k} turned negative with value {value} at {at}"
            ),
            Error::BoundExceeded { k, bound } => write!(
                f,
                "hammock knit for vertex {k} found no terminating vertex within {bound} levels"
            ),
            Error::PositionOutOfRange { at } => {
                write!(f, "{at} is not a vertex of the Auslander-Reiten quiver")
            }
            Error::SingularCartan => f.write_str("Cartan matrix is not unitriangular"),
            Error::OrderBoundExceeded { bound } => {
                write!(f, "Coxeter matrix has no finite order up to {bound}")
            }
            Error::Overflow => f.write_str("integer overflow in matrix arithmetic"),
            Error::CrossCheckFailed { check } => write!(f, "cross-check failed: {check}"),
        }
    }
}

impl core::error::Error for Error {}
