//! Text input, JSON reports and DOT export for `arq-core`.

pub mod dot;
pub mod input;
pub mod report;

pub use input::{parse, ParseError};
pub use report::Report;
