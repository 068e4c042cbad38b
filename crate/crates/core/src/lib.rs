//! Total colorings of four-regular circulant graphs C_n(a,b).
//!
//! - [`graph`]: the graphs themselves, edge indexing, offset cycles.
//! - [`schemes`]: explicit 5-total-colorings for several families, each
//!   checked by the verifier before it is returned.
//! - [`verify`]: conflict enumeration and Type I / Type II classification.
//! - [`solver`]: exact total chromatic number for small instances.
//! - [`cli`]: the `circtotal` command line and its file formats.

// residue arithmetic reads more naturally with `%` than with is_multiple_of
#![allow(clippy::manual_is_multiple_of)]

pub mod cli;
pub mod coloring;
pub mod error;
pub mod graph;
pub mod schemes;
pub mod solver;
pub mod verify;

pub use coloring::{Color, PartialColoring, TotalColoring};
pub use error::{Error, Result};
pub use graph::{canonical_params, CirculantGraph, CycleDecomposition, Edge};
pub use schemes::{select_scheme, SchemeId};
pub use solver::{total_chromatic_number, ChiResult, SearchBudget};
pub use verify::{classify, verify, Classification, VerificationReport};
