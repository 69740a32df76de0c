//! Convergence and periodic behaviour of m-step competition graphs of
//! multipartite tournaments.
//!
//! The [`structure`] module computes partite sets, ordered strong components
//! and imprimitivity data; [`theory`] turns those into the eventual graphs of
//! `C^m(D)`; [`oracle`] computes the same sequence directly from Boolean
//! matrix powers so that the two can be compared ([`verify`]).

pub mod bitset;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod matrix;
pub mod oracle;
pub mod structure;
pub mod theory;
pub mod verify;

pub use bitset::{BitSet, VertexSet};
pub use error::{Error, Result};
pub use graph::{Digraph, UndirectedGraph};
pub use matrix::{bool_mul, competition_matrix, BoolMatrix};
