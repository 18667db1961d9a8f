//! Restricted star (rs) colourings of graphs.
//!
//! A proper colouring is an rs colouring when every vertex has at most one
//! neighbour in each colour class below its own. This crate provides
//! verifiers for rs, star, ordered and distance-two colourings, exact
//! backtracking solvers, linear-time and cubic-time 3-rs colourability
//! tests for trees and chordal graphs, reduction gadgets with their
//! colouring maps, and compression of sparse symmetric matrices from an rs
//! colouring of their sparsity graph.

pub mod chordal;
pub mod colouring;
pub mod constructions;
pub mod error;
pub mod generate;
pub mod graph;
pub mod hessian;
pub mod io;
pub mod solver;
pub mod tree;
pub mod tree3rs;

pub use colouring::{Colour, Colouring, PartialColouring};
pub use error::{Error, Result};
pub use graph::{Graph, VertexId};
pub use hessian::{DenseMatrix, SeedGrouping, SparsityPattern};
pub use solver::{Outcome, SolveBudget, SolverOptions, Variant};
pub use tree::RootedTree;

pub type DenseMatrixF64 = hessian::DenseMatrix<f64>;
pub type DenseMatrixF32 = hessian::DenseMatrix<f32>;
