//! Exact computation of the degrees of projections of matrix rank loci
//! away from coordinate subspaces.
//!
//! For an entry set S of an n x n matrix and a rank bound r, the degree
//! d(n, r, S) of the projection of the rank-r locus away from the span of S
//! is evaluated as an intersection number on the Grassmannian G(n-r, n),
//! with arbitrary-precision integer arithmetic throughout. Supported entry
//! sets decompose into blocks (no shared rows or columns between blocks) of
//! four elementary shapes: runs in a row, runs in a column, three-entry
//! corners, and 2x2 squares.
//!
//! - [`chow`]: the Schubert-basis ring of G(k,n);
//! - [`classes`]: the classes attached to the elementary blocks;
//! - [`degrees`]: degree formulas and per-rank tables;
//! - [`patterns`]: pattern parsing, block decomposition, classification;
//! - [`oracle`]: an independent integration path used for verification.

pub mod chow;
pub mod classes;
pub mod cli;
pub mod degrees;
pub mod oracle;
pub mod patterns;

pub use chow::{deg_sigma, ChowElement, GrassmannContext, Partition};
pub use degrees::{degree_table, DegreeTable};
pub use patterns::{BlockShape, Pattern, PatternError};
