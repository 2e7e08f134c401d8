//! Hamming graphs and their automorphism groups.
//!
//! The Hamming graph `H(n, m)` has the length-`n` words over an `m`-letter
//! alphabet as vertices, with two words adjacent exactly when they differ in
//! one coordinate. Its automorphism group is the wreath product
//! `Sym(m) wr Sym(n)`: every symmetry factors into one alphabet permutation
//! per coordinate plus a permutation of the coordinates themselves.
//!
//! This crate provides the pieces needed to verify that statement
//! computationally at small scale:
//!
//! - [`perm`]: finite permutations (composition, inversion, enumeration);
//! - [`graph`]: the graph itself, distance layers, and the structural checks
//!   on neighborhoods and distance layers that pin down its rigidity;
//! - [`wreath`]: wreath-product elements, their action on vertices, and the
//!   flattening into explicit vertex permutations;
//! - [`aut`]: automorphism testing, exhaustive enumeration by pruned
//!   backtracking, and the decomposition of an arbitrary automorphism into
//!   wreath coordinates.

pub mod aut;
mod error;
pub mod graph;
pub mod perm;
pub mod wreath;

pub use aut::{
    aut_order, decompose, disjoint_union_aut_order, distance_transitivity_check,
    enumerate_automorphisms, is_automorphism, rigidity_check, Decomposition, RigidityReport,
    SearchConfig,
};
pub use error::Error;
pub use graph::{hamming_distance, DistancePartition, HammingGraph, LemmaReport, Vertex};
pub use perm::Permutation;
pub use wreath::{wreath_order, WreathElement};
