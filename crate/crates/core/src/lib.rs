//! Resolvable directed cycle factorizations of complete symmetric digraphs.
//!
//! For odd `m >= 5`, `m != 3`, [`assembly::full_construct`] returns a partition
//! of the arcs of `K*_2m` into `2m - 1` factors, each made of two disjoint
//! directed `m`-cycles. Every builder checks its own output; [`verifier`]
//! re-checks from the raw vertex sequences without sharing code with them.

pub mod assembly;
pub mod circulant;
pub mod construct_g;
pub mod construct_h;
pub mod construct_l;
pub mod digraph;
pub mod error;
mod g_tables;
pub mod io;
pub mod mutation;
pub mod par;
pub mod reduction;
pub mod selftest;
pub mod solver;
pub mod verifier;

pub use digraph::{Arc, Digraph, Dipath, DirectedCycle, Factor, Factorization, Kind, Vertex};
pub use error::{Error, Result};
pub use par::Exec;
