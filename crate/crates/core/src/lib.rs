//! Saturated graphs and hypergraphs of prescribed minimum degree.
//!
//! This crate is `no_std` (it needs `alloc`) and holds every algorithm:
//! graph and hypergraph value types, the named constructions, saturation
//! verifiers and bound evaluators, the closure-certificate engine, the cyclic
//! hypergraph construction and the exhaustive saturation-number search.
//! File formats, JSON reports and the command line live in the `kpsat` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod antichain;
pub mod bounds;
pub mod canon;
pub mod closure;
pub mod combinatorics;
pub mod constructions;
pub mod cyclic;
mod error;
pub mod graph;
pub mod hypergraph;
pub mod search;
pub mod set;
pub mod verify;

pub use error::{Error, Result};
pub use graph::Graph;
pub use hypergraph::Hypergraph;
pub use set::VertexSet;
