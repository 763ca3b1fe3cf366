//! Total colorings of small regular graphs of girth k+1.
//!
//! Everything here is exact, deterministic and allocation-only: the crate is
//! `no_std` (with `alloc`) and has no dependencies. Graphs are capped at 64
//! vertices, which covers every instance this library is built around.

#![no_std]

extern crate alloc;

pub mod graph;
pub mod canon;
pub mod coloring;
pub mod cutout;
pub mod generators;
pub mod solver;
pub mod partitions;
pub mod pentad;

mod rng;
pub use rng::XorShift;
