//! Exact combinatorics of integral zonotopes and zonotopal tilings.
//!
//! Everything here works over arbitrary-precision integers and rationals.
//! The crate is `no_std` and only needs `alloc`.
//!
//! Layout:
//! - [`lattice`]: integer matrices, canonical lattice bases, kernels,
//!   perpendicular lattices, saturation and Smith invariants.
//! - [`lp`]: strict/weak/equality feasibility of homogeneous rational systems.
//! - [`zonotope`]: vector configurations, sign vectors, covectors, faces,
//!   vertices, volumes and the cube/parallelotope test.
//! - [`tiling`]: tilings in sign-vector form, validation, tilings from lifts,
//!   enumeration, local fans and refinement.
//! - [`support`]: the lattices attached to a tiling, support functions,
//!   convexity and regularity.
//! - [`hypertoric`]: invariants of the hypertoric variety of a tiling.

#![no_std]

extern crate alloc;

pub mod error;
pub mod hypertoric;
pub mod lattice;
pub mod lp;
pub mod support;
pub mod tiling;
pub mod zonotope;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
