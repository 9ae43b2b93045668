//! Exact-arithmetic models of the split octonions, the sextonions, the rank-3
//! Jordan algebras over composition algebras, and the non-reductive Lie
//! algebras that sit between the third and fourth rows of the magic square.
//!
//! Everything is computed over the Gaussian rationals with arbitrary-precision
//! integers; there is no floating point anywhere and every equality check is
//! exact. The crate is `no_std` (it needs only `alloc`); IO, serialization and
//! parallel drivers live in the companion CLI crate.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod scalar;
pub mod linalg;
pub mod octonion;
pub mod jordan;
pub mod g2;
pub mod intermediate;
pub mod verify;

pub use scalar::{GaussRat, Rat};
