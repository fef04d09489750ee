//! Integer normed pairings on binary quadratic forms.
//!
//! A bilinear map `s: Z^2 x Z^2 -> Z^2` is a normed pairing for the form
//! `f = m*x1^2 + k*x1*x2 + n*x2^2` when `f(s(x, y)) = f(x) * f(y)`. This crate
//! builds the four families of such pairings, decides normedness exactly,
//! classifies pairings by the orientation signs of their partial maps, and
//! decides which of the four families a given form admits.
//!
//! Supporting machinery covers the matrix-algebra picture (two-dimensional
//! sublattices of `Mat2(Z)` stable under multiplication-like products), the
//! lattice picture (lattices in `Q(tau)` with `tau^2 = disc`, which covers
//! complex and hyperbolic numbers with one code path) and the trigroup law.
//!
//! All arithmetic on the decision path is exact (`BigInt`/`BigRational`).
//! Floating point only appears in [`classify::curve`].
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod arith;
pub mod classify;
mod error;
pub mod forms;
pub mod lattices;
pub mod matembed;
mod matrix;
pub mod pairings;
pub mod trigroup;

pub use error::{Error, Result};
pub use forms::{Definiteness, DoubledPolarization, Form, Vec2};
pub use matrix::Mat2Z;
pub use pairings::{Pairing, PairingType, PlusParams, PlusVariant, ProductKind, Quadruple, Sign};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
