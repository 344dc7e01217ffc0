//! Exact-arithmetic kernel for partial actions of finite-dimensional Hopf
//! algebras on generalized matrix algebras.
//!
//! Everything is computed over an exact field (the rationals or a prime
//! field), so every axiom check is a bit-true polynomial identity test.
//! The crate is organized bottom-up:
//!
//! * [`scalar`] / [`linalg`] — field elements and dense exact linear algebra,
//! * [`algebra`] — finite-dimensional unital algebras as structure-constant
//!   tensors,
//! * [`hopf`] — Hopf algebra data, group algebras, Sweedler's four-dimensional
//!   Hopf algebra,
//! * [`gma`] — generalized matrix datums and their total algebras,
//! * [`paction`] — partial actions, partial representations and the group
//!   bridge,
//! * [`smash`] — partial smash products, covariant pairs and their universal
//!   morphisms, crossed products,
//! * [`gma_partial`] — decomposition/synthesis of block-invariant partial
//!   actions on generalized matrix algebras,
//! * [`group_datum`] — the group-case datum conditions and the conversions
//!   between datums and block data,
//! * [`morita`] — Morita contexts and Morita-equivalent partial actions,
//! * [`fixtures`] — the built-in example battery.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod fixtures;
pub mod gma;
pub mod gma_partial;
pub mod group_datum;
pub mod hopf;
pub mod linalg;
pub mod morita;
pub mod paction;
pub mod report;
pub mod scalar;
pub mod smash;

pub use report::{CheckItem, Report};
pub use scalar::{Field, Scalar};
