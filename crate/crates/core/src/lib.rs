//! Exact computations behind the question of when the Rees algebra
//! `R(m^ell)` of a power of the maximal ideal is almost Gorenstein.
//!
//! * [`combinatorics`]: binomial closed forms and the inequality that
//!   separates `ell | d - 1` from the rest.
//! * [`monomial`]: monomial ideals with colon, colength and multiplicity,
//!   plus brute-force oracles.
//! * [`good`]: stability and goodness tests against a monomial reduction.
//! * [`canonical`]: the graded canonical module of `R(m^ell)` and its
//!   generator counts, Ulrich numbers and the multiplicity obstruction.
//! * [`classify`]: the per-`(d, ell)` decision and the resulting table.
//! * [`certificates`]: explicit `(f, g, h)` witnesses in dimension two and on
//!   Veronese subrings.

pub mod canonical;
pub mod certificates;
pub mod classify;
pub mod combinatorics;
mod error;
pub mod good;
pub mod monomial;
pub mod render;
mod serde_exact;

pub use classify::{classify, table, ClassLabel, Evidence, Rule};
pub use combinatorics::ExactInt;
pub use error::{Error, Result};
pub use monomial::{Monomial, MonomialIdeal};
