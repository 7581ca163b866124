//! Exact arithmetic for the prime decomposition of Brauer-class indices.
//!
//! The crate is `no_std` and only needs `alloc`. It provides
//!
//! - [`padic`]: p-adic valuations of integers and binomial coefficients
//!   (Kummer carry counting, with Legendre's formula as a second route),
//! - [`tableaux`]: Young diagrams, semistandard tableaux, enumeration and
//!   hook-content counting,
//! - [`ring`] and [`schur`]: commutative coefficient rings, dense matrices
//!   and the Schur functor matrix `phi_lambda(g)` built by straightening,
//! - [`planner`]: the symmetric-power search that isolates one prime
//!   component of a period factorization, plus the index divisibility bounds.
//!
//! IO, text formats and the command line live in the companion `perind` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod error;
pub mod padic;
pub mod planner;
pub mod ring;
pub mod schur;
pub mod tableaux;

pub use error::{Error, Result};
pub use padic::Prime;
pub use planner::{IsolationPlan, PeriodFactorization, Strategy};
pub use ring::{Integers, IntegersMod, Rationals, Ring, RingMatrix};
pub use tableaux::{Filling, SemistandardTableau, YoungDiagram};

/// Default cap on the number of tableaux any enumeration (and therefore any
/// Schur matrix dimension) may produce.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 100_000;
