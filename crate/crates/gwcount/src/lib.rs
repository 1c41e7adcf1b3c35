//! Exact enumerative invariants of del-Pezzo surfaces.
//!
//! The crate computes genus-0 rational curve counts n_0(beta) through a
//! memoized WDVV recursion over the intersection lattice, and derives from
//! them the number of genus-one curves with a fixed complex structure
//! passing through the expected number of generic points:
//!
//!   n1j(beta) = 2 g(beta) n_0(beta) / aut,
//!
//! together with the symplectic invariant RT1 = (beta.beta) n_0 and the
//! correction term CR = (c1.beta - 2) n_0 that tie the two counts together.
//!
//! Modules:
//! - [`lattice`]: surfaces as H_2/H_* lattices, classes, normalization.
//! - [`gw0`]: the memoized genus-0 recursion and its Kontsevich oracle.
//! - [`genus1`]: the genus-one pipeline and report assembly.
//! - [`store`]: deterministic cache files and table export.
//! - [`verify`]: the property suites behind `gwcount verify`.
//! - [`cli`]: argument parsing and dispatch for the `gwcount` binary.

pub mod cli;
pub mod error;
pub mod genus1;
pub mod gw0;
pub mod lattice;
pub mod store;
pub mod verify;

pub use error::{Error, Result};
