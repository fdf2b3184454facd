//! Exact combinatorics for the joint (maj, exc) distribution on permutations.
//!
//! The crate is `no_std` with `alloc`. Everything here is pure computation:
//! integer polynomials and truncated series ([`exactalg`]), q-analogs
//! ([`qcalc`]), permutation statistics ([`permstat`]), the q-Eulerian
//! polynomial families ([`genfun`]), quasisymmetric expansions in finitely
//! many variables ([`quasisym`]), barred words ([`wordcomb`]) and reduced
//! homology of finite posets ([`posetlab`]).
//!
//! Every `verify_*` function returns a [`Report`] with one entry per checked
//! instance; nothing in this crate divides polynomials.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

mod error;
pub mod exec;
pub mod exactalg;
pub mod genfun;
pub mod permstat;
pub mod posetlab;
pub mod qcalc;
pub mod quasisym;
pub mod report;
pub mod wordcomb;

pub use error::Error;
pub use exactalg::{Monomial, Poly, Var, ZSeries};
pub use exec::{Executor, Sequential};
pub use report::{Check, Report};

pub type Result<T, E = Error> = core::result::Result<T, E>;
