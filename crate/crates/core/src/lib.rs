//! Exact symbolic computation for parafermionic Fock spaces: partitions,
//! Schur and hook-Schur polynomials over big-integer Laurent polynomials,
//! the B_n Weyl group, Kostant's cohomology H^•(𝔫, V(p)) and the
//! Schur-function identities that follow from it.

pub mod cli;
pub mod kostant;
pub mod partitions;
pub mod polyring;
pub mod schur;
pub mod weyl;

pub use kostant::{CohomologyTable, KostantError, VerificationReport};
pub use partitions::{FrobeniusForm, Partition};
pub use polyring::{ExponentVector, MultiPoly, TruncatedSeries};
pub use schur::SchurContext;
pub use weyl::{SignedPermutation, Weight};
