//! Level-quotient Hilbert functions of simplicial complexes.
//!
//! This crate computes the h̄-vector (the Hilbert function of the level
//! quotient of a generic artinian reduction of a Stanley–Reisner ring),
//! the derived ḡ- and c̄-vectors, and Gorenstein-quotient rank certificates
//! of simplicial complexes, by specializing the generic linear system of
//! parameters at random points of a finite field and certifying every
//! dimension as an exact matrix rank.
//!
//! The crate is organized around the computation pipeline:
//!
//! - [`ff`] — exact arithmetic and dense linear algebra over GF(p^m);
//! - [`scomplex`] — simplicial complexes, f/h-vectors, Cohen–Macaulay
//!   tests and the constructive operations (joins, stacked attachments,
//!   ear-decomposition h-vector arithmetic);
//! - [`homology`] — simplicial chain complexes over GF(p), Betti numbers
//!   and top-cycle bases;
//! - [`reduction`] — the artinian model of K[Δ], cycle functionals,
//!   pairing ranks, Lefschetz certificates and the good-cycle search;
//! - [`macaulay`] — Macaulay bounds, M-vectors, sums of M-vectors,
//!   module bounds, concavity and ratio-chain checks;
//! - [`monalg`] — monomial algebras: Hilbert functions, socle/level
//!   tests, truncations, trivial extensions, Gorenstein-quotient search
//!   and pure O-sequence scans;
//! - [`matroid`] — basis-exchange matroids, independence complexes and
//!   the exhaustive h-vector search;
//! - [`verify`] — the bundled end-to-end verification suite.

pub mod ff;
pub mod homology;
pub mod macaulay;
pub mod matroid;
pub mod monalg;
pub mod reduction;
pub mod samples;
pub mod scomplex;
pub mod seq;
pub mod verify;

use thiserror::Error;

/// Errors produced by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Bad input: the caller violated a documented precondition.
    #[error("validation: {0}")]
    Validation(String),
    /// A computed quantity contradicts an invariant that should hold;
    /// usually signals a bad specialization (retry with another seed)
    /// or a genuine bug.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
    /// The randomized good-cycle search exhausted its retry budget.
    #[error("specialization failure: {0}")]
    Specialization(String),
}

impl Error {
    pub fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub fn inconsistency(msg: impl Into<String>) -> Self {
        Error::Inconsistency(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
