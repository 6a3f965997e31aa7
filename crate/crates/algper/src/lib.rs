//! Exact arithmetic for the fixed-point combinatorics of quasi-unipotent
//! surface homeomorphisms.
//!
//! The objects of study are integer sequences `a = (a_n)` of Dold
//! coefficients with finite support and spectra `r = (r_k)` counting roots of
//! unity of each primitive order `k` among the eigenvalues of the induced map
//! on first homology. The two are linked by an explicit bijection
//! ([`dold::DoldSequence::to_spectrum`], [`dold::RootSpectrum::to_dold`]),
//! and a sequence is realized by some orientation-preserving homeomorphism of
//! a closed orientable surface iff its spectrum has non-negative
//! multiplicities and even `r_1`, `r_2`.
//!
//! On top of that calculus the crate offers:
//! - per-genus exhaustive catalogs of realizable spectra ([`catalog`]),
//! - minimal-genus search for prescribed period sets ([`genus`]),
//! - explicit integer symplectic matrices whose characteristic polynomials
//!   are cyclotomic, assembled into full realizations ([`symplectic`]).
//!
//! All sequence values, multiplicities, and matrix entries are arbitrary
//! precision; nothing in the crate rounds.

pub mod catalog;
pub mod dold;
mod error;
pub mod genus;
pub mod numtheory;
pub mod symplectic;

pub use error::Error;
