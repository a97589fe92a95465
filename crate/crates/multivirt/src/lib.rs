//! A small engine for finitely presented groups, built around the
//! multi-virtual braid groups `M_kVB_n` and their pure-kernel subgroups.
//!
//! The crate provides:
//!
//! * free words over a structured generator alphabet with canonical cyclic
//!   relator forms ([`word`]),
//! * finite presentations with JSON import/export and free-product component
//!   analysis ([`presentation`]),
//! * permutations and permutation-valued homomorphisms ([`perm`], [`hom`]),
//! * coset tables for finite-index kernels, both directly from permutation
//!   images and via Todd–Coxeter enumeration ([`coset`]),
//! * Schreier transversals and Reidemeister–Schreier rewriting of subgroup
//!   presentations ([`rewrite`]),
//! * Tietze simplification and named-dictionary relabelling ([`tietze`]),
//! * integer Smith normal form and abelianization invariants ([`invariants`]),
//! * a catalog of the braid-family presentations, dictionaries, and maps the
//!   engine is tested against ([`catalog`]),
//! * a high-level derivation pipeline tying all of the above together
//!   ([`pipeline`]).

#![warn(missing_docs)]

pub mod catalog;
pub mod coset;
pub mod error;
pub mod hom;
pub mod invariants;
pub mod perm;
pub mod pipeline;
pub mod presentation;
pub mod rewrite;
pub mod tietze;
pub mod word;

pub use error::Error;

/// Convenient result alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
