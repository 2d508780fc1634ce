//! Exact-arithmetic structure and representation data for the exceptional
//! Lie superalgebras F(4) and G(3).
//!
//! Everything here is computed over the rationals (mostly over the
//! half-integer lattice), with no floating point anywhere:
//!
//! - [`weightspace`]: weight vectors, invariant bilinear forms, the parity
//!   function and sparse formal characters,
//! - [`rootsystems`]: root data, simple-root bases, Cartan matrices and odd
//!   reflections,
//! - [`weylgroup`]: the finite Weyl groups, signed actions, and the two
//!   dominant-integral-weight tests,
//! - [`blocks`]: atypicality, block labels and the c-parametrization of the
//!   dominant weights of an atypical block,
//! - [`characters`]: the character engine (Freudenthal multiplicities, Euler
//!   characteristics, direct and recursive character formulas,
//!   superdimensions),
//! - [`category`]: block quivers, projective radical layers, translation
//!   maps, block equivalences, cohomology tables and path-algebra relations.

pub mod blocks;
pub mod category;
pub mod characters;
pub mod error;
pub mod rootsystems;
pub mod weightspace;
pub mod weylgroup;

pub use error::Error;

/// Convenient result alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
