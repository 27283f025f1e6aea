//! Exact toolkit for ideal colourings of cyclotomic integer rings `Z[ξ_n]`
//! with class number one.
//!
//! A colouring of `Z[ξ_n]` by the cosets of a principal ideal `(q)` assigns
//! colour 1 to the ideal and one colour to each further coset. This crate
//! constructs such colourings exactly, decides whether they are perfect or
//! only chirally perfect, computes the colour symmetry group `H` and the
//! colour preserving group `K`, enumerates all colourings with a given number
//! of colours via prime splitting, and renders coloured periodic and
//! quasiperiodic point patches as SVG.
//!
//! All core arithmetic is exact and generic over the [`scalar::Scalar`] type;
//! the crate-root aliases fix arbitrary-precision integers as the default
//! instantiation.
//!
//! ```
//! use cyclocolour::cyclotomic::CyclotomicRing;
//! use cyclocolour::ideal::CycIdeal;
//! use cyclocolour::symmetry::{colour_stabiliser, is_perfect};
//! use cyclocolour::Int;
//!
//! // the 5-colouring of the square lattice induced by (2+i)
//! let ring = CyclotomicRing::new(4)?;
//! let q = ring.element_from_i64::<Int>(&[2, 1])?;
//! let ideal = CycIdeal::principal(&q)?;
//! assert_eq!(ideal.norm(), &Int::from(5));
//! assert!(!is_perfect(&ideal)); // chirally perfect only
//! assert!(colour_stabiliser(&ideal).is_trivial());
//! # Ok::<(), cyclocolour::Error>(())
//! ```

pub mod arith;
pub mod cyclotomic;
pub mod error;
pub mod ideal;
pub mod lattice;
pub mod render;
pub mod report;
pub mod scalar;
pub mod splitting;
pub mod symmetry;

pub use error::{Error, Result};

/// Default exact integer scalar.
pub type Int = num_bigint::BigInt;
/// Ring element over the default scalar.
pub type Element = cyclotomic::CycInt<Int>;
/// Ideal lattice over the default scalar.
pub type Ideal = ideal::CycIdeal<Int>;
/// Coset table over the default scalar.
pub type Cosets = ideal::CosetTable<Int>;
/// Integer matrix over the default scalar.
pub type Matrix = lattice::IntMatrix<Int>;
/// Hermite-form lattice basis over the default scalar.
pub type Basis = lattice::HermiteBasis<Int>;
