//! Exact-arithmetic kernel for obstruction calculus on affine covers.
//!
//! The crate is organized bottom-up:
//!
//! * [`scalar`], [`poly`], [`groebner`], [`matrix`] — the algebra substrate:
//!   rationals, multivariate polynomials, reduced Gröbner bases and exact
//!   linear solving.
//! * [`ring`], [`forms`] — presented rings (patches, localizations, tensor
//!   rings with artinian coefficients) and exterior forms over them.
//! * [`artin`] — artinian local algebras, small extensions, fibered
//!   products, Kähler differentials.
//! * [`hochschild`] — the normalized bar complex, Eulerian idempotents,
//!   Adams operations and the antisymmetrization comparison map.
//! * [`koszul`], [`localcoh`] — Koszul complexes, fundamental and Newton
//!   classes, local cohomology by generalized fractions.
//! * [`cech`] — the deformation pipeline on a finite affine cover:
//!   obstruction cocycles, the normal-module maps, and the semi-regularity
//!   vanishing verification.
//!
//! All core types are generic over the coefficient [`scalar::Field`]; the
//! concrete aliases below fix the rational instantiation used everywhere.

pub mod artin;
pub mod cech;
pub mod error;
pub mod forms;
pub mod groebner;
pub mod hochschild;
pub mod koszul;
pub mod localcoh;
pub mod matrix;
pub mod poly;
pub mod ring;
pub mod scalar;

pub use error::{KernelError, Result};
pub use scalar::{Field, Rat};

/// Rational polynomials.
pub type QPoly = poly::Poly<Rat>;
/// Rational matrices.
pub type QMatrix = matrix::Matrix<Rat>;
/// Rational presented rings.
pub type QRing = ring::RingCtx<Rat>;
