//! Constructive complex analysis on desk-scale instances.
//!
//! The crate has two layers:
//!
//! * an exact layer over the Gaussian rationals ℚ(i): polynomials,
//!   rational functions, Laurent windows, Čech cohomology of finite
//!   covers ([`cech`]), and divisors / Riemann-Roch / Mittag-Leffler
//!   problems on ℙ¹ ([`p1`]);
//! * a numerical layer in `f64`: the pole-pushing Mittag-Leffler
//!   constructor on plane domains ([`plane`]) and the Weierstrass
//!   ζ/℘ realization of the genus-1 residue criterion ([`torus`]).
//!
//! The crate is `no_std`-compatible (with `alloc`); the companion CLI
//! crate carries IO, JSON schemas and the command-line surface.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod cech;
pub mod error;
pub mod laurent;
pub mod linalg;
pub mod p1;
pub mod plane;
pub mod poly;
pub mod ratfn;
pub mod scalar;
pub mod torus;

pub use error::ExactError;
pub use laurent::LaurentWindow;
pub use linalg::Matrix;
pub use poly::Poly;
pub use ratfn::{FnDivisor, PrincipalPart, RationalFunction};
pub use scalar::{GaussianRational, Point, Rat};
