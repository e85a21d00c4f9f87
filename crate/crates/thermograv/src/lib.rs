//! # thermograv
//!
//! Numerical machinery for a dispersion-force (Casimir-type) model of
//! gravitation at zero and finite temperature.
//!
//! In this model the Newtonian interaction between two masses arises from a
//! retarded dispersion force. At zero temperature the potential and force are
//! semi-infinite frequency integrals of the form
//!
//! ```text
//! ∫₀^∞ dt e^(−2t) P(t),        t = ωr/c,
//! ```
//!
//! with `P` a small polynomial. At finite vacuum-mode temperature the
//! integral becomes a Matsubara-frequency sum, which this crate evaluates two
//! independent ways: by controlled brute-force summation and by an analytic
//! closed form built from Eulerian numerator polynomials. Their ratio to the
//! zero-temperature force is the temperature correction factor `G(y)`, a
//! function of the single dimensionless variable
//!
//! ```text
//! y = 2π r k_B T / (ħ c).
//! ```
//!
//! `G` starts at 1, dips and recovers once, then decays to zero: gravity in
//! this model has a finite range, and because `G` depends on `r` and `T` only
//! through the product `r·T`, that range stretches in exact proportion as the
//! background cools.
//!
//! ## Quick start
//!
//! ```
//! use thermograv::constants::PhysicalConstants;
//! use thermograv::correction::{correction_factor, SignConvention};
//!
//! let g = correction_factor(1.0, SignConvention::Ratio).unwrap();
//! assert!((g.value - 0.713321435524824).abs() < 1e-12);
//!
//! let consts = PhysicalConstants::default();
//! let ell = thermograv::constants::thermal_length(2.7, &consts).unwrap();
//! assert!((ell - 1.3498016308944821e-4).abs() < 1e-15);
//! ```
//!
//! ## Modules
//!
//! - [`constants`] — pinned SI constants and the `(r, T) → y` reduction
//! - [`kernels`] — exact-rational polynomial kernels of the potential/force
//!   integrands and the differentiation operator connecting them
//! - [`quadrature`] — exact exponential moments and an adaptive
//!   Gauss–Kronrod integrator, the two zero-temperature evaluation routes
//! - [`series`] — brute-force Matsubara/power-moment sums with compensated
//!   accumulation and certified truncation bounds
//! - [`correction`] — the closed-form temperature correction factor `G`
//! - [`physics`] — SI-unit potential, force, and the finite-range solver
//! - [`cli`] — deterministic CSV/JSON table emission for the command-line tool
//! - [`validate`] — the self-check suite run by `thermograv validate`

// Pinned reference values are written at the full precision they were
// computed to, even where fewer digits would round-trip to the same float.
#![allow(clippy::excessive_precision)]

pub mod cli;
pub mod constants;
pub mod correction;
pub mod kernels;
pub mod physics;
pub mod quadrature;
pub mod series;
pub mod validate;

mod error;

pub use error::{Error, Result};
