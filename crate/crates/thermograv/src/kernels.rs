//! Polynomial kernels of the exponentially damped integrands.
//!
//! Both the zero-temperature potential and the force are integrals of
//! `e^(−2u) · P(u)` over `u = ωr/c ∈ [0, ∞)`. The bracket polynomials `P`
//! are stored with exact rational coefficients (the physical kernels contain
//! halves such as 17/2 and 61/2) and converted to floating point only at
//! evaluation time.
//!
//! The force kernel is not independent data: differentiating
//! `e^(−2u) P(u)` radially (with `u ∝ r`) produces `e^(−2u) Q(u)` with
//!
//! ```text
//! Q(u) = u · (P′(u) − 2 P(u)),
//! ```
//!
//! which [`derive_force_kernel`] implements. `Q(0) = 0` for every `P`, which
//! is why the zero-frequency term of the thermal sum vanishes.

use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar used for kernel coefficients and moment sums.
pub type Rational = Ratio<i128>;

/// Largest supported polynomial degree. The physical kernels have degree 4
/// and 5; the differentiation operator raises degree by one.
pub const MAX_DEGREE: usize = 8;

/// A polynomial `P(u) = Σ c_k u^k` destined to multiply `e^(−2u)`.
///
/// Coefficients are exact rationals; trailing zero coefficients are trimmed
/// on construction. Immutable value object, freely shareable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentialPolynomialKernel {
    coeffs: Vec<Rational>,
}

impl ExponentialPolynomialKernel {
    /// Builds a kernel from rational coefficients `c_0..c_d`, `d ≤ 8`.
    pub fn new(mut coeffs: Vec<Rational>) -> Result<Self> {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        if coeffs.len() > MAX_DEGREE + 1 {
            return Err(Error::Range(format!(
                "kernel degree {} exceeds the supported maximum {MAX_DEGREE}",
                coeffs.len() - 1
            )));
        }
        Ok(ExponentialPolynomialKernel { coeffs })
    }

    /// Convenience constructor from `(numerator, denominator)` pairs.
    pub fn from_ratios(pairs: &[(i128, i128)]) -> Result<Self> {
        Self::new(pairs.iter().map(|&(n, d)| Rational::new(n, d)).collect())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Exact coefficients `c_0..c_d` (empty for the zero kernel).
    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficients converted to floating point.
    pub fn coefficients_f64(&self) -> Vec<f64> {
        self.coeffs.iter().map(rational_to_f64).collect()
    }

    /// Evaluates the polynomial at `u` by Horner's scheme.
    pub fn evaluate(&self, u: f64) -> Result<f64> {
        if !u.is_finite() {
            return Err(Error::Domain(format!(
                "kernel argument must be finite, got {u}"
            )));
        }
        Ok(horner(&self.coefficients_f64(), u))
    }

    /// Exact evaluation at a rational argument.
    pub fn evaluate_rational(&self, u: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * u + c;
        }
        acc
    }

    /// Largest absolute coefficient, as `f64` (0 for the zero kernel).
    /// Used by tail bounds in the quadrature module.
    pub fn max_abs_coefficient(&self) -> f64 {
        self.coeffs
            .iter()
            .map(|c| rational_to_f64(&c.abs()))
            .fold(0.0, f64::max)
    }
}

/// Nested (Horner) evaluation of `Σ coeffs[k]·u^k`.
pub fn horner(coeffs: &[f64], u: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * u + c)
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    // Numerators and denominators stay far below 2^53 for every kernel and
    // moment in this crate, so both casts are exact.
    *r.numer() as f64 / *r.denom() as f64
}

/// The bracket of the zero-temperature potential integrand:
/// `3 − 6u + (17/2)u² − (9/2)u³ + (3/2)u⁴`.
pub fn potential_kernel() -> ExponentialPolynomialKernel {
    ExponentialPolynomialKernel::from_ratios(&[(3, 1), (-6, 1), (17, 2), (-9, 2), (3, 2)])
        .expect("degree 4 is within bounds")
}

/// The bracket of the force integrand:
/// `−12u + 29u² − (61/2)u³ + 15u⁴ − 3u⁵`.
pub fn force_kernel() -> ExponentialPolynomialKernel {
    ExponentialPolynomialKernel::from_ratios(&[
        (0, 1),
        (-12, 1),
        (29, 1),
        (-61, 2),
        (15, 1),
        (-3, 1),
    ])
    .expect("degree 5 is within bounds")
}

/// Applies the radial-derivative operator `P ↦ Q = u·(P′ − 2P)`.
///
/// `Q(0) = 0` always, and `degree(Q) = degree(P) + 1`, so `P` must have
/// degree at most 7.
pub fn derive_force_kernel(p: &ExponentialPolynomialKernel) -> Result<ExponentialPolynomialKernel> {
    if p.degree() > MAX_DEGREE - 1 {
        return Err(Error::Range(format!(
            "cannot derive from degree {} (result would exceed degree {MAX_DEGREE})",
            p.degree()
        )));
    }
    if p.is_zero() {
        return ExponentialPolynomialKernel::new(Vec::new());
    }
    let pc = p.coefficients();
    // q_j = j·p_j − 2·p_{j−1}, j = 1..=deg+1
    let mut q = vec![Rational::zero(); pc.len() + 1];
    for j in 1..=pc.len() {
        let own = if j < pc.len() {
            Rational::from_integer(j as i128) * pc[j]
        } else {
            Rational::zero()
        };
        q[j] = own - Rational::from_integer(2) * pc[j - 1];
    }
    ExponentialPolynomialKernel::new(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn rat(n: i128, d: i128) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn potential_kernel_coefficients() {
        let p = potential_kernel();
        assert_eq!(p.degree(), 4);
        assert_eq!(
            p.coefficients(),
            &[rat(3, 1), rat(-6, 1), rat(17, 2), rat(-9, 2), rat(3, 2)]
        );
        assert_eq!(p.coefficients_f64(), vec![3.0, -6.0, 8.5, -4.5, 1.5]);
    }

    #[test]
    fn force_kernel_coefficients() {
        let q = force_kernel();
        assert_eq!(q.degree(), 5);
        assert_eq!(
            q.coefficients(),
            &[
                rat(0, 1),
                rat(-12, 1),
                rat(29, 1),
                rat(-61, 2),
                rat(15, 1),
                rat(-3, 1)
            ]
        );
    }

    #[test]
    fn kernel_evaluation_examples() {
        let p = potential_kernel();
        let q = force_kernel();
        assert_eq!(p.evaluate(0.0).unwrap(), 3.0);
        assert_eq!(p.evaluate(1.0).unwrap(), 2.5); // 3 − 6 + 8.5 − 4.5 + 1.5
        assert_eq!(q.evaluate(0.0).unwrap(), 0.0);
        assert_eq!(q.evaluate(1.0).unwrap(), -1.5); // −12 + 29 − 30.5 + 15 − 3
        assert_eq!(q.evaluate(2.0).unwrap(), -8.0); // −24 + 116 − 244 + 240 − 96
    }

    #[test]
    fn derived_force_kernel_matches_stored() {
        let derived = derive_force_kernel(&potential_kernel()).unwrap();
        assert_eq!(derived, force_kernel());
    }

    #[test]
    fn derive_on_simple_polynomials() {
        // P = 1 → Q = −2u
        let constant = ExponentialPolynomialKernel::from_ratios(&[(1, 1)]).unwrap();
        let q = derive_force_kernel(&constant).unwrap();
        assert_eq!(q.coefficients(), &[rat(0, 1), rat(-2, 1)]);

        // P = u → Q = u − 2u²
        let linear = ExponentialPolynomialKernel::from_ratios(&[(0, 1), (1, 1)]).unwrap();
        let q = derive_force_kernel(&linear).unwrap();
        assert_eq!(q.coefficients(), &[rat(0, 1), rat(1, 1), rat(-2, 1)]);
    }

    #[test]
    fn derived_kernel_has_no_constant_term() {
        // Q(0) = 0 regardless of P: the derivative operator multiplies by u.
        for coeffs in [
            vec![(5, 1)],
            vec![(1, 2), (3, 4), (-7, 2)],
            vec![(0, 1), (0, 1), (1, 1), (2, 3)],
        ] {
            let p = ExponentialPolynomialKernel::from_ratios(&coeffs).unwrap();
            let q = derive_force_kernel(&p).unwrap();
            assert_eq!(q.evaluate(0.0).unwrap(), 0.0);
            assert!(q.coefficients().is_empty() || q.coefficients()[0].is_zero());
        }
    }

    #[test]
    fn rational_and_float_paths_agree_at_integers() {
        let q = force_kernel();
        let p = potential_kernel();
        for u in 0..=12i128 {
            let exact = rational_to_f64(&q.evaluate_rational(&Rational::from_integer(u)));
            assert_relative_eq!(q.evaluate(u as f64).unwrap(), exact, max_relative = 1e-14);
            let exact = rational_to_f64(&p.evaluate_rational(&Rational::from_integer(u)));
            assert_relative_eq!(p.evaluate(u as f64).unwrap(), exact, max_relative = 1e-14);
        }
    }

    #[test]
    fn degree_guards() {
        let too_big = vec![(1, 1); 10];
        assert!(ExponentialPolynomialKernel::from_ratios(&too_big).is_err());

        let degree_eight = ExponentialPolynomialKernel::from_ratios(&[(1, 1); 9]).unwrap();
        assert!(derive_force_kernel(&degree_eight).is_err());

        // trailing zeros trim down to a legal degree
        let padded = ExponentialPolynomialKernel::from_ratios(&[(1, 1), (0, 1), (0, 1)]).unwrap();
        assert_eq!(padded.degree(), 0);
    }

    #[test]
    fn non_finite_argument_rejected() {
        assert!(potential_kernel().evaluate(f64::NAN).is_err());
        assert!(potential_kernel().evaluate(f64::INFINITY).is_err());
    }

    #[test]
    fn zero_kernel() {
        let z = ExponentialPolynomialKernel::from_ratios(&[(0, 1)]).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.evaluate(3.0).unwrap(), 0.0);
        assert_eq!(z.max_abs_coefficient(), 0.0);
    }
}
