//! Infinite-series machinery: closed-form power-moment sums Σ nᵏxⁿ and the
//! brute-force Matsubara frequency summation used as an oracle for the
//! analytic temperature correction factor.
//!
//! The reduced Matsubara sum evaluated here is
//!
//! ```text
//! G_literal(y) = (16/25) · y · Σ_{n≥1} e^(−2ny) · Q(ny)
//! ```
//!
//! with `Q` the force kernel. The frequency index enters only through the
//! product `n·y`, so the whole sum is a function of the single reduced
//! variable `y`. The `n = 0` term carries a half weight by convention; it
//! vanishes identically here because the force kernel has no constant term,
//! but the branch is kept explicit so the routine generalizes to kernels
//! that do have one.

use crate::error::{Error, Result};
use crate::kernels::{force_kernel, horner};

/// Hard ceiling on summand evaluations for every brute-force series.
pub const TERM_BUDGET: usize = 10_000_000;

/// Largest power `k` for which the closed-form moment sum is provided.
pub const MAX_POWER: u32 = 5;

const REL_TOL_FLOOR: f64 = 1e-15;

/// Prefactor `16/25` relating the reduced Matsubara sum to the correction
/// factor (the squared `4/5` from the zero-temperature moment integral).
pub(crate) const MOMENT_PREFACTOR: f64 = 16.0 / 25.0;

/// Outcome of a truncated summation.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesResult {
    pub value: f64,
    /// Number of summand evaluations actually performed.
    pub terms_used: usize,
    /// Upper bound on the magnitude of the neglected tail (same scale as
    /// `value`).
    pub truncation_bound: f64,
}

/// Neumaier-style compensated accumulator: the running compensation keeps
/// the low-order bits that plain summation of many same-sign terms drops.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

/// Integer coefficient row of the numerator polynomial `A_k(x)` in
/// `Σ_{n≥1} nᵏ xⁿ = x·A_k(x)/(1−x)^(k+1)` (ascending powers of `x`).
///
/// Built by the triangle recurrence
/// `A(n, j) = (j+1)·A(n−1, j) + (n−j)·A(n−1, j−1)`.
pub fn eulerian_numerator(k: u32) -> Result<Vec<i128>> {
    if k > 20 {
        return Err(Error::Range(format!(
            "numerator row {k} exceeds the overflow guard 20"
        )));
    }
    if k == 0 {
        return Ok(vec![1]);
    }
    let mut row = vec![1i128];
    for n in 2..=k as usize {
        let mut next = vec![0i128; n];
        for (j, slot) in next.iter_mut().enumerate() {
            let up = if j < row.len() {
                (j as i128 + 1) * row[j]
            } else {
                0
            };
            let diag = if j >= 1 {
                (n as i128 - j as i128) * row[j - 1]
            } else {
                0
            };
            *slot = up + diag;
        }
        row = next;
    }
    Ok(row)
}

/// Closed-form `Σ_{n≥0} nᵏ xⁿ` for `k ≤ 5` and `0 ≤ x < 1`.
///
/// For `k = 0` this is the geometric series `1/(1−x)` (with the `n = 0`
/// term counted as 1); for `k ≥ 1` the `n = 0` term vanishes and the sum is
/// `x·A_k(x)/(1−x)^(k+1)`.
pub fn eulerian_sum(k: u32, x: f64) -> Result<f64> {
    check_power(k)?;
    check_ratio(x)?;
    if k == 0 {
        return Ok(1.0 / (1.0 - x));
    }
    let numerator: Vec<f64> = eulerian_numerator(k)?.iter().map(|&c| c as f64).collect();
    Ok(x * horner(&numerator, x) / (1.0 - x).powi(k as i32 + 1))
}

/// Direct compensated summation of `Σ nᵏ xⁿ`, the oracle for
/// [`eulerian_sum`].
///
/// The summand rises before it falls (peak near `n ≈ k/ln(1/x)`), so the
/// stopping test may fire only past the peak. There the neglected tail is
/// bounded by a geometric majorant with ratio `q = x·(1+1/n)ᵏ < 1`, and
/// summation stops once that bound drops below half the relative-tolerance
/// target — the reported value then carries tail error ≤ `rel_tol/2`, not
/// merely a last-term that small.
pub fn brute_eulerian_sum(k: u32, x: f64, rel_tol: f64) -> Result<SeriesResult> {
    check_power(k)?;
    check_ratio(x)?;
    check_rel_tol(rel_tol)?;
    if x == 0.0 {
        return Ok(SeriesResult {
            value: if k == 0 { 1.0 } else { 0.0 },
            terms_used: 1,
            truncation_bound: 0.0,
        });
    }

    let decay = -x.ln(); // ln(1/x) > 0
    let mut sum = CompensatedSum::new();
    if k == 0 {
        sum.add(1.0); // n = 0 contributes 0⁰·x⁰ = 1 only for k = 0
    }
    let mut power = 1.0f64;
    for n in 1..=TERM_BUDGET {
        power *= x;
        let term = (n as f64).powi(k as i32) * power;
        sum.add(term);
        let past_peak = n as f64 * decay > k as f64;
        if past_peak {
            let q = x * (1.0 + 1.0 / n as f64).powi(k as i32);
            let tail = term * q / (1.0 - q);
            if tail <= 0.5 * rel_tol * sum.value().abs() {
                return Ok(SeriesResult {
                    value: sum.value(),
                    terms_used: n,
                    truncation_bound: tail,
                });
            }
        }
    }
    Err(Error::Convergence {
        context: format!("power-sum term budget {TERM_BUDGET} exhausted at x = {x}"),
        best: sum.value(),
        bound: f64::INFINITY,
    })
}

/// Brute-force reduced Matsubara sum
/// `G_literal(y) = (16/25)·y·Σ_{n≥1} e^(−2ny)·Q(ny)` (literal sign
/// convention: negative-valued).
///
/// Stopping rule: the summand magnitude peaks near `n·y ≈ 3`, so the
/// small-term test fires only once `n ≥ ⌈3/y⌉ + 5` *and* `n·y > 6` — both
/// conditions place the index safely on the falling flank. The neglected
/// tail is bounded geometrically using `|Q(u)| ≤ 3u⁵` for `u ≥ 2`, giving
/// ratio `q = e^(−2y)·(1+1/n)⁵ < 1` at every admissible stopping index.
pub fn brute_matsubara_g(y: f64, rel_tol: f64) -> Result<SeriesResult> {
    if y <= 0.0 || !y.is_finite() {
        return Err(Error::Domain(format!(
            "reduced temperature-distance variable must be positive and finite, got {y}"
        )));
    }
    check_rel_tol(rel_tol)?;

    let kernel = force_kernel();
    let coeffs = kernel.coefficients_f64();

    let mut sum = CompensatedSum::new();
    // n = 0 carries half weight by convention. The force kernel has no
    // constant term, so Q(0) = 0 and this contributes exactly nothing; the
    // branch stays explicit for kernels where it would not.
    sum.add(0.5 * horner(&coeffs, 0.0));

    let min_terms = ((3.0 / y).ceil() as usize + 5).min(TERM_BUDGET);
    for n in 1..=TERM_BUDGET {
        let u = n as f64 * y;
        let term = (-2.0 * u).exp() * horner(&coeffs, u);
        sum.add(term);
        if n >= min_terms && u > 6.0 && term.abs() <= rel_tol * sum.value().abs() {
            let q = (-2.0 * y).exp() * (1.0 + 1.0 / n as f64).powi(5);
            let majorant = 3.0 * u.powi(5) * (-2.0 * u).exp();
            return Ok(SeriesResult {
                value: MOMENT_PREFACTOR * y * sum.value(),
                terms_used: n,
                truncation_bound: MOMENT_PREFACTOR * y * majorant * q / (1.0 - q),
            });
        }
    }
    Err(Error::Convergence {
        context: format!("frequency-sum term budget {TERM_BUDGET} exhausted at y = {y}"),
        best: MOMENT_PREFACTOR * y * sum.value(),
        bound: f64::INFINITY,
    })
}

fn check_power(k: u32) -> Result<()> {
    if k > MAX_POWER {
        return Err(Error::Domain(format!(
            "power k must lie in 0..={MAX_POWER}, got {k}"
        )));
    }
    Ok(())
}

fn check_ratio(x: f64) -> Result<()> {
    if !(0.0..1.0).contains(&x) {
        return Err(Error::Domain(format!(
            "series ratio x must lie in [0, 1), got {x}"
        )));
    }
    Ok(())
}

fn check_rel_tol(rel_tol: f64) -> Result<()> {
    if !(REL_TOL_FLOOR..1.0).contains(&rel_tol) {
        return Err(Error::Domain(format!(
            "rel_tol must lie in [{REL_TOL_FLOOR:e}, 1), got {rel_tol}"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn compensated_sum_recovers_lost_bits() {
        let mut s = CompensatedSum::new();
        for x in [1e100, 1.0, -1e100] {
            s.add(x);
        }
        assert_eq!(s.value(), 1.0);

        let mut t = CompensatedSum::new();
        for _ in 0..1_000_000 {
            t.add(0.1);
        }
        assert_relative_eq!(t.value(), 100_000.0, max_relative = 1e-15);
    }

    #[test]
    fn numerator_rows_match_known_triangle() {
        assert_eq!(eulerian_numerator(0).unwrap(), vec![1]);
        assert_eq!(eulerian_numerator(1).unwrap(), vec![1]);
        assert_eq!(eulerian_numerator(2).unwrap(), vec![1, 1]);
        assert_eq!(eulerian_numerator(3).unwrap(), vec![1, 4, 1]);
        assert_eq!(eulerian_numerator(4).unwrap(), vec![1, 11, 11, 1]);
        assert_eq!(eulerian_numerator(5).unwrap(), vec![1, 26, 66, 26, 1]);
    }

    #[test]
    fn numerator_rows_sum_to_factorial() {
        let mut factorial = 1i128;
        for k in 1..=12u32 {
            factorial *= k as i128;
            let row_sum: i128 = eulerian_numerator(k).unwrap().iter().sum();
            assert_eq!(row_sum, factorial, "row {k}");
        }
        assert!(eulerian_numerator(21).is_err());
    }

    #[test]
    fn closed_form_values() {
        assert_eq!(eulerian_sum(0, 0.5).unwrap(), 2.0);
        assert_relative_eq!(eulerian_sum(0, 0.9).unwrap(), 10.0, max_relative = 1e-14);
        assert_relative_eq!(eulerian_sum(1, 0.5).unwrap(), 2.0, max_relative = 1e-14);
        assert_relative_eq!(eulerian_sum(5, 0.5).unwrap(), 1082.0, max_relative = 1e-13);
        assert_relative_eq!(
            eulerian_sum(2, 0.3).unwrap(),
            1.1370262390670554,
            max_relative = 1e-14
        );
        assert_relative_eq!(
            eulerian_sum(4, 0.7).unwrap(),
            4157.6543209876543,
            max_relative = 1e-13
        );
        assert_eq!(eulerian_sum(3, 0.0).unwrap(), 0.0);
        assert_eq!(eulerian_sum(0, 0.0).unwrap(), 1.0);
    }

    #[test]
    fn closed_form_domain_errors() {
        assert!(eulerian_sum(0, 1.0).is_err());
        assert!(eulerian_sum(0, -0.1).is_err());
        assert!(eulerian_sum(0, f64::NAN).is_err());
        assert!(eulerian_sum(6, 0.5).is_err());
    }

    #[test]
    fn brute_power_sum_matches_examples() {
        let r = brute_eulerian_sum(1, 0.5, 1e-12).unwrap();
        assert!((r.value - 2.0).abs() <= 1e-12 * 2.0 + r.truncation_bound);

        let r = brute_eulerian_sum(5, 0.5, 1e-12).unwrap();
        assert!((r.value - 1082.0).abs() <= 1e-9);

        let r = brute_eulerian_sum(0, 0.9, 1e-12).unwrap();
        assert!((r.value - 10.0).abs() <= 1e-11);
    }

    #[test]
    fn brute_power_sum_agrees_with_closed_form_on_grid() {
        for k in 0..=MAX_POWER {
            for &x in &[0.01, 0.1, 0.3, 0.5, 0.7, 0.9, 0.99] {
                let closed = eulerian_sum(k, x).unwrap();
                let brute = brute_eulerian_sum(k, x, 1e-12).unwrap();
                assert_relative_eq!(brute.value, closed, max_relative = 1e-10);
                assert!(
                    (brute.value - closed).abs()
                        <= 1e-12 * brute.value.abs() + brute.truncation_bound,
                    "self-reported bound violated at k = {k}, x = {x}"
                );
                assert!(brute.truncation_bound >= 0.0);
            }
        }
    }

    #[test]
    fn brute_power_sum_handles_x_zero() {
        let r = brute_eulerian_sum(0, 0.0, 1e-12).unwrap();
        assert_eq!(r.value, 1.0);
        let r = brute_eulerian_sum(3, 0.0, 1e-12).unwrap();
        assert_eq!(r.value, 0.0);
    }

    #[test]
    fn brute_power_sum_rejects_bad_tolerance() {
        assert!(brute_eulerian_sum(1, 0.5, 1e-16).is_err());
        assert!(brute_eulerian_sum(1, 0.5, 1.0).is_err());
    }

    #[test]
    fn matsubara_sum_frozen_values() {
        // Direct-summation references computed to 40 digits and rounded.
        let r = brute_matsubara_g(1.0, 1e-12).unwrap();
        assert_relative_eq!(r.value, -0.71332143552482421, max_relative = 1e-11);

        let r = brute_matsubara_g(2.0, 1e-12).unwrap();
        assert_relative_eq!(r.value, -0.59986966201617465, max_relative = 1e-11);

        // Deep in the exponential-suppression regime the sum is tiny but
        // still resolvable (leading term (16/25)·y·e^(−2y)·Q(y)).
        let r = brute_matsubara_g(100.0, 1e-12).unwrap();
        assert!(r.value < 0.0);
        assert!(r.value.abs() < 1e-74);
        assert_relative_eq!(r.value, -2.5269030519517164e-75, max_relative = 1e-10);
    }

    #[test]
    fn matsubara_sum_is_negative_under_literal_convention() {
        for &y in &[0.01, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 30.0] {
            let r = brute_matsubara_g(y, 1e-12).unwrap();
            assert!(r.value < 0.0, "literal sum should be negative at y = {y}");
            assert!(r.truncation_bound >= 0.0);
        }
    }

    #[test]
    fn matsubara_zero_frequency_term_vanishes() {
        // The half-weighted n = 0 term is 0.5·Q(0); the force kernel has no
        // constant term, so the contribution is exactly zero.
        let coeffs = force_kernel().coefficients_f64();
        assert_eq!(0.5 * horner(&coeffs, 0.0), 0.0);
    }

    #[test]
    fn matsubara_term_count_floor() {
        for &y in &[0.05, 0.5, 1.0, 10.0, 100.0] {
            let r = brute_matsubara_g(y, 1e-12).unwrap();
            let floor = (3.0 / y).ceil() as usize + 5;
            assert!(
                r.terms_used >= floor,
                "y = {y}: used {} terms, floor {floor}",
                r.terms_used
            );
        }
    }

    #[test]
    fn matsubara_domain_errors() {
        assert!(brute_matsubara_g(0.0, 1e-12).is_err());
        assert!(brute_matsubara_g(-1.0, 1e-12).is_err());
        assert!(brute_matsubara_g(f64::NAN, 1e-12).is_err());
        assert!(brute_matsubara_g(f64::INFINITY, 1e-12).is_err());
    }

    #[test]
    fn matsubara_truncation_bound_is_honest() {
        // Tighten the tolerance by two orders and confirm the looser run's
        // self-reported bound covers the difference.
        for &y in &[0.05, 0.3, 1.0, 4.0] {
            let loose = brute_matsubara_g(y, 1e-8).unwrap();
            let tight = brute_matsubara_g(y, 1e-13).unwrap();
            assert!(
                (loose.value - tight.value).abs()
                    <= 1e-8 * loose.value.abs() + loose.truncation_bound,
                "bound violated at y = {y}"
            );
        }
    }
}
