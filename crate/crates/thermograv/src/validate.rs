//! The self-validation suite: one check per acceptance criterion, shared
//! between the `validate` subcommand and the integration tests.
//!
//! Every check compares two independent routes to the same quantity (exact
//! rational vs adaptive quadrature, closed form vs brute-force summation,
//! scaled vs unscaled inputs) and reports the measured deviation next to
//! the tolerance it must stay under.

use std::fmt;

use num_traits::One;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::constants::{reduced_y, thermal_length, PhysicalConstants};
use crate::correction::{correction_factor, correction_table, SignConvention, Spacing};
use crate::error::Result;
use crate::kernels::{
    derive_force_kernel, force_kernel, potential_kernel, rational_to_f64, Rational,
};
use crate::physics::gravity_range;
use crate::quadrature::{exp_moment, integrate_kernel_exact, integrate_kernel_numeric};
use crate::series::{brute_eulerian_sum, brute_matsubara_g, eulerian_numerator};

/// Number of grid points for the closed-form-vs-brute-sum sweep.
pub const ORACLE_GRID_POINTS: usize = 200;

/// Outcome of a single validation check.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub name: &'static str,
    pub passed: bool,
    /// The dominant measured deviation (NaN if the check errored out).
    pub measured: f64,
    /// The bound `measured` must not exceed.
    pub tolerance: f64,
    pub detail: String,
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: measured {:.3e} vs tolerance {:.3e} ({})",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.measured,
            self.tolerance,
            self.detail
        )
    }
}

fn guard(name: &'static str, body: impl FnOnce() -> Result<CheckReport>) -> CheckReport {
    body().unwrap_or_else(|e| CheckReport {
        name,
        passed: false,
        measured: f64::NAN,
        tolerance: 0.0,
        detail: format!("check aborted with error: {e}"),
    })
}

/// Newtonian reduction of the potential integral by both routes.
pub fn check_newton_potential() -> CheckReport {
    guard("newton-limit-potential", || {
        let kernel = potential_kernel();
        let exact = Rational::new(16, 25) * integrate_kernel_exact(&kernel)?;
        let exact_is_one = exact.is_one();
        let numeric = integrate_kernel_numeric(&kernel, 1e-12)?;
        let measured = (numeric.value * (16.0 / 25.0) - 1.0).abs();
        let tolerance = 1e-10;
        Ok(CheckReport {
            name: "newton-limit-potential",
            passed: exact_is_one && measured <= tolerance,
            measured,
            tolerance,
            detail: format!(
                "exact route gives rational {exact} (must be 1); numeric route used {} evaluations",
                numeric.evaluations
            ),
        })
    })
}

/// Newtonian reduction of the force integral: magnitude 1 by both routes,
/// with the literal integral pinned at −25/16.
pub fn check_newton_force() -> CheckReport {
    guard("newton-limit-force", || {
        let kernel = force_kernel();
        let integral = integrate_kernel_exact(&kernel)?;
        let literal_pinned = integral == Rational::new(-25, 16);
        let exact_magnitude = (Rational::new(16, 25) * integral * Rational::new(-1, 1)).is_one();
        let numeric = integrate_kernel_numeric(&kernel, 1e-12)?;
        let measured = ((numeric.value * (16.0 / 25.0)).abs() - 1.0).abs();
        let tolerance = 1e-10;
        Ok(CheckReport {
            name: "newton-limit-force",
            passed: literal_pinned && exact_magnitude && measured <= tolerance,
            measured,
            tolerance,
            detail: format!(
                "literal integral {integral} (pinned −25/16, attractive sign imposed downstream)"
            ),
        })
    })
}

/// The force kernel must follow from the potential kernel under
/// `Q = u·(P′ − 2P)`, coefficient by coefficient in exact rationals.
pub fn check_kernel_derivation() -> CheckReport {
    guard("kernel-derivation", || {
        let derived = derive_force_kernel(&potential_kernel())?;
        let stored = force_kernel();
        let equal = derived == stored;
        Ok(CheckReport {
            name: "kernel-derivation",
            passed: equal,
            measured: if equal { 0.0 } else { 1.0 },
            tolerance: 0.0,
            detail: format!(
                "derived coefficients {:?} vs stored {:?}",
                derived.coefficients(),
                stored.coefficients()
            ),
        })
    })
}

/// Moment recurrence in exact rationals plus numeric-vs-exact agreement on
/// both physical kernels.
pub fn check_moment_identities() -> CheckReport {
    guard("moment-identities", || {
        let mut recurrence_ok = true;
        for n in 1..=20u32 {
            let lhs = exp_moment(n)?;
            let rhs = Rational::new(n as i128, 2) * exp_moment(n - 1)?;
            recurrence_ok &= lhs == rhs;
        }
        let mut measured = 0.0f64;
        for kernel in [potential_kernel(), force_kernel()] {
            let exact = rational_to_f64(&integrate_kernel_exact(&kernel)?);
            let numeric = integrate_kernel_numeric(&kernel, 1e-12)?;
            measured = measured.max((numeric.value - exact).abs() / exact.abs());
        }
        let tolerance = 1e-10;
        Ok(CheckReport {
            name: "moment-identities",
            passed: recurrence_ok && measured <= tolerance,
            measured,
            tolerance,
            detail: format!(
                "recurrence n!/2^(n+1) exact for n ≤ 20: {recurrence_ok}; worst numeric-vs-exact relative deviation shown"
            ),
        })
    })
}

/// The central analytic claim: closed form vs brute frequency sum over a
/// log grid of `points` nodes spanning y ∈ [0.01, 30].
pub fn check_closed_vs_brute(points: usize) -> CheckReport {
    guard("closed-form-vs-brute-sum", || {
        let (lo, hi) = (0.01f64, 30.0f64);
        let mut measured = 0.0f64;
        let mut worst_y = lo;
        for i in 0..points {
            let frac = i as f64 / (points - 1) as f64;
            let y = (lo.ln() + frac * (hi.ln() - lo.ln())).exp();
            let closed = correction_factor(y, SignConvention::Literal)?.value;
            let brute = brute_matsubara_g(y, 1e-13)?.value;
            let dev = ((closed - brute).abs() - 1e-14).max(0.0) / closed.abs();
            if dev > measured {
                measured = dev;
                worst_y = y;
            }
        }
        let tolerance = 1e-10;
        Ok(CheckReport {
            name: "closed-form-vs-brute-sum",
            passed: measured <= tolerance,
            measured,
            tolerance,
            detail: format!(
                "{points} log-spaced nodes on [0.01, 30]; worst relative deviation (after 1e−14 absolute floor) at y = {worst_y:.6}"
            ),
        })
    })
}

/// Limit behavior at both ends: tends to 1 (ratio) / −1 (literal) as
/// y → 0⁺, decays below 1e−15 by y = 30, underflows to a flagged 0 at 350.
pub fn check_limits() -> CheckReport {
    guard("limit-behavior", || {
        let near_one = correction_factor(1e-6, SignConvention::Ratio)?.value;
        let measured = (near_one - 1.0).abs();
        let tolerance = 1e-6;

        let at_thirty = correction_factor(30.0, SignConvention::Ratio)?.value;
        let decay_ok = (0.0..=1e-15).contains(&at_thirty);

        let literal_limit = correction_factor(1e-8, SignConvention::Literal)?.value;
        let literal_ok = (literal_limit + 1.0).abs() <= 1e-12;

        let mut underflow_ok = true;
        for y in [350.0, 400.0] {
            let ratio = correction_factor(y, SignConvention::Ratio)?;
            let literal = correction_factor(y, SignConvention::Literal)?;
            underflow_ok &= ratio.underflowed && ratio.value == 0.0;
            underflow_ok &=
                literal.underflowed && literal.value == 0.0 && literal.value.is_sign_negative();
        }

        Ok(CheckReport {
            name: "limit-behavior",
            passed: measured <= tolerance && decay_ok && literal_ok && underflow_ok,
            measured,
            tolerance,
            detail: format!(
                "|G(1e−6) − 1| shown; G(30) = {at_thirty:.3e} ≤ 1e−15: {decay_ok}; literal → −1: {literal_ok}; flagged zeros at y ≥ 350: {underflow_ok}"
            ),
        })
    })
}

/// The integer numerator rows behind the closed form, plus the pinned
/// spot value Σ n⁵/2ⁿ = 1082 against the brute partial-sum oracle.
pub fn check_moment_numerators() -> CheckReport {
    guard("moment-numerators", || {
        let pinned: [&[i128]; 5] = [
            &[1],
            &[1, 1],
            &[1, 4, 1],
            &[1, 11, 11, 1],
            &[1, 26, 66, 26, 1],
        ];
        let mut rows_ok = true;
        for (k, expected) in pinned.iter().enumerate() {
            rows_ok &= eulerian_numerator(k as u32 + 1)? == *expected;
        }
        let brute = brute_eulerian_sum(5, 0.5, 1e-12)?;
        let measured = (brute.value - 1082.0).abs();
        let tolerance = 1e-9;
        Ok(CheckReport {
            name: "moment-numerators",
            passed: rows_ok && measured <= tolerance,
            measured,
            tolerance,
            detail: format!(
                "rows (1), (1,1), (1,4,1), (1,11,11,1), (1,26,66,26,1) exact: {rows_ok}; |Σ n⁵/2ⁿ − 1082| shown ({} terms)",
                brute.terms_used
            ),
        })
    })
}

/// Bit-for-bit invariance of G under the stretching (r, T) → (κr, T/κ),
/// plus linear scaling of the physical range in 1/T.
pub fn check_scaling_invariance(pairs: usize) -> CheckReport {
    guard("scaling-invariance", || {
        let consts = PhysicalConstants::default();
        let mut rng = StdRng::seed_from_u64(0x74656d70);
        let mut mismatches = 0usize;
        let mut compared = 0usize;

        for _ in 0..pairs {
            // Temperature of the form 125·j·2^e: dividing by 2, 10 = 2·5,
            // or 1000 = 8·125 is then exact in binary arithmetic.
            let j = rng.gen_range(1..=64i64) as f64;
            let e = rng.gen_range(-6..=0i32);
            let t = 125.0 * j * 2f64.powi(e);

            // Separation snapped to a 20-bit mantissa so κ·r stays exact
            // for κ up to 1000 (< 2^11 extra bits).
            let y_target = 10f64.powf(rng.gen_range(-4.0..2.0f64));
            let r_raw = y_target / (2743.8874119964914 * t);
            let scale = 2f64.powi(r_raw.log2().floor() as i32 - 19);
            let r = (r_raw / scale).round() * scale;

            let base = correction_factor(reduced_y(r, t, &consts)?, SignConvention::Ratio)?;
            for kappa in [2.0, 10.0, 1000.0] {
                let stretched = correction_factor(
                    reduced_y(kappa * r, t / kappa, &consts)?,
                    SignConvention::Ratio,
                )?;
                compared += 1;
                if stretched.value.to_bits() != base.value.to_bits() {
                    mismatches += 1;
                }
            }
        }

        // Physical range: cooling by κ must stretch r_star by κ.
        let base_range = gravity_range(2.7, 0.5, &consts)?;
        let mut range_dev = 0.0f64;
        for kappa in [2.0, 10.0, 1000.0] {
            let cooled = gravity_range(2.7 / kappa, 0.5, &consts)?;
            range_dev = range_dev.max(
                (cooled.r_star - kappa * base_range.r_star).abs() / (kappa * base_range.r_star),
            );
        }
        let range_ok = range_dev <= 1e-12;

        Ok(CheckReport {
            name: "scaling-invariance",
            passed: mismatches == 0 && range_ok,
            measured: mismatches as f64,
            tolerance: 0.0,
            detail: format!(
                "bitwise mismatches across {compared} stretched evaluations shown; range scaling relative deviation {range_dev:.3e} ≤ 1e−12: {range_ok}"
            ),
        })
    })
}

/// The finite-range solver against its pinned half-threshold solution.
pub fn check_range_solver() -> CheckReport {
    guard("range-solver", || {
        let consts = PhysicalConstants::default();
        let sol = gravity_range(2.7, 0.5, &consts)?;
        let measured = (sol.y_star - 4.8407061025754504).abs();
        let tolerance = 1e-6;
        let unique = sol.crossings_found == 1;

        let length = thermal_length(2.7, &consts)?;
        let length_ok = (length - 1.3498016308944821e-4).abs() <= 1e-16;
        let r_star_ok = (sol.r_star - sol.y_star * length).abs() <= f64::EPSILON * sol.r_star;

        Ok(CheckReport {
            name: "range-solver",
            passed: measured <= tolerance && unique && length_ok && r_star_ok,
            measured,
            tolerance,
            detail: format!(
                "|y* − 4.8407061| at threshold 0.5 shown; unique crossing: {unique}; thermal length at 2.7 K = {length:.6e} m; r* = {:.6e} m",
                sol.r_star
            ),
        })
    })
}

/// Shape of the emitted correction table: starts at ≈1, decays below
/// 1e−15, and carries the interior dip-and-recover structure.
pub fn check_table_shape() -> CheckReport {
    guard("table-shape", || {
        let rows = correction_table(0.01, 30.0, 300, Spacing::Log)?;
        let first_ok = (rows[0].1 - 1.0).abs() <= 1e-3;
        let last_ok = rows[rows.len() - 1].1 < 1e-15;

        let interior_min = rows
            .iter()
            .filter(|(y, _)| (1.0..3.0).contains(y))
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .copied()
            .unwrap_or((0.0, f64::NAN));
        let interior_max = rows
            .iter()
            .filter(|(y, _)| (2.6..5.0).contains(y))
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .copied()
            .unwrap_or((0.0, f64::NAN));

        let measured = (interior_min.1 - 0.58802998158544525).abs();
        let tolerance = 2e-3;
        let min_ok = (2.0..=2.6).contains(&interior_min.0) && measured <= tolerance;
        let max_ok =
            (3.3..=4.0).contains(&interior_max.0) && (0.67..=0.70).contains(&interior_max.1);

        Ok(CheckReport {
            name: "table-shape",
            passed: first_ok && last_ok && min_ok && max_ok,
            measured,
            tolerance,
            detail: format!(
                "grid-min deviation from pinned 0.588030 shown; endpoints ≈1 / <1e−15: {first_ok}/{last_ok}; dip ({:.4}, {:.6}) and bump ({:.4}, {:.6}) located",
                interior_min.0, interior_min.1, interior_max.0, interior_max.1
            ),
        })
    })
}

/// Runs every check. `quick` thins the oracle grid tenfold and the random
/// scaling pairs fivefold; tolerances are unchanged.
pub fn run_all(quick: bool) -> Vec<CheckReport> {
    let grid = if quick {
        ORACLE_GRID_POINTS / 10
    } else {
        ORACLE_GRID_POINTS
    };
    let pairs = if quick { 10 } else { 50 };
    vec![
        check_newton_potential(),
        check_newton_force(),
        check_kernel_derivation(),
        check_moment_identities(),
        check_closed_vs_brute(grid),
        check_limits(),
        check_moment_numerators(),
        check_scaling_invariance(pairs),
        check_range_solver(),
        check_table_shape(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_check_passes() {
        for report in run_all(true) {
            assert!(report.passed, "{report}");
        }
    }

    #[test]
    fn full_grid_oracle_check_passes() {
        let report = check_closed_vs_brute(ORACLE_GRID_POINTS);
        assert!(report.passed, "{report}");
    }

    #[test]
    fn report_line_format() {
        let line = check_kernel_derivation().to_string();
        assert!(line.starts_with("PASS kernel-derivation:"));
        assert!(line.contains("vs tolerance"));
    }

    #[test]
    fn scaling_check_is_deterministic() {
        let a = check_scaling_invariance(20);
        let b = check_scaling_invariance(20);
        assert_eq!(a.passed, b.passed);
        assert_eq!(a.detail, b.detail);
    }
}
