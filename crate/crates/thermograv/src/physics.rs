//! Physical-unit wrappers around the dimensionless machinery: the
//! zero-temperature potential and force, the finite-temperature force, the
//! mass–polarizability substitution, and the finite-range solver.
//!
//! The model's zero-temperature interaction reduces to Newtonian gravity
//! because the kernel moment integrals cancel the `16/25` prefactor
//! exactly: `(16/25)·∫₀^∞ e^(−2t)P(t)dt = (16/25)·(25/16) = 1`. Both
//! reductions below route through the exact rational integral so the
//! cancellation is forced, not approximate.

use num_traits::Signed;

use crate::constants::{reduced_y, thermal_length, PhysicalConstants};
use crate::correction::{correction_factor, CorrectionResult, EvalMethod, SignConvention};
use crate::error::{Error, Result};
use crate::kernels::{force_kernel, potential_kernel, rational_to_f64, Rational};
use crate::quadrature::integrate_kernel_exact;

/// A pair of gravitating point particles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParticlePair {
    m1: f64,
    m2: f64,
}

impl ParticlePair {
    /// Both masses in kilograms, strictly positive and finite.
    pub fn new(m1: f64, m2: f64) -> Result<Self> {
        for (label, m) in [("m1", m1), ("m2", m2)] {
            if m <= 0.0 || !m.is_finite() {
                return Err(Error::Domain(format!(
                    "mass {label} must be positive and finite, got {m} kg"
                )));
            }
        }
        Ok(ParticlePair { m1, m2 })
    }

    pub fn m1(&self) -> f64 {
        self.m1
    }

    pub fn m2(&self) -> f64 {
        self.m2
    }
}

/// Finite-temperature force evaluation: the force itself plus the reduced
/// variable and correction factor that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermalForce {
    /// Radial force component in newtons (negative = attractive).
    pub force: f64,
    /// Reduced variable `2πrk_BT/(ħc)` (0 at zero temperature).
    pub y: f64,
    /// Ratio-convention correction factor applied to the Newtonian force.
    pub correction: CorrectionResult,
}

/// Solution of the finite-range problem `G(y*) = threshold`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RangeSolution {
    /// Largest reduced variable at which the factor crosses the threshold.
    pub y_star: f64,
    /// The corresponding physical distance `y*·ℓ_T` in metres.
    pub r_star: f64,
    pub threshold: f64,
    /// Number of grid-detected crossings (the factor is non-monotone, so
    /// this may exceed 1).
    pub crossings_found: usize,
    /// Width of the final bisection bracket around `y_star`.
    pub bracket_width: f64,
}

/// Static polarizability substitution `α(0) = m·√(32πγ/(25ħc))` that turns
/// the dispersion-force prefactor into the gravitational constant.
pub fn static_polarizability(m: f64, consts: &PhysicalConstants) -> Result<f64> {
    if m < 0.0 || !m.is_finite() {
        return Err(Error::Domain(format!(
            "mass must be non-negative and finite, got {m} kg"
        )));
    }
    let ratio = 32.0 * std::f64::consts::PI * consts.gamma_grav / (25.0 * consts.hbar * consts.c);
    Ok(m * ratio.sqrt())
}

/// `(16/25)·∫₀^∞ e^(−2t) K(t) dt` as an exact rational — the dimensionless
/// reduction factor of the zero-temperature integrals.
fn newton_reduction(kernel_integral: &Rational) -> Rational {
    Rational::new(16, 25) * kernel_integral
}

/// Zero-temperature interaction energy `V(r) = −γ m₁ m₂ / r` in joules.
///
/// Routed through the kernel integral: the exact reduction factor is the
/// rational 1, so the Newtonian form is reproduced without rounding.
pub fn potential_zero_t(pair: &ParticlePair, r: f64, consts: &PhysicalConstants) -> Result<f64> {
    check_distance(r)?;
    let reduction = newton_reduction(&integrate_kernel_exact(&potential_kernel())?);
    Ok(-consts.gamma_grav * pair.m1 * pair.m2 / r * rational_to_f64(&reduction))
}

/// Zero-temperature radial force `F(r) = −γ m₁ m₂ / r²` in newtons
/// (negative = attractive).
///
/// The force-kernel integral is `−25/16`; its *magnitude* carries the
/// reduction while the attractive sign is imposed by convention.
pub fn force_zero_t(pair: &ParticlePair, r: f64, consts: &PhysicalConstants) -> Result<f64> {
    check_distance(r)?;
    let integral = integrate_kernel_exact(&force_kernel())?;
    let magnitude = newton_reduction(&integral).abs();
    Ok(-consts.gamma_grav * pair.m1 * pair.m2 / (r * r) * rational_to_f64(&magnitude))
}

/// Finite-temperature radial force `F(r,T) = F(r,0)·G(y)` in newtons.
///
/// At `T = 0` this is exactly the zero-temperature force (the ratio factor
/// is 1 by definition); for `y ≥ 350` the force underflows to an exact 0
/// and the flag on the embedded correction records it.
pub fn force_finite_t(
    pair: &ParticlePair,
    r: f64,
    temperature: f64,
    consts: &PhysicalConstants,
) -> Result<ThermalForce> {
    if temperature < 0.0 || !temperature.is_finite() {
        return Err(Error::Domain(format!(
            "temperature must be non-negative and finite, got {temperature} K"
        )));
    }
    let newton = force_zero_t(pair, r, consts)?;
    if temperature == 0.0 {
        return Ok(ThermalForce {
            force: newton,
            y: 0.0,
            correction: CorrectionResult {
                value: 1.0,
                convention: SignConvention::Ratio,
                underflowed: false,
                method: EvalMethod::ClosedForm,
            },
        });
    }
    let y = reduced_y(r, temperature, consts)?;
    let correction = correction_factor(y, SignConvention::Ratio)?;
    Ok(ThermalForce {
        force: newton * correction.value,
        y,
        correction,
    })
}

/// Finds the largest `y*` with `G(y*) = threshold` and converts it to a
/// physical cut-off distance at temperature `T`.
///
/// The factor is scanned on a grid of step 0.05 from near zero up to a
/// point where the asymptotic majorant `(16/25)·3·y⁶e^(−2y)` guarantees
/// `G < threshold`; every sign change is counted and the last one is
/// refined by bisection to a bracket of width ≤ 1e−10.
pub fn gravity_range(
    temperature: f64,
    threshold: f64,
    consts: &PhysicalConstants,
) -> Result<RangeSolution> {
    if temperature <= 0.0 || !temperature.is_finite() {
        return Err(Error::Domain(format!(
            "temperature must be positive and finite, got {temperature} K"
        )));
    }
    if !(threshold > 0.0 && threshold < 1.0) {
        return Err(Error::Domain(format!(
            "threshold must lie strictly between 0 and 1, got {threshold}"
        )));
    }

    let g = |y: f64| -> Result<f64> { Ok(correction_factor(y, SignConvention::Ratio)?.value) };

    // Upper end of the search: beyond y_hi the decaying majorant (with a
    // factor-2 margin for its sub-geometric slack) pins G below threshold.
    let mut y_hi = 6.0f64;
    while 0.64 * 3.0 * y_hi.powi(6) * (-2.0 * y_hi).exp() >= 0.5 * threshold {
        y_hi += 1.0;
    }

    // Grid scan with a virtual starting point just above zero, where the
    // factor is indistinguishable from 1 and hence above any threshold.
    const STEP: f64 = 0.05;
    let mut crossings = 0usize;
    let mut bracket: Option<(f64, f64)> = None;
    let mut y_prev = 1e-9;
    let mut d_prev = g(y_prev)? - threshold;
    let mut i = 1usize;
    loop {
        let y = STEP * i as f64;
        let d = g(y)? - threshold;
        if d == 0.0 || d_prev * d < 0.0 {
            crossings += 1;
            bracket = Some((y_prev, y));
        }
        if y >= y_hi {
            break;
        }
        y_prev = y;
        d_prev = d;
        i += 1;
    }

    let (mut lo, mut hi) = bracket.ok_or_else(|| {
        Error::NoCrossing(format!(
            "correction factor never crosses threshold {threshold} on (0, {y_hi}]"
        ))
    })?;

    let mut d_lo = g(lo)? - threshold;
    while hi - lo > 1e-10 {
        let mid = 0.5 * (lo + hi);
        let d_mid = g(mid)? - threshold;
        if d_mid == 0.0 {
            lo = mid;
            hi = mid;
            break;
        }
        if (d_mid > 0.0) == (d_lo > 0.0) {
            lo = mid;
            d_lo = d_mid;
        } else {
            hi = mid;
        }
    }

    let y_star = 0.5 * (lo + hi);
    Ok(RangeSolution {
        y_star,
        r_star: y_star * thermal_length(temperature, consts)?,
        threshold,
        crossings_found: crossings,
        bracket_width: hi - lo,
    })
}

fn check_distance(r: f64) -> Result<()> {
    if r <= 0.0 || !r.is_finite() {
        return Err(Error::Domain(format!(
            "separation must be positive and finite, got {r} m"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn defaults() -> PhysicalConstants {
        PhysicalConstants::default()
    }

    fn unit_pair() -> ParticlePair {
        ParticlePair::new(1.0, 1.0).unwrap()
    }

    #[test]
    fn pair_rejects_nonpositive_masses() {
        assert!(ParticlePair::new(0.0, 1.0).is_err());
        assert!(ParticlePair::new(1.0, -2.0).is_err());
        assert!(ParticlePair::new(f64::NAN, 1.0).is_err());
        assert!(ParticlePair::new(1.0, f64::INFINITY).is_err());
    }

    #[test]
    fn polarizability_pinned_value_and_linearity() {
        let c = defaults();
        // √(32πγ/(25ħc)) for the default constants, computed once at high
        // precision and pinned.
        assert_relative_eq!(
            static_polarizability(1.0, &c).unwrap(),
            92137060.188774295,
            max_relative = 1e-13
        );
        assert_eq!(static_polarizability(0.0, &c).unwrap(), 0.0);
        let a1 = static_polarizability(3.5, &c).unwrap();
        let a2 = static_polarizability(7.0, &c).unwrap();
        assert_eq!(a2, 2.0 * a1);
        assert!(static_polarizability(-1.0, &c).is_err());
    }

    #[test]
    fn potential_newton_limit_exact() {
        let c = defaults();
        let v = potential_zero_t(&unit_pair(), 1.0, &c).unwrap();
        assert_eq!(v, -c.gamma_grav); // −6.6743e−11 J, cancellation exact
                                      // 1/r law
        let v2 = potential_zero_t(&unit_pair(), 2.0, &c).unwrap();
        assert_eq!(v2, v / 2.0);
    }

    #[test]
    fn force_newton_limit_exact() {
        let c = defaults();
        let f = force_zero_t(&unit_pair(), 1.0, &c).unwrap();
        assert_eq!(f, -c.gamma_grav); // −6.6743e−11 N
                                      // inverse-square law
        let f2 = force_zero_t(&unit_pair(), 2.0, &c).unwrap();
        assert_eq!(f2, f / 4.0);
        assert!(f < 0.0);
    }

    #[test]
    fn zero_t_identities_across_scales() {
        let c = defaults();
        let pair = ParticlePair::new(2.5, 4.0).unwrap();
        let mut r = 1e-3;
        while r <= 1e20 {
            let v = potential_zero_t(&pair, r, &c).unwrap();
            let f = force_zero_t(&pair, r, &c).unwrap();
            let newton = -c.gamma_grav * pair.m1() * pair.m2();
            assert_relative_eq!(v * r / newton, 1.0, max_relative = 1e-12);
            assert_relative_eq!(f * r * r / newton, 1.0, max_relative = 1e-12);
            r *= 1e3;
        }
    }

    #[test]
    fn distance_domain_errors() {
        let c = defaults();
        assert!(potential_zero_t(&unit_pair(), 0.0, &c).is_err());
        assert!(force_zero_t(&unit_pair(), -1.0, &c).is_err());
        assert!(force_finite_t(&unit_pair(), f64::NAN, 1.0, &c).is_err());
    }

    #[test]
    fn finite_t_reduces_to_newton_at_zero_temperature() {
        let c = defaults();
        let cold = force_finite_t(&unit_pair(), 1.0, 0.0, &c).unwrap();
        let newton = force_zero_t(&unit_pair(), 1.0, &c).unwrap();
        assert_eq!(cold.force, newton);
        assert_eq!(cold.y, 0.0);
        assert_eq!(cold.correction.value, 1.0);
        assert!(force_finite_t(&unit_pair(), 1.0, -1.0, &c).is_err());
    }

    #[test]
    fn finite_t_at_thermal_length_applies_known_factor() {
        let c = defaults();
        // r = ℓ_T puts the reduced variable within rounding of 1.
        let r = thermal_length(2.7, &c).unwrap();
        let warm = force_finite_t(&unit_pair(), r, 2.7, &c).unwrap();
        assert_relative_eq!(warm.y, 1.0, max_relative = 1e-12);
        let newton = force_zero_t(&unit_pair(), r, &c).unwrap();
        assert_relative_eq!(
            warm.force,
            newton * 0.71332143552482421,
            max_relative = 1e-10
        );
    }

    #[test]
    fn finite_t_ratio_matches_correction_everywhere() {
        let c = defaults();
        let pair = ParticlePair::new(0.3, 11.0).unwrap();
        // reduced variables span the guard path, the plain closed form,
        // the decaying flank, and the underflow regime
        for &(r, t) in &[
            (1e-7, 2.7),
            (1e-4, 2.7),
            (3e-4, 2.7),
            (1e-3, 2.7),
            (0.02, 300.0),
        ] {
            let warm = force_finite_t(&pair, r, t, &c).unwrap();
            let newton = force_zero_t(&pair, r, &c).unwrap();
            let expected = correction_factor(warm.y, SignConvention::Ratio)
                .unwrap()
                .value;
            // binary ratio: both sides are the same product up to one
            // rounding of the final multiply
            assert_relative_eq!(warm.force / newton, expected, max_relative = 1e-15);
        }
    }

    #[test]
    fn finite_t_underflow_propagates() {
        let c = defaults();
        // y ≈ 2744·r·T; make it comfortably beyond 350
        let warm = force_finite_t(&unit_pair(), 1.0, 300.0, &c).unwrap();
        assert!(warm.y > 350.0);
        assert!(warm.correction.underflowed);
        assert_eq!(warm.force, 0.0);
    }

    #[test]
    fn range_solver_half_threshold() {
        let c = defaults();
        let sol = gravity_range(2.7, 0.5, &c).unwrap();
        assert_eq!(sol.crossings_found, 1);
        assert!((sol.y_star - 4.8407061025754504).abs() < 1e-9);
        assert!(sol.bracket_width <= 1e-10);
        assert_relative_eq!(sol.r_star, 6.5339929919372149e-4, max_relative = 1e-9);
        assert_eq!(sol.threshold, 0.5);
    }

    #[test]
    fn range_solver_non_monotone_threshold() {
        let c = defaults();
        // 0.65 sits between the local minimum (≈0.588) and the local
        // maximum (≈0.698), so the factor crosses three times.
        let sol = gravity_range(2.7, 0.65, &c).unwrap();
        assert_eq!(sol.crossings_found, 3);
        assert!((sol.y_star - 4.1692416766480592).abs() < 1e-9);
    }

    #[test]
    fn range_solver_takes_last_crossing() {
        let c = defaults();
        // Any threshold below the local minimum crosses exactly once.
        let below_min = gravity_range(2.7, 0.55, &c).unwrap();
        assert_eq!(below_min.crossings_found, 1);
        // The solver's y_star for 0.65 must exceed the local-max position,
        // not stop at the first descent through 0.65 near y ≈ 1.5.
        let multi = gravity_range(2.7, 0.65, &c).unwrap();
        assert!(multi.y_star > 3.6098211951605727);
    }

    #[test]
    fn range_solver_scaling_in_temperature() {
        let c = defaults();
        let base = gravity_range(2.7, 0.5, &c).unwrap();

        let halved = gravity_range(2.7 / 2.0, 0.5, &c).unwrap();
        assert_eq!(halved.y_star, base.y_star);
        assert_eq!(halved.r_star, 2.0 * base.r_star); // power-of-two: exact

        for kappa in [10.0, 1000.0] {
            let cooled = gravity_range(2.7 / kappa, 0.5, &c).unwrap();
            assert_eq!(cooled.y_star, base.y_star);
            assert_relative_eq!(cooled.r_star, kappa * base.r_star, max_relative = 1e-12);
        }
    }

    #[test]
    fn range_solver_domain_errors() {
        let c = defaults();
        assert!(gravity_range(0.0, 0.5, &c).is_err());
        assert!(gravity_range(-2.7, 0.5, &c).is_err());
        assert!(gravity_range(2.7, 0.0, &c).is_err());
        assert!(gravity_range(2.7, 1.0, &c).is_err());
        assert!(gravity_range(2.7, 1.5, &c).is_err());
    }

    #[test]
    fn range_solver_extreme_thresholds() {
        let c = defaults();
        // Just below 1: the crossing happens almost immediately.
        let tight = gravity_range(2.7, 0.999999, &c).unwrap();
        assert!(tight.y_star < 0.01);
        // Deep threshold: crossing far out on the decaying flank.
        let deep = gravity_range(2.7, 1e-9, &c).unwrap();
        assert!(deep.y_star > 10.0);
        let g = correction_factor(deep.y_star, SignConvention::Ratio)
            .unwrap()
            .value;
        assert_relative_eq!(g, 1e-9, max_relative = 1e-5);
    }
}
