//! Recover Newton's law from the dispersion-force integrals by two
//! independent routes: exact rational moments and adaptive quadrature.
//!
//! The zero-temperature potential is proportional to
//! `∫₀^∞ e^(−2t)P(t)dt` with `P` a quartic; the integral evaluates to the
//! exact rational 25/16, and the model's prefactor 16/25 cancels it to
//! exactly 1 — no tolerance involved. The force kernel follows from the
//! potential kernel by the operator `u·(P′ − 2P)`. Run with:
//!
//! ```text
//! cargo run --example newton_limit
//! ```

use thermograv::kernels::{derive_force_kernel, force_kernel, potential_kernel, rational_to_f64};
use thermograv::quadrature::{exp_moment, integrate_kernel_exact, integrate_kernel_numeric};

fn main() -> thermograv::Result<()> {
    // Exponential moments ∫₀^∞ e^(−2t)tⁿ dt = n!/2^(n+1), exact rationals.
    println!("exponential moments:");
    for n in 0..=5 {
        println!("  n = {n}: {}", exp_moment(n)?);
    }

    // Potential route.
    let p = potential_kernel();
    let exact_v = integrate_kernel_exact(&p)?;
    let numeric_v = integrate_kernel_numeric(&p, 1e-12)?;
    println!("\npotential kernel integral:");
    println!("  exact    = {exact_v}  (= {})", rational_to_f64(&exact_v));
    println!(
        "  numeric  = {:.15}  (error bound {:.2e}, {} evaluations)",
        numeric_v.value, numeric_v.abs_error_estimate, numeric_v.evaluations
    );
    println!(
        "  16/25 · exact = {}  -> Newtonian prefactor recovered exactly",
        rational_to_f64(&exact_v) * 16.0 / 25.0
    );

    // Force route: same cancellation up to the literal sign.
    let q = force_kernel();
    let exact_f = integrate_kernel_exact(&q)?;
    let numeric_f = integrate_kernel_numeric(&q, 1e-12)?;
    println!("\nforce kernel integral:");
    println!("  exact    = {exact_f}  (= {})", rational_to_f64(&exact_f));
    println!(
        "  numeric  = {:.15}  (error bound {:.2e}, {} evaluations)",
        numeric_f.value, numeric_f.abs_error_estimate, numeric_f.evaluations
    );

    // The force kernel is not an independent input: it is derived from the
    // potential kernel with exact rational arithmetic.
    let derived = derive_force_kernel(&p)?;
    assert_eq!(derived.coefficients(), q.coefficients());
    println!("\nderive_force_kernel(potential) == force kernel (exact rational match)");
    Ok(())
}
