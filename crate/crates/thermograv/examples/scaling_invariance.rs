//! Demonstrate the stretch–cool invariance: the correction factor depends
//! on distance and temperature only through the product `r·T`.
//!
//! If the background cools by a factor κ while every distance stretches by
//! the same κ, the reduced variable `y = 2π(r·T)k_B/(ħc)` — and with it
//! the whole force law — is unchanged. In this model gravity's range
//! therefore grows in exact proportion to the cooling. The reduction
//! forms `r·T` before multiplying by the constant, so whenever the scaled
//! pair `(κr, T/κ)` is exactly representable the invariance holds
//! bit-for-bit, not merely to rounding. Run with:
//!
//! ```text
//! cargo run --example scaling_invariance
//! ```

use thermograv::constants::{reduced_y, scaled_temperature, PhysicalConstants};
use thermograv::correction::{correction_factor, SignConvention};
use thermograv::physics::gravity_range;

fn main() -> thermograv::Result<()> {
    let consts = PhysicalConstants::default();
    // Bit-for-bit equality needs the scaled inputs themselves to be exact:
    // κ = 1000 = 8·125, so r gets a short mantissa (a power of two) and T
    // carries the factor 125. Any rounding in κr or T/κ would shift y by
    // an ulp — the invariance is in the product, not in sloppy inputs.
    let r = 2.44140625e-4; // 2^-12 metres
    let t = 1.953125; // 125/64 kelvin

    let y0 = reduced_y(r, t, &consts)?;
    let g0 = correction_factor(y0, SignConvention::Ratio)?.value;
    println!("baseline: r = {r} m, T = {t} K -> y = {y0:.17e}, G = {g0:.17e}");

    println!(
        "\n{:>6}  {:>12}  {:>10}  {:>13}  {:>13}",
        "kappa", "r' (m)", "T' (K)", "y' == y", "G' == G"
    );
    for &kappa in &[2.0, 10.0, 1000.0] {
        let r_scaled = kappa * r;
        let t_scaled = scaled_temperature(t, kappa)?;
        let y = reduced_y(r_scaled, t_scaled, &consts)?;
        let g = correction_factor(y, SignConvention::Ratio)?.value;
        println!(
            "{kappa:>6}  {r_scaled:>12.4e}  {t_scaled:>10.4e}  {:>13}  {:>13}",
            y.to_bits() == y0.to_bits(),
            g.to_bits() == g0.to_bits()
        );
        assert_eq!(
            y.to_bits(),
            y0.to_bits(),
            "reduced variable must be bit-identical"
        );
        assert_eq!(
            g.to_bits(),
            g0.to_bits(),
            "correction factor must be bit-identical"
        );
    }

    // The same invariance at the level of the physical cut-off distance:
    // halving T exactly doubles r* (y* is a pure number and does not move).
    let warm = gravity_range(2.7, 0.5, &consts)?;
    let cold = gravity_range(1.35, 0.5, &consts)?;
    println!("\nfinite-range scaling at threshold 0.5:");
    println!(
        "  T = 2.70 K: y* = {:.12}, r* = {:.12e} m",
        warm.y_star, warm.r_star
    );
    println!(
        "  T = 1.35 K: y* = {:.12}, r* = {:.12e} m",
        cold.y_star, cold.r_star
    );
    println!("  r*(1.35 K) / r*(2.7 K) = {}", cold.r_star / warm.r_star);
    Ok(())
}
