//! Gravitational potential and force between two masses, at zero and at
//! finite vacuum temperature.
//!
//! In this model the Newtonian interaction is a retarded dispersion force:
//! the potential integral reduces exactly to `−γm₁m₂/r` and its radial
//! derivative to `−γm₁m₂/r²`. Heating the vacuum multiplies the force by
//! the correction factor `G(y)`. Run with:
//!
//! ```text
//! cargo run --example force_between_masses
//! ```

use thermograv::constants::{thermal_length, PhysicalConstants};
use thermograv::physics::{force_finite_t, force_zero_t, potential_zero_t, ParticlePair};

fn main() -> thermograv::Result<()> {
    let consts = PhysicalConstants::default();
    let pair = ParticlePair::new(1.0, 1.0)?;

    // Zero temperature: exactly Newton, no tolerance needed.
    let v = potential_zero_t(&pair, 1.0, &consts)?;
    let f = force_zero_t(&pair, 1.0, &consts)?;
    println!("two 1 kg masses, r = 1 m, T = 0:");
    println!("  V = {v:.15e} J   (Newton: -6.67430e-11 J)");
    println!("  F = {f:.15e} N   (Newton: -6.67430e-11 N)");

    // Finite temperature: negligible correction at everyday separations,
    // dramatic near the thermal length.
    let t_cmb = 2.7;
    let ell = thermal_length(t_cmb, &consts)?;
    println!("\nvacuum at T = {t_cmb} K (thermal length {ell:.6e} m):");
    println!("{:>12}  {:>11}  {:>22}  {:>22}", "r (m)", "y", "F (N)", "G");
    for &r in &[1.0e-6, 1.0e-4, ell, 5.0 * ell, 10.0 * ell] {
        let thermal = force_finite_t(&pair, r, t_cmb, &consts)?;
        println!(
            "{r:>12.4e}  {:>11.4e}  {:>22.15e}  {:>22.15e}",
            thermal.y, thermal.force, thermal.correction.value
        );
    }

    // T = 0 is an exact branch: the correction is the constant 1 and the
    // force is bit-identical to the zero-temperature route.
    let cold = force_finite_t(&pair, 1.0, 0.0, &consts)?;
    assert_eq!(cold.force, f);
    println!("\nT = 0 branch reproduces the zero-temperature force exactly.");
    Ok(())
}
