//! Physical constants, characteristic scales, and constants overrides.
//!
//! The crate pins CODATA 2018 SI values; every numeric output is tied to a
//! fingerprint of their exact bit patterns so results are attributable to
//! the constants that produced them. Overrides come from `key = value`
//! config text (or a file via `--constants` on the CLI). Run with:
//!
//! ```text
//! cargo run --example constants_and_scales
//! ```

use thermograv::constants::{thermal_length, PhysicalConstants};
use thermograv::physics::static_polarizability;

fn main() -> thermograv::Result<()> {
    let consts = PhysicalConstants::default();
    println!("pinned constants:");
    println!("  hbar        = {:.10e} J s", consts.hbar);
    println!("  c           = {:.10e} m/s", consts.c);
    println!("  k_boltzmann = {:.10e} J/K", consts.k_boltzmann);
    println!("  gamma_grav  = {:.10e} m^3/(kg s^2)", consts.gamma_grav);
    println!("  fingerprint = {}", consts.fingerprint());

    // The thermal length ħc/(2πk_BT) — where y = 1 — sets gravity's range
    // scale at each background temperature.
    println!("\nthermal lengths:");
    for &t in &[300.0, 77.0, 2.7, 1.0e-3] {
        println!(
            "  T = {t:>8} K: l_T = {:.12e} m",
            thermal_length(t, &consts)?
        );
    }

    // The model trades the gravitational coupling for a mass-proportional
    // static polarizability alpha(0) = m·sqrt(32πγ/(25ħc)).
    println!("\nstatic polarizability:");
    for &m in &[1.0, 5.0e-3] {
        println!(
            "  m = {m:>8} kg: alpha(0) = {:.12e}",
            static_polarizability(m, &consts)?
        );
    }

    // Overrides: unknown keys and unphysical values are rejected; a valid
    // override changes the fingerprint (and nothing else silently).
    let tweaked = PhysicalConstants::from_config_str("gamma_grav = 6.674e-11\n# comment lines ok")?;
    println!("\noverride gamma_grav = 6.674e-11:");
    println!("  fingerprint = {}", tweaked.fingerprint());
    assert_ne!(consts.fingerprint(), tweaked.fingerprint());

    let bad = PhysicalConstants::from_config_str("c = -1");
    println!("  rejecting 'c = -1': {}", bad.unwrap_err());
    Ok(())
}
