//! Solve for the finite range of gravity: the largest distance at which
//! the correction factor still reaches a chosen threshold.
//!
//! Because `G(y)` is non-monotone before its final decay, a threshold can
//! be crossed several times; the solver counts every grid-detected
//! crossing and bisects the last one. The physical cut-off distance is
//! `r* = y*·ℓ_T` with `ℓ_T = ħc/(2πk_BT)` the thermal length. Run with:
//!
//! ```text
//! cargo run --example gravity_range
//! ```

use thermograv::constants::PhysicalConstants;
use thermograv::physics::gravity_range;

fn main() -> thermograv::Result<()> {
    let consts = PhysicalConstants::default();

    // Half-strength range in a 2.7 K vacuum.
    let half = gravity_range(2.7, 0.5, &consts)?;
    println!("T = 2.7 K, threshold 0.5:");
    println!("  y*        = {:.12}", half.y_star);
    println!("  r*        = {:.12e} m", half.r_star);
    println!("  crossings = {}", half.crossings_found);
    println!("  bracket   = {:.3e}", half.bracket_width);

    // A threshold inside the dip-and-recovery window is crossed three
    // times; the solver reports the count and returns the outermost one.
    let bumpy = gravity_range(2.7, 0.65, &consts)?;
    println!("\nT = 2.7 K, threshold 0.65:");
    println!("  y*        = {:.12}", bumpy.y_star);
    println!("  crossings = {}", bumpy.crossings_found);

    // The range scales exactly as 1/T: halving the temperature doubles the
    // cut-off distance while y* stays put.
    println!("\nthreshold 0.5 at falling temperatures:");
    println!("{:>10}  {:>18}  {:>22}", "T (K)", "y*", "r* (m)");
    for &t in &[300.0, 77.0, 2.7, 1.35, 0.027] {
        let sol = gravity_range(t, 0.5, &consts)?;
        println!("{t:>10}  {:>18.12}  {:>22.12e}", sol.y_star, sol.r_star);
    }

    // Extreme thresholds: almost-full strength is lost within a fraction
    // of the thermal length; a parts-per-billion remnant survives to only
    // a dozen thermal lengths.
    let near_one = gravity_range(2.7, 0.999, &consts)?;
    let tiny = gravity_range(2.7, 1.0e-9, &consts)?;
    println!("\nT = 2.7 K, threshold 0.999 : y* = {:.8}", near_one.y_star);
    println!("T = 2.7 K, threshold 1e-9  : y* = {:.8}", tiny.y_star);
    Ok(())
}
