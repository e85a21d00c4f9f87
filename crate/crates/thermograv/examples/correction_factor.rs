//! Evaluate the temperature correction factor `G(y)` at single points.
//!
//! `G` multiplies the zero-temperature (Newtonian) force to give the force
//! at finite vacuum temperature. It depends on distance and temperature
//! only through the reduced variable `y = 2πrk_BT/(ħc)`. Run with:
//!
//! ```text
//! cargo run --example correction_factor
//! ```

use thermograv::constants::{reduced_y, PhysicalConstants};
use thermograv::correction::{correction_factor, reduce, SignConvention};

fn main() -> thermograv::Result<()> {
    // Direct evaluation at a few reduced-variable values. The ratio
    // convention satisfies G(0+) = 1 and is the default everywhere; the
    // literal convention is its negative.
    println!("{:>10}  {:>22}  {:>22}", "y", "G (ratio)", "G (literal)");
    for &y in &[0.01, 0.5, 1.0, 2.29, 3.61, 5.0, 10.0, 30.0] {
        let ratio = correction_factor(y, SignConvention::Ratio)?;
        let literal = correction_factor(y, SignConvention::Literal)?;
        println!(
            "{y:>10}  {:>22.15e}  {:>22.15e}",
            ratio.value, literal.value
        );
    }

    // The auxiliary variables behind the closed form: x = e^(−2y) and
    // z = y/(1−x). Both are exposed for diagnostics.
    let vars = reduce(1.0)?;
    println!("\nreduced variables at y = 1:");
    println!("  x = e^(-2y)   = {:.15e}", vars.x);
    println!("  z = y/(1 - x) = {:.15e}", vars.z);

    // Physical inputs instead of y: the factor for two points one
    // millimetre apart in a 300 K environment.
    let consts = PhysicalConstants::default();
    let y = reduced_y(1.0e-3, 300.0, &consts)?;
    let g = correction_factor(y, SignConvention::Ratio)?;
    println!("\nr = 1 mm, T = 300 K:");
    println!("  y = {y:.15e}");
    println!("  G = {:.15e}  (underflowed: {})", g.value, g.underflowed);

    // Far beyond the thermal length the factor underflows to an exact zero
    // and says so.
    let far = correction_factor(400.0, SignConvention::Ratio)?;
    println!(
        "\ny = 400: G = {} (underflowed: {})",
        far.value, far.underflowed
    );
    Ok(())
}
