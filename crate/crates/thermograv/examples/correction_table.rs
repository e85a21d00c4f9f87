//! Emit the correction-factor table `G(y)` — the data behind the
//! transition plot from full Newtonian strength to exponential decay.
//!
//! The factor is non-monotone on the way down: it dips to a local minimum
//! near y ≈ 2.29, recovers to a local maximum near y ≈ 3.61, and only then
//! decays. This example prints a coarse table to stdout and locates the
//! two interior extrema on a fine grid. Run with:
//!
//! ```text
//! cargo run --example correction_table
//! ```

use thermograv::correction::{correction_table, Spacing};

fn main() -> thermograv::Result<()> {
    // A compact log-spaced table over the full transition window.
    let rows = correction_table(0.01, 30.0, 16, Spacing::Log)?;
    println!("{:>12}  {:>22}", "y", "G");
    for (y, g) in &rows {
        println!("{y:>12.6}  {g:>22.15e}");
    }

    // Fine linear scan to pin the interior extrema.
    let fine = correction_table(1.0, 6.0, 5001, Spacing::Linear)?;
    let (min_y, min_g) = fine
        .iter()
        .copied()
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .expect("table is never empty");
    let (max_y, max_g) = fine
        .iter()
        .copied()
        .filter(|&(y, _)| y > min_y)
        .max_by(|a, b| a.1.total_cmp(&b.1))
        .expect("table is never empty");
    println!("\nlocal minimum : G({min_y:.4}) = {min_g:.12}");
    println!("local maximum : G({max_y:.4}) = {max_g:.12}");

    // The same data is what `thermograv figure1` writes as CSV/JSON.
    println!(
        "\nCLI equivalent: thermograv figure1 --ymin 0.01 --ymax 30 --points 300 --spacing log"
    );
    Ok(())
}
