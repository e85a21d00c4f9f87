//! Run the built-in verification suite and print one line per check.
//!
//! Every analytic claim the crate rests on is re-derived at runtime
//! against an independent route: exact moments vs adaptive quadrature,
//! closed form vs brute-force summation, kernel derivation, limits,
//! scaling invariance, and the range solver against pinned oracle values.
//! The CLI exposes the same suite as `thermograv validate`. Run with:
//!
//! ```text
//! cargo run --example self_validation
//! ```

use thermograv::validate::run_all;

fn main() {
    let reports = run_all(false);
    for report in &reports {
        println!("{report}");
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    if failed == 0 {
        println!("all {} checks passed", reports.len());
    } else {
        println!("{failed} of {} checks FAILED", reports.len());
        std::process::exit(1);
    }
}
