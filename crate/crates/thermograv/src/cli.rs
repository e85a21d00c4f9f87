//! Command-line surface: single-point evaluation, table emission, force and
//! range computation, and the self-validation suite.
//!
//! Output is deterministic by construction — every floating-point value is
//! printed through one fixed 12-significant-digit formatter, CSV rows use
//! LF endings and `.` decimals regardless of locale, and JSON is assembled
//! by hand with a fixed key order.
//!
//! Exit codes: 0 success, 1 runtime/validation failure (no crossing,
//! unreadable constants file, I/O), 2 usage error (bad flags or flag
//! values).

use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use crate::constants::{reduced_y, PhysicalConstants};
use crate::correction::{correction_factor, correction_table, reduce, SignConvention, Spacing};
use crate::error::Result;
use crate::physics::{force_finite_t, gravity_range, ParticlePair};
use crate::validate::run_all;

pub const SCHEMA_VERSION: &str = "1";

const EXIT_OK: i32 = 0;
const EXIT_FAILURE: i32 = 1;
const EXIT_USAGE: i32 = 2;

/// One table cell of a command's output.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(i64),
    Text(String),
    Bool(bool),
}

/// A command's complete output: named columns plus rows, tagged with the
/// schema version and the fingerprint of the constants that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct OutputRecord {
    pub schema_version: &'static str,
    pub constants_fingerprint: String,
    pub command: &'static str,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

/// Fixed 12-significant-digit scientific formatting for every real-valued
/// output cell.
fn fmt_num(v: f64) -> String {
    format!("{v:.11e}")
}

fn escape_json(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

impl Cell {
    fn to_csv_field(&self) -> String {
        match self {
            Cell::Num(v) => fmt_num(*v),
            Cell::Int(v) => v.to_string(),
            Cell::Bool(b) => b.to_string(),
            Cell::Text(s) => {
                if s.contains(',') || s.contains('"') || s.contains('\n') {
                    format!("\"{}\"", s.replace('"', "\"\""))
                } else {
                    s.clone()
                }
            }
        }
    }

    fn to_json_value(&self) -> String {
        match self {
            Cell::Num(v) => fmt_num(*v),
            Cell::Int(v) => v.to_string(),
            Cell::Bool(b) => b.to_string(),
            Cell::Text(s) => format!("\"{}\"", escape_json(s)),
        }
    }
}

impl OutputRecord {
    /// Header row plus data rows, LF line endings throughout.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let fields: Vec<String> = row.iter().map(Cell::to_csv_field).collect();
            out.push_str(&fields.join(","));
            out.push('\n');
        }
        out
    }

    /// Single JSON object with fixed key order; numeric cells are emitted
    /// as JSON numbers in the same 12-significant-digit form as the CSV.
    pub fn to_json(&self) -> String {
        let columns: Vec<String> = self
            .columns
            .iter()
            .map(|c| format!("\"{}\"", escape_json(c)))
            .collect();
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|row| {
                let vals: Vec<String> = row.iter().map(Cell::to_json_value).collect();
                format!("[{}]", vals.join(","))
            })
            .collect();
        format!(
            "{{\"schema_version\":\"{}\",\"constants_fingerprint\":\"{}\",\"command\":\"{}\",\"columns\":[{}],\"rows\":[{}]}}\n",
            escape_json(self.schema_version),
            escape_json(&self.constants_fingerprint),
            escape_json(self.command),
            columns.join(","),
            rows.join(",")
        )
    }
}

/// Single-point correction-factor evaluation.
pub fn run_correction(
    y: f64,
    convention: SignConvention,
    consts: &PhysicalConstants,
) -> Result<OutputRecord> {
    let vars = reduce(y)?;
    let corr = correction_factor(y, convention)?;
    Ok(OutputRecord {
        schema_version: SCHEMA_VERSION,
        constants_fingerprint: consts.fingerprint(),
        command: "correction",
        columns: vec!["y", "x", "z", "G", "convention", "underflowed"],
        rows: vec![vec![
            Cell::Num(vars.y),
            Cell::Num(vars.x),
            Cell::Num(vars.z),
            Cell::Num(corr.value),
            Cell::Text(convention.to_string()),
            Cell::Bool(corr.underflowed),
        ]],
    })
}

/// Correction-factor table (the `y,G` data set behind the transition plot).
pub fn run_figure1(
    y_min: f64,
    y_max: f64,
    points: usize,
    spacing: Spacing,
    consts: &PhysicalConstants,
) -> Result<OutputRecord> {
    let rows = correction_table(y_min, y_max, points, spacing)?;
    Ok(OutputRecord {
        schema_version: SCHEMA_VERSION,
        constants_fingerprint: consts.fingerprint(),
        command: "figure1",
        columns: vec!["y", "G"],
        rows: rows
            .into_iter()
            .map(|(y, g)| vec![Cell::Num(y), Cell::Num(g)])
            .collect(),
    })
}

/// Force between two masses at separation `r`, optionally at finite
/// temperature.
pub fn run_force(
    m1: f64,
    m2: f64,
    r: f64,
    temperature: f64,
    consts: &PhysicalConstants,
) -> Result<OutputRecord> {
    let pair = ParticlePair::new(m1, m2)?;
    let thermal = force_finite_t(&pair, r, temperature, consts)?;
    Ok(OutputRecord {
        schema_version: SCHEMA_VERSION,
        constants_fingerprint: consts.fingerprint(),
        command: "force",
        columns: vec!["F", "G", "y"],
        rows: vec![vec![
            Cell::Num(thermal.force),
            Cell::Num(thermal.correction.value),
            Cell::Num(thermal.y),
        ]],
    })
}

/// Finite-range solution at temperature `T` for the given threshold.
pub fn run_range(
    temperature: f64,
    threshold: f64,
    consts: &PhysicalConstants,
) -> Result<OutputRecord> {
    let sol = gravity_range(temperature, threshold, consts)?;
    Ok(OutputRecord {
        schema_version: SCHEMA_VERSION,
        constants_fingerprint: consts.fingerprint(),
        command: "range",
        columns: vec!["y_star", "r_star", "crossings_found"],
        rows: vec![vec![
            Cell::Num(sol.y_star),
            Cell::Num(sol.r_star),
            Cell::Int(sol.crossings_found as i64),
        ]],
    })
}

#[derive(Parser)]
#[command(
    name = "thermograv",
    version,
    about = "Temperature-corrected dispersion-model gravitation: correction factors, forces, and the finite range of gravity"
)]
struct Cli {
    /// Path to a key=value constants override file (keys: hbar, c,
    /// k_boltzmann, gamma_grav)
    #[arg(long, global = true, value_name = "PATH")]
    constants: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the temperature correction factor at a single point
    Correction(CorrectionArgs),
    /// Emit the correction-factor table G(y) over a range of y
    Figure1(FigureArgs),
    /// Compute the gravitational force between two masses
    Force(ForceArgs),
    /// Solve for the finite range of gravity at a given temperature
    Range(RangeArgs),
    /// Run the built-in verification suite
    Validate(ValidateArgs),
}

#[derive(Args)]
struct OutputArgs {
    /// Output format
    #[arg(long, default_value = "csv", value_parser = ["csv", "json"])]
    format: String,
    /// Write output to this file instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CorrectionArgs {
    /// Reduced variable y = 2πrk_BT/(ħc) (alternative to --r/--T)
    #[arg(long, conflicts_with_all = ["r", "temperature"])]
    y: Option<f64>,
    /// Separation in metres (requires --T)
    #[arg(long, requires = "temperature")]
    r: Option<f64>,
    /// Temperature in kelvin (requires --r)
    #[arg(long = "T", requires = "r")]
    temperature: Option<f64>,
    /// Sign convention for the factor
    #[arg(long, default_value = "ratio", value_parser = ["ratio", "literal"])]
    convention: String,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct FigureArgs {
    /// Lower end of the y range
    #[arg(long, default_value_t = 0.01)]
    ymin: f64,
    /// Upper end of the y range
    #[arg(long, default_value_t = 30.0)]
    ymax: f64,
    /// Number of table rows
    #[arg(long, default_value_t = 300)]
    points: usize,
    /// Node spacing across the range
    #[arg(long, default_value = "log", value_parser = ["linear", "log"])]
    spacing: String,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct ForceArgs {
    /// First mass in kilograms
    #[arg(long)]
    m1: f64,
    /// Second mass in kilograms
    #[arg(long)]
    m2: f64,
    /// Separation in metres
    #[arg(long)]
    r: f64,
    /// Temperature in kelvin (0 = pure Newtonian limit)
    #[arg(long = "T", default_value_t = 0.0)]
    temperature: f64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct RangeArgs {
    /// Temperature in kelvin
    #[arg(long = "T")]
    temperature: f64,
    /// Correction-factor threshold defining the cut-off distance (0, 1)
    #[arg(long)]
    threshold: f64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct ValidateArgs {
    /// Thin the verification grids for a faster pass (same tolerances)
    #[arg(long)]
    quick: bool,
}

fn usage_error(msg: &str) -> i32 {
    eprintln!("error: {msg}");
    eprintln!();
    eprintln!("For more information, try '--help'.");
    EXIT_USAGE
}

fn failure(err: &dyn std::fmt::Display) -> i32 {
    eprintln!("error: {err}");
    EXIT_FAILURE
}

fn emit(record: &OutputRecord, output: &OutputArgs) -> i32 {
    let text = match output.format.as_str() {
        "json" => record.to_json(),
        _ => record.to_csv(),
    };
    match &output.out {
        Some(path) => match std::fs::write(path, text) {
            Ok(()) => EXIT_OK,
            Err(e) => failure(&format!("cannot write {}: {e}", path.display())),
        },
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            match lock.write_all(text.as_bytes()) {
                Ok(()) => EXIT_OK,
                Err(e) => failure(&e),
            }
        }
    }
}

fn positive_finite(value: f64, what: &str) -> std::result::Result<(), String> {
    if value <= 0.0 || !value.is_finite() {
        Err(format!("{what} must be positive and finite, got {value}"))
    } else {
        Ok(())
    }
}

/// Parses `std::env::args`, runs the selected command, and returns the
/// process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };

    let consts = match &cli.constants {
        Some(path) => match PhysicalConstants::from_file(path) {
            Ok(c) => c,
            Err(e) => return failure(&e),
        },
        None => PhysicalConstants::default(),
    };

    match cli.command {
        Command::Correction(args) => {
            let convention: SignConvention = match args.convention.parse() {
                Ok(c) => c,
                Err(e) => return usage_error(&e.to_string()),
            };
            let y = match (args.y, args.r, args.temperature) {
                (Some(y), None, None) => {
                    if let Err(msg) = positive_finite(y, "--y") {
                        return usage_error(&msg);
                    }
                    y
                }
                (None, Some(r), Some(t)) => {
                    if let Err(msg) =
                        positive_finite(r, "--r").and_then(|_| positive_finite(t, "--T"))
                    {
                        return usage_error(&msg);
                    }
                    match reduced_y(r, t, &consts) {
                        Ok(y) => y,
                        Err(e) => return failure(&e),
                    }
                }
                _ => {
                    return usage_error(
                        "provide either --y or both --r and --T to locate the evaluation point",
                    )
                }
            };
            match run_correction(y, convention, &consts) {
                Ok(record) => emit(&record, &args.output),
                Err(e) => failure(&e),
            }
        }
        Command::Figure1(args) => {
            if args.ymin <= 0.0 || !args.ymin.is_finite() || !args.ymax.is_finite() {
                return usage_error(&format!(
                    "--ymin/--ymax must be positive and finite, got [{}, {}]",
                    args.ymin, args.ymax
                ));
            }
            if args.ymin >= args.ymax {
                return usage_error(&format!(
                    "--ymin must be below --ymax, got [{}, {}]",
                    args.ymin, args.ymax
                ));
            }
            if args.points < 2 {
                return usage_error(&format!("--points must be at least 2, got {}", args.points));
            }
            let spacing: Spacing = match args.spacing.parse() {
                Ok(s) => s,
                Err(e) => return usage_error(&e.to_string()),
            };
            match run_figure1(args.ymin, args.ymax, args.points, spacing, &consts) {
                Ok(record) => emit(&record, &args.output),
                Err(e) => failure(&e),
            }
        }
        Command::Force(args) => {
            for (value, what) in [(args.m1, "--m1"), (args.m2, "--m2"), (args.r, "--r")] {
                if let Err(msg) = positive_finite(value, what) {
                    return usage_error(&msg);
                }
            }
            if args.temperature < 0.0 || !args.temperature.is_finite() {
                return usage_error(&format!(
                    "--T must be non-negative and finite, got {}",
                    args.temperature
                ));
            }
            match run_force(args.m1, args.m2, args.r, args.temperature, &consts) {
                Ok(record) => emit(&record, &args.output),
                Err(e) => failure(&e),
            }
        }
        Command::Range(args) => {
            if let Err(msg) = positive_finite(args.temperature, "--T") {
                return usage_error(&msg);
            }
            if !(args.threshold > 0.0 && args.threshold < 1.0) {
                return usage_error(&format!(
                    "--threshold must lie strictly between 0 and 1, got {}",
                    args.threshold
                ));
            }
            match run_range(args.temperature, args.threshold, &consts) {
                Ok(record) => emit(&record, &args.output),
                Err(e) => failure(&e),
            }
        }
        Command::Validate(args) => {
            let reports = run_all(args.quick);
            let mut all_passed = true;
            for report in &reports {
                println!("{report}");
                all_passed &= report.passed;
            }
            if all_passed {
                println!("validate: {} checks passed", reports.len());
                EXIT_OK
            } else {
                let failed = reports.iter().filter(|r| !r.passed).count();
                println!("validate: {failed} of {} checks FAILED", reports.len());
                EXIT_FAILURE
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn defaults() -> PhysicalConstants {
        PhysicalConstants::default()
    }

    #[test]
    fn number_formatting_uses_12_significant_digits() {
        assert_eq!(fmt_num(0.71332143552482421), "7.13321435525e-1");
        assert_eq!(fmt_num(-6.6743e-11), "-6.67430000000e-11");
        assert_eq!(fmt_num(1.0), "1.00000000000e0");
        assert_eq!(fmt_num(0.0), "0.00000000000e0");
    }

    #[test]
    fn correction_record_layout() {
        let record = run_correction(1.0, SignConvention::Ratio, &defaults()).unwrap();
        assert_eq!(record.command, "correction");
        assert_eq!(
            record.columns,
            vec!["y", "x", "z", "G", "convention", "underflowed"]
        );
        assert_eq!(record.rows.len(), 1);
        let csv = record.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), "y,x,z,G,convention,underflowed");
        let row = lines.next().unwrap();
        assert!(row.starts_with("1.00000000000e0,"));
        assert!(row.contains("7.13321435525e-1"));
        assert!(row.ends_with("ratio,false"));
    }

    #[test]
    fn figure_record_header_is_y_comma_g() {
        let record = run_figure1(0.01, 30.0, 4, Spacing::Log, &defaults()).unwrap();
        let csv = record.to_csv();
        assert!(csv.starts_with("y,G\n"));
        assert_eq!(csv.lines().count(), 5);
        assert!(!csv.contains('\r'));
        assert!(csv.ends_with('\n'));
    }

    #[test]
    fn force_record_newton_point() {
        let record = run_force(1.0, 1.0, 1.0, 0.0, &defaults()).unwrap();
        let csv = record.to_csv();
        assert!(csv.starts_with("F,G,y\n"));
        assert!(csv.contains("-6.67430000000e-11"));
        assert!(csv.contains("1.00000000000e0"));
    }

    #[test]
    fn range_record_layout() {
        let record = run_range(2.7, 0.5, &defaults()).unwrap();
        assert_eq!(record.columns, vec!["y_star", "r_star", "crossings_found"]);
        let csv = record.to_csv();
        let row = csv.lines().nth(1).unwrap();
        assert!(row.ends_with(",1"));
        let y_star: f64 = row.split(',').next().unwrap().parse().unwrap();
        assert_relative_eq!(y_star, 4.8407061025754504, max_relative = 1e-9);
    }

    #[test]
    fn json_output_is_wellformed_and_tagged() {
        let record = run_figure1(1.0, 2.0, 2, Spacing::Linear, &defaults()).unwrap();
        let json = record.to_json();
        assert!(json.starts_with("{\"schema_version\":\"1\",\"constants_fingerprint\":\""));
        assert!(json.contains("\"command\":\"figure1\""));
        assert!(json.contains("\"columns\":[\"y\",\"G\"]"));
        assert!(json.contains("\"rows\":[[1.00000000000e0,"));
        assert!(json.ends_with("]}\n"));
        // balanced braces/brackets as a cheap well-formedness probe
        assert_eq!(json.matches('[').count(), json.matches(']').count());
        assert_eq!(json.matches('{').count(), json.matches('}').count());
    }

    #[test]
    fn emission_is_deterministic() {
        let a = run_figure1(0.01, 30.0, 50, Spacing::Log, &defaults()).unwrap();
        let b = run_figure1(0.01, 30.0, 50, Spacing::Log, &defaults()).unwrap();
        assert_eq!(a.to_csv(), b.to_csv());
        assert_eq!(a.to_json(), b.to_json());
    }

    #[test]
    fn fingerprint_tracks_constants() {
        let base = run_correction(1.0, SignConvention::Ratio, &defaults()).unwrap();
        let altered = PhysicalConstants::new(1.0, 2.0, 3.0, 4.0).unwrap();
        let other = run_correction(1.0, SignConvention::Ratio, &altered).unwrap();
        assert_ne!(base.constants_fingerprint, other.constants_fingerprint);
        // G itself is independent of the constants when y is given directly
        assert_eq!(base.rows[0][3], other.rows[0][3]);
    }

    #[test]
    fn csv_special_characters_are_quoted() {
        let cell = Cell::Text("a,b\"c".to_string());
        assert_eq!(cell.to_csv_field(), "\"a,b\"\"c\"");
    }
}
