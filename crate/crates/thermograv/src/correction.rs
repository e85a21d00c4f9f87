//! The analytic temperature correction factor `G(y)`.
//!
//! Performing the frequency summation in closed form turns the reduced
//! Matsubara sum into
//!
//! ```text
//! G_literal(y) = (16/25)·x·[ −12z² + 29z³(1+x) − (61/2)z⁴(1+4x+x²)
//!                + 15z⁵(1+11x+11x²+x³) − 3z⁶(1+26x+66x²+26x³+x⁴) ]
//! ```
//!
//! with `x = exp(−2y)` and `z = y/(1−x)`. The bracket couples the force
//! kernel coefficients to the power-moment numerator polynomials: term `k`
//! is `q_k·z^(k+1)·A_k(x)`.
//!
//! Two conventions coexist. *Literal* evaluates the expression exactly as
//! written above (negative-valued, → −1 as y → 0⁺). *Ratio* — the default —
//! returns its negation, matching the defining quotient
//! `G = F(r,T)/F(r,0)` which is +1 at zero temperature. The sign flip is
//! deliberate: the printed closed form and its own definition disagree by
//! an overall sign, and the definition wins.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::kernels::force_kernel;
use crate::series::{eulerian_numerator, CompensatedSum};

/// Below this `y` the bracket terms are summed smallest-first with
/// compensated accumulation (they cancel from O(11) down to O(1.5)).
pub const Y_SWITCH: f64 = 1e-3;

/// At and beyond this `y` the closed form underflows double precision;
/// the factor is reported as an exact zero with `underflowed` set.
pub const Y_UNDERFLOW: f64 = 350.0;

/// Reduced variables entering the closed form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReducedVariables {
    /// Reduced temperature-distance variable `2πrk_BT/(ħc)`.
    pub y: f64,
    /// Boltzmann-type damping `x = exp(−2y)`, in (0, 1).
    pub x: f64,
    /// `z = y/(1−x)`, always above its `y → 0⁺` limit of 1/2.
    pub z: f64,
}

/// Which sign the returned factor carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SignConvention {
    /// The closed-form expression exactly as written (negative).
    Literal,
    /// Its negation, matching the defining force quotient (positive).
    #[default]
    Ratio,
}

/// Which evaluation path produced the value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalMethod {
    ClosedForm,
    SmallYGuard,
}

/// A correction-factor evaluation together with its provenance flags.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrectionResult {
    pub value: f64,
    pub convention: SignConvention,
    /// True when `y ≥ 350` forced the value to an exact zero.
    pub underflowed: bool,
    pub method: EvalMethod,
}

impl fmt::Display for SignConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SignConvention::Literal => write!(f, "literal"),
            SignConvention::Ratio => write!(f, "ratio"),
        }
    }
}

impl FromStr for SignConvention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "literal" => Ok(SignConvention::Literal),
            "ratio" => Ok(SignConvention::Ratio),
            other => Err(Error::Domain(format!(
                "unknown sign convention {other:?} (expected \"literal\" or \"ratio\")"
            ))),
        }
    }
}

/// Grid spacing for [`correction_table`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Spacing {
    Linear,
    #[default]
    Log,
}

impl fmt::Display for Spacing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Spacing::Linear => write!(f, "linear"),
            Spacing::Log => write!(f, "log"),
        }
    }
}

impl FromStr for Spacing {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "linear" => Ok(Spacing::Linear),
            "log" => Ok(Spacing::Log),
            other => Err(Error::Domain(format!(
                "unknown spacing {other:?} (expected \"linear\" or \"log\")"
            ))),
        }
    }
}

/// Maps `y` to the reduced variables `(y, x, z)`.
///
/// `1 − x` is always obtained through the expm1 path, so `z` stays fully
/// accurate even when `x` is within a few ulp of 1.
pub fn reduce(y: f64) -> Result<ReducedVariables> {
    if y <= 0.0 || !y.is_finite() {
        return Err(Error::Domain(format!(
            "reduced temperature-distance variable must be positive and finite, got {y}"
        )));
    }
    let x = (-2.0 * y).exp();
    let one_minus_x = -(-2.0 * y).exp_m1();
    Ok(ReducedVariables {
        y,
        x,
        z: y / one_minus_x,
    })
}

/// Evaluates the temperature correction factor at reduced variable `y`.
pub fn correction_factor(y: f64, convention: SignConvention) -> Result<CorrectionResult> {
    let vars = reduce(y)?;
    if y >= Y_UNDERFLOW {
        // exp(−2y) underflows to zero a little past this point; report an
        // honest zero instead of a denormal artifact.
        return Ok(CorrectionResult {
            value: match convention {
                SignConvention::Literal => -0.0,
                SignConvention::Ratio => 0.0,
            },
            convention,
            underflowed: true,
            method: EvalMethod::ClosedForm,
        });
    }

    let method = if y <= Y_SWITCH {
        EvalMethod::SmallYGuard
    } else {
        EvalMethod::ClosedForm
    };
    let literal = literal_closed_form(&vars, method);
    Ok(CorrectionResult {
        value: match convention {
            SignConvention::Literal => literal,
            SignConvention::Ratio => -literal,
        },
        convention,
        underflowed: false,
        method,
    })
}

/// The bracket of the closed form, assembled term by term from the force
/// kernel coefficients and the moment numerator polynomials.
fn literal_closed_form(vars: &ReducedVariables, method: EvalMethod) -> f64 {
    let q = force_kernel().coefficients_f64();
    let mut terms = [0.0f64; 5];
    for k in 1..=5usize {
        let numerator: f64 = eulerian_numerator(k as u32)
            .expect("row index is within the guard")
            .iter()
            .rev()
            .fold(0.0, |acc, &c| acc * vars.x + c as f64);
        terms[k - 1] = q[k] * vars.z.powi(k as i32 + 1) * numerator;
    }
    if method == EvalMethod::SmallYGuard {
        // The five terms cancel by an order of magnitude; adding them
        // smallest-first under compensation keeps the full double width.
        terms.sort_by(|a, b| a.abs().total_cmp(&b.abs()));
    }
    let mut bracket = CompensatedSum::new();
    for t in terms {
        bracket.add(t);
    }
    crate::series::MOMENT_PREFACTOR * vars.x * bracket.value()
}

/// Tabulates the ratio-convention factor on `points` nodes spanning
/// `[y_min, y_max]` at the requested spacing.
pub fn correction_table(
    y_min: f64,
    y_max: f64,
    points: usize,
    spacing: Spacing,
) -> Result<Vec<(f64, f64)>> {
    if y_min <= 0.0 || !y_min.is_finite() || !y_max.is_finite() {
        return Err(Error::Domain(format!(
            "table range endpoints must be positive and finite, got [{y_min}, {y_max}]"
        )));
    }
    if y_min >= y_max {
        return Err(Error::Domain(format!(
            "table range must satisfy y_min < y_max, got [{y_min}, {y_max}]"
        )));
    }
    if points < 2 {
        return Err(Error::Domain(format!(
            "table needs at least 2 points, got {points}"
        )));
    }

    let mut rows = Vec::with_capacity(points);
    let last = points - 1;
    for i in 0..points {
        let y = if i == 0 {
            y_min
        } else if i == last {
            y_max
        } else {
            let frac = i as f64 / last as f64;
            match spacing {
                Spacing::Linear => y_min + frac * (y_max - y_min),
                Spacing::Log => (y_min.ln() + frac * (y_max.ln() - y_min.ln())).exp(),
            }
        };
        rows.push((y, correction_factor(y, SignConvention::Ratio)?.value));
    }
    Ok(rows)
}
