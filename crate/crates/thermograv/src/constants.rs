//! Physical constants and the reduction from physical `(r, T)` to the
//! dimensionless variable `y`.
//!
//! Everything unit-bearing in the crate flows through [`PhysicalConstants`].
//! Defaults are CODATA 2018 values in SI units; each one can be overridden
//! from a `key = value` config file (see [`PhysicalConstants::from_file`]),
//! and every override must stay strictly positive.
//!
//! The dimensionless variable
//!
//! ```text
//! y = 2π r k_B T / (ħ c)
//! ```
//!
//! is the only combination in which distance and temperature enter the
//! temperature correction factor. [`thermal_length`] is its inversion at
//! `y = 1`: the distance scale at which thermal effects on the force become
//! order one.

use crate::error::{Error, Result};

/// Fundamental constants in SI units.
///
/// Immutable after construction; share freely across threads.
#[derive(Debug, Clone, PartialEq)]
pub struct PhysicalConstants {
    /// Reduced Planck constant ħ (J·s).
    pub hbar: f64,
    /// Speed of light c (m/s).
    pub c: f64,
    /// Boltzmann constant k_B (J/K).
    pub k_boltzmann: f64,
    /// Gravitational constant γ (m³·kg⁻¹·s⁻²).
    pub gamma_grav: f64,
}

impl Default for PhysicalConstants {
    /// CODATA 2018 values.
    fn default() -> Self {
        PhysicalConstants {
            hbar: 1.054_571_817e-34,
            c: 299_792_458.0,
            k_boltzmann: 1.380_649e-23,
            gamma_grav: 6.674_30e-11,
        }
    }
}

impl PhysicalConstants {
    /// Builds a validated set of constants. All four must be strictly
    /// positive and finite.
    pub fn new(hbar: f64, c: f64, k_boltzmann: f64, gamma_grav: f64) -> Result<Self> {
        let consts = PhysicalConstants {
            hbar,
            c,
            k_boltzmann,
            gamma_grav,
        };
        consts.validate()?;
        Ok(consts)
    }

    fn validate(&self) -> Result<()> {
        for (name, value) in [
            ("hbar", self.hbar),
            ("c", self.c),
            ("k_boltzmann", self.k_boltzmann),
            ("gamma_grav", self.gamma_grav),
        ] {
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::Config(format!(
                    "constant {name} must be strictly positive and finite, got {value}"
                )));
            }
        }
        Ok(())
    }

    /// Parses `key = value` overrides from a string. Keys: `hbar`, `c`,
    /// `k_boltzmann`, `gamma_grav`. Blank lines and `#` comments are
    /// ignored; unknown keys and non-positive values are rejected. Keys not
    /// mentioned keep their defaults.
    pub fn from_config_str(text: &str) -> Result<Self> {
        let mut consts = PhysicalConstants::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::Config(format!(
                    "line {}: expected `key = value`, got `{raw}`",
                    lineno + 1
                ))
            })?;
            let value: f64 = value.trim().parse().map_err(|_| {
                Error::Config(format!(
                    "line {}: cannot parse `{}` as a number",
                    lineno + 1,
                    value.trim()
                ))
            })?;
            match key.trim() {
                "hbar" => consts.hbar = value,
                "c" => consts.c = value,
                "k_boltzmann" => consts.k_boltzmann = value,
                "gamma_grav" => consts.gamma_grav = value,
                other => return Err(Error::Config(format!(
                    "line {}: unknown key `{other}` (expected hbar, c, k_boltzmann, gamma_grav)",
                    lineno + 1
                ))),
            }
        }
        consts.validate()?;
        Ok(consts)
    }

    /// Reads overrides from a config file.
    pub fn from_file(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_config_str(&text)
    }

    /// Hex fingerprint of the exact bit patterns of the four constants.
    /// Two constant sets produce the same fingerprint iff they are
    /// bit-identical.
    pub fn fingerprint(&self) -> String {
        format!(
            "{:016x}{:016x}{:016x}{:016x}",
            self.hbar.to_bits(),
            self.c.to_bits(),
            self.k_boltzmann.to_bits(),
            self.gamma_grav.to_bits()
        )
    }

    /// The coefficient `2π k_B / (ħ c)` so that `y = coefficient · (r·T)`.
    pub(crate) fn y_coefficient(&self) -> f64 {
        std::f64::consts::TAU * self.k_boltzmann / (self.hbar * self.c)
    }
}

/// Dimensionless `y = 2π r k_B T / (ħ c)`.
///
/// Zero iff `r = 0` or `T = 0`. The product `r·T` is formed first, so the
/// result is invariant under `(r, T) → (κr, T/κ)` whenever the scaled pair
/// is exactly representable.
pub fn reduced_y(r: f64, temperature: f64, consts: &PhysicalConstants) -> Result<f64> {
    if !r.is_finite() || r < 0.0 {
        return Err(Error::Domain(format!("distance r must be >= 0, got {r}")));
    }
    if !temperature.is_finite() || temperature < 0.0 {
        return Err(Error::Domain(format!(
            "temperature must be >= 0, got {temperature}"
        )));
    }
    Ok(consts.y_coefficient() * (r * temperature))
}

/// The distance at which `y = 1` for temperature `T`: `ħ c / (2π k_B T)`.
pub fn thermal_length(temperature: f64, consts: &PhysicalConstants) -> Result<f64> {
    if !temperature.is_finite() || temperature <= 0.0 {
        return Err(Error::Domain(format!(
            "temperature must be > 0, got {temperature}"
        )));
    }
    // Single division by T keeps halving T an exact doubling of the length.
    Ok(consts.hbar * consts.c / (std::f64::consts::TAU * consts.k_boltzmann) / temperature)
}

/// Divides a background temperature by an expansion factor.
pub fn scaled_temperature(t0: f64, scale: f64) -> Result<f64> {
    if !t0.is_finite() || t0 <= 0.0 {
        return Err(Error::Domain(format!("temperature must be > 0, got {t0}")));
    }
    if !scale.is_finite() || scale <= 0.0 {
        return Err(Error::Domain(format!("scale must be > 0, got {scale}")));
    }
    Ok(t0 / scale)
}
