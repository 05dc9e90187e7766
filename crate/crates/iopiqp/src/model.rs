//! Physical problem definition: molecule constants, field parameters, the
//! effective radial potential, the working-unit convention that reproduces
//! the published reference tables, and the adapter into the parametric engine.

use crate::error::{Error, Result};
use crate::nu::NuCoefficients;

/// 1 a.m.u in kg.
pub const AMU_KG: f64 = 1.66e-27;
/// Tabulated vibrational frequencies are in units of 10¹³ s⁻¹.
pub const OMEGA_UNIT: f64 = 1e13;
/// Speed of light, m/s.
pub const SPEED_OF_LIGHT: f64 = 3.00e8;
/// Avogadro number.
pub const AVOGADRO: f64 = 6.02e23;

/// One row of the molecular-constants table.
#[derive(Debug, Clone, PartialEq)]
pub struct MoleculeConstants {
    pub name: String,
    /// vibrational frequency, units of 10¹³ s⁻¹
    pub omega: f64,
    /// reduced mass, a.m.u
    pub mass: f64,
}

impl MoleculeConstants {
    pub fn new(name: impl Into<String>, omega: f64, mass: f64) -> Result<Self> {
        let name = name.into();
        if name.is_empty() {
            return Err(Error::Domain("molecule name must be non-empty".into()));
        }
        if !(omega > 0.0) || !(mass > 0.0) {
            return Err(Error::Domain(format!(
                "molecule {name}: omega and mass must be positive (omega={omega}, mass={mass})"
            )));
        }
        Ok(Self { name, omega, mass })
    }
}

/// The four molecules of the reference dataset.
pub fn builtin_molecules() -> Vec<MoleculeConstants> {
    [
        ("CO", 6.471, 6.8606719),
        ("HCl", 8.814, 0.9801045),
        ("I2", 0.642, 63.45223502),
        ("H2", 12.960, 0.50391),
    ]
    .into_iter()
    .map(|(n, w, m)| MoleculeConstants::new(n, w, m).expect("builtin constants are valid"))
    .collect()
}

/// External field and potential-strength parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldParams {
    /// Larmor frequency ω_L ≥ 0 (working units)
    pub omega_l: f64,
    /// inverse-quadratic strength g ≥ 0
    pub g: f64,
}

impl FieldParams {
    pub fn new(omega_l: f64, g: f64) -> Result<Self> {
        if omega_l < 0.0 || g < 0.0 {
            return Err(Error::Domain(format!(
                "field parameters must be non-negative (omega_l={omega_l}, g={g})"
            )));
        }
        Ok(Self { omega_l, g })
    }

    pub const fn free() -> Self {
        Self { omega_l: 0.0, g: 0.0 }
    }
}

/// Vibrational level n ≥ 0 and magnetic quantum number m (any integer; every
/// formula is even in m except the m·ω_L shift).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuantumNumbers {
    pub n: u32,
    pub m: i32,
}

impl QuantumNumbers {
    pub const fn new(n: u32, m: i32) -> Self {
        Self { n, m }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnitsMode {
    /// μ in kg, ω in s⁻¹, ω_L as dimensionless literals; reproduces the
    /// reference tables exactly.
    Paper,
    /// μ ≡ 1 and ω ≡ Ω supplied directly, so μω² = Ω²; used by the
    /// finite-difference oracle where the paper-unit magnitudes would
    /// destroy conditioning.
    Dimensionless,
}

/// Numeric mass and frequency values substituted into every formula.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WorkingUnits {
    pub mu_eff: f64,
    pub omega_eff: f64,
    pub mode: UnitsMode,
}

impl WorkingUnits {
    /// Paper-unit convention: μ in kg, ω in s⁻¹.
    pub fn paper(mol: &MoleculeConstants) -> Self {
        Self {
            mu_eff: mol.mass * AMU_KG,
            omega_eff: mol.omega * OMEGA_UNIT,
            mode: UnitsMode::Paper,
        }
    }

    /// Dimensionless convention with the confinement frequency Ω given directly.
    pub fn dimensionless(big_omega: f64) -> Self {
        Self {
            mu_eff: 1.0,
            omega_eff: big_omega,
            mode: UnitsMode::Dimensionless,
        }
    }

    /// μω²
    pub fn mu_omega_sq(&self) -> f64 {
        self.mu_eff * self.omega_eff * self.omega_eff
    }

    /// γ = √(ω_L² + μω²), the confinement frequency under field.
    pub fn gamma(&self, f: &FieldParams) -> f64 {
        (f.omega_l * f.omega_l + self.mu_omega_sq()).sqrt()
    }
}

/// Working-unit values for a molecule (paper mode).
pub fn working_units(mol: &MoleculeConstants) -> WorkingUnits {
    WorkingUnits::paper(mol)
}

/// Effective radial potential:
/// m·ω_L + [(m²−1/4)/2 + g]/r² + (ω_L² + μω²)·r²/2.
pub fn effective_potential(r: f64, u: &WorkingUnits, f: &FieldParams, m: i32) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::Domain(format!("effective_potential requires r > 0, got {r}")));
    }
    let mf = f64::from(m);
    let inv_sq = (mf * mf - 0.25) / 2.0 + f.g;
    Ok(mf * f.omega_l + inv_sq / (r * r) + 0.5 * (f.omega_l * f.omega_l + u.mu_omega_sq()) * r * r)
}

/// Map the radial problem at trial energy `e` onto engine coefficients.
///
/// The z² / z / constant numerator terms land in `rho2` / `rho1` / `rho0`
/// respectively (the engine's canonical ordering).
pub fn to_nu_coefficients(u: &WorkingUnits, f: &FieldParams, m: i32, e: f64) -> NuCoefficients {
    let mf = f64::from(m);
    NuCoefficients {
        beta1: 0.5,
        beta2: 0.0,
        beta3: 0.0,
        rho2: (f.omega_l * f.omega_l + u.mu_omega_sq()) / 4.0,
        rho1: (e - mf * f.omega_l) / 2.0,
        rho0: (mf * mf + 2.0 * f.g - 0.25) / 4.0,
    }
}

/// Parse a molecule constants table: header `name,omega_1e13_s,mass_amu`,
/// one molecule per row.
pub fn parse_molecules(text: &str) -> Result<Vec<MoleculeConstants>> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or_else(|| Error::Parse {
        line: 1,
        column: 1,
        message: "empty input, expected header name,omega_1e13_s,mass_amu".into(),
    })?;
    if header.trim() != "name,omega_1e13_s,mass_amu" {
        return Err(Error::Parse {
            line: 1,
            column: 1,
            message: format!("bad header {header:?}, expected name,omega_1e13_s,mass_amu"),
        });
    }
    let mut out = Vec::new();
    for (idx, raw) in lines {
        let line_no = idx + 1;
        if raw.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = raw.split(',').collect();
        if fields.len() != 3 {
            return Err(Error::Parse {
                line: line_no,
                column: raw.len(),
                message: format!("expected 3 comma-separated fields, found {}", fields.len()),
            });
        }
        let column_of = |i: usize| {
            fields[..i].iter().map(|f| f.len() + 1).sum::<usize>() + 1
        };
        let name = fields[0].trim();
        if name.is_empty() {
            return Err(Error::Parse {
                line: line_no,
                column: 1,
                message: "empty molecule name".into(),
            });
        }
        let omega: f64 = fields[1].trim().parse().map_err(|_| Error::Parse {
            line: line_no,
            column: column_of(1),
            message: format!("cannot parse omega value {:?}", fields[1].trim()),
        })?;
        let mass: f64 = fields[2].trim().parse().map_err(|_| Error::Parse {
            line: line_no,
            column: column_of(2),
            message: format!("cannot parse mass value {:?}", fields[2].trim()),
        })?;
        out.push(MoleculeConstants::new(name, omega, mass).map_err(|e| Error::Parse {
            line: line_no,
            column: 1,
            message: e.to_string(),
        })?);
    }
    Ok(out)
}
