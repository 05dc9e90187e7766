//! Closed-form spectrum, expectation values, diamagnetic susceptibility and
//! magnetic moment, plus a finite-difference self-check of the derivative
//! identity behind the expectation values.
//!
//! The ⟨p²⟩ and ⟨T⟩ forms are negative as published; they are reproduced
//! verbatim here (the reference tables confirm the signs), while the
//! finite-difference oracle reports the physically positive kinetic energy
//! under a separate name.

use crate::error::{Error, Result};
use crate::model::{FieldParams, QuantumNumbers, WorkingUnits, AVOGADRO, SPEED_OF_LIGHT};

/// 2n + 1 + √(m² + 2g), the level factor shared by every closed form.
fn level_factor(q: QuantumNumbers, f: &FieldParams) -> f64 {
    let mf = f64::from(q.m);
    2.0 * f64::from(q.n) + 1.0 + (mf * mf + 2.0 * f.g).sqrt()
}

/// E = m·ω_L + γ·(2n + 1 + √(m² + 2g))
pub fn energy(q: QuantumNumbers, u: &WorkingUnits, f: &FieldParams) -> f64 {
    f64::from(q.m) * f.omega_l + u.gamma(f) * level_factor(q, f)
}

/// ⟨r²⟩ = (2n + 1 + √(m² + 2g)) / γ
pub fn expectation_r2(q: QuantumNumbers, u: &WorkingUnits, f: &FieldParams) -> f64 {
    level_factor(q, f) / u.gamma(f)
}

/// ⟨p²⟩ = −μ²ω²·(2n + 1 + √(m² + 2g)) / γ (sign as published)
pub fn expectation_p2(q: QuantumNumbers, u: &WorkingUnits, f: &FieldParams) -> f64 {
    -u.mu_eff * u.mu_eff * u.omega_eff * u.omega_eff * level_factor(q, f) / u.gamma(f)
}

/// ⟨T⟩ = −μω²·(2n + 1 + √(m² + 2g)) / (2γ) (sign as published)
pub fn expectation_t(q: QuantumNumbers, u: &WorkingUnits, f: &FieldParams) -> f64 {
    -u.mu_omega_sq() * level_factor(q, f) / (2.0 * u.gamma(f))
}

/// ⟨V⟩ = m·ω_L + γ·(2n+1+√(m²+2g)) + μω²·(2n+1+√(m²+2g)) / (2γ)
pub fn expectation_v(q: QuantumNumbers, u: &WorkingUnits, f: &FieldParams) -> f64 {
    let lf = level_factor(q, f);
    f64::from(q.m) * f.omega_l + u.gamma(f) * lf + u.mu_omega_sq() * lf / (2.0 * u.gamma(f))
}

/// Constants entering the susceptibility prefactor. The reference tables use
/// z = e = 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SusceptibilityConstants {
    pub avogadro: f64,
    pub z: f64,
    pub e: f64,
    pub c: f64,
}

impl Default for SusceptibilityConstants {
    fn default() -> Self {
        Self {
            avogadro: AVOGADRO,
            z: 1.0,
            e: 1.0,
            c: SPEED_OF_LIGHT,
        }
    }
}

/// χ = −N·z·e²/(6μc²) · ⟨r²⟩; always negative.
pub fn susceptibility(
    q: QuantumNumbers,
    u: &WorkingUnits,
    f: &FieldParams,
    k: &SusceptibilityConstants,
) -> f64 {
    -(k.avogadro * k.z * k.e * k.e) / (6.0 * u.mu_eff * k.c * k.c) * expectation_r2(q, u, f)
}

/// μ_B = −2e²ω_L/(6μc) · (2n + 1 + √(m² + 2g)) / γ; zero at zero field.
pub fn magnetic_moment(
    q: QuantumNumbers,
    u: &WorkingUnits,
    f: &FieldParams,
    k: &SusceptibilityConstants,
) -> f64 {
    -(2.0 * k.e * k.e * f.omega_l) / (6.0 * u.mu_eff * k.c) * level_factor(q, f) / u.gamma(f)
}

/// Everything the sweep reports for one lattice point.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumRecord {
    pub molecule: String,
    pub q: QuantumNumbers,
    pub f: FieldParams,
    pub e: f64,
    pub r2: f64,
    pub p2: f64,
    pub t: f64,
    pub v: f64,
    pub chi: f64,
    pub mu_b: f64,
}

/// Evaluate the full record at one lattice point.
pub fn spectrum_record(
    molecule: &str,
    q: QuantumNumbers,
    u: &WorkingUnits,
    f: &FieldParams,
    k: &SusceptibilityConstants,
) -> SpectrumRecord {
    SpectrumRecord {
        molecule: molecule.to_string(),
        q,
        f: *f,
        e: energy(q, u, f),
        r2: expectation_r2(q, u, f),
        p2: expectation_p2(q, u, f),
        t: expectation_t(q, u, f),
        v: expectation_v(q, u, f),
        chi: susceptibility(q, u, f, k),
        mu_b: magnetic_moment(q, u, f, k),
    }
}

/// Both sides of the derivative identity ∂E/∂ω = μω⟨r²⟩ and their relative error.
#[derive(Debug, Clone, Copy)]
pub struct HftReport {
    /// (E(ω+h) − E(ω−h)) / (2h·μω)
    pub lhs: f64,
    /// ⟨r²⟩ from the closed form
    pub rhs: f64,
    pub rel_err: f64,
}

/// Central finite difference of E with respect to ω at fixed μ, divided by μω,
/// compared against the closed-form ⟨r²⟩.
pub fn hft_check(q: QuantumNumbers, u: &WorkingUnits, f: &FieldParams, h: f64) -> Result<HftReport> {
    if !(h > 0.0) {
        return Err(Error::Domain(format!("hft_check requires h > 0, got {h}")));
    }
    let omega = u.omega_eff;
    if omega + h == omega || omega - h == omega {
        return Err(Error::DegenerateStep(h));
    }
    let at = |w: f64| {
        let shifted = WorkingUnits {
            mu_eff: u.mu_eff,
            omega_eff: w,
            mode: u.mode,
        };
        energy(q, &shifted, f)
    };
    let de_domega = (at(omega + h) - at(omega - h)) / (2.0 * h);
    let lhs = de_domega / (u.mu_eff * omega);
    let rhs = expectation_r2(q, u, f);
    Ok(HftReport {
        lhs,
        rhs,
        rel_err: ((lhs - rhs) / rhs).abs(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{builtin_molecules, working_units, MoleculeConstants};

    fn molecule(name: &str) -> MoleculeConstants {
        builtin_molecules()
            .into_iter()
            .find(|m| m.name == name)
            .unwrap()
    }

    fn paper(name: &str) -> WorkingUnits {
        working_units(&molecule(name))
    }

    #[test]
    fn energy_reference_points() {
        let co = paper("CO");
        let e0 = energy(QuantumNumbers::new(0, 0), &co, &FieldParams::free());
        assert!((e0 - 6.90572).abs() < 5e-6 * e0);
        let e1 = energy(
            QuantumNumbers::new(0, 1),
            &co,
            &FieldParams::new(5.0, 0.0).unwrap(),
        );
        assert!((e1 - 22.0516).abs() < 5e-5);
        let hcl = paper("HCl");
        let e2 = energy(
            QuantumNumbers::new(3, 1),
            &hcl,
            &FieldParams::new(10.0, 1.0).unwrap(),
        );
        assert!((e2 - 102.675).abs() < 5e-3);
    }

    #[test]
    fn energy_odd_harmonic_ladder() {
        let u = paper("I2");
        let f = FieldParams::free();
        let e0 = energy(QuantumNumbers::new(0, 0), &u, &f);
        for n in 1..6u32 {
            let en = energy(QuantumNumbers::new(n, 0), &u, &f);
            let ratio = en / e0;
            let expect = f64::from(2 * n + 1);
            assert!((ratio - expect).abs() < 1e-12 * expect);
        }
    }

    #[test]
    fn expectation_reference_points() {
        let f0 = FieldParams::new(0.0, 1.0).unwrap();
        let f10 = FieldParams::new(10.0, 1.0).unwrap();
        let q0 = QuantumNumbers::new(0, 1);
        let q3 = QuantumNumbers::new(3, 1);

        let r2_co = expectation_r2(q0, &paper("CO"), &f0);
        assert!((r2_co - 0.395622).abs() < 5e-6);
        let r2_hcl = expectation_r2(q0, &paper("HCl"), &f0);
        assert!((r2_hcl - 0.768467).abs() < 5e-6);

        let p2_co = expectation_p2(q0, &paper("CO"), &f0);
        assert!((p2_co - -2.14868e-25).abs() < 5e-30);
        let p2_i2 = expectation_p2(q0, &paper("I2"), &f10);
        assert!((p2_i2 - -1.22304e-25).abs() < 5e-30);

        let t_co = expectation_t(q0, &paper("CO"), &f0);
        assert!((t_co - -9.43338).abs() < 5e-5);
        let t_h2 = expectation_t(q3, &paper("H2"), &f10);
        assert!((t_h2 - -5.74394).abs() < 5e-5);

        let v_co = expectation_v(q0, &paper("CO"), &f0);
        assert!((v_co - 28.3002).abs() < 5e-4);
        let v_i2 = expectation_v(q0, &paper("I2"), &f0);
        assert!((v_i2 - 8.53872).abs() < 5e-5);
    }

    #[test]
    fn p2_is_minus_mu2_omega2_times_r2() {
        let u = paper("HCl");
        let f = FieldParams::new(5.0, 1.0).unwrap();
        for n in 0..4 {
            let q = QuantumNumbers::new(n, 1);
            let lhs = expectation_p2(q, &u, &f);
            let rhs = -u.mu_eff * u.mu_eff * u.omega_eff * u.omega_eff * expectation_r2(q, &u, &f);
            assert!((lhs - rhs).abs() <= 1e-14 * lhs.abs());
        }
    }

    #[test]
    fn energy_identities() {
        for mol in builtin_molecules() {
            let u = working_units(&mol);
            for g in [0.0, 1.0] {
                for omega_l in [0.0, 5.0, 10.0] {
                    let f = FieldParams::new(omega_l, g).unwrap();
                    for n in 0..4 {
                        for m in [0, 1] {
                            let q = QuantumNumbers::new(n, m);
                            let e = energy(q, &u, &f);
                            let t = expectation_t(q, &u, &f);
                            let v = expectation_v(q, &u, &f);
                            assert!((e - (t + v)).abs() <= 1e-9 * e.abs());
                            let p2 = expectation_p2(q, &u, &f);
                            assert!((t - p2 / (2.0 * u.mu_eff)).abs() <= 1e-12 * t.abs());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn energy_m_antisymmetry_is_zeeman_shift() {
        let u = paper("CO");
        let f = FieldParams::new(7.3, 1.0).unwrap();
        for m in 1..4i32 {
            let ep = energy(QuantumNumbers::new(2, m), &u, &f);
            let em = energy(QuantumNumbers::new(2, -m), &u, &f);
            let expect = 2.0 * f64::from(m) * f.omega_l;
            assert!((ep - em - expect).abs() <= 1e-12 * ep.abs());
        }
    }

    #[test]
    fn susceptibility_reference_points() {
        let k = SusceptibilityConstants::default();
        let chi_co = susceptibility(
            QuantumNumbers::new(0, 1),
            &paper("CO"),
            &FieldParams::new(0.0, 1.0).unwrap(),
            &k,
        );
        assert!((chi_co - -3.87265e31).abs() < 5e26);
        let chi_h2 = susceptibility(
            QuantumNumbers::new(3, 1),
            &paper("H2"),
            &FieldParams::new(10.0, 1.0).unwrap(),
            &k,
        );
        assert!((chi_h2 - -1.08971e33).abs() < 5e28);
        assert!(chi_co < 0.0 && chi_h2 < 0.0);
    }

    #[test]
    fn magnetic_moment_zero_field_and_dual_transcription() {
        let k = SusceptibilityConstants::default();
        let u = paper("CO");
        let q = QuantumNumbers::new(0, 1);
        let zero = magnetic_moment(q, &u, &FieldParams::new(0.0, 1.0).unwrap(), &k);
        assert_eq!(zero, 0.0);

        // independent re-transcription at ω_L = 5, g = 1
        let f = FieldParams::new(5.0, 1.0).unwrap();
        let got = magnetic_moment(q, &u, &f, &k);
        let factor = 1.0 + 3.0f64.sqrt(); // 2n + 1 + √(m²+2g) at n=0, m=g=1
        let expect = -(2.0 * 5.0 / (6.0 * u.mu_eff * 3.0e8))
            * (factor / (25.0 + u.mu_omega_sq()).sqrt());
        assert!((got - expect).abs() <= 1e-12 * expect.abs());
    }

    #[test]
    fn magnetic_moment_magnitude_increases_with_field() {
        let k = SusceptibilityConstants::default();
        let u = paper("I2");
        let q = QuantumNumbers::new(1, 1);
        let mut prev = 0.0;
        let mut omega_l = 0.0;
        while omega_l <= 40.0 {
            let f = FieldParams::new(omega_l, 1.0).unwrap();
            let mag = magnetic_moment(q, &u, &f, &k).abs();
            assert!(mag >= prev, "|mu_B| dipped at omega_l = {omega_l}");
            prev = mag;
            omega_l += 0.25;
        }
    }

    #[test]
    fn hft_agrees_with_closed_form() {
        let u = paper("CO");
        let f = FieldParams::new(0.0, 1.0).unwrap();
        let h = 1e-6 * u.omega_eff;
        let report = hft_check(QuantumNumbers::new(0, 1), &u, &f, h).unwrap();
        assert!(report.rel_err < 1e-6, "rel_err = {}", report.rel_err);
    }

    #[test]
    fn hft_dimensionless_exact_point() {
        // Ω = 1, m = 1, g = 0, n = 0: ∂E/∂Ω = 2 = Ω·⟨r²⟩
        let u = WorkingUnits::dimensionless(1.0);
        let f = FieldParams::free();
        let q = QuantumNumbers::new(0, 1);
        let report = hft_check(q, &u, &f, 1e-6).unwrap();
        assert!((report.rhs - 2.0).abs() < 1e-12);
        assert!((report.lhs - 2.0).abs() < 1e-9);
    }

    #[test]
    fn hft_degenerate_step() {
        let u = paper("CO");
        let f = FieldParams::free();
        let err = hft_check(QuantumNumbers::new(0, 1), &u, &f, 1e-30);
        assert!(matches!(err, Err(Error::DegenerateStep(_))));
    }

    #[test]
    fn hft_second_order_in_step() {
        let u = paper("H2");
        let f = FieldParams::new(5.0, 1.0).unwrap();
        let q = QuantumNumbers::new(2, 1);
        // slope of log(err) vs log(h) over 4 halvings ≈ 2
        let mut hs = Vec::new();
        let mut errs = Vec::new();
        let mut h = 1e-3 * u.omega_eff;
        for _ in 0..4 {
            let rep = hft_check(q, &u, &f, h).unwrap();
            hs.push(h.ln());
            errs.push(rep.rel_err.max(1e-300).ln());
            h /= 2.0;
        }
        let n = hs.len() as f64;
        let sx: f64 = hs.iter().sum();
        let sy: f64 = errs.iter().sum();
        let sxx: f64 = hs.iter().map(|x| x * x).sum();
        let sxy: f64 = hs.iter().zip(&errs).map(|(x, y)| x * y).sum();
        let slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        assert!((slope - 2.0).abs() < 0.2, "slope = {slope}");
    }
}
