//! Normalized radial eigenfunctions and quadrature cross-checks.
//!
//! R(r) = N · r^(2δ+3/2) · e^(−γr²/2) · L_n^(2δ+1)(γr²) with
//! δ = −1/2 + √(m²/4 + g/2) and N² = 2·n!·γ^(2δ+2)/Γ(n+2δ+2).
//!
//! All integrals use the substitution z = γr², which maps them exactly onto
//! the Gauss-Laguerre weight z^(2δ+1)·e^(−z); the factorials are generalized
//! to Γ and assembled in log space.

use crate::error::{Error, Result};
use crate::model::{FieldParams, QuantumNumbers, WorkingUnits};
use crate::specfun::{gauss_laguerre, laguerre, ln_gamma, QuadratureRule};

/// Quadrature order used for every normalization and expectation check.
pub const QUADRATURE_ORDER: u32 = 64;

/// One radial bound state.
#[derive(Debug, Clone)]
pub struct RadialState {
    pub q: QuantumNumbers,
    /// δ = −1/2 + √(m²/4 + g/2)
    pub delta: f64,
    /// γ = √(ω_L² + μω²)
    pub gamma: f64,
    /// normalization prefactor N
    pub norm: f64,
}

impl RadialState {
    pub fn new(q: QuantumNumbers, u: &WorkingUnits, f: &FieldParams) -> Result<Self> {
        let gamma = u.gamma(f);
        Self::with_gamma(q, f.g, gamma)
    }

    /// Build directly from γ (dimensionless workflows).
    pub fn with_gamma(q: QuantumNumbers, g: f64, gamma: f64) -> Result<Self> {
        if !(gamma > 0.0) {
            return Err(Error::Domain(format!("gamma must be positive, got {gamma}")));
        }
        let mf = f64::from(q.m);
        let delta = -0.5 + (mf * mf / 4.0 + g / 2.0).sqrt();
        let nf = f64::from(q.n);
        // ln N² = ln 2 + ln n! + (2δ+2)·ln γ − ln Γ(n+2δ+2)
        let ln_norm_sq = std::f64::consts::LN_2 + ln_gamma(nf + 1.0)?
            + (2.0 * delta + 2.0) * gamma.ln()
            - ln_gamma(nf + 2.0 * delta + 2.0)?;
        Ok(Self {
            q,
            delta,
            gamma,
            norm: (0.5 * ln_norm_sq).exp(),
        })
    }

    /// Laguerre order α = 2δ + 1 = √(m² + 2g).
    pub fn alpha(&self) -> f64 {
        2.0 * self.delta + 1.0
    }
}

/// R(r) for r > 0.
pub fn radial_value(s: &RadialState, r: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::Domain(format!("radial_value requires r > 0, got {r}")));
    }
    let z = s.gamma * r * r;
    Ok(s.norm * r.powf(2.0 * s.delta + 1.5) * (-0.5 * z).exp() * laguerre(s.q.n, s.alpha(), z)?)
}

/// ∫₀^∞ R(r)² f(r) dr with z = γr²:
/// = N²/(2γ^(2δ+2)) · ∫₀^∞ z^(2δ+1) e^(−z) L_n(z)² f(√(z/γ)) dz.
fn weighted_integral(s: &RadialState, mut f: impl FnMut(f64) -> f64) -> Result<f64> {
    let rule = quadrature_for(s)?;
    let alpha = s.alpha();
    let prefactor = s.norm * s.norm / (2.0 * s.gamma.powf(2.0 * s.delta + 2.0));
    let mut sum = 0.0;
    for (&z, &w) in rule.nodes.iter().zip(&rule.weights) {
        let l = laguerre(s.q.n, alpha, z)?;
        sum += w * l * l * f((z / s.gamma).sqrt());
    }
    Ok(prefactor * sum)
}

fn quadrature_for(s: &RadialState) -> Result<QuadratureRule> {
    gauss_laguerre(QUADRATURE_ORDER, s.alpha())
}

/// ∫₀^∞ R(r)² dr; equals 1 when the prefactor is right.
pub fn numeric_norm(s: &RadialState) -> Result<f64> {
    weighted_integral(s, |_| 1.0)
}

/// ∫₀^∞ r²·R(r)² dr; the quadrature route to ⟨r²⟩.
pub fn numeric_expectation_r2(s: &RadialState) -> Result<f64> {
    weighted_integral(s, |r| r * r)
}

/// ∫₀^∞ R_a(r)·R_b(r) dr for two states sharing (m, g, γ).
pub fn numeric_overlap(a: &RadialState, b: &RadialState) -> Result<f64> {
    if (a.gamma - b.gamma).abs() > 1e-12 * a.gamma || (a.delta - b.delta).abs() > 1e-12 {
        return Err(Error::Domain(
            "overlap requires states sharing gamma and delta".into(),
        ));
    }
    let rule = quadrature_for(a)?;
    let alpha = a.alpha();
    let prefactor = a.norm * b.norm / (2.0 * a.gamma.powf(2.0 * a.delta + 2.0));
    let mut sum = 0.0;
    for (&z, &w) in rule.nodes.iter().zip(&rule.weights) {
        sum += w * laguerre(a.q.n, alpha, z)? * laguerre(b.q.n, alpha, z)?;
    }
    Ok(prefactor * sum)
}

/// Number of interior sign changes of R on (0, ∞); equals n for a valid state.
///
/// Scans z = γr² across the Laguerre root range and refines each bracket by
/// bisection.
pub fn node_count(s: &RadialState) -> Result<u32> {
    let n = s.q.n;
    if n == 0 {
        return Ok(0);
    }
    let alpha = s.alpha();
    // all roots of L_n^α lie below 4n + 2α + 2; pad the scan a little
    let z_max = 4.0 * f64::from(n) + 2.0 * alpha + 6.0;
    let steps = 200 * n as usize + 200;
    let dz = z_max / steps as f64;
    let mut count = 0u32;
    let mut z_prev = dz * 1e-6;
    let mut f_prev = laguerre(n, alpha, z_prev)?;
    for i in 1..=steps {
        let z = dz * i as f64;
        let f = laguerre(n, alpha, z)?;
        if f == 0.0 {
            count += 1;
            f_prev = -f_prev;
            z_prev = z;
            continue;
        }
        if f.signum() != f_prev.signum() {
            // bisection refinement confirms a genuine crossing
            let (mut lo, mut hi) = (z_prev, z);
            let mut f_lo = f_prev;
            for _ in 0..40 {
                let mid = 0.5 * (lo + hi);
                let fm = laguerre(n, alpha, mid)?;
                if fm == 0.0 {
                    break;
                }
                if fm.signum() == f_lo.signum() {
                    lo = mid;
                    f_lo = fm;
                } else {
                    hi = mid;
                }
            }
            count += 1;
        }
        z_prev = z;
        f_prev = f;
    }
    Ok(count)
}
