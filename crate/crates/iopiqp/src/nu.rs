//! Parametric engine for hypergeometric-type radial equations: derives the
//! constants β₄–β₁₃ from the six input coefficients, evaluates the bound-state
//! energy condition, and solves it by bracketing.
//!
//! The engine never sees the energy directly; callers embed a trial energy in
//! the coefficients and hand over a closure (see [`solve_energy`]). Only the
//! k₋ branch is implemented — the k₊ branch carries no bound states.

use crate::error::{Error, Result};

/// The six input coefficients of the canonical second-order form.
///
/// `rho2` multiplies z², `rho1` multiplies z and `rho0` is the constant term
/// of the numerator polynomial (with its printed minus signs already folded
/// in), so adapters must map into this ordering.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NuCoefficients {
    pub beta1: f64,
    pub beta2: f64,
    pub beta3: f64,
    pub rho0: f64,
    pub rho1: f64,
    pub rho2: f64,
}

impl NuCoefficients {
    pub fn is_finite(&self) -> bool {
        [self.beta1, self.beta2, self.beta3, self.rho0, self.rho1, self.rho2]
            .iter()
            .all(|v| v.is_finite())
    }
}

/// The ten derived constants β₄–β₁₃.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NuConstants {
    pub beta4: f64,
    pub beta5: f64,
    pub beta6: f64,
    pub beta7: f64,
    pub beta8: f64,
    pub beta9: f64,
    pub beta10: f64,
    pub beta11: f64,
    pub beta12: f64,
    pub beta13: f64,
}

/// Derive β₄–β₁₃ from the input coefficients.
///
/// Fails with `ComplexBranch` when β₈ or β₉ is negative, since the bound-state
/// condition and the wavefunction exponents then leave the real axis.
pub fn derive_constants(c: &NuCoefficients) -> Result<NuConstants> {
    if !c.is_finite() {
        return Err(Error::Domain("non-finite coefficient".into()));
    }
    let beta4 = 0.5 * (1.0 - c.beta1);
    let beta5 = 0.5 * (c.beta2 - 2.0 * c.beta3);
    let beta6 = beta5 * beta5 + c.rho2;
    let beta7 = 2.0 * beta4 * beta5 - c.rho1;
    let beta8 = beta4 * beta4 + c.rho0;
    if beta8 < 0.0 {
        return Err(Error::ComplexBranch("beta8", beta8));
    }
    let beta9 = c.beta3 * (beta7 + c.beta3 * beta8) + beta6;
    if beta9 < 0.0 {
        return Err(Error::ComplexBranch("beta9", beta9));
    }
    let sqrt8 = beta8.sqrt();
    let sqrt9 = beta9.sqrt();
    Ok(NuConstants {
        beta4,
        beta5,
        beta6,
        beta7,
        beta8,
        beta9,
        beta10: c.beta1 + 2.0 * beta4 + 2.0 * sqrt8 - 1.0,
        beta11: c.beta2 - 2.0 * beta5 + 2.0 * (sqrt9 + c.beta3 * sqrt8),
        beta12: beta4 + sqrt8,
        beta13: beta5 - (sqrt9 - c.beta3 * sqrt8),
    })
}

/// Left-hand side of the bound-state energy condition at level `n`; a root in
/// the embedded energy parameter marks a bound state.
pub fn energy_residual(n: u32, c: &NuCoefficients) -> Result<f64> {
    let k = derive_constants(c)?;
    let nf = f64::from(n);
    let sqrt8 = k.beta8.sqrt();
    let sqrt9 = k.beta9.sqrt();
    Ok(c.beta2 * nf - (2.0 * nf + 1.0) * k.beta5
        + (2.0 * nf + 1.0) * (sqrt9 + c.beta3 * sqrt8)
        + nf * (nf - 1.0) * c.beta3
        + k.beta7
        + 2.0 * c.beta3 * k.beta8
        + 2.0 * (k.beta8 * k.beta9).sqrt())
}

const SOLVE_MAX_ITER: usize = 200;

/// Root of the energy condition over a bracket, by bisection to a relative
/// width of 1e-13 followed by one secant polish.
pub fn solve_energy(
    n: u32,
    coefficients_of: impl Fn(f64) -> NuCoefficients,
    bracket: (f64, f64),
    tol: f64,
) -> Result<f64> {
    let (mut lo, mut hi) = bracket;
    let mut f_lo = energy_residual(n, &coefficients_of(lo))?;
    let mut f_hi = energy_residual(n, &coefficients_of(hi))?;
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(Error::NoSignChange { lo, hi });
    }
    let mut iterations = 0;
    while (hi - lo).abs() > 1e-13 * lo.abs().max(hi.abs()).max(1.0) {
        if iterations >= SOLVE_MAX_ITER {
            return Err(Error::NonConvergence {
                what: "energy bisection",
                iterations: SOLVE_MAX_ITER,
            });
        }
        iterations += 1;
        let mid = 0.5 * (lo + hi);
        let f_mid = energy_residual(n, &coefficients_of(mid))?;
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
    }
    // one secant step across the final bracket
    let mut root = lo - f_lo * (hi - lo) / (f_hi - f_lo);
    if !root.is_finite() {
        root = 0.5 * (lo + hi);
    }
    let residual = energy_residual(n, &coefficients_of(root))?;
    if residual.abs() > tol {
        return Err(Error::NonConvergence {
            what: "energy root polish",
            iterations,
        });
    }
    Ok(root)
}
