//! Special functions backing the wavefunction and quadrature checks:
//! generalized Laguerre polynomials, log-gamma, and Gauss-Laguerre rules.

use crate::error::{Error, Result};

/// Lanczos coefficients, g = 7, n = 9.
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Natural log of the gamma function for x > 0.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("ln_gamma requires x > 0, got {x}")));
    }
    if x < 0.5 {
        // reflection: Γ(x)Γ(1-x) = π / sin(πx)
        let pi = std::f64::consts::PI;
        return Ok((pi / (pi * x).sin()).ln() - ln_gamma(1.0 - x)?);
    }
    let x = x - 1.0;
    let mut acc = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (x + i as f64);
    }
    let t = x + LANCZOS_G + 0.5;
    let half_ln_2pi = 0.918_938_533_204_672_7;
    Ok(half_ln_2pi + (x + 0.5) * t.ln() - t + acc.ln())
}

/// Generalized Laguerre polynomial L_n^α(x) by the three-term recurrence in n.
pub fn laguerre(n: u32, alpha: f64, x: f64) -> Result<f64> {
    if alpha <= -1.0 {
        return Err(Error::Domain(format!(
            "laguerre requires alpha > -1, got {alpha}"
        )));
    }
    if n == 0 {
        return Ok(1.0);
    }
    let mut prev = 1.0;
    let mut cur = 1.0 + alpha - x;
    for k in 1..n {
        let k = f64::from(k);
        let next = ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Nodes and weights of a Gauss-Laguerre rule for the weight x^α e^(-x) on (0, ∞).
#[derive(Debug, Clone)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub order: u32,
    pub alpha: f64,
}

impl QuadratureRule {
    /// Σ wᵢ f(xᵢ); approximates ∫₀^∞ x^α e^(-x) f(x) dx.
    pub fn integrate(&self, mut f: impl FnMut(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

const NEWTON_MAX_ITER: usize = 100;

/// Gauss-Laguerre rule of the given order: nodes are the roots of L_order^α,
/// located by Newton iteration from asymptotic spacing estimates.
pub fn gauss_laguerre(order: u32, alpha: f64) -> Result<QuadratureRule> {
    if order < 1 {
        return Err(Error::Domain("quadrature order must be >= 1".into()));
    }
    if alpha <= -1.0 {
        return Err(Error::Domain(format!(
            "gauss_laguerre requires alpha > -1, got {alpha}"
        )));
    }
    let n = order;
    let nf = f64::from(n);
    let mut nodes = vec![0.0f64; n as usize];
    let mut weights = vec![0.0f64; n as usize];
    // ratio Γ(n+α+1)/n! for the weight formula
    let ln_ratio = ln_gamma(nf + alpha + 1.0)? - ln_gamma(nf + 1.0)?;

    let mut z = 0.0f64;
    for i in 0..n as usize {
        // initial guesses per the classical asymptotic spacing
        if i == 0 {
            z = (1.0 + alpha) * (3.0 + 0.92 * alpha) / (1.0 + 2.4 * nf + 1.8 * alpha);
        } else if i == 1 {
            z += (15.0 + 6.25 * alpha) / (1.0 + 0.9 * alpha + 2.5 * nf);
        } else {
            let ai = (i - 1) as f64;
            z += ((1.0 + 2.55 * ai) / (1.9 * ai)
                + 1.26 * ai * alpha / (1.0 + 3.5 * ai))
                * (z - nodes[i - 2])
                / (1.0 + 0.3 * alpha);
        }
        let mut converged = false;
        for _ in 0..NEWTON_MAX_ITER {
            let p = laguerre(n, alpha, z)?;
            let pm1 = laguerre(n - 1, alpha, z)?;
            // x L'_n = n L_n - (n+α) L_{n-1}
            let dp = (nf * p - (nf + alpha) * pm1) / z;
            let dz = p / dp;
            z -= dz;
            // Newton is quadratic: once the step is this small the new z is
            // converged to machine precision
            if dz.abs() <= 1e-12 * z.abs().max(1e-300) {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::NonConvergence {
                what: "Gauss-Laguerre Newton root search",
                iterations: NEWTON_MAX_ITER,
            });
        }
        let lnp1 = laguerre(n + 1, alpha, z)?;
        nodes[i] = z;
        weights[i] = ln_ratio.exp() * z / ((nf + 1.0) * (nf + 1.0) * lnp1 * lnp1);
    }
    Ok(QuadratureRule {
        nodes,
        weights,
        order,
        alpha,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent truncated-series oracle:
    /// L_n^α(x) = Σ_k (-1)^k C(n+α, n-k) x^k / k!
    fn laguerre_series(n: u32, alpha: f64, x: f64) -> f64 {
        let mut sum = 0.0;
        for k in 0..=n {
            let mut binom = 1.0; // C(n+alpha, n-k) = Π_{j=1..n-k} (alpha+k+j)/j
            for j in 1..=(n - k) {
                binom *= (alpha + f64::from(k) + f64::from(j)) / f64::from(j);
            }
            let mut fact = 1.0;
            for j in 1..=k {
                fact *= f64::from(j);
            }
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            sum += sign * binom * x.powi(k as i32) / fact;
        }
        sum
    }

    #[test]
    fn laguerre_base_cases() {
        assert_eq!(laguerre(0, 1.7, 3.4).unwrap(), 1.0);
        assert_eq!(laguerre(1, 2.0, 3.0).unwrap(), 0.0); // 1 + α - x
        assert!((laguerre(2, 1.0, 2.0).unwrap() - -1.0).abs() < 1e-14);
        assert_eq!(laguerre_series(2, 1.0, 2.0), -1.0);
    }

    #[test]
    fn laguerre_rejects_alpha_at_or_below_minus_one() {
        assert!(laguerre(2, -1.0, 1.0).is_err());
        assert!(laguerre(2, -1.5, 1.0).is_err());
    }

    #[test]
    fn laguerre_matches_series_oracle() {
        for n in 0..=8u32 {
            for &alpha in &[-0.5, 0.0, 0.73, 1.0, 2.5] {
                for &x in &[0.0, 0.3, 1.0, 4.2, 11.0] {
                    let a = laguerre(n, alpha, x).unwrap();
                    let b = laguerre_series(n, alpha, x);
                    let scale = a.abs().max(b.abs()).max(1.0);
                    assert!(
                        (a - b).abs() <= 1e-10 * scale,
                        "n={n} alpha={alpha} x={x}: {a} vs {b}"
                    );
                }
            }
        }
    }

    #[test]
    fn ln_gamma_known_values() {
        assert!(ln_gamma(1.0).unwrap().abs() < 1e-14);
        assert!(ln_gamma(2.0).unwrap().abs() < 1e-14);
        let half = ln_gamma(0.5).unwrap();
        assert!((half - std::f64::consts::PI.sqrt().ln()).abs() < 1e-13);
        // Γ(4.5) = 3.5·2.5·1.5·0.5·√π, built by upward recursion from Γ(0.5)
        let gamma_45 = 3.5 * 2.5 * 1.5 * 0.5 * std::f64::consts::PI.sqrt();
        assert!((ln_gamma(4.5).unwrap() - gamma_45.ln()).abs() < 1e-13);
    }

    #[test]
    fn ln_gamma_rejects_nonpositive() {
        assert!(ln_gamma(0.0).is_err());
        assert!(ln_gamma(-3.2).is_err());
    }

    #[test]
    fn ln_gamma_recurrence() {
        let mut x = 0.5;
        while x <= 50.0 {
            let lhs = ln_gamma(x + 1.0).unwrap();
            let rhs = ln_gamma(x).unwrap() + x.ln();
            assert!(
                (lhs - rhs).abs() <= 1e-12 * lhs.abs().max(1.0),
                "x = {x}"
            );
            x += 0.37;
        }
    }

    #[test]
    fn gauss_laguerre_order_one() {
        let rule = gauss_laguerre(1, 0.0).unwrap();
        assert!((rule.nodes[0] - 1.0).abs() < 1e-13);
        assert!((rule.weights[0] - 1.0).abs() < 1e-13);
        assert!((rule.integrate(|_| 1.0) - 1.0).abs() < 1e-13);
    }

    #[test]
    fn gauss_laguerre_weight_sums() {
        for &alpha in &[0.0, 0.5, 1.0, 3.0_f64.sqrt()] {
            for &order in &[4u32, 20, 64] {
                let rule = gauss_laguerre(order, alpha).unwrap();
                let total: f64 = rule.weights.iter().sum();
                let expect = ln_gamma(alpha + 1.0).unwrap().exp();
                assert!(
                    (total - expect).abs() <= 1e-12 * expect,
                    "alpha={alpha} order={order}: {total} vs {expect}"
                );
                assert!(rule.nodes.windows(2).all(|w| w[0] < w[1]));
                assert!(rule.nodes.iter().all(|&x| x > 0.0));
                assert!(rule.weights.iter().all(|&w| w > 0.0));
            }
        }
    }

    #[test]
    fn gauss_laguerre_moments() {
        // ∫ x^α e^-x x^k dx = Γ(α+k+1), exact for k ≤ 2·order-1
        let rule = gauss_laguerre(20, 0.0).unwrap();
        let second = rule.integrate(|x| x * x);
        assert!((second - 2.0).abs() <= 1e-12 * 2.0);
        for k in 0..10u32 {
            let got = rule.integrate(|x| x.powi(k as i32));
            let expect = ln_gamma(f64::from(k) + 1.0).unwrap().exp();
            assert!(
                (got - expect).abs() <= 1e-12 * expect,
                "moment {k}: {got} vs {expect}"
            );
        }
    }

    #[test]
    fn laguerre_orthogonality_under_quadrature() {
        let alpha = 0.8;
        for i in 0..=4u32 {
            for j in 0..=4u32 {
                let rule = gauss_laguerre(i + j + 2, alpha).unwrap();
                let got = rule.integrate(|x| {
                    laguerre(i, alpha, x).unwrap() * laguerre(j, alpha, x).unwrap()
                });
                if i == j {
                    let expect = (ln_gamma(f64::from(i) + alpha + 1.0).unwrap()
                        - ln_gamma(f64::from(i) + 1.0).unwrap())
                    .exp();
                    assert!((got - expect).abs() <= 1e-10 * expect, "i=j={i}");
                } else {
                    assert!(got.abs() <= 1e-10, "i={i} j={j}: {got}");
                }
            }
        }
    }
}
