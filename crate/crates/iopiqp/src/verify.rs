//! The full verification suite: golden-table reproduction, closed-form
//! identities, engine-vs-closed-form equivalence, quadrature and node checks,
//! the finite-difference oracle lattice, derivative self-checks, and the
//! qualitative field-dependence claims. Each check reports pass/fail with a
//! measured error against its pinned tolerance.

use crate::error::Result;
use crate::golden::{
    self, golden_chi, golden_energies, golden_p2, golden_r2, golden_t, golden_v, GoldenValue,
};
use crate::model::{
    effective_potential, working_units, FieldParams, MoleculeConstants, QuantumNumbers,
    WorkingUnits,
};
use crate::nu;
use crate::observables::{self, SusceptibilityConstants};
use crate::oracle::{self, RadialGrid};
use crate::wavefunction::{self, RadialState};

/// Outcome of one named check.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &'static str, passed: bool, detail: String) -> Self {
        Self { name, passed, detail }
    }
}

fn units_for(molecules: &[MoleculeConstants], v: &GoldenValue) -> WorkingUnits {
    let mol = molecules
        .iter()
        .find(|m| m.name == v.molecule)
        .unwrap_or_else(|| panic!("molecule {} missing from constants", v.molecule));
    working_units(mol)
}

/// The paper-units lattice: every molecule × n ∈ 0..=3 × m ∈ {0,1} ×
/// g ∈ {0,1} × ω_L ∈ {0,5,10}.
pub fn paper_lattice(
    molecules: &[MoleculeConstants],
) -> Vec<(String, WorkingUnits, QuantumNumbers, FieldParams)> {
    let mut out = Vec::new();
    for mol in molecules {
        let u = working_units(mol);
        for g in [0.0, 1.0] {
            for m in [0, 1] {
                for omega_l in [0.0, 5.0, 10.0] {
                    for n in 0..4 {
                        out.push((
                            mol.name.clone(),
                            u,
                            QuantumNumbers::new(n, m),
                            FieldParams::new(omega_l, g).expect("lattice fields valid"),
                        ));
                    }
                }
            }
        }
    }
    out
}

/// Criterion: all 192 golden energies at printed precision (one documented
/// misprint cell is checked against its structurally implied value instead).
pub fn check_golden_energies(molecules: &[MoleculeConstants]) -> Check {
    let mut failures = Vec::new();
    let mut exempted = 0usize;
    let mut total = 0usize;
    for v in golden_energies() {
        total += 1;
        let u = units_for(molecules, &v);
        let computed = observables::energy(v.quantum_numbers(), &u, &v.field());
        if golden::is_misprint(&v) {
            exempted += 1;
            let (_, implied) = golden::MISPRINTS
                .iter()
                .find(|(m, _)| m.printed == v.printed)
                .expect("misprint entry present");
            if !golden::matches_printed(computed, implied) {
                failures.push(format!(
                    "{} n={} m={} g={} wl={}: {} (implied {})",
                    v.molecule, v.n, v.m, v.g, v.omega_l, computed, implied
                ));
            }
            // the printed cell really must disagree, or the exemption is stale
            if golden::matches_printed(computed, v.printed) {
                failures.push(format!("misprint exemption stale for {}", v.printed));
            }
            continue;
        }
        if !golden::matches_printed(computed, v.printed) {
            failures.push(format!(
                "{} n={} m={} g={} wl={}: computed {} vs printed {}",
                v.molecule, v.n, v.m, v.g, v.omega_l, computed, v.printed
            ));
        }
    }
    let passed = failures.is_empty();
    let detail = if passed {
        format!("{total} energies at printed precision ({exempted} misprint cell exempted)")
    } else {
        format!("{} of {total} mismatched: {}", failures.len(), failures.join("; "))
    };
    Check::new("golden energy tables", passed, detail)
}

/// Criterion: all observable tables (g = m = 1 lattice) at printed precision.
pub fn check_golden_observables(
    molecules: &[MoleculeConstants],
    k: &SusceptibilityConstants,
) -> Check {
    let tables: [(&str, Vec<GoldenValue>, fn(QuantumNumbers, &WorkingUnits, &FieldParams, &SusceptibilityConstants) -> f64); 5] = [
        ("r2", golden_r2(), |q, u, f, _| observables::expectation_r2(q, u, f)),
        ("p2", golden_p2(), |q, u, f, _| observables::expectation_p2(q, u, f)),
        ("T", golden_t(), |q, u, f, _| observables::expectation_t(q, u, f)),
        ("V", golden_v(), |q, u, f, _| observables::expectation_v(q, u, f)),
        ("chi", golden_chi(), |q, u, f, k| observables::susceptibility(q, u, f, k)),
    ];
    let mut failures = Vec::new();
    let mut total = 0usize;
    for (label, values, eval) in tables {
        for v in values {
            total += 1;
            let u = units_for(molecules, &v);
            let computed = eval(v.quantum_numbers(), &u, &v.field(), k);
            if !golden::matches_printed(computed, v.printed) {
                failures.push(format!(
                    "{label} {} n={} wl={}: computed {} vs printed {}",
                    v.molecule, v.n, v.omega_l, computed, v.printed
                ));
            }
        }
    }
    let passed = failures.is_empty();
    let detail = if passed {
        format!("{total} observable values at printed precision")
    } else {
        format!("{} of {total} mismatched: {}", failures.len(), failures.join("; "))
    };
    Check::new("golden observable tables", passed, detail)
}

/// Criterion: E = ⟨T⟩+⟨V⟩ (1e-9), ⟨T⟩ = ⟨p²⟩/2μ (1e-12),
/// E(m)−E(−m) = 2mω_L (1e-12), across the lattice.
pub fn check_identities(molecules: &[MoleculeConstants]) -> Check {
    let mut max_sum = 0.0f64;
    let mut max_kin = 0.0f64;
    let mut max_odd = 0.0f64;
    for (_, u, q, f) in paper_lattice(molecules) {
        let e = observables::energy(q, &u, &f);
        let t = observables::expectation_t(q, &u, &f);
        let v = observables::expectation_v(q, &u, &f);
        let p2 = observables::expectation_p2(q, &u, &f);
        max_sum = max_sum.max(((e - (t + v)) / e).abs());
        max_kin = max_kin.max(((t - p2 / (2.0 * u.mu_eff)) / t).abs());
        let mirrored = QuantumNumbers::new(q.n, -q.m);
        let em = observables::energy(mirrored, &u, &f);
        let shift = 2.0 * f64::from(q.m) * f.omega_l;
        max_odd = max_odd.max(((e - em - shift) / e.abs().max(1.0)).abs());
    }
    let passed = max_sum <= 1e-9 && max_kin <= 1e-12 && max_odd <= 1e-12;
    Check::new(
        "closed-form identities",
        passed,
        format!(
            "|E-(T+V)| <= {max_sum:.2e} (tol 1e-9), |T-p2/2mu| <= {max_kin:.2e} (tol 1e-12), \
             |E(m)-E(-m)-2m*wL| <= {max_odd:.2e} (tol 1e-12)"
        ),
    )
}

/// Criterion: the parametric-engine root reproduces the closed form to
/// 1e-10 relative on the full lattice.
pub fn check_nu_equivalence(molecules: &[MoleculeConstants]) -> Result<Check> {
    let mut max_rel = 0.0f64;
    for (_, u, q, f) in paper_lattice(molecules) {
        let closed = observables::energy(q, &u, &f);
        let mf = f64::from(q.m);
        let scale = u.gamma(&f) * (2.0 * f64::from(q.n) + 3.0 + (mf * mf + 2.0 * f.g).sqrt())
            + mf.abs() * f.omega_l;
        let solved = nu::solve_energy(
            q.n,
            |e| crate::model::to_nu_coefficients(&u, &f, q.m, e),
            (0.0, 2.0 * scale + 10.0),
            1e-8 * closed.abs().max(1.0),
        )?;
        max_rel = max_rel.max(((solved - closed) / closed).abs());
    }
    Ok(Check::new(
        "engine/closed-form equivalence",
        max_rel <= 1e-10,
        format!("max relative deviation {max_rel:.2e} (tol 1e-10)"),
    ))
}

/// Criterion: normalization 1 ± 1e-10, orthogonality ≤ 1e-9, node count = n,
/// quadrature ⟨r²⟩ within 1e-8 relative, for every lattice state.
pub fn check_wavefunctions(molecules: &[MoleculeConstants]) -> Result<Check> {
    let mut max_norm = 0.0f64;
    let mut max_r2 = 0.0f64;
    let mut max_overlap = 0.0f64;
    let mut node_failures = 0usize;
    for mol in molecules {
        let u = working_units(mol);
        for g in [0.0, 1.0] {
            for m in [0, 1] {
                for omega_l in [0.0, 5.0, 10.0] {
                    let f = FieldParams::new(omega_l, g)?;
                    let states: Vec<RadialState> = (0..4)
                        .map(|n| RadialState::new(QuantumNumbers::new(n, m), &u, &f))
                        .collect::<Result<_>>()?;
                    for s in &states {
                        max_norm = max_norm.max((wavefunction::numeric_norm(s)? - 1.0).abs());
                        let quad = wavefunction::numeric_expectation_r2(s)?;
                        let closed = observables::expectation_r2(s.q, &u, &f);
                        max_r2 = max_r2.max(((quad - closed) / closed).abs());
                        if wavefunction::node_count(s)? != s.q.n {
                            node_failures += 1;
                        }
                    }
                    for a in 0..states.len() {
                        for b in a + 1..states.len() {
                            max_overlap = max_overlap
                                .max(wavefunction::numeric_overlap(&states[a], &states[b])?.abs());
                        }
                    }
                }
            }
        }
    }
    let passed =
        max_norm <= 1e-10 && max_overlap <= 1e-9 && max_r2 <= 1e-8 && node_failures == 0;
    Ok(Check::new(
        "wavefunction quadrature suite",
        passed,
        format!(
            "|norm-1| <= {max_norm:.2e} (tol 1e-10), overlap <= {max_overlap:.2e} (tol 1e-9), \
             quad r2 rel <= {max_r2:.2e} (tol 1e-8), node mismatches {node_failures}"
        ),
    ))
}

/// The dimensionless validation lattice for the finite-difference oracle.
pub fn dimensionless_lattice() -> Vec<(f64, i32, f64)> {
    let mut out = Vec::new();
    for big_omega in [1.0, 2.0] {
        for m in [0, 1] {
            for g in [0.0, 1.0] {
                out.push((big_omega, m, g));
            }
        }
    }
    out
}

/// Criterion: oracle eigenvalues within 1e-6 relative of the closed form
/// (1e-5 for the attractive m = g = 0 channel), oracle ⟨r²⟩ within 1e-5, and
/// measured convergence order 2.0 ± 0.2.
pub fn check_fd_oracle() -> Result<Check> {
    let mut max_energy_rel = 0.0f64;
    let mut max_edge_rel = 0.0f64;
    let mut max_r2_rel = 0.0f64;
    for (big_omega, m, g) in dimensionless_lattice() {
        let u = WorkingUnits::dimensionless(big_omega);
        let f = FieldParams::new(0.0, g)?;
        let edge = m == 0 && g == 0.0;
        let mff = f64::from(m);
        let left_exponent = 0.5 + (mff * mff + 2.0 * g).sqrt();
        let pot = |r: f64| effective_potential(r, &u, &f, m).expect("r > 0 on grid");
        // regularized operator for the critical channel: the inverse-square
        // term cancels identically in the u = √r·φ representation
        let gamma = u.gamma(&f);
        let w = move |r: f64| 0.5 * gamma * gamma * r * r;

        // refine until all four levels are stable, then score them
        let r_max = 12.0 / gamma.sqrt();
        let mut r_min = 1e-3;
        let mut n_interior = 2000usize;
        let mut prev: Option<Vec<f64>> = None;
        let (grid, eig) = loop {
            let grid =
                RadialGrid::new(r_min, r_max, n_interior)?.with_left_exponent(left_exponent);
            let eig = if edge {
                oracle::fd_eigenvalues_critical(&w, r_max, n_interior, 4)?
            } else {
                oracle::fd_eigenvalues(&pot, grid, 4)?
            };
            let settled = prev.as_ref().is_some_and(|p| {
                eig.iter()
                    .zip(p)
                    .all(|(a, b)| (a - b).abs() < 1e-7 * a.abs().max(1.0))
            });
            if settled || n_interior >= 2000 * 64 {
                break (grid, eig);
            }
            prev = Some(eig.clone());
            n_interior *= 2;
            if !edge {
                r_min /= 2.0;
            }
        };
        for (n, &lambda) in eig.iter().enumerate() {
            let q = QuantumNumbers::new(n as u32, m);
            let closed = observables::energy(q, &u, &f);
            let rel = ((lambda - closed) / closed).abs();
            if edge {
                max_edge_rel = max_edge_rel.max(rel);
            } else {
                max_energy_rel = max_energy_rel.max(rel);
            }
        }
        // expectation values from the eigenvectors on the settled grid
        if edge {
            let sol = oracle::fd_eigensolve_critical(w, r_max, n_interior, 4)?;
            for n in 0..4usize {
                let q = QuantumNumbers::new(n as u32, m);
                let closed = observables::expectation_r2(q, &u, &f);
                let got = oracle::critical_expectation(&sol, n, |r| r * r)?;
                max_r2_rel = max_r2_rel.max(((got - closed) / closed).abs());
            }
        } else {
            let sol = oracle::fd_eigensolve(&pot, grid, 4)?;
            for n in 0..4usize {
                let q = QuantumNumbers::new(n as u32, m);
                let closed = observables::expectation_r2(q, &u, &f);
                let got = oracle::oracle_expectation(&sol, n, |r| r * r)?;
                max_r2_rel = max_r2_rel.max(((got - closed) / closed).abs());
                // stencil kinetic energy is positive, unlike the published ⟨T⟩
                if oracle::t_physical(&sol, n)? <= 0.0 {
                    return Ok(Check::new(
                        "finite-difference oracle",
                        false,
                        "stencil kinetic energy not positive".into(),
                    ));
                }
            }
        }
    }
    let order = measured_convergence_order()?;
    let passed = max_energy_rel <= 1e-6
        && max_edge_rel <= 1e-5
        && max_r2_rel <= 1e-5
        && (order - 2.0).abs() <= 0.2;
    Ok(Check::new(
        "finite-difference oracle",
        passed,
        format!(
            "energy rel <= {max_energy_rel:.2e} (tol 1e-6), edge-channel rel <= {max_edge_rel:.2e} \
             (tol 1e-5), r2 rel <= {max_r2_rel:.2e} (tol 1e-5), convergence order {order:.3}"
        ),
    ))
}

/// Slope of log(eigenvalue error) against log(h) for the analytic harmonic
/// channel, over four grids.
pub fn measured_convergence_order() -> Result<f64> {
    let u = WorkingUnits::dimensionless(1.0);
    let f = FieldParams::free();
    let pot = |r: f64| effective_potential(r, &u, &f, 1).expect("r > 0 on grid");
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for &n in &[1000usize, 2000, 4000, 8000] {
        let grid = RadialGrid::new(1e-3, 12.0, n)?;
        let eig = oracle::fd_eigenvalues(&pot, grid, 1)?;
        xs.push(grid.h().ln());
        ys.push((eig[0] - 2.0).abs().max(1e-300).ln());
    }
    let count = xs.len() as f64;
    let sx: f64 = xs.iter().sum();
    let sy: f64 = ys.iter().sum();
    let sxx: f64 = xs.iter().map(|x| x * x).sum();
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| x * y).sum();
    Ok((count * sxy - sx * sy) / (count * sxx - sx * sx))
}

/// Criterion: central-difference ∂E/∂ω against μω⟨r²⟩ at h = 10⁻⁶ω, with
/// second-order step convergence, for every molecule at n = 0..3, g = m = 1.
///
/// The rel-err sweep covers ω_L ∈ {0, 5, 10}; the step-order fit uses only
/// ω_L = 5, because at zero field E is exactly linear in ω — the central
/// difference then has no truncation term and a slope fit would measure
/// nothing but roundoff.
pub fn check_hft(molecules: &[MoleculeConstants]) -> Result<Check> {
    let mut max_rel = 0.0f64;
    let mut min_order = f64::INFINITY;
    for mol in molecules {
        let u = working_units(mol);
        for n in 0..4 {
            let q = QuantumNumbers::new(n, 1);
            for omega_l in [0.0, 5.0, 10.0] {
                let f = FieldParams::new(omega_l, 1.0)?;
                let rep = observables::hft_check(q, &u, &f, 1e-6 * u.omega_eff)?;
                max_rel = max_rel.max(rep.rel_err);
            }

            // step-halving convergence slope at nonzero field
            let f = FieldParams::new(5.0, 1.0)?;
            let mut xs = Vec::new();
            let mut ys = Vec::new();
            let mut h = 1e-3 * u.omega_eff;
            for _ in 0..4 {
                let r = observables::hft_check(q, &u, &f, h)?;
                xs.push(h.ln());
                ys.push(r.rel_err.max(1e-300).ln());
                h /= 2.0;
            }
            let count = xs.len() as f64;
            let sx: f64 = xs.iter().sum();
            let sy: f64 = ys.iter().sum();
            let sxx: f64 = xs.iter().map(|x| x * x).sum();
            let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| x * y).sum();
            let order = (count * sxy - sx * sy) / (count * sxx - sx * sx);
            min_order = min_order.min(order);
        }
    }
    let passed = max_rel <= 1e-6 && (min_order - 2.0).abs() <= 0.3;
    Ok(Check::new(
        "derivative self-check",
        passed,
        format!("rel err <= {max_rel:.2e} (tol 1e-6), worst step order {min_order:.3}"),
    ))
}

/// Observable selector for the sweep outputs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ObservableKind {
    R2,
    P2,
    T,
    V,
    Chi,
}

impl ObservableKind {
    pub const ALL: [ObservableKind; 5] = [
        ObservableKind::R2,
        ObservableKind::P2,
        ObservableKind::T,
        ObservableKind::V,
        ObservableKind::Chi,
    ];

    pub fn label(self) -> &'static str {
        match self {
            ObservableKind::R2 => "r2",
            ObservableKind::P2 => "p2",
            ObservableKind::T => "T",
            ObservableKind::V => "V",
            ObservableKind::Chi => "chi",
        }
    }

    pub fn eval(
        self,
        q: QuantumNumbers,
        u: &WorkingUnits,
        f: &FieldParams,
        k: &SusceptibilityConstants,
    ) -> f64 {
        match self {
            ObservableKind::R2 => observables::expectation_r2(q, u, f),
            ObservableKind::P2 => observables::expectation_p2(q, u, f),
            ObservableKind::T => observables::expectation_t(q, u, f),
            ObservableKind::V => observables::expectation_v(q, u, f),
            ObservableKind::Chi => observables::susceptibility(q, u, f, k),
        }
    }
}

/// Field sweep at g = m = 1 for the figure outputs: ω_L from 0 to 12 in steps
/// of 0.05, n ∈ 0..=3.
pub fn figure_sweep(
    kind: ObservableKind,
    u: &WorkingUnits,
    k: &SusceptibilityConstants,
) -> Vec<(u32, f64, f64)> {
    let mut out = Vec::new();
    for n in 0..4u32 {
        let q = QuantumNumbers::new(n, 1);
        for step in 0..=240u32 {
            let omega_l = f64::from(step) * 0.05;
            let f = FieldParams::new(omega_l, 1.0).expect("sweep fields valid");
            out.push((n, omega_l, kind.eval(q, u, &f, k)));
        }
    }
    out
}

/// Criterion: the qualitative field-dependence claims, asserted on the sweep
/// data: ⟨r²⟩, |⟨p²⟩|, |⟨T⟩|, |χ| strictly decreasing in ω_L; the ⟨V⟩ n-gap
/// widening; the χ and ⟨T⟩ n-gaps compressed below 55% of their zero-field
/// size by ω_L = 12 (both gaps scale as 1/γ, so the exact ratio is
/// γ(0)/γ(12); the stiffest molecule, CO, sits just under 0.50).
pub fn check_qualitative(
    molecules: &[MoleculeConstants],
    k: &SusceptibilityConstants,
) -> Check {
    let mut failures = Vec::new();
    for mol in molecules {
        let u = working_units(mol);
        for kind in [
            ObservableKind::R2,
            ObservableKind::P2,
            ObservableKind::T,
            ObservableKind::Chi,
        ] {
            let data = figure_sweep(kind, &u, k);
            for n in 0..4u32 {
                let series: Vec<f64> = data
                    .iter()
                    .filter(|(nn, _, _)| *nn == n)
                    .map(|(_, _, v)| v.abs())
                    .collect();
                if !series.windows(2).all(|w| w[1] < w[0]) {
                    failures.push(format!("{} {} n={n} not strictly decreasing", mol.name, kind.label()));
                }
            }
        }
        // n-gap behavior between n = 0 and n = 3 at ω_L = 0 vs ω_L = 12
        let gap = |kind: ObservableKind, omega_l: f64| {
            let f = FieldParams::new(omega_l, 1.0).expect("valid");
            (kind.eval(QuantumNumbers::new(3, 1), &u, &f, k)
                - kind.eval(QuantumNumbers::new(0, 1), &u, &f, k))
            .abs()
        };
        if gap(ObservableKind::V, 12.0) <= gap(ObservableKind::V, 0.0) {
            failures.push(format!("{} V n-gap did not widen", mol.name));
        }
        for kind in [ObservableKind::Chi, ObservableKind::T] {
            if gap(kind, 12.0) >= 0.55 * gap(kind, 0.0) {
                failures.push(format!("{} {} n-gap not compressed below 55%", mol.name, kind.label()));
            }
        }
    }
    let passed = failures.is_empty();
    let detail = if passed {
        "monotone decay and n-gap behavior hold for all molecules".to_string()
    } else {
        failures.join("; ")
    };
    Check::new("qualitative field dependence", passed, detail)
}

/// Run every check; the CLI renders the report and maps it to an exit code.
pub fn run_all(
    molecules: &[MoleculeConstants],
    k: &SusceptibilityConstants,
) -> Result<Vec<Check>> {
    Ok(vec![
        check_golden_energies(molecules),
        check_golden_observables(molecules, k),
        check_identities(molecules),
        check_nu_equivalence(molecules)?,
        check_wavefunctions(molecules)?,
        check_fd_oracle()?,
        check_hft(molecules)?,
        check_qualitative(molecules, k),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::builtin_molecules;

    #[test]
    fn builtin_dataset_passes_fast_checks() {
        let mols = builtin_molecules();
        let k = SusceptibilityConstants::default();
        let e = check_golden_energies(&mols);
        assert!(e.passed, "{}", e.detail);
        let o = check_golden_observables(&mols, &k);
        assert!(o.passed, "{}", o.detail);
        let i = check_identities(&mols);
        assert!(i.passed, "{}", i.detail);
        let q = check_qualitative(&mols, &k);
        assert!(q.passed, "{}", q.detail);
    }

    #[test]
    fn perturbed_mass_fails_golden_energies() {
        let mut mols = builtin_molecules();
        mols[0].mass *= 1.01;
        let check = check_golden_energies(&mols);
        assert!(!check.passed);
    }
}
