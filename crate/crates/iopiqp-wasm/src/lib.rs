//! Browser bindings for the interactive demo page: energy-level field sweeps,
//! radial wavefunction profiles, and observable sweeps, each returned as a
//! flat numeric buffer the page reshapes for plotting.

use wasm_bindgen::prelude::*;

use iopiqp::observables::{self, SusceptibilityConstants};
use iopiqp::verify::ObservableKind;
use iopiqp::wavefunction::{radial_value, RadialState};
use iopiqp::{builtin_molecules, FieldParams, MoleculeConstants, QuantumNumbers, WorkingUnits};

fn molecule(name: &str) -> Result<MoleculeConstants, String> {
    builtin_molecules()
        .into_iter()
        .find(|m| m.name == name)
        .ok_or_else(|| format!("unknown molecule {name}"))
}

fn units(name: &str) -> Result<WorkingUnits, String> {
    Ok(WorkingUnits::paper(&molecule(name)?))
}

fn kind(label: &str) -> Result<ObservableKind, String> {
    ObservableKind::ALL
        .into_iter()
        .find(|k| k.label() == label)
        .ok_or_else(|| format!("unknown observable {label}; use r2, p2, T, V or chi"))
}

/// Names of the built-in molecules, for the selector.
#[wasm_bindgen]
pub fn molecule_names() -> Vec<String> {
    builtin_molecules().into_iter().map(|m| m.name).collect()
}

fn energy_sweep_impl(
    name: &str,
    g: f64,
    m: i32,
    omega_l_max: f64,
    steps: u32,
    n_levels: u32,
) -> Result<Vec<f64>, String> {
    if steps < 2 || n_levels < 1 {
        return Err("need at least 2 steps and 1 level".into());
    }
    let u = units(name)?;
    let mut out = Vec::with_capacity((steps * n_levels) as usize);
    for n in 0..n_levels {
        for i in 0..steps {
            let omega_l = omega_l_max * f64::from(i) / f64::from(steps - 1);
            let f = FieldParams::new(omega_l, g).map_err(|e| e.to_string())?;
            out.push(observables::energy(QuantumNumbers::new(n, m), &u, &f));
        }
    }
    Ok(out)
}

/// Energies over a field sweep, flattened as `n_levels` consecutive series of
/// `steps` values each (ω_L runs 0..=omega_l_max per series).
#[wasm_bindgen]
pub fn energy_sweep(
    name: &str,
    g: f64,
    m: i32,
    omega_l_max: f64,
    steps: u32,
    n_levels: u32,
) -> Result<Vec<f64>, JsValue> {
    energy_sweep_impl(name, g, m, omega_l_max, steps, n_levels).map_err(|e| JsValue::from_str(&e))
}

fn radial_profile_impl(
    name: &str,
    n: u32,
    m: i32,
    g: f64,
    omega_l: f64,
    r_max: f64,
    points: u32,
) -> Result<Vec<f64>, String> {
    if points < 2 || !(r_max > 0.0) {
        return Err("need at least 2 points and r_max > 0".into());
    }
    let u = units(name)?;
    let f = FieldParams::new(omega_l, g).map_err(|e| e.to_string())?;
    let s = RadialState::new(QuantumNumbers::new(n, m), &u, &f).map_err(|e| e.to_string())?;
    let mut out = Vec::with_capacity(points as usize);
    for i in 0..points {
        // open at r = 0: start half a step in
        let r = r_max * (f64::from(i) + 0.5) / f64::from(points);
        out.push(radial_value(&s, r).map_err(|e| e.to_string())?);
    }
    Ok(out)
}

/// The normalized radial wavefunction R(r) sampled on (0, r_max].
#[wasm_bindgen]
pub fn radial_profile(
    name: &str,
    n: u32,
    m: i32,
    g: f64,
    omega_l: f64,
    r_max: f64,
    points: u32,
) -> Result<Vec<f64>, JsValue> {
    radial_profile_impl(name, n, m, g, omega_l, r_max, points).map_err(|e| JsValue::from_str(&e))
}

fn observable_sweep_impl(
    name: &str,
    label: &str,
    n: u32,
    m: i32,
    g: f64,
    omega_l_max: f64,
    steps: u32,
) -> Result<Vec<f64>, String> {
    if steps < 2 {
        return Err("need at least 2 steps".into());
    }
    let u = units(name)?;
    let kind = kind(label)?;
    let k = SusceptibilityConstants::default();
    let q = QuantumNumbers::new(n, m);
    let mut out = Vec::with_capacity(steps as usize);
    for i in 0..steps {
        let omega_l = omega_l_max * f64::from(i) / f64::from(steps - 1);
        let f = FieldParams::new(omega_l, g).map_err(|e| e.to_string())?;
        out.push(kind.eval(q, &u, &f, &k));
    }
    Ok(out)
}

/// One observable (r2, p2, T, V or chi) over a field sweep of `steps` values.
#[wasm_bindgen]
pub fn observable_sweep(
    name: &str,
    label: &str,
    n: u32,
    m: i32,
    g: f64,
    omega_l_max: f64,
    steps: u32,
) -> Result<Vec<f64>, JsValue> {
    observable_sweep_impl(name, label, n, m, g, omega_l_max, steps)
        .map_err(|e| JsValue::from_str(&e))
}
