//! Command-line interface: spectrum and observable tables, figure sweep data,
//! and the full verification suite.
//!
//! Exit codes: 0 on success, 1 when verification fails, 2 for usage or I/O
//! errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use iopiqp::format::format_six;
use iopiqp::observables::{self, SusceptibilityConstants};
use iopiqp::verify::{self, ObservableKind};
use iopiqp::{
    builtin_molecules, parse_molecules, FieldParams, MoleculeConstants, QuantumNumbers,
    WorkingUnits,
};

#[derive(Parser)]
#[command(
    name = "iopiqp",
    about = "Energy spectra, observables and diamagnetic response of diatomic molecules \
             in an oscillator plus inverse-quadratic potential under a magnetic field",
    version
)]
struct Cli {
    /// Molecule constants CSV (header: name,omega_1e13_s,mass_amu); defaults
    /// to the built-in CO, HCl, I2, H2 table
    #[arg(long, global = true)]
    molecules: Option<PathBuf>,

    /// Unit convention for the working mass and frequency
    #[arg(long, global = true, value_enum, default_value_t = Units::Paper)]
    units: Units,

    /// Write output files into this directory instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Units {
    /// reduced mass in kg, frequency in s⁻¹ (reproduces the reference tables)
    Paper,
    /// mass ≡ 1 and the table frequency used directly as the confinement Ω
    Dimensionless,
}

#[derive(Args)]
struct LatticeArgs {
    /// Vibrational levels n
    #[arg(long, value_delimiter = ',', default_values_t = [0u32, 1, 2, 3])]
    n: Vec<u32>,

    /// Magnetic quantum numbers m
    #[arg(long, value_delimiter = ',', default_values_t = [0i32, 1])]
    m: Vec<i32>,

    /// Inverse-quadratic strengths g
    #[arg(long, value_delimiter = ',', default_values_t = [0.0f64, 1.0])]
    g: Vec<f64>,

    /// Larmor frequencies ω_L
    #[arg(long = "omega-l", value_delimiter = ',', default_values_t = [0.0f64, 5.0, 10.0])]
    omega_l: Vec<f64>,
}

#[derive(Args)]
struct ChargeArgs {
    /// Effective charge number z in the susceptibility prefactor
    #[arg(long, default_value_t = 1.0)]
    z: f64,

    /// Elementary charge value e in the susceptibility prefactor
    #[arg(long, default_value_t = 1.0)]
    e: f64,
}

#[derive(Subcommand)]
enum Command {
    /// Energy spectrum over the quantum-number/field lattice
    Spectrum(LatticeArgs),
    /// Expectation values, susceptibility and magnetic moment over the lattice
    Observables {
        #[command(flatten)]
        lattice: LatticeArgs,
        #[command(flatten)]
        charge: ChargeArgs,
    },
    /// Field-sweep data behind the observable figures (ω_L 0..12, g = m = 1),
    /// one CSV per observable
    Figures {
        #[command(flatten)]
        charge: ChargeArgs,
    },
    /// Run the full verification suite and report each check
    Verify,
}

fn working_units_for(mol: &MoleculeConstants, units: Units) -> WorkingUnits {
    match units {
        Units::Paper => WorkingUnits::paper(mol),
        Units::Dimensionless => WorkingUnits::dimensionless(mol.omega),
    }
}

/// Molecules in lexicographic name order, matching the row-ordering contract.
fn load_molecules(path: &Option<PathBuf>) -> Result<Vec<MoleculeConstants>, String> {
    let mut mols = match path {
        None => builtin_molecules(),
        Some(p) => {
            let text = fs::read_to_string(p)
                .map_err(|e| format!("cannot read {}: {e}", p.display()))?;
            let mols = parse_molecules(&text)
                .map_err(|e| format!("{}: {e}", p.display()))?;
            if mols.is_empty() {
                return Err(format!("{}: no molecules in table", p.display()));
            }
            mols
        }
    };
    mols.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(mols)
}

/// Write `name` into the output directory, or stream to stdout with a
/// `# file:` separator when no directory is given.
fn emit(out: &Option<PathBuf>, name: &str, content: &str) -> Result<(), String> {
    match out {
        None => {
            print!("{content}");
            Ok(())
        }
        Some(dir) => {
            fs::create_dir_all(dir)
                .map_err(|e| format!("cannot create {}: {e}", dir.display()))?;
            let path = dir.join(name);
            fs::write(&path, content)
                .map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
    }
}

/// Sort and deduplicate the lattice lists so row order is a pure function of
/// the set of requested points.
fn normalize_lattice(lattice: &LatticeArgs) -> Result<LatticeArgs, String> {
    if lattice.n.is_empty()
        || lattice.m.is_empty()
        || lattice.g.is_empty()
        || lattice.omega_l.is_empty()
    {
        return Err("lattice lists must be non-empty".into());
    }
    for &g in &lattice.g {
        if !g.is_finite() || g < 0.0 {
            return Err(format!("g must be finite and non-negative, got {g}"));
        }
    }
    for &w in &lattice.omega_l {
        if !w.is_finite() || w < 0.0 {
            return Err(format!("omega-l must be finite and non-negative, got {w}"));
        }
    }
    let mut n = lattice.n.clone();
    n.sort_unstable();
    n.dedup();
    let mut m = lattice.m.clone();
    m.sort_unstable();
    m.dedup();
    let mut g = lattice.g.clone();
    g.sort_by(f64::total_cmp);
    g.dedup();
    let mut omega_l = lattice.omega_l.clone();
    omega_l.sort_by(f64::total_cmp);
    omega_l.dedup();
    Ok(LatticeArgs { n, m, g, omega_l })
}

/// Fixed row order: (molecule, g, m, ω_L, n) ascending, molecules
/// lexicographic by name. Output is byte-identical across runs.
fn lattice_rows(
    molecules: &[MoleculeConstants],
    units: Units,
    lattice: &LatticeArgs,
    mut row: impl FnMut(&MoleculeConstants, &WorkingUnits, QuantumNumbers, &FieldParams) -> String,
) -> String {
    let mut out = String::new();
    for mol in molecules {
        let u = working_units_for(mol, units);
        for &g in &lattice.g {
            for &m in &lattice.m {
                for &omega_l in &lattice.omega_l {
                    let f = FieldParams::new(omega_l, g).expect("validated above");
                    for &n in &lattice.n {
                        out.push_str(&row(mol, &u, QuantumNumbers::new(n, m), &f));
                        out.push('\n');
                    }
                }
            }
        }
    }
    out
}

fn cmd_spectrum(
    molecules: &[MoleculeConstants],
    units: Units,
    lattice: &LatticeArgs,
) -> String {
    let mut csv = String::from("molecule,g,m,omega_L,n,E\n");
    csv.push_str(&lattice_rows(molecules, units, lattice, |mol, u, q, f| {
        format!(
            "{},{},{},{},{},{}",
            mol.name,
            f.g,
            q.m,
            f.omega_l,
            q.n,
            format_six(observables::energy(q, u, f))
        )
    }));
    csv
}

fn cmd_observables(
    molecules: &[MoleculeConstants],
    units: Units,
    lattice: &LatticeArgs,
    k: &SusceptibilityConstants,
) -> String {
    let mut csv = String::from("molecule,g,m,omega_L,n,r2,p2,T,V,chi,mu_B\n");
    csv.push_str(&lattice_rows(molecules, units, lattice, |mol, u, q, f| {
        let rec = observables::spectrum_record(&mol.name, q, u, f, k);
        format!(
            "{},{},{},{},{},{},{},{},{},{},{}",
            rec.molecule,
            f.g,
            q.m,
            f.omega_l,
            q.n,
            format_six(rec.r2),
            format_six(rec.p2),
            format_six(rec.t),
            format_six(rec.v),
            format_six(rec.chi),
            format_six(rec.mu_b)
        )
    }));
    csv
}

/// One CSV per observable, named after its column label.
fn cmd_figures(
    molecules: &[MoleculeConstants],
    units: Units,
    k: &SusceptibilityConstants,
) -> Vec<(String, String)> {
    let mut files = Vec::new();
    for kind in ObservableKind::ALL {
        let mut csv = String::from("molecule,n,omega_L,value\n");
        for mol in molecules {
            let u = working_units_for(mol, units);
            for (n, omega_l, value) in verify::figure_sweep(kind, &u, k) {
                // ω_L printed as the exact multiple of 0.05 it is
                csv.push_str(&format!(
                    "{},{},{:.2},{}\n",
                    mol.name,
                    n,
                    omega_l,
                    format_six(value)
                ));
            }
        }
        files.push((format!("{}.csv", kind.label()), csv));
    }
    files
}

fn cmd_verify(
    molecules: &[MoleculeConstants],
    k: &SusceptibilityConstants,
) -> Result<(String, bool), String> {
    for name in iopiqp::golden::MOLECULE_NAMES {
        if !molecules.iter().any(|m| m.name == name) {
            return Err(format!(
                "verify needs the reference molecule set; {name} is missing from the table"
            ));
        }
    }
    let checks = verify::run_all(molecules, k).map_err(|e| e.to_string())?;
    let mut text = String::new();
    let mut all_passed = true;
    for check in &checks {
        let status = if check.passed { "PASS" } else { "FAIL" };
        all_passed &= check.passed;
        text.push_str(&format!("[{status}] {}: {}\n", check.name, check.detail));
    }
    text.push_str(if all_passed {
        "verification passed\n"
    } else {
        "verification FAILED\n"
    });
    Ok((text, all_passed))
}

fn run(cli: &Cli) -> Result<ExitCode, String> {
    let molecules = load_molecules(&cli.molecules)?;
    match &cli.command {
        Command::Spectrum(lattice) => {
            let lattice = normalize_lattice(lattice)?;
            emit(&cli.out, "spectrum.csv", &cmd_spectrum(&molecules, cli.units, &lattice))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Observables { lattice, charge } => {
            let lattice = normalize_lattice(lattice)?;
            let k = SusceptibilityConstants {
                z: charge.z,
                e: charge.e,
                ..SusceptibilityConstants::default()
            };
            emit(
                &cli.out,
                "observables.csv",
                &cmd_observables(&molecules, cli.units, &lattice, &k),
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Figures { charge } => {
            let k = SusceptibilityConstants {
                z: charge.z,
                e: charge.e,
                ..SusceptibilityConstants::default()
            };
            for (name, csv) in cmd_figures(&molecules, cli.units, &k) {
                if cli.out.is_none() {
                    println!("# file: {name}");
                }
                emit(&cli.out, &name, &csv)?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify => {
            let (text, all_passed) = cmd_verify(&molecules, &SusceptibilityConstants::default())?;
            emit(&cli.out, "verify.txt", &text)?;
            if all_passed {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
