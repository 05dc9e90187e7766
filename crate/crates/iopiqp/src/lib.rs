//! Closed-form spectra and observables for a diatomic molecule bound by an
//! isotropic oscillator plus an inverse-quadratic core, in a uniform magnetic
//! field, with independent numerical verification.
//!
//! The library has three layers:
//!
//! * the closed forms ([`observables`], [`wavefunction`]) — energies,
//!   expectation values, diamagnetic susceptibility, magnetic moment, and the
//!   normalized radial eigenfunctions, all evaluated directly;
//! * the parametric second-order solver engine ([`nu`]) and the adapter that
//!   maps the radial problem onto it ([`model`]), which must reproduce the
//!   closed forms to near machine precision;
//! * independent cross-checks ([`oracle`], [`verify`], [`golden`]) — a
//!   finite-difference eigensolver, Gauss-Laguerre quadrature of the
//!   wavefunctions, derivative identities, and the verbatim published
//!   reference tables the whole stack must reproduce at printed precision.
//!
//! The [`verify`] module bundles every check into a pass/fail report; the
//! companion CLI renders it.

pub mod error;
pub mod format;
pub mod golden;
pub mod model;
pub mod nu;
pub mod observables;
pub mod oracle;
pub mod specfun;
pub mod verify;
pub mod wavefunction;

pub use error::{Error, Result};
pub use model::{
    builtin_molecules, parse_molecules, working_units, FieldParams, MoleculeConstants,
    QuantumNumbers, UnitsMode, WorkingUnits,
};
pub use observables::{spectrum_record, SpectrumRecord, SusceptibilityConstants};
