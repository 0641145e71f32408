//! Bound-state spectra, radial wavefunctions, SU(1,1) ladder-operator
//! algebra, and closed-form matrix elements for the generalized Kratzer
//! molecular potential V(r) = a/r + b/r² + c.
//!
//! The crate reproduces published CO/NO energy and matrix-element tables and
//! cross-checks every closed form against an independent Gauss–Legendre
//! quadrature oracle. Physical parameters push `Γ`, powers, and exponentials
//! far outside the range of 64-bit floats (β ≈ 212 for CO), so all
//! wavefunction assembly happens in log space.

// `!(x > 0.0)` guards deliberately reject NaN along with nonpositive values;
// the `x <= 0.0` rewrite clippy suggests would let NaN through.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod format;
pub mod ladder;
pub mod matrix_elements;
pub mod model;
pub mod oracle;
pub mod reference;
pub mod spectrum;
pub mod wavefunction;

pub use error::{Error, Result};
pub use ladder::{
    apply_ladder, casimir_eigenvalue, ladder_coeffs, verify_algebra, AlgebraReport, Direction,
    LadderCoefficients, OperatorAction,
};
pub use matrix_elements::{
    gamma_offdiagonal, me_r, me_rddr, table_row, GammaKind, MatrixElementRow, OperatorTag,
    TridiagonalElement,
};
pub use model::{
    builtin_molecules, evaluate_potential, find_molecule, kratzer_params, modified_kratzer_params,
    mu_energy, MoleculeSpec, PhysicalConstants, PotentialKind, PotentialParams,
};
pub use oracle::{
    check_normalization, check_orthogonality, full_validation, integrate, me_numeric,
    me_numeric_ratio, me_numeric_weighted, overlap_adjacent_fixed_xi, recommended_scale, BasisKind,
    CheckStatus, QuadratureSpec, ValidationEntry, ValidationReport, WeightKind,
};
pub use spectrum::{beta_ell, energy, spectral_context, SpectralContext};
pub use wavefunction::{
    eval_radial, eval_radial_derivative, eval_radial_second_derivative, laguerre,
    log_normalization, LaguerreEval, RadialWavefunction,
};
