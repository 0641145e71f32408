//! Closed-form tridiagonal matrix elements of r and r·d/dr in the fixed-ξ
//! basis, the Γ₁/Γ₂ combinations, and the published per-(n, ℓ) table rows.
//!
//! Table rows use the negative (printed) ξ convention; the quadrature oracle
//! holds the integral truth and the validation report carries the known
//! divergences between the two (see `oracle`).

use crate::error::{Error, Result};
use crate::ladder::ladder_coeffs;
use crate::spectrum::SpectralContext;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OperatorTag {
    R,
    RDdr,
}

impl OperatorTag {
    pub fn label(self) -> &'static str {
        match self {
            OperatorTag::R => "r",
            OperatorTag::RDdr => "r_ddr",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TridiagonalElement {
    pub m: u32,
    pub n: u32,
    pub value: f64,
    pub operator_tag: OperatorTag,
}

/// ⟨m|r|n⟩ = (1/ξ)[(n+β+1)δ_{m,n} − ℓ₊δ_{m,n+1} − ℓ₋δ_{m,n−1}], ξ printed.
pub fn me_r(m: u32, n: u32, ctx: &SpectralContext) -> TridiagonalElement {
    let coeffs = ladder_coeffs(n, ctx.beta).expect("nonnegative radicands for beta >= 0");
    let raw = if m == n {
        n as f64 + ctx.beta + 1.0
    } else if m == n + 1 {
        -coeffs.ell_plus
    } else if m + 1 == n {
        -coeffs.ell_minus
    } else {
        return TridiagonalElement {
            m,
            n,
            value: 0.0,
            operator_tag: OperatorTag::R,
        };
    };
    TridiagonalElement {
        m,
        n,
        value: raw / ctx.xi_printed,
        operator_tag: OperatorTag::R,
    }
}

/// ⟨m|r·d/dr|n⟩ = (ℓ₊/2)δ_{m,n+1} − (ℓ₋/2)δ_{m,n−1} − δ_{m,n}.
pub fn me_rddr(m: u32, n: u32, ctx: &SpectralContext) -> TridiagonalElement {
    let coeffs = ladder_coeffs(n, ctx.beta).expect("nonnegative radicands for beta >= 0");
    let value = if m == n {
        -1.0
    } else if m == n + 1 {
        0.5 * coeffs.ell_plus
    } else if m + 1 == n {
        -0.5 * coeffs.ell_minus
    } else {
        0.0
    };
    TridiagonalElement {
        m,
        n,
        value,
        operator_tag: OperatorTag::RDdr,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GammaKind {
    Sum,
    Difference,
}

/// Entries of ξ⟨r⟩ + ⟨r·d/dr⟩ (`Sum`) and ξ⟨r⟩ − ⟨r·d/dr⟩ (`Difference`).
/// Sum: (n+β)δ_{m,n} − ½ℓ₊δ_{m,n+1} − (3/2)ℓ₋δ_{m,n−1}.
/// Difference: (n+β+2)δ_{m,n} − (3/2)ℓ₊δ_{m,n+1} − ½ℓ₋δ_{m,n−1}.
pub fn gamma_offdiagonal(kind: GammaKind, m: u32, n: u32, ctx: &SpectralContext) -> Result<f64> {
    let dist = (m as i64 - n as i64).abs();
    if dist > 1 {
        return Err(Error::InvalidArgument(format!(
            "gamma combinations are tridiagonal; |m-n| = {dist}"
        )));
    }
    let coeffs = ladder_coeffs(n, ctx.beta)?;
    let nf = n as f64;
    Ok(match kind {
        GammaKind::Sum => {
            if m == n {
                nf + ctx.beta
            } else if m == n + 1 {
                -0.5 * coeffs.ell_plus
            } else {
                -1.5 * coeffs.ell_minus
            }
        }
        GammaKind::Difference => {
            if m == n {
                nf + ctx.beta + 2.0
            } else if m == n + 1 {
                -1.5 * coeffs.ell_plus
            } else {
                -0.5 * coeffs.ell_minus
            }
        }
    })
}

/// One row of the published matrix-element tables.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MatrixElementRow {
    pub n: u32,
    pub ell: u32,
    /// Å (negative in the printed ξ convention).
    pub r_elem: f64,
    pub rddr_elem: f64,
    pub gamma1: f64,
    pub gamma2: f64,
}

/// Published combination per (n, ℓ): the diagonal term joined with the
/// raising radical at n+1 and the lowering radical at n−1,
/// P₊ = √((n+2)(n+β+3)(n+2β+3)/(n+β+2)), P₋ = √((n−1)(n+β−1)(n+2β)/(n+β)).
pub fn table_row(ctx: &SpectralContext) -> Result<MatrixElementRow> {
    if ctx.n == 0 {
        return Err(Error::Domain(
            "table rows start at n = 1; the lowering radical is degenerate at n = 0".to_string(),
        ));
    }
    let n = ctx.n as f64;
    let b = ctx.beta;
    let p_plus = ((n + 2.0) * (n + b + 3.0) * (n + 2.0 * b + 3.0) / (n + b + 2.0)).sqrt();
    let p_minus = ((n - 1.0) * (n + b - 1.0) * (n + 2.0 * b) / (n + b)).sqrt();
    Ok(MatrixElementRow {
        n: ctx.n,
        ell: ctx.ell,
        r_elem: ((n + b + 1.0) - p_plus - p_minus) / ctx.xi_printed,
        rddr_elem: 0.5 * p_plus - 0.5 * p_minus - 1.0,
        gamma1: (n + b) - 0.5 * p_plus - 1.5 * p_minus,
        gamma2: (n + b + 2.0) - 1.5 * p_plus - 0.5 * p_minus,
    })
}
