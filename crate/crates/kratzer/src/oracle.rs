//! Independent quadrature oracle. Everything the closed forms claim —
//! normalization, orthogonality, tridiagonal matrix elements, operator
//! identities — is re-derived here by composite Gauss–Legendre integration
//! and reported as a [`ValidationReport`] of pass/fail entries.
//!
//! Two inner products appear. The literal radial measure r²dr is what the
//! unit-norm states R_n are normalized under. The ladder algebra, however, is
//! unitary under the measure r·dr with states T_n = √(2(n+β+1)/ξ)·R_n, and
//! only in that product do the printed tridiagonal patterns become exact
//! operator matrices. Entries that frame one convention's numbers in the
//! other's basis disagree by known factors; the report carries those as
//! `expected-divergence` lines (informational, never failures) next to pass
//! entries that pin the exact ratios.

use crate::error::{Error, Result};
use crate::format::{fmt_sig, json_escape};
use crate::ladder::{default_algebra_grid, verify_algebra};
use crate::matrix_elements::{gamma_offdiagonal, me_r, me_rddr, table_row, GammaKind, OperatorTag};
use crate::model::{
    evaluate_potential, mu_energy, MoleculeSpec, PhysicalConstants, PotentialKind, PotentialParams,
};
use crate::reference;
use crate::spectrum::{beta_ell, energy, spectral_context, SpectralContext};
use crate::wavefunction::{eval_radial, eval_radial_derivative, laguerre, RadialWavefunction};

/// |∫R²r²dr − 1| gate.
pub const NORMALIZATION_TOLERANCE: f64 = 1e-8;
/// |∫R_mR_nr²dr| gate for states that are exactly orthogonal.
pub const ORTHOGONALITY_TOLERANCE: f64 = 1e-8;
/// Relative gate for quadrature matrix elements against closed forms.
pub const OPERATOR_QUAD_REL_TOLERANCE: f64 = 1e-6;

/// Composite Gauss–Legendre layout for ∫₀^∞ truncated at
/// r_max = r_max_scale / scale, split into equal panels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub r_max_scale: f64,
    pub panels: usize,
    pub points_per_panel: usize,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            r_max_scale: 40.0,
            panels: 512,
            points_per_panel: 15,
        }
    }
}

fn legendre_with_derivative(k: usize, x: f64) -> (f64, f64) {
    let mut prev = 1.0;
    let mut p = x;
    for j in 1..k {
        let jf = j as f64;
        let next = ((2.0 * jf + 1.0) * x * p - jf * prev) / (jf + 1.0);
        prev = p;
        p = next;
    }
    let d = k as f64 * (x * p - prev) / (x * x - 1.0);
    (p, d)
}

/// Nodes (ascending) and weights of the k-point Gauss–Legendre rule on
/// [-1, 1], found by Newton iteration on the Legendre recurrence.
pub fn gauss_legendre_nodes(k: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    if k == 0 {
        return Err(Error::InvalidArgument(
            "a quadrature rule needs at least one point".to_string(),
        ));
    }
    if k == 1 {
        return Ok((vec![0.0], vec![2.0]));
    }
    let mut nodes = vec![0.0; k];
    let mut weights = vec![0.0; k];
    let kf = k as f64;
    for i in 0..k.div_ceil(2) {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (kf + 0.5)).cos();
        for _ in 0..64 {
            let (p, d) = legendre_with_derivative(k, x);
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(k, x);
        let w = 2.0 / ((1.0 - x * x) * d * d);
        nodes[i] = -x;
        nodes[k - 1 - i] = x;
        weights[i] = w;
        weights[k - 1 - i] = w;
    }
    Ok((nodes, weights))
}

/// ∫₀^{r_max} f(r) dr with r_max = spec.r_max_scale / scale. Panel-local
/// accumulation keeps the partial sums small; any non-finite sample aborts
/// with the offending radius.
pub fn integrate<F: Fn(f64) -> f64>(f: F, spec: &QuadratureSpec, scale: f64) -> Result<f64> {
    if !(scale.is_finite() && scale > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "quadrature scale must be positive and finite, got {scale}"
        )));
    }
    if spec.panels == 0 || spec.points_per_panel == 0 || !(spec.r_max_scale > 0.0) {
        return Err(Error::InvalidArgument(
            "quadrature spec needs positive r_max_scale, panels, and points".to_string(),
        ));
    }
    let (nodes, weights) = gauss_legendre_nodes(spec.points_per_panel)?;
    let r_max = spec.r_max_scale / scale;
    let h = r_max / spec.panels as f64;
    let half = 0.5 * h;
    let mut total = 0.0;
    for panel in 0..spec.panels {
        let mid = (panel as f64 + 0.5) * h;
        let mut acc = 0.0;
        for (x, w) in nodes.iter().zip(&weights) {
            let r = mid + half * x;
            let v = f(r);
            if !v.is_finite() {
                return Err(Error::NonFiniteSample { r });
            }
            acc += w * v;
        }
        total += acc * half;
    }
    Ok(total)
}

/// Truncation scale for states up to n_hi: the integrand behaves like
/// e^{-ξr}(ξr)^{2β+2+2n}, whose mass sits near ξr ≈ 2β+3+2n and decays
/// slowly past it, so the cutoff ξ·r_max = 40·max(1, (2β+3+6n)/10) keeps the
/// discarded tail below 1e-13 of the integral across the whole β range.
pub fn recommended_scale(beta: f64, xi: f64, n_hi: u32) -> f64 {
    let spread = (2.0 * beta + 3.0 + 6.0 * n_hi as f64) / 10.0;
    xi / spread.max(1.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisKind {
    /// Both states share one ξ (the printed-table convention). Adjacent
    /// levels overlap by a known closed form; |m−n| ≥ 2 is exactly zero.
    FixedXi,
    /// Each state carries its own ξ_n; these are the energy eigenstates and
    /// every pair is orthogonal under r²dr.
    Eigenstates,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    /// A quantified, derived mismatch between conventions — reported for
    /// transparency, never counted as a failure.
    ExpectedDivergence,
}

impl CheckStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::ExpectedDivergence => "expected-divergence",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ValidationEntry {
    pub name: String,
    pub computed: f64,
    pub expected: f64,
    pub abs_err: f64,
    pub rel_err: f64,
    pub tolerance: f64,
    pub status: CheckStatus,
}

impl ValidationEntry {
    fn gated(name: String, computed: f64, expected: f64, tolerance: f64, relative: bool) -> Self {
        let abs_err = (computed - expected).abs();
        let rel_err = if expected != 0.0 {
            abs_err / expected.abs()
        } else {
            abs_err
        };
        let err = if relative { rel_err } else { abs_err };
        let status = if computed.is_finite() && err <= tolerance {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        Self {
            name,
            computed,
            expected,
            abs_err,
            rel_err,
            tolerance,
            status,
        }
    }

    /// Pass ⇔ |computed − expected| ≤ tolerance.
    pub fn absolute(name: impl Into<String>, computed: f64, expected: f64, tolerance: f64) -> Self {
        Self::gated(name.into(), computed, expected, tolerance, false)
    }

    /// Pass ⇔ |computed − expected| / |expected| ≤ tolerance.
    pub fn relative(name: impl Into<String>, computed: f64, expected: f64, tolerance: f64) -> Self {
        Self::gated(name.into(), computed, expected, tolerance, true)
    }

    /// Informational entry for two quantities that are known to differ.
    pub fn divergence(name: impl Into<String>, computed: f64, expected: f64) -> Self {
        let abs_err = (computed - expected).abs();
        let rel_err = if expected != 0.0 {
            abs_err / expected.abs()
        } else {
            abs_err
        };
        Self {
            name: name.into(),
            computed,
            expected,
            abs_err,
            rel_err,
            tolerance: 0.0,
            status: CheckStatus::ExpectedDivergence,
        }
    }

    pub fn failed(&self) -> bool {
        self.status == CheckStatus::Fail
    }

    fn to_json(&self) -> String {
        format!(
            "{{\"name\": \"{}\", \"computed\": {}, \"expected\": {}, \"abs_err\": {}, \"rel_err\": {}, \"tolerance\": {}, \"status\": \"{}\"}}",
            json_escape(&self.name),
            json_number(self.computed),
            json_number(self.expected),
            json_number(self.abs_err),
            json_number(self.rel_err),
            json_number(self.tolerance),
            self.status.as_str()
        )
    }
}

fn json_number(v: f64) -> String {
    if v.is_finite() {
        fmt_sig(v)
    } else {
        format!("\"{}\"", fmt_sig(v))
    }
}

#[derive(Debug, Clone, Default)]
pub struct ValidationReport {
    pub molecule: String,
    pub potential: String,
    pub entries: Vec<ValidationEntry>,
}

impl ValidationReport {
    pub fn push(&mut self, entry: ValidationEntry) {
        self.entries.push(entry);
    }

    pub fn passed(&self) -> usize {
        self.entries
            .iter()
            .filter(|e| e.status == CheckStatus::Pass)
            .count()
    }

    pub fn failed(&self) -> usize {
        self.entries.iter().filter(|e| e.failed()).count()
    }

    pub fn expected_divergences(&self) -> usize {
        self.entries
            .iter()
            .filter(|e| e.status == CheckStatus::ExpectedDivergence)
            .count()
    }

    pub fn all_pass(&self) -> bool {
        self.failed() == 0
    }

    pub fn to_json(&self) -> String {
        let mut out = String::new();
        out.push_str("{\n");
        out.push_str(&format!(
            "  \"molecule\": \"{}\",\n",
            json_escape(&self.molecule)
        ));
        out.push_str(&format!(
            "  \"potential\": \"{}\",\n",
            json_escape(&self.potential)
        ));
        out.push_str(&format!(
            "  \"summary\": {{\"pass\": {}, \"fail\": {}, \"expected_divergence\": {}}},\n",
            self.passed(),
            self.failed(),
            self.expected_divergences()
        ));
        out.push_str("  \"entries\": [\n");
        for (i, entry) in self.entries.iter().enumerate() {
            out.push_str("    ");
            out.push_str(&entry.to_json());
            if i + 1 < self.entries.len() {
                out.push(',');
            }
            out.push('\n');
        }
        out.push_str("  ]\n}\n");
        out
    }
}

/// ∫R²r²dr against 1 for the state in `ctx`.
pub fn check_normalization(
    n: u32,
    ell: u32,
    ctx: &SpectralContext,
    spec: &QuadratureSpec,
) -> Result<ValidationEntry> {
    if ctx.n != n || ctx.ell != ell {
        return Err(Error::InvalidArgument(format!(
            "context is for (n, l) = ({}, {}), not ({n}, {ell})",
            ctx.n, ctx.ell
        )));
    }
    let w = RadialWavefunction::from_context(ctx);
    let scale = recommended_scale(ctx.beta, ctx.xi_physical, n);
    let value = integrate(
        |r| {
            let v = eval_radial(&w, r);
            v * v * r * r
        },
        spec,
        scale,
    )?;
    Ok(ValidationEntry::absolute(
        format!("normalization.n{n}_l{ell}"),
        value,
        1.0,
        NORMALIZATION_TOLERANCE,
    ))
}

/// λ₊(n) = √((n+1)(n+2β+2)): the raising amplitude in the unitary basis.
fn lambda_plus(n: f64, beta: f64) -> f64 {
    ((n + 1.0) * (n + 2.0 * beta + 2.0)).sqrt()
}

/// λ₋(n) = √(n(n+2β+1)): the lowering amplitude in the unitary basis.
fn lambda_minus(n: f64, beta: f64) -> f64 {
    (n * (n + 2.0 * beta + 1.0)).sqrt()
}

/// ∫R_{n+1}R_n r²dr at common ξ: −λ₊(n) / (2√((n+β+1)(n+β+2))).
/// Fixing one ξ across levels leaves neighbours slightly non-orthogonal
/// under the literal measure; this is the exact residue.
pub fn overlap_adjacent_fixed_xi(n: u32, beta: f64) -> f64 {
    let nf = n as f64;
    -lambda_plus(nf, beta) / (2.0 * ((nf + beta + 1.0) * (nf + beta + 2.0)).sqrt())
}

/// Overlap check for m ≠ n (m == n falls back to normalization).
///
/// Eigenstates (per-level ξ) are orthogonal for every pair, as are fixed-ξ
/// states with |m−n| ≥ 2. Adjacent fixed-ξ states are *not*: the entry for
/// that case verifies the exact closed-form overlap instead of asserting a
/// zero that never holds.
#[allow(clippy::too_many_arguments)]
pub fn check_orthogonality(
    m: u32,
    n: u32,
    ell: u32,
    p: &PotentialParams,
    mu_ev: f64,
    k: &PhysicalConstants,
    basis: BasisKind,
    spec: &QuadratureSpec,
) -> Result<ValidationEntry> {
    if m == n {
        let ctx = spectral_context(p, mu_ev, n, ell, k)?;
        return check_normalization(n, ell, &ctx, spec);
    }
    let (lo, hi) = (m.min(n), m.max(n));
    match basis {
        BasisKind::Eigenstates => {
            let ctx_lo = spectral_context(p, mu_ev, lo, ell, k)?;
            let ctx_hi = spectral_context(p, mu_ev, hi, ell, k)?;
            let w_lo = RadialWavefunction::from_context(&ctx_lo);
            let w_hi = RadialWavefunction::from_context(&ctx_hi);
            // ξ shrinks as n grows, so the upper state sets the extent.
            let scale = recommended_scale(ctx_hi.beta, ctx_hi.xi_physical, hi);
            let value = integrate(
                |r| eval_radial(&w_lo, r) * eval_radial(&w_hi, r) * r * r,
                spec,
                scale,
            )?;
            Ok(ValidationEntry::absolute(
                format!("orthogonality.eigen.n{lo}_n{hi}.l{ell}"),
                value,
                0.0,
                ORTHOGONALITY_TOLERANCE,
            ))
        }
        BasisKind::FixedXi => {
            let ctx = spectral_context(p, mu_ev, lo, ell, k)?;
            let w_lo = RadialWavefunction::from_context(&ctx);
            let w_hi = RadialWavefunction::new(hi, ell, ctx.beta, ctx.xi_physical)?;
            let scale = recommended_scale(ctx.beta, ctx.xi_physical, hi);
            let value = integrate(
                |r| eval_radial(&w_lo, r) * eval_radial(&w_hi, r) * r * r,
                spec,
                scale,
            )?;
            if hi - lo == 1 {
                Ok(ValidationEntry::absolute(
                    format!("overlap.fixed_xi.n{lo}_n{hi}.l{ell}"),
                    value,
                    overlap_adjacent_fixed_xi(lo, ctx.beta),
                    ORTHOGONALITY_TOLERANCE,
                ))
            } else {
                Ok(ValidationEntry::absolute(
                    format!("orthogonality.fixed_xi.n{lo}_n{hi}.l{ell}"),
                    value,
                    0.0,
                    ORTHOGONALITY_TOLERANCE,
                ))
            }
        }
    }
}

/// Inner product the quadrature matrix elements are taken in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightKind {
    /// ∫R_m·(op R_n)·r² dr with unit-norm R states — the literal measure.
    RSquared,
    /// ∫T_m·(op T_n)·r dr with T_j = √(2(j+β+1)/ξ)·R_j — the measure the
    /// ladder algebra is unitary in; tridiagonal patterns are exact here.
    Linear,
}

fn apply_operator(op: OperatorTag, w: &RadialWavefunction, r: f64) -> f64 {
    match op {
        OperatorTag::R => r * eval_radial(w, r),
        OperatorTag::RDdr => match eval_radial_derivative(w, r) {
            Ok(d) => r * d,
            Err(_) => f64::NAN,
        },
    }
}

/// Quadrature ⟨m|op|n⟩ in the chosen inner product, both states at the
/// common (β, ξ) of `ctx`.
pub fn me_numeric_weighted(
    op: OperatorTag,
    m: u32,
    n: u32,
    ctx: &SpectralContext,
    spec: &QuadratureSpec,
    weight: WeightKind,
) -> Result<f64> {
    let beta = ctx.beta;
    let xi = ctx.xi_physical;
    let bra = RadialWavefunction::new(m, ctx.ell, beta, xi)?;
    let ket = RadialWavefunction::new(n, ctx.ell, beta, xi)?;
    let scale = recommended_scale(beta, xi, m.max(n));
    match weight {
        WeightKind::RSquared => integrate(
            |r| eval_radial(&bra, r) * apply_operator(op, &ket, r) * r * r,
            spec,
            scale,
        ),
        WeightKind::Linear => {
            let cm = (2.0 * (m as f64 + beta + 1.0) / xi).sqrt();
            let cn = (2.0 * (n as f64 + beta + 1.0) / xi).sqrt();
            let raw = integrate(
                |r| eval_radial(&bra, r) * apply_operator(op, &ket, r) * r,
                spec,
                scale,
            )?;
            Ok(cm * cn * raw)
        }
    }
}

/// Quadrature ⟨m|op|n⟩ in the literal r²dr measure.
pub fn me_numeric(
    op: OperatorTag,
    m: u32,
    n: u32,
    ctx: &SpectralContext,
    spec: &QuadratureSpec,
) -> Result<f64> {
    me_numeric_weighted(op, m, n, ctx, spec, WeightKind::RSquared)
}

/// Bra-normalized quadrature ratio ∫R_m·(op R_n)·r dr / ∫R_m²·r dr with both
/// states at the common (β, ξ) of `ctx`. This is the convention in which the
/// published tridiagonal entries are reproduced exactly: the r·d/dr matrix
/// with sign, and the r matrix as the same coefficients over physical ξ — so
/// only the r diagonal deviates from print, by exactly a factor of two.
pub fn me_numeric_ratio(
    op: OperatorTag,
    m: u32,
    n: u32,
    ctx: &SpectralContext,
    spec: &QuadratureSpec,
) -> Result<f64> {
    let beta = ctx.beta;
    let xi = ctx.xi_physical;
    let bra = RadialWavefunction::new(m, ctx.ell, beta, xi)?;
    let ket = RadialWavefunction::new(n, ctx.ell, beta, xi)?;
    let scale = recommended_scale(beta, xi, m.max(n));
    let numerator = integrate(
        |r| eval_radial(&bra, r) * apply_operator(op, &ket, r) * r,
        spec,
        scale,
    )?;
    let bra_norm = integrate(
        |r| {
            let v = eval_radial(&bra, r);
            v * v * r
        },
        spec,
        scale,
    )?;
    Ok(numerator / bra_norm)
}

/// ⟨n|r|n⟩ under r²dr: [4(n+β+1)² + (n+1)(n+2β+2) + n(n+2β+1)] / (2(n+β+1)ξ).
fn r2_r_diag(n: f64, beta: f64, xi: f64) -> f64 {
    let d = n + beta + 1.0;
    (4.0 * d * d + (n + 1.0) * (n + 2.0 * beta + 2.0) + n * (n + 2.0 * beta + 1.0)) / (2.0 * d * xi)
}

/// ⟨n+1|r|n⟩ under r²dr: −λ₊(n)(2n+2β+3) / (ξ√((n+β+1)(n+β+2))).
fn r2_r_upper(n: f64, beta: f64, xi: f64) -> f64 {
    -lambda_plus(n, beta) * (2.0 * n + 2.0 * beta + 3.0)
        / (xi * ((n + beta + 1.0) * (n + beta + 2.0)).sqrt())
}

/// ⟨n+1|r·d/dr|n⟩ under r²dr: λ₊(n)(n+β+3) / (2√((n+β+1)(n+β+2))).
fn r2_rddr_upper(n: f64, beta: f64) -> f64 {
    lambda_plus(n, beta) * (n + beta + 3.0) / (2.0 * ((n + beta + 1.0) * (n + beta + 2.0)).sqrt())
}

/// ⟨n−1|r·d/dr|n⟩ under r²dr: −λ₋(n)(n+β−1) / (2√((n+β)(n+β+1))).
fn r2_rddr_lower(n: f64, beta: f64) -> f64 {
    -lambda_minus(n, beta) * (n + beta - 1.0) / (2.0 * ((n + beta) * (n + beta + 1.0)).sqrt())
}

fn divergence_pair(
    report: &mut ValidationReport,
    ratio_name: String,
    divergence_name: String,
    quadrature: f64,
    printed: f64,
    exact_ratio: f64,
) {
    report.push(ValidationEntry::relative(
        ratio_name,
        quadrature / printed,
        exact_ratio,
        OPERATOR_QUAD_REL_TOLERANCE,
    ));
    report.push(ValidationEntry::divergence(
        divergence_name,
        quadrature,
        printed,
    ));
}

/// Runs every check the crate knows how to make for one molecule/potential
/// pair and collects the outcomes. Sections, in order: published energies,
/// the ξ²–energy identity, normalization, orthogonality, ladder algebra,
/// published matrix rows, Γ±-column consistency, shift invariance of the
/// rows, quadrature self-tests, matrix elements against the oracle in both
/// inner products, and the b → 0 limits.
pub fn full_validation(
    molecule: &MoleculeSpec,
    kind: PotentialKind,
    n_max: u32,
    ell_max: u32,
    k: &PhysicalConstants,
    spec: &QuadratureSpec,
) -> Result<ValidationReport> {
    if n_max > 50 || ell_max > 50 {
        return Err(Error::InvalidArgument(format!(
            "validation grid capped at n, l <= 50; got n_max = {n_max}, l_max = {ell_max}"
        )));
    }
    let p = kind.params(molecule);
    let mu = mu_energy(molecule, k);
    let mut report = ValidationReport {
        molecule: molecule.name.clone(),
        potential: kind.label().to_string(),
        entries: Vec::new(),
    };

    let energy_table = match kind {
        PotentialKind::Kratzer => reference::kratzer_energies(&molecule.name),
        PotentialKind::ModifiedKratzer => reference::modified_kratzer_energies(&molecule.name),
    };
    if let Some(rows) = energy_table {
        for row in rows.iter().filter(|r| r.n <= n_max && r.ell <= ell_max) {
            let e = energy(&p, mu, row.n, row.ell, k)?;
            report.push(ValidationEntry::absolute(
                format!("energy.n{}_l{}", row.n, row.ell),
                e,
                row.energy_ev,
                reference::ENERGY_TOLERANCE_EV,
            ));
        }
    }

    // ξ² = 8μ(c − E)/(ħc)² ties the length scale to the binding energy.
    for n in 0..=n_max {
        for ell in 0..=ell_max.min(n) {
            let ctx = spectral_context(&p, mu, n, ell, k)?;
            let rhs = 8.0 * mu * (p.c - ctx.energy) / (k.hbar_c * k.hbar_c);
            report.push(ValidationEntry::relative(
                format!("xi_energy_identity.n{n}_l{ell}"),
                ctx.xi_physical * ctx.xi_physical,
                rhs,
                1e-12,
            ));
        }
    }

    for n in 0..=n_max {
        for ell in 0..=ell_max.min(n) {
            let ctx = spectral_context(&p, mu, n, ell, k)?;
            report.push(check_normalization(n, ell, &ctx, spec)?);
        }
    }

    for lo in 0..n_max {
        for hi in (lo + 1)..=n_max {
            report.push(check_orthogonality(
                lo,
                hi,
                0,
                &p,
                mu,
                k,
                BasisKind::Eigenstates,
                spec,
            )?);
        }
    }
    for lo in 0..n_max {
        for hi in (lo + 2)..=n_max {
            report.push(check_orthogonality(
                lo,
                hi,
                0,
                &p,
                mu,
                k,
                BasisKind::FixedXi,
                spec,
            )?);
        }
    }
    for lo in 0..n_max {
        let entry = check_orthogonality(lo, lo + 1, 0, &p, mu, k, BasisKind::FixedXi, spec)?;
        let value = entry.computed;
        report.push(entry);
        report.push(ValidationEntry::divergence(
            format!("expected-divergence.fixed_xi_adjacent.n{lo}_n{}.l0", lo + 1),
            value,
            0.0,
        ));
    }

    for n in 1..=n_max.min(5) {
        for ell in 0..=ell_max.min(3) {
            let ctx = spectral_context(&p, mu, n, ell, k)?;
            let grid = default_algebra_grid(ctx.beta, ctx.xi_physical);
            let algebra = verify_algebra(n, &ctx, &grid)?;
            for res in &algebra.entries {
                report.push(ValidationEntry::absolute(
                    format!("algebra.n{n}_l{ell}.{}", res.name),
                    res.residual,
                    0.0,
                    res.tolerance,
                ));
            }
        }
    }

    if let Some(rows) = reference::matrix_elements(&molecule.name) {
        for row in rows.iter().filter(|r| r.n <= n_max && r.ell <= ell_max) {
            let ctx = spectral_context(&p, mu, row.n, row.ell, k)?;
            let got = table_row(&ctx)?;
            let base = format!("matrix_row.n{}_l{}", row.n, row.ell);
            report.push(ValidationEntry::absolute(
                format!("{base}.r"),
                got.r_elem,
                row.r_elem,
                reference::R_ELEM_TOLERANCE,
            ));
            report.push(ValidationEntry::relative(
                format!("{base}.rddr"),
                got.rddr_elem,
                row.rddr_elem,
                reference::MATRIX_REL_TOLERANCE,
            ));
            report.push(ValidationEntry::relative(
                format!("{base}.gamma1"),
                got.gamma1,
                row.gamma1,
                reference::MATRIX_REL_TOLERANCE,
            ));
            report.push(ValidationEntry::relative(
                format!("{base}.gamma2"),
                got.gamma2,
                row.gamma2,
                reference::MATRIX_REL_TOLERANCE,
            ));
        }
    }

    // Γ± columns must equal ξ⟨r⟩ ± ⟨r·d/dr⟩ entry by entry.
    let mut worst = 0.0_f64;
    for n in 0..=n_max {
        let ctx = spectral_context(&p, mu, n, 0, k)?;
        for m in [n.saturating_sub(1), n, n + 1] {
            let r_val = me_r(m, n, &ctx).value;
            let d_val = me_rddr(m, n, &ctx).value;
            let sum = gamma_offdiagonal(GammaKind::Sum, m, n, &ctx)?;
            let diff = gamma_offdiagonal(GammaKind::Difference, m, n, &ctx)?;
            let sum_dev = (sum - (ctx.xi_printed * r_val + d_val)).abs() / sum.abs().max(1.0);
            let diff_dev = (diff - (ctx.xi_printed * r_val - d_val)).abs() / diff.abs().max(1.0);
            worst = worst.max(sum_dev).max(diff_dev);
        }
    }
    report.push(ValidationEntry::absolute(
        "gamma_ladder_consistency.worst",
        worst,
        0.0,
        1e-12,
    ));

    // The printed rows depend on the potential only through β and ξ, both
    // invariant under the energy shift between the two variants.
    let other = match kind {
        PotentialKind::Kratzer => PotentialKind::ModifiedKratzer,
        PotentialKind::ModifiedKratzer => PotentialKind::Kratzer,
    };
    let q = other.params(molecule);
    let mut delta = 0.0_f64;
    for n in 1..=n_max {
        let here = table_row(&spectral_context(&p, mu, n, 0, k)?)?;
        let there = table_row(&spectral_context(&q, mu, n, 0, k)?)?;
        delta = delta
            .max((here.r_elem - there.r_elem).abs())
            .max((here.rddr_elem - there.rddr_elem).abs())
            .max((here.gamma1 - there.gamma1).abs())
            .max((here.gamma2 - there.gamma2).abs());
    }
    report.push(ValidationEntry::absolute(
        "shift_invariance.max_row_delta",
        delta,
        0.0,
        0.0,
    ));

    let unit = integrate(|r| (-r).exp(), spec, 1.0)?;
    report.push(ValidationEntry::absolute(
        "quadrature.unit_exponential",
        unit,
        1.0,
        1e-12,
    ));
    let cubic = integrate(|r| (-r).exp() * r * r * r, spec, 1.0)?;
    report.push(ValidationEntry::relative(
        "quadrature.cubic_moment",
        cubic,
        6.0,
        1e-9,
    ));
    // ∫e^{-x} x^8 [L₁⁷(x)]² dx = 10·8! — an exact Laguerre moment.
    let moment = integrate(
        |x| {
            let l = laguerre(1, 7.0, x).value;
            (-x).exp() * x.powi(8) * l * l
        },
        spec,
        0.5,
    )?;
    report.push(ValidationEntry::relative(
        "quadrature.laguerre_moment",
        moment,
        403200.0,
        1e-9,
    ));
    let ctx_top = spectral_context(&p, mu, n_max, 0, k)?;
    let w_top = RadialWavefunction::from_context(&ctx_top);
    let scale_top = recommended_scale(ctx_top.beta, ctx_top.xi_physical, n_max);
    let norm_sq = |r: f64| {
        let v = eval_radial(&w_top, r);
        v * v * r * r
    };
    let coarse = integrate(norm_sq, spec, scale_top)?;
    let doubled = QuadratureSpec {
        panels: spec.panels * 2,
        ..*spec
    };
    let fine = integrate(norm_sq, &doubled, scale_top)?;
    report.push(ValidationEntry::absolute(
        "quadrature.panel_doubling",
        (coarse - fine).abs(),
        0.0,
        1e-10,
    ));

    for n in 0..=n_max.min(3) {
        let ctx = spectral_context(&p, mu, n, 0, k)?;
        let nf = n as f64;
        let b = ctx.beta;
        let xi = ctx.xi_physical;
        let tol = OPERATOR_QUAD_REL_TOLERANCE;

        let lin_r_diag = me_numeric_weighted(OperatorTag::R, n, n, &ctx, spec, WeightKind::Linear)?;
        report.push(ValidationEntry::relative(
            format!("me.linear.r.diag.n{n}"),
            lin_r_diag,
            2.0 * (nf + b + 1.0) / xi,
            tol,
        ));
        let lin_r_upper =
            me_numeric_weighted(OperatorTag::R, n + 1, n, &ctx, spec, WeightKind::Linear)?;
        report.push(ValidationEntry::relative(
            format!("me.linear.r.upper.n{n}"),
            lin_r_upper,
            -lambda_plus(nf, b) / xi,
            tol,
        ));
        let lin_d_diag =
            me_numeric_weighted(OperatorTag::RDdr, n, n, &ctx, spec, WeightKind::Linear)?;
        report.push(ValidationEntry::relative(
            format!("me.linear.rddr.diag.n{n}"),
            lin_d_diag,
            -1.0,
            tol,
        ));
        let lin_d_upper =
            me_numeric_weighted(OperatorTag::RDdr, n + 1, n, &ctx, spec, WeightKind::Linear)?;
        report.push(ValidationEntry::relative(
            format!("me.linear.rddr.upper.n{n}"),
            lin_d_upper,
            0.5 * lambda_plus(nf, b),
            tol,
        ));
        if n >= 1 {
            let lin_r_lower =
                me_numeric_weighted(OperatorTag::R, n - 1, n, &ctx, spec, WeightKind::Linear)?;
            report.push(ValidationEntry::relative(
                format!("me.linear.r.lower.n{n}"),
                lin_r_lower,
                -lambda_minus(nf, b) / xi,
                tol,
            ));
            let lin_d_lower =
                me_numeric_weighted(OperatorTag::RDdr, n - 1, n, &ctx, spec, WeightKind::Linear)?;
            report.push(ValidationEntry::relative(
                format!("me.linear.rddr.lower.n{n}"),
                lin_d_lower,
                -0.5 * lambda_minus(nf, b),
                tol,
            ));
        }

        let quad_r_diag = me_numeric(OperatorTag::R, n, n, &ctx, spec)?;
        report.push(ValidationEntry::relative(
            format!("me.quadratic.r.diag.n{n}"),
            quad_r_diag,
            r2_r_diag(nf, b, xi),
            tol,
        ));
        let quad_r_upper = me_numeric(OperatorTag::R, n + 1, n, &ctx, spec)?;
        report.push(ValidationEntry::relative(
            format!("me.quadratic.r.upper.n{n}"),
            quad_r_upper,
            r2_r_upper(nf, b, xi),
            tol,
        ));
        let quad_d_diag = me_numeric(OperatorTag::RDdr, n, n, &ctx, spec)?;
        report.push(ValidationEntry::relative(
            format!("me.quadratic.rddr.diag.n{n}"),
            quad_d_diag,
            -1.5,
            tol,
        ));
        let quad_d_upper = me_numeric(OperatorTag::RDdr, n + 1, n, &ctx, spec)?;
        report.push(ValidationEntry::relative(
            format!("me.quadratic.rddr.upper.n{n}"),
            quad_d_upper,
            r2_rddr_upper(nf, b),
            tol,
        ));
        if n >= 1 {
            let quad_r_lower = me_numeric(OperatorTag::R, n - 1, n, &ctx, spec)?;
            report.push(ValidationEntry::relative(
                format!("me.quadratic.r.lower.n{n}"),
                quad_r_lower,
                r2_r_upper(nf - 1.0, b, xi),
                tol,
            ));
            let quad_d_lower = me_numeric(OperatorTag::RDdr, n - 1, n, &ctx, spec)?;
            report.push(ValidationEntry::relative(
                format!("me.quadratic.rddr.lower.n{n}"),
                quad_d_lower,
                r2_rddr_lower(nf, b),
                tol,
            ));
        }

        // The printed tridiagonal rows live in the unitary convention with
        // ξ < 0; framed against the oracle the levels differ by exact,
        // derivable ratios. Those ratios are pass-gated; the raw level
        // mismatches are logged as expected divergences.
        let printed_r_diag = me_r(n, n, &ctx).value;
        divergence_pair(
            &mut report,
            format!("me.printed_ratio.r.diag.n{n}"),
            format!("expected-divergence.me.r.diag.printed.n{n}"),
            lin_r_diag,
            printed_r_diag,
            -2.0,
        );
        let printed_r_upper = me_r(n + 1, n, &ctx).value;
        divergence_pair(
            &mut report,
            format!("me.printed_ratio.r.upper.n{n}"),
            format!("expected-divergence.me.r.upper.printed.n{n}"),
            lin_r_upper,
            printed_r_upper,
            -((nf + b + 1.0) / (nf + b + 2.0)).sqrt(),
        );
        report.push(ValidationEntry::divergence(
            format!("expected-divergence.me.rddr.diag.quadratic.n{n}"),
            quad_d_diag,
            me_rddr(n, n, &ctx).value,
        ));

        // Bra-normalized ratios reproduce the published entries directly:
        // every r·d/dr entry with sign, the r off-diagonals at physical ξ,
        // and the r diagonal up to its exact factor of two.
        let ratio_d_diag = me_numeric_ratio(OperatorTag::RDdr, n, n, &ctx, spec)?;
        report.push(ValidationEntry::relative(
            format!("me.ratio.rddr.diag.n{n}"),
            ratio_d_diag,
            me_rddr(n, n, &ctx).value,
            tol,
        ));
        let ratio_d_upper = me_numeric_ratio(OperatorTag::RDdr, n + 1, n, &ctx, spec)?;
        report.push(ValidationEntry::relative(
            format!("me.ratio.rddr.upper.n{n}"),
            ratio_d_upper,
            me_rddr(n + 1, n, &ctx).value,
            tol,
        ));
        let ratio_r_upper = me_numeric_ratio(OperatorTag::R, n + 1, n, &ctx, spec)?;
        report.push(ValidationEntry::relative(
            format!("me.ratio.r.upper.n{n}"),
            ratio_r_upper,
            -me_r(n + 1, n, &ctx).value,
            tol,
        ));
        if n >= 1 {
            let ratio_d_lower = me_numeric_ratio(OperatorTag::RDdr, n - 1, n, &ctx, spec)?;
            report.push(ValidationEntry::relative(
                format!("me.ratio.rddr.lower.n{n}"),
                ratio_d_lower,
                me_rddr(n - 1, n, &ctx).value,
                tol,
            ));
            let ratio_r_lower = me_numeric_ratio(OperatorTag::R, n - 1, n, &ctx, spec)?;
            report.push(ValidationEntry::relative(
                format!("me.ratio.r.lower.n{n}"),
                ratio_r_lower,
                -me_r(n - 1, n, &ctx).value,
                tol,
            ));
        }
        let ratio_r_diag = me_numeric_ratio(OperatorTag::R, n, n, &ctx, spec)?;
        divergence_pair(
            &mut report,
            format!("me.ratio.r.diag.factor2.n{n}"),
            format!("expected-divergence.me.ratio.r.diag.n{n}"),
            ratio_r_diag,
            -printed_r_diag,
            2.0,
        );
    }

    // b → 0 collapses β to ℓ and restores the Coulomb degeneracy pattern.
    let coulomb = PotentialParams {
        a: p.a,
        b: 0.0,
        c: p.c,
    };
    let mut worst_beta = 0.0_f64;
    for ell in 0..=ell_max.min(3) {
        worst_beta = worst_beta.max((beta_ell(&coulomb, mu, ell, k)? - ell as f64).abs());
    }
    report.push(ValidationEntry::absolute(
        "limit.coulomb_beta",
        worst_beta,
        0.0,
        1e-12,
    ));
    let mut worst_degeneracy = 0.0_f64;
    for n in 0..=n_max.min(3) {
        for ell in 1..=ell_max.min(3) {
            let shifted = energy(&coulomb, mu, n + 1, ell - 1, k)?;
            let base = energy(&coulomb, mu, n, ell, k)?;
            worst_degeneracy = worst_degeneracy.max(((shifted - base) / base).abs());
        }
    }
    report.push(ValidationEntry::absolute(
        "limit.hydrogen_degeneracy",
        worst_degeneracy,
        0.0,
        1e-12,
    ));
    let v_min = evaluate_potential(&p, molecule.r0)?;
    report.push(ValidationEntry::absolute(
        "limit.potential_minimum",
        v_min,
        p.c - molecule.d0,
        1e-10,
    ));

    Ok(report)
}
