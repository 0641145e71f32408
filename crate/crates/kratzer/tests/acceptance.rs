//! Acceptance gate: eight criteria covering table reproduction, shift
//! invariance, the ladder-algebra residuals, the quadrature oracle, the
//! trivial limits, and end-to-end validation runtime. Each criterion prints
//! exactly one PASS/FAIL line (visible with `--nocapture`; always shown on
//! failure) and fails its test if any sub-check misses its tolerance.

use std::time::Instant;

use kratzer::cli::{cmd_matrix_elements, cmd_spectrum, cmd_validate, Cell, OutputTable};
use kratzer::model::kratzer_params;
use kratzer::oracle::me_numeric_ratio;
use kratzer::reference::{
    kratzer_energies, matrix_elements, modified_kratzer_energies, ENERGY_TOLERANCE_EV,
    MATRIX_REL_TOLERANCE, R_ELEM_TOLERANCE,
};
use kratzer::{
    beta_ell, builtin_molecules, check_normalization, check_orthogonality, energy,
    evaluate_potential, full_validation, ladder::default_algebra_grid, me_r, me_rddr, mu_energy,
    spectral_context, table_row, verify_algebra, BasisKind, CheckStatus, MoleculeSpec, OperatorTag,
    PhysicalConstants, PotentialKind, PotentialParams, QuadratureSpec,
};

fn report(index: u32, label: &str, failures: Vec<String>) {
    if failures.is_empty() {
        println!("criterion {index} ({label}): PASS");
    } else {
        println!(
            "criterion {index} ({label}): FAIL — {} problem(s)",
            failures.len()
        );
        for f in &failures {
            println!("  - {f}");
        }
        panic!("criterion {index} ({label}) failed");
    }
}

fn rel_err(got: f64, want: f64) -> f64 {
    if want == 0.0 {
        got.abs()
    } else {
        ((got - want) / want).abs()
    }
}

fn check_energy_tables(
    kind: PotentialKind,
    lookup: fn(&str) -> Option<&'static [kratzer::reference::EnergyRef]>,
    failures: &mut Vec<String>,
) {
    let k = PhysicalConstants::default();
    for m in builtin_molecules() {
        let Some(refs) = lookup(&m.name) else {
            failures.push(format!("{}: no reference energy table", m.name));
            continue;
        };
        if refs.len() != 21 {
            failures.push(format!(
                "{}: expected 21 table rows (n ≤ 5, ℓ ≤ n), found {}",
                m.name,
                refs.len()
            ));
        }
        let p = kind.params(&m);
        let mu = mu_energy(&m, &k);
        for r in refs {
            let e = energy(&p, mu, r.n, r.ell, &k).unwrap();
            let diff = (e - r.energy_ev).abs();
            if diff > ENERGY_TOLERANCE_EV {
                failures.push(format!(
                    "{} (n={}, l={}): |ΔE| = {diff:.3e} eV > {ENERGY_TOLERANCE_EV:.0e}",
                    m.name, r.n, r.ell
                ));
            }
        }
    }
}

/// Published Kratzer energy tables for CO and NO reproduce within 1e-5 eV
/// absolute, in under one second.
#[test]
fn criterion_1_kratzer_energy_tables() {
    let start = Instant::now();
    let mut failures = Vec::new();
    check_energy_tables(PotentialKind::Kratzer, kratzer_energies, &mut failures);

    // Anchor entry, asserted against its literal published value.
    let k = PhysicalConstants::default();
    let co = &builtin_molecules()[0];
    let e00 = energy(&kratzer_params(co), mu_energy(co, &k), 0, 0, &k).unwrap();
    let anchor = -10.79431534387622;
    if (e00 - anchor).abs() > ENERGY_TOLERANCE_EV {
        failures.push(format!("CO (0,0) anchor: {e00} vs {anchor}"));
    }

    let elapsed = start.elapsed().as_secs_f64();
    if elapsed >= 1.0 {
        failures.push(format!("runtime {elapsed:.2}s exceeds 1s budget"));
    }
    report(1, "Kratzer energy tables", failures);
}

/// Published modified-Kratzer energy tables reproduce within 1e-5 eV using
/// the shifted closed form (c = D₀), not the misprinted variant.
#[test]
fn criterion_2_modified_kratzer_energy_tables() {
    let mut failures = Vec::new();
    check_energy_tables(
        PotentialKind::ModifiedKratzer,
        modified_kratzer_energies,
        &mut failures,
    );

    let k = PhysicalConstants::default();
    let co = &builtin_molecules()[0];
    let p = PotentialKind::ModifiedKratzer.params(co);
    let e00 = energy(&p, mu_energy(co, &k), 0, 0, &k).unwrap();
    let anchor = 0.050828927974365;
    if (e00 - anchor).abs() > ENERGY_TOLERANCE_EV {
        failures.push(format!("CO (0,0) anchor: {e00} vs {anchor}"));
    }
    // The shift must be exactly the well depth: E_mod − E_kratzer = D₀.
    let e_base = energy(&kratzer_params(co), mu_energy(co, &k), 0, 0, &k).unwrap();
    if ((e00 - e_base) - co.d0).abs() > 1e-12 {
        failures.push(format!(
            "shift E_mod − E = {} ≠ D₀ = {}",
            e00 - e_base,
            co.d0
        ));
    }
    report(2, "modified Kratzer energy tables", failures);
}

/// Published matrix-element tables reproduce: ⟨r⟩ within 2e-4 Å absolute,
/// the r·d/dr and Γ± columns within 1e-4 relative.
#[test]
fn criterion_3_matrix_element_tables() {
    let k = PhysicalConstants::default();
    let mut failures = Vec::new();
    for m in builtin_molecules() {
        let Some(refs) = matrix_elements(&m.name) else {
            failures.push(format!("{}: no reference matrix table", m.name));
            continue;
        };
        if refs.len() != 20 {
            failures.push(format!(
                "{}: expected 20 table rows (1 ≤ n ≤ 5, ℓ ≤ n), found {}",
                m.name,
                refs.len()
            ));
        }
        let p = kratzer_params(&m);
        let mu = mu_energy(&m, &k);
        for r in refs {
            let ctx = spectral_context(&p, mu, r.n, r.ell, &k).unwrap();
            let row = table_row(&ctx).unwrap();
            if (row.r_elem - r.r_elem).abs() > R_ELEM_TOLERANCE {
                failures.push(format!(
                    "{} (n={}, l={}) r: {} vs {}",
                    m.name, r.n, r.ell, row.r_elem, r.r_elem
                ));
            }
            for (label, got, want) in [
                ("rddr", row.rddr_elem, r.rddr_elem),
                ("gamma1", row.gamma1, r.gamma1),
                ("gamma2", row.gamma2, r.gamma2),
            ] {
                if rel_err(got, want) > MATRIX_REL_TOLERANCE {
                    failures.push(format!(
                        "{} (n={}, l={}) {label}: {got} vs {want}",
                        m.name, r.n, r.ell
                    ));
                }
            }
        }
    }

    // Anchor row, asserted against its literal published values.
    let co = &builtin_molecules()[0];
    let ctx = spectral_context(&kratzer_params(co), mu_energy(co, &k), 1, 0, &k).unwrap();
    let row = table_row(&ctx).unwrap();
    let anchors = [
        ("r", row.r_elem, -0.4761490924, R_ELEM_TOLERANCE),
        ("rddr", row.rddr_elem, 16.97323506, MATRIX_REL_TOLERANCE),
        ("gamma1", row.gamma1, 195.38952739, MATRIX_REL_TOLERANCE),
        ("gamma2", row.gamma2, 161.44305726, MATRIX_REL_TOLERANCE),
    ];
    for (label, got, want, tol) in anchors {
        let err = if label == "r" {
            (got - want).abs()
        } else {
            rel_err(got, want)
        };
        if err > tol {
            failures.push(format!("CO (1,0) anchor {label}: {got} vs {want}"));
        }
    }
    report(3, "matrix-element tables", failures);
}

fn matrix_table_for(kind: PotentialKind, m: &MoleculeSpec, k: &PhysicalConstants) -> OutputTable {
    let p = kind.params(m);
    let mu = mu_energy(m, k);
    let mut rows = Vec::new();
    for n in 1..=5u32 {
        for ell in 0..=n {
            let ctx = spectral_context(&p, mu, n, ell, k).unwrap();
            let row = table_row(&ctx).unwrap();
            rows.push(vec![
                Cell::Int(n),
                Cell::Int(ell),
                Cell::Num(row.r_elem),
                Cell::Num(row.rddr_elem),
                Cell::Num(row.gamma1),
                Cell::Num(row.gamma2),
            ]);
        }
    }
    OutputTable {
        columns: vec!["n", "ell", "r_elem", "rddr_elem", "gamma1", "gamma2"],
        rows,
    }
}

/// Matrix-element tables are byte-identical between the Kratzer and
/// modified-Kratzer variants: the constant shift cancels everywhere.
#[test]
fn criterion_4_shift_invariance() {
    let k = PhysicalConstants::default();
    let mut failures = Vec::new();
    for m in builtin_molecules() {
        let base = matrix_table_for(PotentialKind::Kratzer, &m, &k);
        let shifted = matrix_table_for(PotentialKind::ModifiedKratzer, &m, &k);
        if base.to_csv() != shifted.to_csv() {
            failures.push(format!("{}: CSV renders differ between variants", m.name));
        }
        if base.to_json() != shifted.to_json() {
            failures.push(format!("{}: JSON renders differ between variants", m.name));
        }
        // Bit-level equality of the underlying floats, not just the render.
        let p_base = PotentialKind::Kratzer.params(&m);
        let p_shift = PotentialKind::ModifiedKratzer.params(&m);
        let mu = mu_energy(&m, &k);
        for n in 1..=5u32 {
            for ell in 0..=n {
                let a = table_row(&spectral_context(&p_base, mu, n, ell, &k).unwrap()).unwrap();
                let b = table_row(&spectral_context(&p_shift, mu, n, ell, &k).unwrap()).unwrap();
                let pairs = [
                    (a.r_elem, b.r_elem),
                    (a.rddr_elem, b.rddr_elem),
                    (a.gamma1, b.gamma1),
                    (a.gamma2, b.gamma2),
                ];
                if pairs.iter().any(|(x, y)| x.to_bits() != y.to_bits()) {
                    failures.push(format!(
                        "{} (n={n}, l={ell}): rows not bit-identical",
                        m.name
                    ));
                }
            }
        }
    }
    report(4, "shift invariance of matrix tables", failures);
}

/// Ladder-algebra residuals for both molecules, ℓ ≤ 3, 1 ≤ n ≤ 5: the
/// ladder actions hold to 1e-8 relative sup-norm; the commutator, Casimir,
/// and component-identity residuals to 1e-7. Runtime under five seconds.
#[test]
fn criterion_5_algebra_suite() {
    let start = Instant::now();
    let k = PhysicalConstants::default();
    let mut failures = Vec::new();
    let mut checked = 0usize;
    for m in builtin_molecules() {
        let p = kratzer_params(&m);
        let mu = mu_energy(&m, &k);
        for ell in 0..=3u32 {
            for n in 1..=5u32 {
                let ctx = spectral_context(&p, mu, n, ell, &k).unwrap();
                let grid = default_algebra_grid(ctx.beta, ctx.xi_physical);
                let rep = verify_algebra(n, &ctx, &grid).unwrap();
                for e in &rep.entries {
                    let gate = if e.name.starts_with("ladder.") {
                        1e-8
                    } else {
                        1e-7
                    };
                    checked += 1;
                    if e.residual > gate {
                        failures.push(format!(
                            "{} (n={n}, l={ell}) {}: residual {:.3e} > {gate:.0e}",
                            m.name, e.name, e.residual
                        ));
                    }
                }
            }
        }
    }
    if checked != 2 * 4 * 5 * 10 {
        failures.push(format!("expected 400 residuals, checked {checked}"));
    }
    let elapsed = start.elapsed().as_secs_f64();
    if elapsed >= 5.0 {
        failures.push(format!("runtime {elapsed:.2}s exceeds 5s budget"));
    }
    report(5, "ladder-algebra residuals", failures);
}

/// Quadrature oracle: normalization 1 ± 1e-8 and orthogonality ≤ 1e-8 for
/// n, m ≤ 8; every r·d/dr tridiagonal entry and the r off-diagonals match
/// bra-normalized quadrature ratios within 1e-6; the factor-two divergence
/// of the printed r diagonal is detected and reported, not failed.
#[test]
fn criterion_6_oracle_suite() {
    let k = PhysicalConstants::default();
    let spec = QuadratureSpec::default();
    let mut failures = Vec::new();

    for m in builtin_molecules() {
        let p = kratzer_params(&m);
        let mu = mu_energy(&m, &k);

        for n in 0..=8u32 {
            let ctx = spectral_context(&p, mu, n, 0, &k).unwrap();
            let entry = check_normalization(n, 0, &ctx, &spec).unwrap();
            if (entry.computed - 1.0).abs() > 1e-8 {
                failures.push(format!(
                    "{} n={n}: ∫R² r² dr = {} (|Δ| > 1e-8)",
                    m.name, entry.computed
                ));
            }
        }

        for hi in 1..=8u32 {
            for lo in 0..hi {
                let entry =
                    check_orthogonality(lo, hi, 0, &p, mu, &k, BasisKind::Eigenstates, &spec)
                        .unwrap();
                if entry.computed.abs() > 1e-8 {
                    failures.push(format!(
                        "{} eigenstates ({lo},{hi}): overlap {} > 1e-8",
                        m.name, entry.computed
                    ));
                }
                // Fixed-ξ states separated by ≥ 2 are orthogonal too; the
                // adjacent overlap is a closed-form constant instead.
                if hi - lo >= 2 {
                    let entry =
                        check_orthogonality(lo, hi, 0, &p, mu, &k, BasisKind::FixedXi, &spec)
                            .unwrap();
                    if entry.computed.abs() > 1e-8 {
                        failures.push(format!(
                            "{} fixed-ξ ({lo},{hi}): overlap {} > 1e-8",
                            m.name, entry.computed
                        ));
                    }
                } else {
                    let entry =
                        check_orthogonality(lo, hi, 0, &p, mu, &k, BasisKind::FixedXi, &spec)
                            .unwrap();
                    if entry.failed() {
                        failures.push(format!(
                            "{} fixed-ξ adjacent ({lo},{hi}): closed-form overlap check failed",
                            m.name
                        ));
                    }
                }
            }
        }

        // Published tridiagonal entries against bra-normalized quadrature
        // ratios: r·d/dr matches everywhere with sign; r matches on the
        // off-diagonals (as printed coefficients over physical ξ).
        for n in 0..=3u32 {
            let ctx = spectral_context(&p, mu, n, 0, &k).unwrap();
            let mut probes = vec![
                ("rddr diag", OperatorTag::RDdr, n, me_rddr(n, n, &ctx).value),
                (
                    "rddr upper",
                    OperatorTag::RDdr,
                    n + 1,
                    me_rddr(n + 1, n, &ctx).value,
                ),
                (
                    "r upper",
                    OperatorTag::R,
                    n + 1,
                    -me_r(n + 1, n, &ctx).value,
                ),
            ];
            if n >= 1 {
                probes.push((
                    "rddr lower",
                    OperatorTag::RDdr,
                    n - 1,
                    me_rddr(n - 1, n, &ctx).value,
                ));
                probes.push((
                    "r lower",
                    OperatorTag::R,
                    n - 1,
                    -me_r(n - 1, n, &ctx).value,
                ));
            }
            for (label, op, row, want) in probes {
                let got = me_numeric_ratio(op, row, n, &ctx, &spec).unwrap();
                if rel_err(got, want) > 1e-6 {
                    failures.push(format!(
                        "{} n={n} {label}: quadrature {got} vs printed {want}",
                        m.name
                    ));
                }
            }
            // The r diagonal diverges from print by exactly a factor of two.
            let diag = me_numeric_ratio(OperatorTag::R, n, n, &ctx, &spec).unwrap();
            let factor = diag / -me_r(n, n, &ctx).value;
            if (factor - 2.0).abs() > 1e-6 {
                failures.push(format!(
                    "{} n={n} r diag: quadrature/printed = {factor}, expected 2",
                    m.name
                ));
            }
        }
    }

    // The validation report must carry the r-diagonal divergence as an
    // expected-divergence entry while still passing overall.
    let co = &builtin_molecules()[0];
    let rep = full_validation(co, PotentialKind::Kratzer, 3, 2, &k, &spec).unwrap();
    if !rep.all_pass() {
        failures.push("CO validation report has hard failures".to_string());
    }
    for n in 0..=3u32 {
        let name = format!("expected-divergence.me.ratio.r.diag.n{n}");
        match rep.entries.iter().find(|e| e.name == name) {
            Some(e) if e.status == CheckStatus::ExpectedDivergence => {}
            Some(_) => failures.push(format!("{name}: wrong status")),
            None => failures.push(format!("{name}: divergence entry missing")),
        }
    }
    report(6, "quadrature oracle suite", failures);
}

/// Trivial limits: b = 0 collapses β_ℓ to ℓ and restores the hydrogen-like
/// n+ℓ degeneracy to 1e-12 relative; the Kratzer minimum is −D₀ at r₀ to
/// 1e-10 (and 0 for the shifted variant).
#[test]
fn criterion_7_trivial_limits() {
    let k = PhysicalConstants::default();
    let mut failures = Vec::new();
    for m in builtin_molecules() {
        let p = kratzer_params(&m);
        let mu = mu_energy(&m, &k);
        let coulomb = PotentialParams {
            a: p.a,
            b: 0.0,
            c: p.c,
        };
        for ell in 0..=3u32 {
            let beta = beta_ell(&coulomb, mu, ell, &k).unwrap();
            if (beta - ell as f64).abs() > 1e-12 {
                failures.push(format!("{} l={ell}: β = {beta} ≠ ℓ", m.name));
            }
        }
        for n in 0..=3u32 {
            for ell in 1..=3u32 {
                let shifted = energy(&coulomb, mu, n + 1, ell - 1, &k).unwrap();
                let base = energy(&coulomb, mu, n, ell, &k).unwrap();
                if rel_err(shifted, base) > 1e-12 {
                    failures.push(format!(
                        "{} (n={n}, l={ell}): degeneracy broken, {shifted} vs {base}",
                        m.name
                    ));
                }
            }
        }
        let v_min = evaluate_potential(&p, m.r0).unwrap();
        if (v_min + m.d0).abs() > 1e-10 {
            failures.push(format!("{}: V(r₀) = {v_min} ≠ −D₀", m.name));
        }
        let p_mod = PotentialKind::ModifiedKratzer.params(&m);
        let v_mod = evaluate_potential(&p_mod, m.r0).unwrap();
        if v_mod.abs() > 1e-10 {
            failures.push(format!("{}: shifted V(r₀) = {v_mod} ≠ 0", m.name));
        }
    }
    report(7, "trivial limits", failures);
}

/// The full validation pass — both molecules, both variants, the complete
/// grid — finishes single-threaded in under ten seconds with no failures.
#[test]
fn criterion_8_validate_all_runtime() {
    let start = Instant::now();
    let k = PhysicalConstants::default();
    let registry = builtin_molecules();
    let spec = QuadratureSpec::default();
    let mut failures = Vec::new();
    match cmd_validate(&registry, &k, None, None, 5, 5, &spec) {
        Ok(reports) => {
            if reports.len() != 4 {
                failures.push(format!("expected 4 reports, got {}", reports.len()));
            }
            for rep in &reports {
                if !rep.all_pass() {
                    failures.push(format!(
                        "{}/{}: {} failed entries",
                        rep.molecule,
                        rep.potential,
                        rep.failed()
                    ));
                }
            }
        }
        Err(e) => failures.push(format!("validation aborted: {e}")),
    }
    let elapsed = start.elapsed().as_secs_f64();
    if elapsed >= 10.0 {
        failures.push(format!("runtime {elapsed:.2}s exceeds 10s budget"));
    }
    report(8, "full validation runtime", failures);
}

/// The CLI table builders agree with the direct API on the published grids,
/// so the acceptance surface and the shipped commands cannot drift apart.
#[test]
fn cli_tables_match_direct_api() {
    let k = PhysicalConstants::default();
    let registry = builtin_molecules();
    let spectrum = cmd_spectrum(&registry, &k, "CO", PotentialKind::Kratzer, 5, None).unwrap();
    assert_eq!(spectrum.rows.len(), 21);
    let matrix = cmd_matrix_elements(&registry, &k, "NO", 5, None).unwrap();
    assert_eq!(matrix.rows.len(), 20);
    let refs = matrix_elements("NO").unwrap();
    for (row, r) in matrix.rows.iter().zip(refs) {
        match (&row[0], &row[1]) {
            (Cell::Int(n), Cell::Int(ell)) => {
                assert_eq!((*n, *ell), (r.n, r.ell));
            }
            _ => panic!("unexpected cell types in matrix table"),
        }
    }
}
