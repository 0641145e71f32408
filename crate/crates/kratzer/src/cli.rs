//! Command-line front end: spectra, matrix-element tables, potential curves,
//! and the validation suite as CSV or JSON. Every float goes through one
//! fixed 15-significant-digit formatter, so identical inputs produce
//! byte-identical output and both encodings carry identical numeric strings.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::format::{fmt_sig, json_escape};
use crate::matrix_elements::table_row;
use crate::model::{
    evaluate_potential, find_molecule, load_config, mu_energy, ConfigFile, MoleculeSpec,
    PhysicalConstants, PotentialKind,
};
use crate::oracle::{full_validation, QuadratureSpec, ValidationReport};
use crate::spectrum::spectral_context;

const GRID_CAP: u32 = 50;

#[derive(Debug, Parser)]
#[command(
    name = "kratzer",
    version,
    about = "Bound-state spectra, wavefunction algebra, and matrix elements \
             for generalized Kratzer molecular potentials"
)]
pub struct Cli {
    /// Extra molecules / constant overrides (`key = value` lines).
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Csv)]
    pub format: OutputFormat,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PotentialArg {
    Kratzer,
    ModifiedKratzer,
}

impl PotentialArg {
    pub fn kind(self) -> PotentialKind {
        match self {
            PotentialArg::Kratzer => PotentialKind::Kratzer,
            PotentialArg::ModifiedKratzer => PotentialKind::ModifiedKratzer,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Bound-state energies E(n, ℓ) in eV.
    Spectrum {
        #[arg(long)]
        molecule: String,
        #[arg(long, value_enum, default_value_t = PotentialArg::Kratzer)]
        potential: PotentialArg,
        #[arg(long, default_value_t = 5)]
        n_max: u32,
        /// Fixed ℓ ceiling for every n (default: ℓ ≤ n, the table shape).
        #[arg(long)]
        ell_max: Option<u32>,
    },
    /// Tridiagonal ⟨r⟩, ⟨r·d/dr⟩, Γ₁, Γ₂ rows. The values depend on the
    /// potential only through β and ξ, so both variants print identically.
    MatrixElements {
        #[arg(long)]
        molecule: String,
        /// Accepted for symmetry with the other commands; the rows are
        /// invariant under the choice.
        #[arg(long, value_enum, default_value_t = PotentialArg::Kratzer)]
        potential: PotentialArg,
        #[arg(long, default_value_t = 5)]
        n_max: u32,
        #[arg(long)]
        ell_max: Option<u32>,
    },
    /// V(r) sampled uniformly on [r_min, r_max].
    PotentialCurve {
        #[arg(long)]
        molecule: String,
        #[arg(long, value_enum, default_value_t = PotentialArg::Kratzer)]
        potential: PotentialArg,
        #[arg(long, default_value_t = 0.5)]
        r_min: f64,
        #[arg(long, default_value_t = 5.0)]
        r_max: f64,
        #[arg(long, default_value_t = 200)]
        samples: u32,
    },
    /// Run every check and write the report. Exits 0 only if every
    /// non-informational entry passes.
    Validate {
        /// One molecule, or every registered molecule when omitted (`all`
        /// works too).
        #[arg(long)]
        molecule: Option<String>,
        /// One potential variant, or both when omitted.
        #[arg(long, value_enum)]
        potential: Option<PotentialArg>,
        #[arg(long, default_value_t = 5)]
        n_max: u32,
        #[arg(long, default_value_t = 5)]
        ell_max: u32,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(u32),
    Num(f64),
    Text(String),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Num(v) => fmt_sig(*v),
            Cell::Text(s) => csv_escape(s),
        }
    }

    fn json(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Num(v) => {
                let s = fmt_sig(*v);
                if v.is_finite() {
                    s
                } else {
                    format!("\"{s}\"")
                }
            }
            Cell::Text(s) => format!("\"{}\"", json_escape(s)),
        }
    }
}

fn csv_escape(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Ordered rows under a fixed column schema; the only table shape the CLI
/// emits.
#[derive(Debug, Clone, PartialEq)]
pub struct OutputTable {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl OutputTable {
    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::csv).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut out = String::from("{\n  \"columns\": [");
        let cols: Vec<String> = self
            .columns
            .iter()
            .map(|c| format!("\"{}\"", json_escape(c)))
            .collect();
        out.push_str(&cols.join(", "));
        out.push_str("],\n  \"rows\": [\n");
        for (i, row) in self.rows.iter().enumerate() {
            let fields: Vec<String> = self
                .columns
                .iter()
                .zip(row)
                .map(|(c, cell)| format!("\"{}\": {}", json_escape(c), cell.json()))
                .collect();
            out.push_str("    {");
            out.push_str(&fields.join(", "));
            out.push('}');
            if i + 1 < self.rows.len() {
                out.push(',');
            }
            out.push('\n');
        }
        out.push_str("  ]\n}\n");
        out
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Csv => self.to_csv(),
            OutputFormat::Json => self.to_json(),
        }
    }
}

fn check_grid(n_max: u32, ell_max: Option<u32>) -> Result<()> {
    if n_max > GRID_CAP || ell_max.unwrap_or(0) > GRID_CAP {
        return Err(Error::InvalidArgument(format!(
            "n and l are capped at {GRID_CAP}; got n_max = {n_max}, l_max = {}",
            ell_max.map_or("per-level".to_string(), |l| l.to_string())
        )));
    }
    Ok(())
}

/// ℓ values emitted for one n: 0..=n by default, 0..=cap when overridden.
fn ell_range(n: u32, ell_max: Option<u32>) -> std::ops::RangeInclusive<u32> {
    0..=ell_max.unwrap_or(n)
}

pub fn cmd_spectrum(
    registry: &[MoleculeSpec],
    constants: &PhysicalConstants,
    molecule: &str,
    kind: PotentialKind,
    n_max: u32,
    ell_max: Option<u32>,
) -> Result<OutputTable> {
    check_grid(n_max, ell_max)?;
    let m = find_molecule(registry, molecule)?;
    let p = kind.params(m);
    let mu = mu_energy(m, constants);
    let mut rows = Vec::new();
    for n in 0..=n_max {
        for ell in ell_range(n, ell_max) {
            let ctx = spectral_context(&p, mu, n, ell, constants)?;
            rows.push(vec![Cell::Int(n), Cell::Int(ell), Cell::Num(ctx.energy)]);
        }
    }
    Ok(OutputTable {
        columns: vec!["n", "ell", "energy_ev"],
        rows,
    })
}

pub fn cmd_matrix_elements(
    registry: &[MoleculeSpec],
    constants: &PhysicalConstants,
    molecule: &str,
    n_max: u32,
    ell_max: Option<u32>,
) -> Result<OutputTable> {
    if n_max < 1 {
        return Err(Error::InvalidArgument(
            "matrix-element rows start at n = 1".to_string(),
        ));
    }
    check_grid(n_max, ell_max)?;
    let m = find_molecule(registry, molecule)?;
    // Rows are shift-invariant; the base variant stands in for both.
    let p = PotentialKind::Kratzer.params(m);
    let mu = mu_energy(m, constants);
    let mut rows = Vec::new();
    for n in 1..=n_max {
        for ell in ell_range(n, ell_max) {
            let ctx = spectral_context(&p, mu, n, ell, constants)?;
            let row = table_row(&ctx)?;
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
    Ok(OutputTable {
        columns: vec!["n", "ell", "r_elem", "rddr_elem", "gamma1", "gamma2"],
        rows,
    })
}

pub fn cmd_potential_curve(
    registry: &[MoleculeSpec],
    molecule: &str,
    kind: PotentialKind,
    r_min: f64,
    r_max: f64,
    samples: u32,
) -> Result<OutputTable> {
    if !(r_min.is_finite() && r_max.is_finite()) || r_min <= 0.0 || r_min >= r_max {
        return Err(Error::InvalidArgument(format!(
            "need 0 < r_min < r_max, got [{r_min}, {r_max}]"
        )));
    }
    if samples < 2 {
        return Err(Error::InvalidArgument(format!(
            "need at least 2 samples, got {samples}"
        )));
    }
    let m = find_molecule(registry, molecule)?;
    let p = kind.params(m);
    let step = (r_max - r_min) / (samples - 1) as f64;
    let mut rows = Vec::new();
    for i in 0..samples {
        let r = if i == 0 {
            r_min
        } else if i == samples - 1 {
            r_max
        } else {
            r_min + step * i as f64
        };
        rows.push(vec![Cell::Num(r), Cell::Num(evaluate_potential(&p, r)?)]);
    }
    Ok(OutputTable {
        columns: vec!["r_angstrom", "v_ev"],
        rows,
    })
}

/// Reports in registry order, both variants per molecule unless one is
/// pinned. `molecule` = None or "all" selects every registered molecule.
pub fn cmd_validate(
    registry: &[MoleculeSpec],
    constants: &PhysicalConstants,
    molecule: Option<&str>,
    kind: Option<PotentialKind>,
    n_max: u32,
    ell_max: u32,
    spec: &QuadratureSpec,
) -> Result<Vec<ValidationReport>> {
    let selected: Vec<&MoleculeSpec> = match molecule {
        None => registry.iter().collect(),
        Some(name) if name.eq_ignore_ascii_case("all") => registry.iter().collect(),
        Some(name) => vec![find_molecule(registry, name)?],
    };
    let kinds: &[PotentialKind] = match kind {
        Some(k) => match k {
            PotentialKind::Kratzer => &[PotentialKind::Kratzer],
            PotentialKind::ModifiedKratzer => &[PotentialKind::ModifiedKratzer],
        },
        None => &[PotentialKind::Kratzer, PotentialKind::ModifiedKratzer],
    };
    let mut reports = Vec::new();
    for m in selected {
        for &k in kinds {
            reports.push(full_validation(m, k, n_max, ell_max, constants, spec)?);
        }
    }
    Ok(reports)
}

pub fn render_reports(reports: &[ValidationReport], format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut out = String::from("{\n\"reports\": [\n");
            for (i, report) in reports.iter().enumerate() {
                out.push_str(&report.to_json());
                if i + 1 < reports.len() {
                    out.push_str(",\n");
                }
            }
            out.push_str("]\n}\n");
            out
        }
        OutputFormat::Csv => {
            let mut out = String::from(
                "molecule,potential,name,computed,expected,abs_err,rel_err,tolerance,status\n",
            );
            for report in reports {
                for e in &report.entries {
                    out.push_str(&format!(
                        "{},{},{},{},{},{},{},{},{}\n",
                        csv_escape(&report.molecule),
                        csv_escape(&report.potential),
                        csv_escape(&e.name),
                        fmt_sig(e.computed),
                        fmt_sig(e.expected),
                        fmt_sig(e.abs_err),
                        fmt_sig(e.rel_err),
                        fmt_sig(e.tolerance),
                        e.status.as_str()
                    ));
                }
            }
            out
        }
    }
}

fn write_output(out: Option<&PathBuf>, content: &str) -> Result<()> {
    match out {
        Some(path) => {
            std::fs::write(path, content)?;
            Ok(())
        }
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

/// Executes a parsed invocation and returns the process exit code.
pub fn execute(cli: Cli) -> Result<i32> {
    let cfg = match &cli.config {
        Some(path) => load_config(path)?,
        None => ConfigFile::default(),
    };
    let registry = cfg.registry();
    let constants = cfg.constants;

    match cli.command {
        Command::Spectrum {
            molecule,
            potential,
            n_max,
            ell_max,
        } => {
            let table = cmd_spectrum(
                &registry,
                &constants,
                &molecule,
                potential.kind(),
                n_max,
                ell_max,
            )?;
            write_output(cli.out.as_ref(), &table.render(cli.format))?;
            Ok(0)
        }
        Command::MatrixElements {
            molecule,
            potential: _,
            n_max,
            ell_max,
        } => {
            let table = cmd_matrix_elements(&registry, &constants, &molecule, n_max, ell_max)?;
            write_output(cli.out.as_ref(), &table.render(cli.format))?;
            Ok(0)
        }
        Command::PotentialCurve {
            molecule,
            potential,
            r_min,
            r_max,
            samples,
        } => {
            let table = cmd_potential_curve(
                &registry,
                &molecule,
                potential.kind(),
                r_min,
                r_max,
                samples,
            )?;
            write_output(cli.out.as_ref(), &table.render(cli.format))?;
            Ok(0)
        }
        Command::Validate {
            molecule,
            potential,
            n_max,
            ell_max,
        } => {
            let reports = cmd_validate(
                &registry,
                &constants,
                molecule.as_deref(),
                potential.map(PotentialArg::kind),
                n_max,
                ell_max,
                &QuadratureSpec::default(),
            )?;
            write_output(cli.out.as_ref(), &render_reports(&reports, cli.format))?;
            let ok = reports.iter().all(ValidationReport::all_pass);
            Ok(if ok { 0 } else { 1 })
        }
    }
}

/// Parses argv and runs; clap itself exits with status 2 on usage errors.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            i32::from(e.exit_code())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::builtin_molecules;

    fn setup() -> (Vec<MoleculeSpec>, PhysicalConstants) {
        (builtin_molecules(), PhysicalConstants::default())
    }

    fn num(cell: &Cell) -> f64 {
        match cell {
            Cell::Num(v) => *v,
            other => panic!("expected numeric cell, got {other:?}"),
        }
    }

    #[test]
    fn spectrum_default_follows_table_shape() {
        let (reg, k) = setup();
        let table =
            cmd_spectrum(&reg, &k, "CO", PotentialKind::Kratzer, 5, None).expect("spectrum");
        assert_eq!(table.columns, vec!["n", "ell", "energy_ev"]);
        assert_eq!(table.rows.len(), 21, "sum of n+1 for n = 0..5");
        assert_eq!(table.rows[0][0], Cell::Int(0));
        assert_eq!(table.rows[0][1], Cell::Int(0));
        assert!((num(&table.rows[0][2]) + 10.79431534387622).abs() < 1e-5);
    }

    #[test]
    fn spectrum_override_emits_rectangle() {
        let (reg, k) = setup();
        let table =
            cmd_spectrum(&reg, &k, "CO", PotentialKind::Kratzer, 2, Some(1)).expect("spectrum");
        assert_eq!(table.rows.len(), 6, "3 levels x 2 ell values");
        assert_eq!(table.rows[1][0], Cell::Int(0));
        assert_eq!(table.rows[1][1], Cell::Int(1), "n = 0 gains the l = 1 row");
    }

    #[test]
    fn spectrum_single_row_at_origin() {
        let (reg, k) = setup();
        let table =
            cmd_spectrum(&reg, &k, "CO", PotentialKind::Kratzer, 0, Some(0)).expect("spectrum");
        assert_eq!(table.rows.len(), 1);
    }

    #[test]
    fn spectrum_rejects_oversized_grid_and_unknown_molecule() {
        let (reg, k) = setup();
        assert!(matches!(
            cmd_spectrum(&reg, &k, "CO", PotentialKind::Kratzer, 51, None),
            Err(Error::InvalidArgument(_))
        ));
        let err = cmd_spectrum(&reg, &k, "XY", PotentialKind::Kratzer, 2, None).unwrap_err();
        let msg = err.to_string();
        assert!(
            msg.contains("CO") && msg.contains("NO"),
            "lists registry: {msg}"
        );
    }

    #[test]
    fn matrix_elements_reproduce_reference_anchor() {
        let (reg, k) = setup();
        let table = cmd_matrix_elements(&reg, &k, "CO", 5, None).expect("table");
        assert_eq!(
            table.columns,
            vec!["n", "ell", "r_elem", "rddr_elem", "gamma1", "gamma2"]
        );
        assert_eq!(table.rows.len(), 20, "sum of n+1 for n = 1..5");
        let first = &table.rows[0];
        assert_eq!(first[0], Cell::Int(1));
        assert_eq!(first[1], Cell::Int(0));
        assert!((num(&first[2]) + 0.4761490924).abs() < 2e-4);
        assert!((num(&first[3]) - 16.97323506).abs() / 16.97323506 < 1e-4);
        assert!((num(&first[4]) - 195.38952739).abs() / 195.38952739 < 1e-4);
        assert!((num(&first[5]) - 161.44305726).abs() / 161.44305726 < 1e-4);
    }

    #[test]
    fn matrix_elements_need_an_excited_level() {
        let (reg, k) = setup();
        assert!(matches!(
            cmd_matrix_elements(&reg, &k, "CO", 0, None),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn curve_hits_endpoints_and_minimum() {
        let (reg, _) = setup();
        let table =
            cmd_potential_curve(&reg, "CO", PotentialKind::Kratzer, 0.8, 2.0, 121).expect("curve");
        assert_eq!(table.rows.len(), 121);
        assert_eq!(num(&table.rows[0][0]), 0.8);
        assert_eq!(num(&table.rows[120][0]), 2.0);
        let v_min = table
            .rows
            .iter()
            .map(|row| num(&row[1]))
            .fold(f64::INFINITY, f64::min);
        // D₀ = 10.84514471 eV for CO; the sampled minimum sits within the
        // quadratic well error of the grid spacing.
        assert!((v_min + 10.84514471).abs() < 1e-3, "min {v_min}");
        let modified =
            cmd_potential_curve(&reg, "CO", PotentialKind::ModifiedKratzer, 0.8, 2.0, 121)
                .expect("curve");
        let v_min_shifted = modified
            .rows
            .iter()
            .map(|row| num(&row[1]))
            .fold(f64::INFINITY, f64::min);
        assert!(v_min_shifted.abs() < 1e-3, "min {v_min_shifted}");
    }

    #[test]
    fn curve_rejects_bad_ranges() {
        let (reg, _) = setup();
        for (r_min, r_max, samples) in [(2.0, 1.0, 10), (0.0, 1.0, 10), (0.5, 1.0, 1)] {
            assert!(matches!(
                cmd_potential_curve(&reg, "CO", PotentialKind::Kratzer, r_min, r_max, samples),
                Err(Error::InvalidArgument(_))
            ));
        }
    }

    #[test]
    fn csv_and_json_carry_identical_numeric_strings() {
        let (reg, k) = setup();
        let table = cmd_spectrum(&reg, &k, "NO", PotentialKind::ModifiedKratzer, 2, None)
            .expect("spectrum");
        let csv = table.to_csv();
        let json = table.to_json();
        for row in &table.rows {
            let energy = match &row[2] {
                Cell::Num(v) => fmt_sig(*v),
                _ => unreachable!(),
            };
            assert!(csv.contains(&energy), "csv missing {energy}");
            assert!(json.contains(&energy), "json missing {energy}");
        }
    }

    #[test]
    fn renders_are_deterministic() {
        let (reg, k) = setup();
        let a = cmd_spectrum(&reg, &k, "CO", PotentialKind::Kratzer, 3, None)
            .unwrap()
            .to_csv();
        let b = cmd_spectrum(&reg, &k, "CO", PotentialKind::Kratzer, 3, None)
            .unwrap()
            .to_csv();
        assert_eq!(a, b);
    }

    #[test]
    fn minimal_validation_passes_and_reports_render() {
        let (reg, k) = setup();
        let reports = cmd_validate(
            &reg,
            &k,
            Some("CO"),
            Some(PotentialKind::Kratzer),
            1,
            0,
            &QuadratureSpec::default(),
        )
        .expect("reports");
        assert_eq!(reports.len(), 1);
        assert!(reports[0].all_pass(), "failures: {:?}", reports[0].failed());
        let csv = render_reports(&reports, OutputFormat::Csv);
        assert!(csv.starts_with(
            "molecule,potential,name,computed,expected,abs_err,rel_err,tolerance,status\n"
        ));
        assert!(csv.contains("expected-divergence"));
        let json = render_reports(&reports, OutputFormat::Json);
        assert!(json.starts_with("{\n\"reports\": [\n"));
        assert!(json.contains("\"molecule\": \"CO\""));
    }

    #[test]
    fn validate_selects_molecules_and_kinds() {
        let (reg, k) = setup();
        let spec = QuadratureSpec::default();
        let all = cmd_validate(&reg, &k, Some("all"), None, 1, 0, &spec).expect("all");
        assert_eq!(all.len(), 4, "two molecules x two variants");
        assert_eq!(all[0].molecule, "CO");
        assert_eq!(all[0].potential, "kratzer");
        assert_eq!(all[1].potential, "modified-kratzer");
        assert_eq!(all[2].molecule, "NO");
        assert!(matches!(
            cmd_validate(&reg, &k, Some("XY"), None, 1, 0, &spec),
            Err(Error::UnknownMolecule { .. })
        ));
    }

    #[test]
    fn execute_writes_requested_file() {
        let dir = tempfile::tempdir().expect("tempdir");
        let path = dir.path().join("spectrum.csv");
        let cli = Cli {
            config: None,
            out: Some(path.clone()),
            format: OutputFormat::Csv,
            command: Command::Spectrum {
                molecule: "CO".to_string(),
                potential: PotentialArg::Kratzer,
                n_max: 1,
                ell_max: None,
            },
        };
        let code = execute(cli).expect("runs");
        assert_eq!(code, 0);
        let body = std::fs::read_to_string(&path).expect("file exists");
        assert!(body.starts_with("n,ell,energy_ev\n"));
        assert_eq!(body.lines().count(), 4, "header plus three rows");
    }

    #[test]
    fn execute_honors_config_molecules() {
        let dir = tempfile::tempdir().expect("tempdir");
        let cfg_path = dir.path().join("extra.conf");
        std::fs::write(
            &cfg_path,
            "name = XY\nd0_ev = 5.0\nr0_angstrom = 1.5\nmu_amu = 4.0\n",
        )
        .expect("config written");
        let out_path = dir.path().join("xy.csv");
        let cli = Cli {
            config: Some(cfg_path),
            out: Some(out_path.clone()),
            format: OutputFormat::Csv,
            command: Command::Spectrum {
                molecule: "XY".to_string(),
                potential: PotentialArg::Kratzer,
                n_max: 0,
                ell_max: None,
            },
        };
        assert_eq!(execute(cli).expect("runs"), 0);
        let body = std::fs::read_to_string(&out_path).expect("file exists");
        assert_eq!(body.lines().count(), 2);
    }
}
