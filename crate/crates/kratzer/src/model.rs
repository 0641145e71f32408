//! Physical constants, molecule registry, config loading, and the
//! generalized Kratzer potential family V(r) = a/r + b/r² + c.

use std::path::Path;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    /// ħc in eV·Å.
    pub hbar_c: f64,
    /// Rest energy of one atomic mass unit, in eV.
    pub amu_to_ev: f64,
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self {
            hbar_c: 1973.29,
            amu_to_ev: 9.31494028e8,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MoleculeSpec {
    pub name: String,
    /// Dissociation energy D₀ in eV.
    pub d0: f64,
    /// Equilibrium separation r₀ in Å.
    pub r0: f64,
    /// Reduced mass in amu.
    pub mu_amu: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialParams {
    /// eV·Å; negative for bound states.
    pub a: f64,
    /// eV·Å²; nonnegative keeps β real for every ℓ.
    pub b: f64,
    /// eV; asymptote V(r → ∞).
    pub c: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PotentialKind {
    Kratzer,
    ModifiedKratzer,
}

impl PotentialKind {
    pub fn params(self, m: &MoleculeSpec) -> PotentialParams {
        match self {
            PotentialKind::Kratzer => kratzer_params(m),
            PotentialKind::ModifiedKratzer => modified_kratzer_params(m),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            PotentialKind::Kratzer => "kratzer",
            PotentialKind::ModifiedKratzer => "modified-kratzer",
        }
    }
}

pub fn builtin_molecules() -> Vec<MoleculeSpec> {
    vec![
        MoleculeSpec {
            name: "CO".to_string(),
            d0: 10.84514471,
            r0: 1.1282,
            mu_amu: 6.860586000,
        },
        MoleculeSpec {
            name: "NO".to_string(),
            d0: 8.043782568,
            r0: 1.1508,
            mu_amu: 7.468441000,
        },
    ]
}

/// Well of depth D₀ with minimum at r₀ and asymptote 0: a = −2D₀r₀, b = D₀r₀², c = 0.
pub fn kratzer_params(m: &MoleculeSpec) -> PotentialParams {
    PotentialParams {
        a: -2.0 * m.d0 * m.r0,
        b: m.d0 * m.r0 * m.r0,
        c: 0.0,
    }
}

/// Same well shifted up by D₀ so the minimum sits at 0.
pub fn modified_kratzer_params(m: &MoleculeSpec) -> PotentialParams {
    PotentialParams {
        c: m.d0,
        ..kratzer_params(m)
    }
}

pub fn evaluate_potential(p: &PotentialParams, r: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::Domain(format!(
            "potential requires r > 0, got r = {r}"
        )));
    }
    Ok(p.a / r + p.b / (r * r) + p.c)
}

/// μc² in eV.
pub fn mu_energy(m: &MoleculeSpec, k: &PhysicalConstants) -> f64 {
    m.mu_amu * k.amu_to_ev
}

pub fn find_molecule<'a>(registry: &'a [MoleculeSpec], name: &str) -> Result<&'a MoleculeSpec> {
    registry
        .iter()
        .find(|m| m.name.eq_ignore_ascii_case(name))
        .ok_or_else(|| Error::UnknownMolecule {
            name: name.to_string(),
            available: registry
                .iter()
                .map(|m| m.name.as_str())
                .collect::<Vec<_>>()
                .join(", "),
        })
}

/// Parsed key-value config: extra molecules plus optional constant overrides.
#[derive(Debug, Clone, Default)]
pub struct ConfigFile {
    pub molecules: Vec<MoleculeSpec>,
    pub constants: PhysicalConstants,
}

impl ConfigFile {
    /// Builtins plus config molecules; a config molecule shadows a builtin
    /// with the same name.
    pub fn registry(&self) -> Vec<MoleculeSpec> {
        let mut out: Vec<MoleculeSpec> = builtin_molecules()
            .into_iter()
            .filter(|b| {
                !self
                    .molecules
                    .iter()
                    .any(|m| m.name.eq_ignore_ascii_case(&b.name))
            })
            .collect();
        out.extend(self.molecules.iter().cloned());
        out
    }
}

struct PendingMolecule {
    line: usize,
    name: String,
    d0: Option<f64>,
    r0: Option<f64>,
    mu_amu: Option<f64>,
}

impl PendingMolecule {
    fn finish(self) -> Result<MoleculeSpec> {
        let missing = |field: &str, line: usize| Error::Config {
            line,
            msg: format!("molecule '{}' is missing {field}", self.name),
        };
        let d0 = self.d0.ok_or_else(|| missing("d0_ev", self.line))?;
        let r0 = self.r0.ok_or_else(|| missing("r0_angstrom", self.line))?;
        let mu_amu = self.mu_amu.ok_or_else(|| missing("mu_amu", self.line))?;
        for (label, v) in [("d0_ev", d0), ("r0_angstrom", r0), ("mu_amu", mu_amu)] {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::Config {
                    line: self.line,
                    msg: format!(
                        "molecule '{}': {label} must be positive, got {v}",
                        self.name
                    ),
                });
            }
        }
        Ok(MoleculeSpec {
            name: self.name,
            d0,
            r0,
            mu_amu,
        })
    }
}

/// Format: `key = value` lines, `#` comments. `name = XY` opens a molecule
/// block filled by `d0_ev`, `r0_angstrom`, `mu_amu`; `hbar_c_ev_angstrom`
/// and `amu_to_ev` override constants from anywhere in the file.
pub fn parse_config(text: &str) -> Result<ConfigFile> {
    let mut cfg = ConfigFile::default();
    let mut pending: Option<PendingMolecule> = None;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| Error::Config {
            line: lineno,
            msg: format!("expected 'key = value', got '{line}'"),
        })?;
        let key = key.trim();
        let value = value.trim();
        let parse_num = || -> Result<f64> {
            value.parse::<f64>().map_err(|_| Error::Config {
                line: lineno,
                msg: format!("invalid number '{value}' for key '{key}'"),
            })
        };
        match key {
            "name" => {
                if value.is_empty() {
                    return Err(Error::Config {
                        line: lineno,
                        msg: "molecule name must not be empty".to_string(),
                    });
                }
                if let Some(prev) = pending.take() {
                    cfg.molecules.push(prev.finish()?);
                }
                pending = Some(PendingMolecule {
                    line: lineno,
                    name: value.to_string(),
                    d0: None,
                    r0: None,
                    mu_amu: None,
                });
            }
            "d0_ev" | "r0_angstrom" | "mu_amu" => {
                let v = parse_num()?;
                let slot = pending.as_mut().ok_or_else(|| Error::Config {
                    line: lineno,
                    msg: format!("'{key}' appears before any 'name =' block"),
                })?;
                match key {
                    "d0_ev" => slot.d0 = Some(v),
                    "r0_angstrom" => slot.r0 = Some(v),
                    _ => slot.mu_amu = Some(v),
                }
            }
            "hbar_c_ev_angstrom" => {
                let v = parse_num()?;
                if !(v > 0.0) {
                    return Err(Error::Config {
                        line: lineno,
                        msg: format!("hbar_c_ev_angstrom must be positive, got {v}"),
                    });
                }
                cfg.constants.hbar_c = v;
            }
            "amu_to_ev" => {
                let v = parse_num()?;
                if !(v > 0.0) {
                    return Err(Error::Config {
                        line: lineno,
                        msg: format!("amu_to_ev must be positive, got {v}"),
                    });
                }
                cfg.constants.amu_to_ev = v;
            }
            _ => {
                return Err(Error::Config {
                    line: lineno,
                    msg: format!("unknown key '{key}'"),
                });
            }
        }
    }
    if let Some(prev) = pending.take() {
        cfg.molecules.push(prev.finish()?);
    }
    Ok(cfg)
}

pub fn load_config(path: &Path) -> Result<ConfigFile> {
    parse_config(&std::fs::read_to_string(path)?)
}
