//! C ABI for the kratzer library.
//!
//! Conventions:
//! - every function returns a [`kz_status`]; data comes back through
//!   out-pointers, which are written only on `KZ_OK`;
//! - handles (`kz_molecule`, `kz_context`) are opaque and released with their
//!   matching `*_free`, which accept NULL;
//! - strings returned through `char**` are owned by the caller and released
//!   with [`kz_string_free`];
//! - on any non-OK status a thread-local message is recorded and stays
//!   readable via [`kz_last_error_message`] until the next failure on the
//!   same thread;
//! - panics never cross the boundary: they are caught and surfaced as
//!   `KZ_INTERNAL_PANIC`.

#![allow(non_camel_case_types)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use kratzer::{
    builtin_molecules, evaluate_potential, find_molecule, full_validation, ladder_coeffs,
    mu_energy, spectral_context, table_row, Error, MoleculeSpec, PhysicalConstants, PotentialKind,
    PotentialParams, QuadratureSpec, RadialWavefunction, SpectralContext,
};
use kratzer::{eval_radial, eval_radial_derivative};

/// Status code returned by every ABI entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum kz_status {
    KZ_OK = 0,
    KZ_NULL_POINTER = 1,
    KZ_INVALID_ARGUMENT = 2,
    KZ_DOMAIN_ERROR = 3,
    KZ_UNKNOWN_MOLECULE = 4,
    KZ_NON_FINITE = 5,
    KZ_UTF8_ERROR = 6,
    KZ_INTERNAL_PANIC = 7,
}

/// Potential variant selector: the bare well or the well shifted up by D₀.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum kz_potential {
    KZ_POTENTIAL_KRATZER = 0,
    KZ_POTENTIAL_MODIFIED_KRATZER = 1,
}

impl kz_potential {
    fn kind(self) -> PotentialKind {
        match self {
            kz_potential::KZ_POTENTIAL_KRATZER => PotentialKind::Kratzer,
            kz_potential::KZ_POTENTIAL_MODIFIED_KRATZER => PotentialKind::ModifiedKratzer,
        }
    }
}

/// One published-table row: ⟨r⟩, ⟨r·d/dr⟩, and the two Γ± combinations.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct kz_table_row {
    pub n: u32,
    pub ell: u32,
    pub r_elem: f64,
    pub rddr_elem: f64,
    pub gamma1: f64,
    pub gamma2: f64,
}

/// Opaque molecule handle: spectroscopic constants plus unit conventions.
pub struct kz_molecule {
    spec: MoleculeSpec,
    constants: PhysicalConstants,
}

/// Opaque per-(molecule, potential, n, ℓ) state: the spectral quantities and
/// the assembled radial wavefunction.
pub struct kz_context {
    ctx: SpectralContext,
    wavefunction: RadialWavefunction,
    params: PotentialParams,
    mu_ev: f64,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let clean: String = msg.chars().filter(|&ch| ch != '\0').collect();
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(clean).expect("NUL bytes stripped above");
    });
}

fn status_of(e: &Error) -> kz_status {
    match e {
        Error::UnknownMolecule { .. } => kz_status::KZ_UNKNOWN_MOLECULE,
        Error::InvalidArgument(_) | Error::Config { .. } | Error::Io(_) => {
            kz_status::KZ_INVALID_ARGUMENT
        }
        Error::Domain(_) | Error::Continuum { .. } | Error::NegativeDiscriminant { .. } => {
            kz_status::KZ_DOMAIN_ERROR
        }
        Error::NonFiniteSample { .. } => kz_status::KZ_NON_FINITE,
    }
}

fn fail(e: &Error) -> kz_status {
    set_error(&e.to_string());
    status_of(e)
}

fn null_pointer(what: &str) -> kz_status {
    set_error(&format!("null pointer: {what}"));
    kz_status::KZ_NULL_POINTER
}

fn guarded<F: FnOnce() -> kz_status>(f: F) -> kz_status {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic caught at the FFI boundary");
            kz_status::KZ_INTERNAL_PANIC
        }
    }
}

/// # Safety
/// `p` must be NULL or a NUL-terminated C string valid for reads.
unsafe fn cstr<'a>(p: *const c_char, what: &str) -> Result<&'a str, kz_status> {
    if p.is_null() {
        return Err(null_pointer(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error(&format!("{what} is not valid UTF-8"));
        kz_status::KZ_UTF8_ERROR
    })
}

/// # Safety
/// `p` must be NULL or a pointer previously produced by this library.
unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, kz_status> {
    if p.is_null() {
        Err(null_pointer(what))
    } else {
        Ok(&*p)
    }
}

/// # Safety
/// `out` must be NULL or valid for a single write of `T`.
unsafe fn write_out<T>(out: *mut T, what: &str, value: T) -> kz_status {
    if out.is_null() {
        return null_pointer(what);
    }
    out.write(value);
    kz_status::KZ_OK
}

/// Library version as a static NUL-terminated string; never NULL.
#[no_mangle]
pub extern "C" fn kz_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Message describing the most recent failure on this thread; empty string
/// if nothing failed yet. Valid until the next failing call on the thread.
#[no_mangle]
pub extern "C" fn kz_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Looks up a built-in molecule ("CO", "NO"; case-insensitive) and returns a
/// new handle through `out`. Free with `kz_molecule_free`.
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn kz_molecule_builtin(
    name: *const c_char,
    out: *mut *mut kz_molecule,
) -> kz_status {
    guarded(|| {
        if out.is_null() {
            return null_pointer("out");
        }
        let name = match cstr(name, "name") {
            Ok(s) => s,
            Err(status) => return status,
        };
        let registry = builtin_molecules();
        match find_molecule(&registry, name) {
            Ok(spec) => {
                let boxed = Box::new(kz_molecule {
                    spec: spec.clone(),
                    constants: PhysicalConstants::default(),
                });
                write_out(out, "out", Box::into_raw(boxed))
            }
            Err(e) => fail(&e),
        }
    })
}

/// Builds a molecule handle from explicit constants: well depth D₀ (eV),
/// equilibrium separation r₀ (Å), reduced mass μ (amu); all must be positive
/// and finite. Free with `kz_molecule_free`.
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn kz_molecule_custom(
    name: *const c_char,
    d0_ev: f64,
    r0_angstrom: f64,
    mu_amu: f64,
    out: *mut *mut kz_molecule,
) -> kz_status {
    guarded(|| {
        if out.is_null() {
            return null_pointer("out");
        }
        let name = match cstr(name, "name") {
            Ok(s) => s,
            Err(status) => return status,
        };
        for (label, v) in [
            ("d0_ev", d0_ev),
            ("r0_angstrom", r0_angstrom),
            ("mu_amu", mu_amu),
        ] {
            if !(v.is_finite() && v > 0.0) {
                return fail(&Error::InvalidArgument(format!(
                    "{label} must be positive and finite, got {v}"
                )));
            }
        }
        let boxed = Box::new(kz_molecule {
            spec: MoleculeSpec {
                name: name.to_string(),
                d0: d0_ev,
                r0: r0_angstrom,
                mu_amu,
            },
            constants: PhysicalConstants::default(),
        });
        write_out(out, "out", Box::into_raw(boxed))
    })
}

/// Releases a molecule handle; NULL is a no-op.
///
/// # Safety
/// `m` must be NULL or a pointer from `kz_molecule_builtin`/`_custom`,
/// not freed before.
#[no_mangle]
pub unsafe extern "C" fn kz_molecule_free(m: *mut kz_molecule) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Creates the spectral context for one (molecule, potential, n, ℓ) state:
/// energy, β, both ξ conventions, and the assembled wavefunction. Free with
/// `kz_context_free`.
///
/// # Safety
/// `molecule` must be a live molecule handle; `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn kz_context_new(
    molecule: *const kz_molecule,
    potential: kz_potential,
    n: u32,
    ell: u32,
    out: *mut *mut kz_context,
) -> kz_status {
    guarded(|| {
        if out.is_null() {
            return null_pointer("out");
        }
        let m = match handle(molecule, "molecule") {
            Ok(m) => m,
            Err(status) => return status,
        };
        let params = potential.kind().params(&m.spec);
        let mu_ev = mu_energy(&m.spec, &m.constants);
        match spectral_context(&params, mu_ev, n, ell, &m.constants) {
            Ok(ctx) => {
                let boxed = Box::new(kz_context {
                    wavefunction: RadialWavefunction::from_context(&ctx),
                    ctx,
                    params,
                    mu_ev,
                });
                write_out(out, "out", Box::into_raw(boxed))
            }
            Err(e) => fail(&e),
        }
    })
}

/// Releases a context handle; NULL is a no-op.
///
/// # Safety
/// `c` must be NULL or a pointer from `kz_context_new`, not freed before.
#[no_mangle]
pub unsafe extern "C" fn kz_context_free(c: *mut kz_context) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Bound-state energy in eV (includes the variant's constant shift).
///
/// # Safety
/// `context` must be a live context handle; `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn kz_context_energy(context: *const kz_context, out: *mut f64) -> kz_status {
    guarded(|| match handle(context, "context") {
        Ok(c) => write_out(out, "out", c.ctx.energy),
        Err(status) => status,
    })
}

/// Effective angular parameter β_ℓ.
///
/// # Safety
/// `context` must be a live context handle; `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn kz_context_beta(context: *const kz_context, out: *mut f64) -> kz_status {
    guarded(|| match handle(context, "context") {
        Ok(c) => write_out(out, "out", c.ctx.beta),
        Err(status) => status,
    })
}

/// Physical (positive) inverse length scale ξ in Å⁻¹.
///
/// # Safety
/// `context` must be a live context handle; `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn kz_context_xi_physical(
    context: *const kz_context,
    out: *mut f64,
) -> kz_status {
    guarded(|| match handle(context, "context") {
        Ok(c) => write_out(out, "out", c.ctx.xi_physical),
        Err(status) => status,
    })
}

/// ξ in the printed (negative) sign convention the tables use.
///
/// # Safety
/// `context` must be a live context handle; `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn kz_context_xi_printed(
    context: *const kz_context,
    out: *mut f64,
) -> kz_status {
    guarded(|| match handle(context, "context") {
        Ok(c) => write_out(out, "out", c.ctx.xi_printed),
        Err(status) => status,
    })
}

/// Fills the published-table row for this context (requires n ≥ 1).
///
/// # Safety
/// `context` must be a live context handle; `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn kz_context_table_row(
    context: *const kz_context,
    out: *mut kz_table_row,
) -> kz_status {
    guarded(|| {
        let c = match handle(context, "context") {
            Ok(c) => c,
            Err(status) => return status,
        };
        match table_row(&c.ctx) {
            Ok(row) => write_out(
                out,
                "out",
                kz_table_row {
                    n: row.n,
                    ell: row.ell,
                    r_elem: row.r_elem,
                    rddr_elem: row.rddr_elem,
                    gamma1: row.gamma1,
                    gamma2: row.gamma2,
                },
            ),
            Err(e) => fail(&e),
        }
    })
}

/// Ladder coefficients ℓ₋, ℓ₊ at this context's (n, β). Either out-pointer
/// may be NULL to skip it (but not both).
///
/// # Safety
/// `context` must be a live context handle; non-NULL out-pointers valid for
/// writes.
#[no_mangle]
pub unsafe extern "C" fn kz_ladder_coefficients(
    context: *const kz_context,
    ell_minus: *mut f64,
    ell_plus: *mut f64,
) -> kz_status {
    guarded(|| {
        let c = match handle(context, "context") {
            Ok(c) => c,
            Err(status) => return status,
        };
        if ell_minus.is_null() && ell_plus.is_null() {
            return null_pointer("ell_minus and ell_plus");
        }
        match ladder_coeffs(c.ctx.n, c.ctx.beta) {
            Ok(coeffs) => {
                if !ell_minus.is_null() {
                    ell_minus.write(coeffs.ell_minus);
                }
                if !ell_plus.is_null() {
                    ell_plus.write(coeffs.ell_plus);
                }
                kz_status::KZ_OK
            }
            Err(e) => fail(&e),
        }
    })
}

/// Evaluates the normalized radial wavefunction R(r) at r ≥ 0 (Å).
///
/// # Safety
/// `context` must be a live context handle; `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn kz_eval_radial(
    context: *const kz_context,
    r: f64,
    out: *mut f64,
) -> kz_status {
    guarded(|| {
        let c = match handle(context, "context") {
            Ok(c) => c,
            Err(status) => return status,
        };
        if !(r.is_finite() && r >= 0.0) {
            return fail(&Error::InvalidArgument(format!(
                "radius must be finite and nonnegative, got {r}"
            )));
        }
        write_out(out, "out", eval_radial(&c.wavefunction, r))
    })
}

/// Evaluates dR/dr at r > 0 (Å).
///
/// # Safety
/// `context` must be a live context handle; `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn kz_eval_radial_derivative(
    context: *const kz_context,
    r: f64,
    out: *mut f64,
) -> kz_status {
    guarded(|| {
        let c = match handle(context, "context") {
            Ok(c) => c,
            Err(status) => return status,
        };
        if !r.is_finite() {
            return fail(&Error::InvalidArgument(format!(
                "radius must be finite, got {r}"
            )));
        }
        match eval_radial_derivative(&c.wavefunction, r) {
            Ok(v) => write_out(out, "out", v),
            Err(e) => fail(&e),
        }
    })
}

/// Bound-state energy in eV without constructing a context.
///
/// # Safety
/// `molecule` must be a live molecule handle; `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn kz_energy(
    molecule: *const kz_molecule,
    potential: kz_potential,
    n: u32,
    ell: u32,
    out: *mut f64,
) -> kz_status {
    guarded(|| {
        let m = match handle(molecule, "molecule") {
            Ok(m) => m,
            Err(status) => return status,
        };
        let params = potential.kind().params(&m.spec);
        let mu_ev = mu_energy(&m.spec, &m.constants);
        match kratzer::energy(&params, mu_ev, n, ell, &m.constants) {
            Ok(e) => write_out(out, "out", e),
            Err(e) => fail(&e),
        }
    })
}

/// Potential value V(r) in eV at r > 0 (Å).
///
/// # Safety
/// `molecule` must be a live molecule handle; `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn kz_potential_value(
    molecule: *const kz_molecule,
    potential: kz_potential,
    r: f64,
    out: *mut f64,
) -> kz_status {
    guarded(|| {
        let m = match handle(molecule, "molecule") {
            Ok(m) => m,
            Err(status) => return status,
        };
        let params = potential.kind().params(&m.spec);
        match evaluate_potential(&params, r) {
            Ok(v) => write_out(out, "out", v),
            Err(e) => fail(&e),
        }
    })
}

/// Runs the full validation suite for one molecule/potential pair on the
/// (n ≤ n_max, ℓ ≤ ell_max) grid and reports entry counts. Any of the three
/// count pointers may be NULL to skip that count. `KZ_OK` means the suite
/// ran; inspect `failed` for its outcome.
///
/// # Safety
/// `molecule` must be a live molecule handle; non-NULL count pointers valid
/// for writes.
#[no_mangle]
pub unsafe extern "C" fn kz_validate(
    molecule: *const kz_molecule,
    potential: kz_potential,
    n_max: u32,
    ell_max: u32,
    passed: *mut u64,
    failed: *mut u64,
    divergences: *mut u64,
) -> kz_status {
    guarded(|| {
        let m = match handle(molecule, "molecule") {
            Ok(m) => m,
            Err(status) => return status,
        };
        let spec = QuadratureSpec::default();
        match full_validation(
            &m.spec,
            potential.kind(),
            n_max,
            ell_max,
            &m.constants,
            &spec,
        ) {
            Ok(report) => {
                if !passed.is_null() {
                    passed.write(report.passed() as u64);
                }
                if !failed.is_null() {
                    failed.write(report.failed() as u64);
                }
                if !divergences.is_null() {
                    divergences.write(report.expected_divergences() as u64);
                }
                kz_status::KZ_OK
            }
            Err(e) => fail(&e),
        }
    })
}

/// Runs the full validation suite and returns the JSON report as a heap
/// string through `out`. Release it with `kz_string_free`.
///
/// # Safety
/// `molecule` must be a live molecule handle; `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn kz_validate_json(
    molecule: *const kz_molecule,
    potential: kz_potential,
    n_max: u32,
    ell_max: u32,
    out: *mut *mut c_char,
) -> kz_status {
    guarded(|| {
        if out.is_null() {
            return null_pointer("out");
        }
        let m = match handle(molecule, "molecule") {
            Ok(m) => m,
            Err(status) => return status,
        };
        let spec = QuadratureSpec::default();
        match full_validation(
            &m.spec,
            potential.kind(),
            n_max,
            ell_max,
            &m.constants,
            &spec,
        ) {
            Ok(report) => {
                let json = report.to_json();
                let owned: String = json.chars().filter(|&ch| ch != '\0').collect();
                let c = CString::new(owned).expect("NUL bytes stripped above");
                write_out(out, "out", c.into_raw())
            }
            Err(e) => fail(&e),
        }
    })
}

/// Releases a string produced by this library; NULL is a no-op.
///
/// # Safety
/// `s` must be NULL or a pointer from `kz_validate_json`, not freed before.
#[no_mangle]
pub unsafe extern "C" fn kz_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

// The stored potential parameters and reduced mass document what the context
// was built from; expose them so bindings can round-trip their inputs.

/// Generalized-potential coefficients (a eV·Å, b eV·Å², c eV) and reduced
/// mass (eV/c²) backing this context. Any out-pointer may be NULL.
///
/// # Safety
/// `context` must be a live context handle; non-NULL out-pointers valid for
/// writes.
#[no_mangle]
pub unsafe extern "C" fn kz_context_parameters(
    context: *const kz_context,
    a: *mut f64,
    b: *mut f64,
    c: *mut f64,
    mu_ev: *mut f64,
) -> kz_status {
    guarded(|| {
        let ctx = match handle(context, "context") {
            Ok(ctx) => ctx,
            Err(status) => return status,
        };
        if !a.is_null() {
            a.write(ctx.params.a);
        }
        if !b.is_null() {
            b.write(ctx.params.b);
        }
        if !c.is_null() {
            c.write(ctx.params.c);
        }
        if !mu_ev.is_null() {
            mu_ev.write(ctx.mu_ev);
        }
        kz_status::KZ_OK
    })
}
