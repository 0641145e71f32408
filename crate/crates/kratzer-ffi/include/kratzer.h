#ifndef KRATZER_H
#define KRATZER_H

/* Generated by cbindgen from the kratzer-ffi crate; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Potential variant selector: the bare well or the well shifted up by D₀.
typedef enum {
  KZ_POTENTIAL_KRATZER = 0,
  KZ_POTENTIAL_MODIFIED_KRATZER = 1,
} kz_potential;

// Status code returned by every ABI entry point.
typedef enum {
  KZ_OK = 0,
  KZ_NULL_POINTER = 1,
  KZ_INVALID_ARGUMENT = 2,
  KZ_DOMAIN_ERROR = 3,
  KZ_UNKNOWN_MOLECULE = 4,
  KZ_NON_FINITE = 5,
  KZ_UTF8_ERROR = 6,
  KZ_INTERNAL_PANIC = 7,
} kz_status;

// Opaque per-(molecule, potential, n, ℓ) state: the spectral quantities and
// the assembled radial wavefunction.
typedef struct kz_context kz_context;

// Opaque molecule handle: spectroscopic constants plus unit conventions.
typedef struct kz_molecule kz_molecule;

// One published-table row: ⟨r⟩, ⟨r·d/dr⟩, and the two Γ± combinations.
typedef struct {
  uint32_t n;
  uint32_t ell;
  double r_elem;
  double rddr_elem;
  double gamma1;
  double gamma2;
} kz_table_row;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a static NUL-terminated string; never NULL.
const char *kz_version(void);

// Message describing the most recent failure on this thread; empty string
// if nothing failed yet. Valid until the next failing call on the thread.
const char *kz_last_error_message(void);

// Looks up a built-in molecule ("CO", "NO"; case-insensitive) and returns a
// new handle through `out`. Free with `kz_molecule_free`.
//
// # Safety
// `name` must be a NUL-terminated string; `out` must be valid for a write.
kz_status kz_molecule_builtin(const char *name, kz_molecule **out);

// Builds a molecule handle from explicit constants: well depth D₀ (eV),
// equilibrium separation r₀ (Å), reduced mass μ (amu); all must be positive
// and finite. Free with `kz_molecule_free`.
//
// # Safety
// `name` must be a NUL-terminated string; `out` must be valid for a write.
kz_status kz_molecule_custom(const char *name,
                             double d0_ev,
                             double r0_angstrom,
                             double mu_amu,
                             kz_molecule **out);

// Releases a molecule handle; NULL is a no-op.
//
// # Safety
// `m` must be NULL or a pointer from `kz_molecule_builtin`/`_custom`,
// not freed before.
void kz_molecule_free(kz_molecule *m);

// Creates the spectral context for one (molecule, potential, n, ℓ) state:
// energy, β, both ξ conventions, and the assembled wavefunction. Free with
// `kz_context_free`.
//
// # Safety
// `molecule` must be a live molecule handle; `out` valid for a write.
kz_status kz_context_new(const kz_molecule *molecule,
                         kz_potential potential,
                         uint32_t n,
                         uint32_t ell,
                         kz_context **out);

// Releases a context handle; NULL is a no-op.
//
// # Safety
// `c` must be NULL or a pointer from `kz_context_new`, not freed before.
void kz_context_free(kz_context *c);

// Bound-state energy in eV (includes the variant's constant shift).
//
// # Safety
// `context` must be a live context handle; `out` valid for a write.
kz_status kz_context_energy(const kz_context *context, double *out);

// Effective angular parameter β_ℓ.
//
// # Safety
// `context` must be a live context handle; `out` valid for a write.
kz_status kz_context_beta(const kz_context *context, double *out);

// Physical (positive) inverse length scale ξ in Å⁻¹.
//
// # Safety
// `context` must be a live context handle; `out` valid for a write.
kz_status kz_context_xi_physical(const kz_context *context, double *out);

// ξ in the printed (negative) sign convention the tables use.
//
// # Safety
// `context` must be a live context handle; `out` valid for a write.
kz_status kz_context_xi_printed(const kz_context *context, double *out);

// Fills the published-table row for this context (requires n ≥ 1).
//
// # Safety
// `context` must be a live context handle; `out` valid for a write.
kz_status kz_context_table_row(const kz_context *context, kz_table_row *out);

// Ladder coefficients ℓ₋, ℓ₊ at this context's (n, β). Either out-pointer
// may be NULL to skip it (but not both).
//
// # Safety
// `context` must be a live context handle; non-NULL out-pointers valid for
// writes.
kz_status kz_ladder_coefficients(const kz_context *context, double *ell_minus, double *ell_plus);

// Evaluates the normalized radial wavefunction R(r) at r ≥ 0 (Å).
//
// # Safety
// `context` must be a live context handle; `out` valid for a write.
kz_status kz_eval_radial(const kz_context *context, double r, double *out);

// Evaluates dR/dr at r > 0 (Å).
//
// # Safety
// `context` must be a live context handle; `out` valid for a write.
kz_status kz_eval_radial_derivative(const kz_context *context, double r, double *out);

// Bound-state energy in eV without constructing a context.
//
// # Safety
// `molecule` must be a live molecule handle; `out` valid for a write.
kz_status kz_energy(const kz_molecule *molecule,
                    kz_potential potential,
                    uint32_t n,
                    uint32_t ell,
                    double *out);

// Potential value V(r) in eV at r > 0 (Å).
//
// # Safety
// `molecule` must be a live molecule handle; `out` valid for a write.
kz_status kz_potential_value(const kz_molecule *molecule,
                             kz_potential potential,
                             double r,
                             double *out);

// Runs the full validation suite for one molecule/potential pair on the
// (n ≤ n_max, ℓ ≤ ell_max) grid and reports entry counts. Any of the three
// count pointers may be NULL to skip that count. `KZ_OK` means the suite
// ran; inspect `failed` for its outcome.
//
// # Safety
// `molecule` must be a live molecule handle; non-NULL count pointers valid
// for writes.
kz_status kz_validate(const kz_molecule *molecule,
                      kz_potential potential,
                      uint32_t n_max,
                      uint32_t ell_max,
                      uint64_t *passed,
                      uint64_t *failed,
                      uint64_t *divergences);

// Runs the full validation suite and returns the JSON report as a heap
// string through `out`. Release it with `kz_string_free`.
//
// # Safety
// `molecule` must be a live molecule handle; `out` valid for a write.
kz_status kz_validate_json(const kz_molecule *molecule,
                           kz_potential potential,
                           uint32_t n_max,
                           uint32_t ell_max,
                           char **out);

// Releases a string produced by this library; NULL is a no-op.
//
// # Safety
// `s` must be NULL or a pointer from `kz_validate_json`, not freed before.
void kz_string_free(char *s);

// Generalized-potential coefficients (a eV·Å, b eV·Å², c eV) and reduced
// mass (eV/c²) backing this context. Any out-pointer may be NULL.
//
// # Safety
// `context` must be a live context handle; non-NULL out-pointers valid for
// writes.
kz_status kz_context_parameters(const kz_context *context,
                                double *a,
                                double *b,
                                double *c,
                                double *mu_ev);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* KRATZER_H */
