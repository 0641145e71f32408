/* Minimal C consumer of the kratzer C ABI.
 *
 * Build (from the workspace root, after `cargo build --release -p kratzer-ffi`):
 *   cc crates/kratzer-ffi/examples/demo.c \
 *      -Icrates/kratzer-ffi/include \
 *      -Ltarget/release -lkratzer_ffi -lm -o demo
 *   LD_LIBRARY_PATH=target/release ./demo
 */
#include <stdio.h>
#include <stdlib.h>

#include "kratzer.h"

static void check(kz_status status, const char *what) {
    if (status != KZ_OK) {
        fprintf(stderr, "%s failed (%d): %s\n", what, (int)status, kz_last_error_message());
        exit(1);
    }
}

int main(void) {
    printf("kratzer %s\n", kz_version());

    kz_molecule *co = NULL;
    check(kz_molecule_builtin("CO", &co), "kz_molecule_builtin");

    for (unsigned n = 0; n <= 2; n++) {
        double e = 0.0;
        check(kz_energy(co, KZ_POTENTIAL_KRATZER, n, 0, &e), "kz_energy");
        printf("E(n=%u, l=0) = %.12f eV\n", n, e);
    }

    kz_context *state = NULL;
    check(kz_context_new(co, KZ_POTENTIAL_KRATZER, 1, 0, &state), "kz_context_new");

    double beta = 0.0, psi = 0.0;
    check(kz_context_beta(state, &beta), "kz_context_beta");
    check(kz_eval_radial(state, 1.1282, &psi), "kz_eval_radial");
    printf("beta = %.6f, R(r0) = %.6e\n", beta, psi);

    kz_table_row row;
    check(kz_context_table_row(state, &row), "kz_context_table_row");
    printf("row(n=1, l=0): r = %.10f, rddr = %.8f, gamma1 = %.8f, gamma2 = %.8f\n",
           row.r_elem, row.rddr_elem, row.gamma1, row.gamma2);

    uint64_t passed = 0, failed = 0, divergences = 0;
    check(kz_validate(co, KZ_POTENTIAL_KRATZER, 2, 2, &passed, &failed, &divergences),
          "kz_validate");
    printf("validation: %llu passed, %llu failed, %llu expected divergences\n",
           (unsigned long long)passed, (unsigned long long)failed,
           (unsigned long long)divergences);

    kz_context_free(state);
    kz_molecule_free(co);
    return failed == 0 ? 0 : 1;
}
