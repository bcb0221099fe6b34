/* Minimal consumer of the C interface: expands G^8 over two generators,
 * prints the coefficients, and cross-checks the identity coefficient
 * against the closed-walk count.
 *
 * Build (from the workspace root):
 *   cargo build -p freegen-ffi
 *   cc crates/ffi/examples/demo.c -Icrates/ffi/include \
 *      target/debug/libfreegen_ffi.a -lpthread -ldl -lm -o demo
 */
#include <stdio.h>
#include <string.h>

#include "freegen.h"

static int fail(const char *what, FgStatus status) {
    fprintf(stderr, "%s: %s\n", what, fg_status_describe(status));
    return 1;
}

int main(void) {
    FgExpansion *expansion = NULL;
    FgStatus status = fg_expand_power(2, 8, &expansion);
    if (status != FG_STATUS_OK) {
        return fail("fg_expand_power", status);
    }

    printf("G^%zu =", fg_expansion_order(expansion));
    for (size_t length = 8;; length -= 2) {
        char *coefficient = NULL;
        status = fg_expansion_coefficient(expansion, length, &coefficient);
        if (status != FG_STATUS_OK) {
            fg_expansion_free(expansion);
            return fail("fg_expansion_coefficient", status);
        }
        printf(" %s@%zu", coefficient, length);
        fg_string_free(coefficient);
        if (length == 0) {
            break;
        }
    }
    printf("\n");

    bool conserved = false;
    status = fg_expansion_mass_conserved(expansion, &conserved);
    if (status != FG_STATUS_OK) {
        fg_expansion_free(expansion);
        return fail("fg_expansion_mass_conserved", status);
    }
    printf("mass conserved: %s\n", conserved ? "yes" : "no");

    char *identity = NULL;
    char *walks = NULL;
    fg_expansion_coefficient(expansion, 0, &identity);
    fg_closed_walk_count(2, 8, &walks);
    printf("identity coefficient %s, closed walks %s -> %s\n", identity, walks,
           strcmp(identity, walks) == 0 ? "agree" : "DISAGREE");
    int rc = strcmp(identity, walks) == 0 && conserved ? 0 : 1;
    fg_string_free(identity);
    fg_string_free(walks);
    fg_expansion_free(expansion);
    return rc;
}
