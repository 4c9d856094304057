/* Build: cargo build --release -p ci-ideal-lab-ffi
 *        cc -Iinclude examples/membership.c ../../target/release/libci_ideal_lab_ffi.a -lpthread -ldl -lm -o membership */
#include <stdio.h>
#include "ci_ideal_lab.h"

int main(void) {
    CiIdeal *ideal = NULL;
    CiGroebner *basis = NULL;
    CiPolynomial *f = NULL;
    bool member = false;

    if (ci_ideal_new("hypergraph", 4, 2, 5, 4, "1,1;2,2", &ideal) != CI_STATUS_OK) {
        char *msg = ci_last_error();
        fprintf(stderr, "%s\n", msg);
        ci_string_free(msg);
        return 1;
    }
    printf("%zu generators\n", ci_ideal_len(ideal));
    if (ci_groebner_compute(ideal, NULL, &basis) != CI_STATUS_OK) {
        ci_ideal_free(ideal);
        return 2;
    }
    ci_polynomial_parse("x_1_1_1*x_2_2_1", &f);
    ci_groebner_contains(basis, f, &member);
    printf("x_1_1_1*x_2_2_1 member: %s\n", member ? "yes" : "no");

    ci_polynomial_free(f);
    ci_groebner_free(basis);
    ci_ideal_free(ideal);
    return 0;
}
