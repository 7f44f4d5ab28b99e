#include <stdio.h>
#include "qosp.h"

int main(void) {
    QospAlgebra *alg = NULL;
    QospElement *f = NULL, *p = NULL;
    char *text = NULL;
    if (qosp_algebra_new(1, false, &alg) != QOSP_STATUS_OK) return 1;
    if (qosp_element_parse(alg, "F1", &f) != QOSP_STATUS_OK) return 2;
    if (qosp_psi(alg, f, &p) != QOSP_STATUS_OK) return 3;
    if (qosp_element_to_string(p, &text) != QOSP_STATUS_OK) return 4;
    puts(text);
    if (qosp_element_parse(alg, "K[1]", &f) != QOSP_STATUS_PARSE) return 5;
    if (qosp_last_error_message()[0] == '\0') return 6;
    qosp_string_free(text);
    qosp_element_free(p);
    qosp_element_free(f);
    qosp_algebra_free(alg);
    return 0;
}
