#include <stdio.h>
#include <string.h>

#include "affcodes.h"

int main(void) {
    AffCode *code = NULL;
    if (aff_code_extended(2, 4, 2, &code) != AFF_STATUS_OK) {
        fprintf(stderr, "construct: %s\n", aff_last_error());
        return 1;
    }
    AffWeights *w = NULL;
    if (aff_weights_compute(code, AFF_METHOD_BRUTE, 1, &w) != AFF_STATUS_OK) {
        fprintf(stderr, "weights: %s\n", aff_last_error());
        return 1;
    }
    for (size_t i = 0; i < aff_weights_len(w); i++) {
        uint32_t weight;
        uint64_t count;
        aff_weights_entry(w, i, &weight, &count);
        printf("%u %llu\n", weight, (unsigned long long)count);
    }
    aff_weights_free(w);
    aff_code_free(code);

    AffField *f = NULL;
    if (aff_field_new(6, 1, &f) != AFF_STATUS_INVALID_ARGUMENT || strlen(aff_last_error()) == 0) {
        return 1;
    }
    return 0;
}
