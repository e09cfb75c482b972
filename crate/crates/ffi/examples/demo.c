#include <stdio.h>
#include <string.h>
#include "vaserstein.h"

static int fail(const char *what, VsStatus s) {
    fprintf(stderr, "%s: status %d: %s\n", what, (int)s, vs_last_error());
    return 1;
}

int main(void) {
    VsRing *ring = NULL;
    VsStatus s = vs_ring_new(
        "{\"vars\": [\"x\",\"y\",\"z\",\"w\"], \"relations\": [\"x^2+y^2+z^2+w^2-1\"]}", &ring);
    if (s != VS_STATUS_OK) return fail("ring", s);

    VsRow *row = NULL;
    s = vs_map_h(ring, &row);
    if (s != VS_STATUS_OK) return fail("h", s);

    char *out = NULL;
    s = vs_map_apply(row, "alpha-symmetric", &out);
    if (s != VS_STATUS_OK) return fail("alpha", s);
    printf("%s\n", out);
    vs_string_free(out);

    const char *bad[] = {"x", "y"};
    VsRow *none = NULL;
    s = vs_row_new(ring, bad, NULL, 2, &none);
    printf("pair (x, y): status %d\n", (int)s);

    double v1[3] = {0, 0, 1}, v2[3] = {0, 0, -1};
    int64_t linking = 0;
    double residual = 1;
    s = vs_hopf_invariant(
        "{\"vars\": [\"a\",\"b\",\"c\",\"d\"], \"components\": "
        "[\"2*a*c - 2*b*d\", \"2*a*d + 2*b*c\", \"c^2 + d^2 - a^2 - b^2\"]}",
        v1, v2, 64, &linking, &residual);
    if (s != VS_STATUS_OK) return fail("hopf", s);
    printf("linking %lld\n", (long long)linking);

    vs_row_free(row);
    vs_ring_free(ring);
    return 0;
}
