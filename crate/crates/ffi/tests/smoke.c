#include <stdio.h>
#include <string.h>

#include "hopf.h"

static int fail(const char *what) {
    const char *msg = hopf_last_error();
    fprintf(stderr, "%s: %s\n", what, msg ? msg : "(no message)");
    return 1;
}

int main(void) {
    HopfAlgebra *h1 = NULL, *h2 = NULL;
    if (hopf_gallery_open("H1", 2, 8, &h1) != HOPF_STATUS_OK) return fail("open H1");
    if (hopf_gallery_open("H2", 2, 8, &h2) != HOPF_STATUS_OK) return fail("open H2");

    size_t dim = 0;
    if (hopf_algebra_dimension(h1, 4, &dim) != HOPF_STATUS_OK || dim != 6) return fail("dimension");

    char *delta = NULL;
    if (hopf_coproduct(h1, "z", &delta) != HOPF_STATUS_OK) return fail("coproduct");
    if (strcmp(delta, "1\xe2\x8a\x97z + y\xe2\x8a\x97y + z\xe2\x8a\x97" "1") != 0) return fail(delta);
    hopf_string_free(delta);

    HopfVerdict verdict;
    char *detail = NULL;
    if (hopf_iso(h1, h2, &verdict, &detail) != HOPF_STATUS_OK) return fail("iso");
    if (verdict != HOPF_VERDICT_NOT_ISOMORPHIC) return fail("verdict");
    printf("%s\n", detail);
    hopf_string_free(detail);

    if (hopf_gallery_open("nope", 2, 8, &h2) != HOPF_STATUS_VALIDATION || hopf_last_error() == NULL)
        return fail("unknown name accepted");

    hopf_algebra_free(h1);
    hopf_algebra_free(h2);
    return 0;
}
