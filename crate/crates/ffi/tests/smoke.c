#include <stdio.h>
#include <string.h>
#include "splitlat.h"

#define CHECK(x) do { if (!(x)) { fprintf(stderr, "line %d: %s\n", __LINE__, #x); return 1; } } while (0)

int main(void) {
    SplitlatPoset *p = NULL;
    SplitlatLattice *l = NULL;
    CHECK(splitlat_poset_build("g2", 2, 2, "ba", &p) == SPLITLAT_STATUS_OK);
    CHECK(splitlat_poset_len(p) == 32);
    CHECK(splitlat_lattice_enumerate(p, 1000, &l) == SPLITLAT_STATUS_OK);
    CHECK(splitlat_lattice_len(l) == 729);
    size_t len = 0;
    CHECK(splitlat_lattice_rgf(l, NULL, 0, &len) == SPLITLAT_STATUS_BUFFER_TOO_SMALL);
    CHECK(len == 33);
    bool ok = false;
    CHECK(splitlat_lattice_verify_character(l, "g2", 2, 2, &ok) == SPLITLAT_STATUS_OK && ok);
    CHECK(splitlat_poset_build("e8", 1, 1, "ba", &p) == SPLITLAT_STATUS_INVALID_ARGUMENT);
    CHECK(strstr(splitlat_last_error(), "e8") != NULL);
    splitlat_lattice_free(l);
    splitlat_poset_free(p);
    printf("ok\n");
    return 0;
}
