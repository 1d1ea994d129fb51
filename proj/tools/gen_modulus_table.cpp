// Regenerates the canonical modulus table (data/modulus_table.txt and the
// builtin copy in modulus_table.hpp). The choice per (p, k) is the monic
// irreducible polynomial whose non-leading coefficients, read as a base-p
// integer, are smallest.

#include "addbasis/gfp_poly.hpp"

#include <cstdio>

int main() {
    std::printf("# addbasis modulus table v1\n");
    std::printf("# p k c0 c1 ... ck  (monic irreducible over GF(p), coefficients low-to-high)\n");
    for (int p : {2, 3, 5, 7})
        for (int k = 1; k <= 16; ++k) {
            auto f = addbasis::detail::min_irreducible(p, k);
            std::printf("%d %d", p, k);
            for (int c : f) std::printf(" %d", c);
            std::printf("\n");
        }
    return 0;
}
