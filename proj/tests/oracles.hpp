#pragma once

// Independent test oracles. The field oracle multiplies coefficient vectors
// schoolbook-style and reduces by long division, sharing no code with the
// packed arithmetic it checks; the root oracle evaluates the polynomial at
// every field element.

#include "addbasis/field.hpp"
#include "addbasis/group.hpp"

#include <cstdint>
#include <vector>

namespace oracle {

inline int norm_mod(long long v, int p) {
    int r = static_cast<int>(v % p);
    return r < 0 ? r + p : r;
}

// schoolbook multiply-and-reduce on raw coefficient vectors
inline std::vector<int> poly_mul_reduce(std::vector<int> a, std::vector<int> b,
                                        const std::vector<int>& modulus, int p) {
    const int k = static_cast<int>(modulus.size()) - 1;
    std::vector<long long> prod(2 * k + 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] += 1LL * a[i] * b[j];
    for (int i = 2 * k; i >= k; --i) {
        long long c = norm_mod(prod[i], p);
        if (!c) continue;
        for (int j = 0; j <= k; ++j) prod[i - k + j] -= c * modulus[j];
    }
    std::vector<int> out(k);
    for (int i = 0; i < k; ++i) out[i] = norm_mod(prod[i], p);
    return out;
}

inline addbasis::FieldElement mul(const addbasis::Field& f, addbasis::FieldElement x,
                                  addbasis::FieldElement y) {
    std::vector<int> a(f.degree()), b(f.degree());
    for (int i = 0; i < f.degree(); ++i) {
        a[i] = f.coeff(x, i);
        b[i] = f.coeff(y, i);
    }
    return f.from_coeffs(poly_mul_reduce(a, b, f.modulus(), static_cast<int>(f.characteristic())));
}

// coefficient-wise sum, reduced mod p
inline addbasis::FieldElement add(const addbasis::Field& f, addbasis::FieldElement x,
                                  addbasis::FieldElement y) {
    std::vector<int> a(f.degree());
    for (int i = 0; i < f.degree(); ++i)
        a[i] = norm_mod(f.coeff(x, i) + f.coeff(y, i), static_cast<int>(f.characteristic()));
    return f.from_coeffs(a);
}

// exhaustive root enumeration of b2 x^2 + b1 x + b0
inline std::vector<addbasis::FieldElement> quad_roots(const addbasis::Field& f,
                                                      addbasis::FieldElement b2,
                                                      addbasis::FieldElement b1,
                                                      addbasis::FieldElement b0) {
    std::vector<addbasis::FieldElement> roots;
    for (std::uint64_t v = 0; v < f.order(); ++v) {
        addbasis::FieldElement x = f.element(v);
        addbasis::FieldElement val = add(f, add(f, mul(f, mul(f, b2, x), x), mul(f, b1, x)), b0);
        if (val.value == 0) roots.push_back(x);
    }
    return roots;
}

}  // namespace oracle
