#pragma once

// Dense polynomial arithmetic over GF(p) for small primes p. This is the
// support layer for modulus validation and the canonical-modulus search;
// element arithmetic in the field layer uses packed representations instead.
// Coefficients are stored low-to-high; the zero polynomial is the empty vector.

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace addbasis::detail {

using Poly = std::vector<int>;

inline int mod_p(std::int64_t v, int p) {
    int r = static_cast<int>(v % p);
    return r < 0 ? r + p : r;
}

inline void poly_trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// deg(0) == -1
inline int poly_degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

inline Poly poly_add(const Poly& a, const Poly& b, int p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        int v = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
        r[i] = v % p;
    }
    poly_trim(r);
    return r;
}

inline Poly poly_mul(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = mod_p(r[i + j] + std::int64_t(a[i]) * b[j], p);
    }
    poly_trim(r);
    return r;
}

inline int inv_mod_p(int a, int p) {
    a = mod_p(a, p);
    if (a == 0) throw std::domain_error("inverse of 0 mod p");
    int r = 1;
    for (int e = p - 2; e > 0; e >>= 1) {
        // tiny p: plain square-and-multiply on ints
        if (e & 1) r = mod_p(std::int64_t(r) * a, p);
        a = mod_p(std::int64_t(a) * a, p);
    }
    return r;
}

// Remainder of a modulo m; m need not be monic.
inline Poly poly_mod(Poly a, const Poly& m, int p) {
    if (m.empty()) throw std::invalid_argument("poly_mod by zero polynomial");
    poly_trim(a);
    const int dm = poly_degree(m);
    const int lead_inv = inv_mod_p(m.back(), p);
    while (poly_degree(a) >= dm) {
        int da = poly_degree(a);
        int f = mod_p(std::int64_t(a.back()) * lead_inv, p);
        for (int i = 0; i <= dm; ++i)
            a[da - dm + i] = mod_p(a[da - dm + i] - std::int64_t(f) * m[i], p);
        poly_trim(a);
    }
    return a;
}

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, int p) {
    return poly_mod(poly_mul(a, b, p), m, p);
}

inline Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, int p) {
    Poly r{1};
    base = poly_mod(std::move(base), m, p);
    while (e > 0) {
        if (e & 1) r = poly_mulmod(r, base, m, p);
        base = poly_mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

inline Poly poly_gcd(Poly a, Poly b, int p) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        int f = inv_mod_p(a.back(), p);
        for (int& c : a) c = mod_p(std::int64_t(c) * f, p);
    }
    return a;
}

inline std::uint64_t pow_u64(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

// Trial-division irreducibility: divide by every monic polynomial of degree
// 1..deg/2. Exhaustive and exact; intended for p^deg within the small-field cap.
inline bool poly_irreducible_trial(const Poly& f, int p) {
    const int d = poly_degree(f);
    if (d <= 0) return false;
    if (d == 1) return true;
    for (int dd = 1; dd <= d / 2; ++dd) {
        std::uint64_t count = pow_u64(static_cast<std::uint64_t>(p), static_cast<unsigned>(dd));
        for (std::uint64_t n = 0; n < count; ++n) {
            Poly g(dd + 1, 0);
            std::uint64_t v = n;
            for (int i = 0; i < dd; ++i) { g[i] = static_cast<int>(v % p); v /= p; }
            g[dd] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

// Rabin's test: f (monic, degree k) is irreducible over GF(p) iff
// x^(p^k) == x (mod f) and gcd(x^(p^(k/l)) - x, f) == 1 for each prime l | k.
inline bool poly_irreducible_rabin(const Poly& f, int p) {
    const int k = poly_degree(f);
    if (k <= 0) return false;
    if (k == 1) return true;
    const Poly x{0, 1};
    Poly xq = poly_powmod(x, pow_u64(static_cast<std::uint64_t>(p), static_cast<unsigned>(k)), f, p);
    Poly diff = poly_add(xq, poly_mul(x, {p - 1}, p), p);
    if (!diff.empty()) return false;
    std::vector<int> prime_divisors;
    int kk = k;
    for (int q = 2; q * q <= kk; ++q)
        if (kk % q == 0) {
            prime_divisors.push_back(q);
            while (kk % q == 0) kk /= q;
        }
    if (kk > 1) prime_divisors.push_back(kk);
    for (int l : prime_divisors) {
        Poly xe = poly_powmod(x, pow_u64(static_cast<std::uint64_t>(p), static_cast<unsigned>(k / l)), f, p);
        Poly g = poly_gcd(poly_add(xe, poly_mul(x, {p - 1}, p), p), f, p);
        if (poly_degree(g) != 0) return false;
    }
    return true;
}

inline bool poly_irreducible(const Poly& f, int p) {
    const int k = poly_degree(f);
    if (k >= 1 && pow_u64(static_cast<std::uint64_t>(p), static_cast<unsigned>(k)) <= (1u << 20))
        return poly_irreducible_trial(f, p);
    return poly_irreducible_rabin(f, p);
}

// The canonical modulus for GF(p^k): the monic irreducible polynomial of
// degree k whose non-leading coefficients, read as a base-p integer
// (c0 least significant), are smallest.
inline Poly min_irreducible(int p, int k) {
    std::uint64_t count = pow_u64(static_cast<std::uint64_t>(p), static_cast<unsigned>(k));
    for (std::uint64_t n = 0; n < count; ++n) {
        Poly f(k + 1, 0);
        std::uint64_t v = n;
        for (int i = 0; i < k; ++i) { f[i] = static_cast<int>(v % p); v /= p; }
        f[k] = 1;
        if (poly_irreducible(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable for k >= 1
}

}  // namespace addbasis::detail
