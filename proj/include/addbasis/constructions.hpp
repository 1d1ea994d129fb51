#pragma once

// The three explicit additive bases, plus analytic representation counts for
// the three-hyperbola basis that the verifier cross-checks element-by-element.
//
//   parabola    S = {(x, x^2)}          over GF(q)^2, q odd
//   shift2      S u (h + S)             over F (+) {0,h}, S perfect on F
//   hyperbola3  S1 u S2 u S3 with S_i = {(x, d_i/x) : x != 0}
//                                       over GF(2^k)^2, d1 + d2 + d3 = 0

#include "addbasis/basis.hpp"
#include "addbasis/verify.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace addbasis {

// ---------------------------------------------------------------- parabola

// S = {(x, x^2) : x in F}, |S| = q. Over a finite field coverage is partial
// (it is full only in the closed case); counts stay in {0, 1, 2} because
// each target yields one quadratic in x.
inline BasisSet parabola_basis(const Group& g) {
    if (g.kind() != GroupKind::field_pair)
        throw std::invalid_argument("parabola basis lives in a field-pair group");
    const Field& f = *g.field();
    if (f.characteristic() == 2)
        throw std::invalid_argument("parabola basis requires odd characteristic");
    std::vector<GroupElement> elems;
    elems.reserve(f.order());
    for (std::uint64_t x = 0; x < f.order(); ++x)
        elems.push_back(g.element({static_cast<std::int64_t>(x),
                                   static_cast<std::int64_t>(f.mul_raw(x, x))}));
    BasisProvenance prov;
    prov.construction = "parabola";
    prov.params.emplace_back("group", g.spec_string());
    return BasisSet(g, std::move(elems), std::move(prov));
}

// Number of elements of GF(q)^2 with at least one representation by the
// parabola basis: q(q+1)/2. A closed form to be validated against brute
// force, not assumed.
inline std::uint64_t parabola_covered_count(std::uint64_t q) {
    if (q < 3 || q % 2 == 0) throw std::invalid_argument("q must be an odd prime power >= 3");
    std::uint64_t p = 0;
    for (std::uint64_t d = 3; d * d <= q; d += 2)
        if (q % d == 0) { p = d; break; }
    if (p == 0) p = q;
    std::uint64_t v = q;
    while (v % p == 0) v /= p;
    if (v != 1) throw std::invalid_argument("q must be an odd prime power >= 3");
    return q * (q + 1) / 2;
}

// ------------------------------------------------------------------ shift2

// S u (h + S) where S is a certified perfect basis of a subgroup F with
// G = F (+) {0, h}. Every element of G then has one or two unordered
// representations: elements of F get one from S x S and one from
// (h+S) x (h+S); elements of F + h get the mixed pairs.
inline BasisSet shift2_basis(const Group& g, const BasisSet& inner, const GroupElement& h) {
    if (!g.finite()) throw std::invalid_argument("shift2 is materialized for finite groups only");
    g.check_elem(h);
    if (h == g.zero() || !(g.add(h, h) == g.zero()))
        throw std::invalid_argument("shift2: h must have order 2");
    if (!inner.group().same_spec(g))
        throw std::invalid_argument("shift2: inner basis must live in the ambient group");

    // the subgroup generated by the inner basis
    std::unordered_set<GroupElement, GroupElementHash> subgroup;
    std::vector<GroupElement> frontier{g.zero()};
    subgroup.insert(g.zero());
    while (!frontier.empty()) {
        std::vector<GroupElement> next;
        for (const auto& e : frontier)
            for (const auto& b : inner.elements()) {
                for (const GroupElement& cand : {g.add(e, b), g.sub(e, b)})
                    if (subgroup.insert(cand).second) next.push_back(cand);
            }
        frontier = std::move(next);
    }
    if (subgroup.count(h)) throw std::invalid_argument("shift2: h lies in the span of the inner basis");
    if (2 * subgroup.size() != g.order())
        throw std::invalid_argument("shift2: the inner basis span has the wrong index");

    // the inner basis must be perfect on its span
    std::unordered_map<GroupElement, std::uint32_t, GroupElementHash> counts;
    const auto& el = inner.elements();
    for (std::size_t i = 0; i < el.size(); ++i)
        for (std::size_t j = i; j < el.size(); ++j) ++counts[g.add(el[i], el[j])];
    for (const auto& e : subgroup) {
        auto it = counts.find(e);
        if (it == counts.end() || it->second != 1)
            throw std::invalid_argument("shift2: inner basis is not perfect on its span");
    }

    std::vector<GroupElement> elems;
    for (const auto& e : inner.elements()) {
        elems.push_back(e);
        elems.push_back(g.add(h, e));
    }
    BasisProvenance prov;
    prov.construction = "shift2";
    prov.params.emplace_back("group", g.spec_string());
    prov.params.emplace_back("h", g.render(h));
    prov.params.emplace_back("inner", inner.provenance().construction);
    return BasisSet(g, std::move(elems), std::move(prov));
}

// Canonical shift2 setup for groups presented either as a direct sum with a
// final Z/2 factor or as a cyclic group Z/2m with m odd. The inner perfect
// basis is found by exhaustive search on the complement of the order-2
// generator; for cyclic groups the complement is embedded by the pinned
// Chinese-remainder section j |-> (m+1) j mod 2m.
inline BasisSet shift2_canonical(const Group& g) {
    if (g.kind() != GroupKind::finite_direct_sum)
        throw std::invalid_argument("shift2 needs a finite direct-sum group");
    const auto& orders = g.orders();
    if (orders.size() == 1) {
        const std::int64_t n = orders[0];
        if (n % 2 != 0 || (n / 2) % 2 == 0)
            throw std::invalid_argument("shift2 on a cyclic group needs order 2m with m odd");
        const std::int64_t m = n / 2;
        Group inner_group = Group::finite_direct_sum({m});
        SearchResult inner = search_perfect(inner_group);
        if (inner.status != SearchResult::Status::found)
            throw std::invalid_argument("shift2: the complement subgroup has no perfect basis");
        std::vector<GroupElement> mapped;
        for (const auto& e : inner.basis->elements())
            mapped.push_back(g.element({((m + 1) % n) * e.c[0] % n}));
        BasisProvenance prov;
        prov.construction = "exhaustive-perfect";
        prov.params.emplace_back("group", inner_group.spec_string());
        prov.params.emplace_back("embedding", "crt");
        BasisSet inner_in_g(g, std::move(mapped), std::move(prov));
        return shift2_basis(g, inner_in_g, g.element({m}));
    }
    if (orders.back() != 2)
        throw std::invalid_argument("shift2 needs a trailing Z/2 factor or a cyclic Z/2m group");
    std::vector<std::int64_t> front(orders.begin(), orders.end() - 1);
    Group inner_group = Group::finite_direct_sum(front);
    SearchResult inner = search_perfect(inner_group);
    if (inner.status != SearchResult::Status::found)
        throw std::invalid_argument("shift2: the complement subgroup has no perfect basis");
    std::vector<GroupElement> mapped;
    for (const auto& e : inner.basis->elements()) {
        std::vector<std::int64_t> c = e.c;
        c.push_back(0);
        mapped.push_back(g.element(std::move(c)));
    }
    BasisProvenance prov;
    prov.construction = "exhaustive-perfect";
    prov.params.emplace_back("group", inner_group.spec_string());
    prov.params.emplace_back("embedding", "prefix");
    BasisSet inner_in_g(g, std::move(mapped), std::move(prov));
    std::vector<std::int64_t> hc(orders.size(), 0);
    hc.back() = 1;
    return shift2_basis(g, inner_in_g, g.element(std::move(hc)));
}

// -------------------------------------------------------------- hyperbola3

struct HyperbolaTriple {
    FieldElement d1, d2, d3;

    static HyperbolaTriple default_for(const Field& f) {
        // 1, a, 1+a with a the generator class of the modulus
        FieldElement one = f.one();
        FieldElement a = f.generator();
        return {one, a, f.add(one, a)};
    }

    FieldElement at(int i) const {
        switch (i) {
            case 1: return d1;
            case 2: return d2;
            case 3: return d3;
        }
        throw std::out_of_range("hyperbola index must be 1, 2 or 3");
    }
};

inline void validate_hyperbola_inputs(const Field& f, const HyperbolaTriple& d) {
    if (f.characteristic() != 2)
        throw std::invalid_argument("hyperbola3 requires characteristic 2");
    if (f.order() <= 2) throw std::invalid_argument("hyperbola3 requires |F| > 2");
    for (int i = 1; i <= 3; ++i)
        if (d.at(i).value == 0) throw std::invalid_argument("hyperbola3: d values must be nonzero");
    if (d.d1 == d.d2 || d.d1 == d.d3 || d.d2 == d.d3)
        throw std::invalid_argument("hyperbola3: d values must be pairwise distinct");
    if (f.add(f.add(d.d1, d.d2), d.d3).value != 0)
        throw std::invalid_argument("hyperbola3: d values must sum to zero");
}

// S = S1 u S2 u S3 with S_i = {(x, d_i / x) : x in F^x}; the S_i are pairwise
// disjoint exactly because the d_i are pairwise distinct, so |S| = 3(q-1).
inline BasisSet hyperbola3_basis(const Group& g, const HyperbolaTriple& d) {
    if (g.kind() != GroupKind::field_pair)
        throw std::invalid_argument("hyperbola3 basis lives in a field-pair group");
    const Field& f = *g.field();
    validate_hyperbola_inputs(f, d);
    std::vector<GroupElement> elems;
    elems.reserve(3 * (f.order() - 1));
    for (int i = 1; i <= 3; ++i) {
        const std::uint64_t di = d.at(i).value;
        for (std::uint64_t x = 1; x < f.order(); ++x)
            elems.push_back(g.element({static_cast<std::int64_t>(x),
                                       static_cast<std::int64_t>(f.mul_raw(di, f.inv_raw(x)))}));
    }
    BasisProvenance prov;
    prov.construction = "hyperbola3";
    prov.params.emplace_back("group", g.spec_string());
    prov.params.emplace_back("d1", f.render(d.d1));
    prov.params.emplace_back("d2", f.render(d.d2));
    prov.params.emplace_back("d3", f.render(d.d3));
    return BasisSet(g, std::move(elems), std::move(prov));
}

inline BasisSet hyperbola3_basis(const Group& g) {
    if (g.kind() != GroupKind::field_pair)
        throw std::invalid_argument("hyperbola3 basis lives in a field-pair group");
    return hyperbola3_basis(g, HyperbolaTriple::default_for(*g.field()));
}

// One S_i as its own basis set, mostly for inspection and tests.
inline std::vector<GroupElement> hyperbola3_branch(const Group& g, const HyperbolaTriple& d, int i) {
    const Field& f = *g.field();
    validate_hyperbola_inputs(f, d);
    std::vector<GroupElement> elems;
    const std::uint64_t di = d.at(i).value;
    for (std::uint64_t x = 1; x < f.order(); ++x)
        elems.push_back(g.element({static_cast<std::int64_t>(x),
                                   static_cast<std::int64_t>(f.mul_raw(di, f.inv_raw(x)))}));
    std::sort(elems.begin(), elems.end());
    return elems;
}

// r_ij(u,v) = #{x in F \ {0,u} : d_i/x + d_j/(x+u) = v}, evaluated through the
// quadratic  v x^2 + (uv + d_i + d_j) x + d_i u = 0  and explicit root
// filtering against {0, u}. At most 2 for (u,v) != (0,0).
inline int hyperbola3_rij_analytic(const Field& f, FieldElement u, FieldElement v, int i, int j,
                                   const HyperbolaTriple& d) {
    validate_hyperbola_inputs(f, d);
    if (u.value == 0 && v.value == 0)
        throw std::invalid_argument("hyperbola3 analytic count is undefined at (0,0)");
    const FieldElement di = d.at(i), dj = d.at(j);
    const FieldElement b2 = v;
    const FieldElement b1 = f.add(f.mul(u, v), f.add(di, dj));
    const FieldElement b0 = f.mul(di, u);
    std::vector<FieldElement> roots = f.solve_quadratic(b2, b1, b0);
    int count = 0;
    for (const FieldElement& r : roots)
        if (r.value != 0 && !(r == u)) ++count;
    return count;
}

// r(u,v) = sum over the nine ordered (i,j) pairs; the S_i are disjoint so this
// is exactly the ordered representation count of (u,v) by S1 u S2 u S3.
inline int hyperbola3_r_analytic(const Field& f, FieldElement u, FieldElement v,
                                 const HyperbolaTriple& d) {
    int total = 0;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) total += hyperbola3_rij_analytic(f, u, v, i, j, d);
    return total;
}

}  // namespace addbasis
