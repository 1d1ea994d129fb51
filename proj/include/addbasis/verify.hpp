#pragma once

// Ground-truth representation-function computation, bound certification, and
// exhaustive perfect-basis search for small finite groups. Everything here is
// plain pair enumeration over the basis; the constructions module's analytic
// counts are checked against these numbers, never the other way round.

#include "addbasis/basis.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace addbasis {

enum class CountMode { ordered, unordered };

inline const char* to_string(CountMode m) { return m == CountMode::ordered ? "ordered" : "unordered"; }

inline CountMode count_mode_from_string(const std::string& s) {
    if (s == "ordered") return CountMode::ordered;
    if (s == "unordered") return CountMode::unordered;
    throw std::invalid_argument("unknown counting mode: " + s);
}

// Per-element representation counts plus the summary statistics every report
// carries. Dense over the whole group for finite backends; over an explicit
// element window otherwise (the counts themselves are exact either way, since
// the basis is finite).
struct RepReport {
    const Group* group = nullptr;
    BasisProvenance provenance;
    CountMode mode = CountMode::ordered;
    bool whole_group = false;

    std::vector<std::uint32_t> dense;          // whole_group: indexed by enumeration index
    std::vector<GroupElement> window;          // !whole_group: window elements, in given order
    std::vector<std::uint32_t> window_counts;

    std::map<std::uint32_t, std::uint64_t> histogram;  // count -> #elements in domain
    std::uint64_t domain_size = 0;
    std::uint64_t covered = 0;                     // domain elements with count >= 1
    std::uint32_t zero_count = 0;                  // count at the group zero (if in domain)
    std::uint32_t max_nonzero = 0;                 // max count over domain elements != 0
    std::optional<GroupElement> argmax_nonzero;    // least such element in domain order

    std::uint32_t count_at(const GroupElement& e) const {
        if (whole_group) return dense[group->index_of(e)];
        for (std::size_t i = 0; i < window.size(); ++i)
            if (window[i] == e) return window_counts[i];
        throw std::out_of_range("element not in report window");
    }
};

namespace detail_verify {

inline void finalize_report(RepReport& rep) {
    const GroupElement zero = rep.group->zero();
    auto account = [&](const GroupElement& e, std::uint32_t c) {
        ++rep.histogram[c];
        if (c > 0) ++rep.covered;
        if (e == zero) {
            rep.zero_count = c;
        } else if (c > rep.max_nonzero) {
            rep.max_nonzero = c;
            rep.argmax_nonzero = e;
        }
    };
    if (rep.whole_group) {
        rep.domain_size = rep.dense.size();
        for (std::uint64_t i = 0; i < rep.dense.size(); ++i)
            account(rep.group->element_at(i), rep.dense[i]);
    } else {
        rep.domain_size = rep.window.size();
        for (std::size_t i = 0; i < rep.window.size(); ++i) account(rep.window[i], rep.window_counts[i]);
    }
}

}  // namespace detail_verify

// Exact counts over the whole (finite) group by accumulation over all
// (un)ordered pairs of basis elements.
inline RepReport rep_function(const BasisSet& basis, CountMode mode) {
    const Group& g = basis.group();
    if (!g.finite())
        throw std::domain_error("rep_function over a countable group needs an element window");
    const std::uint64_t n = g.order();
    if (n > (std::uint64_t(1) << 24)) throw std::length_error("group too large for a dense report");
    RepReport rep;
    rep.group = &g;
    rep.provenance = basis.provenance();
    rep.mode = mode;
    rep.whole_group = true;
    rep.dense.assign(n, 0);
    const auto& el = basis.elements();
    for (std::size_t i = 0; i < el.size(); ++i) {
        for (std::size_t j = (mode == CountMode::unordered ? i : 0); j < el.size(); ++j)
            ++rep.dense[g.index_of(g.add(el[i], el[j]))];
    }
    detail_verify::finalize_report(rep);
    return rep;
}

// Window variant for countable groups (also usable on finite ones). Counts
// are complete for every window element because the basis is finite.
inline RepReport rep_function_window(const BasisSet& basis, CountMode mode,
                                     std::vector<GroupElement> window) {
    const Group& g = basis.group();
    for (const auto& e : window) g.check_elem(e);
    RepReport rep;
    rep.group = &g;
    rep.provenance = basis.provenance();
    rep.mode = mode;
    rep.whole_group = false;
    std::unordered_map<GroupElement, std::uint32_t, GroupElementHash> counts;
    const auto& el = basis.elements();
    for (std::size_t i = 0; i < el.size(); ++i)
        for (std::size_t j = (mode == CountMode::unordered ? i : 0); j < el.size(); ++j)
            ++counts[g.add(el[i], el[j])];
    rep.window_counts.reserve(window.size());
    for (const auto& e : window) {
        auto it = counts.find(e);
        rep.window_counts.push_back(it == counts.end() ? 0 : it->second);
    }
    rep.window = std::move(window);
    detail_verify::finalize_report(rep);
    return rep;
}

struct PerfectCertificate {
    bool perfect = false;
    std::optional<GroupElement> witness;  // least element with unordered count != 1
    std::uint32_t witness_count = 0;
    std::vector<std::pair<GroupElement, GroupElement>> witness_pairs;
};

// True iff every group element has exactly one unordered representation.
inline PerfectCertificate certify_perfect(const BasisSet& basis) {
    const Group& g = basis.group();
    RepReport rep = rep_function(basis, CountMode::unordered);
    PerfectCertificate cert;
    cert.perfect = true;
    for (std::uint64_t i = 0; i < rep.dense.size(); ++i) {
        if (rep.dense[i] != 1) {
            cert.perfect = false;
            GroupElement w = g.element_at(i);
            cert.witness_count = rep.dense[i];
            const auto& el = basis.elements();
            for (std::size_t a = 0; a < el.size(); ++a)
                for (std::size_t b = a; b < el.size(); ++b)
                    if (g.add(el[a], el[b]) == w) cert.witness_pairs.emplace_back(el[a], el[b]);
            cert.witness = std::move(w);
            break;
        }
    }
    return cert;
}

struct BoundCertificate {
    bool certified = false;
    std::uint32_t bound = 0;
    std::uint32_t max = 0;
    std::optional<GroupElement> argmax;  // least element attaining max in the checked domain
    bool exclude_zero = false;
};

// Certifies count(g) <= bound over the whole finite group, optionally
// disregarding the zero element.
inline BoundCertificate certify_bounded(const BasisSet& basis, std::uint32_t bound,
                                        bool exclude_zero, CountMode mode) {
    const Group& g = basis.group();
    RepReport rep = rep_function(basis, mode);
    BoundCertificate cert;
    cert.bound = bound;
    cert.exclude_zero = exclude_zero;
    const std::uint64_t zero_index = g.index_of(g.zero());
    for (std::uint64_t i = 0; i < rep.dense.size(); ++i) {
        if (exclude_zero && i == zero_index) continue;
        if (rep.dense[i] > cert.max) {
            cert.max = rep.dense[i];
            cert.argmax = g.element_at(i);
        }
    }
    cert.certified = cert.max <= bound;
    return cert;
}

struct SearchResult {
    enum class Status { found, none, inconclusive };
    Status status = Status::inconclusive;
    std::optional<BasisSet> basis;
    std::string reason;        // "counting" when the triangular identity already rules it out
    std::uint64_t nodes = 0;   // backtracking nodes visited
};

// Exhaustive search for a perfect basis of a small finite group. A perfect
// basis of an n-element group must satisfy |S|(|S|+1)/2 = n, so non-triangular
// orders are settled immediately. Otherwise backtracks over index-increasing
// subsets containing 0 (any perfect basis can be translated to contain 0),
// pruning as soon as some element acquires two unordered representations.
// With |S| = m fixed, the m(m+1)/2 pairwise sums hit n distinct elements iff
// they are collision-free, so reaching depth m without a collision is a find.
inline SearchResult search_perfect(const Group& g, std::uint64_t node_budget = 50'000'000,
                                   std::uint64_t size_cap = 40) {
    if (!g.finite()) throw std::domain_error("search_perfect requires a finite group");
    const std::uint64_t n = g.order();
    if (n > size_cap) throw std::length_error("group order exceeds the search cap");
    SearchResult res;
    std::uint64_t m = 0;
    while (m * (m + 1) / 2 < n) ++m;
    if (m * (m + 1) / 2 != n) {
        res.status = SearchResult::Status::none;
        res.reason = "counting";
        return res;
    }
    std::vector<GroupElement> all = g.enumerate(n);
    std::vector<std::uint32_t> counts(n, 0);
    std::vector<std::size_t> chosen;
    std::vector<std::uint64_t> touched;  // indices bumped per level, for undo
    std::vector<std::size_t> touched_level_start;
    bool exhausted_budget = false;

    std::function<bool(std::size_t)> descend = [&](std::size_t next_min) -> bool {
        if (chosen.size() == m) return true;
        if (res.nodes >= node_budget) { exhausted_budget = true; return false; }
        for (std::size_t cand = next_min; cand < n; ++cand) {
            // not enough indices left to finish
            if (n - cand < m - chosen.size()) break;
            ++res.nodes;
            bool ok = true;
            touched_level_start.push_back(touched.size());
            for (std::size_t prev : chosen) {
                std::uint64_t idx = g.index_of(g.add(all[prev], all[cand]));
                touched.push_back(idx);
                if (++counts[idx] > 1) { ok = false; break; }
            }
            if (ok) {
                std::uint64_t idx = g.index_of(g.add(all[cand], all[cand]));
                touched.push_back(idx);
                if (++counts[idx] > 1) ok = false;
            }
            if (ok) {
                chosen.push_back(cand);
                if (descend(cand + 1)) return true;
                chosen.pop_back();
            }
            for (std::size_t i = touched_level_start.back(); i < touched.size(); ++i)
                --counts[touched[i]];
            touched.resize(touched_level_start.back());
            touched_level_start.pop_back();
            if (exhausted_budget) return false;
        }
        return false;
    };

    chosen.push_back(0);  // the zero element, by translation
    std::uint64_t zidx = g.index_of(g.add(all[0], all[0]));
    ++counts[zidx];
    bool found = (m == 1) ? true : descend(1);
    if (found) {
        std::vector<GroupElement> elems;
        for (std::size_t i : chosen) elems.push_back(all[i]);
        BasisProvenance prov;
        prov.construction = "exhaustive-perfect";
        prov.params.emplace_back("group", g.spec_string());
        res.basis.emplace(g, std::move(elems), std::move(prov));
        res.status = SearchResult::Status::found;
    } else if (exhausted_budget) {
        res.status = SearchResult::Status::inconclusive;
        res.reason = "node budget exceeded";
    } else {
        res.status = SearchResult::Status::none;
        res.reason = "exhaustive";
    }
    return res;
}

}  // namespace addbasis
