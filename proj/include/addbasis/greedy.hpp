#pragma once

// Finite-step realization of the extension recursion: walk the group's pinned
// enumeration; whenever the current element g has no representation yet,
// adjoin a pair {s, t} with s + t = g chosen as the first candidate (in the
// same enumeration order) whose adjunction keeps every element at one
// unordered representation at most. The exclusion conditions on (s, t),
// checked against the basis S built so far:
//
//   (a) s,t not in S + 3G            (only when |3G| < |G|, finite backends)
//   (b) s,t not in S + S - S
//   (c) 2s, 2t not in S + S
//   (d) s - t not in S - S
//   (e) 2s - t, 2t - s not in S
//   (f) 2s != 2t when s != t         (2-torsion guard; see below)
//
// (f) is not one of the literal source conditions: in a group with 2-torsion,
// s != t with 2s = 2t would hand the element 2s the two representations
// {s,s} and {t,t}, and (b)-(e) do not exclude that. It can be disabled (like
// any single condition) to reproduce the failure.
//
// The state keeps S+S, S-S and S+S-S as materialized constant-time-membership
// sets: hash sets for arbitrary backends, growable bitmaps over a zigzag key
// for Z and Z (+) Z/m where candidate scans get long.

#include "addbasis/basis.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace addbasis {

struct GreedyOptions {
    std::uint64_t candidate_budget = 1'000'000;  // candidates examined per step
    std::string disabled_conditions;             // letters from "abcdef"
    bool audit_every_step = false;               // brute-force audit after each step
    std::uint64_t max_hash_entries = std::uint64_t(1) << 26;
    std::uint64_t max_bitmap_bits = std::uint64_t(1) << 33;

    bool enabled(char c) const { return disabled_conditions.find(c) == std::string::npos; }
};

struct GreedyStepRecord {
    std::uint64_t step = 0;  // enumeration index of g
    GroupElement g;
    bool extended = false;
    std::optional<GroupElement> s, t;
    std::uint64_t rejected = 0;
};

struct GreedyAudit {
    bool ok = true;
    // uniqueness failure: an element with two distinct unordered representations
    std::optional<GroupElement> collision_element;
    std::optional<std::pair<GroupElement, GroupElement>> collision_first;
    std::optional<std::pair<GroupElement, GroupElement>> collision_second;
    // prefix-coverage failure: an already-enumerated element outside S+S
    std::optional<GroupElement> uncovered;
    // incremental sets disagree with a full rebuild
    bool derived_consistent = true;
};

class StepExhausted : public std::runtime_error {
public:
    StepExhausted(const std::string& target_text, std::uint64_t budget, std::uint64_t step)
        : std::runtime_error("greedy step " + std::to_string(step) + ": no admissible pair for " +
                             target_text + " within budget " + std::to_string(budget)),
          target_text_(target_text),
          budget_(budget),
          step_(step) {}
    const std::string& target_text() const { return target_text_; }
    std::uint64_t budget() const { return budget_; }
    std::uint64_t step() const { return step_; }

private:
    std::string target_text_;
    std::uint64_t budget_;
    std::uint64_t step_;
};

// Reference predicate: evaluates the conditions directly from the basis
// vector, with (b) through the equivalence  s in S+S-S  <=>  (s+S) n (S+S)
// is nonempty. Returns the first violated condition label in the order
// a,b,c,d,e,f, or nothing if (s, t) is admissible. threeG, when given,
// activates condition (a).
inline std::optional<char> check_conditions(const Group& g, const std::vector<GroupElement>& basis,
                                            const GroupElement& s, const GroupElement& t,
                                            const std::string& disabled = {},
                                            const std::vector<GroupElement>* threeG = nullptr) {
    auto enabled = [&](char c) { return disabled.find(c) == std::string::npos; };
    std::unordered_set<GroupElement, GroupElementHash> S(basis.begin(), basis.end());
    std::unordered_set<GroupElement, GroupElementHash> SS;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i; j < basis.size(); ++j) SS.insert(g.add(basis[i], basis[j]));
    std::unordered_set<GroupElement, GroupElementHash> SmS;
    for (const auto& a : basis)
        for (const auto& b : basis) SmS.insert(g.sub(a, b));
    auto in_sss = [&](const GroupElement& e) {
        for (const auto& c : basis)
            if (SS.count(g.add(e, c))) return true;
        return false;
    };
    if (enabled('a') && threeG != nullptr) {
        auto in_s_plus_3g = [&](const GroupElement& e) {
            for (const auto& c : *threeG)
                if (S.count(g.sub(e, c))) return true;
            return false;
        };
        if (in_s_plus_3g(s) || in_s_plus_3g(t)) return 'a';
    }
    if (enabled('b') && (in_sss(s) || in_sss(t))) return 'b';
    if (enabled('c') && (SS.count(g.scale(2, s)) || SS.count(g.scale(2, t)))) return 'c';
    if (enabled('d') && SmS.count(g.sub(s, t))) return 'd';
    if (enabled('e') &&
        (S.count(g.sub(g.scale(2, s), t)) || S.count(g.sub(g.scale(2, t), s))))
        return 'e';
    if (enabled('f') && !(s == t) && g.scale(2, s) == g.scale(2, t)) return 'f';
    return std::nullopt;
}

namespace detail_greedy {

struct ScanOutcome {
    bool found = false;
    std::uint64_t rejected = 0;
};

// ---- generic engine: hash sets over GroupElement ----

class HashEngine {
public:
    HashEngine(const Group& g, const GreedyOptions& opts, std::vector<GroupElement> three_g)
        : g_(&g), opts_(&opts), three_g_(std::move(three_g)) {}

    bool in_S(const GroupElement& e) const { return s_set_.count(e) != 0; }
    bool in_SS(const GroupElement& e) const { return ss_set_.count(e) != 0; }
    bool in_SmS(const GroupElement& e) const { return sms_set_.count(e) != 0; }
    bool in_SSS(const GroupElement& e) const { return sss_set_.count(e) != 0; }

    std::uint64_t ss_size() const { return ss_set_.size(); }
    std::uint64_t sms_size() const { return sms_set_.size(); }

    ScanOutcome scan(const GroupElement& g_target, GroupElement& out_s, GroupElement& out_t) const {
        std::uint64_t limit = opts_->candidate_budget;
        if (g_->finite()) limit = std::min(limit, g_->order());
        const bool ea = opts_->enabled('a') && !three_g_.empty();
        const bool eb = opts_->enabled('b'), ec = opts_->enabled('c'), ed = opts_->enabled('d'),
                   ee = opts_->enabled('e'), ef = opts_->enabled('f');
        for (std::uint64_t i = 0; i < limit; ++i) {
            GroupElement s = g_->element_at(i);
            GroupElement t = g_->sub(g_target, s);
            if (ef && !(s == t) && g_->scale(2, s) == g_->scale(2, t)) continue;
            if (ee && (in_S(g_->sub(g_->scale(2, s), t)) || in_S(g_->sub(g_->scale(2, t), s))))
                continue;
            if (ed && in_SmS(g_->sub(s, t))) continue;
            if (ec && (in_SS(g_->scale(2, s)) || in_SS(g_->scale(2, t)))) continue;
            if (eb && (in_SSS(s) || in_SSS(t))) continue;
            if (ea && (in_s_plus_3g(s) || in_s_plus_3g(t))) continue;
            out_s = std::move(s);
            out_t = std::move(t);
            return {true, i};
        }
        return {false, limit};
    }

    void add(const GroupElement& x) {
        std::vector<GroupElement> batch;
        batch.reserve(basis_.size() + 1);
        for (const auto& a : basis_) batch.push_back(g_->add(a, x));
        batch.push_back(g_->add(x, x));
        for (auto& v : batch)
            if (ss_set_.insert(v).second) ss_list_.push_back(std::move(v));
        batch.clear();
        for (const auto& a : basis_) {
            batch.push_back(g_->sub(a, x));
            batch.push_back(g_->sub(x, a));
        }
        batch.push_back(g_->zero());
        for (auto& v : batch)
            if (sms_set_.insert(v).second) sms_list_.push_back(std::move(v));
        // everything in S'+S'-S' involving x, with S' already updated
        for (const auto& v : sms_list_) sss_set_.insert(g_->add(x, v));
        for (const auto& v : ss_list_) sss_set_.insert(g_->sub(v, x));
        basis_.push_back(x);
        s_set_.insert(x);
        if (sss_set_.size() > opts_->max_hash_entries)
            throw std::length_error("greedy derived sets exceed the configured entry cap");
    }

private:
    bool in_s_plus_3g(const GroupElement& e) const {
        for (const auto& c : three_g_)
            if (s_set_.count(g_->sub(e, c))) return true;
        return false;
    }

    const Group* g_;
    const GreedyOptions* opts_;
    std::vector<GroupElement> three_g_;
    std::vector<GroupElement> basis_;
    std::unordered_set<GroupElement, GroupElementHash> s_set_, ss_set_, sms_set_, sss_set_;
    std::vector<GroupElement> ss_list_, sms_list_;
};

// ---- packed engine: Z and Z (+) Z/m, bitmaps over a zigzag key ----

class ZigBitset {
public:
    explicit ZigBitset(std::uint64_t max_bits) : max_bits_(max_bits) {}

    bool test(std::uint64_t key) const {
        const std::uint64_t w = key >> 6;
        return w < words_.size() && ((words_[w] >> (key & 63)) & 1);
    }
    void set(std::uint64_t key) {
        const std::uint64_t w = key >> 6;
        if (w >= words_.size()) {
            if (key >= max_bits_)
                throw std::length_error("greedy derived-set bitmap exceeds the configured cap");
            words_.resize(std::max<std::size_t>(w + 1, words_.size() * 2));
        }
        words_[w] |= std::uint64_t(1) << (key & 63);
    }

private:
    std::uint64_t max_bits_;
    std::vector<std::uint64_t> words_;
};

class PackedEngine {
public:
    // value (z, r) with r in [0, m); m == 1 encodes plain Z
    struct PE {
        std::int64_t z = 0;
        std::int64_t r = 0;
        friend bool operator==(const PE&, const PE&) = default;
        friend bool operator<(const PE& a, const PE& b) {
            return a.z != b.z ? a.z < b.z : a.r < b.r;
        }
    };

    PackedEngine(const Group& g, const GreedyOptions& opts)
        : g_(&g),
          opts_(&opts),
          m_(g.kind() == GroupKind::mixed_z ? g.mixed_mod() : 1),
          s_b_(opts.max_bitmap_bits),
          ss_b_(opts.max_bitmap_bits),
          sms_b_(opts.max_bitmap_bits),
          sss_b_(opts.max_bitmap_bits) {}

    PE from_elem(const GroupElement& e) const {
        return m_ == 1 ? PE{e.c[0], 0} : PE{e.c[0], e.c[1]};
    }
    GroupElement to_elem(const PE& v) const {
        return m_ == 1 ? g_->element({v.z}) : g_->element({v.z, v.r});
    }

    bool in_S(const PE& v) const { return s_b_.test(key(v)); }
    bool in_SS(const PE& v) const { return ss_b_.test(key(v)); }
    bool in_SmS(const PE& v) const { return sms_b_.test(key(v)); }
    bool in_SSS(const PE& v) const { return sss_b_.test(key(v)); }

    std::uint64_t ss_size() const { return ss_list_.size(); }
    std::uint64_t sms_size() const { return sms_list_.size(); }

    ScanOutcome scan(const PE& g_target, PE& out_s, PE& out_t) const {
        const bool eb = opts_->enabled('b'), ec = opts_->enabled('c'), ed = opts_->enabled('d'),
                   ee = opts_->enabled('e'), ef = opts_->enabled('f');
        // condition (a) never applies: |3G| = |G| on these backends
        const std::uint64_t limit = opts_->candidate_budget;
        for (std::uint64_t i = 0; i < limit; ++i) {
            PE s = candidate(i);
            if (std::abs(s.z) > (std::int64_t(1) << 55) || std::abs(g_target.z) + std::abs(s.z) >
                                                               (std::int64_t(1) << 56))
                throw std::overflow_error("greedy candidate coordinates exceed the safe range");
            PE t = sub(g_target, s);
            if (ef && !(s == t) && dbl(s) == dbl(t)) continue;
            if (ee && (in_S(sub(dbl(s), t)) || in_S(sub(dbl(t), s)))) continue;
            if (ed && in_SmS(sub(s, t))) continue;
            if (ec && (in_SS(dbl(s)) || in_SS(dbl(t)))) continue;
            if (eb && (in_SSS(s) || in_SSS(t))) continue;
            out_s = s;
            out_t = t;
            return {true, i};
        }
        return {false, limit};
    }

    void add(const PE& x) {
        std::vector<PE> batch;
        batch.reserve(basis_.size() + 1);
        for (const PE& a : basis_) batch.push_back(addv(a, x));
        batch.push_back(dbl(x));
        merge_into(ss_list_, ss_b_, std::move(batch));
        batch.clear();
        batch.reserve(2 * basis_.size() + 1);
        for (const PE& a : basis_) {
            batch.push_back(sub(a, x));
            batch.push_back(sub(x, a));
        }
        batch.push_back(PE{0, 0});
        merge_into(sms_list_, sms_b_, std::move(batch));
        for (const PE& v : sms_list_) sss_b_.set(key(addv(x, v)));
        for (const PE& v : ss_list_) sss_b_.set(key(sub(v, x)));
        basis_.push_back(x);
        s_b_.set(key(x));
    }

    PE addv(const PE& a, const PE& b) const { return {a.z + b.z, m_ == 1 ? 0 : (a.r + b.r) % m_}; }
    PE sub(const PE& a, const PE& b) const {
        return {a.z - b.z, m_ == 1 ? 0 : ((a.r - b.r) % m_ + m_) % m_};
    }
    PE dbl(const PE& a) const { return addv(a, a); }
    PE candidate(std::uint64_t i) const {
        return m_ == 1 ? PE{Group::zigzag(i), 0}
                       : PE{Group::zigzag(i / static_cast<std::uint64_t>(m_)),
                            static_cast<std::int64_t>(i % static_cast<std::uint64_t>(m_))};
    }

private:
    std::uint64_t key(const PE& v) const {
        const std::uint64_t zz = v.z >= 0 ? static_cast<std::uint64_t>(v.z) * 2
                                          : static_cast<std::uint64_t>(-v.z) * 2 - 1;
        return zz * static_cast<std::uint64_t>(m_) + static_cast<std::uint64_t>(v.r);
    }

    // keeps the distinct-value list sorted so the bitmap writes stream
    void merge_into(std::vector<PE>& list, ZigBitset& bits, std::vector<PE> batch) {
        std::sort(batch.begin(), batch.end());
        batch.erase(std::unique(batch.begin(), batch.end()), batch.end());
        std::vector<PE> fresh;
        fresh.reserve(batch.size());
        for (const PE& v : batch)
            if (!bits.test(key(v))) fresh.push_back(v);
        for (const PE& v : fresh) bits.set(key(v));
        if (fresh.empty()) return;
        std::vector<PE> merged;
        merged.reserve(list.size() + fresh.size());
        std::merge(list.begin(), list.end(), fresh.begin(), fresh.end(), std::back_inserter(merged));
        list = std::move(merged);
    }

    const Group* g_;
    const GreedyOptions* opts_;
    std::int64_t m_;
    ZigBitset s_b_, ss_b_, sms_b_, sss_b_;
    std::vector<PE> basis_, ss_list_, sms_list_;
};

}  // namespace detail_greedy

class GreedyState {
public:
    explicit GreedyState(const Group& g, GreedyOptions opts = {}) : group_(&g), opts_(std::move(opts)) {
        if (g.kind() == GroupKind::integers || g.kind() == GroupKind::mixed_z) {
            packed_.emplace(g, opts_);
        } else {
            std::vector<GroupElement> three_g;
            if (g.finite()) {
                if (g.order() > (std::uint64_t(1) << 20))
                    throw std::length_error("finite group too large for the greedy recursion");
                auto img = g.image_nG(3);
                if (img.size() < g.order()) three_g = std::move(img);  // condition (a) applies
            }
            hash_.emplace(g, opts_, std::move(three_g));
        }
    }

    const Group& group() const { return *group_; }
    const GreedyOptions& options() const { return opts_; }
    const std::vector<GroupElement>& basis() const { return basis_; }
    const std::vector<GreedyStepRecord>& log() const { return log_; }
    std::uint64_t cursor() const { return cursor_; }

    bool in_S(const GroupElement& e) const {
        return packed_ ? packed_->in_S(packed_->from_elem(e)) : hash_->in_S(e);
    }
    bool in_SpS(const GroupElement& e) const {
        return packed_ ? packed_->in_SS(packed_->from_elem(e)) : hash_->in_SS(e);
    }
    bool in_SmS(const GroupElement& e) const {
        return packed_ ? packed_->in_SmS(packed_->from_elem(e)) : hash_->in_SmS(e);
    }
    bool in_SpSmS(const GroupElement& e) const {
        return packed_ ? packed_->in_SSS(packed_->from_elem(e)) : hash_->in_SSS(e);
    }

    // One step of the recursion: cover-check the next enumerated element and
    // extend the basis if needed. Throws StepExhausted when no admissible pair
    // exists within the candidate budget.
    void step() {
        if (group_->finite() && cursor_ >= group_->order())
            throw std::out_of_range("greedy enumeration exhausted the finite group");
        GroupElement g_target = group_->element_at(cursor_);
        GreedyStepRecord rec;
        rec.step = cursor_;
        rec.g = g_target;
        if (!basis_.empty() && in_SpS(g_target)) {
            rec.extended = false;
            log_.push_back(std::move(rec));
            ++cursor_;
            return;
        }
        GroupElement s = group_->zero(), t = group_->zero();
        detail_greedy::ScanOutcome out;
        if (packed_) {
            detail_greedy::PackedEngine::PE ps, pt;
            out = packed_->scan(packed_->from_elem(g_target), ps, pt);
            if (out.found) {
                s = packed_->to_elem(ps);
                t = packed_->to_elem(pt);
            }
        } else {
            out = hash_->scan(g_target, s, t);
        }
        if (!out.found)
            throw StepExhausted(group_->render(g_target), out.rejected, cursor_);
        if (opts_.audit_every_step) cross_check_accepted(s, t);
        if (packed_) {
            packed_->add(packed_->from_elem(s));
            if (!(t == s)) packed_->add(packed_->from_elem(t));
        } else {
            hash_->add(s);
            if (!(t == s)) hash_->add(t);
        }
        basis_.push_back(s);
        if (!(t == s)) basis_.push_back(t);
        rec.extended = true;
        rec.s = std::move(s);
        rec.t = std::move(t);
        rec.rejected = out.rejected;
        log_.push_back(std::move(rec));
        ++cursor_;
    }

    // Brute-force audit of the current state: pairwise-sum uniqueness over the
    // basis, coverage of the enumerated prefix, and agreement of the
    // incremental S+S / S-S sets with a full rebuild.
    GreedyAudit audit() const {
        GreedyAudit a;
        std::unordered_map<GroupElement, std::pair<std::size_t, std::size_t>, GroupElementHash> sums;
        sums.reserve(basis_.size() * basis_.size() / 2 + 1);
        for (std::size_t i = 0; i < basis_.size() && a.ok; ++i)
            for (std::size_t j = i; j < basis_.size(); ++j) {
                GroupElement sum = group_->add(basis_[i], basis_[j]);
                auto [it, inserted] = sums.emplace(std::move(sum), std::make_pair(i, j));
                if (!inserted) {
                    a.ok = false;
                    a.collision_element = group_->add(basis_[i], basis_[j]);
                    a.collision_first = std::make_pair(basis_[it->second.first], basis_[it->second.second]);
                    a.collision_second = std::make_pair(basis_[i], basis_[j]);
                    break;
                }
            }
        for (std::uint64_t i = 0; i < cursor_ && a.ok; ++i) {
            GroupElement e = group_->element_at(i);
            if (!sums.count(e)) {
                a.ok = false;
                a.uncovered = std::move(e);
            }
        }
        if (a.ok) {
            std::uint64_t engine_ss = packed_ ? packed_->ss_size() : hash_->ss_size();
            a.derived_consistent = engine_ss == sums.size();
            std::unordered_set<GroupElement, GroupElementHash> diffs;
            for (const auto& x : basis_)
                for (const auto& y : basis_) diffs.insert(group_->sub(x, y));
            std::uint64_t engine_sms = packed_ ? packed_->sms_size() : hash_->sms_size();
            if (diffs.size() != engine_sms) a.derived_consistent = false;
            if (a.derived_consistent)
                for (const auto& [sum, pair] : sums)
                    if (!in_SpS(sum)) { a.derived_consistent = false; break; }
            if (!a.derived_consistent) a.ok = false;
        }
        return a;
    }

    BasisSet to_basis_set() const {
        BasisProvenance prov;
        prov.construction = "greedy";
        prov.params.emplace_back("group", group_->spec_string());
        prov.params.emplace_back("enumeration", group_->enumeration_order());
        prov.params.emplace_back("steps", std::to_string(cursor_));
        prov.params.emplace_back("budget", std::to_string(opts_.candidate_budget));
        if (!opts_.disabled_conditions.empty())
            prov.params.emplace_back("disabled", opts_.disabled_conditions);
        return BasisSet(*group_, basis_, std::move(prov));
    }

private:
    // engine decisions must agree with the reference predicate
    void cross_check_accepted(const GroupElement& s, const GroupElement& t) const {
        std::vector<GroupElement> three_g;
        const std::vector<GroupElement>* three_g_ptr = nullptr;
        if (group_->finite()) {
            auto img = group_->image_nG(3);
            if (img.size() < group_->order()) {
                three_g = std::move(img);
                three_g_ptr = &three_g;
            }
        }
        auto verdict =
            check_conditions(*group_, basis_, s, t, opts_.disabled_conditions, three_g_ptr);
        if (verdict.has_value())
            throw std::logic_error(std::string("engine accepted a pair the reference predicate "
                                               "rejects with condition ") +
                                   *verdict);
    }

    const Group* group_;
    GreedyOptions opts_;
    std::optional<detail_greedy::HashEngine> hash_;
    std::optional<detail_greedy::PackedEngine> packed_;
    std::vector<GroupElement> basis_;
    std::vector<GreedyStepRecord> log_;
    std::uint64_t cursor_ = 0;
};

struct GreedyRunResult {
    std::unique_ptr<GreedyState> state;
    bool exhausted = false;
    std::uint64_t exhausted_step = 0;
    std::string exhausted_target;
    std::optional<GreedyAudit> audit_failure;
    std::uint64_t audit_failure_step = 0;

    bool clean() const { return !exhausted && !audit_failure.has_value(); }
};

// Runs N steps of the recursion. StepExhausted is captured, not propagated:
// the partial state stays available in the result. With audit_every_step set,
// stops at the first audited violation.
inline GreedyRunResult run_greedy(const Group& g, std::uint64_t steps, GreedyOptions opts = {}) {
    GreedyRunResult res;
    res.state = std::make_unique<GreedyState>(g, opts);
    for (std::uint64_t n = 0; n < steps; ++n) {
        try {
            res.state->step();
        } catch (const StepExhausted& ex) {
            res.exhausted = true;
            res.exhausted_step = ex.step();
            res.exhausted_target = ex.target_text();
            break;
        }
        if (opts.audit_every_step) {
            GreedyAudit a = res.state->audit();
            if (!a.ok) {
                res.audit_failure = std::move(a);
                res.audit_failure_step = res.state->cursor() - 1;
                break;
            }
        }
    }
    return res;
}

// Stable tab-separated trace: step, g, action, s, t, rejected.
inline std::string render_trace(const GreedyState& state) {
    std::string out = "step\tg\taction\ts\tt\trejected\n";
    const Group& g = state.group();
    for (const auto& rec : state.log()) {
        out += std::to_string(rec.step);
        out += '\t';
        out += g.render(rec.g);
        out += '\t';
        out += rec.extended ? "extended" : "covered";
        out += '\t';
        out += rec.s ? g.render(*rec.s) : "";
        out += '\t';
        out += rec.t ? g.render(*rec.t) : "";
        out += '\t';
        out += std::to_string(rec.rejected);
        out += '\n';
    }
    return out;
}

}  // namespace addbasis
