#pragma once

// Abelian group backends: finite direct sums of cyclic groups, the field-pair
// group F x F, and the countable groups Z, Z^d and Z (+) Z/m. Every backend
// carries a pinned injective enumeration (the desk-scale stand-in for a
// well-ordering); the order identifier is part of the group's identity and is
// echoed into reports.
//
// Pinned enumerations:
//   integers        "zigzag"       0, 1, -1, 2, -2, ...
//   integer_lattice "shell-lex"    by max-norm shell, then (L1, #negatives,
//                                  componentwise |.| lex, plain lex)
//   mixed_z         "zigzag-lex"   (zigzag on Z) x (0..m-1), Z part outermost
//   finite sums     "lex"          mixed-radix counting, last coordinate fastest
//   field_pair      "index-lex"    (element index) pairs, first component outermost

#include "addbasis/field.hpp"

#include <cstdint>
#include <functional>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace addbasis {

enum class GroupKind { finite_direct_sum, field_pair, integers, integer_lattice, mixed_z };

class Group;

struct GroupElement {
    const Group* group = nullptr;
    std::vector<std::int64_t> c;

    friend bool operator==(const GroupElement& a, const GroupElement& b);
    friend bool operator!=(const GroupElement& a, const GroupElement& b) { return !(a == b); }
    friend bool operator<(const GroupElement& a, const GroupElement& b) { return a.c < b.c; }
};

struct GroupElementHash {
    std::size_t operator()(const GroupElement& e) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (std::int64_t v : e.c) {
            std::uint64_t x = static_cast<std::uint64_t>(v);
            x ^= x >> 33;
            x *= 0xff51afd7ed558ccdull;
            x ^= x >> 33;
            h = (h ^ x) * 0x100000001b3ull;
        }
        return static_cast<std::size_t>(h);
    }
};

class Group {
public:
    static Group finite_direct_sum(std::vector<std::int64_t> orders) {
        if (orders.empty()) throw std::invalid_argument("finite direct sum needs at least one factor");
        std::uint64_t n = 1;
        for (std::int64_t o : orders) {
            if (o < 1) throw std::invalid_argument("cyclic factor order must be >= 1");
            if (n > (std::uint64_t(1) << 62) / static_cast<std::uint64_t>(o))
                throw std::invalid_argument("group order too large");
            n *= static_cast<std::uint64_t>(o);
        }
        return Group(GroupKind::finite_direct_sum, std::move(orders), nullptr, 0, 0);
    }
    static Group field_pair(const Field& f) {
        return Group(GroupKind::field_pair, {}, &f, 0, 0);
    }
    static Group integers() { return Group(GroupKind::integers, {}, nullptr, 1, 0); }
    static Group integer_lattice(int dim) {
        if (dim < 1 || dim > 6) throw std::invalid_argument("lattice dimension out of range");
        return Group(GroupKind::integer_lattice, {}, nullptr, dim, 0);
    }
    static Group mixed_z(std::int64_t m) {
        if (m < 1) throw std::invalid_argument("torsion part order must be >= 1");
        return Group(GroupKind::mixed_z, {}, nullptr, 0, m);
    }

    // Grammar: Z | Z^d | Z+Z/m | Z/n1xZ/n2x... | GF(q)^2
    static Group parse(const std::string& text);

    Group(const Group&) = delete;
    Group& operator=(const Group&) = delete;

    GroupKind kind() const { return kind_; }
    const std::string& enumeration_order() const { return order_id_; }
    const Field* field() const { return field_; }
    int lattice_dim() const { return dim_; }
    std::int64_t mixed_mod() const { return mixed_mod_; }
    const std::vector<std::int64_t>& orders() const { return orders_; }

    std::string spec_string() const {
        switch (kind_) {
            case GroupKind::integers: return "Z";
            case GroupKind::integer_lattice: return "Z^" + std::to_string(dim_);
            case GroupKind::mixed_z: return "Z+Z/" + std::to_string(mixed_mod_);
            case GroupKind::finite_direct_sum: {
                std::string s;
                for (std::size_t i = 0; i < orders_.size(); ++i) {
                    if (i) s += 'x';
                    s += "Z/" + std::to_string(orders_[i]);
                }
                return s;
            }
            case GroupKind::field_pair:
                return "GF(" + std::to_string(field_->order()) + ")^2";
        }
        return {};
    }

    bool finite() const {
        return kind_ == GroupKind::finite_direct_sum || kind_ == GroupKind::field_pair;
    }

    std::uint64_t order() const {
        if (kind_ == GroupKind::finite_direct_sum) {
            std::uint64_t n = 1;
            for (std::int64_t o : orders_) n *= static_cast<std::uint64_t>(o);
            return n;
        }
        if (kind_ == GroupKind::field_pair) return field_->order() * field_->order();
        throw std::domain_error("countable group has no finite order");
    }

    std::size_t arity() const {
        switch (kind_) {
            case GroupKind::finite_direct_sum: return orders_.size();
            case GroupKind::field_pair: return 2;
            case GroupKind::integers: return 1;
            case GroupKind::integer_lattice: return static_cast<std::size_t>(dim_);
            case GroupKind::mixed_z: return 2;
        }
        return 0;
    }

    bool same_spec(const Group& other) const {
        if (this == &other) return true;
        if (kind_ != other.kind_ || order_id_ != other.order_id_) return false;
        switch (kind_) {
            case GroupKind::finite_direct_sum: return orders_ == other.orders_;
            case GroupKind::field_pair: return field_->same_spec(*other.field_);
            case GroupKind::integers: return true;
            case GroupKind::integer_lattice: return dim_ == other.dim_;
            case GroupKind::mixed_z: return mixed_mod_ == other.mixed_mod_;
        }
        return false;
    }

    GroupElement zero() const { return {this, std::vector<std::int64_t>(arity(), 0)}; }

    // Builds an element from raw coordinates, reducing residues into range.
    GroupElement element(std::vector<std::int64_t> coords) const {
        if (coords.size() != arity()) throw std::invalid_argument("wrong coordinate count for group");
        reduce(coords);
        return {this, std::move(coords)};
    }

    GroupElement add(const GroupElement& a, const GroupElement& b) const {
        check_pair(a, b);
        std::vector<std::int64_t> r(arity());
        switch (kind_) {
            case GroupKind::finite_direct_sum:
                for (std::size_t i = 0; i < r.size(); ++i) r[i] = (a.c[i] + b.c[i]) % orders_[i];
                break;
            case GroupKind::field_pair:
                for (std::size_t i = 0; i < 2; ++i)
                    r[i] = static_cast<std::int64_t>(field_->add_raw(
                        static_cast<std::uint64_t>(a.c[i]), static_cast<std::uint64_t>(b.c[i])));
                break;
            case GroupKind::mixed_z:
                r[0] = checked_add(a.c[0], b.c[0]);
                r[1] = (a.c[1] + b.c[1]) % mixed_mod_;
                break;
            default:
                for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked_add(a.c[i], b.c[i]);
        }
        return {this, std::move(r)};
    }

    GroupElement neg(const GroupElement& a) const {
        check_elem(a);
        std::vector<std::int64_t> r(arity());
        switch (kind_) {
            case GroupKind::finite_direct_sum:
                for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.c[i] == 0 ? 0 : orders_[i] - a.c[i];
                break;
            case GroupKind::field_pair:
                for (std::size_t i = 0; i < 2; ++i)
                    r[i] = static_cast<std::int64_t>(
                        field_->neg_raw(static_cast<std::uint64_t>(a.c[i])));
                break;
            case GroupKind::mixed_z:
                r[0] = -a.c[0];
                r[1] = a.c[1] == 0 ? 0 : mixed_mod_ - a.c[1];
                break;
            default:
                for (std::size_t i = 0; i < r.size(); ++i) r[i] = -a.c[i];
        }
        return {this, std::move(r)};
    }

    GroupElement sub(const GroupElement& a, const GroupElement& b) const { return add(a, neg(b)); }

    GroupElement scale(std::int64_t n, const GroupElement& a) const {
        check_elem(a);
        std::vector<std::int64_t> r(arity());
        switch (kind_) {
            case GroupKind::finite_direct_sum:
                for (std::size_t i = 0; i < r.size(); ++i) r[i] = mod_i128(n, a.c[i], orders_[i]);
                break;
            case GroupKind::field_pair: {
                // n-fold addition = multiplication by the constant (n mod p)
                std::int64_t np = n % field_->characteristic();
                if (np < 0) np += field_->characteristic();
                for (std::size_t i = 0; i < 2; ++i)
                    r[i] = static_cast<std::int64_t>(field_->mul_raw(
                        static_cast<std::uint64_t>(np), static_cast<std::uint64_t>(a.c[i])));
                break;
            }
            case GroupKind::mixed_z:
                r[0] = checked_mul(n, a.c[0]);
                r[1] = mod_i128(n, a.c[1], mixed_mod_);
                break;
            default:
                for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked_mul(n, a.c[i]);
        }
        return {this, std::move(r)};
    }

    // ---- pinned enumeration ----

    GroupElement element_at(std::uint64_t i) const {
        switch (kind_) {
            case GroupKind::integers:
                return {this, {zigzag(i)}};
            case GroupKind::mixed_z:
                return {this, {zigzag(i / static_cast<std::uint64_t>(mixed_mod_)),
                               static_cast<std::int64_t>(i % static_cast<std::uint64_t>(mixed_mod_))}};
            case GroupKind::finite_direct_sum: {
                if (i >= order()) throw std::out_of_range("enumeration index exceeds group order");
                std::vector<std::int64_t> c(orders_.size());
                for (std::size_t j = orders_.size(); j-- > 0;) {
                    c[j] = static_cast<std::int64_t>(i % static_cast<std::uint64_t>(orders_[j]));
                    i /= static_cast<std::uint64_t>(orders_[j]);
                }
                return {this, std::move(c)};
            }
            case GroupKind::field_pair: {
                if (i >= order()) throw std::out_of_range("enumeration index exceeds group order");
                const std::uint64_t q = field_->order();
                return {this, {static_cast<std::int64_t>(i / q), static_cast<std::int64_t>(i % q)}};
            }
            case GroupKind::integer_lattice:
                return {this, lattice_at(i)};
        }
        throw std::logic_error("unreachable");
    }

    std::vector<GroupElement> enumerate(std::uint64_t n) const {
        if (finite() && n > order()) throw std::out_of_range("enumeration request exceeds group order");
        std::vector<GroupElement> out;
        out.reserve(n);
        for (std::uint64_t i = 0; i < n; ++i) out.push_back(element_at(i));
        return out;
    }

    // Position of an element in the pinned enumeration; finite backends only.
    std::uint64_t index_of(const GroupElement& e) const {
        check_elem(e);
        if (kind_ == GroupKind::finite_direct_sum) {
            std::uint64_t i = 0;
            for (std::size_t j = 0; j < orders_.size(); ++j)
                i = i * static_cast<std::uint64_t>(orders_[j]) + static_cast<std::uint64_t>(e.c[j]);
            return i;
        }
        if (kind_ == GroupKind::field_pair)
            return static_cast<std::uint64_t>(e.c[0]) * field_->order() +
                   static_cast<std::uint64_t>(e.c[1]);
        throw std::domain_error("index_of requires a finite backend");
    }

    // nG = {ng : g in G} and G_n = {g : ng = 0}; exact element sets in
    // enumeration order. Countable backends must use the predicate forms the
    // greedy maintains instead of materialized sets.
    std::vector<GroupElement> image_nG(std::int64_t n) const {
        require_finite_materialization("nG");
        std::vector<bool> seen(order(), false);
        std::vector<GroupElement> out;
        for (std::uint64_t i = 0; i < order(); ++i) {
            GroupElement g = scale(n, element_at(i));
            std::uint64_t idx = index_of(g);
            if (!seen[idx]) seen[idx] = true;
        }
        for (std::uint64_t i = 0; i < order(); ++i)
            if (seen[i]) out.push_back(element_at(i));
        return out;
    }

    std::vector<GroupElement> torsion_Gn(std::int64_t n) const {
        require_finite_materialization("G_n");
        std::vector<GroupElement> out;
        const GroupElement z = zero();
        for (std::uint64_t i = 0; i < order(); ++i) {
            GroupElement g = element_at(i);
            if (scale(n, g) == z) out.push_back(std::move(g));
        }
        return out;
    }

    // ---- text forms ----

    std::string render(const GroupElement& e) const {
        check_elem(e);
        std::string s = "(";
        if (kind_ == GroupKind::field_pair) {
            s += field_->render(FieldElement{field_, static_cast<std::uint64_t>(e.c[0])});
            s += ',';
            s += field_->render(FieldElement{field_, static_cast<std::uint64_t>(e.c[1])});
        } else {
            for (std::size_t i = 0; i < e.c.size(); ++i) {
                if (i) s += ',';
                s += std::to_string(e.c[i]);
            }
        }
        s += ')';
        return s;
    }

    GroupElement parse_element(const std::string& text) const {
        std::size_t pos = 0;
        auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
        skip_ws();
        if (pos >= text.size() || text[pos] != '(')
            throw std::invalid_argument("group element must start with '(': " + text);
        ++pos;
        std::vector<std::int64_t> coords;
        if (kind_ == GroupKind::field_pair) {
            FieldElement a = field_->parse_element_at(text, pos);
            skip_ws();
            if (pos >= text.size() || text[pos] != ',') throw std::invalid_argument("malformed pair: " + text);
            ++pos;
            FieldElement b = field_->parse_element_at(text, pos);
            coords = {static_cast<std::int64_t>(a.value), static_cast<std::int64_t>(b.value)};
        } else {
            while (true) {
                skip_ws();
                bool neg = pos < text.size() && text[pos] == '-';
                if (neg) ++pos;
                if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                    throw std::invalid_argument("bad group element coordinate: " + text);
                std::int64_t v = 0;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                    v = v * 10 + (text[pos++] - '0');
                coords.push_back(neg ? -v : v);
                skip_ws();
                if (pos < text.size() && text[pos] == ',') { ++pos; continue; }
                break;
            }
        }
        skip_ws();
        if (pos >= text.size() || text[pos] != ')')
            throw std::invalid_argument("group element must end with ')': " + text);
        ++pos;
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos != text.size()) throw std::invalid_argument("trailing characters in group element: " + text);
        return element(std::move(coords));
    }

    void check_elem(const GroupElement& e) const {
        if (e.group != this && (e.group == nullptr || !same_spec(*e.group)))
            throw std::invalid_argument("group element belongs to a different group spec");
        if (e.c.size() != arity()) throw std::invalid_argument("group element has wrong arity");
    }

    static std::int64_t zigzag(std::uint64_t i) {
        return (i % 2) ? static_cast<std::int64_t>((i + 1) / 2) : -static_cast<std::int64_t>(i / 2);
    }

private:
    Group(GroupKind kind, std::vector<std::int64_t> orders, const Field* field, int dim, std::int64_t m)
        : kind_(kind), orders_(std::move(orders)), field_(field), dim_(dim), mixed_mod_(m) {
        switch (kind_) {
            case GroupKind::integers: order_id_ = "zigzag"; break;
            case GroupKind::integer_lattice: order_id_ = "shell-lex"; break;
            case GroupKind::mixed_z: order_id_ = "zigzag-lex"; break;
            case GroupKind::finite_direct_sum: order_id_ = "lex"; break;
            case GroupKind::field_pair: order_id_ = "index-lex"; break;
        }
    }

    void check_pair(const GroupElement& a, const GroupElement& b) const {
        check_elem(a);
        check_elem(b);
    }

    void reduce(std::vector<std::int64_t>& coords) const {
        switch (kind_) {
            case GroupKind::finite_direct_sum:
                for (std::size_t i = 0; i < coords.size(); ++i) {
                    coords[i] %= orders_[i];
                    if (coords[i] < 0) coords[i] += orders_[i];
                }
                break;
            case GroupKind::mixed_z:
                coords[1] %= mixed_mod_;
                if (coords[1] < 0) coords[1] += mixed_mod_;
                break;
            case GroupKind::field_pair:
                for (std::size_t i = 0; i < 2; ++i)
                    if (coords[i] < 0 || static_cast<std::uint64_t>(coords[i]) >= field_->order())
                        throw std::invalid_argument("field-pair coordinate out of range");
                break;
            default:
                break;
        }
    }

    static std::int64_t checked_add(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("group coordinate overflow");
        return r;
    }
    static std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("group coordinate overflow");
        return r;
    }
    static std::int64_t mod_i128(std::int64_t n, std::int64_t c, std::int64_t m) {
        __int128 v = static_cast<__int128>(n) * c;
        std::int64_t r = static_cast<std::int64_t>(v % m);
        return r < 0 ? r + m : r;
    }

    std::uint64_t scalar_in_field(std::int64_t np) const {
        // np in [0, p): as a packed constant polynomial it is its own encoding
        return static_cast<std::uint64_t>(np);
    }

    const std::vector<std::int64_t>& lattice_at(std::uint64_t i) const {
        std::lock_guard<std::mutex> lock(enum_mu_);
        while (lattice_cache_.size() <= i) {
            if (lattice_cache_.size() > (std::uint64_t(1) << 28))
                throw std::length_error("lattice enumeration cache exceeds cap");
            extend_lattice_shell();
        }
        return lattice_cache_[i];
    }

    void extend_lattice_shell() const {
        const std::int64_t r = lattice_shell_next_++;
        std::vector<std::vector<std::int64_t>> shell;
        const auto d = static_cast<std::size_t>(dim_);
        if (r == 0) {
            shell.push_back(std::vector<std::int64_t>(d, 0));
        } else {
            // max-norm exactly r: some coordinate is +-r; fixing the first such
            // position j avoids duplicates
            for (std::size_t j = 0; j < d; ++j) {
                for (std::int64_t pivot : {-r, r}) {
                    std::vector<std::int64_t> lo(d), hi(d), v(d);
                    for (std::size_t i = 0; i < d; ++i) {
                        if (i < j) { lo[i] = -r + 1; hi[i] = r - 1; }
                        else if (i == j) { lo[i] = hi[i] = pivot; }
                        else { lo[i] = -r; hi[i] = r; }
                        v[i] = lo[i];
                    }
                    bool feasible = true;
                    for (std::size_t i = 0; i < d; ++i)
                        if (lo[i] > hi[i]) feasible = false;
                    while (feasible) {
                        shell.push_back(v);
                        bool rolled_over = true;
                        std::size_t i = d;
                        while (i-- > 0) {
                            if (v[i] < hi[i]) { ++v[i]; rolled_over = false; break; }
                            v[i] = lo[i];
                        }
                        if (rolled_over) break;
                    }
                }
            }
            struct Keyed {
                std::int64_t l1;
                int negs;
                std::vector<std::int64_t> absw;
                std::vector<std::int64_t> v;
            };
            std::vector<Keyed> keyed;
            keyed.reserve(shell.size());
            for (auto& w : shell) {
                Keyed k;
                k.l1 = 0;
                k.negs = 0;
                k.absw.resize(w.size());
                for (std::size_t i = 0; i < w.size(); ++i) {
                    k.l1 += std::abs(w[i]);
                    k.negs += w[i] < 0;
                    k.absw[i] = std::abs(w[i]);
                }
                k.v = std::move(w);
                keyed.push_back(std::move(k));
            }
            std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
                if (a.l1 != b.l1) return a.l1 < b.l1;
                if (a.negs != b.negs) return a.negs < b.negs;
                if (a.absw != b.absw) return a.absw < b.absw;
                return a.v < b.v;
            });
            shell.clear();
            for (auto& k : keyed) shell.push_back(std::move(k.v));
        }
        for (auto& e : shell) lattice_cache_.push_back(std::move(e));
    }

    void require_finite_materialization(const char* what) const {
        if (!finite())
            throw std::domain_error(std::string(what) +
                                    " is only materialized for finite backends; countable "
                                    "backends expose membership predicates instead");
        if (order() > (std::uint64_t(1) << 24))
            throw std::length_error("group too large to materialize element sets");
    }

    GroupKind kind_;
    std::vector<std::int64_t> orders_;
    const Field* field_;
    int dim_;
    std::int64_t mixed_mod_;
    std::string order_id_;

    mutable std::mutex enum_mu_;
    mutable std::vector<std::vector<std::int64_t>> lattice_cache_;
    mutable std::int64_t lattice_shell_next_ = 0;
};

inline bool operator==(const GroupElement& a, const GroupElement& b) {
    if (a.group != b.group) {
        if (a.group == nullptr || b.group == nullptr) return false;
        if (!a.group->same_spec(*b.group)) return false;
    }
    return a.c == b.c;
}

inline std::string to_string(const GroupElement& e) { return e.group->render(e); }

inline Group Group::parse(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s == "Z") return integers();
    if (s.rfind("Z^", 0) == 0) {
        std::size_t pos = 2;
        int d = std::stoi(s.substr(2), &pos);
        if (2 + pos != s.size()) throw std::invalid_argument("bad group spec: " + text);
        return integer_lattice(d);
    }
    if (s.rfind("Z+Z/", 0) == 0) {
        std::size_t pos = 0;
        std::int64_t m = std::stoll(s.substr(4), &pos);
        if (4 + pos != s.size()) throw std::invalid_argument("bad group spec: " + text);
        return mixed_z(m);
    }
    if (s.rfind("GF(", 0) == 0) {
        std::size_t close = s.find(')');
        if (close == std::string::npos || s.substr(close) != ")^2")
            throw std::invalid_argument("bad group spec: " + text);
        std::uint64_t q = std::stoull(s.substr(3, close - 3));
        if (q < 2) throw std::invalid_argument("bad field order in group spec: " + text);
        std::int64_t p = 0;
        for (std::int64_t d = 2; d * d <= static_cast<std::int64_t>(q); ++d)
            if (q % static_cast<std::uint64_t>(d) == 0) { p = d; break; }
        if (p == 0) p = static_cast<std::int64_t>(q);
        int k = 0;
        std::uint64_t v = q;
        while (v % static_cast<std::uint64_t>(p) == 0) { v /= static_cast<std::uint64_t>(p); ++k; }
        if (v != 1) throw std::invalid_argument("field order must be a prime power: " + text);
        return field_pair(Field::canonical(p, k));
    }
    if (s.rfind("Z/", 0) == 0) {
        std::vector<std::int64_t> orders;
        std::size_t pos = 0;
        while (pos < s.size()) {
            if (s.compare(pos, 2, "Z/") != 0) throw std::invalid_argument("bad group spec: " + text);
            pos += 2;
            std::size_t used = 0;
            std::int64_t n = std::stoll(s.substr(pos), &used);
            pos += used;
            orders.push_back(n);
            if (pos == s.size()) break;
            if (s[pos] != 'x') throw std::invalid_argument("bad group spec: " + text);
            ++pos;
        }
        return finite_direct_sum(std::move(orders));
    }
    throw std::invalid_argument("unrecognized group spec: " + text);
}

// Finite analog of the exponent-p structure lemma: (Z/p)^(2m) is additively
// isomorphic to GF(p^m) x GF(p^m). The pinned convention reads coordinates
// 0..m-1 as the low-to-high coefficient vector of the first field component
// and coordinates m..2m-1 as the second.
class LemmaFFIso {
public:
    LemmaFFIso(std::int64_t p, int m)
        : m_(m),
          field_(&Field::canonical(p, m)),
          domain_(Group::finite_direct_sum(std::vector<std::int64_t>(2 * static_cast<std::size_t>(m),
                                                                     p))),
          codomain_(Group::field_pair(*field_)) {}

    const Group& domain() const { return domain_; }
    const Group& codomain() const { return codomain_; }

    GroupElement forward(const GroupElement& g) const {
        domain_.check_elem(g);
        const auto p = static_cast<std::uint64_t>(field_->characteristic());
        std::uint64_t a = 0, b = 0, mul = 1;
        for (int i = 0; i < m_; ++i) {
            a += static_cast<std::uint64_t>(g.c[static_cast<std::size_t>(i)]) * mul;
            b += static_cast<std::uint64_t>(g.c[static_cast<std::size_t>(i + m_)]) * mul;
            mul *= p;
        }
        return codomain_.element({static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)});
    }

    GroupElement inverse(const GroupElement& e) const {
        codomain_.check_elem(e);
        const auto p = static_cast<std::uint64_t>(field_->characteristic());
        std::vector<std::int64_t> c(2 * static_cast<std::size_t>(m_));
        std::uint64_t a = static_cast<std::uint64_t>(e.c[0]), b = static_cast<std::uint64_t>(e.c[1]);
        for (int i = 0; i < m_; ++i) {
            c[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(a % p);
            c[static_cast<std::size_t>(i + m_)] = static_cast<std::int64_t>(b % p);
            a /= p;
            b /= p;
        }
        return domain_.element(std::move(c));
    }

private:
    int m_;
    const Field* field_;
    Group domain_;
    Group codomain_;
};

}  // namespace addbasis
