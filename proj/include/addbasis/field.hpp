#pragma once

// Exact arithmetic in GF(p^k) with a fixed modulus polynomial, plus the
// quadratic-equation machinery (trace, square roots, discriminants) used by
// the basis constructions.
//
// Elements are stored packed: value = sum c_i * p^i with all digits reduced,
// so the packed value doubles as the element's index in [0, p^k). For p = 2
// this is the usual bit packing and arithmetic runs on machine words.

#include "addbasis/gfp_poly.hpp"
#include "addbasis/modulus_table.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace addbasis {

class Field;

struct FieldElement {
    const Field* field = nullptr;
    std::uint64_t value = 0;  // packed digits, also the element index

    friend bool operator==(const FieldElement&, const FieldElement&);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
    // value order; intended for containers of elements of one field
    friend bool operator<(const FieldElement& a, const FieldElement& b) { return a.value < b.value; }
};

class Field {
public:
    static constexpr std::uint64_t kDefaultMaxOrder = std::uint64_t(1) << 20;
    static constexpr int kMaxDegree = 32;

    Field(std::int64_t p, int k, std::vector<int> modulus,
          std::uint64_t max_order = kDefaultMaxOrder)
        : p_(p), k_(k), modulus_(std::move(modulus)) {
        if (p_ < 2 || !is_prime(p_)) throw std::invalid_argument("field characteristic must be prime");
        if (k_ < 1 || k_ > kMaxDegree) throw std::invalid_argument("field degree out of range");
        if (static_cast<int>(modulus_.size()) != k_ + 1 || modulus_.back() != 1)
            throw std::invalid_argument("modulus must be monic of degree k");
        for (int c : modulus_)
            if (c < 0 || c >= p_) throw std::invalid_argument("modulus coefficients must be reduced mod p");
        q_ = 1;
        for (int i = 0; i < k_; ++i) {
            if (q_ > max_order / static_cast<std::uint64_t>(p_))
                throw std::invalid_argument("field order exceeds configured cap");
            q_ *= static_cast<std::uint64_t>(p_);
        }
        if (!detail::poly_irreducible(modulus_, static_cast<int>(p_)))
            throw std::invalid_argument("modulus is reducible over GF(p)");
        if (p_ == 2) {
            mod_bits_ = 0;
            for (int i = 0; i <= k_; ++i)
                if (modulus_[i]) mod_bits_ |= std::uint64_t(1) << i;
        }
    }

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

    // The pinned field for (p, k) built from the canonical modulus table.
    // Returned references are stable for the lifetime of the process.
    static const Field& canonical(std::int64_t p, int k) {
        static std::mutex mu;
        static std::map<std::pair<std::int64_t, int>, std::unique_ptr<Field>> cache;
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({p, k});
        if (it == cache.end()) {
            auto f = std::make_unique<Field>(p, k, canonical_modulus(p, k),
                                             std::uint64_t(1) << 62);
            it = cache.emplace(std::make_pair(p, k), std::move(f)).first;
        }
        return *it->second;
    }

    std::int64_t characteristic() const { return p_; }
    int degree() const { return k_; }
    std::uint64_t order() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }

    bool same_spec(const Field& other) const {
        return this == &other || (p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_);
    }

    FieldElement zero() const { return {this, 0}; }
    FieldElement one() const { return {this, 1}; }

    // The class of x modulo the modulus polynomial.
    FieldElement generator() const {
        if (k_ >= 2) return {this, static_cast<std::uint64_t>(p_)};
        return {this, static_cast<std::uint64_t>(detail::mod_p(-modulus_[0], static_cast<int>(p_)))};
    }

    FieldElement element(std::uint64_t index) const {
        if (index >= q_) throw std::out_of_range("field element index out of range");
        return {this, index};
    }

    FieldElement from_coeffs(const std::vector<int>& coeffs) const {
        if (coeffs.size() > static_cast<std::size_t>(k_))
            throw std::invalid_argument("too many coefficients for field degree");
        std::uint64_t v = 0, mul = 1;
        for (int i = 0; i < k_; ++i) {
            int c = i < static_cast<int>(coeffs.size()) ? detail::mod_p(coeffs[i], static_cast<int>(p_)) : 0;
            v += static_cast<std::uint64_t>(c) * mul;
            mul *= static_cast<std::uint64_t>(p_);
        }
        return {this, v};
    }

    int coeff(FieldElement a, int i) const {
        check_elem(a);
        std::uint64_t v = a.value;
        for (int j = 0; j < i; ++j) v /= static_cast<std::uint64_t>(p_);
        return static_cast<int>(v % static_cast<std::uint64_t>(p_));
    }

    // ---- raw packed-value arithmetic ----

    std::uint64_t add_raw(std::uint64_t a, std::uint64_t b) const {
        if (p_ == 2) return a ^ b;
        std::uint64_t r = 0, mul = 1;
        const auto p = static_cast<std::uint64_t>(p_);
        for (int i = 0; i < k_; ++i) {
            std::uint64_t s = a % p + b % p;
            if (s >= p) s -= p;
            r += s * mul;
            a /= p;
            b /= p;
            mul *= p;
        }
        return r;
    }

    std::uint64_t neg_raw(std::uint64_t a) const {
        if (p_ == 2) return a;
        std::uint64_t r = 0, mul = 1;
        const auto p = static_cast<std::uint64_t>(p_);
        for (int i = 0; i < k_; ++i) {
            std::uint64_t d = a % p;
            r += (d == 0 ? 0 : p - d) * mul;
            a /= p;
            mul *= p;
        }
        return r;
    }

    std::uint64_t sub_raw(std::uint64_t a, std::uint64_t b) const { return add_raw(a, neg_raw(b)); }

    std::uint64_t mul_raw(std::uint64_t a, std::uint64_t b) const {
        if (p_ == 2) {
            std::uint64_t r = 0;
            const std::uint64_t top = std::uint64_t(1) << k_;
            while (b) {
                if (b & 1) r ^= a;
                b >>= 1;
                a <<= 1;
                if (a & top) a ^= mod_bits_;
            }
            return r;
        }
        if (q_ <= kLutMaxOrder) {
            ensure_lut();
            return mul_lut_[a * q_ + b];
        }
        return mul_slow(a, b);
    }

    std::uint64_t pow_raw(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = mul_raw(r, a);
            a = mul_raw(a, a);
            e >>= 1;
        }
        return r;
    }

    std::uint64_t inv_raw(std::uint64_t a) const {
        if (a == 0) throw std::domain_error("division by zero in field");
        return pow_raw(a, q_ - 2);
    }

    // ---- checked element operations ----

    FieldElement add(FieldElement a, FieldElement b) const { check_pair(a, b); return {this, add_raw(a.value, b.value)}; }
    FieldElement sub(FieldElement a, FieldElement b) const { check_pair(a, b); return {this, sub_raw(a.value, b.value)}; }
    FieldElement neg(FieldElement a) const { check_elem(a); return {this, neg_raw(a.value)}; }
    FieldElement mul(FieldElement a, FieldElement b) const { check_pair(a, b); return {this, mul_raw(a.value, b.value)}; }
    FieldElement inv(FieldElement a) const { check_elem(a); return {this, inv_raw(a.value)}; }
    FieldElement div(FieldElement a, FieldElement b) const { check_pair(a, b); return {this, mul_raw(a.value, inv_raw(b.value))}; }
    FieldElement pow(FieldElement a, std::uint64_t e) const { check_elem(a); return {this, pow_raw(a.value, e)}; }

    // Absolute trace GF(2^k) -> GF(2): Tr(a) = a + a^2 + ... + a^(2^(k-1)).
    int trace(FieldElement a) const {
        check_elem(a);
        if (p_ != 2) throw std::domain_error("trace requires characteristic 2");
        std::uint64_t t = a.value, acc = a.value;
        for (int i = 1; i < k_; ++i) {
            t = mul_raw(t, t);
            acc ^= t;
        }
        return static_cast<int>(acc);  // in {0,1}: trace lands in the prime subfield
    }

    // Unique square root in characteristic 2 (Frobenius is bijective):
    // sqrt(a) = a^(2^(k-1)).
    FieldElement sqrt_char2(FieldElement a) const {
        check_elem(a);
        if (p_ != 2) throw std::domain_error("sqrt_char2 requires characteristic 2");
        std::uint64_t r = a.value;
        for (int i = 0; i < k_ - 1; ++i) r = mul_raw(r, r);
        return {this, r};
    }

    // Euler criterion; odd characteristic only (in char 2 everything is a
    // square, and callers asking there are misusing the predicate).
    bool is_square(FieldElement a) const {
        check_elem(a);
        if (p_ == 2) throw std::domain_error("is_square requires odd characteristic");
        if (a.value == 0) return true;
        return pow_raw(a.value, (q_ - 1) / 2) == 1;
    }

    // Tonelli-Shanks adapted to GF(q), q odd. Requires is_square(a).
    FieldElement sqrt_odd(FieldElement a) const {
        check_elem(a);
        if (p_ == 2) throw std::domain_error("sqrt_odd requires odd characteristic");
        if (a.value == 0) return zero();
        if (pow_raw(a.value, (q_ - 1) / 2) != 1) throw std::domain_error("sqrt_odd of a non-square");
        std::uint64_t t = q_ - 1;
        int s = 0;
        while ((t & 1) == 0) { t >>= 1; ++s; }
        std::uint64_t r = pow_raw(a.value, (t + 1) / 2);
        std::uint64_t u = pow_raw(a.value, t);
        std::uint64_t c = pow_raw(nonsquare(), t);
        int m = s;
        while (u != 1) {
            int i = 0;
            std::uint64_t w = u;
            while (w != 1) { w = mul_raw(w, w); ++i; }
            std::uint64_t b = c;
            for (int j = 0; j < m - i - 1; ++j) b = mul_raw(b, b);
            r = mul_raw(r, b);
            c = mul_raw(b, b);
            u = mul_raw(u, c);
            m = i;
        }
        return {this, r};
    }

    // Exact root set of b2 x^2 + b1 x + b0 over the field, as a duplicate-free
    // sorted vector (a double root appears once). Rejects the identically zero
    // polynomial; a nonzero constant has no roots.
    std::vector<FieldElement> solve_quadratic(FieldElement b2, FieldElement b1, FieldElement b0) const {
        check_elem(b2);
        check_elem(b1);
        check_elem(b0);
        if (b2.value == 0 && b1.value == 0 && b0.value == 0)
            throw std::invalid_argument("solve_quadratic: identically zero polynomial");
        if (b2.value == 0) {
            if (b1.value == 0) return {};
            return {FieldElement{this, mul_raw(neg_raw(b0.value), inv_raw(b1.value))}};
        }
        // monic form x^2 + Bx + C
        const std::uint64_t inv2 = inv_raw(b2.value);
        const std::uint64_t B = mul_raw(b1.value, inv2);
        const std::uint64_t C = mul_raw(b0.value, inv2);
        std::vector<FieldElement> roots;
        if (p_ == 2) {
            if (B == 0) {
                roots.push_back(sqrt_char2(FieldElement{this, C}));
            } else {
                // x = B y turns the equation into y^2 + y = C / B^2
                const std::uint64_t c = mul_raw(C, inv_raw(mul_raw(B, B)));
                if (trace(FieldElement{this, c}) != 0) return {};
                const std::uint64_t y = artin_schreier_root(c);
                roots.push_back(FieldElement{this, mul_raw(B, y)});
                roots.push_back(FieldElement{this, mul_raw(B, y ^ 1ull)});
            }
        } else {
            // discriminant of the monic form: B^2 - 4C
            const std::uint64_t four = add_raw(add_raw(1, 1), add_raw(1, 1));
            const std::uint64_t disc = sub_raw(mul_raw(B, B), mul_raw(four, C));
            const std::uint64_t half = inv_raw(add_raw(1, 1));
            if (disc == 0) {
                roots.push_back(FieldElement{this, mul_raw(neg_raw(B), half)});
            } else if (is_square(FieldElement{this, disc})) {
                const std::uint64_t r = sqrt_odd(FieldElement{this, disc}).value;
                roots.push_back(FieldElement{this, mul_raw(sub_raw(r, B), half)});
                roots.push_back(FieldElement{this, mul_raw(sub_raw(neg_raw(r), B), half)});
            }
        }
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        return roots;
    }

    // ---- text form: coefficient list low-to-high, e.g. [1,1] for 1+a ----

    std::string render(FieldElement a) const {
        check_elem(a);
        std::string s = "[";
        std::uint64_t v = a.value;
        for (int i = 0; i < k_; ++i) {
            if (i) s += ',';
            s += std::to_string(v % static_cast<std::uint64_t>(p_));
            v /= static_cast<std::uint64_t>(p_);
        }
        s += ']';
        return s;
    }

    FieldElement parse_element(const std::string& text) const {
        std::size_t i = 0;
        FieldElement e = parse_element_at(text, i);
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i != text.size()) throw std::invalid_argument("trailing characters in field element: " + text);
        return e;
    }

    // Parses "[c0,c1,...]" starting at pos; advances pos past the closing bracket.
    FieldElement parse_element_at(const std::string& text, std::size_t& pos) const {
        auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
        skip_ws();
        if (pos >= text.size() || text[pos] != '[')
            throw std::invalid_argument("field element must start with '[': " + text);
        ++pos;
        std::vector<int> coeffs;
        skip_ws();
        if (pos < text.size() && text[pos] == ']') {
            ++pos;
        } else {
            while (true) {
                skip_ws();
                bool negative = pos < text.size() && text[pos] == '-';
                if (negative) ++pos;
                if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                    throw std::invalid_argument("bad field element coefficient: " + text);
                long v = 0;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                    v = v * 10 + (text[pos++] - '0');
                coeffs.push_back(static_cast<int>(negative ? -v : v));
                skip_ws();
                if (pos < text.size() && text[pos] == ',') { ++pos; continue; }
                if (pos < text.size() && text[pos] == ']') { ++pos; break; }
                throw std::invalid_argument("malformed field element: " + text);
            }
        }
        return from_coeffs(coeffs);
    }

private:
    static constexpr std::uint64_t kLutMaxOrder = 1024;

    static bool is_prime(std::int64_t p) {
        if (p < 2) return false;
        for (std::int64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    }

    void check_elem(const FieldElement& a) const {
        if (a.field != this && (a.field == nullptr || !same_spec(*a.field)))
            throw std::invalid_argument("field element belongs to a different field spec");
    }
    void check_pair(const FieldElement& a, const FieldElement& b) const {
        check_elem(a);
        check_elem(b);
    }

    std::uint64_t mul_slow(std::uint64_t a, std::uint64_t b) const {
        const auto p = static_cast<std::int64_t>(p_);
        std::array<int, kMaxDegree> da{}, db{};
        std::uint64_t va = a, vb = b;
        for (int i = 0; i < k_; ++i) {
            da[i] = static_cast<int>(va % static_cast<std::uint64_t>(p));
            db[i] = static_cast<int>(vb % static_cast<std::uint64_t>(p));
            va /= static_cast<std::uint64_t>(p);
            vb /= static_cast<std::uint64_t>(p);
        }
        std::array<std::int64_t, 2 * kMaxDegree> prod{};
        for (int i = 0; i < k_; ++i) {
            if (!da[i]) continue;
            for (int j = 0; j < k_; ++j) prod[i + j] += std::int64_t(da[i]) * db[j];
        }
        for (int i = 2 * k_ - 2; i >= k_; --i) {
            std::int64_t c = detail::mod_p(prod[i], static_cast<int>(p));
            if (!c) continue;
            for (int j = 0; j <= k_; ++j) prod[i - k_ + j] -= c * modulus_[j];
        }
        std::uint64_t r = 0, mul = 1;
        for (int i = 0; i < k_; ++i) {
            r += static_cast<std::uint64_t>(detail::mod_p(prod[i], static_cast<int>(p))) * mul;
            mul *= static_cast<std::uint64_t>(p);
        }
        return r;
    }

    void ensure_lut() const {
        std::call_once(lut_once_, [this] {
            mul_lut_.resize(q_ * q_);
            for (std::uint64_t a = 0; a < q_; ++a)
                for (std::uint64_t b = a; b < q_; ++b) {
                    std::uint64_t v = mul_slow(a, b);
                    mul_lut_[a * q_ + b] = static_cast<std::uint32_t>(v);
                    mul_lut_[b * q_ + a] = static_cast<std::uint32_t>(v);
                }
        });
    }

    std::uint64_t nonsquare() const {
        std::call_once(nonsquare_once_, [this] {
            for (std::uint64_t v = 1; v < q_; ++v)
                if (pow_raw(v, (q_ - 1) / 2) != 1) { nonsquare_ = v; return; }
            throw std::logic_error("no quadratic non-residue found");
        });
        return nonsquare_;
    }

    // One solution y of y^2 + y = c, assuming Tr(c) = 0. Half-trace for odd k;
    // for even k the delta-accumulation with a fixed trace-one element.
    std::uint64_t artin_schreier_root(std::uint64_t c) const {
        if (k_ % 2 == 1) {
            std::uint64_t y = c, t = c;
            for (int i = 1; i <= (k_ - 1) / 2; ++i) {
                t = mul_raw(t, t);
                t = mul_raw(t, t);
                y ^= t;
            }
            return y;
        }
        std::call_once(delta_once_, [this] {
            for (std::uint64_t v = 1; v < q_; ++v)
                if (trace(FieldElement{this, v}) == 1) { delta_ = v; return; }
            throw std::logic_error("no trace-one element found");
        });
        // y = sum_{i=0}^{k-2} c^(2^i) * s_i with s_i = sum_{j=i+1}^{k-1} delta^(2^j)
        std::vector<std::uint64_t> dpow(k_);
        dpow[0] = delta_;
        for (int j = 1; j < k_; ++j) dpow[j] = mul_raw(dpow[j - 1], dpow[j - 1]);
        std::uint64_t y = 0, cpow = c, suffix;
        std::vector<std::uint64_t> s(k_ - 1);
        suffix = 0;
        for (int i = k_ - 2; i >= 0; --i) {
            suffix ^= dpow[i + 1];
            s[i] = suffix;
        }
        for (int i = 0; i <= k_ - 2; ++i) {
            y ^= mul_raw(cpow, s[i]);
            cpow = mul_raw(cpow, cpow);
        }
        return y;
    }

    std::int64_t p_;
    int k_;
    std::vector<int> modulus_;
    std::uint64_t q_ = 0;
    std::uint64_t mod_bits_ = 0;  // p == 2

    mutable std::once_flag lut_once_;
    mutable std::vector<std::uint32_t> mul_lut_;
    mutable std::once_flag nonsquare_once_;
    mutable std::uint64_t nonsquare_ = 0;
    mutable std::once_flag delta_once_;
    mutable std::uint64_t delta_ = 0;
};

inline bool operator==(const FieldElement& a, const FieldElement& b) {
    if (a.field == b.field) return a.value == b.value;
    if (a.field == nullptr || b.field == nullptr) return false;
    return a.field->same_spec(*b.field) && a.value == b.value;
}

inline FieldElement operator+(FieldElement a, FieldElement b) { return a.field->add(a, b); }
inline FieldElement operator-(FieldElement a, FieldElement b) { return a.field->sub(a, b); }
inline FieldElement operator-(FieldElement a) { return a.field->neg(a); }
inline FieldElement operator*(FieldElement a, FieldElement b) { return a.field->mul(a, b); }
inline FieldElement operator/(FieldElement a, FieldElement b) { return a.field->div(a, b); }

inline std::string to_string(const FieldElement& a) { return a.field->render(a); }

// Tower embedding GF(q) -> GF(q^2): the finite stand-in for passing to the
// algebraic closure. The generator of the base field maps to the least root
// (by element index) of the base modulus inside the extension, which pins a
// concrete field homomorphism.
class FieldEmbedding {
public:
    FieldEmbedding(const Field& base, const Field& ext) : base_(&base), ext_(&ext) {
        if (base.characteristic() != ext.characteristic() || ext.degree() != 2 * base.degree())
            throw std::invalid_argument("embedding target must be the quadratic extension of the base");
        const auto& m = base.modulus();
        std::uint64_t beta = 0;
        bool found = false;
        for (std::uint64_t x = 0; x < ext.order() && !found; ++x) {
            // Horner evaluation of the base modulus at x inside ext
            std::uint64_t acc = 0;
            for (int i = base.degree(); i >= 0; --i) {
                acc = ext.mul_raw(acc, x);
                acc = ext.add_raw(acc, static_cast<std::uint64_t>(m[i]));
            }
            if (acc == 0) { beta = x; found = true; }
        }
        if (!found) throw std::logic_error("base modulus has no root in the extension");
        pow_beta_.resize(base.degree());
        pow_beta_[0] = 1;
        for (int i = 1; i < base.degree(); ++i) pow_beta_[i] = ext.mul_raw(pow_beta_[i - 1], beta);
        beta_ = beta;
    }

    const Field& base() const { return *base_; }
    const Field& ext() const { return *ext_; }
    FieldElement generator_image() const { return {ext_, beta_}; }

    FieldElement map(FieldElement a) const {
        if (a.field != base_ && (a.field == nullptr || !base_->same_spec(*a.field)))
            throw std::invalid_argument("embedding applied to an element of a different field");
        const auto p = static_cast<std::uint64_t>(base_->characteristic());
        std::uint64_t v = a.value, acc = 0;
        for (int i = 0; i < base_->degree(); ++i) {
            std::uint64_t digit = v % p;
            if (digit) acc = ext_->add_raw(acc, ext_->mul_raw(digit, pow_beta_[i]));
            v /= p;
        }
        return {ext_, acc};
    }

private:
    const Field* base_;
    const Field* ext_;
    std::uint64_t beta_ = 0;
    std::vector<std::uint64_t> pow_beta_;
};

}  // namespace addbasis
