#pragma once

/**
 * @file ffield.hpp
 * @brief Finite fields F_{p^r} in a polynomial basis, with discrete logarithms and n-th roots.
 *
 * A field is built from (p, r) deterministically: the modulus is the lexicographically smallest
 * monic irreducible polynomial of degree r over F_p (coefficients compared from the constant term
 * upward) and the generator g is the primitive element with the smallest coordinate tuple in the
 * same order. Elements are stored as an index whose base-p digits are the coordinates, with the
 * constant coordinate most significant, so index order is exactly that lexicographic order and
 * prime-field elements are their integer values.
 *
 * Multiplication goes through exp/log tables and addition through Zech logarithms, which keeps
 * every operation O(1) for fields up to Caps::field elements.
 */

#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ccr/common.hpp"

namespace ccr {

struct FieldElem {
    std::uint32_t idx = 0;
    friend constexpr auto operator<=>(const FieldElem&, const FieldElem&) = default;
};

namespace detail {

/// Dense polynomials over Z_p as int64 vectors (ascending). Only used to bootstrap a field.
namespace zp {

using Poly = std::vector<std::int64_t>;

inline void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline Poly mod(Poly a, const Poly& f, std::int64_t p) {
    trim(a);
    const std::size_t df = f.size() - 1;
    const std::int64_t inv_lead = static_cast<std::int64_t>(nt::mod_inverse(static_cast<std::uint64_t>(f.back()), p));
    while (a.size() >= f.size()) {
        const std::int64_t c = a.back() * inv_lead % p;
        const std::size_t shift = a.size() - 1 - df;
        for (std::size_t i = 0; i <= df; ++i) a[shift + i] = ((a[shift + i] - c * f[i]) % p + p) % p;
        trim(a);
    }
    return a;
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& f, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    return mod(std::move(c), f, p);
}

inline Poly powmod(Poly a, std::uint64_t e, const Poly& f, std::int64_t p) {
    Poly result = mod(Poly{1}, f, p);
    a = mod(std::move(a), f, p);
    while (e > 0) {
        if (e & 1) result = mulmod(result, a, f, p);
        a = mulmod(a, a, f, p);
        e >>= 1;
    }
    return result;
}

inline Poly gcd(Poly a, Poly b, std::int64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        a = mod(std::move(a), b, p);
        std::swap(a, b);
    }
    return a;
}

/// Rabin's test: f of degree r is irreducible iff x^{p^r} = x mod f and
/// gcd(x^{p^{r/l}} - x, f) = 1 for every prime l dividing r.
inline bool is_irreducible(const Poly& f, std::int64_t p) {
    const std::size_t r = f.size() - 1;
    if (r == 0) return false;
    if (r == 1) return true;
    auto frobenius_power = [&](std::size_t k) {
        Poly h = mod(Poly{0, 1}, f, p);
        for (std::size_t i = 0; i < k; ++i) h = powmod(h, static_cast<std::uint64_t>(p), f, p);
        return h;
    };
    Poly x = mod(Poly{0, 1}, f, p);
    if (frobenius_power(r) != x) return false;
    for (const auto l : nt::prime_divisors(r)) {
        Poly h = frobenius_power(r / l);
        h.resize(std::max<std::size_t>(h.size(), 2), 0);
        h[1] = ((h[1] - 1) % p + p) % p;
        trim(h);
        const Poly g = gcd(h, f, p);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace zp

struct FieldTables {
    std::uint64_t p = 0;
    unsigned r = 0;
    std::uint64_t q = 0;
    std::vector<std::int64_t> modulus;
    std::vector<std::uint32_t> digit_weight;  // p^{r-1-i}
    std::vector<std::uint32_t> exp;           // g^k, k in [0, q-1)
    std::vector<std::int32_t> log;            // -1 for zero
    std::vector<std::int32_t> zech;           // log(1 + g^k), -1 when 1 + g^k = 0
    std::uint32_t generator = 0;
    std::uint32_t half = 0;  // log(-1)
};

}  // namespace detail

class Field;
Field make_field(std::uint64_t p, unsigned r, std::uint64_t cap = Caps::field);

class Field {
public:
    using elem_type = FieldElem;

    std::uint64_t characteristic() const { return t_->p; }
    unsigned degree() const { return t_->r; }
    std::uint64_t size() const { return t_->q; }
    /// Canonical modulus, ascending and monic (length r + 1).
    const std::vector<std::int64_t>& modulus() const { return t_->modulus; }
    FieldElem generator() const { return {t_->generator}; }

    FieldElem zero() const { return {0}; }
    FieldElem one() const { return {t_->digit_weight[0]}; }
    FieldElem from_int(std::int64_t k) const {
        const auto p = static_cast<std::int64_t>(t_->p);
        return {static_cast<std::uint32_t>(((k % p) + p) % p) * t_->digit_weight[0]};
    }
    /// Element from ascending coordinates (reduced mod p; missing coordinates are zero).
    FieldElem from_coeffs(std::span<const std::int64_t> c) const {
        if (c.size() > t_->r) throw InvalidArgument("too many coordinates for F_" + std::to_string(t_->q));
        const auto p = static_cast<std::int64_t>(t_->p);
        std::uint32_t idx = 0;
        for (std::size_t i = 0; i < c.size(); ++i)
            idx += static_cast<std::uint32_t>(((c[i] % p) + p) % p) * t_->digit_weight[i];
        return {idx};
    }
    std::vector<std::int64_t> coeffs(FieldElem a) const {
        std::vector<std::int64_t> c(t_->r);
        for (unsigned i = 0; i < t_->r; ++i) c[i] = (a.idx / t_->digit_weight[i]) % t_->p;
        return c;
    }
    FieldElem element(std::uint64_t index) const { return {static_cast<std::uint32_t>(index)}; }
    std::uint64_t index(FieldElem a) const { return a.idx; }
    /// True when the element lies in the prime subfield.
    bool in_prime_field(FieldElem a) const { return a.idx % t_->digit_weight[0] == 0; }

    bool is_zero(FieldElem a) const { return a.idx == 0; }
    bool is_unit(FieldElem a) const { return a.idx != 0; }

    FieldElem add(FieldElem a, FieldElem b) const {
        if (a.idx == 0) return b;
        if (b.idx == 0) return a;
        const std::int64_t la = t_->log[a.idx];
        const std::int64_t diff = mod_order(t_->log[b.idx] - la);
        const std::int32_t z = t_->zech[diff];
        if (z < 0) return {0};
        return {t_->exp[mod_order(la + z)]};
    }
    FieldElem neg(FieldElem a) const {
        if (a.idx == 0) return a;
        return {t_->exp[mod_order(std::int64_t{t_->log[a.idx]} + t_->half)]};
    }
    FieldElem sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }
    FieldElem mul(FieldElem a, FieldElem b) const {
        if (a.idx == 0 || b.idx == 0) return {0};
        return {t_->exp[mod_order(std::int64_t{t_->log[a.idx]} + t_->log[b.idx])]};
    }
    FieldElem inv(FieldElem a) const {
        if (a.idx == 0) throw InvalidArgument("zero has no inverse");
        return {t_->exp[mod_order(-std::int64_t{t_->log[a.idx]})]};
    }
    FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }
    /// a^k; negative k requires a unit. 0^0 = 1.
    FieldElem pow(FieldElem a, std::int64_t k) const {
        if (a.idx == 0) {
            if (k < 0) throw InvalidArgument("zero has no inverse");
            return k == 0 ? one() : zero();
        }
        const auto n = static_cast<std::int64_t>(t_->q - 1);
        const std::int64_t e = ((k % n) + n) % n;
        return {t_->exp[mod_order(static_cast<std::int64_t>(static_cast<unsigned __int128>(t_->log[a.idx]) * e % n))]};
    }
    /// Discrete logarithm to the canonical generator.
    std::uint64_t log(FieldElem a) const {
        if (a.idx == 0) throw InvalidArgument("discrete logarithm of zero is undefined");
        return static_cast<std::uint64_t>(t_->log[a.idx]);
    }
    /// g^k for the canonical generator g.
    FieldElem exp(std::int64_t k) const { return {t_->exp[mod_order(k)]}; }
    std::uint64_t order(FieldElem a) const {
        const std::uint64_t n = t_->q - 1;
        return n / std::gcd(n, log(a));
    }

    // Chain-ring view of a field: gamma = 0, nilpotency 1.
    unsigned nilpotency() const { return 1; }
    std::uint64_t residue_size() const { return t_->q; }
    unsigned valuation(FieldElem a) const { return a.idx == 0 ? 1 : 0; }
    FieldElem gamma_power(unsigned v) const { return v == 0 ? one() : zero(); }
    FieldElem divide_gamma_power(FieldElem a, unsigned v) const { return v == 0 ? a : zero(); }
    FieldElem reduce_gamma_power(FieldElem a, unsigned v) const { return v == 0 ? zero() : a; }
    /// Canonical representatives of R / gamma^k R.
    std::vector<FieldElem> residue_system(unsigned k) const {
        if (k == 0) return {zero()};
        std::vector<FieldElem> out(t_->q);
        for (std::uint32_t i = 0; i < t_->q; ++i) out[i] = {i};
        return out;
    }
    const Field& residue_field() const { return *this; }
    FieldElem mu(FieldElem a) const { return a; }
    FieldElem lift(FieldElem a) const { return a; }
    /// Hamming weight of one symbol (the e = 1 homogeneous weight).
    std::uint64_t hom_weight(FieldElem a) const { return a.idx == 0 ? 0 : 1; }

    friend bool operator==(const Field& a, const Field& b) { return a.t_->p == b.t_->p && a.t_->r == b.t_->r; }

private:
    friend Field make_field(std::uint64_t, unsigned, std::uint64_t);
    explicit Field(std::shared_ptr<const detail::FieldTables> t) : t_(std::move(t)) {}

    std::size_t mod_order(std::int64_t k) const {
        const auto n = static_cast<std::int64_t>(t_->q - 1);
        return static_cast<std::size_t>(((k % n) + n) % n);
    }

    std::shared_ptr<const detail::FieldTables> t_;
};

/// Builds F_{p^r} with its canonical modulus and generator.
inline Field make_field(std::uint64_t p, unsigned r, std::uint64_t cap) {
    using detail::zp::Poly;
    if (!nt::is_prime(p)) throw InvalidArgument("characteristic " + std::to_string(p) + " is not prime");
    if (r == 0) throw InvalidArgument("extension degree must be positive");
    const std::uint64_t q = nt::checked_pow(p, r, cap);

    auto t = std::make_shared<detail::FieldTables>();
    t->p = p;
    t->r = r;
    t->q = q;
    const auto ps = static_cast<std::int64_t>(p);

    // Smallest monic irreducible: tuples (c_0, ..., c_{r-1}) in lex order, c_0 most significant.
    const std::uint64_t tuples = q;
    for (std::uint64_t code = 0; code < tuples; ++code) {
        Poly f(r + 1, 0);
        std::uint64_t rest = code;
        for (unsigned i = r; i-- > 0;) {
            f[i] = static_cast<std::int64_t>(rest % p);
            rest /= p;
        }
        f[r] = 1;
        if (detail::zp::is_irreducible(f, ps)) {
            t->modulus = std::move(f);
            break;
        }
    }

    t->digit_weight.resize(r);
    for (unsigned i = 0; i < r; ++i) t->digit_weight[i] = static_cast<std::uint32_t>(nt::ipow(p, r - 1 - i));

    auto decode = [&](std::uint64_t idx) {
        Poly c(r);
        for (unsigned i = 0; i < r; ++i) c[i] = static_cast<std::int64_t>((idx / t->digit_weight[i]) % p);
        return c;
    };
    auto encode = [&](const Poly& c) {
        std::uint64_t idx = 0;
        for (std::size_t i = 0; i < c.size(); ++i) idx += static_cast<std::uint64_t>(c[i]) * t->digit_weight[i];
        return static_cast<std::uint32_t>(idx);
    };

    const std::uint64_t n = q - 1;
    const auto order_primes = nt::prime_divisors(n);
    const Poly one_poly{1};
    for (std::uint64_t idx = 1; idx < q; ++idx) {
        Poly c = decode(idx);
        detail::zp::trim(c);
        bool primitive = true;
        for (const auto l : order_primes) {
            if (detail::zp::powmod(c, n / l, t->modulus, ps) == one_poly) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            t->generator = static_cast<std::uint32_t>(idx);
            break;
        }
    }

    t->exp.resize(n);
    t->log.assign(q, -1);
    Poly g = decode(t->generator);
    detail::zp::trim(g);
    Poly acc{1};
    for (std::uint64_t k = 0; k < n; ++k) {
        const std::uint32_t idx = encode(acc);
        t->exp[k] = idx;
        t->log[idx] = static_cast<std::int32_t>(k);
        acc = detail::zp::mulmod(acc, g, t->modulus, ps);
    }

    t->half = p == 2 ? 0 : static_cast<std::uint32_t>(n / 2);
    t->zech.resize(n);
    for (std::uint64_t k = 0; k < n; ++k) {
        Poly c = decode(t->exp[k]);
        c[0] = (c[0] + 1) % ps;
        const std::uint32_t idx = encode(c);
        t->zech[k] = t->log[idx];
    }
    return Field(std::move(t));
}

/// Discrete logarithm of a nonzero element to the canonical generator.
inline std::uint64_t discrete_log(const Field& F, FieldElem a) { return F.log(a); }

/// Canonical n-th root of a nonzero lambda: the solution g^j with the smallest j, or nullopt when
/// gcd(n, q - 1) does not divide log(lambda).
inline std::optional<FieldElem> nth_root(const Field& F, FieldElem lambda, std::uint64_t n) {
    if (F.is_zero(lambda)) throw InvalidArgument("n-th root of zero is not considered");
    if (n == 0) throw InvalidArgument("root index must be positive");
    const std::uint64_t order = F.size() - 1;
    const std::uint64_t i = F.log(lambda);
    const std::uint64_t d = std::gcd(n, order);
    if (i % d != 0) return std::nullopt;
    const std::uint64_t m = order / d;
    if (m == 1) return F.one();
    const std::uint64_t j = nt::mulmod(i / d, nt::mod_inverse((n / d) % m, m), m);
    return F.exp(static_cast<std::int64_t>(j));
}

/// -1 is a square in F_{p^r} iff p = 1 (mod 4), or p = 3 (mod 4) and r is even.
inline bool minus_one_is_square(std::uint64_t p, unsigned r) {
    if (p == 2) throw InvalidArgument("characteristic 2: -1 = 1 and the criterion is not defined");
    if (!nt::is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
    return p % 4 == 1 || r % 2 == 0;
}

/// The smaller (in element order) of the two square roots of -1, if any.
inline std::optional<FieldElem> sqrt_minus_one(const Field& F) {
    if (F.characteristic() == 2) throw InvalidArgument("characteristic 2 is excluded");
    const auto root = nth_root(F, F.neg(F.one()), 2);
    if (!root) return std::nullopt;
    return std::min(*root, F.neg(*root));
}

}  // namespace ccr
