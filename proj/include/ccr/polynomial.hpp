#pragma once

/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials over a field or a finite chain ring.
 *
 * Coefficient rings are runtime objects (Field, ChainRing) that perform arithmetic on plain
 * element values. PolyRing<Ring> plays the same role for polynomials: it holds a copy of the
 * coefficient ring and implements exact arithmetic on Poly values.
 */

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <utility>
#include <vector>

#include "ccr/chainring.hpp"
#include "ccr/common.hpp"
#include "ccr/ffield.hpp"

namespace ccr {

/// What the generic algorithms need from a coefficient ring (fields model it with gamma = 0).
template <typename R>
concept CoefficientRing = requires(const R& ring, typename R::elem_type a, std::int64_t k, unsigned v) {
    { ring.zero() } -> std::same_as<typename R::elem_type>;
    { ring.one() } -> std::same_as<typename R::elem_type>;
    { ring.from_int(k) } -> std::same_as<typename R::elem_type>;
    { ring.add(a, a) } -> std::same_as<typename R::elem_type>;
    { ring.sub(a, a) } -> std::same_as<typename R::elem_type>;
    { ring.neg(a) } -> std::same_as<typename R::elem_type>;
    { ring.mul(a, a) } -> std::same_as<typename R::elem_type>;
    { ring.inv(a) } -> std::same_as<typename R::elem_type>;
    { ring.pow(a, k) } -> std::same_as<typename R::elem_type>;
    { ring.is_unit(a) } -> std::same_as<bool>;
    { ring.size() } -> std::convertible_to<std::uint64_t>;
    { ring.index(a) } -> std::convertible_to<std::uint64_t>;
    { ring.nilpotency() } -> std::convertible_to<unsigned>;
    { ring.valuation(a) } -> std::convertible_to<unsigned>;
    { ring.gamma_power(v) } -> std::same_as<typename R::elem_type>;
    { ring.residue_field() } -> std::convertible_to<const Field&>;
    { ring.mu(a) } -> std::same_as<FieldElem>;
    { ring.lift(ring.mu(a)) } -> std::same_as<typename R::elem_type>;
};

/// Ascending coefficients; the highest stored coefficient is nonzero (empty for the zero polynomial).
template <typename Elem>
struct Poly {
    std::vector<Elem> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
    friend auto operator<=>(const Poly&, const Poly&) = default;
};

template <CoefficientRing Ring>
class PolyRing {
public:
    using elem_type = typename Ring::elem_type;
    using poly_type = Poly<elem_type>;

    explicit PolyRing(Ring ring) : ring_(std::move(ring)) {}

    const Ring& base() const { return ring_; }

    poly_type zero() const { return {}; }
    poly_type one() const { return constant(ring_.one()); }
    poly_type x() const { return monomial(ring_.one(), 1); }
    poly_type constant(elem_type c) const { return normalize({{c}}); }
    poly_type monomial(elem_type c, std::size_t k) const {
        poly_type f;
        f.coeffs.assign(k + 1, ring_.zero());
        f.coeffs[k] = c;
        return normalize(std::move(f));
    }
    /// x^n - c.
    poly_type binomial(std::size_t n, elem_type c) const {
        poly_type f;
        f.coeffs.assign(n + 1, ring_.zero());
        f.coeffs[n] = ring_.one();
        f.coeffs[0] = ring_.sub(f.coeffs[0], c);
        return normalize(std::move(f));
    }
    poly_type from_coeffs(std::vector<elem_type> c) const { return normalize({std::move(c)}); }
    poly_type from_ints(const std::vector<std::int64_t>& c) const {
        poly_type f;
        for (const auto v : c) f.coeffs.push_back(ring_.from_int(v));
        return normalize(std::move(f));
    }

    poly_type normalize(poly_type f) const {
        while (!f.coeffs.empty() && f.coeffs.back() == ring_.zero()) f.coeffs.pop_back();
        return f;
    }

    elem_type coeff(const poly_type& f, std::size_t i) const {
        return i < f.coeffs.size() ? f.coeffs[i] : ring_.zero();
    }
    elem_type leading(const poly_type& f) const { return f.is_zero() ? ring_.zero() : f.coeffs.back(); }
    bool is_monic(const poly_type& f) const { return !f.is_zero() && f.coeffs.back() == ring_.one(); }

    poly_type add(const poly_type& f, const poly_type& g) const {
        poly_type h;
        h.coeffs.resize(std::max(f.coeffs.size(), g.coeffs.size()), ring_.zero());
        for (std::size_t i = 0; i < h.coeffs.size(); ++i) h.coeffs[i] = ring_.add(coeff(f, i), coeff(g, i));
        return normalize(std::move(h));
    }
    poly_type neg(const poly_type& f) const {
        poly_type h = f;
        for (auto& c : h.coeffs) c = ring_.neg(c);
        return h;
    }
    poly_type sub(const poly_type& f, const poly_type& g) const { return add(f, neg(g)); }
    poly_type scale(elem_type c, const poly_type& f) const {
        poly_type h = f;
        for (auto& a : h.coeffs) a = ring_.mul(c, a);
        return normalize(std::move(h));
    }
    poly_type mul(const poly_type& f, const poly_type& g) const {
        if (f.is_zero() || g.is_zero()) return {};
        poly_type h;
        h.coeffs.assign(f.coeffs.size() + g.coeffs.size() - 1, ring_.zero());
        for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
            if (f.coeffs[i] == ring_.zero()) continue;
            for (std::size_t j = 0; j < g.coeffs.size(); ++j)
                h.coeffs[i + j] = ring_.add(h.coeffs[i + j], ring_.mul(f.coeffs[i], g.coeffs[j]));
        }
        return normalize(std::move(h));
    }
    poly_type pow(poly_type f, std::uint64_t k) const {
        poly_type result = one();
        while (k > 0) {
            if (k & 1) result = mul(result, f);
            k >>= 1;
            if (k > 0) f = mul(f, f);
        }
        return result;
    }

    /// Quotient and remainder; the divisor's leading coefficient must be a unit
    /// (over a chain ring this is the monic-divisor case up to a unit scalar).
    std::pair<poly_type, poly_type> divmod(const poly_type& f, const poly_type& g) const {
        if (g.is_zero()) throw InvalidArgument("division by the zero polynomial");
        const elem_type lead = leading(g);
        if (!ring_.is_unit(lead)) throw InvalidArgument("divisor must have a unit leading coefficient");
        const elem_type inv_lead = ring_.inv(lead);
        poly_type rem = f;
        poly_type quot;
        const int dg = g.degree();
        if (rem.degree() < dg) return {quot, rem};
        quot.coeffs.assign(static_cast<std::size_t>(rem.degree() - dg + 1), ring_.zero());
        for (int k = rem.degree(); k >= dg; --k) {
            const elem_type c = ring_.mul(rem.coeffs[static_cast<std::size_t>(k)], inv_lead);
            if (c == ring_.zero()) continue;
            const auto shift = static_cast<std::size_t>(k - dg);
            quot.coeffs[shift] = c;
            for (std::size_t i = 0; i < g.coeffs.size(); ++i)
                rem.coeffs[shift + i] = ring_.sub(rem.coeffs[shift + i], ring_.mul(c, g.coeffs[i]));
        }
        return {normalize(std::move(quot)), normalize(std::move(rem))};
    }
    poly_type rem(const poly_type& f, const poly_type& g) const { return divmod(f, g).second; }

    /// f * lc(f)^{-1}; the leading coefficient must be a unit.
    poly_type make_monic(const poly_type& f) const {
        if (f.is_zero()) return f;
        return scale(ring_.inv(leading(f)), f);
    }

    /// Monic gcd over a field.
    poly_type gcd(poly_type f, poly_type g) const {
        require_field();
        while (!g.is_zero()) {
            f = rem(f, g);
            std::swap(f, g);
        }
        return make_monic(f);
    }

    /// (d, s, t) with s f + t g = d = gcd(f, g) monic, over a field.
    std::tuple<poly_type, poly_type, poly_type> xgcd(const poly_type& f, const poly_type& g) const {
        require_field();
        poly_type r0 = f, r1 = g, s0 = one(), s1 = zero(), t0 = zero(), t1 = one();
        while (!r1.is_zero()) {
            auto [q, r] = divmod(r0, r1);
            r0 = std::move(r1);
            r1 = std::move(r);
            s0 = sub(s0, mul(q, s1));
            std::swap(s0, s1);
            t0 = sub(t0, mul(q, t1));
            std::swap(t0, t1);
        }
        if (r0.is_zero()) return {r0, s0, t0};
        const elem_type c = ring_.inv(leading(r0));
        return {scale(c, r0), scale(c, s0), scale(c, t0)};
    }

    /// f(c x): coefficient i is multiplied by c^i.
    poly_type substitute_scale(const poly_type& f, elem_type c) const {
        if (!ring_.is_unit(c)) throw InvalidArgument("substitution scalar must be a unit");
        poly_type h = f;
        elem_type ci = ring_.one();
        for (auto& a : h.coeffs) {
            a = ring_.mul(a, ci);
            ci = ring_.mul(ci, c);
        }
        return normalize(std::move(h));
    }

    /// f(x + c) by repeated synthetic division.
    poly_type taylor_shift(const poly_type& f, elem_type c) const {
        poly_type h = f;
        const std::size_t n = h.coeffs.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = n - 1; j > i; --j)
                h.coeffs[j - 1] = ring_.add(h.coeffs[j - 1], ring_.mul(c, h.coeffs[j]));
        return normalize(std::move(h));
    }

    elem_type eval(const poly_type& f, elem_type a) const {
        elem_type acc = ring_.zero();
        for (std::size_t i = f.coeffs.size(); i-- > 0;) acc = ring_.add(ring_.mul(acc, a), f.coeffs[i]);
        return acc;
    }

    /// Coefficient-wise reduction onto the residue field.
    Poly<FieldElem> residue(const poly_type& f) const {
        Poly<FieldElem> h;
        for (const auto& c : f.coeffs) h.coeffs.push_back(ring_.mu(c));
        const Field& K = ring_.residue_field();
        while (!h.coeffs.empty() && K.is_zero(h.coeffs.back())) h.coeffs.pop_back();
        return h;
    }
    /// Coefficient-wise canonical lift of a residue polynomial.
    poly_type lift(const Poly<FieldElem>& f) const {
        poly_type h;
        for (const auto& c : f.coeffs) h.coeffs.push_back(ring_.lift(c));
        return normalize(std::move(h));
    }

    /// Total order used for canonical sorting: degree, then ascending coefficients by element index.
    bool canonical_less(const poly_type& f, const poly_type& g) const {
        if (f.degree() != g.degree()) return f.degree() < g.degree();
        for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
            const auto a = ring_.index(f.coeffs[i]);
            const auto b = ring_.index(g.coeffs[i]);
            if (a != b) return a < b;
        }
        return false;
    }

private:
    void require_field() const {
        if (ring_.nilpotency() != 1) throw InvalidArgument("operation requires a field");
    }

    Ring ring_;
};

}  // namespace ccr
