#pragma once

/**
 * @file factor.hpp
 * @brief Factorizations of x^n - 1 and x^n - lambda over finite fields, their transport by
 *        x -> delta^{-1} x, and Hensel lifting to chain rings.
 *
 * Over F_q, x^n - 1 with n = m p^s is (x^m - 1)^{p^s}, and the irreducible factors of x^m - 1 are
 * the minimal polynomials of the powers of a primitive m-th root of unity beta, one per cyclotomic
 * coset of q modulo m. beta lives in F_q[t]/(h) with deg h = ord_m(q), so no table for the splitting
 * field is ever built.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "ccr/chainring.hpp"
#include "ccr/common.hpp"
#include "ccr/ffield.hpp"
#include "ccr/polynomial.hpp"

namespace ccr {

template <typename Elem>
struct Factor {
    Poly<Elem> poly;
    std::uint64_t multiplicity = 1;
    friend auto operator<=>(const Factor&, const Factor&) = default;
};

/// unit * prod factor^multiplicity, with monic factors in canonical order.
template <typename Elem>
struct Factorization {
    Elem unit{};
    std::vector<Factor<Elem>> factors;
    friend bool operator==(const Factorization&, const Factorization&) = default;
};

template <CoefficientRing Ring>
Poly<typename Ring::elem_type> expand(const PolyRing<Ring>& P, const Factorization<typename Ring::elem_type>& fac) {
    auto acc = P.constant(fac.unit);
    for (const auto& f : fac.factors) acc = P.mul(acc, P.pow(f.poly, f.multiplicity));
    return acc;
}

template <CoefficientRing Ring>
void sort_canonical(const PolyRing<Ring>& P, std::vector<Factor<typename Ring::elem_type>>& factors) {
    std::sort(factors.begin(), factors.end(), [&](const auto& a, const auto& b) {
        if (a.poly != b.poly) return P.canonical_less(a.poly, b.poly);
        return a.multiplicity < b.multiplicity;
    });
}

/// Cyclotomic cosets of q modulo m, each sorted, ordered by smallest member.
inline std::vector<std::vector<std::uint64_t>> cyclotomic_cosets(std::uint64_t q, std::uint64_t m) {
    std::vector<std::vector<std::uint64_t>> cosets;
    std::vector<bool> seen(m, false);
    for (std::uint64_t a = 0; a < m; ++a) {
        if (seen[a]) continue;
        std::vector<std::uint64_t> coset;
        std::uint64_t c = a;
        while (!seen[c]) {
            seen[c] = true;
            coset.push_back(c);
            c = nt::mulmod(c, q, m);
        }
        std::sort(coset.begin(), coset.end());
        cosets.push_back(std::move(coset));
    }
    return cosets;
}

namespace detail {

/// F_q[t]/(h) for an irreducible h of degree k over F_q.
class ExtensionField {
public:
    using Elem = Poly<FieldElem>;

    ExtensionField(const Field& F, unsigned k) : P_(F), k_(k) {
        if (k == 0) throw InvalidArgument("extension degree must be positive");
        h_ = find_irreducible();
    }

    const Poly<FieldElem>& modulus() const { return h_; }
    unsigned degree() const { return k_; }

    Elem one() const { return P_.one(); }
    Elem add(const Elem& a, const Elem& b) const { return P_.add(a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return P_.sub(a, b); }
    Elem neg(const Elem& a) const { return P_.neg(a); }
    Elem mul(const Elem& a, const Elem& b) const { return P_.rem(P_.mul(a, b), h_); }
    Elem pow(Elem a, std::uint64_t e) const {
        Elem result = one();
        while (e > 0) {
            if (e & 1) result = mul(result, a);
            e >>= 1;
            if (e > 0) a = mul(a, a);
        }
        return result;
    }
    Elem frobenius(const Elem& a) const { return pow(a, P_.base().size()); }

    /// Element of the base field, or nullopt when a is not constant.
    std::optional<FieldElem> to_base(const Elem& a) const {
        if (a.degree() > 0) return std::nullopt;
        return a.is_zero() ? P_.base().zero() : a.coeffs[0];
    }
    Elem from_base(FieldElem c) const { return P_.constant(c); }

    /// Element whose base-q digits (constant coefficient least significant) spell `index`.
    Elem element(std::uint64_t index) const {
        const Field& F = P_.base();
        Elem a;
        for (unsigned i = 0; i < k_ && index > 0; ++i) {
            a.coeffs.push_back(F.element(index % F.size()));
            index /= F.size();
        }
        return P_.normalize(std::move(a));
    }

    /// z^{(q^k - 1)/m}, with the exponent handled as base-q digits so q^k never materializes.
    Elem power_cofactor(const Elem& z, std::uint64_t m) const {
        const std::uint64_t q = P_.base().size();
        // Long division of (q-1, ..., q-1)_q by m, most significant digit first.
        std::vector<std::uint64_t> digits(k_);
        std::uint64_t carry = 0;
        for (unsigned i = k_; i-- > 0;) {
            const unsigned __int128 cur = static_cast<unsigned __int128>(carry) * q + (q - 1);
            digits[i] = static_cast<std::uint64_t>(cur / m);
            carry = static_cast<std::uint64_t>(cur % m);
        }
        if (carry != 0) throw std::logic_error("m does not divide q^k - 1");
        Elem result = one();
        Elem conj = z;
        for (unsigned i = 0; i < k_; ++i) {
            result = mul(result, pow(conj, digits[i]));
            conj = frobenius(conj);
        }
        return result;
    }

private:
    bool is_irreducible(const Poly<FieldElem>& f) const {
        const std::uint64_t q = P_.base().size();
        const unsigned k = static_cast<unsigned>(f.degree());
        if (k == 1) return true;
        const Field& F = P_.base();
        for (std::uint64_t i = 0; i < q; ++i)
            if (F.is_zero(P_.eval(f, F.element(i)))) return false;
        auto x_power = [&](unsigned j) {
            Poly<FieldElem> acc = P_.rem(P_.x(), f);
            for (unsigned i = 0; i < j; ++i) acc = powmod(acc, q, f);
            return acc;
        };
        const auto x = P_.rem(P_.x(), f);
        if (x_power(k) != x) return false;
        for (const auto l : nt::prime_divisors(k)) {
            const auto g = P_.gcd(P_.sub(x_power(k / static_cast<unsigned>(l)), x), f);
            if (g.degree() != 0) return false;
        }
        return true;
    }

    Poly<FieldElem> powmod(Poly<FieldElem> a, std::uint64_t e, const Poly<FieldElem>& f) const {
        Poly<FieldElem> result = P_.rem(P_.one(), f);
        while (e > 0) {
            if (e & 1) result = P_.rem(P_.mul(result, a), f);
            e >>= 1;
            if (e > 0) a = P_.rem(P_.mul(a, a), f);
        }
        return result;
    }

    Poly<FieldElem> find_irreducible() const {
        const Field& F = P_.base();
        if (k_ == 1) return P_.x();
        for (std::uint64_t code = 0;; ++code) {
            Poly<FieldElem> f;
            f.coeffs.assign(k_ + 1, F.zero());
            std::uint64_t rest = code;
            for (unsigned i = 0; i < k_ && rest > 0; ++i) {
                f.coeffs[i] = F.element(rest % F.size());
                rest /= F.size();
            }
            if (rest > 0) break;
            f.coeffs[k_] = F.one();
            if (F.is_zero(f.coeffs[0])) continue;
            if (is_irreducible(f)) return f;
        }
        throw std::logic_error("no irreducible polynomial found");
    }

    PolyRing<Field> P_;
    unsigned k_;
    Poly<FieldElem> h_;
};

/// Monic irreducible factors of x^m - 1 over F (gcd(m, p) = 1), canonically sorted.
inline std::vector<Poly<FieldElem>> squarefree_cyclotomic_factors(const Field& F, std::uint64_t m) {
    const PolyRing<Field> P(F);
    if (m == 1) return {P.binomial(1, F.one())};
    const std::uint64_t q = F.size();
    const auto k = static_cast<unsigned>(nt::multiplicative_order(q % m, m));
    const ExtensionField E(F, k);

    const auto order_primes = nt::prime_divisors(m);
    std::optional<ExtensionField::Elem> beta;
    for (std::uint64_t idx = 1; !beta; ++idx) {
        const auto z = E.element(idx);
        const auto w = E.power_cofactor(z, m);
        bool primitive = true;
        for (const auto l : order_primes) {
            if (E.pow(w, m / l) == E.one()) {
                primitive = false;
                break;
            }
        }
        if (primitive) beta = w;
    }

    std::vector<Poly<FieldElem>> out;
    for (const auto& coset : cyclotomic_cosets(q, m)) {
        std::vector<ExtensionField::Elem> poly{E.one()};
        for (const auto c : coset) {
            const auto root = E.pow(*beta, c);
            std::vector<ExtensionField::Elem> next(poly.size() + 1);
            for (std::size_t i = 0; i < poly.size(); ++i) {
                next[i + 1] = E.add(next[i + 1], poly[i]);
                next[i] = E.sub(next[i], E.mul(root, poly[i]));
            }
            poly = std::move(next);
        }
        Poly<FieldElem> f;
        for (const auto& c : poly) {
            const auto base = E.to_base(c);
            if (!base) throw std::logic_error("minimal polynomial coefficient outside the base field");
            f.coeffs.push_back(*base);
        }
        out.push_back(P.normalize(std::move(f)));
    }
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return P.canonical_less(a, b); });
    return out;
}

}  // namespace detail

/// x^n - 1 over F_q: (x^m - 1)^{p^s} with the cyclotomic-coset factors of x^m - 1.
inline Factorization<FieldElem> factor_xn_minus_one_field(const Field& F, std::uint64_t n) {
    if (n == 0) throw InvalidArgument("length must be positive");
    const std::uint64_t p = F.characteristic();
    const unsigned s = nt::valuation(n, p);
    const std::uint64_t ps = nt::ipow(p, s);
    const std::uint64_t m = n / ps;
    Factorization<FieldElem> out;
    out.unit = F.one();
    for (auto& f : detail::squarefree_cyclotomic_factors(F, m)) out.factors.push_back({std::move(f), ps});
    return out;
}

/// Applies f(x) -> f(delta^{-1} x) to every factor, rescaled to be monic; the scalars are folded
/// into the unit. Turns a factorization of x^n - 1 into one of x^n - delta^n.
template <CoefficientRing Ring>
Factorization<typename Ring::elem_type> transport_factorization(const PolyRing<Ring>& P,
                                                                const Factorization<typename Ring::elem_type>& fac,
                                                                typename Ring::elem_type delta) {
    const Ring& R = P.base();
    const auto delta_inv = R.inv(delta);
    std::uint64_t total_degree = 0;
    Factorization<typename Ring::elem_type> out;
    for (const auto& f : fac.factors) {
        const auto moved = P.substitute_scale(f.poly, delta_inv);
        out.factors.push_back({P.make_monic(moved), f.multiplicity});
        total_degree += static_cast<std::uint64_t>(f.poly.degree()) * f.multiplicity;
    }
    // delta^n f(delta^{-1} x) = x^n - lambda, and each monic rescale contributes delta^{deg}.
    const auto lambda = R.pow(delta, static_cast<std::int64_t>(total_degree));
    const auto scale = R.pow(delta_inv, static_cast<std::int64_t>(total_degree));
    out.unit = R.mul(R.mul(fac.unit, lambda), scale);
    sort_canonical(P, out.factors);
    return out;
}

/// x^n - lambda over F_q via an n-th root delta of lambda. Throws NotApplicable without a root.
inline Factorization<FieldElem> factor_xn_minus_lambda_field(const Field& F, std::uint64_t n, FieldElem lambda) {
    const auto delta = nth_root(F, lambda, n);
    if (!delta) throw NotApplicable("lambda has no n-th root in F_" + std::to_string(F.size()));
    const PolyRing<Field> P(F);
    return transport_factorization(P, factor_xn_minus_one_field(F, n), *delta);
}

namespace detail {

/// Quadratic Hensel step iteration: from f = g h (mod gamma) with s g + t h = 1 (mod gamma),
/// g and h monic, reach f = g h exactly.
template <CoefficientRing Ring>
std::pair<Poly<typename Ring::elem_type>, Poly<typename Ring::elem_type>> hensel_lift_pair(
    const PolyRing<Ring>& P, const Poly<typename Ring::elem_type>& f, Poly<typename Ring::elem_type> g,
    Poly<typename Ring::elem_type> h, Poly<typename Ring::elem_type> s, Poly<typename Ring::elem_type> t) {
    for (unsigned step = 0; step < 64; ++step) {
        const auto err = P.sub(f, P.mul(g, h));
        if (err.is_zero()) return {std::move(g), std::move(h)};
        auto [q, r] = P.divmod(P.mul(s, err), h);
        auto g2 = P.add(P.add(g, P.mul(t, err)), P.mul(q, g));
        auto h2 = P.add(h, r);
        const auto b = P.sub(P.add(P.mul(s, g2), P.mul(t, h2)), P.one());
        auto [c, d] = P.divmod(P.mul(s, b), h2);
        s = P.sub(s, d);
        t = P.sub(P.sub(t, P.mul(t, b)), P.mul(c, g2));
        g = std::move(g2);
        h = std::move(h2);
    }
    throw std::logic_error("Hensel lifting did not converge");
}

}  // namespace detail

/// Lifts a squarefree factorization of x^n - mu(lambda) over the residue field to the factorization
/// of x^n - lambda into monic, pairwise coprime, basic irreducible factors over R.
template <CoefficientRing Ring>
Factorization<typename Ring::elem_type> hensel_lift_factorization(const Ring& R,
                                                                  const Factorization<FieldElem>& residue_fac,
                                                                  typename Ring::elem_type lambda) {
    using Elem = typename Ring::elem_type;
    const Field& K = R.residue_field();
    const PolyRing<Field> PK(K);
    const PolyRing<Ring> P(R);
    if (!R.is_unit(lambda)) throw InvalidArgument("lambda must be a unit");

    std::uint64_t n = 0;
    for (const auto& f : residue_fac.factors) {
        if (f.multiplicity != 1) throw InvalidArgument("repeated residue factors cannot be Hensel lifted");
        if (!PK.is_monic(f.poly)) throw InvalidArgument("residue factors must be monic");
        n += static_cast<std::uint64_t>(f.poly.degree());
    }
    if (n % K.characteristic() == 0) throw InvalidArgument("length must be coprime to p");
    const auto target_residue = PK.binomial(n, R.mu(lambda));
    if (expand(PK, residue_fac) != target_residue)
        throw InvalidArgument("residue factorization does not multiply to x^n - mu(lambda)");

    Factorization<Elem> out;
    out.unit = R.one();
    auto remaining = P.binomial(n, lambda);
    for (std::size_t i = 0; i + 1 < residue_fac.factors.size(); ++i) {
        const auto& gbar = residue_fac.factors[i].poly;
        auto hbar = PK.one();
        for (std::size_t j = i + 1; j < residue_fac.factors.size(); ++j) hbar = PK.mul(hbar, residue_fac.factors[j].poly);
        auto [d, sbar, tbar] = PK.xgcd(gbar, hbar);
        if (d != PK.one()) throw InvalidArgument("residue factors are not pairwise coprime");
        auto [g, h] = detail::hensel_lift_pair(P, remaining, P.lift(gbar), P.lift(hbar), P.lift(sbar), P.lift(tbar));
        out.factors.push_back({std::move(g), 1});
        remaining = std::move(h);
    }
    if (!residue_fac.factors.empty()) out.factors.push_back({std::move(remaining), 1});
    sort_canonical(P, out.factors);
    return out;
}

/// Monic polynomials over a chain ring are pairwise coprime iff their residues are.
template <CoefficientRing Ring>
bool pairwise_coprime(const Ring& R, const std::vector<Poly<typename Ring::elem_type>>& fs) {
    const PolyRing<Ring> P(R);
    const PolyRing<Field> PK(R.residue_field());
    for (const auto& f : fs)
        if (!P.is_monic(f)) throw InvalidArgument("pairwise_coprime expects monic polynomials");
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = i + 1; j < fs.size(); ++j)
            if (PK.gcd(P.residue(fs[i]), P.residue(fs[j])) != PK.one()) return false;
    return true;
}

/// x^n - lambda over a chain ring with gcd(n, p) = 1: the residue factorization of x^n - mu(lambda),
/// Hensel lifted. Throws NotApplicable when mu(lambda) has no n-th root or p divides n.
template <CoefficientRing Ring>
Factorization<typename Ring::elem_type> factor_xn_minus_lambda_lifted(const Ring& R, std::uint64_t n,
                                                                      typename Ring::elem_type lambda) {
    const Field& K = R.residue_field();
    if (n % K.characteristic() == 0) throw NotApplicable("length divisible by p: repeated residue factors");
    const auto residue = factor_xn_minus_lambda_field(K, n, R.mu(lambda));
    return hensel_lift_factorization(R, residue, lambda);
}

}  // namespace ccr
