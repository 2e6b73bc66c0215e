#pragma once

/**
 * @file chain_quotient.hpp
 * @brief The ring R[x]/(x^{p^s} - (alpha + beta p)) over a Galois ring R, whose ideals are the
 *        (alpha + beta p)-constacyclic codes of length p^s.
 *
 * When alpha has a p^s-th root alpha_0, the element pi = alpha_0^{-1} x - 1 generates the maximal
 * ideal and the ideals are exactly <pi^i>, 0 <= i <= e p^s.
 */

#include <cstdint>
#include <optional>
#include <vector>

#include "ccr/chainring.hpp"
#include "ccr/codes.hpp"
#include "ccr/common.hpp"
#include "ccr/polynomial.hpp"
#include "ccr/quotient.hpp"

namespace ccr {

struct ChainQuotient {
    using word_type = std::vector<RingElem>;

    QuotientRing<ChainRing> quotient;
    unsigned s = 0;
    RingElem alpha{};
    RingElem beta{};
    RingElem alpha0{};
    word_type pi;
    word_type rho;
    /// Smallest k with pi^k = 0.
    std::uint64_t pi_nilpotency = 0;

    const ChainRing& ring() const { return quotient.base(); }
    std::uint64_t length() const { return quotient.length(); }
    std::uint64_t chain_length() const { return ring().nilpotency() * length(); }
};

/// The smallest-index-first search for a p^s-th root of alpha: the Teichmüller part is solved
/// exactly, the 1-unit part by exhaustive search over 1 + pR.
inline std::optional<RingElem> ps_th_root(const ChainRing& R, RingElem alpha, unsigned s) {
    if (R.family() != ChainFamily::galois) throw InvalidArgument("p^s-th roots are computed over Galois rings");
    if (!R.is_unit(alpha)) throw InvalidArgument("alpha must be a unit");
    const std::uint64_t p = R.characteristic_prime();
    const std::uint64_t ps = nt::ipow(p, s);
    const std::uint64_t q = R.residue_size();
    const RingElem t = R.lift(R.mu(alpha));
    const RingElem w = R.mul(alpha, R.inv(t));
    const RingElem t0 = R.pow(t, static_cast<std::int64_t>(nt::mod_inverse(ps % (q - 1), q - 1)));

    const FieldElem one = R.residue_field().one();
    for (std::uint64_t i = 0; i < R.size(); ++i) {
        const RingElem y = R.element(i);
        if (R.mu(y) != one) continue;
        if (R.pow(y, static_cast<std::int64_t>(ps)) == w) return R.mul(t0, y);
    }
    return std::nullopt;
}

/// Builds the quotient, alpha_0, pi and rho with pi^{p^s} = p rho. Throws NotApplicable if alpha
/// has no p^s-th root.
inline ChainQuotient chain_quotient_build(const ChainRing& R, unsigned s, RingElem alpha, RingElem beta,
                                          std::uint64_t cap = Caps::ring) {
    if (R.family() != ChainFamily::galois) throw InvalidArgument("chain quotients are built over Galois rings");
    if (!R.is_unit(alpha) || !R.is_unit(beta)) throw InvalidArgument("alpha and beta must be units");
    const std::uint64_t p = R.characteristic_prime();
    const std::uint64_t n = nt::checked_pow(p, s, cap);
    const RingElem lambda = R.add(alpha, R.mul(R.from_int(static_cast<std::int64_t>(p)), beta));

    const auto root = ps_th_root(R, alpha, s);
    if (!root) throw NotApplicable("alpha has no p^s-th root in R");

    ChainQuotient cq{QuotientRing<ChainRing>(R, n, lambda), s, alpha, beta, *root, {}, {}, 0};
    const auto& Q = cq.quotient;
    cq.pi = Q.sub(Q.scale(R.inv(*root), Q.x()), Q.one());

    const auto pi_ps = Q.pow(cq.pi, n);
    if (R.nilpotency() == 1) {
        cq.rho = Q.constant(R.mul(R.inv(alpha), beta));
    } else {
        cq.rho = Q.zero();
        for (std::size_t i = 0; i < n; ++i) {
            if (R.valuation(pi_ps[i]) < 1) throw std::logic_error("pi^{p^s} is not divisible by p");
            cq.rho[i] = R.divide_gamma_power(pi_ps[i], 1);
        }
    }
    if (Q.scale(R.gamma_power(1), cq.rho) != pi_ps) throw std::logic_error("pi^{p^s} != p rho");

    auto power = Q.one();
    std::uint64_t k = 0;
    while (!Q.is_zero(power)) {
        power = Q.mul(power, cq.pi);
        ++k;
        if (k > cq.chain_length() + n) throw std::logic_error("pi is not nilpotent");
    }
    cq.pi_nilpotency = k;
    return cq;
}

/// Coefficients a_i in R of f = sum a_i pi^i: f(alpha_0 (y + 1)) written in y.
inline std::vector<RingElem> pi_basis_coefficients(const ChainQuotient& cq, const std::vector<RingElem>& f) {
    const PolyRing<ChainRing> P(cq.ring());
    const auto g = P.taylor_shift(P.substitute_scale(cq.quotient.to_poly(f), cq.alpha0), cq.ring().one());
    std::vector<RingElem> out(cq.length(), cq.ring().zero());
    std::copy(g.coeffs.begin(), g.coeffs.end(), out.begin());
    return out;
}

/// f is a unit iff the pi-basis constant term is a unit. That term is f(alpha_0).
inline bool unit_in_chain_quotient(const ChainQuotient& cq, const std::vector<RingElem>& f) {
    const ChainRing& R = cq.ring();
    RingElem acc = R.zero();
    for (std::size_t i = f.size(); i-- > 0;) acc = R.add(R.mul(acc, cq.alpha0), f[i]);
    return R.is_unit(acc);
}

/// C_i = <pi^i>, with |C_i| = p^{r (e p^s - i)}.
inline ConstaCode<ChainRing> chain_code(const ChainQuotient& cq, std::uint64_t i) {
    if (i > cq.chain_length()) throw InvalidArgument("chain index out of range");
    return code_from_generators(cq.quotient, {cq.quotient.pow(cq.pi, i)});
}

}  // namespace ccr
