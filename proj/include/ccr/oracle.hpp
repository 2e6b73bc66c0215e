#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force reference computations used to check the library against exhaustive search.
 *
 * The oracles multiply in coordinates (schoolbook products reduced by the modulus) instead of the
 * log/Zech and product tables of Field and ChainRing, so an error in those tables cannot hide
 * behind an identical error in the check.
 */

#include <cstdint>
#include <set>
#include <vector>

#include "ccr/chainring.hpp"
#include "ccr/ffield.hpp"
#include "ccr/quotient.hpp"

namespace ccr::oracle {

using Coords = std::vector<std::int64_t>;

/// F_{p^r} as F_p[x]/(modulus), elements as coordinate vectors.
class FieldArith {
public:
    explicit FieldArith(const Field& F) : F_(F), p_(static_cast<std::int64_t>(F.characteristic())), mod_(F.modulus()) {}

    Coords to(FieldElem a) const { return F_.coeffs(a); }
    FieldElem from(const Coords& c) const { return F_.from_coeffs(c); }

    Coords mul(const Coords& a, const Coords& b) const {
        const std::size_t r = mod_.size() - 1;
        std::vector<std::int64_t> prod(2 * r, 0);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
        for (std::size_t k = prod.size(); k-- > r;) {
            const auto c = prod[k];
            if (c == 0) continue;
            for (std::size_t i = 0; i <= r; ++i) prod[k - r + i] = ((prod[k - r + i] - c * mod_[i]) % p_ + p_) % p_;
        }
        prod.resize(r);
        return prod;
    }
    Coords add(const Coords& a, const Coords& b) const {
        Coords c(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) c[i] = (a[i] + b[i]) % p_;
        return c;
    }
    Coords one() const {
        Coords c(mod_.size() - 1, 0);
        c[0] = 1;
        return c;
    }
    Coords pow(Coords a, std::uint64_t k) const {
        Coords out = one();
        for (std::uint64_t i = 0; i < k; ++i) out = mul(out, a);
        return out;
    }

private:
    Field F_;
    std::int64_t p_;
    std::vector<std::int64_t> mod_;
};

/// Galois rings as Z_{p^e}[x]/(modulus), u-adic rings as K[u]/(u^e); elements as coordinates.
class RingArith {
public:
    explicit RingArith(const ChainRing& R) : R_(R), K_(R.residue_field()) {}

    Coords to(RingElem a) const { return R_.coords(a); }
    RingElem from(const Coords& c) const { return R_.from_coords(c); }

    Coords mul(const Coords& a, const Coords& b) const {
        if (R_.family() == ChainFamily::galois) {
            const auto pe = static_cast<std::int64_t>(nt::ipow(R_.characteristic_prime(), R_.nilpotency()));
            const auto& mod = R_.modulus();
            const std::size_t r = mod.size() - 1;
            std::vector<std::int64_t> prod(2 * r, 0);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % pe;
            for (std::size_t k = prod.size(); k-- > r;) {
                const auto c = prod[k];
                if (c == 0) continue;
                for (std::size_t i = 0; i <= r; ++i) prod[k - r + i] = ((prod[k - r + i] - c * mod[i]) % pe + pe) % pe;
            }
            prod.resize(r);
            return prod;
        }
        const std::size_t e = R_.nilpotency();
        std::vector<Coords> acc(e, K_.to(R_.residue_field().zero()));
        for (std::size_t i = 0; i < e; ++i)
            for (std::size_t j = 0; i + j < e; ++j) {
                const auto ai = K_.to(R_.residue_field().element(static_cast<std::uint64_t>(a[i])));
                const auto bj = K_.to(R_.residue_field().element(static_cast<std::uint64_t>(b[j])));
                acc[i + j] = K_.add(acc[i + j], K_.mul(ai, bj));
            }
        Coords out(e);
        for (std::size_t i = 0; i < e; ++i) out[i] = K_.from(acc[i]).idx;
        return out;
    }
    RingElem mul(RingElem a, RingElem b) const { return from(mul(to(a), to(b))); }
    RingElem pow(RingElem a, std::uint64_t k) const {
        RingElem out = R_.one();
        for (std::uint64_t i = 0; i < k; ++i) out = mul(out, a);
        return out;
    }

private:
    ChainRing R_;
    FieldArith K_;
};

/// The set of n-th powers of nonzero elements of F (indices).
inline std::set<std::uint64_t> field_nth_powers(const Field& F, std::uint64_t n) {
    const FieldArith A(F);
    std::set<std::uint64_t> out;
    for (std::uint64_t i = 1; i < F.size(); ++i) out.insert(A.from(A.pow(A.to(F.element(i)), n)).idx);
    return out;
}

/// Units of R found by searching for an inverse.
inline std::vector<RingElem> ring_units(const ChainRing& R) {
    const RingArith A(R);
    std::vector<RingElem> out;
    for (std::uint64_t i = 0; i < R.size(); ++i) {
        const auto a = R.element(i);
        for (std::uint64_t j = 0; j < R.size(); ++j) {
            if (A.mul(a, R.element(j)) == R.one()) {
                out.push_back(a);
                break;
            }
        }
    }
    return out;
}

/// The set of n-th powers of units of R (indices).
inline std::set<std::uint64_t> ring_nth_powers(const ChainRing& R, const std::vector<RingElem>& units, std::uint64_t n) {
    const RingArith A(R);
    std::set<std::uint64_t> out;
    for (const auto u : units) out.insert(A.pow(u, n).idx);
    return out;
}

/// All ideals of R, found as the distinct principal ideals {r a : r in R} closed under sums.
inline std::vector<std::set<std::uint64_t>> ring_ideals(const ChainRing& R) {
    const RingArith A(R);
    std::set<std::set<std::uint64_t>> ideals;
    for (std::uint64_t i = 0; i < R.size(); ++i) {
        std::set<std::uint64_t> I;
        for (std::uint64_t j = 0; j < R.size(); ++j) I.insert(A.mul(R.element(i), R.element(j)).idx);
        ideals.insert(std::move(I));
    }
    std::vector<std::set<std::uint64_t>> list(ideals.begin(), ideals.end());
    for (std::size_t a = 0; a < list.size(); ++a) {
        for (std::size_t b = 0; b < a; ++b) {
            std::set<std::uint64_t> S;
            for (const auto x : list[a])
                for (const auto y : list[b]) S.insert(R.add(R.element(x), R.element(y)).idx);
            if (ideals.insert(S).second) list.push_back(std::move(S));
        }
    }
    return list;
}

/// Invertibility in a finite ring by following f, f^2, ...: a unit returns to 1 within |Q| steps,
/// a nilpotent element reaches 0. Anything else (possible only in non-local rings) is a non-unit
/// whose powers cycle away from 1, which the step bound detects.
template <CoefficientRing Ring>
bool is_unit_by_powers(const QuotientRing<Ring>& Q, const std::vector<typename Ring::elem_type>& f) {
    const auto one = Q.one();
    const std::uint64_t bound = Q.size(std::uint64_t{1} << 40);
    auto power = f;
    for (std::uint64_t k = 0; k < bound; ++k) {
        if (power == one) return true;
        if (Q.is_zero(power)) return false;
        power = Q.mul(power, f);
    }
    return false;
}

/// Every ideal of a small quotient as an explicit set of word indices.
template <CoefficientRing Ring>
std::vector<std::set<std::uint64_t>> quotient_ideals(const QuotientRing<Ring>& Q) {
    const std::uint64_t N = Q.size();
    std::set<std::set<std::uint64_t>> ideals;
    std::vector<std::vector<typename Ring::elem_type>> words(N);
    for (std::uint64_t i = 0; i < N; ++i) words[i] = Q.element(i);
    for (std::uint64_t i = 0; i < N; ++i) {
        std::set<std::uint64_t> I;
        for (std::uint64_t j = 0; j < N; ++j) I.insert(Q.index(Q.mul(words[i], words[j])));
        ideals.insert(std::move(I));
    }
    std::vector<std::set<std::uint64_t>> list(ideals.begin(), ideals.end());
    for (std::size_t a = 0; a < list.size(); ++a) {
        for (std::size_t b = 0; b < a; ++b) {
            std::set<std::uint64_t> S;
            for (const auto x : list[a])
                for (const auto y : list[b]) S.insert(Q.index(Q.add(words[x], words[y])));
            if (ideals.insert(S).second) list.push_back(std::move(S));
        }
    }
    return list;
}

}  // namespace ccr::oracle
