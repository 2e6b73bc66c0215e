#pragma once

/**
 * @file codes.hpp
 * @brief Constacyclic codes as R-submodules and ideals of R[x]/(x^n - lambda).
 *
 * A code is stored through its canonical generator matrix: the Howell form over the chain ring.
 * Every pivot entry is exactly gamma^v, entries above a pivot are reduced modulo gamma^v, and
 * the rows span every codeword that vanishes on a prefix of columns using only the rows whose
 * pivot lies past that prefix. That last property makes the form unique per submodule and gives
 * |C| = prod q^{e - v_i} over the pivots.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ccr/chainring.hpp"
#include "ccr/common.hpp"
#include "ccr/ffield.hpp"
#include "ccr/polynomial.hpp"
#include "ccr/quotient.hpp"

namespace ccr {

using BigInt = boost::multiprecision::cpp_int;

template <CoefficientRing Ring>
struct ConstaCode {
    using elem_type = typename Ring::elem_type;
    using word_type = std::vector<elem_type>;

    QuotientRing<Ring> ambient;
    std::vector<word_type> generators;
    std::vector<word_type> canonical_matrix;
    std::vector<std::size_t> pivot_columns;
    std::vector<unsigned> pivot_valuations;
    /// log_p |C|.
    std::uint64_t log_p_cardinality = 0;

    BigInt cardinality() const {
        BigInt out = 1;
        const auto p = ambient.base().residue_field().characteristic();
        for (std::uint64_t i = 0; i < log_p_cardinality; ++i) out *= p;
        return out;
    }

    /// Same ambient data and same canonical matrix.
    bool same_code(const ConstaCode& other) const {
        return ambient.length() == other.ambient.length() && ambient.lambda() == other.ambient.lambda() &&
               canonical_matrix == other.canonical_matrix;
    }
};

namespace detail {

/// Howell form of the R-span of `rows`.
template <CoefficientRing Ring>
ConstaCode<Ring> howell_form(const QuotientRing<Ring>& Q, std::vector<std::vector<typename Ring::elem_type>> pool) {
    using Word = std::vector<typename Ring::elem_type>;
    const Ring& R = Q.base();
    const std::size_t n = Q.length();
    const unsigned e = R.nilpotency();

    ConstaCode<Ring> code{Q, {}, {}, {}, {}, 0};
    auto axpy = [&](Word& row, typename Ring::elem_type c, const Word& piv, std::size_t from) {
        for (std::size_t j = from; j < n; ++j) row[j] = R.sub(row[j], R.mul(c, piv[j]));
    };

    std::erase_if(pool, [&](const Word& w) { return Q.is_zero(w); });
    for (std::size_t col = 0; col < n && !pool.empty(); ++col) {
        std::size_t best = pool.size();
        unsigned best_v = e;
        for (std::size_t i = 0; i < pool.size(); ++i) {
            const unsigned v = R.valuation(pool[i][col]);
            if (v < best_v) {
                best_v = v;
                best = i;
            }
        }
        if (best == pool.size()) continue;

        Word pivot = std::move(pool[best]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best));
        const auto unit = R.divide_gamma_power(pivot[col], best_v);
        const auto unit_inv = R.inv(unit);
        for (std::size_t j = col; j < n; ++j) pivot[j] = R.mul(unit_inv, pivot[j]);

        for (auto& row : pool) {
            if (row[col] == R.zero()) continue;
            axpy(row, R.divide_gamma_power(row[col], best_v), pivot, col);
        }
        if (best_v > 0) {
            Word ann(n, R.zero());
            const auto g = R.gamma_power(e - best_v);
            for (std::size_t j = col + 1; j < n; ++j) ann[j] = R.mul(g, pivot[j]);
            pool.push_back(std::move(ann));
        }
        std::erase_if(pool, [&](const Word& w) { return Q.is_zero(w); });

        code.canonical_matrix.push_back(std::move(pivot));
        code.pivot_columns.push_back(col);
        code.pivot_valuations.push_back(best_v);
    }

    for (std::size_t i = 0; i < code.canonical_matrix.size(); ++i) {
        const std::size_t col = code.pivot_columns[i];
        const unsigned v = code.pivot_valuations[i];
        for (std::size_t k = 0; k < i; ++k) {
            auto& row = code.canonical_matrix[k];
            const auto b = row[col];
            const auto rem = R.reduce_gamma_power(b, v);
            if (b == rem) continue;
            axpy(row, R.divide_gamma_power(R.sub(b, rem), v), code.canonical_matrix[i], col);
        }
    }

    const std::uint64_t r = R.residue_field().degree();
    for (const auto v : code.pivot_valuations) code.log_p_cardinality += r * (e - v);
    return code;
}

}  // namespace detail

/// R-submodule spanned by `words` (no closure under the shift).
template <CoefficientRing Ring>
ConstaCode<Ring> module_span(const QuotientRing<Ring>& Q, const std::vector<std::vector<typename Ring::elem_type>>& words) {
    auto code = detail::howell_form(Q, words);
    code.generators = words;
    return code;
}

/// The ideal generated by `gens`: the R-span of all x^j g, 0 <= j < n.
template <CoefficientRing Ring>
ConstaCode<Ring> code_from_generators(const QuotientRing<Ring>& Q,
                                      const std::vector<std::vector<typename Ring::elem_type>>& gens) {
    std::vector<std::vector<typename Ring::elem_type>> rows;
    for (const auto& g : gens) {
        if (g.size() != Q.length()) throw InvalidArgument("generator length differs from the code length");
        auto w = g;
        for (std::size_t j = 0; j < Q.length(); ++j) {
            rows.push_back(w);
            w = Q.shift(w);
        }
    }
    auto code = detail::howell_form(Q, std::move(rows));
    code.generators = gens;
    return code;
}

template <CoefficientRing Ring>
ConstaCode<Ring> code_from_polynomials(const QuotientRing<Ring>& Q, const std::vector<Poly<typename Ring::elem_type>>& gens) {
    std::vector<std::vector<typename Ring::elem_type>> words;
    for (const auto& g : gens) words.push_back(Q.from_poly(g));
    return code_from_generators(Q, words);
}

/// Membership by reduction against the canonical rows.
template <CoefficientRing Ring>
bool contains(const ConstaCode<Ring>& C, std::vector<typename Ring::elem_type> w) {
    const Ring& R = C.ambient.base();
    const std::size_t n = C.ambient.length();
    std::size_t next = 0;
    for (std::size_t col = 0; col < n; ++col) {
        if (next < C.pivot_columns.size() && C.pivot_columns[next] == col) {
            const unsigned v = C.pivot_valuations[next];
            if (w[col] != R.zero()) {
                if (R.valuation(w[col]) < v) return false;
                const auto c = R.divide_gamma_power(w[col], v);
                const auto& row = C.canonical_matrix[next];
                for (std::size_t j = col; j < n; ++j) w[j] = R.sub(w[j], R.mul(c, row[j]));
            }
            ++next;
        } else if (w[col] != R.zero()) {
            return false;
        }
    }
    return true;
}

/// True iff the span of `words` is stable under the constacyclic shift.
template <CoefficientRing Ring>
bool is_constacyclic_closed(const QuotientRing<Ring>& Q, const std::vector<std::vector<typename Ring::elem_type>>& words) {
    const auto span = module_span(Q, words);
    for (const auto& row : span.canonical_matrix)
        if (!contains(span, Q.shift(row))) return false;
    return true;
}

template <CoefficientRing Ring>
bool is_constacyclic_closed(const ConstaCode<Ring>& C) {
    for (const auto& row : C.canonical_matrix)
        if (!contains(C, C.ambient.shift(row))) return false;
    return true;
}

/// Calls `visit(word)` once for every codeword, each written uniquely as sum c_i row_i with
/// c_i running over representatives of R / gamma^{e - v_i}.
template <CoefficientRing Ring, typename Visit>
void for_each_codeword(const ConstaCode<Ring>& C, Visit&& visit, std::uint64_t cap = Caps::enumeration) {
    if (C.cardinality() > cap) throw CapExceeded("code has more than " + std::to_string(cap) + " codewords");
    const Ring& R = C.ambient.base();
    const unsigned e = R.nilpotency();
    const std::size_t k = C.canonical_matrix.size();
    std::vector<std::vector<typename Ring::elem_type>> digits(k);
    for (std::size_t i = 0; i < k; ++i) digits[i] = R.residue_system(e - C.pivot_valuations[i]);

    std::vector<std::size_t> odometer(k, 0);
    while (true) {
        auto w = C.ambient.zero();
        for (std::size_t i = 0; i < k; ++i)
            if (odometer[i] != 0) w = C.ambient.add(w, C.ambient.scale(digits[i][odometer[i]], C.canonical_matrix[i]));
        visit(w);
        std::size_t i = 0;
        while (i < k && ++odometer[i] == digits[i].size()) odometer[i++] = 0;
        if (i == k) break;
    }
}

enum class WeightKind { hamming, homogeneous };

/// Number of codewords of each weight, indexed by weight.
template <CoefficientRing Ring>
std::vector<std::uint64_t> weight_enumerator(const ConstaCode<Ring>& C, WeightKind kind,
                                             std::uint64_t cap = Caps::enumeration) {
    std::vector<std::uint64_t> dist(1, 0);
    for_each_codeword(
        C,
        [&](const auto& w) {
            const std::uint64_t wt =
                kind == WeightKind::hamming ? C.ambient.hamming_weight(w) : C.ambient.homogeneous_weight(w);
            if (wt >= dist.size()) dist.resize(wt + 1, 0);
            ++dist[wt];
        },
        cap);
    return dist;
}

/// psi: R[x]/(x^n - lambda_1) -> R[x]/(x^n - delta^n lambda_1), f(x) -> f(delta^{-1} x).
template <CoefficientRing Ring>
class EquivMap {
public:
    using elem_type = typename Ring::elem_type;
    using word_type = std::vector<elem_type>;

    EquivMap(const QuotientRing<Ring>& source, elem_type delta)
        : source_(source),
          target_(source.base(), source.length(),
                  source.base().mul(source.lambda(), source.base().pow(delta, static_cast<std::int64_t>(source.length())))),
          delta_(delta) {
        if (!source.base().is_unit(delta)) throw InvalidArgument("delta must be a unit");
    }

    const QuotientRing<Ring>& source() const { return source_; }
    const QuotientRing<Ring>& target() const { return target_; }
    elem_type delta() const { return delta_; }

    word_type apply(const word_type& f) const { return scale_columns(f, source_.base().inv(delta_)); }
    word_type apply_inverse(const word_type& f) const { return scale_columns(f, delta_); }

    ConstaCode<Ring> apply(const ConstaCode<Ring>& C) const {
        std::vector<word_type> rows;
        for (const auto& row : C.canonical_matrix) rows.push_back(apply(row));
        auto out = module_span(target_, rows);
        out.generators.clear();
        for (const auto& g : C.generators) out.generators.push_back(apply(g));
        return out;
    }

private:
    word_type scale_columns(const word_type& f, elem_type c) const {
        const Ring& R = source_.base();
        word_type out(f.size());
        elem_type ci = R.one();
        for (std::size_t i = 0; i < f.size(); ++i) {
            out[i] = R.mul(f[i], ci);
            ci = R.mul(ci, c);
        }
        return out;
    }

    QuotientRing<Ring> source_;
    QuotientRing<Ring> target_;
    elem_type delta_;
};

/// Every ideal of Q, sorted by decreasing cardinality then canonical matrix.
template <CoefficientRing Ring>
std::vector<ConstaCode<Ring>> enumerate_all_ideals(const QuotientRing<Ring>& Q, std::uint64_t cap = Caps::enumeration) {
    using Word = std::vector<typename Ring::elem_type>;
    const Ring& R = Q.base();
    const std::size_t n = Q.length();
    const unsigned e = R.nilpotency();
    (void)Q.size(cap);

    std::map<std::vector<Word>, ConstaCode<Ring>> ideals;
    auto record = [&](ConstaCode<Ring> C) {
        auto key = C.canonical_matrix;
        ideals.try_emplace(std::move(key), std::move(C));
    };
    record(code_from_generators(Q, {Q.zero()}));

    // Every nonzero word is a unit multiple of one whose leading nonzero coordinate is gamma^v.
    const std::uint64_t q = R.size();
    for (std::size_t lead = 0; lead < n; ++lead) {
        const std::uint64_t tails = nt::ipow(q, n - lead - 1);
        for (unsigned v = 0; v < e; ++v) {
            for (std::uint64_t t = 0; t < tails; ++t) {
                Word w = Q.zero();
                w[lead] = R.gamma_power(v);
                std::uint64_t rest = t;
                for (std::size_t j = lead + 1; j < n; ++j) {
                    w[j] = R.element(rest % q);
                    rest /= q;
                }
                record(code_from_generators(Q, {w}));
            }
        }
    }

    // Close under sums.
    std::vector<ConstaCode<Ring>> work;
    for (auto& [key, C] : ideals) work.push_back(C);
    for (std::size_t i = 0; i < work.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            auto rows = work[i].canonical_matrix;
            rows.insert(rows.end(), work[j].canonical_matrix.begin(), work[j].canonical_matrix.end());
            auto S = module_span(Q, rows);
            if (ideals.find(S.canonical_matrix) == ideals.end()) {
                S.generators = rows;
                ideals.emplace(S.canonical_matrix, S);
                work.push_back(std::move(S));
            }
        }
    }

    std::vector<ConstaCode<Ring>> out;
    for (auto& [key, C] : ideals) out.push_back(std::move(C));
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) { return a.log_p_cardinality > b.log_p_cardinality; });
    return out;
}

enum class CrtVariant { cyclic, negacyclic };

/// R[x]/(x^{2m} -+ 1) = R[x]/(x^m - c_1) + R[x]/(x^m - c_2) with c_1 = -c_2; p odd, m odd.
template <CoefficientRing Ring>
class CrtSplit {
public:
    using elem_type = typename Ring::elem_type;
    using word_type = std::vector<elem_type>;

    CrtSplit(const Ring& R, std::size_t m, CrtVariant variant, elem_type c1)
        : whole_(R, 2 * m, variant == CrtVariant::cyclic ? R.one() : R.neg(R.one())),
          first_(R, m, c1),
          second_(R, m, R.neg(c1)),
          variant_(variant) {
        const PolyRing<Ring> P(R);
        const auto xm = P.monomial(R.one(), m);
        const auto inv_2c1 = R.inv(R.add(c1, c1));
        e1_ = whole_.from_poly(P.scale(inv_2c1, P.add(xm, P.constant(c1))));
        e2_ = whole_.from_poly(P.scale(R.neg(inv_2c1), P.sub(xm, P.constant(c1))));
    }

    CrtVariant variant() const { return variant_; }
    const QuotientRing<Ring>& whole() const { return whole_; }
    const QuotientRing<Ring>& first() const { return first_; }
    const QuotientRing<Ring>& second() const { return second_; }
    const word_type& e1() const { return e1_; }
    const word_type& e2() const { return e2_; }

    std::pair<word_type, word_type> forward(const word_type& w) const {
        const auto f = whole_.to_poly(w);
        return {first_.from_poly(f), second_.from_poly(f)};
    }
    word_type backward(const word_type& a, const word_type& b) const {
        return whole_.add(whole_.mul(embed(a), e1_), whole_.mul(embed(b), e2_));
    }

    /// The code of `whole` corresponding to C1 + C2.
    ConstaCode<Ring> combine(const ConstaCode<Ring>& C1, const ConstaCode<Ring>& C2) const {
        std::vector<word_type> gens;
        for (const auto& g : C1.canonical_matrix) gens.push_back(backward(g, second_.zero()));
        for (const auto& g : C2.canonical_matrix) gens.push_back(backward(first_.zero(), g));
        return code_from_generators(whole_, gens);
    }

private:
    word_type embed(const word_type& a) const {
        auto w = whole_.zero();
        std::copy(a.begin(), a.end(), w.begin());
        return w;
    }

    QuotientRing<Ring> whole_;
    QuotientRing<Ring> first_;
    QuotientRing<Ring> second_;
    CrtVariant variant_;
    word_type e1_;
    word_type e2_;
};

namespace detail {
inline std::optional<FieldElem> square_root_of_minus_one(const Field& F) { return sqrt_minus_one(F); }
inline std::optional<RingElem> square_root_of_minus_one(const ChainRing& R) {
    return lift_nth_root(R, R.neg(R.one()), 2);
}
}  // namespace detail

/// Cyclic: components x^m - 1 and x^m + 1. Negacyclic: x^m - nu_0 and x^m + nu_0 with nu_0^2 = -1,
/// NotApplicable when no such nu_0 exists.
template <CoefficientRing Ring>
CrtSplit<Ring> crt_split(const Ring& R, std::size_t m, CrtVariant variant) {
    if (R.residue_field().characteristic() == 2) throw InvalidArgument("CRT split needs 2 to be a unit (p odd)");
    if (m % 2 == 0) throw InvalidArgument("CRT split needs odd m");
    if (variant == CrtVariant::cyclic) return CrtSplit<Ring>(R, m, variant, R.one());
    const auto nu = detail::square_root_of_minus_one(R);
    if (!nu) throw NotApplicable("-1 has no square root in the coefficient ring");
    return CrtSplit<Ring>(R, m, variant, *nu);
}

}  // namespace ccr
