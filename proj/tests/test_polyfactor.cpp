#include <gtest/gtest.h>

#include <random>

#include "ccr/factor.hpp"
#include "ccr/io.hpp"

using namespace ccr;

namespace {

template <typename Ring>
Poly<typename Ring::elem_type> random_poly(const PolyRing<Ring>& P, std::size_t deg, std::mt19937_64& rng) {
    std::vector<typename Ring::elem_type> c(deg + 1);
    for (auto& a : c) a = P.base().element(rng() % P.base().size());
    return P.from_coeffs(c);
}

}  // namespace

TEST(Poly, DivisionIdentityRandom) {
    std::mt19937_64 rng(5);
    const Field F = make_field(3, 2);
    const PolyRing<Field> P(F);
    for (int k = 0; k < 300; ++k) {
        const auto f = random_poly(P, rng() % 12, rng);
        auto g = random_poly(P, rng() % 6, rng);
        if (g.is_zero()) continue;
        const auto [q, r] = P.divmod(f, g);
        EXPECT_EQ(P.add(P.mul(q, g), r), f);
        EXPECT_TRUE(r.is_zero() || r.degree() < g.degree());
        const auto [d, s, t] = P.xgcd(f, g);
        EXPECT_EQ(P.add(P.mul(s, f), P.mul(t, g)), d);
    }
}

TEST(Poly, MonicDivisionOverChainRing) {
    std::mt19937_64 rng(6);
    const auto R = make_chain_ring(ChainFamily::galois, 2, 3, 2);
    const PolyRing<ChainRing> P(R);
    for (int k = 0; k < 200; ++k) {
        const auto f = random_poly(P, rng() % 10, rng);
        auto g = random_poly(P, 1 + rng() % 4, rng);
        g.coeffs.back() = R.one();
        const auto [q, r] = P.divmod(f, g);
        EXPECT_EQ(P.add(P.mul(q, g), r), f);
    }
}

TEST(Poly, FormatsLikeMathematics) {
    const auto R = make_chain_ring(ChainFamily::galois, 5, 2, 1);
    const PolyRing<ChainRing> P(R);
    EXPECT_EQ(format_polynomial(R, P.from_ints({24, 1}), false), "x+24");
    EXPECT_EQ(format_polynomial(R, P.from_ints({1, 0, 3}), true), "3x^2 + 1");
    EXPECT_EQ(format_polynomial(R, P.zero()), "0");
}

TEST(Factor, CyclotomicCosets) {
    const auto cosets = cyclotomic_cosets(2, 7);
    ASSERT_EQ(cosets.size(), 3u);
    EXPECT_EQ(cosets[1], (std::vector<std::uint64_t>{1, 2, 4}));
}

TEST(Factor, NineOverF5) {
    const Field F = make_field(5, 1);
    const auto fac = factor_xn_minus_one_field(F, 9);
    EXPECT_EQ(format_factorization(F, fac), "(x+4)(x^2+x+1)(x^6+x^3+1)");
}

TEST(Factor, NinetyOverF27) {
    const Field F = make_field(3, 3);
    const auto fac = factor_xn_minus_one_field(F, 90);
    EXPECT_EQ(format_factorization(F, fac), "(x+1)^9(x+2)^9(x^4+x^3+x^2+x+1)^9(x^4+2x^3+x^2+2x+1)^9");
    EXPECT_EQ(expand(PolyRing<Field>(F), fac), PolyRing<Field>(F).binomial(90, F.one()));
}

TEST(Factor, TransportedBinomialOverF5) {
    const Field F = make_field(5, 1);
    const PolyRing<Field> P(F);
    const auto fac = factor_xn_minus_lambda_field(F, 2, F.from_int(4));
    EXPECT_EQ(format_factorization(F, fac), "(x+2)(x+3)");
    EXPECT_EQ(expand(P, fac), P.binomial(2, F.from_int(4)));
    EXPECT_THROW(factor_xn_minus_lambda_field(F, 2, F.from_int(2)), NotApplicable);
}

TEST(Factor, RandomProductChecksOverFields) {
    std::mt19937_64 rng(9);
    for (auto [p, r] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {2, 3}, {3, 2}, {7, 1}, {5, 2}}) {
        const Field F = make_field(p, r);
        const PolyRing<Field> P(F);
        for (int k = 0; k < 25; ++k) {
            const std::uint64_t n = 1 + rng() % 60;
            const auto lambda = F.element(1 + rng() % (F.size() - 1));
            try {
                const auto fac = factor_xn_minus_lambda_field(F, n, lambda);
                EXPECT_EQ(expand(P, fac), P.binomial(n, lambda)) << p << "^" << r << " n=" << n;
                for (const auto& f : fac.factors) EXPECT_TRUE(P.is_monic(f.poly));
            } catch (const NotApplicable&) {
                EXPECT_FALSE(nth_root(F, lambda, n).has_value());
            }
        }
    }
}

TEST(Factor, LiftedOverZ4AndZ25) {
    const auto Z4 = make_chain_ring(ChainFamily::galois, 2, 2, 1);
    EXPECT_EQ(format_factorization(Z4, factor_xn_minus_lambda_lifted(Z4, 3, Z4.one())), "(x+3)(x^2+x+1)");
    const auto Z25 = make_chain_ring(ChainFamily::galois, 5, 2, 1);
    EXPECT_EQ(format_factorization(Z25, factor_xn_minus_lambda_lifted(Z25, 9, Z25.one())), "(x+24)(x^2+x+1)(x^6+x^3+1)");
    EXPECT_THROW(factor_xn_minus_lambda_lifted(Z25, 10, Z25.one()), NotApplicable);
}

TEST(Factor, LiftedRandomProductChecks) {
    std::mt19937_64 rng(10);
    for (const auto& R : {make_chain_ring(ChainFamily::galois, 2, 4, 1), make_chain_ring(ChainFamily::galois, 3, 3, 2),
                          make_chain_ring(ChainFamily::u_adic, 2, 3, 2), make_chain_ring(ChainFamily::galois, 7, 2, 1)}) {
        const PolyRing<ChainRing> P(R);
        for (int k = 0; k < 20; ++k) {
            std::uint64_t n = 1 + rng() % 30;
            if (n % R.characteristic_prime() == 0) ++n;
            RingElem lambda;
            do lambda = R.element(rng() % R.size());
            while (!R.is_unit(lambda));
            try {
                const auto fac = factor_xn_minus_lambda_lifted(R, n, lambda);
                EXPECT_EQ(expand(P, fac), P.binomial(n, lambda));
                std::vector<Poly<RingElem>> polys;
                for (const auto& f : fac.factors) polys.push_back(f.poly);
                EXPECT_TRUE(pairwise_coprime(R, polys));
            } catch (const NotApplicable&) {
                EXPECT_FALSE(nth_root(R.residue_field(), R.mu(lambda), n).has_value());
            }
        }
    }
}
