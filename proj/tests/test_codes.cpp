#include <gtest/gtest.h>

#include <random>
#include <set>

#include "ccr/chain_quotient.hpp"
#include "ccr/codes.hpp"
#include "ccr/io.hpp"
#include "ccr/oracle.hpp"

using namespace ccr;

namespace {

ChainRing Z(std::uint64_t p, unsigned e) { return make_chain_ring(ChainFamily::galois, p, e, 1); }

template <typename Ring>
std::set<std::uint64_t> word_set(const ConstaCode<Ring>& C) {
    std::set<std::uint64_t> out;
    for_each_codeword(C, [&](const auto& w) { out.insert(C.ambient.index(w)); });
    return out;
}

template <typename Ring>
std::set<std::set<std::uint64_t>> ideal_sets(const QuotientRing<Ring>& Q) {
    std::set<std::set<std::uint64_t>> out;
    for (const auto& C : enumerate_all_ideals(Q)) out.insert(word_set(C));
    return out;
}

}  // namespace

TEST(Quotient, ReductionAndIndexing) {
    const auto R = Z(3, 2);
    const QuotientRing<ChainRing> Q(R, 3, R.from_int(2));
    const PolyRing<ChainRing> P(R);
    EXPECT_EQ(Q.from_poly(P.monomial(R.one(), 3)), Q.constant(R.from_int(2)));
    EXPECT_EQ(Q.shift(Q.x()), Q.from_poly(P.monomial(R.one(), 2)));
    for (std::uint64_t i = 0; i < 729; i += 37) EXPECT_EQ(Q.index(Q.element(i)), i);
}

TEST(Codes, IdealCountsMatchBruteForce) {
    const auto Z4 = Z(2, 2);
    const QuotientRing<ChainRing> A(Z4, 2, Z4.from_int(-1));
    EXPECT_EQ(enumerate_all_ideals(A).size(), 5u);
    const auto Z9 = Z(3, 2);
    const QuotientRing<ChainRing> B(Z9, 3, Z9.from_int(2));
    EXPECT_EQ(enumerate_all_ideals(B).size(), 7u);

    const Field F2 = make_field(2, 1);
    const QuotientRing<Field> C(F2, 3, F2.one());
    const QuotientRing<ChainRing> D(Z4, 3, Z4.one());
    const auto U = make_chain_ring(ChainFamily::u_adic, 2, 2, 1);
    const QuotientRing<ChainRing> E(U, 2, U.one());
    for (const auto& Q : {A, D, E}) {
        std::set<std::set<std::uint64_t>> brute;
        for (const auto& I : oracle::quotient_ideals(Q)) brute.insert(I);
        EXPECT_EQ(ideal_sets(Q), brute) << format_ring_spec(Q.base()) << " n=" << Q.length();
    }
    std::set<std::set<std::uint64_t>> brute;
    for (const auto& I : oracle::quotient_ideals(C)) brute.insert(I);
    EXPECT_EQ(ideal_sets(C), brute);
}

TEST(Codes, CanonicalMatrixDoesNotDependOnGenerators) {
    std::mt19937_64 rng(17);
    const auto R = make_chain_ring(ChainFamily::galois, 2, 3, 1);
    const QuotientRing<ChainRing> Q(R, 4, R.from_int(5));
    for (int k = 0; k < 40; ++k) {
        std::vector<std::vector<RingElem>> gens(1 + rng() % 2, Q.zero());
        for (auto& g : gens)
            for (auto& c : g) c = R.element(rng() % R.size());
        const auto C = code_from_generators(Q, gens);
        std::vector<std::vector<RingElem>> words;
        std::uint64_t count = 0;
        for_each_codeword(C, [&](const auto& w) {
            if (rng() % 3 == 0) words.push_back(w);
            ++count;
        });
        words.insert(words.end(), C.canonical_matrix.begin(), C.canonical_matrix.end());
        std::shuffle(words.begin(), words.end(), rng);
        const auto D = code_from_generators(Q, words);
        EXPECT_EQ(C.canonical_matrix, D.canonical_matrix);
        EXPECT_EQ(BigInt(count), C.cardinality());
        EXPECT_TRUE(is_constacyclic_closed(C));
    }
}

TEST(Codes, EquivalenceMapExample) {
    const Field F = make_field(5, 1);
    const QuotientRing<Field> Q(F, 3, F.one());
    const EquivMap<Field> psi(Q, F.from_int(3));
    EXPECT_EQ(psi.target().lambda(), F.from_int(2));
    const PolyRing<Field> P(F);
    EXPECT_EQ(psi.apply(Q.sub(Q.x(), Q.one())), psi.target().from_poly(P.from_ints({-1, 2})));
    EXPECT_THROW(EquivMap<Field>(Q, F.zero()), InvalidArgument);
}

TEST(Codes, WeightEnumeratorOfRepetitionCode) {
    const Field F = make_field(3, 1);
    const QuotientRing<Field> Q(F, 4, F.one());
    const PolyRing<Field> P(F);
    const auto C = code_from_polynomials(Q, {P.from_ints({1, 1, 1, 1})});
    EXPECT_EQ(weight_enumerator(C, WeightKind::hamming), (std::vector<std::uint64_t>{1, 0, 0, 0, 2}));
}

// The literal x^3 - 8 over Z_9 is 8 = -1 + 3*0, so beta = 0: not a chain ring.
TEST(ChainQuotient, LiteralXCubedMinusEightIsNotAChainRing) {
    const auto R = Z(3, 2);
    const QuotientRing<ChainRing> Q(R, 3, R.from_int(8));
    EXPECT_EQ(enumerate_all_ideals(Q).size(), 16u);
    const PolyRing<ChainRing> P(R);
    std::vector<std::uint64_t> sizes;
    for (std::uint64_t i = 0; i <= 6; ++i)
        sizes.push_back(code_from_polynomials(Q, {P.pow(P.from_ints({-1, -1}), i)}).log_p_cardinality);
    EXPECT_EQ(sizes, (std::vector<std::uint64_t>{6, 4, 3, 2, 1, 0, 0}));
    EXPECT_THROW(chain_quotient_build(R, 1, R.from_int(8), R.zero()), InvalidArgument);
}

TEST(ChainQuotient, LengthTwentySevenOverZ9) {
    const auto R = Z(3, 2);
    const auto cq = chain_quotient_build(R, 3, R.from_int(8), R.one());
    EXPECT_EQ(cq.chain_length(), 54u);
    EXPECT_EQ(cq.pi_nilpotency, 54u);
    EXPECT_EQ(cq.alpha0, R.from_int(8));
    for (const std::uint64_t i : {0u, 1u, 17u, 53u, 54u}) EXPECT_EQ(chain_code(cq, i).log_p_cardinality, 54 - i);
    EXPECT_EQ(chain_code(cq, 54).cardinality(), BigInt(1));
    EXPECT_EQ(to_string(chain_code(cq, 0).cardinality()), "58149737003040059690390169");
    EXPECT_THROW(chain_code(cq, 55), InvalidArgument);
}

TEST(ChainQuotient, UnitCriterionAgreesWithPowers) {
    std::mt19937_64 rng(23);
    const auto R = Z(2, 2);
    const auto cq = chain_quotient_build(R, 2, R.one(), R.one());
    for (std::uint64_t i = 0; i < cq.quotient.size(); ++i) {
        const auto f = cq.quotient.element(i);
        EXPECT_EQ(unit_in_chain_quotient(cq, f), oracle::is_unit_by_powers(cq.quotient, f));
    }
}

TEST(ChainQuotient, NoRootMeansNotApplicable) {
    const auto R = Z(3, 2);
    EXPECT_THROW(chain_quotient_build(R, 1, R.from_int(2), R.one()), NotApplicable);
    EXPECT_THROW(chain_quotient_build(make_chain_ring(ChainFamily::u_adic, 3, 2, 1), 1, RingElem{}, RingElem{}),
                 InvalidArgument);
}

TEST(Crt, NegacyclicSplitOverZ25) {
    std::mt19937_64 rng(29);
    const auto R = Z(5, 2);
    const auto split = crt_split(R, 3, CrtVariant::negacyclic);
    EXPECT_EQ(split.whole().lambda(), R.from_int(-1));
    const auto& W = split.whole();
    for (int k = 0; k < 200; ++k) {
        std::vector<RingElem> w(6);
        for (auto& c : w) c = R.element(rng() % 25);
        const auto [a, b] = split.forward(w);
        EXPECT_EQ(split.backward(a, b), w);
    }
    EXPECT_EQ(W.add(split.e1(), split.e2()), W.one());
    EXPECT_THROW(crt_split(Z(3, 2), 3, CrtVariant::negacyclic), NotApplicable);
    EXPECT_THROW(crt_split(Z(2, 2), 3, CrtVariant::cyclic), InvalidArgument);
    EXPECT_THROW(crt_split(R, 4, CrtVariant::cyclic), InvalidArgument);
}
