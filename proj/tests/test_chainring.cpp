#include <gtest/gtest.h>

#include <random>
#include <set>

#include "ccr/chainring.hpp"
#include "ccr/io.hpp"
#include "ccr/oracle.hpp"

using namespace ccr;

namespace {

ChainRing Z(std::uint64_t p, unsigned e) { return make_chain_ring(ChainFamily::galois, p, e, 1); }

std::set<std::int64_t> as_ints(const ChainRing& R, const std::vector<RingElem>& xs) {
    std::set<std::int64_t> out;
    for (const auto x : xs) out.insert(*as_integer(R, x));
    return out;
}

}  // namespace

TEST(ChainRing, SizesAndInvariants) {
    const auto R = make_chain_ring(ChainFamily::galois, 2, 3, 2);
    EXPECT_EQ(R.size(), 64u);
    EXPECT_EQ(R.residue_size(), 4u);
    EXPECT_EQ(R.nilpotency(), 3u);
    const auto U = make_chain_ring(ChainFamily::u_adic, 3, 2, 2);
    EXPECT_EQ(U.size(), 81u);
    EXPECT_EQ(U.residue_size(), 9u);
    EXPECT_EQ(U.valuation(U.gamma_power(1)), 1u);
    EXPECT_TRUE(U.is_zero(U.mul(U.gamma_power(1), U.gamma_power(1))));
}

TEST(ChainRing, TablesMatchCoordinateArithmetic) {
    for (const auto& R : {Z(3, 2), Z(2, 3), make_chain_ring(ChainFamily::galois, 2, 2, 3),
                          make_chain_ring(ChainFamily::u_adic, 2, 3, 2), make_chain_ring(ChainFamily::u_adic, 5, 2, 1)}) {
        const oracle::RingArith A(R);
        for (std::uint64_t i = 0; i < R.size(); ++i)
            for (std::uint64_t j = 0; j < R.size(); ++j)
                ASSERT_EQ(R.mul(R.element(i), R.element(j)), A.mul(R.element(i), R.element(j)))
                    << format_ring_spec(R) << " " << i << "*" << j;
    }
}

TEST(ChainRing, TeichmullerSetOfZ25) {
    const auto R = Z(5, 2);
    EXPECT_EQ(as_ints(R, teichmuller(R)), (std::set<std::int64_t>{0, 1, 7, 24, 18}));
    const auto xi = R.teichmuller_generator();
    EXPECT_EQ(R.pow(xi, 2), R.from_int(24));
    EXPECT_EQ(R.pow(xi, 4), R.one());
}

TEST(ChainRing, TeichmullerElementsAreFixedByQthPower) {
    for (const auto& R : {Z(3, 3), make_chain_ring(ChainFamily::galois, 2, 3, 2), make_chain_ring(ChainFamily::galois, 3, 2, 2)}) {
        const auto T = teichmuller(R);
        ASSERT_EQ(T.size(), R.residue_size());
        std::set<FieldElem> residues;
        for (const auto t : T) {
            EXPECT_EQ(R.pow(t, static_cast<std::int64_t>(R.residue_size())), t);
            residues.insert(R.mu(t));
        }
        EXPECT_EQ(residues.size(), T.size());
    }
}

TEST(ChainRing, PAdicDigits) {
    const auto R = Z(3, 2);
    const auto rep = p_adic_repr(R, R.from_int(5));
    ASSERT_EQ(rep.digits.size(), 2u);
    EXPECT_EQ(rep.digits[0], R.from_int(8));
    EXPECT_EQ(rep.digits[1], R.from_int(8));
    EXPECT_EQ(p_adic_reconstruct(R, rep), R.from_int(5));
}

TEST(ChainRing, HomogeneousWeightValues) {
    const auto Z4 = Z(2, 2);
    EXPECT_EQ(Z4.hom_weight(Z4.from_int(0)), 0u);
    EXPECT_EQ(Z4.hom_weight(Z4.from_int(1)), 1u);
    EXPECT_EQ(Z4.hom_weight(Z4.from_int(3)), 1u);
    EXPECT_EQ(Z4.hom_weight(Z4.from_int(2)), 2u);
    const auto Z9 = Z(3, 2);
    std::uint64_t total = 0;
    for (std::uint64_t i = 0; i < 9; ++i) total += Z9.hom_weight(Z9.element(i));
    EXPECT_EQ(total, 18u);
    EXPECT_EQ(Z9.hom_weight(Z9.from_int(3)), 3u);
    EXPECT_EQ(Z9.hom_weight(Z9.from_int(2)), 2u);
}

TEST(ChainRing, LiftedRoots) {
    const auto Z9 = Z(3, 2);
    EXPECT_EQ(lift_nth_root(Z9, Z9.from_int(4), 2), Z9.from_int(2));
    const auto Z25 = Z(5, 2);
    EXPECT_EQ(lift_nth_root(Z25, Z25.from_int(24), 2), Z25.from_int(7));
    EXPECT_FALSE(lift_nth_root(Z9, Z9.from_int(8), 2).has_value());
    EXPECT_THROW(lift_nth_root(Z9, Z9.from_int(4), 3), InvalidArgument);
    EXPECT_THROW(lift_nth_root(Z9, Z9.from_int(3), 2), InvalidArgument);
}

TEST(ChainRing, ResidueMapIsHomomorphismOnRandomPairs) {
    std::mt19937_64 rng(3);
    const auto R = make_chain_ring(ChainFamily::galois, 3, 4, 2);  // 6561 elements, no tables
    const Field& K = R.residue_field();
    for (int k = 0; k < 2000; ++k) {
        const auto a = R.element(rng() % R.size());
        const auto b = R.element(rng() % R.size());
        ASSERT_EQ(R.mu(R.mul(a, b)), K.mul(R.mu(a), R.mu(b)));
        ASSERT_EQ(R.mu(R.add(a, b)), K.add(R.mu(a), R.mu(b)));
        if (R.is_unit(a)) ASSERT_EQ(R.mul(a, R.inv(a)), R.one());
    }
}

TEST(ChainRing, KernelOrderByCounting) {
    const auto R = make_chain_ring(ChainFamily::galois, 2, 2, 2);
    std::uint64_t count = 0;
    for (const auto u : oracle::ring_units(R))
        if (R.mu(u) == R.residue_field().one()) ++count;
    EXPECT_EQ(count, kernel_mu_star_order(R));
    EXPECT_EQ(count, 4u);
}

TEST(ChainRing, RejectsBadParameters) {
    EXPECT_THROW(make_chain_ring(ChainFamily::galois, 6, 2, 1), InvalidArgument);
    EXPECT_THROW(make_chain_ring(ChainFamily::galois, 3, 0, 1), InvalidArgument);
    EXPECT_THROW(make_chain_ring(ChainFamily::galois, 2, 30, 1), CapExceeded);
    EXPECT_THROW(p_adic_repr(make_chain_ring(ChainFamily::u_adic, 2, 2, 1), RingElem{}), InvalidArgument);
}
