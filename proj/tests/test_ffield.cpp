#include <gtest/gtest.h>

#include <random>
#include <set>

#include "ccr/ffield.hpp"
#include "ccr/oracle.hpp"

using namespace ccr;

namespace {

// Irreducibility by exhaustive search for a root of each candidate factor degree is overkill for
// r <= 3; for these sizes the absence of roots already decides it.
bool has_root(const std::vector<std::int64_t>& f, std::int64_t p) {
    for (std::int64_t x = 0; x < p; ++x) {
        std::int64_t v = 0;
        for (std::size_t i = f.size(); i-- > 0;) v = (v * x + f[i]) % p;
        if (v == 0) return true;
    }
    return false;
}

}  // namespace

TEST(Field, PrimeFieldGenerators) {
    EXPECT_EQ(make_field(5, 1).generator(), make_field(5, 1).from_int(2));
    EXPECT_EQ(make_field(7, 1).generator(), make_field(7, 1).from_int(3));
    EXPECT_EQ(make_field(2, 1).generator(), make_field(2, 1).one());
    const Field F = make_field(5, 1);
    EXPECT_EQ(F.order(F.from_int(2)), 4u);
}

TEST(Field, ModulusIsMonicIrreducible) {
    for (auto [p, r] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
        const Field F = make_field(p, r);
        const auto& m = F.modulus();
        ASSERT_EQ(m.size(), r + 1);
        EXPECT_EQ(m.back(), 1);
        EXPECT_FALSE(has_root(m, static_cast<std::int64_t>(p))) << p << "^" << r;
    }
}

TEST(Field, GeneratorHasFullOrderByDirectPowers) {
    for (auto [p, r] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 4}, {3, 3}, {5, 2}, {13, 1}}) {
        const Field F = make_field(p, r);
        const oracle::FieldArith A(F);
        auto x = A.one();
        std::set<std::vector<std::int64_t>> seen;
        for (std::uint64_t k = 0; k + 1 < F.size(); ++k) {
            seen.insert(x);
            x = A.mul(x, A.to(F.generator()));
        }
        EXPECT_EQ(seen.size(), F.size() - 1);
        EXPECT_EQ(x, A.one());
    }
}

TEST(Field, ArithmeticAgreesWithCoordinateProducts) {
    const Field F = make_field(3, 3);
    const oracle::FieldArith A(F);
    for (std::uint64_t i = 0; i < F.size(); ++i)
        for (std::uint64_t j = 0; j < F.size(); ++j) {
            const auto a = F.element(i), b = F.element(j);
            ASSERT_EQ(F.mul(a, b), A.from(A.mul(A.to(a), A.to(b))));
            ASSERT_EQ(F.add(a, b), A.from(A.add(A.to(a), A.to(b))));
        }
}

TEST(Field, InverseLogExpRoundTrip) {
    const Field F = make_field(2, 5);
    for (std::uint64_t i = 1; i < F.size(); ++i) {
        const auto a = F.element(i);
        EXPECT_EQ(F.mul(a, F.inv(a)), F.one());
        EXPECT_EQ(F.exp(static_cast<std::int64_t>(F.log(a))), a);
    }
    EXPECT_THROW(F.inv(F.zero()), InvalidArgument);
}

TEST(Field, NthRootExamples) {
    const Field F5 = make_field(5, 1);
    EXPECT_EQ(nth_root(F5, F5.from_int(4), 2), F5.from_int(2));
    EXPECT_FALSE(nth_root(F5, F5.from_int(2), 2).has_value());
    const Field F13 = make_field(13, 1);
    EXPECT_EQ(sqrt_minus_one(F13), F13.from_int(5));
    EXPECT_EQ(sqrt_minus_one(F5), F5.from_int(2));
    EXPECT_FALSE(sqrt_minus_one(make_field(7, 1)).has_value());
    EXPECT_TRUE(minus_one_is_square(3, 2));
    EXPECT_FALSE(minus_one_is_square(3, 3));
}

TEST(Field, NthRootPropertyRandom) {
    std::mt19937_64 rng(11);
    for (auto [p, r] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 6}, {3, 4}, {7, 2}, {101, 1}}) {
        const Field F = make_field(p, r);
        for (int k = 0; k < 200; ++k) {
            const auto a = F.element(1 + rng() % (F.size() - 1));
            const std::uint64_t n = 1 + rng() % 30;
            const auto root = nth_root(F, F.pow(a, static_cast<std::int64_t>(n)), n);
            ASSERT_TRUE(root.has_value());
            EXPECT_EQ(F.pow(*root, static_cast<std::int64_t>(n)), F.pow(a, static_cast<std::int64_t>(n)));
        }
    }
}

TEST(Field, RejectsBadParameters) {
    EXPECT_THROW(make_field(4, 1), InvalidArgument);
    EXPECT_THROW(make_field(3, 0), InvalidArgument);
    EXPECT_THROW(make_field(2, 17), CapExceeded);
}
