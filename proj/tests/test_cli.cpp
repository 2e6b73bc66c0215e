#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "ccr/io.hpp"

using namespace ccr;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(CCR_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed");
    std::string out;
    std::array<char, 4096> buf{};
    while (const auto n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST(Io, RingSpecs) {
    EXPECT_EQ(format_ring_spec(parse_ring_spec("Fq:3^3")), "Fq:3^3");
    EXPECT_EQ(format_ring_spec(parse_ring_spec("Z:5^2")), "Z:5^2");
    EXPECT_EQ(format_ring_spec(parse_ring_spec("GR:2^2:3")), "GR:2^2:3");
    EXPECT_EQ(format_ring_spec(parse_ring_spec("U:3^2:2")), "U:3^2:2");
    EXPECT_THROW(parse_ring_spec("Q:5"), InvalidArgument);
    EXPECT_THROW(parse_ring_spec("Z:6^2"), InvalidArgument);
    EXPECT_THROW(parse_ring_spec("Z:2^40"), CapExceeded);
}

TEST(Io, ElementExpressions) {
    const Field F = make_field(3, 3);
    EXPECT_EQ(parse_element(F, "-1"), F.from_int(2));
    EXPECT_EQ(parse_element(F, "g^5"), F.exp(5));
    EXPECT_EQ(parse_element(F, "-g^5"), F.neg(F.exp(5)));
    EXPECT_EQ(parse_element(F, "[0, 1, 0]"), F.from_coeffs(std::vector<std::int64_t>{0, 1, 0}));
    EXPECT_EQ(element_to_string(F, F.exp(5)), "g^5");
    EXPECT_THROW(parse_element(F, "h^2"), InvalidArgument);
    EXPECT_THROW(parse_element(F, "[1, x]"), InvalidArgument);

    const auto R = make_chain_ring(ChainFamily::galois, 5, 2, 1);
    EXPECT_EQ(parse_element(R, "g^1"), R.from_int(7));
    const auto U = make_chain_ring(ChainFamily::u_adic, 2, 2, 2);
    for (std::uint64_t i = 0; i < U.size(); ++i) {
        const auto a = U.element(i);
        EXPECT_EQ(element_from_json(U, element_to_json(U, a)), a);
    }
}

TEST(Cli, FactorExamples) {
    auto r = run("factor --ring Fq:3^3 --n 90 --lambda 1");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("(x+1)^9(x+2)^9(x^4+x^3+x^2+x+1)^9(x^4+2x^3+x^2+2x+1)^9"), std::string::npos) << r.out;
    r = run("factor --ring Z:5^2 --n 9 --lambda 1");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("(x+24)(x^2+x+1)(x^6+x^3+1)"), std::string::npos) << r.out;
    r = run("factor --ring Fq:2^1 --n 1 --lambda 1");
    EXPECT_NE(r.out.find("(x+1)"), std::string::npos) << r.out;
    r = run("factor --ring Z:5^1 --n 10 --lambda 1");
    EXPECT_EQ(r.code, 0) << r.out;
}

TEST(Cli, FactorJson) {
    const auto r = run("factor --ring Z:2^2 --n 3 --lambda 1 --json");
    ASSERT_EQ(r.code, 0);
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["text"], "(x+3)(x^2+x+1)");
    EXPECT_EQ(j["factorization"]["factors"][0]["poly"], json::parse("[3, 1]"));
    EXPECT_EQ(j["factorization"]["factors"][0]["mult"], 1);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run("factor --ring Fq:5^1 --n 2 --lambda 2").code, 2);
    EXPECT_EQ(run("factor --ring Z:5^2 --n 5 --lambda 1").code, 2);
    EXPECT_EQ(run("factor --ring Fq:2^30 --n 3").code, 3);
    EXPECT_EQ(run("factor --ring nonsense --n 3").code, 1);
    EXPECT_EQ(run("factor --n 3").code, 1);
    EXPECT_EQ(run("chaincodes --p 3 --e 2 --s 1 --alpha 2").code, 2);
    EXPECT_EQ(run("verify --suite nope").code, 1);
    EXPECT_EQ(run("").code, 1);
}

TEST(Cli, ChainCodesTable) {
    const auto r = run("chaincodes --p 3 --e 2 --r 1 --s 3 --alpha 8 --beta 1 --json");
    ASSERT_EQ(r.code, 0);
    const auto j = json::parse(r.out);
    ASSERT_EQ(j["codes"].size(), 55u);
    for (std::size_t i = 0; i < 55; ++i) EXPECT_EQ(j["codes"][i]["log_p_cardinality"], 54 - i);
    EXPECT_EQ(j["codes"][54]["cardinality"], "1");
    const auto human = run("chaincodes --p 3 --e 2 --r 1 --s 3 --alpha 8 --beta 1");
    EXPECT_NE(human.out.find("55 ideals"), std::string::npos);
    EXPECT_NE(human.out.find("3^54 = 58149737003040059690390169"), std::string::npos);
}

TEST(Cli, VerifyExamplesSuite) {
    const auto r = run("verify --suite examples --json");
    ASSERT_EQ(r.code, 0) << r.out;
    const auto j = json::parse(r.out);
    EXPECT_TRUE(j["passed"].get<bool>());
    EXPECT_EQ(j["claims"].size(), 4u);
}
