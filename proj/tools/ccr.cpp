// Command-line front end: factor, chaincodes, verify.
//
// Exit codes: 0 success, 1 usage or parse error, 2 hypothesis fails (no root),
// 3 resource cap exceeded, 4 a verification claim failed.

#include <iomanip>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "ccr/chain_quotient.hpp"
#include "ccr/factor.hpp"
#include "ccr/io.hpp"
#include "ccr/verify.hpp"

namespace {

struct Options {
    bool json = false;
    std::uint64_t cap = ccr::Caps::ring;
};

template <typename Ring>
ccr::Factorization<typename Ring::elem_type> factor_over(const Ring& R, std::uint64_t n, typename Ring::elem_type lambda);

template <>
ccr::Factorization<ccr::FieldElem> factor_over(const ccr::Field& F, std::uint64_t n, ccr::FieldElem lambda) {
    return ccr::factor_xn_minus_lambda_field(F, n, lambda);
}

template <>
ccr::Factorization<ccr::RingElem> factor_over(const ccr::ChainRing& R, std::uint64_t n, ccr::RingElem lambda) {
    if (R.nilpotency() > 1) return ccr::factor_xn_minus_lambda_lifted(R, n, lambda);
    // With e = 1 the ring is its residue field; factor there and carry the result back.
    const ccr::Field& K = R.residue_field();
    const auto fac = ccr::factor_xn_minus_lambda_field(K, n, R.mu(lambda));
    ccr::Factorization<ccr::RingElem> out{R.lift(fac.unit), {}};
    for (const auto& f : fac.factors) {
        ccr::Poly<ccr::RingElem> g;
        for (const auto c : f.poly.coeffs) g.coeffs.push_back(R.lift(c));
        out.factors.push_back({std::move(g), f.multiplicity});
    }
    return out;
}

int run_factor(const std::string& ring_spec, std::uint64_t n, const std::string& lambda_text, const Options& opt) {
    if (n == 0) throw ccr::InvalidArgument("n must be positive");
    const auto any = ccr::parse_ring_spec(ring_spec, opt.cap);
    return std::visit(
        [&](const auto& R) {
            const auto lambda = ccr::parse_element(R, lambda_text);
            if (!R.is_unit(lambda)) throw ccr::InvalidArgument("lambda must be a unit");
            const auto fac = factor_over(R, n, lambda);
            if (opt.json) {
                const ccr::json out{{"ring", ccr::format_ring_spec(R)},
                                    {"n", n},
                                    {"lambda", ccr::element_to_json(R, lambda)},
                                    {"factorization", ccr::factorization_to_json(R, fac)},
                                    {"text", ccr::format_factorization(R, fac)}};
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << "x^" << n << " - " << ccr::element_to_string(R, lambda) << " = "
                          << ccr::format_factorization(R, fac) << "\n";
            }
            return 0;
        },
        any);
}

int run_chaincodes(std::uint64_t p, unsigned e, unsigned r, unsigned s, const std::string& alpha_text,
                   const std::string& beta_text, const Options& opt) {
    const auto R = ccr::make_chain_ring(ccr::ChainFamily::galois, p, e, r, opt.cap);
    const auto alpha = ccr::parse_element(R, alpha_text);
    const auto beta = ccr::parse_element(R, beta_text);
    const auto cq = ccr::chain_quotient_build(R, s, alpha, beta, opt.cap);
    const ccr::PolyRing<ccr::ChainRing> P(R);
    const std::uint64_t chain = cq.chain_length();
    const std::string pi_text = ccr::format_polynomial(R, cq.quotient.to_poly(cq.pi), false);

    auto cardinality = [&](std::uint64_t i) -> ccr::BigInt {
        return boost::multiprecision::pow(ccr::BigInt(p), static_cast<unsigned>(r * (chain - i)));
    };
    if (opt.json) {
        ccr::json codes = ccr::json::array();
        for (std::uint64_t i = 0; i <= chain; ++i)
            codes.push_back({{"i", i},
                             {"generator", "(" + pi_text + ")^" + std::to_string(i)},
                             {"log_p_cardinality", r * (chain - i)},
                             {"cardinality", ccr::to_string(cardinality(i))}});
        const ccr::json out{{"ring", ccr::format_ring_spec(R)},
                            {"s", s},
                            {"n", cq.length()},
                            {"alpha", ccr::element_to_json(R, alpha)},
                            {"beta", ccr::element_to_json(R, beta)},
                            {"lambda", ccr::element_to_json(R, cq.quotient.lambda())},
                            {"alpha0", ccr::element_to_json(R, cq.alpha0)},
                            {"pi", ccr::polynomial_to_json(R, cq.quotient.to_poly(cq.pi))},
                            {"ideal_count", chain + 1},
                            {"codes", codes}};
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "ring " << ccr::format_ring_spec(R) << ", length " << cq.length() << ", x^" << cq.length() << " - "
              << ccr::element_to_string(R, cq.quotient.lambda()) << "\n";
    std::cout << "alpha_0 = " << ccr::element_to_string(R, cq.alpha0) << ", pi = " << pi_text << ", " << chain + 1
              << " ideals\n";
    std::cout << std::setw(6) << "i" << "  " << std::left << std::setw(24) << "generator" << std::right << "  cardinality\n";
    for (std::uint64_t i = 0; i <= chain; ++i) {
        std::cout << std::setw(6) << i << "  " << std::left << std::setw(24) << ("pi^" + std::to_string(i)) << std::right
                  << "  " << p << "^" << r * (chain - i) << " = " << cardinality(i) << "\n";
    }
    return 0;
}

int run_verify(const std::string& suite, const Options& opt) {
    const auto reports = ccr::verify::run_suite(suite);
    bool all = true;
    for (const auto& rep : reports) all &= rep.passed();
    if (opt.json) {
        ccr::json claims = ccr::json::array();
        for (const auto& rep : reports) claims.push_back(ccr::verify::report_to_json(rep));
        std::cout << ccr::json{{"suite", suite}, {"passed", all}, {"claims", claims}}.dump(2) << "\n";
    } else {
        for (const auto& rep : reports) {
            std::cout << (rep.passed() ? "PASS" : "FAIL") << "  [" << rep.suite << "] " << rep.name << "  (" << rep.checks
                      << " checks, " << std::fixed << std::setprecision(2) << rep.seconds << " s)\n";
            for (const auto& note : rep.notes) std::cout << "      " << note << "\n";
            for (const auto& ce : rep.counterexamples) std::cout << "      counterexample: " << ce << "\n";
        }
        std::cout << (all ? "all claims passed" : "some claims FAILED") << "\n";
    }
    return all ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"constacyclic codes over finite fields and chain rings"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.json, "machine-readable output");
    app.add_option("--cap", opt.cap, "enumeration cap (ring and quotient sizes)");

    auto* factor = app.add_subcommand("factor", "factor x^n - lambda");
    std::string ring_spec, lambda_text = "1";
    std::uint64_t n = 0;
    factor->add_option("--ring", ring_spec, "Fq:p^r, Z:p^e, GR:p^e:r or U:p^r:e")->required();
    factor->add_option("--n", n, "length")->required();
    factor->add_option("--lambda", lambda_text, "integer, g^k or coordinate list");

    auto* chain = app.add_subcommand("chaincodes", "ideals of GR(p^e, r)[x]/(x^{p^s} - alpha - beta p)");
    std::uint64_t p = 0;
    unsigned e = 1, r = 1, s = 0;
    std::string alpha_text, beta_text = "1";
    chain->add_option("--p", p, "characteristic prime")->required();
    chain->add_option("--e", e, "nilpotency index");
    chain->add_option("--r", r, "residue degree");
    chain->add_option("--s", s, "length exponent")->required();
    chain->add_option("--alpha", alpha_text, "unit alpha")->required();
    chain->add_option("--beta", beta_text, "unit beta");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    verify->add_option("--suite", suite, "lemma3.1, prop4.2, isometry, crt, section5, examples, homweight or all")->required();

    for (auto* sub : {factor, chain, verify}) {
        sub->add_flag("--json", opt.json, "machine-readable output");
        sub->add_option("--cap", opt.cap, "enumeration cap (ring and quotient sizes)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (*factor) return run_factor(ring_spec, n, lambda_text, opt);
        if (*chain) return run_chaincodes(p, e, r, s, alpha_text, beta_text, opt);
        return run_verify(suite, opt);
    } catch (const ccr::NotApplicable& ex) {
        std::cerr << "not applicable: " << ex.what() << "\n";
        return 2;
    } catch (const ccr::CapExceeded& ex) {
        std::cerr << "cap exceeded: " << ex.what() << "\n";
        return 3;
    } catch (const ccr::InvalidArgument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
}
