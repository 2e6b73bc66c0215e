// Acceptance run: one PASS/FAIL line per criterion, with wall-clock limits where they apply.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "ccr/verify.hpp"

namespace {

struct Criterion {
    std::string id;
    std::string title;
    std::vector<std::pair<std::string, std::string>> claims;  // (suite, claim name)
    std::optional<double> limit_seconds;
};

}  // namespace

int main() {
    using ccr::verify::find_claim;
    using ccr::verify::run_claim;
    const std::vector<Criterion> criteria{
        {"AC1", "x^90 - 1 and x^90 - lambda over F_27",
         {{"examples", "x^90 - 1 over F_27"}, {"examples", "x^90 - lambda over F_27, thirteen lambdas"}}, 1.0},
        {"AC2", "length 9 and 18 codes over Z_25", {{"examples", "length 9 and 18 codes over Z_25"}}, 5.0},
        {"AC3", "length 27 codes over Z_9", {{"examples", "length 27 codes over Z_9"}}, 10.0},
        {"AC4", "field n-th roots vs brute force",
         {{"lemma3.1", "nth_root existence matches brute force"}, {"lemma3.1", "gcd criterion"}}, 60.0},
        {"AC5", "chain ring root lifting vs brute force",
         {{"prop4.2", "lift_nth_root matches brute force and residue field"}}, 120.0},
        {"AC6", "equivalence map is an isometric isomorphism", {{"isometry", "psi is an isometric ring isomorphism"}},
         std::nullopt},
        {"AC7", "chain structure of length p^s codes",
         {{"section5", "chain structure of R[x]/(x^{p^s} - alpha - beta p)"}}, std::nullopt},
        {"AC8", "CRT split and negacyclic applicability",
         {{"crt", "CRT split identities"}, {"prop4.2", "nu_0^2 = -1 exists iff congruence rule"}}, std::nullopt},
        {"AC9", "homogeneous weight axioms",
         {{"homweight", "homogeneous weight axioms"}, {"homweight", "ideal lattice is the gamma chain"}}, std::nullopt},
    };

    bool all = true;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        std::uint64_t checks = 0;
        std::vector<std::string> problems;
        for (const auto& [suite, name] : c.claims) {
            const auto rep = run_claim(find_claim(suite, name));
            ok &= rep.passed();
            checks += rep.checks;
            for (const auto& ce : rep.counterexamples) problems.push_back(rep.name + ": " + ce);
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.limit_seconds && seconds >= *c.limit_seconds) {
            ok = false;
            problems.push_back("time limit " + std::to_string(*c.limit_seconds) + " s exceeded");
        }
        all &= ok;
        std::cout << c.id << " " << (ok ? "PASS" : "FAIL") << "  " << c.title << "  (" << checks << " checks, "
                  << std::fixed << std::setprecision(3) << seconds << " s";
        if (c.limit_seconds) std::cout << ", limit " << std::setprecision(0) << *c.limit_seconds << " s";
        std::cout << ")" << std::endl;
        for (const auto& p : problems) std::cout << "    " << p << "\n";
    }
    return all ? 0 : 1;
}
