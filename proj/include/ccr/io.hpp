#pragma once

/**
 * @file io.hpp
 * @brief Ring descriptors, element expressions, human-readable printing and JSON serialization.
 *
 * Ring descriptors: `Fq:p^r`, `Z:p^e`, `GR:p^e:r`, `U:p^r:e`.
 * Element expressions: an integer, `g^k` (power of the canonical primitive element, lifted to the
 * Teichmüller set in a chain ring), or a bracketed coordinate list.
 */

#include <cstdint>
#include <regex>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "ccr/chain_quotient.hpp"
#include "ccr/chainring.hpp"
#include "ccr/codes.hpp"
#include "ccr/common.hpp"
#include "ccr/factor.hpp"
#include "ccr/ffield.hpp"
#include "ccr/polynomial.hpp"

namespace ccr {

using json = nlohmann::json;

/// A parsed ring descriptor: either a field or a chain ring.
using AnyRing = std::variant<Field, ChainRing>;

inline AnyRing parse_ring_spec(const std::string& spec, std::uint64_t cap = Caps::ring) {
    static const std::regex fq(R"(Fq:(\d+)\^(\d+))");
    static const std::regex z(R"(Z:(\d+)\^(\d+))");
    static const std::regex gr(R"(GR:(\d+)\^(\d+):(\d+))");
    static const std::regex u(R"(U:(\d+)\^(\d+):(\d+))");
    std::smatch m;
    auto num = [&](std::size_t i) -> std::uint64_t {
        const auto v = std::stoull(m[i].str());
        if (v > 1'000'000) throw InvalidArgument("parameter out of range in ring descriptor: " + spec);
        return v;
    };
    auto small = [&](std::size_t i) { return static_cast<unsigned>(num(i)); };
    if (std::regex_match(spec, m, fq)) return make_field(num(1), small(2), std::min(cap, Caps::field));
    if (std::regex_match(spec, m, z)) return make_chain_ring(ChainFamily::galois, num(1), small(2), 1, cap);
    if (std::regex_match(spec, m, gr)) return make_chain_ring(ChainFamily::galois, num(1), small(2), small(3), cap);
    if (std::regex_match(spec, m, u)) return make_chain_ring(ChainFamily::u_adic, num(1), small(3), small(2), cap);
    throw InvalidArgument("unrecognized ring descriptor '" + spec + "' (expected Fq:p^r, Z:p^e, GR:p^e:r or U:p^r:e)");
}

inline std::string format_ring_spec(const Field& F) {
    return "Fq:" + std::to_string(F.characteristic()) + "^" + std::to_string(F.degree());
}
inline std::string format_ring_spec(const ChainRing& R) {
    const auto p = std::to_string(R.characteristic_prime());
    const auto e = std::to_string(R.nilpotency());
    const auto r = std::to_string(R.residue_degree());
    if (R.family() == ChainFamily::u_adic) return "U:" + p + "^" + r + ":" + e;
    if (R.residue_degree() == 1) return "Z:" + p + "^" + e;
    return "GR:" + p + "^" + e + ":" + r;
}
inline std::string format_ring_spec(const AnyRing& R) {
    return std::visit([](const auto& ring) { return format_ring_spec(ring); }, R);
}

// ---------------------------------------------------------------------------------------------
// Elements

inline json element_to_json(const Field& F, FieldElem a) {
    const auto c = F.coeffs(a);
    if (F.degree() == 1) return c[0];
    return c;
}
inline json element_to_json(const ChainRing& R, RingElem a) {
    const auto c = R.coords(a);
    if (R.family() == ChainFamily::galois) {
        if (R.residue_degree() == 1) return c[0];
        return c;
    }
    json out = json::array();
    for (const auto idx : c) out.push_back(element_to_json(R.residue_field(), R.residue_field().element(idx)));
    return out;
}

inline std::vector<std::int64_t> json_int_list(const json& j) {
    std::vector<std::int64_t> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw InvalidArgument("expected an integer in coordinate list, got " + v.dump());
        out.push_back(v.get<std::int64_t>());
    }
    return out;
}

inline FieldElem element_from_json(const Field& F, const json& j) {
    if (j.is_number_integer()) return F.from_int(j.get<std::int64_t>());
    if (j.is_array()) {
        const auto c = json_int_list(j);
        return F.from_coeffs(c);
    }
    throw InvalidArgument("cannot read a field element from " + j.dump());
}
inline RingElem element_from_json(const ChainRing& R, const json& j) {
    if (j.is_number_integer()) return R.from_int(j.get<std::int64_t>());
    if (!j.is_array()) throw InvalidArgument("cannot read a ring element from " + j.dump());
    if (R.family() == ChainFamily::galois) {
        const auto c = json_int_list(j);
        return R.from_coords(c);
    }
    std::vector<std::int64_t> c;
    for (const auto& v : j) c.push_back(static_cast<std::int64_t>(element_from_json(R.residue_field(), v).idx));
    return R.from_coords(c);
}

namespace detail {
inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\n");
    return s.substr(b, e - b + 1);
}
inline FieldElem primitive_power(const Field& F, std::int64_t k) { return F.exp(k); }
inline RingElem primitive_power(const ChainRing& R, std::int64_t k) { return R.lift(R.residue_field().exp(k)); }
}  // namespace detail

/// Parses an element expression: integer, `g^k`, `-g^k` or a bracketed coordinate list.
template <typename Ring>
typename Ring::elem_type parse_element(const Ring& R, const std::string& text) {
    const std::string s = detail::trim(text);
    static const std::regex integer(R"([+-]?\d+)");
    static const std::regex power(R"((-?)g\^(-?\d+))");
    std::smatch m;
    try {
        if (std::regex_match(s, integer)) return R.from_int(std::stoll(s));
        if (std::regex_match(s, m, power)) {
            const auto a = detail::primitive_power(R, std::stoll(m[2].str()));
            return m[1].length() > 0 ? R.neg(a) : a;
        }
        if (!s.empty() && s.front() == '[') return element_from_json(R, json::parse(s));
    } catch (const json::exception& ex) {
        throw InvalidArgument("malformed element expression '" + s + "': " + ex.what());
    } catch (const std::out_of_range&) {
        throw InvalidArgument("integer out of range in element expression '" + s + "'");
    }
    throw InvalidArgument("malformed element expression '" + s + "'");
}

/// Integer value of a when a lies in the image of Z, else nullopt.
inline std::optional<std::int64_t> as_integer(const Field& F, FieldElem a) {
    if (!F.in_prime_field(a)) return std::nullopt;
    return F.coeffs(a)[0];
}
inline std::optional<std::int64_t> as_integer(const ChainRing& R, RingElem a) {
    const auto c = R.coords(a);
    for (std::size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0) return std::nullopt;
    if (R.family() == ChainFamily::galois) return c[0];
    return as_integer(R.residue_field(), R.residue_field().element(static_cast<std::uint64_t>(c[0])));
}

inline std::string element_to_string(const Field& F, FieldElem a) {
    if (const auto k = as_integer(F, a)) return std::to_string(*k);
    return "g^" + std::to_string(F.log(a));
}
inline std::string element_to_string(const ChainRing& R, RingElem a) {
    if (const auto k = as_integer(R, a)) return std::to_string(*k);
    return element_to_json(R, a).dump();
}

// ---------------------------------------------------------------------------------------------
// Polynomials and factorizations

/// Human form, highest degree first; `spaced` inserts " + " between terms.
template <CoefficientRing Ring>
std::string format_polynomial(const Ring& R, const Poly<typename Ring::elem_type>& f, bool spaced = true) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t i = f.coeffs.size(); i-- > 0;) {
        const auto c = f.coeffs[i];
        if (c == R.zero()) continue;
        if (!out.empty()) out += spaced ? " + " : "+";
        const auto k = as_integer(R, c);
        std::string coeff = element_to_string(R, c);
        std::string mono = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
        if (i == 0) {
            out += coeff;
        } else if (c == R.one()) {
            out += mono;
        } else {
            out += k ? coeff + mono : coeff + "*" + mono;
        }
    }
    return out;
}

template <CoefficientRing Ring>
json polynomial_to_json(const Ring& R, const Poly<typename Ring::elem_type>& f) {
    json out = json::array();
    for (const auto& c : f.coeffs) out.push_back(element_to_json(R, c));
    return out;
}

/// `(x+24)(x^2+x+1)(x^6+x^3+1)`, with `^m` for multiplicities above one.
template <CoefficientRing Ring>
std::string format_factorization(const Ring& R, const Factorization<typename Ring::elem_type>& fac) {
    std::string out;
    if (fac.unit != R.one()) out += element_to_string(R, fac.unit) + "*";
    for (const auto& f : fac.factors) {
        out += "(" + format_polynomial(R, f.poly, false) + ")";
        if (f.multiplicity > 1) out += "^" + std::to_string(f.multiplicity);
    }
    if (fac.factors.empty()) out += "1";
    return out;
}

template <CoefficientRing Ring>
json factorization_to_json(const Ring& R, const Factorization<typename Ring::elem_type>& fac) {
    json factors = json::array();
    for (const auto& f : fac.factors)
        factors.push_back({{"poly", polynomial_to_json(R, f.poly)}, {"mult", f.multiplicity}});
    return {{"unit", element_to_json(R, fac.unit)}, {"factors", factors}};
}

// ---------------------------------------------------------------------------------------------
// Codes

inline std::string to_string(const BigInt& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

template <CoefficientRing Ring>
json code_to_json(const ConstaCode<Ring>& C) {
    const Ring& R = C.ambient.base();
    json rows = json::array();
    for (const auto& row : C.canonical_matrix) {
        json r = json::array();
        for (const auto& c : row) r.push_back(element_to_json(R, c));
        rows.push_back(std::move(r));
    }
    return {{"ring", format_ring_spec(R)},
            {"n", C.ambient.length()},
            {"lambda", element_to_json(R, C.ambient.lambda())},
            {"canonical_matrix", rows},
            {"cardinality", to_string(C.cardinality())}};
}

}  // namespace ccr
