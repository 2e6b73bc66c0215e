#pragma once

/**
 * @file common.hpp
 * @brief Error types and small integer number theory shared by every module.
 */

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace ccr {

/// Malformed or out-of-domain input (bad prime, wrong family, non-unit where a unit is required).
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured size cap (field size, ring size, enumeration size) would be exceeded.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The mathematical hypothesis of an operation fails, e.g. no n-th root exists.
class NotApplicable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Default size caps.
struct Caps {
    static constexpr std::uint64_t field = std::uint64_t{1} << 16;
    static constexpr std::uint64_t ring = std::uint64_t{1} << 20;
    static constexpr std::uint64_t enumeration = std::uint64_t{1} << 20;
    /// Rings up to this size get full addition/multiplication tables.
    static constexpr std::uint64_t ring_tables = std::uint64_t{1} << 10;
};

namespace nt {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Base^exp, throwing CapExceeded once the value passes `limit`.
inline std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t limit) {
    std::uint64_t result = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && result > limit / base) throw CapExceeded("power exceeds cap " + std::to_string(limit));
        result *= base;
    }
    return result;
}

inline std::uint64_t ipow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t result = 1;
    while (exp > 0) {
        if (exp & 1) result *= base;
        base *= base;
        exp >>= 1;
    }
    return result;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

/// Returns (g, x, y) with a*x + b*y = g = gcd(a, b).
inline std::tuple<std::int64_t, std::int64_t, std::int64_t> egcd(std::int64_t a, std::int64_t b) {
    std::int64_t x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        const std::int64_t q = a / b;
        std::tie(a, b) = std::make_pair(b, a - q * b);
        std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
        std::tie(y0, y1) = std::make_pair(y1, y0 - q * y1);
    }
    if (a < 0) return {-a, -x0, -y0};
    return {a, x0, y0};
}

/// Inverse of a modulo m; requires gcd(a, m) = 1.
inline std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
    if (m == 1) return 0;
    auto [g, x, y] = egcd(static_cast<std::int64_t>(a % m), static_cast<std::int64_t>(m));
    (void)y;
    if (g != 1) throw InvalidArgument("not invertible modulo " + std::to_string(m));
    std::int64_t r = x % static_cast<std::int64_t>(m);
    if (r < 0) r += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(r);
}

/// Distinct prime divisors, ascending.
inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

/// Multiplicative order of q modulo m (m >= 1, gcd(q, m) = 1).
inline std::uint64_t multiplicative_order(std::uint64_t q, std::uint64_t m) {
    if (m == 1) return 1;
    std::uint64_t k = 1, acc = q % m;
    while (acc != 1) {
        acc = mulmod(acc, q, m);
        ++k;
    }
    return k;
}

/// Valuation of n at prime p (n > 0).
inline unsigned valuation(std::uint64_t n, std::uint64_t p) {
    unsigned v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

}  // namespace nt
}  // namespace ccr
