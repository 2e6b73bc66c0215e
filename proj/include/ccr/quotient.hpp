#pragma once

/**
 * @file quotient.hpp
 * @brief The ambient ring R[x]/(x^n - lambda) of lambda-constacyclic codes of length n.
 *
 * Words are coefficient vectors of length n; multiplication reduces x^n to lambda.
 */

#include <cstdint>
#include <vector>

#include "ccr/common.hpp"
#include "ccr/polynomial.hpp"

namespace ccr {

template <CoefficientRing Ring>
class QuotientRing {
public:
    using elem_type = typename Ring::elem_type;
    using word_type = std::vector<elem_type>;

    QuotientRing(Ring ring, std::size_t n, elem_type lambda) : ring_(std::move(ring)), n_(n), lambda_(lambda) {
        if (n == 0) throw InvalidArgument("code length must be positive");
        if (!ring_.is_unit(lambda)) throw InvalidArgument("the constacyclic parameter must be a unit");
    }

    const Ring& base() const { return ring_; }
    std::size_t length() const { return n_; }
    elem_type lambda() const { return lambda_; }

    /// |R|^n, or CapExceeded beyond `cap`.
    std::uint64_t size(std::uint64_t cap = Caps::enumeration) const {
        return nt::checked_pow(ring_.size(), n_, cap);
    }

    word_type zero() const { return word_type(n_, ring_.zero()); }
    word_type one() const { return constant(ring_.one()); }
    word_type constant(elem_type c) const {
        auto w = zero();
        w[0] = c;
        return w;
    }
    word_type x() const { return from_poly(PolyRing<Ring>(ring_).x()); }

    /// Reduction of a polynomial of any degree: x^{kn + j} -> lambda^k x^j.
    word_type from_poly(const Poly<elem_type>& f) const {
        auto w = zero();
        elem_type lam_k = ring_.one();
        for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
            if (i > 0 && i % n_ == 0) lam_k = ring_.mul(lam_k, lambda_);
            w[i % n_] = ring_.add(w[i % n_], ring_.mul(lam_k, f.coeffs[i]));
        }
        return w;
    }
    Poly<elem_type> to_poly(const word_type& w) const { return PolyRing<Ring>(ring_).from_coeffs(w); }

    word_type add(const word_type& a, const word_type& b) const {
        word_type out(n_);
        for (std::size_t i = 0; i < n_; ++i) out[i] = ring_.add(a[i], b[i]);
        return out;
    }
    word_type sub(const word_type& a, const word_type& b) const {
        word_type out(n_);
        for (std::size_t i = 0; i < n_; ++i) out[i] = ring_.sub(a[i], b[i]);
        return out;
    }
    word_type neg(const word_type& a) const {
        word_type out(n_);
        for (std::size_t i = 0; i < n_; ++i) out[i] = ring_.neg(a[i]);
        return out;
    }
    word_type scale(elem_type c, const word_type& a) const {
        word_type out(n_);
        for (std::size_t i = 0; i < n_; ++i) out[i] = ring_.mul(c, a[i]);
        return out;
    }
    word_type mul(const word_type& a, const word_type& b) const {
        auto out = zero();
        for (std::size_t i = 0; i < n_; ++i) {
            if (a[i] == ring_.zero()) continue;
            for (std::size_t j = 0; j < n_; ++j) {
                if (b[j] == ring_.zero()) continue;
                auto t = ring_.mul(a[i], b[j]);
                std::size_t k = i + j;
                if (k >= n_) {
                    k -= n_;
                    t = ring_.mul(t, lambda_);
                }
                out[k] = ring_.add(out[k], t);
            }
        }
        return out;
    }
    word_type pow(word_type a, std::uint64_t k) const {
        auto result = one();
        while (k > 0) {
            if (k & 1) result = mul(result, a);
            k >>= 1;
            if (k > 0) a = mul(a, a);
        }
        return result;
    }

    /// (lambda c_{n-1}, c_0, ..., c_{n-2}), i.e. multiplication by x.
    word_type shift(const word_type& c) const {
        word_type out(n_);
        out[0] = ring_.mul(lambda_, c[n_ - 1]);
        for (std::size_t i = 1; i < n_; ++i) out[i] = c[i - 1];
        return out;
    }

    bool is_zero(const word_type& w) const {
        for (const auto& c : w)
            if (c != ring_.zero()) return false;
        return true;
    }

    /// Mixed-radix enumeration order, coordinate 0 least significant.
    word_type element(std::uint64_t index) const {
        word_type w(n_);
        const std::uint64_t q = ring_.size();
        for (std::size_t i = 0; i < n_; ++i) {
            w[i] = ring_.element(index % q);
            index /= q;
        }
        return w;
    }
    std::uint64_t index(const word_type& w) const {
        std::uint64_t idx = 0;
        for (std::size_t i = n_; i-- > 0;) idx = idx * ring_.size() + ring_.index(w[i]);
        return idx;
    }

    std::size_t hamming_weight(const word_type& w) const {
        std::size_t k = 0;
        for (const auto& c : w)
            if (c != ring_.zero()) ++k;
        return k;
    }
    std::uint64_t homogeneous_weight(const word_type& w) const {
        std::uint64_t k = 0;
        for (const auto& c : w) k += ring_.hom_weight(c);
        return k;
    }

private:
    Ring ring_;
    std::size_t n_;
    elem_type lambda_;
};

}  // namespace ccr
