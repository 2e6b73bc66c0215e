#pragma once

/**
 * @file chainring.hpp
 * @brief Finite chain rings: Galois rings GR(p^e, r) and F_{p^r}[u]/(u^e).
 *
 * Both families share one representation. An element is a short coordinate vector packed into an
 * index with the first coordinate most significant:
 *
 *  - galois: r coordinates in Z_{p^e} against the basis 1, xi, ..., xi^{r-1}, where xi is a root of
 *    the basic primitive modulus (so xi has order p^r - 1 and reduces to the residue field's
 *    canonical generator). For r = 1 this is Z_{p^e} and indices are the integers themselves.
 *  - u_adic: e coordinates in F_{p^r} (the coefficients of 1, u, ..., u^{e-1}).
 *
 * The maximal ideal is generated by gamma = p (galois) or gamma = u (u_adic). Rings with at most
 * Caps::ring_tables elements precompute their operation tables.
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ccr/common.hpp"
#include "ccr/ffield.hpp"

namespace ccr {

enum class ChainFamily { galois, u_adic };

struct RingElem {
    std::uint32_t idx = 0;
    friend constexpr auto operator<=>(const RingElem&, const RingElem&) = default;
};

/// Digits of the p-adic expansion a = sum digits[i] p^i with Teichmüller digits.
struct PAdicRepr {
    std::vector<RingElem> digits;
    /// Teichmüller exponent of each digit: digit = xi^k, or -1 for the zero digit.
    std::vector<std::int64_t> exponents;
};

namespace detail {

inline constexpr std::size_t kMaxCoords = 20;
using Coords = std::array<std::int64_t, kMaxCoords>;

struct ChainTables {
    ChainFamily family = ChainFamily::galois;
    std::uint64_t p = 0;
    unsigned e = 0;
    unsigned r = 0;
    std::uint64_t q = 0;     // residue field size
    std::uint64_t size = 0;  // p^{er}
    std::int64_t pe = 0;     // p^e, the coordinate modulus of the galois family
    unsigned len = 0;        // number of coordinates
    std::uint64_t radix = 0;
    std::vector<std::uint32_t> weight;  // radix^{len-1-i}
    std::vector<std::int64_t> modulus;  // galois: monic, ascending, degree r
    std::vector<FieldElem> basis_image;  // galois: mu(xi^i)
    std::optional<Field> residue;

    // Dense tables, present when size <= Caps::ring_tables.
    std::vector<std::uint32_t> add, mul, neg, inv;
    std::vector<std::uint8_t> val;

    std::vector<std::uint32_t> teich;  // indexed by residue element index
    std::uint32_t xi = 0;
};

}  // namespace detail

class ChainRing;
ChainRing make_chain_ring(ChainFamily family, std::uint64_t p, unsigned e, unsigned r,
                          std::uint64_t cap = Caps::ring);

class ChainRing {
public:
    using elem_type = RingElem;

    ChainFamily family() const { return t_->family; }
    std::uint64_t characteristic_prime() const { return t_->p; }
    unsigned nilpotency() const { return t_->e; }
    unsigned residue_degree() const { return t_->r; }
    std::uint64_t residue_size() const { return t_->q; }
    std::uint64_t size() const { return t_->size; }
    const Field& residue_field() const { return *t_->residue; }
    /// Galois family: the basic primitive modulus over Z_{p^e} (ascending, monic).
    const std::vector<std::int64_t>& modulus() const { return t_->modulus; }
    bool has_tables() const { return !t_->mul.empty(); }

    RingElem zero() const { return {0}; }
    RingElem one() const { return from_int(1); }
    RingElem from_int(std::int64_t k) const {
        detail::Coords c{};
        if (t_->family == ChainFamily::galois) {
            c[0] = ((k % t_->pe) + t_->pe) % t_->pe;
        } else {
            c[0] = residue_field().from_int(k).idx;
        }
        return encode(c);
    }
    /// Element from raw coordinates: Z_{p^e} residues (galois) or residue-field indices (u_adic).
    RingElem from_coords(std::span<const std::int64_t> coords) const {
        if (coords.size() > t_->len) throw InvalidArgument("too many coordinates for ring element");
        detail::Coords c{};
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (t_->family == ChainFamily::galois) {
                c[i] = ((coords[i] % t_->pe) + t_->pe) % t_->pe;
            } else {
                if (coords[i] < 0 || static_cast<std::uint64_t>(coords[i]) >= t_->q)
                    throw InvalidArgument("residue-field index out of range");
                c[i] = coords[i];
            }
        }
        return encode(c);
    }
    std::vector<std::int64_t> coords(RingElem a) const {
        const auto c = decode(a);
        return {c.begin(), c.begin() + t_->len};
    }
    RingElem element(std::uint64_t index) const { return {static_cast<std::uint32_t>(index)}; }
    std::uint64_t index(RingElem a) const { return a.idx; }

    bool is_zero(RingElem a) const { return a.idx == 0; }
    bool is_unit(RingElem a) const { return valuation(a) == 0; }

    RingElem add(RingElem a, RingElem b) const {
        if (has_tables()) return {t_->add[a.idx * t_->size + b.idx]};
        return add_slow(a, b);
    }
    RingElem neg(RingElem a) const {
        if (has_tables()) return {t_->neg[a.idx]};
        return neg_slow(a);
    }
    RingElem sub(RingElem a, RingElem b) const { return add(a, neg(b)); }
    RingElem mul(RingElem a, RingElem b) const {
        if (has_tables()) return {t_->mul[a.idx * t_->size + b.idx]};
        return mul_slow(a, b);
    }
    RingElem inv(RingElem a) const {
        if (!is_unit(a)) throw InvalidArgument("element is not a unit");
        if (has_tables()) return {t_->inv[a.idx]};
        return inv_slow(a);
    }
    RingElem div(RingElem a, RingElem b) const { return mul(a, inv(b)); }
    RingElem pow(RingElem a, std::int64_t k) const {
        if (k < 0) {
            a = inv(a);
            k = -k;
        }
        RingElem result = one();
        while (k > 0) {
            if (k & 1) result = mul(result, a);
            a = mul(a, a);
            k >>= 1;
        }
        return result;
    }

    /// gamma-adic valuation; v(0) = e.
    unsigned valuation(RingElem a) const {
        if (has_tables()) return t_->val[a.idx];
        return valuation_slow(a);
    }
    RingElem gamma_power(unsigned v) const {
        if (v >= t_->e) return zero();
        detail::Coords c{};
        if (t_->family == ChainFamily::galois) {
            c[0] = static_cast<std::int64_t>(nt::ipow(t_->p, v));
        } else {
            c[v] = residue_field().one().idx;
        }
        return encode(c);
    }
    /// The canonical b with gamma^v * b = a; requires v(a) >= v.
    RingElem divide_gamma_power(RingElem a, unsigned v) const {
        if (v == 0) return a;
        if (valuation(a) < v) throw InvalidArgument("element is not divisible by gamma^" + std::to_string(v));
        if (v >= t_->e) return zero();
        auto c = decode(a);
        if (t_->family == ChainFamily::galois) {
            const auto pv = static_cast<std::int64_t>(nt::ipow(t_->p, v));
            for (unsigned i = 0; i < t_->len; ++i) c[i] /= pv;
        } else {
            for (unsigned i = 0; i < t_->len; ++i) c[i] = i + v < t_->len ? c[i + v] : 0;
        }
        return encode(c);
    }
    /// Canonical representative of a + gamma^v R.
    RingElem reduce_gamma_power(RingElem a, unsigned v) const {
        if (v >= t_->e) return a;
        auto c = decode(a);
        if (t_->family == ChainFamily::galois) {
            const auto pv = static_cast<std::int64_t>(nt::ipow(t_->p, v));
            for (unsigned i = 0; i < t_->len; ++i) c[i] %= pv;
        } else {
            for (unsigned i = v; i < t_->len; ++i) c[i] = 0;
        }
        return encode(c);
    }
    /// All canonical representatives of R / gamma^k R, in index order.
    std::vector<RingElem> residue_system(unsigned k) const {
        std::vector<RingElem> out;
        for (std::uint64_t i = 0; i < t_->size; ++i)
            if (reduce_gamma_power({static_cast<std::uint32_t>(i)}, k).idx == i)
                out.push_back({static_cast<std::uint32_t>(i)});
        return out;
    }

    /// Reduction onto the residue field.
    FieldElem mu(RingElem a) const {
        const auto c = decode(a);
        const Field& K = residue_field();
        if (t_->family == ChainFamily::u_adic) return {static_cast<std::uint32_t>(c[0])};
        FieldElem out = K.zero();
        for (unsigned i = 0; i < t_->len; ++i)
            out = K.add(out, K.mul(K.from_int(c[i]), t_->basis_image[i]));
        return out;
    }
    /// Canonical section of mu: the Teichmüller representative (galois) or the constant (u_adic).
    RingElem lift(FieldElem a) const { return {t_->teich[a.idx]}; }
    /// Primitive (p^r - 1)-st root of unity xi (galois family).
    RingElem teichmuller_generator() const {
        require_galois();
        return {t_->xi};
    }

    /// Normalized homogeneous weight: 0, q^{e-1} on the minimal ideal, (q - 1) q^{e-2} elsewhere.
    std::uint64_t hom_weight(RingElem a) const {
        const unsigned v = valuation(a);
        const unsigned e = t_->e;
        if (v >= e) return 0;
        if (e == 1) return 1;
        if (v == e - 1) return nt::ipow(t_->q, e - 1);
        return (t_->q - 1) * nt::ipow(t_->q, e - 2);
    }

    friend bool operator==(const ChainRing& a, const ChainRing& b) {
        return a.t_->family == b.t_->family && a.t_->p == b.t_->p && a.t_->e == b.t_->e && a.t_->r == b.t_->r;
    }

private:
    friend ChainRing make_chain_ring(ChainFamily, std::uint64_t, unsigned, unsigned, std::uint64_t);
    friend ChainRing build_chain_ring_with_modulus(ChainFamily, std::uint64_t, unsigned, const Field&,
                                                   std::vector<std::int64_t>, bool);
    explicit ChainRing(std::shared_ptr<detail::ChainTables> t) : t_(std::move(t)) {}

    void require_galois() const {
        if (t_->family != ChainFamily::galois) throw InvalidArgument("operation requires a Galois ring");
    }

    detail::Coords decode(RingElem a) const {
        detail::Coords c{};
        for (unsigned i = 0; i < t_->len; ++i)
            c[i] = static_cast<std::int64_t>((a.idx / t_->weight[i]) % t_->radix);
        return c;
    }
    RingElem encode(const detail::Coords& c) const {
        std::uint64_t idx = 0;
        for (unsigned i = 0; i < t_->len; ++i) idx += static_cast<std::uint64_t>(c[i]) * t_->weight[i];
        return {static_cast<std::uint32_t>(idx)};
    }

    RingElem add_slow(RingElem a, RingElem b) const {
        auto x = decode(a);
        const auto y = decode(b);
        if (t_->family == ChainFamily::galois) {
            for (unsigned i = 0; i < t_->len; ++i) x[i] = (x[i] + y[i]) % t_->pe;
        } else {
            const Field& K = residue_field();
            for (unsigned i = 0; i < t_->len; ++i)
                x[i] = K.add({static_cast<std::uint32_t>(x[i])}, {static_cast<std::uint32_t>(y[i])}).idx;
        }
        return encode(x);
    }
    RingElem neg_slow(RingElem a) const {
        auto x = decode(a);
        if (t_->family == ChainFamily::galois) {
            for (unsigned i = 0; i < t_->len; ++i) x[i] = (t_->pe - x[i]) % t_->pe;
        } else {
            const Field& K = residue_field();
            for (unsigned i = 0; i < t_->len; ++i) x[i] = K.neg({static_cast<std::uint32_t>(x[i])}).idx;
        }
        return encode(x);
    }
    RingElem mul_slow(RingElem a, RingElem b) const {
        const auto x = decode(a);
        const auto y = decode(b);
        const unsigned len = t_->len;
        detail::Coords out{};
        if (t_->family == ChainFamily::galois) {
            std::array<std::int64_t, 2 * detail::kMaxCoords> prod{};
            const std::int64_t pe = t_->pe;
            for (unsigned i = 0; i < len; ++i) {
                if (x[i] == 0) continue;
                for (unsigned j = 0; j < len; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % pe;
            }
            const auto& h = t_->modulus;
            for (unsigned k = 2 * len - 2; k >= len && k < 2 * len; --k) {
                const std::int64_t c = prod[k];
                if (c == 0) continue;
                for (unsigned i = 0; i < len; ++i) prod[k - len + i] = ((prod[k - len + i] - c * h[i]) % pe + pe) % pe;
                prod[k] = 0;
            }
            std::copy_n(prod.begin(), len, out.begin());
        } else {
            const Field& K = residue_field();
            for (unsigned i = 0; i < len; ++i) {
                if (x[i] == 0) continue;
                for (unsigned j = 0; i + j < len; ++j) {
                    const FieldElem term = K.mul({static_cast<std::uint32_t>(x[i])}, {static_cast<std::uint32_t>(y[j])});
                    out[i + j] = K.add({static_cast<std::uint32_t>(out[i + j])}, term).idx;
                }
            }
        }
        return encode(out);
    }
    unsigned valuation_slow(RingElem a) const {
        const auto c = decode(a);
        unsigned v = t_->e;
        if (t_->family == ChainFamily::galois) {
            for (unsigned i = 0; i < t_->len; ++i)
                if (c[i] != 0) v = std::min(v, nt::valuation(static_cast<std::uint64_t>(c[i]), t_->p));
        } else {
            for (unsigned i = 0; i < t_->len; ++i)
                if (c[i] != 0) return i;
        }
        return v;
    }
    /// Newton iteration x <- x (2 - a x) from the inverse of the residue.
    RingElem inv_slow(RingElem a) const {
        const Field& K = residue_field();
        const FieldElem r = K.inv(mu(a));
        RingElem x = t_->teich.empty() ? from_residue_constant(r) : lift(r);
        const RingElem two = from_int(2);
        for (unsigned step = 0; step < 64; ++step) {
            const RingElem ax = mul_slow(a, x);
            if (ax == one()) return x;
            x = mul_slow(x, add_slow(two, neg_slow(ax)));
        }
        throw std::logic_error("inverse iteration did not converge");
    }
    /// Any preimage under mu, used before the Teichmüller table exists.
    RingElem from_residue_constant(FieldElem r) const {
        if (t_->family == ChainFamily::u_adic) {
            detail::Coords c{};
            c[0] = r.idx;
            return encode(c);
        }
        // Solve sum c_i mu(xi^i) = r over F_p by brute force on the coordinate residues.
        const Field& K = residue_field();
        const std::uint64_t combos = t_->q;
        for (std::uint64_t code = 0; code < combos; ++code) {
            detail::Coords c{};
            std::uint64_t rest = code;
            FieldElem acc = K.zero();
            for (unsigned i = 0; i < t_->len; ++i) {
                c[i] = static_cast<std::int64_t>(rest % t_->p);
                rest /= t_->p;
                acc = K.add(acc, K.mul(K.from_int(c[i]), t_->basis_image[i]));
            }
            if (acc == r) return encode(c);
        }
        throw std::logic_error("mu is not surjective");
    }

    /// Tables grow along a spanning tree of the additive group: c = a + g for an additive generator
    /// g, so row c of each table is row a combined with row g.
    void build_tables() {
        const std::uint64_t n = t_->size;
        std::vector<RingElem> gens;
        for (unsigned i = 0; i < t_->len; ++i) {
            if (t_->family == ChainFamily::galois) {
                detail::Coords c{};
                c[i] = 1;
                gens.push_back(encode(c));
            } else {
                const Field& K = residue_field();
                for (unsigned j = 0; j < K.degree(); ++j) {
                    std::vector<std::int64_t> kc(K.degree(), 0);
                    kc[j] = 1;
                    detail::Coords c{};
                    c[i] = K.from_coeffs(kc).idx;
                    gens.push_back(encode(c));
                }
            }
        }
        std::vector<std::vector<std::uint32_t>> gen_add(gens.size(), std::vector<std::uint32_t>(n));
        std::vector<std::vector<std::uint32_t>> gen_mul(gens.size(), std::vector<std::uint32_t>(n));
        for (std::size_t k = 0; k < gens.size(); ++k)
            for (std::uint32_t b = 0; b < n; ++b) {
                gen_add[k][b] = add_slow(gens[k], {b}).idx;
                gen_mul[k][b] = mul_slow(gens[k], {b}).idx;
            }

        t_->add.resize(n * n);
        t_->mul.resize(n * n);
        t_->neg.resize(n);
        t_->val.resize(n);
        std::vector<char> done(n, 0);
        std::vector<std::uint32_t> order{zero().idx};
        std::vector<std::pair<std::uint32_t, std::uint32_t>> parent;
        done[zero().idx] = 1;
        for (std::uint32_t b = 0; b < n; ++b) {
            t_->add[zero().idx * n + b] = b;
            t_->mul[zero().idx * n + b] = zero().idx;
        }
        for (std::size_t head = 0; head < order.size(); ++head) {
            const std::uint32_t a = order[head];
            for (std::size_t k = 0; k < gens.size(); ++k) {
                const std::uint32_t c = gen_add[k][a];
                if (done[c]) continue;
                done[c] = 1;
                order.push_back(c);
                parent.push_back({a, static_cast<std::uint32_t>(k)});
                for (std::uint32_t b = 0; b < n; ++b) t_->add[c * n + b] = t_->add[a * n + gen_add[k][b]];
            }
        }
        if (order.size() != n) throw std::logic_error("additive generators do not span the ring");
        // The product rows need the complete sum table.
        for (std::size_t i = 1; i < n; ++i) {
            const auto [a, k] = parent[i - 1];
            const std::uint32_t c = order[i];
            for (std::uint32_t b = 0; b < n; ++b) t_->mul[c * n + b] = t_->add[t_->mul[a * n + b] * n + gen_mul[k][b]];
        }
        for (std::uint32_t a = 0; a < n; ++a) {
            t_->val[a] = static_cast<std::uint8_t>(valuation_slow({a}));
            for (std::uint32_t b = 0; b < n; ++b)
                if (t_->add[a * n + b] == zero().idx) {
                    t_->neg[a] = b;
                    break;
                }
        }
        t_->inv.assign(n, 0);
        for (std::uint32_t a = 0; a < n; ++a) {
            if (t_->val[a] != 0) continue;
            for (std::uint32_t b = 0; b < n; ++b) {
                if (t_->mul[a * n + b] == one().idx) {
                    t_->inv[a] = b;
                    break;
                }
            }
        }
    }

    std::shared_ptr<detail::ChainTables> t_;
};

/// Builds a ring from an explicit galois modulus (or none for u_adic). With `finish` the
/// Teichmüller table is computed from the modulus root (r > 1) or from g (r = 1).
inline ChainRing build_chain_ring_with_modulus(ChainFamily family, std::uint64_t p, unsigned e, const Field& K,
                                               std::vector<std::int64_t> modulus, bool finish) {
    auto t = std::make_shared<detail::ChainTables>();
    const unsigned r = K.degree();
    t->family = family;
    t->p = p;
    t->e = e;
    t->r = r;
    t->q = K.size();
    t->size = nt::ipow(p, static_cast<std::uint64_t>(e) * r);
    t->pe = static_cast<std::int64_t>(nt::ipow(p, e));
    t->residue = K;
    if (family == ChainFamily::galois) {
        t->len = r;
        t->radix = static_cast<std::uint64_t>(t->pe);
        t->modulus = std::move(modulus);
    } else {
        t->len = e;
        t->radix = K.size();
    }
    if (t->len > detail::kMaxCoords) throw CapExceeded("too many coordinates");
    t->weight.resize(t->len);
    for (unsigned i = 0; i < t->len; ++i) t->weight[i] = static_cast<std::uint32_t>(nt::ipow(t->radix, t->len - 1 - i));

    if (family == ChainFamily::galois) {
        // With r > 1 the basis root reduces to g; with r = 1 coordinates are plain integers.
        t->basis_image.resize(r);
        for (unsigned i = 0; i < r; ++i) t->basis_image[i] = r == 1 ? K.one() : K.pow(K.generator(), i);
    }

    ChainRing R(t);
    if (!finish) return R;
    if (t->size <= Caps::ring_tables) R.build_tables();

    // Teichmüller section: T(g^k) = xi^k.
    RingElem xi;
    if (family == ChainFamily::galois) {
        if (r == 1) {
            const RingElem g = R.from_int(static_cast<std::int64_t>(K.generator().idx));
            xi = R.pow(g, static_cast<std::int64_t>(nt::ipow(p, e - 1)));
        } else {
            detail::Coords c{};
            c[1] = 1;
            xi = R.encode(c);
        }
    } else {
        detail::Coords c{};
        c[0] = K.generator().idx;
        xi = R.encode(c);
    }
    t->xi = xi.idx;
    t->teich.assign(K.size(), 0);
    RingElem acc = R.one();
    for (std::uint64_t k = 0; k + 1 < K.size(); ++k) {
        t->teich[K.exp(static_cast<std::int64_t>(k)).idx] = acc.idx;
        acc = R.mul(acc, xi);
    }
    return R;
}

/// Builds GR(p^e, r) (family galois) or F_{p^r}[u]/(u^e) (family u_adic).
inline ChainRing make_chain_ring(ChainFamily family, std::uint64_t p, unsigned e, unsigned r, std::uint64_t cap) {
    if (!nt::is_prime(p)) throw InvalidArgument("characteristic prime " + std::to_string(p) + " is not prime");
    if (e == 0 || r == 0) throw InvalidArgument("nilpotency index and residue degree must be positive");
    nt::checked_pow(p, static_cast<std::uint64_t>(e) * r, cap);
    const Field K = make_field(p, r);
    if (family == ChainFamily::u_adic || r == 1) {
        std::vector<std::int64_t> modulus;
        if (family == ChainFamily::galois) modulus = {0, 1};
        return build_chain_ring_with_modulus(family, p, e, K, std::move(modulus), true);
    }

    // Work in Z_{p^e}[x]/(H) with H the integer lift of the canonical modulus. The Teichmüller lift
    // xi = G^{q^{e-1}} of the generator G has order q - 1, and its minimal polynomial
    // prod_i (y - xi^{p^i}) is the basic primitive modulus.
    const ChainRing work = build_chain_ring_with_modulus(ChainFamily::galois, p, e, K, K.modulus(), false);
    const auto gc = K.coeffs(K.generator());
    const RingElem G = work.from_coords(gc);
    RingElem xi = G;
    for (unsigned i = 0; i + 1 < e; ++i) xi = work.pow(xi, static_cast<std::int64_t>(K.size()));

    std::vector<RingElem> poly{work.one()};  // ascending in y
    RingElem conj = xi;
    for (unsigned i = 0; i < r; ++i) {
        std::vector<RingElem> next(poly.size() + 1, work.zero());
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k + 1] = work.add(next[k + 1], poly[k]);
            next[k] = work.sub(next[k], work.mul(conj, poly[k]));
        }
        poly = std::move(next);
        conj = work.pow(conj, static_cast<std::int64_t>(p));
    }
    std::vector<std::int64_t> modulus(r + 1);
    for (unsigned i = 0; i <= r; ++i) {
        const auto c = work.coords(poly[i]);
        for (unsigned j = 1; j < c.size(); ++j)
            if (c[j] != 0) throw std::logic_error("minimal polynomial of the Teichmüller generator is not over Z_{p^e}");
        modulus[i] = c[0];
    }
    return build_chain_ring_with_modulus(ChainFamily::galois, p, e, K, std::move(modulus), true);
}

/// Reduction onto the residue field.
inline FieldElem mu(const ChainRing& R, RingElem a) { return R.mu(a); }

/// {0, 1, xi, ..., xi^{q-2}} in that order.
inline std::vector<RingElem> teichmuller(const ChainRing& R) {
    if (R.family() != ChainFamily::galois) throw InvalidArgument("Teichmüller set is defined for Galois rings");
    std::vector<RingElem> out{R.zero()};
    const RingElem xi = R.teichmuller_generator();
    RingElem acc = R.one();
    for (std::uint64_t k = 0; k + 1 < R.residue_size(); ++k) {
        out.push_back(acc);
        acc = R.mul(acc, xi);
    }
    return out;
}

inline PAdicRepr p_adic_repr(const ChainRing& R, RingElem a) {
    if (R.family() != ChainFamily::galois) throw InvalidArgument("p-adic representation requires a Galois ring");
    const Field& K = R.residue_field();
    PAdicRepr out;
    RingElem rest = a;
    for (unsigned i = 0; i < R.nilpotency(); ++i) {
        const FieldElem res = R.mu(rest);
        const RingElem digit = R.lift(res);
        out.digits.push_back(digit);
        out.exponents.push_back(K.is_zero(res) ? -1 : static_cast<std::int64_t>(K.log(res)));
        rest = R.sub(rest, digit);
        if (i + 1 < R.nilpotency()) rest = R.divide_gamma_power(rest, 1);
    }
    return out;
}

inline RingElem p_adic_reconstruct(const ChainRing& R, const PAdicRepr& repr) {
    RingElem acc = R.zero();
    for (std::size_t i = 0; i < repr.digits.size(); ++i)
        acc = R.add(acc, R.mul(repr.digits[i], R.gamma_power(static_cast<unsigned>(i))));
    return acc;
}

/// |Ker(R^* -> K^*)| = q^{e-1}.
inline std::uint64_t kernel_mu_star_order(const ChainRing& R) {
    return nt::ipow(R.residue_size(), R.nilpotency() - 1);
}

/// Newton lift of a residue n-th root: x <- x - (x^n - lambda)(n x^{n-1})^{-1}.
inline RingElem newton_lift_root(const ChainRing& R, RingElem lambda, std::uint64_t n, FieldElem residue_root) {
    RingElem x = R.lift(residue_root);
    const RingElem n_elem = R.from_int(static_cast<std::int64_t>(n));
    const auto k = static_cast<std::int64_t>(n);
    for (unsigned step = 0; step < 64; ++step) {
        const RingElem defect = R.sub(R.pow(x, k), lambda);
        if (R.is_zero(defect)) return x;
        const RingElem slope = R.mul(n_elem, R.pow(x, k - 1));
        x = R.sub(x, R.mul(defect, R.inv(slope)));
    }
    throw std::logic_error("Newton lifting did not converge");
}

/// n-th root of a unit lambda in a chain ring, for gcd(n, p) = 1. Exists iff mu(lambda) has an
/// n-th root in the residue field; every residue root lifts uniquely, and the smallest lift (in
/// element order) is returned.
inline std::optional<RingElem> lift_nth_root(const ChainRing& R, RingElem lambda, std::uint64_t n) {
    if (n == 0) throw InvalidArgument("root index must be positive");
    if (n % R.characteristic_prime() == 0) throw InvalidArgument("root index must be coprime to p");
    if (!R.is_unit(lambda)) throw InvalidArgument("lambda must be a unit");
    const Field& K = R.residue_field();
    const auto base = nth_root(K, R.mu(lambda), n);
    if (!base) return std::nullopt;
    const std::uint64_t order = K.size() - 1;
    const std::uint64_t d = std::gcd(n, order);
    std::optional<RingElem> best;
    for (std::uint64_t k = 0; k < d; ++k) {
        const FieldElem zeta = K.exp(static_cast<std::int64_t>(order / d * k));
        const RingElem root = newton_lift_root(R, lambda, n, K.mul(*base, zeta));
        if (!best || root < *best) best = root;
    }
    return best;
}

inline std::uint64_t hom_weight(const ChainRing& R, RingElem a) { return R.hom_weight(a); }

}  // namespace ccr
