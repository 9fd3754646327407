#pragma once

// Arithmetic in GF(p^2) = GF(p)[sqrt D] for an odd prime p and a quadratic
// non-residue D.  Elements are pairs (a, b) standing for a + b*sqrt(D).

#include "p2q2/numtheory.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace p2q2 {

class ParamMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ZeroElement : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class NotDivisor : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct GfParams {
    std::uint64_t p = 3;
    std::uint64_t D = 2;

    /// Validates that p is an odd prime and D a non-residue mod p.
    GfParams(std::uint64_t p_, std::uint64_t D_) : p(p_), D(D_ % p_) {
        if (p < 3 || !is_prime(p)) throw std::invalid_argument("GF(p^2) needs an odd prime, got " + std::to_string(p));
        if (is_quadratic_residue(D, p)) {
            throw std::invalid_argument(std::to_string(D_) + " is a square mod " + std::to_string(p));
        }
    }

    /// The canonical parameters: D is the smallest non-residue.
    static GfParams canonical(std::uint64_t p) { return GfParams(p, smallest_nonresidue(p)); }

    friend bool operator==(const GfParams&, const GfParams&) = default;
};

struct GfElement {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    GfParams params;

    GfElement(std::uint64_t a_, std::uint64_t b_, GfParams prm) : a(a_ % prm.p), b(b_ % prm.p), params(prm) {}

    static GfElement one(const GfParams& prm) { return {1, 0, prm}; }

    [[nodiscard]] bool is_zero() const noexcept { return a == 0 && b == 0; }
    [[nodiscard]] bool is_one() const noexcept { return a == 1 && b == 0; }

    friend bool operator==(const GfElement&, const GfElement&) = default;
};

namespace detail {
inline void require_same(const GfElement& x, const GfElement& y) {
    if (!(x.params == y.params)) {
        throw ParamMismatch("GF(p^2) operands use different (p, D): (" + std::to_string(x.params.p) + "," +
                            std::to_string(x.params.D) + ") vs (" + std::to_string(y.params.p) + "," +
                            std::to_string(y.params.D) + ")");
    }
}
} // namespace detail

inline GfElement gf_add(const GfElement& x, const GfElement& y) {
    detail::require_same(x, y);
    return {x.a + y.a, x.b + y.b, x.params};
}

inline GfElement gf_mul(const GfElement& x, const GfElement& y) {
    detail::require_same(x, y);
    const std::uint64_t p = x.params.p;
    const std::uint64_t re = (x.a * y.a + x.params.D * (x.b * y.b % p)) % p;
    const std::uint64_t im = (x.a * y.b + x.b * y.a) % p;
    return {re, im, x.params};
}

inline GfElement gf_pow(GfElement x, std::uint64_t e) {
    GfElement result = GfElement::one(x.params);
    while (e > 0) {
        if (e & 1U) result = gf_mul(result, x);
        x = gf_mul(x, x);
        e >>= 1U;
    }
    return result;
}

/// Multiplicative order; always divides p^2 - 1.
inline std::uint64_t gf_order(const GfElement& x) {
    if (x.is_zero()) throw ZeroElement("zero has no multiplicative order");
    std::uint64_t order = x.params.p * x.params.p - 1;
    for (auto [ell, e] : detail::factor_small(order)) {
        for (unsigned i = 0; i < e; ++i) {
            if (!gf_pow(x, order / ell).is_one()) break;
            order /= ell;
        }
    }
    return order;
}

/// First element of order p^2 - 1 in the scan (a, b) = (0,1), (0,2), ..., (1,0), (1,1), ...
inline GfElement primitive_root(const GfParams& params) {
    const std::uint64_t full = params.p * params.p - 1;
    for (std::uint64_t a = 0; a < params.p; ++a) {
        for (std::uint64_t b = 0; b < params.p; ++b) {
            GfElement x(a, b, params);
            if (!x.is_zero() && gf_order(x) == full) return x;
        }
    }
    throw std::logic_error("GF(p^2)* has no generator");
}

/// sigma^((p^2-1)/k) for the canonical primitive root sigma.
inline GfElement subgroup_parameter(const GfParams& params, std::uint64_t k) {
    const std::uint64_t full = params.p * params.p - 1;
    if (k == 0 || full % k != 0) {
        throw NotDivisor(std::to_string(k) + " does not divide p^2-1 = " + std::to_string(full));
    }
    return gf_pow(primitive_root(params), full / k);
}

} // namespace p2q2
