#pragma once

/**
 * @file numtheory.hpp
 * @brief Modular arithmetic substrate.
 *
 * Primality, modular powers, multiplicative orders and elements of a
 * prescribed order modulo p or p^2, quadratic non-residues.  All values are
 * small (group orders stay at desk scale) but every routine is exact for
 * 64-bit inputs.
 */

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace p2q2 {

/// Raised when no unit of the requested multiplicative order exists.
class NoSuchElement : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

namespace detail {

__extension__ using u128 = unsigned __int128;

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

inline std::uint64_t pow_mod_raw(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1U) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1U;
    }
    return result;
}

/// Trial-division factorization; only used on small numbers.
inline std::vector<std::pair<std::uint64_t, unsigned>> factor_small(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1U);
    return out;
}

} // namespace detail

/// Deterministic Miller-Rabin; the witness set is exact below 2^64.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % small == 0) return n == small;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = detail::pow_mod_raw(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = detail::mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/// A modulus together with its prime factorization.
class Modulus {
public:
    using factorization_type = std::vector<std::pair<std::uint64_t, unsigned>>;

    /// Factors `value` by trial division.  Intended for small moduli.
    static Modulus of(std::uint64_t value) {
        if (value < 2) throw std::invalid_argument("modulus must be >= 2, got " + std::to_string(value));
        return Modulus(value, detail::factor_small(value));
    }

    static Modulus prime_power(std::uint64_t p, unsigned k) {
        if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
        if (k == 0) throw std::invalid_argument("prime power exponent must be positive");
        std::uint64_t v = 1;
        for (unsigned i = 0; i < k; ++i) v *= p;
        return Modulus(v, {{p, k}});
    }

    static Modulus prime(std::uint64_t p) { return prime_power(p, 1); }

    [[nodiscard]] std::uint64_t value() const noexcept { return value_; }
    [[nodiscard]] const factorization_type& factorization() const noexcept { return factors_; }

    /// Euler's totient, read off the stored factorization.
    [[nodiscard]] std::uint64_t totient() const noexcept {
        std::uint64_t phi = 1;
        for (auto [p, e] : factors_) {
            phi *= p - 1;
            for (unsigned i = 1; i < e; ++i) phi *= p;
        }
        return phi;
    }

    /// True when (Z/mZ)* is cyclic: m = 2, 4, p^k or 2p^k with p odd.
    [[nodiscard]] bool has_cyclic_units() const noexcept {
        if (value_ == 2 || value_ == 4) return true;
        if (factors_.size() == 1) return factors_[0].first != 2;
        return factors_.size() == 2 && factors_[0] == std::pair<std::uint64_t, unsigned>{2, 1};
    }

    friend bool operator==(const Modulus& a, const Modulus& b) { return a.value_ == b.value_; }

private:
    Modulus(std::uint64_t value, factorization_type factors) : value_(value), factors_(std::move(factors)) {}

    std::uint64_t value_;
    factorization_type factors_;
};

/// A residue coprime to its modulus.
class UnitElement {
public:
    UnitElement(std::uint64_t residue, Modulus modulus) : residue_(residue % modulus.value()), modulus_(std::move(modulus)) {
        if (std::gcd(residue_, modulus_.value()) != 1) {
            throw std::invalid_argument(std::to_string(residue) + " is not a unit mod " + std::to_string(modulus_.value()));
        }
    }

    [[nodiscard]] std::uint64_t residue() const noexcept { return residue_; }
    [[nodiscard]] const Modulus& modulus() const noexcept { return modulus_; }

private:
    std::uint64_t residue_;
    Modulus modulus_;
};

/// base^exp mod m; negative bases are reduced first.
inline std::uint64_t pow_mod(std::int64_t base, std::uint64_t exp, const Modulus& m) {
    const auto mv = static_cast<std::int64_t>(m.value());
    std::int64_t b = base % mv;
    if (b < 0) b += mv;
    return detail::pow_mod_raw(static_cast<std::uint64_t>(b), exp, m.value());
}

inline std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
    std::int64_t old_r = static_cast<std::int64_t>(a % m), r = static_cast<std::int64_t>(m);
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t quot = old_r / r;
        old_r -= quot * r;
        std::swap(old_r, r);
        old_s -= quot * s;
        std::swap(old_s, s);
    }
    if (old_r != 1) throw std::invalid_argument(std::to_string(a) + " is not invertible mod " + std::to_string(m));
    std::int64_t inv = old_s % static_cast<std::int64_t>(m);
    if (inv < 0) inv += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(inv);
}

/// Least d >= 1 with u^d = 1.  Searches the divisors of phi(m) from the top down.
inline std::uint64_t multiplicative_order(const UnitElement& u) {
    const Modulus& m = u.modulus();
    if (m.value() == 1) return 1;
    std::uint64_t order = m.totient();
    for (auto [ell, e] : detail::factor_small(order)) {
        for (unsigned i = 0; i < e; ++i) {
            if (detail::pow_mod_raw(u.residue(), order / ell, m.value()) != 1) break;
            order /= ell;
        }
    }
    return order;
}

/// Smallest residue r > 1 of exact multiplicative order d (1 for d = 1).
inline UnitElement element_of_order(std::uint64_t d, const Modulus& m) {
    const std::uint64_t phi = m.totient();
    if (d == 0 || phi % d != 0) {
        throw NoSuchElement("no unit of order " + std::to_string(d) + " mod " + std::to_string(m.value()) +
                            " (order must divide " + std::to_string(phi) + ")");
    }
    if (!m.has_cyclic_units()) {
        throw std::invalid_argument("unit group mod " + std::to_string(m.value()) + " is not cyclic");
    }
    if (d == 1) return UnitElement(1, m);
    const auto prime_divisors = detail::factor_small(d);
    for (std::uint64_t r = 2; r < m.value(); ++r) {
        if (std::gcd(r, m.value()) != 1) continue;
        if (detail::pow_mod_raw(r, d, m.value()) != 1) continue;
        bool exact = true;
        for (auto [ell, e] : prime_divisors) {
            if (detail::pow_mod_raw(r, d / ell, m.value()) == 1) {
                exact = false;
                break;
            }
        }
        if (exact) return UnitElement(r, m);
    }
    throw NoSuchElement("no unit of order " + std::to_string(d) + " mod " + std::to_string(m.value()));
}

/// Smallest D >= 2 that is not a square mod the odd prime p.
inline std::uint64_t smallest_nonresidue(std::uint64_t p) {
    if (p == 2 || !is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not an odd prime");
    for (std::uint64_t d = 2; d < p; ++d) {
        if (detail::pow_mod_raw(d, (p - 1) / 2, p) == p - 1) return d;
    }
    throw std::logic_error("odd prime without a non-residue");
}

inline bool is_quadratic_residue(std::uint64_t a, std::uint64_t p) {
    a %= p;
    return a == 0 || detail::pow_mod_raw(a, (p - 1) / 2, p) == 1;
}

/// Primes in [2, bound], ascending.
inline std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 2; n <= bound; ++n) {
        if (is_prime(n)) out.push_back(n);
    }
    return out;
}

} // namespace p2q2
