#pragma once

// Independent reference computations used by the unit and acceptance tests.
// Everything here is deliberately naive: trial division, full scans and
// direct counting.  The only library code used is the Cayley table of a
// built group.

#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "p2q2/pc_group.hpp"

namespace oracle {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::uint64_t totient(std::uint64_t n) {
    std::uint64_t c = 0;
    for (std::uint64_t k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) ++c;
    return c;
}

/// Order of u mod m by repeated multiplication.
inline std::uint64_t mult_order(std::uint64_t u, std::uint64_t m) {
    std::uint64_t x = u % m, d = 1;
    while (x != 1 % m) {
        x = x * u % m;
        ++d;
    }
    return d;
}

/// Number of invertible 2x2 matrices over Z/p, by enumeration.
inline std::uint64_t gl2_count(std::uint64_t p) {
    std::uint64_t c = 0;
    for (std::uint64_t a = 0; a < p; ++a)
        for (std::uint64_t b = 0; b < p; ++b)
            for (std::uint64_t x = 0; x < p; ++x)
                for (std::uint64_t y = 0; y < p; ++y)
                    if ((a * y + p * p - (b * x) % p) % p != 0) ++c;
    return c;
}

inline std::uint64_t factorial(std::uint64_t n) {
    std::uint64_t f = 1;
    for (std::uint64_t i = 2; i <= n; ++i) f *= i;
    return f;
}

/// (a + b sqrt D)(c + d sqrt D) over Z/p, written out by hand.
struct Fp2 {
    std::uint64_t a, b;
};
inline Fp2 fp2_mul(Fp2 x, Fp2 y, std::uint64_t D, std::uint64_t p) {
    return {(x.a * y.a + D * x.b % p * y.b) % p, (x.a * y.b + x.b * y.a) % p};
}
inline Fp2 fp2_pow(Fp2 x, std::uint64_t e, std::uint64_t D, std::uint64_t p) {
    Fp2 r{1 % p, 0};
    for (std::uint64_t i = 0; i < e; ++i) r = fp2_mul(r, x, D, p);
    return r;
}

} // namespace oracle

namespace oracle {

/// Smallest generating set found by trying subsets of size 1, 2, 3 in lexicographic order.
inline std::vector<p2q2::Elem> small_generating_set(const p2q2::PcGroup& G) {
    const std::size_t n = G.order();
    auto generated = [&](const std::vector<p2q2::Elem>& s) {
        std::vector<bool> in(n, false);
        std::vector<p2q2::Elem> frontier{G.identity()};
        in[G.identity()] = true;
        std::size_t count = 1;
        while (!frontier.empty()) {
            const p2q2::Elem x = frontier.back();
            frontier.pop_back();
            for (p2q2::Elem g : s) {
                const p2q2::Elem y = G.mul(x, g);
                if (!in[y]) in[y] = true, ++count, frontier.push_back(y);
            }
        }
        return count == n;
    };
    for (p2q2::Elem a = 0; a < n; ++a)
        if (generated({a})) return {a};
    for (p2q2::Elem a = 0; a < n; ++a)
        for (p2q2::Elem b = a + 1; b < n; ++b)
            if (generated({a, b})) return {a, b};
    for (p2q2::Elem a = 0; a < n; ++a)
        for (p2q2::Elem b = a + 1; b < n; ++b)
            for (p2q2::Elem c = b + 1; c < n; ++c)
                if (generated({a, b, c})) return {a, b, c};
    return {};
}

/**
 * |Aut(G)| from the Cayley table alone: for every assignment of images to a
 * small generating set, propagate phi(x g) = phi(x) phi(g) breadth-first and
 * keep the assignment iff no edge conflicts and phi is injective.
 */
inline std::uint64_t aut_order_by_extension(const p2q2::PcGroup& G) {
    const auto S = small_generating_set(G);
    const std::size_t n = G.order();
    std::vector<std::vector<p2q2::Elem>> cands(S.size());
    for (std::size_t i = 0; i < S.size(); ++i)
        for (p2q2::Elem x = 0; x < n; ++x)
            if (G.element_order(x) == G.element_order(S[i])) cands[i].push_back(x);
    std::vector<p2q2::Elem> img(S.size());
    std::vector<std::int64_t> phi(n);
    std::uint64_t count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t level) {
        if (level == S.size()) {
            std::fill(phi.begin(), phi.end(), -1);
            phi[G.identity()] = G.identity();
            std::vector<p2q2::Elem> queue{G.identity()};
            for (std::size_t h = 0; h < queue.size(); ++h) {
                const p2q2::Elem x = queue[h];
                for (std::size_t i = 0; i < S.size(); ++i) {
                    const p2q2::Elem y = G.mul(x, S[i]);
                    const auto want = static_cast<std::int64_t>(G.mul(static_cast<p2q2::Elem>(phi[x]), img[i]));
                    if (phi[y] == -1) {
                        phi[y] = want;
                        queue.push_back(y);
                    } else if (phi[y] != want) {
                        return;
                    }
                }
            }
            std::vector<bool> hit(n, false);
            for (auto v : phi) {
                if (hit[static_cast<std::size_t>(v)]) return;
                hit[static_cast<std::size_t>(v)] = true;
            }
            ++count;
            return;
        }
        for (p2q2::Elem c : cands[level]) {
            img[level] = c;
            rec(level + 1);
        }
    };
    rec(0);
    return count;
}

} // namespace oracle
