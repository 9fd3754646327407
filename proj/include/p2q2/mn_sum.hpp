#pragma once

// Binomial expansion of (m + n sqrt D)^s in GF(p^2), kept as an independent
// check on gf_pow.  Even-index terms give the rational part M, odd-index
// terms the sqrt(D) part N.

#include <cstdint>
#include <utility>
#include <vector>

#include "p2q2/gfp2.hpp"

namespace p2q2 {

/// (M, N) with (m + n sqrt D)^s = M + N sqrt D, summed term by term mod p.
inline std::pair<std::uint64_t, std::uint64_t> mn_sums(const GfElement& base, std::uint64_t s) {
    const std::uint64_t p = base.params.p;
    const std::uint64_t D = base.params.D;
    // Pascal's rule mod p.
    std::vector<std::uint64_t> row{1};
    for (std::uint64_t i = 1; i <= s; ++i) {
        std::vector<std::uint64_t> next(i + 1, 1);
        for (std::uint64_t k = 1; k < i; ++k) next[k] = (row[k - 1] + row[k]) % p;
        row = std::move(next);
    }
    auto pw = [p](std::uint64_t b, std::uint64_t e) { return detail::pow_mod_raw(b % p, e, p); };
    std::uint64_t M = 0, N = 0;
    for (std::uint64_t t = 0; 2 * t <= s; ++t) {
        M = (M + row[2 * t] % p * pw(base.a, s - 2 * t) % p * pw(base.b, 2 * t) % p * pw(D, t)) % p;
    }
    for (std::uint64_t t = 0; 2 * t + 1 <= s; ++t) {
        N = (N + row[2 * t + 1] % p * pw(base.a, s - 2 * t - 1) % p * pw(base.b, 2 * t + 1) % p * pw(D, t)) % p;
    }
    return {M, N};
}

/// True iff the binomial sums agree with gf_pow(base, s).
inline bool mn_sum_crosscheck(const GfParams& params, const GfElement& base, std::uint64_t s) {
    if (!(base.params == params)) throw ParamMismatch("base element belongs to a different field");
    const auto [M, N] = mn_sums(base, s);
    const GfElement direct = gf_pow(base, s);
    return direct.a == M && direct.b == N;
}

} // namespace p2q2
