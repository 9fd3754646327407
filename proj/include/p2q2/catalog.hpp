#pragma once

/**
 * @file catalog.hpp
 * @brief The 36 isomorphism types of groups of order p^2 q^2.
 *
 * Role convention: q is the prime whose Sylow subgroup K acts, p the prime
 * of the normal Sylow subgroup H.  Presentations list the K generators first
 * (a, b), then the H generators (b or c, d), which is exactly the shape the
 * collector wants: every conjugation rule is an H generator conjugated by a
 * K generator.  Types 1-14 exist only for {p, q} = {2, 3}.
 */

#include <cstdint>
#include <optional>
#include <regex>
#include <stdexcept>
#include <string>
#include <vector>

#include "p2q2/gfp2.hpp"
#include "p2q2/numtheory.hpp"
#include "p2q2/pc_group.hpp"
#include "p2q2/structure.hpp"

namespace p2q2 {

class UnknownType : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

class NotAdmissible : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ParameterUnavailable : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class SpecParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr int kNumTypes = 36;

struct GfData {
    std::uint64_t D = 0;
    std::uint64_t sigma_a = 0, sigma_b = 0;  ///< sigma = sigma_a + sigma_b sqrt(D)
    std::uint64_t m = 0, n = 0;              ///< m + n sqrt(D) = sigma^((p^2-1)/k); (u, v) for type 36
    std::uint64_t k = 0;

    friend bool operator==(const GfData&, const GfData&) = default;
};

struct TypeParams {
    std::optional<std::uint64_t> r;      ///< action parameter, exact order q or q^2
    std::optional<std::uint64_t> r_modulus;
    std::optional<std::uint64_t> n_exp;  ///< exponent n of types 27 and 28
    std::optional<GfData> gf;

    friend bool operator==(const TypeParams&, const TypeParams&) = default;
};

struct GroupSpec {
    int type_id = 0;
    std::uint64_t p = 0;
    std::uint64_t q = 0;
    TypeParams params;

    [[nodiscard]] std::uint64_t group_order() const { return p * p * q * q; }

    /// "t<type>:p=<p>,q=<q>[,n=<n>]"; n appears exactly for types 27 and 28.
    [[nodiscard]] std::string to_string() const {
        std::string s = "t" + std::to_string(type_id) + ":p=" + std::to_string(p) + ",q=" + std::to_string(q);
        if (params.n_exp) s += ",n=" + std::to_string(*params.n_exp);
        return s;
    }

    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

struct Admissibility {
    bool ok = false;
    std::string reason;  ///< names the failed condition; empty when ok
    explicit operator bool() const noexcept { return ok; }
};

struct TypeInfo {
    int id;
    const char* description;  ///< group, ASCII
    const char* condition;    ///< side condition, ASCII; empty if none
    std::size_t k_generators; ///< leading generators spanning K (0 for types 1-14)
};

inline const TypeInfo& type_info(int type_id) {
    static const TypeInfo table[kNumTypes] = {
        {1, "Z36", "pq = 6", 0},
        {2, "Z18 x Z2", "pq = 6", 0},
        {3, "Z6 x Z6", "pq = 6", 0},
        {4, "Z12 x Z3", "pq = 6", 0},
        {5, "Z6 x D3", "pq = 6", 0},
        {6, "D3 x D3", "pq = 6", 0},
        {7, "D9 x Z2", "pq = 6", 0},
        {8, "A4 x Z3", "pq = 6", 0},
        {9, "D18", "pq = 6", 0},
        {10, "Dic3 x Z3", "pq = 6", 0},
        {11, "((Z3 x Z3) : Z2) x Z2", "pq = 6", 0},
        {12, "(Z3 x Z3) : Z4, c acts by (a,b) -> (b,a^-1)", "pq = 6", 0},
        {13, "(Z2 x Z2) : Z9", "pq = 6", 0},
        {14, "(Z3 x Z3) : Z4, c inverts a and b", "pq = 6", 0},
        {15, "Z_{q^2} x Z_{p^2}", "", 1},
        {16, "Z_q x Z_q x Z_{p^2}", "", 2},
        {17, "Z_{q^2} x Z_p x Z_p", "", 1},
        {18, "Z_q x Z_q x Z_p x Z_p", "", 2},
        {19, "Z_{p^2} : Z_{q^2}, a acts with order q", "q | p-1", 1},
        {20, "Z_{p^2} : Z_{q^2}, a acts with order q^2", "q^2 | p-1", 1},
        {21, "Z_{p^2} : (Z_q x Z_q)", "q | p-1", 2},
        {22, "(Z_p x Z_p) : Z_{q^2}, scalar action r", "q | p-1", 1},
        {23, "(Z_p x Z_p) : Z_4, c inverted", "q = 2", 1},
        {24, "Z_p x (Z_p : Z_{q^2})", "q | p-1, q != 2", 1},
        {25, "(Z_p x Z_p) : Z_{q^2}, action diag(r, r^-1)", "q | p-1, q != 2", 1},
        {26, "(Z_p x Z_p) : Z_{q^2}, action diag(r, r^-1), r of order q^2", "q^2 | p-1", 1},
        {27, "(Z_p x Z_p) : Z_{q^2}, action diag(r, r^n)", "q | p-1, q != 2, 2 <= n <= (q-1)/2", 1},
        {28, "(Z_p x Z_p) : Z_{q^2}, action diag(r, r^n), r of order q^2", "q^2 | p-1, q != 2", 1},
        {29, "(Z_p x Z_p) : Z_{q^2}, scalar action of order q^2", "q^2 | p-1", 1},
        {30, "(Z_p x Z_p) : Z_{q^2}, irreducible action of order q", "q | p+1, q odd", 1},
        {31, "(Z_p x Z_p) : Z_4, irreducible action of order 4", "q = 2, p = 3 mod 4", 1},
        {32, "(Z_p x Z_p) : Z_{q^2}, irreducible action of order q^2", "q^2 | p+1, q odd", 1},
        {33, "(Z_p x Z_p) : (Z_q x Z_q), b acts by scalar r", "q | p-1", 2},
        {34, "(Z_p x Z_p) : (Z_2 x Z_2), b inverts c", "q = 2", 2},
        {35, "(Z_p x Z_p) : (Z_q x Z_q), a on c, b on d", "q | p-1", 2},
        {36, "(Z_p x Z_p) : (Z_q x Z_q), b acts irreducibly", "q | p+1, q odd", 2},
    };
    if (type_id < 1 || type_id > kNumTypes) throw UnknownType("unknown group type " + std::to_string(type_id));
    return table[type_id - 1];
}

inline Admissibility admissible(int type_id, std::uint64_t p, std::uint64_t q) {
    (void)type_info(type_id);
    auto fail = [](std::string why) { return Admissibility{false, std::move(why)}; };
    if (!is_prime(p)) return fail("p = " + std::to_string(p) + " is not prime");
    if (!is_prime(q)) return fail("q = " + std::to_string(q) + " is not prime");
    if (p == q) return fail("p and q must be distinct");
    if (type_id <= 14) {
        if (p * q != 6) return fail("pq = 6 required");
        return {true, ""};
    }
    const bool q_pm1 = (p - 1) % q == 0;
    const bool q2_pm1 = (p - 1) % (q * q) == 0;
    const bool q_pp1 = (p + 1) % q == 0;
    const bool q2_pp1 = (p + 1) % (q * q) == 0;
    switch (type_id) {
    case 15: case 16: case 17: case 18:
        return {true, ""};
    case 19: case 21: case 22: case 33: case 35:
        return q_pm1 ? Admissibility{true, ""} : fail("q | p-1 required");
    case 20: case 26: case 29:
        return q2_pm1 ? Admissibility{true, ""} : fail("q^2 | p-1 required");
    case 23: case 34:
        return q == 2 ? Admissibility{true, ""} : fail("q = 2 required");
    case 24: case 25:
        if (q == 2) return fail("q != 2 required");
        return q_pm1 ? Admissibility{true, ""} : fail("q | p-1 required");
    case 27:
        if (q == 2) return fail("q != 2 required");
        if (!q_pm1) return fail("q | p-1 required");
        if (q < 5) return fail("n range 2..(q-1)/2 is empty, q >= 5 required");
        return {true, ""};
    case 28:
        if (q == 2) return fail("q != 2 required");
        return q2_pm1 ? Admissibility{true, ""} : fail("q^2 | p-1 required");
    case 30: case 36:
        if (q == 2) return fail("q odd required");
        if (!q_pp1) return fail("q | p+1 required");
        if (p == 2) return fail("p odd required for GF(p^2) = GF(p)[sqrt D]");
        return {true, ""};
    case 31:
        if (q != 2) return fail("q = 2 required");
        return p % 4 == 3 ? Admissibility{true, ""} : fail("p = 3 mod 4 required");
    case 32:
        if (q == 2) return fail("q odd required");
        if (!q2_pp1) return fail("q^2 | p+1 required");
        return {true, ""};
    default:
        break;
    }
    throw UnknownType("unknown group type " + std::to_string(type_id));
}

/// Whether n is an allowed exponent for type 27 or 28 at this q.
inline bool n_exponent_allowed(int type_id, std::uint64_t q, std::uint64_t n) {
    if (type_id == 27) return n >= 2 && n <= (q - 1) / 2;
    if (type_id == 28) {
        if (n >= 2 && n <= (q * q - 1) / 2) return true;
        return n % q == 0 && n / q >= (q + 1) / 2 && n / q <= q - 1;
    }
    return false;
}

/// Canonical parameters; `n_override` selects n for types 27 and 28.
inline TypeParams derive_params(int type_id, std::uint64_t p, std::uint64_t q,
                                std::optional<std::uint64_t> n_override = std::nullopt) {
    if (auto a = admissible(type_id, p, q); !a) {
        throw NotAdmissible("t" + std::to_string(type_id) + ":p=" + std::to_string(p) + ",q=" + std::to_string(q) +
                            " is not admissible: " + a.reason);
    }
    TypeParams tp;
    auto set_r = [&](std::uint64_t order, Modulus m) {
        tp.r = element_of_order(order, m).residue();
        tp.r_modulus = m.value();
    };
    switch (type_id) {
    case 19: case 21: set_r(q, Modulus::prime_power(p, 2)); break;
    case 20: set_r(q * q, Modulus::prime_power(p, 2)); break;
    case 22: case 24: case 25: case 27: case 33: case 35: set_r(q, Modulus::prime(p)); break;
    case 26: case 28: case 29: set_r(q * q, Modulus::prime(p)); break;
    case 30: case 31: case 32: case 36: {
        const auto prm = GfParams::canonical(p);
        const std::uint64_t k = type_id == 31 ? 4 : (type_id == 32 ? q * q : q);
        const auto sigma = primitive_root(prm);
        const auto mn = subgroup_parameter(prm, k);
        if (mn.b == 0) {
            throw ParameterUnavailable("sigma^((p^2-1)/" + std::to_string(k) + ") lies in GF(p) for p = " + std::to_string(p));
        }
        tp.gf = GfData{prm.D, sigma.a, sigma.b, mn.a, mn.b, k};
        break;
    }
    default: break;
    }
    if (type_id == 27 || type_id == 28) {
        const std::uint64_t n = n_override.value_or(2);
        if (!n_exponent_allowed(type_id, q, n)) {
            throw NotAdmissible("n = " + std::to_string(n) + " is outside the allowed range for type " + std::to_string(type_id));
        }
        tp.n_exp = n;
    } else if (n_override) {
        throw NotAdmissible("type " + std::to_string(type_id) + " takes no n parameter");
    }
    return tp;
}

inline GroupSpec make_spec(int type_id, std::uint64_t p, std::uint64_t q, std::optional<std::uint64_t> n = std::nullopt) {
    return GroupSpec{type_id, p, q, derive_params(type_id, p, q, n)};
}

/// Parses "t<id>:p=<p>,q=<q>[,n=<k>]".
inline GroupSpec parse_spec(const std::string& text) {
    static const std::regex re(R"(^t(\d+):p=(\d+),q=(\d+)(?:,n=(\d+))?$)");
    std::smatch m;
    if (!std::regex_match(text, m, re)) {
        throw SpecParseError("malformed spec '" + text + "', expected t<id>:p=<p>,q=<q>[,n=<k>]");
    }
    try {
        const int id = std::stoi(m[1].str());
        const std::uint64_t p = std::stoull(m[2].str());
        const std::uint64_t q = std::stoull(m[3].str());
        std::optional<std::uint64_t> n;
        if (m[4].matched) n = std::stoull(m[4].str());
        (void)type_info(id);
        return make_spec(id, p, q, n);
    } catch (const UnknownType&) {
        throw;
    } catch (const std::out_of_range& e) {
        throw SpecParseError("spec '" + text + "': " + e.what());
    }
}

/// The polycyclic presentation of a spec, generators in collector order.
inline PcPresentation presentation(const GroupSpec& spec) {
    const auto p = static_cast<std::uint32_t>(spec.p);
    const auto q = static_cast<std::uint32_t>(spec.q);
    const std::int64_t r = spec.params.r.value_or(1);
    auto gens = [](std::initializer_list<Generator> g) { return PcPresentation(std::vector<Generator>(g)); };

    switch (spec.type_id) {
    case 1: return gens({{"a", 4}, {"b", 9}});
    case 2: return gens({{"a", 2}, {"b", 2}, {"c", 9}});
    case 3: return gens({{"a", 2}, {"b", 2}, {"c", 3}, {"d", 3}});
    case 4: return gens({{"a", 4}, {"b", 3}, {"c", 3}});
    case 5: {
        auto P = gens({{"s", 2}, {"t", 2}, {"r", 3}, {"z", 3}});
        P.set_conjugate(0, 2, P.word({{2, -1}}));
        return P;
    }
    case 6: {
        auto P = gens({{"s", 2}, {"t", 2}, {"x", 3}, {"y", 3}});
        P.set_conjugate(0, 2, P.word({{2, -1}}));
        P.set_conjugate(1, 3, P.word({{3, -1}}));
        return P;
    }
    case 7: case 9: {
        auto P = gens({{"s", 2}, {"t", 2}, {"r", 9}});
        P.set_conjugate(0, 2, P.word({{2, -1}}));
        return P;
    }
    case 8: {
        auto P = gens({{"z", 3}, {"w", 3}, {"x", 2}, {"y", 2}});
        P.set_conjugate(1, 2, P.word({{3, 1}}));
        P.set_conjugate(1, 3, P.word({{2, 1}, {3, 1}}));
        return P;
    }
    case 10: {
        auto P = gens({{"a", 4}, {"b", 3}, {"z", 3}});
        P.set_conjugate(0, 1, P.word({{1, -1}}));
        return P;
    }
    case 11: {
        auto P = gens({{"s", 2}, {"t", 2}, {"x", 3}, {"y", 3}});
        P.set_conjugate(0, 2, P.word({{2, -1}}));
        P.set_conjugate(0, 3, P.word({{3, -1}}));
        return P;
    }
    case 12: {
        auto P = gens({{"c", 4}, {"a", 3}, {"b", 3}});
        P.set_conjugate(0, 1, P.word({{2, 1}}));
        P.set_conjugate(0, 2, P.word({{1, -1}}));
        return P;
    }
    case 13: {
        auto P = gens({{"c", 9}, {"a", 2}, {"b", 2}});
        P.set_conjugate(0, 1, P.word({{2, 1}}));
        P.set_conjugate(0, 2, P.word({{1, 1}, {2, 1}}));
        return P;
    }
    case 14: {
        auto P = gens({{"c", 4}, {"a", 3}, {"b", 3}});
        P.set_conjugate(0, 1, P.word({{1, -1}}));
        P.set_conjugate(0, 2, P.word({{2, -1}}));
        return P;
    }
    case 15: return gens({{"a", q * q}, {"b", p * p}});
    case 16: return gens({{"a", q}, {"b", q}, {"c", p * p}});
    case 17: return gens({{"a", q * q}, {"b", p}, {"c", p}});
    case 18: return gens({{"a", q}, {"b", q}, {"c", p}, {"d", p}});
    case 19: case 20: {
        auto P = gens({{"a", q * q}, {"b", p * p}});
        P.set_conjugate(0, 1, P.word({{1, r}}));
        return P;
    }
    case 21: {
        auto P = gens({{"a", q}, {"b", q}, {"c", p * p}});
        P.set_conjugate(0, 2, P.word({{2, r}}));
        return P;
    }
    case 22: case 24: case 25: case 26: case 27: case 28: case 29: {
        auto P = gens({{"a", q * q}, {"b", p}, {"c", p}});
        const auto rinv = static_cast<std::int64_t>(inverse_mod(static_cast<std::uint64_t>(r), p));
        std::int64_t rb = r, rc = r;
        if (spec.type_id == 24) rb = 1;
        if (spec.type_id == 25 || spec.type_id == 26) rc = rinv;
        if (spec.type_id == 27 || spec.type_id == 28) {
            rc = static_cast<std::int64_t>(pow_mod(r, *spec.params.n_exp, Modulus::prime(p)));
        }
        if (rb != 1) P.set_conjugate(0, 1, P.word({{1, rb}}));
        P.set_conjugate(0, 2, P.word({{2, rc}}));
        return P;
    }
    case 23: {
        auto P = gens({{"a", 4}, {"b", p}, {"c", p}});
        P.set_conjugate(0, 2, P.word({{2, -1}}));
        return P;
    }
    case 30: case 31: case 32: {
        const auto& g = *spec.params.gf;
        auto P = gens({{"a", spec.type_id == 31 ? 4U : q * q}, {"b", p}, {"c", p}});
        const auto m = static_cast<std::int64_t>(g.m), n = static_cast<std::int64_t>(g.n);
        const auto D = static_cast<std::int64_t>(g.D);
        P.set_conjugate(0, 1, P.word({{1, m}, {2, n * D}}));
        P.set_conjugate(0, 2, P.word({{1, n}, {2, m}}));
        return P;
    }
    case 33: {
        auto P = gens({{"a", q}, {"b", q}, {"c", p}, {"d", p}});
        P.set_conjugate(1, 2, P.word({{2, r}}));
        P.set_conjugate(1, 3, P.word({{3, r}}));
        return P;
    }
    case 34: {
        auto P = gens({{"a", 2}, {"b", 2}, {"c", p}, {"d", p}});
        P.set_conjugate(1, 2, P.word({{2, -1}}));
        return P;
    }
    case 35: {
        auto P = gens({{"a", q}, {"b", q}, {"c", p}, {"d", p}});
        P.set_conjugate(0, 2, P.word({{2, r}}));
        P.set_conjugate(1, 3, P.word({{3, r}}));
        return P;
    }
    case 36: {
        const auto& g = *spec.params.gf;
        auto P = gens({{"a", q}, {"b", q}, {"c", p}, {"d", p}});
        const auto u = static_cast<std::int64_t>(g.m), v = static_cast<std::int64_t>(g.n);
        const auto D = static_cast<std::int64_t>(g.D);
        P.set_conjugate(1, 2, P.word({{2, u}, {3, v * D}}));
        P.set_conjugate(1, 3, P.word({{2, v}, {3, u}}));
        return P;
    }
    default: break;
    }
    throw UnknownType("unknown group type " + std::to_string(spec.type_id));
}

namespace detail {

/// The defining relations of K (type 11) hold for a = s, b = s x, c = s y,
/// those elements generate a subgroup of order 18, and t is a central
/// complement, so the collected group really is K x Z2.
inline void check_type11(const PcGroup& G) {
    const Elem s = G.generator(0), t = G.generator(1), x = G.generator(2), y = G.generator(3);
    const Elem a = s, b = G.mul(s, x), c = G.mul(s, y);
    auto is_one = [&](Elem e, std::uint64_t k) { return G.pow(e, k) == G.identity(); };
    const Elem ab = G.mul(a, b), ac = G.mul(a, c), abc = G.mul(ab, c);
    if (!(is_one(a, 2) && is_one(b, 2) && is_one(c, 2) && is_one(abc, 2) && is_one(ab, 3) && is_one(ac, 3))) {
        throw InconsistentPresentation("type 11: generators violate the relations of K");
    }
    const auto K = subgroup_closure(G, {a, b, c});
    if (K.order() != 18 || K.contains(t) || G.element_order(t) != 2) {
        throw InconsistentPresentation("type 11: K x Z2 decomposition fails");
    }
    for (Elem g : presentation_generators(G)) {
        if (G.mul(g, t) != G.mul(t, g)) throw InconsistentPresentation("type 11: t is not central");
    }
}

} // namespace detail

/// Collects the presentation and checks order and generator orders.
inline PcGroup build(const GroupSpec& spec) {
    PcGroup G = collect(presentation(spec));
    if (G.order() != spec.group_order()) {
        throw InconsistentPresentation(spec.to_string() + ": collected order " + std::to_string(G.order()) +
                                       " != p^2 q^2");
    }
    for (std::size_t k = 0; k < G.num_generators(); ++k) {
        if (G.element_order(G.generator(k)) != G.presentation().relative_order(k)) {
            throw InconsistentPresentation(spec.to_string() + ": generator " + G.presentation().generators()[k].name +
                                           " has the wrong order");
        }
    }
    if (spec.type_id == 11) detail::check_type11(G);
    return G;
}

/**
 * Every admissible spec with p <= p_max, q <= q_max and p^2 q^2 within the
 * Cayley cap, ordered by type then p then q.  Types 1-14 appear once, with
 * (p, q) = (3, 2) when that fits the bounds and (2, 3) otherwise.
 */
inline std::vector<GroupSpec> enumerate_admissible(std::uint64_t p_max, std::uint64_t q_max) {
    std::vector<GroupSpec> out;
    const auto ps = primes_up_to(p_max);
    const auto qs = primes_up_to(q_max);
    for (int t = 1; t <= kNumTypes; ++t) {
        if (t <= 14) {
            if (p_max >= 3 && q_max >= 2) out.push_back(make_spec(t, 3, 2));
            else if (p_max >= 2 && q_max >= 3) out.push_back(make_spec(t, 2, 3));
            continue;
        }
        for (auto p : ps)
            for (auto q : qs) {
                if (p * p * q * q > kCayleyCap) continue;
                if (admissible(t, p, q)) out.push_back(make_spec(t, p, q));
            }
    }
    return out;
}

} // namespace p2q2
