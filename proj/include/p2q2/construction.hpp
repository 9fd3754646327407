#pragma once

// Explicit Aut(G) = Q : R for the semidirect types 15-36.
//
// R realizes the compatible pairs (alpha, delta) of factor automorphisms and
// Q the crossed maps beta with alpha = id, delta = id.  Every family member
// is checked to be an automorphism before it is used, so a wrong parameter
// range surfaces as an error rather than a silently smaller group.

#include <array>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "p2q2/automorphism.hpp"
#include "p2q2/catalog.hpp"
#include "p2q2/numtheory.hpp"
#include "p2q2/pc_group.hpp"

namespace p2q2 {

/// A family member failed the automorphism check.
class ConstructionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A family's constraints admit no parameters at all.
class ConstraintUnsatisfiable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct QRConstruction {
    AutGroup Q;
    AutGroup R;
    AutGroup QR;
};

namespace detail {

inline std::vector<std::int64_t> units_mod(std::int64_t m) {
    std::vector<std::int64_t> out;
    for (std::int64_t u = 1; u < m; ++u)
        if (std::gcd(u, m) == 1) out.push_back(u);
    if (m == 1) out.push_back(0);
    return out;
}

/// (i, j, l, k) with ik - jl a unit mod p, i.e. the matrices of GL(2, p).
inline std::vector<std::array<std::int64_t, 4>> gl2_entries(std::int64_t p) {
    std::vector<std::array<std::int64_t, 4>> out;
    for (std::int64_t i = 0; i < p; ++i)
        for (std::int64_t j = 0; j < p; ++j)
            for (std::int64_t l = 0; l < p; ++l)
                for (std::int64_t k = 0; k < p; ++k)
                    if (((i * k - j * l) % p + p) % p != 0) out.push_back({i, j, l, k});
    return out;
}

class FamilyBuilder {
public:
    FamilyBuilder(const GroupSpec& spec, const PcGroup& G) : spec_(spec), G_(G) {}

    [[nodiscard]] Elem e(std::initializer_list<std::pair<std::size_t, std::int64_t>> letters) const {
        return G_.index_of(G_.presentation().word(letters));
    }
    [[nodiscard]] Elem mul(Elem x, Elem y) const { return G_.mul(x, y); }
    [[nodiscard]] Elem gen(std::size_t k) const { return G_.generator(k); }

    void add(std::vector<Automorphism>& out, const std::vector<Elem>& images, const char* family) const {
        const Automorphism f = make_automorphism(G_, images);
        std::string bad = first_violated_relation(G_, f.images);
        if (bad.empty() && !is_bijective_image(G_, f.images)) bad = "not injective";
        if (!bad.empty()) {
            std::string imgs;
            for (Elem x : images) imgs += (imgs.empty() ? "" : ", ") + G_.format(x);
            throw ConstructionError(spec_.to_string() + ": " + family + " member (" + imgs + ") breaks " + bad);
        }
        out.push_back(f);
    }

private:
    const GroupSpec& spec_;
    const PcGroup& G_;
};

} // namespace detail

/**
 * Builds Q, R and their join inside Aut(G) from the per-type parameter
 * families.  Generator images are listed K-block first, matching the
 * catalog presentations.
 */
inline QRConstruction construct_QR(const GroupSpec& spec, const PcGroup& G) {
    const int t = spec.type_id;
    if (t < 15 || t > kNumTypes) throw std::invalid_argument("construct_QR covers types 15-36, got type " + std::to_string(t));
    const auto p = static_cast<std::int64_t>(spec.p);
    const auto q = static_cast<std::int64_t>(spec.q);
    const detail::FamilyBuilder B(spec, G);
    std::vector<Automorphism> Rm, Qm;
    using detail::units_mod;
    auto mod = [](std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; };

    switch (t) {
    case 15:
        for (auto j : units_mod(q * q))
            for (auto i : units_mod(p * p)) B.add(Rm, {B.e({{0, j}}), B.e({{1, i}})}, "R");
        break;
    case 16:
        for (const auto& [i, j, l, k] : detail::gl2_entries(q))
            for (auto s : units_mod(p * p))
                B.add(Rm, {B.e({{0, i}, {1, j}}), B.e({{0, l}, {1, k}}), B.e({{2, s}})}, "R");
        break;
    case 17:
        for (auto s : units_mod(q * q))
            for (const auto& [i, j, l, k] : detail::gl2_entries(p))
                B.add(Rm, {B.e({{0, s}}), B.e({{1, i}, {2, j}}), B.e({{1, l}, {2, k}})}, "R");
        break;
    case 18:
        for (const auto& [a1, a2, a3, a4] : detail::gl2_entries(q))
            for (const auto& [i, j, l, k] : detail::gl2_entries(p))
                B.add(Rm,
                      {B.e({{0, a1}, {1, a2}}), B.e({{0, a3}, {1, a4}}), B.e({{2, i}, {3, j}}), B.e({{2, l}, {3, k}})},
                      "R");
        break;
    case 19: case 20:
        for (auto i : units_mod(p * p))
            for (auto j : units_mod(q * q))
                if (t == 19 ? j % q == 1 : j == 1) B.add(Rm, {B.e({{0, j}}), B.e({{1, i}})}, "R");
        for (std::int64_t lam = 0; lam < p * p; ++lam) B.add(Qm, {B.mul(B.e({{1, lam}}), B.gen(0)), B.gen(1)}, "Q");
        break;
    case 21:
        for (auto s : units_mod(p * p))
            for (std::int64_t j = 0; j < q; ++j)
                for (std::int64_t k = 1; k < q; ++k) B.add(Rm, {B.e({{0, 1}, {1, j}}), B.e({{1, k}}), B.e({{2, s}})}, "R");
        for (std::int64_t lam = 0; lam < p * p; ++lam)
            B.add(Qm, {B.mul(B.e({{2, lam}}), B.gen(0)), B.gen(1), B.gen(2)}, "Q");
        break;
    case 22: case 23: case 24: case 25: case 26: case 27: case 28: case 29: {
        const std::int64_t ka = static_cast<std::int64_t>(G.presentation().relative_order(0));
        auto add_r = [&](std::int64_t s, std::int64_t i, std::int64_t j, std::int64_t l, std::int64_t k) {
            B.add(Rm, {B.e({{0, s}}), B.e({{1, i}, {2, j}}), B.e({{1, l}, {2, k}})}, "R");
        };
        auto diag = [&](auto keep_s) {
            for (auto s : units_mod(ka))
                if (keep_s(s))
                    for (std::int64_t i = 1; i < p; ++i)
                        for (std::int64_t k = 1; k < p; ++k) add_r(s, i, 0, 0, k);
        };
        auto antidiag = [&](auto keep_s) {
            for (auto s : units_mod(ka))
                if (keep_s(s))
                    for (std::int64_t j = 1; j < p; ++j)
                        for (std::int64_t l = 1; l < p; ++l) add_r(s, 0, j, l, 0);
        };
        auto gl2 = [&](auto keep_s) {
            for (auto s : units_mod(ka))
                if (keep_s(s))
                    for (const auto& [i, j, l, k] : detail::gl2_entries(p)) add_r(s, i, j, l, k);
        };
        auto one_mod = [&](std::int64_t m) { return [=](std::int64_t s) { return s % m == 1 % m; }; };
        auto minus_one_mod = [&](std::int64_t m) { return [=](std::int64_t s) { return s % m == m - 1; }; };
        auto all_units = [](std::int64_t) { return true; };
        switch (t) {
        case 22: gl2(one_mod(q)); break;
        case 23: diag(all_units); break;
        case 24: diag(one_mod(q)); break;
        case 25: diag(one_mod(q)); antidiag(minus_one_mod(q)); break;
        case 26: diag(one_mod(q * q)); antidiag(minus_one_mod(q * q)); break;
        case 27: diag(one_mod(q)); break;
        case 28: diag(one_mod(q * q)); break;
        case 29: gl2(one_mod(q * q)); break;
        default: break;
        }
        const bool only_c = (t == 23 || t == 24);
        for (std::int64_t lam = 0; lam < (only_c ? 1 : p); ++lam)
            for (std::int64_t rho = 0; rho < p; ++rho)
                B.add(Qm, {B.mul(B.e({{1, lam}, {2, rho}}), B.gen(0)), B.gen(1), B.gen(2)}, "Q");
        break;
    }
    case 30: case 31: case 32: {
        const std::int64_t ka = static_cast<std::int64_t>(G.presentation().relative_order(0));
        const auto D = static_cast<std::int64_t>(spec.params.gf->D);
        const std::int64_t M = t == 30 ? q : (t == 31 ? 4 : q * q);
        for (auto s : units_mod(ka)) {
            const bool plus = s % M == 1, minus = s % M == M - 1;
            if (!plus && !minus) continue;
            const std::int64_t sign = plus ? 1 : -1;
            for (std::int64_t i = 0; i < p; ++i)
                for (std::int64_t l = 0; l < p; ++l) {
                    if (i == 0 && l == 0) continue;
                    B.add(Rm, {B.e({{0, s}}), B.e({{1, i}, {2, mod(sign * l * D, p)}}), B.e({{1, l}, {2, mod(sign * i, p)}})},
                          plus ? "R(+)" : "R(-)");
                }
        }
        for (std::int64_t lam = 0; lam < p; ++lam)
            for (std::int64_t rho = 0; rho < p; ++rho)
                B.add(Qm, {B.mul(B.e({{1, lam}, {2, rho}}), B.gen(0)), B.gen(1), B.gen(2)}, "Q");
        break;
    }
    case 33:
        for (const auto& [i, j, l, k] : detail::gl2_entries(p))
            for (std::int64_t m = 1; m < q; ++m)
                for (std::int64_t s = 0; s < q; ++s)
                    B.add(Rm, {B.e({{0, m}}), B.e({{0, s}, {1, 1}}), B.e({{2, i}, {3, j}}), B.e({{2, l}, {3, k}})}, "R");
        break;
    case 34:
        for (std::int64_t i = 1; i < p; ++i)
            for (std::int64_t k = 1; k < p; ++k)
                for (std::int64_t s = 0; s < 2; ++s)
                    B.add(Rm, {B.gen(0), B.e({{0, s}, {1, 1}}), B.e({{2, i}}), B.e({{3, k}})}, "R");
        break;
    case 35:
        for (std::int64_t i = 1; i < p; ++i)
            for (std::int64_t k = 1; k < p; ++k) {
                B.add(Rm, {B.gen(0), B.gen(1), B.e({{2, i}}), B.e({{3, k}})}, "R(diagonal)");
                B.add(Rm, {B.gen(1), B.gen(0), B.e({{3, i}}), B.e({{2, k}})}, "R(swap)");
            }
        for (std::int64_t lam = 0; lam < p; ++lam)
            for (std::int64_t nu = 0; nu < p; ++nu)
                B.add(Qm, {B.mul(B.e({{2, lam}}), B.gen(0)), B.mul(B.e({{3, nu}}), B.gen(1)), B.gen(2), B.gen(3)}, "Q");
        break;
    case 36: {
        const auto D = static_cast<std::int64_t>(spec.params.gf->D);
        for (std::int64_t sign : {1, -1})
            for (std::int64_t m = 1; m < q; ++m)
                for (std::int64_t s = 0; s < q; ++s)
                    for (std::int64_t i = 0; i < p; ++i)
                        for (std::int64_t l = 0; l < p; ++l) {
                            if (i == 0 && l == 0) continue;
                            B.add(Rm,
                                  {B.e({{0, m}}), B.e({{0, s}, {1, sign}}), B.e({{2, i}, {3, mod(sign * l * D, p)}}),
                                   B.e({{2, l}, {3, mod(sign * i, p)}})},
                                  sign > 0 ? "R(+)" : "R(-)");
                        }
        break;
    }
    default: break;
    }

    if (t == 33 || t == 34 || t == 36) {
        const std::int64_t lam_range = t == 34 ? 1 : p;
        for (std::int64_t rho = 0; rho < p; ++rho)
            for (std::int64_t nu = 0; nu < lam_range; ++nu)
                B.add(Qm, {B.gen(0), B.mul(B.e({{2, rho}, {3, nu}}), B.gen(1)), B.gen(2), B.gen(3)}, "Q");
    }
    if (t <= 18) Qm.push_back(identity_automorphism(G));
    if (Rm.empty() || Qm.empty()) throw ConstraintUnsatisfiable(spec.to_string() + ": a parameter family is empty");

    QRConstruction out;
    out.Q = AutGroup::generated_by(G, Qm);
    out.R = AutGroup::generated_by(G, Rm);
    std::vector<Automorphism> gens = out.Q.generators;
    gens.insert(gens.end(), out.R.generators.begin(), out.R.generators.end());
    out.QR = AutGroup::generated_by(G, gens);
    return out;
}

/// Q normal in QR, Q and R meeting trivially, and |QR| = |Q| |R|.
inline bool check_main_theorem(const PcGroup& G, const AutGroup& Q, const AutGroup& R, const AutGroup& QR) {
    AutGroup qr_copy;
    const AutGroup* join = &QR;
    if (QR.generators.empty() && QR.order() > 1) {
        qr_copy = QR;
        ensure_generators(G, qr_copy);
        join = &qr_copy;
    }
    AutGroup q_copy;
    const AutGroup* sub = &Q;
    if (Q.generators.empty() && Q.order() > 1) {
        q_copy = Q;
        ensure_generators(G, q_copy);
        sub = &q_copy;
    }
    for (const auto& g : join->generators) {
        const Automorphism gi = inverse(G, g);
        for (const auto& s : sub->generators)
            if (!Q.contains(compose(G, gi, compose(G, s, g)))) return false;
    }
    const AutGroup& small = Q.order() <= R.order() ? Q : R;
    const AutGroup& large = Q.order() <= R.order() ? R : Q;
    const Automorphism id = identity_automorphism(G);
    for (const auto& f : small.elements)
        if (!(f == id) && large.contains(f)) return false;
    return QR.order() == Q.order() * R.order();
}

} // namespace p2q2
