#pragma once

// Matrix-of-maps view of an endomorphism of G = H : K.
//
// The catalog lists K's generators first, so the normal form of every element
// is k*h with k in K and h in H.  With x^y = y^-1 x y, a map theta on G with
// theta(h) = alpha(h) gamma(h) and theta(k) = beta(k) delta(k) is an
// automorphism exactly when the checks below pass.  Each map is given on
// generators and extended along normal forms using the corresponding
// cocycle rule, so a tuple that breaks a relation shows up as a failed
// identity on some pair.

#include <cstdint>
#include <string>
#include <vector>

#include "p2q2/automorphism.hpp"
#include "p2q2/pc_group.hpp"

namespace p2q2 {

struct AutMatrix {
    std::vector<Elem> alpha;  ///< images in H of the H-generators
    std::vector<Elem> beta;   ///< images in H of the K-generators
    std::vector<Elem> gamma;  ///< images in K of the H-generators
    std::vector<Elem> delta;  ///< images in K of the K-generators
};

struct MatrixVerdict {
    bool ok = true;
    std::string violated;  ///< name of the first failed condition; empty when ok
    explicit operator bool() const noexcept { return ok; }
};

/// The block split of a catalog group: the first `k_gens` generators span K, the rest span H.
class SemidirectSplit {
public:
    SemidirectSplit(const PcGroup& G, std::size_t k_gens) : G_(G), k_(k_gens) {
        if (k_gens == 0 || k_gens >= G.num_generators()) throw std::invalid_argument("split needs nonempty H and K blocks");
        h_order_ = 1;
        for (std::size_t i = k_gens; i < G.num_generators(); ++i) h_order_ *= G.presentation().relative_order(i);
    }

    [[nodiscard]] const PcGroup& group() const noexcept { return G_; }
    [[nodiscard]] std::size_t k_gens() const noexcept { return k_; }
    [[nodiscard]] std::size_t h_gens() const noexcept { return G_.num_generators() - k_; }
    [[nodiscard]] std::size_t h_order() const noexcept { return h_order_; }
    [[nodiscard]] std::size_t k_order() const noexcept { return G_.order() / h_order_; }

    /// H is the trailing-generator subgroup, which occupies indices [0, |H|).
    [[nodiscard]] bool in_h(Elem x) const noexcept { return x < h_order_; }
    [[nodiscard]] bool in_k(Elem x) const noexcept { return x % h_order_ == 0; }
    [[nodiscard]] Elem k_part(Elem x) const noexcept { return static_cast<Elem>(x - x % h_order_); }
    [[nodiscard]] Elem h_element(std::size_t i) const noexcept { return static_cast<Elem>(i); }
    [[nodiscard]] Elem k_element(std::size_t j) const noexcept { return static_cast<Elem>(j * h_order_); }

private:
    const PcGroup& G_;
    std::size_t k_;
    std::size_t h_order_;
};

/// Splits theta into its four blocks using the normal form k*h of each image.
inline AutMatrix matrix_of(const SemidirectSplit& S, const Automorphism& theta) {
    const PcGroup& G = S.group();
    AutMatrix M;
    for (std::size_t g = 0; g < G.num_generators(); ++g) {
        const Elem img = theta.images[g];
        const Elem kp = S.k_part(img);
        const Elem rest = G.mul(img, G.inverse(kp));
        if (g < S.k_gens()) {
            M.delta.push_back(kp);
            M.beta.push_back(rest);
        } else {
            M.gamma.push_back(kp);
            M.alpha.push_back(rest);
        }
    }
    return M;
}

/// Generator images of theta(k) = beta(k) delta(k), theta(h) = alpha(h) gamma(h).
inline Automorphism automorphism_of(const SemidirectSplit& S, const AutMatrix& M) {
    const PcGroup& G = S.group();
    std::vector<Elem> imgs;
    for (std::size_t j = 0; j < S.k_gens(); ++j) imgs.push_back(G.mul(M.beta.at(j), M.delta.at(j)));
    for (std::size_t i = 0; i < S.h_gens(); ++i) imgs.push_back(G.mul(M.alpha.at(i), M.gamma.at(i)));
    return make_automorphism(G, imgs);
}

inline AutMatrix identity_matrix(const SemidirectSplit& S) {
    const PcGroup& G = S.group();
    AutMatrix M;
    for (std::size_t j = 0; j < S.k_gens(); ++j) {
        M.beta.push_back(G.identity());
        M.delta.push_back(G.generator(j));
    }
    for (std::size_t i = S.k_gens(); i < G.num_generators(); ++i) {
        M.alpha.push_back(G.generator(i));
        M.gamma.push_back(G.identity());
    }
    return M;
}

/**
 * Checks, in order: the block shapes, gamma and delta being homomorphisms,
 * and conditions (i) to (v):
 *   (i)   alpha(hh') = alpha(h) * gamma(h) alpha(h') gamma(h)^-1
 *   (ii)  beta(kk')  = beta(k)  * delta(k) beta(k') delta(k)^-1
 *   (iii) gamma(h^k) = gamma(h)^delta(k)
 *   (iv)  alpha(h^k) gamma(h^k) = (alpha(h) gamma(h))^theta(k)
 *   (v)   hk -> alpha(h) gamma(h) beta(k) delta(k) is a bijection of G
 * Pairs range over all of H x H, K x K and H x K.
 */
inline MatrixVerdict verify_aut_matrix(const SemidirectSplit& S, const AutMatrix& M) {
    const PcGroup& G = S.group();
    const std::size_t hk = S.k_gens();
    const std::size_t nh = S.h_order(), nk = S.k_order();
    auto fail = [](const char* what) { return MatrixVerdict{false, what}; };

    if (M.alpha.size() != S.h_gens() || M.gamma.size() != S.h_gens() || M.beta.size() != hk || M.delta.size() != hk)
        return fail("shape");
    for (Elem x : M.alpha)
        if (x >= G.order() || !S.in_h(x)) return fail("shape");
    for (Elem x : M.beta)
        if (x >= G.order() || !S.in_h(x)) return fail("shape");
    for (Elem x : M.gamma)
        if (x >= G.order() || !S.in_k(x)) return fail("shape");
    for (Elem x : M.delta)
        if (x >= G.order() || !S.in_k(x)) return fail("shape");

    // Extend along normal forms; parents of H (K) elements stay in H (K).
    std::vector<Elem> alpha(nh), gamma(nh), beta(nk), delta(nk);
    alpha[0] = gamma[0] = G.identity();
    for (std::size_t i = 1; i < nh; ++i) {
        const Elem x = S.h_element(i);
        const Elem par = G.parent(x);
        const std::size_t g = G.last_generator(x) - hk;
        const Elem gp = gamma[par];
        gamma[i] = G.mul(gp, M.gamma[g]);
        alpha[i] = G.mul(alpha[par], G.mul(G.mul(gp, M.alpha[g]), G.inverse(gp)));
    }
    beta[0] = delta[0] = G.identity();
    for (std::size_t j = 1; j < nk; ++j) {
        const Elem x = S.k_element(j);
        const std::size_t par = G.parent(x) / nh;
        const std::size_t g = G.last_generator(x);
        const Elem dp = delta[par];
        delta[j] = G.mul(dp, M.delta[g]);
        beta[j] = G.mul(beta[par], G.mul(G.mul(dp, M.beta[g]), G.inverse(dp)));
    }
    auto hidx = [](Elem x) { return static_cast<std::size_t>(x); };
    auto kidx = [nh](Elem x) { return static_cast<std::size_t>(x / nh); };

    for (std::size_t a = 0; a < nh; ++a)
        for (std::size_t b = 0; b < nh; ++b)
            if (gamma[hidx(G.mul(S.h_element(a), S.h_element(b)))] != G.mul(gamma[a], gamma[b])) return fail("gamma-hom");
    for (std::size_t a = 0; a < nk; ++a)
        for (std::size_t b = 0; b < nk; ++b)
            if (delta[kidx(G.mul(S.k_element(a), S.k_element(b)))] != G.mul(delta[a], delta[b])) return fail("delta-hom");
    for (std::size_t a = 0; a < nh; ++a)
        for (std::size_t b = 0; b < nh; ++b) {
            const Elem lhs = alpha[hidx(G.mul(S.h_element(a), S.h_element(b)))];
            const Elem rhs = G.mul(alpha[a], G.mul(G.mul(gamma[a], alpha[b]), G.inverse(gamma[a])));
            if (lhs != rhs) return fail("(i)");
        }
    for (std::size_t a = 0; a < nk; ++a)
        for (std::size_t b = 0; b < nk; ++b) {
            const Elem lhs = beta[kidx(G.mul(S.k_element(a), S.k_element(b)))];
            const Elem rhs = G.mul(beta[a], G.mul(G.mul(delta[a], beta[b]), G.inverse(delta[a])));
            if (lhs != rhs) return fail("(ii)");
        }
    for (std::size_t a = 0; a < nh; ++a)
        for (std::size_t b = 0; b < nk; ++b) {
            const std::size_t c = hidx(G.conj(S.h_element(a), S.k_element(b)));
            if (gamma[c] != G.conj(gamma[a], delta[b])) return fail("(iii)");
        }
    for (std::size_t a = 0; a < nh; ++a)
        for (std::size_t b = 0; b < nk; ++b) {
            const std::size_t c = hidx(G.conj(S.h_element(a), S.k_element(b)));
            const Elem theta_k = G.mul(beta[b], delta[b]);
            if (G.mul(alpha[c], gamma[c]) != G.conj(G.mul(alpha[a], gamma[a]), theta_k)) return fail("(iv)");
        }
    std::vector<std::uint8_t> hit(G.order(), 0);
    for (std::size_t a = 0; a < nh; ++a)
        for (std::size_t b = 0; b < nk; ++b) {
            const Elem y = G.mul(G.mul(alpha[a], gamma[a]), G.mul(beta[b], delta[b]));
            if (hit[y]) return fail("(v)");
            hit[y] = 1;
        }
    return {};
}

} // namespace p2q2
