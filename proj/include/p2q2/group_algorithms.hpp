#pragma once

// Algorithms shared by every finite group representation in the library.
// A representation is any type modelling FiniteGroupOps: it names a value
// type, an identity, a multiplication and a 64-bit key that identifies an
// element uniquely.  PcGroup elements and automorphisms both plug in.

#include <concepts>
#include <cstdint>
#include <map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "p2q2/numtheory.hpp"

namespace p2q2 {

template <class Ops>
concept FiniteGroupOps = requires(const Ops& ops, const typename Ops::value_type& x) {
    typename Ops::value_type;
    { ops.identity() } -> std::convertible_to<typename Ops::value_type>;
    { ops.multiply(x, x) } -> std::convertible_to<typename Ops::value_type>;
    { ops.key(x) } -> std::convertible_to<std::uint64_t>;
};

/// Elements of a subgroup together with the generators actually needed to reach them.
template <class V>
struct Closure {
    std::vector<V> elements;
    std::vector<V> generators;
};

/**
 * Dimino's algorithm: adds one generator at a time and enumerates the new
 * subgroup as a union of right cosets of the previous one.  Generators that
 * already lie in the current subgroup are skipped, so `generators` of the
 * result is an irredundant prefix-generated subset of the input.
 */
template <FiniteGroupOps Ops>
Closure<typename Ops::value_type> dimino(const Ops& ops, const std::vector<typename Ops::value_type>& gens) {
    using V = typename Ops::value_type;
    Closure<V> out;
    std::unordered_set<std::uint64_t> seen;
    out.elements.push_back(ops.identity());
    seen.insert(ops.key(ops.identity()));

    for (const V& g : gens) {
        if (seen.contains(ops.key(g))) continue;
        out.generators.push_back(g);
        const std::size_t prev = out.elements.size();
        std::vector<V> reps;
        auto add_coset = [&](const V& rep) {
            reps.push_back(rep);
            for (std::size_t i = 0; i < prev; ++i) {
                V x = ops.multiply(out.elements[i], rep);
                seen.insert(ops.key(x));
                out.elements.push_back(std::move(x));
            }
        };
        add_coset(g);
        for (std::size_t r = 0; r < reps.size(); ++r) {
            for (const V& s : out.generators) {
                V y = ops.multiply(reps[r], s);
                if (!seen.contains(ops.key(y))) add_coset(y);
            }
        }
    }
    return out;
}

/// Least d >= 1 with x^d = 1.
template <FiniteGroupOps Ops>
std::uint64_t element_order(const Ops& ops, const typename Ops::value_type& x) {
    const std::uint64_t id = ops.key(ops.identity());
    std::uint64_t d = 1;
    auto y = x;
    while (ops.key(y) != id) {
        y = ops.multiply(y, x);
        ++d;
    }
    return d;
}

template <FiniteGroupOps Ops>
std::map<std::uint64_t, std::uint64_t> order_histogram(const Ops& ops, const std::vector<typename Ops::value_type>& elements) {
    std::map<std::uint64_t, std::uint64_t> hist;
    for (const auto& x : elements) ++hist[element_order(ops, x)];
    return hist;
}

/// Elements of `elements` commuting with every generator of the ambient group.
template <FiniteGroupOps Ops>
std::vector<typename Ops::value_type> centralizing(const Ops& ops, const std::vector<typename Ops::value_type>& elements,
                                                   const std::vector<typename Ops::value_type>& ambient_gens) {
    std::vector<typename Ops::value_type> out;
    for (const auto& x : elements) {
        bool central = true;
        for (const auto& g : ambient_gens) {
            if (ops.key(ops.multiply(x, g)) != ops.key(ops.multiply(g, x))) {
                central = false;
                break;
            }
        }
        if (central) out.push_back(x);
    }
    return out;
}

/// Smallest normal subgroup of <ambient_gens> containing `gens`; needs inverses.
template <FiniteGroupOps Ops, class InverseFn>
Closure<typename Ops::value_type> normal_closure(const Ops& ops, std::vector<typename Ops::value_type> gens,
                                                 const std::vector<typename Ops::value_type>& ambient_gens, InverseFn inverse) {
    for (;;) {
        auto cl = dimino(ops, gens);
        std::unordered_set<std::uint64_t> members;
        for (const auto& x : cl.elements) members.insert(ops.key(x));
        bool grew = false;
        for (const auto& s : cl.generators) {
            for (const auto& g : ambient_gens) {
                auto c = ops.multiply(ops.multiply(inverse(g), s), g);
                if (!members.contains(ops.key(c))) {
                    gens.push_back(c);
                    grew = true;
                    break;
                }
            }
            if (grew) break;
        }
        if (!grew) return cl;
    }
}

/// Commutator subgroup of <ambient_gens>: normal closure of the generator commutators.
template <FiniteGroupOps Ops, class InverseFn>
Closure<typename Ops::value_type> derived_subgroup(const Ops& ops, const std::vector<typename Ops::value_type>& ambient_gens,
                                                   InverseFn inverse) {
    std::vector<typename Ops::value_type> comms;
    for (std::size_t i = 0; i < ambient_gens.size(); ++i) {
        for (std::size_t j = i + 1; j < ambient_gens.size(); ++j) {
            const auto& x = ambient_gens[i];
            const auto& y = ambient_gens[j];
            comms.push_back(ops.multiply(ops.multiply(inverse(x), inverse(y)), ops.multiply(x, y)));
        }
    }
    return normal_closure(ops, std::move(comms), ambient_gens, inverse);
}

/**
 * Primary invariants of a finite abelian group from its order counts.  For
 * each prime l, the number of elements of order dividing l^k is
 * prod_i l^min(k, a_i); successive quotients give #{i : a_i >= k}.
 */
inline std::vector<std::uint64_t> invariants_from_order_counts(const std::map<std::uint64_t, std::uint64_t>& hist) {
    std::uint64_t total = 0;
    for (auto [o, c] : hist) total += c;
    std::vector<std::uint64_t> out;
    if (total <= 1) return out;
    for (auto [ell, top] : detail::factor_small(total)) {
        auto count_dividing = [&](std::uint64_t bound) {
            std::uint64_t c = 0;
            for (auto [o, cnt] : hist) {
                if (bound % o == 0) c += cnt;
            }
            return c;
        };
        auto log_ell = [&](std::uint64_t v) {
            unsigned e = 0;
            while (v > 1) {
                v /= ell;
                ++e;
            }
            return e;
        };
        std::vector<unsigned> at_least;  // at_least[k-1] = #{i : a_i >= k}
        std::uint64_t prev = 1, power = 1;
        for (unsigned k = 1; k <= top; ++k) {
            power *= ell;
            const std::uint64_t cur = count_dividing(power);
            at_least.push_back(log_ell(cur) - log_ell(prev));
            prev = cur;
        }
        for (unsigned k = 1; k <= top; ++k) {
            const unsigned exactly = at_least[k - 1] - (k < top ? at_least[k] : 0);
            std::uint64_t pk = 1;
            for (unsigned i = 0; i < k; ++i) pk *= ell;
            for (unsigned i = 0; i < exactly; ++i) out.push_back(pk);
        }
    }
    return out;
}

/// Abelian invariants of <ambient_gens> / derived, given the whole group as `elements`.
template <FiniteGroupOps Ops>
std::vector<std::uint64_t> abelian_invariants(const Ops& ops, const std::vector<typename Ops::value_type>& elements,
                                              const std::vector<typename Ops::value_type>& derived) {
    std::unordered_set<std::uint64_t> in_derived;
    for (const auto& x : derived) in_derived.insert(ops.key(x));
    std::map<std::uint64_t, std::uint64_t> coset_orders;
    for (const auto& x : elements) {
        std::uint64_t d = 1;
        auto y = x;
        while (!in_derived.contains(ops.key(y))) {
            y = ops.multiply(y, x);
            ++d;
        }
        ++coset_orders[d];
    }
    for (auto& [o, c] : coset_orders) c /= derived.size();
    return invariants_from_order_counts(coset_orders);
}

} // namespace p2q2
