#pragma once

// Subgroups and isomorphism invariants of a collected PcGroup.

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "p2q2/group_algorithms.hpp"
#include "p2q2/pc_group.hpp"

namespace p2q2 {

/// Adapts a PcGroup to FiniteGroupOps.
struct PcOps {
    using value_type = Elem;
    const PcGroup& group;

    [[nodiscard]] Elem identity() const noexcept { return group.identity(); }
    [[nodiscard]] Elem multiply(Elem x, Elem y) const noexcept { return group.mul(x, y); }
    [[nodiscard]] std::uint64_t key(Elem x) const noexcept { return x; }
};

struct SubgroupHandle {
    std::vector<bool> members;
    std::vector<Elem> generators;
    std::vector<Elem> elements;  ///< ascending

    [[nodiscard]] std::size_t order() const noexcept { return elements.size(); }
    [[nodiscard]] bool contains(Elem x) const { return members.at(x); }
};

namespace detail {
inline SubgroupHandle make_handle(const PcGroup& G, Closure<Elem> cl) {
    SubgroupHandle h;
    h.members.assign(G.order(), false);
    for (Elem x : cl.elements) h.members[x] = true;
    for (Elem x = 0; x < G.order(); ++x) {
        if (h.members[x]) h.elements.push_back(x);
    }
    h.generators = std::move(cl.generators);
    return h;
}
} // namespace detail

inline std::vector<Elem> presentation_generators(const PcGroup& G) {
    std::vector<Elem> gens;
    for (std::size_t k = 0; k < G.num_generators(); ++k) gens.push_back(G.generator(k));
    return gens;
}

inline SubgroupHandle subgroup_closure(const PcGroup& G, const std::vector<Elem>& gens) {
    return detail::make_handle(G, dimino(PcOps{G}, gens));
}

inline SubgroupHandle center(const PcGroup& G) {
    std::vector<Elem> all(G.order());
    for (Elem x = 0; x < G.order(); ++x) all[x] = x;
    auto z = centralizing(PcOps{G}, all, presentation_generators(G));
    return subgroup_closure(G, z);
}

inline SubgroupHandle derived_subgroup(const PcGroup& G) {
    return detail::make_handle(G, derived_subgroup(PcOps{G}, presentation_generators(G), [&G](Elem x) { return G.inverse(x); }));
}

inline std::map<std::uint64_t, std::uint64_t> order_histogram(const PcGroup& G) {
    std::map<std::uint64_t, std::uint64_t> hist;
    for (Elem x = 0; x < G.order(); ++x) ++hist[G.element_order(x)];
    return hist;
}

/// Primary decomposition of G/[G,G], ascending.
inline std::vector<std::uint64_t> abelian_invariants(const PcGroup& G) {
    std::vector<Elem> all(G.order());
    for (Elem x = 0; x < G.order(); ++x) all[x] = x;
    auto inv = abelian_invariants(PcOps{G}, all, derived_subgroup(G).elements);
    std::sort(inv.begin(), inv.end());
    return inv;
}

inline bool is_abelian(const PcGroup& G) {
    const auto gens = presentation_generators(G);
    for (Elem x : gens)
        for (Elem y : gens)
            if (G.mul(x, y) != G.mul(y, x)) return false;
    return true;
}

/// Sizes of the conjugacy classes, in order of first element.
inline std::vector<std::size_t> conjugacy_class_sizes(const PcGroup& G) {
    std::vector<bool> done(G.order(), false);
    std::vector<std::size_t> sizes;
    for (Elem x = 0; x < G.order(); ++x) {
        if (done[x]) continue;
        std::size_t size = 0;
        for (Elem y = 0; y < G.order(); ++y) {
            const Elem c = G.conj(x, y);
            if (!done[c]) {
                done[c] = true;
                ++size;
            }
        }
        sizes.push_back(size);
    }
    return sizes;
}

} // namespace p2q2
