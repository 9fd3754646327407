#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "p2q2/catalog.hpp"
#include "p2q2/structure.hpp"

using namespace p2q2;

namespace {
std::size_t center_by_scan(const PcGroup& G) {
    std::size_t c = 0;
    for (Elem x = 0; x < G.order(); ++x) {
        bool central = true;
        for (Elem y = 0; y < G.order() && central; ++y) central = G.mul(x, y) == G.mul(y, x);
        c += central;
    }
    return c;
}

std::set<Elem> commutators_closure_by_scan(const PcGroup& G) {
    std::set<Elem> S{G.identity()};
    for (Elem x = 0; x < G.order(); ++x)
        for (Elem y = 0; y < G.order(); ++y) S.insert(G.commutator(x, y));
    for (bool grew = true; grew;) {
        grew = false;
        const std::vector<Elem> cur(S.begin(), S.end());
        for (Elem x : cur)
            for (Elem y : cur)
                if (S.insert(G.mul(x, y)).second) grew = true;
    }
    return S;
}
} // namespace

TEST(SubgroupClosure, TrivialAndWhole) {
    const auto G = build(make_spec(19, 5, 2));
    EXPECT_EQ(subgroup_closure(G, {}).order(), 1U);
    EXPECT_EQ(subgroup_closure(G, presentation_generators(G)).order(), G.order());
    const auto A2 = subgroup_closure(G, {G.pow(G.generator(0), 2)});
    EXPECT_EQ(A2.order(), 2U);
    EXPECT_TRUE(A2.contains(G.identity()));
}

TEST(SubgroupClosure, GeneratorsAreIrredundant) {
    const auto G = build(make_spec(18, 5, 3));
    std::vector<Elem> all(G.order());
    for (Elem x = 0; x < G.order(); ++x) all[x] = x;
    const auto H = subgroup_closure(G, all);
    EXPECT_EQ(H.order(), G.order());
    for (std::size_t drop = 0; drop < H.generators.size(); ++drop) {
        std::vector<Elem> fewer = H.generators;
        fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(drop));
        EXPECT_LT(subgroup_closure(G, fewer).order(), G.order());
    }
}

TEST(Center, MatchesScan) {
    for (const auto& spec : {make_spec(19, 5, 2), make_spec(8, 3, 2), make_spec(11, 3, 2), make_spec(25, 7, 3), make_spec(36, 5, 3)}) {
        const auto G = build(spec);
        EXPECT_EQ(center(G).order(), center_by_scan(G)) << spec.to_string();
    }
    EXPECT_EQ(center(build(make_spec(19, 5, 2))).order(), 2U);
}

TEST(DerivedSubgroup, MatchesScan) {
    for (const auto& spec : {make_spec(19, 5, 2), make_spec(6, 3, 2), make_spec(13, 3, 2), make_spec(33, 3, 2)}) {
        const auto G = build(spec);
        const auto D = derived_subgroup(G);
        const auto ref = commutators_closure_by_scan(G);
        EXPECT_EQ(std::set<Elem>(D.elements.begin(), D.elements.end()), ref) << spec.to_string();
    }
}

TEST(DerivedSubgroup, Type36IsTheSylowP) {
    const auto G = build(make_spec(36, 5, 3));
    const auto D = derived_subgroup(G);
    EXPECT_EQ(D.order(), 25U);
    EXPECT_TRUE(D.contains(G.generator(2)));
    EXPECT_TRUE(D.contains(G.generator(3)));
}

TEST(Abelian, CenterIsWholeAndDerivedTrivial) {
    const auto G = build(make_spec(16, 5, 2));
    EXPECT_TRUE(is_abelian(G));
    EXPECT_EQ(center(G).order(), G.order());
    EXPECT_EQ(derived_subgroup(G).order(), 1U);
    EXPECT_FALSE(is_abelian(build(make_spec(19, 5, 2))));
}

TEST(AbelianInvariants, Examples) {
    EXPECT_EQ(abelian_invariants(collect(PcPresentation({{"a", 6}}))), (std::vector<std::uint64_t>{2, 3}));
    EXPECT_EQ(abelian_invariants(build(make_spec(15, 5, 3))), (std::vector<std::uint64_t>{9, 25}));
    EXPECT_EQ(abelian_invariants(build(make_spec(3, 3, 2))), (std::vector<std::uint64_t>{2, 2, 3, 3}));
    // G/G' of Z4 : Z25 with a inverting b is Z4.
    EXPECT_EQ(abelian_invariants(build(make_spec(19, 5, 2))), (std::vector<std::uint64_t>{4}));
}

TEST(AbelianInvariants, FromOrderCounts) {
    // Z2 x Z4: orders 1:1, 2:3, 4:4.
    EXPECT_EQ(invariants_from_order_counts({{1, 1}, {2, 3}, {4, 4}}), (std::vector<std::uint64_t>{2, 4}));
    EXPECT_TRUE(invariants_from_order_counts({{1, 1}}).empty());
}

TEST(OrderHistogram, Examples) {
    using H = std::map<std::uint64_t, std::uint64_t>;
    EXPECT_EQ(order_histogram(collect(PcPresentation({{"a", 4}}))), (H{{1, 1}, {2, 1}, {4, 2}}));
    EXPECT_EQ(order_histogram(collect(PcPresentation({{"a", 2}, {"b", 2}}))), (H{{1, 1}, {2, 3}}));
}

TEST(OrderHistogram, CyclicOfOrder225) {
    const auto G = build(make_spec(15, 5, 3));
    const auto hist = order_histogram(G);
    EXPECT_EQ(hist.size(), 9U);  // divisors of 225
    for (auto [d, c] : hist) EXPECT_EQ(c, oracle::totient(d)) << d;
}

TEST(OrderHistogram, MatchesRepeatedMultiplication) {
    const auto G = build(make_spec(23, 5, 2));
    std::map<std::uint64_t, std::uint64_t> ref;
    for (Elem x = 0; x < G.order(); ++x) {
        std::uint64_t d = 1;
        for (Elem y = x; y != G.identity(); y = G.mul(y, x)) ++d;
        ++ref[d];
    }
    EXPECT_EQ(order_histogram(G), ref);
}

TEST(ConjugacyClasses, SizesPartitionTheGroup) {
    const auto G = build(make_spec(6, 3, 2));  // S3 x S3 has 9 classes
    const auto sizes = conjugacy_class_sizes(G);
    std::size_t total = 0;
    for (auto s : sizes) total += s;
    EXPECT_EQ(total, G.order());
    EXPECT_EQ(sizes.size(), 9U);
}
