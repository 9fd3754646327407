#include <gtest/gtest.h>

#include "p2q2/catalog.hpp"
#include "p2q2/pc_group.hpp"

using namespace p2q2;

namespace {
PcGroup cyclic(std::uint32_t n) { return collect(PcPresentation({{"a", n}})); }

PcGroup quaternion8() {
    PcPresentation P({{"i", 2}, {"j", 2}, {"z", 2}});
    P.set_power(0, P.word({{2, 1}}));
    P.set_power(1, P.word({{2, 1}}));
    P.set_conjugate(0, 1, P.word({{1, 1}, {2, 1}}));
    return collect(P);
}
} // namespace

TEST(Collect, CyclicFour) {
    const auto G = cyclic(4);
    EXPECT_EQ(G.order(), 4U);
    const Elem a = G.generator(0);
    EXPECT_EQ(G.mul(G.pow(a, 2), G.pow(a, 3)), a);
    EXPECT_EQ(G.element_order(a), 4U);
    EXPECT_EQ(G.format(G.pow(a, 3)), "a^3");
}

TEST(Collect, IdentityAndInverseLaws) {
    const auto G = build(make_spec(19, 5, 2));
    for (Elem x = 0; x < G.order(); ++x) {
        EXPECT_EQ(G.mul(G.identity(), x), x);
        EXPECT_EQ(G.mul(x, G.identity()), x);
        EXPECT_EQ(G.mul(x, G.inverse(x)), G.identity());
    }
}

// a^i b^j * a^k b^l = a^(i+k) b^(j r^k + l) with b^a = b^r.
TEST(Collect, MetacyclicTableMatchesClosedForm) {
    const std::uint32_t r = 24;
    const auto G = build(make_spec(19, 5, 2));
    ASSERT_EQ(G.order(), 100U);
    auto rpow = [&](std::uint32_t k) {
        std::uint32_t v = 1;
        for (std::uint32_t i = 0; i < k; ++i) v = v * r % 25;
        return v;
    };
    for (std::uint32_t i = 0; i < 4; ++i)
        for (std::uint32_t j = 0; j < 25; ++j)
            for (std::uint32_t k = 0; k < 4; ++k)
                for (std::uint32_t l = 0; l < 25; ++l) {
                    const Elem x = G.index_of({i, j}), y = G.index_of({k, l});
                    const Elem want = G.index_of({(i + k) % 4, (j * rpow(k) + l) % 25});
                    ASSERT_EQ(G.mul(x, y), want);
                }
    const Elem a = G.generator(0), b = G.generator(1);
    EXPECT_EQ(G.mul(b, a), G.mul(a, G.pow(b, 24)));
    EXPECT_EQ(G.element_order(a), 4U);
    EXPECT_EQ(G.element_order(b), 25U);
}

TEST(Collect, NontrivialPowerRules) {
    const auto Q = quaternion8();
    EXPECT_EQ(Q.order(), 8U);
    std::size_t order4 = 0;
    for (Elem x = 0; x < 8; ++x) order4 += Q.element_order(x) == 4;
    EXPECT_EQ(order4, 6U);
}

TEST(Collect, Type34GeneratorOrders) {
    const auto G = build(make_spec(34, 3, 2));
    EXPECT_EQ(G.order(), 36U);
    std::vector<std::uint32_t> orders;
    for (std::size_t k = 0; k < 4; ++k) orders.push_back(G.element_order(G.generator(k)));
    EXPECT_EQ(orders, (std::vector<std::uint32_t>{2, 2, 3, 3}));
}

TEST(Collect, RejectsInconsistentAction) {
    // 2 has order 4 mod 5, so it cannot describe the action of an element of order 3.
    PcPresentation P({{"a", 3}, {"b", 5}});
    P.set_conjugate(0, 1, P.word({{1, 2}}));
    EXPECT_THROW(collect(P), InconsistentPresentation);
}

TEST(Collect, RejectsNonHomomorphicConjugation) {
    PcPresentation P({{"a", 2}, {"b", 3}, {"c", 3}});
    P.set_conjugate(0, 1, P.word({{2, 1}}));
    EXPECT_THROW(collect(P), InconsistentPresentation);
}

TEST(Collect, RejectsPowerRuleNotFixed) {
    // a^2 = b while a inverts b: a must commute with a^2.
    PcPresentation P({{"a", 2}, {"b", 3}});
    P.set_power(0, P.word({{1, 1}}));
    P.set_conjugate(0, 1, P.word({{1, 2}}));
    EXPECT_THROW(collect(P), InconsistentPresentation);
}

TEST(Collect, RejectsOversizedGroup) {
    EXPECT_THROW(collect(PcPresentation({{"a", 200}, {"b", 101}})), GroupTooLarge);
}

TEST(Presentation, Validation) {
    EXPECT_THROW(PcPresentation({}), InconsistentPresentation);
    EXPECT_THROW(PcPresentation({{"a", 1}}), InconsistentPresentation);
    PcPresentation P({{"a", 2}, {"b", 3}});
    EXPECT_THROW(P.word({{1, 1}, {0, 1}}), InconsistentPresentation);
    EXPECT_THROW(P.set_conjugate(1, 0, P.word({{1, 1}})), InconsistentPresentation);
    EXPECT_THROW(P.set_power(1, P.word({{0, 1}})), InconsistentPresentation);
    EXPECT_EQ(P.word({{1, -1}}), (Word{0, 2}));
    EXPECT_EQ(P.find("b"), 1U);
    EXPECT_THROW((void)P.find("z"), std::out_of_range);
}

TEST(PcGroup, NormalFormsAndParents) {
    const auto G = build(make_spec(23, 5, 2));
    for (Elem x = 1; x < G.order(); ++x) {
        EXPECT_EQ(G.mul(G.parent(x), G.generator(G.last_generator(x))), x);
        EXPECT_EQ(G.index_of(G.exponents(x)), x);
    }
    EXPECT_THROW((void)G.index_of({0, 0}), std::invalid_argument);
    EXPECT_THROW((void)G.index_of({4, 0, 0}), std::invalid_argument);
}

TEST(PcGroup, PowConjCommutator) {
    const auto G = build(make_spec(19, 5, 2));
    const Elem a = G.generator(0), b = G.generator(1);
    EXPECT_EQ(G.conj(b, a), G.pow(b, 24));
    EXPECT_EQ(G.commutator(b, a), G.pow(b, 23));
    for (Elem x = 0; x < G.order(); ++x) {
        Elem y = G.identity();
        for (std::uint64_t e = 0; e < 60; ++e) {
            ASSERT_EQ(G.pow(x, e), y);
            y = G.mul(y, x);
        }
    }
}
