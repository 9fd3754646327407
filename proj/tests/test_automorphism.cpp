#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "oracles.hpp"
#include "p2q2/automorphism.hpp"
#include "p2q2/catalog.hpp"

using namespace p2q2;

TEST(BruteAut, CyclicFour) {
    const auto G = collect(PcPresentation({{"a", 4}}));
    EXPECT_EQ(brute_aut(G).order(), 2U);
}

TEST(BruteAut, Examples) {
    EXPECT_EQ(brute_aut(build(make_spec(1, 3, 2))).order(), 12U);
    EXPECT_EQ(brute_aut(build(make_spec(19, 5, 2))).order(), 1000U);
}

TEST(BruteAut, AgreesWithExtensionOracleAtOrder36) {
    for (int t = 1; t <= 14; ++t) {
        const auto G = build(make_spec(t, 3, 2));
        EXPECT_EQ(brute_aut(G).order(), oracle::aut_order_by_extension(G)) << "type " << t;
    }
}

TEST(BruteAut, AgreesWithExtensionOracleOnSemidirectSamples) {
    for (const auto& s : {make_spec(19, 5, 2), make_spec(23, 5, 2), make_spec(26, 5, 2), make_spec(31, 3, 2), make_spec(35, 5, 2),
                          make_spec(34, 3, 2), make_spec(21, 5, 2)}) {
        const auto G = build(s);
        EXPECT_EQ(brute_aut(G).order(), oracle::aut_order_by_extension(G)) << s.to_string();
    }
}

TEST(BruteAut, FormsAGroup) {
    for (const auto& s : {make_spec(11, 3, 2), make_spec(23, 5, 2), make_spec(30, 5, 3)}) {
        const auto G = build(s);
        const auto A = brute_aut(G);
        EXPECT_TRUE(A.contains(identity_automorphism(G)));
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<std::size_t> pick(0, A.order() - 1);
        for (int i = 0; i < 300; ++i) {
            const auto& f = A.elements[pick(rng)];
            const auto& g = A.elements[pick(rng)];
            EXPECT_TRUE(A.contains(compose(G, f, g)));
            const auto fi = inverse(G, f);
            EXPECT_TRUE(A.contains(fi));
            EXPECT_EQ(compose(G, f, fi), identity_automorphism(G));
        }
    }
}

TEST(BruteAut, PreservesElementOrders) {
    const auto G = build(make_spec(36, 5, 3));
    const auto A = brute_aut(G);
    for (std::size_t i = 0; i < A.order(); i += 97) {
        const auto m = full_map(G, A.elements[i].images);
        for (Elem x = 0; x < G.order(); ++x) ASSERT_EQ(G.element_order(m[x]), G.element_order(x));
    }
}

TEST(BruteAut, ApplyIsAHomomorphism) {
    const auto G = build(make_spec(12, 3, 2));
    const auto A = brute_aut(G);
    for (std::size_t i = 0; i < A.order(); i += 11) {
        const auto& f = A.elements[i];
        for (Elem x = 0; x < G.order(); ++x)
            for (Elem y = 0; y < G.order(); ++y) ASSERT_EQ(apply(G, f, G.mul(x, y)), G.mul(apply(G, f, x), apply(G, f, y)));
    }
}

TEST(BruteAut, ThreadsGiveTheSameSet) {
    const auto G = build(make_spec(25, 7, 3));
    const auto one = brute_aut(G, kDefaultBudget, 1);
    const auto three = brute_aut(G, kDefaultBudget, 3);
    EXPECT_EQ(one.elements, three.elements);
}

TEST(BruteAut, BudgetExceededIsReported) {
    const auto G = build(make_spec(22, 5, 2));
    BruteStats stats;
    try {
        brute_aut(G, 1000, 1, &stats);
        FAIL() << "expected BudgetExceeded";
    } catch (const BudgetExceeded& e) {
        EXPECT_GT(e.nodes(), 1000U);
    }
    EXPECT_THROW(brute_aut(G, 1000, 2), BudgetExceeded);
}

TEST(BruteAut, BudgetFromEnvironment) {
    ::setenv("P2Q2_BUDGET", "1e3", 1);
    EXPECT_EQ(default_budget(), 1000U);
    ::setenv("P2Q2_BUDGET", "lots", 1);
    EXPECT_EQ(default_budget(), kDefaultBudget);
    ::unsetenv("P2Q2_BUDGET");
    EXPECT_EQ(default_budget(), kDefaultBudget);
}

TEST(BruteAut, FamilyParameterDoesNotChangeTheOrder) {
    // Type 28 at p = 19, q = 3 admits n in {2, 3, 4, 6}; all four give |Aut| = p^2 (p-1)^2.
    for (std::uint64_t n : {2, 3, 4, 6}) {
        const auto G = build(make_spec(28, 19, 3, n));
        EXPECT_EQ(brute_aut(G).order(), 19U * 19U * 18U * 18U) << "n = " << n;
    }
}

TEST(Automorphism, Validity) {
    const auto G = build(make_spec(19, 5, 2));
    EXPECT_TRUE(is_automorphism(G, identity_automorphism(G)));
    // Swapping a and b breaks element orders, hence the power rules.
    const auto swapped = make_automorphism(G, {G.generator(1), G.generator(0)});
    EXPECT_FALSE(is_automorphism(G, swapped));
    EXPECT_EQ(first_violated_relation(G, swapped.images), "power rule of a");
    // a -> a, b -> 1 respects every rule but is not injective.
    const auto collapse = make_automorphism(G, {G.generator(0), G.identity()});
    EXPECT_TRUE(first_violated_relation(G, collapse.images).empty());
    EXPECT_FALSE(is_automorphism(G, collapse));
    EXPECT_THROW(make_automorphism(G, {G.generator(0)}), std::invalid_argument);
    EXPECT_THROW(make_automorphism(G, {G.generator(0), 100}), std::out_of_range);
}

TEST(Automorphism, KeysAreDistinctForDistinctTuples) {
    const auto G = build(make_spec(18, 3, 2));
    const auto A = brute_aut(G);
    for (std::size_t i = 1; i < A.order(); ++i) EXPECT_LT(A.elements[i - 1].key(), A.elements[i].key());
}
