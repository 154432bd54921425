#include "gtest_count.hpp"

#include "altpaths/constructions.hpp"
#include "altpaths/search.hpp"
#include "oracles.hpp"

using namespace altpaths;

TEST(Packing, MatchesSubsetOracle) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto c = random_coloring(3, 4, 2, seed);
        for (std::size_t len : {2u, 4u}) {
            const auto r = max_disjoint_paths(c, right_vertex(0), right_vertex(1), len);
            EXPECT_EQ(r.size, oracle::packing(c, right_vertex(0), right_vertex(1), len));
            EXPECT_EQ(r.paths.size(), r.size);
            for (const auto& p : r.paths) EXPECT_TRUE(validate_path(c, p).empty());
        }
        const auto r3 = max_disjoint_paths(c, left_vertex(0), right_vertex(2), 3);
        EXPECT_EQ(r3.size, oracle::packing(c, left_vertex(0), right_vertex(2), 3));
    }
}

TEST(Packing, TwoPathsAreAlwaysDisjoint) {
    const auto c = random_coloring(7, 5, 3, 2);
    const auto r = max_disjoint_paths(c, right_vertex(1), right_vertex(3), 2);
    EXPECT_EQ(Count(r.size), count_alt_2paths(c, 1, 3));
}

TEST(Packing, StopAtAndBudget) {
    const auto c = random_coloring(6, 6, 2, 1);
    const auto full = max_disjoint_paths(c, right_vertex(0), right_vertex(1), 4);
    ASSERT_GE(full.size, 1u);
    const auto early = max_disjoint_paths(c, right_vertex(0), right_vertex(1), 4, {.stop_at = 1});
    EXPECT_GE(early.size, 1u);
    EXPECT_THROW(max_disjoint_paths(random_coloring(9, 9, 2, 0), right_vertex(0), right_vertex(1), 6, {.budget = 3}),
                 BudgetExceeded);
}

TEST(Packing, CompleteGraph) {
    const auto c = random_complete_coloring(7, 2, 3);
    const auto g = oracle::of(c);
    const auto r = max_disjoint_paths(c, 0, 1, 3);
    EXPECT_EQ(r.size, oracle::subset_packing(oracle::interiors(oracle::sequences(g, 0, 1, 3, true))));
}

TEST(Pairs, ParityDecidesClasses) {
    EXPECT_EQ(relevant_pairs(2, 3, 2).size(), 3u);
    EXPECT_EQ(relevant_pairs(2, 3, 3).size(), 6u);
    EXPECT_EQ(relevant_pairs(2, 3, 3).front().first.side, Side::left);
}

TEST(Extremal, KappaMatchesNaive) {
    for (auto [m, n] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
        for (std::size_t len : {2u, 3u, 4u}) {
            EXPECT_EQ(exact_kappa(m, n, 2, len).value, oracle::naive_kappa(m, n, 2, len)) << m << "," << n << "," << len;
        }
    }
    EXPECT_EQ(exact_kappa(2, 3, 3, 2).value, oracle::naive_kappa(2, 3, 3, 2));
}

TEST(Extremal, LambdaMatchesNaive) {
    for (auto [m, n] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 2}, {2, 3}, {3, 3}}) {
        for (std::size_t len : {3u, 4u}) {
            EXPECT_EQ(Count(exact_lambda(m, n, len, PathFlavor::path).value), oracle::naive_lambda(m, n, len, true));
            EXPECT_EQ(Count(exact_lambda(m, n, len, PathFlavor::walk).value), oracle::naive_lambda(m, n, len, false));
        }
    }
}

TEST(Extremal, KnownSmallValues) {
    const auto k = exact_kappa(2, 2, 2, 2);
    EXPECT_EQ(k.value, 2u);
    ASSERT_TRUE(k.witness);
    EXPECT_EQ(kappa_of(*k.witness, 2), 2u);
    const auto a = exact_alpha(3, 2, 2);
    EXPECT_EQ(a.value, 4u);
    ASSERT_TRUE(a.code_witness);
    const auto& w = a.code_witness->words;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) EXPECT_GE(hamming(w[i], w[j]), 2u);
}

TEST(Extremal, SymmetryDoesNotChangeValues) {
    SearchOptions on{.symmetry = Symmetry::on};
    SearchOptions off{.symmetry = Symmetry::off};
    EXPECT_EQ(exact_kappa(3, 3, 2, 4, on).value, exact_kappa(3, 3, 2, 4, off).value);
    EXPECT_TRUE(exact_kappa(3, 3, 2, 4, on).symmetry_reduced);
    EXPECT_LT(exact_kappa(3, 3, 2, 4, on).instances_scanned, exact_kappa(3, 3, 2, 4, off).instances_scanned);
    EXPECT_EQ(exact_kappa(2, 4, 3, 2, on).value, exact_kappa(2, 4, 3, 2, off).value);
    SearchOptions noprune{.prune = false};
    EXPECT_EQ(exact_kappa(3, 3, 2, 3, noprune).value, exact_kappa(3, 3, 2, 3).value);
}

TEST(Extremal, ThreadsAgree) {
    SearchOptions two{.threads = 2};
    const auto a = exact_kappa(3, 4, 2, 4);
    const auto b = exact_kappa(3, 4, 2, 4, two);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.witness, b.witness);
}

TEST(Extremal, RefusesHugeSpaces) {
    SearchOptions tight{.max_colorings = 1000, .symmetry = Symmetry::off};
    EXPECT_THROW(exact_kappa(4, 4, 2, 2, tight), BudgetExceeded);
    EXPECT_EQ(search_space_size(2, 3, 2, false), std::optional<std::uint64_t>(64));
}

TEST(Extremal, KappaFourTrend) {
    for (std::size_t n = 2; n <= 7; ++n) EXPECT_EQ(exact_kappa(2, n, 2, 4).value, 0u) << n;
    for (std::size_t n = 3; n <= 7; ++n) EXPECT_EQ(exact_kappa(3, n, 2, 4).value, 1u) << n;
}

TEST(Bounds, HoldExhaustively) {
    for (auto f : {BoundFamily::p3_total, BoundFamily::p4_total, BoundFamily::mixed_codegree_sum,
                   BoundFamily::pair_2path_cap}) {
        const auto rep = verify_bounds(f, 3, 3, 2);
        EXPECT_TRUE(rep.holds()) << to_string(f);
        EXPECT_EQ(rep.colorings, 512u);
        ASSERT_TRUE(rep.extremal);
        EXPECT_EQ(bound_quantity(f, *rep.extremal), rep.max_value);
    }
}

TEST(Bounds, NamesAndValues) {
    EXPECT_EQ(parse_bound_family("p3-total"), BoundFamily::p3_total);
    EXPECT_FALSE(parse_bound_family("nonsense"));
    EXPECT_EQ(bound_value(BoundFamily::p3_total, 2, 3, 2), Rational(9));
    EXPECT_EQ(bound_value(BoundFamily::p4_total, 2, 2, 2), Rational(2));
    EXPECT_EQ(bound_value(BoundFamily::mixed_codegree_sum, 3, 3, 2), Rational(27, 4));
}
