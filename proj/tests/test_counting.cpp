#include "gtest_count.hpp"

#include "altpaths/constructions.hpp"
#include "altpaths/counting.hpp"
#include "oracles.hpp"

using namespace altpaths;

TEST(TwoPaths, EqualsHammingDistance) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto c = random_coloring(1 + seed % 7, 2 + seed % 6, 2 + seed % 3, seed);
        for (std::size_t u = 0; u < c.n(); ++u)
            for (std::size_t v = u + 1; v < c.n(); ++v)
                EXPECT_EQ(count_alt_2paths(c, u, v), Count(hamming(right_word(c, u), right_word(c, v))));
    }
}

TEST(TwoPaths, CompleteMatchesEnumeration) {
    const auto c = random_complete_coloring(7, 3, 1);
    const auto g = oracle::of(c);
    for (std::size_t u = 0; u < 7; ++u)
        for (std::size_t v = u + 1; v < 7; ++v)
            EXPECT_EQ(count_alt_2paths(c, u, v), oracle::count_sequences(g, u, v, 2, true));
}

TEST(TwoPaths, MiddleVertexDoubleCounting) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto c = random_coloring(5, 6, 3, seed);
        Count middles = 0;
        for (std::size_t v = 0; v < 5; ++v) middles += middle_vertex_2path_count(c, v);
        Count pairs = 0;
        for (std::size_t u = 0; u < 6; ++u)
            for (std::size_t v = u + 1; v < 6; ++v) pairs += count_alt_2paths(c, u, v);
        EXPECT_EQ(middles, pairs);
    }
}

TEST(TwoPaths, UpperBoundValues) {
    EXPECT_EQ(kappa2_upper_bound(10, 5, 2), Rational(25, 4));
    EXPECT_EQ(kappa2_upper_bound_complete(10, 3), Rational(6));
}

TEST(TwoPaths, MinimumNeverExceedsCap) {
    for (const auto& c : oracle::all_colorings(3, 3, 2)) {
        Count low = ~Count{0};
        for (std::size_t u = 0; u < 3; ++u)
            for (std::size_t v = u + 1; v < 3; ++v) low = std::min(low, count_alt_2paths(c, u, v));
        EXPECT_TRUE(at_most(low, kappa2_upper_bound(3, 3, 2)));
    }
}

TEST(ClosedForms, MonochromaticIsZero) {
    const auto c = ColoringMatrix::constant(4, 4, 2, red);
    EXPECT_EQ(total_alt_p3(c), Count(0));
    EXPECT_EQ(total_alt_p4(c), Count(0));
    EXPECT_EQ(alt5_objective(c), Count(0));
    EXPECT_EQ(mixed_codegree_sum(c), Count(0));
}

TEST(ClosedForms, P3MatchesEnumeration) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto c = random_coloring(3, 3, 2, seed);
        EXPECT_EQ(total_alt_p3(c), oracle::all_alt_3paths(c));
    }
}

TEST(ClosedForms, P4MatchesSequenceCount) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto c = random_coloring(3, 4, 2, seed);
        EXPECT_EQ(total_alt_p4(c), oracle::p4_sequences(c));
    }
}

TEST(ClosedForms, P4DominatesDistinctPaths) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto c = random_coloring(3, 4, 2, seed);
        Count paths = 0;
        for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t b = a + 1; b < 4; ++b)
                paths += count_alt_paths_exact(c, right_vertex(a), right_vertex(b), 4).count;
        EXPECT_GE(total_alt_p4(c), paths);
    }
}

TEST(ClosedForms, Alt5MatchesLiteralTranscription) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto c = random_coloring(3 + seed % 3, 4, 2, seed);
        EXPECT_EQ(alt5_objective(c), oracle::literal_alt5(c));
    }
    // two of three rows all red: only the pattern that never needs blue there survives
    const ColoringMatrix skewed(3, 4, 2, {1, 1, 1, 1, 2, 1, 2, 2, 1, 1, 1, 1});
    EXPECT_EQ(alt5_objective(skewed), oracle::literal_alt5(skewed));
}

TEST(ClosedForms, Alt5Preconditions) {
    EXPECT_THROW(alt5_objective(random_coloring(2, 4, 2, 0)), std::invalid_argument);
    EXPECT_THROW(total_alt_p3(random_coloring(3, 3, 3, 0)), std::invalid_argument);
}

TEST(ClosedForms, MixedSumMatchesCodegrees) {
    const auto c = random_coloring(5, 6, 2, 8);
    const oracle::Vars x{c};
    Count expect = 0;
    for (std::size_t u = 0; u < 5; ++u)
        for (std::size_t v = u + 1; v < 5; ++v) expect += x.BR(u, v) + x.RB(u, v);
    EXPECT_EQ(mixed_codegree_sum(c), expect);
}

TEST(Walks, SingleEdgeAndMonochromatic) {
    const auto c = random_coloring(3, 4, 3, 2);
    EXPECT_EQ(count_alt_walks(c, left_vertex(1), right_vertex(2), 1), Count(1));
    const auto mono = ColoringMatrix::constant(3, 3, 2, red);
    EXPECT_EQ(count_alt_walks(mono, right_vertex(0), right_vertex(1), 2), Count(0));
    EXPECT_THROW(count_alt_walks(c, left_vertex(0), left_vertex(1), 3), std::invalid_argument);
}

TEST(Walks, MatchesSequenceEnumeration) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto c = random_coloring(3, 3, 2 + seed % 2, seed);
        const auto g = oracle::of(c);
        for (std::size_t len = 1; len <= 5; ++len) {
            const Vertex a = right_vertex(0);
            const Vertex b = len % 2 ? left_vertex(1) : right_vertex(2);
            EXPECT_EQ(count_alt_walks(c, a, b, len),
                      oracle::count_sequences(g, oracle::id(c, a), oracle::id(c, b), len, false));
        }
    }
}

TEST(Walks, CompleteMatchesEnumeration) {
    const auto c = random_complete_coloring(6, 3, 4);
    const auto g = oracle::of(c);
    for (std::size_t len = 1; len <= 4; ++len)
        EXPECT_EQ(count_alt_walks(c, 0, 3, len), oracle::count_sequences(g, 0, 3, len, false));
}

TEST(ExactPaths, MatchesEnumerationAndValidates) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto c = random_coloring(3, 4, 2, seed);
        const auto g = oracle::of(c);
        for (std::size_t len = 2; len <= 6; len += 2) {
            const auto e = count_alt_paths_exact(c, right_vertex(0), right_vertex(3), len, {.collect = true});
            EXPECT_EQ(e.count, oracle::count_sequences(g, 3, 6, len, true));
            EXPECT_EQ(e.paths.size(), std::size_t(e.count));
            for (const auto& p : e.paths) EXPECT_TRUE(validate_path(c, p).empty());
            EXPECT_LE(e.count, count_alt_walks(c, right_vertex(0), right_vertex(3), len));
        }
    }
}

TEST(ExactPaths, TooLongIsZero) {
    const auto c = random_coloring(3, 3, 2, 0);
    EXPECT_EQ(count_alt_paths_exact(c, right_vertex(0), right_vertex(1), 8).count, Count(0));
}

TEST(ExactPaths, BudgetIsReported) {
    const auto c = random_coloring(12, 12, 2, 0);
    EXPECT_THROW(count_alt_paths_exact(c, right_vertex(0), right_vertex(1), 8, {.budget = 100}), BudgetExceeded);
}

TEST(ExactPaths, CompleteMatchesEnumeration) {
    const auto c = random_complete_coloring(7, 2, 9);
    const auto g = oracle::of(c);
    for (std::size_t len = 2; len <= 4; ++len)
        EXPECT_EQ(count_alt_paths_exact(c, 1, 5, len).count, oracle::count_sequences(g, 1, 5, len, true));
}

TEST(WalkTable, AgreesWithPointQueries) {
    const auto c = random_coloring(4, 5, 2, 1);
    const auto t = walk_count_table(c, Side::right, Side::right, 4, PathFlavor::path);
    EXPECT_EQ(t.flavor, PathFlavor::path);
    for (std::size_t i = 0; i < 5; ++i) {
        EXPECT_EQ(t.at(i, i), Count(0));
        for (std::size_t j = 0; j < 5; ++j)
            if (i != j) EXPECT_EQ(t.at(i, j), count_alt_paths_exact(c, right_vertex(i), right_vertex(j), 4).count);
    }
    const auto w = walk_count_table(c, Side::left, Side::right, 3, PathFlavor::walk);
    EXPECT_EQ(w.at(2, 4), count_alt_walks(c, left_vertex(2), right_vertex(4), 3));
}

TEST(Digraph, MonochromaticHasNoLongWalks) {
    for (Color color : {red, blue}) {
        const auto d = to_digraph(ColoringMatrix::constant(3, 3, 2, color));
        EXPECT_EQ(d.has_arc(right_vertex(0), left_vertex(0)), color == red);
        EXPECT_EQ(d.has_arc(left_vertex(0), right_vertex(0)), color == blue);
        for (std::size_t len = 2; len <= 4; ++len) {
            EXPECT_EQ(count_directed_walks(d, right_vertex(0), len % 2 ? left_vertex(1) : right_vertex(1), len),
                      Count(0));
            EXPECT_EQ(count_directed_walks(d, left_vertex(0), len % 2 ? right_vertex(1) : left_vertex(1), len),
                      Count(0));
        }
    }
    EXPECT_THROW(to_digraph(random_coloring(2, 2, 3, 0)), std::invalid_argument);
}

TEST(Digraph, AlternatingWalksSplitByDirection) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto c = random_coloring(3, 4, 2, seed);
        const auto d = to_digraph(c);
        for (std::size_t len = 1; len <= 6; ++len) {
            const Vertex a = left_vertex(seed % 3);
            const Vertex b = len % 2 ? right_vertex(1) : left_vertex(2);
            const Count forward = count_directed_walks(d, a, b, len);
            EXPECT_EQ(forward, oracle::matrix_power_walks(c, a, b, len));
            EXPECT_EQ(count_alt_walks(c, a, b, len), forward + count_directed_walks(d, b, a, len));
        }
    }
}
