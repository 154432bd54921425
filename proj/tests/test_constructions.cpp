#include "gtest_count.hpp"

#include <set>

#include "altpaths/constructions.hpp"
#include "altpaths/counting.hpp"

using namespace altpaths;

namespace {

void expect_disjoint_interiors(const std::vector<PathRecord>& paths) {
    std::set<std::pair<int, std::size_t>> seen;
    for (const auto& p : paths)
        for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i)
            EXPECT_TRUE(seen.insert({int(p.vertices[i].side), p.vertices[i].index}).second);
}

}  // namespace

TEST(Random, ReproducibleAndInRange) {
    const auto a = random_coloring(20, 30, 4, 42);
    EXPECT_EQ(a, random_coloring(20, 30, 4, 42));
    EXPECT_NE(a, random_coloring(20, 30, 4, 43));
    EXPECT_TRUE(validate(a).empty());
    std::set<Color> used(a.table().begin(), a.table().end());
    EXPECT_EQ(used.size(), 4u);
    const auto k = random_complete_coloring(30, 3, 1);
    EXPECT_EQ(k, random_complete_coloring(30, 3, 1));
    EXPECT_TRUE(validate(k).empty());
}

TEST(Random, BipartiteGraphDensity) {
    const auto g = random_bipartite_graph(100, 100, 0.5, 3);
    std::size_t edges = 0;
    for (std::size_t i = 0; i < 100; ++i)
        for (std::size_t j = 0; j < 100; ++j) edges += g(i, j);
    EXPECT_NEAR(double(edges) / 10000.0, 0.5, 0.03);
}

TEST(Block, EveryCrossPairHasQuarterMnThreePaths) {
    for (std::size_t s : {4u, 6u, 10u}) {
        const auto c = block_coloring(s, s);
        for (std::size_t u = 0; u < s; ++u)
            for (std::size_t v = 0; v < s; ++v)
                EXPECT_GE(count_alt_paths_exact(c, left_vertex(u), right_vertex(v), 3).count, Count(s * s / 4));
    }
}

TEST(OddPath, DiagonalIsRed) {
    const auto c = odd_path_coloring(4, 5);
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(c(i, i), red);
    EXPECT_EQ(c(0, 1), blue);
}

TEST(SharedTail, StructureAndPreconditions) {
    const auto t = shared_tail_coloring(10, 16, 2, 5);
    EXPECT_EQ(t.split, 10u);
    const auto ref = right_word(t.coloring, 10);
    std::size_t reds = 0;
    for (Color c : ref) reds += c == red;
    EXPECT_EQ(reds, 5u);
    for (std::size_t v = 11; v < 16; ++v) EXPECT_EQ(right_word(t.coloring, v), ref);
    EXPECT_TRUE(t.in_tail(12));
    EXPECT_FALSE(t.in_tail(3));
    EXPECT_THROW(shared_tail_coloring(9, 16, 2, 0), std::invalid_argument);
    EXPECT_THROW(shared_tail_coloring(10, 8, 2, 0), std::invalid_argument);
    EXPECT_THROW(shared_tail_coloring(10, 16, 6, 0), std::invalid_argument);
}

TEST(Chains, TailPairsReachFullYield) {
    const auto t = shared_tail_coloring(40, 80, 2, 3);
    std::vector<std::size_t> head(40);
    for (std::size_t i = 0; i < 40; ++i) head[i] = i;
    const auto spec = auto_blockspec(t.coloring, 50, 60, 2, {.right_pool = head});
    ASSERT_EQ(spec.families.size(), 1u);
    const auto y = matching_chain_paths(t.coloring, 50, 60, spec);
    EXPECT_GE(y.paths.size(), 16u);
    for (const auto& p : y.paths) {
        EXPECT_TRUE(validate_path(t.coloring, p).empty());
        EXPECT_EQ(p.length(), 4u);
        EXPECT_EQ(p.front(), right_vertex(50));
        EXPECT_EQ(p.back(), right_vertex(60));
    }
    expect_disjoint_interiors(y.paths);
}

TEST(Chains, HeadPairsBothPatterns) {
    const auto t = shared_tail_coloring(40, 80, 2, 3);
    std::vector<std::size_t> head;
    for (std::size_t i = 0; i < 40; ++i)
        if (i != 3 && i != 7) head.push_back(i);
    for (auto strategy : {BlockStrategy::balanced, BlockStrategy::split}) {
        const auto spec = auto_blockspec(t.coloring, 3, 7, 2, {.strategy = strategy, .right_pool = head});
        const auto y = matching_chain_paths(t.coloring, 3, 7, spec);
        ASSERT_EQ(y.families.size(), 2u);
        for (const auto& p : y.paths) EXPECT_TRUE(validate_path(t.coloring, p).empty());
        expect_disjoint_interiors(y.paths);
        if (strategy == BlockStrategy::balanced) {
            EXPECT_GE(y.families[0].paths, 7u);
            EXPECT_GE(y.families[1].paths, 7u);
        }
    }
}

TEST(Chains, RejectsMalformedSpec) {
    const auto c = random_coloring(6, 6, 2, 0);
    BlockSpec even{1, {ChainFamily{blue, {{0}, {1}}}}};
    EXPECT_THROW(matching_chain_paths(c, 0, 1, even), std::invalid_argument);
    BlockSpec overlap{1, {ChainFamily{blue, {{0}, {2}, {0}}}}};
    EXPECT_THROW(matching_chain_paths(c, 0, 1, overlap), std::invalid_argument);
    EXPECT_THROW(matching_chain_paths(random_coloring(6, 6, 3, 0), 0, 1, BlockSpec{}), std::invalid_argument);
}

TEST(Chains, CompleteGraphPaths) {
    const auto c = random_complete_coloring(120, 2, 8);
    for (std::size_t length : {3u, 4u, 5u}) {
        const auto spec = auto_blockspec(c, 0, 1, length);
        const auto y = matching_chain_paths(c, 0, 1, spec);
        EXPECT_GT(y.paths.size(), 0u);
        for (const auto& p : y.paths) {
            EXPECT_TRUE(validate_path(c, p).empty());
            EXPECT_EQ(p.length(), length);
        }
        expect_disjoint_interiors(y.paths);
    }
}
