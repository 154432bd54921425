#include "gtest_count.hpp"

#include <set>
#include <sstream>

#include "altpaths/constructions.hpp"
#include "altpaths/counting.hpp"
#include "altpaths/experiments.hpp"

using namespace altpaths;

TEST(Stats, QuantilesAndSpread) {
    const auto s = TrialStats::from({4, 1, 3, 2});
    EXPECT_DOUBLE_EQ(s.min, 1);
    EXPECT_DOUBLE_EQ(s.max, 4);
    EXPECT_DOUBLE_EQ(s.mean, 2.5);
    EXPECT_NEAR(s.stddev, 1.2909944, 1e-6);
    EXPECT_DOUBLE_EQ(s.q50, 2.5);
    EXPECT_DOUBLE_EQ(quantile({0, 10}, 0.3), 3);
    EXPECT_DOUBLE_EQ(TrialStats::from({7}).stddev, 0);
}

TEST(Trials, ConcentrationFindsTrueMinimum) {
    const auto t = concentration_2path_trial(60, 8, 2, 5);
    const auto c = random_coloring(60, 8, 2, 5);
    Count low = ~Count{0};
    for (std::size_t u = 0; u < 8; ++u)
        for (std::size_t v = u + 1; v < 8; ++v) low = std::min(low, count_alt_2paths(c, u, v));
    EXPECT_EQ(Count(t.min_pair), low);
    EXPECT_EQ(count_alt_2paths(c, t.u, t.v), low);
}

TEST(Trials, DeficiencyShape) {
    const auto t = matching_deficiency_trial(50, 0.3, 10, 4, 1);
    EXPECT_EQ(t.subset_size, 15u);
    EXPECT_EQ(t.deficiencies.size(), 10u);
    EXPECT_EQ(t.padded_perfect.size(), 10u);
    for (std::size_t i = 0; i < 10; ++i) EXPECT_EQ(t.padded_perfect[i], t.deficiencies[i] <= 4);
}

TEST(Trials, ChainYieldPairsAreValid) {
    const auto rows = chain_yield_trial(40, 80, 2, 4, 2);
    ASSERT_EQ(rows.size(), 8u);
    std::size_t tail = 0;
    for (const auto& r : rows) {
        EXPECT_EQ(r.invalid_paths, 0u);
        EXPECT_TRUE(r.disjoint);
        EXPECT_EQ(r.family_paths.size(), r.tail ? 1u : 2u);
        tail += r.tail;
    }
    EXPECT_EQ(tail, 4u);
}

TEST(Config, DefaultsAndValidation) {
    EXPECT_EQ(experiment_names().size(), 5u);
    EXPECT_EQ(default_config("matching-deficiency").pad, 6u);
    EXPECT_THROW(default_config("unknown"), ConfigError);
    auto c = default_config("chain-yield");
    c.n = c.m;
    EXPECT_THROW(validate(c), ConfigError);
    c = default_config("chain-yield");
    c.m = 301;
    EXPECT_THROW(validate(c), ConfigError);
    c = default_config("concentration-2path");
    c.trials = 0;
    EXPECT_THROW(validate(c), ConfigError);
}

TEST(Harness, ThreadCountDoesNotChangeOutput) {
    auto c = default_config("concentration-2path");
    c.m = 200;
    c.n = 12;
    c.trials = 5;
    std::ostringstream one, three;
    write_csv(run_experiment(c), one);
    c.threads = 3;
    auto rep = run_experiment(c);
    c.threads = 1;
    rep.config.threads = 1;
    write_csv(rep, three);
    EXPECT_EQ(one.str(), three.str());
}

TEST(Harness, CsvLayout) {
    auto c = default_config("complete-2path");
    c.n = 40;
    c.trials = 2;
    const auto rep = run_experiment(c);
    std::ostringstream out;
    write_csv(rep, out);
    const auto s = out.str();
    EXPECT_EQ(s.rfind("# schema altpaths-mc/complete-2path/v1", 0), 0u);
    EXPECT_NE(s.find("# config {"), std::string::npos);
    EXPECT_NE(s.find("statistic,value"), std::string::npos);
    EXPECT_EQ(rep.rows.size(), 2u);
    std::ostringstream json;
    write_json(rep, json);
    EXPECT_NE(json.str().find("\"schema\""), std::string::npos);
}
