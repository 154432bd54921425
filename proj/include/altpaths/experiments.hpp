#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "altpaths/core.hpp"

namespace altpaths {

/// A configuration value outside the target operation's preconditions.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct TrialStats {
    std::vector<double> observations;
    double min = 0;
    double max = 0;
    double mean = 0;
    /// Sample standard deviation (0 for fewer than two observations).
    double stddev = 0;
    double q10 = 0;
    double q50 = 0;
    double q90 = 0;

    static TrialStats from(std::vector<double> observations);
};

/// Linear-interpolation quantile of sorted data, q in [0, 1].
double quantile(const std::vector<double>& sorted, double q);

// ------------------------------------------------------------ single trials

struct ConcentrationTrial {
    std::uint64_t min_pair = 0;
    std::size_t u = 0;
    std::size_t v = 0;
};

/// min over right pairs of alternating 2-path counts in a random r-coloring.
ConcentrationTrial concentration_2path_trial(std::size_t m, std::size_t n, unsigned r, std::uint64_t seed);

/// The same over all pairs of a random r-coloring of K_n.
ConcentrationTrial complete_2path_trial(std::size_t n, unsigned r, std::uint64_t seed);

struct DeficiencyTrial {
    std::size_t subset_size = 0;
    std::vector<std::size_t> deficiencies;
    std::vector<bool> padded_perfect;
};

/// One G(m, m, 1/2) host and `samples` random pairs of subsets of size
/// floor(alpha m); records |A| - (maximum matching) for each pair and whether
/// the graph padded by `pad` vertices per side has a perfect matching.
DeficiencyTrial matching_deficiency_trial(std::size_t m, double alpha, std::size_t samples, std::size_t pad,
                                          std::uint64_t seed);

struct ChainPairResult {
    std::size_t u = 0;
    std::size_t v = 0;
    /// Both endpoints in the shared tail (bipartite runs only).
    bool tail = false;
    std::size_t target = 0;
    /// Paths per family; families that could not be carved report 0.
    std::vector<std::size_t> family_paths;
    std::size_t total = 0;
    std::size_t invalid_paths = 0;
    bool disjoint = true;
};

/// Shared-tail coloring of K_{m,n}; `pairs` random pairs inside the tail and
/// `pairs` random pairs outside it, each run through the chain builder with
/// odd blocks drawn from the non-tail right vertices.
std::vector<ChainPairResult> chain_yield_trial(std::size_t m, std::size_t n, std::size_t k, std::size_t pairs,
                                               std::uint64_t seed);

/// Random two-coloring of K_n and `pairs` random pairs, chained for `length`.
std::vector<ChainPairResult> complete_chain_trial(std::size_t n, std::size_t length, std::size_t pairs,
                                                  std::uint64_t seed);

// -------------------------------------------------------------- harness

enum class OutputFormat : std::uint8_t { csv, json };

struct ExperimentConfig {
    std::string experiment;
    std::size_t m = 0;
    std::size_t n = 0;
    unsigned r = 2;
    std::size_t length = 2;
    std::size_t k = 2;
    double alpha = 0.3;
    std::size_t trials = 1;
    std::size_t samples = 50;
    std::size_t pairs = 20;
    std::size_t pad = 0;
    /// Tolerance multiplier applied to the experiment's reference value.
    double factor = 1.0;
    /// matching-deficiency: fraction of samples that must meet the tolerance.
    double required_fraction = 0.98;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    OutputFormat format = OutputFormat::csv;
};

/// concentration-2path, matching-deficiency, complete-2path, chain-yield,
/// complete-chain.
const std::vector<std::string>& experiment_names();

/// Defaults for the named experiment. Throws ConfigError on unknown names.
ExperimentConfig default_config(const std::string& experiment);

/// Throws ConfigError naming the first violated precondition.
void validate(const ExperimentConfig& config);

using Cell = std::variant<std::uint64_t, double, bool, std::string>;

struct ExperimentReport {
    ExperimentConfig config;
    std::string schema;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    TrialStats stats;
    std::string observation;
    std::vector<std::pair<std::string, Cell>> summary;
    bool passed = false;
};

/// Runs every trial (striped across config.threads) and aggregates. Rows come
/// out in trial order whatever the thread count.
ExperimentReport run_experiment(const ExperimentConfig& config);

/// Header comment with the schema version, one row per trial, then the
/// aggregate block.
void write_csv(const ExperimentReport& report, std::ostream& out);
void write_json(const ExperimentReport& report, std::ostream& out);

/// The resolved config as a JSON object string.
std::string config_json(const ExperimentConfig& config);

}  // namespace altpaths
