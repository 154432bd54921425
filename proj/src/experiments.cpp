#include "altpaths/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <thread>
#include <unordered_set>

#include <fmt/format.h>
#include <json.hpp>

#include "altpaths/constructions.hpp"
#include "altpaths/counting.hpp"
#include "altpaths/matching.hpp"
#include "altpaths/rng.hpp"

namespace altpaths {

using Json = nlohmann::ordered_json;

// ------------------------------------------------------------- statistics

double quantile(const std::vector<double>& sorted, double q) {
    if (sorted.empty()) {
        return 0;
    }
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

TrialStats TrialStats::from(std::vector<double> observations) {
    TrialStats s;
    s.observations = std::move(observations);
    if (s.observations.empty()) {
        return s;
    }
    auto sorted = s.observations;
    std::sort(sorted.begin(), sorted.end());
    const auto count = static_cast<double>(sorted.size());
    s.min = sorted.front();
    s.max = sorted.back();
    s.mean = std::accumulate(sorted.begin(), sorted.end(), 0.0) / count;
    if (sorted.size() > 1) {
        double ss = 0;
        for (double x : sorted) {
            ss += (x - s.mean) * (x - s.mean);
        }
        s.stddev = std::sqrt(ss / (count - 1));
    }
    s.q10 = quantile(sorted, 0.1);
    s.q50 = quantile(sorted, 0.5);
    s.q90 = quantile(sorted, 0.9);
    return s;
}

// ------------------------------------------------------------ single trials

namespace {

// stream ids for derive_seed
constexpr std::uint64_t stream_trial = 0;
constexpr std::uint64_t stream_sampling = 1;

std::uint64_t narrow(Count c) {
    if (c > std::numeric_limits<std::uint64_t>::max()) {
        throw std::overflow_error("count does not fit in 64 bits");
    }
    return static_cast<std::uint64_t>(c);
}

std::vector<std::size_t> random_subset(std::size_t universe, std::size_t size, Rng& rng) {
    std::vector<std::size_t> all(universe);
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(size);
    std::sort(all.begin(), all.end());
    return all;
}

std::pair<std::size_t, std::size_t> random_pair(std::size_t first, std::size_t last, Rng& rng) {
    std::uniform_int_distribution<std::size_t> pick(first, last - 1);
    const std::size_t a = pick(rng);
    std::size_t b = a;
    while (b == a) {
        b = pick(rng);
    }
    return {std::min(a, b), std::max(a, b)};
}

template <typename Coloring>
void check_family(const Coloring& coloring, const ChainYield& yield, ChainPairResult& result) {
    std::unordered_set<std::size_t> seen;
    for (const auto& p : yield.paths) {
        if (!validate_path(coloring, p).empty()) {
            ++result.invalid_paths;
        }
        for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i) {
            const auto& x = p.vertices[i];
            const std::size_t key = x.index * 2 + (x.side == Side::right ? 1 : 0);
            if (!seen.insert(key).second) {
                result.disjoint = false;
            }
        }
    }
}

}  // namespace

ConcentrationTrial concentration_2path_trial(std::size_t m, std::size_t n, unsigned r, std::uint64_t seed) {
    const auto coloring = random_coloring(m, n, r, seed);
    // codewords are columns; gather them once for cache-friendly comparisons
    const Code code = to_code(coloring);
    ConcentrationTrial out{std::numeric_limits<std::uint64_t>::max(), 0, 0};
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            const std::uint64_t d = hamming(code.words[u], code.words[v]);
            if (d < out.min_pair) {
                out = {d, u, v};
            }
        }
    }
    return out;
}

ConcentrationTrial complete_2path_trial(std::size_t n, unsigned r, std::uint64_t seed) {
    const auto coloring = random_complete_coloring(n, r, seed);
    ConcentrationTrial out{std::numeric_limits<std::uint64_t>::max(), 0, 0};
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            const std::uint64_t c = narrow(count_alt_2paths(coloring, u, v));
            if (c < out.min_pair) {
                out = {c, u, v};
            }
        }
    }
    return out;
}

DeficiencyTrial matching_deficiency_trial(std::size_t m, double alpha, std::size_t samples, std::size_t pad,
                                          std::uint64_t seed) {
    const auto graph = random_bipartite_graph(m, m, 0.5, seed);
    auto rng = make_rng(derive_seed(seed, stream_sampling));
    DeficiencyTrial out;
    out.subset_size = static_cast<std::size_t>(std::floor(alpha * static_cast<double>(m)));
    for (std::size_t s = 0; s < samples; ++s) {
        auto a = random_subset(m, out.subset_size, rng);
        auto b = random_subset(m, out.subset_size, rng);
        const auto view = make_view(graph, std::move(a), std::move(b));
        out.deficiencies.push_back(out.subset_size - max_matching(view).size());
        out.padded_perfect.push_back(max_matching(padded_graph(view, pad)).size() == out.subset_size + pad);
    }
    return out;
}

std::vector<ChainPairResult> chain_yield_trial(std::size_t m, std::size_t n, std::size_t k, std::size_t pairs,
                                               std::uint64_t seed) {
    const auto built = shared_tail_coloring(m, n, k, seed);
    const auto& coloring = built.coloring;
    auto rng = make_rng(derive_seed(seed, stream_sampling));
    std::vector<std::size_t> head(built.split);
    std::iota(head.begin(), head.end(), 0);

    std::vector<ChainPairResult> out;
    for (bool tail : {true, false}) {
        for (std::size_t i = 0; i < pairs; ++i) {
            const auto [u, v] = tail ? random_pair(built.split, n, rng) : random_pair(0, built.split, rng);
            const auto spec = auto_blockspec(coloring, u, v, k, {BlockStrategy::automatic, head});
            const auto yield = matching_chain_paths(coloring, u, v, spec);
            ChainPairResult r;
            r.u = u;
            r.v = v;
            r.tail = tail;
            r.target = spec.target_size;
            if (tail) {
                r.family_paths.assign(1, 0);
            } else {
                r.family_paths.assign(2, 0);
            }
            for (std::size_t f = 0; f < spec.families.size(); ++f) {
                const std::size_t slot = tail || spec.families[f].first_color == blue ? 0 : 1;
                r.family_paths[slot] += yield.families[f].paths;
            }
            r.total = yield.paths.size();
            check_family(coloring, yield, r);
            out.push_back(std::move(r));
        }
    }
    return out;
}

std::vector<ChainPairResult> complete_chain_trial(std::size_t n, std::size_t length, std::size_t pairs,
                                                  std::uint64_t seed) {
    const auto coloring = random_complete_coloring(n, 2, seed);
    auto rng = make_rng(derive_seed(seed, stream_sampling));
    std::vector<ChainPairResult> out;
    for (std::size_t i = 0; i < pairs; ++i) {
        const auto [u, v] = random_pair(0, n, rng);
        const auto spec = auto_blockspec(coloring, u, v, length);
        const auto yield = matching_chain_paths(coloring, u, v, spec);
        ChainPairResult r;
        r.u = u;
        r.v = v;
        r.target = spec.target_size;
        r.family_paths.assign(2, 0);
        for (std::size_t f = 0; f < spec.families.size(); ++f) {
            r.family_paths[spec.families[f].first_color == blue ? 0 : 1] += yield.families[f].paths;
        }
        r.total = yield.paths.size();
        check_family(coloring, yield, r);
        out.push_back(std::move(r));
    }
    return out;
}

// -------------------------------------------------------------- harness

namespace {

template <typename... Args>
[[noreturn]] void fail(fmt::format_string<Args...> format, Args&&... args) {
    throw ConfigError(fmt::format(format, std::forward<Args>(args)...));
}

}  // namespace

const std::vector<std::string>& experiment_names() {
    static const std::vector<std::string> names{"concentration-2path", "matching-deficiency", "complete-2path",
                                                "chain-yield", "complete-chain"};
    return names;
}

ExperimentConfig default_config(const std::string& experiment) {
    ExperimentConfig c;
    c.experiment = experiment;
    if (experiment == "concentration-2path") {
        c.m = 2000;
        c.n = 100;
        c.r = 2;
        c.trials = 20;
        c.factor = 0.9;
    } else if (experiment == "matching-deficiency") {
        c.m = 200;
        c.n = 200;
        c.alpha = 0.3;
        c.trials = 10;
        c.samples = 50;
        c.pad = default_pad_size(c.m);
        c.factor = 5.0;
    } else if (experiment == "complete-2path") {
        c.n = 500;
        c.r = 3;
        c.trials = 5;
        c.factor = 0.9;
    } else if (experiment == "chain-yield") {
        c.m = 300;
        c.n = 600;
        c.k = 2;
        c.length = 4;
        c.pairs = 20;
        c.factor = 0.8;
    } else if (experiment == "complete-chain") {
        c.n = 400;
        c.length = 5;
        c.pairs = 10;
        c.factor = 0.7;
    } else {
        throw ConfigError(fmt::format("unknown experiment '{}'; expected one of {}", experiment,
                                      fmt::join(experiment_names(), ", ")));
    }
    return c;
}

void validate(const ExperimentConfig& c) {
    if (std::find(experiment_names().begin(), experiment_names().end(), c.experiment) == experiment_names().end()) {
        fail("unknown experiment '{}'", c.experiment);
    }
    if (c.trials < 1) fail("trials must be at least 1");
    if (c.threads < 1) fail("threads must be at least 1");
    if (!(c.factor > 0)) fail("tolerance factor must be positive, got {}", c.factor);

    if (c.experiment == "concentration-2path") {
        if (c.m < 1) fail("concentration-2path needs m >= 1");
        if (c.n < 2) fail("concentration-2path needs n >= 2 to form a pair");
        if (c.r < 2) fail("concentration-2path needs r >= 2");
    } else if (c.experiment == "complete-2path") {
        if (c.n < 3) fail("complete-2path needs n >= 3");
        if (c.r < 2) fail("complete-2path needs r >= 2");
    } else if (c.experiment == "matching-deficiency") {
        if (c.m < 2) fail("matching-deficiency needs m >= 2");
        if (!(c.alpha > 0 && c.alpha <= 1)) fail("alpha must lie in (0, 1], got {}", c.alpha);
        if (std::floor(c.alpha * static_cast<double>(c.m)) < 1) fail("alpha * m must be at least 1");
        if (c.samples < 1) fail("samples must be at least 1");
        if (!(c.required_fraction >= 0 && c.required_fraction <= 1)) fail("required fraction must lie in [0, 1]");
    } else if (c.experiment == "chain-yield") {
        if (c.k < 1) fail("k must be at least 1");
        if (c.m % 2 != 0) fail("m={} is odd: the shared tail needs a balanced vector with m/2 of each color", c.m);
        if (c.m < 2 * c.k) fail("chain-yield needs m >= 2k (m={}, k={})", c.m, c.k);
        if (c.n < c.m + 2) {
            fail("chain-yield samples pairs inside the shared tail [m, n), which needs n >= m + 2 (m={}, n={})", c.m,
                 c.n);
        }
        if (c.pairs < 1) fail("pairs must be at least 1");
    } else if (c.experiment == "complete-chain") {
        if (c.length < 2) fail("complete-chain needs length >= 2");
        if (c.n < c.length + 1) fail("complete-chain needs n >= length + 1");
        if (c.pairs < 1) fail("pairs must be at least 1");
    }
}

std::string config_json(const ExperimentConfig& c) {
    Json j;
    j["experiment"] = c.experiment;
    j["m"] = c.m;
    j["n"] = c.n;
    j["r"] = c.r;
    j["length"] = c.length;
    j["k"] = c.k;
    j["alpha"] = c.alpha;
    j["trials"] = c.trials;
    j["samples"] = c.samples;
    j["pairs"] = c.pairs;
    j["pad"] = c.pad;
    j["factor"] = c.factor;
    j["required_fraction"] = c.required_fraction;
    j["seed"] = c.seed;
    j["threads"] = c.threads;
    j["format"] = c.format == OutputFormat::csv ? "csv" : "json";
    return j.dump();
}

namespace {

struct TrialOutput {
    std::vector<Cell> row;
    double observation = 0;
    bool passed = true;
    // matching-deficiency bookkeeping
    std::size_t samples = 0;
    std::size_t within = 0;
};

TrialOutput run_trial(const ExperimentConfig& c, std::size_t trial) {
    const std::uint64_t seed = derive_seed(c.seed, stream_trial, trial);
    TrialOutput out;
    const std::string& e = c.experiment;
    if (e == "concentration-2path" || e == "complete-2path") {
        const bool complete = e == "complete-2path";
        const auto t = complete ? complete_2path_trial(c.n, c.r, seed) : concentration_2path_trial(c.m, c.n, c.r, seed);
        const double size = static_cast<double>(complete ? c.n : c.m);
        const double threshold = c.factor * (size * (c.r - 1)) / c.r;
        out.passed = static_cast<double>(t.min_pair) >= threshold;
        out.observation = static_cast<double>(t.min_pair);
        out.row = {std::uint64_t{trial}, seed, t.min_pair, std::uint64_t{t.u}, std::uint64_t{t.v}, threshold,
                   out.passed};
    } else if (e == "matching-deficiency") {
        const auto t = matching_deficiency_trial(c.m, c.alpha, c.samples, c.pad, seed);
        const double tolerance = c.factor * std::log(static_cast<double>(c.m));
        const std::size_t worst = *std::max_element(t.deficiencies.begin(), t.deficiencies.end());
        const double mean = static_cast<double>(std::accumulate(t.deficiencies.begin(), t.deficiencies.end(),
                                                                std::size_t{0})) /
                            static_cast<double>(t.deficiencies.size());
        out.samples = t.deficiencies.size();
        out.within = static_cast<std::size_t>(std::count_if(t.deficiencies.begin(), t.deficiencies.end(),
                                                            [&](std::size_t d) { return d <= tolerance; }));
        const auto perfect =
            static_cast<std::uint64_t>(std::count(t.padded_perfect.begin(), t.padded_perfect.end(), true));
        out.observation = static_cast<double>(worst);
        out.row = {std::uint64_t{trial}, seed, std::uint64_t{t.subset_size}, std::uint64_t{out.samples},
                   std::uint64_t{worst}, mean, std::uint64_t{out.within}, perfect, tolerance};
    } else if (e == "chain-yield") {
        const auto results = chain_yield_trial(c.m, c.n, c.k, c.pairs, seed);
        const double tail_threshold = c.factor * static_cast<double>(c.m) / static_cast<double>(c.k);
        const double split_threshold = c.factor * static_cast<double>(c.m) / static_cast<double>(2 * c.k);
        std::size_t min_tail = std::numeric_limits<std::size_t>::max();
        std::size_t min_split = std::numeric_limits<std::size_t>::max();
        std::uint64_t invalid = 0;
        bool disjoint = true;
        for (const auto& r : results) {
            invalid += r.invalid_paths;
            disjoint = disjoint && r.disjoint;
            if (r.tail) {
                min_tail = std::min(min_tail, r.total);
            } else {
                min_split = std::min(min_split, *std::min_element(r.family_paths.begin(), r.family_paths.end()));
            }
        }
        out.passed = invalid == 0 && disjoint && static_cast<double>(min_tail) >= tail_threshold &&
                     static_cast<double>(min_split) >= split_threshold;
        out.observation = static_cast<double>(min_split);
        out.row = {std::uint64_t{trial}, seed,           std::uint64_t{min_tail}, std::uint64_t{min_split},
                   tail_threshold,       split_threshold, invalid,                 disjoint,
                   out.passed};
    } else {
        const auto results = complete_chain_trial(c.n, c.length, c.pairs, seed);
        const double threshold = c.factor * static_cast<double>(c.n) / static_cast<double>(c.length - 1);
        std::size_t low = std::numeric_limits<std::size_t>::max();
        std::uint64_t invalid = 0;
        bool disjoint = true;
        for (const auto& r : results) {
            low = std::min(low, r.total);
            invalid += r.invalid_paths;
            disjoint = disjoint && r.disjoint;
        }
        out.passed = invalid == 0 && disjoint && static_cast<double>(low) >= threshold;
        out.observation = static_cast<double>(low);
        out.row = {std::uint64_t{trial}, seed, std::uint64_t{low}, threshold, invalid, disjoint, out.passed};
    }
    return out;
}

std::vector<std::string> columns_for(const std::string& e) {
    if (e == "concentration-2path" || e == "complete-2path") {
        return {"trial", "seed", "min_pair", "u", "v", "threshold", "pass"};
    }
    if (e == "matching-deficiency") {
        return {"trial",          "seed",           "subset_size",    "samples",  "max_deficiency",
                "mean_deficiency", "within_tolerance", "padded_perfect", "tolerance"};
    }
    if (e == "chain-yield") {
        return {"trial",           "seed",          "min_tail_yield", "min_pattern_yield", "tail_threshold",
                "pattern_threshold", "invalid_paths", "disjoint",       "pass"};
    }
    return {"trial", "seed", "min_yield", "threshold", "invalid_paths", "disjoint", "pass"};
}

std::string observation_for(const std::string& e) {
    if (e == "matching-deficiency") return "max_deficiency";
    if (e == "chain-yield") return "min_pattern_yield";
    if (e == "complete-chain") return "min_yield";
    return "min_pair";
}

std::string format_cell(const Cell& cell) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, bool>) {
                return x ? "true" : "false";
            } else {
                return fmt::format("{}", x);
            }
        },
        cell);
}

Json cell_json(const Cell& cell) {
    return std::visit([](const auto& x) { return Json(x); }, cell);
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& config) {
    validate(config);
    ExperimentReport report;
    report.config = config;
    report.schema = fmt::format("altpaths-mc/{}/v1", config.experiment);
    report.columns = columns_for(config.experiment);
    report.observation = observation_for(config.experiment);

    std::vector<TrialOutput> outputs(config.trials);
    std::vector<std::exception_ptr> errors(config.threads);
    auto work = [&](std::size_t t) {
        try {
            for (std::size_t i = t; i < config.trials; i += config.threads) {
                outputs[i] = run_trial(config, i);
            }
        } catch (...) {
            errors[t] = std::current_exception();
        }
    };
    if (config.threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < config.threads; ++t) {
            pool.emplace_back(work, t);
        }
        for (auto& th : pool) {
            th.join();
        }
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    std::vector<double> observations;
    std::size_t samples = 0;
    std::size_t within = 0;
    std::size_t trials_passed = 0;
    for (auto& o : outputs) {
        report.rows.push_back(std::move(o.row));
        observations.push_back(o.observation);
        samples += o.samples;
        within += o.within;
        trials_passed += o.passed ? 1 : 0;
    }
    report.stats = TrialStats::from(std::move(observations));

    if (config.experiment == "matching-deficiency") {
        const double fraction = static_cast<double>(within) / static_cast<double>(samples);
        report.passed = fraction >= config.required_fraction;
        report.summary = {{"samples", std::uint64_t{samples}},
                          {"within_tolerance", std::uint64_t{within}},
                          {"fraction_within", fraction},
                          {"required_fraction", config.required_fraction}};
    } else {
        report.passed = trials_passed == config.trials;
        report.summary = {{"trials_passed", std::uint64_t{trials_passed}}};
    }
    return report;
}

void write_csv(const ExperimentReport& report, std::ostream& out) {
    out << "# schema " << report.schema << '\n';
    out << "# config " << config_json(report.config) << '\n';
    out << fmt::format("{}\n", fmt::join(report.columns, ","));
    for (const auto& row : report.rows) {
        std::vector<std::string> cells;
        for (const auto& c : row) {
            cells.push_back(format_cell(c));
        }
        out << fmt::format("{}\n", fmt::join(cells, ","));
    }
    const auto& s = report.stats;
    out << "\n# aggregate over " << report.observation << '\n';
    out << "statistic,value\n";
    out << fmt::format("trials,{}\nmin,{}\nmax,{}\nmean,{}\nstddev,{}\nq10,{}\nq50,{}\nq90,{}\n",
                       s.observations.size(), s.min, s.max, s.mean, s.stddev, s.q10, s.q50, s.q90);
    for (const auto& [key, value] : report.summary) {
        out << key << ',' << format_cell(value) << '\n';
    }
    out << "passed," << (report.passed ? "true" : "false") << '\n';
}

void write_json(const ExperimentReport& report, std::ostream& out) {
    Json j;
    j["schema"] = report.schema;
    j["config"] = Json::parse(config_json(report.config));
    Json rows = Json::array();
    for (const auto& row : report.rows) {
        Json r;
        for (std::size_t i = 0; i < row.size(); ++i) {
            r[report.columns[i]] = cell_json(row[i]);
        }
        rows.push_back(std::move(r));
    }
    j["trials"] = std::move(rows);
    const auto& s = report.stats;
    j["aggregate"] = {{"observation", report.observation},
                      {"count", s.observations.size()},
                      {"min", s.min},
                      {"max", s.max},
                      {"mean", s.mean},
                      {"stddev", s.stddev},
                      {"q10", s.q10},
                      {"q50", s.q50},
                      {"q90", s.q90}};
    for (const auto& [key, value] : report.summary) {
        j["aggregate"][key] = cell_json(value);
    }
    j["passed"] = report.passed;
    out << j.dump(2) << '\n';
}

}  // namespace altpaths
