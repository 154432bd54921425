// altpaths: command-line front end for the alternating-path library.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "altpaths/constructions.hpp"
#include "altpaths/counting.hpp"
#include "altpaths/experiments.hpp"
#include "altpaths/io.hpp"
#include "altpaths/search.hpp"

namespace {

using namespace altpaths;
using Json = nlohmann::ordered_json;

enum ExitCode : int {
    exit_ok = 0,
    exit_parse = 2,
    exit_precondition = 3,
    exit_budget = 4,
};

struct Options {
    std::optional<std::size_t> m;
    std::optional<std::size_t> n;
    std::optional<unsigned> r;
    std::optional<std::size_t> length;
    std::optional<std::size_t> k;
    std::optional<std::size_t> t;
    std::optional<double> alpha;
    std::optional<std::size_t> trials;
    std::optional<std::size_t> samples;
    std::optional<std::size_t> pairs;
    std::optional<std::size_t> pad;
    std::optional<double> factor;
    std::optional<std::uint64_t> budget;
    std::optional<std::uint64_t> max_colorings;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    std::string format;
    std::string out;
    std::string witness;
    std::string flavor;
    std::string symmetry = "auto";
    bool timing = false;

    std::string target;
    std::vector<std::size_t> numbers;
};

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--m", o.m, "size of the left class M");
    cmd->add_option("--n", o.n, "size of the right class N (or of K_n)");
    cmd->add_option("--r", o.r, "number of colors");
    cmd->add_option("--length", o.length, "path length in edges");
    cmd->add_option("--k", o.k, "half path length for chain constructions");
    cmd->add_option("--t", o.t, "minimum distance for code searches");
    cmd->add_option("--alpha", o.alpha, "subset fraction for matching experiments");
    cmd->add_option("--trials", o.trials, "Monte Carlo trials");
    cmd->add_option("--samples", o.samples, "subset pairs per matching trial");
    cmd->add_option("--pairs", o.pairs, "vertex pairs per chain trial");
    cmd->add_option("--pad", o.pad, "pad vertices per side (default ceil(ln m))");
    cmd->add_option("--factor", o.factor, "tolerance multiplier");
    cmd->add_option("--seed", o.seed, "64-bit seed")->capture_default_str();
    cmd->add_option("--budget", o.budget, "step budget for exact enumeration");
    cmd->add_option("--max-colorings", o.max_colorings, "cap on colorings scanned by exhaustive commands");
    cmd->add_option("--threads", o.threads, "worker threads")->capture_default_str();
    cmd->add_option("--format", o.format, "csv or json");
    cmd->add_option("--out", o.out, "write the result here instead of stdout");
    cmd->add_option("--flavor", o.flavor, "walk or path");
    cmd->add_option("--symmetry", o.symmetry, "auto, on or off")->capture_default_str();
    cmd->add_flag("--timing", o.timing, "add runtimes to JSON reports");
}

class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

template <typename T>
T need(const std::optional<T>& value, const char* name) {
    if (!value) {
        throw PreconditionError(fmt::format("missing required parameter --{}", name));
    }
    return *value;
}

Json count_json(Count c) {
    if (c <= std::numeric_limits<std::uint64_t>::max()) {
        return static_cast<std::uint64_t>(c);
    }
    return to_string(c);
}

Json coloring_rows(const ColoringMatrix& c) {
    Json rows = Json::array();
    for (std::size_t u = 0; u < c.m(); ++u) {
        rows.push_back(std::vector<Color>(c.row(u).begin(), c.row(u).end()));
    }
    return rows;
}

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(o.out);
    if (!file) {
        throw PreconditionError(fmt::format("cannot write {}", o.out));
    }
    file << text;
}

std::string format_or(const Options& o, const char* fallback) {
    const std::string f = o.format.empty() ? fallback : o.format;
    if (f != "csv" && f != "json") {
        throw PreconditionError(fmt::format("unknown format '{}'; expected csv or json", f));
    }
    return f;
}

PathFlavor parse_flavor(const std::string& s) {
    if (s == "walk") return PathFlavor::walk;
    if (s == "path") return PathFlavor::path;
    throw PreconditionError(fmt::format("unknown flavor '{}'; expected walk or path", s));
}

Symmetry parse_symmetry(const std::string& s) {
    if (s == "auto") return Symmetry::automatic;
    if (s == "on") return Symmetry::on;
    if (s == "off") return Symmetry::off;
    throw PreconditionError(fmt::format("unknown symmetry mode '{}'; expected auto, on or off", s));
}

Json echo(const Options& o, const std::string& command) {
    Json j;
    j["command"] = command;
    j["target"] = o.target;
    auto put = [&](const char* key, const auto& value) {
        if (value) {
            j[key] = *value;
        } else {
            j[key] = nullptr;
        }
    };
    put("m", o.m);
    put("n", o.n);
    put("r", o.r);
    put("length", o.length);
    put("k", o.k);
    put("t", o.t);
    put("alpha", o.alpha);
    put("budget", o.budget);
    put("max_colorings", o.max_colorings);
    j["seed"] = o.seed;
    j["threads"] = o.threads;
    j["flavor"] = o.flavor;
    j["symmetry"] = o.symmetry;
    return j;
}

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// ------------------------------------------------------------------- gen

int cmd_gen(Options& o) {
    // positional numbers fill the construction's parameters in order
    auto take = [&](std::size_t i, std::optional<std::size_t>& slot) {
        if (i < o.numbers.size()) slot = o.numbers[i];
    };
    std::size_t colors = o.r.value_or(2);
    auto take_colors = [&](std::size_t i) {
        if (i < o.numbers.size()) colors = o.numbers[i];
    };
    std::string name = o.target;
    if (name == "theorem31") name = "shared-tail";

    Json sidecar;
    sidecar["construction"] = o.target;
    sidecar["seed"] = o.seed;
    std::ostringstream text;
    if (name == "random") {
        take(0, o.m);
        take(1, o.n);
        take_colors(2);
        const auto c = random_coloring(need(o.m, "m"), need(o.n, "n"), static_cast<unsigned>(colors),
                                       o.seed);
        write_coloring(text, c);
        sidecar["m"] = c.m();
        sidecar["n"] = c.n();
        sidecar["r"] = c.r();
    } else if (name == "block" || name == "oddpath") {
        take(0, o.m);
        take(1, o.n);
        const auto c = name == "block" ? block_coloring(need(o.m, "m"), need(o.n, "n"))
                                       : odd_path_coloring(need(o.m, "m"), need(o.n, "n"));
        write_coloring(text, c);
        sidecar["m"] = c.m();
        sidecar["n"] = c.n();
        sidecar["r"] = 2;
    } else if (name == "shared-tail") {
        take(0, o.m);
        take(1, o.n);
        take(2, o.k);
        const auto built = shared_tail_coloring(need(o.m, "m"), need(o.n, "n"), need(o.k, "k"), o.seed);
        write_coloring(text, built.coloring);
        sidecar["m"] = built.coloring.m();
        sidecar["n"] = built.coloring.n();
        sidecar["r"] = 2;
        sidecar["k"] = *o.k;
        sidecar["tail_starts_at"] = built.split;
    } else if (name == "complete-random") {
        take(0, o.n);
        take_colors(1);
        const auto c = random_complete_coloring(need(o.n, "n"), static_cast<unsigned>(colors), o.seed);
        write_coloring(text, c);
        sidecar["n"] = c.n();
        sidecar["r"] = c.r();
    } else {
        throw PreconditionError(fmt::format(
            "unknown construction '{}'; expected random, block, shared-tail, oddpath or complete-random", o.target));
    }
    emit(o, text.str());
    if (!o.out.empty()) {
        std::ofstream side(o.out + ".json");
        side << sidecar.dump(2) << '\n';
    }
    return exit_ok;
}

// ----------------------------------------------------------------- count

int cmd_count(Options& o) {
    const auto coloring = read_coloring_file(o.target);
    if (!o.length) o.length = 2;
    if (o.flavor.empty()) o.flavor = "walk";
    const std::size_t length = *o.length;
    const auto flavor = parse_flavor(o.flavor);
    const EnumerationOptions enumeration{o.budget.value_or(default_step_budget), false};
    const Stopwatch clock;
    WalkCountTable table;
    if (const auto* bip = std::get_if<ColoringMatrix>(&coloring)) {
        const Side rows = length % 2 == 0 ? Side::right : Side::left;
        table = walk_count_table(*bip, rows, Side::right, length, flavor, enumeration);
    } else {
        table = walk_count_table(std::get<CompleteColoring>(coloring), length, flavor, enumeration);
    }
    const bool bipartite = std::holds_alternative<ColoringMatrix>(coloring);
    auto label = [&](Side s, std::size_t i) {
        return bipartite ? to_string(Vertex{s, i}) : std::to_string(i);
    };

    if (format_or(o, "json") == "csv") {
        std::ostringstream text;
        text << "row,column,count\n";
        for (std::size_t i = 0; i < table.rows; ++i) {
            for (std::size_t j = 0; j < table.columns; ++j) {
                text << label(table.row_side, i) << ',' << label(table.column_side, j) << ','
                     << to_string(table.at(i, j)) << '\n';
            }
        }
        emit(o, text.str());
        return exit_ok;
    }
    Json j;
    j["config"] = echo(o, "count");
    j["length"] = length;
    j["flavor"] = std::string(to_string(flavor));
    j["rows"] = bipartite ? (table.row_side == Side::left ? "M" : "N") : "V";
    j["columns"] = bipartite ? "N" : "V";
    Json counts = Json::array();
    for (std::size_t i = 0; i < table.rows; ++i) {
        Json row = Json::array();
        for (std::size_t jx = 0; jx < table.columns; ++jx) {
            row.push_back(count_json(table.at(i, jx)));
        }
        counts.push_back(std::move(row));
    }
    j["counts"] = std::move(counts);
    if (o.timing) j["runtime_seconds"] = clock.seconds();
    emit(o, j.dump(2) + "\n");
    return exit_ok;
}

// ------------------------------------------------------------------ pack

int cmd_pack(Options& o) {
    const auto coloring = read_coloring_file(o.target);
    const std::size_t length = need(o.length, "length");
    const PackingOptions packing{o.budget.value_or(default_step_budget), std::nullopt};
    const Stopwatch clock;

    struct Row {
        std::string u;
        std::string v;
        std::size_t size;
    };
    std::vector<Row> rows;
    if (const auto* bip = std::get_if<ColoringMatrix>(&coloring)) {
        if (length % 2 == 0 && bip->n() < 2) {
            throw PreconditionError("even lengths pair right vertices; the file has n < 2");
        }
        for (const auto& [a, b] : relevant_pairs(bip->m(), bip->n(), length)) {
            rows.push_back({to_string(a), to_string(b), max_disjoint_paths(*bip, a, b, length, packing).size});
        }
    } else {
        const auto& comp = std::get<CompleteColoring>(coloring);
        for (std::size_t a = 0; a < comp.n(); ++a) {
            for (std::size_t b = a + 1; b < comp.n(); ++b) {
                rows.push_back(
                    {std::to_string(a), std::to_string(b), max_disjoint_paths(comp, a, b, length, packing).size});
            }
        }
    }
    std::size_t low = rows.empty() ? 0 : rows.front().size;
    for (const auto& row : rows) {
        low = std::min(low, row.size);
    }

    if (format_or(o, "json") == "csv") {
        std::ostringstream text;
        text << "u,v,packing\n";
        for (const auto& row : rows) {
            text << row.u << ',' << row.v << ',' << row.size << '\n';
        }
        emit(o, text.str());
        return exit_ok;
    }
    Json j;
    j["config"] = echo(o, "pack");
    j["length"] = length;
    Json pairs = Json::array();
    for (const auto& row : rows) {
        pairs.push_back({{"u", row.u}, {"v", row.v}, {"packing", row.size}});
    }
    j["pairs"] = std::move(pairs);
    j["min"] = low;
    if (o.timing) j["runtime_seconds"] = clock.seconds();
    emit(o, j.dump(2) + "\n");
    return exit_ok;
}

// ---------------------------------------------------------------- search

int cmd_search(Options& o) {
    SearchOptions search;
    search.budget = o.budget.value_or(default_step_budget);
    if (o.max_colorings) search.max_colorings = *o.max_colorings;
    search.symmetry = parse_symmetry(o.symmetry);
    search.threads = o.threads;
    const Stopwatch clock;

    Json j;
    j["config"] = echo(o, "search");
    auto describe = [&](const ExtremalResult& result) {
        Json r;
        r["value"] = result.value;
        r["instances_scanned"] = result.instances_scanned;
        r["symmetry_reduced"] = result.symmetry_reduced;
        if (result.witness) r["witness"] = coloring_rows(*result.witness);
        if (result.code_witness) r["code"] = result.code_witness->words;
        return r;
    };
    std::optional<ExtremalResult> witness_source;
    if (o.target == "kappa") {
        const auto result = exact_kappa(need(o.m, "m"), need(o.n, "n"), o.r.value_or(2), need(o.length, "length"),
                                        search);
        j["kappa"] = describe(result);
        witness_source = result;
    } else if (o.target == "lambda") {
        std::vector<PathFlavor> flavors;
        if (o.flavor.empty()) {
            flavors = {PathFlavor::walk, PathFlavor::path};
        } else {
            flavors = {parse_flavor(o.flavor)};
        }
        for (auto flavor : flavors) {
            const auto result = exact_lambda(need(o.m, "m"), need(o.n, "n"), need(o.length, "length"), flavor, search);
            j["lambda"][std::string(to_string(flavor))] = describe(result);
            if (!witness_source) witness_source = result;
        }
    } else if (o.target == "alpha") {
        const auto result = exact_alpha(need(o.m, "m"), need(o.t, "t"), o.r.value_or(2), search);
        j["alpha"] = describe(result);
        witness_source = result;
    } else {
        throw PreconditionError(fmt::format("unknown search '{}'; expected kappa, lambda or alpha", o.target));
    }
    if (!o.witness.empty() && witness_source) {
        std::ofstream file(o.witness);
        if (witness_source->witness) write_coloring(file, *witness_source->witness);
        if (witness_source->code_witness) write_code(file, *witness_source->code_witness);
    }
    if (o.timing) j["runtime_seconds"] = clock.seconds();
    emit(o, j.dump(2) + "\n");
    return exit_ok;
}

// ---------------------------------------------------------------- verify

int cmd_verify(Options& o) {
    const auto family = parse_bound_family(o.target);
    if (!family) {
        throw PreconditionError(fmt::format(
            "unknown bound family '{}'; expected pair-2path-cap, p3-total, p4-total or mixed-codegree-sum",
            o.target));
    }
    SearchOptions search;
    if (o.max_colorings) search.max_colorings = *o.max_colorings;
    const Stopwatch clock;
    const auto report = verify_bounds(*family, need(o.m, "m"), need(o.n, "n"), o.r.value_or(2), search);
    const auto bound = fmt::format("{}/{}", report.bound.numerator(), report.bound.denominator());
    const auto gap = fmt::format("{}/{}", report.gap.numerator(), report.gap.denominator());
    const auto summary = fmt::format("{} on {}/{} colorings, max {}", report.holds() ? "holds" : "fails",
                                     report.colorings - report.violations, report.colorings,
                                     to_string(report.max_value));

    if (format_or(o, "json") == "csv") {
        emit(o, fmt::format("family,m,n,r,colorings,violations,max,bound,gap\n{},{},{},{},{},{},{},{},{}\n",
                            to_string(report.family), report.m, report.n, report.r, report.colorings,
                            report.violations, to_string(report.max_value), bound, gap));
        return exit_ok;
    }
    Json j;
    j["config"] = echo(o, "verify");
    j["family"] = std::string(to_string(report.family));
    j["summary"] = summary;
    j["colorings"] = report.colorings;
    j["violations"] = report.violations;
    j["max"] = count_json(report.max_value);
    j["bound"] = bound;
    j["gap"] = gap;
    if (report.extremal) j["extremal"] = coloring_rows(*report.extremal);
    if (o.timing) j["runtime_seconds"] = clock.seconds();
    emit(o, j.dump(2) + "\n");
    return exit_ok;
}

// -------------------------------------------------------------------- mc

int cmd_mc(Options& o) {
    auto config = default_config(o.target);
    if (o.m) config.m = *o.m;
    if (o.n) config.n = *o.n;
    if (o.r) config.r = *o.r;
    if (o.length) config.length = *o.length;
    if (o.k) config.k = *o.k;
    if (o.alpha) config.alpha = *o.alpha;
    if (o.trials) config.trials = *o.trials;
    if (o.samples) config.samples = *o.samples;
    if (o.pairs) config.pairs = *o.pairs;
    if (o.factor) config.factor = *o.factor;
    if (o.pad) {
        config.pad = *o.pad;
    } else if (config.experiment == "matching-deficiency") {
        config.pad = default_pad_size(config.m);
    }
    config.seed = o.seed;
    config.threads = o.threads;
    config.format = format_or(o, "csv") == "csv" ? OutputFormat::csv : OutputFormat::json;

    const Stopwatch clock;
    const auto report = run_experiment(config);
    std::ostringstream text;
    if (config.format == OutputFormat::csv) {
        write_csv(report, text);
    } else if (o.timing) {
        std::ostringstream body;
        write_json(report, body);
        auto j = Json::parse(body.str());
        j["runtime_seconds"] = clock.seconds();
        text << j.dump(2) << '\n';
    } else {
        write_json(report, text);
    }
    emit(o, text.str());
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Alternating paths in edge-colored complete and complete bipartite graphs"};
    app.require_subcommand(1);
    Options o;

    auto* gen = app.add_subcommand("gen", "build a coloring: random, block, shared-tail, oddpath, complete-random");
    gen->add_option("construction", o.target, "construction name")->required();
    gen->add_option("params", o.numbers, "construction parameters in order (e.g. m n r)");
    auto* count = app.add_subcommand("count", "alternating walk or path counts for every pair");
    count->add_option("file", o.target, "coloring file")->required();
    auto* pack = app.add_subcommand("pack", "maximum internally disjoint alternating paths per pair");
    pack->add_option("file", o.target, "coloring file")->required();
    auto* search = app.add_subcommand("search", "exhaustive extremal values: kappa, lambda, alpha");
    search->add_option("quantity", o.target, "kappa, lambda or alpha")->required();
    search->add_option("--witness", o.witness, "write the witness coloring or code here");
    auto* verify = app.add_subcommand("verify", "check a closed-form bound on every coloring");
    verify->add_option("family", o.target, "bound family")->required();
    auto* mc = app.add_subcommand("mc", "Monte Carlo experiments");
    mc->add_option("experiment", o.target, "experiment name")->required();
    for (auto* cmd : {gen, count, pack, search, verify, mc}) {
        add_common(cmd, o);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_parse;
    }

    if (!o.budget) o.budget = default_step_budget;
    if (!o.max_colorings) o.max_colorings = SearchOptions{}.max_colorings;
    if (!gen->parsed() && !mc->parsed() && !o.r) o.r = 2;

    try {
        if (gen->parsed()) return cmd_gen(o);
        if (count->parsed()) return cmd_count(o);
        if (pack->parsed()) return cmd_pack(o);
        if (search->parsed()) return cmd_search(o);
        if (verify->parsed()) return cmd_verify(o);
        if (mc->parsed()) return cmd_mc(o);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return exit_parse;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return exit_budget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "precondition violated: " << e.what() << '\n';
        return exit_precondition;
    } catch (const std::out_of_range& e) {
        std::cerr << "precondition violated: " << e.what() << '\n';
        return exit_precondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return exit_ok;
}
