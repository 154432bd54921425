#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "altpaths/core.hpp"
#include "altpaths/count.hpp"
#include "altpaths/counting.hpp"

namespace altpaths {

// ------------------------------------------------------------- packing

struct PackingResult {
    std::size_t size = 0;
    /// One optimal family of internally disjoint alternating paths.
    std::vector<PathRecord> paths;
    /// Branch-and-bound nodes visited.
    std::uint64_t nodes = 0;
};

struct PackingOptions {
    std::uint64_t budget = default_step_budget;
    /// Stop as soon as a family of this size is found; the reported size is
    /// then a lower bound capped at `stop_at`.
    std::optional<std::size_t> stop_at;
};

/// Maximum number of internally disjoint alternating u-v paths with `length`
/// edges. Enumerates all such paths, then solves the set packing over their
/// internal vertex sets exactly. Throws BudgetExceeded when either phase
/// exceeds the budget.
PackingResult max_disjoint_paths(const ColoringMatrix& coloring, const Vertex& u, const Vertex& v,
                                 std::size_t length, const PackingOptions& options = {});
PackingResult max_disjoint_paths(const CompleteColoring& coloring, std::size_t u, std::size_t v,
                                 std::size_t length, const PackingOptions& options = {});

// ---------------------------------------------------- extremal searches

enum class Symmetry : std::uint8_t {
    /// Reduce when m * n exceeds symmetry_threshold.
    automatic,
    on,
    off,
};

inline constexpr std::size_t symmetry_threshold = 6;

struct SearchOptions {
    /// Step budget for each pair evaluation.
    std::uint64_t budget = default_step_budget;
    /// Refuse to start when more colorings than this would be scanned.
    std::uint64_t max_colorings = 50'000'000;
    Symmetry symmetry = Symmetry::automatic;
    /// Skip colorings as soon as one pair cannot beat the incumbent.
    bool prune = true;
    unsigned threads = 1;
};

struct ExtremalResult {
    std::size_t value = 0;
    std::optional<ColoringMatrix> witness;
    std::optional<Code> code_witness;
    std::uint64_t instances_scanned = 0;
    bool symmetry_reduced = false;
};

/// The pairs an extremal value minimizes over: two right vertices for even
/// lengths, one vertex from each class for odd lengths.
std::vector<std::pair<Vertex, Vertex>> relevant_pairs(std::size_t m, std::size_t n, std::size_t length);

/// min over relevant pairs of max_disjoint_paths.
std::size_t kappa_of(const ColoringMatrix& coloring, std::size_t length, std::uint64_t budget = default_step_budget);

/// min over relevant pairs of the flavored alternating count (two colors).
Count lambda_of(const ColoringMatrix& coloring, std::size_t length, PathFlavor flavor,
                std::uint64_t budget = default_step_budget);

/// Exhaustive max over all r-colorings of K_{m,n} of kappa_of.
ExtremalResult exact_kappa(std::size_t m, std::size_t n, unsigned r, std::size_t length,
                           const SearchOptions& options = {});

/// Exhaustive max over all 2-colorings of K_{m,n} of lambda_of.
ExtremalResult exact_lambda(std::size_t m, std::size_t n, std::size_t length, PathFlavor flavor,
                            const SearchOptions& options = {});

/// Largest code in [r]^m with pairwise Hamming distance >= t.
ExtremalResult exact_alpha(std::size_t m, std::size_t t, unsigned r, const SearchOptions& options = {});

/// Number of colorings a search would scan, or nothing if it overflows.
std::optional<std::uint64_t> search_space_size(std::size_t m, std::size_t n, unsigned r, bool reduced);

// ----------------------------------------------------- bound verification

enum class BoundFamily : std::uint8_t {
    /// min pair 2-path count <= (1 - 1/r)(n / (n - 1)) m
    pair_2path_cap,
    /// total alternating 3-paths <= m^2 n^2 / 4
    p3_total,
    /// total alternating 4-sequences <= m^2 n^3 / 16
    p4_total,
    /// sum of mixed codegrees over left pairs <= m^2 n / 4
    mixed_codegree_sum,
};

std::string_view to_string(BoundFamily family);

/// Accepts the descriptive names plus one short alias per family.
std::optional<BoundFamily> parse_bound_family(std::string_view name);

Rational bound_value(BoundFamily family, std::size_t m, std::size_t n, unsigned r);

/// The bounded quantity on one coloring.
Count bound_quantity(BoundFamily family, const ColoringMatrix& coloring);

struct BoundReport {
    BoundFamily family = BoundFamily::p3_total;
    std::size_t m = 0;
    std::size_t n = 0;
    unsigned r = 2;
    std::uint64_t colorings = 0;
    std::uint64_t violations = 0;
    Count max_value = 0;
    Rational bound;
    /// bound - max_value
    Rational gap;
    /// First coloring (in enumeration order) attaining max_value.
    std::optional<ColoringMatrix> extremal;

    bool holds() const { return violations == 0; }
};

/// Checks the inequality on every r-coloring of K_{m,n}.
BoundReport verify_bounds(BoundFamily family, std::size_t m, std::size_t n, unsigned r,
                          const SearchOptions& options = {});

}  // namespace altpaths
