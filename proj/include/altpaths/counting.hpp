#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "altpaths/core.hpp"
#include "altpaths/count.hpp"

namespace altpaths {

/// Thrown when an exact enumeration would exceed its step budget. Callers
/// must not treat this as a zero count.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t default_step_budget = 100'000'000;

// ---------------------------------------------------------------- length 2

/// Alternating u-w-v paths between right vertices u and v. Equals the Hamming
/// distance of their codewords.
Count count_alt_2paths(const ColoringMatrix& coloring, std::size_t u, std::size_t v);
Count count_alt_2paths(const CompleteColoring& coloring, std::size_t u, std::size_t v);

/// Alternating 2-paths whose middle vertex is the left vertex v:
/// sum over color pairs i < j of deg_i(v) * deg_j(v).
Count middle_vertex_2path_count(const ColoringMatrix& coloring, std::size_t v);
Count middle_vertex_2path_count(const CompleteColoring& coloring, std::size_t v);

/// Cap on the minimum pair count of alternating 2-paths over right-vertex
/// pairs: (1 - 1/r)(1 + 1/(n-1)) m, exact.
Rational kappa2_upper_bound(std::size_t m, std::size_t n, unsigned r);

/// The same cap for K_n: (1 - 1/r)(n - 1).
Rational kappa2_upper_bound_complete(std::size_t n, unsigned r);

// ------------------------------------------------- two-color closed forms
//
// These follow the degree/codegree accounting over pairs u < v of left
// vertices. All of them require r = 2.

/// Length-3 alternating paths whose two left vertices are u and v.
Count p3_through(const ColoringMatrix& coloring, std::size_t u, std::size_t v);
Count total_alt_p3(const ColoringMatrix& coloring);

/// Length-4 alternating sequences x1-u-x2-v-x3 with right endpoints. Walk
/// flavor: x1 = x3 is allowed.
Count p4_through(const ColoringMatrix& coloring, std::size_t u, std::size_t v);
Count total_alt_p4(const ColoringMatrix& coloring);

/// Sum over u < w < v of the six-term length-5 objective, evaluated on the
/// actual degrees and codegrees. Bounds the number of alternating 5-paths.
Count alt5_objective(const ColoringMatrix& coloring);

/// Sum over left pairs u < v of c(u,v) = codeg_RB(u,v) + codeg_BR(u,v).
Count mixed_codegree_sum(const ColoringMatrix& coloring);

// ------------------------------------------------------- general lengths

/// Alternating walks from a to b with exactly `length` edges (any r), by a
/// dynamic program over (vertex, color of last edge).
Count count_alt_walks(const ColoringMatrix& coloring, const Vertex& a, const Vertex& b, std::size_t length);
Count count_alt_walks(const CompleteColoring& coloring, std::size_t a, std::size_t b, std::size_t length);

struct EnumerationOptions {
    std::uint64_t budget = default_step_budget;
    bool collect = false;
};

struct PathEnumeration {
    Count count = 0;
    std::vector<PathRecord> paths;  // filled only when collect is set
    std::uint64_t steps = 0;
};

/// Distinct-vertex alternating paths from a to b with `length` edges, by
/// depth-first enumeration. Throws BudgetExceeded past the step budget.
PathEnumeration count_alt_paths_exact(const ColoringMatrix& coloring, const Vertex& a, const Vertex& b,
                                      std::size_t length, const EnumerationOptions& options = {});
PathEnumeration count_alt_paths_exact(const CompleteColoring& coloring, std::size_t a, std::size_t b,
                                      std::size_t length, const EnumerationOptions& options = {});

/// Counts for every (row, column) pair of a class-by-class grid, labeled with
/// its flavor. Path-flavor diagonal entries of a same-class grid are 0.
struct WalkCountTable {
    Side row_side = Side::right;
    Side column_side = Side::right;
    std::size_t rows = 0;
    std::size_t columns = 0;
    std::size_t length = 0;
    PathFlavor flavor = PathFlavor::walk;
    std::vector<Count> counts;

    Count at(std::size_t i, std::size_t j) const { return counts[i * columns + j]; }
};

WalkCountTable walk_count_table(const ColoringMatrix& coloring, Side row_side, Side column_side,
                                std::size_t length, PathFlavor flavor, const EnumerationOptions& options = {});
WalkCountTable walk_count_table(const CompleteColoring& coloring, std::size_t length, PathFlavor flavor,
                                const EnumerationOptions& options = {});

// ------------------------------------------------------ digraph reduction

/// Orientation of a two-colored K_{m,n}: red edges point right -> left,
/// blue edges left -> right.
struct OrientedBipartiteDigraph {
    std::size_t m = 0;
    std::size_t n = 0;
    /// Row-major (left u, right v): 1 when the arc is v -> u.
    std::vector<std::uint8_t> toward_left;

    bool has_arc(const Vertex& from, const Vertex& to) const;
};

OrientedBipartiteDigraph to_digraph(const ColoringMatrix& coloring);

/// Directed walks a -> b with `length` arcs, by repeated application of the
/// adjacency relation to a count vector.
Count count_directed_walks(const OrientedBipartiteDigraph& digraph, const Vertex& a, const Vertex& b,
                           std::size_t length);

}  // namespace altpaths
