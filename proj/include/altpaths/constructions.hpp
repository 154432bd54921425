#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "altpaths/core.hpp"
#include "altpaths/matching.hpp"

namespace altpaths {

/// Every entry i.i.d. uniform in [1, r].
ColoringMatrix random_coloring(std::size_t m, std::size_t n, unsigned r, std::uint64_t seed);

/// Symmetric i.i.d. uniform coloring of K_n.
CompleteColoring random_complete_coloring(std::size_t n, unsigned r, std::uint64_t seed);

/// Random bipartite graph with independent edge probability p.
BipartiteAdjacency random_bipartite_graph(std::size_t left, std::size_t right, double p, std::uint64_t seed);

/// Two-block coloring: the left class splits into halves M1, M2 and the right
/// class into N1, N2 (first halves take the ceiling). M1 x N1 and M2 x N2 are
/// red, crossing pairs blue.
ColoringMatrix block_coloring(std::size_t m, std::size_t n);

/// Red on the perfect matching u_i - v_i (i < m), blue elsewhere. Needs n >= m.
ColoringMatrix odd_path_coloring(std::size_t m, std::size_t n);

/// A coloring whose right class splits into a random part and a shared tail.
/// Right vertices [0, split) see i.i.d. uniform two-colored edges; every
/// vertex in [split, n) sees the same balanced vector (m/2 red, m/2 blue).
struct SharedTailColoring {
    ColoringMatrix coloring;
    std::size_t split = 0;

    bool in_tail(std::size_t v) const { return v >= split; }
};

/// Requires n >= m >= 2k and even m; split = m.
SharedTailColoring shared_tail_coloring(std::size_t m, std::size_t n, std::size_t k, std::uint64_t seed);

// ------------------------------------------------------ chain builder

/// One family of chained blocks for internally disjoint u-v paths. Block i
/// holds the candidates for internal vertex i; the edge into block i has
/// color first_color when i is even and the other color when i is odd, and
/// the final edge into v continues the alternation.
///
/// For K_{m,n} with u, v on the right, even blocks are left vertices (the
/// X blocks) and odd blocks right vertices (the Y blocks). For K_n all
/// blocks come from the single class.
struct ChainFamily {
    Color first_color = blue;
    std::vector<std::vector<std::size_t>> blocks;
};

struct BlockSpec {
    std::size_t target_size = 0;
    std::vector<ChainFamily> families;

    bool empty() const;
};

enum class BlockStrategy : std::uint8_t {
    /// One family with blocks of size m/k, for pairs with identical vectors.
    shared_vector,
    /// Two complementary families with blocks of size m/(2k), endpoint
    /// blocks taken from N_BR/N_RR and N_RB/N_BB.
    split,
    /// Like split, but the endpoint blocks only need the color their own
    /// endpoint requires: blue(u), red(v) for the first family and red(u),
    /// blue(v) for the second. A matching of block slots to left vertices
    /// fills all four blocks whenever the codegree classes allow it.
    balanced,
    /// shared_vector when u and v see identical vectors, balanced otherwise.
    automatic,
};

struct BlockOptions {
    BlockStrategy strategy = BlockStrategy::automatic;
    /// Right vertices allowed in odd blocks; all right vertices except u, v
    /// when absent.
    std::optional<std::vector<std::size_t>> right_pool;
};

/// Greedily carves disjoint blocks for right vertices u, v and path length 2k.
/// Blocks are taken in index order from the codegree classes:
///   first family  starts blue:  block 0 from N_BR(u,v), last from N_RR(u,v)
///   second family starts red:   block 0 from N_RB(u,v), last from N_BB(u,v)
/// with inner left blocks from the leftovers of the same two classes. The
/// shared_vector strategy draws from blue(u), red(v) and the rest of the left
/// class. A family is dropped when one of its blocks would be empty.
BlockSpec auto_blockspec(const ColoringMatrix& coloring, std::size_t u, std::size_t v, std::size_t k,
                         const BlockOptions& options = {});

/// K_n version for paths of `length` >= 2 edges; blocks of size n/(2(length-1)).
/// Even lengths end on the opposite color of the first edge, odd lengths on
/// the same color, and the codegree classes follow.
BlockSpec auto_blockspec(const CompleteColoring& coloring, std::size_t u, std::size_t v, std::size_t length);

struct FamilyYield {
    /// Matching size at every stage; non-increasing along the chain.
    std::vector<std::size_t> stage_sizes;
    std::size_t paths = 0;
};

struct ChainYield {
    std::vector<PathRecord> paths;
    std::vector<FamilyYield> families;
};

/// Chains color-restricted maximum matchings block to block, left to right,
/// keeping only the matched endpoints of each stage. Every surviving chain is
/// an alternating u-v path; chains are internally disjoint because blocks are.
ChainYield matching_chain_paths(const ColoringMatrix& coloring, std::size_t u, std::size_t v,
                                const BlockSpec& spec);
ChainYield matching_chain_paths(const CompleteColoring& coloring, std::size_t u, std::size_t v,
                                const BlockSpec& spec);

}  // namespace altpaths
