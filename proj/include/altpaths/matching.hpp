#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "altpaths/core.hpp"

namespace altpaths {

/// Uncolored bipartite graph as a dense adjacency table (left-major).
class BipartiteAdjacency {
public:
    BipartiteAdjacency(std::size_t left, std::size_t right, std::vector<std::uint8_t> bits);

    std::size_t left() const { return left_; }
    std::size_t right() const { return right_; }
    bool operator()(std::size_t a, std::size_t b) const { return bits_[a * right_ + b] != 0; }

private:
    std::size_t left_;
    std::size_t right_;
    std::vector<std::uint8_t> bits_;
};

/// The bipartite graph between a left set A and a right set B of some host,
/// optionally extended by pad vertices that are adjacent to everything on the
/// other side. Positions [0, |A|) are the host vertices in A; positions
/// [|A|, |A| + left_pads) are pads (likewise on the right).
///
/// The predicate captures the host by reference; the host must outlive the view.
struct BipartiteSubgraphView {
    std::vector<std::size_t> left;
    std::vector<std::size_t> right;
    std::function<bool(std::size_t, std::size_t)> adjacent;
    std::size_t left_pads = 0;
    std::size_t right_pads = 0;

    std::size_t left_size() const { return left.size() + left_pads; }
    std::size_t right_size() const { return right.size() + right_pads; }

    bool edge(std::size_t i, std::size_t j) const {
        if (i >= left.size() || j >= right.size()) {
            return true;
        }
        return adjacent(left[i], right[j]);
    }
};

BipartiteSubgraphView make_view(const BipartiteAdjacency& graph, std::vector<std::size_t> a,
                                std::vector<std::size_t> b);

/// Edges of one color between A (on side a_side) and B (on the other side).
BipartiteSubgraphView make_color_view(const ColoringMatrix& coloring, Side a_side, std::vector<std::size_t> a,
                                      std::vector<std::size_t> b, Color color);

/// Edges of one color between disjoint vertex sets of K_n.
BipartiteSubgraphView make_color_view(const CompleteColoring& coloring, std::vector<std::size_t> a,
                                      std::vector<std::size_t> b, Color color);

/// Matched pair, as positions in the view.
struct MatchedPair {
    std::size_t left;
    std::size_t right;

    friend bool operator==(const MatchedPair&, const MatchedPair&) = default;
};

/// A left set S with |N(S)| < |S|, as view positions.
struct HallViolation {
    std::vector<std::size_t> set;
    std::vector<std::size_t> neighbourhood;
};

struct MatchingResult {
    std::vector<MatchedPair> edges;
    /// Present exactly when the matching leaves some left vertex unmatched.
    std::optional<HallViolation> certificate;

    std::size_t size() const { return edges.size(); }
};

/// Layered augmenting-path maximum matching. Augments in lowest-index order,
/// so the result is a deterministic function of the view.
class HopcroftKarp {
public:
    explicit HopcroftKarp(const BipartiteSubgraphView& view);

    MatchingResult run();

private:
    bool layer();
    bool augment(std::size_t a);
    HallViolation certificate() const;

    std::size_t left_count_;
    std::size_t right_count_;
    std::vector<std::vector<std::size_t>> adjacency_;
    std::vector<std::size_t> match_left_;
    std::vector<std::size_t> match_right_;
    std::vector<std::size_t> level_;
    std::vector<std::size_t> cursor_;
};

MatchingResult max_matching(const BipartiteSubgraphView& view);

/// The view extended by `pads` fully connected vertices on each side.
BipartiteSubgraphView padded_graph(BipartiteSubgraphView view, std::size_t pads);

/// ceil(ln m), the default pad size.
std::size_t default_pad_size(std::size_t m);

/// Maximum matching that uses only edges of the given color.
MatchingResult color_matching(const ColoringMatrix& coloring, Side a_side, std::span<const std::size_t> a,
                              std::span<const std::size_t> b, Color color);
MatchingResult color_matching(const CompleteColoring& coloring, std::span<const std::size_t> a,
                              std::span<const std::size_t> b, Color color);

}  // namespace altpaths
