#include "altpaths/matching.hpp"

#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <unordered_set>

#include <fmt/format.h>

namespace altpaths {

namespace {

constexpr std::size_t unmatched = std::numeric_limits<std::size_t>::max();
constexpr std::size_t unreached = std::numeric_limits<std::size_t>::max();

void require_distinct(const std::vector<std::size_t>& ids, const char* which) {
    std::unordered_set<std::size_t> seen;
    for (std::size_t id : ids) {
        if (!seen.insert(id).second) {
            throw std::invalid_argument(fmt::format("{} set lists vertex {} twice", which, id));
        }
    }
}

}  // namespace

BipartiteAdjacency::BipartiteAdjacency(std::size_t left, std::size_t right, std::vector<std::uint8_t> bits)
    : left_(left), right_(right), bits_(std::move(bits)) {
    if (bits_.size() != left_ * right_) {
        throw std::invalid_argument("adjacency table size does not match its dimensions");
    }
}

BipartiteSubgraphView make_view(const BipartiteAdjacency& graph, std::vector<std::size_t> a,
                                std::vector<std::size_t> b) {
    require_distinct(a, "left");
    require_distinct(b, "right");
    for (std::size_t x : a) {
        if (x >= graph.left()) throw std::out_of_range("left vertex out of range");
    }
    for (std::size_t y : b) {
        if (y >= graph.right()) throw std::out_of_range("right vertex out of range");
    }
    BipartiteSubgraphView view;
    view.left = std::move(a);
    view.right = std::move(b);
    view.adjacent = [&graph](std::size_t x, std::size_t y) { return graph(x, y); };
    return view;
}

BipartiteSubgraphView make_color_view(const ColoringMatrix& coloring, Side a_side, std::vector<std::size_t> a,
                                      std::vector<std::size_t> b, Color color) {
    if (color < 1 || color > coloring.r()) {
        throw std::invalid_argument(fmt::format("unknown color id {} for r={}", color, coloring.r()));
    }
    require_distinct(a, "left");
    require_distinct(b, "right");
    for (std::size_t x : a) {
        if (x >= coloring.class_size(a_side)) throw std::out_of_range("vertex of A out of range");
    }
    for (std::size_t y : b) {
        if (y >= coloring.class_size(other(a_side))) throw std::out_of_range("vertex of B out of range");
    }
    BipartiteSubgraphView view;
    view.left = std::move(a);
    view.right = std::move(b);
    if (a_side == Side::left) {
        view.adjacent = [&coloring, color](std::size_t x, std::size_t y) { return coloring(x, y) == color; };
    } else {
        view.adjacent = [&coloring, color](std::size_t x, std::size_t y) { return coloring(y, x) == color; };
    }
    return view;
}

BipartiteSubgraphView make_color_view(const CompleteColoring& coloring, std::vector<std::size_t> a,
                                      std::vector<std::size_t> b, Color color) {
    if (color < 1 || color > coloring.r()) {
        throw std::invalid_argument(fmt::format("unknown color id {} for r={}", color, coloring.r()));
    }
    require_distinct(a, "left");
    require_distinct(b, "right");
    std::unordered_set<std::size_t> in_a(a.begin(), a.end());
    for (std::size_t y : b) {
        if (in_a.count(y)) {
            throw std::invalid_argument(fmt::format("vertex {} lies in both sides of the view", y));
        }
    }
    for (std::size_t x : a) {
        if (x >= coloring.n()) throw std::out_of_range("vertex of A out of range");
    }
    for (std::size_t y : b) {
        if (y >= coloring.n()) throw std::out_of_range("vertex of B out of range");
    }
    BipartiteSubgraphView view;
    view.left = std::move(a);
    view.right = std::move(b);
    view.adjacent = [&coloring, color](std::size_t x, std::size_t y) { return coloring(x, y) == color; };
    return view;
}

HopcroftKarp::HopcroftKarp(const BipartiteSubgraphView& view)
    : left_count_(view.left_size()), right_count_(view.right_size()), adjacency_(left_count_) {
    for (std::size_t i = 0; i < left_count_; ++i) {
        for (std::size_t j = 0; j < right_count_; ++j) {
            if (view.edge(i, j)) {
                adjacency_[i].push_back(j);
            }
        }
    }
}

bool HopcroftKarp::layer() {
    std::queue<std::size_t> queue;
    level_.assign(left_count_, unreached);
    for (std::size_t a = 0; a < left_count_; ++a) {
        if (match_left_[a] == unmatched) {
            level_[a] = 0;
            queue.push(a);
        }
    }
    bool found_free = false;
    while (!queue.empty()) {
        const std::size_t a = queue.front();
        queue.pop();
        for (std::size_t b : adjacency_[a]) {
            const std::size_t next = match_right_[b];
            if (next == unmatched) {
                found_free = true;
            } else if (level_[next] == unreached) {
                level_[next] = level_[a] + 1;
                queue.push(next);
            }
        }
    }
    return found_free;
}

bool HopcroftKarp::augment(std::size_t a) {
    for (std::size_t& k = cursor_[a]; k < adjacency_[a].size(); ++k) {
        const std::size_t b = adjacency_[a][k];
        const std::size_t next = match_right_[b];
        if (next == unmatched || (level_[next] == level_[a] + 1 && augment(next))) {
            match_left_[a] = b;
            match_right_[b] = a;
            ++k;
            return true;
        }
    }
    level_[a] = unreached;
    return false;
}

HallViolation HopcroftKarp::certificate() const {
    // Left vertices reachable from unmatched ones by alternating paths, and
    // their neighbourhood. Maximality makes every reached right vertex matched.
    std::vector<std::uint8_t> left_seen(left_count_, 0);
    std::vector<std::uint8_t> right_seen(right_count_, 0);
    std::queue<std::size_t> queue;
    for (std::size_t a = 0; a < left_count_; ++a) {
        if (match_left_[a] == unmatched) {
            left_seen[a] = 1;
            queue.push(a);
        }
    }
    while (!queue.empty()) {
        const std::size_t a = queue.front();
        queue.pop();
        for (std::size_t b : adjacency_[a]) {
            if (right_seen[b]) {
                continue;
            }
            right_seen[b] = 1;
            const std::size_t next = match_right_[b];
            if (next != unmatched && !left_seen[next]) {
                left_seen[next] = 1;
                queue.push(next);
            }
        }
    }
    HallViolation h;
    for (std::size_t a = 0; a < left_count_; ++a) {
        if (left_seen[a]) h.set.push_back(a);
    }
    for (std::size_t b = 0; b < right_count_; ++b) {
        if (right_seen[b]) h.neighbourhood.push_back(b);
    }
    return h;
}

MatchingResult HopcroftKarp::run() {
    match_left_.assign(left_count_, unmatched);
    match_right_.assign(right_count_, unmatched);
    while (layer()) {
        cursor_.assign(left_count_, 0);
        for (std::size_t a = 0; a < left_count_; ++a) {
            if (match_left_[a] == unmatched) {
                augment(a);
            }
        }
    }
    MatchingResult result;
    for (std::size_t a = 0; a < left_count_; ++a) {
        if (match_left_[a] != unmatched) {
            result.edges.push_back({a, match_left_[a]});
        }
    }
    if (result.edges.size() < left_count_) {
        result.certificate = certificate();
    }
    return result;
}

MatchingResult max_matching(const BipartiteSubgraphView& view) { return HopcroftKarp(view).run(); }

BipartiteSubgraphView padded_graph(BipartiteSubgraphView view, std::size_t pads) {
    view.left_pads += pads;
    view.right_pads += pads;
    return view;
}

std::size_t default_pad_size(std::size_t m) {
    if (m <= 1) {
        return 0;
    }
    return static_cast<std::size_t>(std::ceil(std::log(static_cast<double>(m))));
}

MatchingResult color_matching(const ColoringMatrix& coloring, Side a_side, std::span<const std::size_t> a,
                              std::span<const std::size_t> b, Color color) {
    return max_matching(make_color_view(coloring, a_side, {a.begin(), a.end()}, {b.begin(), b.end()}, color));
}

MatchingResult color_matching(const CompleteColoring& coloring, std::span<const std::size_t> a,
                              std::span<const std::size_t> b, Color color) {
    return max_matching(make_color_view(coloring, {a.begin(), a.end()}, {b.begin(), b.end()}, color));
}

}  // namespace altpaths
