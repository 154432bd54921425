#pragma once

// Slow reference implementations used only by the tests. None of them share
// code with the library beyond the data types.

#include <algorithm>
#include <functional>
#include <limits>
#include <vector>

#include "altpaths/core.hpp"
#include "altpaths/count.hpp"
#include "altpaths/search.hpp"

namespace oracle {

using altpaths::Color;
using altpaths::ColoringMatrix;
using altpaths::CompleteColoring;
using altpaths::Count;
using altpaths::Vertex;

// Plain graph on ids 0..size-1; color 0 means no edge.
struct Graph {
    std::size_t size = 0;
    std::function<Color(std::size_t, std::size_t)> color;
};

inline Graph of(const ColoringMatrix& c) {
    const std::size_t m = c.m();
    const auto& t = c.table();
    const std::size_t n = c.n();
    return {m + n, [m, n, &t](std::size_t a, std::size_t b) -> Color {
                if (a < m && b >= m) return t[a * n + (b - m)];
                if (b < m && a >= m) return t[b * n + (a - m)];
                return 0;
            }};
}

inline Graph of(const CompleteColoring& c) {
    return {c.n(), [&c](std::size_t a, std::size_t b) -> Color { return a == b ? Color{0} : c(a, b); }};
}

inline std::size_t id(const ColoringMatrix& c, const Vertex& v) {
    return v.side == altpaths::Side::left ? v.index : c.m() + v.index;
}

// Every vertex tuple (a, x1, ..., b) of `length` edges whose consecutive edge
// colors differ. With `distinct` the tuple must not repeat a vertex.
inline std::vector<std::vector<std::size_t>> sequences(const Graph& g, std::size_t a, std::size_t b,
                                                       std::size_t length, bool distinct) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> tuple(length + 1);
    tuple[0] = a;
    tuple[length] = b;
    // odometer over the interior positions
    std::vector<std::size_t> inner(length - 1, 0);
    while (true) {
        for (std::size_t i = 0; i + 1 < length; ++i) tuple[i + 1] = inner[i];
        bool ok = true;
        Color prev = 0;
        for (std::size_t i = 0; i < length && ok; ++i) {
            const Color c = g.color(tuple[i], tuple[i + 1]);
            ok = c != 0 && c != prev;
            prev = c;
        }
        if (ok && distinct) {
            auto sorted = tuple;
            std::sort(sorted.begin(), sorted.end());
            ok = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
        }
        if (ok) out.push_back(tuple);
        std::size_t pos = 0;
        while (pos < inner.size() && ++inner[pos] == g.size) {
            inner[pos++] = 0;
        }
        if (pos == inner.size()) break;
    }
    return out;
}

inline Count count_sequences(const Graph& g, std::size_t a, std::size_t b, std::size_t length, bool distinct) {
    return sequences(g, a, b, length, distinct).size();
}

// Directed walks in the orientation red: N -> M, blue: M -> N, via powers of
// the dense adjacency matrix.
inline Count matrix_power_walks(const ColoringMatrix& c, const Vertex& a, const Vertex& b, std::size_t length) {
    const std::size_t m = c.m();
    const std::size_t size = m + c.n();
    std::vector<Count> adj(size * size, 0);
    for (std::size_t u = 0; u < m; ++u) {
        for (std::size_t v = 0; v < c.n(); ++v) {
            if (c(u, v) == altpaths::red) {
                adj[(m + v) * size + u] = 1;
            } else {
                adj[u * size + (m + v)] = 1;
            }
        }
    }
    std::vector<Count> power(size * size, 0);
    for (std::size_t i = 0; i < size; ++i) power[i * size + i] = 1;
    for (std::size_t step = 0; step < length; ++step) {
        std::vector<Count> next(size * size, 0);
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t k = 0; k < size; ++k)
                if (power[i * size + k])
                    for (std::size_t j = 0; j < size; ++j) next[i * size + j] += power[i * size + k] * adj[k * size + j];
        power = std::move(next);
    }
    return power[id(c, a) * size + id(c, b)];
}

// Largest family of pairwise disjoint sets, by trying every subset.
inline std::size_t subset_packing(const std::vector<std::vector<std::size_t>>& sets) {
    std::size_t best = 0;
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t)> go = [&](std::size_t i) {
        if (i == sets.size()) {
            best = std::max(best, chosen.size());
            return;
        }
        go(i + 1);
        for (std::size_t c : chosen) {
            for (std::size_t x : sets[i])
                for (std::size_t y : sets[c])
                    if (x == y) return;
        }
        chosen.push_back(i);
        go(i + 1);
        chosen.pop_back();
    };
    go(0);
    return best;
}

inline std::vector<std::vector<std::size_t>> interiors(const std::vector<std::vector<std::size_t>>& paths) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& p : paths) out.emplace_back(p.begin() + 1, p.end() - 1);
    return out;
}

inline std::size_t packing(const ColoringMatrix& c, const Vertex& a, const Vertex& b, std::size_t length) {
    return subset_packing(interiors(sequences(of(c), id(c, a), id(c, b), length, true)));
}

inline std::vector<ColoringMatrix> all_colorings(std::size_t m, std::size_t n, unsigned r) {
    std::vector<ColoringMatrix> out;
    std::vector<Color> t(m * n, 1);
    while (true) {
        out.emplace_back(m, n, r, t);
        std::size_t pos = 0;
        while (pos < t.size() && ++t[pos] > r) {
            t[pos++] = 1;
        }
        if (pos == t.size()) break;
    }
    return out;
}

// No pruning, no symmetry: every coloring, every pair, every subset.
inline std::size_t naive_kappa(std::size_t m, std::size_t n, unsigned r, std::size_t length) {
    std::size_t best = 0;
    for (const auto& c : all_colorings(m, n, r)) {
        std::size_t low = std::numeric_limits<std::size_t>::max();
        for (const auto& [a, b] : altpaths::relevant_pairs(m, n, length)) {
            low = std::min(low, packing(c, a, b, length));
        }
        best = std::max(best, low);
    }
    return best;
}

inline Count naive_lambda(std::size_t m, std::size_t n, std::size_t length, bool distinct) {
    Count best = 0;
    for (const auto& c : all_colorings(m, n, 2)) {
        Count low = std::numeric_limits<Count>::max();
        const auto g = of(c);
        for (const auto& [a, b] : altpaths::relevant_pairs(m, n, length)) {
            low = std::min(low, count_sequences(g, id(c, a), id(c, b), length, distinct));
        }
        best = std::max(best, low);
    }
    return best;
}

// Degree and codegree variables recomputed cell by cell.
struct Vars {
    const ColoringMatrix& c;
    std::size_t R(std::size_t u) const {
        std::size_t k = 0;
        for (std::size_t y = 0; y < c.n(); ++y) k += c(u, y) == altpaths::red;
        return k;
    }
    std::size_t B(std::size_t u) const { return c.n() - R(u); }
    std::size_t xy(std::size_t u, std::size_t w, Color x, Color y) const {
        std::size_t k = 0;
        for (std::size_t j = 0; j < c.n(); ++j) k += c(u, j) == x && c(w, j) == y;
        return k;
    }
    std::size_t BR(std::size_t u, std::size_t w) const { return xy(u, w, altpaths::blue, altpaths::red); }
    std::size_t RB(std::size_t u, std::size_t w) const { return xy(u, w, altpaths::red, altpaths::blue); }
};

// f(u,w,v) written out term by term, summed over u < w < v.
inline Count literal_alt5(const ColoringMatrix& c) {
    const Vars x{c};
    auto f = [&](std::size_t u, std::size_t w, std::size_t v) -> Count {
        Count s = 0;
        s += Count(x.BR(u, w)) * x.BR(w, v) * (x.R(u) + x.B(v));
        s += Count(x.RB(u, w)) * x.RB(w, v) * (x.B(u) + x.R(v));
        s += Count(x.RB(u, w)) * x.BR(u, v) * (x.R(w) + x.B(v));
        s += Count(x.BR(u, w)) * x.RB(u, v) * (x.B(w) + x.R(v));
        s += Count(x.BR(u, v)) * x.RB(w, v) * (x.R(u) + x.B(w));
        s += Count(x.RB(u, v)) * x.BR(w, v) * (x.B(u) + x.R(w));
        return s;
    };
    Count total = 0;
    for (std::size_t u = 0; u < c.m(); ++u)
        for (std::size_t w = u + 1; w < c.m(); ++w)
            for (std::size_t v = w + 1; v < c.m(); ++v) total += f(u, w, v);
    return total;
}

// Undirected alternating 3-paths: every directed 4-tuple, halved.
inline Count all_alt_3paths(const ColoringMatrix& c) {
    const auto g = of(c);
    Count directed = 0;
    for (std::size_t a = 0; a < g.size; ++a)
        for (std::size_t b = 0; b < g.size; ++b)
            if (a != b) directed += count_sequences(g, a, b, 3, true);
    return directed / 2;
}

// Tuples x1-u-x2-v-x3 with u < v on the left, alternating; x1 = x3 allowed.
inline Count p4_sequences(const ColoringMatrix& c) {
    Count total = 0;
    for (std::size_t u = 0; u < c.m(); ++u)
        for (std::size_t v = u + 1; v < c.m(); ++v)
            for (std::size_t x1 = 0; x1 < c.n(); ++x1)
                for (std::size_t x2 = 0; x2 < c.n(); ++x2)
                    for (std::size_t x3 = 0; x3 < c.n(); ++x3) {
                        const Color a = c(u, x1), b = c(u, x2), d = c(v, x2), e = c(v, x3);
                        total += a != b && b != d && d != e;
                    }
    return total;
}

// Distinct-vertex alternating 5-paths, each counted once (from its M end).
inline Count all_alt_5paths(const ColoringMatrix& c) {
    const auto g = of(c);
    Count total = 0;
    for (std::size_t a = 0; a < c.m(); ++a)
        for (std::size_t b = 0; b < c.n(); ++b) total += count_sequences(g, a, c.m() + b, 5, true);
    return total;
}

}  // namespace oracle
