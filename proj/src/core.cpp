#include "altpaths/core.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <stdexcept>

#include <fmt/format.h>

namespace altpaths {

std::string to_string(Count value) {
    if (value == 0) {
        return "0";
    }
    std::string digits;
    while (value != 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
        value /= 10;
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

std::ostream& operator<<(std::ostream& os, Count value) { return os << to_string(value); }

std::string to_string(const Vertex& v) {
    return fmt::format("{}{}", v.side == Side::left ? 'M' : 'N', v.index);
}

std::string to_string(PathFlavor flavor) {
    return flavor == PathFlavor::walk ? "walk" : "path";
}

ColoringMatrix::ColoringMatrix(std::size_t m, std::size_t n, unsigned r, std::vector<Color> colors)
    : m_(m), n_(n), r_(r), colors_(std::move(colors)) {
    if (colors_.size() != m_ * n_) {
        throw std::invalid_argument(
            fmt::format("coloring table has {} entries, expected {}x{}", colors_.size(), m_, n_));
    }
}

ColoringMatrix ColoringMatrix::constant(std::size_t m, std::size_t n, unsigned r, Color c) {
    return ColoringMatrix(m, n, r, std::vector<Color>(m * n, c));
}

CompleteColoring::CompleteColoring(std::size_t n, unsigned r, std::vector<Color> full_table)
    : n_(n), r_(r), colors_(std::move(full_table)) {
    if (colors_.size() != n_ * n_) {
        throw std::invalid_argument(
            fmt::format("complete coloring table has {} entries, expected {}^2", colors_.size(), n_));
    }
}

CompleteColoring CompleteColoring::from_upper(std::size_t n, unsigned r, std::span<const Color> upper) {
    if (upper.size() != n * (n - (n > 0 ? 1 : 0)) / 2) {
        throw std::invalid_argument(
            fmt::format("upper triangle has {} entries, expected {}", upper.size(), n * (n - 1) / 2));
    }
    std::vector<Color> table(n * n, 0);
    std::size_t k = 0;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            table[u * n + v] = upper[k];
            table[v * n + u] = upper[k];
            ++k;
        }
    }
    return CompleteColoring(n, r, std::move(table));
}

ColoringMatrix from_code(const Code& code) {
    if (code.words.empty()) {
        throw std::invalid_argument("code has no words");
    }
    if (auto problems = validate(code); !problems.empty()) {
        throw std::invalid_argument(problems.front());
    }
    const std::size_t m = code.length();
    const std::size_t n = code.words.size();
    std::vector<Color> table(m * n);
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t u = 0; u < m; ++u) {
            table[u * n + v] = code.words[v][u];
        }
    }
    return ColoringMatrix(m, n, code.r, std::move(table));
}

Code to_code(const ColoringMatrix& coloring) {
    if (auto problems = validate(coloring); !problems.empty()) {
        throw std::invalid_argument(problems.front());
    }
    Code code{coloring.r(), {}};
    code.words.reserve(coloring.n());
    for (std::size_t v = 0; v < coloring.n(); ++v) {
        code.words.push_back(right_word(coloring, v));
    }
    return code;
}

Word right_word(const ColoringMatrix& coloring, std::size_t v) {
    Word w(coloring.m());
    for (std::size_t u = 0; u < coloring.m(); ++u) {
        w[u] = coloring(u, v);
    }
    return w;
}

std::size_t hamming(std::span<const Color> x, std::span<const Color> y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument(
            fmt::format("hamming distance of words with lengths {} and {}", x.size(), y.size()));
    }
    std::size_t d = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        d += x[i] != y[i] ? 1 : 0;
    }
    return d;
}

ColorDegrees::ColorDegrees(const ColoringMatrix& coloring)
    : r_(coloring.r()), left_count_(coloring.m()),
      counts_((coloring.m() + coloring.n()) * coloring.r(), 0) {
    for (std::size_t u = 0; u < coloring.m(); ++u) {
        for (std::size_t v = 0; v < coloring.n(); ++v) {
            const Color c = coloring(u, v);
            ++counts_[u * r_ + (c - 1)];
            ++counts_[(left_count_ + v) * r_ + (c - 1)];
        }
    }
}

ColorDegrees::ColorDegrees(const CompleteColoring& coloring)
    : r_(coloring.r()), left_count_(coloring.n()), counts_(coloring.n() * coloring.r(), 0) {
    for (std::size_t u = 0; u < coloring.n(); ++u) {
        for (std::size_t v = 0; v < coloring.n(); ++v) {
            if (u != v) {
                ++counts_[u * r_ + (coloring(u, v) - 1)];
            }
        }
    }
}

std::size_t CodegreeTable::mixed() const {
    std::size_t total = 0;
    for (Color x = 1; x <= r; ++x) {
        for (Color y = 1; y <= r; ++y) {
            if (x != y) {
                total += codeg(x, y);
            }
        }
    }
    return total;
}

CodegreeTable codegree_table(const ColoringMatrix& coloring, const Vertex& u, const Vertex& v) {
    return codegree_table(coloring, u, v, std::make_shared<const ColorDegrees>(coloring));
}

CodegreeTable codegree_table(const ColoringMatrix& coloring, const Vertex& u, const Vertex& v,
                             std::shared_ptr<const ColorDegrees> degrees) {
    if (u.side != v.side) {
        throw std::invalid_argument(
            fmt::format("codegree pair {} {} spans both classes", to_string(u), to_string(v)));
    }
    if (u.index == v.index) {
        throw std::invalid_argument(fmt::format("codegree pair repeats vertex {}", to_string(u)));
    }
    if (u.index >= coloring.class_size(u.side) || v.index >= coloring.class_size(v.side)) {
        throw std::out_of_range("codegree pair vertex out of range");
    }
    CodegreeTable t;
    t.side = u.side;
    t.u = u.index;
    t.v = v.index;
    t.r = coloring.r();
    t.common = coloring.class_size(other(u.side));
    t.counts.assign(std::size_t{t.r} * t.r, 0);
    t.degrees = std::move(degrees);
    for (std::size_t w = 0; w < t.common; ++w) {
        const Vertex wv{other(u.side), w};
        const Color x = coloring.color(u, wv);
        const Color y = coloring.color(v, wv);
        ++t.counts[(x - 1) * t.r + (y - 1)];
    }
    return t;
}

CodegreeTable codegree_table(const CompleteColoring& coloring, std::size_t u, std::size_t v) {
    return codegree_table(coloring, u, v, std::make_shared<const ColorDegrees>(coloring));
}

CodegreeTable codegree_table(const CompleteColoring& coloring, std::size_t u, std::size_t v,
                             std::shared_ptr<const ColorDegrees> degrees) {
    if (u == v) {
        throw std::invalid_argument(fmt::format("codegree pair repeats vertex {}", u));
    }
    if (u >= coloring.n() || v >= coloring.n()) {
        throw std::out_of_range("codegree pair vertex out of range");
    }
    CodegreeTable t;
    t.u = u;
    t.v = v;
    t.r = coloring.r();
    t.common = coloring.n() - 2;
    t.counts.assign(std::size_t{t.r} * t.r, 0);
    t.degrees = std::move(degrees);
    for (std::size_t w = 0; w < coloring.n(); ++w) {
        if (w == u || w == v) {
            continue;
        }
        ++t.counts[(coloring(u, w) - 1) * t.r + (coloring(v, w) - 1)];
    }
    return t;
}

std::vector<std::string> validate(const ColoringMatrix& coloring) {
    std::vector<std::string> out;
    if (coloring.m() < 1 || coloring.n() < 1) {
        out.push_back(fmt::format("empty class: m={} n={}", coloring.m(), coloring.n()));
    }
    if (coloring.r() < 2) {
        out.push_back(fmt::format("color count r={} is below 2", coloring.r()));
    }
    for (std::size_t u = 0; u < coloring.m(); ++u) {
        for (std::size_t v = 0; v < coloring.n(); ++v) {
            const Color c = coloring(u, v);
            if (c < 1 || c > coloring.r()) {
                out.push_back(fmt::format("cell ({},{}) has color {} outside [1,{}]", u, v, c, coloring.r()));
            }
        }
    }
    return out;
}

std::vector<std::string> validate(const CompleteColoring& coloring) {
    std::vector<std::string> out;
    if (coloring.n() < 1) {
        out.push_back("complete coloring has no vertices");
    }
    if (coloring.r() < 2) {
        out.push_back(fmt::format("color count r={} is below 2", coloring.r()));
    }
    for (std::size_t u = 0; u < coloring.n(); ++u) {
        if (coloring(u, u) != 0) {
            out.push_back(fmt::format("self-loop at {} has color {}", u, coloring(u, u)));
        }
        for (std::size_t v = u + 1; v < coloring.n(); ++v) {
            const Color c = coloring(u, v);
            if (c != coloring(v, u)) {
                out.push_back(fmt::format("asymmetric pair ({},{}): {} vs {}", u, v, c, coloring(v, u)));
            }
            if (c < 1 || c > coloring.r()) {
                out.push_back(fmt::format("pair ({},{}) has color {} outside [1,{}]", u, v, c, coloring.r()));
            }
        }
    }
    return out;
}

std::vector<std::string> validate(const Code& code) {
    std::vector<std::string> out;
    if (code.r < 2) {
        out.push_back(fmt::format("alphabet size r={} is below 2", code.r));
    }
    const std::size_t len = code.length();
    for (std::size_t v = 0; v < code.words.size(); ++v) {
        const Word& w = code.words[v];
        if (w.size() != len) {
            out.push_back(fmt::format("word {} has length {}, expected {}", v, w.size(), len));
            continue;
        }
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] < 1 || w[i] > code.r) {
                out.push_back(fmt::format("word {} position {} has letter {} outside [1,{}]", v, i, w[i], code.r));
            }
        }
    }
    return out;
}

namespace {

template <typename ColorOf, typename InRange>
std::vector<std::string> validate_path_impl(const PathRecord& path, ColorOf color_of, InRange in_range,
                                            bool bipartite) {
    std::vector<std::string> out;
    if (path.vertices.size() != path.edge_colors.size() + 1) {
        out.push_back(fmt::format("{} vertices for {} edges", path.vertices.size(), path.edge_colors.size()));
        return out;
    }
    for (const Vertex& x : path.vertices) {
        if (!in_range(x)) {
            out.push_back(fmt::format("vertex {} out of range", to_string(x)));
            return out;
        }
    }
    for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
        const Vertex& a = path.vertices[i];
        const Vertex& b = path.vertices[i + 1];
        if (bipartite && a.side == b.side) {
            out.push_back(fmt::format("step {} stays inside one class ({} -> {})", i, to_string(a), to_string(b)));
            continue;
        }
        if (!bipartite && a.index == b.index) {
            out.push_back(fmt::format("step {} is a self-loop at {}", i, to_string(a)));
            continue;
        }
        const Color actual = color_of(a, b);
        if (actual != path.edge_colors[i]) {
            out.push_back(fmt::format("edge {} ({} -> {}) recorded color {} but has {}", i, to_string(a),
                                      to_string(b), path.edge_colors[i], actual));
        }
        if (i > 0 && path.edge_colors[i] == path.edge_colors[i - 1]) {
            out.push_back(fmt::format("edges {} and {} share color {}", i - 1, i, path.edge_colors[i]));
        }
    }
    if (path.flavor == PathFlavor::path) {
        std::set<std::pair<int, std::size_t>> seen;
        for (const Vertex& x : path.vertices) {
            if (!seen.emplace(static_cast<int>(x.side), x.index).second) {
                out.push_back(fmt::format("vertex {} repeats on a path", to_string(x)));
            }
        }
    }
    return out;
}

}  // namespace

std::vector<std::string> validate_path(const ColoringMatrix& coloring, const PathRecord& path) {
    return validate_path_impl(
        path, [&](const Vertex& a, const Vertex& b) { return coloring.color(a, b); },
        [&](const Vertex& x) { return x.index < coloring.class_size(x.side); }, true);
}

std::vector<std::string> validate_path(const CompleteColoring& coloring, const PathRecord& path) {
    return validate_path_impl(
        path, [&](const Vertex& a, const Vertex& b) { return coloring(a.index, b.index); },
        [&](const Vertex& x) { return x.side == Side::left && x.index < coloring.n(); }, false);
}

}  // namespace altpaths
