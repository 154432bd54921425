#include "altpaths/counting.hpp"

#include <fmt/format.h>

#include "host.hpp"

namespace altpaths {

namespace {

void require_two_colors(const ColoringMatrix& coloring, const char* what) {
    if (coloring.r() != 2) {
        throw std::invalid_argument(fmt::format("{} is defined for two colors, got r={}", what, coloring.r()));
    }
}

void require_right_pair(const ColoringMatrix& coloring, std::size_t u, std::size_t v) {
    if (u == v) {
        throw std::invalid_argument(fmt::format("pair repeats right vertex {}", u));
    }
    if (u >= coloring.n() || v >= coloring.n()) {
        throw std::out_of_range("right vertex out of range");
    }
}

void require_left_pair(const ColoringMatrix& coloring, std::size_t u, std::size_t v) {
    if (u == v) {
        throw std::invalid_argument(fmt::format("pair repeats left vertex {}", u));
    }
    if (u >= coloring.m() || v >= coloring.m()) {
        throw std::out_of_range("left vertex out of range");
    }
}

void require_parity(const Vertex& a, const Vertex& b, std::size_t length) {
    const bool same = a.side == b.side;
    if (same != (length % 2 == 0)) {
        throw std::invalid_argument(fmt::format(
            "endpoints {} and {} cannot be joined by a walk of length {} in a bipartite graph", to_string(a),
            to_string(b), length));
    }
}

Count pairs_from_degrees(const std::vector<std::size_t>& degrees) {
    // sum_{i<j} d_i d_j
    Count running = 0;
    Count total = 0;
    for (std::size_t d : degrees) {
        total = checked_add(total, checked_mul(running, d));
        running += d;
    }
    return total;
}

// ---------------------------------------------------------------- walk DP

// walks[g * (r + 1) + c]: walks from the source ending at g whose last edge
// has color c (c = 0 only for the empty walk at the source).
std::vector<Count> alt_walks_from(const detail::Host& host, std::size_t source, std::size_t length) {
    const std::size_t stride = host.r() + 1;
    std::vector<Count> cur(host.size() * stride, 0);
    std::vector<Count> next(host.size() * stride, 0);
    std::vector<Count> totals(host.size(), 0);
    cur[source * stride] = 1;
    for (std::size_t step = 0; step < length; ++step) {
        for (std::size_t g = 0; g < host.size(); ++g) {
            Count t = 0;
            for (std::size_t c = 0; c < stride; ++c) {
                t = checked_add(t, cur[g * stride + c]);
            }
            totals[g] = t;
        }
        std::fill(next.begin(), next.end(), Count{0});
        for (std::size_t w = 0; w < host.size(); ++w) {
            for (std::size_t x = host.neighbours_begin(w); x < host.neighbours_end(w); ++x) {
                const Color c = host.color(x, w);
                if (c == 0 || totals[x] == 0) {
                    continue;
                }
                // extend every walk into x whose last color differs from c
                const Count extendable = totals[x] - cur[x * stride + c];
                next[w * stride + c] = checked_add(next[w * stride + c], extendable);
            }
        }
        std::swap(cur, next);
    }
    std::vector<Count> out(host.size(), 0);
    for (std::size_t g = 0; g < host.size(); ++g) {
        for (std::size_t c = 0; c < stride; ++c) {
            out[g] = checked_add(out[g], cur[g * stride + c]);
        }
    }
    return out;
}

// ------------------------------------------------------ path enumeration

class PathEnumerator {
public:
    PathEnumerator(const detail::Host& host, std::size_t target, std::size_t length,
                   const EnumerationOptions& options)
        : host_(host), target_(target), length_(length), options_(options), on_path_(host.size(), 0) {}

    PathEnumeration run(std::size_t source) {
        stack_.push_back(source);
        on_path_[source] = 1;
        extend(source, 0, length_);
        return std::move(result_);
    }

private:
    void tick() {
        if (++result_.steps > options_.budget) {
            throw BudgetExceeded(fmt::format("path enumeration exceeded {} steps", options_.budget));
        }
    }

    void record() {
        result_.count = checked_add(result_.count, 1);
        if (!options_.collect) {
            return;
        }
        PathRecord p;
        p.flavor = PathFlavor::path;
        for (std::size_t g : stack_) {
            p.vertices.push_back(host_.vertex(g));
        }
        p.edge_colors = colors_;
        result_.paths.push_back(std::move(p));
    }

    void extend(std::size_t at, Color last, std::size_t remaining) {
        if (remaining == 1) {
            const Color c = host_.color(at, target_);
            if (c != 0 && c != last) {
                tick();
                stack_.push_back(target_);
                colors_.push_back(c);
                record();
                stack_.pop_back();
                colors_.pop_back();
            }
            return;
        }
        for (std::size_t x = host_.neighbours_begin(at); x < host_.neighbours_end(at); ++x) {
            if (x == target_ || on_path_[x]) {
                continue;
            }
            const Color c = host_.color(at, x);
            if (c == 0 || c == last) {
                continue;
            }
            tick();
            on_path_[x] = 1;
            stack_.push_back(x);
            colors_.push_back(c);
            extend(x, c, remaining - 1);
            colors_.pop_back();
            stack_.pop_back();
            on_path_[x] = 0;
        }
    }

    const detail::Host& host_;
    std::size_t target_;
    std::size_t length_;
    EnumerationOptions options_;
    std::vector<std::uint8_t> on_path_;
    std::vector<std::size_t> stack_;
    std::vector<Color> colors_;
    PathEnumeration result_;
};

PathEnumeration enumerate_paths(const detail::Host& host, std::size_t a, std::size_t b, std::size_t length,
                                const EnumerationOptions& options) {
    if (length == 0) {
        throw std::invalid_argument("path length must be at least 1");
    }
    if (a == b) {
        throw std::invalid_argument("a path needs distinct endpoints");
    }
    return PathEnumerator(host, b, length, options).run(a);
}

}  // namespace

// ---------------------------------------------------------------- length 2

Count count_alt_2paths(const ColoringMatrix& coloring, std::size_t u, std::size_t v) {
    require_right_pair(coloring, u, v);
    Count total = 0;
    for (std::size_t w = 0; w < coloring.m(); ++w) {
        total += coloring(w, u) != coloring(w, v) ? 1 : 0;
    }
    return total;
}

Count count_alt_2paths(const CompleteColoring& coloring, std::size_t u, std::size_t v) {
    if (u == v) {
        throw std::invalid_argument(fmt::format("pair repeats vertex {}", u));
    }
    if (u >= coloring.n() || v >= coloring.n()) {
        throw std::out_of_range("vertex out of range");
    }
    Count total = 0;
    for (std::size_t w = 0; w < coloring.n(); ++w) {
        if (w != u && w != v && coloring(u, w) != coloring(v, w)) {
            ++total;
        }
    }
    return total;
}

Count middle_vertex_2path_count(const ColoringMatrix& coloring, std::size_t v) {
    if (v >= coloring.m()) {
        throw std::out_of_range("left vertex out of range");
    }
    std::vector<std::size_t> degrees(coloring.r(), 0);
    for (Color c : coloring.row(v)) {
        ++degrees[c - 1];
    }
    return pairs_from_degrees(degrees);
}

Count middle_vertex_2path_count(const CompleteColoring& coloring, std::size_t v) {
    if (v >= coloring.n()) {
        throw std::out_of_range("vertex out of range");
    }
    std::vector<std::size_t> degrees(coloring.r(), 0);
    for (std::size_t w = 0; w < coloring.n(); ++w) {
        if (w != v) {
            ++degrees[coloring(v, w) - 1];
        }
    }
    return pairs_from_degrees(degrees);
}

Rational kappa2_upper_bound(std::size_t m, std::size_t n, unsigned r) {
    if (n < 2) {
        throw std::invalid_argument("the pair cap needs n >= 2");
    }
    if (r < 2) {
        throw std::invalid_argument("the pair cap needs r >= 2");
    }
    const auto mm = static_cast<std::int64_t>(m);
    const auto nn = static_cast<std::int64_t>(n);
    const auto rr = static_cast<std::int64_t>(r);
    return Rational(rr - 1, rr) * Rational(nn, nn - 1) * Rational(mm);
}

Rational kappa2_upper_bound_complete(std::size_t n, unsigned r) {
    if (n < 2) {
        throw std::invalid_argument("the pair cap needs n >= 2");
    }
    if (r < 2) {
        throw std::invalid_argument("the pair cap needs r >= 2");
    }
    const auto rr = static_cast<std::int64_t>(r);
    return Rational(rr - 1, rr) * Rational(static_cast<std::int64_t>(n) - 1);
}

// ------------------------------------------------- two-color closed forms

Count p3_through(const ColoringMatrix& coloring, std::size_t u, std::size_t v) {
    require_two_colors(coloring, "the length-3 counter");
    require_left_pair(coloring, u, v);
    const auto t = codegree_table(coloring, left_vertex(u), left_vertex(v));
    const Count rb = t.codeg(red, blue);
    const Count br = t.codeg(blue, red);
    // red-blue-red: u-x1-v-x2 or x1-u-x2-v; blue-red-blue likewise
    Count total = checked_mul(rb, t.deg_v(red));
    total = checked_add(total, checked_mul(t.deg_u(red), br));
    total = checked_add(total, checked_mul(br, t.deg_v(blue)));
    total = checked_add(total, checked_mul(t.deg_u(blue), rb));
    return total;
}

namespace {

// Red degree of every left vertex plus the blue-red codegree matrix over
// left pairs: br[u * m + w] = |{y : c(u,y) = blue, c(w,y) = red}|.
struct LeftPairStats {
    std::size_t m = 0;
    std::size_t n = 0;
    std::vector<std::size_t> red_deg;
    std::vector<std::size_t> br;

    std::size_t R(std::size_t u) const { return red_deg[u]; }
    std::size_t B(std::size_t u) const { return n - red_deg[u]; }
    std::size_t BR(std::size_t u, std::size_t w) const { return br[u * m + w]; }
    std::size_t RB(std::size_t u, std::size_t w) const { return br[w * m + u]; }
};

LeftPairStats left_pair_stats(const ColoringMatrix& coloring) {
    LeftPairStats s;
    s.m = coloring.m();
    s.n = coloring.n();
    s.red_deg.assign(s.m, 0);
    s.br.assign(s.m * s.m, 0);
    for (std::size_t u = 0; u < s.m; ++u) {
        for (Color c : coloring.row(u)) {
            s.red_deg[u] += c == red ? 1 : 0;
        }
    }
    for (std::size_t u = 0; u < s.m; ++u) {
        const auto ru = coloring.row(u);
        for (std::size_t w = 0; w < s.m; ++w) {
            if (w == u) {
                continue;
            }
            const auto rw = coloring.row(w);
            std::size_t count = 0;
            for (std::size_t y = 0; y < s.n; ++y) {
                count += (ru[y] == blue && rw[y] == red) ? 1 : 0;
            }
            s.br[u * s.m + w] = count;
        }
    }
    return s;
}

}  // namespace

Count total_alt_p3(const ColoringMatrix& coloring) {
    require_two_colors(coloring, "the length-3 counter");
    const auto s = left_pair_stats(coloring);
    Count total = 0;
    for (std::size_t u = 0; u < s.m; ++u) {
        for (std::size_t v = u + 1; v < s.m; ++v) {
            total = checked_add(total, checked_mul(s.RB(u, v), s.R(v)));
            total = checked_add(total, checked_mul(s.R(u), s.BR(u, v)));
            total = checked_add(total, checked_mul(s.BR(u, v), s.B(v)));
            total = checked_add(total, checked_mul(s.B(u), s.RB(u, v)));
        }
    }
    return total;
}

Count p4_through(const ColoringMatrix& coloring, std::size_t u, std::size_t v) {
    require_two_colors(coloring, "the length-4 counter");
    require_left_pair(coloring, u, v);
    const auto t = codegree_table(coloring, left_vertex(u), left_vertex(v));
    Count total = checked_mul(checked_mul(t.deg_u(red), t.codeg(blue, red)), t.deg_v(blue));
    total = checked_add(total, checked_mul(checked_mul(t.deg_u(blue), t.codeg(red, blue)), t.deg_v(red)));
    return total;
}

Count total_alt_p4(const ColoringMatrix& coloring) {
    require_two_colors(coloring, "the length-4 counter");
    const auto s = left_pair_stats(coloring);
    Count total = 0;
    for (std::size_t u = 0; u < s.m; ++u) {
        for (std::size_t v = u + 1; v < s.m; ++v) {
            total = checked_add(total, checked_mul(checked_mul(s.R(u), s.BR(u, v)), s.B(v)));
            total = checked_add(total, checked_mul(checked_mul(s.B(u), s.RB(u, v)), s.R(v)));
        }
    }
    return total;
}

Count alt5_objective(const ColoringMatrix& coloring) {
    require_two_colors(coloring, "the length-5 objective");
    if (coloring.m() < 3) {
        throw std::invalid_argument("the length-5 objective needs m >= 3");
    }
    const auto s = left_pair_stats(coloring);
    Count total = 0;
    auto term = [&](std::size_t a, std::size_t b, std::size_t sum) {
        total = checked_add(total, checked_mul(checked_mul(a, b), sum));
    };
    for (std::size_t u = 0; u < s.m; ++u) {
        for (std::size_t w = u + 1; w < s.m; ++w) {
            for (std::size_t v = w + 1; v < s.m; ++v) {
                // middle of the left-vertex order is w, u, then v
                term(s.BR(u, w), s.BR(w, v), s.R(u) + s.B(v));
                term(s.RB(u, w), s.RB(w, v), s.B(u) + s.R(v));
                term(s.RB(u, w), s.BR(u, v), s.R(w) + s.B(v));
                term(s.BR(u, w), s.RB(u, v), s.B(w) + s.R(v));
                term(s.BR(u, v), s.RB(w, v), s.R(u) + s.B(w));
                term(s.RB(u, v), s.BR(w, v), s.B(u) + s.R(w));
            }
        }
    }
    return total;
}

Count mixed_codegree_sum(const ColoringMatrix& coloring) {
    require_two_colors(coloring, "the mixed codegree sum");
    const auto s = left_pair_stats(coloring);
    Count total = 0;
    for (std::size_t u = 0; u < s.m; ++u) {
        for (std::size_t v = u + 1; v < s.m; ++v) {
            total += s.RB(u, v) + s.BR(u, v);
        }
    }
    return total;
}

// ------------------------------------------------------- general lengths

Count count_alt_walks(const ColoringMatrix& coloring, const Vertex& a, const Vertex& b, std::size_t length) {
    const detail::Host host(coloring);
    if (!host.contains(a) || !host.contains(b)) {
        throw std::out_of_range("walk endpoint out of range");
    }
    if (length == 0) {
        throw std::invalid_argument("walk length must be at least 1");
    }
    require_parity(a, b, length);
    return alt_walks_from(host, host.global(a), length)[host.global(b)];
}

Count count_alt_walks(const CompleteColoring& coloring, std::size_t a, std::size_t b, std::size_t length) {
    const detail::Host host(coloring);
    if (a >= coloring.n() || b >= coloring.n()) {
        throw std::out_of_range("walk endpoint out of range");
    }
    if (length == 0) {
        throw std::invalid_argument("walk length must be at least 1");
    }
    return alt_walks_from(host, a, length)[b];
}

PathEnumeration count_alt_paths_exact(const ColoringMatrix& coloring, const Vertex& a, const Vertex& b,
                                      std::size_t length, const EnumerationOptions& options) {
    const detail::Host host(coloring);
    if (!host.contains(a) || !host.contains(b)) {
        throw std::out_of_range("path endpoint out of range");
    }
    if (length > 0) {
        require_parity(a, b, length);
    }
    return enumerate_paths(host, host.global(a), host.global(b), length, options);
}

PathEnumeration count_alt_paths_exact(const CompleteColoring& coloring, std::size_t a, std::size_t b,
                                      std::size_t length, const EnumerationOptions& options) {
    const detail::Host host(coloring);
    if (a >= coloring.n() || b >= coloring.n()) {
        throw std::out_of_range("path endpoint out of range");
    }
    return enumerate_paths(host, a, b, length, options);
}

WalkCountTable walk_count_table(const ColoringMatrix& coloring, Side row_side, Side column_side,
                                std::size_t length, PathFlavor flavor, const EnumerationOptions& options) {
    WalkCountTable t;
    t.row_side = row_side;
    t.column_side = column_side;
    t.rows = coloring.class_size(row_side);
    t.columns = coloring.class_size(column_side);
    t.length = length;
    t.flavor = flavor;
    t.counts.assign(t.rows * t.columns, 0);
    if (length == 0) {
        throw std::invalid_argument("length must be at least 1");
    }
    require_parity({row_side, 0}, {column_side, 0}, length);
    const detail::Host host(coloring);
    EnumerationOptions quiet = options;
    quiet.collect = false;
    for (std::size_t i = 0; i < t.rows; ++i) {
        const Vertex a{row_side, i};
        if (flavor == PathFlavor::walk) {
            const auto from = alt_walks_from(host, host.global(a), length);
            for (std::size_t j = 0; j < t.columns; ++j) {
                t.counts[i * t.columns + j] = from[host.global({column_side, j})];
            }
            continue;
        }
        for (std::size_t j = 0; j < t.columns; ++j) {
            const Vertex b{column_side, j};
            if (a == b) {
                continue;
            }
            t.counts[i * t.columns + j] = enumerate_paths(host, host.global(a), host.global(b), length, quiet).count;
        }
    }
    return t;
}

WalkCountTable walk_count_table(const CompleteColoring& coloring, std::size_t length, PathFlavor flavor,
                                const EnumerationOptions& options) {
    WalkCountTable t;
    t.row_side = Side::left;
    t.column_side = Side::left;
    t.rows = t.columns = coloring.n();
    t.length = length;
    t.flavor = flavor;
    t.counts.assign(t.rows * t.columns, 0);
    if (length == 0) {
        throw std::invalid_argument("length must be at least 1");
    }
    const detail::Host host(coloring);
    EnumerationOptions quiet = options;
    quiet.collect = false;
    for (std::size_t i = 0; i < t.rows; ++i) {
        if (flavor == PathFlavor::walk) {
            const auto from = alt_walks_from(host, i, length);
            std::copy(from.begin(), from.end(), t.counts.begin() + static_cast<std::ptrdiff_t>(i * t.columns));
            continue;
        }
        for (std::size_t j = 0; j < t.columns; ++j) {
            if (i != j) {
                t.counts[i * t.columns + j] = enumerate_paths(host, i, j, length, quiet).count;
            }
        }
    }
    return t;
}

// ------------------------------------------------------ digraph reduction

bool OrientedBipartiteDigraph::has_arc(const Vertex& from, const Vertex& to) const {
    if (from.side == to.side) {
        return false;
    }
    if (from.side == Side::right) {
        return toward_left[to.index * n + from.index] != 0;
    }
    return toward_left[from.index * n + to.index] == 0;
}

OrientedBipartiteDigraph to_digraph(const ColoringMatrix& coloring) {
    require_two_colors(coloring, "the digraph reduction");
    OrientedBipartiteDigraph d;
    d.m = coloring.m();
    d.n = coloring.n();
    d.toward_left.resize(d.m * d.n);
    for (std::size_t i = 0; i < d.toward_left.size(); ++i) {
        d.toward_left[i] = coloring.table()[i] == red ? 1 : 0;
    }
    return d;
}

Count count_directed_walks(const OrientedBipartiteDigraph& digraph, const Vertex& a, const Vertex& b,
                           std::size_t length) {
    const std::size_t m = digraph.m;
    const std::size_t n = digraph.n;
    auto id = [m](const Vertex& v) { return v.side == Side::left ? v.index : m + v.index; };
    std::vector<Count> cur(m + n, 0);
    std::vector<Count> next(m + n, 0);
    cur[id(a)] = 1;
    for (std::size_t step = 0; step < length; ++step) {
        std::fill(next.begin(), next.end(), Count{0});
        for (std::size_t u = 0; u < m; ++u) {
            for (std::size_t v = 0; v < n; ++v) {
                if (digraph.toward_left[u * n + v]) {
                    next[u] = checked_add(next[u], cur[m + v]);
                } else {
                    next[m + v] = checked_add(next[m + v], cur[u]);
                }
            }
        }
        std::swap(cur, next);
    }
    return cur[id(b)];
}

}  // namespace altpaths
