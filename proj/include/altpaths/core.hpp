#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "altpaths/count.hpp"

namespace altpaths {

/// Color ids are 1-based. Zero never appears in a valid table; internally it
/// marks a missing edge (the diagonal of a complete coloring).
using Color = std::uint16_t;

inline constexpr Color red = 1;
inline constexpr Color blue = 2;

/// The other color of a two-coloring.
constexpr Color opposite(Color c) { return c == red ? blue : red; }

/// Class of a vertex in K_{m,n}. `left` is the class of size m, `right` the
/// class of size n. Complete graphs have a single class and use `left`.
enum class Side : std::uint8_t { left, right };

constexpr Side other(Side s) { return s == Side::left ? Side::right : Side::left; }

struct Vertex {
    Side side = Side::left;
    std::size_t index = 0;

    friend bool operator==(const Vertex&, const Vertex&) = default;
};

inline Vertex left_vertex(std::size_t i) { return {Side::left, i}; }
inline Vertex right_vertex(std::size_t i) { return {Side::right, i}; }

std::string to_string(const Vertex& v);

/// An r-edge-coloring of K_{m,n}, stored row-major as (left vertex, right vertex).
///
/// The constructor only checks the table shape; entry ranges are checked by
/// validate() so enumeration loops can build matrices without a second pass.
class ColoringMatrix {
public:
    ColoringMatrix(std::size_t m, std::size_t n, unsigned r, std::vector<Color> colors);

    static ColoringMatrix constant(std::size_t m, std::size_t n, unsigned r, Color c);

    std::size_t m() const { return m_; }
    std::size_t n() const { return n_; }
    unsigned r() const { return r_; }

    std::size_t class_size(Side s) const { return s == Side::left ? m_ : n_; }

    Color operator()(std::size_t u, std::size_t v) const { return colors_[u * n_ + v]; }

    /// Color of the edge between two vertices of opposite classes.
    Color color(const Vertex& a, const Vertex& b) const {
        return a.side == Side::left ? (*this)(a.index, b.index) : (*this)(b.index, a.index);
    }

    std::span<const Color> row(std::size_t u) const { return {colors_.data() + u * n_, n_}; }
    const std::vector<Color>& table() const { return colors_; }

    friend bool operator==(const ColoringMatrix&, const ColoringMatrix&) = default;

private:
    std::size_t m_;
    std::size_t n_;
    unsigned r_;
    std::vector<Color> colors_;
};

/// An r-edge-coloring of K_n, kept as a full symmetric n x n table with a
/// zero diagonal.
class CompleteColoring {
public:
    CompleteColoring(std::size_t n, unsigned r, std::vector<Color> full_table);

    /// Builds from the upper triangle listed row by row: (0,1..n-1), (1,2..n-1), ...
    static CompleteColoring from_upper(std::size_t n, unsigned r, std::span<const Color> upper);

    std::size_t n() const { return n_; }
    unsigned r() const { return r_; }

    Color operator()(std::size_t u, std::size_t v) const { return colors_[u * n_ + v]; }
    std::span<const Color> row(std::size_t u) const { return {colors_.data() + u * n_, n_}; }
    const std::vector<Color>& table() const { return colors_; }

    friend bool operator==(const CompleteColoring&, const CompleteColoring&) = default;

private:
    std::size_t n_;
    unsigned r_;
    std::vector<Color> colors_;
};

using Word = std::vector<Color>;

/// A code over the alphabet [r]: the dual view of a ColoringMatrix where word
/// v lists the colors seen from right vertex v.
struct Code {
    unsigned r = 2;
    std::vector<Word> words;

    std::size_t length() const { return words.empty() ? 0 : words.front().size(); }
    friend bool operator==(const Code&, const Code&) = default;
};

ColoringMatrix from_code(const Code& code);
Code to_code(const ColoringMatrix& coloring);

std::size_t hamming(std::span<const Color> x, std::span<const Color> y);

/// Column v of the coloring, i.e. the codeword of right vertex v.
Word right_word(const ColoringMatrix& coloring, std::size_t v);

/// Per-vertex color degrees. Bipartite tables index left vertices first.
class ColorDegrees {
public:
    explicit ColorDegrees(const ColoringMatrix& coloring);
    explicit ColorDegrees(const CompleteColoring& coloring);

    std::size_t operator()(const Vertex& w, Color i) const {
        return counts_[offset(w) * r_ + (i - 1)];
    }
    unsigned r() const { return r_; }

private:
    std::size_t offset(const Vertex& w) const {
        return w.side == Side::left ? w.index : left_count_ + w.index;
    }

    unsigned r_;
    std::size_t left_count_;
    std::vector<std::size_t> counts_;
};

/// Codegree statistics of a same-class pair (u, v): counts[x][y] is the number
/// of common neighbours w with c(u,w) = x and c(v,w) = y.
struct CodegreeTable {
    Side side = Side::left;
    std::size_t u = 0;
    std::size_t v = 0;
    unsigned r = 2;
    /// Number of common neighbours (opposite class size, or n - 2 for K_n).
    std::size_t common = 0;
    std::vector<std::size_t> counts;
    std::shared_ptr<const ColorDegrees> degrees;

    std::size_t codeg(Color x, Color y) const { return counts[(x - 1) * r + (y - 1)]; }
    std::size_t deg_u(Color i) const { return (*degrees)({side, u}, i); }
    std::size_t deg_v(Color i) const { return (*degrees)({side, v}, i); }
    /// Common neighbours seeing different colors: c(u,v) = x_RB + x_BR for two colors.
    std::size_t mixed() const;
};

CodegreeTable codegree_table(const ColoringMatrix& coloring, const Vertex& u, const Vertex& v);
CodegreeTable codegree_table(const ColoringMatrix& coloring, const Vertex& u, const Vertex& v,
                             std::shared_ptr<const ColorDegrees> degrees);
CodegreeTable codegree_table(const CompleteColoring& coloring, std::size_t u, std::size_t v);
CodegreeTable codegree_table(const CompleteColoring& coloring, std::size_t u, std::size_t v,
                             std::shared_ptr<const ColorDegrees> degrees);

enum class PathFlavor : std::uint8_t { walk, path };

std::string to_string(PathFlavor flavor);

/// One alternating path (or walk) with the colors of its edges.
struct PathRecord {
    std::vector<Vertex> vertices;
    std::vector<Color> edge_colors;
    PathFlavor flavor = PathFlavor::path;

    std::size_t length() const { return edge_colors.size(); }
    const Vertex& front() const { return vertices.front(); }
    const Vertex& back() const { return vertices.back(); }
    friend bool operator==(const PathRecord&, const PathRecord&) = default;
};

// Each validator reports violations as readable strings; an empty list means valid.
std::vector<std::string> validate(const ColoringMatrix& coloring);
std::vector<std::string> validate(const CompleteColoring& coloring);
std::vector<std::string> validate(const Code& code);
std::vector<std::string> validate_path(const ColoringMatrix& coloring, const PathRecord& path);
std::vector<std::string> validate_path(const CompleteColoring& coloring, const PathRecord& path);

}  // namespace altpaths
