#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "altpaths/core.hpp"

namespace altpaths {

/// Malformed input. line and column are 1-based; column 0 means "whole line".
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message);

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

using AnyColoring = std::variant<ColoringMatrix, CompleteColoring>;

// Coloring files:
//   bipartite m n r        then m rows of n color ids
//   complete n r           then n-1 rows of the upper triangle (row i has n-1-i ids)
AnyColoring read_coloring(std::istream& in);
AnyColoring read_coloring_file(const std::string& path);
ColoringMatrix read_bipartite(std::istream& in);

void write_coloring(std::ostream& out, const ColoringMatrix& coloring);
void write_coloring(std::ostream& out, const CompleteColoring& coloring);
void write_coloring(std::ostream& out, const AnyColoring& coloring);

/// Codes: one word per line, letters separated by spaces. Without an explicit
/// alphabet size, r is the largest letter seen (at least 2).
Code read_code(std::istream& in, std::optional<unsigned> r = std::nullopt);
void write_code(std::ostream& out, const Code& code);

/// A single JSON object on one line: {"flavor":..,"vertices":[..],"colors":[..]}.
/// Bipartite vertices print as "M3"/"N0"; complete-graph vertices as integers.
std::string path_json_line(const PathRecord& path, bool bipartite);

}  // namespace altpaths
