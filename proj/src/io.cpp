#include "altpaths/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <vector>

#include <fmt/format.h>
#include <json.hpp>

namespace altpaths {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(fmt::format("line {}, column {}: {}", line, column, message)),
      line_(line), column_(column) {}

namespace {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        if (i == line.size()) {
            break;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
            ++i;
        }
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    // Next line, or nullopt at end of input.
    std::optional<std::string> next() {
        std::string line;
        if (!std::getline(in_, line)) {
            return std::nullopt;
        }
        ++number_;
        return line;
    }

    std::size_t number() const { return number_; }

    // Only blank lines may follow the last expected row.
    void expect_end() {
        while (auto line = next()) {
            if (!tokenize(*line).empty()) {
                throw ParseError(number_, 1, "unexpected content after the last row");
            }
        }
    }

private:
    std::istream& in_;
    std::size_t number_ = 0;
};

std::size_t parse_size(const Token& t, std::size_t line, const char* what) {
    std::size_t value = 0;
    const auto* first = t.text.data();
    const auto* last = first + t.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw ParseError(line, t.column, fmt::format("expected {} but found '{}'", what, t.text));
    }
    return value;
}

Color parse_color(const Token& t, std::size_t line, unsigned r) {
    const std::size_t c = parse_size(t, line, "a color id");
    if (c < 1 || c > r) {
        throw ParseError(line, t.column, fmt::format("color {} outside [1,{}]", c, r));
    }
    return static_cast<Color>(c);
}

ColoringMatrix read_bipartite_body(LineReader& reader, const std::vector<Token>& header,
                                   std::size_t header_line) {
    if (header.size() != 4) {
        throw ParseError(header_line, 0, "bipartite header must be 'bipartite m n r'");
    }
    const std::size_t m = parse_size(header[1], header_line, "m");
    const std::size_t n = parse_size(header[2], header_line, "n");
    const std::size_t r = parse_size(header[3], header_line, "r");
    if (m < 1 || n < 1) {
        throw ParseError(header_line, header[m < 1 ? 1 : 2].column, "class sizes must be at least 1");
    }
    if (r < 2 || r > 0xFFFF) {
        throw ParseError(header_line, header[3].column, "color count must be in [2, 65535]");
    }
    std::vector<Color> table;
    table.reserve(m * n);
    for (std::size_t u = 0; u < m; ++u) {
        auto line = reader.next();
        if (!line) {
            throw ParseError(reader.number() + 1, 0, fmt::format("missing row {} of {}", u + 1, m));
        }
        const auto tokens = tokenize(*line);
        if (tokens.size() != n) {
            const std::size_t col = tokens.size() > n ? tokens[n].column : 0;
            throw ParseError(reader.number(), col,
                             fmt::format("row {} has {} entries, expected {}", u + 1, tokens.size(), n));
        }
        for (const auto& t : tokens) {
            table.push_back(parse_color(t, reader.number(), static_cast<unsigned>(r)));
        }
    }
    reader.expect_end();
    return ColoringMatrix(m, n, static_cast<unsigned>(r), std::move(table));
}

CompleteColoring read_complete_body(LineReader& reader, const std::vector<Token>& header,
                                    std::size_t header_line) {
    if (header.size() != 3) {
        throw ParseError(header_line, 0, "complete header must be 'complete n r'");
    }
    const std::size_t n = parse_size(header[1], header_line, "n");
    const std::size_t r = parse_size(header[2], header_line, "r");
    if (n < 2) {
        throw ParseError(header_line, header[1].column, "complete graph needs at least 2 vertices");
    }
    if (r < 2 || r > 0xFFFF) {
        throw ParseError(header_line, header[2].column, "color count must be in [2, 65535]");
    }
    std::vector<Color> upper;
    upper.reserve(n * (n - 1) / 2);
    for (std::size_t u = 0; u + 1 < n; ++u) {
        auto line = reader.next();
        if (!line) {
            throw ParseError(reader.number() + 1, 0, fmt::format("missing row {} of {}", u + 1, n - 1));
        }
        const auto tokens = tokenize(*line);
        const std::size_t expected = n - 1 - u;
        if (tokens.size() != expected) {
            const std::size_t col = tokens.size() > expected ? tokens[expected].column : 0;
            throw ParseError(reader.number(), col,
                             fmt::format("row {} has {} entries, expected {}", u + 1, tokens.size(), expected));
        }
        for (const auto& t : tokens) {
            upper.push_back(parse_color(t, reader.number(), static_cast<unsigned>(r)));
        }
    }
    reader.expect_end();
    return CompleteColoring::from_upper(n, static_cast<unsigned>(r), upper);
}

}  // namespace

AnyColoring read_coloring(std::istream& in) {
    LineReader reader(in);
    std::optional<std::string> header_line;
    while ((header_line = reader.next())) {
        if (!tokenize(*header_line).empty()) {
            break;
        }
    }
    if (!header_line) {
        throw ParseError(reader.number() + 1, 0, "empty input, expected a header line");
    }
    const auto header = tokenize(*header_line);
    if (header[0].text == "bipartite") {
        return read_bipartite_body(reader, header, reader.number());
    }
    if (header[0].text == "complete") {
        return read_complete_body(reader, header, reader.number());
    }
    throw ParseError(reader.number(), header[0].column,
                     fmt::format("unknown coloring kind '{}', expected 'bipartite' or 'complete'", header[0].text));
}

AnyColoring read_coloring_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(0, 0, fmt::format("cannot open '{}'", path));
    }
    return read_coloring(in);
}

ColoringMatrix read_bipartite(std::istream& in) {
    auto any = read_coloring(in);
    if (auto* c = std::get_if<ColoringMatrix>(&any)) {
        return std::move(*c);
    }
    throw ParseError(1, 1, "expected a bipartite coloring");
}

void write_coloring(std::ostream& out, const ColoringMatrix& coloring) {
    out << "bipartite " << coloring.m() << ' ' << coloring.n() << ' ' << coloring.r() << '\n';
    for (std::size_t u = 0; u < coloring.m(); ++u) {
        for (std::size_t v = 0; v < coloring.n(); ++v) {
            out << (v ? " " : "") << coloring(u, v);
        }
        out << '\n';
    }
}

void write_coloring(std::ostream& out, const CompleteColoring& coloring) {
    out << "complete " << coloring.n() << ' ' << coloring.r() << '\n';
    for (std::size_t u = 0; u + 1 < coloring.n(); ++u) {
        for (std::size_t v = u + 1; v < coloring.n(); ++v) {
            out << (v > u + 1 ? " " : "") << coloring(u, v);
        }
        out << '\n';
    }
}

void write_coloring(std::ostream& out, const AnyColoring& coloring) {
    std::visit([&](const auto& c) { write_coloring(out, c); }, coloring);
}

Code read_code(std::istream& in, std::optional<unsigned> r) {
    LineReader reader(in);
    Code code;
    unsigned max_letter = 0;
    std::size_t length = 0;
    while (auto line = reader.next()) {
        const auto tokens = tokenize(*line);
        if (tokens.empty()) {
            continue;
        }
        if (!code.words.empty() && tokens.size() != length) {
            throw ParseError(reader.number(), 0,
                             fmt::format("word has {} letters, expected {}", tokens.size(), length));
        }
        length = tokens.size();
        Word w;
        w.reserve(tokens.size());
        for (const auto& t : tokens) {
            const std::size_t letter = parse_size(t, reader.number(), "a letter");
            if (letter < 1 || (r && letter > *r) || letter > 0xFFFF) {
                throw ParseError(reader.number(), t.column,
                                 fmt::format("letter {} outside [1,{}]", letter, r ? *r : 0xFFFFu));
            }
            max_letter = std::max(max_letter, static_cast<unsigned>(letter));
            w.push_back(static_cast<Color>(letter));
        }
        code.words.push_back(std::move(w));
    }
    if (code.words.empty()) {
        throw ParseError(reader.number() + 1, 0, "code has no words");
    }
    code.r = r ? *r : std::max(2u, max_letter);
    return code;
}

void write_code(std::ostream& out, const Code& code) {
    for (const Word& w : code.words) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            out << (i ? " " : "") << w[i];
        }
        out << '\n';
    }
}

std::string path_json_line(const PathRecord& path, bool bipartite) {
    nlohmann::json j;
    j["flavor"] = to_string(path.flavor);
    auto vertices = nlohmann::json::array();
    for (const Vertex& v : path.vertices) {
        if (bipartite) {
            vertices.push_back(to_string(v));
        } else {
            vertices.push_back(v.index);
        }
    }
    j["vertices"] = std::move(vertices);
    j["colors"] = path.edge_colors;
    return j.dump();
}

}  // namespace altpaths
