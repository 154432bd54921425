#include "altpaths/search.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

#include <boost/dynamic_bitset.hpp>
#include <fmt/format.h>

#include "host.hpp"

namespace altpaths {

// ================================================================ packing

namespace {

using Bits = boost::dynamic_bitset<>;

class Packer {
public:
    Packer(const detail::Host& host, std::vector<PathRecord> paths, const PackingOptions& options)
        : paths_(std::move(paths)), options_(options) {
        const std::size_t size = host.size();
        class_of_.resize(size);
        for (std::size_t g = 0; g < size; ++g) {
            class_of_[g] = host.vertex(g).side == Side::left ? 0 : 1;
        }
        for (const auto& p : paths_) {
            Bits set(size);
            for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i) {
                set.set(host.global(p.vertices[i]));
            }
            sets_.push_back(std::move(set));
        }
        if (!paths_.empty()) {
            for (std::size_t i = 1; i + 1 < paths_[0].vertices.size(); ++i) {
                ++need_[class_of_[host.global(paths_[0].vertices[i])]];
            }
        }
    }

    PackingResult run() {
        std::vector<std::uint32_t> candidates(paths_.size());
        std::iota(candidates.begin(), candidates.end(), 0);
        // a path without internal vertices (a single edge) is always packable
        std::vector<std::uint32_t> forced;
        std::erase_if(candidates, [&](std::uint32_t p) {
            if (sets_[p].none()) {
                forced.push_back(p);
                return true;
            }
            return false;
        });
        chosen_ = forced;
        greedy(candidates);
        if (!done()) {
            branch(candidates);
        }
        PackingResult out;
        out.size = best_.size();
        out.nodes = nodes_;
        for (std::uint32_t p : best_) {
            out.paths.push_back(paths_[p]);
        }
        return out;
    }

private:
    bool done() const { return options_.stop_at && best_.size() >= *options_.stop_at; }

    void greedy(const std::vector<std::uint32_t>& candidates) {
        Bits used(class_of_.size());
        best_ = chosen_;
        for (std::uint32_t p : candidates) {
            if (!sets_[p].intersects(used)) {
                used |= sets_[p];
                best_.push_back(p);
            }
        }
    }

    std::size_t capacity_bound(const std::vector<std::uint32_t>& candidates) const {
        Bits covered(class_of_.size());
        for (std::uint32_t p : candidates) {
            covered |= sets_[p];
        }
        std::size_t free[2] = {0, 0};
        for (auto g = covered.find_first(); g != Bits::npos; g = covered.find_next(g)) {
            ++free[class_of_[g]];
        }
        std::size_t bound = candidates.size();
        for (int c = 0; c < 2; ++c) {
            if (need_[c] > 0) {
                bound = std::min(bound, free[c] / need_[c]);
            }
        }
        return bound;
    }

    void branch(const std::vector<std::uint32_t>& candidates) {
        if (++nodes_ > options_.budget) {
            throw BudgetExceeded(fmt::format("path packing exceeded its budget of {} nodes", options_.budget));
        }
        if (done() || chosen_.size() + candidates.size() <= best_.size()) {
            return;
        }
        if (candidates.empty()) {
            best_ = chosen_;
            return;
        }
        if (chosen_.size() + capacity_bound(candidates) <= best_.size()) {
            return;
        }
        // branch on the internal vertex with the fewest candidate paths
        std::vector<std::size_t> frequency(class_of_.size(), 0);
        for (std::uint32_t p : candidates) {
            for (auto g = sets_[p].find_first(); g != Bits::npos; g = sets_[p].find_next(g)) {
                ++frequency[g];
            }
        }
        std::size_t pivot = 0;
        std::size_t lowest = std::numeric_limits<std::size_t>::max();
        for (std::size_t g = 0; g < frequency.size(); ++g) {
            if (frequency[g] > 0 && frequency[g] < lowest) {
                lowest = frequency[g];
                pivot = g;
            }
        }
        std::vector<std::uint32_t> next;
        for (std::uint32_t p : candidates) {
            if (!sets_[p].test(pivot)) {
                continue;
            }
            next.clear();
            for (std::uint32_t q : candidates) {
                if (!sets_[q].intersects(sets_[p])) {
                    next.push_back(q);
                }
            }
            chosen_.push_back(p);
            branch(next);
            chosen_.pop_back();
            if (done()) {
                return;
            }
        }
        next.clear();
        for (std::uint32_t q : candidates) {
            if (!sets_[q].test(pivot)) {
                next.push_back(q);
            }
        }
        branch(next);
    }

    std::vector<PathRecord> paths_;
    PackingOptions options_;
    std::vector<std::uint8_t> class_of_;
    std::vector<Bits> sets_;
    std::size_t need_[2] = {0, 0};
    std::vector<std::uint32_t> chosen_;
    std::vector<std::uint32_t> best_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

PackingResult max_disjoint_paths(const ColoringMatrix& coloring, const Vertex& u, const Vertex& v,
                                 std::size_t length, const PackingOptions& options) {
    auto paths = count_alt_paths_exact(coloring, u, v, length, {options.budget, true}).paths;
    return Packer(detail::Host(coloring), std::move(paths), options).run();
}

PackingResult max_disjoint_paths(const CompleteColoring& coloring, std::size_t u, std::size_t v,
                                 std::size_t length, const PackingOptions& options) {
    auto paths = count_alt_paths_exact(coloring, u, v, length, {options.budget, true}).paths;
    return Packer(detail::Host(coloring), std::move(paths), options).run();
}

// ===================================================== extremal searches

std::vector<std::pair<Vertex, Vertex>> relevant_pairs(std::size_t m, std::size_t n, std::size_t length) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    if (length % 2 == 0) {
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = a + 1; b < n; ++b) {
                pairs.emplace_back(right_vertex(a), right_vertex(b));
            }
        }
    } else {
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                pairs.emplace_back(left_vertex(a), right_vertex(b));
            }
        }
    }
    return pairs;
}

namespace {

void require_pairs(std::size_t m, std::size_t n, std::size_t length) {
    if (length < 1) {
        throw std::invalid_argument("length must be at least 1");
    }
    if (m < 1 || n < 1) {
        throw std::invalid_argument("both classes must be nonempty");
    }
    if (length % 2 == 0 && n < 2) {
        throw std::invalid_argument("even lengths need two right vertices (n >= 2)");
    }
}

// Min over pairs. With an incumbent, returns nothing as soon as some pair is
// at or below it, and caps the per-pair work at the running minimum.
std::optional<std::size_t> kappa_above(const ColoringMatrix& coloring, std::size_t length,
                                       std::optional<std::size_t> incumbent, std::uint64_t budget) {
    std::size_t low = std::numeric_limits<std::size_t>::max();
    for (const auto& [a, b] : relevant_pairs(coloring.m(), coloring.n(), length)) {
        PackingOptions options{budget, std::nullopt};
        if (incumbent) {
            options.stop_at = low;
        }
        low = std::min(low, max_disjoint_paths(coloring, a, b, length, options).size);
        if (incumbent && low <= *incumbent) {
            return std::nullopt;
        }
    }
    return low;
}

Count lambda_pair(const ColoringMatrix& coloring, const Vertex& a, const Vertex& b, std::size_t length,
                  PathFlavor flavor, std::uint64_t budget) {
    if (flavor == PathFlavor::walk) {
        return count_alt_walks(coloring, a, b, length);
    }
    return count_alt_paths_exact(coloring, a, b, length, {budget, false}).count;
}

std::optional<Count> lambda_above(const ColoringMatrix& coloring, std::size_t length, PathFlavor flavor,
                                  std::optional<Count> incumbent, std::uint64_t budget) {
    Count low = std::numeric_limits<Count>::max();
    for (const auto& [a, b] : relevant_pairs(coloring.m(), coloring.n(), length)) {
        low = std::min(low, lambda_pair(coloring, a, b, length, flavor, budget));
        if (incumbent && low <= *incumbent) {
            return std::nullopt;
        }
    }
    return low;
}

std::optional<std::uint64_t> checked_power(std::uint64_t base, std::size_t exponent) {
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < exponent; ++i) {
        if (__builtin_mul_overflow(out, base, &out)) {
            return std::nullopt;
        }
    }
    return out;
}

std::optional<std::uint64_t> multiset_count(std::uint64_t kinds, std::size_t size) {
    // C(kinds + size - 1, size), built so every intermediate is an integer
    Count out = 1;
    for (std::size_t i = 1; i <= size; ++i) {
        out = out * (kinds + i - 1) / i;
        if (out > std::numeric_limits<std::uint64_t>::max()) {
            return std::nullopt;
        }
    }
    return static_cast<std::uint64_t>(out);
}

// Enumerates r-colorings of K_{m,n}. Raw mode walks all r^(mn) tables in
// lexicographic order. Reduced mode walks nondecreasing sequences of column
// words (one per right vertex) and keeps those that are lexicographically
// least under every permutation of the left class combined with every
// permutation of the colors.
class ColoringSpace {
public:
    ColoringSpace(std::size_t m, std::size_t n, unsigned r, bool reduced)
        : m_(m), n_(n), r_(r), reduced_(reduced) {
        if (!reduced_) {
            return;
        }
        words_ = *checked_power(r, m);
        std::vector<std::size_t> rows(m);
        std::iota(rows.begin(), rows.end(), 0);
        std::vector<Color> colors(r);
        std::iota(colors.begin(), colors.end(), Color{0});
        do {
            do {
                std::vector<std::uint32_t> map(words_);
                for (std::uint64_t w = 0; w < words_; ++w) {
                    const auto digits = word_digits(w);
                    std::uint64_t image = 0;
                    // row u of the image carries the permuted color of row rows[u]
                    for (std::size_t u = m; u-- > 0;) {
                        image = image * r + colors[digits[rows[u]]];
                    }
                    map[w] = static_cast<std::uint32_t>(image);
                }
                group_.push_back(std::move(map));
            } while (std::next_permutation(colors.begin(), colors.end()));
        } while (std::next_permutation(rows.begin(), rows.end()));
    }

    /// Calls visit(index, table) for every coloring whose index is congruent
    /// to `stripe` modulo `stride`.
    template <typename Visit>
    void scan(std::size_t stripe, std::size_t stride, Visit&& visit) const {
        if (reduced_) {
            scan_reduced(stripe, stride, visit);
        } else {
            scan_raw(stripe, stride, visit);
        }
    }

private:
    std::vector<Color> word_digits(std::uint64_t w) const {
        std::vector<Color> digits(m_);
        for (std::size_t u = 0; u < m_; ++u) {
            digits[u] = static_cast<Color>(w % r_);
            w /= r_;
        }
        return digits;
    }

    bool canonical(const std::vector<std::uint32_t>& columns, std::vector<std::uint32_t>& scratch) const {
        for (const auto& map : group_) {
            scratch.resize(columns.size());
            for (std::size_t i = 0; i < columns.size(); ++i) {
                scratch[i] = map[columns[i]];
            }
            std::sort(scratch.begin(), scratch.end());
            if (std::lexicographical_compare(scratch.begin(), scratch.end(), columns.begin(), columns.end())) {
                return false;
            }
        }
        return true;
    }

    template <typename Visit>
    void scan_raw(std::size_t stripe, std::size_t stride, Visit& visit) const {
        const std::uint64_t total = *checked_power(r_, m_ * n_);
        std::vector<Color> table(m_ * n_);
        for (std::uint64_t index = stripe; index < total; index += stride) {
            std::uint64_t rest = index;
            for (std::size_t cell = m_ * n_; cell-- > 0;) {
                table[cell] = static_cast<Color>(rest % r_ + 1);
                rest /= r_;
            }
            visit(index, table);
        }
    }

    template <typename Visit>
    void scan_reduced(std::size_t stripe, std::size_t stride, Visit& visit) const {
        std::vector<std::uint32_t> columns(n_, 0);
        std::vector<std::uint32_t> scratch;
        std::vector<Color> table(m_ * n_);
        std::vector<std::vector<Color>> digits(words_);
        for (std::uint64_t w = 0; w < words_; ++w) {
            digits[w] = word_digits(w);
        }
        for (std::uint64_t index = 0;; ++index) {
            if (index % stride == stripe && canonical(columns, scratch)) {
                for (std::size_t v = 0; v < n_; ++v) {
                    for (std::size_t u = 0; u < m_; ++u) {
                        table[u * n_ + v] = static_cast<Color>(digits[columns[v]][u] + 1);
                    }
                }
                visit(index, table);
            }
            // next nondecreasing sequence
            std::size_t pos = n_;
            while (pos > 0 && columns[pos - 1] + 1 == words_) {
                --pos;
            }
            if (pos == 0) {
                return;
            }
            const std::uint32_t value = columns[pos - 1] + 1;
            std::fill(columns.begin() + static_cast<std::ptrdiff_t>(pos - 1), columns.end(), value);
        }
    }

    std::size_t m_;
    std::size_t n_;
    unsigned r_;
    bool reduced_;
    std::uint64_t words_ = 0;
    std::vector<std::vector<std::uint32_t>> group_;
};

bool use_symmetry(Symmetry s, std::size_t m, std::size_t n) {
    switch (s) {
        case Symmetry::on:
            return true;
        case Symmetry::off:
            return false;
        case Symmetry::automatic:
            break;
    }
    return m * n > symmetry_threshold;
}

// Runs `evaluate(coloring, incumbent)` over the space, striped across
// threads. Each stripe keeps its first strict maximum; the reduction picks
// the largest value and, among ties, the smallest enumeration index, so the
// result does not depend on the thread count.
template <typename Evaluate>
ExtremalResult extremal_scan(std::size_t m, std::size_t n, unsigned r, const SearchOptions& options,
                             Evaluate evaluate) {
    const bool reduced = use_symmetry(options.symmetry, m, n);
    const auto space_size = search_space_size(m, n, r, reduced);
    if (!space_size || *space_size > options.max_colorings) {
        throw BudgetExceeded(fmt::format("exhaustive search over K_{{{},{}}} with r={} exceeds the cap of {} colorings",
                                         m, n, r, options.max_colorings));
    }
    const ColoringSpace space(m, n, r, reduced);

    struct Stripe {
        bool found = false;
        Count value = 0;
        std::uint64_t index = 0;
        std::optional<ColoringMatrix> witness;
        std::uint64_t scanned = 0;
        std::exception_ptr error;
    };
    const std::size_t stride = std::max(1u, options.threads);
    std::vector<Stripe> stripes(stride);
    auto work = [&](std::size_t t) {
        Stripe& s = stripes[t];
        try {
            space.scan(t, stride, [&](std::uint64_t index, const std::vector<Color>& table) {
                ++s.scanned;
                ColoringMatrix coloring(m, n, r, table);
                std::optional<Count> incumbent;
                if (s.found && options.prune) {
                    incumbent = s.value;
                }
                const auto value = evaluate(coloring, incumbent);
                if (value && (!s.found || *value > s.value)) {
                    s.found = true;
                    s.value = *value;
                    s.index = index;
                    s.witness = std::move(coloring);
                }
            });
        } catch (...) {
            s.error = std::current_exception();
        }
    };
    if (stride == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < stride; ++t) {
            pool.emplace_back(work, t);
        }
        for (auto& th : pool) {
            th.join();
        }
    }

    ExtremalResult out;
    out.symmetry_reduced = reduced;
    const Stripe* best = nullptr;
    for (const auto& s : stripes) {
        if (s.error) {
            std::rethrow_exception(s.error);
        }
        out.instances_scanned += s.scanned;
        if (s.found && (!best || s.value > best->value || (s.value == best->value && s.index < best->index))) {
            best = &s;
        }
    }
    if (best) {
        if (best->value > std::numeric_limits<std::size_t>::max()) {
            throw std::overflow_error("extremal value does not fit in size_t");
        }
        out.value = static_cast<std::size_t>(best->value);
        out.witness = best->witness;
    }
    return out;
}

}  // namespace

std::size_t kappa_of(const ColoringMatrix& coloring, std::size_t length, std::uint64_t budget) {
    require_pairs(coloring.m(), coloring.n(), length);
    return *kappa_above(coloring, length, std::nullopt, budget);
}

Count lambda_of(const ColoringMatrix& coloring, std::size_t length, PathFlavor flavor, std::uint64_t budget) {
    require_pairs(coloring.m(), coloring.n(), length);
    if (coloring.r() != 2) {
        throw std::invalid_argument("lambda is defined for two-colorings");
    }
    return *lambda_above(coloring, length, flavor, std::nullopt, budget);
}

std::optional<std::uint64_t> search_space_size(std::size_t m, std::size_t n, unsigned r, bool reduced) {
    if (!reduced) {
        return checked_power(r, m * n);
    }
    const auto words = checked_power(r, m);
    if (!words || *words > std::numeric_limits<std::uint32_t>::max()) {
        return std::nullopt;
    }
    return multiset_count(*words, n);
}

ExtremalResult exact_kappa(std::size_t m, std::size_t n, unsigned r, std::size_t length,
                           const SearchOptions& options) {
    require_pairs(m, n, length);
    if (r < 2) {
        throw std::invalid_argument("kappa needs r >= 2");
    }
    return extremal_scan(m, n, r, options, [&](const ColoringMatrix& c, std::optional<Count> incumbent) {
        std::optional<std::size_t> inc;
        if (incumbent) {
            inc = static_cast<std::size_t>(*incumbent);
        }
        const auto value = kappa_above(c, length, inc, options.budget);
        return value ? std::optional<Count>(*value) : std::nullopt;
    });
}

ExtremalResult exact_lambda(std::size_t m, std::size_t n, std::size_t length, PathFlavor flavor,
                            const SearchOptions& options) {
    require_pairs(m, n, length);
    return extremal_scan(m, n, 2, options, [&](const ColoringMatrix& c, std::optional<Count> incumbent) {
        return lambda_above(c, length, flavor, incumbent, options.budget);
    });
}

// ------------------------------------------------------------ codes

namespace {

class CliqueSearch {
public:
    CliqueSearch(std::vector<Bits> adjacency, std::uint64_t budget)
        : adjacency_(std::move(adjacency)), budget_(budget) {}

    std::vector<std::size_t> run(const std::vector<std::size_t>& candidates) {
        expand(candidates);
        return best_;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    // Candidates are extended in increasing order only, so each clique is
    // generated once.
    void expand(const std::vector<std::size_t>& candidates) {
        if (++nodes_ > budget_) {
            throw BudgetExceeded(fmt::format("code search exceeded its budget of {} nodes", budget_));
        }
        if (current_.size() > best_.size()) {
            best_ = current_;
        }
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (current_.size() + (candidates.size() - i) <= best_.size()) {
                return;
            }
            const std::size_t w = candidates[i];
            std::vector<std::size_t> next;
            for (std::size_t j = i + 1; j < candidates.size(); ++j) {
                if (adjacency_[w].test(candidates[j])) {
                    next.push_back(candidates[j]);
                }
            }
            current_.push_back(w);
            expand(next);
            current_.pop_back();
        }
    }

    std::vector<Bits> adjacency_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<std::size_t> current_;
    std::vector<std::size_t> best_;
};

}  // namespace

ExtremalResult exact_alpha(std::size_t m, std::size_t t, unsigned r, const SearchOptions& options) {
    if (m < 1) {
        throw std::invalid_argument("code length must be at least 1");
    }
    if (r < 2) {
        throw std::invalid_argument("alphabet size must be at least 2");
    }
    constexpr std::uint64_t word_cap = 1u << 16;
    const auto words = checked_power(r, m);
    if (!words || *words > word_cap) {
        throw BudgetExceeded(fmt::format("[{}]^{} has more than {} words", r, m, word_cap));
    }
    std::vector<Word> all(*words, Word(m));
    for (std::uint64_t w = 0; w < *words; ++w) {
        std::uint64_t rest = w;
        for (std::size_t i = m; i-- > 0;) {
            all[w][i] = static_cast<Color>(rest % r + 1);
            rest /= r;
        }
    }
    std::vector<Bits> adjacency(*words, Bits(*words));
    for (std::uint64_t a = 0; a < *words; ++a) {
        for (std::uint64_t b = a + 1; b < *words; ++b) {
            if (hamming(all[a], all[b]) >= t) {
                adjacency[a].set(b);
                adjacency[b].set(a);
            }
        }
    }
    // Relabeling symbols coordinatewise preserves distances, so some optimal
    // code contains the all-ones word 0.
    std::vector<std::size_t> candidates;
    for (std::uint64_t w = 1; w < *words; ++w) {
        if (adjacency[0].test(w)) {
            candidates.push_back(w);
        }
    }
    CliqueSearch search(std::move(adjacency), options.budget);
    auto clique = search.run(candidates);

    Code code{r, {all[0]}};
    for (std::size_t w : clique) {
        code.words.push_back(all[w]);
    }
    ExtremalResult out;
    out.value = code.words.size();
    out.code_witness = std::move(code);
    out.instances_scanned = search.nodes();
    out.symmetry_reduced = true;
    return out;
}

// ----------------------------------------------------- bound verification

std::string_view to_string(BoundFamily family) {
    switch (family) {
        case BoundFamily::pair_2path_cap:
            return "pair-2path-cap";
        case BoundFamily::p3_total:
            return "p3-total";
        case BoundFamily::p4_total:
            return "p4-total";
        case BoundFamily::mixed_codegree_sum:
            return "mixed-codegree-sum";
    }
    return "unknown";
}

std::optional<BoundFamily> parse_bound_family(std::string_view name) {
    if (name == "pair-2path-cap" || name == "lemma22") return BoundFamily::pair_2path_cap;
    if (name == "p3-total" || name == "lemma43_p3") return BoundFamily::p3_total;
    if (name == "p4-total" || name == "lemma43_p4") return BoundFamily::p4_total;
    if (name == "mixed-codegree-sum" || name == "eq45") return BoundFamily::mixed_codegree_sum;
    return std::nullopt;
}

Rational bound_value(BoundFamily family, std::size_t m, std::size_t n, unsigned r) {
    const auto mm = static_cast<std::int64_t>(m);
    const auto nn = static_cast<std::int64_t>(n);
    if (family != BoundFamily::pair_2path_cap && r != 2) {
        throw std::invalid_argument(fmt::format("{} is a two-color bound", to_string(family)));
    }
    switch (family) {
        case BoundFamily::pair_2path_cap:
            return kappa2_upper_bound(m, n, r);
        case BoundFamily::p3_total:
            return Rational(mm * mm * nn * nn, 4);
        case BoundFamily::p4_total:
            return Rational(mm * mm * nn * nn * nn, 16);
        case BoundFamily::mixed_codegree_sum:
            return Rational(mm * mm * nn, 4);
    }
    throw std::invalid_argument("unknown bound family");
}

Count bound_quantity(BoundFamily family, const ColoringMatrix& coloring) {
    switch (family) {
        case BoundFamily::pair_2path_cap: {
            Count low = std::numeric_limits<Count>::max();
            for (std::size_t a = 0; a < coloring.n(); ++a) {
                for (std::size_t b = a + 1; b < coloring.n(); ++b) {
                    low = std::min(low, count_alt_2paths(coloring, a, b));
                }
            }
            return low;
        }
        case BoundFamily::p3_total:
            return total_alt_p3(coloring);
        case BoundFamily::p4_total:
            return total_alt_p4(coloring);
        case BoundFamily::mixed_codegree_sum:
            return mixed_codegree_sum(coloring);
    }
    throw std::invalid_argument("unknown bound family");
}

BoundReport verify_bounds(BoundFamily family, std::size_t m, std::size_t n, unsigned r,
                          const SearchOptions& options) {
    if (m < 1 || n < 1) {
        throw std::invalid_argument("both classes must be nonempty");
    }
    BoundReport report;
    report.family = family;
    report.m = m;
    report.n = n;
    report.r = r;
    report.bound = bound_value(family, m, n, r);
    const auto total = search_space_size(m, n, r, false);
    if (!total || *total > options.max_colorings) {
        throw BudgetExceeded(fmt::format("verifying over K_{{{},{}}} with r={} exceeds the cap of {} colorings", m,
                                         n, r, options.max_colorings));
    }
    const ColoringSpace space(m, n, r, false);
    bool first = true;
    space.scan(0, 1, [&](std::uint64_t, const std::vector<Color>& table) {
        ColoringMatrix coloring(m, n, r, table);
        const Count value = bound_quantity(family, coloring);
        ++report.colorings;
        if (!at_most(value, report.bound)) {
            ++report.violations;
        }
        if (first || value > report.max_value) {
            first = false;
            report.max_value = value;
            report.extremal = std::move(coloring);
        }
    });
    report.gap = report.bound - Rational(static_cast<std::int64_t>(report.max_value));
    return report;
}

}  // namespace altpaths
