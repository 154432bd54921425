#include "altpaths/constructions.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

#include "altpaths/rng.hpp"
#include "host.hpp"

namespace altpaths {

namespace {

// Seed streams, one per construction, so equal seeds in different
// constructions do not produce correlated tables.
constexpr std::uint64_t stream_random = 1;
constexpr std::uint64_t stream_complete = 2;
constexpr std::uint64_t stream_graph = 3;
constexpr std::uint64_t stream_tail = 4;

}  // namespace

ColoringMatrix random_coloring(std::size_t m, std::size_t n, unsigned r, std::uint64_t seed) {
    if (r < 2) {
        throw std::invalid_argument(fmt::format("random coloring needs r >= 2, got {}", r));
    }
    if (m < 1 || n < 1) {
        throw std::invalid_argument("random coloring needs m, n >= 1");
    }
    auto rng = make_rng(derive_seed(seed, stream_random));
    std::uniform_int_distribution<unsigned> pick(1, r);
    std::vector<Color> table(m * n);
    for (auto& c : table) {
        c = static_cast<Color>(pick(rng));
    }
    return ColoringMatrix(m, n, r, std::move(table));
}

CompleteColoring random_complete_coloring(std::size_t n, unsigned r, std::uint64_t seed) {
    if (r < 2) {
        throw std::invalid_argument(fmt::format("random coloring needs r >= 2, got {}", r));
    }
    if (n < 2) {
        throw std::invalid_argument("complete coloring needs n >= 2");
    }
    auto rng = make_rng(derive_seed(seed, stream_complete));
    std::uniform_int_distribution<unsigned> pick(1, r);
    std::vector<Color> upper(n * (n - 1) / 2);
    for (auto& c : upper) {
        c = static_cast<Color>(pick(rng));
    }
    return CompleteColoring::from_upper(n, r, upper);
}

BipartiteAdjacency random_bipartite_graph(std::size_t left, std::size_t right, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("edge probability must lie in [0, 1]");
    }
    auto rng = make_rng(derive_seed(seed, stream_graph));
    std::bernoulli_distribution coin(p);
    std::vector<std::uint8_t> bits(left * right);
    for (auto& b : bits) {
        b = coin(rng) ? 1 : 0;
    }
    return BipartiteAdjacency(left, right, std::move(bits));
}

ColoringMatrix block_coloring(std::size_t m, std::size_t n) {
    if (m < 1 || n < 1) {
        throw std::invalid_argument("block coloring needs m, n >= 1");
    }
    const std::size_t m1 = (m + 1) / 2;
    const std::size_t n1 = (n + 1) / 2;
    std::vector<Color> table(m * n);
    for (std::size_t u = 0; u < m; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            table[u * n + v] = ((u < m1) == (v < n1)) ? red : blue;
        }
    }
    return ColoringMatrix(m, n, 2, std::move(table));
}

ColoringMatrix odd_path_coloring(std::size_t m, std::size_t n) {
    if (m < 1) {
        throw std::invalid_argument("odd path coloring needs m >= 1");
    }
    if (n < m) {
        throw std::invalid_argument(
            fmt::format("a red matching saturating the left class needs n >= m (got m={}, n={})", m, n));
    }
    std::vector<Color> table(m * n, blue);
    for (std::size_t u = 0; u < m; ++u) {
        table[u * n + u] = red;
    }
    return ColoringMatrix(m, n, 2, std::move(table));
}

SharedTailColoring shared_tail_coloring(std::size_t m, std::size_t n, std::size_t k, std::uint64_t seed) {
    if (k < 1) {
        throw std::invalid_argument("k must be at least 1");
    }
    if (m % 2 != 0) {
        throw std::invalid_argument(
            fmt::format("m={} is odd: the shared tail vector must have m/2 red and m/2 blue entries", m));
    }
    if (m < 2 * k) {
        throw std::invalid_argument(fmt::format("need m >= 2k (got m={}, k={})", m, k));
    }
    if (n < m) {
        throw std::invalid_argument(fmt::format("need n >= m (got m={}, n={})", m, n));
    }
    auto rng = make_rng(derive_seed(seed, stream_tail));
    std::bernoulli_distribution coin(0.5);
    std::vector<Color> shared(m);
    for (std::size_t u = 0; u < m; ++u) {
        shared[u] = u < m / 2 ? red : blue;
    }
    std::shuffle(shared.begin(), shared.end(), rng);

    std::vector<Color> table(m * n);
    for (std::size_t u = 0; u < m; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            table[u * n + v] = v < m ? (coin(rng) ? red : blue) : shared[u];
        }
    }
    return {ColoringMatrix(m, n, 2, std::move(table)), m};
}

// ------------------------------------------------------ chain builder

bool BlockSpec::empty() const {
    return std::all_of(families.begin(), families.end(), [](const ChainFamily& f) { return f.blocks.empty(); });
}

namespace {

// Candidate pools for one family. Blocks at even positions draw from the
// x-pools, odd positions from y_pool (bipartite) or the x leftovers (K_n).
struct FamilyPlan {
    Color first_color;
    std::vector<std::size_t> first_pool;
    std::vector<std::size_t> last_pool;
    std::vector<std::size_t> single_pool;  // when there is exactly one block
    std::vector<std::size_t> inner_pool;
};

class Carver {
public:
    Carver(std::size_t x_universe, std::size_t y_universe, bool alternating)
        : used_x_(x_universe, 0), used_y_(y_universe, 0), alternating_(alternating) {}

    void reserve_x(std::size_t x) { used_x_[x] = 1; }
    void reserve_y(std::size_t y) { used_y_[y] = 1; }

    // Commits and returns the family, or nothing if some block came out empty.
    std::optional<ChainFamily> carve(const FamilyPlan& plan, std::size_t block_count, std::size_t target,
                                     const std::vector<std::size_t>& y_pool) {
        auto used_x = used_x_;
        auto used_y = used_y_;
        ChainFamily family{plan.first_color, std::vector<std::vector<std::size_t>>(block_count)};
        auto take = [&](const std::vector<std::size_t>& pool, std::vector<std::uint8_t>& used) {
            std::vector<std::size_t> block;
            for (std::size_t x : pool) {
                if (block.size() == target) break;
                if (!used[x]) {
                    used[x] = 1;
                    block.push_back(x);
                }
            }
            return block;
        };
        if (block_count == 1) {
            family.blocks[0] = take(plan.single_pool, used_x);
        } else {
            family.blocks.front() = take(plan.first_pool, used_x);
            family.blocks.back() = take(plan.last_pool, used_x);
            for (std::size_t i = 1; i + 1 < block_count; ++i) {
                if (alternating_ && i % 2 == 1) {
                    family.blocks[i] = take(y_pool, used_y);
                } else {
                    family.blocks[i] = take(plan.inner_pool, used_x);
                }
            }
        }
        for (const auto& b : family.blocks) {
            if (b.empty()) {
                return std::nullopt;
            }
        }
        used_x_ = std::move(used_x);
        used_y_ = std::move(used_y);
        return family;
    }

private:
    std::vector<std::uint8_t> used_x_;
    std::vector<std::uint8_t> used_y_;
    bool alternating_;
};

// Pools for one family. With split_on_v the family owns the vertices whose
// edge to v has the last color; otherwise those whose edge to u has the first.
template <typename ColorToU, typename ColorToV>
FamilyPlan plan_family(std::size_t universe, Color first, Color last, bool split_on_v, ColorToU cu, ColorToV cv,
                       const std::vector<std::uint8_t>& excluded) {
    FamilyPlan plan{first, {}, {}, {}, {}};
    for (std::size_t w = 0; w < universe; ++w) {
        if (excluded[w]) continue;
        const Color a = cu(w);
        const Color b = cv(w);
        if (a == first && b == last) plan.single_pool.push_back(w);
        if (split_on_v) {
            if (b != last) continue;
            (a == first ? plan.first_pool : plan.last_pool).push_back(w);
        } else {
            if (a != first) continue;
            (b == last ? plan.last_pool : plan.first_pool).push_back(w);
        }
        plan.inner_pool.push_back(w);
    }
    return plan;
}

}  // namespace

BlockSpec auto_blockspec(const ColoringMatrix& coloring, std::size_t u, std::size_t v, std::size_t k,
                         const BlockOptions& options) {
    if (coloring.r() != 2) {
        throw std::invalid_argument("block carving needs a two-coloring");
    }
    if (k < 1) {
        throw std::invalid_argument("k must be at least 1");
    }
    if (u == v || u >= coloring.n() || v >= coloring.n()) {
        throw std::invalid_argument("u and v must be distinct right vertices");
    }
    const std::size_t m = coloring.m();
    const std::size_t n = coloring.n();
    auto cu = [&](std::size_t w) { return coloring(w, u); };
    auto cv = [&](std::size_t w) { return coloring(w, v); };

    BlockStrategy strategy = options.strategy;
    if (strategy == BlockStrategy::automatic) {
        bool identical = true;
        for (std::size_t w = 0; w < m && identical; ++w) {
            identical = cu(w) == cv(w);
        }
        strategy = identical ? BlockStrategy::shared_vector : BlockStrategy::balanced;
    }
    if (strategy == BlockStrategy::balanced && k == 1) {
        strategy = BlockStrategy::split;
    }

    std::vector<std::size_t> y_pool;
    if (options.right_pool) {
        y_pool = *options.right_pool;
    } else {
        y_pool.resize(n);
        std::iota(y_pool.begin(), y_pool.end(), 0);
    }
    std::erase_if(y_pool, [&](std::size_t y) { return y == u || y == v || y >= n; });

    const std::size_t block_count = 2 * k - 1;
    Carver carver(m, n, true);
    BlockSpec spec;
    const std::vector<std::uint8_t> none(m, 0);

    if (strategy == BlockStrategy::shared_vector) {
        spec.target_size = m / k;
        FamilyPlan plan{blue, {}, {}, {}, {}};
        for (std::size_t w = 0; w < m; ++w) {
            if (cu(w) == blue) plan.first_pool.push_back(w);
            if (cv(w) == red) plan.last_pool.push_back(w);
            if (cu(w) == blue && cv(w) == red) plan.single_pool.push_back(w);
            plan.inner_pool.push_back(w);
        }
        if (auto f = carver.carve(plan, block_count, spec.target_size, y_pool)) {
            spec.families.push_back(std::move(*f));
        }
        return spec;
    }

    spec.target_size = m / (2 * k);
    if (strategy == BlockStrategy::balanced) {
        // Endpoint slots: blue(u) and red(v) for the first family, red(u) and
        // blue(v) for the second. Each left vertex fills at most one slot.
        const std::size_t t = spec.target_size;
        const std::array<std::pair<bool, Color>, 4> slots{
            {{true, blue}, {false, red}, {true, red}, {false, blue}}};
        BipartiteSubgraphView view;
        view.left.resize(4 * t);
        std::iota(view.left.begin(), view.left.end(), 0);
        view.right.resize(m);
        std::iota(view.right.begin(), view.right.end(), 0);
        view.adjacent = [&](std::size_t slot, std::size_t w) {
            const auto [at_u, c] = slots[slot / t];
            return (at_u ? cu(w) : cv(w)) == c;
        };
        std::array<std::vector<std::size_t>, 4> assigned;
        std::vector<std::uint8_t> taken(m, 0);
        for (const auto& e : max_matching(view).edges) {
            assigned[e.left / t].push_back(e.right);
            taken[e.right] = 1;
        }
        for (std::size_t f = 0; f < 2; ++f) {
            FamilyPlan plan{f == 0 ? blue : red, {}, {}, {}, {}};
            plan.first_pool = assigned[2 * f];
            plan.last_pool = assigned[2 * f + 1];
            std::sort(plan.first_pool.begin(), plan.first_pool.end());
            std::sort(plan.last_pool.begin(), plan.last_pool.end());
            for (std::size_t w = 0; w < m; ++w) {
                if (!taken[w]) plan.inner_pool.push_back(w);
            }
            if (auto family = carver.carve(plan, block_count, t, y_pool)) {
                spec.families.push_back(std::move(*family));
            }
        }
        return spec;
    }
    // first family: blue out of u, red into v; pools inside red(v)
    // second family: red out of u, blue into v; pools inside blue(v)
    for (Color first : {blue, red}) {
        const Color last = opposite(first);
        auto plan = plan_family(m, first, last, true, cu, cv, none);
        if (auto f = carver.carve(plan, block_count, spec.target_size, y_pool)) {
            spec.families.push_back(std::move(*f));
        }
    }
    return spec;
}

BlockSpec auto_blockspec(const CompleteColoring& coloring, std::size_t u, std::size_t v, std::size_t length) {
    if (coloring.r() != 2) {
        throw std::invalid_argument("block carving needs a two-coloring");
    }
    if (length < 2) {
        throw std::invalid_argument("chains need length >= 2");
    }
    if (u == v || u >= coloring.n() || v >= coloring.n()) {
        throw std::invalid_argument("u and v must be distinct vertices");
    }
    const std::size_t n = coloring.n();
    auto cu = [&](std::size_t w) { return coloring(u, w); };
    auto cv = [&](std::size_t w) { return coloring(v, w); };
    std::vector<std::uint8_t> excluded(n, 0);
    excluded[u] = excluded[v] = 1;

    const std::size_t block_count = length - 1;
    Carver carver(n, 0, false);
    carver.reserve_x(u);
    carver.reserve_x(v);
    BlockSpec spec;
    spec.target_size = n / (2 * (length - 1));
    for (Color first : {blue, red}) {
        // the last edge repeats the first color on odd lengths
        const Color last = length % 2 == 1 ? first : opposite(first);
        auto plan = plan_family(n, first, last, length % 2 == 0, cu, cv, excluded);
        if (auto f = carver.carve(plan, block_count, spec.target_size, {})) {
            spec.families.push_back(std::move(*f));
        }
    }
    return spec;
}

namespace {

ChainYield build_chains(const detail::Host& host, std::size_t gu, std::size_t gv, const BlockSpec& spec,
                        bool bipartite) {
    if (host.r() != 2) {
        throw std::invalid_argument("the chain builder needs a two-coloring");
    }
    // global id of a block member: even blocks are left vertices in K_{m,n}
    auto global = [&](std::size_t block, std::size_t id) {
        if (!bipartite) return id;
        return block % 2 == 0 ? host.global(left_vertex(id)) : host.global(right_vertex(id));
    };
    auto in_range = [&](std::size_t block, std::size_t id) {
        if (!bipartite) return host.contains(left_vertex(id));
        return block % 2 == 0 ? host.contains(left_vertex(id)) : host.contains(right_vertex(id));
    };

    std::vector<std::uint8_t> seen(host.size(), 0);
    seen[gu] = seen[gv] = 1;
    for (const auto& family : spec.families) {
        if (family.first_color != red && family.first_color != blue) {
            throw std::invalid_argument("family first color must be red or blue");
        }
        if (bipartite && family.blocks.size() % 2 == 0) {
            throw std::invalid_argument("paths between right vertices need an odd number of blocks");
        }
        const std::size_t last_edge = family.blocks.size();
        const Color last_color = last_edge % 2 == 0 ? family.first_color : opposite(family.first_color);
        for (std::size_t b = 0; b < family.blocks.size(); ++b) {
            for (std::size_t id : family.blocks[b]) {
                if (!in_range(b, id)) {
                    throw std::out_of_range(fmt::format("block {} member {} out of range", b, id));
                }
                const std::size_t g = global(b, id);
                if (seen[g]) {
                    throw std::invalid_argument(
                        fmt::format("blocks overlap at {} (or touch an endpoint)", to_string(host.vertex(g))));
                }
                seen[g] = 1;
                if (b == 0 && host.color(gu, g) != family.first_color) {
                    throw std::invalid_argument(fmt::format("first block member {} is not joined to u by color {}",
                                                            to_string(host.vertex(g)), family.first_color));
                }
                if (b + 1 == family.blocks.size() && host.color(g, gv) != last_color) {
                    throw std::invalid_argument(fmt::format("last block member {} is not joined to v by color {}",
                                                            to_string(host.vertex(g)), last_color));
                }
            }
        }
    }

    ChainYield out;
    for (const auto& family : spec.families) {
        FamilyYield yield;
        std::vector<std::vector<std::size_t>> chains;
        if (!family.blocks.empty()) {
            for (std::size_t id : family.blocks[0]) {
                chains.push_back({global(0, id)});
            }
        }
        for (std::size_t b = 1; b < family.blocks.size(); ++b) {
            const Color c = b % 2 == 0 ? family.first_color : opposite(family.first_color);
            BipartiteSubgraphView view;
            for (const auto& chain : chains) {
                view.left.push_back(chain.back());
            }
            for (std::size_t id : family.blocks[b]) {
                view.right.push_back(global(b, id));
            }
            view.adjacent = [&host, c](std::size_t a, std::size_t y) { return host.color(a, y) == c; };
            const auto matching = max_matching(view);
            std::vector<std::vector<std::size_t>> extended;
            extended.reserve(matching.size());
            for (const auto& e : matching.edges) {
                auto chain = std::move(chains[e.left]);
                chain.push_back(view.right[e.right]);
                extended.push_back(std::move(chain));
            }
            chains = std::move(extended);
            yield.stage_sizes.push_back(matching.size());
        }
        const std::size_t last_edge = family.blocks.size();
        const Color last_color = last_edge % 2 == 0 ? family.first_color : opposite(family.first_color);
        for (const auto& chain : chains) {
            PathRecord p;
            p.vertices.push_back(host.vertex(gu));
            p.edge_colors.push_back(family.first_color);
            for (std::size_t i = 0; i < chain.size(); ++i) {
                p.vertices.push_back(host.vertex(chain[i]));
                if (i > 0) {
                    p.edge_colors.push_back(i % 2 == 0 ? family.first_color : opposite(family.first_color));
                }
            }
            p.vertices.push_back(host.vertex(gv));
            p.edge_colors.push_back(last_color);
            out.paths.push_back(std::move(p));
        }
        yield.paths = chains.size();
        out.families.push_back(std::move(yield));
    }
    return out;
}

}  // namespace

ChainYield matching_chain_paths(const ColoringMatrix& coloring, std::size_t u, std::size_t v,
                                const BlockSpec& spec) {
    if (u == v || u >= coloring.n() || v >= coloring.n()) {
        throw std::invalid_argument("u and v must be distinct right vertices");
    }
    const detail::Host host(coloring);
    return build_chains(host, host.global(right_vertex(u)), host.global(right_vertex(v)), spec, true);
}

ChainYield matching_chain_paths(const CompleteColoring& coloring, std::size_t u, std::size_t v,
                                const BlockSpec& spec) {
    if (u == v || u >= coloring.n() || v >= coloring.n()) {
        throw std::invalid_argument("u and v must be distinct vertices");
    }
    const detail::Host host(coloring);
    return build_chains(host, u, v, spec, false);
}

}  // namespace altpaths
