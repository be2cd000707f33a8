#include "detour/exact_path.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "detour/errors.hpp"
#include "detour/rng.hpp"

namespace detour {

namespace {

// Hard cap on the subset-DP route; beyond this the mask table gets too big.
constexpr int kMaxSubsetDpVertices = 22;

using Bits = std::vector<uint64_t>;

struct BitGraph {
    int n;
    int words;
    std::vector<Bits> out; // out-adjacency as bitsets

    explicit BitGraph(const Graph& g)
        : n(g.vertex_count()), words((g.vertex_count() + 63) / 64),
          out(g.vertex_count(), Bits(words, 0)) {
        for (Vertex v = 0; v < n; ++v)
            for (Vertex w : g.neighbors(v)) out[v][w / 64] |= 1ull << (w % 64);
    }
};

bool get_bit(const Bits& b, int i) { return (b[i / 64] >> (i % 64)) & 1; }
void set_bit(Bits& b, int i) { b[i / 64] |= 1ull << (i % 64); }

bool any_bit(const Bits& b) {
    return std::any_of(b.begin(), b.end(), [](uint64_t w) { return w != 0; });
}

// Exact walk lengths are a cheap sound screen: a path of length len is a walk
// of length len.
bool walk_of_length_exists(const BitGraph& bg, Vertex s, Vertex t, int len) {
    Bits cur(bg.words, 0);
    set_bit(cur, s);
    for (int step = 0; step < len; ++step) {
        Bits next(bg.words, 0);
        for (int v = 0; v < bg.n; ++v)
            if (get_bit(cur, v))
                for (int w = 0; w < bg.words; ++w) next[w] |= bg.out[v][w];
        cur = std::move(next);
        if (!any_bit(cur)) return false;
    }
    return get_bit(cur, t);
}

// In an undirected forest the (s,t)-path is unique, so the query is decided
// by its length.
std::optional<Path> forest_answer(const Graph& g, Vertex s, Vertex t, int len, bool& applies) {
    applies = false;
    if (g.is_directed()) return std::nullopt;
    std::vector<int> root(g.vertex_count());
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](Vertex v) {
        while (root[v] != v) v = root[v] = root[root[v]];
        return v;
    };
    for (auto [u, v] : g.edges()) {
        Vertex ru = find(u), rv = find(v);
        if (ru == rv) return std::nullopt; // cycle: not a forest
        root[ru] = rv;
    }
    applies = true;
    auto paths = enumerate_st_paths(g, s, t, 2);
    if (paths.size() == 1 && paths[0].length() == len) return paths[0];
    return std::nullopt;
}

std::optional<Path> subset_dp(const Graph& g, Vertex s, Vertex t, int len) {
    const int n = g.vertex_count();
    const uint32_t full = (1u << n) - 1;
    std::vector<uint32_t> adj(n, 0);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : g.neighbors(v)) adj[v] |= 1u << w;

    std::vector<uint32_t> reach(full + 1, 0);
    reach[1u << s] = 1u << s;
    const int want = len + 1;
    for (uint32_t mask = 1; mask <= full; ++mask) {
        uint32_t ends = reach[mask];
        if (!ends) continue;
        const int size = std::popcount(mask);
        if (size >= want) continue;
        while (ends) {
            const int v = std::countr_zero(ends);
            ends &= ends - 1;
            uint32_t nxt = adj[v] & ~mask;
            while (nxt) {
                const int w = std::countr_zero(nxt);
                nxt &= nxt - 1;
                reach[mask | (1u << w)] |= 1u << w;
            }
        }
    }

    uint32_t found = 0;
    for (uint32_t mask = 1; mask <= full; ++mask)
        if (std::popcount(mask) == want && (reach[mask] >> t) & 1) {
            found = mask;
            break;
        }
    if (!found) return std::nullopt;

    Path path;
    path.vertices.assign(static_cast<size_t>(want), -1);
    uint32_t mask = found;
    Vertex cur = t;
    for (int pos = want - 1; pos >= 0; --pos) {
        path.vertices[pos] = cur;
        if (pos == 0) break;
        const uint32_t prev_mask = mask & ~(1u << cur);
        uint32_t cands = reach[prev_mask];
        Vertex chosen = -1;
        while (cands) {
            const int u = std::countr_zero(cands);
            cands &= cands - 1;
            if ((adj[u] >> cur) & 1) { // works for directed: u -> cur
                if (g.is_directed() && !g.has_edge(u, cur)) continue;
                chosen = u;
                break;
            }
        }
        if (chosen < 0) throw ConsistencyError("subset DP reconstruction failed");
        mask = prev_mask;
        cur = chosen;
    }
    return path;
}

struct ColorTrial {
    std::vector<int> color;        // per vertex
    std::vector<Bits> color_class; // per color
};

std::optional<Path> color_coding_trial(const Graph& g, const BitGraph& bg, Vertex s,
                                       Vertex t, int len, const ColorTrial& trial) {
    const int colors = len + 1;
    const uint32_t full = (1u << colors) - 1;
    std::vector<Bits> reach(full + 1, Bits(bg.words, 0));
    set_bit(reach[1u << trial.color[s]], s);
    for (uint32_t set = 1; set <= full; ++set) {
        if (!any_bit(reach[set])) continue;
        if (set == full) break;
        Bits nbr(bg.words, 0);
        for (int v = 0; v < bg.n; ++v)
            if (get_bit(reach[set], v))
                for (int w = 0; w < bg.words; ++w) nbr[w] |= bg.out[v][w];
        for (int c = 0; c < colors; ++c) {
            if (set & (1u << c)) continue;
            const uint32_t bigger = set | (1u << c);
            for (int w = 0; w < bg.words; ++w)
                reach[bigger][w] |= nbr[w] & trial.color_class[c][w];
        }
    }
    if (!get_bit(reach[full], t)) return std::nullopt;

    Path path;
    path.vertices.assign(static_cast<size_t>(colors), -1);
    uint32_t set = full;
    Vertex cur = t;
    for (int pos = colors - 1; pos >= 0; --pos) {
        path.vertices[pos] = cur;
        if (pos == 0) break;
        const uint32_t prev = set & ~(1u << trial.color[cur]);
        Vertex chosen = -1;
        for (int u = 0; u < bg.n && chosen < 0; ++u)
            if (get_bit(reach[prev], u) && get_bit(bg.out[u], cur)) chosen = u;
        if (chosen < 0) throw ConsistencyError("color coding reconstruction failed");
        set = prev;
        cur = chosen;
    }
    return path;
}

double subset_dp_cost(int n) {
    if (n > kMaxSubsetDpVertices) return std::numeric_limits<double>::infinity();
    return std::ldexp(static_cast<double>(n), n); // 2^n * n
}

double color_coding_cost(int n, int len, long long trials) {
    const int colors = len + 1;
    if (colors > 24) return std::numeric_limits<double>::infinity();
    const double per_trial = std::ldexp(static_cast<double>((n / 64 + 1) * (n + colors)), colors);
    return per_trial * static_cast<double>(trials);
}

} // namespace

void OracleConfig::validate() const {
    if (!(delta > 0.0 && delta < 1.0))
        throw InputError("oracle delta must lie strictly between 0 and 1");
    if (deterministic_threshold < 0)
        throw InputError("negative deterministic threshold");
    if (trial_override && *trial_override < 1)
        throw InputError("trial override must be positive");
}

long long color_coding_trials(int len, double delta) {
    const double t = std::ceil(std::exp(static_cast<double>(len + 1)) * std::log(1.0 / delta));
    if (!(t < 4e18)) return std::numeric_limits<long long>::max();
    return std::max(1ll, static_cast<long long>(t));
}

std::optional<Path> exact_path(const Graph& g, Vertex s, Vertex t, int len,
                               const OracleConfig& cfg, OracleStats* stats) {
    cfg.validate();
    g.check_vertex(s, "s");
    g.check_vertex(t, "t");
    if (len < 0) throw InputError("negative path length");
    if (stats) {
        ++stats->queries;
        stats->max_len = std::max(stats->max_len, len);
    }

    if (len == 0) {
        if (s == t) return Path{{s}};
        return std::nullopt;
    }
    if (s == t) return std::nullopt; // positive-length paths are self-avoiding

    const int n = g.vertex_count();
    if (len > n - 1 || len > g.edge_count()) return std::nullopt;

    BitGraph bg(g);
    if (!walk_of_length_exists(bg, s, t, len)) return std::nullopt;

    bool forest;
    if (auto answer = forest_answer(g, s, t, len, forest); forest) return answer;

    const long long trials = cfg.trial_override.value_or(color_coding_trials(len, cfg.delta));
    const bool size_fallback = n <= std::min(cfg.deterministic_threshold, kMaxSubsetDpVertices);
    const bool cost_fallback = !cfg.force_color_coding &&
                               subset_dp_cost(n) <= color_coding_cost(n, len, trials);
    if (size_fallback || cost_fallback) return subset_dp(g, s, t, len);

    if (color_coding_cost(n, len, trials) > 1e14)
        throw ResourceError("exact_path query infeasible: length " + std::to_string(len) +
                            " on " + std::to_string(n) + " vertices needs " +
                            std::to_string(trials) + " trials");

    const int colors = len + 1;
    for (long long trial = 0; trial < trials; ++trial) {
        if (stats) ++stats->trials;
        CounterRng rng(cfg.seed, static_cast<uint64_t>(trial) * 0x10001ull + static_cast<uint64_t>(len));
        ColorTrial coloring;
        coloring.color.resize(n);
        coloring.color_class.assign(colors, Bits(bg.words, 0));
        for (Vertex v = 0; v < n; ++v) {
            const int c = rng.uniform_int(colors);
            coloring.color[v] = c;
            set_bit(coloring.color_class[c], v);
        }
        if (auto path = color_coding_trial(g, bg, s, t, len, coloring)) return path;
    }
    return std::nullopt;
}

bool exact_path_decide(const Graph& g, Vertex s, Vertex t, int len,
                       const OracleConfig& cfg, OracleStats* stats) {
    return exact_path(g, s, t, len, cfg, stats).has_value();
}

} // namespace detour
