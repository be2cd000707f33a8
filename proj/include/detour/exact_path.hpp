#ifndef DETOUR_EXACT_PATH_HPP
#define DETOUR_EXACT_PATH_HPP

#include <cstdint>
#include <optional>

#include "detour/graph.hpp"

namespace detour {

// Configuration of the Exact Path oracle. `delta` is the failure probability
// of a single query: when an (s,t)-path of the requested length exists, the
// oracle returns one with probability at least 1-delta. A returned path is
// always valid and of exact length; errors are one-sided false negatives.
struct OracleConfig {
    double delta = 0.01;
    // Exact number of color-coding trials; overrides the ceil(e^(len+1) *
    // ln(1/delta)) default when set.
    std::optional<long long> trial_override;
    // Graphs with at most this many vertices are answered by the exact
    // subset DP instead of color coding.
    int deterministic_threshold = 12;
    uint64_t seed = 1;
    // Disables the cost-based routing to the exact DP, forcing color coding
    // whenever the threshold does not apply. Meant for tests.
    bool force_color_coding = false;

    void validate() const;
};

struct OracleStats {
    long long queries = 0;
    long long trials = 0;
    int max_len = 0;
};

// Decide/construct an (s,t)-path with exactly `len` edges; works on directed
// and undirected graphs. len=0 is answered deterministically (s==t), as are
// queries below the deterministic threshold.
std::optional<Path> exact_path(const Graph& g, Vertex s, Vertex t, int len,
                               const OracleConfig& cfg = {}, OracleStats* stats = nullptr);

bool exact_path_decide(const Graph& g, Vertex s, Vertex t, int len,
                       const OracleConfig& cfg = {}, OracleStats* stats = nullptr);

// Trial count giving false-negative probability <= delta with len+1 colors.
long long color_coding_trials(int len, double delta);

} // namespace detour

#endif
