#ifndef DETOUR_TETRA_HPP
#define DETOUR_TETRA_HPP

#include <array>
#include <optional>
#include <vector>

#include "detour/graph.hpp"

namespace detour {

// The six K4 edges over branch indices 0..3, in canonical order.
constexpr std::array<std::pair<int, int>, 6> k4_edge_pairs() {
    return {{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
}

// A subdivided-tetrahedron witness: four branch vertices plus one realizing
// path per K4 edge, all given in host vertex ids.
struct TetraModel {
    std::array<Vertex, 4> branch{};
    std::array<Path, 6> realizing{};

    // Largest k this model certifies: min realizing path length minus 1.
    int k_capacity() const;
    std::vector<Vertex> vertex_set() const; // sorted
    bool contains(Vertex v) const;

    // Throws StructuralError unless the six paths realize K4 with pairwise
    // internally disjoint paths of length >= k+1 that are valid in g.
    void validate(const Graph& g, int k = 0) const;

    // The model as its own graph (only the realizing paths' edges), with the
    // translation back to host ids.
    InducedSubgraph edge_subgraph() const;
};

enum class CaseTag { A, B, C };

// Relative position of u and v in the model after symmetry reduction: the
// branch at orientation[i] plays the role of b_{i+1} in the Figure-1 layout.
struct PositionCase {
    CaseTag tag;
    int u_path; // realizing path index carrying u
    int v_path; // realizing path index carrying v
    std::array<int, 4> orientation;
};

// Figure-1 census per case: each (u,v)-path as the sequence of 1-based branch
// roles it visits (the direct u-v segment in case a is the empty sequence).
const std::vector<std::vector<int>>& k4_census(CaseTag tag);

// Builds the graph obtained from K4 by subdividing edge i `counts[i]` times,
// together with its model. Branch vertices are 0..3.
std::pair<Graph, TetraModel> gen_subdivided_k4(const std::array<int, 6>& counts);

PositionCase classify_positions(const TetraModel& model, Vertex u, Vertex v);

// All simple (u,v)-paths inside the model subgraph, in host ids.
std::vector<Path> enumerate_uv_paths(const TetraModel& model, Vertex u, Vertex v);

// Longest (u,v)-path within the model; its length is at least d_M(u,v) +
// k_capacity().
Path detour_in_k4(const TetraModel& model, Vertex u, Vertex v);

struct RouteResult {
    Path p_s;  // s .. u, meets the model only at u
    Vertex u;
    Vertex v;
    Path p_t;  // v .. t, meets the model only at v
};

// Routes s and t to two distinct model vertices with vertex-disjoint paths
// whose interiors avoid the model (block-cut navigation plus two disjoint
// paths by unit-vertex-capacity max flow).
RouteResult route_through_model(const Graph& g, Vertex s, Vertex t, const TetraModel& model);

// P_s + (longest reroute in the model) + P_t: an (s,t)-path of length at
// least d_G(s,t) + k_capacity().
Path build_detour_via_k4(const Graph& g, Vertex s, Vertex t, const TetraModel& model);

struct K4SearchResult {
    std::optional<TetraModel> model;
    bool exhausted = false; // true: the whole space was searched
    long long steps = 0;
};

// Backtracking search for a K4^(k) subgraph. A not-found result with
// exhausted=false is inconclusive, never a certificate of absence.
K4SearchResult find_k4_subdivision(const Graph& g, int k, long long budget = 2'000'000);

} // namespace detour

#endif
