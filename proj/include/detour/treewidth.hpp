#ifndef DETOUR_TREEWIDTH_HPP
#define DETOUR_TREEWIDTH_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "detour/graph.hpp"

namespace detour {

struct TreeDecomposition {
    std::vector<std::vector<Vertex>> bags;    // sorted vertex sets
    std::vector<std::pair<int, int>> tree_edges; // over bag indices

    int node_count() const { return static_cast<int>(bags.size()); }
    int width() const;
    std::vector<std::vector<int>> node_adjacency() const;
};

// Per-condition outcome of checking (T1)-(T3) with counterexamples.
struct ValidityReport {
    bool t1 = false, t2 = false, t3 = false;
    std::optional<Vertex> missing_vertex;                  // T1 witness
    std::optional<std::pair<Vertex, Vertex>> uncovered_edge; // T2 witness
    std::optional<Vertex> disconnected_vertex;             // T3 witness

    bool valid() const { return t1 && t2 && t3; }
    std::string describe() const;
};

// Throws StructuralError when the node structure is not a tree; otherwise
// reports pass/fail for each condition.
ValidityReport validate_decomposition(const Graph& g, const TreeDecomposition& td);

enum class EliminationStrategy { MinFill, MinDegree };

// Valid decomposition from a greedy elimination order; width is an upper
// bound on tw(g). Ties break on the lowest vertex id.
TreeDecomposition heuristic_decomposition(const Graph& g, EliminationStrategy strategy);

// Optimal-width decomposition by dynamic programming over vertex subsets.
// Throws ResourceError when g has more than budget vertices.
TreeDecomposition exact_treewidth_small(const Graph& g, int budget = 16);

// Certified lower bound on tw(g): maximum over greedy minor contractions of
// the minimum degree (MMD+).
int treewidth_lower_bound(const Graph& g);

// PACE-style .td serialization (1-based ids).
std::string write_td(const TreeDecomposition& td, int host_vertex_count);
TreeDecomposition read_td(std::istream& in);

} // namespace detour

#endif
