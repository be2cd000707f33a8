#ifndef DETOUR_BLOCK_CUT_HPP
#define DETOUR_BLOCK_CUT_HPP

#include <vector>

#include "detour/graph.hpp"

namespace detour {

// Block-cut tree of a connected undirected graph. Nodes 0..blocks-1 are the
// blocks (maximal biconnected components, a bridge forms a 2-vertex block);
// nodes blocks..blocks+cuts-1 are the cut vertices.
struct BlockCutTree {
    std::vector<std::vector<Vertex>> blocks; // sorted vertex sets
    std::vector<Vertex> cut_vertices;        // sorted
    std::vector<std::vector<int>> adj;       // tree adjacency over node ids

    int node_count() const { return static_cast<int>(adj.size()); }
    int block_node(int block_index) const { return block_index; }
    int cut_node(Vertex v) const; // -1 when v is not a cut vertex
    bool is_cut_vertex(Vertex v) const { return cut_node(v) >= 0; }

    // Node to start a tree walk from: the cut node when v is a cut vertex,
    // otherwise the unique block containing v.
    int node_of_vertex(Vertex v) const;
};

BlockCutTree block_cut_tree(const Graph& g);

// Induced subgraph on the vertices lying on at least one (s,t)-path, obtained
// from the blocks along the block-cut tree path between s and t.
InducedSubgraph relevant_part(const Graph& g, Vertex s, Vertex t);

} // namespace detour

#endif
