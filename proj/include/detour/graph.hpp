#ifndef DETOUR_GRAPH_HPP
#define DETOUR_GRAPH_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace detour {

using Vertex = int;
using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

// Immutable simple graph, directed or undirected. Adjacency lists are kept
// sorted so every traversal in the library is reproducible. Construction
// rejects self-loops, parallel edges and out-of-range endpoints.
class Graph {
public:
    static Graph undirected(int n, const EdgeList& edges);
    static Graph directed(int n, const EdgeList& edges);

    bool is_directed() const { return directed_; }
    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // Out-neighbors when directed, all neighbors when undirected. Sorted.
    const std::vector<Vertex>& neighbors(Vertex v) const;
    // In-neighbors; equals neighbors() for undirected graphs. Sorted.
    const std::vector<Vertex>& in_neighbors(Vertex v) const;

    // Edge list as given at construction, normalized (u < v when undirected)
    // and sorted.
    const EdgeList& edges() const { return edges_; }

    bool has_edge(Vertex u, Vertex v) const;

    void check_vertex(Vertex v, const char* role) const;

private:
    Graph() = default;

    bool directed_ = false;
    int n_ = 0;
    EdgeList edges_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::vector<Vertex>> in_adj_; // directed only
};

// A self-avoiding walk. Length is the number of edges; a single vertex is a
// valid path of length 0.
struct Path {
    std::vector<Vertex> vertices;

    int length() const { return static_cast<int>(vertices.size()) - 1; }
    bool valid_in(const Graph& g) const;
};

// Distances from a fixed source. Vertices unreachable from the source are
// absent rather than mapped to a sentinel.
class LayerMap {
public:
    LayerMap(Vertex source, std::vector<int> dist)
        : source_(source), dist_(std::move(dist)) {}

    Vertex source() const { return source_; }
    bool reached(Vertex v) const {
        return v >= 0 && v < static_cast<int>(dist_.size()) && dist_[v] >= 0;
    }
    std::optional<int> distance(Vertex v) const {
        if (!reached(v)) return std::nullopt;
        return dist_[v];
    }
    // Distance of a vertex known to be reached; throws InputError otherwise.
    int distance_checked(Vertex v, const char* role) const;

    int max_layer() const;
    std::vector<Vertex> layer(int d) const;

private:
    Vertex source_;
    std::vector<int> dist_; // -1 = unreachable
};

// Induced subgraph together with the id translation back to the host graph.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_host;  // new id -> host id
    std::vector<int> from_host;   // host id -> new id, -1 when absent

    Path lift(const Path& local) const;
    Vertex lift_vertex(Vertex local) const { return to_host.at(local); }
};

LayerMap bfs_layers(const Graph& g, Vertex s);

InducedSubgraph induced_subgraph(const Graph& g, std::vector<Vertex> keep);

// G_[u,v]: induced on {u, v} and all x with d(u) < d(x) < d(v).
InducedSubgraph layer_slice(const Graph& g, const LayerMap& layers, Vertex u, Vertex v);

// G_[u,inf): induced on {u} and all x with d(x) > d(u).
InducedSubgraph layer_tail(const Graph& g, const LayerMap& layers, Vertex u);

// All simple (s,t)-paths in lexicographic order of their vertex sequences.
// Throws EnumerationOverflow when more than max_count paths exist.
std::vector<Path> enumerate_st_paths(const Graph& g, Vertex s, Vertex t,
                                     long long max_count = 1'000'000);

} // namespace detour

#endif
