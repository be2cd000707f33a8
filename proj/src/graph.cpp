#include "detour/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "detour/errors.hpp"

namespace detour {

namespace {

void check_edge_endpoints(int n, Vertex u, Vertex v) {
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw InputError("edge endpoint out of range: (" + std::to_string(u) +
                         "," + std::to_string(v) + ") with n=" + std::to_string(n));
    if (u == v)
        throw InputError("self-loop rejected at vertex " + std::to_string(u));
}

} // namespace

Graph Graph::undirected(int n, const EdgeList& edges) {
    if (n < 0) throw InputError("negative vertex count");
    Graph g;
    g.directed_ = false;
    g.n_ = n;
    g.adj_.resize(n);
    std::set<std::pair<Vertex, Vertex>> seen;
    g.edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        check_edge_endpoints(n, u, v);
        auto e = std::minmax(u, v);
        if (!seen.insert({e.first, e.second}).second)
            throw InputError("parallel edge rejected: " + std::to_string(u) +
                             " " + std::to_string(v));
        g.edges_.push_back({e.first, e.second});
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& list : g.adj_) std::sort(list.begin(), list.end());
    std::sort(g.edges_.begin(), g.edges_.end());
    return g;
}

Graph Graph::directed(int n, const EdgeList& edges) {
    if (n < 0) throw InputError("negative vertex count");
    Graph g;
    g.directed_ = true;
    g.n_ = n;
    g.adj_.resize(n);
    g.in_adj_.resize(n);
    std::set<std::pair<Vertex, Vertex>> seen;
    g.edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        check_edge_endpoints(n, u, v);
        if (!seen.insert({u, v}).second)
            throw InputError("parallel edge rejected: " + std::to_string(u) +
                             " " + std::to_string(v));
        g.edges_.push_back({u, v});
        g.adj_[u].push_back(v);
        g.in_adj_[v].push_back(u);
    }
    for (auto& list : g.adj_) std::sort(list.begin(), list.end());
    for (auto& list : g.in_adj_) std::sort(list.begin(), list.end());
    std::sort(g.edges_.begin(), g.edges_.end());
    return g;
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
    check_vertex(v, "vertex");
    return adj_[v];
}

const std::vector<Vertex>& Graph::in_neighbors(Vertex v) const {
    check_vertex(v, "vertex");
    return directed_ ? in_adj_[v] : adj_[v];
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    check_vertex(u, "edge endpoint");
    check_vertex(v, "edge endpoint");
    const auto& list = adj_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

void Graph::check_vertex(Vertex v, const char* role) const {
    if (v < 0 || v >= n_)
        throw InputError(std::string(role) + " out of range: " + std::to_string(v) +
                         " with n=" + std::to_string(n_));
}

bool Path::valid_in(const Graph& g) const {
    if (vertices.empty()) return false;
    std::set<Vertex> seen;
    for (Vertex v : vertices) {
        if (v < 0 || v >= g.vertex_count()) return false;
        if (!seen.insert(v).second) return false;
    }
    for (size_t i = 0; i + 1 < vertices.size(); ++i)
        if (!g.has_edge(vertices[i], vertices[i + 1])) return false;
    return true;
}

int LayerMap::distance_checked(Vertex v, const char* role) const {
    auto d = distance(v);
    if (!d)
        throw InputError(std::string(role) + " " + std::to_string(v) +
                         " is not reachable from the source");
    return *d;
}

int LayerMap::max_layer() const {
    int m = 0;
    for (int d : dist_) m = std::max(m, d);
    return m;
}

std::vector<Vertex> LayerMap::layer(int d) const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < static_cast<int>(dist_.size()); ++v)
        if (dist_[v] == d) out.push_back(v);
    return out;
}

LayerMap bfs_layers(const Graph& g, Vertex s) {
    g.check_vertex(s, "source");
    std::vector<int> dist(g.vertex_count(), -1);
    std::deque<Vertex> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex v : g.neighbors(u)) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return LayerMap(s, std::move(dist));
}

Path InducedSubgraph::lift(const Path& local) const {
    Path out;
    out.vertices.reserve(local.vertices.size());
    for (Vertex v : local.vertices) out.vertices.push_back(to_host.at(v));
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::vector<Vertex> keep) {
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    std::vector<int> from_host(g.vertex_count(), -1);
    for (size_t i = 0; i < keep.size(); ++i) {
        g.check_vertex(keep[i], "kept vertex");
        from_host[keep[i]] = static_cast<int>(i);
    }
    EdgeList edges;
    for (auto [u, v] : g.edges())
        if (from_host[u] >= 0 && from_host[v] >= 0)
            edges.push_back({from_host[u], from_host[v]});
    Graph sub = g.is_directed()
                    ? Graph::directed(static_cast<int>(keep.size()), edges)
                    : Graph::undirected(static_cast<int>(keep.size()), edges);
    return InducedSubgraph{std::move(sub), std::move(keep), std::move(from_host)};
}

InducedSubgraph layer_slice(const Graph& g, const LayerMap& layers, Vertex u, Vertex v) {
    const int du = layers.distance_checked(u, "slice endpoint");
    const int dv = layers.distance_checked(v, "slice endpoint");
    if (du >= dv)
        throw InputError("layer_slice requires d(u) < d(v), got d(u)=" +
                         std::to_string(du) + " d(v)=" + std::to_string(dv));
    std::vector<Vertex> keep{u, v};
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
        auto dx = layers.distance(x);
        if (dx && *dx > du && *dx < dv) keep.push_back(x);
    }
    return induced_subgraph(g, std::move(keep));
}

InducedSubgraph layer_tail(const Graph& g, const LayerMap& layers, Vertex u) {
    const int du = layers.distance_checked(u, "tail root");
    std::vector<Vertex> keep{u};
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
        auto dx = layers.distance(x);
        if (dx && *dx > du) keep.push_back(x);
    }
    return induced_subgraph(g, std::move(keep));
}

namespace {

void enumerate_rec(const Graph& g, Vertex cur, Vertex t, std::vector<Vertex>& stack,
                   std::vector<char>& used, std::vector<Path>& out,
                   long long max_count) {
    if (cur == t) {
        if (static_cast<long long>(out.size()) >= max_count)
            throw EnumerationOverflow("more than " + std::to_string(max_count) +
                                      " (s,t)-paths");
        out.push_back(Path{stack});
        return;
    }
    for (Vertex next : g.neighbors(cur)) {
        if (used[next]) continue;
        used[next] = 1;
        stack.push_back(next);
        enumerate_rec(g, next, t, stack, used, out, max_count);
        stack.pop_back();
        used[next] = 0;
    }
}

} // namespace

std::vector<Path> enumerate_st_paths(const Graph& g, Vertex s, Vertex t,
                                     long long max_count) {
    g.check_vertex(s, "source");
    g.check_vertex(t, "target");
    if (max_count < 0) throw InputError("negative max_count");
    std::vector<Path> out;
    std::vector<Vertex> stack{s};
    std::vector<char> used(g.vertex_count(), 0);
    used[s] = 1;
    enumerate_rec(g, s, t, stack, used, out, max_count);
    return out;
}

} // namespace detour
