#include "detour/block_cut.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "detour/errors.hpp"

namespace detour {

int BlockCutTree::cut_node(Vertex v) const {
    auto it = std::lower_bound(cut_vertices.begin(), cut_vertices.end(), v);
    if (it == cut_vertices.end() || *it != v) return -1;
    return static_cast<int>(blocks.size() + (it - cut_vertices.begin()));
}

int BlockCutTree::node_of_vertex(Vertex v) const {
    int cut = cut_node(v);
    if (cut >= 0) return cut;
    for (size_t b = 0; b < blocks.size(); ++b)
        if (std::binary_search(blocks[b].begin(), blocks[b].end(), v))
            return static_cast<int>(b);
    throw InputError("vertex " + std::to_string(v) + " not present in block-cut tree");
}

BlockCutTree block_cut_tree(const Graph& g) {
    if (g.is_directed()) throw InputError("block_cut_tree requires an undirected graph");
    const int n = g.vertex_count();
    if (n == 0) throw InputError("block_cut_tree requires a non-empty graph");

    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    std::vector<size_t> next(n, 0);
    std::vector<std::pair<Vertex, Vertex>> edge_stack;
    std::vector<std::vector<Vertex>> blocks;
    std::set<Vertex> cuts;
    int timer = 0;
    int root_children = 0;

    auto pop_component = [&](Vertex u, Vertex v) {
        std::set<Vertex> members;
        while (!edge_stack.empty()) {
            auto [a, b] = edge_stack.back();
            edge_stack.pop_back();
            members.insert(a);
            members.insert(b);
            if (a == u && b == v) break;
        }
        blocks.emplace_back(members.begin(), members.end());
    };

    const Vertex root = 0;
    disc[root] = low[root] = timer++;
    std::vector<Vertex> stack{root};
    while (!stack.empty()) {
        Vertex u = stack.back();
        if (next[u] < g.neighbors(u).size()) {
            Vertex v = g.neighbors(u)[next[u]++];
            if (v == parent[u]) continue;
            if (disc[v] < 0) {
                parent[v] = u;
                disc[v] = low[v] = timer++;
                edge_stack.push_back({u, v});
                if (u == root) ++root_children;
                stack.push_back(v);
            } else if (disc[v] < disc[u]) {
                edge_stack.push_back({u, v});
                low[u] = std::min(low[u], disc[v]);
            }
        } else {
            stack.pop_back();
            Vertex p = parent[u];
            if (p >= 0) {
                low[p] = std::min(low[p], low[u]);
                if (low[u] >= disc[p]) {
                    pop_component(p, u);
                    if (p != root) cuts.insert(p);
                }
            }
        }
    }
    if (root_children >= 2) cuts.insert(root);
    if (timer != n)
        throw InputError("block_cut_tree requires a connected graph");
    if (blocks.empty()) blocks.push_back({root}); // single-vertex graph

    BlockCutTree tree;
    tree.blocks = std::move(blocks);
    tree.cut_vertices.assign(cuts.begin(), cuts.end());
    tree.adj.assign(tree.blocks.size() + tree.cut_vertices.size(), {});
    for (size_t b = 0; b < tree.blocks.size(); ++b) {
        for (Vertex v : tree.blocks[b]) {
            int cn = tree.cut_node(v);
            if (cn >= 0) {
                tree.adj[b].push_back(cn);
                tree.adj[cn].push_back(static_cast<int>(b));
            }
        }
    }
    return tree;
}

namespace {

// Node sequence of the unique tree path, or empty when disconnected.
std::vector<int> tree_path(const std::vector<std::vector<int>>& adj, int from, int to) {
    std::vector<int> prev(adj.size(), -2);
    std::deque<int> queue{from};
    prev[from] = -1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (u == to) break;
        for (int v : adj[u])
            if (prev[v] == -2) {
                prev[v] = u;
                queue.push_back(v);
            }
    }
    if (prev[to] == -2) return {};
    std::vector<int> path;
    for (int cur = to; cur != -1; cur = prev[cur]) path.push_back(cur);
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace

InducedSubgraph relevant_part(const Graph& g, Vertex s, Vertex t) {
    if (g.is_directed()) throw InputError("relevant_part requires an undirected graph");
    g.check_vertex(s, "s");
    g.check_vertex(t, "t");
    if (s == t) throw InputError("relevant_part requires s != t");

    LayerMap layers = bfs_layers(g, s);
    if (!layers.reached(t))
        throw InputError("s and t are disconnected");

    // Work inside the component of s; the block-cut tree needs connectivity.
    std::vector<Vertex> component;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (layers.reached(v)) component.push_back(v);
    InducedSubgraph comp = induced_subgraph(g, std::move(component));

    BlockCutTree tree = block_cut_tree(comp.graph);
    int from = tree.node_of_vertex(comp.from_host[s]);
    int to = tree.node_of_vertex(comp.from_host[t]);
    std::vector<int> path = tree_path(tree.adj, from, to);

    std::set<Vertex> keep;
    for (int node : path)
        if (node < static_cast<int>(tree.blocks.size()))
            for (Vertex v : tree.blocks[node]) keep.insert(comp.to_host[v]);
    // A cut-node endpoint (s or t itself a cut vertex) contributes its vertex.
    keep.insert(s);
    keep.insert(t);
    return induced_subgraph(g, std::vector<Vertex>(keep.begin(), keep.end()));
}

} // namespace detour
