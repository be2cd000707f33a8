#include "detour/treewidth.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <set>
#include <sstream>

#include "detour/errors.hpp"

namespace detour {

int TreeDecomposition::width() const {
    int max_bag = 0;
    for (const auto& bag : bags) max_bag = std::max(max_bag, static_cast<int>(bag.size()));
    return max_bag - 1;
}

std::vector<std::vector<int>> TreeDecomposition::node_adjacency() const {
    std::vector<std::vector<int>> adj(bags.size());
    for (auto [a, b] : tree_edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

std::string ValidityReport::describe() const {
    if (valid()) return "valid";
    std::ostringstream out;
    if (!t1) out << "(T1) vertex " << *missing_vertex << " is in no bag; ";
    if (!t2) out << "(T2) edge " << uncovered_edge->first << "-" << uncovered_edge->second
                 << " is covered by no bag; ";
    if (!t3) out << "(T3) bags containing " << *disconnected_vertex
                 << " do not induce a connected subtree; ";
    return out.str();
}

namespace {

void check_tree_structure(const TreeDecomposition& td) {
    const int nodes = td.node_count();
    if (nodes == 0) throw StructuralError("decomposition has no nodes");
    if (static_cast<int>(td.tree_edges.size()) != nodes - 1)
        throw StructuralError("decomposition has " + std::to_string(td.tree_edges.size()) +
                              " tree edges for " + std::to_string(nodes) +
                              " nodes; a tree needs exactly n-1");
    for (auto [a, b] : td.tree_edges) {
        if (a < 0 || a >= nodes || b < 0 || b >= nodes)
            throw StructuralError("tree edge references a node out of range");
        if (a == b) throw StructuralError("tree edge is a self-loop");
    }
    // n-1 edges + connectivity = tree.
    auto adj = td.node_adjacency();
    std::vector<char> seen(nodes, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int visited = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        ++visited;
        for (int v : adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                queue.push_back(v);
            }
    }
    if (visited != nodes) throw StructuralError("decomposition nodes are not connected");
}

} // namespace

ValidityReport validate_decomposition(const Graph& g, const TreeDecomposition& td) {
    check_tree_structure(td);
    for (const auto& bag : td.bags) {
        for (Vertex v : bag) g.check_vertex(v, "bag vertex");
        if (!std::is_sorted(bag.begin(), bag.end()) ||
            std::adjacent_find(bag.begin(), bag.end()) != bag.end())
            throw StructuralError("bags must be sorted vertex sets");
    }

    ValidityReport report;
    const int n = g.vertex_count();

    // (T1)
    std::vector<char> covered(n, 0);
    for (const auto& bag : td.bags)
        for (Vertex v : bag) covered[v] = 1;
    report.t1 = true;
    for (Vertex v = 0; v < n; ++v)
        if (!covered[v]) {
            report.t1 = false;
            report.missing_vertex = v;
            break;
        }

    // (T2)
    report.t2 = true;
    for (auto [u, v] : g.edges()) {
        bool found = false;
        for (const auto& bag : td.bags)
            if (std::binary_search(bag.begin(), bag.end(), u) &&
                std::binary_search(bag.begin(), bag.end(), v)) {
                found = true;
                break;
            }
        if (!found) {
            report.t2 = false;
            report.uncovered_edge = {u, v};
            break;
        }
    }

    // (T3)
    report.t3 = true;
    auto adj = td.node_adjacency();
    for (Vertex v = 0; v < n && report.t3; ++v) {
        std::vector<int> holding;
        for (int node = 0; node < td.node_count(); ++node)
            if (std::binary_search(td.bags[node].begin(), td.bags[node].end(), v))
                holding.push_back(node);
        if (holding.size() <= 1) continue;
        std::set<int> want(holding.begin(), holding.end());
        std::deque<int> queue{holding[0]};
        std::set<int> seen{holding[0]};
        int reached = 0;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            ++reached;
            for (int w : adj[u])
                if (want.count(w) && !seen.count(w)) {
                    seen.insert(w);
                    queue.push_back(w);
                }
        }
        if (reached != static_cast<int>(holding.size())) {
            report.t3 = false;
            report.disconnected_vertex = v;
        }
    }
    return report;
}

namespace {

// Bags from an elimination order over the (progressively filled) graph.
// bag(v) = {v} + its not-yet-eliminated neighbors at elimination time; the
// node of v attaches to the node of the first-eliminated vertex of its bag.
TreeDecomposition decomposition_from_order(const Graph& g, const std::vector<Vertex>& order) {
    const int n = g.vertex_count();
    std::vector<std::set<Vertex>> work(n);
    for (auto [u, v] : g.edges()) {
        work[u].insert(v);
        work[v].insert(u);
    }
    std::vector<int> position(n);
    for (int i = 0; i < n; ++i) position[order[i]] = i;

    TreeDecomposition td;
    td.bags.resize(n);
    std::vector<char> eliminated(n, 0);
    for (int i = 0; i < n; ++i) {
        Vertex v = order[i];
        std::vector<Vertex> rest(work[v].begin(), work[v].end());
        std::vector<Vertex> bag = rest;
        bag.push_back(v);
        std::sort(bag.begin(), bag.end());
        td.bags[i] = std::move(bag);
        for (size_t a = 0; a < rest.size(); ++a)
            for (size_t b = a + 1; b < rest.size(); ++b) {
                work[rest[a]].insert(rest[b]);
                work[rest[b]].insert(rest[a]);
            }
        for (Vertex u : rest) work[u].erase(v);
        eliminated[v] = 1;
        if (!rest.empty()) {
            Vertex soonest = *std::min_element(
                rest.begin(), rest.end(),
                [&](Vertex a, Vertex b) { return position[a] < position[b]; });
            td.tree_edges.push_back({i, position[soonest]});
        } else if (i + 1 < n) {
            td.tree_edges.push_back({i, i + 1});
        }
    }
    return td;
}

std::vector<Vertex> greedy_elimination_order(const Graph& g, EliminationStrategy strategy) {
    const int n = g.vertex_count();
    std::vector<std::set<Vertex>> work(n);
    for (auto [u, v] : g.edges()) {
        work[u].insert(v);
        work[v].insert(u);
    }
    std::vector<char> gone(n, 0);
    std::vector<Vertex> order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        Vertex best = -1;
        long long best_score = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (gone[v]) continue;
            long long score;
            if (strategy == EliminationStrategy::MinDegree) {
                score = static_cast<long long>(work[v].size());
            } else {
                score = 0;
                std::vector<Vertex> nb(work[v].begin(), work[v].end());
                for (size_t a = 0; a < nb.size(); ++a)
                    for (size_t b = a + 1; b < nb.size(); ++b)
                        if (!work[nb[a]].count(nb[b])) ++score;
            }
            if (best < 0 || score < best_score) {
                best = v;
                best_score = score;
            }
        }
        std::vector<Vertex> nb(work[best].begin(), work[best].end());
        for (size_t a = 0; a < nb.size(); ++a)
            for (size_t b = a + 1; b < nb.size(); ++b) {
                work[nb[a]].insert(nb[b]);
                work[nb[b]].insert(nb[a]);
            }
        for (Vertex u : nb) work[u].erase(best);
        work[best].clear();
        gone[best] = 1;
        order.push_back(best);
    }
    return order;
}

} // namespace

TreeDecomposition heuristic_decomposition(const Graph& g, EliminationStrategy strategy) {
    if (g.is_directed())
        throw InputError("tree decompositions are defined for undirected graphs");
    if (g.vertex_count() == 0) {
        TreeDecomposition td;
        td.bags.push_back({});
        return td;
    }
    return decomposition_from_order(g, greedy_elimination_order(g, strategy));
}

TreeDecomposition exact_treewidth_small(const Graph& g, int budget) {
    if (g.is_directed())
        throw InputError("tree decompositions are defined for undirected graphs");
    const int n = g.vertex_count();
    if (budget < 0) throw InputError("negative budget");
    if (n > budget)
        throw ResourceError("exact_treewidth_small: " + std::to_string(n) +
                            " vertices exceed the budget of " + std::to_string(budget));
    if (n == 0) {
        TreeDecomposition td;
        td.bags.push_back({});
        return td;
    }
    if (n > 24)
        throw ResourceError("exact_treewidth_small: subset DP beyond 24 vertices");

    std::vector<uint32_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }

    // q(S, v): neighbors of v outside S reachable from v through S.
    auto fill_degree = [&](uint32_t eliminated, Vertex v) {
        uint32_t component = 1u << v;
        uint32_t frontier = component;
        while (frontier) {
            uint32_t grow = 0;
            uint32_t f = frontier;
            while (f) {
                int x = std::countr_zero(f);
                f &= f - 1;
                grow |= adj[x];
            }
            grow &= eliminated | (1u << v);
            frontier = grow & ~component;
            component |= grow;
        }
        uint32_t reach = 0;
        uint32_t c = component;
        while (c) {
            int x = std::countr_zero(c);
            c &= c - 1;
            reach |= adj[x];
        }
        return std::popcount(reach & ~eliminated & ~(1u << v));
    };

    const uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    std::vector<int8_t> best(full + 1, 127);
    std::vector<int8_t> choice(full + 1, -1);
    best[0] = -1;
    for (uint32_t mask = 1; mask <= full; ++mask) {
        uint32_t m = mask;
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            uint32_t without = mask & ~(1u << v);
            int width = std::max<int>(best[without], fill_degree(without, v));
            if (width < best[mask]) {
                best[mask] = static_cast<int8_t>(width);
                choice[mask] = static_cast<int8_t>(v);
            }
        }
    }

    std::vector<Vertex> order(n);
    uint32_t mask = full;
    for (int i = n - 1; i >= 0; --i) {
        Vertex v = choice[mask];
        order[i] = v;
        mask &= ~(1u << v);
    }
    return decomposition_from_order(g, order);
}

int treewidth_lower_bound(const Graph& g) {
    if (g.is_directed())
        throw InputError("treewidth bounds are defined for undirected graphs");
    const int n = g.vertex_count();
    std::vector<std::set<Vertex>> work(n);
    for (auto [u, v] : g.edges()) {
        work[u].insert(v);
        work[v].insert(u);
    }
    std::vector<char> gone(n, 0);
    int alive = n;
    int bound = 0;
    while (alive > 1) {
        Vertex v = -1;
        for (Vertex x = 0; x < n; ++x) {
            if (gone[x]) continue;
            if (v < 0 || work[x].size() < work[v].size()) v = x;
        }
        bound = std::max(bound, static_cast<int>(work[v].size()));
        if (work[v].empty()) {
            gone[v] = 1;
            --alive;
            continue;
        }
        // Contract v into the neighbor sharing the fewest common neighbors
        // (least-c rule), ties on the lowest id.
        Vertex into = -1;
        size_t best_common = 0;
        for (Vertex u : work[v]) {
            size_t common = 0;
            for (Vertex w : work[v])
                if (w != u && work[u].count(w)) ++common;
            if (into < 0 || common < best_common) {
                into = u;
                best_common = common;
            }
        }
        for (Vertex w : work[v]) {
            work[w].erase(v);
            if (w != into) {
                work[into].insert(w);
                work[w].insert(into);
            }
        }
        work[v].clear();
        gone[v] = 1;
        --alive;
    }
    return bound;
}

std::string write_td(const TreeDecomposition& td, int host_vertex_count) {
    std::ostringstream out;
    out << "s td " << td.node_count() << ' ' << td.width() + 1 << ' '
        << host_vertex_count << '\n';
    for (int i = 0; i < td.node_count(); ++i) {
        out << "b " << i + 1;
        for (Vertex v : td.bags[i]) out << ' ' << v + 1;
        out << '\n';
    }
    for (auto [a, b] : td.tree_edges) out << a + 1 << ' ' << b + 1 << '\n';
    return out.str();
}

TreeDecomposition read_td(std::istream& in) {
    TreeDecomposition td;
    std::string line;
    int declared_bags = -1;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream row(line);
        std::string tag;
        row >> tag;
        if (tag == "c") continue;
        if (tag == "s") {
            std::string td_tag;
            int width_plus_1, n;
            if (!(row >> td_tag >> declared_bags >> width_plus_1 >> n) || td_tag != "td")
                throw InputError("line " + std::to_string(line_no) +
                                 ": expected 's td <bags> <width+1> <n>'");
            td.bags.assign(declared_bags, {});
            continue;
        }
        if (tag == "b") {
            int id;
            if (!(row >> id) || declared_bags < 0 || id < 1 || id > declared_bags)
                throw InputError("line " + std::to_string(line_no) + ": bad bag line");
            Vertex v;
            while (row >> v) td.bags[id - 1].push_back(v - 1);
            std::sort(td.bags[id - 1].begin(), td.bags[id - 1].end());
            continue;
        }
        std::istringstream edge_row(line);
        int a, b;
        if (!(edge_row >> a >> b))
            throw InputError("line " + std::to_string(line_no) + ": bad tree edge line");
        td.tree_edges.push_back({a - 1, b - 1});
    }
    if (declared_bags < 0) throw InputError("missing 's td' header");
    return td;
}

} // namespace detour
