#include "detour/path_dp.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <unordered_map>

#include "detour/errors.hpp"

namespace detour {

namespace {

// DP states pack per-slot data into 4-bit lanes of a uint64: `deg` holds the
// path-degree (0..2) of each bag slot, `match` holds the slot index of the
// other endpoint of the same partial segment (0xF = unmatched). At most 15
// slots, so slot ids never collide with the 0xF sentinel.
constexpr int kMaxSlots = 15;
constexpr int kNone = 0xF;

int lane(uint64_t w, int slot) { return static_cast<int>((w >> (4 * slot)) & 0xF); }

uint64_t with_lane(uint64_t w, int slot, int value) {
    return (w & ~(0xFull << (4 * slot))) | (static_cast<uint64_t>(value) << (4 * slot));
}

uint64_t insert_lane(uint64_t w, int slot, int value) {
    const uint64_t low = w & ((1ull << (4 * slot)) - 1);
    const uint64_t high = (w >> (4 * slot)) << (4 * (slot + 1));
    return high | (static_cast<uint64_t>(value) << (4 * slot)) | low;
}

uint64_t remove_lane(uint64_t w, int slot) {
    const uint64_t low = w & ((1ull << (4 * slot)) - 1);
    const uint64_t high = (w >> (4 * (slot + 1))) << (4 * slot);
    return high | low;
}

// Renumber match targets after a slot was inserted (delta=+1) or removed
// (delta=-1) at `slot`.
uint64_t shift_match_targets(uint64_t match, int slots, int slot, int delta) {
    for (int i = 0; i < slots; ++i) {
        int m = lane(match, i);
        if (m != kNone && m >= slot) match = with_lane(match, i, m + delta);
    }
    return match;
}

struct NiceNode {
    enum Kind { Leaf, IntroduceVertex, ForgetVertex, IntroduceEdge, Join };
    Kind kind = Leaf;
    std::vector<Vertex> bag; // sorted
    int child_a = -1;
    int child_b = -1;
    Vertex a = -1, b = -1; // introduced/forgotten vertex or edge endpoints
};

struct State {
    uint64_t deg;
    uint64_t match;
    int value;
    int from_a;
    int from_b;
    uint8_t edge_added;
};

struct KeyHash {
    size_t operator()(const std::pair<uint64_t, uint64_t>& k) const {
        uint64_t h = k.first * 0x9e3779b97f4a7c15ull ^ (k.second + 0x517cc1b727220a95ull);
        h ^= h >> 29;
        h *= 0xbf58476d1ce4e5b9ull;
        return static_cast<size_t>(h ^ (h >> 32));
    }
};

class NiceTreeBuilder {
public:
    NiceTreeBuilder(const Graph& g, const TreeDecomposition& td, Vertex s, Vertex t)
        : g_(g), s_(s), t_(t) {
        bags_.resize(td.node_count());
        for (int i = 0; i < td.node_count(); ++i) {
            bags_[i] = td.bags[i];
            for (Vertex v : {s, t})
                if (!std::binary_search(bags_[i].begin(), bags_[i].end(), v))
                    bags_[i].insert(std::lower_bound(bags_[i].begin(), bags_[i].end(), v), v);
            if (static_cast<int>(bags_[i].size()) > kMaxSlots)
                throw ResourceError("path DP supports bags of at most " +
                                    std::to_string(kMaxSlots) + " vertices (incl. s,t)");
        }
        adj_ = td.node_adjacency();
    }

    // Returns the nice node list; root is the last node.
    std::vector<NiceNode> build() {
        int top = build_skeleton();
        top = forget_down_to_terminals(top, bags_root_);
        place_edges(top);
        return std::move(nodes_);
    }

private:
    int add_node(NiceNode node) {
        nodes_.push_back(std::move(node));
        return static_cast<int>(nodes_.size()) - 1;
    }

    int make_leaf() {
        NiceNode node;
        node.kind = NiceNode::Leaf;
        node.bag = terminals();
        return add_node(std::move(node));
    }

    std::vector<Vertex> terminals() const {
        std::vector<Vertex> b{s_, t_};
        std::sort(b.begin(), b.end());
        return b;
    }

    // Chain of forgets and introduces transforming `from` into `to`, stacked
    // on top of nice node `below`. Returns the top node id.
    int transform(int below, const std::vector<Vertex>& from, const std::vector<Vertex>& to) {
        std::vector<Vertex> bag = from;
        int cur = below;
        for (Vertex v : from) {
            if (std::binary_search(to.begin(), to.end(), v)) continue;
            bag.erase(std::find(bag.begin(), bag.end(), v));
            NiceNode node;
            node.kind = NiceNode::ForgetVertex;
            node.bag = bag;
            node.a = v;
            node.child_a = cur;
            forget_node_[v] = static_cast<int>(nodes_.size());
            cur = add_node(std::move(node));
        }
        for (Vertex v : to) {
            if (std::binary_search(from.begin(), from.end(), v)) continue;
            bag.insert(std::lower_bound(bag.begin(), bag.end(), v), v);
            NiceNode node;
            node.kind = NiceNode::IntroduceVertex;
            node.bag = bag;
            node.a = v;
            node.child_a = cur;
            cur = add_node(std::move(node));
        }
        return cur;
    }

    // Post-order construction of the nice tree for the decomposition node
    // `x`; returns the nice node whose bag equals bags_[x].
    int build_for(int x, int parent) {
        std::vector<int> children;
        for (int y : adj_[x])
            if (y != parent) children.push_back(y);
        if (children.empty())
            return transform(make_leaf(), terminals(), bags_[x]);
        int acc = transform(build_for(children[0], x), bags_[children[0]], bags_[x]);
        for (size_t i = 1; i < children.size(); ++i) {
            int rhs = transform(build_for(children[i], x), bags_[children[i]], bags_[x]);
            NiceNode join;
            join.kind = NiceNode::Join;
            join.bag = bags_[x];
            join.child_a = acc;
            join.child_b = rhs;
            acc = add_node(std::move(join));
        }
        return acc;
    }

    int build_skeleton() {
        bags_root_ = bags_[0];
        return build_for(0, -1);
    }

    int forget_down_to_terminals(int top, const std::vector<Vertex>& top_bag) {
        return transform(top, top_bag, terminals());
    }

    // Each edge is introduced exactly once: just below the deeper of its
    // endpoints' forget nodes, where both endpoints are still in the bag.
    void place_edges(int top) {
        std::vector<int> depth(nodes_.size(), 0), parent(nodes_.size(), -1);
        std::vector<int> order;
        order.push_back(top);
        for (size_t i = 0; i < order.size(); ++i) {
            int u = order[i];
            for (int c : {nodes_[u].child_a, nodes_[u].child_b})
                if (c >= 0) {
                    depth[c] = depth[u] + 1;
                    parent[c] = u;
                    order.push_back(c);
                }
        }

        int root = top;
        for (auto [u, v] : g_.edges()) {
            auto fu = forget_node_.find(u);
            auto fv = forget_node_.find(v);
            int site;
            if (fu == forget_node_.end() && fv == forget_node_.end()) {
                // Both endpoints are terminals; hang the edge above the root.
                NiceNode node;
                node.kind = NiceNode::IntroduceEdge;
                node.bag = nodes_[root].bag;
                node.a = u;
                node.b = v;
                node.child_a = root;
                root = add_node(std::move(node));
                continue;
            }
            if (fu == forget_node_.end()) {
                site = fv->second;
            } else if (fv == forget_node_.end()) {
                site = fu->second;
            } else {
                site = depth[fu->second] > depth[fv->second] ? fu->second : fv->second;
            }
            int child = nodes_[site].child_a;
            if (!std::binary_search(nodes_[child].bag.begin(), nodes_[child].bag.end(), u) ||
                !std::binary_search(nodes_[child].bag.begin(), nodes_[child].bag.end(), v))
                throw StructuralError("decomposition does not cover edge " + std::to_string(u) +
                                      "-" + std::to_string(v) + " at its forget site");
            NiceNode node;
            node.kind = NiceNode::IntroduceEdge;
            node.bag = nodes_[child].bag;
            node.a = u;
            node.b = v;
            node.child_a = child;
            int id = add_node(std::move(node));
            nodes_[site].child_a = id;
        }
        root_ = root;
    }

public:
    int root() const { return root_; }

private:
    const Graph& g_;
    Vertex s_, t_;
    std::vector<std::vector<Vertex>> bags_;
    std::vector<std::vector<int>> adj_;
    std::vector<Vertex> bags_root_;
    std::vector<NiceNode> nodes_;
    std::map<Vertex, int> forget_node_;
    int root_ = -1;
};

class PathDp {
public:
    PathDp(const Graph& g, std::vector<NiceNode> nodes, int root, Vertex s, Vertex t)
        : g_(g), nodes_(std::move(nodes)), root_(root), s_(s), t_(t) {}

    std::optional<Path> run() {
        table_.resize(nodes_.size());
        std::vector<int> order = post_order();
        for (int id : order) process(id);

        const auto& root_node = nodes_[root_];
        int slot_s = slot_of(root_node.bag, s_);
        int slot_t = slot_of(root_node.bag, t_);
        int best = -1, best_value = -1;
        const auto& states = table_[root_];
        for (size_t i = 0; i < states.size(); ++i) {
            const State& st = states[i];
            if (lane(st.deg, slot_s) == 1 && lane(st.deg, slot_t) == 1 &&
                lane(st.match, slot_s) == slot_t && st.value > best_value) {
                best_value = st.value;
                best = static_cast<int>(i);
            }
        }
        if (best < 0) return std::nullopt;
        return reconstruct(best);
    }

private:
    static int slot_of(const std::vector<Vertex>& bag, Vertex v) {
        return static_cast<int>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
    }

    int cap(Vertex v) const { return (v == s_ || v == t_) ? 1 : 2; }

    std::vector<int> post_order() const {
        std::vector<int> order, stack{root_};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            order.push_back(u);
            for (int c : {nodes_[u].child_a, nodes_[u].child_b})
                if (c >= 0) stack.push_back(c);
        }
        std::reverse(order.begin(), order.end());
        return order;
    }

    void emit(std::vector<State>& out,
              std::unordered_map<std::pair<uint64_t, uint64_t>, int, KeyHash>& index,
              State st) {
        auto key = std::make_pair(st.deg, st.match);
        auto [it, inserted] = index.try_emplace(key, static_cast<int>(out.size()));
        if (inserted) {
            out.push_back(st);
        } else if (st.value > out[it->second].value) {
            out[it->second] = st;
        }
    }

    void process(int id) {
        const NiceNode& node = nodes_[id];
        std::vector<State> out;
        std::unordered_map<std::pair<uint64_t, uint64_t>, int, KeyHash> index;
        switch (node.kind) {
        case NiceNode::Leaf: {
            State st{0, with_lane(with_lane(0, 0, kNone), 1, kNone), 0, -1, -1, 0};
            out.push_back(st);
            break;
        }
        case NiceNode::IntroduceVertex: {
            const int slot = slot_of(node.bag, node.a);
            const int child_slots = static_cast<int>(nodes_[node.child_a].bag.size());
            for (size_t i = 0; i < table_[node.child_a].size(); ++i) {
                const State& c = table_[node.child_a][i];
                State st;
                st.deg = insert_lane(c.deg, slot, 0);
                st.match = insert_lane(shift_match_targets(c.match, child_slots, slot, +1),
                                       slot, kNone);
                st.value = c.value;
                st.from_a = static_cast<int>(i);
                st.from_b = -1;
                st.edge_added = 0;
                emit(out, index, st);
            }
            break;
        }
        case NiceNode::ForgetVertex: {
            const auto& child_bag = nodes_[node.child_a].bag;
            const int slot = slot_of(child_bag, node.a);
            const int child_slots = static_cast<int>(child_bag.size());
            for (size_t i = 0; i < table_[node.child_a].size(); ++i) {
                const State& c = table_[node.child_a][i];
                const int d = lane(c.deg, slot);
                if (d == 1) continue; // a dangling segment end may not leave the bag
                State st;
                st.deg = remove_lane(c.deg, slot);
                st.match = remove_lane(shift_match_targets(c.match, child_slots, slot, -1), slot);
                st.value = c.value;
                st.from_a = static_cast<int>(i);
                st.from_b = -1;
                st.edge_added = 0;
                emit(out, index, st);
            }
            break;
        }
        case NiceNode::IntroduceEdge: {
            const int su = slot_of(node.bag, node.a);
            const int sv = slot_of(node.bag, node.b);
            for (size_t i = 0; i < table_[node.child_a].size(); ++i) {
                const State& c = table_[node.child_a][i];
                State keep = c;
                keep.from_a = static_cast<int>(i);
                keep.from_b = -1;
                keep.edge_added = 0;
                emit(out, index, keep);

                const int du = lane(c.deg, su), dv = lane(c.deg, sv);
                if (du >= cap(node.a) || dv >= cap(node.b)) continue;
                if (du == 1 && dv == 1 && lane(c.match, su) == sv) continue; // cycle
                const int eu = du == 1 ? lane(c.match, su) : su;
                const int ev = dv == 1 ? lane(c.match, sv) : sv;
                State st;
                st.deg = with_lane(with_lane(c.deg, su, du + 1), sv, dv + 1);
                uint64_t m = c.match;
                if (du == 1) m = with_lane(m, su, kNone);
                if (dv == 1) m = with_lane(m, sv, kNone);
                m = with_lane(m, eu, ev);
                m = with_lane(m, ev, eu);
                st.match = m;
                st.value = c.value + 1;
                st.from_a = static_cast<int>(i);
                st.from_b = -1;
                st.edge_added = 1;
                emit(out, index, st);
            }
            break;
        }
        case NiceNode::Join: {
            join(node, out, index);
            break;
        }
        }
        table_[id] = std::move(out);
    }

    void join(const NiceNode& node, std::vector<State>& out,
              std::unordered_map<std::pair<uint64_t, uint64_t>, int, KeyHash>& index) {
        const auto& left = table_[node.child_a];
        const auto& right = table_[node.child_b];
        const int slots = static_cast<int>(node.bag.size());
        const int slot_s = slot_of(node.bag, s_);
        const int slot_t = slot_of(node.bag, t_);
        constexpr uint64_t kOnes = 0x1111111111111111ull;
        const uint64_t lane_mask = (slots == 16) ? ~0ull : ((1ull << (4 * slots)) - 1);

        for (size_t li = 0; li < left.size(); ++li) {
            const State& a = left[li];
            for (size_t ri = 0; ri < right.size(); ++ri) {
                const State& b = right[ri];
                const uint64_t sum = (a.deg + b.deg) & lane_mask;
                // any lane >= 3 is over-used (values 3 or 4)
                if ((sum & (kOnes << 2)) != 0) continue;
                if ((((sum >> 1) & sum) & kOnes) != 0) continue;
                if (lane(sum, slot_s) > 1 || lane(sum, slot_t) > 1) continue;

                uint64_t match;
                if (!compose(a.match, b.match, slots, match)) continue;
                State st;
                st.deg = sum;
                st.match = match;
                st.value = a.value + b.value;
                st.from_a = static_cast<int>(li);
                st.from_b = static_cast<int>(ri);
                st.edge_added = 0;
                emit(out, index, st);
            }
        }
    }

    // Merge two segment pairings. Chains a-b (left) and b-c (right) fuse into
    // a-c; any closed loop means the union contains a cycle and the pair of
    // states is incompatible.
    static bool compose(uint64_t m1, uint64_t m2, int slots, uint64_t& result) {
        int8_t p1[kMaxSlots + 1], p2[kMaxSlots + 1];
        bool visited[kMaxSlots + 1] = {};
        int hdeg_total = 0;
        for (int i = 0; i < slots; ++i) {
            int a = lane(m1, i), b = lane(m2, i);
            p1[i] = static_cast<int8_t>(a == kNone ? -1 : a);
            p2[i] = static_cast<int8_t>(b == kNone ? -1 : b);
            hdeg_total += (a != kNone) + (b != kNone);
        }
        uint64_t match = 0;
        for (int i = 0; i < slots; ++i) match = with_lane(match, i, kNone);

        int consumed = 0;
        for (int start = 0; start < slots; ++start) {
            const int hdeg = (p1[start] >= 0) + (p2[start] >= 0);
            if (visited[start] || hdeg != 1) continue;
            // walk the chain, alternating pairing sides
            int cur = start;
            bool use_first = p1[start] >= 0;
            visited[start] = 1;
            while (true) {
                int next = use_first ? p1[cur] : p2[cur];
                ++consumed; // one pairing edge traversed
                visited[next] = 1;
                const int next_hdeg = (p1[next] >= 0) + (p2[next] >= 0);
                if (next_hdeg == 1) {
                    match = with_lane(match, start, next);
                    match = with_lane(match, next, start);
                    break;
                }
                cur = next;
                use_first = !use_first;
            }
        }
        // every pairing edge must sit on a walked chain; leftovers are cycles
        if (2 * consumed != hdeg_total) return false;
        result = match;
        return true;
    }

    Path reconstruct(int root_state) {
        std::vector<std::pair<Vertex, Vertex>> picked;
        std::vector<std::pair<int, int>> stack{{root_, root_state}};
        while (!stack.empty()) {
            auto [id, si] = stack.back();
            stack.pop_back();
            const NiceNode& node = nodes_[id];
            const State& st = table_[id][si];
            switch (node.kind) {
            case NiceNode::Leaf:
                break;
            case NiceNode::IntroduceVertex:
            case NiceNode::ForgetVertex:
                stack.push_back({node.child_a, st.from_a});
                break;
            case NiceNode::IntroduceEdge:
                if (st.edge_added) picked.push_back({node.a, node.b});
                stack.push_back({node.child_a, st.from_a});
                break;
            case NiceNode::Join:
                stack.push_back({node.child_a, st.from_a});
                stack.push_back({node.child_b, st.from_b});
                break;
            }
        }

        // The picked edges form exactly one (s,t)-path; stitch it together.
        std::vector<std::vector<Vertex>> incident(g_.vertex_count());
        for (auto [u, v] : picked) {
            incident[u].push_back(v);
            incident[v].push_back(u);
        }
        Path path;
        path.vertices.push_back(s_);
        Vertex prev = -1, cur = s_;
        while (cur != t_) {
            Vertex next = -1;
            for (Vertex cand : incident[cur])
                if (cand != prev) {
                    next = cand;
                    break;
                }
            if (next < 0 || path.vertices.size() > picked.size() + 1)
                throw ConsistencyError("path DP reconstruction produced a non-path");
            path.vertices.push_back(next);
            prev = cur;
            cur = next;
        }
        if (path.length() != static_cast<int>(picked.size()) || !path.valid_in(g_))
            throw ConsistencyError("path DP reconstruction is inconsistent");
        return path;
    }

    const Graph& g_;
    std::vector<NiceNode> nodes_;
    int root_;
    Vertex s_, t_;
    std::vector<std::vector<State>> table_;
};

} // namespace

std::optional<Path> longest_st_path(const Graph& g, const TreeDecomposition& td,
                                    Vertex s, Vertex t) {
    if (g.is_directed()) throw InputError("longest_st_path requires an undirected graph");
    g.check_vertex(s, "s");
    g.check_vertex(t, "t");
    if (s == t) throw InputError("longest_st_path requires s != t");
    ValidityReport report = validate_decomposition(g, td);
    if (!report.valid())
        throw StructuralError("invalid tree decomposition: " + report.describe());
    if (!bfs_layers(g, s).reached(t)) return std::nullopt;

    NiceTreeBuilder builder(g, td, s, t);
    std::vector<NiceNode> nodes = builder.build();
    return PathDp(g, std::move(nodes), builder.root(), s, t).run();
}

} // namespace detour
