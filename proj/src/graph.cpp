#include "bisect/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace bisect {

WeightedMultigraph::WeightedMultigraph(int n) : n_(n), incident_(static_cast<size_t>(n)) {
    require(n >= 0, ErrorKind::ParseError, "negative vertex count");
}

int WeightedMultigraph::add_edge(int u, int v, Rational w) {
    require(u >= 0 && u < n_ && v >= 0 && v < n_, ErrorKind::MalformedStructure,
            "edge endpoint out of range");
    require(u != v, ErrorKind::MalformedStructure, "self-loops are not allowed");
    require(w >= 0, ErrorKind::MalformedStructure, "negative edge weight");
    int id = static_cast<int>(edges_.size());
    edges_.push_back(Edge{id, u, v, std::move(w)});
    incident_[static_cast<size_t>(u)].push_back(id);
    incident_[static_cast<size_t>(v)].push_back(id);
    return id;
}

int WeightedMultigraph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

Rational WeightedMultigraph::total_weight() const {
    Rational total = 0;
    for (const Edge& e : edges_) total += e.w;
    return total;
}

bool WeightedMultigraph::adjacent(int u, int v) const {
    for (int id : incident(u))
        if (edge(id).opposite(u) == v) return true;
    return false;
}

std::optional<int> WeightedMultigraph::edge_between(int u, int v) const {
    std::optional<int> best;
    for (int id : incident(u))
        if (edge(id).opposite(u) == v && (!best || id < *best)) best = id;
    return best;
}

std::vector<int> WeightedMultigraph::edges_between(int u, int v) const {
    std::vector<int> ids;
    for (int id : incident(u))
        if (edge(id).opposite(u) == v) ids.push_back(id);
    std::sort(ids.begin(), ids.end());
    return ids;
}

std::vector<int> WeightedMultigraph::neighbors(int v) const {
    std::set<int> out;
    for (int id : incident(v)) out.insert(edge(id).opposite(v));
    return {out.begin(), out.end()};
}

bool WeightedMultigraph::is_simple() const {
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : edges_) {
        auto key = std::minmax(e.u, e.v);
        if (!seen.insert({key.first, key.second}).second) return false;
    }
    return true;
}

bool WeightedMultigraph::is_triangle_free() const {
    for (const Edge& e : edges_) {
        auto nu = neighbors(e.u);
        for (int w : nu) {
            if (w == e.v) continue;
            if (adjacent(w, e.v)) return false;
        }
    }
    return true;
}

bool WeightedMultigraph::is_connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(static_cast<size_t>(n_), 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int id : incident(v)) {
            int w = edge(id).opposite(v);
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n_;
}

bool Matching::contains(int id) const {
    return std::binary_search(edge_ids.begin(), edge_ids.end(), id);
}

Rational Matching::weight(const WeightedMultigraph& g) const {
    Rational total = 0;
    for (int id : edge_ids) total += g.edge(id).w;
    return total;
}

bool is_matching(const WeightedMultigraph& g, const std::vector<int>& edge_ids) {
    std::vector<char> used(static_cast<size_t>(g.vertex_count()), 0);
    for (int id : edge_ids) {
        if (id < 0 || id >= g.edge_count()) return false;
        const Edge& e = g.edge(id);
        if (used[static_cast<size_t>(e.u)] || used[static_cast<size_t>(e.v)]) return false;
        used[static_cast<size_t>(e.u)] = used[static_cast<size_t>(e.v)] = 1;
    }
    return true;
}

bool is_perfect_matching(const WeightedMultigraph& g, const Matching& m) {
    return is_matching(g, m.edge_ids) &&
           static_cast<int>(m.edge_ids.size()) * 2 == g.vertex_count();
}

namespace {

// Iterative lowpoint DFS; a tree edge is a bridge iff no back edge (by a
// different edge id) jumps over it.
struct BridgeDfs {
    const WeightedMultigraph& g;
    std::vector<int> disc, low;
    std::vector<char> is_bridge;
    int timer = 0;

    explicit BridgeDfs(const WeightedMultigraph& graph)
        : g(graph),
          disc(static_cast<size_t>(graph.vertex_count()), -1),
          low(static_cast<size_t>(graph.vertex_count()), -1),
          is_bridge(static_cast<size_t>(graph.edge_count()), 0) {}

    void run(int root) {
        struct Frame {
            int v;
            int parent_edge;
            size_t next;
        };
        std::vector<Frame> stack;
        disc[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = timer++;
        stack.push_back({root, -1, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& inc = g.incident(f.v);
            if (f.next < inc.size()) {
                int id = inc[f.next++];
                if (id == f.parent_edge) continue;
                int w = g.edge(id).opposite(f.v);
                if (disc[static_cast<size_t>(w)] == -1) {
                    disc[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = timer++;
                    stack.push_back({w, id, 0});
                } else {
                    low[static_cast<size_t>(f.v)] =
                        std::min(low[static_cast<size_t>(f.v)], disc[static_cast<size_t>(w)]);
                }
            } else {
                int v = f.v;
                int pe = f.parent_edge;
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back().v;
                    low[static_cast<size_t>(p)] =
                        std::min(low[static_cast<size_t>(p)], low[static_cast<size_t>(v)]);
                    if (low[static_cast<size_t>(v)] > disc[static_cast<size_t>(p)])
                        is_bridge[static_cast<size_t>(pe)] = 1;
                }
            }
        }
    }
};

}  // namespace

BridgeInfo bridges_and_2ecc(const WeightedMultigraph& g) {
    BridgeDfs dfs(g);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (dfs.disc[static_cast<size_t>(v)] == -1) dfs.run(v);

    BridgeInfo info;
    for (const Edge& e : g.edges())
        if (dfs.is_bridge[static_cast<size_t>(e.id)]) info.bridge_edges.push_back(e.id);

    info.component_of.assign(static_cast<size_t>(g.vertex_count()), -1);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (info.component_of[static_cast<size_t>(v)] != -1) continue;
        int comp = info.component_count++;
        std::vector<int> stack = {v};
        info.component_of[static_cast<size_t>(v)] = comp;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int id : g.incident(x)) {
                if (dfs.is_bridge[static_cast<size_t>(id)]) continue;
                int w = g.edge(id).opposite(x);
                if (info.component_of[static_cast<size_t>(w)] == -1) {
                    info.component_of[static_cast<size_t>(w)] = comp;
                    stack.push_back(w);
                }
            }
        }
    }
    return info;
}

ContractedGraph contract_matching(const WeightedMultigraph& g, const Matching& m) {
    require(is_perfect_matching(g, m), ErrorKind::NotPerfect,
            "contract_matching needs a perfect matching");
    ContractedGraph result{WeightedMultigraph(static_cast<int>(m.edge_ids.size())), {}, {}, {}};
    result.contracted_of.assign(static_cast<size_t>(g.vertex_count()), -1);
    for (int id : m.edge_ids) {
        const Edge& e = g.edge(id);
        auto ab = std::minmax(e.u, e.v);
        int cv = static_cast<int>(result.pair_of.size());
        result.pair_of.push_back({ab.first, ab.second});
        result.contracted_of[static_cast<size_t>(e.u)] = cv;
        result.contracted_of[static_cast<size_t>(e.v)] = cv;
    }
    std::map<std::pair<int, int>, std::vector<int>> cross;
    for (const Edge& e : g.edges()) {
        if (m.contains(e.id)) continue;
        int cu = result.contracted_of[static_cast<size_t>(e.u)];
        int cv = result.contracted_of[static_cast<size_t>(e.v)];
        if (cu == cv) continue;  // a parallel copy of a matched edge
        cross[std::minmax(cu, cv)].push_back(e.id);
    }
    for (auto& [key, ids] : cross) {
        Rational w = 0;
        std::sort(ids.begin(), ids.end());
        for (int id : ids) w += g.edge(id).w;
        result.graph.add_edge(key.first, key.second, w);
        result.cross_edge_ids.push_back(ids);
    }
    return result;
}

CyclePathStructure cycle_path_decomposition(const WeightedMultigraph& g, const Matching& m) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (const Edge& e : g.edges()) {
        if (m.contains(e.id)) continue;
        adj[static_cast<size_t>(e.u)].push_back(e.id);
        adj[static_cast<size_t>(e.v)].push_back(e.id);
    }
    for (int v = 0; v < n; ++v)
        require(adj[static_cast<size_t>(v)].size() <= 2, ErrorKind::MalformedStructure,
                "vertex of degree > 2 outside the matching");

    CyclePathStructure out;
    std::vector<char> seen(static_cast<size_t>(n), 0);

    auto walk = [&](int start, int first_edge) {
        std::vector<int> order = {start};
        seen[static_cast<size_t>(start)] = 1;
        int prev_edge = first_edge;
        int cur = g.edge(first_edge).opposite(start);
        while (cur != start) {
            order.push_back(cur);
            seen[static_cast<size_t>(cur)] = 1;
            int next_edge = -1;
            for (int id : adj[static_cast<size_t>(cur)])
                if (id != prev_edge) next_edge = id;
            if (next_edge == -1) break;
            prev_edge = next_edge;
            cur = g.edge(next_edge).opposite(cur);
        }
        return std::make_pair(order, cur == start);
    };

    // Paths first, from degree-1 endpoints.
    for (int v = 0; v < n; ++v) {
        if (seen[static_cast<size_t>(v)] || adj[static_cast<size_t>(v)].size() != 1) continue;
        auto [order, closed] = walk(v, adj[static_cast<size_t>(v)][0]);
        require(!closed, ErrorKind::MalformedStructure, "walk from degree-1 vertex closed");
        require(out.path.empty(), ErrorKind::MalformedStructure,
                "more than one path outside the matching");
        out.path = order;
    }
    for (int v = 0; v < n; ++v) {
        if (seen[static_cast<size_t>(v)]) continue;
        if (adj[static_cast<size_t>(v)].empty()) {
            out.isolated_vertices.push_back(v);
            seen[static_cast<size_t>(v)] = 1;
            continue;
        }
        auto [order, closed] = walk(v, adj[static_cast<size_t>(v)][0]);
        require(closed, ErrorKind::MalformedStructure, "open walk from degree-2 vertex");
        out.cycles.push_back(order);
    }
    return out;
}

Subgraph induced_subgraph(const WeightedMultigraph& g, const std::vector<int>& vertices) {
    Subgraph out{WeightedMultigraph(static_cast<int>(vertices.size())), vertices, {}, {}};
    out.local_vertex.assign(static_cast<size_t>(g.vertex_count()), -1);
    for (size_t i = 0; i < vertices.size(); ++i)
        out.local_vertex[static_cast<size_t>(vertices[i])] = static_cast<int>(i);
    for (const Edge& e : g.edges()) {
        int lu = out.local_vertex[static_cast<size_t>(e.u)];
        int lv = out.local_vertex[static_cast<size_t>(e.v)];
        if (lu == -1 || lv == -1) continue;
        out.graph.add_edge(lu, lv, e.w);
        out.host_edge.push_back(e.id);
    }
    return out;
}

}  // namespace bisect
