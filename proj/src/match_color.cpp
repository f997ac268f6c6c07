#include "bisect/match_color.hpp"

#include <algorithm>
#include <map>

namespace bisect {

bool is_proper_coloring(const WeightedMultigraph& g, const EdgeColoring& coloring) {
    if (coloring.color_of.size() != static_cast<size_t>(g.edge_count())) return false;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<char> seen(static_cast<size_t>(coloring.color_count), 0);
        for (int id : g.incident(v)) {
            int c = coloring.color_of[static_cast<size_t>(id)];
            if (c < 0 || c >= coloring.color_count || seen[static_cast<size_t>(c)]) return false;
            seen[static_cast<size_t>(c)] = 1;
        }
    }
    return true;
}

namespace {

struct MatchSearch {
    const WeightedMultigraph& g;
    std::vector<char> used;
    std::vector<int> current, best;
    Rational current_w = 0, best_w = 0;
    std::vector<Rational> best_incident;  // plain upper-bound helper

    explicit MatchSearch(const WeightedMultigraph& graph)
        : g(graph), used(static_cast<size_t>(graph.vertex_count()), 0) {
        best_incident.resize(static_cast<size_t>(g.vertex_count()), Rational(0));
        for (int v = 0; v < g.vertex_count(); ++v)
            for (int id : g.incident(v))
                best_incident[static_cast<size_t>(v)] =
                    std::max(best_incident[static_cast<size_t>(v)], g.edge(id).w);
    }

    Rational upper_bound() const {
        Rational ub = 0;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (!used[static_cast<size_t>(v)]) ub += best_incident[static_cast<size_t>(v)];
        return ub / 2;
    }

    void run(int from) {
        int v = from;
        while (v < g.vertex_count() && used[static_cast<size_t>(v)]) ++v;
        if (current_w > best_w) {
            best_w = current_w;
            best = current;
        }
        if (v == g.vertex_count()) return;
        if (current_w + upper_bound() <= best_w) return;

        used[static_cast<size_t>(v)] = 1;
        for (int id : g.incident(v)) {
            const Edge& e = g.edge(id);
            int other = e.opposite(v);
            if (used[static_cast<size_t>(other)]) continue;
            used[static_cast<size_t>(other)] = 1;
            current.push_back(id);
            current_w += e.w;
            run(v + 1);
            current_w -= e.w;
            current.pop_back();
            used[static_cast<size_t>(other)] = 0;
        }
        run(v + 1);  // leave v unmatched
        used[static_cast<size_t>(v)] = 0;
    }
};

}  // namespace

Matching max_weight_matching(const WeightedMultigraph& g) {
    MatchSearch search(g);
    search.run(0);
    std::sort(search.best.begin(), search.best.end());
    return Matching{search.best};
}

namespace {

constexpr int kNoColor = -1;

struct Vizing {
    const WeightedMultigraph& g;
    int max_colors;
    std::vector<int> color;                 // per edge
    std::vector<std::vector<int>> at;       // at[v][c] = edge id or -1

    explicit Vizing(const WeightedMultigraph& graph)
        : g(graph),
          max_colors(graph.max_degree() + 1),
          color(static_cast<size_t>(graph.edge_count()), kNoColor),
          at(static_cast<size_t>(graph.vertex_count()),
             std::vector<int>(static_cast<size_t>(std::max(1, graph.max_degree() + 1)), -1)) {}

    bool free_at(int v, int c) const { return at[static_cast<size_t>(v)][static_cast<size_t>(c)] == -1; }

    int smallest_free(int v) const {
        for (int c = 0; c < max_colors; ++c)
            if (free_at(v, c)) return c;
        fail(ErrorKind::AssertionFailed, "no free color at vertex");
    }

    void set_color(int eid, int c) {
        const Edge& e = g.edge(eid);
        int old = color[static_cast<size_t>(eid)];
        if (old != kNoColor) {
            at[static_cast<size_t>(e.u)][static_cast<size_t>(old)] = -1;
            at[static_cast<size_t>(e.v)][static_cast<size_t>(old)] = -1;
        }
        color[static_cast<size_t>(eid)] = c;
        if (c != kNoColor) {
            at[static_cast<size_t>(e.u)][static_cast<size_t>(c)] = eid;
            at[static_cast<size_t>(e.v)][static_cast<size_t>(c)] = eid;
        }
    }

    // Flip colors c/d along the maximal alternating path starting at v.
    void invert_path(int v, int c, int d) {
        int cur = v;
        int want = c;
        std::vector<std::pair<int, int>> path;  // (edge, new color)
        while (true) {
            int eid = at[static_cast<size_t>(cur)][static_cast<size_t>(want)];
            if (eid == -1) break;
            path.push_back({eid, want == c ? d : c});
            cur = g.edge(eid).opposite(cur);
            want = (want == c) ? d : c;
        }
        for (auto& [eid, nc] : path) set_color(eid, kNoColor);
        for (auto& [eid, nc] : path) set_color(eid, nc);
    }

    void color_edge(int eid) {
        const Edge& e = g.edge(eid);
        int u = e.u, v = e.v;

        // Take the smallest color free at both ends when one exists; the fan
        // machinery is only needed when the free sets are disjoint.
        for (int c = 0; c < max_colors; ++c)
            if (free_at(u, c) && free_at(v, c)) {
                set_color(eid, c);
                return;
            }

        // Maximal fan of u starting at v; extend by the smallest usable color.
        std::vector<int> fan_vertex = {v};
        std::vector<int> fan_edge = {eid};
        std::vector<char> in_fan(static_cast<size_t>(g.vertex_count()), 0);
        in_fan[static_cast<size_t>(v)] = 1;
        while (true) {
            int last = fan_vertex.back();
            int pick_edge = -1, pick_color = max_colors;
            for (int c = 0; c < max_colors; ++c) {
                if (!free_at(last, c)) continue;
                int cand = at[static_cast<size_t>(u)][static_cast<size_t>(c)];
                if (cand == -1) continue;
                int w = g.edge(cand).opposite(u);
                if (in_fan[static_cast<size_t>(w)]) continue;
                if (c < pick_color) {
                    pick_color = c;
                    pick_edge = cand;
                }
            }
            if (pick_edge == -1) break;
            fan_vertex.push_back(g.edge(pick_edge).opposite(u));
            fan_edge.push_back(pick_edge);
            in_fan[static_cast<size_t>(fan_vertex.back())] = 1;
        }

        int c = smallest_free(u);
        int d = smallest_free(fan_vertex.back());
        if (c != d) invert_path(u, d, c);
        // After inversion d is free at u; find the first fan vertex where d is
        // free and rotate the fan prefix onto it.
        size_t w = 0;
        while (w < fan_vertex.size() && !free_at(fan_vertex[w], d)) ++w;
        require(w < fan_vertex.size(), ErrorKind::AssertionFailed, "fan rotation failed");
        std::vector<int> rotated(w + 1);
        for (size_t i = 0; i < w; ++i) rotated[i] = color[static_cast<size_t>(fan_edge[i + 1])];
        rotated[w] = d;
        for (size_t i = 0; i <= w; ++i) set_color(fan_edge[i], kNoColor);
        for (size_t i = 0; i <= w; ++i) set_color(fan_edge[i], rotated[i]);
    }
};

}  // namespace

EdgeColoring vizing_color(const WeightedMultigraph& g) {
    require(g.is_simple(), ErrorKind::NotSimple, "vizing_color needs a simple graph");
    Vizing vz(g);
    for (int eid = 0; eid < g.edge_count(); ++eid) vz.color_edge(eid);
    EdgeColoring out;
    out.color_of = vz.color;
    int used = 0;
    for (int c : vz.color) used = std::max(used, c + 1);
    out.color_count = used;
    require(is_proper_coloring(g, out), ErrorKind::AssertionFailed, "vizing produced improper coloring");
    require(out.color_count <= g.max_degree() + 1, ErrorKind::AssertionFailed,
            "vizing exceeded Delta+1 colors");
    return out;
}

Matching heaviest_color_class(const WeightedMultigraph& g, const EdgeColoring& coloring) {
    require(is_proper_coloring(g, coloring), ErrorKind::ImproperColoring,
            "coloring is not proper for this graph");
    if (coloring.color_count == 0) return Matching{};
    std::vector<Rational> class_weight(static_cast<size_t>(coloring.color_count), Rational(0));
    for (const Edge& e : g.edges())
        class_weight[static_cast<size_t>(coloring.color_of[static_cast<size_t>(e.id)])] += e.w;
    int best = 0;
    for (int c = 1; c < coloring.color_count; ++c)
        if (class_weight[static_cast<size_t>(c)] > class_weight[static_cast<size_t>(best)]) best = c;
    Matching m;
    for (const Edge& e : g.edges())
        if (coloring.color_of[static_cast<size_t>(e.id)] == best) m.edge_ids.push_back(e.id);
    return m;
}

namespace {

bool perfect_matching_search(const WeightedMultigraph& g, std::vector<char>& used,
                             std::vector<int>& out) {
    int v = 0;
    while (v < g.vertex_count() && used[static_cast<size_t>(v)]) ++v;
    if (v == g.vertex_count()) return true;
    // Dead-end prune: some free vertex with no free neighbour.
    for (int x = v; x < g.vertex_count(); ++x) {
        if (used[static_cast<size_t>(x)]) continue;
        bool has_free = false;
        for (int id : g.incident(x))
            if (!used[static_cast<size_t>(g.edge(id).opposite(x))]) {
                has_free = true;
                break;
            }
        if (!has_free) return false;
    }
    used[static_cast<size_t>(v)] = 1;
    for (int id : g.incident(v)) {
        int other = g.edge(id).opposite(v);
        if (used[static_cast<size_t>(other)]) continue;
        used[static_cast<size_t>(other)] = 1;
        out.push_back(id);
        if (perfect_matching_search(g, used, out)) return true;
        out.pop_back();
        used[static_cast<size_t>(other)] = 0;
    }
    used[static_cast<size_t>(v)] = 0;
    return false;
}

}  // namespace

std::optional<Matching> perfect_matching(const WeightedMultigraph& g) {
    if (g.vertex_count() % 2 != 0) return std::nullopt;
    std::vector<char> used(static_cast<size_t>(g.vertex_count()), 0);
    std::vector<int> out;
    if (!perfect_matching_search(g, used, out)) return std::nullopt;
    std::sort(out.begin(), out.end());
    return Matching{out};
}

Matching forced_perfect_matching(const WeightedMultigraph& g, int forced_edge) {
    require(forced_edge >= 0 && forced_edge < g.edge_count(), ErrorKind::PreconditionViolated,
            "forced edge id out of range");
    for (int v = 0; v < g.vertex_count(); ++v)
        require(g.degree(v) == 3, ErrorKind::PreconditionViolated,
                "forced_perfect_matching needs a cubic multigraph");

    // Group parallel edges. Pairs with two copies get the 2-vertex gadget;
    // triple pairs collapse to a single mandatory edge.
    std::map<std::pair<int, int>, std::vector<int>> parallel;
    for (const Edge& e : g.edges()) parallel[std::minmax(e.u, e.v)].push_back(e.id);
    for (auto& [key, ids] : parallel) std::sort(ids.begin(), ids.end());

    struct GadgetPair {
        int x, y;            // host endpoints
        int vxy, wxy;        // gadget vertices
        std::vector<int> host_ids;
    };
    std::vector<GadgetPair> gadgets;
    int extra = 0;
    for (auto& [key, ids] : parallel)
        if (ids.size() == 2) extra += 2;
    WeightedMultigraph gp(g.vertex_count() + extra);
    std::vector<int> host_of_gp_edge;  // host edge id or -1 for gadget-internal
    int next_vertex = g.vertex_count();
    int forced_gp = -1;
    for (auto& [key, ids] : parallel) {
        if (ids.size() == 1) {
            int id = gp.add_edge(key.first, key.second, g.edge(ids[0]).w);
            host_of_gp_edge.push_back(ids[0]);
            if (ids[0] == forced_edge) forced_gp = id;
        } else if (ids.size() == 2) {
            GadgetPair gd;
            gd.x = key.first;
            gd.y = key.second;
            gd.vxy = next_vertex++;
            gd.wxy = next_vertex++;
            gd.host_ids = ids;
            int exv = gp.add_edge(gd.x, gd.vxy, 0);
            host_of_gp_edge.push_back(-1);
            gp.add_edge(gd.x, gd.wxy, 0);
            host_of_gp_edge.push_back(-1);
            gp.add_edge(gd.y, gd.vxy, 0);
            host_of_gp_edge.push_back(-1);
            gp.add_edge(gd.y, gd.wxy, 0);
            host_of_gp_edge.push_back(-1);
            gp.add_edge(gd.vxy, gd.wxy, 0);
            host_of_gp_edge.push_back(-1);
            if (ids[0] == forced_edge || ids[1] == forced_edge) forced_gp = exv;  // force x-v_xy
            gadgets.push_back(gd);
        } else if (ids.size() == 3) {
            // Triple pair: x and y are matched to each other in any perfect
            // matching; keep one mandatory edge in the gadget graph.
            int id = gp.add_edge(key.first, key.second, 0);
            host_of_gp_edge.push_back(ids.front());
            if (std::find(ids.begin(), ids.end(), forced_edge) != ids.end()) {
                host_of_gp_edge.back() = forced_edge;
                forced_gp = id;
            }
        } else {
            fail(ErrorKind::PreconditionViolated, "more than three parallel edges");
        }
    }
    require(forced_gp != -1, ErrorKind::AssertionFailed, "forced edge lost in gadget build");

    // Perfect matching of gp containing forced_gp: delete its endpoints and
    // match the rest.
    const Edge& fe = gp.edge(forced_gp);
    std::vector<int> keep;
    for (int v = 0; v < gp.vertex_count(); ++v)
        if (v != fe.u && v != fe.v) keep.push_back(v);
    Subgraph rest = induced_subgraph(gp, keep);
    auto sub = perfect_matching(rest.graph);
    require(sub.has_value(), ErrorKind::PreconditionViolated,
            "no perfect matching through the edge; input was not bridgeless cubic");
    std::vector<int> gp_matching = {forced_gp};
    for (int id : sub->edge_ids) gp_matching.push_back(rest.host_edge[static_cast<size_t>(id)]);

    // Translate back per the two bullet rules.
    std::vector<char> in_gp(static_cast<size_t>(gp.edge_count()), 0);
    for (int id : gp_matching) in_gp[static_cast<size_t>(id)] = 1;
    std::vector<int> result;
    for (int id : gp_matching) {
        int host = host_of_gp_edge[static_cast<size_t>(id)];
        if (host != -1) result.push_back(host);
    }
    for (const GadgetPair& gd : gadgets) {
        auto matched = [&](int a, int b) {
            auto e = gp.edge_between(a, b);
            return e && in_gp[static_cast<size_t>(*e)];
        };
        bool cross = (matched(gd.x, gd.vxy) && matched(gd.y, gd.wxy)) ||
                     (matched(gd.x, gd.wxy) && matched(gd.y, gd.vxy));
        if (cross) {
            bool is_forced = gd.host_ids[0] == forced_edge || gd.host_ids[1] == forced_edge;
            result.push_back(is_forced ? forced_edge : gd.host_ids.front());
        }
    }
    std::sort(result.begin(), result.end());
    Matching m{result};
    require(is_perfect_matching(g, m), ErrorKind::AssertionFailed, "translated matching not perfect");
    require(m.contains(forced_edge), ErrorKind::AssertionFailed, "forced edge missing after translation");
    return m;
}

}  // namespace bisect
