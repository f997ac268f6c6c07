#include "bisect/generators.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace bisect {

namespace {

constexpr int kRejectionBudget = 100000;

Rational draw_weight(std::mt19937_64& rng, WeightModel wm) {
    if (wm == WeightModel::Unit) return 1;
    uint64_t q = rng() % 100 + 1;
    uint64_t p = rng() % (10 * q + 1);
    return Rational(BigInt(p), BigInt(q));
}

WeightedMultigraph reweight(const WeightedMultigraph& g, std::mt19937_64& rng, WeightModel wm) {
    WeightedMultigraph out(g.vertex_count());
    for (const Edge& e : g.edges()) out.add_edge(e.u, e.v, draw_weight(rng, wm));
    return out;
}

}  // namespace

WeightedMultigraph petersen_graph() {
    WeightedMultigraph g(10);
    for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5, 1);
    for (int i = 0; i < 5; ++i) g.add_edge(5 + i, 5 + (i + 2) % 5, 1);
    for (int i = 0; i < 5; ++i) g.add_edge(i, i + 5, 1);
    return g;
}

WeightedMultigraph claw_graph() {
    WeightedMultigraph g(4);
    g.add_edge(0, 1, 1);
    g.add_edge(0, 2, 1);
    g.add_edge(0, 3, 1);
    return g;
}

WeightedMultigraph complete_graph(int k) {
    WeightedMultigraph g(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) g.add_edge(i, j, 1);
    return g;
}

WeightedMultigraph cycle_graph(int l) {
    require(l >= 3, ErrorKind::PreconditionViolated, "cycle needs >= 3 vertices");
    WeightedMultigraph g(l);
    for (int i = 0; i < l; ++i) g.add_edge(i, (i + 1) % l, 1);
    return g;
}

WeightedMultigraph remark1_graph(int t) {
    require(t >= 1, ErrorKind::PreconditionViolated, "remark1 needs t >= 1");
    WeightedMultigraph g(4 * t + 1);
    for (int i = 0; i < 2 * t; ++i)
        for (int j = 0; j < 2 * t; ++j) g.add_edge(i, 2 * t + j, 1);
    for (int j = 0; j < 2 * t; ++j) g.add_edge(4 * t, 2 * t + j, 1);
    g.add_edge(4 * t, 0, 1);
    return g;
}

WeightedMultigraph random_bounded_degree(int n, int dmax, uint64_t seed, WeightModel wm) {
    std::mt19937_64 rng(seed);
    WeightedMultigraph structure(n);
    if (n >= 2) {
        std::vector<int> deg(static_cast<size_t>(n), 0);
        uint64_t max_edges = static_cast<uint64_t>(n) * static_cast<uint64_t>(dmax) / 2;
        int target = static_cast<int>(rng() % (max_edges + 1));
        int placed = 0;
        for (int attempts = 0; attempts < 40 * (target + 1) && placed < target; ++attempts) {
            int u = static_cast<int>(rng() % n);
            int v = static_cast<int>(rng() % n);
            if (u == v || deg[static_cast<size_t>(u)] >= dmax || deg[static_cast<size_t>(v)] >= dmax)
                continue;
            if (structure.adjacent(u, v)) continue;
            structure.add_edge(u, v, 1);
            ++deg[static_cast<size_t>(u)];
            ++deg[static_cast<size_t>(v)];
            ++placed;
        }
    }
    return reweight(structure, rng, wm);
}

WeightedMultigraph random_subcubic(int n, uint64_t seed, WeightModel wm) {
    return random_bounded_degree(n, 3, seed, wm);
}

namespace {

// Pairing model draw; empty optional when the draw is rejected.
std::optional<WeightedMultigraph> pairing_cubic(int n, std::mt19937_64& rng) {
    std::vector<int> points;
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < 3; ++i) points.push_back(v);
    std::shuffle(points.begin(), points.end(), rng);
    WeightedMultigraph g(n);
    for (size_t i = 0; i < points.size(); i += 2) {
        if (points[i] == points[i + 1]) return std::nullopt;
        g.add_edge(points[i], points[i + 1], 1);
    }
    return g;
}

}  // namespace

WeightedMultigraph random_cubic_bridgeless(int n, uint64_t seed, WeightModel wm) {
    require(n >= 4 && n % 2 == 0, ErrorKind::PreconditionViolated,
            "cubic graphs need even n >= 4");
    std::mt19937_64 rng(seed);
    for (int tries = 0; tries < kRejectionBudget; ++tries) {
        auto g = pairing_cubic(n, rng);
        if (!g || !g->is_simple() || !g->is_connected()) continue;
        if (!bridges_and_2ecc(*g).bridge_edges.empty()) continue;
        return reweight(*g, rng, wm);
    }
    fail(ErrorKind::RejectionBudgetExceeded, "cubic-bridgeless rejection budget spent");
}

WeightedMultigraph random_tf_subcubic_2ecc(int n, uint64_t seed, WeightModel wm) {
    require(n >= 4, ErrorKind::PreconditionViolated, "tf-subcubic-2ecc needs n >= 4");
    std::mt19937_64 rng(seed);
    int subdivisions = static_cast<int>(rng() % 3);
    int base = n - subdivisions;
    if (base % 2 == 1) {
        ++subdivisions;
        --base;
    }
    if (base < 6) {
        WeightedMultigraph c(n);
        for (int i = 0; i < n; ++i) c.add_edge(i, (i + 1) % n, 1);
        return reweight(c, rng, wm);
    }
    for (int tries = 0; tries < kRejectionBudget; ++tries) {
        auto g = pairing_cubic(base, rng);
        if (!g || !g->is_simple() || !g->is_triangle_free()) continue;
        if (!g->is_connected() || !bridges_and_2ecc(*g).bridge_edges.empty()) continue;
        WeightedMultigraph out(base + subdivisions);
        int next = base;
        for (const Edge& e : g->edges()) {
            if (e.id < subdivisions) {
                out.add_edge(e.u, next, 1);
                out.add_edge(next, e.v, 1);
                ++next;
            } else {
                out.add_edge(e.u, e.v, 1);
            }
        }
        if (!out.is_triangle_free()) continue;
        return reweight(out, rng, wm);
    }
    fail(ErrorKind::RejectionBudgetExceeded, "tf-subcubic-2ecc rejection budget spent");
}

WeightedMultigraph generate(const std::string& klass, int n, uint64_t seed, WeightModel wm) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    if (klass == "cubic-bridgeless") return random_cubic_bridgeless(n, seed, wm);
    if (klass == "subcubic") return random_subcubic(n, seed, wm);
    if (klass == "tf-subcubic-2ecc") return random_tf_subcubic_2ecc(n, seed, wm);
    if (klass == "petersen") return reweight(petersen_graph(), rng, wm);
    if (klass == "claw") return reweight(claw_graph(), rng, wm);
    if (klass == "complete") return reweight(complete_graph(n), rng, wm);
    if (klass == "remark1") return reweight(remark1_graph(n), rng, wm);
    if (klass == "cycle") return reweight(cycle_graph(n), rng, wm);
    fail(ErrorKind::ParseError, "unknown graph class '" + klass + "'");
}

namespace {

// Canonical form of a small graph: lexicographically smallest concatenation
// of the column bit-blocks of the adjacency matrix over all orderings,
// explored with prefix-optimal pruning.
struct Canonizer {
    int n;
    const std::vector<uint16_t>& adj;
    std::vector<int> perm;
    std::vector<uint16_t> best_blocks;
    bool have_best = false;
    std::vector<uint16_t> blocks;
    std::vector<char> used;

    Canonizer(int n_, const std::vector<uint16_t>& adj_) : n(n_), adj(adj_) {
        used.assign(static_cast<size_t>(n), 0);
    }

    void rec(int pos) {
        if (have_best) {
            // Prune any branch whose block prefix already exceeds the incumbent.
            for (int i = 0; i < pos; ++i) {
                if (blocks[static_cast<size_t>(i)] < best_blocks[static_cast<size_t>(i)]) break;
                if (blocks[static_cast<size_t>(i)] > best_blocks[static_cast<size_t>(i)]) return;
            }
        }
        if (pos == n) {
            if (!have_best || blocks < best_blocks) {
                best_blocks = blocks;
                have_best = true;
            }
            return;
        }
        // Only candidates achieving the minimal block value at this position
        // can extend to the lexicographic minimum for this prefix.
        uint16_t best_bits = 0xffff;
        std::vector<std::pair<uint16_t, int>> cands;
        for (int v = 0; v < n; ++v) {
            if (used[static_cast<size_t>(v)]) continue;
            uint16_t bits = 0;
            for (int i = 0; i < pos; ++i)
                if (adj[static_cast<size_t>(v)] & (1u << perm[static_cast<size_t>(i)]))
                    bits |= static_cast<uint16_t>(1u << i);
            cands.push_back({bits, v});
            best_bits = std::min(best_bits, bits);
        }
        for (auto [bits, v] : cands) {
            if (bits != best_bits) continue;
            used[static_cast<size_t>(v)] = 1;
            perm.push_back(v);
            blocks.push_back(bits);
            rec(pos + 1);
            blocks.pop_back();
            perm.pop_back();
            used[static_cast<size_t>(v)] = 0;
        }
    }

    std::vector<uint16_t> run() {
        rec(0);
        return best_blocks;
    }
};

std::vector<uint16_t> canonical_form(const WeightedMultigraph& g) {
    std::vector<uint16_t> adj(static_cast<size_t>(g.vertex_count()), 0);
    for (const Edge& e : g.edges()) {
        adj[static_cast<size_t>(e.u)] |= static_cast<uint16_t>(1u << e.v);
        adj[static_cast<size_t>(e.v)] |= static_cast<uint16_t>(1u << e.u);
    }
    return Canonizer(g.vertex_count(), adj).run();
}

}  // namespace

std::vector<WeightedMultigraph> enumerate_connected_subcubic(int n_max, bool triangle_free) {
    require(n_max >= 1 && n_max <= 12, ErrorKind::BudgetExceeded,
            "enumeration supported up to n = 12");
    std::vector<WeightedMultigraph> all;
    std::vector<WeightedMultigraph> level = {WeightedMultigraph(1)};
    all.push_back(level[0]);
    for (int n = 2; n <= n_max; ++n) {
        std::set<std::vector<uint16_t>> seen;
        std::vector<WeightedMultigraph> next;
        for (const auto& g : level) {
            int old_n = g.vertex_count();
            // Nonempty attachment sets of size <= 3 with residual degree room.
            std::vector<int> room;
            for (int v = 0; v < old_n; ++v)
                if (g.degree(v) < 3) room.push_back(v);
            std::vector<std::vector<int>> subsets;
            for (size_t i = 0; i < room.size(); ++i) {
                subsets.push_back({room[i]});
                for (size_t j = i + 1; j < room.size(); ++j) {
                    subsets.push_back({room[i], room[j]});
                    for (size_t k = j + 1; k < room.size(); ++k)
                        subsets.push_back({room[i], room[j], room[k]});
                }
            }
            for (const auto& s : subsets) {
                if (triangle_free) {
                    bool independent = true;
                    for (size_t i = 0; i < s.size() && independent; ++i)
                        for (size_t j = i + 1; j < s.size(); ++j)
                            if (g.adjacent(s[i], s[j])) independent = false;
                    if (!independent) continue;
                }
                WeightedMultigraph g2(old_n + 1);
                for (const Edge& e : g.edges()) g2.add_edge(e.u, e.v, 1);
                for (int v : s) g2.add_edge(v, old_n, 1);
                if (seen.insert(canonical_form(g2)).second) next.push_back(g2);
            }
        }
        for (const auto& g : next) all.push_back(g);
        level = std::move(next);
    }
    return all;
}

}  // namespace bisect
