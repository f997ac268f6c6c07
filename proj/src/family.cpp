#include "bisect/family.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace bisect {

namespace {

// vertex -> (block index, side 0/1), or (-1, -1) when uncovered.
std::vector<std::pair<int, int>> block_index(const WeightedMultigraph& g,
                                             const BalancedFamily& fam) {
    std::vector<std::pair<int, int>> where(static_cast<size_t>(g.vertex_count()), {-1, -1});
    for (size_t bi = 0; bi < fam.blocks.size(); ++bi) {
        for (int v : fam.blocks[bi].side_a) where[static_cast<size_t>(v)] = {static_cast<int>(bi), 0};
        for (int v : fam.blocks[bi].side_b) where[static_cast<size_t>(v)] = {static_cast<int>(bi), 1};
    }
    return where;
}

}  // namespace

FamilyDiagnostics validate_family(const WeightedMultigraph& g, const BalancedFamily& fam) {
    FamilyDiagnostics diag;
    auto note = [&](const std::string& msg) {
        diag.valid = false;
        diag.problems.push_back(msg);
    };
    std::set<int> used;
    for (size_t bi = 0; bi < fam.blocks.size(); ++bi) {
        const BalancedBlock& b = fam.blocks[bi];
        std::ostringstream tag;
        tag << "block " << bi;
        if (b.side_a.size() != b.side_b.size()) note(tag.str() + ": sides differ in size");
        for (const auto* side : {&b.side_a, &b.side_b}) {
            for (int v : *side) {
                if (v < 0 || v >= g.vertex_count()) {
                    note(tag.str() + ": vertex out of range");
                    continue;
                }
                if (!used.insert(v).second) note(tag.str() + ": vertex reused");
            }
            for (size_t i = 0; i < side->size(); ++i)
                for (size_t j = i + 1; j < side->size(); ++j)
                    if (g.adjacent((*side)[i], (*side)[j]))
                        note(tag.str() + ": side contains a host edge");
        }
    }
    return diag;
}

Rational family_weight(const WeightedMultigraph& g, const BalancedFamily& fam) {
    FamilyDiagnostics diag = validate_family(g, fam);
    require(diag.valid, ErrorKind::InvalidFamily,
            diag.problems.empty() ? "invalid family" : diag.problems.front());
    auto where = block_index(g, fam);
    Rational total = 0;
    for (const Edge& e : g.edges()) {
        auto [bu, su] = where[static_cast<size_t>(e.u)];
        auto [bv, sv] = where[static_cast<size_t>(e.v)];
        if (bu != -1 && bu == bv && su != sv) total += e.w;
    }
    return total;
}

Rational cut_weight_between(const WeightedMultigraph& g, const std::vector<char>& in_x) {
    Rational total = 0;
    for (const Edge& e : g.edges())
        if (in_x[static_cast<size_t>(e.u)] != in_x[static_cast<size_t>(e.v)]) total += e.w;
    return total;
}

Rational recompute_cut_weight(const WeightedMultigraph& g, const Bisection& b) {
    std::vector<char> in_x(static_cast<size_t>(g.vertex_count()), 0);
    for (int v : b.side_x) in_x[static_cast<size_t>(v)] = 1;
    return cut_weight_between(g, in_x);
}

bool is_valid_bisection(const WeightedMultigraph& g, const Bisection& b) {
    size_t n = static_cast<size_t>(g.vertex_count());
    if (b.side_x.size() + b.side_y.size() != n) return false;
    long diff = static_cast<long>(b.side_x.size()) - static_cast<long>(b.side_y.size());
    if (diff < -1 || diff > 1) return false;
    std::vector<char> seen(n, 0);
    for (const auto* side : {&b.side_x, &b.side_y})
        for (int v : *side) {
            if (v < 0 || v >= g.vertex_count() || seen[static_cast<size_t>(v)]) return false;
            seen[static_cast<size_t>(v)] = 1;
        }
    return recompute_cut_weight(g, b) == b.cut_weight;
}

Bisection round_to_bisection(const WeightedMultigraph& g, const BalancedFamily& fam,
                             RoundingMode mode, uint64_t seed) {
    FamilyDiagnostics diag = validate_family(g, fam);
    require(diag.valid, ErrorKind::InvalidFamily,
            diag.problems.empty() ? "invalid family" : diag.problems.front());

    BalancedFamily work = fam;
    Rational base_weight = family_weight(g, fam);

    // Pair uncovered vertices in ascending id order so at most one is left.
    auto where = block_index(g, work);
    std::vector<int> uncovered;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (where[static_cast<size_t>(v)].first == -1) uncovered.push_back(v);
    for (size_t i = 0; i + 1 < uncovered.size(); i += 2)
        work.blocks.push_back({{uncovered[i]}, {uncovered[i + 1]}});
    int leftover = (uncovered.size() % 2 == 1) ? uncovered.back() : -1;
    where = block_index(g, work);

    std::vector<size_t> order(work.blocks.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    auto lowest = [&](size_t bi) {
        int lo = g.vertex_count();
        for (int v : work.blocks[bi].side_a) lo = std::min(lo, v);
        for (int v : work.blocks[bi].side_b) lo = std::min(lo, v);
        return lo;
    };
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return lowest(a) < lowest(b); });

    // assignment[v]: 0 = X, 1 = Y, -1 = undecided
    std::vector<int> assignment(static_cast<size_t>(g.vertex_count()), -1);
    std::mt19937_64 rng(seed);

    auto assign_block = [&](size_t bi, bool a_to_x) {
        for (int v : work.blocks[bi].side_a) assignment[static_cast<size_t>(v)] = a_to_x ? 0 : 1;
        for (int v : work.blocks[bi].side_b) assignment[static_cast<size_t>(v)] = a_to_x ? 1 : 0;
    };

    for (size_t bi : order) {
        if (mode == RoundingMode::SeededRandom) {
            assign_block(bi, (rng() & 1) == 0);
            continue;
        }
        // Gain against already-assigned vertices under each orientation; edges
        // to undecided vertices contribute the same either way.
        Rational gain_a_to_x = 0, gain_a_to_y = 0;
        auto add_gains = [&](const std::vector<int>& side, int x_side_value) {
            for (int v : side)
                for (int id : g.incident(v)) {
                    const Edge& e = g.edge(id);
                    int other = e.opposite(v);
                    int asg = assignment[static_cast<size_t>(other)];
                    if (asg == -1) continue;
                    if (asg != x_side_value) gain_a_to_x += e.w;
                    if (asg == x_side_value) gain_a_to_y += e.w;
                }
        };
        add_gains(work.blocks[bi].side_a, 0);
        add_gains(work.blocks[bi].side_b, 1);
        assign_block(bi, gain_a_to_x >= gain_a_to_y);
    }

    if (leftover != -1) {
        if (mode == RoundingMode::Derandomized) {
            Rational to_x = 0, to_y = 0;
            for (int id : g.incident(leftover)) {
                const Edge& e = g.edge(id);
                int asg = assignment[static_cast<size_t>(e.opposite(leftover))];
                if (asg == 0) to_x += e.w;
                if (asg == 1) to_y += e.w;
            }
            // Placing on X cuts the edges into Y and vice versa.
            assignment[static_cast<size_t>(leftover)] = (to_y >= to_x) ? 0 : 1;
        } else {
            assignment[static_cast<size_t>(leftover)] = 0;
        }
    }

    Bisection out;
    std::vector<char> in_x(static_cast<size_t>(g.vertex_count()), 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (assignment[static_cast<size_t>(v)] == 0) {
            out.side_x.push_back(v);
            in_x[static_cast<size_t>(v)] = 1;
        } else {
            out.side_y.push_back(v);
        }
    }
    out.cut_weight = cut_weight_between(g, in_x);
    require(is_valid_bisection(g, out), ErrorKind::AssertionFailed, "rounding broke balance");
    if (mode == RoundingMode::Derandomized) {
        Rational bound = (g.total_weight() + base_weight) / 2;
        require(out.cut_weight >= bound, ErrorKind::AssertionFailed,
                "derandomized rounding fell below (w+w(B))/2");
    }
    return out;
}

BalancedFamily forest_to_family(const WeightedMultigraph& g, const std::vector<int>& forest_edges,
                                const std::vector<int>& vertices) {
    require(2 * forest_edges.size() <= vertices.size(), ErrorKind::TooManyEdges,
            "forest has more than |V|/2 edges");
    std::map<int, std::vector<int>> adj;  // within the forest
    std::set<int> vset(vertices.begin(), vertices.end());
    for (int id : forest_edges) {
        const Edge& e = g.edge(id);
        require(vset.count(e.u) && vset.count(e.v), ErrorKind::MalformedStructure,
                "forest edge leaves the vertex set");
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }

    // Two-color each tree; isolated vertices form the padding pool.
    std::map<int, int> color;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> trees;
    std::vector<int> pool;
    for (int v : vertices) {
        if (color.count(v)) continue;
        if (!adj.count(v)) {
            pool.push_back(v);
            continue;
        }
        std::vector<int> stack = {v};
        color[v] = 0;
        std::vector<int> a, b;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            (color[x] == 0 ? a : b).push_back(x);
            for (int w : adj[x])
                if (!color.count(w)) {
                    color[w] = 1 - color[x];
                    stack.push_back(w);
                } else {
                    require(color[w] != color[x], ErrorKind::MalformedStructure,
                            "forest edges contain a cycle");
                }
        }
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        trees.push_back({a, b});
    }
    std::sort(pool.begin(), pool.end());
    std::sort(trees.begin(), trees.end(), [](const auto& s, const auto& t) {
        return std::min(s.first[0], s.second[0]) < std::min(t.first[0], t.second[0]);
    });

    BalancedFamily fam;
    size_t pool_next = 0;
    for (auto& [a, b] : trees) {
        auto& small = a.size() <= b.size() ? a : b;
        auto& big = a.size() <= b.size() ? b : a;
        while (small.size() < big.size()) {
            require(pool_next < pool.size(), ErrorKind::TooManyEdges,
                    "not enough isolated vertices to balance");
            small.push_back(pool[pool_next++]);
        }
        std::sort(small.begin(), small.end());
        BalancedBlock block;
        if (a[0] < b[0]) block = {a, b}; else block = {b, a};
        fam.blocks.push_back(std::move(block));
    }
    return fam;
}

}  // namespace bisect
