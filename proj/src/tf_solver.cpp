#include "bisect/tf_solver.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "bisect/bounded_degree.hpp"
#include "bisect/match_color.hpp"

namespace bisect {

namespace {

std::vector<int> degree_two_vertices(const WeightedMultigraph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 2) out.push_back(v);
    return out;
}

void check_tf_subcubic(const WeightedMultigraph& g) {
    require(g.max_degree() <= 3, ErrorKind::PreconditionViolated, "max degree exceeds 3");
    require(g.is_triangle_free(), ErrorKind::PreconditionViolated, "graph has a triangle");
}

// Greedy maximum matching of a path given as an ordered vertex list.
std::vector<std::pair<int, int>> alternate_path_matching(const std::vector<int>& path) {
    std::vector<std::pair<int, int>> out;
    for (size_t i = 0; i + 1 < path.size(); i += 2) out.push_back({path[i], path[i + 1]});
    return out;
}

PreprocessRecord preprocess_even(const WeightedMultigraph& g) {
    PreprocessRecord rec{g, g.vertex_count(), {}, {}, false, {}, false, {}};
    WeightedMultigraph& h = rec.h;

    auto v2 = degree_two_vertices(g);
    // Paths of G[V2] in deterministic order; each contributes a matching to double.
    std::set<int> v2set(v2.begin(), v2.end());
    std::map<int, std::vector<int>> v2adj;
    for (int v : v2)
        for (int w : g.neighbors(v))
            if (v2set.count(w)) v2adj[v].push_back(w);
    std::set<int> seen;
    for (int v : v2) {
        if (seen.count(v) || v2adj[v].size() >= 2) continue;  // path endpoints only
        std::vector<int> path = {v};
        seen.insert(v);
        int prev = -1, cur = v;
        while (true) {
            int next = -1;
            for (int w : v2adj[cur])
                if (w != prev) next = w;
            if (next == -1 || seen.count(next)) break;
            path.push_back(next);
            seen.insert(next);
            prev = cur;
            cur = next;
        }
        for (auto [a, b] : alternate_path_matching(path)) {
            auto orig = g.edge_between(a, b);
            require(orig.has_value(), ErrorKind::AssertionFailed, "path edge missing");
            rec.added_edges.push_back(h.add_edge(a, b, 0));
        }
    }
    // Degree-2 interior vertices must all have been visited: a cycle inside
    // G[V2] would make G that cycle, which the caller short-circuits.
    for (int v : v2)
        require(v2adj[v].size() < 2 || seen.count(v) > 0, ErrorKind::StructureAssertionFailed,
                "G[V2] contains a cycle");

    // Greedy weight-0 additions between degree-2 vertices, ascending pairs,
    // skipping pairs with a common neighbour (would close a triangle).
    bool added = true;
    while (added) {
        added = false;
        auto deg2 = degree_two_vertices(h);
        for (size_t i = 0; i < deg2.size() && !added; ++i)
            for (size_t j = i + 1; j < deg2.size() && !added; ++j) {
                int u = deg2[i], v = deg2[j];
                if (h.adjacent(u, v)) continue;
                bool common = false;
                for (int w : h.neighbors(u))
                    if (h.adjacent(w, v)) common = true;
                if (common) continue;
                rec.added_edges.push_back(h.add_edge(u, v, 0));
                added = true;
            }
    }
    size_t remaining = degree_two_vertices(h).size();
    require(remaining == 0 || remaining == 2, ErrorKind::StructureAssertionFailed,
            "|V2(H)| is neither 0 nor 2; input was not 2-edge-connected triangle-free subcubic");
    return rec;
}

PreprocessRecord preprocess_odd(const WeightedMultigraph& g) {
    auto v2 = degree_two_vertices(g);
    require(!v2.empty(), ErrorKind::AssertionFailed, "odd order forces degree-2 vertices");

    if (v2.size() == 1) {
        // Pendant construction: delete y, add y1y2, extract a perfect matching
        // avoiding it, then work on H'' = g + x + xy.
        int y = v2[0];
        auto nb = g.neighbors(y);
        require(nb.size() == 2 && !g.adjacent(nb[0], nb[1]), ErrorKind::PreconditionViolated,
                "neighbours of the degree-2 vertex must be distinct and nonadjacent");
        std::vector<int> keep;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (v != y) keep.push_back(v);
        Subgraph hp = induced_subgraph(g, keep);
        int y1 = hp.local_vertex[static_cast<size_t>(nb[0])];
        int y2 = hp.local_vertex[static_cast<size_t>(nb[1])];
        int bridge_edge = hp.graph.add_edge(y1, y2, 0);
        int force = -1;
        for (int id : hp.graph.incident(y1))
            if (id != bridge_edge && (force == -1 || id < force)) force = id;
        require(force != -1, ErrorKind::AssertionFailed, "y1 has no other edge");
        Matching m1 = forced_perfect_matching(hp.graph, force);
        require(!m1.contains(bridge_edge), ErrorKind::AssertionFailed,
                "matching includes the synthetic y1y2 edge");

        PreprocessRecord rec{WeightedMultigraph(g.vertex_count() + 1),
                             g.vertex_count(),
                             {g.vertex_count()},
                             {},
                             false,
                             {},
                             true,
                             {}};
        for (const Edge& e : g.edges()) rec.h.add_edge(e.u, e.v, e.w);
        int x = g.vertex_count();
        int xy = rec.h.add_edge(x, y, 0);
        rec.added_edges.push_back(xy);
        std::vector<int> m_ids;
        for (int id : m1.edge_ids) m_ids.push_back(hp.host_edge[static_cast<size_t>(id)]);
        m_ids.push_back(xy);
        std::sort(m_ids.begin(), m_ids.end());
        rec.pendant_matching = Matching{m_ids};
        return rec;
    }

    // |V2| >= 3: join a new vertex to the lowest nonadjacent degree-2 pair.
    int a = -1, b = -1;
    for (size_t i = 0; i < v2.size() && a == -1; ++i)
        for (size_t j = i + 1; j < v2.size() && a == -1; ++j)
            if (!g.adjacent(v2[i], v2[j])) {
                a = v2[i];
                b = v2[j];
            }
    require(a != -1, ErrorKind::AssertionFailed,
            "three mutually adjacent degree-2 vertices form a triangle");
    WeightedMultigraph g2(g.vertex_count() + 1);
    for (const Edge& e : g.edges()) g2.add_edge(e.u, e.v, e.w);
    int x = g.vertex_count();
    int e1 = g2.add_edge(x, a, 0);
    int e2 = g2.add_edge(x, b, 0);
    PreprocessRecord rec = preprocess_even(g2);
    rec.original_n = g.vertex_count();
    rec.added_vertices.push_back(x);
    rec.added_edges.push_back(e1);
    rec.added_edges.push_back(e2);
    return rec;
}

}  // namespace

PreprocessRecord preprocess(const WeightedMultigraph& g) {
    check_tf_subcubic(g);
    require(g.vertex_count() >= 2, ErrorKind::PreconditionViolated, "component too small");
    auto info = bridges_and_2ecc(g);
    require(info.bridge_edges.empty() && g.is_connected(), ErrorKind::PreconditionViolated,
            "preprocess needs a 2-edge-connected graph");
    for (int v = 0; v < g.vertex_count(); ++v)
        require(g.degree(v) >= 2, ErrorKind::PreconditionViolated, "degree-1 vertex");

    if (g.max_degree() == 2) {
        // A single cycle. Even: the bipartition is a full-weight bisection.
        if (g.vertex_count() % 2 == 0) {
            PreprocessRecord rec{g, g.vertex_count(), {}, {}, true, {}, false, {}};
            Matching empty;
            auto structure = cycle_path_decomposition(g, empty);
            require(structure.cycles.size() == 1, ErrorKind::AssertionFailed, "not a cycle");
            Bisection b;
            const auto& cyc = structure.cycles[0];
            for (size_t i = 0; i < cyc.size(); ++i)
                (i % 2 == 0 ? b.side_x : b.side_y).push_back(cyc[i]);
            std::sort(b.side_x.begin(), b.side_x.end());
            std::sort(b.side_y.begin(), b.side_y.end());
            b.cut_weight = recompute_cut_weight(g, b);
            require(b.cut_weight == g.total_weight(), ErrorKind::AssertionFailed,
                    "even cycle bipartition is not full weight");
            rec.short_circuit_bisection = b;
            return rec;
        }
        return preprocess_odd(g);
    }
    if (g.vertex_count() % 2 == 0) return preprocess_even(g);
    return preprocess_odd(g);
}

StructureMatching structure_matching(const PreprocessRecord& rec) {
    const WeightedMultigraph& h = rec.h;
    require(!rec.short_circuit, ErrorKind::PreconditionViolated,
            "short-circuited record has no structure matching");

    if (rec.pendant_mode) {
        StructureMatching out{rec.pendant_matching, cycle_path_decomposition(h, rec.pendant_matching)};
        require(out.structure.path.empty(), ErrorKind::AssertionFailed,
                "pendant record should decompose into cycles plus an isolated vertex");
        require(out.structure.isolated_vertices == std::vector<int>{rec.added_vertices.back()},
                ErrorKind::AssertionFailed, "expected exactly the pendant helper isolated");
        return out;
    }

    auto v2 = degree_two_vertices(h);
    Matching m;
    if (v2.empty()) {
        m = forced_perfect_matching(h, 0);
    } else {
        require(v2.size() == 2, ErrorKind::StructureAssertionFailed, "|V2(H)| not in {0,2}");
        int p1 = v2[0], pn = v2[1];
        require(!h.adjacent(p1, pn), ErrorKind::AssertionFailed,
                "the two degree-2 vertices are adjacent");
        int p2 = -1;
        for (int w : h.neighbors(p1))
            if (h.adjacent(w, pn) && p2 == -1) p2 = w;
        require(p2 != -1, ErrorKind::StructureAssertionFailed,
                "degree-2 vertices share no common neighbour");
        auto forced = h.edge_between(p2, pn);
        WeightedMultigraph hplus = h;
        hplus.add_edge(p1, pn, 0);
        Matching mm = forced_perfect_matching(hplus, *forced);
        for (int id : mm.edge_ids)
            require(id < h.edge_count(), ErrorKind::AssertionFailed,
                    "matching uses the synthetic p1 pn edge");
        m = mm;
    }

    StructureMatching out{m, cycle_path_decomposition(h, m)};
    require(out.structure.isolated_vertices.empty(), ErrorKind::AssertionFailed,
            "unexpected isolated vertices in H - M");
    if (!v2.empty()) {
        auto& path = out.structure.path;
        require(path.size() >= 5, ErrorKind::AssertionFailed, "path shorter than 5");
        auto matched = [&](int u, int v) {
            for (int id : h.edges_between(u, v))
                if (m.contains(id)) return true;
            return false;
        };
        if (!matched(path[1], path.back())) std::reverse(path.begin(), path.end());
        require(matched(path[1], path.back()), ErrorKind::AssertionFailed,
                "p2 pn is not a matching edge in either orientation");
    } else {
        require(out.structure.path.empty(), ErrorKind::AssertionFailed,
                "path present despite |V2(H)| = 0");
    }
    return out;
}

MixPlan build_mix_plan(const WeightedMultigraph& h, const Matching& m,
                       const CyclePathStructure& structure) {
    MixPlan plan;
    plan.m = m;
    plan.structure = structure;
    std::vector<std::pair<int, GadgetDistribution>> ordered;
    for (const auto& cyc : structure.cycles)
        ordered.push_back({*std::min_element(cyc.begin(), cyc.end()), gadget_for_cycle(h, cyc)});
    if (!structure.path.empty())
        ordered.push_back({*std::min_element(structure.path.begin(), structure.path.end()),
                           gadget_for_path(h, structure.path)});
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    plan.gadget_of_vertex.assign(static_cast<size_t>(h.vertex_count()), -1);
    for (auto& [lowest, dist] : ordered) {
        int idx = static_cast<int>(plan.gadgets.size());
        bool five = dist.kind == GadgetDistribution::HostKind::Cycle && dist.host_vertices.size() == 5;
        for (int v : dist.host_vertices) plan.gadget_of_vertex[static_cast<size_t>(v)] = idx;
        plan.gadget_is_five_cycle.push_back(five ? 1 : 0);
        plan.gadgets.push_back(std::move(dist));
    }

    for (int id : m.edge_ids) {
        const Edge& e = h.edge(id);
        auto on5 = [&](int v) {
            int gi = plan.gadget_of_vertex[static_cast<size_t>(v)];
            return gi != -1 && plan.gadget_is_five_cycle[static_cast<size_t>(gi)];
        };
        int count = (on5(e.u) ? 1 : 0) + (on5(e.v) ? 1 : 0);
        (count == 2 ? plan.m55 : count == 1 ? plan.m5 : plan.mprime).push_back(id);
    }
    return plan;
}

namespace {

struct MixTables {
    // Per gadget: outcome family weights and expected weight.
    std::vector<std::vector<Rational>> outcome_weight;
    std::vector<Rational> expected_weight;
    // Per vertex: marginal exclusion probability within its own gadget.
    std::vector<Rational> exclusion;

    MixTables(const WeightedMultigraph& h, const MixPlan& plan) {
        outcome_weight.resize(plan.gadgets.size());
        expected_weight.assign(plan.gadgets.size(), Rational(0));
        for (size_t gi = 0; gi < plan.gadgets.size(); ++gi) {
            for (const auto& o : plan.gadgets[gi].outcomes) {
                Rational w = family_weight(h, o.family);
                outcome_weight[gi].push_back(w);
                expected_weight[gi] += o.probability * w;
            }
        }
        exclusion.assign(static_cast<size_t>(h.vertex_count()), Rational(1));
        for (size_t gi = 0; gi < plan.gadgets.size(); ++gi)
            for (int v : plan.gadgets[gi].host_vertices)
                exclusion[static_cast<size_t>(v)] =
                    plan.gadgets[gi].vertex_exclusion_probability(v);
    }
};

bool outcome_covers(const GadgetOutcome& outcome, int v) {
    for (const auto& b : outcome.family.blocks)
        if (std::count(b.side_a.begin(), b.side_a.end(), v) ||
            std::count(b.side_b.begin(), b.side_b.end(), v))
            return true;
    return false;
}

Rational branch_expectation(const WeightedMultigraph& h, const MixPlan& plan,
                            const MixTables& tables, bool prime) {
    Rational total = 0;
    for (size_t gi = 0; gi < plan.gadgets.size(); ++gi) {
        if (prime && !plan.gadget_is_five_cycle[gi]) continue;
        total += tables.expected_weight[gi];
    }
    auto active_gadget = [&](int v) {
        int gi = plan.gadget_of_vertex[static_cast<size_t>(v)];
        if (gi == -1) return -1;
        if (prime && !plan.gadget_is_five_cycle[static_cast<size_t>(gi)]) return -1;
        return gi;
    };
    auto unc = [&](int v) {
        return active_gadget(v) == -1 ? Rational(1) : tables.exclusion[static_cast<size_t>(v)];
    };
    std::vector<int> eligible = prime ? plan.m.edge_ids
                                      : [&] {
                                            std::vector<int> ids = plan.m55;
                                            ids.insert(ids.end(), plan.m5.begin(), plan.m5.end());
                                            std::sort(ids.begin(), ids.end());
                                            return ids;
                                        }();
    for (int id : eligible) {
        const Edge& e = h.edge(id);
        int gu = active_gadget(e.u), gv = active_gadget(e.v);
        if (gu != -1 && gu == gv) {
            // Same gadget (a matching edge parallel to a cycle edge): the
            // joint uncovered probability comes from that gadget alone.
            Rational joint = 0;
            for (const auto& o : plan.gadgets[static_cast<size_t>(gu)].outcomes)
                if (!outcome_covers(o, e.u) && !outcome_covers(o, e.v)) joint += o.probability;
            total += e.w * joint;
        } else {
            total += e.w * unc(e.u) * unc(e.v);
        }
    }
    return total;
}

}  // namespace

MixExpectation mix_expectation(const WeightedMultigraph& h, const MixPlan& plan) {
    MixTables tables(h, plan);
    MixExpectation out;
    out.e_b = branch_expectation(h, plan, tables, false);
    out.e_b_prime = branch_expectation(h, plan, tables, true);
    out.e_overall = (24 * out.e_b + out.e_b_prime) / 25;
    Rational wh = h.total_weight();
    Rational wm = plan.m.weight(h);
    Rational floor = 3 * (wh - wm) / 5 + 4 * wm / 125;
    require(out.e_overall >= floor, ErrorKind::AssertionFailed,
            "mixture expectation fell below 3(w(H)-w(M))/5 + 4w(M)/125");
    return out;
}

namespace {

// Shared assembly: given fixed outcome choices per active gadget, add the
// eligible matching edges whose endpoints stay uncovered (ascending ids).
BalancedFamily assemble_family(const WeightedMultigraph& h, const MixPlan& plan,
                               const std::vector<int>& choice, bool prime) {
    BalancedFamily fam;
    std::vector<char> covered(static_cast<size_t>(h.vertex_count()), 0);
    for (size_t gi = 0; gi < plan.gadgets.size(); ++gi) {
        if (prime && !plan.gadget_is_five_cycle[gi]) continue;
        const auto& outcome = plan.gadgets[gi].outcomes[static_cast<size_t>(choice[gi])];
        for (const auto& block : outcome.family.blocks) {
            fam.blocks.push_back(block);
            for (int v : block.side_a) covered[static_cast<size_t>(v)] = 1;
            for (int v : block.side_b) covered[static_cast<size_t>(v)] = 1;
        }
    }
    std::vector<int> eligible;
    if (prime) {
        eligible = plan.m.edge_ids;
    } else {
        eligible = plan.m55;
        eligible.insert(eligible.end(), plan.m5.begin(), plan.m5.end());
        std::sort(eligible.begin(), eligible.end());
    }
    for (int id : eligible) {
        const Edge& e = h.edge(id);
        if (!covered[static_cast<size_t>(e.u)] && !covered[static_cast<size_t>(e.v)]) {
            fam.blocks.push_back({{std::min(e.u, e.v)}, {std::max(e.u, e.v)}});
            covered[static_cast<size_t>(e.u)] = covered[static_cast<size_t>(e.v)] = 1;
        }
    }
    return fam;
}

}  // namespace

BalancedFamily derandomize_mix(const WeightedMultigraph& h, const MixPlan& plan, uint64_t seed) {
    (void)seed;  // the derandomized path is deterministic by construction
    MixTables tables(h, plan);
    Rational e_b = branch_expectation(h, plan, tables, false);
    Rational e_bp = branch_expectation(h, plan, tables, true);
    bool prime = e_bp > e_b;
    Rational e_branch = prime ? e_bp : e_b;

    std::vector<int> eligible;
    if (prime) {
        eligible = plan.m.edge_ids;
    } else {
        eligible = plan.m55;
        eligible.insert(eligible.end(), plan.m5.begin(), plan.m5.end());
        std::sort(eligible.begin(), eligible.end());
    }

    std::vector<int> active;  // gadget indices, already in ascending lowest-vertex order
    for (size_t gi = 0; gi < plan.gadgets.size(); ++gi)
        if (!prime || plan.gadget_is_five_cycle[gi]) active.push_back(static_cast<int>(gi));

    std::vector<int> choice(plan.gadgets.size(), -1);
    // covered state: -1 unknown (marginal), 0 uncovered, 1 covered
    std::vector<int> covered(static_cast<size_t>(h.vertex_count()), -1);
    for (int v = 0; v < h.vertex_count(); ++v) {
        int gi = plan.gadget_of_vertex[static_cast<size_t>(v)];
        if (gi == -1 || (prime && !plan.gadget_is_five_cycle[static_cast<size_t>(gi)]))
            covered[static_cast<size_t>(v)] = 0;  // never covered in this branch
    }

    auto unc_prob = [&](int v) -> Rational {
        if (covered[static_cast<size_t>(v)] == 0) return 1;
        if (covered[static_cast<size_t>(v)] == 1) return 0;
        return tables.exclusion[static_cast<size_t>(v)];
    };

    for (int gi : active) {
        const auto& dist = plan.gadgets[static_cast<size_t>(gi)];
        // Matching edges with an endpoint in this gadget: their add-back term
        // is the only part of the conditional expectation the choice affects
        // beyond the outcome's own weight.
        std::vector<int> touching;
        for (int id : eligible) {
            const Edge& e = h.edge(id);
            if (plan.gadget_of_vertex[static_cast<size_t>(e.u)] == gi ||
                plan.gadget_of_vertex[static_cast<size_t>(e.v)] == gi)
                touching.push_back(id);
        }
        int best = -1;
        Rational best_value = 0;
        for (size_t oi = 0; oi < dist.outcomes.size(); ++oi) {
            const auto& outcome = dist.outcomes[oi];
            Rational value = tables.outcome_weight[static_cast<size_t>(gi)][oi];
            for (int id : touching) {
                const Edge& e = h.edge(id);
                Rational pu = plan.gadget_of_vertex[static_cast<size_t>(e.u)] == gi
                                  ? (outcome_covers(outcome, e.u) ? Rational(0) : Rational(1))
                                  : unc_prob(e.u);
                Rational pv = plan.gadget_of_vertex[static_cast<size_t>(e.v)] == gi
                                  ? (outcome_covers(outcome, e.v) ? Rational(0) : Rational(1))
                                  : unc_prob(e.v);
                value += e.w * pu * pv;
            }
            if (best == -1 || value > best_value) {
                best = static_cast<int>(oi);
                best_value = value;
            }
        }
        choice[static_cast<size_t>(gi)] = best;
        for (int v : dist.host_vertices) covered[static_cast<size_t>(v)] = 0;
        for (const auto& b : dist.outcomes[static_cast<size_t>(best)].family.blocks) {
            for (int v : b.side_a) covered[static_cast<size_t>(v)] = 1;
            for (int v : b.side_b) covered[static_cast<size_t>(v)] = 1;
        }
    }

    BalancedFamily fam = assemble_family(h, plan, choice, prime);
    Rational achieved = family_weight(h, fam);
    require(achieved >= e_branch, ErrorKind::AssertionFailed,
            "derandomized family fell below the branch expectation");
    return fam;
}

Rational sample_mix_weight(const WeightedMultigraph& h, const MixPlan& plan,
                           std::mt19937_64& rng) {
    bool prime = (rng() % 25) == 0;  // B' with probability 1/25
    std::vector<int> choice(plan.gadgets.size(), 0);
    for (size_t gi = 0; gi < plan.gadgets.size(); ++gi) {
        if (prime && !plan.gadget_is_five_cycle[gi]) continue;
        const auto& outs = plan.gadgets[gi].outcomes;
        BigInt denom = 1;
        for (const auto& o : outs) denom = lcm(denom, BigInt(denominator(o.probability)));
        uint64_t d = denom.convert_to<uint64_t>();
        uint64_t r = rng() % d;
        BigInt acc = 0;
        for (size_t oi = 0; oi < outs.size(); ++oi) {
            acc += BigInt(numerator(outs[oi].probability)) *
                   (denom / BigInt(denominator(outs[oi].probability)));
            if (BigInt(r) < acc) {
                choice[gi] = static_cast<int>(oi);
                break;
            }
        }
    }
    return family_weight(h, assemble_family(h, plan, choice, prime));
}

Bisection contracted_matching_bisection(const WeightedMultigraph& g, const Matching& m) {
    require(g.is_simple(), ErrorKind::PreconditionViolated,
            "matching contraction needs a simple graph");
    check_tf_subcubic(g);
    require(is_perfect_matching(g, m), ErrorKind::NotPerfect, "matching is not perfect");

    ContractedGraph contracted = contract_matching(g, m);
    auto coloring = vizing_color(contracted.graph);
    require(coloring.color_count <= 5, ErrorKind::AssertionFailed,
            "contracted graph needed more than 5 colors");
    Matching heavy = heaviest_color_class(contracted.graph, coloring);

    BalancedFamily fam;
    std::vector<char> pair_used(contracted.pair_of.size(), 0);
    for (int cid : heavy.edge_ids) {
        const Edge& ce = contracted.graph.edge(cid);
        pair_used[static_cast<size_t>(ce.u)] = pair_used[static_cast<size_t>(ce.v)] = 1;
        auto [a, b] = contracted.pair_of[static_cast<size_t>(ce.u)];
        auto [c, d] = contracted.pair_of[static_cast<size_t>(ce.v)];
        std::vector<int> quad = {a, b, c, d};
        std::sort(quad.begin(), quad.end());
        // First balanced split with both sides independent.
        const int splits[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
        bool placed = false;
        for (const auto& s : splits) {
            int p = quad[s[0]], q = quad[s[1]], r = quad[s[2]], t = quad[s[3]];
            if (!g.adjacent(p, q) && !g.adjacent(r, t)) {
                fam.blocks.push_back({{p, q}, {r, t}});
                placed = true;
                break;
            }
        }
        require(placed, ErrorKind::UnhandledChordPattern,
                "no independent balanced split of a lifted 4-set");
    }
    for (size_t cv = 0; cv < contracted.pair_of.size(); ++cv) {
        if (pair_used[cv]) continue;
        auto [a, b] = contracted.pair_of[cv];
        fam.blocks.push_back({{a}, {b}});
    }

    Bisection out = round_to_bisection(g, fam, RoundingMode::Derandomized);
    Rational bound = 3 * g.total_weight() / 5 + 2 * m.weight(g) / 5;
    require(out.cut_weight >= bound, ErrorKind::AssertionFailed,
            "matching-contraction bound 3/5 w + 2/5 w(M) failed");
    return out;
}

namespace {

// Keep the lowest id of every parallel class; dropped copies must be weight 0.
struct Deduplicated {
    WeightedMultigraph graph;
    std::vector<int> new_id_of;  // host edge id -> new id or -1
};

Deduplicated drop_parallel_zero_duplicates(const WeightedMultigraph& h) {
    Deduplicated out{WeightedMultigraph(h.vertex_count()), {}};
    out.new_id_of.assign(static_cast<size_t>(h.edge_count()), -1);
    std::set<std::pair<int, int>> kept;
    for (const Edge& e : h.edges()) {
        auto key = std::minmax(e.u, e.v);
        if (kept.insert(key).second) {
            out.new_id_of[static_cast<size_t>(e.id)] = out.graph.add_edge(e.u, e.v, e.w);
        } else {
            require(e.w == 0, ErrorKind::AssertionFailed, "parallel duplicate has nonzero weight");
        }
    }
    return out;
}

Bisection strip_added(const WeightedMultigraph& original, const Bisection& b, int keep_n) {
    Bisection out;
    for (int v : b.side_x)
        if (v < keep_n) out.side_x.push_back(v);
    for (int v : b.side_y)
        if (v < keep_n) out.side_y.push_back(v);
    out.cut_weight = recompute_cut_weight(original, out);
    return out;
}

Bisection solve_component(const WeightedMultigraph& comp, uint64_t seed) {
    PreprocessRecord rec = preprocess(comp);
    if (rec.short_circuit) return rec.short_circuit_bisection;

    StructureMatching sm = structure_matching(rec);
    Rational wh = rec.h.total_weight();
    Rational wm = sm.m.weight(rec.h);

    // Branch A: matching contraction on the deduplicated simple graph.
    Deduplicated h1 = drop_parallel_zero_duplicates(rec.h);
    std::vector<int> m1_ids;
    for (int id : sm.m.edge_ids) {
        int nid = h1.new_id_of[static_cast<size_t>(id)];
        require(nid != -1, ErrorKind::AssertionFailed, "matching edge dropped with the duplicates");
        m1_ids.push_back(nid);
    }
    std::sort(m1_ids.begin(), m1_ids.end());
    Bisection branch_a = contracted_matching_bisection(h1.graph, Matching{m1_ids});
    branch_a.cut_weight = recompute_cut_weight(rec.h, branch_a);
    require(branch_a.cut_weight >= 3 * wh / 5 + 2 * wm / 5, ErrorKind::AssertionFailed,
            "branch A bound failed on H");

    // Branch B: derandomized gadget mixture.
    MixPlan plan = build_mix_plan(rec.h, sm.m, sm.structure);
    MixExpectation expectation = mix_expectation(rec.h, plan);
    BalancedFamily fam = derandomize_mix(rec.h, plan, seed);
    Bisection branch_b = round_to_bisection(rec.h, fam, RoundingMode::Derandomized);
    require(branch_b.cut_weight >= (wh + expectation.e_overall) / 2, ErrorKind::AssertionFailed,
            "branch B rounding fell below (w + E)/2");
    require(branch_b.cut_weight >= 4 * wh / 5 - 71 * wm / 250, ErrorKind::AssertionFailed,
            "branch B bound 4/5 w(H) - 71/250 w(M) failed");

    const Bisection& better = branch_b.cut_weight >= branch_a.cut_weight ? branch_b : branch_a;
    Bisection result = strip_added(comp, better, rec.original_n);
    require(is_valid_bisection(comp, result), ErrorKind::AssertionFailed,
            "component bisection invalid after stripping");
    require(855 * result.cut_weight >= 613 * comp.total_weight(), ErrorKind::AssertionFailed,
            "component fell below theta");
    return result;
}

}  // namespace

TfSolution solve_bridgeless_tf(const WeightedMultigraph& g, uint64_t seed) {
    check_tf_subcubic(g);
    require(g.is_simple(), ErrorKind::PreconditionViolated, "input must be simple");
    auto info = bridges_and_2ecc(g);
    require(info.bridge_edges.empty(), ErrorKind::PreconditionViolated, "graph has a bridge");

    // Bridgeless: connected components are exactly the 2ECC components.
    std::vector<std::vector<int>> members(static_cast<size_t>(info.component_count));
    for (int v = 0; v < g.vertex_count(); ++v)
        members[static_cast<size_t>(info.component_of[static_cast<size_t>(v)])].push_back(v);
    std::sort(members.begin(), members.end());

    std::vector<int> side_x, side_y;
    for (const auto& verts : members) {
        if (verts.empty()) continue;
        std::vector<int> local_x, local_y;
        if (verts.size() == 1) {
            local_x = {verts[0]};
        } else {
            Subgraph sub = induced_subgraph(g, verts);
            Bisection b = solve_component(sub.graph, seed);
            for (int v : b.side_x) local_x.push_back(sub.host_vertex[static_cast<size_t>(v)]);
            for (int v : b.side_y) local_y.push_back(sub.host_vertex[static_cast<size_t>(v)]);
        }
        // Odd components alternate which side joins the globally smaller one.
        if (local_x.size() != local_y.size()) {
            auto& larger = local_x.size() > local_y.size() ? local_x : local_y;
            auto& smaller = local_x.size() > local_y.size() ? local_y : local_x;
            if (side_x.size() <= side_y.size()) {
                side_x.insert(side_x.end(), larger.begin(), larger.end());
                side_y.insert(side_y.end(), smaller.begin(), smaller.end());
            } else {
                side_y.insert(side_y.end(), larger.begin(), larger.end());
                side_x.insert(side_x.end(), smaller.begin(), smaller.end());
            }
        } else {
            side_x.insert(side_x.end(), local_x.begin(), local_x.end());
            side_y.insert(side_y.end(), local_y.begin(), local_y.end());
        }
    }
    std::sort(side_x.begin(), side_x.end());
    std::sort(side_y.begin(), side_y.end());
    Bisection b{side_x, side_y, 0};
    b.cut_weight = recompute_cut_weight(g, b);

    TfSolution out;
    out.bisection = b;
    out.method = "tf-bridgeless";
    out.guaranteed_bound = theta() * g.total_weight();
    require(is_valid_bisection(g, b), ErrorKind::AssertionFailed, "recombined bisection invalid");
    require(b.cut_weight >= out.guaranteed_bound, ErrorKind::AssertionFailed,
            "theta guarantee failed");
    return out;
}

TfSolution solve_triangle_free(const WeightedMultigraph& g, uint64_t seed) {
    check_tf_subcubic(g);
    require(g.is_simple(), ErrorKind::PreconditionViolated, "input must be simple");
    // The claw K_{1,3} is the lone excluded input.
    if (g.vertex_count() == 4 && g.edge_count() == 3) {
        std::vector<int> degs;
        for (int v = 0; v < 4; ++v) degs.push_back(g.degree(v));
        std::sort(degs.begin(), degs.end());
        if (degs == std::vector<int>{1, 1, 1, 3})
            fail(ErrorKind::ClawInput, "K_{1,3} admits no bisection above 2/3");
    }

    auto info = bridges_and_2ecc(g);
    if (info.bridge_edges.empty()) return solve_bridgeless_tf(g, seed);

    TfSolution out;
    out.bisection = solve_subcubic(g, seed);
    out.method = "tf-bridged-fallback";
    out.guaranteed_bound = Rational(2, 3) * g.total_weight();
    out.weaker_bound_reason = "bridged; §4.2 not implemented";
    return out;
}

}  // namespace bisect
