#include "bisect/gadgets.hpp"

#include <algorithm>
#include <set>

#include "bisect/detail/cycle_tables.hpp"

namespace bisect {

namespace {

std::set<int> family_vertices(const BalancedFamily& fam) {
    std::set<int> out;
    for (const auto& b : fam.blocks) {
        out.insert(b.side_a.begin(), b.side_a.end());
        out.insert(b.side_b.begin(), b.side_b.end());
    }
    return out;
}

}  // namespace

Rational GadgetDistribution::vertex_exclusion_probability(int vertex) const {
    Rational p = 0;
    for (const auto& o : outcomes)
        if (!family_vertices(o.family).count(vertex)) p += o.probability;
    return p;
}

Rational GadgetDistribution::edge_inclusion_probability(const WeightedMultigraph& h,
                                                        int edge_id) const {
    const Edge& e = h.edge(edge_id);
    Rational p = 0;
    for (const auto& o : outcomes) {
        bool crossing = false;
        for (const auto& b : o.family.blocks) {
            bool ua = std::count(b.side_a.begin(), b.side_a.end(), e.u);
            bool ub = std::count(b.side_b.begin(), b.side_b.end(), e.u);
            bool va = std::count(b.side_a.begin(), b.side_a.end(), e.v);
            bool vb = std::count(b.side_b.begin(), b.side_b.end(), e.v);
            if ((ua && vb) || (ub && va)) crossing = true;
        }
        if (crossing) p += o.probability;
    }
    return p;
}

BalancedBlock block_from_vertex_set(const WeightedMultigraph& h, const std::vector<int>& vertices) {
    Subgraph sub = induced_subgraph(h, vertices);
    const WeightedMultigraph& s = sub.graph;
    int ln = s.vertex_count();
    std::vector<int> color(static_cast<size_t>(ln), -1);
    std::vector<int> comp(static_cast<size_t>(ln), -1);
    int comps = 0;
    for (int v = 0; v < ln; ++v) {
        if (comp[static_cast<size_t>(v)] != -1) continue;
        int c = comps++;
        std::vector<int> stack = {v};
        comp[static_cast<size_t>(v)] = c;
        color[static_cast<size_t>(v)] = 0;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int id : s.incident(x)) {
                int o = s.edge(id).opposite(x);
                if (comp[static_cast<size_t>(o)] == -1) {
                    comp[static_cast<size_t>(o)] = c;
                    color[static_cast<size_t>(o)] = 1 - color[static_cast<size_t>(x)];
                    stack.push_back(o);
                } else {
                    require(color[static_cast<size_t>(o)] != color[static_cast<size_t>(x)],
                            ErrorKind::UnhandledChordPattern,
                            "odd cycle inside a gadget block vertex set");
                }
            }
        }
    }
    // Exact orientation balance over component imbalances.
    std::vector<int> imbalance(static_cast<size_t>(comps), 0);
    for (int v = 0; v < ln; ++v)
        imbalance[static_cast<size_t>(comp[static_cast<size_t>(v)])] +=
            color[static_cast<size_t>(v)] == 0 ? 1 : -1;
    // DP over reachable sums; reconstruct a zero-sum orientation.
    std::set<int> reachable = {0};
    std::vector<std::set<int>> layers = {reachable};
    for (int c = 0; c < comps; ++c) {
        std::set<int> next;
        for (int s0 : layers.back()) {
            next.insert(s0 + imbalance[static_cast<size_t>(c)]);
            next.insert(s0 - imbalance[static_cast<size_t>(c)]);
        }
        layers.push_back(next);
    }
    require(layers.back().count(0) == 1, ErrorKind::UnhandledChordPattern,
            "gadget block vertex set has no balanced orientation");
    std::vector<int> flip(static_cast<size_t>(comps), 0);
    int want = 0;
    for (int c = comps - 1; c >= 0; --c) {
        int im = imbalance[static_cast<size_t>(c)];
        if (layers[static_cast<size_t>(c)].count(want - im)) {
            flip[static_cast<size_t>(c)] = 0;  // keep: component adds +im
            want -= im;
        } else {
            flip[static_cast<size_t>(c)] = 1;
            want += im;
        }
    }
    BalancedBlock block;
    for (int v = 0; v < ln; ++v) {
        int side = color[static_cast<size_t>(v)] ^ flip[static_cast<size_t>(comp[static_cast<size_t>(v)])];
        (side == 0 ? block.side_a : block.side_b).push_back(sub.host_vertex[static_cast<size_t>(v)]);
    }
    std::sort(block.side_a.begin(), block.side_a.end());
    std::sort(block.side_b.begin(), block.side_b.end());
    require(block.side_a.size() == block.side_b.size(), ErrorKind::UnhandledChordPattern,
            "unbalanced block after orientation");
    if (!block.side_a.empty() && !block.side_b.empty() && block.side_b[0] < block.side_a[0])
        std::swap(block.side_a, block.side_b);
    return block;
}

namespace {

int cyc_dist(int i, int j, int l) {
    int d = std::abs(i - j);
    return std::min(d, l - d);
}

std::vector<std::pair<int, int>> find_chords(const WeightedMultigraph& h,
                                             const std::vector<int>& order, bool is_cycle) {
    int l = static_cast<int>(order.size());
    std::vector<std::pair<int, int>> chords;
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j) {
            bool consecutive = (j == i + 1) || (is_cycle && i == 0 && j == l - 1);
            if (consecutive) continue;
            if (h.adjacent(order[static_cast<size_t>(i)], order[static_cast<size_t>(j)])) {
                if (is_cycle)
                    require(cyc_dist(i, j, l) >= 3, ErrorKind::UnhandledChordPattern,
                            "distance-2 chord implies a triangle");
                chords.push_back({i, j});
            }
        }
    return chords;
}

using PosPair = std::pair<int, int>;

std::set<PosPair> apply_symmetry(const std::set<PosPair>& pairs, int l, int shift, bool reflect) {
    std::set<PosPair> out;
    for (auto [i, j] : pairs) {
        int a = reflect ? ((shift - i) % l + l) % l : (i + shift) % l;
        int b = reflect ? ((shift - j) % l + l) % l : (j + shift) % l;
        out.insert(std::minmax(a, b));
    }
    return out;
}

// Build the 8 outcomes of a stored figure table under a position labeling.
void emit_table(GadgetDistribution& dist, const detail::CycleTable& table,
                const std::vector<int>& cycle, int shift, bool reflect) {
    int l = static_cast<int>(cycle.size());
    auto map_pos = [&](int p) {
        int q = reflect ? ((shift - p) % l + l) % l : (p + shift) % l;
        return cycle[static_cast<size_t>(q)];
    };
    for (const auto& cell : table) {
        GadgetOutcome o;
        o.probability = Rational(1, 8);
        for (const auto& [sa, sb] : cell) {
            BalancedBlock b;
            for (int p : sa) b.side_a.push_back(map_pos(p));
            for (int p : sb) b.side_b.push_back(map_pos(p));
            std::sort(b.side_a.begin(), b.side_a.end());
            std::sort(b.side_b.begin(), b.side_b.end());
            o.family.blocks.push_back(std::move(b));
        }
        dist.outcomes.push_back(std::move(o));
    }
}

BalancedBlock window_block(const std::vector<int>& cycle, int start) {
    int l = static_cast<int>(cycle.size());
    BalancedBlock b;
    b.side_a = {cycle[static_cast<size_t>(start % l)], cycle[static_cast<size_t>((start + 2) % l)]};
    b.side_b = {cycle[static_cast<size_t>((start + 1) % l)], cycle[static_cast<size_t>((start + 3) % l)]};
    std::sort(b.side_a.begin(), b.side_a.end());
    std::sort(b.side_b.begin(), b.side_b.end());
    return b;
}

BalancedBlock pair_block(int u, int v) {
    return BalancedBlock{{std::min(u, v)}, {std::max(u, v)}};
}

// Leave-one-out outcome for chordless C5/C7: the remaining path, two-colored.
GadgetOutcome leave_one_out(const WeightedMultigraph& h, const std::vector<int>& cycle, int skip,
                            const Rational& p) {
    std::vector<int> rest;
    int l = static_cast<int>(cycle.size());
    for (int t = 1; t < l; ++t) rest.push_back(cycle[static_cast<size_t>((skip + t) % l)]);
    GadgetOutcome o;
    o.probability = p;
    o.family.blocks.push_back(block_from_vertex_set(h, rest));
    return o;
}

}  // namespace

GadgetDistribution gadget_for_cycle(const WeightedMultigraph& h, const std::vector<int>& cycle) {
    int l = static_cast<int>(cycle.size());
    require(l >= 2, ErrorKind::MalformedStructure, "cycle too short");
    GadgetDistribution dist;
    dist.kind = GadgetDistribution::HostKind::Cycle;
    dist.host_vertices = cycle;
    dist.chords = find_chords(h, cycle, /*is_cycle=*/l > 2);

    auto add_null = [&](const Rational& p) {
        if (p > 0) dist.outcomes.push_back({p, BalancedFamily{}});
    };

    if (l == 2 || l == 6) {
        // Whole (bipartite) cycle with probability 7/8, null with 1/8.
        GadgetOutcome o;
        o.probability = Rational(7, 8);
        o.family.blocks.push_back(block_from_vertex_set(h, cycle));
        dist.outcomes.push_back(std::move(o));
        add_null(Rational(1, 8));
        return dist;
    }

    if (l == 5) {
        require(dist.chords.empty(), ErrorKind::UnhandledChordPattern,
                "a chord of a 5-cycle implies a triangle");
        for (int i = 0; i < 5; ++i)
            dist.outcomes.push_back(leave_one_out(h, cycle, i, Rational(1, 5)));
        return dist;
    }

    if (l == 7 || l == 11) {
        std::set<PosPair> chord_set(dist.chords.begin(), dist.chords.end());
        if (l == 7) {
            if (chord_set.empty()) {
                for (int i = 0; i < 7; ++i)
                    dist.outcomes.push_back(leave_one_out(h, cycle, i, Rational(1, 7)));
                return dist;
            }
            for (const auto& pattern : detail::c7_chord_patterns()) {
                std::set<PosPair> canonical(pattern.chords.begin(), pattern.chords.end());
                for (int shift = 0; shift < 7; ++shift)
                    for (bool reflect : {false, true})
                        if (apply_symmetry(canonical, 7, shift, reflect) == chord_set) {
                            emit_table(dist, *pattern.table, cycle, shift, reflect);
                            return dist;
                        }
            }
            fail(ErrorKind::UnhandledChordPattern, "7-cycle chord set matches no stored pattern");
        }
        // l == 11: the table with the distance-4 chord needs a labeling where
        // (0,4) is a chord and neither (5,9) nor (4,8) is.
        bool has_dist4 = false;
        for (auto [i, j] : chord_set)
            if (cyc_dist(i, j, 11) == 4) has_dist4 = true;
        if (has_dist4) {
            // Positions p of the table map to cycle position sigma(p).
            for (int shift = 0; shift < 11; ++shift)
                for (bool reflect : {false, true}) {
                    auto sig = [&](int p) {
                        return reflect ? ((shift - p) % 11 + 11) % 11 : (p + shift) % 11;
                    };
                    auto has = [&](int a, int b) {
                        return chord_set.count(std::minmax(sig(a), sig(b))) > 0;
                    };
                    if (has(0, 4) && !has(5, 9) && !has(4, 8)) {
                        emit_table(dist, detail::kC11WithFiveChord, cycle, shift, reflect);
                        return dist;
                    }
                }
            fail(ErrorKind::UnhandledChordPattern, "no admissible labeling for the 11-cycle");
        }
        emit_table(dist, detail::kC11NoFiveChord, cycle, 0, false);
        return dist;
    }

    // General case: l = 4k + r, k >= 1, l not in {2,5,6,7,11}.
    int k = l / 4, r = l % 4;
    if (7 * r <= 4 * k) {
        Rational x(7 * l, 32 * k);
        for (int i = 0; i < l; ++i) {
            GadgetOutcome o;
            o.probability = x / l;
            for (int t = 0; t < k; ++t) o.family.blocks.push_back(window_block(cycle, i + 4 * t));
            dist.outcomes.push_back(std::move(o));
        }
        add_null(1 - x);
    } else {
        require(r == 2 || r == 3, ErrorKind::AssertionFailed, "unexpected residue in y-regime");
        Rational y(7 * r - 4 * k, 16);
        require(y > 0 && y < 1, ErrorKind::AssertionFailed, "y outside (0,1)");
        for (int i = 0; i < l; ++i) {
            GadgetOutcome longer, shorter;
            longer.probability = y / l;
            shorter.probability = (1 - y) / l;
            for (int t = 0; t < k; ++t) {
                longer.family.blocks.push_back(window_block(cycle, i + 4 * t));
                shorter.family.blocks.push_back(window_block(cycle, i + 4 * t));
            }
            int a = r == 2 ? (i + l - 2) % l : (i + l - 3) % l;
            int b = r == 2 ? (i + l - 1) % l : (i + l - 2) % l;
            longer.family.blocks.push_back(
                pair_block(cycle[static_cast<size_t>(a)], cycle[static_cast<size_t>(b)]));
            dist.outcomes.push_back(std::move(longer));
            dist.outcomes.push_back(std::move(shorter));
        }
    }
    return dist;
}

namespace {

// Row layouts for the path tables: vertex index sets, 1-based along the path.
using Row = std::vector<std::vector<int>>;

std::vector<int> run4(int a) { return {a, a + 1, a + 2, a + 3}; }
std::vector<int> run2(int a) { return {a, a + 1}; }

// Consecutive 4-sets a, a+4, ... while the last element stays <= last.
void push_run4s(Row& row, int a, int last) {
    for (int s = a; s + 3 <= last; s += 4) row.push_back(run4(s));
}

void push_run2s(Row& row, int a, int last) {
    for (int s = a; s + 1 <= last; s += 2) row.push_back(run2(s));
}

struct PathTable {
    std::vector<std::pair<int, Row>> rows;  // probability numerator over 8
};

PathTable path_table(int n, bool wrap_edge) {
    PathTable t;
    auto add = [&](int p, Row row) { t.rows.push_back({p, std::move(row)}); };
    std::vector<int> wrap = {n - 2, n - 1, n, 1};

    if (n == 5) {
        add(3, {{2, 3, 4, 5}});
        add(2, {{1, 2, 3, 4}});
        add(2, {{1, 2}, {4, 5}});
        add(1, {{1, 2}});
        return t;
    }
    int mod = n % 4;
    if (mod == 0) {  // n = 4k, k >= 2
        Row r1;
        push_run4s(r1, 1, n);
        add(2, r1);
        Row r2 = {run2(1)};
        push_run4s(r2, 3, n - 2);
        r2.push_back(run2(n - 1));
        add(2, r2);
        Row r3;
        push_run4s(r3, 2, n - 3);
        r3.push_back(run2(n - 2));
        add(1, r3);
        Row r4 = {run2(2)};
        push_run4s(r4, 4, n - 1);
        add(1, r4);
        if (!wrap_edge) {
            add(1, {run2(1)});
            Row r6;
            push_run2s(r6, 2, n - 3);
            r6.push_back(wrap);
            add(1, r6);
        } else {
            add(1, {run2(1), run2(n - 1)});
            Row r6;
            push_run2s(r6, 2, n - 1);
            add(1, r6);
        }
    } else if (mod == 1) {  // n = 4k+1, k >= 2
        Row r1;
        push_run4s(r1, 1, n - 1);
        add(2, r1);
        Row r2;
        push_run4s(r2, 2, n);
        add(2, r2);
        Row r3 = {run2(1)};
        push_run4s(r3, 3, n - 3);
        r3.push_back(run2(n - 1));
        add(wrap_edge ? 2 : 1, r3);
        Row r4 = {run2(1)};
        push_run4s(r4, 4, n - 2);
        r4.push_back(run2(n - 1));
        add(1, r4);
        if (!wrap_edge) {
            Row r5 = {run2(1)};
            push_run4s(r5, 4, n - 2);
            add(1, r5);
            add(1, {run2(2), wrap});
        } else {
            add(1, {run2(2), run2(n - 2)});
        }
    } else if (mod == 2) {  // n = 4k+2, k >= 1
        Row r1;
        push_run4s(r1, 1, n - 2);
        r1.push_back(run2(n - 1));
        add(2, r1);
        Row r2 = {run2(1)};
        push_run4s(r2, 3, n);
        add(2, r2);
        Row r3;
        push_run4s(r3, 2, n - 1);
        add(1, r3);
        Row r4 = {run2(2)};
        push_run4s(r4, 4, n - 3);
        r4.push_back(run2(n - 2));
        add(1, r4);
        if (!wrap_edge) {
            add(1, {run2(1)});
            Row r6;
            push_run2s(r6, 2, n - 3);
            r6.push_back(wrap);
            add(1, r6);
        } else {
            add(1, {run2(1), run2(n - 1)});
            Row r6;
            push_run2s(r6, 2, n - 1);
            add(1, r6);
        }
    } else {  // n = 4k+3, k >= 1
        Row r1;
        push_run4s(r1, 1, n - 3);
        r1.push_back(run2(n - 1));
        add(2, r1);
        Row r2 = {run2(1)};
        push_run4s(r2, 3, n - 1);
        add(2, r2);
        Row r3 = {run2(2)};
        push_run4s(r3, 4, n);
        add(1, r3);
        Row r4 = {run2(1)};
        push_run4s(r4, 4, n);
        add(1, r4);
        Row r5;
        push_run4s(r5, 2, n - 2);
        if (wrap_edge) r5.push_back(run2(n - 1));
        add(1, r5);
        add(1, wrap_edge ? Row{run2(2), run2(n - 2)} : Row{run2(2), wrap});
    }
    return t;
}

}  // namespace

GadgetDistribution gadget_for_path(const WeightedMultigraph& h, const std::vector<int>& path) {
    int n = static_cast<int>(path.size());
    require(n >= 5, ErrorKind::MalformedStructure, "path shorter than 5");
    require(h.adjacent(path[1], path[static_cast<size_t>(n - 1)]), ErrorKind::MalformedStructure,
            "p2 pn is not an edge of the host");
    bool wrap_edge = h.adjacent(path[0], path[static_cast<size_t>(n - 2)]);

    GadgetDistribution dist;
    dist.kind = GadgetDistribution::HostKind::Path;
    dist.host_vertices = path;
    dist.chords = find_chords(h, path, /*is_cycle=*/false);

    PathTable table = path_table(n, wrap_edge);
    int total = 0;
    for (const auto& [p, row] : table.rows) {
        GadgetOutcome o;
        o.probability = Rational(p, 8);
        total += p;
        for (const auto& set1 : row) {
            std::vector<int> verts;
            for (int idx : set1) verts.push_back(path[static_cast<size_t>(idx - 1)]);
            o.family.blocks.push_back(block_from_vertex_set(h, verts));
        }
        dist.outcomes.push_back(std::move(o));
    }
    require(total == 8, ErrorKind::AssertionFailed, "path table probabilities do not sum to 1");
    return dist;
}

}  // namespace bisect
