#include "bisect/bounded_degree.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "bisect/match_color.hpp"

namespace bisect {

namespace {

std::vector<char> side_mask(int n, const std::vector<int>& side) {
    std::vector<char> mask(static_cast<size_t>(n), 0);
    for (int v : side) mask[static_cast<size_t>(v)] = 1;
    return mask;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<size_t>(a)] = b;
        return true;
    }
};

// Multigraph-aware: two parallel in-side edges already form a cycle.
bool side_is_forest(const WeightedMultigraph& h, const std::vector<char>& in_side) {
    UnionFind uf(h.vertex_count());
    for (const Edge& e : h.edges())
        if (in_side[static_cast<size_t>(e.u)] && in_side[static_cast<size_t>(e.v)])
            if (!uf.unite(e.u, e.v)) return false;
    return true;
}

int cut_size(const WeightedMultigraph& h, const std::vector<char>& in_x) {
    int c = 0;
    for (const Edge& e : h.edges())
        if (in_x[static_cast<size_t>(e.u)] != in_x[static_cast<size_t>(e.v)]) ++c;
    return c;
}

int induced_degree(const WeightedMultigraph& h, const std::vector<char>& in_side, int v) {
    int d = 0;
    for (int id : h.incident(v))
        if (in_side[static_cast<size_t>(h.edge(id).opposite(v))]) ++d;
    return d;
}

int max_induced_degree(const WeightedMultigraph& h, const std::vector<char>& in_side) {
    int d = 0;
    for (int v = 0; v < h.vertex_count(); ++v)
        if (in_side[static_cast<size_t>(v)]) d = std::max(d, induced_degree(h, in_side, v));
    return d;
}

int induced_edge_count(const WeightedMultigraph& h, const std::vector<char>& in_side) {
    int c = 0;
    for (const Edge& e : h.edges())
        if (in_side[static_cast<size_t>(e.u)] && in_side[static_cast<size_t>(e.v)]) ++c;
    return c;
}

// Vertices of the side lying on some in-side cycle (2-core of h[side]).
std::vector<int> cycle_vertices(const WeightedMultigraph& h, std::vector<char> in_side) {
    std::vector<int> deg(static_cast<size_t>(h.vertex_count()), 0);
    std::vector<int> queue;
    for (int v = 0; v < h.vertex_count(); ++v)
        if (in_side[static_cast<size_t>(v)]) {
            deg[static_cast<size_t>(v)] = induced_degree(h, in_side, v);
            if (deg[static_cast<size_t>(v)] <= 1) queue.push_back(v);
        }
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        if (!in_side[static_cast<size_t>(v)]) continue;
        in_side[static_cast<size_t>(v)] = 0;
        for (int id : h.incident(v)) {
            int o = h.edge(id).opposite(v);
            if (in_side[static_cast<size_t>(o)] && --deg[static_cast<size_t>(o)] <= 1)
                queue.push_back(o);
        }
    }
    std::vector<int> out;
    for (int v = 0; v < h.vertex_count(); ++v)
        if (in_side[static_cast<size_t>(v)]) out.push_back(v);
    return out;
}

// Hill-climb to closure under all cut-size-improving forest-preserving swaps.
void climb_to_closure(const WeightedMultigraph& h, std::vector<char>& in_x) {
    int n = h.vertex_count();
    auto swap_delta = [&](int v, int w) {
        // v leaves X, w joins X; v-w edges stay in the cut and contribute 0.
        int delta = 0;
        for (int id : h.incident(v)) {
            int o = h.edge(id).opposite(v);
            if (o == w) continue;
            delta += in_x[static_cast<size_t>(o)] ? 1 : -1;
        }
        for (int id : h.incident(w)) {
            int o = h.edge(id).opposite(w);
            if (o == v) continue;
            delta += in_x[static_cast<size_t>(o)] ? -1 : 1;
        }
        return delta;
    };
    bool improved = true;
    while (improved) {
        improved = false;
        for (int v = 0; v < n && !improved; ++v) {
            if (!in_x[static_cast<size_t>(v)]) continue;
            for (int w = 0; w < n && !improved; ++w) {
                if (in_x[static_cast<size_t>(w)]) continue;
                if (swap_delta(v, w) <= 0) continue;
                in_x[static_cast<size_t>(v)] = 0;
                in_x[static_cast<size_t>(w)] = 1;
                if (side_is_forest(h, in_x)) {
                    std::vector<char> other(in_x.size());
                    for (size_t i = 0; i < in_x.size(); ++i) other[i] = !in_x[i];
                    if (side_is_forest(h, other)) {
                        improved = true;
                        break;
                    }
                }
                in_x[static_cast<size_t>(v)] = 1;
                in_x[static_cast<size_t>(w)] = 0;
            }
        }
    }
}

std::optional<std::vector<char>> initial_forest_partition(const WeightedMultigraph& h,
                                                          uint64_t seed) {
    int n = h.vertex_count();
    auto forests_both = [&](const std::vector<char>& in_x) {
        std::vector<char> other(in_x.size());
        for (size_t i = 0; i < in_x.size(); ++i) other[i] = !in_x[i];
        return side_is_forest(h, in_x) && side_is_forest(h, other);
    };

    const int kRestarts = 200;
    for (int restart = 0; restart < kRestarts; ++restart) {
        std::mt19937_64 rng(seed + 1000003ull * static_cast<uint64_t>(restart));
        std::vector<int> perm(static_cast<size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<char> in_x(static_cast<size_t>(n), 0);
        for (int i = 0; i < n / 2; ++i) in_x[static_cast<size_t>(perm[static_cast<size_t>(i)])] = 1;

        for (int move = 0; move < 50 * n; ++move) {
            if (forests_both(in_x)) return in_x;
            std::vector<char> other(in_x.size());
            for (size_t i = 0; i < in_x.size(); ++i) other[i] = !in_x[i];
            bool fix_x = !side_is_forest(h, in_x);
            const std::vector<char>& broken = fix_x ? in_x : other;
            auto cyc = cycle_vertices(h, broken);
            int v = cyc[0];
            int best_deg = induced_degree(h, broken, v);
            for (int c : cyc) {
                int d = induced_degree(h, broken, c);
                if (d > best_deg) {
                    v = c;
                    best_deg = d;
                }
            }
            // Targets on the other side whose replacement by v stays a forest.
            std::vector<int> targets, all_other;
            for (int w = 0; w < n; ++w) {
                if (in_x[static_cast<size_t>(w)] == in_x[static_cast<size_t>(v)]) continue;
                all_other.push_back(w);
                std::vector<char> candidate = fix_x ? other : in_x;
                candidate[static_cast<size_t>(w)] = 0;
                candidate[static_cast<size_t>(v)] = 1;
                if (side_is_forest(h, candidate)) targets.push_back(w);
            }
            const std::vector<int>& pool = targets.empty() ? all_other : targets;
            int w = pool[rng() % pool.size()];
            std::swap(in_x[static_cast<size_t>(v)], in_x[static_cast<size_t>(w)]);
        }
    }

    if (n <= 16) {
        std::vector<char> in_x(static_cast<size_t>(n), 0);
        auto rec = [&](auto&& self, int v, int slots) -> bool {
            if (slots == 0) return forests_both(in_x);
            if (n - v < slots) return false;
            in_x[static_cast<size_t>(v)] = 1;
            if (self(self, v + 1, slots - 1)) return true;
            in_x[static_cast<size_t>(v)] = 0;
            return self(self, v + 1, slots);
        };
        in_x[0] = 1;
        if (rec(rec, 1, n / 2 - 1)) return in_x;
    }
    return std::nullopt;
}

}  // namespace

ForestBisection forest_bisection(const WeightedMultigraph& h, uint64_t seed) {
    int n = h.vertex_count();
    require(n % 2 == 0 && n >= 2, ErrorKind::PreconditionViolated,
            "forest_bisection needs an even-order multigraph");
    for (int v = 0; v < n; ++v)
        require(h.degree(v) == 3, ErrorKind::PreconditionViolated,
                "forest_bisection needs a 3-regular multigraph");

    auto init = initial_forest_partition(h, seed);
    require(init.has_value(), ErrorKind::InitializationExhausted,
            "forest bisection restarts and exhaustive fallback spent");
    std::vector<char> in_x = *init;
    climb_to_closure(h, in_x);

    // Relabel so X is the low-degree side.
    std::vector<char> other(in_x.size());
    for (size_t i = 0; i < in_x.size(); ++i) other[i] = !in_x[i];
    if (max_induced_degree(h, in_x) > max_induced_degree(h, other)) in_x.swap(other);

    ForestBisection out;
    for (int v = 0; v < n; ++v)
        (in_x[static_cast<size_t>(v)] ? out.bisection.side_x : out.bisection.side_y).push_back(v);
    out.bisection.cut_weight = cut_weight_between(h, in_x);
    out.certificate.sides_are_forests = side_is_forest(h, in_x) && side_is_forest(h, other);
    out.certificate.max_degree_in_x = max_induced_degree(h, in_x);
    out.certificate.edges_in_y = induced_edge_count(h, other);
    out.certificate.cut_size = cut_size(h, in_x);
    require(out.certificate.sides_are_forests, ErrorKind::AssertionFailed, "sides not forests");
    require(out.certificate.max_degree_in_x <= 1, ErrorKind::AssertionFailed,
            "closure left both sides with induced degree >= 2");
    require(2 * out.certificate.edges_in_y <= static_cast<int>(out.bisection.side_y.size()),
            ErrorKind::AssertionFailed, "|E(h[Y])| > |Y|/2 after closure");
    return out;
}

ChromaticBisection bisect_via_chromatic_index(const WeightedMultigraph& g) {
    require(g.is_simple(), ErrorKind::NotSimple, "bisect_via_chromatic_index needs a simple graph");
    int delta = g.max_degree();
    Rational w = g.total_weight();
    ChromaticBisection out;
    out.guaranteed_bound = Rational(delta + 2, 2 * (delta + 1)) * w;

    if (g.edge_count() == 0) {
        Bisection b;
        for (int v = 0; v < g.vertex_count(); ++v)
            (v < (g.vertex_count() + 1) / 2 ? b.side_x : b.side_y).push_back(v);
        b.cut_weight = 0;
        out.bisection = b;
        return out;
    }

    auto coloring = vizing_color(g);
    auto heavy = heaviest_color_class(g, coloring);
    BalancedFamily fam;
    for (int id : heavy.edge_ids) {
        const Edge& e = g.edge(id);
        fam.blocks.push_back({{std::min(e.u, e.v)}, {std::max(e.u, e.v)}});
    }
    out.colors_used = coloring.color_count;
    out.bisection = round_to_bisection(g, fam, RoundingMode::Derandomized);
    int c = coloring.color_count;
    require(out.bisection.cut_weight * (2 * c) >= (c + 1) * w, ErrorKind::AssertionFailed,
            "chromatic-index bound failed");
    require(out.bisection.cut_weight >= out.guaranteed_bound, ErrorKind::AssertionFailed,
            "reported (Delta+2)/(2(Delta+1)) bound failed");
    return out;
}

namespace {

// ---- 2/3 pipeline -------------------------------------------------------

struct PaddedGraph {
    WeightedMultigraph h;
    int extra_vertices = 0;  // appended after the original ids
};

Bisection strip_vertices(const Bisection& b, int keep_n) {
    Bisection out;
    for (int v : b.side_x)
        if (v < keep_n) out.side_x.push_back(v);
    for (int v : b.side_y)
        if (v < keep_n) out.side_y.push_back(v);
    out.cut_weight = b.cut_weight;  // stripped vertices carry weight-0 edges only
    return out;
}

// Family of singleton-side blocks for a set of vertex-disjoint edges.
void add_matching_blocks(BalancedFamily& fam, const WeightedMultigraph& g,
                         const std::vector<int>& edge_ids) {
    for (int id : edge_ids) {
        const Edge& e = g.edge(id);
        fam.blocks.push_back({{std::min(e.u, e.v)}, {std::max(e.u, e.v)}});
    }
}

std::vector<int> induced_edges(const WeightedMultigraph& g, const std::vector<char>& in_side,
                               const std::vector<char>& excluded) {
    std::vector<int> ids;
    for (const Edge& e : g.edges()) {
        if (excluded[static_cast<size_t>(e.u)] || excluded[static_cast<size_t>(e.v)]) continue;
        if (in_side[static_cast<size_t>(e.u)] && in_side[static_cast<size_t>(e.v)])
            ids.push_back(e.id);
    }
    return ids;
}

// Case 1: h is 3-regular. Returns a bisection of h's vertex set with
// weight >= 2/3 w(h).
Bisection solve_cubic_case(const WeightedMultigraph& h, uint64_t seed) {
    auto fb = forest_bisection(h, seed);
    Rational w = h.total_weight();
    if (3 * fb.bisection.cut_weight >= 2 * w) return fb.bisection;

    auto in_x = side_mask(h.vertex_count(), fb.bisection.side_x);
    std::vector<char> in_y(in_x.size());
    for (size_t i = 0; i < in_x.size(); ++i) in_y[i] = !in_x[i];
    std::vector<char> none(in_x.size(), 0);

    BalancedFamily fam = forest_to_family(h, induced_edges(h, in_y, none), fb.bisection.side_y);
    add_matching_blocks(fam, h, induced_edges(h, in_x, none));
    Bisection rounded = round_to_bisection(h, fam, RoundingMode::Derandomized);
    Bisection best = rounded.cut_weight >= fb.bisection.cut_weight ? rounded : fb.bisection;
    require(3 * best.cut_weight >= 2 * w, ErrorKind::AssertionFailed, "cubic case fell below 2/3");
    return best;
}

// Case 2: h3 is 3-regular after adding x, y to a graph with one degree-1
// vertex z; returns a bisection of h3 - {x, y} with weight >= 2/3 w.
Bisection solve_degree_one_case(const WeightedMultigraph& h3, int z, int x, int y, uint64_t seed) {
    Rational w = h3.total_weight();
    const int kRetries = 64;
    for (int retry = 0; retry < kRetries; ++retry) {
        auto fb = forest_bisection(h3, seed + 7919ull * static_cast<uint64_t>(retry));
        auto in_x = side_mask(h3.vertex_count(), fb.bisection.side_x);
        if (!in_x[static_cast<size_t>(x)]) std::swap(x, y);  // x and y are twins
        require(in_x[static_cast<size_t>(x)] && !in_x[static_cast<size_t>(y)],
                ErrorKind::AssertionFailed, "x and y on one side of a forest bisection");
        std::vector<char> in_y(in_x.size());
        for (size_t i = 0; i < in_x.size(); ++i) in_y[i] = !in_x[i];

        std::vector<char> exclude_xy(in_x.size(), 0);
        exclude_xy[static_cast<size_t>(x)] = exclude_xy[static_cast<size_t>(y)] = 1;

        if (in_x[static_cast<size_t>(z)]) {
            // z landed on the matching side.
            int degree_y = max_induced_degree(h3, in_y);
            if (degree_y <= 1) {
                BalancedFamily fam;
                add_matching_blocks(fam, h3, induced_edges(h3, in_x, exclude_xy));
                add_matching_blocks(fam, h3, induced_edges(h3, in_y, exclude_xy));
                fam.blocks.push_back({{std::min(x, y)}, {std::max(x, y)}});
                Bisection rounded = round_to_bisection(h3, fam, RoundingMode::Derandomized);
                return rounded.cut_weight >= fb.bisection.cut_weight ? rounded : fb.bisection;
            }
            if (degree_y == 3) continue;  // impossible at closure; retry on failure
            int wv = -1;
            for (int v = 0; v < h3.vertex_count() && wv == -1; ++v)
                if (in_y[static_cast<size_t>(v)] && induced_degree(h3, in_y, v) == 2) wv = v;
            require(wv != -1, ErrorKind::AssertionFailed, "no degree-2 vertex in Y");
            int wprime = -1;
            for (int id : h3.incident(wv)) {
                int o = h3.edge(id).opposite(wv);
                if (in_x[static_cast<size_t>(o)]) wprime = o;
            }
            require(wprime != -1, ErrorKind::AssertionFailed, "w has no neighbour in X");
            if (induced_degree(h3, in_x, wprime) != 0) continue;  // contradicts closure; retry

            // Swap w and z; the proof asserts (i)-(iii) still hold.
            in_x[static_cast<size_t>(z)] = 0;
            in_x[static_cast<size_t>(wv)] = 1;
            in_y[static_cast<size_t>(z)] = 1;
            in_y[static_cast<size_t>(wv)] = 0;
            bool ok = side_is_forest(h3, in_x) && side_is_forest(h3, in_y) &&
                      max_induced_degree(h3, in_x) <= 1 &&
                      2 * induced_edge_count(h3, in_y) <=
                          h3.vertex_count() - static_cast<int>(fb.bisection.side_x.size());
            if (!ok) continue;
            fb.bisection.side_x.clear();
            fb.bisection.side_y.clear();
            for (int v = 0; v < h3.vertex_count(); ++v)
                (in_x[static_cast<size_t>(v)] ? fb.bisection.side_x : fb.bisection.side_y)
                    .push_back(v);
            fb.bisection.cut_weight = cut_weight_between(h3, in_x);
        }

        // z on the forest side, either originally or after the swap.
        if (3 * fb.bisection.cut_weight >= 2 * w) return fb.bisection;

        std::vector<int> y_minus;
        for (int v = 0; v < h3.vertex_count(); ++v)
            if (in_y[static_cast<size_t>(v)] && v != y) y_minus.push_back(v);
        std::vector<char> in_y_minus = in_y;
        in_y_minus[static_cast<size_t>(y)] = 0;
        std::vector<char> none(in_x.size(), 0);
        BalancedFamily fam = forest_to_family(h3, induced_edges(h3, in_y_minus, none), y_minus);
        add_matching_blocks(fam, h3, induced_edges(h3, in_x, exclude_xy));
        fam.blocks.push_back({{std::min(x, y)}, {std::max(x, y)}});
        Bisection rounded = round_to_bisection(h3, fam, RoundingMode::Derandomized);
        return rounded.cut_weight >= fb.bisection.cut_weight ? rounded : fb.bisection;
    }
    fail(ErrorKind::InitializationExhausted, "degree-one case retries spent");
}

}  // namespace

Bisection solve_subcubic(const WeightedMultigraph& g, uint64_t seed) {
    require(g.is_simple(), ErrorKind::NotSimple, "solve_subcubic needs a simple graph");
    require(g.max_degree() <= 3, ErrorKind::PreconditionViolated, "max degree exceeds 3");
    int n = g.vertex_count();
    if (n == 0) return Bisection{{}, {}, 0};

    // Pad with weight-0 edges until at most one vertex has degree < 3.
    WeightedMultigraph h = g;
    auto deficient = [&]() {
        std::vector<int> out;
        for (int v = 0; v < h.vertex_count(); ++v)
            if (h.degree(v) < 3) out.push_back(v);
        return out;
    };
    auto pad = [&]() {
        for (auto d = deficient(); d.size() >= 2; d = deficient()) h.add_edge(d[0], d[1], 0);
    };
    pad();

    auto d = deficient();
    Bisection result;
    if (d.empty()) {
        result = solve_cubic_case(h, seed);
    } else if (h.degree(d[0]) == 2) {
        // Case 3: append z' with a weight-0 pendant edge, then Case 2.
        int z = d[0];
        WeightedMultigraph h2(h.vertex_count() + 1);
        for (const Edge& e : h.edges()) h2.add_edge(e.u, e.v, e.w);
        int zprime = h.vertex_count();
        h2.add_edge(z, zprime, 0);
        WeightedMultigraph h3(h2.vertex_count() + 2);
        for (const Edge& e : h2.edges()) h3.add_edge(e.u, e.v, e.w);
        int xv = h2.vertex_count(), yv = h2.vertex_count() + 1;
        h3.add_edge(xv, yv, 0);
        h3.add_edge(xv, yv, 0);
        h3.add_edge(xv, zprime, 0);
        h3.add_edge(yv, zprime, 0);
        result = strip_vertices(solve_degree_one_case(h3, zprime, xv, yv, seed), n);
    } else if (h.degree(d[0]) == 1) {
        int z = d[0];
        WeightedMultigraph h3(h.vertex_count() + 2);
        for (const Edge& e : h.edges()) h3.add_edge(e.u, e.v, e.w);
        int xv = h.vertex_count(), yv = h.vertex_count() + 1;
        h3.add_edge(xv, yv, 0);
        h3.add_edge(xv, yv, 0);
        h3.add_edge(xv, z, 0);
        h3.add_edge(yv, z, 0);
        result = strip_vertices(solve_degree_one_case(h3, z, xv, yv, seed), n);
    } else {
        // Isolated leftover: give it a pendant partner and pad to a triple edge.
        int z = d[0];
        WeightedMultigraph h2(h.vertex_count() + 1);
        for (const Edge& e : h.edges()) h2.add_edge(e.u, e.v, e.w);
        int zprime = h.vertex_count();
        for (int i = 0; i < 3; ++i) h2.add_edge(z, zprime, 0);
        result = strip_vertices(solve_cubic_case(h2, seed), n);
    }

    result.cut_weight = recompute_cut_weight(g, result);
    require(is_valid_bisection(g, result), ErrorKind::AssertionFailed,
            "subcubic pipeline produced an invalid bisection");
    require(3 * result.cut_weight >= 2 * g.total_weight(), ErrorKind::AssertionFailed,
            "subcubic guarantee 2/3 failed");
    return result;
}

}  // namespace bisect
