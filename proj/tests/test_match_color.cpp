#include "bisect/match_color.hpp"

#include <set>

#include "doctest.h"
#include "test_support.hpp"

using namespace bisect;
using namespace bisect::testing;

namespace {

Rational brute_force_max_matching(const WeightedMultigraph& g) {
    Rational best = 0;
    std::vector<char> used(static_cast<size_t>(g.vertex_count()), 0);
    auto rec = [&](auto&& self, int from, Rational acc) -> void {
        if (acc > best) best = acc;
        for (int id = from; id < g.edge_count(); ++id) {
            const Edge& e = g.edge(id);
            if (used[static_cast<size_t>(e.u)] || used[static_cast<size_t>(e.v)]) continue;
            used[static_cast<size_t>(e.u)] = used[static_cast<size_t>(e.v)] = 1;
            self(self, id + 1, acc + e.w);
            used[static_cast<size_t>(e.u)] = used[static_cast<size_t>(e.v)] = 0;
        }
    };
    rec(rec, 0, 0);
    return best;
}

}  // namespace

TEST_CASE("max_weight_matching examples") {
    WeightedMultigraph tri(3);
    tri.add_edge(0, 1, 1);
    tri.add_edge(1, 2, 2);
    tri.add_edge(0, 2, 3);
    CHECK(max_weight_matching(tri).weight(tri) == 3);

    WeightedMultigraph p4(4);
    p4.add_edge(0, 1, 1);
    p4.add_edge(1, 2, 5);
    p4.add_edge(2, 3, 1);
    CHECK(max_weight_matching(p4).weight(p4) == 5);

    // Remark-1 family, k = 3: maximum matching size is 2 = k - 1.
    auto r1 = remark1(1);
    auto m = max_weight_matching(r1);
    CHECK(m.size() == 2);
}

TEST_CASE("max_weight_matching equals exhaustive enumeration, n <= 12") {
    for (uint64_t seed = 0; seed < 80; ++seed) {
        int n = 4 + static_cast<int>(seed % 9);
        auto g = random_bounded_degree(n, 5, 2200 + seed, true);
        CHECK(max_weight_matching(g).weight(g) == brute_force_max_matching(g));
    }
}

TEST_CASE("vizing coloring examples") {
    auto c4 = cycle(4);
    auto col = vizing_color(c4);
    CHECK(col.color_count == 2);
    CHECK(is_proper_coloring(c4, col));

    auto c5 = cycle(5);
    col = vizing_color(c5);
    CHECK(col.color_count == 3);

    auto r1 = remark1(1);
    col = vizing_color(r1);
    CHECK(is_proper_coloring(r1, col));
    CHECK(col.color_count == 4);

    WeightedMultigraph multi(2);
    multi.add_edge(0, 1, 1);
    multi.add_edge(0, 1, 1);
    CHECK_THROWS_AS((void)vizing_color(multi), Error);
}

namespace {

bool exhaustive_colorable(const WeightedMultigraph& g, int colors) {
    std::vector<int> assign(static_cast<size_t>(g.edge_count()), -1);
    auto ok = [&](int eid, int c) {
        const Edge& e = g.edge(eid);
        for (int v : {e.u, e.v})
            for (int id : g.incident(v))
                if (id != eid && assign[static_cast<size_t>(id)] == c) return false;
        return true;
    };
    auto rec = [&](auto&& self, int eid) -> bool {
        if (eid == g.edge_count()) return true;
        for (int c = 0; c < colors; ++c)
            if (ok(eid, c)) {
                assign[static_cast<size_t>(eid)] = c;
                if (self(self, eid + 1)) return true;
                assign[static_cast<size_t>(eid)] = -1;
            }
        return false;
    };
    return rec(rec, 0);
}

}  // namespace

TEST_CASE("odd cycles and the Remark-1 graph are Class 2") {
    CHECK_FALSE(exhaustive_colorable(cycle(5), 2));
    CHECK_FALSE(exhaustive_colorable(remark1(1), 3));
    CHECK(exhaustive_colorable(remark1(1), 4));
}

TEST_CASE("vizing is proper with <= Delta+1 colors on 500 random graphs") {
    for (uint64_t seed = 0; seed < 500; ++seed) {
        int n = 2 + static_cast<int>(seed % 29);
        int dmax = 1 + static_cast<int>(seed % 8);
        auto g = random_bounded_degree(n, dmax, 31337 + seed, false);
        auto col = vizing_color(g);
        CHECK(is_proper_coloring(g, col));
        CHECK(col.color_count <= g.max_degree() + 1);
    }
}

TEST_CASE("heaviest_color_class") {
    auto c4 = cycle(4);
    auto col = vizing_color(c4);
    auto m = heaviest_color_class(c4, col);
    CHECK(m.weight(c4) >= 2);

    WeightedMultigraph c6(6);
    Rational ws[] = {3, 1, 3, 1, 3, 1};
    for (int i = 0; i < 6; ++i) c6.add_edge(i, (i + 1) % 6, ws[i]);
    col = vizing_color(c6);
    CHECK(col.color_count == 2);
    CHECK(heaviest_color_class(c6, col).weight(c6) == 9);

    auto r1 = remark1(1);
    col = vizing_color(r1);
    auto heavy = heaviest_color_class(r1, col);
    CHECK(heavy.weight(r1) >= 2);  // >= ceil(7/4) by integrality

    // Improper coloring is rejected.
    EdgeColoring broken;
    broken.color_of.assign(static_cast<size_t>(c4.edge_count()), 0);
    broken.color_count = 1;
    CHECK_THROWS_AS((void)heaviest_color_class(c4, broken), Error);
}

TEST_CASE("heaviest class weight * color count >= total weight, exactly") {
    for (uint64_t seed = 0; seed < 120; ++seed) {
        int n = 3 + static_cast<int>(seed % 16);
        auto g = random_bounded_degree(n, 6, 909 + seed, true);
        auto col = vizing_color(g);
        if (col.color_count == 0) continue;
        auto m = heaviest_color_class(g, col);
        CHECK(m.weight(g) * col.color_count >= g.total_weight());
    }
}

TEST_CASE("perfect_matching basics") {
    auto p3 = from_pairs(3, {{0, 1}, {1, 2}});
    CHECK_FALSE(perfect_matching(p3).has_value());

    auto c6 = cycle(6);
    auto m = perfect_matching(c6);
    REQUIRE(m.has_value());
    CHECK(is_perfect_matching(c6, *m));

    auto pm = perfect_matching(petersen());
    REQUIRE(pm.has_value());
    CHECK(pm->size() == 5);
}

TEST_CASE("forced_perfect_matching: K4, K33, Petersen, multigraphs") {
    auto k4 = complete(4);
    for (int e = 0; e < k4.edge_count(); ++e) {
        auto m = forced_perfect_matching(k4, e);
        CHECK(is_perfect_matching(k4, m));
        CHECK(m.contains(e));
        CHECK(m.size() == 2);
    }
    auto k = k33();
    for (int e = 0; e < k.edge_count(); ++e) CHECK(forced_perfect_matching(k, e).contains(e));
    auto pg = petersen();
    for (int e = 0; e < pg.edge_count(); ++e) {
        auto m = forced_perfect_matching(pg, e);
        CHECK(is_perfect_matching(pg, m));
        CHECK(m.contains(e));
    }

    // Doubled pair: C4 with one edge doubled and the opposite one too (cubic).
    WeightedMultigraph mg(4);
    mg.add_edge(0, 1, 1);
    mg.add_edge(0, 1, 0);
    mg.add_edge(1, 2, 1);
    mg.add_edge(2, 3, 1);
    mg.add_edge(2, 3, 0);
    mg.add_edge(3, 0, 1);
    for (int e = 0; e < mg.edge_count(); ++e) {
        auto m = forced_perfect_matching(mg, e);
        CHECK(is_perfect_matching(mg, m));
        CHECK(m.contains(e));
    }

    // Triple edge component.
    WeightedMultigraph triple(2);
    triple.add_edge(0, 1, 1);
    triple.add_edge(0, 1, 0);
    triple.add_edge(0, 1, 0);
    for (int e = 0; e < 3; ++e) CHECK(forced_perfect_matching(triple, e).contains(e));

    // Claw is not cubic: precondition violation.
    CHECK_THROWS_AS((void)forced_perfect_matching(claw(), 0), Error);
}

namespace {

// Random bridgeless cubic multigraph via the pairing model with rejection.
WeightedMultigraph random_bridgeless_cubic_multigraph(int n, uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int tries = 0; tries < 100000; ++tries) {
        std::vector<int> points;
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < 3; ++i) points.push_back(v);
        std::shuffle(points.begin(), points.end(), rng);
        WeightedMultigraph g(n);
        bool ok = true;
        for (size_t i = 0; i < points.size(); i += 2) {
            if (points[i] == points[i + 1]) {
                ok = false;
                break;
            }
            g.add_edge(points[i], points[i + 1], 1);
        }
        if (!ok) continue;
        if (!g.is_connected()) continue;
        if (!bridges_and_2ecc(g).bridge_edges.empty()) continue;
        bool triple_plus = false;
        for (int u = 0; u < n && !triple_plus; ++u)
            for (int v : g.neighbors(u))
                if (g.edges_between(u, v).size() > 3) triple_plus = true;
        if (triple_plus) continue;
        return g;
    }
    FAIL("pairing model rejection budget exceeded");
    return WeightedMultigraph(0);
}

}  // namespace

TEST_CASE("forced_perfect_matching on 200 random bridgeless cubic multigraphs") {
    for (uint64_t inst = 0; inst < 200; ++inst) {
        int n = 4 + 2 * static_cast<int>(inst % 7);  // 4..16
        auto g = random_bridgeless_cubic_multigraph(n, 5000 + inst);
        for (int e = 0; e < g.edge_count(); ++e) {
            auto m = forced_perfect_matching(g, e);
            CHECK(is_perfect_matching(g, m));
            CHECK(m.contains(e));
        }
    }
}
