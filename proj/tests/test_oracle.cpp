#include "bisect/oracle.hpp"

#include <algorithm>

#include "doctest.h"
#include "test_support.hpp"

using namespace bisect;
using namespace bisect::testing;

TEST_CASE("exact_max_bisection anchors") {
    CHECK(exact_max_bisection(claw()).cut_weight == 2);
    CHECK(exact_max_bisection(petersen()).cut_weight == 11);
    CHECK(exact_max_bisection(complete(4)).cut_weight == 4);
    CHECK(exact_max_bisection(cycle(5)).cut_weight == 4);
    CHECK(exact_max_bisection(cycle(6)).cut_weight == 6);
    CHECK(exact_max_bisection(WeightedMultigraph(0)).cut_weight == 0);
    CHECK(exact_max_bisection(WeightedMultigraph(1)).cut_weight == 0);
}

TEST_CASE("exact_max_cut anchors") {
    CHECK(exact_max_cut(cycle(5)).weight == 4);
    CHECK(exact_max_cut(cycle(4)).weight == 4);
    CHECK(exact_max_cut(complete(4)).weight == 4);
}

TEST_CASE("budget guard") {
    CHECK_THROWS_AS((void)exact_max_bisection(WeightedMultigraph(25), 24), Error);
    CHECK_THROWS_AS((void)exact_max_cut(WeightedMultigraph(25), 24), Error);
}

namespace {

Rational naive_max_bisection(const WeightedMultigraph& g) {
    int n = g.vertex_count();
    Rational best = -1;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (2 * size != n && 2 * size != n + 1 && 2 * size != n - 1) continue;
        Rational cut = 0;
        for (const Edge& e : g.edges())
            if (((mask >> e.u) & 1u) != ((mask >> e.v) & 1u)) cut += e.w;
        best = std::max(best, cut);
    }
    return best;
}

}  // namespace

TEST_CASE("oracle agrees with naive enumeration on random graphs") {
    for (uint64_t seed = 0; seed < 100; ++seed) {
        int n = 2 + static_cast<int>(seed % 9);
        auto g = random_bounded_degree(n, 5, 60000 + seed, true);
        CHECK(exact_max_bisection(g).cut_weight == naive_max_bisection(g));
    }
}

TEST_CASE("relabeling and positive scaling invariance") {
    for (uint64_t seed = 0; seed < 40; ++seed) {
        int n = 4 + static_cast<int>(seed % 7);
        auto g = random_bounded_degree(n, 4, 777 + seed, true);
        Rational base = exact_max_bisection(g).cut_weight;

        std::mt19937_64 rng(seed);
        std::vector<int> perm(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) perm[static_cast<size_t>(v)] = v;
        std::shuffle(perm.begin(), perm.end(), rng);
        WeightedMultigraph relabeled(n);
        for (const Edge& e : g.edges())
            relabeled.add_edge(perm[static_cast<size_t>(e.u)], perm[static_cast<size_t>(e.v)], e.w);
        CHECK(exact_max_bisection(relabeled).cut_weight == base);

        Rational scale(3, 7);
        WeightedMultigraph scaled(n);
        for (const Edge& e : g.edges()) scaled.add_edge(e.u, e.v, e.w * scale);
        CHECK(exact_max_bisection(scaled).cut_weight == base * scale);
    }
}

TEST_CASE("verify_bisection verdicts") {
    auto c4 = cycle(4);
    Bisection good{{0, 2}, {1, 3}, 4};
    CHECK(verify_bisection(c4, good, 4).pass);
    CHECK_FALSE(verify_bisection(c4, good, 5).pass);

    Bisection unbalanced{{0, 1, 2}, {3}, 2};
    auto verdict = verify_bisection(c4, unbalanced, 0);
    CHECK_FALSE(verdict.pass);

    Bisection stale{{0, 2}, {1, 3}, 3};
    CHECK_FALSE(verify_bisection(c4, stale, 0).pass);

    Bisection not_partition{{0, 2}, {1, 1}, 4};
    CHECK_FALSE(verify_bisection(c4, not_partition, 0).pass);
}
