#include "bisect/bounded_degree.hpp"

#include "bisect/oracle.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace bisect;
using namespace bisect::testing;

TEST_CASE("bisect_via_chromatic_index examples") {
    auto k4 = complete(4);
    auto r = bisect_via_chromatic_index(k4);
    CHECK(r.bisection.cut_weight >= 4);
    CHECK(exact_max_bisection(k4).cut_weight == 4);

    auto c5 = cycle(5);
    r = bisect_via_chromatic_index(c5);
    CHECK(r.bisection.cut_weight >= 4);  // (4/6)*5 and integrality

    auto r1 = remark1(1);
    r = bisect_via_chromatic_index(r1);
    CHECK(r.bisection.cut_weight >= Rational(35, 8));
    CHECK(r.bisection.cut_weight <= exact_max_bisection(r1).cut_weight);
}

TEST_CASE("chromatic-index bound on random bounded-degree graphs") {
    for (uint64_t seed = 0; seed < 150; ++seed) {
        int n = 2 + static_cast<int>(seed % 19);
        int dmax = 1 + static_cast<int>(seed % 6);
        auto g = random_bounded_degree(n, dmax, 8800 + seed, true);
        auto r = bisect_via_chromatic_index(g);
        int k = g.max_degree();
        CHECK(r.bisection.cut_weight * 2 * (k + 1) >= (k + 2) * g.total_weight());
        CHECK(is_valid_bisection(g, r.bisection));
    }
}

TEST_CASE("forest_bisection on K4, K33, Petersen") {
    auto k4 = complete(4);
    auto fb = forest_bisection(k4, 1);
    CHECK(fb.certificate.sides_are_forests);
    CHECK(fb.certificate.cut_size == 4);
    CHECK(fb.certificate.max_degree_in_x <= 1);

    auto k = k33();
    fb = forest_bisection(k, 1);
    CHECK(fb.certificate.cut_size == 9);  // proper sides are independent

    auto pg = petersen();
    fb = forest_bisection(pg, 1);
    CHECK(fb.certificate.sides_are_forests);
    CHECK(fb.certificate.max_degree_in_x <= 1);
    CHECK(2 * fb.certificate.edges_in_y <= static_cast<int>(fb.bisection.side_y.size()));
    CHECK(fb.certificate.cut_size >= 10);  // (k+1)/(2k) * 15 for cubic graphs

    // Triple edge multigraph.
    WeightedMultigraph triple(2);
    for (int i = 0; i < 3; ++i) triple.add_edge(0, 1, 1);
    fb = forest_bisection(triple, 9);
    CHECK(fb.certificate.cut_size == 3);
}

TEST_CASE("solve_subcubic examples") {
    auto k4 = complete(4);
    auto b = solve_subcubic(k4, 3);
    CHECK(b.cut_weight >= 4);

    auto k13 = claw();
    b = solve_subcubic(k13, 3);
    CHECK(b.cut_weight >= 2);
    CHECK(exact_max_bisection(k13).cut_weight == 2);

    auto pg = petersen();
    b = solve_subcubic(pg, 3);
    CHECK(b.cut_weight >= 10);

    // Degenerate sizes.
    CHECK(solve_subcubic(WeightedMultigraph(0), 1).cut_weight == 0);
    CHECK(solve_subcubic(WeightedMultigraph(1), 1).cut_weight == 0);
    WeightedMultigraph one_edge(2);
    one_edge.add_edge(0, 1, Rational(7, 3));
    CHECK(solve_subcubic(one_edge, 1).cut_weight == Rational(7, 3));

    auto p3 = from_pairs(3, {{0, 1}, {1, 2}});
    b = solve_subcubic(p3, 5);
    CHECK(3 * b.cut_weight >= 2 * p3.total_weight());
}

namespace {

WeightedMultigraph random_subcubic(int n, uint64_t seed) {
    return random_bounded_degree(n, 3, seed, true);
}

}  // namespace

TEST_CASE("solve_subcubic guarantee on seeded random subcubic graphs") {
    for (uint64_t seed = 0; seed < 120; ++seed) {
        int n = 1 + static_cast<int>(seed % 20);
        auto g = random_subcubic(n, 13000 + seed);
        auto b = solve_subcubic(g, seed);
        CHECK(is_valid_bisection(g, b));
        CHECK(3 * b.cut_weight >= 2 * g.total_weight());
        if (n <= 12) CHECK(b.cut_weight <= exact_max_bisection(g).cut_weight);
    }
}
