#pragma once
#include <cstdint>

#include "bisect/family.hpp"
#include "bisect/graph.hpp"

namespace bisect {

struct ChromaticBisection {
    Bisection bisection;
    Rational guaranteed_bound;  // (Delta+2)/(2(Delta+1)) * w(g)
    int colors_used = 0;
};

// Color with <= Delta+1 colors, round the heaviest class as a matching family.
// Achieved weight is >= (c+1)/(2c) * w(g) for the c colors actually used.
ChromaticBisection bisect_via_chromatic_index(const WeightedMultigraph& g);

struct ForestCertificate {
    bool sides_are_forests = false;
    int max_degree_in_x = 0;       // after relabeling, <= 1
    int edges_in_y = 0;            // <= |Y|/2
    int cut_size = 0;              // edge count, with multiplicity
};

struct ForestBisection {
    Bisection bisection;
    ForestCertificate certificate;
};

// A bisection of a cubic multigraph whose sides induce forests, closed under
// all cut-size-improving single-pair swaps that keep both sides forests.
// After relabeling, max induced degree in X is <= 1 and |E(h[Y])| <= |Y|/2.
ForestBisection forest_bisection(const WeightedMultigraph& h, uint64_t seed);

// The 2/3-guarantee pipeline for simple subcubic graphs.
Bisection solve_subcubic(const WeightedMultigraph& g, uint64_t seed);

}  // namespace bisect
