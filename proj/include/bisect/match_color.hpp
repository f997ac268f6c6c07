#pragma once
#include <optional>

#include "bisect/graph.hpp"

namespace bisect {

struct EdgeColoring {
    std::vector<int> color_of;  // edge id -> color in [0, color_count)
    int color_count = 0;
};

bool is_proper_coloring(const WeightedMultigraph& g, const EdgeColoring& coloring);

// Exact maximum-weight matching by branch and bound over the lowest free
// vertex; deterministic. Desk scale (n <= ~24).
Matching max_weight_matching(const WeightedMultigraph& g);

// Constructive Vizing/Misra-Gries coloring of a simple graph with at most
// Delta+1 colors. Edges are processed in ascending id order and fans extend
// by the smallest usable color, so the result is deterministic.
EdgeColoring vizing_color(const WeightedMultigraph& g);

Matching heaviest_color_class(const WeightedMultigraph& g, const EdgeColoring& coloring);

// Some perfect matching if one exists.
std::optional<Matching> perfect_matching(const WeightedMultigraph& g);

// Perfect matching through a required edge of a bridgeless cubic multigraph.
// Doubled pairs are replaced by the 2-vertex gadget, the matching is found in
// the resulting simple graph, and translated back.
Matching forced_perfect_matching(const WeightedMultigraph& g, int forced_edge);

}  // namespace bisect
