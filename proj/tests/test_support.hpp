#pragma once
#include <random>
#include <utility>
#include <vector>

#include "bisect/generators.hpp"
#include "bisect/graph.hpp"

namespace bisect::testing {

inline WeightedMultigraph from_pairs(int n, const std::vector<std::pair<int, int>>& pairs,
                                     const Rational& w = 1) {
    WeightedMultigraph g(n);
    for (auto [u, v] : pairs) g.add_edge(u, v, w);
    return g;
}

inline WeightedMultigraph petersen() { return petersen_graph(); }
inline WeightedMultigraph claw() { return claw_graph(); }
inline WeightedMultigraph cycle(int l) { return cycle_graph(l); }
inline WeightedMultigraph complete(int k) { return complete_graph(k); }
inline WeightedMultigraph remark1(int t) { return remark1_graph(t); }

inline WeightedMultigraph k33() {
    return from_pairs(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
}

inline WeightedMultigraph random_bounded_degree(int n, int dmax, uint64_t seed,
                                                bool rational_weights) {
    return bisect::random_bounded_degree(
        n, dmax, seed, rational_weights ? WeightModel::UniformRational : WeightModel::Unit);
}

}  // namespace bisect::testing
