#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "bisect/graph.hpp"

namespace bisect {

enum class WeightModel { Unit, UniformRational };

// Fixed instances.
WeightedMultigraph petersen_graph();
WeightedMultigraph claw_graph();
WeightedMultigraph complete_graph(int k);
WeightedMultigraph cycle_graph(int l);
// k = 2t+1 extremal family: K_{2t,2t} plus a vertex joined to all of B and
// one vertex of A; every matching has at most k-1 edges.
WeightedMultigraph remark1_graph(int t);

// Random families; all deterministic in the seed. Weight assignment happens
// after the structure is fixed: unit, or p/q uniform with q <= 100, p/q <= 10.
WeightedMultigraph random_bounded_degree(int n, int dmax, uint64_t seed, WeightModel wm);
WeightedMultigraph random_cubic_bridgeless(int n, uint64_t seed, WeightModel wm);
WeightedMultigraph random_subcubic(int n, uint64_t seed, WeightModel wm);
// Triangle-free 2-edge-connected subcubic: a triangle-free bridgeless cubic
// pairing-model graph with 0-2 subdivided edges, or a plain cycle for small n.
WeightedMultigraph random_tf_subcubic_2ecc(int n, uint64_t seed, WeightModel wm);

// Named-class front end for the CLI: cubic-bridgeless, subcubic,
// tf-subcubic-2ecc, petersen, claw, complete(k), remark1(t), cycle(l).
WeightedMultigraph generate(const std::string& klass, int n, uint64_t seed, WeightModel wm);

// Isomorph-free enumeration of connected graphs with max degree <= 3 (unit
// weights), optionally restricted to triangle-free, for all orders <= n_max.
std::vector<WeightedMultigraph> enumerate_connected_subcubic(int n_max, bool triangle_free);

}  // namespace bisect
