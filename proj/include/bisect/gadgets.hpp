#pragma once
#include <vector>

#include "bisect/family.hpp"
#include "bisect/graph.hpp"

namespace bisect {

struct GadgetOutcome {
    Rational probability;
    BalancedFamily family;  // empty family = null outcome
};

// Exact finite distribution over balanced families on one cycle or path of
// H - M. Engineered so every host edge survives with probability >= 5/8
// (>= 3/5 on 5-cycles) and vertex exclusion probabilities meet the per-length
// bounds checked by audit_gadget.
struct GadgetDistribution {
    enum class HostKind { Cycle, Path };
    HostKind kind = HostKind::Cycle;
    std::vector<int> host_vertices;            // cyclic or path order
    std::vector<std::pair<int, int>> chords;   // position pairs, i < j
    std::vector<GadgetOutcome> outcomes;

    Rational vertex_exclusion_probability(int vertex) const;
    Rational edge_inclusion_probability(const WeightedMultigraph& h, int edge_id) const;
};

// Dispatch on cycle length and chord pattern (figures for 7- and 11-cycles,
// rotation constructions otherwise).
GadgetDistribution gadget_for_cycle(const WeightedMultigraph& h, const std::vector<int>& cycle);

// Dispatch on n mod 4, the n = 5 table, and whether p1 p_{n-1} is an edge.
GadgetDistribution gadget_for_path(const WeightedMultigraph& h, const std::vector<int>& path);

// One balanced block on the induced subgraph of a vertex set: per-component
// 2-coloring plus an exact orientation balance.
BalancedBlock block_from_vertex_set(const WeightedMultigraph& h, const std::vector<int>& vertices);

}  // namespace bisect
