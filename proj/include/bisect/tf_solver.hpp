#pragma once
#include <cstdint>
#include <random>
#include <string>

#include "bisect/family.hpp"
#include "bisect/gadgets.hpp"
#include "bisect/graph.hpp"

namespace bisect {

// Outcome of the preprocessing step: the derived multigraph H (or H'' in the
// odd pendant case) plus everything needed to strip helper vertices back off.
// w(h) = w(input) and every bisection of h projects to one of the input with
// equal weight.
struct PreprocessRecord {
    WeightedMultigraph h;
    int original_n = 0;
    std::vector<int> added_vertices;
    std::vector<int> added_edges;  // weight-0 edge ids in h
    bool short_circuit = false;    // all-degree-2 even cycle
    Bisection short_circuit_bisection;
    bool pendant_mode = false;     // H'' = g + pendant x; h - M = cycles + {x}
    Matching pendant_matching;
};

PreprocessRecord preprocess(const WeightedMultigraph& g);

struct StructureMatching {
    Matching m;
    CyclePathStructure structure;  // path oriented so p2 pn is in m
};

StructureMatching structure_matching(const PreprocessRecord& rec);

// Gadget distributions per component of h - M plus the matching partition
// M = M55' + M5' + M' by endpoint membership in 5-cycles.
struct MixPlan {
    Matching m;
    CyclePathStructure structure;
    std::vector<GadgetDistribution> gadgets;  // ascending lowest host vertex
    std::vector<char> gadget_is_five_cycle;
    std::vector<int> gadget_of_vertex;  // -1 for isolated vertices
    std::vector<int> m55, m5, mprime;   // edge ids, ascending
};

MixPlan build_mix_plan(const WeightedMultigraph& h, const Matching& m,
                       const CyclePathStructure& structure);

struct MixExpectation {
    Rational e_b;
    Rational e_b_prime;
    Rational e_overall;  // (24 e_b + e_b_prime) / 25
};

// Exact expected family weights of branch B, branch B', and the 24/25 - 1/25
// mixture; asserts the floor 3(w(H)-w(M))/5 + 4w(M)/125.
MixExpectation mix_expectation(const WeightedMultigraph& h, const MixPlan& plan);

// Conditional-expectation derandomization of the mixture: branch by larger
// expectation, gadget outcomes fixed in ascending lowest-vertex order, then
// eligible matching edges added back in ascending id order. Family weight is
// >= e_overall, exactly. Deterministic; the seed is part of the API surface.
BalancedFamily derandomize_mix(const WeightedMultigraph& h, const MixPlan& plan, uint64_t seed);

// One random draw of w(B*) from the mixture (for distribution checks).
Rational sample_mix_weight(const WeightedMultigraph& h, const MixPlan& plan, std::mt19937_64& rng);

// Matching-contraction route: contract the perfect matching, color, lift
// the heaviest class to 4-vertex blocks, add uncovered matching edges,
// round. Weight is >= 3/5 w(g) + 2/5 w(m), exactly.
Bisection contracted_matching_bisection(const WeightedMultigraph& g, const Matching& m);

struct TfSolution {
    Bisection bisection;
    Rational guaranteed_bound;
    std::string method;
    std::string weaker_bound_reason;  // empty unless the 2/3 fallback ran
};

// theta = 613/855 guarantee for bridgeless triangle-free subcubic graphs.
TfSolution solve_bridgeless_tf(const WeightedMultigraph& g, uint64_t seed);

// Dispatcher: bridgeless inputs get theta, bridged inputs fall back to the
// 2/3 pipeline with a flag; K_{1,3} is rejected.
TfSolution solve_triangle_free(const WeightedMultigraph& g, uint64_t seed);

inline Rational theta() { return Rational(613, 855); }

}  // namespace bisect
