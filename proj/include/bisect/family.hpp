#pragma once
#include <cstdint>
#include <vector>

#include "bisect/graph.hpp"

namespace bisect {

// One member block of B_b(G): equal-size sides, each independent in the host.
struct BalancedBlock {
    std::vector<int> side_a;
    std::vector<int> side_b;
};

struct BalancedFamily {
    std::vector<BalancedBlock> blocks;
};

struct Bisection {
    std::vector<int> side_x;
    std::vector<int> side_y;
    Rational cut_weight;
};

struct FamilyDiagnostics {
    bool valid = true;
    std::vector<std::string> problems;
};

FamilyDiagnostics validate_family(const WeightedMultigraph& g, const BalancedFamily& fam);

// Total weight of host edges inside one block and crossing its sides.
Rational family_weight(const WeightedMultigraph& g, const BalancedFamily& fam);

Rational cut_weight_between(const WeightedMultigraph& g, const std::vector<char>& in_x);
Rational recompute_cut_weight(const WeightedMultigraph& g, const Bisection& b);
bool is_valid_bisection(const WeightedMultigraph& g, const Bisection& b);

enum class RoundingMode { SeededRandom, Derandomized };

// Rounds a balanced family to a bisection. Uncovered vertices are first paired
// into trivial blocks in ascending id order. Derandomized mode fixes block
// orientations in ascending lowest-vertex-id order by exact conditional
// expectation and guarantees cut >= (w(G) + w(fam)) / 2; seeded-random mode
// flips an independent fair coin per block and meets the bound in expectation.
Bisection round_to_bisection(const WeightedMultigraph& g, const BalancedFamily& fam,
                             RoundingMode mode, uint64_t seed = 0);

// A forest with |F| <= |V|/2 edges on the vertex set
// `vertices` becomes a family covering exactly E(F), padding each tree's
// smaller partite side with isolated vertices.
BalancedFamily forest_to_family(const WeightedMultigraph& g, const std::vector<int>& forest_edges,
                                const std::vector<int>& vertices);

}  // namespace bisect
