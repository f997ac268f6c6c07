#pragma once
#include <string>
#include <vector>

#include "bisect/family.hpp"
#include "bisect/gadgets.hpp"
#include "bisect/graph.hpp"

namespace bisect {

constexpr int kDefaultOracleBudget = 24;

// Exact maximum-weight bisection by enumerating ceil(n/2)-subsets containing
// vertex 0, with incremental cut updates. BudgetExceeded above the budget.
Bisection exact_max_bisection(const WeightedMultigraph& g, int budget = kDefaultOracleBudget);

struct CutResult {
    std::vector<int> side;
    Rational weight;
};

// Exact maximum-weight cut over all nonempty proper subsets.
CutResult exact_max_cut(const WeightedMultigraph& g, int budget = kDefaultOracleBudget);

struct Verdict {
    bool pass = true;
    std::vector<std::string> failures;
};

// Partition validity, size balance, recomputed cut weight, and bound check.
Verdict verify_bisection(const WeightedMultigraph& g, const Bisection& b, const Rational& bound);

enum class GadgetClaim { Neq5711, C5, C7, C11, PathCase };

GadgetClaim claim_for(const GadgetDistribution& dist);

struct AuditReport {
    bool ok = true;
    std::vector<std::string> violations;
    std::vector<Rational> edge_inclusion;    // per host edge, in order
    std::vector<Rational> vertex_exclusion;  // per host vertex, in order
};

// Exhaustive support walk: probabilities sum to one, every outcome family is
// valid, and per-edge inclusion / per-vertex exclusion meet the named claim's
// exact bounds.
AuditReport audit_gadget(const WeightedMultigraph& h, const GadgetDistribution& dist,
                         GadgetClaim claim);

}  // namespace bisect
