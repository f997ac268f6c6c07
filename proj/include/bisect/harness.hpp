#pragma once
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bisect/family.hpp"
#include "bisect/graph.hpp"

namespace bisect {

// The external solver contract. Rationals travel as lowest-terms "p/q"
// strings so reports stay exact and diffable.
struct SolverReport {
    std::string input_digest;
    std::string method;
    Rational guaranteed_bound;
    Rational achieved;
    std::vector<int> side_x;
    std::map<std::string, std::string> flags;
    uint64_t seed = 0;
    int64_t elapsed_ms = 0;
};

std::string report_to_json(const SolverReport& report);
SolverReport report_from_json(const std::string& text);

// Rebuilds the bisection from side_x and re-verifies weight and bound.
bool report_reverifies(const WeightedMultigraph& g, const SolverReport& report);

// BISECT_ORACLE_NMAX override, default 24.
int oracle_budget_from_env();

// Dispatching solve: method one of auto, chi, subcubic, tf. "auto" runs every
// applicable method and keeps the best achieved weight.
SolverReport solve_with_method(const WeightedMultigraph& g, const std::string& method,
                               uint64_t seed);

struct SweepViolation {
    int instance_index;
    std::string graph_text;
    Rational value;
    Rational bound;
};

struct SweepReport {
    std::string klass;
    std::string bound_name;
    int n_max = 0;
    int samples = 0;
    uint64_t seed = 0;
    int instances = 0;
    std::vector<SweepViolation> violations;
    std::vector<std::string> notes;
    int64_t elapsed_ms = 0;
};

// Compares the exact oracle (n <= 14) or the best solver result (larger n)
// against the named bound on every instance. Classes: the generator classes
// plus the exhaustive enum-tf-subcubic and enum-cubic.
SweepReport run_sweep(const std::string& klass, int n_max, int samples,
                      const std::string& bound_name, uint64_t seed);

std::string sweep_to_json(const SweepReport& report);

}  // namespace bisect
