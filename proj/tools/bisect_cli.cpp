// Command-line surface: solve / oracle / audit / sweep / gen.
#include <iostream>

#include "CLI11.hpp"
#include "bisect/generators.hpp"
#include "bisect/harness.hpp"
#include "bisect/io.hpp"
#include "bisect/oracle.hpp"

using namespace bisect;

namespace {

int run_solve(const std::string& input, const std::string& method, uint64_t seed, bool as_json) {
    auto g = read_graph_file(input);
    SolverReport report = solve_with_method(g, method, seed);
    if (!report_reverifies(g, report)) {
        std::cerr << "report failed re-verification\n";
        return 2;
    }
    if (as_json) {
        std::cout << report_to_json(report) << "\n";
    } else {
        std::cout << "method    " << report.method << "\n"
                  << "achieved  " << to_pq_string(report.achieved) << "\n"
                  << "bound     " << to_pq_string(report.guaranteed_bound) << "\n";
        for (const auto& [k, v] : report.flags) std::cout << "flag      " << k << ": " << v << "\n";
    }
    return 0;
}

int run_oracle(const std::string& input, bool cut) {
    auto g = read_graph_file(input);
    int budget = oracle_budget_from_env();
    if (cut) {
        auto r = exact_max_cut(g, budget);
        std::cout << to_pq_string(r.weight) << "\n";
    } else {
        auto r = exact_max_bisection(g, budget);
        std::cout << to_pq_string(r.cut_weight) << "\n";
    }
    return 0;
}

int audit_cycles(int max_len, int& violations) {
    for (int l = 2; l <= max_len; ++l) {
        if (l == 3) continue;
        WeightedMultigraph g(std::max(l, 2));
        std::vector<int> order;
        if (l == 2) {
            g = WeightedMultigraph(2);
            g.add_edge(0, 1, 1);
            g.add_edge(0, 1, 0);
            order = {0, 1};
        } else {
            g = cycle_graph(l);
            for (int i = 0; i < l; ++i) order.push_back(i);
        }
        auto dist = gadget_for_cycle(g, order);
        auto report = audit_gadget(g, dist, claim_for(dist));
        for (const auto& v : report.violations) {
            std::cout << "cycle " << l << ": " << v << "\n";
            ++violations;
        }
    }
    return 0;
}

int audit_paths(int max_len, int& violations) {
    for (int n = 5; n <= max_len; ++n)
        for (bool wrap : {false, true}) {
            WeightedMultigraph g(n);
            std::vector<int> order;
            for (int i = 0; i < n; ++i) order.push_back(i);
            for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1, 1);
            g.add_edge(1, n - 1, 1);
            if (wrap) g.add_edge(0, n - 2, 1);
            auto dist = gadget_for_path(g, order);
            auto report = audit_gadget(g, dist, GadgetClaim::PathCase);
            for (const auto& v : report.violations) {
                std::cout << "path " << n << (wrap ? " (p1 p_{n-1} edge)" : "") << ": " << v << "\n";
                ++violations;
            }
        }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Max-weight bisection solvers for bounded-degree graphs"};
    app.require_subcommand(1);

    // solve
    auto* solve = app.add_subcommand("solve", "solve an instance with a guarantee");
    std::string input, method = "auto";
    uint64_t seed = 1;
    bool as_json = false;
    solve->add_option("--input", input, "graph file")->required();
    solve->add_option("--method", method, "auto|chi|subcubic|tf");
    solve->add_option("--seed", seed, "random seed");
    solve->add_flag("--json", as_json, "emit the JSON report");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "exact maximum bisection (or cut)");
    std::string oracle_input;
    bool want_cut = false;
    oracle->add_option("--input", oracle_input, "graph file")->required();
    oracle->add_flag("--cut", want_cut, "maximum cut instead of bisection");

    // audit
    auto* audit = app.add_subcommand("audit", "exhaustive gadget distribution audit");
    std::string family = "cycles";
    int max_len = 32;
    audit->add_option("--family", family, "cycles|paths");
    audit->add_option("--max-len", max_len, "largest cycle length / path order");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "conjecture sweep over generated instances");
    std::string klass = "subcubic", bound = "two-thirds";
    int n_max_sweep = 12, samples = 100;
    uint64_t sweep_seed = 1;
    sweep->add_option("--class", klass,
                      "cubic-bridgeless|subcubic|tf-subcubic-2ecc|enum-tf-subcubic|enum-cubic|...");
    sweep->add_option("--n-max", n_max_sweep, "largest instance order");
    sweep->add_option("--samples", samples, "instances (random classes)");
    sweep->add_option("--bound", bound, "conj1(k)|two-thirds|theta|conj3");
    sweep->add_option("--seed", sweep_seed, "random seed");

    // gen
    auto* gen = app.add_subcommand("gen", "generate an instance file");
    std::string gen_class = "subcubic", weights = "unit", out_path;
    int gen_n = 10;
    uint64_t gen_seed = 1;
    gen->add_option("--class", gen_class, "graph class");
    gen->add_option("--n", gen_n, "order (or parameter k/t/l)");
    gen->add_option("--weights", weights, "unit|uniform");
    gen->add_option("--seed", gen_seed, "random seed");
    gen->add_option("--out", out_path, "output file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*solve) return run_solve(input, method, seed, as_json);
        if (*oracle) return run_oracle(oracle_input, want_cut);
        if (*audit) {
            int violations = 0;
            if (family == "cycles") audit_cycles(max_len, violations);
            else if (family == "paths") audit_paths(max_len, violations);
            else {
                std::cerr << "unknown family '" << family << "'\n";
                return 3;
            }
            std::cout << (violations == 0 ? "audit clean" : "audit found violations") << "\n";
            return violations == 0 ? 0 : 2;
        }
        if (*sweep) {
            auto report = run_sweep(klass, n_max_sweep, samples, bound, sweep_seed);
            std::cout << sweep_to_json(report) << "\n";
            return 0;
        }
        if (*gen) {
            WeightModel wm = weights == "unit" ? WeightModel::Unit : WeightModel::UniformRational;
            auto g = generate(gen_class, gen_n, gen_seed, wm);
            write_graph_file(out_path, g);
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return e.kind() == ErrorKind::AssertionFailed ? 2 : 3;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 0;
}
