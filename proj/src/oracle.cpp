#include "bisect/oracle.hpp"

#include <algorithm>
#include <sstream>

namespace bisect {

namespace {

// Shared incremental-enumeration state. Weights are pre-scaled to integers by
// the common denominator so the inner loop is integer-only.
struct Enumerator {
    const WeightedMultigraph& g;
    int n;
    std::vector<std::vector<std::pair<int, BigInt>>> adj;  // vertex -> (other, scaled w)
    BigInt denom = 1;

    explicit Enumerator(const WeightedMultigraph& graph)
        : g(graph), n(graph.vertex_count()), adj(static_cast<size_t>(graph.vertex_count())) {
        for (const Edge& e : g.edges()) denom = lcm(denom, BigInt(denominator(e.w)));
        for (const Edge& e : g.edges()) {
            BigInt scaled = BigInt(numerator(e.w)) * (denom / BigInt(denominator(e.w)));
            adj[static_cast<size_t>(e.u)].push_back({e.v, scaled});
            adj[static_cast<size_t>(e.v)].push_back({e.u, scaled});
        }
    }

    std::vector<char> in_x;
    BigInt cut = 0, best_cut = -1;
    std::vector<char> best_in_x;

    // Delta of the cut when v joins X.
    BigInt join_delta(int v) const {
        BigInt d = 0;
        for (const auto& [w, sw] : adj[static_cast<size_t>(v)])
            d += in_x[static_cast<size_t>(w)] ? -sw : sw;
        return d;
    }

    void record() {
        if (cut > best_cut) {
            best_cut = cut;
            best_in_x = in_x;
        }
    }

    // Enumerate all ways to pick `slots` more X-vertices from v..n-1.
    void run(int v, int slots) {
        if (slots == 0) {
            record();
            return;
        }
        if (n - v < slots) return;
        // take v
        BigInt d = join_delta(v);
        in_x[static_cast<size_t>(v)] = 1;
        cut += d;
        run(v + 1, slots - 1);
        cut -= d;
        in_x[static_cast<size_t>(v)] = 0;
        // skip v
        run(v + 1, slots);
    }

    Rational unscale(const BigInt& value) const { return Rational(value, denom); }
};

}  // namespace

Bisection exact_max_bisection(const WeightedMultigraph& g, int budget) {
    int n = g.vertex_count();
    require(n <= budget, ErrorKind::BudgetExceeded,
            "exact_max_bisection: n exceeds the oracle budget");
    if (n == 0) return Bisection{{}, {}, 0};

    Enumerator en(g);
    en.in_x.assign(static_cast<size_t>(n), 0);
    int x_size = (n + 1) / 2;
    if (n % 2 == 0) {
        // Unordered partition: fix vertex 0 in X.
        en.in_x[0] = 1;
        en.cut = 0;
        for (const auto& [w, sw] : en.adj[0]) en.cut += sw;
        en.run(1, x_size - 1);
    } else {
        // Odd n: the larger side identifies the partition uniquely.
        en.run(0, x_size);
    }

    Bisection out;
    for (int v = 0; v < n; ++v)
        (en.best_in_x[static_cast<size_t>(v)] ? out.side_x : out.side_y).push_back(v);
    out.cut_weight = en.unscale(en.best_cut);
    require(is_valid_bisection(g, out), ErrorKind::AssertionFailed, "oracle produced invalid bisection");
    return out;
}

CutResult exact_max_cut(const WeightedMultigraph& g, int budget) {
    int n = g.vertex_count();
    require(n <= budget, ErrorKind::BudgetExceeded, "exact_max_cut: n exceeds the oracle budget");
    if (n <= 1) return CutResult{{}, 0};

    Enumerator en(g);
    en.in_x.assign(static_cast<size_t>(n), 0);
    en.in_x[0] = 1;
    en.cut = 0;
    for (const auto& [w, sw] : en.adj[0]) en.cut += sw;
    en.best_cut = en.cut;
    en.best_in_x = en.in_x;

    // Gray-code walk over subsets of vertices 1..n-1.
    unsigned long long total = 1ull << (n - 1);
    unsigned long long gray = 0;
    for (unsigned long long i = 1; i < total; ++i) {
        unsigned long long next = i ^ (i >> 1);
        unsigned long long changed = gray ^ next;
        int v = 1;
        while (!((changed >> (v - 1)) & 1ull)) ++v;
        gray = next;
        bool joining = ((next >> (v - 1)) & 1ull) != 0;
        BigInt d = en.join_delta(v);  // neighbours only, works for both flips
        if (joining) {
            en.in_x[static_cast<size_t>(v)] = 1;
            en.cut += d;
        } else {
            en.in_x[static_cast<size_t>(v)] = 0;
            en.cut -= d;
        }
        if (en.cut > en.best_cut) {
            en.best_cut = en.cut;
            en.best_in_x = en.in_x;
        }
    }

    CutResult out;
    for (int v = 0; v < n; ++v)
        if (en.best_in_x[static_cast<size_t>(v)]) out.side.push_back(v);
    out.weight = en.unscale(en.best_cut);
    return out;
}

Verdict verify_bisection(const WeightedMultigraph& g, const Bisection& b, const Rational& bound) {
    Verdict verdict;
    auto note = [&](const std::string& msg) {
        verdict.pass = false;
        verdict.failures.push_back(msg);
    };
    size_t n = static_cast<size_t>(g.vertex_count());
    std::vector<char> seen(n, 0);
    bool partition_ok = b.side_x.size() + b.side_y.size() == n;
    for (const auto* side : {&b.side_x, &b.side_y})
        for (int v : *side) {
            if (v < 0 || v >= g.vertex_count() || seen[static_cast<size_t>(v)]) partition_ok = false;
            else seen[static_cast<size_t>(v)] = 1;
        }
    if (!partition_ok) note("sides are not a partition of the vertices");
    long diff = static_cast<long>(b.side_x.size()) - static_cast<long>(b.side_y.size());
    if (diff < -1 || diff > 1) {
        std::ostringstream os;
        os << "balance violated: |X|-|Y| = " << diff;
        note(os.str());
    }
    if (partition_ok) {
        Rational actual = recompute_cut_weight(g, b);
        if (actual != b.cut_weight)
            note("stated cut_weight " + to_pq_string(b.cut_weight) + " != recomputed " +
                 to_pq_string(actual));
        if (actual < bound)
            note("cut weight " + to_pq_string(actual) + " below bound " + to_pq_string(bound));
    }
    return verdict;
}

}  // namespace bisect
