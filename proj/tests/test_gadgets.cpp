#include "bisect/gadgets.hpp"

#include "bisect/oracle.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace bisect;
using namespace bisect::testing;

namespace {

std::vector<int> iota_order(int l) {
    std::vector<int> v(static_cast<size_t>(l));
    for (int i = 0; i < l; ++i) v[static_cast<size_t>(i)] = i;
    return v;
}

WeightedMultigraph cycle_with_chords(int l, const std::vector<std::pair<int, int>>& chords) {
    WeightedMultigraph g(l);
    for (int i = 0; i < l; ++i) g.add_edge(i, (i + 1) % l, 1);
    for (auto [i, j] : chords) g.add_edge(i, j, 1);
    return g;
}

WeightedMultigraph path_host(int n, bool wrap_edge) {
    WeightedMultigraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1, 1);
    g.add_edge(1, n - 1, 1);                 // p2 pn
    if (wrap_edge) g.add_edge(0, n - 2, 1);  // p1 p_{n-1}
    return g;
}

int cyc_dist(int i, int j, int l) {
    int d = std::abs(i - j);
    return std::min(d, l - d);
}

// All matchings of distance >= 3 position pairs (realizable chord sets).
std::vector<std::vector<std::pair<int, int>>> chord_sets(int l) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j)
            if (cyc_dist(i, j, l) >= 3) pairs.push_back({i, j});
    std::vector<std::vector<std::pair<int, int>>> out;
    std::vector<std::pair<int, int>> cur;
    auto rec = [&](auto&& self, size_t from) -> void {
        out.push_back(cur);
        for (size_t t = from; t < pairs.size(); ++t) {
            bool clash = false;
            for (auto& c : cur)
                if (c.first == pairs[t].first || c.first == pairs[t].second ||
                    c.second == pairs[t].first || c.second == pairs[t].second)
                    clash = true;
            if (clash) continue;
            cur.push_back(pairs[t]);
            self(self, t + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace

TEST_CASE("chordless cycle gadgets for 2 <= l <= 32") {
    for (int l = 2; l <= 32; ++l) {
        if (l == 3) continue;  // triangles cannot occur in H - M
        WeightedMultigraph g(std::max(l, 2));
        if (l == 2) {
            g = WeightedMultigraph(2);
            g.add_edge(0, 1, 1);
            g.add_edge(0, 1, 0);
        } else {
            g = cycle_with_chords(l, {});
        }
        auto dist = gadget_for_cycle(g, iota_order(l));
        auto report = audit_gadget(g, dist, claim_for(dist));
        INFO("l = " << l << ": " << (report.violations.empty() ? "" : report.violations[0]));
        CHECK(report.ok);
        if (l == 8)
            for (const auto& p : report.edge_inclusion) CHECK(p == Rational(21, 32));
        if (l == 6) {
            bool found_whole = false;
            for (const auto& o : dist.outcomes)
                if (o.probability == Rational(7, 8) && !o.family.blocks.empty()) found_whole = true;
            CHECK(found_whole);
        }
        if (l == 7) {
            for (const auto& p : report.edge_inclusion) CHECK(p == Rational(5, 7));
            for (const auto& p : report.vertex_exclusion) CHECK(p == Rational(1, 7));
        }
        if (l == 5)
            for (const auto& p : report.vertex_exclusion) CHECK(p == Rational(1, 5));
    }
}

TEST_CASE("all realizable chorded 7-cycle patterns") {
    auto sets = chord_sets(7);
    int audited = 0;
    for (const auto& cs : sets) {
        auto g = cycle_with_chords(7, cs);
        auto dist = gadget_for_cycle(g, iota_order(7));
        auto report = audit_gadget(g, dist, GadgetClaim::C7);
        INFO("chords: " << cs.size() << " first violation: "
             << (report.violations.empty() ? "none" : report.violations[0]));
        CHECK(report.ok);
        ++audited;
    }
    CHECK(audited == static_cast<int>(sets.size()));
    CHECK(audited > 20);
}

TEST_CASE("all realizable chorded 11-cycle patterns") {
    auto sets = chord_sets(11);
    CHECK(sets.size() > 5000);
    for (const auto& cs : sets) {
        auto g = cycle_with_chords(11, cs);
        auto dist = gadget_for_cycle(g, iota_order(11));
        auto report = audit_gadget(g, dist, GadgetClaim::C11);
        INFO("chords " << cs.size() << ": "
             << (report.violations.empty() ? "none" : report.violations[0]));
        CHECK(report.ok);
    }
}

TEST_CASE("path gadgets 5 <= n <= 13, both p1 p_{n-1} variants") {
    for (int n = 5; n <= 13; ++n)
        for (bool wrap : {false, true}) {
            auto g = path_host(n, wrap);
            auto dist = gadget_for_path(g, iota_order(n));
            auto report = audit_gadget(g, dist, GadgetClaim::PathCase);
            INFO("n = " << n << " wrap = " << wrap << ": "
                 << (report.violations.empty() ? "none" : report.violations[0]));
            CHECK(report.ok);
        }
    // The n = 5 table gives edge p2p3 inclusion exactly 5/8.
    auto g5 = path_host(5, false);
    auto d5 = gadget_for_path(g5, iota_order(5));
    auto r5 = audit_gadget(g5, d5, GadgetClaim::PathCase);
    CHECK(r5.edge_inclusion[1] == Rational(5, 8));
}

TEST_CASE("path gadget with an internal matching chord stays valid") {
    // p3 p6 as an extra chord (degree-3-consistent) for n = 9.
    for (bool wrap : {false, true}) {
        auto g = path_host(9, wrap);
        g.add_edge(2, 5, 1);
        auto dist = gadget_for_path(g, iota_order(9));
        auto report = audit_gadget(g, dist, GadgetClaim::PathCase);
        INFO("" << (report.violations.empty() ? "none" : report.violations[0]));
        CHECK(report.ok);
    }
}
