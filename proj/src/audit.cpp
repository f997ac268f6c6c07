#include <set>
#include <sstream>

#include "bisect/oracle.hpp"

namespace bisect {

GadgetClaim claim_for(const GadgetDistribution& dist) {
    if (dist.kind == GadgetDistribution::HostKind::Path) return GadgetClaim::PathCase;
    switch (dist.host_vertices.size()) {
        case 5: return GadgetClaim::C5;
        case 7: return GadgetClaim::C7;
        case 11: return GadgetClaim::C11;
        default: return GadgetClaim::Neq5711;
    }
}

AuditReport audit_gadget(const WeightedMultigraph& h, const GadgetDistribution& dist,
                         GadgetClaim claim) {
    AuditReport report;
    auto note = [&](const std::string& msg) {
        report.ok = false;
        report.violations.push_back(msg);
    };

    Rational total = 0;
    for (size_t i = 0; i < dist.outcomes.size(); ++i) {
        const auto& o = dist.outcomes[i];
        std::ostringstream tag;
        tag << "outcome " << i;
        if (o.probability <= 0 || o.probability > 1) note(tag.str() + ": probability out of (0,1]");
        total += o.probability;
        auto diag = validate_family(h, o.family);
        if (!diag.valid)
            note(tag.str() + ": invalid family: " + (diag.problems.empty() ? "?" : diag.problems[0]));
        std::set<int> host(dist.host_vertices.begin(), dist.host_vertices.end());
        for (const auto& b : o.family.blocks)
            for (const auto* side : {&b.side_a, &b.side_b})
                for (int v : *side)
                    if (!host.count(v)) note(tag.str() + ": block leaves the host vertex set");
    }
    if (total != 1) note("probabilities sum to " + to_pq_string(total) + " != 1");

    bool is_cycle = dist.kind == GadgetDistribution::HostKind::Cycle;
    int l = static_cast<int>(dist.host_vertices.size());
    int host_edges = is_cycle ? (l == 2 ? 1 : l) : l - 1;

    Rational edge_floor = claim == GadgetClaim::C5 ? Rational(3, 5) : Rational(5, 8);
    for (int i = 0; i < host_edges; ++i) {
        int u = dist.host_vertices[static_cast<size_t>(i)];
        int v = dist.host_vertices[static_cast<size_t>((i + 1) % l)];
        auto eid = h.edge_between(u, v);
        if (!eid) {
            note("host edge missing between consecutive vertices");
            continue;
        }
        Rational p = dist.edge_inclusion_probability(h, *eid);
        report.edge_inclusion.push_back(p);
        if (p < edge_floor) {
            std::ostringstream os;
            os << "edge (" << u << "," << v << ") inclusion " << to_pq_string(p) << " < "
               << to_pq_string(edge_floor);
            note(os.str());
        }
    }

    std::set<int> chord_incident;
    for (auto [i, j] : dist.chords) {
        chord_incident.insert(dist.host_vertices[static_cast<size_t>(i)]);
        chord_incident.insert(dist.host_vertices[static_cast<size_t>(j)]);
    }
    for (int i = 0; i < l; ++i) {
        int v = dist.host_vertices[static_cast<size_t>(i)];
        Rational p = dist.vertex_exclusion_probability(v);
        report.vertex_exclusion.push_back(p);
        bool chorded = chord_incident.count(v) > 0;
        std::ostringstream os;
        os << "vertex " << v << " exclusion " << to_pq_string(p);
        switch (claim) {
            case GadgetClaim::Neq5711:
                if (p != Rational(1, 8)) note(os.str() + " != 1/8");
                break;
            case GadgetClaim::C5:
                if (p != Rational(1, 5)) note(os.str() + " != 1/5");
                break;
            case GadgetClaim::C7:
                if (p < Rational(1, 8) || p > Rational(1, 4)) note(os.str() + " outside [1/8,1/4]");
                break;
            case GadgetClaim::C11:
                if (!chorded && (p < Rational(1, 8) || p > Rational(1, 4)))
                    note(os.str() + " outside [1/8,1/4]");
                break;
            case GadgetClaim::PathCase:
                if (!chorded && p < Rational(1, 8)) note(os.str() + " < 1/8");
                break;
        }
    }
    return report;
}

}  // namespace bisect
