#pragma once
#include <optional>
#include <utility>
#include <vector>

#include "bisect/errors.hpp"
#include "bisect/rational.hpp"

namespace bisect {

struct Edge {
    int id;
    int u;
    int v;
    Rational w;

    int opposite(int vertex) const { return vertex == u ? v : u; }
    bool touches(int vertex) const { return vertex == u || vertex == v; }
};

// Undirected multigraph with exact non-negative rational edge weights.
// Parallel edges are distinct ids; self-loops are rejected. Immutable after
// construction apart from add_edge during building; all queries are const.
class WeightedMultigraph {
  public:
    explicit WeightedMultigraph(int n = 0);

    int add_edge(int u, int v, Rational w);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(int id) const { return edges_[static_cast<size_t>(id)]; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& incident(int v) const { return incident_[static_cast<size_t>(v)]; }

    int degree(int v) const { return static_cast<int>(incident_[static_cast<size_t>(v)].size()); }
    int max_degree() const;
    Rational total_weight() const;

    bool adjacent(int u, int v) const;
    // Lowest edge id between u and v, if any.
    std::optional<int> edge_between(int u, int v) const;
    std::vector<int> edges_between(int u, int v) const;
    std::vector<int> neighbors(int v) const;  // distinct, ascending

    bool is_simple() const;
    bool is_triangle_free() const;
    bool is_connected() const;

  private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> incident_;
};

// Vertex-disjoint edge set; ids sorted ascending.
struct Matching {
    std::vector<int> edge_ids;

    bool contains(int id) const;
    Rational weight(const WeightedMultigraph& g) const;
    size_t size() const { return edge_ids.size(); }
};

bool is_matching(const WeightedMultigraph& g, const std::vector<int>& edge_ids);
bool is_perfect_matching(const WeightedMultigraph& g, const Matching& m);

struct BridgeInfo {
    std::vector<int> bridge_edges;       // ascending edge ids
    std::vector<int> component_of;       // vertex -> 2-edge-connected component index
    int component_count = 0;
};

// Bridges and 2-edge-connected components of a multigraph (parallel edges
// never form bridges). Isolated vertices are their own components.
BridgeInfo bridges_and_2ecc(const WeightedMultigraph& g);

// Simple weighted graph on the matched pairs of a perfect matching; keeps the
// mapping back to host vertices and the aggregated cross-edge ids. Satisfies
// w(contracted) = w(g) - w(m) exactly.
struct ContractedGraph {
    WeightedMultigraph graph;
    std::vector<std::pair<int, int>> pair_of;     // contracted vertex -> (a, b), a < b
    std::vector<int> contracted_of;               // host vertex -> contracted vertex
    std::vector<std::vector<int>> cross_edge_ids;  // contracted edge id -> host edge ids
};

ContractedGraph contract_matching(const WeightedMultigraph& g, const Matching& m);

// Components of g - m when every vertex has degree <= 2 there: cycles in
// cyclic vertex order, at most one nontrivial path, isolated vertices.
struct CyclePathStructure {
    std::vector<std::vector<int>> cycles;
    std::vector<int> path;  // empty when absent
    std::vector<int> isolated_vertices;
};

CyclePathStructure cycle_path_decomposition(const WeightedMultigraph& g, const Matching& m);

// Induced subgraph on a vertex subset, with maps back to the host.
struct Subgraph {
    WeightedMultigraph graph;
    std::vector<int> host_vertex;  // local vertex -> host vertex
    std::vector<int> local_vertex; // host vertex -> local vertex or -1
    std::vector<int> host_edge;    // local edge id -> host edge id
};

Subgraph induced_subgraph(const WeightedMultigraph& g, const std::vector<int>& vertices);

}  // namespace bisect
