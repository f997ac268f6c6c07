#pragma once
#include <iosfwd>
#include <string>

#include "bisect/graph.hpp"

namespace bisect {

// Graph text format:
//   c <comment>
//   p bisect <n> <m>
//   e <u> <v> <w>      (1-indexed endpoints, w decimal or p/q)
// Repeated e-lines encode parallel edges. Writing always emits p/q weights so
// a written graph parses back edge-for-edge identical.
WeightedMultigraph read_graph(std::istream& in);
WeightedMultigraph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const WeightedMultigraph& g);
void write_graph_file(const std::string& path, const WeightedMultigraph& g);
std::string graph_to_string(const WeightedMultigraph& g);

// FNV-1a over the canonical text form; used as the report input digest.
std::string graph_digest(const WeightedMultigraph& g);

}  // namespace bisect
