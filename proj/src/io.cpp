#include "bisect/io.hpp"

#include <fstream>
#include <sstream>

namespace bisect {

WeightedMultigraph read_graph(std::istream& in) {
    std::string line;
    int n = -1;
    long declared_m = -1;
    WeightedMultigraph g(0);
    bool have_header = false;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            std::string fmt;
            require(!have_header, ErrorKind::ParseError, "duplicate p line");
            require(static_cast<bool>(ls >> fmt >> n >> declared_m) && fmt == "bisect",
                    ErrorKind::ParseError, "expected 'p bisect <n> <m>'");
            require(n >= 0, ErrorKind::ParseError, "negative n");
            g = WeightedMultigraph(n);
            have_header = true;
            continue;
        }
        if (tag == "e") {
            require(have_header, ErrorKind::ParseError, "e line before p line");
            int u, v;
            std::string w;
            require(static_cast<bool>(ls >> u >> v >> w), ErrorKind::ParseError,
                    "expected 'e <u> <v> <w>'");
            require(u >= 1 && u <= n && v >= 1 && v <= n, ErrorKind::ParseError,
                    "endpoint out of range in '" + line + "'");
            g.add_edge(u - 1, v - 1, parse_rational(w));
            continue;
        }
        fail(ErrorKind::ParseError, "unknown line tag '" + tag + "'");
    }
    require(have_header, ErrorKind::ParseError, "missing 'p bisect' header");
    require(declared_m == g.edge_count(), ErrorKind::ParseError,
            "edge count mismatch with header");
    return g;
}

WeightedMultigraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), ErrorKind::ParseError, "cannot open '" + path + "'");
    return read_graph(in);
}

void write_graph(std::ostream& out, const WeightedMultigraph& g) {
    out << "p bisect " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const Edge& e : g.edges())
        out << "e " << e.u + 1 << " " << e.v + 1 << " " << to_pq_string(e.w) << "\n";
}

void write_graph_file(const std::string& path, const WeightedMultigraph& g) {
    std::ofstream out(path);
    require(out.good(), ErrorKind::ParseError, "cannot write '" + path + "'");
    write_graph(out, g);
}

std::string graph_to_string(const WeightedMultigraph& g) {
    std::ostringstream os;
    write_graph(os, g);
    return os.str();
}

std::string graph_digest(const WeightedMultigraph& g) {
    std::string text = graph_to_string(g);
    unsigned long long h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", h);
    return buf;
}

}  // namespace bisect
