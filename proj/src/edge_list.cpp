#include "laminar/edge_list.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "laminar/error.hpp"

namespace laminar {

Graph read_edge_list(std::istream& in) {
    std::vector<LabelEdge> edges;
    std::vector<std::string> singles;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::string a, b, extra;
        if (!(tokens >> a) || a[0] == '#') {
            continue;
        }
        if (!(tokens >> b)) {
            singles.push_back(a);
            continue;
        }
        if (tokens >> extra) {
            throw InputError("line " + std::to_string(line_no) + ": expected at most two labels");
        }
        if (a == b) {
            throw InputError("line " + std::to_string(line_no) + ": self-loop at vertex '" + a + "'");
        }
        edges.emplace_back(std::move(a), std::move(b));
    }
    return build_graph(edges, singles);
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read_edge_list(in);
}

Graph read_edge_list_file(const std::string& path) {
    if (path == "-") {
        return read_edge_list(std::cin);
    }
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open graph file '" + path + "'");
    }
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 0) {
            out << g.label(v) << '\n';
        }
    }
    for (auto [u, v] : g.edges()) {
        out << g.label(u) << ' ' << g.label(v) << '\n';
    }
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

}
