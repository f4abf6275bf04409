#pragma once

#include <cstddef>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ctwalk/errors.hpp"
#include "ctwalk/graph.hpp"

namespace ctwalk {

// Edge-list format: one edge per line as two whitespace-separated 1-based
// node labels. Blank lines and lines starting with '#' are skipped. The node
// count is the largest label seen.
inline graph load_edge_list(std::istream& in) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    std::size_t max_label = 0;
    std::size_t lineno = 0;
    std::string line;

    while (std::getline(in, line)) {
        ++lineno;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;

        std::istringstream ls(line);
        long long a = 0, b = 0;
        std::string extra;
        if (!(ls >> a >> b))
            throw parse_error("edge list line " + std::to_string(lineno) +
                                  ": expected two integer node labels",
                              lineno);
        if (ls >> extra)
            throw parse_error("edge list line " + std::to_string(lineno) +
                                  ": trailing token '" + extra + "'",
                              lineno);
        if (a < 1 || b < 1)
            throw parse_error("edge list line " + std::to_string(lineno) +
                                  ": node labels are 1-based",
                              lineno);
        if (a == b)
            throw parse_error("edge list line " + std::to_string(lineno) +
                                  ": self-loop at node " + std::to_string(a),
                              lineno);

        std::size_t u = static_cast<std::size_t>(a) - 1;
        std::size_t v = static_cast<std::size_t>(b) - 1;
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second)
            throw parse_error("edge list line " + std::to_string(lineno) +
                                  ": duplicate edge " + std::to_string(u + 1) + " " +
                                  std::to_string(v + 1),
                              lineno);
        edges.emplace_back(u, v);
        if (v + 1 > max_label) max_label = v + 1;
    }
    if (max_label == 0)
        throw parse_error("edge list contains no edges", lineno);
    return make_graph(max_label, std::move(edges));
}

inline graph load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open edge list file '" + path + "'", 0);
    return load_edge_list(in);
}

}  // namespace ctwalk
