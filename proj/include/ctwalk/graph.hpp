#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ctwalk/errors.hpp"
#include "ctwalk/matrix.hpp"

namespace ctwalk {

// Undirected simple graph. Node indices are 0-based internally; the CLI
// presents 1-based labels. Edges are stored normalized (lo, hi) and sorted.
struct graph {
    std::size_t n = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::size_t> degrees;
};

// Builds a graph from an edge list, validating simplicity.
inline graph make_graph(std::size_t n,
                        std::vector<std::pair<std::size_t, std::size_t>> edges) {
    if (n == 0) throw invalid_size_error("graph: node count must be >= 1");
    for (auto& [u, v] : edges) {
        if (u == v)
            throw domain_error("graph: self-loop at node " + std::to_string(u));
        if (u >= n || v >= n)
            throw domain_error("graph: edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw domain_error("graph: duplicate edge");

    graph g;
    g.n = n;
    g.edges = std::move(edges);
    g.degrees.assign(n, 0);
    for (const auto& [u, v] : g.edges) {
        ++g.degrees[u];
        ++g.degrees[v];
    }
    return g;
}

// Star of size n: node 0 is the hub, nodes 1..n-1 are leaves.
inline graph make_star(std::size_t n) {
    if (n == 0) throw invalid_size_error("make_star: size must be >= 1");
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    edges.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) edges.emplace_back(0, i);
    return make_graph(n, std::move(edges));
}

// Complete graph on n nodes, all n(n-1)/2 edges.
inline graph make_complete(std::size_t n) {
    if (n == 0) throw invalid_size_error("make_complete: size must be >= 1");
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    edges.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return make_graph(n, std::move(edges));
}

// Graph Laplacian: degree on the diagonal, -1 per edge. Row sums are exactly
// zero. This matrix doubles as the walk Hamiltonian.
inline sym_matrix laplacian(const graph& g) {
    sym_matrix m(g.n);
    for (std::size_t i = 0; i < g.n; ++i)
        m.set(i, i, static_cast<double>(g.degrees[i]));
    for (const auto& [u, v] : g.edges) m.set(u, v, -1.0);
    return m;
}

}  // namespace ctwalk
