#ifndef DETSIEVE_GRAPH_HPP
#define DETSIEVE_GRAPH_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "detsieve/errors.hpp"

namespace detsieve {

// Plain graph container shared by the enumerators and solvers.
// Undirected edges are stored canonically (min,max); parallel edges are
// rejected, loops are kept where an enumerator permits them.
struct Graph {
    struct Edge {
        std::size_t u, v;
    };

    std::size_t n = 0;
    bool directed = false;
    std::vector<Edge> edges;
    std::vector<int> colour;               // -1 when uncoloured
    std::vector<std::size_t> terminals;    // optional terminal list
    std::vector<std::size_t> edge_weight;  // optional positive weights

    Graph() = default;
    Graph(std::size_t n_vertices, bool is_directed = false)
        : n(n_vertices), directed(is_directed), colour(n_vertices, -1) {}

    std::size_t add_edge(std::size_t u, std::size_t v);
    std::size_t m() const { return edges.size(); }

    bool has_edge(std::size_t u, std::size_t v) const;
    std::ptrdiff_t edge_index(std::size_t u, std::size_t v) const;

    // adjacency()[v] lists (neighbour, edge index); for undirected
    // graphs each edge appears from both ends.
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adjacency() const;
    // out-arcs only for directed graphs
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> out_adjacency() const;

    std::vector<std::size_t> degrees() const;
    std::vector<std::size_t> odd_degree_vertices() const;
    bool connected() const;  // every vertex in one component
};

}  // namespace detsieve

#endif
