#include "detsieve/graph.hpp"

#include <algorithm>

namespace detsieve {

std::size_t Graph::add_edge(std::size_t u, std::size_t v) {
    if (u >= n || v >= n) throw SpecError("edge endpoint out of range");
    if (!directed && u > v) std::swap(u, v);
    if (u != v && edge_index(u, v) >= 0) throw SpecError("parallel edge");
    edges.push_back({u, v});
    return edges.size() - 1;
}

bool Graph::has_edge(std::size_t u, std::size_t v) const { return edge_index(u, v) >= 0; }

std::ptrdiff_t Graph::edge_index(std::size_t u, std::size_t v) const {
    if (!directed && u > v) std::swap(u, v);
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i].u == u && edges[i].v == v) return static_cast<std::ptrdiff_t>(i);
    return -1;
}

std::vector<std::vector<std::pair<std::size_t, std::size_t>>> Graph::adjacency() const {
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        adj[edges[i].u].push_back({edges[i].v, i});
        if (edges[i].u != edges[i].v) adj[edges[i].v].push_back({edges[i].u, i});
    }
    return adj;
}

std::vector<std::vector<std::pair<std::size_t, std::size_t>>> Graph::out_adjacency() const {
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n);
    for (std::size_t i = 0; i < edges.size(); ++i) adj[edges[i].u].push_back({edges[i].v, i});
    return adj;
}

std::vector<std::size_t> Graph::degrees() const {
    std::vector<std::size_t> deg(n, 0);
    for (const auto& e : edges) {
        ++deg[e.u];
        if (e.u != e.v) ++deg[e.v];
    }
    return deg;
}

std::vector<std::size_t> Graph::odd_degree_vertices() const {
    std::vector<std::size_t> odd;
    auto deg = degrees();
    for (std::size_t v = 0; v < n; ++v)
        if (deg[v] % 2 == 1) odd.push_back(v);
    return odd;
}

bool Graph::connected() const {
    if (n == 0) return true;
    auto adj = adjacency();
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (auto [w, e] : adj[v]) {
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n;
}

}  // namespace detsieve
