#include "corrnet/filtgraph.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace corrnet {

bool is_planar(int n_vertices, const std::vector<std::pair<int, int>>& edges) {
    if (n_vertices <= 4) return true;
    // Any simple graph with fewer than 9 edges is planar; m > 3n-6 never is.
    if (edges.size() < 9) return true;
    if (edges.size() > 3 * static_cast<size_t>(n_vertices) - 6) return false;

    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS> g(
        static_cast<size_t>(n_vertices));
    for (const auto& [u, v] : edges) boost::add_edge(static_cast<size_t>(u), static_cast<size_t>(v), g);
    return boost::boyer_myrvold_planarity_test(g);
}

bool is_planar(const FilteredGraph& graph) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(graph.edges.size());
    for (const auto& e : graph.edges) edges.emplace_back(e.u, e.v);
    return is_planar(graph.n(), edges);
}

} // namespace corrnet
