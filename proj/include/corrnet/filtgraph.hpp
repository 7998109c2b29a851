#pragma once

#include "corrnet/corr.hpp"

#include <Eigen/Dense>

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace corrnet {

enum class GraphKind { MST, PMFG, Other };

struct GraphEdge {
    int u = 0; // u < v, indices into labels
    int v = 0;
    double weight = 0.0; // correlation coefficient

    friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

/// Undirected simple graph on the full label set of a correlation matrix.
struct FilteredGraph {
    std::vector<std::string> labels;
    std::vector<GraphEdge> edges; // sorted by (u, v)
    GraphKind kind = GraphKind::Other;

    int n() const { return static_cast<int>(labels.size()); }
    int m() const { return static_cast<int>(edges.size()); }
    std::vector<int> degrees() const;
};

/// Maximum-correlation spanning tree: scan vertex pairs in decreasing
/// correlation order, adding each edge unless it closes a cycle. Equal
/// correlations are broken by ascending (i, j) index pairs; mst and pmfg
/// share the scan order, which makes mst(C) a subgraph of pmfg(C).
FilteredGraph mst(const CorrelationMatrix& matrix);

/// Planar maximally filtered graph: same scan order, adding each edge iff
/// the graph stays planar, stopping at 3(N-2) edges.
FilteredGraph pmfg(const CorrelationMatrix& matrix);

/// PMFG plus the pairs that were scanned and rejected for planarity.
struct PmfgTrace {
    FilteredGraph graph;
    std::vector<std::pair<int, int>> rejected;
};
PmfgTrace pmfg_traced(const CorrelationMatrix& matrix);

/// Exact planarity test (Boyer-Myrvold).
bool is_planar(int n_vertices, const std::vector<std::pair<int, int>>& edges);
bool is_planar(const FilteredGraph& graph);

/// Rows = graphs (months), columns = vertices in the supplied ordering,
/// entries = vertex degree. `ordering` is a permutation of vertex indices;
/// all graphs must share one label set.
Eigen::MatrixXi degree_profile(const std::vector<FilteredGraph>& graphs,
                               const std::vector<int>& ordering);

/// Edge-list text: header then "labelA,labelB,weight" rows sorted by (u, v).
void write_edgelist(std::ostream& out, const FilteredGraph& graph);
/// Reads the format written by write_edgelist. The vertex set is the set of
/// endpoint labels, sorted lexicographically.
FilteredGraph read_edgelist(std::istream& in, GraphKind kind = GraphKind::Other);
FilteredGraph read_edgelist_file(const std::string& path, GraphKind kind = GraphKind::Other);

/// GraphML with a "weight" edge attribute.
void write_graphml(std::ostream& out, const FilteredGraph& graph);

} // namespace corrnet
