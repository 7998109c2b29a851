#pragma once

#include "corrnet/filtgraph.hpp"

#include <cstdint>
#include <vector>

namespace corrnet {

/// How correlation edge weights feed the random-walk model. The map
/// equation needs positive weights while filtered graphs occasionally carry
/// negative correlations, so the default clamps at a small floor.
enum class EdgeWeighting {
    clamped_correlation, // w = max(c, 1e-6)
    unweighted           // w = 1
};

struct Partition {
    std::vector<int> assignment; // vertex -> module id, contiguous from 0,
                                 // modules ordered by descending total flow
    double codelength = 0.0;     // bits
    int n_modules = 0;
    std::vector<int> flow_rank;  // per-vertex rank inside its module by
                                 // descending stationary visit rate, 0 first
};

/// Two-level map equation for an undirected walk, in bits:
///   L(M) = q H(Q) + sum_m p_m H(P_m)
/// with visit rates p_a = s_a / 2W, module exit rates q_m = cut_m / 2W,
/// q = sum q_m, and p_m = q_m + sum_{a in m} p_a.
/// Requires a connected graph with at least one edge.
double map_equation(const FilteredGraph& graph, const std::vector<int>& assignment,
                    EdgeWeighting weighting = EdgeWeighting::clamped_correlation);

/// Minimum-codelength partition over n_runs independent seeded
/// optimizations. Each run performs greedy agglomerative merging from
/// singletons followed by single-vertex move refinement until no move
/// lowers the codelength. Deterministic given (graph, n_runs, seed).
Partition detect_communities(const FilteredGraph& graph, int n_runs = 100, std::uint64_t seed = 1,
                             EdgeWeighting weighting = EdgeWeighting::clamped_correlation);

/// Vertex indices sorted by (module id, flow rank); the left-to-right
/// column order used by profile tables.
std::vector<int> cluster_ordering(const Partition& partition);

} // namespace corrnet
