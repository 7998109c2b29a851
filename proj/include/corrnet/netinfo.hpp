#pragma once

#include "corrnet/filtgraph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace corrnet {

/// Mutual information of link co-occurrence between two graphs sharing a
/// vertex set. A vertex pair drawn uniformly at random defines two binary
/// variables, "linked in graph 1" and "linked in graph 2"; the result
/// summarizes their joint distribution.
struct LinkMIResult {
    int n1 = 0;  // links in graph 1
    int n2 = 0;  // links in graph 2
    int n12 = 0; // links present in both
    double p11 = 0, p10 = 0, p01 = 0, p00 = 0; // joint probabilities
    double mutual_information = 0.0;           // I(x,y), nats
    double entropy1 = 0.0, entropy2 = 0.0;     // H(x), H(y), nats
    /// I / sqrt(H(x) H(y)); absent when an entropy is zero.
    std::optional<double> normalized;
    std::string degenerate_reason; // nonempty iff normalized is absent
};

/// Closed-form result from the counts alone: N vertices, n1/n2 links,
/// n12 shared links.
LinkMIResult link_mi_from_counts(int n_vertices, int n1, int n2, int n12);

/// Requires equal label sets (graph 2 is re-indexed by label if its order
/// differs). Natural logarithms; 0 log 0 := 0.
LinkMIResult link_mutual_information(const FilteredGraph& g1, const FilteredGraph& g2);

/// One result per consecutive pair; entry k compares graphs[k] and
/// graphs[k+1] and is conventionally indexed by the later month.
std::vector<LinkMIResult> rolling_mi(const std::vector<FilteredGraph>& graphs);

} // namespace corrnet
