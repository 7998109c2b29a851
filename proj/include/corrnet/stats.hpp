#pragma once

#include "corrnet/corr.hpp"
#include "corrnet/filtgraph.hpp"

#include <span>
#include <vector>

namespace corrnet {

struct WelchResult {
    double t_statistic = 0.0;
    double dof = 0.0;    // Welch-Satterthwaite, real-valued
    double p_value = 0.0; // two-sided
    int n1 = 0, n2 = 0;
    double mean1 = 0.0, mean2 = 0.0;
    double var1 = 0.0, var2 = 0.0; // unbiased
};

/// Regularized incomplete beta I_x(a, b), continued-fraction evaluation.
double regularized_incomplete_beta(double x, double a, double b);

/// Student-t CDF for real degrees of freedom.
double student_t_cdf(double t, double dof);

/// Welch's two-sample t-test (unequal variances), two-sided p-value.
/// Needs n >= 2 per sample and a nonzero variance in at least one of them.
WelchResult welch_ttest(std::span<const double> sample1, std::span<const double> sample2);

/// Welch test of MST-link vs PMFG-link correlation values for graphs that
/// were built from the same matrix. With exclude_shared the PMFG sample
/// drops the links it shares with the MST.
WelchResult welch_mst_vs_pmfg(const FilteredGraph& mst_graph, const FilteredGraph& pmfg_graph,
                              bool exclude_shared = false);

/// One result per matrix: sample1 = correlations on MST links, sample2 =
/// correlations on PMFG links (all 3(N-2) of them unless exclude_shared).
std::vector<WelchResult> mst_vs_pmfg_pvalues(const std::vector<CorrelationMatrix>& matrices,
                                             bool exclude_shared = false);

} // namespace corrnet
