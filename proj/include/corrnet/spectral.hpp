#pragma once

#include "corrnet/corr.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace corrnet {

/// Full eigen-decomposition of a correlation matrix with the paper-style
/// sign convention: each eigenvector is flipped so that the component of a
/// designated reference series is nonnegative.
struct SpectralSummary {
    std::vector<std::string> labels;
    std::vector<double> eigenvalues; // descending
    Eigen::MatrixXd eigenvectors;    // column k pairs with eigenvalues[k]
    double rmt_upper = 0.0;          // lambda_+ for (N, T_w)
    int n_above = 0;                 // eigenvalues strictly above lambda_+
    std::string reference_label;
};

/// Flip v in place unless its reference component is positive; a zero
/// reference component falls back to the sign of the component sum.
void orient_inplace(Eigen::Ref<Eigen::VectorXd> v, int reference_index);

/// Requires symmetry within 1e-12 and record_count >= 1.
SpectralSummary eigen_decompose(const CorrelationMatrix& matrix, const std::string& reference_label);

/// Marchenko-Pastur upper edge for unit-variance i.i.d. series:
/// lambda_+ = (1 + sqrt(N/T))^2.
double rmt_upper_bound(int n_series, int n_records);

int count_above_threshold(const SpectralSummary& summary);

/// Per-month top-k eigenvalues, threshold counts and the oriented first two
/// eigenvector components, columns arranged by `ordering` (defaults to
/// label order).
struct EigenSeries {
    std::vector<YearMonth> months;
    std::vector<std::string> labels; // original label order
    std::vector<int> ordering;       // column order for v1/v2
    Eigen::MatrixXd eigenvalues;     // months x k
    std::vector<int> n_above;
    std::vector<double> lambda_plus;
    Eigen::MatrixXd v1, v2;          // months x N
};

EigenSeries eigen_series(const std::vector<CorrelationMatrix>& matrices,
                         const std::string& reference_label, int k,
                         const std::vector<int>& ordering = {});

} // namespace corrnet
