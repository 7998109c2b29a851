#pragma once

#include "corrnet/panel.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace corrnet {

/// Pearson correlation matrix of one evaluation window.
struct CorrelationMatrix {
    std::vector<std::string> labels;
    Eigen::MatrixXd values;   // N x N, symmetric, unit diagonal
    YearMonth end_month;
    double delta_t_years = 0.0;
    int record_count = 0;     // T_w

    int n() const { return static_cast<int>(values.rows()); }
};

/// Average off-diagonal correlation as a function of (month, delta_t).
struct CorrelationSurface {
    std::vector<YearMonth> months;   // T axis
    std::vector<double> delta_ts;    // window lengths in years
    Eigen::MatrixXd mean_corr;       // months x delta_ts, defined where valid
    std::vector<std::vector<bool>> valid; // months x delta_ts
};

/// Pearson coefficients per Eq.-style sample moments with denominator T_w.
/// Errors if T_w < 2 or any series is constant within the window
/// (sample standard deviation below 1e-15).
CorrelationMatrix pearson_matrix(const ReturnWindow& window);

/// Mean of the N(N-1)/2 distinct off-diagonal entries.
double mean_offdiag(const CorrelationMatrix& matrix);

/// mean_offdiag of the window correlation matrix for every (month, dt)
/// cell with sufficient history; cells without enough history (or with a
/// degenerate window) are flagged invalid.
CorrelationSurface correlation_surface(const ReturnPanel& panel, const std::vector<double>& delta_ts);

} // namespace corrnet
