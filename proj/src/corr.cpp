#include "corrnet/corr.hpp"

#include "corrnet/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace corrnet {

namespace {
constexpr double kZeroVariance = 1e-15; // sigma below this counts as constant
}

CorrelationMatrix pearson_matrix(const ReturnWindow& window) {
    const Eigen::Index n = window.records.rows();
    const Eigen::Index t = window.records.cols();
    if (t < 2)
        throw DataError("window " + window.end_month.to_string() + " has " + std::to_string(t) +
                        " records, need at least 2");

    // Sample moments with denominator T_w.
    Eigen::MatrixXd centered = window.records.colwise() - window.records.rowwise().mean();
    Eigen::MatrixXd cov = (centered * centered.transpose()) / static_cast<double>(t);
    Eigen::VectorXd sigma = cov.diagonal().cwiseMax(0.0).cwiseSqrt();

    for (Eigen::Index i = 0; i < n; ++i)
        if (sigma(i) < kZeroVariance)
            throw DataError("zero-variance series '" + window.labels[static_cast<size_t>(i)] +
                            "' in window " + window.end_month.to_string());

    CorrelationMatrix m;
    m.labels = window.labels;
    m.end_month = window.end_month;
    m.delta_t_years = window.delta_t_years;
    m.record_count = static_cast<int>(t);
    m.values.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        m.values(i, i) = 1.0;
        for (Eigen::Index j = i + 1; j < n; ++j) {
            double c = cov(i, j) / (sigma(i) * sigma(j));
            c = std::clamp(c, -1.0, 1.0);
            m.values(i, j) = c;
            m.values(j, i) = c;
        }
    }
    return m;
}

double mean_offdiag(const CorrelationMatrix& matrix) {
    const Eigen::Index n = matrix.values.rows();
    if (n < 2) throw DataError("mean off-diagonal needs at least 2 series");
    double sum = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j) sum += matrix.values(i, j);
    return sum / (static_cast<double>(n) * static_cast<double>(n - 1) / 2.0);
}

CorrelationSurface correlation_surface(const ReturnPanel& panel, const std::vector<double>& delta_ts) {
    if (delta_ts.empty()) throw DataError("surface needs at least one delta_t");
    for (double dt : delta_ts) delta_t_months(dt); // validates positivity / month grid

    CorrelationSurface s;
    s.months = months_spanned(panel);
    if (s.months.empty()) throw DataError("empty return panel");
    s.delta_ts = delta_ts;
    s.mean_corr = Eigen::MatrixXd::Constant(static_cast<Eigen::Index>(s.months.size()),
                                            static_cast<Eigen::Index>(delta_ts.size()),
                                            std::numeric_limits<double>::quiet_NaN());
    s.valid.assign(s.months.size(), std::vector<bool>(delta_ts.size(), false));

    for (size_t mi = 0; mi < s.months.size(); ++mi) {
        for (size_t di = 0; di < delta_ts.size(); ++di) {
            try {
                ReturnWindow w = window(panel, s.months[mi], delta_ts[di]);
                s.mean_corr(static_cast<Eigen::Index>(mi), static_cast<Eigen::Index>(di)) =
                    mean_offdiag(pearson_matrix(w));
                s.valid[mi][di] = true;
            } catch (const DataError&) {
                // insufficient history or degenerate window: cell stays invalid
            }
        }
    }
    return s;
}

} // namespace corrnet
