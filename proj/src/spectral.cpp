#include "corrnet/spectral.hpp"

#include "corrnet/error.hpp"

#include <algorithm>
#include <cmath>

namespace corrnet {

void orient_inplace(Eigen::Ref<Eigen::VectorXd> v, int reference_index) {
    const double ref = v(reference_index);
    if (ref < 0.0 || (ref == 0.0 && v.sum() < 0.0)) v = -v;
}

SpectralSummary eigen_decompose(const CorrelationMatrix& matrix, const std::string& reference_label) {
    const Eigen::Index n = matrix.values.rows();
    if (n < 1 || matrix.values.cols() != n) throw DataError("eigen decomposition needs a square matrix");
    const double asym = (matrix.values - matrix.values.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-12)
        throw DataError("matrix asymmetric beyond 1e-12 (max deviation " + std::to_string(asym) + ")");
    if (matrix.record_count < 1)
        throw DataError("correlation matrix carries no record count; cannot place RMT threshold");

    auto ref_it = std::find(matrix.labels.begin(), matrix.labels.end(), reference_label);
    if (ref_it == matrix.labels.end())
        throw DataError("reference label '" + reference_label + "' not in matrix");
    const int ref_idx = static_cast<int>(ref_it - matrix.labels.begin());

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(matrix.values);
    if (solver.info() != Eigen::Success) throw DataError("eigen decomposition failed to converge");

    SpectralSummary s;
    s.labels = matrix.labels;
    s.reference_label = reference_label;
    s.eigenvalues.resize(static_cast<size_t>(n));
    s.eigenvectors.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        // Eigen sorts ascending; flip to descending.
        const Eigen::Index src = n - 1 - k;
        s.eigenvalues[static_cast<size_t>(k)] = solver.eigenvalues()(src);
        s.eigenvectors.col(k) = solver.eigenvectors().col(src);
        orient_inplace(s.eigenvectors.col(k), ref_idx);
    }
    s.rmt_upper = rmt_upper_bound(static_cast<int>(n), matrix.record_count);
    s.n_above = count_above_threshold(s);
    return s;
}

double rmt_upper_bound(int n_series, int n_records) {
    if (n_series < 1 || n_records < 1) throw DataError("rmt threshold needs positive N and T");
    const double r = std::sqrt(static_cast<double>(n_series) / static_cast<double>(n_records));
    return (1.0 + r) * (1.0 + r);
}

int count_above_threshold(const SpectralSummary& summary) {
    int count = 0;
    for (double lambda : summary.eigenvalues)
        if (lambda > summary.rmt_upper) ++count;
    return count;
}

EigenSeries eigen_series(const std::vector<CorrelationMatrix>& matrices,
                         const std::string& reference_label, int k,
                         const std::vector<int>& ordering) {
    if (matrices.empty()) throw DataError("eigen series needs at least one matrix");
    const auto& labels = matrices.front().labels;
    const int n = static_cast<int>(labels.size());
    if (n < 2) throw DataError("eigen series needs at least 2 series");
    if (k < 0 || k > n) throw DataError("eigen series: top-k out of range");
    for (const auto& m : matrices)
        if (m.labels != labels) throw DataError("eigen series: matrices have mismatched labels");

    EigenSeries es;
    es.labels = labels;
    if (ordering.empty()) {
        es.ordering.resize(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) es.ordering[static_cast<size_t>(i)] = i;
    } else {
        if (ordering.size() != static_cast<size_t>(n))
            throw DataError("eigen series: ordering size mismatch");
        es.ordering = ordering;
    }

    const auto rows = static_cast<Eigen::Index>(matrices.size());
    es.eigenvalues.resize(rows, k);
    es.v1.resize(rows, n);
    es.v2.resize(rows, n);
    es.n_above.reserve(matrices.size());
    es.lambda_plus.reserve(matrices.size());

    for (Eigen::Index r = 0; r < rows; ++r) {
        const auto& m = matrices[static_cast<size_t>(r)];
        es.months.push_back(m.end_month);
        SpectralSummary s = eigen_decompose(m, reference_label);
        for (int j = 0; j < k; ++j) es.eigenvalues(r, j) = s.eigenvalues[static_cast<size_t>(j)];
        es.n_above.push_back(s.n_above);
        es.lambda_plus.push_back(s.rmt_upper);
        for (int c = 0; c < n; ++c) {
            es.v1(r, c) = s.eigenvectors(es.ordering[static_cast<size_t>(c)], 0);
            es.v2(r, c) = s.eigenvectors(es.ordering[static_cast<size_t>(c)], 1);
        }
    }
    return es;
}

} // namespace corrnet
