#include "corrnet/synth.hpp"

#include "corrnet/error.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace corrnet {

namespace {

std::vector<std::string> numbered_labels(int n) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        char buf[16];
        std::snprintf(buf, sizeof buf, "S%02d", i);
        labels.emplace_back(buf);
    }
    return labels;
}

std::vector<Date> business_days_from(Date start, int count) {
    std::vector<Date> dates;
    dates.reserve(static_cast<size_t>(count));
    Date d = is_business_day(start) ? start : next_business_day(start);
    while (static_cast<int>(dates.size()) < count) {
        dates.push_back(d);
        d = next_business_day(d);
    }
    return dates;
}

std::vector<Date> business_days_ending_before(Date bound, int count) {
    std::vector<Date> dates(static_cast<size_t>(count));
    Date d = prev_business_day(bound);
    for (int k = count - 1; k >= 0; --k) {
        dates[static_cast<size_t>(k)] = d;
        d = prev_business_day(d);
    }
    return dates;
}

// One record of the block factor model into column `col`.
void fill_block_records(Eigen::MatrixXd& r, Eigen::Index col, const FactorSpec& spec,
                        const std::vector<int>& blocks_sorted, std::mt19937_64& rng,
                        std::normal_distribution<double>& normal) {
    const double a = std::sqrt(spec.rho_out);
    const double b = std::sqrt(spec.rho_in - spec.rho_out);
    const double c = std::sqrt(1.0 - spec.rho_in);
    const double g = normal(rng);
    std::vector<double> f(blocks_sorted.size());
    for (size_t k = 0; k < blocks_sorted.size(); ++k) f[k] = normal(rng);
    for (int i = 0; i < spec.n_series; ++i) {
        const auto it = std::lower_bound(blocks_sorted.begin(), blocks_sorted.end(),
                                         spec.block_assignment[static_cast<size_t>(i)]);
        const double fb = f[static_cast<size_t>(it - blocks_sorted.begin())];
        r(i, col) = a * g + b * fb + c * normal(rng);
    }
}

std::vector<int> distinct_blocks(const FactorSpec& spec) {
    std::set<int> s(spec.block_assignment.begin(), spec.block_assignment.end());
    return {s.begin(), s.end()};
}

} // namespace

void FactorSpec::validate() const {
    if (n_series < 2) throw DataError("factor spec needs at least 2 series");
    if (n_records < 1) throw DataError("factor spec needs at least 1 record");
    if (block_assignment.size() != static_cast<size_t>(n_series))
        throw DataError("factor spec: block assignment size mismatch");
    if (!(rho_out >= 0.0 && rho_out <= rho_in && rho_in < 1.0))
        throw DataError("factor spec needs 0 <= rho_out <= rho_in < 1");
}

ReturnPanel gen_equicorrelated(int n, int t, double rho, std::uint64_t seed, Date start) {
    if (n < 2) throw DataError("equicorrelated panel needs at least 2 series");
    if (t < 1) throw DataError("equicorrelated panel needs at least 1 record");
    if (!(rho > -1.0 / (n - 1) && rho < 1.0))
        throw DataError("rho outside the positive-definite range (-1/(n-1), 1)");

    ReturnPanel panel;
    panel.labels = numbered_labels(n);
    panel.dates = business_days_from(start, t);
    panel.returns.resize(n, t);

    // x = sqrt(1-rho) (z - mean 1) + sqrt(1+(n-1)rho) mean 1 has the
    // equicorrelation covariance (1-rho) I + rho 11^T for any valid rho.
    const double a = std::sqrt(1.0 - rho);
    const double b = std::sqrt(1.0 + (n - 1) * rho);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::VectorXd z(n);
    for (int k = 0; k < t; ++k) {
        for (int i = 0; i < n; ++i) z(i) = normal(rng);
        const double mean = z.mean();
        for (int i = 0; i < n; ++i) panel.returns(i, k) = a * (z(i) - mean) + b * mean;
    }
    return panel;
}

ReturnPanel gen_blocks(const FactorSpec& spec, Date start) {
    spec.validate();
    ReturnPanel panel;
    panel.labels = numbered_labels(spec.n_series);
    panel.dates = business_days_from(start, spec.n_records);
    panel.returns.resize(spec.n_series, spec.n_records);

    const auto blocks = distinct_blocks(spec);
    std::mt19937_64 rng(spec.seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (int k = 0; k < spec.n_records; ++k)
        fill_block_records(panel.returns, k, spec, blocks, rng, normal);
    return panel;
}

ReturnPanel gen_regime_shift(const FactorSpec& before, const FactorSpec& after,
                             YearMonth shift_month) {
    before.validate();
    after.validate();
    if (before.n_series != after.n_series)
        throw DataError("regime shift: specs disagree on series count");

    const Date pivot = first_of_month(shift_month);
    const Date post_start = is_business_day(pivot) ? pivot : next_business_day(pivot);
    auto pre_dates = business_days_ending_before(post_start, before.n_records);
    auto post_dates = business_days_from(post_start, after.n_records);

    ReturnPanel panel;
    panel.labels = numbered_labels(before.n_series);
    panel.dates = std::move(pre_dates);
    panel.dates.insert(panel.dates.end(), post_dates.begin(), post_dates.end());
    panel.returns.resize(before.n_series, before.n_records + after.n_records);

    {
        const auto blocks = distinct_blocks(before);
        std::mt19937_64 rng(before.seed);
        std::normal_distribution<double> normal(0.0, 1.0);
        for (int k = 0; k < before.n_records; ++k)
            fill_block_records(panel.returns, k, before, blocks, rng, normal);
    }
    {
        const auto blocks = distinct_blocks(after);
        std::mt19937_64 rng(after.seed);
        std::normal_distribution<double> normal(0.0, 1.0);
        for (int k = 0; k < after.n_records; ++k)
            fill_block_records(panel.returns, before.n_records + k, after, blocks, rng, normal);
    }
    return panel;
}

PricePanel to_prices(const ReturnPanel& panel, double scale, double base) {
    if (panel.n_records() < 1) throw DataError("empty return panel");
    if (base <= 0.0) throw DataError("base price must be positive");

    PricePanel prices;
    prices.labels = panel.labels;
    prices.dates.reserve(panel.dates.size() + 1);
    prices.dates.push_back(prev_business_day(panel.dates.front()));
    prices.dates.insert(prices.dates.end(), panel.dates.begin(), panel.dates.end());

    const Eigen::Index n = panel.returns.rows(), t = panel.returns.cols();
    prices.prices.resize(n, t + 1);
    for (Eigen::Index i = 0; i < n; ++i) {
        double log_price = std::log(base);
        prices.prices(i, 0) = base;
        for (Eigen::Index k = 0; k < t; ++k) {
            log_price += scale * panel.returns(i, k);
            prices.prices(i, k + 1) = std::exp(log_price);
        }
    }
    return prices;
}

std::vector<int> block_assignment_from_sizes(const std::vector<int>& sizes) {
    std::vector<int> assignment;
    for (size_t b = 0; b < sizes.size(); ++b) {
        if (sizes[b] < 1) throw DataError("block sizes must be positive");
        assignment.insert(assignment.end(), static_cast<size_t>(sizes[b]), static_cast<int>(b));
    }
    return assignment;
}

} // namespace corrnet
