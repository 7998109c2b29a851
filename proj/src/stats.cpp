#include "corrnet/stats.hpp"

#include "corrnet/error.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace corrnet {

namespace {

// Continued fraction for the incomplete beta function (modified Lentz).
double beta_continued_fraction(double x, double a, double b) {
    constexpr double tiny = 1e-300;
    constexpr double eps = 1e-15;
    constexpr int max_iter = 300;

    const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= max_iter; ++m) {
        const double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < eps) break;
    }
    return h;
}

double sample_mean(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v;
    return s / static_cast<double>(x.size());
}

double sample_var_unbiased(std::span<const double> x, double mean) {
    double s = 0.0;
    for (double v : x) s += (v - mean) * (v - mean);
    return s / static_cast<double>(x.size() - 1);
}

} // namespace

double regularized_incomplete_beta(double x, double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) throw DataError("incomplete beta needs a, b > 0");
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double log_front =
        std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) + b * std::log1p(-x);
    if (x < (a + 1.0) / (a + b + 2.0)) return std::exp(log_front) * beta_continued_fraction(x, a, b) / a;
    return 1.0 - std::exp(log_front) * beta_continued_fraction(1.0 - x, b, a) / b;
}

double student_t_cdf(double t, double dof) {
    if (!(dof > 0.0)) throw DataError("t distribution needs dof > 0");
    if (t == 0.0) return 0.5;
    const double x = dof / (dof + t * t);
    const double tail = 0.5 * regularized_incomplete_beta(x, dof / 2.0, 0.5);
    return t > 0.0 ? 1.0 - tail : tail;
}

WelchResult welch_ttest(std::span<const double> sample1, std::span<const double> sample2) {
    if (sample1.size() < 2 || sample2.size() < 2)
        throw DataError("welch t-test: sample too small (need n >= 2 on both sides)");

    WelchResult r;
    r.n1 = static_cast<int>(sample1.size());
    r.n2 = static_cast<int>(sample2.size());
    r.mean1 = sample_mean(sample1);
    r.mean2 = sample_mean(sample2);
    r.var1 = sample_var_unbiased(sample1, r.mean1);
    r.var2 = sample_var_unbiased(sample2, r.mean2);
    if (r.var1 == 0.0 && r.var2 == 0.0)
        throw DataError("welch t-test: zero variance in both samples");

    const double se1 = r.var1 / r.n1, se2 = r.var2 / r.n2;
    const double se = se1 + se2;
    r.t_statistic = (r.mean1 - r.mean2) / std::sqrt(se);
    r.dof = se * se /
            (se1 * se1 / (r.n1 - 1) + se2 * se2 / (r.n2 - 1));
    // Two-sided p straight from the regularized incomplete beta; this is
    // exactly 2 * (1 - F(|t|)).
    r.p_value = regularized_incomplete_beta(r.dof / (r.dof + r.t_statistic * r.t_statistic),
                                            r.dof / 2.0, 0.5);
    return r;
}

WelchResult welch_mst_vs_pmfg(const FilteredGraph& mst_graph, const FilteredGraph& pmfg_graph,
                              bool exclude_shared) {
    std::vector<double> s1;
    s1.reserve(mst_graph.edges.size());
    std::set<std::pair<int, int>> tree_links;
    for (const auto& e : mst_graph.edges) {
        s1.push_back(e.weight);
        tree_links.insert({e.u, e.v});
    }
    std::vector<double> s2;
    s2.reserve(pmfg_graph.edges.size());
    for (const auto& e : pmfg_graph.edges) {
        if (exclude_shared && tree_links.count({e.u, e.v})) continue;
        s2.push_back(e.weight);
    }
    return welch_ttest(s1, s2);
}

std::vector<WelchResult> mst_vs_pmfg_pvalues(const std::vector<CorrelationMatrix>& matrices,
                                             bool exclude_shared) {
    std::vector<WelchResult> out;
    out.reserve(matrices.size());
    for (const auto& m : matrices)
        out.push_back(welch_mst_vs_pmfg(mst(m), pmfg(m), exclude_shared));
    return out;
}

} // namespace corrnet
