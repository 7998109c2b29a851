#include "corrnet/io.hpp"

#include "corrnet/error.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace corrnet {

std::string fmt_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string EventMap::lookup(const YearMonth& m) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), m,
                               [](const auto& e, const YearMonth& key) { return e.first < key; });
    if (it != entries.end() && it->first == m) return it->second;
    return {};
}

EventMap load_events_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open events file: " + path);
    EventMap events;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (first && line == "month,event") {
            first = false;
            continue;
        }
        first = false;
        auto comma = line.find(',');
        if (comma == std::string::npos) throw DataError("bad events row: '" + line + "'");
        events.entries.emplace_back(YearMonth::parse(line.substr(0, comma)), line.substr(comma + 1));
    }
    std::sort(events.entries.begin(), events.entries.end());
    return events;
}

void write_price_csv(std::ostream& out, const PricePanel& panel) {
    out << "date";
    for (const auto& l : panel.labels) out << ',' << l;
    out << '\n';
    for (Eigen::Index t = 0; t < panel.prices.cols(); ++t) {
        out << panel.dates[static_cast<size_t>(t)].to_string();
        for (Eigen::Index i = 0; i < panel.prices.rows(); ++i) out << ',' << fmt_full(panel.prices(i, t));
        out << '\n';
    }
}

void write_returns_csv(std::ostream& out, const ReturnPanel& panel) {
    out << "date";
    for (const auto& l : panel.labels) out << ',' << l;
    out << '\n';
    for (Eigen::Index t = 0; t < panel.returns.cols(); ++t) {
        out << panel.dates[static_cast<size_t>(t)].to_string();
        for (Eigen::Index i = 0; i < panel.returns.rows(); ++i) out << ',' << fmt_full(panel.returns(i, t));
        out << '\n';
    }
}

void write_corr_csv(std::ostream& out, const CorrelationMatrix& matrix) {
    out << "label";
    for (const auto& l : matrix.labels) out << ',' << l;
    out << '\n';
    for (Eigen::Index i = 0; i < matrix.values.rows(); ++i) {
        out << matrix.labels[static_cast<size_t>(i)];
        for (Eigen::Index j = 0; j < matrix.values.cols(); ++j) out << ',' << fmt_num(matrix.values(i, j));
        out << '\n';
    }
}

void write_surface_csv(std::ostream& out, const CorrelationSurface& surface) {
    out << "month,dt,mean_corr,valid\n";
    for (size_t mi = 0; mi < surface.months.size(); ++mi) {
        for (size_t di = 0; di < surface.delta_ts.size(); ++di) {
            out << surface.months[mi].to_string() << ',' << fmt_num(surface.delta_ts[di]) << ',';
            if (surface.valid[mi][di])
                out << fmt_num(surface.mean_corr(static_cast<Eigen::Index>(mi), static_cast<Eigen::Index>(di)));
            out << ',' << (surface.valid[mi][di] ? 1 : 0) << '\n';
        }
    }
}

void write_mean_series_csv(std::ostream& out, const std::vector<YearMonth>& months,
                           const std::vector<double>& values, const EventMap& events) {
    out << "month,mean_corr,event\n";
    for (size_t i = 0; i < months.size(); ++i)
        out << months[i].to_string() << ',' << fmt_num(values[i]) << ',' << events.lookup(months[i]) << '\n';
}

void write_mi_csv(std::ostream& out, const std::vector<YearMonth>& months,
                  const std::vector<LinkMIResult>& results, const EventMap& events) {
    out << "month,n1,n2,n12,mi_nats,mi_normalized,event\n";
    for (size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        out << months[i].to_string() << ',' << r.n1 << ',' << r.n2 << ',' << r.n12 << ','
            << fmt_num(r.mutual_information) << ',';
        if (r.normalized)
            out << fmt_num(*r.normalized);
        else
            out << "NA";
        out << ',' << events.lookup(months[i]) << '\n';
    }
}

void write_ttest_csv(std::ostream& out, const std::vector<YearMonth>& months,
                     const std::vector<WelchResult>& results, const EventMap& events) {
    out << "month,t,dof,p,mean_mst,mean_pmfg,event\n";
    for (size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        out << months[i].to_string() << ',' << fmt_num(r.t_statistic) << ',' << fmt_num(r.dof) << ','
            << fmt_num(r.p_value) << ',' << fmt_num(r.mean1) << ',' << fmt_num(r.mean2) << ','
            << events.lookup(months[i]) << '\n';
    }
}

void write_communities_csv(std::ostream& out, const FilteredGraph& graph, const Partition& partition) {
    out << "# codelength_bits=" << fmt_num(partition.codelength)
        << " n_modules=" << partition.n_modules << '\n';
    out << "label,module,flow_rank\n";
    for (int v : cluster_ordering(partition))
        out << graph.labels[static_cast<size_t>(v)] << ',' << partition.assignment[static_cast<size_t>(v)]
            << ',' << partition.flow_rank[static_cast<size_t>(v)] << '\n';
}

void write_degree_profile_csv(std::ostream& out, const std::vector<YearMonth>& months,
                              const std::vector<std::string>& ordered_labels,
                              const Eigen::MatrixXi& profile) {
    out << "month";
    for (const auto& l : ordered_labels) out << ',' << l;
    out << '\n';
    for (Eigen::Index r = 0; r < profile.rows(); ++r) {
        out << months[static_cast<size_t>(r)].to_string();
        for (Eigen::Index c = 0; c < profile.cols(); ++c) out << ',' << profile(r, c);
        out << '\n';
    }
}

void write_eigenvalues_csv(std::ostream& out, const EigenSeries& series) {
    out << "month,rank,eigenvalue\n";
    for (size_t m = 0; m < series.months.size(); ++m)
        for (Eigen::Index k = 0; k < series.eigenvalues.cols(); ++k)
            out << series.months[m].to_string() << ',' << (k + 1) << ','
                << fmt_num(series.eigenvalues(static_cast<Eigen::Index>(m), k)) << '\n';
}

void write_eigenvector_csv(std::ostream& out, const EigenSeries& series) {
    out << "month,label,v1,v2\n";
    for (size_t m = 0; m < series.months.size(); ++m)
        for (size_t c = 0; c < series.ordering.size(); ++c)
            out << series.months[m].to_string() << ','
                << series.labels[static_cast<size_t>(series.ordering[c])] << ','
                << fmt_num(series.v1(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(c))) << ','
                << fmt_num(series.v2(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(c))) << '\n';
}

void write_threshold_csv(std::ostream& out, const EigenSeries& series, const EventMap& events) {
    out << "month,n_above,lambda_plus,event\n";
    for (size_t m = 0; m < series.months.size(); ++m)
        out << series.months[m].to_string() << ',' << series.n_above[m] << ','
            << fmt_num(series.lambda_plus[m]) << ',' << events.lookup(series.months[m]) << '\n';
}

} // namespace corrnet
