#pragma once

#include "corrnet/corr.hpp"
#include "corrnet/mapeq.hpp"
#include "corrnet/netinfo.hpp"
#include "corrnet/panel.hpp"
#include "corrnet/spectral.hpp"
#include "corrnet/stats.hpp"

#include <Eigen/Dense>

#include <iosfwd>
#include <string>
#include <vector>

namespace corrnet {

/// Shortest round-trip-safe formatting for data files.
std::string fmt_full(double v);
/// Ten significant digits for analysis tables.
std::string fmt_num(double v);

/// Optional month -> annotation label table ("1997-10,A" rows; an optional
/// "month,event" header is skipped).
struct EventMap {
    std::vector<std::pair<YearMonth, std::string>> entries; // sorted by month
    std::string lookup(const YearMonth& m) const;
};
EventMap load_events_file(const std::string& path);

void write_price_csv(std::ostream& out, const PricePanel& panel);
void write_returns_csv(std::ostream& out, const ReturnPanel& panel);
void write_corr_csv(std::ostream& out, const CorrelationMatrix& matrix);
void write_surface_csv(std::ostream& out, const CorrelationSurface& surface);
void write_mean_series_csv(std::ostream& out, const std::vector<YearMonth>& months,
                           const std::vector<double>& values, const EventMap& events);
void write_mi_csv(std::ostream& out, const std::vector<YearMonth>& months,
                  const std::vector<LinkMIResult>& results, const EventMap& events);
void write_ttest_csv(std::ostream& out, const std::vector<YearMonth>& months,
                     const std::vector<WelchResult>& results, const EventMap& events);
void write_communities_csv(std::ostream& out, const FilteredGraph& graph, const Partition& partition);
void write_degree_profile_csv(std::ostream& out, const std::vector<YearMonth>& months,
                              const std::vector<std::string>& ordered_labels,
                              const Eigen::MatrixXi& profile);
void write_eigenvalues_csv(std::ostream& out, const EigenSeries& series);
void write_eigenvector_csv(std::ostream& out, const EigenSeries& series);
void write_threshold_csv(std::ostream& out, const EigenSeries& series, const EventMap& events);

} // namespace corrnet
