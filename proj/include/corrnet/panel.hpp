#pragma once

#include "corrnet/dates.hpp"

#include <Eigen/Dense>

#include <iosfwd>
#include <string>
#include <vector>

namespace corrnet {

enum class FillPolicy { forward_fill, strict };

/// Date-indexed panel of positive price levels, one row per series.
struct PricePanel {
    std::vector<Date> dates;         // strictly increasing, length L
    std::vector<std::string> labels; // N series identifiers
    Eigen::MatrixXd prices;          // N x L

    int n_series() const { return static_cast<int>(labels.size()); }
    int n_dates() const { return static_cast<int>(dates.size()); }
};

/// Daily log returns; dates index the later day of each price pair.
struct ReturnPanel {
    std::vector<Date> dates;         // length L-1
    std::vector<std::string> labels;
    Eigen::MatrixXd returns;         // N x (L-1)

    int n_series() const { return static_cast<int>(labels.size()); }
    int n_records() const { return static_cast<int>(dates.size()); }
};

/// Slice of a ReturnPanel covering a trailing calendar window.
struct ReturnWindow {
    YearMonth end_month;
    double delta_t_years = 0.0;
    std::vector<std::string> labels;
    std::vector<Date> dates;   // record dates inside the window
    Eigen::MatrixXd records;   // N x T_w

    int n_series() const { return static_cast<int>(labels.size()); }
    int record_count() const { return static_cast<int>(records.cols()); }
};

/// Parse delimiter-separated prices: header "date,<label1>,...,<labelN>",
/// ISO-8601 dates, one row per day, empty field = missing observation.
/// forward_fill replaces a missing cell with the series' most recent value;
/// strict treats any missing cell as an error.
PricePanel load_prices(std::istream& source, FillPolicy fill);
PricePanel load_prices_file(const std::string& path, FillPolicy fill);

/// r[i][k] = ln(P[i][k+1]) - ln(P[i][k]).
ReturnPanel log_returns(const PricePanel& panel);

/// Number of whole calendar months in delta_t_years. Errors unless the
/// value is a positive whole number of months (0.25 -> 3, 5 -> 60, ...).
int delta_t_months(double delta_t_years);

/// All records dated inside [first day of (end_month - dT + 1 month),
/// last day of end_month]. History is judged at month granularity: the
/// window is available iff it starts no earlier than the month of the
/// panel's first record.
ReturnWindow window(const ReturnPanel& panel, YearMonth end_month, double delta_t_years);

/// Whole-panel window (used for the unconditional correlation matrix).
ReturnWindow full_window(const ReturnPanel& panel);

/// Every calendar month touched by the panel, ascending.
std::vector<YearMonth> months_spanned(const ReturnPanel& panel);

} // namespace corrnet
