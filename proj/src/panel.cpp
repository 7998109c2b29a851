#include "corrnet/panel.hpp"

#include "corrnet/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>

namespace corrnet {

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) {
        // trim surrounding blanks
        size_t a = field.find_first_not_of(" \t\r");
        size_t b = field.find_last_not_of(" \t\r");
        out.push_back(a == std::string::npos ? std::string{} : field.substr(a, b - a + 1));
    }
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

double parse_price(const std::string& field, const std::string& date, const std::string& label) {
    char* end = nullptr;
    double v = std::strtod(field.c_str(), &end);
    if (end == field.c_str() || *end != '\0' || !std::isfinite(v))
        throw DataError("unparseable price '" + field + "' for " + label + " on " + date);
    if (v <= 0.0)
        throw DataError("non-positive price " + field + " for " + label + " on " + date);
    return v;
}

} // namespace

PricePanel load_prices(std::istream& source, FillPolicy fill) {
    std::string line;
    if (!std::getline(source, line)) throw DataError("empty input: no header row");
    auto header = split_line(line);
    if (header.size() < 2 || header[0] != "date")
        throw DataError("bad header: want 'date,<label1>,...,<labelN>'");

    PricePanel panel;
    panel.labels.assign(header.begin() + 1, header.end());
    const size_t n = panel.labels.size();
    for (const auto& l : panel.labels)
        if (l.empty()) throw DataError("empty series label in header");

    std::vector<std::vector<double>> cols; // one vector per day
    while (std::getline(source, line)) {
        if (line.empty() || line == "\r") continue;
        auto fields = split_line(line);
        if (fields.size() != n + 1)
            throw DataError("row '" + fields[0] + "' has " + std::to_string(fields.size() - 1) +
                            " values, expected " + std::to_string(n));
        Date d = Date::parse(fields[0]);
        if (!panel.dates.empty() && !(panel.dates.back() < d))
            throw DataError("non-monotone dates at " + fields[0]);
        panel.dates.push_back(d);

        std::vector<double> day(n);
        for (size_t i = 0; i < n; ++i) {
            if (fields[i + 1].empty()) {
                if (fill == FillPolicy::strict)
                    throw DataError("missing value for " + panel.labels[i] + " on " + fields[0]);
                if (cols.empty())
                    throw DataError("missing value with no prior observation for " +
                                    panel.labels[i] + " on " + fields[0]);
                day[i] = cols.back()[i];
            } else {
                day[i] = parse_price(fields[i + 1], fields[0], panel.labels[i]);
            }
        }
        cols.push_back(std::move(day));
    }

    if (cols.size() < 2) throw DataError("need at least 2 price rows, got " + std::to_string(cols.size()));

    panel.prices.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(cols.size()));
    for (size_t t = 0; t < cols.size(); ++t)
        for (size_t i = 0; i < n; ++i) panel.prices(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(t)) = cols[t][i];
    return panel;
}

PricePanel load_prices_file(const std::string& path, FillPolicy fill) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open input file: " + path);
    return load_prices(in, fill);
}

ReturnPanel log_returns(const PricePanel& panel) {
    const Eigen::Index n = panel.prices.rows();
    const Eigen::Index len = panel.prices.cols();
    if (len < 2) throw DataError("log returns need at least 2 price dates");

    ReturnPanel rp;
    rp.labels = panel.labels;
    rp.dates.assign(panel.dates.begin() + 1, panel.dates.end());
    rp.returns.resize(n, len - 1);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index t = 0; t + 1 < len; ++t) {
            double a = panel.prices(i, t), b = panel.prices(i, t + 1);
            if (a <= 0.0 || b <= 0.0)
                throw DataError("non-positive price in series " + panel.labels[static_cast<size_t>(i)]);
            rp.returns(i, t) = std::log(b) - std::log(a);
        }
    }
    return rp;
}

int delta_t_months(double delta_t_years) {
    double m = delta_t_years * 12.0;
    int k = static_cast<int>(std::lround(m));
    if (k < 1 || std::abs(m - k) > 1e-9)
        throw DataError("delta_t must be a positive whole number of calendar months, got " +
                        std::to_string(delta_t_years) + " years");
    return k;
}

ReturnWindow window(const ReturnPanel& panel, YearMonth end_month, double delta_t_years) {
    if (panel.n_records() == 0) throw DataError("empty return panel");
    const int k = delta_t_months(delta_t_years);
    const YearMonth start_month = end_month.plus_months(-(k - 1));
    const Date start = first_of_month(start_month);
    const Date end = end_of_month(end_month);

    if (start < first_of_month(month_of(panel.dates.front())))
        throw DataError("insufficient history: window " + end_month.to_string() + " @ " +
                        std::to_string(delta_t_years) + "y starts " + start.to_string() +
                        " before data start " + panel.dates.front().to_string());

    auto lo = std::lower_bound(panel.dates.begin(), panel.dates.end(), start);
    auto hi = std::upper_bound(panel.dates.begin(), panel.dates.end(), end);
    const auto a = static_cast<Eigen::Index>(lo - panel.dates.begin());
    const auto t = static_cast<Eigen::Index>(hi - lo);
    if (t <= 0)
        throw DataError("no records in window " + end_month.to_string() + " @ " +
                        std::to_string(delta_t_years) + "y");

    ReturnWindow w;
    w.end_month = end_month;
    w.delta_t_years = delta_t_years;
    w.labels = panel.labels;
    w.dates.assign(lo, hi);
    w.records = panel.returns.middleCols(a, t);
    return w;
}

ReturnWindow full_window(const ReturnPanel& panel) {
    if (panel.n_records() == 0) throw DataError("empty return panel");
    ReturnWindow w;
    w.end_month = month_of(panel.dates.back());
    w.delta_t_years = month_of(panel.dates.back()).months_since(month_of(panel.dates.front())) / 12.0;
    w.labels = panel.labels;
    w.dates = panel.dates;
    w.records = panel.returns;
    return w;
}

std::vector<YearMonth> months_spanned(const ReturnPanel& panel) {
    std::vector<YearMonth> out;
    if (panel.dates.empty()) return out;
    YearMonth m = month_of(panel.dates.front());
    const YearMonth last = month_of(panel.dates.back());
    while (m <= last) {
        out.push_back(m);
        m = m.plus_months(1);
    }
    return out;
}

} // namespace corrnet
