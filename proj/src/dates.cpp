#include "corrnet/dates.hpp"

#include "corrnet/error.hpp"

#include <cctype>
#include <cstdio>

namespace corrnet {

namespace {

bool all_digits(const std::string& s, size_t from, size_t to) {
    if (from >= to || to > s.size()) return false;
    for (size_t i = from; i < to; ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

void validate(const Date& d, const std::string& text) {
    if (d.month < 1 || d.month > 12 || d.day < 1 || d.day > days_in_month(d.year, d.month))
        throw DataError("invalid calendar date: " + text);
}

} // namespace

bool is_leap_year(int year) {
    return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

int days_in_month(int year, int month) {
    static constexpr int lengths[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (month == 2 && is_leap_year(year)) return 29;
    return lengths[month - 1];
}

Date Date::parse(const std::string& text) {
    // ISO-8601 extended: YYYY-MM-DD
    if (text.size() != 10 || text[4] != '-' || text[7] != '-' ||
        !all_digits(text, 0, 4) || !all_digits(text, 5, 7) || !all_digits(text, 8, 10))
        throw DataError("unparseable ISO-8601 date: '" + text + "'");
    Date d{std::stoi(text.substr(0, 4)), std::stoi(text.substr(5, 2)), std::stoi(text.substr(8, 2))};
    validate(d, text);
    return d;
}

std::string Date::to_string() const {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", year, month, day);
    return buf;
}

YearMonth YearMonth::parse(const std::string& text) {
    if (text.size() != 7 || text[4] != '-' || !all_digits(text, 0, 4) || !all_digits(text, 5, 7))
        throw DataError("unparseable month label (want YYYY-MM): '" + text + "'");
    YearMonth ym{std::stoi(text.substr(0, 4)), std::stoi(text.substr(5, 2))};
    if (ym.month < 1 || ym.month > 12)
        throw DataError("invalid month label: '" + text + "'");
    return ym;
}

std::string YearMonth::to_string() const {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d", year, month);
    return buf;
}

YearMonth YearMonth::plus_months(int k) const {
    int idx = year * 12 + (month - 1) + k;
    int y = idx / 12, m = idx % 12;
    if (m < 0) { m += 12; --y; }
    return {y, m + 1};
}

int YearMonth::months_since(const YearMonth& other) const {
    return (year - other.year) * 12 + (month - other.month);
}

long long days_from_civil(const Date& d) {
    // Howard Hinnant's civil-days algorithm.
    int y = d.year - (d.month <= 2);
    const int era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * static_cast<unsigned>(d.month + (d.month > 2 ? -3 : 9)) + 2u) / 5u +
                         static_cast<unsigned>(d.day) - 1u;
    const unsigned doe = yoe * 365u + yoe / 4u - yoe / 100u + doy;
    return static_cast<long long>(era) * 146097LL + static_cast<long long>(doe) - 719468LL;
}

int weekday(const Date& d) {
    long long z = days_from_civil(d) + 3; // 1970-01-01 is a Thursday
    long long w = z % 7;
    if (w < 0) w += 7;
    return static_cast<int>(w);
}

bool is_business_day(const Date& d) { return weekday(d) < 5; }

Date next_day(const Date& d) {
    if (d.day < days_in_month(d.year, d.month)) return {d.year, d.month, d.day + 1};
    if (d.month < 12) return {d.year, d.month + 1, 1};
    return {d.year + 1, 1, 1};
}

Date prev_day(const Date& d) {
    if (d.day > 1) return {d.year, d.month, d.day - 1};
    if (d.month > 1) return {d.year, d.month - 1, days_in_month(d.year, d.month - 1)};
    return {d.year - 1, 12, 31};
}

Date next_business_day(Date d) {
    do { d = next_day(d); } while (!is_business_day(d));
    return d;
}

Date prev_business_day(Date d) {
    do { d = prev_day(d); } while (!is_business_day(d));
    return d;
}

YearMonth month_of(const Date& d) { return {d.year, d.month}; }

Date first_of_month(const YearMonth& ym) { return {ym.year, ym.month, 1}; }

Date end_of_month(const YearMonth& ym) { return {ym.year, ym.month, days_in_month(ym.year, ym.month)}; }

} // namespace corrnet
