#pragma once

#include <compare>
#include <string>

namespace corrnet {

/// Proleptic Gregorian calendar date.
struct Date {
    int year = 0;
    int month = 0; // 1..12
    int day = 0;   // 1..31

    auto operator<=>(const Date&) const = default;

    /// Parse "YYYY-MM-DD". Throws DataError on malformed input.
    static Date parse(const std::string& text);
    std::string to_string() const; // ISO-8601
};

/// Calendar month, used to label evaluation windows.
struct YearMonth {
    int year = 0;
    int month = 0; // 1..12

    auto operator<=>(const YearMonth&) const = default;

    /// Parse "YYYY-MM". Throws DataError on malformed input.
    static YearMonth parse(const std::string& text);
    std::string to_string() const;

    YearMonth plus_months(int k) const;
    /// Signed month count from other to this.
    int months_since(const YearMonth& other) const;
};

bool is_leap_year(int year);
int days_in_month(int year, int month);

/// Days since 1970-01-01 (negative before the epoch).
long long days_from_civil(const Date& d);

/// 0 = Monday .. 6 = Sunday.
int weekday(const Date& d);
bool is_business_day(const Date& d);

Date next_day(const Date& d);
Date prev_day(const Date& d);
Date next_business_day(Date d); // strictly after d
Date prev_business_day(Date d); // strictly before d

YearMonth month_of(const Date& d);
Date first_of_month(const YearMonth& ym);
Date end_of_month(const YearMonth& ym);

} // namespace corrnet
