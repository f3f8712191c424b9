#pragma once

#include <chrono>
#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace ppgk {

/// Calendar date with day precision. Missing month/day parts in the textual
/// forms default to 01.
class Date {
public:
    constexpr Date() = default;
    Date(int year, unsigned month = 1, unsigned day = 1); // throws on invalid dates

    /// Accepts YYYY, YYYY-MM and YYYY-MM-DD. Returns nullopt for anything else
    /// or for dates that do not exist (2015-02-30).
    static std::optional<Date> parse(std::string_view text);

    int year() const { return int(ymd_.year()); }
    unsigned month() const { return unsigned(ymd_.month()); }
    unsigned day() const { return unsigned(ymd_.day()); }

    std::string to_string() const; // YYYY-MM-DD

    friend constexpr auto operator<=>(const Date &, const Date &) = default;
    friend constexpr bool operator==(const Date &, const Date &) = default;

private:
    std::chrono::year_month_day ymd_{std::chrono::year{1970}, std::chrono::January,
                                     std::chrono::day{1}};
};

/// The cutoff Y: papers strictly before it are public, papers on or after it
/// are ongoing (private).
using CutoffTimestamp = Date;

inline bool is_public_date(const Date &d, const CutoffTimestamp &cutoff) { return d < cutoff; }

} // namespace ppgk
