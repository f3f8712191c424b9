#include "ppgk/date.hpp"

#include <charconv>
#include <cstdio>

#include "ppgk/error.hpp"

namespace ppgk {

namespace {

bool parse_uint(std::string_view s, std::size_t digits, unsigned &out) {
    if (s.size() != digits)
        return false;
    for (char c : s)
        if (c < '0' || c > '9')
            return false;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && p == s.data() + s.size();
}

} // namespace

Date::Date(int year, unsigned month, unsigned day)
    : ymd_(std::chrono::year{year}, std::chrono::month{month}, std::chrono::day{day}) {
    if (!ymd_.ok() || year < 0 || year > 9999)
        throw Error(Errc::invalid_argument, "invalid calendar date");
}

std::optional<Date> Date::parse(std::string_view text) {
    unsigned y = 0, m = 1, d = 1;
    if (!parse_uint(text.substr(0, 4), 4, y))
        return std::nullopt;
    if (text.size() > 4) {
        if (text.size() < 7 || text[4] != '-' || !parse_uint(text.substr(5, 2), 2, m))
            return std::nullopt;
        if (text.size() > 7) {
            if (text.size() != 10 || text[7] != '-' || !parse_uint(text.substr(8, 2), 2, d))
                return std::nullopt;
        }
    }
    std::chrono::year_month_day ymd{std::chrono::year{int(y)}, std::chrono::month{m},
                                    std::chrono::day{d}};
    if (!ymd.ok())
        return std::nullopt;
    return Date(int(y), m, d);
}

std::string Date::to_string() const {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", year(), month(), day());
    return buf;
}

} // namespace ppgk
