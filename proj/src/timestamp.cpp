#include "pvsize/timestamp.hpp"

#include <charconv>
#include <chrono>
#include <stdexcept>

#include <fmt/format.h>

namespace pvsize {

namespace {

std::chrono::year_month_day to_ymd(const LocalTimestamp& ts) {
    return std::chrono::year_month_day{std::chrono::year{ts.year}, std::chrono::month{ts.month},
                                       std::chrono::day{ts.day}};
}

unsigned parse_field(std::string_view text, std::size_t pos, std::size_t len, std::string_view whole) {
    if (pos + len > text.size()) {
        throw std::invalid_argument(fmt::format("timestamp '{}' is truncated", whole));
    }
    unsigned value = 0;
    const char* first = text.data() + pos;
    const char* last = first + len;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw std::invalid_argument(fmt::format("timestamp '{}' has a non-numeric field", whole));
    }
    return value;
}

void expect_char(std::string_view text, std::size_t pos, std::string_view allowed, std::string_view whole) {
    if (pos >= text.size() || allowed.find(text[pos]) == std::string_view::npos) {
        throw std::invalid_argument(fmt::format("timestamp '{}' is not YYYY-MM-DD HH:MM", whole));
    }
}

}  // namespace

bool LocalTimestamp::valid() const noexcept {
    return to_ymd(*this).ok() && hour < 24 && minute < 60;
}

int LocalTimestamp::day_of_year() const noexcept {
    using namespace std::chrono;
    const sys_days date{to_ymd(*this)};
    const sys_days jan1{year_month_day{std::chrono::year{year}, January, std::chrono::day{1}}};
    return static_cast<int>((date - jan1).count()) + 1;
}

std::int64_t LocalTimestamp::minutes_since_epoch() const noexcept {
    using namespace std::chrono;
    const sys_days date{to_ymd(*this)};
    return static_cast<std::int64_t>(date.time_since_epoch().count()) * 1440 + hour * 60 + minute;
}

LocalTimestamp LocalTimestamp::from_minutes_since_epoch(std::int64_t minutes) {
    using namespace std::chrono;
    std::int64_t days = minutes / 1440;
    std::int64_t rem = minutes % 1440;
    if (rem < 0) {
        rem += 1440;
        --days;
    }
    const year_month_day ymd{sys_days{std::chrono::days{days}}};
    LocalTimestamp ts;
    ts.year = static_cast<int>(ymd.year());
    ts.month = static_cast<unsigned>(ymd.month());
    ts.day = static_cast<unsigned>(ymd.day());
    ts.hour = static_cast<unsigned>(rem / 60);
    ts.minute = static_cast<unsigned>(rem % 60);
    return ts;
}

LocalTimestamp LocalTimestamp::parse(std::string_view text) {
    const std::string_view whole = text;
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) text.remove_suffix(1);

    LocalTimestamp ts;
    ts.year = static_cast<int>(parse_field(text, 0, 4, whole));
    expect_char(text, 4, "-", whole);
    ts.month = parse_field(text, 5, 2, whole);
    expect_char(text, 7, "-", whole);
    ts.day = parse_field(text, 8, 2, whole);
    expect_char(text, 10, " T", whole);
    ts.hour = parse_field(text, 11, 2, whole);
    expect_char(text, 13, ":", whole);
    ts.minute = parse_field(text, 14, 2, whole);
    if (text.size() > 16) {
        expect_char(text, 16, ":", whole);
        if (parse_field(text, 17, 2, whole) != 0 || text.size() != 19) {
            throw std::invalid_argument(fmt::format("timestamp '{}' must fall on a whole minute", whole));
        }
    }
    if (!ts.valid()) {
        throw std::invalid_argument(fmt::format("timestamp '{}' is not a valid calendar time", whole));
    }
    return ts;
}

std::string LocalTimestamp::to_string() const {
    return fmt::format("{:04d}-{:02d}-{:02d} {:02d}:{:02d}", year, month, day, hour, minute);
}

}  // namespace pvsize
