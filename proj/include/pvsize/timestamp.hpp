#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace pvsize {

/// Wall-clock time in local standard time (no daylight saving).
struct LocalTimestamp {
    int year = 2021;
    unsigned month = 1;
    unsigned day = 1;
    unsigned hour = 0;
    unsigned minute = 0;

    bool valid() const noexcept;

    /// 1 on January 1st.
    int day_of_year() const noexcept;

    /// Hours after local midnight, e.g. 13.5 for 13:30.
    double clock_hour() const noexcept { return hour + minute / 60.0; }

    /// Minutes since 1970-01-01 00:00 on the same local clock.
    std::int64_t minutes_since_epoch() const noexcept;

    static LocalTimestamp from_minutes_since_epoch(std::int64_t minutes);

    /// Accepts "YYYY-MM-DD HH:MM", "YYYY-MM-DDTHH:MM" and an optional ":SS"
    /// suffix (seconds must be zero). Throws std::invalid_argument.
    static LocalTimestamp parse(std::string_view text);

    /// "YYYY-MM-DD HH:MM"
    std::string to_string() const;

    friend bool operator==(const LocalTimestamp&, const LocalTimestamp&) = default;
};

}  // namespace pvsize
