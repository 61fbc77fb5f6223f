#include <doctest.h>

#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <random>

#include "csv.hpp"
#include "pvsize/errors.hpp"
#include "pvsize/timestamp.hpp"
#include "support.hpp"

using pvsize::LocalTimestamp;

TEST_SUITE("timestamp") {

TEST_CASE("parse accepts the documented layouts") {
    const LocalTimestamp expected{2021, 6, 21, 13, 0};
    CHECK(LocalTimestamp::parse("2021-06-21 13:00") == expected);
    CHECK(LocalTimestamp::parse("2021-06-21T13:00") == expected);
    CHECK(LocalTimestamp::parse("2021-06-21 13:00:00") == expected);
    CHECK(LocalTimestamp::parse("2021-06-21 13:00").to_string() == "2021-06-21 13:00");
}

TEST_CASE("parse rejects malformed text") {
    for (const char* bad : {"", "2021-06-21", "2021-13-01 00:00", "2021-02-29 00:00", "2021-06-21 24:00",
                            "2021-06-21 13:60", "2021-06-21 13:00:30", "21-06-21 13:00", "2021/06/21 13:00"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(LocalTimestamp::parse(bad), std::invalid_argument);
    }
}

TEST_CASE("day of year") {
    CHECK(LocalTimestamp{2021, 1, 1, 0, 0}.day_of_year() == 1);
    CHECK(LocalTimestamp{2021, 3, 22, 0, 0}.day_of_year() == 81);
    CHECK(LocalTimestamp{2021, 6, 21, 0, 0}.day_of_year() == 172);
    CHECK(LocalTimestamp{2021, 12, 31, 0, 0}.day_of_year() == 365);
    CHECK(LocalTimestamp{2020, 12, 31, 0, 0}.day_of_year() == 366);
}

TEST_CASE("epoch minutes round-trip across month and leap boundaries") {
    LocalTimestamp t{2019, 12, 31, 23, 0};
    auto m = t.minutes_since_epoch();
    for (int step = 0; step < 24 * 800; ++step) {
        const auto back = LocalTimestamp::from_minutes_since_epoch(m);
        REQUIRE(back.valid());
        REQUIRE(back.minutes_since_epoch() == m);
        m += 60;
    }
    CHECK(LocalTimestamp::from_minutes_since_epoch(LocalTimestamp{2020, 2, 28, 23, 0}.minutes_since_epoch() + 60) ==
          LocalTimestamp{2020, 2, 29, 0, 0});
    CHECK(LocalTimestamp{1970, 1, 1, 0, 0}.minutes_since_epoch() == 0);
}

}  // TEST_SUITE

TEST_SUITE("csv") {

namespace csv = pvsize::csv;

TEST_CASE("format_number round-trips doubles bitwise") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> u(-1e6, 1e6);
    for (int i = 0; i < 10000; ++i) {
        const double x = u(rng) * std::pow(10.0, static_cast<int>(rng() % 20) - 10);
        const double y = csv::parse_number(csv::format_number(x), 1, "x");
        REQUIRE(std::memcmp(&x, &y, sizeof x) == 0);
    }
    CHECK(csv::format_number(0.0) == "0");
    CHECK(csv::format_number(1.5) == "1.5");
}

TEST_CASE("parse_number reports line and column") {
    try {
        csv::parse_number("12x", 7, "ghi_wm2");
        FAIL("expected DataError");
    } catch (const pvsize::DataError& e) {
        CHECK(e.line() == 7u);
        CHECK(e.column() == "ghi_wm2");
    }
    CHECK_THROWS_AS(csv::parse_number("", 1, "a"), pvsize::DataError);
    CHECK_THROWS_AS(csv::parse_number("1.0.0", 1, "a"), pvsize::DataError);
    CHECK(csv::parse_number("+2.5", 1, "a") == 2.5);
}

TEST_CASE("read_file keeps line numbers and rejects ragged rows") {
    const auto dir = testsupport::scratch_dir("csv");
    {
        std::ofstream f(dir / "a.csv");
        f << "meta\nmeta\na,b\n1,2\n\n3,4\n";
    }
    const auto table = csv::read_file(dir / "a.csv", 2);
    REQUIRE(table.rows.size() == 2);
    CHECK(table.rows[1].line == 6u);
    CHECK(table.column_index("b") == 1u);
    CHECK_FALSE(table.column_index("c").has_value());

    {
        std::ofstream f(dir / "b.csv");
        f << "a,b\n1,2\n3\n";
    }
    try {
        csv::read_file(dir / "b.csv");
        FAIL("expected DataError");
    } catch (const pvsize::DataError& e) {
        CHECK(e.line() == 3u);
    }
    CHECK_THROWS_AS(csv::read_file(dir / "missing.csv"), pvsize::DataError);
}

}  // TEST_SUITE
