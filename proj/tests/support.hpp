#pragma once

#include <cmath>
#include <filesystem>
#include <memory>
#include <numbers>
#include <string>
#include <vector>

#include "pvsize/scenario.hpp"

namespace testsupport {

inline std::filesystem::path data_dir() { return PVSIZE_TEST_DATA_DIR; }

/// Fresh empty directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("pvsize_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

/// The checked-in 168-hour June fixture (bifacial, 0.6 MW purchase cap,
/// bounds [0, 2000]). tests/oracles/derive_values.py produced it.
inline pvsize::ScenarioConfig week_config() {
    auto c = pvsize::default_config(pvsize::Technology::bifacial);
    c.name = "week";
    c.weather.csv_path = data_dir() / "week_weather.csv";
    c.weather.expected_hours = 168;
    c.load.csv_path = data_dir() / "week_load.csv";
    c.dispatch.p_gpurch_max_mw = 0.6;
    c.woa.n_min = 0;
    c.woa.n_max = 2000;
    c.woa.options.max_iterations = 200;
    return c;
}

struct Fixture {
    pvsize::ScenarioConfig config;
    std::shared_ptr<const pvsize::ScenarioInputs> inputs;
    pvsize::SizingModel model() const { return pvsize::SizingModel(config, inputs); }
};

inline Fixture week_fixture() {
    auto c = week_config();
    auto inputs = std::make_shared<const pvsize::ScenarioInputs>(pvsize::load_inputs(c));
    return {c, inputs};
}

struct WeekShape {
    pvsize::LocalTimestamp start;
    double cloud_amplitude = 0.3;
    std::uint64_t seed = 1;
    double base_mw = 0.45;
    double swing_mw = 0.35;
    double cap_mw = 0.6;
    /// Added between 21:00 and 05:00, when no week of the year has daylight.
    double night_extra_mw = 0.0;
    pvsize::Technology technology = pvsize::Technology::bifacial;
};

/// Synthetic week: clear-sky weather with daily clouds, and a load that sits
/// at `base_mw` overnight and rises by up to `swing_mw` between 07:00 and 19:00.
/// `night_extra_mw` raises the late-night load to put a floor under LPSP.
inline Fixture synthetic_week(const WeekShape& shape) {
    auto c = pvsize::default_config(shape.technology);
    c.name = "synthetic_week";
    c.dispatch.p_gpurch_max_mw = shape.cap_mw;
    c.woa.n_min = 0;
    c.woa.n_max = 2000;
    c.woa.options.max_iterations = 200;

    pvsize::SyntheticWeatherParams wp;
    wp.start = shape.start;
    wp.hours = 168;
    wp.cloud_amplitude = shape.cloud_amplitude;
    auto weather = pvsize::synthesize_clear_sky_year(c.location.latitude_deg, wp, shape.seed);

    std::vector<double> load;
    for (std::size_t t = 0; t < 168; ++t) {
        const double h = weather.timestamps()[t].clock_hour() + 0.5;
        const double bump = std::max(0.0, std::sin(std::numbers::pi * (h - 7.0) / 12.0));
        const unsigned hour = weather.timestamps()[t].hour;
        const double night = hour >= 21 || hour < 5 ? shape.night_extra_mw : 0.0;
        load.push_back(shape.base_mw + shape.swing_mw * bump + night);
    }
    auto inputs = std::make_shared<const pvsize::ScenarioInputs>(
        pvsize::ScenarioInputs{std::move(weather), pvsize::LoadSeries::create(std::move(load))});
    return {c, inputs};
}

/// The three optimizer acceptance weeks.
inline std::vector<WeekShape> acceptance_weeks() {
    return {
        {{2021, 6, 14, 0, 0}, 0.3, 101, 0.45, 0.35, 0.60},
        {{2021, 3, 15, 0, 0}, 0.4, 202, 0.50, 0.30, 0.65},
        {{2021, 9, 20, 0, 0}, 0.2, 303, 0.45, 0.40, 0.60, 0.25},
    };
}

}  // namespace testsupport
