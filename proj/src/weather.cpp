#include "pvsize/weather.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <numbers>
#include <numeric>
#include <random>

#include <fmt/format.h>

#include "csv.hpp"
#include "pvsize/errors.hpp"

namespace pvsize {

namespace {

// Error message for one weather hour, empty when valid.
std::string check_weather_values(double ghi, double dni, double dhi, double t_amb, std::string& column) {
    const std::array<std::pair<const char*, double>, 3> irr{{{"ghi", ghi}, {"dni", dni}, {"dhi", dhi}}};
    for (const auto& [name, value] : irr) {
        if (!std::isfinite(value)) {
            column = name;
            return "non-finite irradiance";
        }
        if (value < 0.0) {
            column = name;
            return fmt::format("negative irradiance {}", value);
        }
    }
    if (!std::isfinite(t_amb)) {
        column = "tamb";
        return "non-finite ambient temperature";
    }
    if (ghi > 0.0 && dni == 0.0 && dhi == 0.0) {
        column = "ghi";
        return fmt::format("GHI {} with zero DNI and DHI", ghi);
    }
    return {};
}

void check_load_value(double value, std::size_t row, std::optional<std::size_t> line) {
    if (!std::isfinite(value) || value < 0.0) {
        const auto msg = line ? fmt::format("invalid demand {}", value)
                              : fmt::format("row {}: invalid demand {}", row, value);
        throw DataError(msg, line, line ? "load" : "");
    }
}

struct UnitColumn {
    std::size_t index;
    std::string name;
    double scale;
    double offset;
};

UnitColumn find_column(const csv::Table& table, const std::string& base,
                       std::initializer_list<std::tuple<const char*, double, double>> units) {
    for (const auto& [suffix, scale, offset] : units) {
        const std::string name = base + suffix;
        if (auto idx = table.column_index(name)) return {*idx, name, scale, offset};
    }
    std::string expected;
    for (const auto& u : units) expected += (expected.empty() ? "" : " or ") + base + std::get<0>(u);
    throw DataError("missing column " + expected, std::nullopt);
}

LocalTimestamp timestamp_from_parts(const csv::Table& table, const csv::Row& row,
                                    const std::array<std::size_t, 5>& idx) {
    static constexpr std::array<const char*, 5> names{"Year", "Month", "Day", "Hour", "Minute"};
    std::array<double, 5> v{};
    for (std::size_t k = 0; k < 5; ++k) {
        v[k] = csv::parse_number(row.cells[idx[k]], row.line, names[k]);
    }
    LocalTimestamp ts{static_cast<int>(v[0]), static_cast<unsigned>(v[1]), static_cast<unsigned>(v[2]),
                      static_cast<unsigned>(v[3]), static_cast<unsigned>(v[4])};
    if (!ts.valid()) throw DataError("invalid calendar time", row.line, table.header[idx[0]]);
    return ts;
}

}  // namespace

WeatherSeries WeatherSeries::create(std::vector<LocalTimestamp> timestamps, std::vector<double> ghi,
                                    std::vector<double> dni, std::vector<double> dhi, std::vector<double> t_amb,
                                    const Location& location) {
    location.validate();
    const std::size_t n = timestamps.size();
    if (n == 0) throw DataError("weather series has no hours");
    if (ghi.size() != n || dni.size() != n || dhi.size() != n || t_amb.size() != n) {
        throw DataError("weather columns have unequal lengths");
    }
    for (std::size_t t = 0; t < n; ++t) {
        std::string column;
        const auto msg = check_weather_values(ghi[t], dni[t], dhi[t], t_amb[t], column);
        if (!msg.empty()) throw DataError(fmt::format("row {}: {}", t + 1, msg), std::nullopt, column);
        if (!timestamps[t].valid()) throw DataError(fmt::format("row {}: invalid timestamp", t + 1));
        if (t > 0 && timestamps[t].minutes_since_epoch() - timestamps[t - 1].minutes_since_epoch() != 60) {
            throw DataError(fmt::format("row {}: timestamp {} does not follow {} by one hour", t + 1,
                                        timestamps[t].to_string(), timestamps[t - 1].to_string()));
        }
    }
    WeatherSeries series;
    series.location_ = location;
    series.timestamps_ = std::move(timestamps);
    series.ghi_ = std::move(ghi);
    series.dni_ = std::move(dni);
    series.dhi_ = std::move(dhi);
    series.t_amb_ = std::move(t_amb);
    return series;
}

LoadSeries LoadSeries::create(std::vector<double> p_load_mw) {
    if (p_load_mw.empty()) throw DataError("load series has no hours");
    for (std::size_t t = 0; t < p_load_mw.size(); ++t) check_load_value(p_load_mw[t], t + 1, std::nullopt);
    LoadSeries series;
    series.p_load_ = std::move(p_load_mw);
    return series;
}

double LoadSeries::peak_mw() const noexcept {
    double peak = 0.0;
    for (double v : p_load_) peak = std::max(peak, v);
    return peak;
}

double LoadSeries::mean_mw() const noexcept {
    return std::accumulate(p_load_.begin(), p_load_.end(), 0.0) / static_cast<double>(p_load_.size());
}

std::map<std::string, std::string> nsrdb_column_renames() {
    return {{"GHI", "ghi_wm2"}, {"DNI", "dni_wm2"}, {"DHI", "dhi_wm2"}, {"Temperature", "tamb_c"}};
}

WeatherSeries load_weather(const std::filesystem::path& path, const WeatherCsvOptions& options) {
    csv::Table table = csv::read_file(path, options.skip_lines);
    for (auto& name : table.header) {
        if (auto it = options.renames.find(name); it != options.renames.end()) name = it->second;
    }
    if (table.rows.empty()) throw DataError("no data rows in '" + path.string() + "'");

    const auto ghi_col = find_column(table, "ghi", {{"_wm2", 1.0, 0.0}, {"_kwm2", 1000.0, 0.0}});
    const auto dni_col = find_column(table, "dni", {{"_wm2", 1.0, 0.0}, {"_kwm2", 1000.0, 0.0}});
    const auto dhi_col = find_column(table, "dhi", {{"_wm2", 1.0, 0.0}, {"_kwm2", 1000.0, 0.0}});
    const auto tamb_col = find_column(table, "tamb", {{"_c", 1.0, 0.0}, {"_k", 1.0, -273.15}});

    const auto ts_idx = table.column_index("timestamp");
    std::array<std::size_t, 5> part_idx{};
    if (!ts_idx) {
        static constexpr std::array<const char*, 5> parts{"Year", "Month", "Day", "Hour", "Minute"};
        for (std::size_t k = 0; k < parts.size(); ++k) {
            auto idx = table.column_index(parts[k]);
            if (!idx) throw DataError("missing column timestamp (or Year/Month/Day/Hour/Minute)");
            part_idx[k] = *idx;
        }
    }

    const std::size_t n = table.rows.size();
    if (options.expected_hours && *options.expected_hours != n) {
        throw DataError(fmt::format("expected {} hourly rows, found {}", *options.expected_hours, n),
                        table.rows.back().line);
    }

    std::vector<LocalTimestamp> timestamps;
    std::vector<double> ghi, dni, dhi, tamb;
    timestamps.reserve(n);
    ghi.reserve(n);
    dni.reserve(n);
    dhi.reserve(n);
    tamb.reserve(n);

    auto read = [](const csv::Row& row, const UnitColumn& col) {
        return csv::parse_number(row.cells[col.index], row.line, col.name) * col.scale + col.offset;
    };

    for (const auto& row : table.rows) {
        LocalTimestamp ts;
        if (ts_idx) {
            try {
                ts = LocalTimestamp::parse(row.cells[*ts_idx]);
            } catch (const std::invalid_argument& e) {
                throw DataError(e.what(), row.line, "timestamp");
            }
        } else {
            ts = timestamp_from_parts(table, row, part_idx);
        }
        const double g = read(row, ghi_col);
        const double b = read(row, dni_col);
        const double d = read(row, dhi_col);
        const double t = read(row, tamb_col);

        std::string column;
        const auto msg = check_weather_values(g, b, d, t, column);
        if (!msg.empty()) {
            const auto& name = column == "ghi" ? ghi_col.name
                             : column == "dni" ? dni_col.name
                             : column == "dhi" ? dhi_col.name
                                               : tamb_col.name;
            throw DataError(msg, row.line, name);
        }
        if (!timestamps.empty() && ts.minutes_since_epoch() - timestamps.back().minutes_since_epoch() != 60) {
            throw DataError("timestamp " + ts.to_string() + " does not follow the previous row by one hour",
                            row.line, "timestamp");
        }
        timestamps.push_back(ts);
        ghi.push_back(g);
        dni.push_back(b);
        dhi.push_back(d);
        tamb.push_back(t);
    }
    return WeatherSeries::create(std::move(timestamps), std::move(ghi), std::move(dni), std::move(dhi),
                                 std::move(tamb), options.location);
}

LoadSeries load_load_profile(const std::filesystem::path& path, std::optional<std::size_t> expected_hours) {
    const csv::Table table = csv::read_file(path);
    std::size_t idx = 0;
    double scale = 1.0;
    std::string name;
    if (auto mw = table.column_index("load_mw")) {
        idx = *mw;
        name = "load_mw";
    } else if (auto kw = table.column_index("load_kw")) {
        idx = *kw;
        scale = 1e-3;
        name = "load_kw";
    } else {
        throw DataError("missing column load_mw (or load_kw)");
    }
    if (table.rows.empty()) throw DataError("no data rows in '" + path.string() + "'");
    if (expected_hours && *expected_hours != table.rows.size()) {
        throw DataError(fmt::format("load has {} rows but the weather horizon is {} hours", table.rows.size(),
                                    *expected_hours));
    }
    std::vector<double> values;
    values.reserve(table.rows.size());
    for (const auto& row : table.rows) {
        const double v = csv::parse_number(row.cells[idx], row.line, name) * scale;
        if (!std::isfinite(v) || v < 0.0) throw DataError(fmt::format("invalid demand {}", v), row.line, name);
        values.push_back(v);
    }
    return LoadSeries::create(std::move(values));
}

void write_weather_csv(const std::filesystem::path& path, const WeatherSeries& weather) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write '" + path.string() + "'");
    out << "timestamp,ghi_wm2,dni_wm2,dhi_wm2,tamb_c\n";
    for (std::size_t t = 0; t < weather.hours(); ++t) {
        out << weather.timestamps()[t].to_string() << ',' << csv::format_number(weather.ghi()[t]) << ','
            << csv::format_number(weather.dni()[t]) << ',' << csv::format_number(weather.dhi()[t]) << ','
            << csv::format_number(weather.t_amb()[t]) << '\n';
    }
}

void write_load_csv(const std::filesystem::path& path, const LoadSeries& load,
                    std::span<const LocalTimestamp> timestamps) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write '" + path.string() + "'");
    const bool with_time = timestamps.size() == load.hours();
    out << (with_time ? "timestamp,load_mw\n" : "load_mw\n");
    for (std::size_t t = 0; t < load.hours(); ++t) {
        if (with_time) out << timestamps[t].to_string() << ',';
        out << csv::format_number(load.mw()[t]) << '\n';
    }
}

ClearSkyCoefficients clear_sky_coefficients(unsigned month) {
    static constexpr std::array<ClearSkyCoefficients, 12> table{{
        {1230.0, 0.142, 0.058},
        {1215.0, 0.144, 0.060},
        {1186.0, 0.156, 0.071},
        {1136.0, 0.180, 0.097},
        {1104.0, 0.196, 0.121},
        {1088.0, 0.205, 0.134},
        {1085.0, 0.207, 0.136},
        {1107.0, 0.201, 0.122},
        {1151.0, 0.177, 0.092},
        {1192.0, 0.160, 0.073},
        {1221.0, 0.149, 0.063},
        {1233.0, 0.142, 0.057},
    }};
    if (month < 1 || month > 12) throw ConfigError(fmt::format("month {} outside 1..12", month));
    return table[month - 1];
}

ClearSkyIrradiance clear_sky(const SolarPosition& position, unsigned month) {
    if (position.elevation_deg <= 0.0) return {};
    const auto k = clear_sky_coefficients(month);
    const double cos_zenith = std::cos(position.zenith_deg * std::numbers::pi / 180.0);
    ClearSkyIrradiance out;
    out.dni = k.a * std::exp(-k.b / cos_zenith);
    out.dhi = k.c * out.dni;
    out.ghi = out.dni * cos_zenith + out.dhi;
    return out;
}

namespace {

// Synthetic irradiance is reported at 0.01 W/m2, like logged data. Without it
// the clear-sky model yields values near 1e-80 W/m2 at sunrise.
double quantize(double wm2) { return std::round(wm2 * 100.0) / 100.0; }

}  // namespace

WeatherSeries synthesize_clear_sky_year(double latitude_deg, const SyntheticWeatherParams& params,
                                        std::uint64_t seed) {
    const Location location{latitude_deg, params.longitude_deg, params.utc_offset_h};
    location.validate();
    if (params.hours == 0) throw ConfigError("synthetic horizon must be at least one hour");
    if (!(params.cloud_amplitude >= 0.0 && params.cloud_amplitude <= 1.0)) {
        throw ConfigError("cloud amplitude must lie in [0, 1]");
    }
    if (!params.start.valid()) throw ConfigError("invalid synthetic start timestamp");

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::normal_distribution<double> gauss(0.0, 1.0);

    const std::size_t n = params.hours;
    std::vector<LocalTimestamp> timestamps(n);
    std::vector<double> ghi(n), dni(n), dhi(n), tamb(n);

    const std::int64_t start = params.start.minutes_since_epoch();
    int current_day = -1;
    double cloud = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
        const auto ts = LocalTimestamp::from_minutes_since_epoch(start + static_cast<std::int64_t>(t) * 60);
        timestamps[t] = ts;
        const int doy = ts.day_of_year();
        if (doy != current_day) {
            current_day = doy;
            cloud = params.cloud_amplitude * unit(rng);
        }
        const auto pos = hour_centre_position(location, ts);
        const auto sky = clear_sky(pos, ts.month);
        const double cos_zenith = std::max(0.0, std::cos(pos.zenith_deg * std::numbers::pi / 180.0));
        dni[t] = quantize(sky.dni * (1.0 - cloud));
        dhi[t] = quantize(sky.dhi + 0.4 * cloud * sky.dni * cos_zenith);
        ghi[t] = quantize(dni[t] * cos_zenith + dhi[t]);

        const double season = -std::cos(2.0 * std::numbers::pi * (doy - 15) / 365.0);
        const double diurnal = std::cos(2.0 * std::numbers::pi * (ts.clock_hour() + 0.5 - 15.0) / 24.0);
        tamb[t] = params.temp_mean_c + params.temp_seasonal_amplitude_c * season +
                  params.temp_diurnal_amplitude_c * diurnal + params.temp_noise_c * gauss(rng);
    }
    return WeatherSeries::create(std::move(timestamps), std::move(ghi), std::move(dni), std::move(dhi),
                                 std::move(tamb), location);
}

LoadSeries synthesize_load_profile(const SyntheticLoadParams& params, std::uint64_t seed) {
    if (params.hours == 0) throw ConfigError("synthetic horizon must be at least one hour");
    if (!(params.mean_mw >= 0.0)) throw ConfigError("mean load must be non-negative");
    if (!params.start.valid()) throw ConfigError("invalid synthetic start timestamp");

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> values(params.hours);
    const std::int64_t start = params.start.minutes_since_epoch();
    for (std::size_t t = 0; t < params.hours; ++t) {
        const auto ts = LocalTimestamp::from_minutes_since_epoch(start + static_cast<std::int64_t>(t) * 60);
        const double season = std::cos(2.0 * std::numbers::pi * (ts.day_of_year() - 200) / 365.0);
        const double daily = std::cos(2.0 * std::numbers::pi * (ts.clock_hour() + 0.5 - 15.0) / 24.0);
        const double v = params.mean_mw * (1.0 + params.seasonal_swing * season) *
                         (1.0 + params.daily_swing * daily) * (1.0 + params.noise * gauss(rng));
        values[t] = std::max(0.0, v);
    }
    return LoadSeries::create(std::move(values));
}

}  // namespace pvsize
