#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pvsize/solar_geometry.hpp"
#include "pvsize/timestamp.hpp"

namespace pvsize {

/// One hour of weather. Irradiance values are means over the hour that
/// starts at `timestamp`, in W/m2; temperature in degrees C.
struct WeatherHour {
    LocalTimestamp timestamp;
    double ghi = 0.0;
    double dni = 0.0;
    double dhi = 0.0;
    double t_amb = 0.0;
};

/// Validated hourly weather for one horizon. Immutable once built.
class WeatherSeries {
public:
    /// Throws DataError naming the offending row (1-based) on any invariant
    /// violation: unequal column lengths, empty horizon, negative or
    /// non-finite irradiance, non-finite temperature, GHI without any
    /// DNI/DHI, or timestamps that do not advance by exactly one hour.
    static WeatherSeries create(std::vector<LocalTimestamp> timestamps, std::vector<double> ghi,
                                std::vector<double> dni, std::vector<double> dhi, std::vector<double> t_amb,
                                const Location& location);

    std::size_t hours() const noexcept { return timestamps_.size(); }
    const Location& location() const noexcept { return location_; }
    std::span<const LocalTimestamp> timestamps() const noexcept { return timestamps_; }
    std::span<const double> ghi() const noexcept { return ghi_; }
    std::span<const double> dni() const noexcept { return dni_; }
    std::span<const double> dhi() const noexcept { return dhi_; }
    std::span<const double> t_amb() const noexcept { return t_amb_; }
    WeatherHour hour(std::size_t t) const { return {timestamps_.at(t), ghi_[t], dni_[t], dhi_[t], t_amb_[t]}; }

private:
    WeatherSeries() = default;

    Location location_;
    std::vector<LocalTimestamp> timestamps_;
    std::vector<double> ghi_;
    std::vector<double> dni_;
    std::vector<double> dhi_;
    std::vector<double> t_amb_;
};

/// Hourly demand in MW.
class LoadSeries {
public:
    /// Throws DataError on an empty series or a negative/non-finite value.
    static LoadSeries create(std::vector<double> p_load_mw);

    std::size_t hours() const noexcept { return p_load_.size(); }
    std::span<const double> mw() const noexcept { return p_load_; }
    double peak_mw() const noexcept;
    double mean_mw() const noexcept;

private:
    LoadSeries() = default;
    std::vector<double> p_load_;
};

/// NSRDB column name -> canonical column name.
std::map<std::string, std::string> nsrdb_column_renames();

struct WeatherCsvOptions {
    Location location;
    /// When set, the row count must match.
    std::optional<std::size_t> expected_hours;
    /// Lines ignored before the header (NSRDB exports carry two metadata lines).
    std::size_t skip_lines = 0;
    std::map<std::string, std::string> renames = nsrdb_column_renames();
};

/// Reads `timestamp,ghi_wm2,dni_wm2,dhi_wm2,tamb_c`. Irradiance columns may
/// instead be declared in kW/m2 (`ghi_kwm2`, ...) and temperature in kelvin
/// (`tamb_k`); values are converted. When no `timestamp` column exists,
/// separate Year/Month/Day/Hour/Minute columns are combined.
WeatherSeries load_weather(const std::filesystem::path& path, const WeatherCsvOptions& options);

/// Reads `timestamp,load_mw` (or `load_kw`). The timestamp column is optional.
LoadSeries load_load_profile(const std::filesystem::path& path,
                             std::optional<std::size_t> expected_hours = std::nullopt);

/// Writes the canonical schema with round-trip exact numbers.
void write_weather_csv(const std::filesystem::path& path, const WeatherSeries& weather);
void write_load_csv(const std::filesystem::path& path, const LoadSeries& load,
                    std::span<const LocalTimestamp> timestamps = {});

// ---------------------------------------------------------------------------
// Synthetic fixtures

/// Monthly clear-sky coefficients: apparent extraterrestrial irradiance A
/// (W/m2), optical depth B, diffuse ratio C.
struct ClearSkyCoefficients {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
};

/// ASHRAE clear-sky table, month in 1..12.
ClearSkyCoefficients clear_sky_coefficients(unsigned month);

struct ClearSkyIrradiance {
    double ghi = 0.0;
    double dni = 0.0;
    double dhi = 0.0;
};

/// Zero when the sun is at or below the horizon.
ClearSkyIrradiance clear_sky(const SolarPosition& position, unsigned month);

struct SyntheticWeatherParams {
    double longitude_deg = -83.07;
    double utc_offset_h = -5.0;
    LocalTimestamp start{2021, 1, 1, 0, 0};
    std::size_t hours = 8760;
    /// Daily cloud fraction is drawn uniformly from [0, cloud_amplitude).
    /// Clouds remove that fraction of the beam and scatter part of it into
    /// the diffuse component.
    double cloud_amplitude = 0.3;
    double temp_mean_c = 10.0;
    double temp_seasonal_amplitude_c = 12.0;
    double temp_diurnal_amplitude_c = 5.0;
    double temp_noise_c = 1.0;
};

/// Deterministic for a given seed. Throws ConfigError on an invalid latitude
/// or parameter set.
WeatherSeries synthesize_clear_sky_year(double latitude_deg, const SyntheticWeatherParams& params,
                                        std::uint64_t seed);

struct SyntheticLoadParams {
    LocalTimestamp start{2021, 1, 1, 0, 0};
    std::size_t hours = 8760;
    double mean_mw = 1.0;
    /// Relative amplitude of the afternoon peak.
    double daily_swing = 0.35;
    /// Relative amplitude of the summer peak.
    double seasonal_swing = 0.15;
    /// Relative standard deviation of hourly noise.
    double noise = 0.05;
};

LoadSeries synthesize_load_profile(const SyntheticLoadParams& params, std::uint64_t seed);

}  // namespace pvsize
