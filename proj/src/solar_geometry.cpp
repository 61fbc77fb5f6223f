#include "pvsize/solar_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "pvsize/errors.hpp"

namespace pvsize {

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

}  // namespace

void Location::validate() const {
    if (!(latitude_deg >= -90.0 && latitude_deg <= 90.0)) {
        throw ConfigError(fmt::format("latitude {} outside [-90, 90]", latitude_deg));
    }
    if (!(longitude_deg >= -180.0 && longitude_deg <= 180.0)) {
        throw ConfigError(fmt::format("longitude {} outside [-180, 180]", longitude_deg));
    }
    if (!(utc_offset_h >= -12.0 && utc_offset_h <= 14.0)) {
        throw ConfigError(fmt::format("utc offset {} h outside [-12, 14]", utc_offset_h));
    }
}

void PlaneOrientation::validate() const {
    if (!(tilt_deg >= 0.0 && tilt_deg <= 90.0)) {
        throw ConfigError(fmt::format("tilt {} deg outside [0, 90]", tilt_deg));
    }
    if (!std::isfinite(azimuth_deg)) throw ConfigError("surface azimuth must be finite");
}

double declination_deg(int day_of_year) {
    return 23.45 * std::sin(360.0 * (284.0 + day_of_year) / 365.0 * kDeg);
}

double equation_of_time_min(int day_of_year) {
    const double b = 360.0 * (day_of_year - 81) / 364.0 * kDeg;
    return 9.87 * std::sin(2.0 * b) - 7.53 * std::cos(b) - 1.5 * std::sin(b);
}

double solar_time_h(const Location& location, int day_of_year, double clock_hour) {
    const double standard_meridian = 15.0 * location.utc_offset_h;
    const double correction_min =
        4.0 * (location.longitude_deg - standard_meridian) + equation_of_time_min(day_of_year);
    return clock_hour + correction_min / 60.0;
}

double hour_angle_deg(double solar_time_h) { return 15.0 * (solar_time_h - 12.0); }

SolarPosition solar_position(const Location& location, int day_of_year, double clock_hour) {
    SolarPosition pos;
    pos.declination_deg = declination_deg(day_of_year);
    pos.hour_angle_deg = hour_angle_deg(solar_time_h(location, day_of_year, clock_hour));

    const double lat = location.latitude_deg * kDeg;
    const double dec = pos.declination_deg * kDeg;
    const double omega = pos.hour_angle_deg * kDeg;

    const double cos_zenith = std::clamp(
        std::cos(lat) * std::cos(dec) * std::cos(omega) + std::sin(lat) * std::sin(dec), -1.0, 1.0);
    pos.zenith_deg = std::acos(cos_zenith) / kDeg;
    pos.elevation_deg = 90.0 - pos.zenith_deg;

    // Horizontal components of the sun vector, towards west and towards south.
    const double west = std::cos(dec) * std::sin(omega);
    const double south = std::cos(dec) * std::cos(omega) * std::sin(lat) - std::sin(dec) * std::cos(lat);
    pos.azimuth_deg = std::atan2(west, south) / kDeg;
    return pos;
}

SolarPosition solar_position(const Location& location, const LocalTimestamp& when) {
    return solar_position(location, when.day_of_year(), when.clock_hour());
}

SolarPosition hour_centre_position(const Location& location, const LocalTimestamp& hour_start) {
    return solar_position(location, hour_start.day_of_year(),
                          hour_start.clock_hour() + kHourCentreOffsetMin / 60.0);
}

double incidence_cosine(const SolarPosition& position, const PlaneOrientation& plane) {
    const double zenith = position.zenith_deg * kDeg;
    const double tilt = plane.tilt_deg * kDeg;
    const double rel_azimuth = (position.azimuth_deg - plane.azimuth_deg) * kDeg;
    const double c = std::cos(zenith) * std::cos(tilt) + std::sin(zenith) * std::sin(tilt) * std::cos(rel_azimuth);
    return std::clamp(c, -1.0, 1.0);
}

}  // namespace pvsize
