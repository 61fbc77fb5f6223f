#pragma once

#include "pvsize/timestamp.hpp"

namespace pvsize {

/// Site coordinates. Longitude is east-positive; utc_offset_h is the local
/// standard time offset (Detroit: -5).
struct Location {
    double latitude_deg = 42.36;
    double longitude_deg = -83.07;
    double utc_offset_h = -5.0;

    void validate() const;
};

/// Sun position. Azimuth is measured from south, west positive.
struct SolarPosition {
    double declination_deg = 0.0;
    double hour_angle_deg = 0.0;
    double zenith_deg = 90.0;
    double azimuth_deg = 0.0;
    double elevation_deg = 0.0;
};

/// Fixed plane. Tilt from horizontal in [0, 90]; azimuth from south, west positive.
struct PlaneOrientation {
    double tilt_deg = 0.0;
    double azimuth_deg = 0.0;

    void validate() const;
};

/// Cooper's formula.
double declination_deg(int day_of_year);

/// Minutes; positive when the sundial runs ahead of mean solar time.
double equation_of_time_min(int day_of_year);

/// Apparent solar time in hours for a local standard clock reading.
double solar_time_h(const Location& location, int day_of_year, double clock_hour);

/// 15 degrees per hour from solar noon, negative in the morning.
double hour_angle_deg(double solar_time_h);

SolarPosition solar_position(const Location& location, int day_of_year, double clock_hour);

/// Position at the exact timestamp.
SolarPosition solar_position(const Location& location, const LocalTimestamp& when);

/// Offset from an hourly row's timestamp to the instant used to represent
/// the hour's mean irradiance.
inline constexpr double kHourCentreOffsetMin = 30.0;

/// Position at the middle of the hour that starts at `hour_start`.
SolarPosition hour_centre_position(const Location& location, const LocalTimestamp& hour_start);

/// cos(angle of incidence) in [-1, 1]. Negative when the sun is behind the plane.
double incidence_cosine(const SolarPosition& position, const PlaneOrientation& plane);

}  // namespace pvsize
