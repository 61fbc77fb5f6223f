#pragma once

#include "pvsize/solar_geometry.hpp"
#include "pvsize/weather.hpp"

namespace pvsize {

/// Irradiance on one face of a tilted panel, W/m2.
struct PlaneIrradiance {
    double beam = 0.0;
    double diffuse = 0.0;
    double ground_reflected = 0.0;
    double total = 0.0;
};

struct SiteConfig {
    double albedo = 0.35;
    /// Lowest panel edge above ground, m.
    double elevation_m = 1.0;
    PlaneOrientation plane;

    void validate() const;
};

struct EffectiveIrradiance {
    double front_total = 0.0;
    double rear_total = 0.0;
    double effective = 0.0;
};

/// Share of the rear ground view left unshaded by the array at a given
/// mounting height: min(1, h / 1.5 m) * 0.9 + 0.1.
double rear_ground_view_factor(double elevation_m);

/// Isotropic sky and ground transposition onto the front face. The beam term
/// is zero when the sun is at or below the horizon or behind the plane.
PlaneIrradiance front_plane_irradiance(const WeatherHour& hour, const SolarPosition& position,
                                       const SiteConfig& site);

/// Rear face: no beam, sky diffuse through (1 - cos tilt) / 2 and ground
/// reflection through (1 + cos tilt) / 2 scaled by rear_ground_view_factor.
PlaneIrradiance rear_plane_irradiance(const WeatherHour& hour, const SolarPosition& position,
                                      const SiteConfig& site);

/// front.total + bifaciality * rear.total. Throws ConfigError when
/// bifaciality lies outside [0, 1].
EffectiveIrradiance effective_bifacial_irradiance(const PlaneIrradiance& front, const PlaneIrradiance& rear,
                                                  double bifaciality);

}  // namespace pvsize
