#include "pvsize/irradiance.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "pvsize/errors.hpp"

namespace pvsize {

namespace {

double cos_tilt(const SiteConfig& site) { return std::cos(site.plane.tilt_deg * std::numbers::pi / 180.0); }

}  // namespace

void SiteConfig::validate() const {
    if (!(albedo >= 0.0 && albedo <= 1.0)) throw ConfigError(fmt::format("albedo {} outside [0, 1]", albedo));
    if (!(elevation_m >= 0.0) || !std::isfinite(elevation_m)) {
        throw ConfigError(fmt::format("mounting elevation {} m must be non-negative", elevation_m));
    }
    plane.validate();
}

double rear_ground_view_factor(double elevation_m) {
    return std::min(1.0, elevation_m / 1.5) * 0.9 + 0.1;
}

PlaneIrradiance front_plane_irradiance(const WeatherHour& hour, const SolarPosition& position,
                                       const SiteConfig& site) {
    const double ct = cos_tilt(site);
    PlaneIrradiance out;
    if (position.elevation_deg > 0.0) {
        out.beam = hour.dni * std::max(incidence_cosine(position, site.plane), 0.0);
    }
    out.diffuse = hour.dhi * (1.0 + ct) / 2.0;
    out.ground_reflected = hour.ghi * site.albedo * (1.0 - ct) / 2.0;
    out.total = out.beam + out.diffuse + out.ground_reflected;
    return out;
}

PlaneIrradiance rear_plane_irradiance(const WeatherHour& hour, const SolarPosition& /*position*/,
                                      const SiteConfig& site) {
    const double ct = cos_tilt(site);
    PlaneIrradiance out;
    out.diffuse = hour.dhi * (1.0 - ct) / 2.0;
    out.ground_reflected = hour.ghi * site.albedo * (1.0 + ct) / 2.0 * rear_ground_view_factor(site.elevation_m);
    out.total = out.beam + out.diffuse + out.ground_reflected;
    return out;
}

EffectiveIrradiance effective_bifacial_irradiance(const PlaneIrradiance& front, const PlaneIrradiance& rear,
                                                  double bifaciality) {
    if (!(bifaciality >= 0.0 && bifaciality <= 1.0)) {
        throw ConfigError(fmt::format("bifaciality {} outside [0, 1]", bifaciality));
    }
    return {front.total, rear.total, front.total + bifaciality * rear.total};
}

}  // namespace pvsize
