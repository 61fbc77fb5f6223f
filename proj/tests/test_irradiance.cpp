#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "pvsize/errors.hpp"
#include "pvsize/irradiance.hpp"

using namespace pvsize;

namespace {

WeatherHour hour(double ghi, double dni, double dhi, double tamb = 20.0) {
    return {LocalTimestamp{2021, 6, 21, 12, 0}, ghi, dni, dhi, tamb};
}

SiteConfig site(double tilt, double albedo = 0.35, double elevation = 1.0, double azimuth = 0.0) {
    SiteConfig s;
    s.albedo = albedo;
    s.elevation_m = elevation;
    s.plane = {tilt, azimuth};
    return s;
}

struct RandomHour {
    WeatherHour weather;
    SolarPosition position;
};

RandomHour random_hour(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> day(1, 365);
    std::uniform_real_distribution<double> h(0.0, 24.0), u(0.0, 1.0);
    const Location loc;
    const auto pos = solar_position(loc, day(rng), h(rng));
    const double cz = std::max(0.0, std::cos(pos.zenith_deg * std::numbers::pi / 180.0));
    if (cz == 0.0) return {hour(0, 0, 0), pos};
    const double dni = 1000.0 * u(rng);
    const double dhi = 300.0 * u(rng) + 1.0;
    return {hour(dni * cz + dhi, dni, dhi), pos};
}

}  // namespace

TEST_SUITE("irradiance") {

TEST_CASE("component values for a fixed hour") {
    const auto pos = solar_position(Location{}, 172, 12.563);
    const auto s = site(35.0);
    const auto f = front_plane_irradiance(hour(800, 700, 150), pos, s);
    const auto r = rear_plane_irradiance(hour(800, 700, 150), pos, s);
    CHECK(f.diffuse == doctest::Approx(136.4364033216744).epsilon(1e-12));
    CHECK(f.ground_reflected == doctest::Approx(25.318713799541147).epsilon(1e-12));
    CHECK(f.beam == doctest::Approx(700.0 * incidence_cosine(pos, s.plane)).epsilon(1e-12));
    CHECK(r.beam == 0.0);
    CHECK(r.diffuse == doctest::Approx(13.563596678325615).epsilon(1e-12));
    CHECK(r.ground_reflected == doctest::Approx(178.2769003403212).epsilon(1e-12));
}

TEST_CASE("nighttime hour gives zero on both faces") {
    const auto pos = solar_position(Location{}, 172, 1.5);
    const auto f = front_plane_irradiance(hour(0, 0, 0), pos, site(35));
    const auto r = rear_plane_irradiance(hour(0, 0, 0), pos, site(35));
    CHECK(f.total == 0.0);
    CHECK(r.total == 0.0);
}

TEST_CASE("beam is dropped when the sun is below the horizon") {
    const auto pos = solar_position(Location{}, 172, 23.5);
    REQUIRE(pos.elevation_deg <= 0.0);
    const auto f = front_plane_irradiance(hour(0, 300, 0), pos, site(90, 0.35, 1.0, 180.0));
    CHECK(f.beam == 0.0);
}

TEST_CASE("components are non-negative and sum to the total") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> tilt(0.0, 90.0), az(-180.0, 180.0), alb(0.0, 1.0), el(0.0, 3.0);
    for (int i = 0; i < 20000; ++i) {
        const auto [w, pos] = random_hour(rng);
        const auto s = site(tilt(rng), alb(rng), el(rng), az(rng));
        for (const auto& p : {front_plane_irradiance(w, pos, s), rear_plane_irradiance(w, pos, s)}) {
            REQUIRE(p.beam >= 0.0);
            REQUIRE(p.diffuse >= 0.0);
            REQUIRE(p.ground_reflected >= 0.0);
            REQUIRE(std::abs(p.total - (p.beam + p.diffuse + p.ground_reflected)) <= 1e-9);
        }
        REQUIRE(rear_plane_irradiance(w, pos, s).beam == 0.0);
    }
}

TEST_CASE("horizontal plane closes on GHI") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 5000; ++i) {
        const auto [w, pos] = random_hour(rng);
        const auto f = front_plane_irradiance(w, pos, site(0.0));
        REQUIRE(f.ground_reflected == 0.0);
        REQUIRE(std::abs(f.total - w.ghi) <= 1e-6);
    }
}

TEST_CASE("bifacial effective irradiance dominates the front face") {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> tilt(0.0, 90.0), alb(0.01, 1.0), phi(0.01, 1.0);
    for (int i = 0; i < 20000; ++i) {
        const auto [w, pos] = random_hour(rng);
        const auto s = site(tilt(rng), alb(rng));
        const auto f = front_plane_irradiance(w, pos, s);
        const auto r = rear_plane_irradiance(w, pos, s);
        const auto e = effective_bifacial_irradiance(f, r, phi(rng));
        REQUIRE(e.effective >= f.total);
        if (w.ghi > 0.0) REQUIRE(e.effective > f.total);
    }
}

TEST_CASE("rear irradiance is non-decreasing in albedo and in mounting height") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 2000; ++i) {
        const auto [w, pos] = random_hour(rng);
        double prev = -1.0;
        for (double a = 0.0; a <= 1.0; a += 0.05) {
            const double total = rear_plane_irradiance(w, pos, site(35, a)).total;
            REQUIRE(total >= prev);
            prev = total;
        }
        prev = -1.0;
        for (double h = 0.0; h <= 3.0; h += 0.25) {
            const double total = rear_plane_irradiance(w, pos, site(35, 0.35, h)).total;
            REQUIRE(total >= prev);
            prev = total;
        }
    }
}

TEST_CASE("ground view factor") {
    CHECK(rear_ground_view_factor(0.0) == doctest::Approx(0.1));
    CHECK(rear_ground_view_factor(1.0) == doctest::Approx(0.7));
    CHECK(rear_ground_view_factor(1.5) == doctest::Approx(1.0));
    CHECK(rear_ground_view_factor(4.0) == doctest::Approx(1.0));
}

TEST_CASE("effective irradiance arithmetic") {
    PlaneIrradiance f{800, 150, 50, 1000};
    PlaneIrradiance r{0, 60, 140, 200};
    CHECK(effective_bifacial_irradiance(f, r, 0.7).effective == doctest::Approx(1140.0));
    CHECK(effective_bifacial_irradiance(f, r, 0.0).effective == 1000.0);
    CHECK_THROWS_AS(effective_bifacial_irradiance(f, r, 1.2), ConfigError);
    CHECK_THROWS_AS(effective_bifacial_irradiance(f, r, -0.1), ConfigError);
}

TEST_CASE("site validation") {
    CHECK_THROWS_AS(site(35, 1.5).validate(), ConfigError);
    CHECK_THROWS_AS(site(35, 0.3, -1.0).validate(), ConfigError);
    CHECK_THROWS_AS(site(120).validate(), ConfigError);
    CHECK_NOTHROW(site(35).validate());
}

}  // TEST_SUITE
