#include <doctest.h>

#include <numeric>
#include <random>

#include "pvsize/dispatch.hpp"
#include "pvsize/errors.hpp"

using namespace pvsize;

TEST_SUITE("dispatch") {

TEST_CASE("surplus is sold") {
    const auto h = dispatch_hour(2.0, 1.0, {1.0});
    CHECK(h.p_gsold == 1.0);
    CHECK(h.p_gpurch == 0.0);
    CHECK(h.p_deficit == 0.0);
}

TEST_CASE("shortfall within the cap is bought") {
    const auto h = dispatch_hour(0.5, 1.0, {1.0});
    CHECK(h.p_gpurch == 0.5);
    CHECK(h.p_deficit == 0.0);
    CHECK(h.p_gsold == 0.0);
}

TEST_CASE("shortfall beyond the cap leaves a deficit") {
    const auto h = dispatch_hour(0.2, 1.5, {1.0});
    CHECK(h.p_gpurch == 1.0);
    CHECK(h.p_deficit == doctest::Approx(0.3));
    CHECK(h.p_gsold == 0.0);
    CHECK(h.p_sgen + h.p_gpurch == doctest::Approx(h.p_load - h.p_deficit));
    CHECK(std::abs(h.balance_residual()) < 1e-12);
}

TEST_CASE("invalid inputs") {
    CHECK_THROWS_AS(dispatch_hour(-0.1, 1.0, {}), DataError);
    CHECK_THROWS_AS(dispatch_hour(0.1, -1.0, {}), DataError);
    CHECK_THROWS_AS(dispatch_hour(NAN, 1.0, {}), DataError);
    CHECK_THROWS_AS(DispatchParams{-1.0}.validate(), ConfigError);
    const auto load = LoadSeries::create({1.0, 1.0});
    const std::vector<double> gen{1.0};
    CHECK_THROWS_AS(simulate_year(gen, load, {}), DataError);
    CHECK_THROWS_AS(annual_totals(gen, load, {}), DataError);
}

TEST_CASE("hourly invariants on random hours") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 3.0);
    for (int i = 0; i < 100000; ++i) {
        const double cap = u(rng);
        const auto h = dispatch_hour(u(rng), u(rng), {cap});
        REQUIRE(h.p_gpurch >= 0.0);
        REQUIRE(h.p_gsold >= 0.0);
        REQUIRE(h.p_deficit >= 0.0);
        REQUIRE(h.p_gpurch <= cap);
        REQUIRE((h.p_gpurch == 0.0 || h.p_gsold == 0.0));
        REQUIRE(std::abs(h.balance_residual()) <= 1e-9);
    }
}

TEST_CASE("grid-only year with ample cap buys the whole load") {
    const auto load = LoadSeries::create(std::vector<double>(8760, 1.0));
    const std::vector<double> gen(8760, 0.0);
    const auto r = simulate_year(gen, load, {2.0});
    CHECK(r.totals.e_gpurch == doctest::Approx(r.totals.e_load));
    CHECK(r.totals.e_load == doctest::Approx(8.76));
    CHECK(r.totals.e_deficit == 0.0);
    CHECK(r.totals.hours == 8760);
}

TEST_CASE("generation equal to load leaves the grid idle") {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(0.0, 2.0);
    std::vector<double> v(500);
    for (auto& x : v) x = u(rng);
    const auto load = LoadSeries::create(v);
    const auto r = simulate_year(v, load, {1.0});
    CHECK(r.totals.e_gpurch == 0.0);
    CHECK(r.totals.e_gsold == 0.0);
    CHECK(r.totals.e_deficit == 0.0);
}

TEST_CASE("aggregates equal the hourly sums in GWh, and annual_totals agrees") {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(0.0, 2.5);
    std::vector<double> gen(1000), l(1000);
    for (std::size_t i = 0; i < gen.size(); ++i) gen[i] = u(rng), l[i] = u(rng);
    const auto load = LoadSeries::create(l);
    const auto r = simulate_year(gen, load, {0.8});
    auto sum = [&](double HourDispatch::*field) {
        double s = 0.0;
        for (const auto& h : r.hourly) s += h.*field;
        return s / 1000.0;
    };
    CHECK(r.totals.e_sgen == doctest::Approx(sum(&HourDispatch::p_sgen)).epsilon(1e-12));
    CHECK(r.totals.e_load == doctest::Approx(sum(&HourDispatch::p_load)).epsilon(1e-12));
    CHECK(r.totals.e_gpurch == doctest::Approx(sum(&HourDispatch::p_gpurch)).epsilon(1e-12));
    CHECK(r.totals.e_gsold == doctest::Approx(sum(&HourDispatch::p_gsold)).epsilon(1e-12));
    CHECK(r.totals.e_deficit == doctest::Approx(sum(&HourDispatch::p_deficit)).epsilon(1e-12));
    const auto t = annual_totals(gen, load, {0.8});
    CHECK(t.e_deficit == r.totals.e_deficit);
    CHECK(t.e_gsold == r.totals.e_gsold);
    CHECK(t.e_gpurch == r.totals.e_gpurch);
}

TEST_CASE("monotone in cap and generation; load energy is scenario independent") {
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> u(0.0, 2.0);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> gen(168), more(168), l(168);
        for (std::size_t i = 0; i < 168; ++i) {
            gen[i] = u(rng);
            more[i] = gen[i] + 0.5 * u(rng);
            l[i] = u(rng);
        }
        const auto load = LoadSeries::create(l);
        const auto base = annual_totals(gen, load, {0.5});
        const auto higher_cap = annual_totals(gen, load, {0.9});
        const auto more_gen = annual_totals(more, load, {0.5});
        REQUIRE(higher_cap.e_deficit <= base.e_deficit);
        REQUIRE(more_gen.e_deficit <= base.e_deficit);
        REQUIRE(more_gen.e_gsold >= base.e_gsold);
        REQUIRE(more_gen.e_load == base.e_load);
        REQUIRE(higher_cap.e_load == base.e_load);
    }
}

}  // TEST_SUITE
