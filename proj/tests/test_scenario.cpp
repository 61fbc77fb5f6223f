#include <doctest.h>

#include <fstream>

#include "pvsize/errors.hpp"
#include "pvsize/scenario.hpp"
#include "support.hpp"

using namespace pvsize;

namespace {

// LPSP of the checked-in week fixture at selected sizes, from the standalone
// pipeline in tests/oracles/derive_values.py.
struct WeekPoint {
    std::int64_t n_pv;
    double lpsp;
};
constexpr WeekPoint kWeekOracle[] = {
    {0, 0.08325421314977446},  {100, 0.06521503889800256}, {250, 0.03856303719563939},
    {500, 0.005113307494533168}, {750, 0.0},               {1000, 0.0},
    {1500, 0.0},               {2000, 0.0},
};
constexpr std::int64_t kWeekOracleMinimizer = 674;

}  // namespace

TEST_SUITE("scenario") {

TEST_CASE("template parses to the defaults") {
    const auto parsed = parse_config(config_template());
    CHECK(config_snapshot(parsed) == config_snapshot(default_config(Technology::bifacial)));
    const auto mono = parse_config(config_template(), {}, Technology::monofacial);
    auto expected = default_config(Technology::monofacial);
    expected.name = "monofacial";
    CHECK(config_snapshot(mono) == config_snapshot(expected));
}

TEST_CASE("technology defaults") {
    const auto bi = default_config(Technology::bifacial);
    const auto mono = default_config(Technology::monofacial);
    CHECK(bi.site.plane.tilt_deg == 35.0);
    CHECK(mono.site.plane.tilt_deg == 25.0);
    CHECK(bi.economics.capital_cost_per_panel > mono.economics.capital_cost_per_panel);
    CHECK(bi.panel.bifaciality == 0.70);
    CHECK(bi.dispatch.p_gpurch_max_mw == 1.0);
    CHECK(bi.emissions.f_co2_t_per_mwh == 0.553);
    CHECK(bi.woa.options.population == 30);
    CHECK(bi.woa.options.max_iterations == 100);
}

TEST_CASE("explicit keys override and nulls keep defaults") {
    const auto c = parse_config(R"({
        // comment lines are allowed
        "technology": "monofacial",
        "site": {"tilt_deg": null, "albedo": 0.2, "n_rows": 40},
        "dispatch": {"p_gpurch_max_mw": 0.75},
        "economics": {"lcoe_energy_basis": "generated_minus_exported",
                      "replacements": [{"year": 12, "cost": 5000}]},
        "woa": {"seed": 99, "n_max": 3000}
    })");
    CHECK(c.technology == Technology::monofacial);
    CHECK(c.site.plane.tilt_deg == 25.0);
    CHECK(c.site.albedo == 0.2);
    CHECK(c.n_rows == 40);
    CHECK(c.dispatch.p_gpurch_max_mw == 0.75);
    CHECK(c.lcoe_basis == LcoeEnergyBasis::generated_minus_exported);
    REQUIRE(c.economics.replacements.size() == 1);
    CHECK(c.economics.replacements[0].year == 12);
    CHECK(c.woa.options.seed == 99);
    CHECK(c.woa.n_max == 3000);
}

TEST_CASE("config errors") {
    CHECK_THROWS_AS(parse_config("{"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"sitee": {}})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"site": {"tilt": 30}})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"technology": "trifacial"})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"site": {"albedo": "high"}})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"site": {"albedo": 1.5}})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"weather": {"source": "csv"}})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"woa": {"n_min": 10, "n_max": 5}})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"economics": {"lcoe_energy_basis": "other"}})"), ConfigError);
    CHECK_THROWS_AS(load_config("/nonexistent/config.json"), ConfigError);
    try {
        parse_config(R"({"panel": {"rated_power": 400}})");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("rated_power") != std::string::npos);
    }
}

TEST_CASE("relative CSV paths resolve against the config directory") {
    const auto dir = testsupport::scratch_dir("config_paths");
    std::filesystem::copy_file(testsupport::data_dir() / "week_weather.csv", dir / "w.csv");
    std::filesystem::copy_file(testsupport::data_dir() / "week_load.csv", dir / "l.csv");
    {
        std::ofstream f(dir / "c.json");
        f << R"({"weather": {"source": "csv", "path": "w.csv", "expected_hours": 168},
                 "load": {"source": "csv", "path": "l.csv"}})";
    }
    const auto c = load_config(dir / "c.json");
    REQUIRE(c.weather.csv_path.has_value());
    CHECK(*c.weather.csv_path == dir / "w.csv");
    const auto inputs = load_inputs(c);
    CHECK(inputs.weather.hours() == 168);
    CHECK(inputs.load.hours() == 168);
}

TEST_CASE("week fixture fitness matches the standalone pipeline") {
    const auto fx = testsupport::week_fixture();
    const auto model = fx.model();
    for (const auto& p : kWeekOracle) {
        CAPTURE(p.n_pv);
        CHECK(model.fitness(p.n_pv) == doctest::Approx(p.lpsp).epsilon(1e-12));
    }
    const auto sweep = sweep_oracle(0, 2000, [&](std::int64_t n) { return model.fitness(n); });
    CHECK(sweep.best_n_pv == kWeekOracleMinimizer);
    CHECK(sweep.best_lpsp == 0.0);
}

TEST_CASE("optimize reports the oracle optimum on the week fixture") {
    const auto fx = testsupport::week_fixture();
    const auto model = fx.model();
    const auto r = run_optimize(model);
    CHECK(r.outcome.best_n_pv == kWeekOracleMinimizer);
    CHECK(r.at_optimum.n_pv == kWeekOracleMinimizer);
    CHECK(r.at_optimum.metrics.lpsp == r.outcome.best_lpsp);
    CHECK(r.outcome.evaluations == 30u * 200u);
}

TEST_CASE("simulate equals the hand-assembled module pipeline") {
    const auto fx = testsupport::week_fixture();
    const auto model = fx.model();
    const std::int64_t n = 674;
    const auto report = run_simulate(model, n);

    const auto& c = fx.config;
    const auto& w = fx.inputs->weather;
    DispatchTotals totals;
    std::vector<double> gen;
    for (std::size_t t = 0; t < w.hours(); ++t) {
        const auto hour = w.hour(t);
        const auto pos = hour_centre_position(w.location(), hour.timestamp);
        const auto front = front_plane_irradiance(hour, pos, c.site);
        const auto rear = rear_plane_irradiance(hour, pos, c.site);
        const auto eff = effective_bifacial_irradiance(front, rear, c.panel.bifaciality);
        const double dc = panel_dc_power(eff.effective, cell_temperature(hour.t_amb, eff.effective, c.panel), c.panel);
        gen.push_back(array_ac_power(dc, n, c.system));
    }
    const auto expected = simulate_year(gen, fx.inputs->load, c.dispatch);
    CHECK(report.dispatch.totals.e_sgen == expected.totals.e_sgen);
    CHECK(report.dispatch.totals.e_gpurch == expected.totals.e_gpurch);
    CHECK(report.dispatch.totals.e_gsold == expected.totals.e_gsold);
    CHECK(report.dispatch.totals.e_deficit == expected.totals.e_deficit);
    CHECK(report.dispatch.totals.e_load == expected.totals.e_load);

    ArrayConfig array{n, c.n_rows, c.site};
    const double tac = total_annualized_cost(c.economics, c.panel, array);
    CHECK(report.metrics.lpsp == lpsp(expected.totals));
    CHECK(report.metrics.co2ra_gg_per_year == co2_reduction(expected.totals.e_sgen, c.emissions));
    CHECK(report.metrics.tac_per_year == tac);
    CHECK(report.metrics.lcoe_per_kwh == lcoe(tac, expected.totals.e_sgen));
    CHECK(report.metrics.area.square_metres == plant_area(c.panel, array).square_metres);
    CHECK(report.peak_ac_mw == *std::max_element(gen.begin(), gen.end()));
}

TEST_CASE("zero panels generate nothing and sit on the grid-only floor") {
    const auto fx = testsupport::week_fixture();
    const auto report = run_simulate(fx.model(), 0);
    CHECK(report.dispatch.totals.e_sgen == 0.0);
    CHECK(report.metrics.lcoe_per_kwh == 0.0);
    double floor = 0.0, total = 0.0;
    for (double l : fx.inputs->load.mw()) floor += std::max(0.0, l - 0.6), total += l;
    CHECK(report.metrics.lpsp == doctest::Approx(floor / total).epsilon(1e-12));
}

TEST_CASE("bifacial with zero bifaciality reproduces monofacial") {
    auto fx = testsupport::week_fixture();
    auto bi = fx.config;
    bi.panel.bifaciality = 0.0;
    auto mono = bi;
    mono.technology = Technology::monofacial;
    const SizingModel a(bi, fx.inputs), b(mono, fx.inputs);
    for (std::int64_t n : {0, 300, 674, 1500}) {
        const auto ra = run_simulate(a, n);
        const auto rb = run_simulate(b, n);
        CHECK(ra.dispatch.totals.e_sgen == rb.dispatch.totals.e_sgen);
        CHECK(ra.dispatch.totals.e_deficit == rb.dispatch.totals.e_deficit);
        CHECK(ra.metrics.lpsp == rb.metrics.lpsp);
        CHECK(ra.metrics.lcoe_per_kwh == rb.metrics.lcoe_per_kwh);
        CHECK(ra.metrics.area.square_metres == rb.metrics.area.square_metres);
    }
    CHECK(SizingModel(mono, fx.inputs).applied_bifaciality() == 0.0);
}

TEST_CASE("bifacial needs no more panels than monofacial on the same inputs") {
    const auto fx = testsupport::week_fixture();
    auto mono = fx.config;
    mono.technology = Technology::monofacial;
    mono.site.plane.tilt_deg = 25.0;
    const SizingModel bi_model(fx.config, fx.inputs), mono_model(mono, fx.inputs);
    const auto cmp = run_compare(mono_model, bi_model);
    CHECK(cmp.second.outcome.best_n_pv <= cmp.first.outcome.best_n_pv);
    CHECK(cmp.second.outcome.best_lpsp <= cmp.first.outcome.best_lpsp);
    CHECK(cmp.mean_irradiance_gain > 0.0);
    CHECK(cmp.first.at_optimum.dispatch.totals.e_load == cmp.second.at_optimum.dispatch.totals.e_load);
}

TEST_CASE("identical monofacial scenarios compare with zero deltas") {
    auto fx = testsupport::week_fixture();
    auto mono = fx.config;
    mono.technology = Technology::monofacial;
    const SizingModel a(mono, fx.inputs), b(mono, fx.inputs);
    const auto cmp = run_compare(a, b);
    CHECK(cmp.first.outcome.best_n_pv == cmp.second.outcome.best_n_pv);
    CHECK(cmp.first.at_optimum.metrics.lcoe_per_kwh == cmp.second.at_optimum.metrics.lcoe_per_kwh);
    CHECK(cmp.mean_irradiance_gain == 0.0);
    CHECK(cmp.max_irradiance_gain == 0.0);
}

TEST_CASE("mismatched horizons are rejected") {
    const auto fx = testsupport::week_fixture();
    {
        std::vector<double> l(100, 0.5);
        CHECK_THROWS_AS(SizingModel(fx.config,
                                    std::make_shared<const ScenarioInputs>(ScenarioInputs{
                                        fx.inputs->weather, LoadSeries::create(l)})),
                        DataError);
    }
    SyntheticWeatherParams wp;
    wp.hours = 24;
    auto day = std::make_shared<const ScenarioInputs>(ScenarioInputs{
        synthesize_clear_sky_year(42.36, wp, 1), LoadSeries::create(std::vector<double>(24, 0.5))});
    auto cfg = fx.config;
    cfg.woa.options.max_iterations = 2;
    CHECK_THROWS_AS(run_compare(SizingModel(cfg, fx.inputs), SizingModel(cfg, day)), DataError);

    auto c = fx.config;
    c.weather.expected_hours = 200;
    CHECK_THROWS_AS(load_inputs(c), DataError);
}

TEST_CASE("synthetic inputs follow the configured horizon") {
    auto c = default_config(Technology::bifacial);
    c.weather.synthetic.hours = 48;
    c.load.synthetic.hours = 48;
    const auto inputs = load_inputs(c);
    CHECK(inputs.weather.hours() == 48);
    CHECK(inputs.load.hours() == 48);
}

}  // TEST_SUITE
