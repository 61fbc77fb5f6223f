#include "pvsize/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>

#include <fmt/format.h>

#include "pvsize/errors.hpp"

namespace pvsize {

namespace {

struct Row {
    std::string key;
    double value;
};

std::vector<Row> simulation_rows(const SimulationReport& r) {
    const auto& t = r.dispatch.totals;
    const auto& m = r.metrics;
    const auto& irr = r.irradiance;
    return {
        {"n_pv", static_cast<double>(r.n_pv)},
        {"lpsp", m.lpsp},
        {"e_sgen_gwh", t.e_sgen},
        {"e_gpurch_gwh", t.e_gpurch},
        {"e_load_gwh", t.e_load},
        {"e_gsold_gwh", t.e_gsold},
        {"e_deficit_gwh", t.e_deficit},
        {"co2ra_gg_per_year", m.co2ra_gg_per_year},
        {"tac_usd_per_year", m.tac_per_year},
        {"lcoe_usd_per_kwh", m.lcoe_per_kwh},
        {"area_m2", m.area.square_metres},
        {"area_acres", m.area.acres},
        {"peak_ac_mw", r.peak_ac_mw},
        {"mean_ac_mw", r.mean_ac_mw},
        {"mean_front_wm2", irr.mean_front_wm2},
        {"max_front_wm2", irr.max_front_wm2},
        {"mean_rear_wm2", irr.mean_rear_wm2},
        {"max_rear_wm2", irr.max_rear_wm2},
        {"mean_effective_wm2", irr.mean_effective_wm2},
        {"max_effective_wm2", irr.max_effective_wm2},
    };
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write '" + path.string() + "'");
    out << content;
    if (!out) throw DataError("failed writing '" + path.string() + "'");
}

void prepare_dir(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw DataError("cannot create output directory '" + dir.string() + "': " + ec.message());
}

std::string pretty_config(const ScenarioConfig& config) {
    // The snapshot is compact JSON; break it after commas at the top level
    // only so the text report stays readable without re-serializing.
    const std::string compact = config_snapshot(config);
    std::string out;
    int depth = 0;
    for (char c : compact) {
        out += c;
        if (c == '{' || c == '[') ++depth;
        if (c == '}' || c == ']') --depth;
        if (c == ',' && depth == 1) out += "\n ";
    }
    return out;
}

void write_hourly(const std::filesystem::path& dir, const std::string& suffix, const SizingModel& model,
                  const SimulationReport& report) {
    write_file(dir / ("hourly_dispatch" + suffix + ".csv"),
               format_hourly_dispatch_csv(report.dispatch, model.inputs().weather.timestamps()));
    write_file(dir / ("hourly_irradiance" + suffix + ".csv"), format_hourly_irradiance_csv(model));
}

std::vector<double> project(const SizingModel& model, double (*field)(const HourIrradiance&)) {
    std::vector<double> v;
    v.reserve(model.hours());
    for (const auto& h : model.hourly()) v.push_back(field(h));
    return v;
}

void write_charts(const std::filesystem::path& dir, const std::string& suffix, const SizingModel& model,
                  const SimulationReport& report) {
    std::vector<double> power;
    power.reserve(report.dispatch.hourly.size());
    for (const auto& h : report.dispatch.hourly) power.push_back(h.p_sgen);
    write_file(dir / ("power" + suffix + ".svg"),
               svg_line_chart("Hourly inverter output", "hour", "MW", {{"P_sgen", power}}));
    write_file(dir / ("irradiance" + suffix + ".svg"),
               svg_line_chart("Hourly plane-of-array irradiance", "hour", "W/m2",
                              {{"front", project(model, [](const HourIrradiance& h) { return h.front.total; })},
                               {"rear", project(model, [](const HourIrradiance& h) { return h.rear.total; })},
                               {"effective",
                                project(model, [](const HourIrradiance& h) { return h.effective.effective; })}}));
}

std::string convergence_svg(const std::vector<std::pair<std::string, const SizingOutcome*>>& runs) {
    std::vector<ChartSeries> series;
    for (const auto& [name, outcome] : runs) {
        ChartSeries s{name, {}};
        for (double v : outcome->convergence) s.values.push_back(100.0 * v);
        series.push_back(std::move(s));
    }
    return svg_line_chart("WOA convergence", "iteration", "best LPSP (%)", series, 1.0);
}

}  // namespace

std::string format_report_text(const SimulationReport& r, const SizingOutcome* outcome) {
    const auto& t = r.dispatch.totals;
    const auto& m = r.metrics;
    const auto& irr = r.irradiance;
    std::string out;
    auto line = [&out](const std::string& text) {
        out += text;
        out += '\n';
    };
    line(fmt::format("Scenario: {} ({})", r.config.name, to_string(r.config.technology)));
    line(fmt::format("Horizon: {} h, tilt {} deg, albedo {}, grid purchase cap {} MW", t.hours, r.config.site.plane.tilt_deg,
         r.config.site.albedo, r.config.dispatch.p_gpurch_max_mw));
    line("");
    if (outcome) {
        line(fmt::format("Optimum (WOA, {} whales x {} iterations, seed {}, {} evaluations)", r.config.woa.options.population,
             r.config.woa.options.max_iterations, r.config.woa.options.seed, outcome->evaluations));
    } else {
        line("Fixed size");
    }
    line(fmt::format("  {:<28}{:>16}", "N_PV", r.n_pv));
    line(fmt::format("  {:<28}{:>16.4f}", "LPSP (%)", 100.0 * m.lpsp));
    line("");
    line("Indicators");
    line(fmt::format("  {:<28}{:>16.4f}", "CO2RA (GgCO2/year)", m.co2ra_gg_per_year));
    line(fmt::format("  {:<28}{:>16.5f}", "LCOE ($/kWh)", m.lcoe_per_kwh));
    line(fmt::format("  {:<28}{:>16.2f}", "TAC ($/year)", m.tac_per_year));
    line(fmt::format("  {:<28}{:>16.2f}", "Plant area (acre)", m.area.acres));
    line(fmt::format("  {:<28}{:>16.1f}", "Plant area (m2)", m.area.square_metres));
    line("");
    line("Energies (GWh)");
    line(fmt::format("  {:<28}{:>16.5f}", "E_sgen", t.e_sgen));
    line(fmt::format("  {:<28}{:>16.5f}", "E_gpurch", t.e_gpurch));
    line(fmt::format("  {:<28}{:>16.5f}", "E_L", t.e_load));
    line(fmt::format("  {:<28}{:>16.5f}", "E_gsold", t.e_gsold));
    line(fmt::format("  {:<28}{:>16.5f}", "E_deficit", t.e_deficit));
    line("");
    line("Irradiance (W/m2)                   mean           max");
    line(fmt::format("  {:<24}{:>14.2f}{:>14.2f}", "front", irr.mean_front_wm2, irr.max_front_wm2));
    line(fmt::format("  {:<24}{:>14.2f}{:>14.2f}", "rear", irr.mean_rear_wm2, irr.max_rear_wm2));
    line(fmt::format("  {:<24}{:>14.2f}{:>14.2f}", "effective", irr.mean_effective_wm2, irr.max_effective_wm2));
    line("");
    line("Inverter output (MW)");
    line(fmt::format("  {:<28}{:>16.4f}", "peak", r.peak_ac_mw));
    line(fmt::format("  {:<28}{:>16.4f}", "mean", r.mean_ac_mw));
    line("");
    line("Configuration");
    line(pretty_config(r.config));
    return out;
}

std::string format_report_csv(const SimulationReport& r, const SizingOutcome* outcome) {
    std::string out = "metric,value\n";
    out += fmt::format("technology,{}\n", to_string(r.config.technology));
    for (const auto& row : simulation_rows(r)) out += fmt::format("{},{}\n", row.key, row.value);
    if (outcome) {
        out += fmt::format("woa_seed,{}\n", r.config.woa.options.seed);
        out += fmt::format("woa_evaluations,{}\n", outcome->evaluations);
        out += fmt::format("woa_iterations,{}\n", outcome->convergence.size());
    }
    out += "config," + csv_quote(config_snapshot(r.config)) + "\n";
    return out;
}

std::string format_comparison_text(const ComparisonReport& c) {
    const auto& a = c.first.at_optimum;
    const auto& b = c.second.at_optimum;
    std::string out;
    auto line = [&out](const std::string& text) {
        out += text;
        out += '\n';
    };
    auto row = [&](const char* label, double x, double y, int precision) {
        line(fmt::format("  {:<26}{:>16.{}f}{:>16.{}f}{:>16.{}f}", label, x, precision, y, precision, y - x, precision));
    };
    line(fmt::format("Comparison: {} vs {}", a.config.name, b.config.name));
    line(fmt::format("  {:<26}{:>16}{:>16}{:>16}", "", a.config.name, b.config.name, "delta"));
    line("Optimum");
    row("N_PV", static_cast<double>(a.n_pv), static_cast<double>(b.n_pv), 0);
    row("LPSP (%)", 100.0 * a.metrics.lpsp, 100.0 * b.metrics.lpsp, 4);
    line("Indicators");
    row("CO2RA (GgCO2/year)", a.metrics.co2ra_gg_per_year, b.metrics.co2ra_gg_per_year, 4);
    row("LCOE ($/kWh)", a.metrics.lcoe_per_kwh, b.metrics.lcoe_per_kwh, 5);
    row("Plant area (acre)", a.metrics.area.acres, b.metrics.area.acres, 2);
    line("Energies (GWh)");
    row("E_sgen", a.dispatch.totals.e_sgen, b.dispatch.totals.e_sgen, 5);
    row("E_gpurch", a.dispatch.totals.e_gpurch, b.dispatch.totals.e_gpurch, 5);
    row("E_L", a.dispatch.totals.e_load, b.dispatch.totals.e_load, 5);
    row("E_gsold", a.dispatch.totals.e_gsold, b.dispatch.totals.e_gsold, 5);
    row("E_deficit", a.dispatch.totals.e_deficit, b.dispatch.totals.e_deficit, 5);
    line("Effective irradiance (W/m2)");
    row("mean", a.irradiance.mean_effective_wm2, b.irradiance.mean_effective_wm2, 2);
    row("max", a.irradiance.max_effective_wm2, b.irradiance.max_effective_wm2, 2);
    line(fmt::format("  {:<26}{:>16.2f}", "gain on mean (%)", 100.0 * c.mean_irradiance_gain));
    line(fmt::format("  {:<26}{:>16.2f}", "gain on max (%)", 100.0 * c.max_irradiance_gain));
    line("Inverter output (MW)");
    row("peak", a.peak_ac_mw, b.peak_ac_mw, 4);
    row("mean", a.mean_ac_mw, b.mean_ac_mw, 4);
    line("");
    line(fmt::format("Configuration ({})", a.config.name));
    line(pretty_config(a.config));
    line(fmt::format("Configuration ({})", b.config.name));
    line(pretty_config(b.config));
    return out;
}

std::string format_comparison_csv(const ComparisonReport& c) {
    const auto& a = c.first.at_optimum;
    const auto& b = c.second.at_optimum;
    std::string out = fmt::format("metric,{},{},delta\n", a.config.name, b.config.name);
    out += fmt::format("technology,{},{},\n", to_string(a.config.technology), to_string(b.config.technology));
    const auto ra = simulation_rows(a);
    const auto rb = simulation_rows(b);
    for (std::size_t i = 0; i < ra.size(); ++i) {
        out += fmt::format("{},{},{},{}\n", ra[i].key, ra[i].value, rb[i].value, rb[i].value - ra[i].value);
    }
    out += fmt::format("mean_irradiance_gain,,,{}\n", c.mean_irradiance_gain);
    out += fmt::format("max_irradiance_gain,,,{}\n", c.max_irradiance_gain);
    out += "config," + csv_quote(config_snapshot(a.config)) + "," + csv_quote(config_snapshot(b.config)) + ",\n";
    return out;
}

std::string format_convergence_csv(const SizingOutcome& outcome) {
    std::string out = "iteration,best_lpsp,best_n_pv\n";
    for (std::size_t k = 0; k < outcome.convergence.size(); ++k) {
        out += fmt::format("{},{},{}\n", k + 1, outcome.convergence[k], outcome.convergence_n_pv[k]);
    }
    return out;
}

std::string format_hourly_dispatch_csv(const DispatchResult& dispatch, std::span<const LocalTimestamp> timestamps) {
    std::string out = "timestamp,p_sgen_mw,p_load_mw,p_gpurch_mw,p_gsold_mw,p_deficit_mw\n";
    for (std::size_t t = 0; t < dispatch.hourly.size(); ++t) {
        const auto& h = dispatch.hourly[t];
        const std::string ts = t < timestamps.size() ? timestamps[t].to_string() : std::to_string(t);
        out += fmt::format("{},{},{},{},{},{}\n", ts, h.p_sgen, h.p_load, h.p_gpurch, h.p_gsold, h.p_deficit);
    }
    return out;
}

std::string format_hourly_irradiance_csv(const SizingModel& model) {
    std::string out =
        "timestamp,zenith_deg,azimuth_deg,front_beam_wm2,front_diffuse_wm2,front_reflected_wm2,front_total_wm2,"
        "rear_beam_wm2,rear_diffuse_wm2,rear_reflected_wm2,rear_total_wm2,effective_wm2,t_cell_c,dc_per_panel_w\n";
    const auto stamps = model.inputs().weather.timestamps();
    for (std::size_t t = 0; t < model.hours(); ++t) {
        const auto& h = model.hourly()[t];
        out += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n", stamps[t].to_string(), h.position.zenith_deg,
                           h.position.azimuth_deg, h.front.beam, h.front.diffuse, h.front.ground_reflected,
                           h.front.total, h.rear.beam, h.rear.diffuse, h.rear.ground_reflected, h.rear.total,
                           h.effective.effective, h.t_cell_c, h.dc_per_panel_w);
    }
    return out;
}

std::string svg_line_chart(const std::string& title, const std::string& x_label, const std::string& y_label,
                           const std::vector<ChartSeries>& series, double x_origin) {
    constexpr double width = 900, height = 420, left = 70, right = 20, top = 40, bottom = 50;
    static constexpr const char* colours[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd"};

    std::size_t n = 0;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const auto& s : series) {
        n = std::max(n, s.values.size());
        for (double v : s.values) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    if (n == 0 || !std::isfinite(lo)) lo = 0.0, hi = 1.0;
    if (hi <= lo) hi = lo + 1.0;
    const double span_x = std::max<double>(1.0, static_cast<double>(n) - 1.0);
    auto px = [&](std::size_t i) { return left + (width - left - right) * static_cast<double>(i) / span_x; };
    auto py = [&](double v) { return height - bottom - (height - top - bottom) * (v - lo) / (hi - lo); };

    std::string out = fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\">\n"
        "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        "<text x=\"{2}\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\" text-anchor=\"middle\">{3}</text>\n",
        width, height, width / 2, title);
    out += fmt::format(
        "<path d=\"M{0} {1} V{2} H{3}\" stroke=\"black\" fill=\"none\"/>\n", left, top, height - bottom,
        width - right);
    out += fmt::format(
        "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">{}</text>\n",
        (left + width - right) / 2, height - 12, x_label);
    out += fmt::format(
        "<text x=\"16\" y=\"{0}\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\" "
        "transform=\"rotate(-90 16 {0})\">{1}</text>\n",
        (top + height - bottom) / 2, y_label);
    for (double frac : {0.0, 0.5, 1.0}) {
        const double v = lo + frac * (hi - lo);
        out += fmt::format(
            "<text x=\"{}\" y=\"{:.1f}\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">{:.4g}</text>\n",
            left - 6, py(v) + 4, v);
    }
    out += fmt::format(
        "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"start\">{}</text>\n", left,
        height - bottom + 16, x_origin);
    out += fmt::format(
        "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">{}</text>\n",
        width - right, height - bottom + 16, x_origin + span_x);

    for (std::size_t k = 0; k < series.size(); ++k) {
        const char* colour = colours[k % std::size(colours)];
        std::string points;
        points.reserve(series[k].values.size() * 16);
        for (std::size_t i = 0; i < series[k].values.size(); ++i) {
            points += fmt::format("{:.1f},{:.1f} ", px(i), py(series[k].values[i]));
        }
        out += fmt::format("<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1\" points=\"{}\"/>\n", colour,
                           points);
        out += fmt::format(
            "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"12\" fill=\"{}\">{}</text>\n",
            width - right - 120, top + 16 * (k + 1), colour, series[k].label);
    }
    out += "</svg>\n";
    return out;
}

void write_simulation_outputs(const std::filesystem::path& dir, const SizingModel& model,
                              const SimulationReport& report, const OutputOptions& options) {
    prepare_dir(dir);
    write_file(dir / "report.txt", format_report_text(report));
    write_file(dir / "report.csv", format_report_csv(report));
    if (options.dump_hourly) write_hourly(dir, "", model, report);
    if (options.svg) write_charts(dir, "", model, report);
}

void write_optimization_outputs(const std::filesystem::path& dir, const SizingModel& model,
                                const OptimizationReport& report, const OutputOptions& options) {
    prepare_dir(dir);
    write_file(dir / "report.txt", format_report_text(report.at_optimum, &report.outcome));
    write_file(dir / "report.csv", format_report_csv(report.at_optimum, &report.outcome));
    write_file(dir / "convergence.csv", format_convergence_csv(report.outcome));
    if (options.dump_hourly) write_hourly(dir, "", model, report.at_optimum);
    if (options.svg) {
        write_charts(dir, "", model, report.at_optimum);
        write_file(dir / "convergence.svg", convergence_svg({{model.config().name, &report.outcome}}));
    }
}

void write_comparison_outputs(const std::filesystem::path& dir, const SizingModel& first, const SizingModel& second,
                              const ComparisonReport& report, const OutputOptions& options) {
    prepare_dir(dir);
    const std::string a = "_" + first.config().name;
    std::string b = "_" + second.config().name;
    if (b == a) b += "_2";
    write_file(dir / "report.txt", format_comparison_text(report));
    write_file(dir / "report.csv", format_comparison_csv(report));
    write_file(dir / ("convergence" + a + ".csv"), format_convergence_csv(report.first.outcome));
    write_file(dir / ("convergence" + b + ".csv"), format_convergence_csv(report.second.outcome));
    if (options.dump_hourly) {
        write_hourly(dir, a, first, report.first.at_optimum);
        write_hourly(dir, b, second, report.second.at_optimum);
    }
    if (options.svg) {
        write_charts(dir, a, first, report.first.at_optimum);
        write_charts(dir, b, second, report.second.at_optimum);
        write_file(dir / "convergence.svg", convergence_svg({{first.config().name, &report.first.outcome},
                                                             {second.config().name, &report.second.outcome}}));
    }
}

}  // namespace pvsize
