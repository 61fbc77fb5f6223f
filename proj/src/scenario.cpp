#include "pvsize/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "pvsize/errors.hpp"

namespace pvsize {

using nlohmann::json;

std::string_view to_string(Technology tech) noexcept {
    return tech == Technology::monofacial ? "monofacial" : "bifacial";
}

double default_tilt_deg(Technology tech) noexcept { return tech == Technology::monofacial ? 25.0 : 35.0; }

namespace {

Technology parse_technology(const std::string& s) {
    if (s == "monofacial" || s == "mPV") return Technology::monofacial;
    if (s == "bifacial" || s == "bPV") return Technology::bifacial;
    throw ConfigError("technology must be 'monofacial' or 'bifacial', got '" + s + "'");
}

LcoeEnergyBasis parse_basis(const std::string& s) {
    if (s == "generated") return LcoeEnergyBasis::generated;
    if (s == "generated_minus_exported") return LcoeEnergyBasis::generated_minus_exported;
    throw ConfigError("lcoe_energy_basis must be 'generated' or 'generated_minus_exported', got '" + s + "'");
}

std::string_view basis_name(LcoeEnergyBasis b) {
    return b == LcoeEnergyBasis::generated ? "generated" : "generated_minus_exported";
}

// Reads the keys of one JSON object and rejects any it did not consume.
class Section {
public:
    Section(const json& node, std::string path) : node_(node), path_(std::move(path)) {
        if (!node_.is_object()) throw ConfigError("'" + path_ + "' must be an object");
    }

    template <class T>
    void get(const char* key, T& out) {
        seen_.insert(key);
        const auto it = node_.find(key);
        if (it == node_.end() || it->is_null()) return;
        try {
            out = it->template get<T>();
        } catch (const json::exception& e) {
            throw ConfigError("'" + path_ + "." + key + "': " + e.what());
        }
    }

    template <class T>
    void get(const char* key, std::optional<T>& out) {
        T value{};
        seen_.insert(key);
        if (node_.contains(key) && !node_.at(key).is_null()) {
            get(key, value);
            out = value;
        }
    }

    std::optional<Section> sub(const char* key) {
        seen_.insert(key);
        const auto it = node_.find(key);
        if (it == node_.end() || it->is_null()) return std::nullopt;
        return Section(*it, path_ + "." + key);
    }

    const json* raw(const char* key) {
        seen_.insert(key);
        const auto it = node_.find(key);
        return it == node_.end() ? nullptr : &*it;
    }

    void finish() const {
        for (const auto& [key, value] : node_.items()) {
            if (!seen_.count(key)) throw ConfigError("unknown key '" + path_ + "." + key + "'");
        }
    }

private:
    const json& node_;
    std::string path_;
    std::set<std::string> seen_;
};

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
    std::filesystem::path path(p);
    return path.is_relative() && !base.empty() ? base / path : path;
}

void read_start(Section& s, LocalTimestamp& out) {
    std::optional<std::string> text;
    s.get("start", text);
    if (!text) return;
    try {
        out = LocalTimestamp::parse(*text);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

void read_weather(Section s, WeatherSource& w, const std::filesystem::path& base) {
    std::string source = "synthetic";
    s.get("source", source);
    std::optional<std::string> path;
    s.get("path", path);
    s.get("skip_lines", w.skip_lines);
    s.get("expected_hours", w.expected_hours);
    s.get("seed", w.synthetic_seed);
    s.get("hours", w.synthetic.hours);
    read_start(s, w.synthetic.start);
    s.get("cloud_amplitude", w.synthetic.cloud_amplitude);
    s.get("temp_mean_c", w.synthetic.temp_mean_c);
    s.get("temp_seasonal_amplitude_c", w.synthetic.temp_seasonal_amplitude_c);
    s.get("temp_diurnal_amplitude_c", w.synthetic.temp_diurnal_amplitude_c);
    s.get("temp_noise_c", w.synthetic.temp_noise_c);
    s.finish();
    if (source == "csv") {
        if (!path) throw ConfigError("weather.source 'csv' needs weather.path");
        w.csv_path = resolve(base, *path);
    } else if (source == "synthetic") {
        w.csv_path.reset();
    } else {
        throw ConfigError("weather.source must be 'csv' or 'synthetic'");
    }
}

void read_load(Section s, LoadSource& l, const std::filesystem::path& base) {
    std::string source = "synthetic";
    s.get("source", source);
    std::optional<std::string> path;
    s.get("path", path);
    s.get("seed", l.synthetic_seed);
    s.get("hours", l.synthetic.hours);
    read_start(s, l.synthetic.start);
    s.get("mean_mw", l.synthetic.mean_mw);
    s.get("daily_swing", l.synthetic.daily_swing);
    s.get("seasonal_swing", l.synthetic.seasonal_swing);
    s.get("noise", l.synthetic.noise);
    s.finish();
    if (source == "csv") {
        if (!path) throw ConfigError("load.source 'csv' needs load.path");
        l.csv_path = resolve(base, *path);
    } else if (source == "synthetic") {
        l.csv_path.reset();
    } else {
        throw ConfigError("load.source must be 'csv' or 'synthetic'");
    }
}

json weather_json(const WeatherSource& w) {
    json j;
    if (w.csv_path) {
        j["source"] = "csv";
        j["path"] = w.csv_path->generic_string();
        j["skip_lines"] = w.skip_lines;
        j["expected_hours"] = w.expected_hours ? json(*w.expected_hours) : json(nullptr);
    } else {
        j["source"] = "synthetic";
        j["seed"] = w.synthetic_seed;
        j["hours"] = w.synthetic.hours;
        j["start"] = w.synthetic.start.to_string();
        j["cloud_amplitude"] = w.synthetic.cloud_amplitude;
        j["temp_mean_c"] = w.synthetic.temp_mean_c;
        j["temp_seasonal_amplitude_c"] = w.synthetic.temp_seasonal_amplitude_c;
        j["temp_diurnal_amplitude_c"] = w.synthetic.temp_diurnal_amplitude_c;
        j["temp_noise_c"] = w.synthetic.temp_noise_c;
    }
    return j;
}

json load_json(const LoadSource& l) {
    json j;
    if (l.csv_path) {
        j["source"] = "csv";
        j["path"] = l.csv_path->generic_string();
    } else {
        j["source"] = "synthetic";
        j["seed"] = l.synthetic_seed;
        j["hours"] = l.synthetic.hours;
        j["start"] = l.synthetic.start.to_string();
        j["mean_mw"] = l.synthetic.mean_mw;
        j["daily_swing"] = l.synthetic.daily_swing;
        j["seasonal_swing"] = l.synthetic.seasonal_swing;
        j["noise"] = l.synthetic.noise;
    }
    return j;
}

}  // namespace

void ScenarioConfig::validate() const {
    location.validate();
    panel.validate();
    system.validate();
    site.validate();
    if (n_rows < 1) throw ConfigError("site.n_rows must be at least 1");
    dispatch.validate();
    economics.validate();
    emissions.validate();
    woa.validate();
    if (weather.synthetic.hours == 0 && !weather.csv_path) throw ConfigError("weather.hours must be >= 1");
}

ScenarioConfig default_config(Technology tech) {
    ScenarioConfig c;
    c.name = std::string(to_string(tech));
    c.technology = tech;
    c.site.plane.tilt_deg = default_tilt_deg(tech);
    c.economics.capital_cost_per_panel = tech == Technology::bifacial ? 280.0 : 250.0;
    c.economics.om_cost_per_panel_year = 6.0;
    c.economics.discount_rate = 0.05;
    c.economics.lifetime_years = 25;
    c.economics.inverter_cost_per_mw = 120000.0;
    return c;
}

ScenarioConfig parse_config(std::string_view text, const std::filesystem::path& base_dir,
                            std::optional<Technology> technology_override) {
    json root;
    try {
        root = json::parse(text.begin(), text.end(), nullptr, true, true);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    Section top(root, "config");

    std::string tech_name = "bifacial";
    top.get("technology", tech_name);
    const Technology tech = technology_override.value_or(parse_technology(tech_name));
    ScenarioConfig c = default_config(tech);
    top.get("name", c.name);
    if (technology_override) c.name = std::string(to_string(tech));

    if (auto s = top.sub("location")) {
        s->get("latitude_deg", c.location.latitude_deg);
        s->get("longitude_deg", c.location.longitude_deg);
        s->get("utc_offset_h", c.location.utc_offset_h);
        s->finish();
    }
    c.weather.synthetic.longitude_deg = c.location.longitude_deg;
    c.weather.synthetic.utc_offset_h = c.location.utc_offset_h;
    if (auto s = top.sub("weather")) read_weather(*s, c.weather, base_dir);
    if (auto s = top.sub("load")) read_load(*s, c.load, base_dir);
    c.load.synthetic.start = c.weather.synthetic.start;
    if (!c.load.csv_path && !c.weather.csv_path) c.load.synthetic.hours = c.weather.synthetic.hours;
    if (auto s = top.sub("panel")) {
        s->get("rated_power_w", c.panel.rated_power_w);
        s->get("area_m2", c.panel.area_m2);
        s->get("temp_coefficient", c.panel.temp_coefficient);
        s->get("noct_c", c.panel.noct_c);
        s->get("bifaciality", c.panel.bifaciality);
        s->finish();
    }
    if (auto s = top.sub("system")) {
        s->get("inverter_efficiency", c.system.inverter_efficiency);
        s->get("derating", c.system.derating);
        s->finish();
    }
    if (auto s = top.sub("site")) {
        s->get("tilt_deg", c.site.plane.tilt_deg);
        s->get("azimuth_deg", c.site.plane.azimuth_deg);
        s->get("albedo", c.site.albedo);
        s->get("elevation_m", c.site.elevation_m);
        s->get("n_rows", c.n_rows);
        s->finish();
    }
    if (auto s = top.sub("dispatch")) {
        s->get("p_gpurch_max_mw", c.dispatch.p_gpurch_max_mw);
        s->finish();
    }
    if (auto s = top.sub("economics")) {
        s->get("capital_cost_per_panel", c.economics.capital_cost_per_panel);
        s->get("om_cost_per_panel_year", c.economics.om_cost_per_panel_year);
        s->get("discount_rate", c.economics.discount_rate);
        s->get("lifetime_years", c.economics.lifetime_years);
        s->get("inverter_cost_per_mw", c.economics.inverter_cost_per_mw);
        std::string basis(basis_name(c.lcoe_basis));
        s->get("lcoe_energy_basis", basis);
        c.lcoe_basis = parse_basis(basis);
        if (const json* reps = s->raw("replacements")) {
            if (!reps->is_array()) throw ConfigError("'economics.replacements' must be an array");
            c.economics.replacements.clear();
            for (const auto& item : *reps) {
                Section r(item, "economics.replacements[]");
                Replacement rep;
                r.get("year", rep.year);
                r.get("cost", rep.cost);
                r.finish();
                c.economics.replacements.push_back(rep);
            }
        }
        s->finish();
    }
    if (auto s = top.sub("emissions")) {
        s->get("f_co2_t_per_mwh", c.emissions.f_co2_t_per_mwh);
        s->finish();
    }
    if (auto s = top.sub("woa")) {
        s->get("population", c.woa.options.population);
        s->get("max_iterations", c.woa.options.max_iterations);
        s->get("spiral_b", c.woa.options.spiral_b);
        s->get("seed", c.woa.options.seed);
        s->get("threads", c.woa.options.threads);
        s->get("n_min", c.woa.n_min);
        s->get("n_max", c.woa.n_max);
        s->finish();
    }
    top.finish();
    c.validate();
    return c;
}

ScenarioConfig load_config(const std::filesystem::path& path, std::optional<Technology> technology_override) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config '" + path.string() + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), path.parent_path(), technology_override);
}

std::string config_snapshot(const ScenarioConfig& c) {
    json j;
    j["name"] = c.name;
    j["technology"] = std::string(to_string(c.technology));
    j["location"] = {{"latitude_deg", c.location.latitude_deg},
                     {"longitude_deg", c.location.longitude_deg},
                     {"utc_offset_h", c.location.utc_offset_h}};
    j["weather"] = weather_json(c.weather);
    j["load"] = load_json(c.load);
    j["panel"] = {{"rated_power_w", c.panel.rated_power_w},
                  {"area_m2", c.panel.area_m2},
                  {"temp_coefficient", c.panel.temp_coefficient},
                  {"noct_c", c.panel.noct_c},
                  {"bifaciality", c.panel.bifaciality}};
    j["system"] = {{"inverter_efficiency", c.system.inverter_efficiency}, {"derating", c.system.derating}};
    j["site"] = {{"tilt_deg", c.site.plane.tilt_deg},
                 {"azimuth_deg", c.site.plane.azimuth_deg},
                 {"albedo", c.site.albedo},
                 {"elevation_m", c.site.elevation_m},
                 {"n_rows", c.n_rows}};
    j["dispatch"] = {{"p_gpurch_max_mw", c.dispatch.p_gpurch_max_mw}};
    json reps = json::array();
    for (const auto& r : c.economics.replacements) reps.push_back({{"year", r.year}, {"cost", r.cost}});
    j["economics"] = {{"capital_cost_per_panel", c.economics.capital_cost_per_panel},
                      {"om_cost_per_panel_year", c.economics.om_cost_per_panel_year},
                      {"discount_rate", c.economics.discount_rate},
                      {"lifetime_years", c.economics.lifetime_years},
                      {"inverter_cost_per_mw", c.economics.inverter_cost_per_mw},
                      {"lcoe_energy_basis", std::string(basis_name(c.lcoe_basis))},
                      {"replacements", reps}};
    j["emissions"] = {{"f_co2_t_per_mwh", c.emissions.f_co2_t_per_mwh}};
    j["woa"] = {{"population", c.woa.options.population},
                {"max_iterations", c.woa.options.max_iterations},
                {"spiral_b", c.woa.options.spiral_b},
                {"seed", c.woa.options.seed},
                {"threads", c.woa.options.threads},
                {"n_min", c.woa.n_min},
                {"n_max", c.woa.n_max}};
    return j.dump();
}

std::string config_template() {
    const ScenarioConfig c = default_config(Technology::bifacial);
    const ScenarioConfig m = default_config(Technology::monofacial);
    return fmt::format(
        R"(// Sizing scenario. Comments are allowed; absent keys take the defaults shown.
{{
  "name": "{name}",
  // "monofacial" or "bifacial". Selects the default tilt and panel price.
  "technology": "bifacial",

  "location": {{
    "latitude_deg": {lat},
    "longitude_deg": {lon},      // east positive
    "utc_offset_h": {utc}        // local standard time, no daylight saving
  }},

  // "synthetic" builds a clear-sky year with daily cloud draws.
  // For measured data use {{"source": "csv", "path": "weather.csv", "skip_lines": 0}}
  // with columns timestamp,ghi_wm2,dni_wm2,dhi_wm2,tamb_c (NSRDB names accepted).
  "weather": {{
    "source": "synthetic",
    "seed": {wseed},
    "hours": {hours},
    "start": "{start}",
    "cloud_amplitude": {cloud},
    "temp_mean_c": {tmean},
    "temp_seasonal_amplitude_c": {tseason},
    "temp_diurnal_amplitude_c": {tdiurnal},
    "temp_noise_c": {tnoise}
  }},

  // For measured data use {{"source": "csv", "path": "load.csv"}} with columns timestamp,load_mw.
  "load": {{
    "source": "synthetic",
    "seed": {lseed},
    "mean_mw": {lmean},
    "daily_swing": {lday},
    "seasonal_swing": {lseason},
    "noise": {lnoise}
  }},

  "panel": {{
    "rated_power_w": {rated},
    "area_m2": {area},
    "temp_coefficient": {gamma},   // 1/degC
    "noct_c": {noct},
    "bifaciality": {phi}          // ignored for monofacial
  }},

  "system": {{
    "inverter_efficiency": {eta},
    "derating": {derate}
  }},

  "site": {{
    "tilt_deg": null,             // null: {tilt_m} for monofacial, {tilt} for bifacial
    "azimuth_deg": {azim},         // from south, west positive
    "albedo": {albedo},
    "elevation_m": {elev},
    "n_rows": {rows}
  }},

  "dispatch": {{
    "p_gpurch_max_mw": {cap}
  }},

  "economics": {{
    "capital_cost_per_panel": null,   // null: {capex_m} for monofacial, {capex} for bifacial
    "om_cost_per_panel_year": {om},
    "discount_rate": {rate},
    "lifetime_years": {life},
    "inverter_cost_per_mw": {inv},
    // "generated" (E_sgen) or "generated_minus_exported" (E_sgen - E_gsold)
    "lcoe_energy_basis": "generated",
    // one-off costs, e.g. [{{"year": 12, "cost": 150000}}]
    "replacements": []
  }},

  "emissions": {{
    "f_co2_t_per_mwh": {fco2}
  }},

  "woa": {{
    "population": {pop},
    "max_iterations": {iters},
    "spiral_b": {spiral},
    "seed": {seed},
    "threads": {threads},
    "n_min": {nmin},
    "n_max": {nmax}
  }}
}}
)",
        fmt::arg("name", c.name), fmt::arg("lat", c.location.latitude_deg),
        fmt::arg("lon", c.location.longitude_deg), fmt::arg("utc", c.location.utc_offset_h),
        fmt::arg("wseed", c.weather.synthetic_seed), fmt::arg("hours", c.weather.synthetic.hours),
        fmt::arg("start", c.weather.synthetic.start.to_string()),
        fmt::arg("cloud", c.weather.synthetic.cloud_amplitude), fmt::arg("tmean", c.weather.synthetic.temp_mean_c),
        fmt::arg("tseason", c.weather.synthetic.temp_seasonal_amplitude_c),
        fmt::arg("tdiurnal", c.weather.synthetic.temp_diurnal_amplitude_c),
        fmt::arg("tnoise", c.weather.synthetic.temp_noise_c), fmt::arg("lseed", c.load.synthetic_seed),
        fmt::arg("lmean", c.load.synthetic.mean_mw), fmt::arg("lday", c.load.synthetic.daily_swing),
        fmt::arg("lseason", c.load.synthetic.seasonal_swing), fmt::arg("lnoise", c.load.synthetic.noise),
        fmt::arg("rated", c.panel.rated_power_w), fmt::arg("area", c.panel.area_m2),
        fmt::arg("gamma", c.panel.temp_coefficient), fmt::arg("noct", c.panel.noct_c),
        fmt::arg("phi", c.panel.bifaciality), fmt::arg("eta", c.system.inverter_efficiency),
        fmt::arg("derate", c.system.derating), fmt::arg("tilt", c.site.plane.tilt_deg),
        fmt::arg("tilt_m", m.site.plane.tilt_deg), fmt::arg("azim", c.site.plane.azimuth_deg),
        fmt::arg("albedo", c.site.albedo), fmt::arg("elev", c.site.elevation_m), fmt::arg("rows", c.n_rows),
        fmt::arg("cap", c.dispatch.p_gpurch_max_mw), fmt::arg("capex", c.economics.capital_cost_per_panel),
        fmt::arg("capex_m", m.economics.capital_cost_per_panel),
        fmt::arg("om", c.economics.om_cost_per_panel_year), fmt::arg("rate", c.economics.discount_rate),
        fmt::arg("life", c.economics.lifetime_years), fmt::arg("inv", c.economics.inverter_cost_per_mw),
        fmt::arg("fco2", c.emissions.f_co2_t_per_mwh), fmt::arg("pop", c.woa.options.population),
        fmt::arg("iters", c.woa.options.max_iterations), fmt::arg("spiral", c.woa.options.spiral_b),
        fmt::arg("seed", c.woa.options.seed), fmt::arg("threads", c.woa.options.threads),
        fmt::arg("nmin", c.woa.n_min), fmt::arg("nmax", c.woa.n_max));
}

ScenarioInputs load_inputs(const ScenarioConfig& config) {
    auto weather = [&] {
        if (config.weather.csv_path) {
            WeatherCsvOptions opts;
            opts.location = config.location;
            opts.expected_hours = config.weather.expected_hours;
            opts.skip_lines = config.weather.skip_lines;
            return load_weather(*config.weather.csv_path, opts);
        }
        SyntheticWeatherParams params = config.weather.synthetic;
        params.longitude_deg = config.location.longitude_deg;
        params.utc_offset_h = config.location.utc_offset_h;
        return synthesize_clear_sky_year(config.location.latitude_deg, params, config.weather.synthetic_seed);
    }();

    auto load = [&] {
        if (config.load.csv_path) return load_load_profile(*config.load.csv_path, weather.hours());
        SyntheticLoadParams params = config.load.synthetic;
        params.hours = weather.hours();
        params.start = weather.timestamps().front();
        return synthesize_load_profile(params, config.load.synthetic_seed);
    }();
    if (load.hours() != weather.hours()) {
        throw DataError(fmt::format("load has {} hours but weather has {}", load.hours(), weather.hours()));
    }
    return {std::move(weather), std::move(load)};
}

SizingModel::SizingModel(ScenarioConfig config, std::shared_ptr<const ScenarioInputs> inputs)
    : config_(std::move(config)), inputs_(std::move(inputs)) {
    config_.validate();
    if (!inputs_) throw ConfigError("scenario inputs missing");
    const auto& weather = inputs_->weather;
    if (inputs_->load.hours() != weather.hours()) {
        throw DataError(fmt::format("load has {} hours but weather has {}", inputs_->load.hours(), weather.hours()));
    }
    bifaciality_ = config_.technology == Technology::bifacial ? config_.panel.bifaciality : 0.0;

    hourly_.reserve(weather.hours());
    for (std::size_t t = 0; t < weather.hours(); ++t) {
        const WeatherHour hour = weather.hour(t);
        HourIrradiance h;
        h.position = hour_centre_position(weather.location(), hour.timestamp);
        h.front = front_plane_irradiance(hour, h.position, config_.site);
        h.rear = rear_plane_irradiance(hour, h.position, config_.site);
        h.effective = effective_bifacial_irradiance(h.front, h.rear, bifaciality_);
        h.t_cell_c = cell_temperature(hour.t_amb, h.effective.effective, config_.panel);
        h.dc_per_panel_w = panel_dc_power(h.effective.effective, h.t_cell_c, config_.panel);
        hourly_.push_back(h);
    }
}

IrradianceSummary SizingModel::irradiance_summary() const {
    IrradianceSummary s;
    for (const auto& h : hourly_) {
        s.mean_front_wm2 += h.front.total;
        s.mean_rear_wm2 += h.rear.total;
        s.mean_effective_wm2 += h.effective.effective;
        s.max_front_wm2 = std::max(s.max_front_wm2, h.front.total);
        s.max_rear_wm2 = std::max(s.max_rear_wm2, h.rear.total);
        s.max_effective_wm2 = std::max(s.max_effective_wm2, h.effective.effective);
    }
    const double n = static_cast<double>(hourly_.size());
    s.mean_front_wm2 /= n;
    s.mean_rear_wm2 /= n;
    s.mean_effective_wm2 /= n;
    return s;
}

std::vector<double> SizingModel::generation_mw(std::int64_t n_pv) const {
    std::vector<double> g(hourly_.size());
    for (std::size_t t = 0; t < hourly_.size(); ++t) {
        g[t] = array_ac_power(hourly_[t].dc_per_panel_w, n_pv, config_.system);
    }
    return g;
}

DispatchResult SizingModel::dispatch(std::int64_t n_pv) const {
    return simulate_year(generation_mw(n_pv), inputs_->load, config_.dispatch);
}

double SizingModel::fitness(std::int64_t n_pv) const {
    return lpsp(annual_totals(generation_mw(n_pv), inputs_->load, config_.dispatch));
}

MetricsReport SizingModel::metrics(std::int64_t n_pv, const DispatchTotals& totals) const {
    ArrayConfig array{n_pv, config_.n_rows, config_.site};
    MetricsReport m;
    m.lpsp = lpsp(totals);
    m.co2ra_gg_per_year = co2_reduction(totals.e_sgen, config_.emissions);
    m.tac_per_year = total_annualized_cost(config_.economics, config_.panel, array);
    const double energy = lcoe_energy_gwh(totals, config_.lcoe_basis);
    m.lcoe_per_kwh = energy > 0.0 ? lcoe(m.tac_per_year, energy) : 0.0;
    m.area = plant_area(config_.panel, array);
    return m;
}

SimulationReport run_simulate(const SizingModel& model, std::int64_t n_pv) {
    if (n_pv < 0) throw ConfigError("panel count must be non-negative");
    SimulationReport r;
    r.config = model.config();
    r.n_pv = n_pv;
    r.dispatch = model.dispatch(n_pv);
    r.metrics = model.metrics(n_pv, r.dispatch.totals);
    r.irradiance = model.irradiance_summary();
    double sum = 0.0;
    for (const auto& h : r.dispatch.hourly) {
        r.peak_ac_mw = std::max(r.peak_ac_mw, h.p_sgen);
        sum += h.p_sgen;
    }
    r.mean_ac_mw = sum / static_cast<double>(r.dispatch.hourly.size());
    return r;
}

OptimizationReport run_optimize(const SizingModel& model) {
    OptimizationReport r;
    r.outcome = optimize(model.config().woa, [&model](std::int64_t n) { return model.fitness(n); });
    r.at_optimum = run_simulate(model, r.outcome.best_n_pv);
    return r;
}

ComparisonReport run_compare(const SizingModel& first, const SizingModel& second) {
    if (first.hours() != second.hours()) {
        throw DataError(fmt::format("scenarios cover {} and {} hours", first.hours(), second.hours()));
    }
    auto pending = std::async(std::launch::async, [&second] { return run_optimize(second); });
    ComparisonReport c;
    c.first = run_optimize(first);
    c.second = pending.get();
    const auto& a = c.first.at_optimum.irradiance;
    const auto& b = c.second.at_optimum.irradiance;
    c.mean_irradiance_gain = a.mean_effective_wm2 > 0.0 ? b.mean_effective_wm2 / a.mean_effective_wm2 - 1.0 : 0.0;
    c.max_irradiance_gain = a.max_effective_wm2 > 0.0 ? b.max_effective_wm2 / a.max_effective_wm2 - 1.0 : 0.0;
    return c;
}

}  // namespace pvsize
