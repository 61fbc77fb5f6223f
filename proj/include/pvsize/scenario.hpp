#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pvsize/dispatch.hpp"
#include "pvsize/irradiance.hpp"
#include "pvsize/metrics.hpp"
#include "pvsize/pv_array.hpp"
#include "pvsize/weather.hpp"
#include "pvsize/woa.hpp"

namespace pvsize {

enum class Technology { monofacial, bifacial };

std::string_view to_string(Technology tech) noexcept;

/// Default fixed tilt: 25 deg monofacial, 35 deg bifacial.
double default_tilt_deg(Technology tech) noexcept;

struct WeatherSource {
    /// CSV input when set; otherwise a synthetic clear-sky year.
    std::optional<std::filesystem::path> csv_path;
    std::size_t skip_lines = 0;
    std::optional<std::size_t> expected_hours;
    SyntheticWeatherParams synthetic;
    std::uint64_t synthetic_seed = 7;
};

struct LoadSource {
    std::optional<std::filesystem::path> csv_path;
    SyntheticLoadParams synthetic;
    std::uint64_t synthetic_seed = 11;
};

/// Every tunable of one sizing scenario.
struct ScenarioConfig {
    std::string name = "scenario";
    Technology technology = Technology::bifacial;
    Location location;
    WeatherSource weather;
    LoadSource load;
    PanelSpec panel;
    SystemParams system;
    SiteConfig site;
    std::int64_t n_rows = 20;
    DispatchParams dispatch;
    EconomicParams economics;
    EmissionParams emissions;
    LcoeEnergyBasis lcoe_basis = LcoeEnergyBasis::generated;
    WoaParams woa;

    /// Throws ConfigError on the first violated invariant.
    void validate() const;
};

/// Defaults for a technology, including its tilt and panel price.
ScenarioConfig default_config(Technology tech);

/// Parses JSON (comments allowed). Keys that are absent keep the defaults of
/// the selected technology; unknown keys are rejected. Relative CSV paths
/// resolve against `base_dir`. `technology_override` replaces the file's
/// technology before defaults are chosen. Throws ConfigError.
ScenarioConfig parse_config(std::string_view text, const std::filesystem::path& base_dir = {},
                            std::optional<Technology> technology_override = std::nullopt);

ScenarioConfig load_config(const std::filesystem::path& path,
                           std::optional<Technology> technology_override = std::nullopt);

/// Canonical JSON of the resolved configuration (sorted keys, one line).
std::string config_snapshot(const ScenarioConfig& config);

/// Commented configuration template listing every key with its default.
std::string config_template();

/// Weather and load for a scenario, validated against each other.
struct ScenarioInputs {
    WeatherSeries weather;
    LoadSeries load;
};

/// Throws DataError when the load horizon differs from the weather horizon.
ScenarioInputs load_inputs(const ScenarioConfig& config);

/// Irradiance and per-panel power for one hour.
struct HourIrradiance {
    SolarPosition position;
    PlaneIrradiance front;
    PlaneIrradiance rear;
    EffectiveIrradiance effective;
    double t_cell_c = 0.0;
    double dc_per_panel_w = 0.0;
};

struct IrradianceSummary {
    double mean_front_wm2 = 0.0;
    double max_front_wm2 = 0.0;
    double mean_rear_wm2 = 0.0;
    double max_rear_wm2 = 0.0;
    double mean_effective_wm2 = 0.0;
    double max_effective_wm2 = 0.0;
};

/// The irradiance -> power -> dispatch pipeline for one scenario. The hourly
/// irradiance and per-panel power do not depend on the panel count and are
/// computed once at construction. Read-only afterwards and safe to share
/// between threads.
class SizingModel {
public:
    SizingModel(ScenarioConfig config, std::shared_ptr<const ScenarioInputs> inputs);

    const ScenarioConfig& config() const noexcept { return config_; }
    const ScenarioInputs& inputs() const noexcept { return *inputs_; }
    std::size_t hours() const noexcept { return hourly_.size(); }
    std::span<const HourIrradiance> hourly() const noexcept { return hourly_; }
    /// Bifaciality applied to the rear face: zero for monofacial modules.
    double applied_bifaciality() const noexcept { return bifaciality_; }
    IrradianceSummary irradiance_summary() const;

    std::vector<double> generation_mw(std::int64_t n_pv) const;
    DispatchResult dispatch(std::int64_t n_pv) const;
    /// LPSP at n_pv.
    double fitness(std::int64_t n_pv) const;
    MetricsReport metrics(std::int64_t n_pv, const DispatchTotals& totals) const;

private:
    ScenarioConfig config_;
    std::shared_ptr<const ScenarioInputs> inputs_;
    double bifaciality_ = 0.0;
    std::vector<HourIrradiance> hourly_;
};

struct SimulationReport {
    ScenarioConfig config;
    std::int64_t n_pv = 0;
    DispatchResult dispatch;
    MetricsReport metrics;
    IrradianceSummary irradiance;
    double peak_ac_mw = 0.0;
    double mean_ac_mw = 0.0;
};

struct OptimizationReport {
    SizingOutcome outcome;
    SimulationReport at_optimum;
};

struct ComparisonReport {
    OptimizationReport first;
    OptimizationReport second;
    /// Relative increase of the second scenario's effective irradiance over
    /// the first's, on the annual mean and on the annual maximum.
    double mean_irradiance_gain = 0.0;
    double max_irradiance_gain = 0.0;
};

SimulationReport run_simulate(const SizingModel& model, std::int64_t n_pv);
OptimizationReport run_optimize(const SizingModel& model);

/// Runs both optimizations concurrently. Throws DataError when the two
/// scenarios' horizons differ.
ComparisonReport run_compare(const SizingModel& first, const SizingModel& second);

}  // namespace pvsize
