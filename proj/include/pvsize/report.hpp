#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "pvsize/scenario.hpp"

namespace pvsize {

struct OutputOptions {
    bool svg = false;
    bool dump_hourly = false;
};

/// Human-readable tables. `outcome` adds the optimizer summary.
std::string format_report_text(const SimulationReport& report, const SizingOutcome* outcome = nullptr);

/// `metric,value` rows at full precision, ending with the config snapshot.
std::string format_report_csv(const SimulationReport& report, const SizingOutcome* outcome = nullptr);

std::string format_comparison_text(const ComparisonReport& report);

/// `metric,<first name>,<second name>,delta` rows.
std::string format_comparison_csv(const ComparisonReport& report);

/// `iteration,best_lpsp,best_n_pv`, iterations counted from 1.
std::string format_convergence_csv(const SizingOutcome& outcome);

std::string format_hourly_dispatch_csv(const DispatchResult& dispatch, std::span<const LocalTimestamp> timestamps);

/// Front and rear components per hour plus effective irradiance and per-panel power.
std::string format_hourly_irradiance_csv(const SizingModel& model);

struct ChartSeries {
    std::string label;
    std::vector<double> values;
};

/// Minimal SVG line chart; x is the sample index offset by `x_origin`.
std::string svg_line_chart(const std::string& title, const std::string& x_label, const std::string& y_label,
                           const std::vector<ChartSeries>& series, double x_origin = 0.0);

/// report.txt, report.csv and, per options, hourly_*.csv and *.svg.
void write_simulation_outputs(const std::filesystem::path& dir, const SizingModel& model,
                              const SimulationReport& report, const OutputOptions& options);

/// As above plus convergence.csv.
void write_optimization_outputs(const std::filesystem::path& dir, const SizingModel& model,
                                const OptimizationReport& report, const OutputOptions& options);

/// report.txt, report.csv, one convergence_<name>.csv per scenario and, per
/// options, hourly files suffixed by scenario name.
void write_comparison_outputs(const std::filesystem::path& dir, const SizingModel& first, const SizingModel& second,
                              const ComparisonReport& report, const OutputOptions& options);

}  // namespace pvsize
