#pragma once

#include <utility>
#include <vector>

#include "pvsize/dispatch.hpp"
#include "pvsize/pv_array.hpp"

namespace pvsize {

inline constexpr double kSquareMetresPerAcre = 4046.856;

/// A cost incurred once in a given project year.
struct Replacement {
    int year = 0;
    double cost = 0.0;
};

struct EconomicParams {
    double capital_cost_per_panel = 0.0;
    double om_cost_per_panel_year = 0.0;
    double discount_rate = 0.05;
    int lifetime_years = 25;
    /// Per MW of array nameplate (STC) capacity.
    double inverter_cost_per_mw = 0.0;
    std::vector<Replacement> replacements;

    void validate() const;
};

struct EmissionParams {
    /// tCO2 per MWh of displaced grid energy.
    double f_co2_t_per_mwh = 0.553;

    void validate() const;
};

/// Which annual energy divides the annualized cost.
enum class LcoeEnergyBasis {
    generated,                 // E_sgen
    generated_minus_exported,  // E_sgen - E_gsold
};

struct PlantArea {
    double square_metres = 0.0;
    double acres = 0.0;
};

struct MetricsReport {
    double lpsp = 0.0;
    double co2ra_gg_per_year = 0.0;
    double tac_per_year = 0.0;
    double lcoe_per_kwh = 0.0;
    PlantArea area;
};

/// E_deficit / E_load. Throws NumericalError when the total load is zero.
double lpsp(const DispatchTotals& totals);

/// GgCO2 per year from GWh per year.
double co2_reduction(double e_sgen_gwh, const EmissionParams& params);

/// i (1+i)^n / ((1+i)^n - 1), with the 1/n limit at i = 0.
double capital_recovery_factor(double discount_rate, int lifetime_years);

/// CRF * (capital + present value of replacements) + annual O&M.
double annualized_cost(double capital, double om_per_year, const std::vector<Replacement>& replacements,
                       double discount_rate, int lifetime_years);

/// Builds the capital and O&M totals from per-panel and per-MW prices.
double total_annualized_cost(const EconomicParams& econ, const PanelSpec& panel, const ArrayConfig& config);

/// $/kWh from $/year and GWh/year. Throws NumericalError when energy <= 0.
double lcoe(double tac_per_year, double e_g_gwh);

double lcoe_energy_gwh(const DispatchTotals& totals, LcoeEnergyBasis basis);

/// ceil(n_pv / n_rows).
std::int64_t column_count(std::int64_t n_pv, std::int64_t n_rows);

/// A_m N cos(tilt) + 3 A_m (N - N_col) sin(tilt). Throws ConfigError on n_rows < 1.
PlantArea plant_area(const PanelSpec& spec, const ArrayConfig& config);

}  // namespace pvsize
