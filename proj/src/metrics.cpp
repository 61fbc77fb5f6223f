#include "pvsize/metrics.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "pvsize/errors.hpp"

namespace pvsize {

void EconomicParams::validate() const {
    if (!(discount_rate >= 0.0 && discount_rate < 1.0)) {
        throw ConfigError(fmt::format("discount rate {} outside [0, 1)", discount_rate));
    }
    if (lifetime_years < 1) throw ConfigError("lifetime must be at least one year");
    if (!(capital_cost_per_panel >= 0.0) || !(om_cost_per_panel_year >= 0.0) || !(inverter_cost_per_mw >= 0.0)) {
        throw ConfigError("costs must be non-negative");
    }
    for (const auto& r : replacements) {
        if (r.year < 1 || r.year > lifetime_years) {
            throw ConfigError(fmt::format("replacement year {} outside 1..{}", r.year, lifetime_years));
        }
        if (!(r.cost >= 0.0)) throw ConfigError("replacement cost must be non-negative");
    }
}

void EmissionParams::validate() const {
    if (!(f_co2_t_per_mwh >= 0.0) || !std::isfinite(f_co2_t_per_mwh)) {
        throw ConfigError("emission factor must be non-negative");
    }
}

double lpsp(const DispatchTotals& totals) {
    if (!(totals.e_load > 0.0)) throw NumericalError("LPSP undefined: total load is zero");
    return totals.e_deficit / totals.e_load;
}

double co2_reduction(double e_sgen_gwh, const EmissionParams& params) {
    const double mwh = e_sgen_gwh * 1000.0;
    const double tonnes = mwh * params.f_co2_t_per_mwh;
    return tonnes / 1000.0;
}

double capital_recovery_factor(double discount_rate, int lifetime_years) {
    if (lifetime_years < 1) throw ConfigError("lifetime must be at least one year");
    const double n = lifetime_years;
    if (discount_rate == 0.0) return 1.0 / n;
    // i / (1 - (1+i)^-n), written to stay accurate for small i.
    return discount_rate / -std::expm1(-n * std::log1p(discount_rate));
}

double annualized_cost(double capital, double om_per_year, const std::vector<Replacement>& replacements,
                       double discount_rate, int lifetime_years) {
    double present = capital;
    for (const auto& r : replacements) present += r.cost * std::pow(1.0 + discount_rate, -r.year);
    return capital_recovery_factor(discount_rate, lifetime_years) * present + om_per_year;
}

double total_annualized_cost(const EconomicParams& econ, const PanelSpec& panel, const ArrayConfig& config) {
    econ.validate();
    const double n = static_cast<double>(config.n_pv);
    const double capacity_mw = n * panel.rated_power_w * 1e-6;
    const double capital = econ.capital_cost_per_panel * n + econ.inverter_cost_per_mw * capacity_mw;
    const double om = econ.om_cost_per_panel_year * n;
    return annualized_cost(capital, om, econ.replacements, econ.discount_rate, econ.lifetime_years);
}

double lcoe(double tac_per_year, double e_g_gwh) {
    if (!(e_g_gwh > 0.0)) throw NumericalError("LCOE undefined: no energy delivered");
    return tac_per_year / (e_g_gwh * 1e6);
}

double lcoe_energy_gwh(const DispatchTotals& totals, LcoeEnergyBasis basis) {
    return basis == LcoeEnergyBasis::generated ? totals.e_sgen : totals.e_sgen - totals.e_gsold;
}

std::int64_t column_count(std::int64_t n_pv, std::int64_t n_rows) {
    if (n_rows < 1) throw ConfigError("row count must be at least 1");
    return (n_pv + n_rows - 1) / n_rows;
}

PlantArea plant_area(const PanelSpec& spec, const ArrayConfig& config) {
    const std::int64_t n_col = column_count(config.n_pv, config.n_rows);
    const double tilt = config.site.plane.tilt_deg * std::numbers::pi / 180.0;
    const double n = static_cast<double>(config.n_pv);
    const double m2 = spec.area_m2 * n * std::cos(tilt) +
                      3.0 * spec.area_m2 * static_cast<double>(config.n_pv - n_col) * std::sin(tilt);
    return {m2, m2 / kSquareMetresPerAcre};
}

}  // namespace pvsize
