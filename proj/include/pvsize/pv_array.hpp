#pragma once

#include <cstdint>

#include "pvsize/irradiance.hpp"

namespace pvsize {

/// Module datasheet constants.
struct PanelSpec {
    double rated_power_w = 462.0;
    double area_m2 = 2.2;
    /// Power temperature coefficient, 1/degC.
    double temp_coefficient = -0.0035;
    double noct_c = 45.0;
    double bifaciality = 0.70;

    void validate() const;
};

struct SystemParams {
    double inverter_efficiency = 0.96;
    double derating = 0.90;

    void validate() const;
};

struct ArrayConfig {
    std::int64_t n_pv = 0;
    std::int64_t n_rows = 20;
    SiteConfig site;

    void validate() const;
};

/// NOCT model: t_amb + (noct - 20) / 800 * irradiance.
double cell_temperature(double t_amb_c, double irradiance_wm2, const PanelSpec& spec);

/// Linear irradiance scaling with temperature correction, clamped at zero. W.
double panel_dc_power(double irradiance_wm2, double t_cell_c, const PanelSpec& spec);

/// inverter_efficiency * derating * dc_w * n_pv, in MW.
double array_ac_power(double dc_per_panel_w, std::int64_t n_pv, const SystemParams& params);

}  // namespace pvsize
