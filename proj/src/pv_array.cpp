#include "pvsize/pv_array.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "pvsize/errors.hpp"

namespace pvsize {

void PanelSpec::validate() const {
    if (!(rated_power_w > 0.0) || !std::isfinite(rated_power_w)) throw ConfigError("panel rated power must be > 0");
    if (!(area_m2 > 0.0) || !std::isfinite(area_m2)) throw ConfigError("panel area must be > 0");
    if (!(temp_coefficient >= -0.01 && temp_coefficient <= 0.0)) {
        throw ConfigError(fmt::format("temperature coefficient {} outside [-0.01, 0]", temp_coefficient));
    }
    if (!(noct_c >= 40.0 && noct_c <= 50.0)) throw ConfigError(fmt::format("NOCT {} outside [40, 50]", noct_c));
    if (!(bifaciality >= 0.0 && bifaciality <= 1.0)) {
        throw ConfigError(fmt::format("bifaciality {} outside [0, 1]", bifaciality));
    }
}

void SystemParams::validate() const {
    if (!(inverter_efficiency > 0.0 && inverter_efficiency <= 1.0)) {
        throw ConfigError(fmt::format("inverter efficiency {} outside (0, 1]", inverter_efficiency));
    }
    if (!(derating > 0.0 && derating <= 1.0)) throw ConfigError(fmt::format("derating {} outside (0, 1]", derating));
}

void ArrayConfig::validate() const {
    if (n_pv < 0) throw ConfigError("panel count must be non-negative");
    if (n_rows < 1) throw ConfigError("row count must be at least 1");
    site.validate();
}

double cell_temperature(double t_amb_c, double irradiance_wm2, const PanelSpec& spec) {
    return t_amb_c + (spec.noct_c - 20.0) / 800.0 * irradiance_wm2;
}

double panel_dc_power(double irradiance_wm2, double t_cell_c, const PanelSpec& spec) {
    const double p = spec.rated_power_w * (irradiance_wm2 / 1000.0) * (1.0 + spec.temp_coefficient * (t_cell_c - 25.0));
    return std::max(p, 0.0);
}

double array_ac_power(double dc_per_panel_w, std::int64_t n_pv, const SystemParams& params) {
    return params.inverter_efficiency * params.derating * (dc_per_panel_w * static_cast<double>(n_pv)) * 1e-6;
}

}  // namespace pvsize
