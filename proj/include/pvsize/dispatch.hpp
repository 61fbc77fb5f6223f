#pragma once

#include <span>
#include <vector>

#include "pvsize/weather.hpp"

namespace pvsize {

struct DispatchParams {
    /// Grid purchase cap per hour, MW.
    double p_gpurch_max_mw = 1.0;

    void validate() const;
};

/// One hour of the operating strategy, all in MW and non-negative. The
/// deficit is the unserved load, so the hourly balance reads
/// p_sgen + p_gpurch + p_deficit == p_load + p_gsold.
struct HourDispatch {
    double p_sgen = 0.0;
    double p_load = 0.0;
    double p_gpurch = 0.0;
    double p_gsold = 0.0;
    double p_deficit = 0.0;

    /// Supply minus demand side of the balance; zero up to rounding.
    double balance_residual() const noexcept { return p_sgen + p_gpurch + p_deficit - p_load - p_gsold; }
};

/// Annual energies in GWh.
struct DispatchTotals {
    double e_sgen = 0.0;
    double e_gpurch = 0.0;
    double e_load = 0.0;
    double e_gsold = 0.0;
    double e_deficit = 0.0;
    std::size_t hours = 0;
};

struct DispatchResult {
    std::vector<HourDispatch> hourly;
    DispatchTotals totals;
};

/// Surplus is sold; a shortfall is bought up to the cap and the rest is
/// recorded as deficit. Throws DataError on negative or non-finite inputs.
HourDispatch dispatch_hour(double p_sgen_mw, double p_load_mw, const DispatchParams& params);

/// Throws DataError on a length mismatch.
DispatchResult simulate_year(std::span<const double> generation_mw, const LoadSeries& load,
                             const DispatchParams& params);

/// Same fold as simulate_year without keeping the hourly table.
DispatchTotals annual_totals(std::span<const double> generation_mw, const LoadSeries& load,
                             const DispatchParams& params);

}  // namespace pvsize
