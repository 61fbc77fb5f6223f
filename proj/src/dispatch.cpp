#include "pvsize/dispatch.hpp"

#include <cmath>

#include <fmt/format.h>

#include "pvsize/errors.hpp"

namespace pvsize {

namespace {

constexpr double kMwhPerGwh = 1000.0;

// Running MWh sums; converted to GWh once at the end.
struct Accumulator {
    double sgen = 0.0;
    double gpurch = 0.0;
    double load = 0.0;
    double gsold = 0.0;
    double deficit = 0.0;
    std::size_t hours = 0;

    void add(const HourDispatch& h) {
        sgen += h.p_sgen;
        gpurch += h.p_gpurch;
        load += h.p_load;
        gsold += h.p_gsold;
        deficit += h.p_deficit;
        ++hours;
    }

    DispatchTotals totals() const {
        return {sgen / kMwhPerGwh, gpurch / kMwhPerGwh, load / kMwhPerGwh, gsold / kMwhPerGwh,
                deficit / kMwhPerGwh, hours};
    }
};

void check_lengths(std::span<const double> generation, const LoadSeries& load) {
    if (generation.size() != load.hours()) {
        throw DataError(fmt::format("generation has {} hours but load has {}", generation.size(), load.hours()));
    }
}

}  // namespace

void DispatchParams::validate() const {
    if (!(p_gpurch_max_mw >= 0.0) || !std::isfinite(p_gpurch_max_mw)) {
        throw ConfigError(fmt::format("grid purchase cap {} MW must be non-negative", p_gpurch_max_mw));
    }
}

HourDispatch dispatch_hour(double p_sgen_mw, double p_load_mw, const DispatchParams& params) {
    if (!(p_sgen_mw >= 0.0) || !std::isfinite(p_sgen_mw) || !(p_load_mw >= 0.0) || !std::isfinite(p_load_mw)) {
        throw DataError(fmt::format("dispatch inputs must be non-negative (generation {}, load {})", p_sgen_mw,
                                    p_load_mw));
    }
    HourDispatch h;
    h.p_sgen = p_sgen_mw;
    h.p_load = p_load_mw;
    if (p_sgen_mw >= p_load_mw) {
        h.p_gsold = p_sgen_mw - p_load_mw;
    } else {
        const double shortfall = p_load_mw - p_sgen_mw;
        h.p_gpurch = std::min(shortfall, params.p_gpurch_max_mw);
        h.p_deficit = shortfall - h.p_gpurch;
    }
    return h;
}

DispatchResult simulate_year(std::span<const double> generation_mw, const LoadSeries& load,
                             const DispatchParams& params) {
    check_lengths(generation_mw, load);
    DispatchResult result;
    result.hourly.reserve(load.hours());
    Accumulator acc;
    for (std::size_t t = 0; t < load.hours(); ++t) {
        result.hourly.push_back(dispatch_hour(generation_mw[t], load.mw()[t], params));
        acc.add(result.hourly.back());
    }
    result.totals = acc.totals();
    return result;
}

DispatchTotals annual_totals(std::span<const double> generation_mw, const LoadSeries& load,
                             const DispatchParams& params) {
    check_lengths(generation_mw, load);
    Accumulator acc;
    for (std::size_t t = 0; t < load.hours(); ++t) acc.add(dispatch_hour(generation_mw[t], load.mw()[t], params));
    return acc.totals();
}

}  // namespace pvsize
