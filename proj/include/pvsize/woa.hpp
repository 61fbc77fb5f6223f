#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace pvsize {

/// Whale Optimization Algorithm settings.
struct WoaOptions {
    std::size_t population = 30;
    std::size_t max_iterations = 100;
    /// Logarithmic spiral shape constant.
    double spiral_b = 1.0;
    std::uint64_t seed = 1;
    /// Worker threads for fitness evaluation. Results do not depend on it.
    unsigned threads = 1;

    void validate() const;
};

using Objective = std::function<double(std::span<const double>)>;

/// Strict preference between two positions of equal fitness.
using TieBreak = std::function<bool(std::span<const double> candidate, std::span<const double> incumbent)>;

struct WoaResult {
    std::vector<double> best_position;
    double best_fitness = 0.0;
    /// Leader fitness after each iteration's evaluations; non-increasing.
    std::vector<double> convergence;
    /// Leader position after each iteration.
    std::vector<std::vector<double>> convergence_positions;
    std::size_t evaluations = 0;
};

/// Minimizes `objective` over the box [lower, upper]. Every random draw is a
/// pure function of (seed, iteration, whale, draw index), and whales move
/// synchronously from the previous iteration's positions, so the result is
/// independent of evaluation order and thread count.
/// Throws ConfigError on invalid options or bounds and NumericalError on a
/// non-finite fitness value.
WoaResult woa_minimize(const Objective& objective, std::span<const double> lower, std::span<const double> upper,
                       const WoaOptions& options, const TieBreak& prefer = {});

// ---------------------------------------------------------------------------
// Integer panel-count sizing

struct WoaParams {
    WoaOptions options;
    std::int64_t n_min = 0;
    std::int64_t n_max = 20000;

    void validate() const;
};

struct SizingOutcome {
    std::int64_t best_n_pv = 0;
    double best_lpsp = 0.0;
    std::vector<double> convergence;
    std::vector<std::int64_t> convergence_n_pv;
    std::size_t evaluations = 0;
};

using SizingFitness = std::function<double(std::int64_t)>;

/// Whales move in continuous space; each position is rounded to the nearest
/// integer and clamped to [n_min, n_max] before evaluation. Among equal
/// fitness values the smaller panel count wins.
SizingOutcome optimize(const WoaParams& params, const SizingFitness& fitness);

struct SweepTable {
    std::vector<std::int64_t> n_pv;
    std::vector<double> lpsp;
    /// Smallest n_pv attaining the minimum.
    std::int64_t best_n_pv = 0;
    double best_lpsp = 0.0;
};

/// Exhaustive evaluation of n_min, n_min + stride, ... <= n_max.
SweepTable sweep_oracle(std::int64_t n_min, std::int64_t n_max, const SizingFitness& fitness,
                        std::int64_t stride = 1);

}  // namespace pvsize
