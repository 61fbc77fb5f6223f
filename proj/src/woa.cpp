#include "pvsize/woa.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include <fmt/format.h>

#include "pvsize/errors.hpp"
#include "random.hpp"

namespace pvsize {

namespace {

// Stream identifiers for the counter-based generator.
constexpr std::uint64_t kInitStream = 1;
constexpr std::uint64_t kMoveStream = 2;

// Per-whale draw indices within one iteration.
enum Draw : std::uint64_t { kR1 = 0, kR2 = 1, kSpiral = 2, kBranch = 3, kRandomWhale = 4 };

void evaluate_all(const Objective& objective, const std::vector<std::vector<double>>& positions,
                  std::vector<double>& fitness, unsigned threads) {
    const std::size_t n = positions.size();
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) fitness[i] = objective(positions[i]);
    };
    const std::size_t workers = std::min<std::size_t>(std::max(1u, threads), n);
    if (workers <= 1) {
        work(0, n);
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(n, begin + chunk);
        if (begin < end) pool.emplace_back(work, begin, end);
    }
}

}  // namespace

void WoaOptions::validate() const {
    if (population < 2) throw ConfigError("WOA population must be at least 2");
    if (max_iterations < 1) throw ConfigError("WOA needs at least one iteration");
    if (!std::isfinite(spiral_b)) throw ConfigError("spiral constant must be finite");
}

void WoaParams::validate() const {
    options.validate();
    if (n_min < 0 || n_min > n_max) {
        throw ConfigError(fmt::format("invalid panel bounds [{}, {}]", n_min, n_max));
    }
}

WoaResult woa_minimize(const Objective& objective, std::span<const double> lower, std::span<const double> upper,
                       const WoaOptions& options, const TieBreak& prefer) {
    options.validate();
    const std::size_t dim = lower.size();
    if (dim == 0 || upper.size() != dim) throw ConfigError("bounds must be non-empty and of equal dimension");
    for (std::size_t j = 0; j < dim; ++j) {
        if (!(lower[j] <= upper[j]) || !std::isfinite(lower[j]) || !std::isfinite(upper[j])) {
            throw ConfigError(fmt::format("invalid bounds [{}, {}] in dimension {}", lower[j], upper[j], j));
        }
    }

    const std::size_t pop = options.population;
    const std::uint64_t seed = options.seed;
    std::vector<std::vector<double>> positions(pop, std::vector<double>(dim));
    for (std::size_t i = 0; i < pop; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            const double u = detail::counter_uniform(seed, kInitStream, 0, i, j);
            positions[i][j] = lower[j] + u * (upper[j] - lower[j]);
        }
    }

    WoaResult result;
    result.best_fitness = std::numeric_limits<double>::infinity();
    result.convergence.reserve(options.max_iterations);
    result.convergence_positions.reserve(options.max_iterations);
    std::vector<double> fitness(pop);
    std::vector<std::vector<double>> previous;

    const double iterations = static_cast<double>(options.max_iterations);
    for (std::size_t t = 0; t < options.max_iterations; ++t) {
        for (auto& x : positions) {
            for (std::size_t j = 0; j < dim; ++j) x[j] = std::clamp(x[j], lower[j], upper[j]);
        }
        evaluate_all(objective, positions, fitness, options.threads);
        result.evaluations += pop;

        for (std::size_t i = 0; i < pop; ++i) {
            if (!std::isfinite(fitness[i])) {
                throw NumericalError(fmt::format("non-finite fitness at iteration {}, whale {}", t, i));
            }
            const bool better = fitness[i] < result.best_fitness ||
                                (fitness[i] == result.best_fitness && prefer &&
                                 prefer(positions[i], result.best_position));
            if (better) {
                result.best_fitness = fitness[i];
                result.best_position = positions[i];
            }
        }
        result.convergence.push_back(result.best_fitness);
        result.convergence_positions.push_back(result.best_position);

        // a falls linearly 2 -> 0; a2 falls -1 -> -2 and bounds the spiral parameter l.
        const double a = 2.0 - static_cast<double>(t) * (2.0 / iterations);
        const double a2 = -1.0 - static_cast<double>(t) / iterations;
        const auto& leader = result.best_position;
        previous = positions;

        for (std::size_t i = 0; i < pop; ++i) {
            auto draw = [&](Draw k) { return detail::counter_uniform(seed, kMoveStream, t, i, k); };
            const double A = 2.0 * a * draw(kR1) - a;
            const double C = 2.0 * draw(kR2);
            const double l = (a2 - 1.0) * draw(kSpiral) + 1.0;
            const double p = draw(kBranch);
            auto& x = positions[i];

            if (p < 0.5) {
                if (std::abs(A) >= 1.0) {
                    const auto r = std::min(pop - 1, static_cast<std::size_t>(draw(kRandomWhale) * pop));
                    const auto& other = previous[r];
                    for (std::size_t j = 0; j < dim; ++j) {
                        const double d = std::abs(C * other[j] - previous[i][j]);
                        x[j] = other[j] - A * d;
                    }
                } else {
                    for (std::size_t j = 0; j < dim; ++j) {
                        const double d = std::abs(C * leader[j] - previous[i][j]);
                        x[j] = leader[j] - A * d;
                    }
                }
            } else {
                const double spiral = std::exp(options.spiral_b * l) * std::cos(2.0 * std::numbers::pi * l);
                for (std::size_t j = 0; j < dim; ++j) {
                    const double d = std::abs(leader[j] - previous[i][j]);
                    x[j] = d * spiral + leader[j];
                }
            }
        }
    }
    return result;
}

SizingOutcome optimize(const WoaParams& params, const SizingFitness& fitness) {
    params.validate();
    const std::int64_t lo = params.n_min;
    const std::int64_t hi = params.n_max;
    auto to_count = [lo, hi](double x) { return std::clamp<std::int64_t>(std::llround(x), lo, hi); };

    const double lower = static_cast<double>(lo);
    const double upper = static_cast<double>(hi);
    const Objective objective = [&](std::span<const double> x) { return fitness(to_count(x[0])); };
    const TieBreak smaller = [&](std::span<const double> cand, std::span<const double> inc) {
        return to_count(cand[0]) < to_count(inc[0]);
    };

    const auto r = woa_minimize(objective, std::span(&lower, 1), std::span(&upper, 1), params.options, smaller);

    SizingOutcome out;
    out.best_n_pv = to_count(r.best_position[0]);
    out.best_lpsp = r.best_fitness;
    out.convergence = r.convergence;
    out.convergence_n_pv.reserve(r.convergence_positions.size());
    for (const auto& pos : r.convergence_positions) out.convergence_n_pv.push_back(to_count(pos[0]));
    out.evaluations = r.evaluations;
    return out;
}

SweepTable sweep_oracle(std::int64_t n_min, std::int64_t n_max, const SizingFitness& fitness, std::int64_t stride) {
    if (n_min < 0 || n_min > n_max) throw ConfigError(fmt::format("invalid sweep bounds [{}, {}]", n_min, n_max));
    if (stride < 1) throw ConfigError("sweep stride must be at least 1");
    SweepTable table;
    table.best_lpsp = std::numeric_limits<double>::infinity();
    for (std::int64_t n = n_min; n <= n_max; n += stride) {
        const double f = fitness(n);
        table.n_pv.push_back(n);
        table.lpsp.push_back(f);
        if (f < table.best_lpsp) {
            table.best_lpsp = f;
            table.best_n_pv = n;
        }
        if (n > n_max - stride) break;
    }
    return table;
}

}  // namespace pvsize
