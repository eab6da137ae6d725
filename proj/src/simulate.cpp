#include "incrun/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "incrun/rng.hpp"

namespace incrun {

namespace {

void validate(const SimConfig& cfg) {
    if (cfg.run_length != 2 && cfg.run_length != 3) {
        throw std::invalid_argument("simulate: run_length must be 2 or 3");
    }
    if (cfg.trials < 1) {
        throw std::invalid_argument("simulate: trials must be >= 1");
    }
    if (cfg.sides) {
        if (*cfg.sides < 1) {
            throw std::invalid_argument("simulate: sides must be positive");
        }
        // Fewer faces than the run length can never produce a strictly
        // increasing run, so the walk would not terminate.
        if (*cfg.sides < cfg.run_length) {
            throw std::domain_error("simulate: sides=" + std::to_string(*cfg.sides) +
                                    " can never show a strictly increasing run of " +
                                    std::to_string(cfg.run_length));
        }
    }
}

template <typename DrawFn>
long long run_episode(DrawFn&& draw, int run_length) {
    auto prev = draw();
    long long rolls = 1;
    int run = 1;
    while (run < run_length) {
        auto value = draw();
        ++rolls;
        run = (value > prev) ? run + 1 : 1;  // ties reset, same as decreases
        prev = value;
    }
    return rolls;
}

}  // namespace

long long simulate_episode(const SimConfig& cfg, long long trial) {
    TrialRng rng(cfg.seed, static_cast<std::uint64_t>(trial));
    if (cfg.sides) {
        const long sides = *cfg.sides;
        return run_episode([&] { return rng.next_face(sides); }, cfg.run_length);
    }
    return run_episode([&] { return rng.next_real(); }, cfg.run_length);
}

SimResult simulate(const SimConfig& cfg, Execution mode) {
    validate(cfg);
    const long long trials = cfg.trials;

    unsigned long long sum = 0;
    unsigned long long sum_sq = 0;
    long long min_rolls = std::numeric_limits<long long>::max();
    long long max_rolls = 0;

    const bool parallel = (mode == Execution::parallel);
#pragma omp parallel for schedule(static) reduction(+ : sum, sum_sq) \
    reduction(min : min_rolls) reduction(max : max_rolls) if (parallel)
    for (long long t = 0; t < trials; ++t) {
        const long long rolls = simulate_episode(cfg, t);
        const unsigned long long r = static_cast<unsigned long long>(rolls);
        sum += r;
        sum_sq += r * r;
        min_rolls = std::min(min_rolls, rolls);
        max_rolls = std::max(max_rolls, rolls);
    }

    SimResult result;
    result.trials = trials;
    result.min_rolls = min_rolls;
    result.max_rolls = max_rolls;
    result.mean = static_cast<double>(sum) / static_cast<double>(trials);
    if (trials > 1) {
        // Exact integer moments first; the only rounding is the final
        // conversion, which keeps the result independent of trial order.
        const auto num = static_cast<unsigned __int128>(sum_sq) * trials -
                         static_cast<unsigned __int128>(sum) * sum;
        const long double denom =
            static_cast<long double>(trials) * static_cast<long double>(trials - 1);
        result.sample_variance = static_cast<double>(static_cast<long double>(num) / denom);
        result.std_error =
            std::sqrt(result.sample_variance / static_cast<double>(trials));
    }
    return result;
}

}  // namespace incrun
