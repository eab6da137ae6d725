#pragma once

#include <cstdint>
#include <optional>

namespace incrun {

/// Serial reference vs OpenMP execution for the data-parallel kernels.
/// Both paths are contracted to produce bit-identical results.
enum class Execution { serial, parallel };

/// Monte Carlo configuration. sides == nullopt selects continuous mode
/// (i.i.d. uniforms on [0,1) instead of integer faces).
struct SimConfig {
    std::optional<long> sides;
    int run_length = 3;  // 2 or 3
    long long trials = 0;
    std::uint64_t seed = 0;
};

struct SimResult {
    long long trials = 0;
    double mean = 0.0;
    double sample_variance = 0.0;
    double std_error = 0.0;
    long long min_rolls = 0;
    long long max_rolls = 0;
};

/// Roll until the last run_length draws are strictly increasing; repeat for
/// cfg.trials independent episodes and report roll-count statistics.
///
/// Deterministic function of cfg: trial t draws from a counter-based stream
/// keyed by (seed, t), and the statistics are accumulated in exact integer
/// arithmetic, so serial and parallel runs with any thread count produce
/// bit-identical results.
///
/// Throws std::domain_error for infeasible configurations (finite sides <
/// run_length would never terminate) and std::invalid_argument for malformed
/// ones (trials < 1, run_length not in {2,3}).
SimResult simulate(const SimConfig& cfg, Execution mode = Execution::parallel);

/// Roll count of a single episode, exposed for the tests.
long long simulate_episode(const SimConfig& cfg, long long trial);

}  // namespace incrun
