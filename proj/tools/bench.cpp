// Times the OpenMP kernels against their serial reference paths and checks
// that both produce identical results while doing so.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "incrun/series.hpp"
#include "incrun/simulate.hpp"
#include "incrun/verify.hpp"

namespace {

using incrun::Execution;

double time_ms(const std::function<void()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

void report(const char* name, double serial_ms, double parallel_ms, bool identical) {
    std::printf("%-34s %10.1f ms %10.1f ms %8.2fx   %s\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms, identical ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    long long trials = 1'000'000;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--trials") == 0 && i + 1 < argc) {
            trials = std::stoll(argv[++i]);
        }
    }

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (OpenMP disabled)\n");
#endif
    std::printf("%-34s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    {
        incrun::SimConfig cfg;
        cfg.sides = 6;
        cfg.run_length = 3;
        cfg.trials = trials;
        cfg.seed = 42;
        incrun::SimResult rs, rp;
        const double ts = time_ms([&] { rs = incrun::simulate(cfg, Execution::serial); });
        const double tp = time_ms([&] { rp = incrun::simulate(cfg, Execution::parallel); });
        const bool same = rs.mean == rp.mean && rs.sample_variance == rp.sample_variance &&
                          rs.min_rolls == rp.min_rolls && rs.max_rolls == rp.max_rolls;
        report("simulate sides=6 k=3", ts, tp, same);
    }
    {
        incrun::VerifyReport rs, rp;
        const double ts =
            time_ms([&] { rs = incrun::verify_theorem(incrun::Theorem::gcd, 500, Execution::serial); });
        const double tp =
            time_ms([&] { rp = incrun::verify_theorem(incrun::Theorem::gcd, 500, Execution::parallel); });
        report("verify gcd max-n=500", ts, tp,
               rs.passed() == rp.passed() && rs.cases_checked == rp.cases_checked);
    }
    {
        incrun::VerifyReport rs, rp;
        const double ts = time_ms(
            [&] { rs = incrun::verify_theorem(incrun::Theorem::agreement, 200, Execution::serial); });
        const double tp = time_ms(
            [&] { rp = incrun::verify_theorem(incrun::Theorem::agreement, 200, Execution::parallel); });
        report("agreement sweep max-n=200", ts, tp,
               rs.passed() == rp.passed() && rs.cases_checked == rp.cases_checked);
    }
    {
        std::vector<incrun::CoeffTriple> ts_table, tp_table;
        const double ts = time_ms([&] { ts_table = incrun::fgh_table(700, Execution::serial); });
        const double tp = time_ms([&] { tp_table = incrun::fgh_table(700, Execution::parallel); });
        bool same = ts_table.size() == tp_table.size();
        for (std::size_t i = 0; same && i < ts_table.size(); ++i) {
            same = ts_table[i].f == tp_table[i].f && ts_table[i].g == tp_table[i].g &&
                   ts_table[i].h == tp_table[i].h;
        }
        report("fgh table max-n=700", ts, tp, same);
    }
    return 0;
}
