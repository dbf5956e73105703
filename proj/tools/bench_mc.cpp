// Benchmark: serial reference loop vs the OpenMP trial kernel on the same
// Monte Carlo batch. The two paths must produce identical summaries; the
// program fails loudly if they diverge.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rio/monte_carlo.hpp"

namespace {

double run_timed(const rio::McParams& params, bool parallel, rio::McSummary& out) {
    rio::McParams local = params;
    local.parallel = parallel;
    const auto start = std::chrono::steady_clock::now();
    out = rio::run_monte_carlo(local);
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    long trials = 200000;
    std::uint64_t seed = 42;
    for (int i = 1; i + 1 < argc; i += 2) {
        if (std::strcmp(argv[i], "--trials") == 0) trials = std::stol(argv[i + 1]);
        if (std::strcmp(argv[i], "--seed") == 0) seed = std::stoull(argv[i + 1]);
    }

    rio::McParams params;
    params.protocol = rio::Protocol::Riho;
    params.model = rio::HomodyneModel(1.0, 0.7853981633974483, 1.0);
    params.trials = trials;
    params.seed = seed;

#ifdef _OPENMP
    const int threads = omp_get_max_threads();
#else
    const int threads = 1;
#endif
    std::printf("monte carlo benchmark: %ld trials, seed %llu, %d thread(s)\n", trials,
                static_cast<unsigned long long>(seed), threads);

    rio::McSummary serial, parallel;
    const double serial_ms = run_timed(params, false, serial);
    const double parallel_ms = run_timed(params, true, parallel);

    std::printf("  serial reference: %10.1f ms   success %.6f\n", serial_ms,
                serial.success_rate());
    std::printf("  openmp kernel:    %10.1f ms   success %.6f\n", parallel_ms,
                parallel.success_rate());
    std::printf("  speedup: %.2fx\n", serial_ms / parallel_ms);

    if (!(serial == parallel)) {
        std::printf("MISMATCH: parallel summary differs from serial reference\n");
        return 1;
    }
    std::printf("summaries identical\n");
    return 0;
}
