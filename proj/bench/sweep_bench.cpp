// Throughput comparison of the serial and OpenMP sweep drivers.
//
//   sweep_bench [count] [orbifold_count]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pvseq/sweep.hpp"

using namespace pvseq;

namespace {

double time_sweep(const FuzzConfig& cfg, SweepKind kind, ExecMode mode,
                  SweepOutcome& outcome) {
    const auto start = std::chrono::steady_clock::now();
    outcome = run_sweep(cfg, kind, mode);
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(stop - start).count();
}

void bench_kind(const char* name, const FuzzConfig& cfg, SweepKind kind) {
    SweepOutcome serial_outcome, parallel_outcome;
    const double serial = time_sweep(cfg, kind, ExecMode::Serial, serial_outcome);
    const double parallel =
        time_sweep(cfg, kind, ExecMode::Parallel, parallel_outcome);
    if (!(serial_outcome == parallel_outcome)) {
        std::fprintf(stderr, "%s: serial and parallel outcomes differ!\n", name);
        std::exit(2);
    }
    std::printf("%-20s %10llu cases  serial %8.3fs (%9.0f/s)  parallel %8.3fs (%9.0f/s)  speedup %.2fx  failures %llu\n",
                name, static_cast<unsigned long long>(cfg.count), serial,
                cfg.count / serial, parallel, cfg.count / parallel,
                serial / parallel,
                static_cast<unsigned long long>(parallel_outcome.failures));
}

}  // namespace

int main(int argc, char** argv) {
    std::uint64_t count = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 4000;
    std::uint64_t orbifold_count =
        argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 400;

#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not available; parallel driver falls back to serial\n");
#endif

    FuzzConfig cfg;
    cfg.seed = 20240811;
    cfg.count = count;
    cfg.n_max = 8;
    cfg.entry_bound = 9;
    cfg.integer_only = true;

    bench_kind("main-theorem", cfg, SweepKind::MainTheorem);
    bench_kind("inverse-roundtrip", cfg, SweepKind::InverseRoundtrip);
    bench_kind("w-roundtrip", cfg, SweepKind::WRoundtrip);
    bench_kind("sylvester-minors", cfg, SweepKind::SylvesterMinors);

    FuzzConfig orbifold_cfg = cfg;
    orbifold_cfg.count = orbifold_count;
    orbifold_cfg.n_max = 6;
    orbifold_cfg.entry_bound = 5;
    bench_kind("orbifold-identities", orbifold_cfg, SweepKind::OrbifoldIdentities);

    return 0;
}
