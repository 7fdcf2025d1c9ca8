#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace plingam {

struct BenchConfig {
  int dims = 0;
  int samples = 0;
  int workers = 1;
  std::uint64_t seed = 0;
  int n_seeds = 1;  // > 1 for averaged sweep entries
};

// Timing decomposition of a DirectLiNGAM fit on simulated data.
// Arithmetic identities hold exactly for every emitted report:
//   ordering_fraction = ordering_seconds / total_seconds
//   measured_speedup  = seq_seconds / par_seconds
struct BenchReport {
  double total_seconds = 0.0;     // sequential fit, all phases
  double ordering_seconds = 0.0;  // sequential fit, ordering phase
  double ordering_fraction = 0.0;
  double seq_seconds = 0.0;
  double par_seconds = 0.0;
  double measured_speedup = 0.0;
  double amdahl_theoretical = 0.0;  // 1 / (1 - ordering_fraction)
  BenchConfig config;
};

// Infinite-processor speedup bound 1 / (1 - p) for parallelizable fraction
// p. Throws OutOfRange unless 0 <= p < 1.
double amdahl_speedup(double p);

// Times a sequential fit (with per-phase instrumentation) and a parallel
// fit on the same simulated dataset. `warmup` untimed runs precede `reps`
// timed runs per variant; the median rep is reported. Fitted results are
// identical to non-instrumented runs; the harness only wraps clocks around
// the same code path.
BenchReport profile_fit(int dims, int samples, std::uint64_t seed, int workers,
                        int warmup = 3, int reps = 5);

// Cross product of configurations, one report per (dims, samples, workers)
// averaged over `seeds` seeds, emitted in deterministic order.
std::vector<BenchReport> sweep(std::span<const int> dims, std::span<const int> samples,
                               std::span<const int> workers, int seeds,
                               int warmup = 3, int reps = 5);

}  // namespace plingam
