#include "plingam/bench.hpp"

#include <algorithm>
#include <vector>

#include "plingam/direct_lingam.hpp"
#include "plingam/error.hpp"
#include "plingam/simgen.hpp"

namespace plingam {

double amdahl_speedup(double p) {
  if (!(p >= 0.0) || p >= 1.0) {
    throw Error(ErrorCode::OutOfRange, "amdahl_speedup: p must satisfy 0 <= p < 1");
  }
  return 1.0 / (1.0 - p);
}

namespace {

// Median rep, by total time. With the default reps=5 this smooths the
// scheduler noise that dominates small configurations.
FitPhases median_run(std::vector<FitPhases>& runs) {
  std::sort(runs.begin(), runs.end(),
            [](const FitPhases& a, const FitPhases& b) { return a.total_seconds < b.total_seconds; });
  return runs[runs.size() / 2];
}

}  // namespace

BenchReport profile_fit(int dims, int samples, std::uint64_t seed, int workers,
                        int warmup, int reps) {
  if (reps < 1 || warmup < 0) {
    throw Error(ErrorCode::OutOfRange, "profile_fit: need reps >= 1 and warmup >= 0");
  }
  SimSpec spec;
  spec.dims = dims;
  spec.samples = samples;
  spec.seed = seed;
  const WeightedDag truth = gen_two_level_dag(spec);
  const DataMatrix data = sample_lingam(truth, spec);

  DirectLingamConfig seq_cfg;
  seq_cfg.parallel = false;
  DirectLingamConfig par_cfg;
  par_cfg.parallel = true;
  par_cfg.workers = workers;

  const DirectLingam seq_fitter(seq_cfg);
  const DirectLingam par_fitter(par_cfg);

  for (int w = 0; w < warmup; ++w) {
    FitPhases scratch;
    (void)seq_fitter.fit(data, scratch);
  }

  std::vector<FitPhases> seq_runs;
  seq_runs.reserve(static_cast<std::size_t>(reps));
  for (int r = 0; r < reps; ++r) {
    FitPhases phases;
    (void)seq_fitter.fit(data, phases);
    seq_runs.push_back(phases);
  }
  std::vector<FitPhases> par_runs;
  par_runs.reserve(static_cast<std::size_t>(reps));
  for (int r = 0; r < reps; ++r) {
    FitPhases phases;
    (void)par_fitter.fit(data, phases);
    par_runs.push_back(phases);
  }

  const FitPhases seq = median_run(seq_runs);
  const FitPhases par = median_run(par_runs);

  BenchReport report;
  report.total_seconds = seq.total_seconds;
  report.ordering_seconds = seq.ordering_seconds;
  report.ordering_fraction = seq.ordering_seconds / seq.total_seconds;
  report.seq_seconds = seq.total_seconds;
  report.par_seconds = par.total_seconds;
  report.measured_speedup = seq.total_seconds / par.total_seconds;
  report.amdahl_theoretical = amdahl_speedup(report.ordering_fraction);
  report.config = {dims, samples, workers, seed, 1};
  return report;
}

std::vector<BenchReport> sweep(std::span<const int> dims, std::span<const int> samples,
                               std::span<const int> workers, int seeds,
                               int warmup, int reps) {
  if (dims.empty() || samples.empty() || workers.empty()) {
    throw Error(ErrorCode::OutOfRange, "sweep: configuration lists must be non-empty");
  }
  if (seeds < 1) {
    throw Error(ErrorCode::OutOfRange, "sweep: seeds must be >= 1");
  }

  std::vector<BenchReport> reports;
  for (int d : dims) {
    for (int m : samples) {
      for (int w : workers) {
        double total = 0.0, ordering = 0.0, seq = 0.0, par = 0.0;
        for (int s = 0; s < seeds; ++s) {
          const BenchReport r = profile_fit(d, m, static_cast<std::uint64_t>(s), w,
                                            warmup, reps);
          total += r.total_seconds;
          ordering += r.ordering_seconds;
          seq += r.seq_seconds;
          par += r.par_seconds;
        }
        const double n = static_cast<double>(seeds);
        BenchReport avg;
        avg.total_seconds = total / n;
        avg.ordering_seconds = ordering / n;
        avg.ordering_fraction = avg.ordering_seconds / avg.total_seconds;
        avg.seq_seconds = seq / n;
        avg.par_seconds = par / n;
        avg.measured_speedup = avg.seq_seconds / avg.par_seconds;
        avg.amdahl_theoretical = amdahl_speedup(avg.ordering_fraction);
        avg.config = {d, m, w, 0, seeds};
        reports.push_back(avg);
      }
    }
  }
  return reports;
}

}  // namespace plingam
