#pragma once

#include <cstdint>

#include "plingam/types.hpp"
#include "plingam/var_lingam.hpp"

namespace plingam {

// Uniform noise bounds; the default Uniform(0, 1) is deliberately
// non-centered. Standardization inside the fitting path absorbs the mean,
// so generators do not subtract it.
struct NoiseSpec {
  double lo = 0.0;
  double hi = 1.0;
};

struct SimSpec {
  int dims = 2;
  int samples = 1000;
  std::uint64_t seed = 0;
  double edge_prob = 0.5;
  NoiseSpec noise;
};

// Bipartite ground truth: the first ceil(d/2) internal nodes form level 0,
// the rest level 1, variable labels are a seeded permutation, and each
// level-0 -> level-1 edge is present independently with edge_prob, weight
// drawn N(0, 1). Acyclic by construction, bit-deterministic per seed.
WeightedDag gen_two_level_dag(const SimSpec& spec);

// Samples x_i = sum_j weights(i, j) * x_j + eps_i in causal order, with
// eps drawn i.i.d. from spec.noise. Draw order: for each row, one noise
// value per variable in index order.
DataMatrix sample_lingam(const WeightedDag& dag, const SimSpec& spec);

// Simulates x(t) = B0 x(t) + sum_tau lagged[tau-1] x(t - tau) + eps(t) by
// solving the instantaneous system each step, then discards burn_in rows.
// The caller is responsible for stability (companion spectral radius < 1);
// values beyond the overflow guard raise UnstableSystem.
TimeSeries sample_svar(const WeightedDag& b0, const std::vector<Eigen::MatrixXd>& lagged,
                       int T, int burn_in, const SimSpec& spec);

}  // namespace plingam
