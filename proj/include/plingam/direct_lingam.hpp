#pragma once

#include "plingam/types.hpp"

namespace plingam {

struct DirectLingamConfig {
  bool parallel = false;
  int workers = 1;
  double edge_threshold = 0.05;
};

// Wall-clock decomposition of one fit, filled by DirectLingam::fit when a
// profile sink is passed. Ordering covers the search + regress-out rounds,
// weights covers the predecessor regressions.
struct FitPhases {
  double ordering_seconds = 0.0;
  double weights_seconds = 0.0;
  double total_seconds = 0.0;
};

// End-to-end DirectLiNGAM: causal ordering followed by ordinary
// least-squares estimation of each variable on its predecessors in the
// order. Weight regressions run on centered, unstandardized data so the
// weights stay in original units. Rank-deficient predecessor designs fall
// back to the minimum-norm pseudo-inverse solution and set used_pinv on the
// result instead of aborting.
class DirectLingam {
 public:
  explicit DirectLingam(DirectLingamConfig cfg = {});

  WeightedDag fit(const DataMatrix& X) const;
  WeightedDag fit(const DataMatrix& X, FitPhases& phases) const;

  const DirectLingamConfig& config() const { return cfg_; }

 private:
  DirectLingamConfig cfg_;
};

// Directed edge (j -> i) for every |weights(i, j)| > threshold.
EdgeSet to_edges(const WeightedDag& dag, double threshold);

}  // namespace plingam
