#pragma once

#include <span>

#include "plingam/types.hpp"

namespace plingam {

struct MetricsReport {
  double f1 = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  int shd = 0;
  int n_true_edges = 0;
  int n_est_edges = 0;
};

// SHD counts node pairs whose connection differs. A reversed edge counts 1
// under ReversalAsOne (the default) and 2 under ReversalAsTwo.
enum class ShdConvention { ReversalAsOne, ReversalAsTwo };

// Precision/recall/F1 over directed edges plus SHD. Conventions: an empty
// est against a nonempty truth has precision 0; two empty graphs compare as
// a perfect match (f1 = 1). Throws InvalidIndex for endpoints outside
// [0, dims).
MetricsReport compare_graphs(const EdgeSet& est, const EdgeSet& truth, int dims,
                             ShdConvention convention = ShdConvention::ReversalAsOne);

enum class Direction { XcausesY, YcausesX };

struct AsymmetryResult {
  Direction direction = Direction::XcausesY;
  double score = 0.0;  // signed diff_mutual_info; |score| is the confidence
};

// Pairwise causal-direction decision: standardizes the pair, regresses each
// way, and reads the sign of the mutual-information difference. A zero
// score resolves to XcausesY. Throws ZeroVariance and LengthMismatch.
AsymmetryResult asymmetry_direction(std::span<const double> x, std::span<const double> y);

}  // namespace plingam
