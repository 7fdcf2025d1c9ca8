#include "plingam/metrics.hpp"

#include "plingam/kernels.hpp"

namespace plingam {

namespace {

void check_edges(const EdgeSet& g, int dims, const char* name) {
  for (const auto& [src, dst] : g.edges) {
    if (src < 0 || src >= dims || dst < 0 || dst >= dims) {
      throw Error(ErrorCode::InvalidIndex,
                  std::string("compare_graphs: ") + name + " edge endpoint out of range");
    }
  }
}

// Connection state of an unordered pair {a, b}, a < b.
enum class PairState { None, Forward, Backward, Both };

PairState pair_state(const EdgeSet& g, int a, int b) {
  const bool fwd = g.edges.count({a, b}) > 0;
  const bool bwd = g.edges.count({b, a}) > 0;
  if (fwd && bwd) return PairState::Both;
  if (fwd) return PairState::Forward;
  if (bwd) return PairState::Backward;
  return PairState::None;
}

}  // namespace

MetricsReport compare_graphs(const EdgeSet& est, const EdgeSet& truth, int dims,
                             ShdConvention convention) {
  check_edges(est, dims, "est");
  check_edges(truth, dims, "truth");

  int tp = 0;
  for (const auto& e : est.edges) {
    if (truth.edges.count(e)) tp++;
  }

  MetricsReport report;
  report.n_est_edges = static_cast<int>(est.edges.size());
  report.n_true_edges = static_cast<int>(truth.edges.size());

  // Empty-set conventions: empty est against nonempty truth scores 0, and
  // two empty graphs compare as a perfect match.
  report.precision = est.edges.empty()
                         ? (truth.edges.empty() ? 1.0 : 0.0)
                         : static_cast<double>(tp) / static_cast<double>(est.edges.size());
  report.recall = truth.edges.empty()
                      ? (est.edges.empty() ? 1.0 : 0.0)
                      : static_cast<double>(tp) / static_cast<double>(truth.edges.size());
  const double pr = report.precision + report.recall;
  report.f1 = pr > 0.0 ? 2.0 * report.precision * report.recall / pr : 0.0;

  int shd = 0;
  for (int a = 0; a < dims; ++a) {
    for (int b = a + 1; b < dims; ++b) {
      const PairState se = pair_state(est, a, b);
      const PairState st = pair_state(truth, a, b);
      if (se == st) continue;
      const bool pure_reversal = (se == PairState::Forward && st == PairState::Backward) ||
                                 (se == PairState::Backward && st == PairState::Forward);
      shd += (pure_reversal && convention == ShdConvention::ReversalAsTwo) ? 2 : 1;
    }
  }
  report.shd = shd;
  return report;
}

AsymmetryResult asymmetry_direction(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::LengthMismatch, "asymmetry_direction: length mismatch");
  }
  const std::vector<double> x_std = kernels::standardize(x);
  const std::vector<double> y_std = kernels::standardize(y);
  const std::vector<double> r_xy = kernels::residual(x_std, y_std);
  const std::vector<double> r_yx = kernels::residual(y_std, x_std);
  const double score = kernels::diff_mutual_info(x_std, y_std, r_xy, r_yx);

  AsymmetryResult result;
  result.score = score;
  result.direction = score >= 0.0 ? Direction::XcausesY : Direction::YcausesX;
  return result;
}

}  // namespace plingam
