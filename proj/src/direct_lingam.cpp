#include "plingam/direct_lingam.hpp"

#include <chrono>

#include "plingam/ordering.hpp"

namespace plingam {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

DirectLingam::DirectLingam(DirectLingamConfig cfg) : cfg_(cfg) {
  if (cfg_.workers < 1) {
    throw Error(ErrorCode::OutOfRange, "DirectLingam: workers must be >= 1");
  }
  if (cfg_.edge_threshold < 0.0) {
    throw Error(ErrorCode::OutOfRange, "DirectLingam: edge_threshold must be >= 0");
  }
}

WeightedDag DirectLingam::fit(const DataMatrix& X) const {
  FitPhases phases;
  return fit(X, phases);
}

WeightedDag DirectLingam::fit(const DataMatrix& X, FitPhases& phases) const {
  validate(X);
  const auto d = X.dims();
  const auto t_start = Clock::now();

  CausalOrder order = causal_order(X, cfg_.parallel, cfg_.workers);
  phases.ordering_seconds = seconds_since(t_start);

  const auto t_weights = Clock::now();
  WeightedDag dag;
  dag.weights = Eigen::MatrixXd::Zero(d, d);
  dag.intercepts = Eigen::VectorXd::Zero(d);

  // Predecessor regressions on centered, unstandardized data keep the
  // weights in the units of the input.
  Eigen::MatrixXd centered = X.values.rowwise() - X.values.colwise().mean();
  for (Eigen::Index p = 1; p < d; ++p) {
    const int target = order.order[static_cast<std::size_t>(p)];
    Eigen::MatrixXd design(X.samples(), p);
    for (Eigen::Index q = 0; q < p; ++q) {
      design.col(q) = centered.col(order.order[static_cast<std::size_t>(q)]);
    }
    const Eigen::VectorXd response = centered.col(target);

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
    Eigen::VectorXd coeffs;
    if (qr.rank() < p) {
      // Rank-deficient design (collinear predecessors): minimum-norm
      // least-squares solution instead of aborting.
      coeffs = design.completeOrthogonalDecomposition().solve(response);
      dag.used_pinv = true;
    } else {
      coeffs = qr.solve(response);
    }
    for (Eigen::Index q = 0; q < p; ++q) {
      dag.weights(target, order.order[static_cast<std::size_t>(q)]) = coeffs(q);
    }
  }
  dag.order = std::move(order);

  phases.weights_seconds = seconds_since(t_weights);
  phases.total_seconds = seconds_since(t_start);
  return dag;
}

EdgeSet to_edges(const WeightedDag& dag, double threshold) {
  if (threshold < 0.0) {
    throw Error(ErrorCode::OutOfRange, "to_edges: threshold must be >= 0");
  }
  EdgeSet edges;
  for (Eigen::Index i = 0; i < dag.weights.rows(); ++i) {
    for (Eigen::Index j = 0; j < dag.weights.cols(); ++j) {
      if (i == j) continue;
      if (std::abs(dag.weights(i, j)) > threshold) {
        edges.edges.emplace(static_cast<int>(j), static_cast<int>(i));
      }
    }
  }
  return edges;
}

}  // namespace plingam
