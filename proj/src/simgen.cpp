#include "plingam/simgen.hpp"

#include <cmath>

#include "plingam/rng.hpp"

namespace plingam {

namespace {

void check_spec(const SimSpec& spec) {
  if (spec.dims < 2) {
    throw Error(ErrorCode::OutOfRange, "simgen: dims must be >= 2");
  }
  if (spec.samples < 2) {
    throw Error(ErrorCode::OutOfRange, "simgen: samples must be >= 2");
  }
  if (!(spec.edge_prob > 0.0) || spec.edge_prob > 1.0) {
    throw Error(ErrorCode::OutOfRange, "simgen: edge_prob must be in (0, 1]");
  }
  if (!(spec.noise.hi > spec.noise.lo)) {
    throw Error(ErrorCode::OutOfRange, "simgen: noise bounds must satisfy lo < hi");
  }
}

constexpr double kOverflowGuard = 1e9;

}  // namespace

WeightedDag gen_two_level_dag(const SimSpec& spec) {
  check_spec(spec);
  const int d = spec.dims;
  const int n0 = (d + 1) / 2;  // level-0 size, ceil(d/2)

  Rng rng(spec.seed);

  // Draw order is fixed: label permutation first, then one coin (and, when
  // it lands, one weight) per cross-level pair, level-0 node outer loop.
  std::vector<int> label(static_cast<std::size_t>(d));
  for (int v = 0; v < d; ++v) label[static_cast<std::size_t>(v)] = v;
  rng.shuffle(label);

  WeightedDag dag;
  dag.weights = Eigen::MatrixXd::Zero(d, d);
  dag.intercepts = Eigen::VectorXd::Zero(d);
  for (int u = 0; u < n0; ++u) {
    for (int v = n0; v < d; ++v) {
      if (rng.uniform() < spec.edge_prob) {
        const double weight = rng.gauss();
        dag.weights(label[static_cast<std::size_t>(v)], label[static_cast<std::size_t>(u)]) =
            weight;
      }
    }
  }
  dag.order.order = label;
  return dag;
}

DataMatrix sample_lingam(const WeightedDag& dag, const SimSpec& spec) {
  check_spec(spec);
  const auto d = dag.weights.rows();
  if (!permuted_is_lower_triangular(dag)) {
    throw Error(ErrorCode::OutOfRange, "sample_lingam: dag is not acyclic under its order");
  }

  Rng rng(spec.seed);
  Eigen::MatrixXd values(spec.samples, d);
  Eigen::VectorXd eps(d);
  Eigen::VectorXd x(d);
  for (int r = 0; r < spec.samples; ++r) {
    for (Eigen::Index j = 0; j < d; ++j) eps(j) = rng.uniform(spec.noise.lo, spec.noise.hi);
    x.setZero();
    // Parents always precede their children in the order, so a full-row dot
    // against the partially filled x only ever touches computed entries.
    for (int v : dag.order.order) {
      x(v) = dag.weights.row(v).dot(x) + eps(v);
    }
    values.row(r) = x;
  }
  return DataMatrix(std::move(values));
}

TimeSeries sample_svar(const WeightedDag& b0, const std::vector<Eigen::MatrixXd>& lagged,
                       int T, int burn_in, const SimSpec& spec) {
  check_spec(spec);
  const auto d = b0.weights.rows();
  if (!permuted_is_lower_triangular(b0)) {
    throw Error(ErrorCode::OutOfRange, "sample_svar: b0 is not acyclic under its order");
  }
  for (const auto& m : lagged) {
    if (m.rows() != d || m.cols() != d) {
      throw Error(ErrorCode::DimensionMismatch, "sample_svar: lagged matrix shape mismatch");
    }
  }
  if (T < 1 || burn_in < 0) {
    throw Error(ErrorCode::OutOfRange, "sample_svar: need T >= 1 and burn_in >= 0");
  }

  // x(t) = (I - B0)^-1 (sum_tau lagged[tau-1] x(t-tau) + eps(t)); B0 is
  // strictly triangular under its order, so I - B0 is always invertible.
  const Eigen::MatrixXd inst = Eigen::MatrixXd::Identity(d, d) - b0.weights;
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(inst);

  const int k = static_cast<int>(lagged.size());
  Rng rng(spec.seed);
  std::vector<Eigen::VectorXd> history(static_cast<std::size_t>(k), Eigen::VectorXd::Zero(d));
  Eigen::MatrixXd out(T, d);
  Eigen::VectorXd rhs(d);

  for (int t = 0; t < burn_in + T; ++t) {
    for (Eigen::Index j = 0; j < d; ++j) rhs(j) = rng.uniform(spec.noise.lo, spec.noise.hi);
    for (int tau = 1; tau <= k; ++tau) {
      rhs += lagged[static_cast<std::size_t>(tau - 1)] * history[static_cast<std::size_t>(tau - 1)];
    }
    const Eigen::VectorXd x = lu.solve(rhs);
    if (!x.allFinite() || x.cwiseAbs().maxCoeff() > kOverflowGuard) {
      throw Error(ErrorCode::UnstableSystem, "sample_svar: series exceeded overflow guard");
    }
    for (int tau = k; tau > 1; --tau) {
      history[static_cast<std::size_t>(tau - 1)] = history[static_cast<std::size_t>(tau - 2)];
    }
    if (k > 0) history[0] = x;
    if (t >= burn_in) out.row(t - burn_in) = x;
  }

  TimeSeries ts;
  ts.values = std::move(out);
  ts.var_names = default_var_names(d);
  return ts;
}

}  // namespace plingam
