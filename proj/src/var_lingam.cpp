#include "plingam/var_lingam.hpp"

#include <algorithm>

namespace plingam {

VarEstimate estimate_var(const TimeSeries& ts, int lag) {
  if (lag < 1) {
    throw Error(ErrorCode::OutOfRange, "estimate_var: lag must be >= 1");
  }
  const auto T = ts.rows();
  const auto d = ts.dims();
  if (d < 1) {
    throw Error(ErrorCode::DimensionMismatch, "estimate_var: need at least 1 variable");
  }
  if (!ts.values.allFinite()) {
    throw Error(ErrorCode::NonFinite, "estimate_var: non-finite entries in series");
  }
  const Eigen::Index n_rows = T - lag;            // usable observations
  const Eigen::Index n_cols = 1 + lag * d;        // intercept + lagged regressors
  if (T < lag + 2 * d || n_rows < n_cols) {
    throw Error(ErrorCode::InsufficientRows,
                "estimate_var: series too short for lag " + std::to_string(lag));
  }

  // Stacked design: row t-lag of Z is [1, x(t-1), ..., x(t-lag)] and one
  // QR solves all d equations (equation-wise OLS with a shared design).
  Eigen::MatrixXd Z(n_rows, n_cols);
  Eigen::MatrixXd Y(n_rows, d);
  for (Eigen::Index t = lag; t < T; ++t) {
    const Eigen::Index r = t - lag;
    Z(r, 0) = 1.0;
    for (int tau = 1; tau <= lag; ++tau) {
      Z.block(r, 1 + static_cast<Eigen::Index>(tau - 1) * d, 1, d) = ts.values.row(t - tau);
    }
    Y.row(r) = ts.values.row(t);
  }

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(Z);
  if (qr.rank() < n_cols) {
    throw Error(ErrorCode::SingularDesign, "estimate_var: rank-deficient design matrix");
  }
  const Eigen::MatrixXd coeffs = qr.solve(Y);  // (1 + lag*d) x d, intercept in row 0

  VarEstimate est;
  est.m_raw.reserve(static_cast<std::size_t>(lag));
  for (int tau = 1; tau <= lag; ++tau) {
    est.m_raw.push_back(
        coeffs.middleRows(1 + static_cast<Eigen::Index>(tau - 1) * d, d).transpose());
  }
  est.residuals = DataMatrix(Y - Z * coeffs, ts.var_names);
  return est;
}

VarModel fit_varlingam(const TimeSeries& ts, int lag, const DirectLingamConfig& cfg) {
  VarEstimate est = estimate_var(ts, lag);

  VarModel model;
  model.lag = lag;
  model.b0 = DirectLingam(cfg).fit(est.residuals);
  model.m_raw = std::move(est.m_raw);

  const auto d = model.b0.weights.rows();
  const Eigen::MatrixXd transform = Eigen::MatrixXd::Identity(d, d) - model.b0.weights;
  model.b_lagged.reserve(model.m_raw.size());
  for (const auto& m : model.m_raw) {
    model.b_lagged.push_back(transform * m);
  }
  return model;
}

DegreeDistribution degree_distribution(const WeightedDag& b0, double threshold) {
  if (threshold < 0.0) {
    throw Error(ErrorCode::OutOfRange, "degree_distribution: threshold must be >= 0");
  }
  const auto d = b0.weights.rows();
  DegreeDistribution deg;
  deg.in_degrees.assign(static_cast<std::size_t>(d), 0);
  deg.out_degrees.assign(static_cast<std::size_t>(d), 0);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      if (i == j) continue;
      if (std::abs(b0.weights(i, j)) > threshold) {
        deg.in_degrees[static_cast<std::size_t>(i)]++;
        deg.out_degrees[static_cast<std::size_t>(j)]++;
      }
    }
  }
  return deg;
}

InfluenceRanking influence_ranking(const VarModel& model, double threshold, int top_n) {
  if (threshold < 0.0) {
    throw Error(ErrorCode::OutOfRange, "influence_ranking: threshold must be >= 0");
  }
  if (top_n < 1) {
    throw Error(ErrorCode::OutOfRange, "influence_ranking: top_n must be >= 1");
  }
  const auto d = model.b0.weights.rows();
  const int n_lags = model.lag;

  // per-variable, per-lag absolute thresholded totals; theta_0 is b0
  auto lag_matrix = [&](int tau) -> const Eigen::MatrixXd& {
    return tau == 0 ? model.b0.weights : model.b_lagged[static_cast<std::size_t>(tau - 1)];
  };

  auto rank = [&](bool exerting) {
    std::vector<InfluenceEntry> entries;
    for (Eigen::Index v = 0; v < d; ++v) {
      double total = 0.0;
      double best_contrib = -1.0;
      int best_lag = 0;
      for (int tau = 0; tau <= n_lags; ++tau) {
        const Eigen::MatrixXd& m = lag_matrix(tau);
        double contrib = 0.0;
        for (Eigen::Index o = 0; o < d; ++o) {
          if (o == v && tau == 0) continue;  // no self loops in theta_0
          const double w = exerting ? m(o, v) : m(v, o);
          if (std::abs(w) > threshold) contrib += std::abs(w);
        }
        total += contrib;
        if (contrib > best_contrib) {
          best_contrib = contrib;
          best_lag = tau;
        }
      }
      if (total > 0.0) {
        entries.push_back({static_cast<int>(v), best_lag, total});
      }
    }
    std::sort(entries.begin(), entries.end(), [](const InfluenceEntry& a, const InfluenceEntry& b) {
      if (a.score != b.score) return a.score > b.score;
      return a.var < b.var;
    });
    if (entries.size() > static_cast<std::size_t>(top_n)) {
      entries.resize(static_cast<std::size_t>(top_n));
    }
    return entries;
  };

  InfluenceRanking ranking;
  ranking.exerting = rank(true);
  ranking.receiving = rank(false);
  return ranking;
}

}  // namespace plingam
