#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plingam/direct_lingam.hpp"
#include "plingam/types.hpp"

namespace plingam {

// Multivariate time series, row t = observation x(t). Timestamps are only
// used by preprocessing; fitting assumes rows are time-ordered.
struct TimeSeries {
  Eigen::MatrixXd values;
  std::vector<std::string> var_names;
  std::optional<Eigen::VectorXd> timestamps;

  Eigen::Index rows() const { return values.rows(); }
  Eigen::Index dims() const { return values.cols(); }
};

struct VarEstimate {
  std::vector<Eigen::MatrixXd> m_raw;  // M_1..M_k
  DataMatrix residuals;                // T - k rows
};

// Least-squares VAR(k) with intercept (estimated, then discarded). Throws
// InsufficientRows and SingularDesign.
VarEstimate estimate_var(const TimeSeries& ts, int lag);

// VAR estimation, DirectLiNGAM on the VAR residuals, then the coefficient
// transform b_lagged[tau] = (I - B0) * m_raw[tau].
VarModel fit_varlingam(const TimeSeries& ts, int lag, const DirectLingamConfig& cfg = {});

// Per-node counts of incoming / outgoing edges above the threshold.
struct DegreeDistribution {
  std::vector<int> in_degrees;
  std::vector<int> out_degrees;
};

DegreeDistribution degree_distribution(const WeightedDag& b0, double threshold);

// Total-causal-effect ranking across all lag matrices theta_0..theta_k.
// score = sum of |weights| above the threshold (outgoing for exerting,
// incoming for receiving); lag is the lag whose contribution to the score
// is largest. Entries with zero score are omitted.
struct InfluenceEntry {
  int var = -1;
  int lag = 0;
  double score = 0.0;
};

struct InfluenceRanking {
  std::vector<InfluenceEntry> exerting;
  std::vector<InfluenceEntry> receiving;
};

InfluenceRanking influence_ranking(const VarModel& model, double threshold, int top_n);

}  // namespace plingam
