#include "plingam/kernels.hpp"

#include <Eigen/Core>
#include <cmath>
#include <numbers>

namespace plingam::kernels {

const double kGaussianEntropy = 0.5 * (1.0 + std::log(2.0 * std::numbers::pi));

namespace {

// Elementwise entropy terms, vectorized through aligned scratch so the
// packet/peel split never depends on the caller's buffer alignment; the
// two means still accumulate strictly left to right.
void entropy_means(const Eigen::ArrayXd& u, double& mean_log_cosh, double& mean_pdf_moment) {
  thread_local Eigen::ArrayXd lc;
  thread_local Eigen::ArrayXd pdf;
  const Eigen::Index n = u.size();
  lc.resize(n);
  pdf.resize(n);
  lc = u.abs();
  lc += (-2.0 * lc).exp().log1p() - std::numbers::ln2;
  pdf = u * (-0.5 * u.square()).exp();

  double acc_lc = 0.0;
  double acc_pdf = 0.0;
  for (Eigen::Index t = 0; t < n; ++t) {
    acc_lc += lc[t];
    acc_pdf += pdf[t];
  }
  mean_log_cosh = acc_lc / static_cast<double>(n);
  mean_pdf_moment = acc_pdf / static_cast<double>(n);
}

double entropy_from_means(double mean_log_cosh, double mean_pdf_moment) {
  const double t1 = mean_log_cosh - kEntropy.gamma;
  const double t2 = mean_pdf_moment;
  return kGaussianEntropy - kEntropy.k1 * t1 * t1 - kEntropy.k2 * t2 * t2;
}

}  // namespace

double mean(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v;
  return s / static_cast<double>(x.size());
}

double variance_pop_given_mean(std::span<const double> x, double mean_x) {
  double s = 0.0;
  for (double v : x) {
    const double d = v - mean_x;
    s += d * d;
  }
  return s / static_cast<double>(x.size());
}

double variance_pop(std::span<const double> x) {
  return variance_pop_given_mean(x, mean(x));
}

double std_pop(std::span<const double> x) { return std::sqrt(variance_pop(x)); }

double covariance_pop_given_means(std::span<const double> x, std::span<const double> y,
                                  double mean_x, double mean_y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::LengthMismatch, "covariance_pop: length mismatch");
  }
  double s = 0.0;
  for (std::size_t t = 0; t < x.size(); ++t) {
    s += (x[t] - mean_x) * (y[t] - mean_y);
  }
  return s / static_cast<double>(x.size());
}

double covariance_pop(std::span<const double> x, std::span<const double> y) {
  return covariance_pop_given_means(x, y, mean(x), mean(y));
}

void residual_into(std::span<const double> xi, std::span<const double> xj, double slope,
                   std::vector<double>& out) {
  out.resize(xi.size());
  for (std::size_t t = 0; t < xi.size(); ++t) out[t] = xi[t] - slope * xj[t];
}

double log_cosh(double u) {
  const double a = std::fabs(u);
  return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
}

std::vector<double> standardize(std::span<const double> x) {
  if (x.size() < 2) {
    throw Error(ErrorCode::TooShort, "standardize: need at least 2 samples");
  }
  const double m = mean(x);
  const double sd = std_pop(x);
  if (sd == 0.0) {
    throw Error(ErrorCode::ZeroVariance, "standardize: constant input");
  }
  std::vector<double> out(x.size());
  for (std::size_t t = 0; t < x.size(); ++t) out[t] = (x[t] - m) / sd;
  return out;
}

std::vector<double> residual(std::span<const double> xi, std::span<const double> xj) {
  if (xi.size() != xj.size()) {
    throw Error(ErrorCode::LengthMismatch, "residual: length mismatch");
  }
  if (xi.size() < 2) {
    throw Error(ErrorCode::TooShort, "residual: need at least 2 samples");
  }
  const double var_j = variance_pop(xj);
  if (var_j == 0.0) {
    throw Error(ErrorCode::ZeroVariance, "residual: regressor has zero variance");
  }
  const double slope = covariance_pop(xi, xj) / var_j;
  std::vector<double> out;
  residual_into(xi, xj, slope, out);
  return out;
}

double entropy_approx(std::span<const double> u) {
  thread_local Eigen::ArrayXd scratch;
  const auto n = static_cast<Eigen::Index>(u.size());
  scratch.resize(n);
  for (Eigen::Index t = 0; t < n; ++t) scratch[t] = u[static_cast<std::size_t>(t)];
  double mean_lc = 0.0;
  double mean_pdf = 0.0;
  entropy_means(scratch, mean_lc, mean_pdf);
  return entropy_from_means(mean_lc, mean_pdf);
}

double entropy_of_normalized(std::span<const double> r) {
  const double sd = std_pop(r);
  if (sd == 0.0) {
    throw Error(ErrorCode::ZeroVariance,
                "entropy_of_normalized: zero residual (exactly collinear pair)");
  }
  thread_local Eigen::ArrayXd scratch;
  const auto n = static_cast<Eigen::Index>(r.size());
  scratch.resize(n);
  for (Eigen::Index t = 0; t < n; ++t) scratch[t] = r[static_cast<std::size_t>(t)] / sd;
  double mean_lc = 0.0;
  double mean_pdf = 0.0;
  entropy_means(scratch, mean_lc, mean_pdf);
  return entropy_from_means(mean_lc, mean_pdf);
}

double diff_mutual_info(std::span<const double> xi_std, std::span<const double> xj_std,
                        std::span<const double> ri_j, std::span<const double> rj_i) {
  if (xi_std.size() != xj_std.size() || xi_std.size() != ri_j.size() ||
      xi_std.size() != rj_i.size()) {
    throw Error(ErrorCode::LengthMismatch, "diff_mutual_info: length mismatch");
  }
  const double favor_i = entropy_approx(xj_std) + entropy_of_normalized(ri_j);
  const double favor_j = entropy_approx(xi_std) + entropy_of_normalized(rj_i);
  return favor_i - favor_j;
}

}  // namespace plingam::kernels
