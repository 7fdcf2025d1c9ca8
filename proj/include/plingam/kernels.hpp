#pragma once

#include <span>
#include <vector>

#include "plingam/error.hpp"

namespace plingam::kernels {

// Constants of the maximum-entropy differential-entropy approximation.
struct EntropyConstants {
  double k1;
  double k2;
  double gamma;
};

inline constexpr EntropyConstants kEntropy{79.047, 7.4129, 0.37457};

// Entropy of a standard Gaussian, (1 + log 2*pi) / 2.
extern const double kGaussianEntropy;

// Moment helpers. All of them divide by n (population moments) and
// accumulate strictly left to right, which the sequential/parallel equality
// contract depends on.
double mean(std::span<const double> x);
double variance_pop(std::span<const double> x);
double std_pop(std::span<const double> x);
double covariance_pop(std::span<const double> x, std::span<const double> y);

// Precomputed-moment forms. variance_pop and covariance_pop are defined in
// terms of these, so passing moments obtained from mean() on the same data
// reproduces the plain forms bit for bit. The ordering hot path caches
// per-column moments per round through them.
double variance_pop_given_mean(std::span<const double> x, double mean_x);
double covariance_pop_given_means(std::span<const double> x, std::span<const double> y,
                                  double mean_x, double mean_y);

// out = xi - slope * xj; the single definition of the residual update.
void residual_into(std::span<const double> xi, std::span<const double> xj, double slope,
                   std::vector<double>& out);

// log(cosh(u)) computed as |u| + log(1 + exp(-2|u|)) - log 2; does not
// overflow for large |u|.
double log_cosh(double u);

// (x - mean) / std with population std. Throws TooShort (n < 2) and
// ZeroVariance (constant input).
std::vector<double> standardize(std::span<const double> x);

// xi - (cov(xi, xj) / var(xj)) * xj. Throws LengthMismatch, TooShort and
// ZeroVariance (constant xj).
std::vector<double> residual(std::span<const double> xi, std::span<const double> xj);

// Differential-entropy approximation for a standardized sample u:
//   (1 + log 2*pi)/2 - k1*(mean(log cosh u) - gamma)^2 - k2*(mean(u*exp(-u^2/2)))^2
// The caller is responsible for u being standardized; it is not re-checked.
double entropy_approx(std::span<const double> u);

// entropy_approx(r / std_pop(r)), fused so no scaled copy is materialized;
// bit-identical to the two-step form. Throws ZeroVariance for an exactly
// zero residual (collinear pair).
double entropy_of_normalized(std::span<const double> r);

// Mutual-information difference for a pair of standardized variables and
// their two regression residuals:
//   [H(xj_std) + H(ri_j / std(ri_j))] - [H(xi_std) + H(rj_i / std(rj_i))]
// Positive values favor i as the cause of j. Exactly antisymmetric under a
// role swap.
double diff_mutual_info(std::span<const double> xi_std, std::span<const double> xj_std,
                        std::span<const double> ri_j, std::span<const double> rj_i);

}  // namespace plingam::kernels
