#pragma once

#include <cstring>
#include <span>
#include <vector>

#include "plingam/rng.hpp"
#include "plingam/types.hpp"

namespace testutil {

inline std::vector<double> uniform_vec(plingam::Rng& rng, std::size_t n, double lo = 0.0,
                                       double hi = 1.0) {
  std::vector<double> v(n);
  for (auto& x : v) x = rng.uniform(lo, hi);
  return v;
}

inline std::vector<double> gauss_vec(plingam::Rng& rng, std::size_t n, double mu = 0.0,
                                     double sigma = 1.0) {
  std::vector<double> v(n);
  for (auto& x : v) x = mu + sigma * rng.gauss();
  return v;
}

inline bool bits_equal(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) return false;
  return a.empty() || std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

inline bool bits_equal(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return a.size() == 0 ||
         std::memcmp(a.data(), b.data(), static_cast<std::size_t>(a.size()) * sizeof(double)) == 0;
}

inline plingam::DataMatrix make_matrix(const std::vector<std::vector<double>>& rows) {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()),
                    static_cast<Eigen::Index>(rows.empty() ? 0 : rows[0].size()));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      m(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }
  }
  return plingam::DataMatrix(std::move(m));
}

}  // namespace testutil
