#pragma once

#include <Eigen/Dense>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "plingam/error.hpp"

namespace plingam {

// Dense observation matrix, m samples (rows) x d variables (columns).
// Storage is column-major so each variable is contiguous; the pairwise
// kernels iterate columns.
struct DataMatrix {
  Eigen::MatrixXd values;
  std::vector<std::string> var_names;

  DataMatrix() = default;
  explicit DataMatrix(Eigen::MatrixXd v, std::vector<std::string> names = {});

  Eigen::Index samples() const { return values.rows(); }
  Eigen::Index dims() const { return values.cols(); }

  std::span<const double> col(Eigen::Index j) const {
    return {values.col(j).data(), static_cast<std::size_t>(values.rows())};
  }
};

std::vector<std::string> default_var_names(Eigen::Index dims);

// Throws NonFinite(row, col), ZeroVariance(col) or TooFewSamples when the
// matrix cannot be handed to a fitting routine.
void validate(const DataMatrix& data);

// Permutation of variable indices; position p holds the variable at causal
// position k = p.
struct CausalOrder {
  std::vector<int> order;

  bool is_permutation() const;

  // positions()[i] = causal position of variable i; requires a valid permutation
  std::vector<int> positions() const;
};

// Weighted adjacency: weights(i, j) is the strength of the effect of
// variable j on variable i. Intercepts are kept at zero; fitting runs on
// centered data.
struct WeightedDag {
  Eigen::MatrixXd weights;
  CausalOrder order;
  Eigen::VectorXd intercepts;
  bool used_pinv = false;  // a rank-deficient weight regression fell back to the pseudo-inverse

  int dims() const { return static_cast<int>(weights.rows()); }
};

// True iff weights(order[p], order[q]) == 0 for all q >= p, i.e. permuting
// rows and columns by the order yields a strictly lower-triangular matrix.
// Throws DimensionMismatch on inconsistent shapes.
bool permuted_is_lower_triangular(const WeightedDag& dag);

struct EdgeSet {
  std::set<std::pair<int, int>> edges;  // directed (src, dst)
};

// VAR(k) model combined with an instantaneous DAG: b_lagged[tau-1] is the
// causal lag-tau matrix, m_raw[tau-1] the raw VAR coefficient matrix, and
// b_lagged[tau-1] == (I - B0) * m_raw[tau-1] holds by construction.
struct VarModel {
  WeightedDag b0;
  std::vector<Eigen::MatrixXd> b_lagged;
  std::vector<Eigen::MatrixXd> m_raw;
  int lag = 0;
};

}  // namespace plingam
