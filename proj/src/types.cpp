#include "plingam/types.hpp"

#include <cmath>

#include "plingam/kernels.hpp"

namespace plingam {

std::vector<std::string> default_var_names(Eigen::Index dims) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(dims));
  for (Eigen::Index j = 0; j < dims; ++j) names.push_back("x" + std::to_string(j));
  return names;
}

DataMatrix::DataMatrix(Eigen::MatrixXd v, std::vector<std::string> names)
    : values(std::move(v)), var_names(std::move(names)) {
  if (var_names.empty()) var_names = default_var_names(values.cols());
}

void validate(const DataMatrix& data) {
  if (data.dims() < 1) {
    throw Error(ErrorCode::DimensionMismatch, "validate: need at least 1 variable");
  }
  if (data.samples() < 2) {
    throw Error(ErrorCode::TooFewSamples, "validate: need at least 2 samples");
  }
  if (data.var_names.size() != static_cast<std::size_t>(data.dims())) {
    throw Error(ErrorCode::DimensionMismatch, "validate: var_names size mismatch");
  }
  for (Eigen::Index j = 0; j < data.dims(); ++j) {
    for (Eigen::Index i = 0; i < data.samples(); ++i) {
      if (!std::isfinite(data.values(i, j))) {
        throw Error(ErrorCode::NonFinite,
                    "validate: non-finite entry at row " + std::to_string(i) + ", column " +
                        data.var_names[static_cast<std::size_t>(j)],
                    i, j);
      }
    }
    if (kernels::variance_pop(data.col(j)) == 0.0) {
      throw Error(ErrorCode::ZeroVariance,
                  "validate: column " + data.var_names[static_cast<std::size_t>(j)] +
                      " has zero variance",
                  -1, j);
    }
  }
}

bool CausalOrder::is_permutation() const {
  const auto d = order.size();
  std::vector<bool> seen(d, false);
  for (int v : order) {
    if (v < 0 || static_cast<std::size_t>(v) >= d || seen[static_cast<std::size_t>(v)]) {
      return false;
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

std::vector<int> CausalOrder::positions() const {
  if (!is_permutation()) {
    throw Error(ErrorCode::InvalidIndex, "positions: order is not a permutation");
  }
  std::vector<int> pos(order.size());
  for (std::size_t p = 0; p < order.size(); ++p) {
    pos[static_cast<std::size_t>(order[p])] = static_cast<int>(p);
  }
  return pos;
}

bool permuted_is_lower_triangular(const WeightedDag& dag) {
  const auto d = dag.weights.rows();
  if (dag.weights.cols() != d) {
    throw Error(ErrorCode::DimensionMismatch, "permuted_is_lower_triangular: non-square weights");
  }
  if (static_cast<Eigen::Index>(dag.order.order.size()) != d || !dag.order.is_permutation()) {
    throw Error(ErrorCode::DimensionMismatch,
                "permuted_is_lower_triangular: order is not a permutation of the variables");
  }
  for (std::size_t p = 0; p < dag.order.order.size(); ++p) {
    for (std::size_t q = p; q < dag.order.order.size(); ++q) {
      if (dag.weights(dag.order.order[p], dag.order.order[q]) != 0.0) return false;
    }
  }
  return true;
}

}  // namespace plingam
