#include "plingam/preprocess.hpp"

#include <cmath>

namespace plingam {

Eigen::MatrixXd interpolate_missing(const Eigen::MatrixXd& values,
                                    const Eigen::VectorXd& timestamps) {
  if (timestamps.size() != values.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "interpolate_missing: timestamp length mismatch");
  }
  for (Eigen::Index t = 1; t < timestamps.size(); ++t) {
    if (!(timestamps(t) > timestamps(t - 1))) {
      throw Error(ErrorCode::ParseError, "interpolate_missing: timestamps must increase", t + 1, 1);
    }
  }

  Eigen::MatrixXd out = values;
  const auto rows = values.rows();
  for (Eigen::Index c = 0; c < values.cols(); ++c) {
    Eigen::Index t = 0;
    while (t < rows) {
      if (!std::isnan(out(t, c))) {
        ++t;
        continue;
      }
      // maximal NaN run [t, run_end)
      Eigen::Index run_end = t;
      while (run_end < rows && std::isnan(out(run_end, c))) ++run_end;
      // interior runs only: need finite neighbors on both sides
      if (t > 0 && run_end < rows) {
        const double t0 = timestamps(t - 1);
        const double t1 = timestamps(run_end);
        const double v0 = out(t - 1, c);
        const double v1 = out(run_end, c);
        for (Eigen::Index g = t; g < run_end; ++g) {
          const double frac = (timestamps(g) - t0) / (t1 - t0);
          out(g, c) = v0 + (v1 - v0) * frac;
        }
      }
      t = run_end;
    }
  }
  return out;
}

TimeSeries drop_incomplete_columns(const TimeSeries& ts, std::vector<std::string>& dropped) {
  std::vector<Eigen::Index> keep;
  for (Eigen::Index c = 0; c < ts.dims(); ++c) {
    if (ts.values.col(c).array().isNaN().any()) {
      dropped.push_back(ts.var_names[static_cast<std::size_t>(c)]);
    } else {
      keep.push_back(c);
    }
  }

  TimeSeries out;
  out.timestamps = ts.timestamps;
  out.values.resize(ts.rows(), static_cast<Eigen::Index>(keep.size()));
  out.var_names.reserve(keep.size());
  for (std::size_t p = 0; p < keep.size(); ++p) {
    out.values.col(static_cast<Eigen::Index>(p)) = ts.values.col(keep[p]);
    out.var_names.push_back(ts.var_names[static_cast<std::size_t>(keep[p])]);
  }
  return out;
}

TimeSeries first_difference(const TimeSeries& ts) {
  if (ts.rows() < 2) {
    throw Error(ErrorCode::InsufficientRows, "first_difference: need at least 2 rows");
  }
  TimeSeries out;
  out.var_names = ts.var_names;
  out.values = ts.values.bottomRows(ts.rows() - 1) - ts.values.topRows(ts.rows() - 1);
  return out;
}

}  // namespace plingam
