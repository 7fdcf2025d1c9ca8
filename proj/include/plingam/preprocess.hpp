#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "plingam/var_lingam.hpp"

namespace plingam {

// Time-series preprocessing, applied in this fixed order:
//   interpolate -> drop still-incomplete columns -> first difference.

// Linear interpolation of interior NaN runs against the timestamp axis.
// Leading and trailing NaNs stay missing. Timestamps must be strictly
// increasing.
Eigen::MatrixXd interpolate_missing(const Eigen::MatrixXd& values,
                                    const Eigen::VectorXd& timestamps);

// Removes columns that still contain NaN; appends their names to `dropped`.
TimeSeries drop_incomplete_columns(const TimeSeries& ts, std::vector<std::string>& dropped);

// x(t) - x(t-1); one fewer row. Timestamps are dropped. Throws
// InsufficientRows for fewer than 2 rows.
TimeSeries first_difference(const TimeSeries& ts);

}  // namespace plingam
