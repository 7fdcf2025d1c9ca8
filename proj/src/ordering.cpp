#include "plingam/ordering.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <thread>

#include "plingam/kernels.hpp"

namespace plingam {

namespace {

// Checked, ascending copy of the candidate list. Scores are accumulated
// over j in ascending index order, so the iteration order is pinned here.
std::vector<int> sorted_candidates(const DataMatrix& X, std::span<const int> U) {
  if (U.empty()) {
    throw Error(ErrorCode::EmptyCandidates, "search_causal_order: empty candidate set");
  }
  std::vector<int> u(U.begin(), U.end());
  std::sort(u.begin(), u.end());
  for (std::size_t p = 0; p < u.size(); ++p) {
    if (u[p] < 0 || u[p] >= X.dims()) {
      throw Error(ErrorCode::InvalidIndex, "search_causal_order: candidate index out of range",
                  -1, u[p]);
    }
    if (p > 0 && u[p] == u[p - 1]) {
      throw Error(ErrorCode::InvalidIndex, "search_causal_order: duplicate candidate index", -1,
                  u[p]);
    }
  }
  return u;
}

// Standardized candidate columns plus their per-round moments and
// entropies, shared read-only by every worker. Column entropy, mean and
// variance do not depend on the pair, so they are computed once per round;
// the cached values are bit-identical to what the plain kernel composition
// (residual + diff_mutual_info) would recompute per pair.
struct RoundCache {
  std::vector<std::vector<double>> std_cols;
  std::vector<double> col_entropy;
  std::vector<double> col_mean;
  std::vector<double> col_var;
};

RoundCache build_cache(const DataMatrix& X, const std::vector<int>& u) {
  RoundCache cache;
  cache.std_cols.resize(u.size());
  cache.col_entropy.resize(u.size());
  cache.col_mean.resize(u.size());
  cache.col_var.resize(u.size());
  for (std::size_t p = 0; p < u.size(); ++p) {
    try {
      cache.std_cols[p] = kernels::standardize(X.col(u[p]));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ZeroVariance) {
        throw Error(ErrorCode::ZeroVariance,
                    "search_causal_order: column " + std::to_string(u[p]) +
                        " has zero variance",
                    -1, u[p]);
      }
      throw;
    }
    cache.col_entropy[p] = kernels::entropy_approx(cache.std_cols[p]);
    cache.col_mean[p] = kernels::mean(cache.std_cols[p]);
    cache.col_var[p] = kernels::variance_pop_given_mean(cache.std_cols[p], cache.col_mean[p]);
  }
  return cache;
}

// Full inner sum for candidate at position pos: k = sum over j != i of
// min(0, mi_diff)^2, j ascending. Runs identically on the sequential and
// parallel paths; bit-equality between the two is a consequence of this
// being the single implementation. The pair covariance is computed once
// and shared by both residual directions (the elementwise products
// commute exactly).
double candidate_score(const RoundCache& cache, std::size_t pos) {
  thread_local std::vector<double> ri_j;
  thread_local std::vector<double> rj_i;
  const auto& xi = cache.std_cols[pos];
  double k = 0.0;
  for (std::size_t q = 0; q < cache.std_cols.size(); ++q) {
    if (q == pos) continue;
    const auto& xj = cache.std_cols[q];
    const double cov = kernels::covariance_pop_given_means(xi, xj, cache.col_mean[pos],
                                                           cache.col_var.empty()
                                                               ? 0.0
                                                               : cache.col_mean[q]);
    kernels::residual_into(xi, xj, cov / cache.col_var[q], ri_j);
    kernels::residual_into(xj, xi, cov / cache.col_var[pos], rj_i);
    const double favor_i = cache.col_entropy[q] + kernels::entropy_of_normalized(ri_j);
    const double favor_j = cache.col_entropy[pos] + kernels::entropy_of_normalized(rj_i);
    const double mi_diff = favor_i - favor_j;
    const double clipped = std::min(0.0, mi_diff);
    k += clipped * clipped;
  }
  return -k;
}

SearchResult search_impl(const DataMatrix& X, std::span<const int> U, int workers) {
  const std::vector<int> u = sorted_candidates(X, U);
  KScores scores;
  scores.scores.assign(static_cast<std::size_t>(X.dims()),
                       -std::numeric_limits<double>::infinity());

  if (u.size() == 1) {
    scores.scores[static_cast<std::size_t>(u[0])] = 0.0;
    return {u[0], std::move(scores)};
  }

  const RoundCache cache = build_cache(X, u);

  const std::size_t n = u.size();
  const auto nthreads = static_cast<std::size_t>(
      std::clamp<std::size_t>(static_cast<std::size_t>(workers), 1, n));

  if (nthreads == 1) {
    for (std::size_t p = 0; p < n; ++p) {
      scores.scores[static_cast<std::size_t>(u[p])] = candidate_score(cache, p);
    }
  } else {
    // Static contiguous partition; each worker owns disjoint score slots,
    // so no synchronization is needed for the writes.
    std::vector<std::exception_ptr> errors(nthreads);
    std::vector<std::thread> pool;
    pool.reserve(nthreads - 1);
    const std::size_t base = n / nthreads;
    const std::size_t rem = n % nthreads;
    auto chunk_begin = [&](std::size_t c) { return c * base + std::min(c, rem); };

    auto run_chunk = [&](std::size_t c) {
      try {
        const std::size_t lo = chunk_begin(c);
        const std::size_t hi = chunk_begin(c + 1);
        for (std::size_t p = lo; p < hi; ++p) {
          scores.scores[static_cast<std::size_t>(u[p])] = candidate_score(cache, p);
        }
      } catch (...) {
        errors[c] = std::current_exception();
      }
    };

    for (std::size_t c = 1; c < nthreads; ++c) pool.emplace_back(run_chunk, c);
    run_chunk(0);
    for (auto& t : pool) t.join();
    // Chunks are ascending, so the lowest erroring chunk reproduces the
    // error the sequential path would have hit first.
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  std::size_t best = 0;
  for (std::size_t p = 1; p < n; ++p) {
    if (scores.scores[static_cast<std::size_t>(u[p])] >
        scores.scores[static_cast<std::size_t>(u[best])]) {
      best = p;
    }
  }
  return {u[best], std::move(scores)};
}

}  // namespace

SearchResult search_causal_order(const DataMatrix& X, std::span<const int> U) {
  return search_impl(X, U, 1);
}

SearchResult search_causal_order_parallel(const DataMatrix& X, std::span<const int> U,
                                          int workers) {
  if (workers < 1) {
    throw Error(ErrorCode::OutOfRange, "search_causal_order_parallel: workers must be >= 1");
  }
  return search_impl(X, U, workers);
}

DataMatrix regress_out(const DataMatrix& X, int exog, std::span<const int> remaining) {
  if (exog < 0 || exog >= X.dims()) {
    throw Error(ErrorCode::InvalidIndex, "regress_out: exog index out of range", -1, exog);
  }
  Eigen::MatrixXd out(X.samples(), static_cast<Eigen::Index>(remaining.size()));
  std::vector<std::string> names;
  names.reserve(remaining.size());
  const auto exog_col = X.col(exog);
  for (std::size_t p = 0; p < remaining.size(); ++p) {
    const int r = remaining[p];
    if (r < 0 || r >= X.dims()) {
      throw Error(ErrorCode::InvalidIndex, "regress_out: remaining index out of range", -1, r);
    }
    if (r == exog) {
      throw Error(ErrorCode::InvalidIndex, "regress_out: exog cannot appear in remaining", -1, r);
    }
    std::vector<double> res;
    try {
      res = kernels::residual(X.col(r), exog_col);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ZeroVariance) {
        throw Error(ErrorCode::ZeroVariance,
                    "regress_out: exogenous column " + std::to_string(exog) +
                        " has zero variance",
                    -1, exog);
      }
      throw;
    }
    out.col(static_cast<Eigen::Index>(p)) =
        Eigen::Map<const Eigen::VectorXd>(res.data(), static_cast<Eigen::Index>(res.size()));
    names.push_back(X.var_names[static_cast<std::size_t>(r)]);
  }
  return DataMatrix(std::move(out), std::move(names));
}

CausalOrder causal_order(const DataMatrix& X, bool parallel, int workers) {
  validate(X);
  if (workers < 1) {
    throw Error(ErrorCode::OutOfRange, "causal_order: workers must be >= 1");
  }

  DataMatrix working = X;
  std::vector<int> u(static_cast<std::size_t>(X.dims()));
  for (std::size_t p = 0; p < u.size(); ++p) u[p] = static_cast<int>(p);

  CausalOrder result;
  result.order.reserve(u.size());

  while (u.size() > 1) {
    const SearchResult found =
        parallel ? search_causal_order_parallel(working, u, workers)
                 : search_causal_order(working, u);
    std::vector<int> remaining;
    remaining.reserve(u.size() - 1);
    for (int v : u) {
      if (v != found.chosen) remaining.push_back(v);
    }
    const DataMatrix residuals = regress_out(working, found.chosen, remaining);
    for (std::size_t p = 0; p < remaining.size(); ++p) {
      working.values.col(remaining[p]) = residuals.values.col(static_cast<Eigen::Index>(p));
    }
    result.order.push_back(found.chosen);
    u = std::move(remaining);
  }
  result.order.push_back(u[0]);
  return result;
}

}  // namespace plingam
