#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <thread>

#include "doctest.h"
#include "helpers.hpp"
#include "plingam/kernels.hpp"
#include "plingam/ordering.hpp"
#include "plingam/simgen.hpp"

using namespace plingam;
namespace k = plingam::kernels;

namespace {

DataMatrix random_matrix(Rng& rng, int d, int m) {
  Eigen::MatrixXd v(m, d);
  for (int c = 0; c < d; ++c) {
    for (int r = 0; r < m; ++r) v(r, c) = rng.uniform(-1.0, 1.0);
  }
  return DataMatrix(std::move(v));
}

// Naive scoring straight from the kernel compositions; the implementation
// must reproduce these values bit for bit.
std::vector<double> naive_scores(const DataMatrix& X, const std::vector<int>& u) {
  std::vector<double> scores(static_cast<std::size_t>(X.dims()),
                             -std::numeric_limits<double>::infinity());
  for (int i : u) {
    const auto xi = k::standardize(X.col(i));
    double acc = 0.0;
    for (int j : u) {
      if (j == i) continue;
      const auto xj = k::standardize(X.col(j));
      const auto ri_j = k::residual(xi, xj);
      const auto rj_i = k::residual(xj, xi);
      const double mi = k::diff_mutual_info(xi, xj, ri_j, rj_i);
      const double c = std::min(0.0, mi);
      acc += c * c;
    }
    scores[static_cast<std::size_t>(i)] = -acc;
  }
  return scores;
}

DataMatrix two_level_data(std::uint64_t seed, int d, int m) {
  SimSpec spec;
  spec.dims = d;
  spec.samples = m;
  spec.seed = seed;
  return sample_lingam(gen_two_level_dag(spec), spec);
}

}  // namespace

TEST_SUITE("ordering") {

TEST_CASE("singleton candidate set returns immediately with score 0") {
  Rng rng(1);
  const DataMatrix X = random_matrix(rng, 3, 50);
  const std::vector<int> u{2};
  const SearchResult res = search_causal_order(X, u);
  CHECK(res.chosen == 2);
  CHECK(res.scores.scores[2] == 0.0);
  CHECK(std::isinf(res.scores.scores[0]));
}

TEST_CASE("scores match the naive kernel composition bit for bit") {
  Rng rng(2);
  for (int it = 0; it < 10; ++it) {
    const int d = 3 + static_cast<int>(rng.uniform() * 5);
    const DataMatrix X = random_matrix(rng, d, 200);
    std::vector<int> u(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) u[static_cast<std::size_t>(i)] = i;
    const SearchResult res = search_causal_order(X, u);
    const auto expected = naive_scores(X, u);
    for (int i = 0; i < d; ++i) {
      CHECK(res.scores.scores[static_cast<std::size_t>(i)] ==
            expected[static_cast<std::size_t>(i)]);
    }
  }
}

TEST_CASE("exogenous variable wins on a two-variable chain") {
  int correct = 0;
  for (int seed = 0; seed < 100; ++seed) {
    Rng rng(3000 + static_cast<std::uint64_t>(seed));
    Eigen::MatrixXd v(10000, 2);
    for (int t = 0; t < 10000; ++t) {
      v(t, 0) = rng.uniform();
      v(t, 1) = 0.8 * v(t, 0) + rng.uniform();
    }
    const DataMatrix X{std::move(v)};
    const std::vector<int> u{0, 1};
    if (search_causal_order(X, u).chosen == 0) correct++;
  }
  CHECK(correct >= 99);
}

TEST_CASE("a level-0 variable is chosen first on two-level data") {
  int correct = 0;
  for (int seed = 0; seed < 100; ++seed) {
    SimSpec spec;
    spec.dims = 10;
    spec.samples = 10000;
    spec.seed = 4000 + static_cast<std::uint64_t>(seed);
    const WeightedDag truth = gen_two_level_dag(spec);
    const DataMatrix X = sample_lingam(truth, spec);
    std::vector<int> u(10);
    for (int i = 0; i < 10; ++i) u[static_cast<std::size_t>(i)] = i;
    const int chosen = search_causal_order(X, u).chosen;
    // level-0 labels occupy the first ceil(d/2) order slots
    const auto& order = truth.order.order;
    const bool level0 = std::find(order.begin(), order.begin() + 5, chosen) != order.begin() + 5;
    if (level0) correct++;
  }
  CHECK(correct >= 95);
}

TEST_CASE("all candidate scores are non-positive and zero only without negative pairs") {
  Rng rng(7);
  for (int it = 0; it < 20; ++it) {
    const int d = 2 + static_cast<int>(rng.uniform() * 6);
    const DataMatrix X = random_matrix(rng, d, 150);
    std::vector<int> u(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) u[static_cast<std::size_t>(i)] = i;
    const SearchResult res = search_causal_order(X, u);
    for (int i : u) {
      const double s = res.scores.scores[static_cast<std::size_t>(i)];
      CHECK(s <= 0.0);
      if (s == 0.0) {
        // every pairwise mi_diff for this candidate must be >= 0
        const auto xi = k::standardize(X.col(i));
        for (int j : u) {
          if (j == i) continue;
          const auto xj = k::standardize(X.col(j));
          const auto ri_j = k::residual(xi, xj);
          const auto rj_i = k::residual(xj, xi);
          CHECK(k::diff_mutual_info(xi, xj, ri_j, rj_i) >= 0.0);
        }
      }
    }
  }
}

TEST_CASE("parallel search is bit-identical to sequential for many worker counts") {
  for (int seed = 0; seed < 100; ++seed) {
    Rng rng(5000 + static_cast<std::uint64_t>(seed));
    const int d = 2 + static_cast<int>(rng.uniform() * 19);   // up to 20
    const int m = 100 + static_cast<int>(rng.uniform() * 1901);  // up to ~2000
    const DataMatrix X = random_matrix(rng, d, m);
    std::vector<int> u(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) u[static_cast<std::size_t>(i)] = i;

    const SearchResult seq = search_causal_order(X, u);
    // every count for a sample of seeds, a spread of counts for the rest
    const bool full = seed < 10;
    for (int w = 1; w <= 32; ++w) {
      if (!full && w != 1 && w != 2 && w != 7 && w != 32) continue;
      const SearchResult par = search_causal_order_parallel(X, u, w);
      REQUIRE(par.chosen == seq.chosen);
      REQUIRE(testutil::bits_equal(par.scores.scores, seq.scores.scores));
    }
  }
}

TEST_CASE("parallel equivalence at the validation-protocol size") {
  const DataMatrix X = two_level_data(99, 10, 10000);
  std::vector<int> u(10);
  for (int i = 0; i < 10; ++i) u[static_cast<std::size_t>(i)] = i;
  const SearchResult seq = search_causal_order(X, u);
  for (int w : {2, 4, 8}) {
    const SearchResult par = search_causal_order_parallel(X, u, w);
    CHECK(par.chosen == seq.chosen);
    CHECK(testutil::bits_equal(par.scores.scores, seq.scores.scores));
  }
}

TEST_CASE("column scale does not change the argmax") {
  Rng rng(13);
  for (int it = 0; it < 20; ++it) {
    const int d = 3 + static_cast<int>(rng.uniform() * 5);
    DataMatrix X = random_matrix(rng, d, 300);
    std::vector<int> u(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) u[static_cast<std::size_t>(i)] = i;
    const int before = search_causal_order(X, u).chosen;
    const int col = static_cast<int>(rng.uniform() * d);
    X.values.col(col) *= rng.uniform(0.1, 50.0);
    CHECK(search_causal_order(X, u).chosen == before);
  }
}

TEST_CASE("search error paths") {
  Rng rng(15);
  const DataMatrix X = random_matrix(rng, 3, 50);
  CHECK_THROWS_AS((void)search_causal_order(X, std::vector<int>{}), Error);
  CHECK_THROWS_AS((void)search_causal_order(X, std::vector<int>{0, 3}), Error);
  CHECK_THROWS_AS((void)search_causal_order(X, std::vector<int>{0, 0}), Error);
  CHECK_THROWS_AS((void)search_causal_order_parallel(X, std::vector<int>{0, 1}, 0), Error);

  auto constant = X;
  constant.values.col(1).setConstant(4.0);
  try {
    (void)search_causal_order(constant, std::vector<int>{0, 1, 2});
    FAIL("expected ZeroVariance");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroVariance);
    CHECK(e.col() == 1);
  }
}

TEST_CASE("regress_out keeps orthogonal columns and preserves order") {
  DataMatrix X = testutil::make_matrix({{1, 1, 0.5}, {1, -1, 1.5}, {-1, 1, -0.5}, {-1, -1, 2.5}});
  // column 1 has exactly zero covariance with column 0
  const std::vector<int> remaining{1, 2};
  const DataMatrix R = regress_out(X, 0, remaining);
  CHECK(R.dims() == 2);
  CHECK(R.var_names[0] == "x1");
  CHECK(testutil::bits_equal(R.col(0), X.col(1)));
  CHECK(std::fabs(k::covariance_pop(R.col(1), X.col(0))) <=
        1e-10 * k::std_pop(X.col(2)) * k::std_pop(X.col(0)));
}

TEST_CASE("regress_out residuals are orthogonal to the exogenous column") {
  Rng rng(19);
  for (int it = 0; it < 30; ++it) {
    const int d = 3 + static_cast<int>(rng.uniform() * 5);
    const DataMatrix X = random_matrix(rng, d, 400);
    std::vector<int> remaining;
    for (int i = 1; i < d; ++i) remaining.push_back(i);
    const DataMatrix R = regress_out(X, 0, remaining);
    for (std::size_t p = 0; p < remaining.size(); ++p) {
      const double bound =
          1e-10 * k::std_pop(X.col(remaining[p])) * k::std_pop(X.col(0));
      CHECK(std::fabs(k::covariance_pop(R.col(static_cast<Eigen::Index>(p)), X.col(0))) <= bound);
    }
  }
}

TEST_CASE("regress_out of a generated effect recovers orthogonality") {
  Rng rng(21);
  Eigen::MatrixXd v(5000, 2);
  for (int t = 0; t < 5000; ++t) {
    v(t, 0) = rng.uniform();
    v(t, 1) = 0.8 * v(t, 0) + rng.uniform();
  }
  const DataMatrix X{std::move(v)};
  const DataMatrix R = regress_out(X, 0, std::vector<int>{1});
  CHECK(std::fabs(k::covariance_pop(R.col(0), X.col(0))) <= 1e-10);
}

TEST_CASE("regress_out error paths") {
  Rng rng(22);
  const DataMatrix X = random_matrix(rng, 3, 50);
  CHECK_THROWS_AS((void)regress_out(X, 0, std::vector<int>{0, 1}), Error);
  CHECK_THROWS_AS((void)regress_out(X, 5, std::vector<int>{0}), Error);

  auto constant = X;
  constant.values.col(0).setConstant(1.0);
  try {
    (void)regress_out(constant, 0, std::vector<int>{1, 2});
    FAIL("expected ZeroVariance");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroVariance);
    CHECK(e.col() == 0);
  }
}

TEST_CASE("a collinear duplicate column fails the next search round") {
  Rng rng(25);
  DataMatrix X = random_matrix(rng, 3, 100);
  X.values.col(2) = X.values.col(0);  // exact duplicate
  const DataMatrix R = regress_out(X, 0, std::vector<int>{1, 2});
  // the duplicate's residual is identically zero, so scoring cannot standardize it
  DataMatrix next = X;
  next.values.col(1) = R.values.col(0);
  next.values.col(2) = R.values.col(1);
  CHECK_THROWS_AS((void)search_causal_order(next, std::vector<int>{1, 2}), Error);
}

TEST_CASE("causal_order handles d=1") {
  const auto X = testutil::make_matrix({{1}, {2}, {3}});
  const CausalOrder ord = causal_order(X);
  CHECK(ord.order == std::vector<int>{0});
}

TEST_CASE("causal_order recovers a two-variable chain") {
  int correct = 0;
  for (int seed = 0; seed < 100; ++seed) {
    Rng rng(6000 + static_cast<std::uint64_t>(seed));
    Eigen::MatrixXd v(10000, 2);
    for (int t = 0; t < 10000; ++t) {
      v(t, 0) = rng.uniform();
      v(t, 1) = 0.8 * v(t, 0) + rng.uniform();
    }
    const DataMatrix X{std::move(v)};
    if (causal_order(X).order == std::vector<int>{0, 1}) correct++;
  }
  CHECK(correct >= 99);
}

TEST_CASE("causal_order respects two-level parentage") {
  int correct = 0;
  for (int seed = 0; seed < 100; ++seed) {
    SimSpec spec;
    spec.dims = 10;
    spec.samples = 10000;
    spec.seed = 7000 + static_cast<std::uint64_t>(seed);
    const WeightedDag truth = gen_two_level_dag(spec);
    const DataMatrix X = sample_lingam(truth, spec);
    const CausalOrder ord = causal_order(X);
    const auto pos = ord.positions();
    bool ok = true;
    for (int i = 0; i < 10 && ok; ++i) {
      for (int j = 0; j < 10 && ok; ++j) {
        if (truth.weights(i, j) != 0.0 && pos[static_cast<std::size_t>(j)] >
                                              pos[static_cast<std::size_t>(i)]) {
          ok = false;  // parent j must precede child i
        }
      }
    }
    if (ok) correct++;
  }
  CHECK(correct >= 90);
}

TEST_CASE("causal_order is a permutation even on gaussian data") {
  Rng rng(29);
  for (int it = 0; it < 10; ++it) {
    const int d = 2 + static_cast<int>(rng.uniform() * 6);
    Eigen::MatrixXd v(300, d);
    for (int c = 0; c < d; ++c) {
      for (int r = 0; r < 300; ++r) v(r, c) = rng.gauss();
    }
    const CausalOrder ord = causal_order(DataMatrix{std::move(v)});
    CHECK(ord.is_permutation());
  }
}

TEST_CASE("causal_order parallel path is bit-identical") {
  for (int seed = 0; seed < 20; ++seed) {
    Rng rng(8000 + static_cast<std::uint64_t>(seed));
    const int d = 3 + static_cast<int>(rng.uniform() * 10);
    const DataMatrix X = random_matrix(rng, d, 500);
    const CausalOrder seq = causal_order(X, false, 1);
    for (int w : {2, 5, 16}) {
      CHECK(causal_order(X, true, w).order == seq.order);
    }
  }
}

TEST_CASE("parallel search is faster than sequential when there is real work") {
  const DataMatrix X = two_level_data(123, 40, 4000);
  std::vector<int> u(40);
  for (int i = 0; i < 40; ++i) u[static_cast<std::size_t>(i)] = i;
  const int workers = std::max(2u, std::thread::hardware_concurrency());

  auto time_best_of = [&](auto&& fn) {
    double best = std::numeric_limits<double>::infinity();
    for (int rep = 0; rep < 3; ++rep) {
      const auto t0 = std::chrono::steady_clock::now();
      fn();
      best = std::min(best, std::chrono::duration<double>(
                                std::chrono::steady_clock::now() - t0)
                                .count());
    }
    return best;
  };

  const double seq = time_best_of([&] { (void)search_causal_order(X, u); });
  const double par =
      time_best_of([&] { (void)search_causal_order_parallel(X, u, workers); });
  CHECK(par < seq);
}

}  // TEST_SUITE
