#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "plingam/metrics.hpp"

using namespace plingam;

namespace {

EdgeSet make_edges(std::initializer_list<std::pair<int, int>> edges) {
  EdgeSet g;
  for (const auto& e : edges) g.edges.insert(e);
  return g;
}

EdgeSet random_graph(Rng& rng, int d, double p) {
  EdgeSet g;
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      if (a != b && rng.uniform() < p) g.edges.insert({a, b});
    }
  }
  return g;
}

// Independent SHD: connection state per unordered pair off a dense matrix.
int shd_oracle(const EdgeSet& a, const EdgeSet& b, int d) {
  std::vector<std::vector<bool>> ma(static_cast<std::size_t>(d),
                                    std::vector<bool>(static_cast<std::size_t>(d), false));
  auto mb = ma;
  for (auto [s, t] : a.edges) ma[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] = true;
  for (auto [s, t] : b.edges) mb[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] = true;
  int shd = 0;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      const auto si = static_cast<std::size_t>(i);
      const auto sj = static_cast<std::size_t>(j);
      if (ma[si][sj] != mb[si][sj] || ma[sj][si] != mb[sj][si]) shd++;
    }
  }
  return shd;
}

}  // namespace

TEST_SUITE("metrics") {

TEST_CASE("identity comparison is perfect") {
  const EdgeSet g = make_edges({{0, 1}, {1, 2}});
  const MetricsReport r = compare_graphs(g, g, 3);
  CHECK(r.f1 == 1.0);
  CHECK(r.recall == 1.0);
  CHECK(r.precision == 1.0);
  CHECK(r.shd == 0);
}

TEST_CASE("partial recovery from the worked example") {
  const MetricsReport r =
      compare_graphs(make_edges({{0, 1}}), make_edges({{0, 1}, {0, 2}}), 3);
  CHECK(r.precision == 1.0);
  CHECK(r.recall == 0.5);
  CHECK(r.f1 == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(r.shd == 1);
}

TEST_CASE("a reversed edge counts one by default, two when configured") {
  const EdgeSet est = make_edges({{1, 0}});
  const EdgeSet truth = make_edges({{0, 1}});
  const MetricsReport r = compare_graphs(est, truth, 2);
  CHECK(r.shd == 1);
  CHECK(r.precision == 0.0);
  CHECK(r.recall == 0.0);
  CHECK(r.f1 == 0.0);

  CHECK(compare_graphs(est, truth, 2, ShdConvention::ReversalAsTwo).shd == 2);
}

TEST_CASE("empty-graph conventions") {
  const EdgeSet empty;
  const EdgeSet truth = make_edges({{0, 1}});
  const MetricsReport r = compare_graphs(empty, truth, 2);
  CHECK(r.precision == 0.0);
  CHECK(r.recall == 0.0);
  CHECK(r.f1 == 0.0);

  const MetricsReport both_empty = compare_graphs(empty, empty, 3);
  CHECK(both_empty.f1 == 1.0);
  CHECK(both_empty.shd == 0);
}

TEST_CASE("identity, symmetry, bounds and the oracle over random graphs") {
  Rng rng(9);
  for (int it = 0; it < 200; ++it) {
    const int d = 2 + static_cast<int>(rng.uniform() * 4);  // up to 5
    const EdgeSet a = random_graph(rng, d, rng.uniform(0.0, 0.6));
    const EdgeSet b = random_graph(rng, d, rng.uniform(0.0, 0.6));
    const EdgeSet c = random_graph(rng, d, rng.uniform(0.0, 0.6));

    const MetricsReport self = compare_graphs(a, a, d);
    CHECK(self.shd == 0);
    CHECK(self.f1 == 1.0);

    const MetricsReport ab = compare_graphs(a, b, d);
    CHECK(ab.shd == compare_graphs(b, a, d).shd);
    CHECK(ab.shd == shd_oracle(a, b, d));
    CHECK(ab.precision >= 0.0);
    CHECK(ab.precision <= 1.0);
    CHECK(ab.recall >= 0.0);
    CHECK(ab.recall <= 1.0);
    CHECK(ab.f1 >= 0.0);
    CHECK(ab.f1 <= 1.0);

    // triangle inequality via the oracle
    CHECK(shd_oracle(a, c, d) <= shd_oracle(a, b, d) + shd_oracle(b, c, d));
    CHECK(ab.shd + compare_graphs(b, c, d).shd >= compare_graphs(a, c, d).shd);
  }
}

TEST_CASE("edge endpoints outside the graph are rejected") {
  CHECK_THROWS_AS((void)compare_graphs(make_edges({{0, 5}}), EdgeSet{}, 3), Error);
  CHECK_THROWS_AS((void)compare_graphs(EdgeSet{}, make_edges({{-1, 0}}), 3), Error);
}

TEST_CASE("asymmetry points from cause to effect on uniform noise") {
  int correct = 0;
  for (int seed = 0; seed < 30; ++seed) {
    Rng rng(400 + static_cast<std::uint64_t>(seed));
    std::vector<double> x(10000), y(10000);
    for (std::size_t t = 0; t < x.size(); ++t) {
      x[t] = rng.uniform();
      y[t] = 2.0 * x[t] + rng.uniform();
    }
    if (asymmetry_direction(x, y).direction == Direction::XcausesY) correct++;
  }
  CHECK(correct >= 29);
}

TEST_CASE("swapping the arguments flips the direction and negates the score") {
  Rng rng(17);
  const auto x = testutil::uniform_vec(rng, 2000);
  std::vector<double> y(x.size());
  for (std::size_t t = 0; t < x.size(); ++t) y[t] = 2.0 * x[t] + rng.uniform();

  const AsymmetryResult fwd = asymmetry_direction(x, y);
  const AsymmetryResult bwd = asymmetry_direction(y, x);
  CHECK(fwd.score == -bwd.score);
  CHECK(fwd.direction != bwd.direction);
}

TEST_CASE("asymmetry error paths") {
  const std::vector<double> a{1.0, 2.0, 3.0};
  const std::vector<double> b{1.0, 2.0};
  CHECK_THROWS_AS((void)asymmetry_direction(a, b), Error);
  const std::vector<double> c{1.0, 1.0, 1.0};
  CHECK_THROWS_AS((void)asymmetry_direction(a, c), Error);
}

}  // TEST_SUITE
