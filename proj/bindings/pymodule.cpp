#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "plingam/bench.hpp"
#include "plingam/direct_lingam.hpp"
#include "plingam/kernels.hpp"
#include "plingam/metrics.hpp"
#include "plingam/ordering.hpp"
#include "plingam/simgen.hpp"
#include "plingam/var_lingam.hpp"
#include "plingam/version.hpp"

namespace py = pybind11;
using namespace plingam;

namespace {

DataMatrix to_data(const Eigen::MatrixXd& values) { return DataMatrix(values); }

DirectLingamConfig make_config(bool parallel, int workers, double edge_threshold) {
  DirectLingamConfig cfg;
  cfg.parallel = parallel;
  cfg.workers = workers;
  cfg.edge_threshold = edge_threshold;
  return cfg;
}

SimSpec make_spec(int dims, int samples, std::uint64_t seed, double edge_prob,
                  std::pair<double, double> noise) {
  SimSpec spec;
  spec.dims = dims;
  spec.samples = samples;
  spec.seed = seed;
  spec.edge_prob = edge_prob;
  spec.noise = {noise.first, noise.second};
  return spec;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "LiNGAM causal discovery with a deterministic data-parallel ordering path";
  m.attr("__version__") = kVersion;

  py::register_exception<Error>(m, "Error");

  py::class_<WeightedDag>(m, "WeightedDag")
      .def_readonly("weights", &WeightedDag::weights)
      .def_property_readonly("order",
                             [](const WeightedDag& d) { return d.order.order; })
      .def_readonly("used_pinv", &WeightedDag::used_pinv)
      .def("__repr__", [](const WeightedDag& d) {
        return "<WeightedDag dims=" + std::to_string(d.dims()) + ">";
      });

  py::class_<VarModel>(m, "VarModel")
      .def_readonly("b0", &VarModel::b0)
      .def_readonly("b_lagged", &VarModel::b_lagged)
      .def_readonly("m_raw", &VarModel::m_raw)
      .def_readonly("lag", &VarModel::lag);

  py::class_<MetricsReport>(m, "MetricsReport")
      .def_readonly("f1", &MetricsReport::f1)
      .def_readonly("precision", &MetricsReport::precision)
      .def_readonly("recall", &MetricsReport::recall)
      .def_readonly("shd", &MetricsReport::shd)
      .def_readonly("n_true_edges", &MetricsReport::n_true_edges)
      .def_readonly("n_est_edges", &MetricsReport::n_est_edges)
      .def("__repr__", [](const MetricsReport& r) {
        return "<MetricsReport f1=" + std::to_string(r.f1) + " shd=" + std::to_string(r.shd) +
               ">";
      });

  py::class_<BenchReport>(m, "BenchReport")
      .def_readonly("total_seconds", &BenchReport::total_seconds)
      .def_readonly("ordering_seconds", &BenchReport::ordering_seconds)
      .def_readonly("ordering_fraction", &BenchReport::ordering_fraction)
      .def_readonly("seq_seconds", &BenchReport::seq_seconds)
      .def_readonly("par_seconds", &BenchReport::par_seconds)
      .def_readonly("measured_speedup", &BenchReport::measured_speedup)
      .def_readonly("amdahl_theoretical", &BenchReport::amdahl_theoretical);

  // kernels
  m.def("standardize",
        [](const std::vector<double>& x) { return kernels::standardize(x); },
        py::arg("x"));
  m.def("residual",
        [](const std::vector<double>& xi, const std::vector<double>& xj) {
          return kernels::residual(xi, xj);
        },
        py::arg("xi"), py::arg("xj"));
  m.def("entropy_approx",
        [](const std::vector<double>& u) { return kernels::entropy_approx(u); }, py::arg("u"));
  m.def("diff_mutual_info",
        [](const std::vector<double>& xi, const std::vector<double>& xj,
           const std::vector<double>& ri, const std::vector<double>& rj) {
          return kernels::diff_mutual_info(xi, xj, ri, rj);
        },
        py::arg("xi_std"), py::arg("xj_std"), py::arg("ri_j"), py::arg("rj_i"));

  // ordering
  m.def(
      "causal_order",
      [](const Eigen::MatrixXd& X, bool parallel, int workers) {
        return causal_order(to_data(X), parallel, workers).order;
      },
      py::arg("X"), py::arg("parallel") = false, py::arg("workers") = 1,
      "Recursive causal ordering; the parallel path is bit-identical.");
  m.def(
      "search_causal_order",
      [](const Eigen::MatrixXd& X, const std::vector<int>& U, int workers) {
        const DataMatrix data = to_data(X);
        const SearchResult res = workers > 1 ? search_causal_order_parallel(data, U, workers)
                                             : search_causal_order(data, U);
        return py::make_tuple(res.chosen, res.scores.scores);
      },
      py::arg("X"), py::arg("U"), py::arg("workers") = 1);

  // DirectLiNGAM / VarLiNGAM
  m.def(
      "fit_direct_lingam",
      [](const Eigen::MatrixXd& X, bool parallel, int workers, double edge_threshold) {
        return DirectLingam(make_config(parallel, workers, edge_threshold)).fit(to_data(X));
      },
      py::arg("X"), py::arg("parallel") = false, py::arg("workers") = 1,
      py::arg("edge_threshold") = 0.05);
  m.def(
      "to_edges",
      [](const WeightedDag& dag, double threshold) {
        std::vector<std::pair<int, int>> edges(to_edges(dag, threshold).edges.begin(),
                                               to_edges(dag, threshold).edges.end());
        return edges;
      },
      py::arg("dag"), py::arg("threshold") = 0.05);
  m.def(
      "fit_var_lingam",
      [](const Eigen::MatrixXd& X, int lag, bool parallel, int workers) {
        TimeSeries ts;
        ts.values = X;
        ts.var_names = default_var_names(X.cols());
        return fit_varlingam(ts, lag, make_config(parallel, workers, 0.05));
      },
      py::arg("X"), py::arg("lag") = 1, py::arg("parallel") = false, py::arg("workers") = 1);
  m.def(
      "estimate_var",
      [](const Eigen::MatrixXd& X, int lag) {
        TimeSeries ts;
        ts.values = X;
        ts.var_names = default_var_names(X.cols());
        const VarEstimate est = estimate_var(ts, lag);
        return py::make_tuple(est.m_raw, est.residuals.values);
      },
      py::arg("X"), py::arg("lag") = 1);

  // simulation
  m.def(
      "gen_two_level_dag",
      [](int dims, std::uint64_t seed, double edge_prob) {
        return gen_two_level_dag(make_spec(dims, 2, seed, edge_prob, {0.0, 1.0}));
      },
      py::arg("dims"), py::arg("seed") = 0, py::arg("edge_prob") = 0.5);
  m.def(
      "sample_lingam",
      [](const WeightedDag& dag, int samples, std::uint64_t seed,
         std::pair<double, double> noise) {
        return sample_lingam(dag, make_spec(dag.dims(), samples, seed, 0.5, noise)).values;
      },
      py::arg("dag"), py::arg("samples"), py::arg("seed") = 0,
      py::arg("noise") = std::pair<double, double>{0.0, 1.0});
  m.def(
      "sample_svar",
      [](const WeightedDag& b0, const std::vector<Eigen::MatrixXd>& lagged, int T, int burn_in,
         std::uint64_t seed, std::pair<double, double> noise) {
        return sample_svar(b0, lagged, T, burn_in, make_spec(2, 2, seed, 0.5, noise)).values;
      },
      py::arg("b0"), py::arg("lagged"), py::arg("T"), py::arg("burn_in") = 100,
      py::arg("seed") = 0, py::arg("noise") = std::pair<double, double>{0.0, 1.0});

  // metrics
  m.def(
      "compare_adjacency",
      [](const Eigen::MatrixXd& est, const Eigen::MatrixXd& truth, double est_threshold,
         double truth_threshold) {
        if (est.rows() != est.cols() || truth.rows() != truth.cols() ||
            est.rows() != truth.rows()) {
          throw Error(ErrorCode::DimensionMismatch, "compare_adjacency: shape mismatch");
        }
        WeightedDag de;
        de.weights = est;
        WeightedDag dt;
        dt.weights = truth;
        return compare_graphs(to_edges(de, est_threshold), to_edges(dt, truth_threshold),
                              static_cast<int>(est.rows()));
      },
      py::arg("est"), py::arg("truth"), py::arg("est_threshold") = 0.05,
      py::arg("truth_threshold") = 0.0);
  m.def(
      "asymmetry_direction",
      [](const std::vector<double>& x, const std::vector<double>& y) {
        const AsymmetryResult res = asymmetry_direction(x, y);
        return py::make_tuple(res.direction == Direction::XcausesY ? "x->y" : "y->x", res.score);
      },
      py::arg("x"), py::arg("y"));

  // benchmarking
  m.def("amdahl_speedup", &amdahl_speedup, py::arg("p"));
  m.def("profile_fit", &profile_fit, py::arg("dims"), py::arg("samples"), py::arg("seed") = 0,
        py::arg("workers") = 1, py::arg("warmup") = 3, py::arg("reps") = 5,
        py::call_guard<py::gil_scoped_release>());

  m.def(
      "degree_distribution",
      [](const WeightedDag& b0, double threshold) {
        const DegreeDistribution deg = degree_distribution(b0, threshold);
        return py::make_tuple(deg.in_degrees, deg.out_degrees);
      },
      py::arg("b0"), py::arg("threshold") = 0.05);
  m.def(
      "influence_ranking",
      [](const VarModel& model, double threshold, int top_n) {
        const InfluenceRanking r = influence_ranking(model, threshold, top_n);
        auto pack = [](const std::vector<InfluenceEntry>& entries) {
          std::vector<std::tuple<int, int, double>> out;
          out.reserve(entries.size());
          for (const auto& e : entries) out.emplace_back(e.var, e.lag, e.score);
          return out;
        };
        return py::make_tuple(pack(r.exerting), pack(r.receiving));
      },
      py::arg("model"), py::arg("threshold") = 0.05, py::arg("top_n") = 5);
}
