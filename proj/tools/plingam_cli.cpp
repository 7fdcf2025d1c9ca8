#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <thread>

#include "plingam/bench.hpp"
#include "plingam/csv.hpp"
#include "plingam/direct_lingam.hpp"
#include "plingam/metrics.hpp"
#include "plingam/preprocess.hpp"
#include "plingam/simgen.hpp"
#include "plingam/var_lingam.hpp"
#include "plingam/version.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace plingam;

namespace {

// Worker-count default: --workers flag > PLINGAM_WORKERS env > core count.
int default_workers() {
  if (const char* env = std::getenv("PLINGAM_WORKERS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

json manifest(const std::string& command, const json& config, const std::string& input_digest) {
  return json{{"command", command},
              {"config", config},
              {"input_digest", input_digest},
              {"artifact_version", kVersion}};
}

void write_json(const fs::path& path, const json& doc) {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorCode::IoError, "cannot write " + path.string());
  }
  out << doc.dump() << '\n';
}

// -------------------------------------------------------------------------
// simulate

struct SimulateArgs {
  int dims = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  double edge_prob = 0.5;
  double noise_lo = 0.0;
  double noise_hi = 1.0;
  std::string out_data = "data.csv";
  std::string out_truth = "truth.csv";
};

int run_simulate(const SimulateArgs& args) {
  if (args.dims < 2) {
    throw Error(ErrorCode::InvalidFlags, "simulate: --dims must be >= 2");
  }
  if (args.samples < 2) {
    throw Error(ErrorCode::InvalidFlags, "simulate: --samples must be >= 2");
  }
  SimSpec spec;
  spec.dims = args.dims;
  spec.samples = args.samples;
  spec.seed = args.seed;
  spec.edge_prob = args.edge_prob;
  spec.noise = {args.noise_lo, args.noise_hi};

  const WeightedDag truth = gen_two_level_dag(spec);
  const DataMatrix data = sample_lingam(truth, spec);
  write_csv(args.out_data, data.var_names, data.values);
  write_adjacency(args.out_truth, truth.weights, data.var_names);

  const json config{{"dims", args.dims},           {"samples", args.samples},
                    {"seed", args.seed},           {"edge_prob", args.edge_prob},
                    {"noise_lo", args.noise_lo},   {"noise_hi", args.noise_hi},
                    {"out_data", args.out_data},   {"out_truth", args.out_truth}};
  json report;
  report["manifest"] = manifest("simulate", config, "-");
  report["files"] = {args.out_data, args.out_truth};
  report["n_edges"] = static_cast<int>(to_edges(truth, 0.0).edges.size());
  std::cout << report.dump() << '\n';
  return 0;
}

// -------------------------------------------------------------------------
// discover

struct DiscoverArgs {
  std::string input;
  bool parallel = false;
  int workers = 0;
  double threshold = 0.05;
  std::string out = ".";
};

int run_discover(const DiscoverArgs& args) {
  const CsvTable table = read_csv(args.input);
  DataMatrix data(table.values, table.header);

  DirectLingamConfig cfg;
  cfg.parallel = args.parallel;
  cfg.workers = args.workers >= 1 ? args.workers : default_workers();
  cfg.edge_threshold = args.threshold;

  FitPhases phases;
  const WeightedDag dag = DirectLingam(cfg).fit(data, phases);

  fs::create_directories(args.out);
  const fs::path out_dir(args.out);
  write_adjacency(out_dir / "adjacency.csv", dag.weights, data.var_names);
  write_order(out_dir / "order.txt", dag.order);

  const json config{{"input", args.input},       {"out", args.out},
                    {"parallel", cfg.parallel},  {"workers", cfg.workers},
                    {"threshold", args.threshold}};
  json report;
  report["manifest"] = manifest("discover", config, digest_file(args.input));
  report["dims"] = static_cast<int>(data.dims());
  report["samples"] = static_cast<int>(data.samples());
  report["order"] = dag.order.order;
  report["n_edges"] = static_cast<int>(to_edges(dag, args.threshold).edges.size());
  report["used_pinv"] = dag.used_pinv;
  report["ordering_seconds"] = phases.ordering_seconds;
  report["total_seconds"] = phases.total_seconds;
  write_json(out_dir / "report.json", report);
  std::cout << report.dump() << '\n';
  return 0;
}

// -------------------------------------------------------------------------
// var-discover

struct VarDiscoverArgs {
  std::string input;
  int lag = 1;
  bool interpolate = false;
  bool difference = false;
  double threshold = 0.05;
  int top = 5;
  bool parallel = false;
  int workers = 0;
  std::string out = ".";
};

int run_var_discover(const VarDiscoverArgs& args) {
  if (args.lag < 1) {
    throw Error(ErrorCode::InvalidFlags, "var-discover: --lag must be >= 1");
  }
  const CsvTable table = read_csv(args.input, /*allow_missing=*/true);

  // optional leading timestamp column named "t"
  TimeSeries ts;
  Eigen::VectorXd timestamps;
  bool has_timestamps = !table.header.empty() && table.header[0] == "t";
  if (has_timestamps) {
    timestamps = table.values.col(0);
    if (!timestamps.allFinite()) {
      throw Error(ErrorCode::ParseError, "var-discover: timestamp column contains missing values");
    }
    ts.values = table.values.rightCols(table.values.cols() - 1);
    ts.var_names.assign(table.header.begin() + 1, table.header.end());
  } else {
    timestamps.setLinSpaced(table.values.rows(), 0.0,
                            static_cast<double>(table.values.rows() - 1));
    ts.values = table.values;
    ts.var_names = table.header;
  }

  // fixed preprocessing order: interpolate -> drop incomplete -> difference
  std::vector<std::string> steps;
  if (args.interpolate) {
    ts.values = interpolate_missing(ts.values, timestamps);
    steps.push_back("interpolate");
  }
  std::vector<std::string> dropped;
  ts = drop_incomplete_columns(ts, dropped);
  steps.push_back("drop_incomplete");
  if (ts.dims() == 0) {
    throw Error(ErrorCode::EmptyAfterPreprocessing,
                "var-discover: no complete columns left after preprocessing");
  }
  const Eigen::Index rows_in = ts.rows();
  if (args.difference) {
    ts = first_difference(ts);
    steps.push_back("first_difference");
  }

  DirectLingamConfig cfg;
  cfg.parallel = args.parallel;
  cfg.workers = args.workers >= 1 ? args.workers : default_workers();
  cfg.edge_threshold = args.threshold;
  const VarModel model = fit_varlingam(ts, args.lag, cfg);

  fs::create_directories(args.out);
  const fs::path out_dir(args.out);
  write_adjacency(out_dir / "b0.csv", model.b0.weights, ts.var_names);
  for (int tau = 1; tau <= model.lag; ++tau) {
    write_adjacency(out_dir / ("b_lag" + std::to_string(tau) + ".csv"),
                    model.b_lagged[static_cast<std::size_t>(tau - 1)], ts.var_names);
    write_adjacency(out_dir / ("m_lag" + std::to_string(tau) + ".csv"),
                    model.m_raw[static_cast<std::size_t>(tau - 1)], ts.var_names);
  }

  const DegreeDistribution degrees = degree_distribution(model.b0, args.threshold);
  {
    std::ofstream deg(out_dir / "degrees.csv");
    if (!deg) {
      throw Error(ErrorCode::IoError, "cannot write degrees.csv");
    }
    deg << "variable,in_degree,out_degree\n";
    for (Eigen::Index v = 0; v < ts.dims(); ++v) {
      deg << ts.var_names[static_cast<std::size_t>(v)] << ','
          << degrees.in_degrees[static_cast<std::size_t>(v)] << ','
          << degrees.out_degrees[static_cast<std::size_t>(v)] << '\n';
    }
  }

  const InfluenceRanking ranking = influence_ranking(model, args.threshold, args.top);
  auto ranking_json = [&](const std::vector<InfluenceEntry>& entries) {
    json arr = json::array();
    for (const auto& e : entries) {
      arr.push_back({{"variable", ts.var_names[static_cast<std::size_t>(e.var)]},
                     {"lag", e.lag},
                     {"score", e.score}});
    }
    return arr;
  };
  {
    std::ofstream infl(out_dir / "influence.jsonl");
    if (!infl) {
      throw Error(ErrorCode::IoError, "cannot write influence.jsonl");
    }
    infl << json{{"kind", "exerting"}, {"entries", ranking_json(ranking.exerting)}}.dump() << '\n';
    infl << json{{"kind", "receiving"}, {"entries", ranking_json(ranking.receiving)}}.dump()
         << '\n';
  }

  const json config{{"input", args.input},     {"out", args.out},
                    {"lag", args.lag},         {"interpolate", args.interpolate},
                    {"difference", args.difference}, {"threshold", args.threshold},
                    {"top", args.top},         {"parallel", cfg.parallel},
                    {"workers", cfg.workers}};
  json report;
  report["manifest"] = manifest("var-discover", config, digest_file(args.input));
  report["preprocessing"] = steps;
  report["dropped_columns"] = dropped;
  report["dims_used"] = static_cast<int>(ts.dims());
  report["rows_before_difference"] = static_cast<int>(rows_in);
  report["rows_used"] = static_cast<int>(ts.rows());
  report["order"] = model.b0.order.order;
  report["n_instantaneous_edges"] =
      static_cast<int>(to_edges(model.b0, args.threshold).edges.size());
  report["used_pinv"] = model.b0.used_pinv;
  write_json(out_dir / "report.json", report);
  std::cout << report.dump() << '\n';
  return 0;
}

// -------------------------------------------------------------------------
// metrics

struct MetricsArgs {
  std::string est;
  std::string truth;
  double threshold = 0.05;
};

EdgeSet edges_from_adjacency(const Eigen::MatrixXd& w, double threshold) {
  WeightedDag dag;
  dag.weights = w;
  return to_edges(dag, threshold);
}

int run_metrics(const MetricsArgs& args) {
  const CsvTable est = read_csv(args.est);
  const CsvTable truth = read_csv(args.truth);
  if (est.values.rows() != est.values.cols() || truth.values.rows() != truth.values.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "metrics: adjacency files must be square");
  }
  if (est.values.rows() != truth.values.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "metrics: est and truth dimensions differ");
  }
  const int d = static_cast<int>(est.values.rows());
  // the same threshold applies to both files, so identical inputs always
  // compare as a perfect match
  const MetricsReport report = compare_graphs(edges_from_adjacency(est.values, args.threshold),
                                              edges_from_adjacency(truth.values, args.threshold),
                                              d);

  const json config{{"est", args.est}, {"truth", args.truth}, {"threshold", args.threshold}};
  json out;
  out["manifest"] = manifest("metrics", config, digest_file(args.est));
  out["truth_digest"] = digest_file(args.truth);
  out["f1"] = report.f1;
  out["precision"] = report.precision;
  out["recall"] = report.recall;
  out["shd"] = report.shd;
  out["n_true_edges"] = report.n_true_edges;
  out["n_est_edges"] = report.n_est_edges;
  std::cout << out.dump() << '\n';
  return 0;
}

// -------------------------------------------------------------------------
// bench

struct BenchArgs {
  std::vector<int> dims{10};
  std::vector<int> samples{1000};
  std::vector<int> workers;
  int seeds = 1;
  int warmup = 3;
  int reps = 5;
  std::string out;
};

int run_bench(const BenchArgs& args_in) {
  BenchArgs args = args_in;
  if (args.workers.empty()) args.workers = {default_workers()};

  std::ofstream file;
  std::ostream* sink = &std::cout;
  if (!args.out.empty()) {
    file.open(args.out);
    if (!file) {
      throw Error(ErrorCode::IoError, "cannot write " + args.out);
    }
    sink = &file;
  }

  const json config{{"dims", args.dims},   {"samples", args.samples}, {"workers", args.workers},
                    {"seeds", args.seeds}, {"warmup", args.warmup},   {"reps", args.reps}};
  *sink << json{{"manifest", manifest("bench", config, "-")}}.dump() << '\n';

  const auto reports = sweep(args.dims, args.samples, args.workers, args.seeds, args.warmup,
                             args.reps);
  for (const auto& r : reports) {
    const json line{{"dims", r.config.dims},
                    {"samples", r.config.samples},
                    {"workers", r.config.workers},
                    {"seeds", r.config.n_seeds},
                    {"total_seconds", r.total_seconds},
                    {"ordering_seconds", r.ordering_seconds},
                    {"ordering_fraction", r.ordering_fraction},
                    {"seq_seconds", r.seq_seconds},
                    {"par_seconds", r.par_seconds},
                    {"measured_speedup", r.measured_speedup},
                    {"amdahl_theoretical", r.amdahl_theoretical}};
    *sink << line.dump() << '\n';
  }
  return 0;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidFlags:
    case ErrorCode::OutOfRange:
      return 1;
    case ErrorCode::SingularDesign:
    case ErrorCode::UnstableSystem:
      return 3;
    default:
      return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LiNGAM causal discovery with a deterministic data-parallel ordering path"};
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Generate two-level LiNGAM data + ground truth");
  simulate->add_option("--dims", sim.dims, "Number of variables (>= 2)")->required();
  simulate->add_option("--samples", sim.samples, "Number of samples")->required();
  simulate->add_option("--seed", sim.seed, "RNG seed");
  simulate->add_option("--edge-prob", sim.edge_prob, "Cross-level edge probability");
  simulate->add_option("--noise-lo", sim.noise_lo, "Uniform noise lower bound");
  simulate->add_option("--noise-hi", sim.noise_hi, "Uniform noise upper bound");
  simulate->add_option("--out-data", sim.out_data, "Output data CSV");
  simulate->add_option("--out-truth", sim.out_truth, "Output truth adjacency CSV");

  DiscoverArgs disc;
  auto* discover = app.add_subcommand("discover", "DirectLiNGAM on a CSV dataset");
  discover->add_option("--input", disc.input, "Input data CSV")->required();
  discover->add_flag("--parallel", disc.parallel, "Use the parallel ordering path");
  discover->add_option("--workers", disc.workers, "Worker threads (default: PLINGAM_WORKERS or core count)");
  discover->add_option("--threshold", disc.threshold, "Edge threshold for the report");
  discover->add_option("--out", disc.out, "Output directory");

  VarDiscoverArgs var;
  auto* var_discover = app.add_subcommand("var-discover", "VarLiNGAM on a time-series CSV");
  var_discover->add_option("--input", var.input, "Input time-series CSV (optional 't' column)")->required();
  var_discover->add_option("--lag", var.lag, "VAR lag");
  var_discover->add_flag("--interpolate", var.interpolate, "Time-based linear interpolation of interior gaps");
  var_discover->add_flag("--difference", var.difference, "First-difference the series");
  var_discover->add_option("--threshold", var.threshold, "Edge threshold");
  var_discover->add_option("--top", var.top, "Influence ranking size");
  var_discover->add_flag("--parallel", var.parallel, "Use the parallel ordering path");
  var_discover->add_option("--workers", var.workers, "Worker threads");
  var_discover->add_option("--out", var.out, "Output directory");

  MetricsArgs met;
  auto* metrics = app.add_subcommand("metrics", "Compare two adjacency CSVs");
  metrics->add_option("--est", met.est, "Estimated adjacency CSV")->required();
  metrics->add_option("--truth", met.truth, "Ground-truth adjacency CSV")->required();
  metrics->add_option("--threshold", met.threshold, "Edge threshold applied to both files");

  BenchArgs ben;
  auto* bench = app.add_subcommand("bench", "Timing sweep over simulated configurations");
  bench->add_option("--dims", ben.dims, "Dimension list")->delimiter(',');
  bench->add_option("--samples", ben.samples, "Sample-count list")->delimiter(',');
  bench->add_option("--workers", ben.workers, "Worker list")->delimiter(',');
  bench->add_option("--seeds", ben.seeds, "Seeds averaged per configuration");
  bench->add_option("--warmup", ben.warmup, "Untimed warmup runs");
  bench->add_option("--reps", ben.reps, "Timed reps (median reported)");
  bench->add_option("--out", ben.out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
    if (*simulate) return run_simulate(sim);
    if (*discover) return run_discover(disc);
    if (*var_discover) return run_var_discover(var);
    if (*metrics) return run_metrics(met);
    if (*bench) return run_bench(ben);
    return 1;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
