#include "sparseph/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "sparseph/error.hpp"
#include "sparseph/filtration.hpp"
#include "sparseph/inference.hpp"
#include "sparseph/io.hpp"
#include "sparseph/svg.hpp"
#include "sparseph/version.hpp"

namespace sparseph::cli {

namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Files are staged in memory and written together by commit(). If commit
// does not finish, everything it wrote is removed again, along with the
// output directory when this run created it.
class OutputSet {
 public:
  explicit OutputSet(fs::path dir) : dir_(std::move(dir)) {}
  OutputSet(const OutputSet&) = delete;
  OutputSet& operator=(const OutputSet&) = delete;

  ~OutputSet() {
    if (committed_) return;
    std::error_code ec;
    for (const auto& p : written_) fs::remove(p, ec);
    if (created_dir_) fs::remove(dir_, ec);  // only succeeds when empty
  }

  void stage(std::string name, std::string content) {
    staged_.emplace_back(std::move(name), std::move(content));
  }

  std::vector<std::string> commit() {
    if (!fs::exists(dir_)) created_dir_ = fs::create_directories(dir_);
    std::vector<std::string> paths;
    for (const auto& [name, content] : staged_) {
      const fs::path path = dir_ / name;
      std::ofstream out(path, std::ios::binary);
      if (!out) throw Error("cannot write " + path.string());
      written_.push_back(path);
      out << content;
      out.close();
      if (!out) throw Error("failed writing " + path.string());
      paths.push_back(path.string());
    }
    committed_ = true;
    return paths;
  }

 private:
  fs::path dir_;
  std::vector<std::pair<std::string, std::string>> staged_;
  std::vector<fs::path> written_;
  bool created_dir_ = false;
  bool committed_ = false;
};

template <class Writer>
std::string render(Writer&& write) {
  std::ostringstream s;
  write(s);
  return s.str();
}

RunManifest base_manifest(std::string command, std::vector<std::string> inputs) {
  RunManifest m;
  m.command = std::move(command);
  m.inputs = std::move(inputs);
  m.tool_version = kVersion;
  return m;
}

void require_out_dir(const std::string& out_dir) {
  if (out_dir.empty()) throw InvalidArgument("an output directory (--out) is required");
}

std::string manifest_text(const RunManifest& m) { return to_json(m).dump(2) + "\n"; }

}  // namespace

std::vector<std::string> filtrate_files(const std::string& curve_format) {
  return {"edge_weights.csv", "filtration.csv", "betti_curve." + curve_format,
          "betti_plot.svg", "manifest.json"};
}

std::vector<std::string> cmd_filtrate(const FiltrateOptions& opts) {
  require_out_dir(opts.out_dir);
  if (opts.curve_format != "csv" && opts.curve_format != "json") {
    throw InvalidArgument("curve format must be csv or json");
  }
  const auto start = Clock::now();
  const DataMatrix X = load_csv(opts.input, opts.header);
  const EdgeWeights w = edge_weights(X, opts.mode);
  const Filtration f = build_filtration(w);
  const double domain = opts.domain_max.value_or(default_domain_max(w));
  const BettiCurve curve = betti_curve(f, domain);

  StepPlot plot("Betti curve: " + fs::path(opts.input).filename().string());
  plot.add(curve, SeriesStyle{}, "beta0");

  const auto files = filtrate_files(opts.curve_format);
  OutputSet out(opts.out_dir);
  out.stage(files[0], render([&](std::ostream& s) { write_edge_weights_csv(s, w); }));
  out.stage(files[1], render([&](std::ostream& s) { write_filtration_csv(s, f); }));
  out.stage(files[2], opts.curve_format == "csv"
                          ? render([&](std::ostream& s) { write_betti_curve_csv(s, curve); })
                          : to_json(curve).dump(2) + "\n");
  out.stage(files[3], plot.render());

  RunManifest m = base_manifest("filtrate", {opts.input});
  m.mode = std::string(to_string(opts.mode));
  m.domain_max = domain;
  m.parameters = {{"n", X.n()}, {"p", X.p()}, {"levels", f.levels()},
                  {"header", opts.header}};
  m.outputs = files;
  m.duration_seconds = seconds_since(start);
  out.stage(files[4], manifest_text(m));
  return out.commit();
}

std::vector<std::string> cmd_compare(const CompareOptions& opts,
                                     std::ostream& summary_out) {
  require_out_dir(opts.out_dir);
  const auto start = Clock::now();
  const DataMatrix X = load_csv(opts.input1, opts.header);
  const DataMatrix Y = load_csv(opts.input2, opts.header);
  const auto cmp = compare_groups_detailed(X, Y, opts.mode, opts.domain_max);
  const auto& r = cmp.result;

  StepPlot plot("Jackknife Betti curves");
  const SeriesStyle g1{"#1f77b4", "", 1.2, 0.7};
  const SeriesStyle g2{"#d62728", "5,3", 1.2, 0.7};
  for (const auto& c : cmp.curves1) plot.add(c, g1, "group 1");
  for (const auto& c : cmp.curves2) plot.add(c, g2, "group 2");

  OutputSet out(opts.out_dir);
  out.stage(kCompareFiles[0], render([&](std::ostream& s) {
              write_replicate_curves_csv(s, "group1", cmp.curves1, true);
              write_replicate_curves_csv(s, "group2", cmp.curves2, false);
            }));
  out.stage(kCompareFiles[1], render([&](std::ostream& s) { write_auc_csv(s, r); }));
  out.stage(kCompareFiles[2], to_json(r).dump(2) + "\n");
  const std::string summary = summary_text(r);
  out.stage(kCompareFiles[3], summary);
  out.stage(kCompareFiles[4], plot.render());

  RunManifest m = base_manifest("compare", {opts.input1, opts.input2});
  m.mode = std::string(to_string(opts.mode));
  m.domain_max = r.auc_group1.domain_max;
  m.parameters = {{"n1", X.n()}, {"n2", Y.n()}, {"p", X.p()},
                  {"header", opts.header}};
  m.outputs = kCompareFiles;
  m.duration_seconds = seconds_since(start);
  out.stage(kCompareFiles[5], manifest_text(m));
  auto paths = out.commit();
  summary_out << summary;
  return paths;
}

std::vector<std::string> cmd_simulate(const SimulateOptions& opts) {
  require_out_dir(opts.out_dir);
  if (opts.study != 1 && opts.study != 2) {
    throw InvalidConfig("study must be 1 or 2");
  }
  const auto start = Clock::now();
  const auto& cfg = opts.config;
  const GroupPair g = opts.study == 1 ? simulate_study1(cfg) : simulate_study2(cfg);

  OutputSet out(opts.out_dir);
  out.stage(kSimulateFiles[0],
            render([&](std::ostream& s) { write_csv(s, g.group1, false); }));
  out.stage(kSimulateFiles[1],
            render([&](std::ostream& s) { write_csv(s, g.group2, false); }));

  RunManifest m = base_manifest("simulate", {});
  m.seed = cfg.seed;
  m.parameters = {{"study", opts.study},
                  {"n", cfg.n},
                  {"m", cfg.m},
                  {"p", cfg.p},
                  {"noise_sd", cfg.noise_sd},
                  {"dependency_coefficient", cfg.dependency_coefficient},
                  {"seed", cfg.seed},
                  {"rng", std::string(Rng::kName)}};
  m.outputs = kSimulateFiles;
  m.duration_seconds = seconds_since(start);
  out.stage(kSimulateFiles[2], manifest_text(m));
  return out.commit();
}

BenchReport cmd_bench(const BenchOptions& opts) {
  if (opts.p < 2) throw InvalidArgument("bench needs p >= 2");
  if (opts.n < 2) throw InvalidArgument("bench needs n >= 2");
  const DataMatrix X = random_normal_matrix(opts.n, opts.p, opts.seed);
  const auto start = Clock::now();
  const EdgeWeights w = edge_weights(normalize_columns(X));
  const Filtration f = build_filtration(w);
  const BettiCurve curve = betti_curve(f, 1.0);
  BenchReport r;
  r.seconds = seconds_since(start);
  r.p = opts.p;
  r.n = opts.n;
  r.seed = opts.seed;
  r.edges = f.edges.size();
  r.levels = curve.breakpoints.size();
  return r;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sparse-correlation graph filtrations, Betti curves and "
               "jackknife group comparison"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  const auto mode_check = CLI::IsMember({"correlation", "covariance"}, CLI::ignore_case);

  FiltrateOptions fopt;
  std::string f_mode = "correlation";
  double f_domain = 0.0;
  auto* filtrate = app.add_subcommand(
      "filtrate",
      "Edge weights, maximal filtration and Betti curve of one group.\n"
      "Writes edge_weights.csv, filtration.csv, betti_curve.csv (or .json),\n"
      "betti_plot.svg and manifest.json into --out.");
  filtrate->add_option("input", fopt.input, "Subjects x nodes CSV")->required();
  filtrate->add_flag("--header", fopt.header, "First CSV row holds node labels");
  filtrate->add_option("--mode", f_mode, "correlation or covariance")
      ->check(mode_check)
      ->capture_default_str();
  auto* f_domain_opt = filtrate->add_option(
      "--domain-max", f_domain, "Upper end of the lambda domain (default: 1 for "
      "correlation, largest weight for covariance)");
  filtrate->add_option("--out", fopt.out_dir, "Output directory")->required();
  filtrate->add_option("--curve-format", fopt.curve_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  CompareOptions copt;
  std::string c_mode = "correlation";
  double c_domain = 0.0;
  auto* compare = app.add_subcommand(
      "compare",
      "Jackknife Betti curves of two groups and a rank-sum test on their areas.\n"
      "Writes replicate_curves.csv, auc.csv, result.json, summary.txt,\n"
      "overlay.svg and manifest.json into --out.");
  compare->add_option("input1", copt.input1, "Group 1 CSV")->required();
  compare->add_option("input2", copt.input2, "Group 2 CSV")->required();
  compare->add_flag("--header", copt.header, "First CSV row holds node labels");
  compare->add_option("--mode", c_mode, "correlation or covariance")
      ->check(mode_check)
      ->capture_default_str();
  auto* c_domain_opt = compare->add_option(
      "--domain-max", c_domain, "Upper end of the integration domain (default: 1 "
      "for correlation, largest replicate weight for covariance)");
  compare->add_option("--out", copt.out_dir, "Output directory")->required();

  SimulateOptions sopt;
  auto* simulate = app.add_subcommand(
      "simulate",
      "Generate the two-group simulation data.\n"
      "Writes group1.csv, group2.csv (no header) and manifest.json into --out.");
  simulate->add_option("--study", sopt.study, "1: no group difference, "
                       "2: planted dependency among nodes 1-5")
      ->required()
      ->check(CLI::IsMember({1, 2}));
  simulate->add_option("--n", sopt.config.n, "Group 1 size")->capture_default_str();
  simulate->add_option("--m", sopt.config.m, "Group 2 size")->capture_default_str();
  simulate->add_option("--p", sopt.config.p, "Node count")->capture_default_str();
  simulate->add_option("--noise-sd", sopt.config.noise_sd, "Perturbation sd")
      ->capture_default_str();
  simulate->add_option("--dependency", sopt.config.dependency_coefficient,
                       "Study 2 dependency coefficient")
      ->capture_default_str();
  simulate->add_option("--seed", sopt.config.seed, "RNG seed")->capture_default_str();
  simulate->add_option("--out", sopt.out_dir, "Output directory")->required();

  BenchOptions bopt;
  auto* bench = app.add_subcommand(
      "bench", "Time normalize, weights, filtration and Betti curve on random "
               "data. Prints a JSON report.");
  bench->add_option("--p", bopt.p, "Node count")->capture_default_str();
  bench->add_option("--n", bopt.n, "Subject count")->capture_default_str();
  bench->add_option("--seed", bopt.seed, "RNG seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*filtrate) {
      fopt.mode = parse_weight_mode(f_mode);
      if (f_domain_opt->count()) fopt.domain_max = f_domain;
      for (const auto& p : cmd_filtrate(fopt)) out << p << '\n';
    } else if (*compare) {
      copt.mode = parse_weight_mode(c_mode);
      if (c_domain_opt->count()) copt.domain_max = c_domain;
      cmd_compare(copt, out);
    } else if (*simulate) {
      for (const auto& p : cmd_simulate(sopt)) out << p << '\n';
    } else if (*bench) {
      const auto r = cmd_bench(bopt);
      out << Json{{"p", r.p},         {"n", r.n},
                  {"seed", r.seed},   {"edges", r.edges},
                  {"levels", r.levels}, {"seconds", r.seconds}}
                 .dump()
          << '\n';
    }
  } catch (const std::exception& e) {
    err << "sparseph: error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace sparseph::cli
