#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sparseph/data.hpp"
#include "sparseph/sim.hpp"

namespace sparseph::cli {

struct FiltrateOptions {
  std::string input;
  bool header = false;
  WeightMode mode = WeightMode::Correlation;
  std::optional<double> domain_max;
  std::string out_dir;
  /// "csv" writes betti_curve.csv, "json" writes betti_curve.json.
  std::string curve_format = "csv";
};

struct CompareOptions {
  std::string input1;
  std::string input2;
  bool header = false;
  WeightMode mode = WeightMode::Correlation;
  std::optional<double> domain_max;
  std::string out_dir;
};

struct SimulateOptions {
  int study = 1;
  SimConfig config;
  std::string out_dir;
};

struct BenchOptions {
  std::size_t p = 548;
  std::size_t n = 54;
  std::uint64_t seed = 0;
};

struct BenchReport {
  std::size_t p = 0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::size_t edges = 0;
  std::size_t levels = 0;
  double seconds = 0.0;
};

/// Files written by each command, relative to the output directory.
inline const std::vector<std::string> kCompareFiles = {
    "replicate_curves.csv", "auc.csv",     "result.json",
    "summary.txt",          "overlay.svg", "manifest.json"};
inline const std::vector<std::string> kSimulateFiles = {
    "group1.csv", "group2.csv", "manifest.json"};
std::vector<std::string> filtrate_files(const std::string& curve_format);

/// Each command computes everything first, then writes its files. On any
/// failure the files it wrote are removed and the error propagates.
/// Returns the paths written.
std::vector<std::string> cmd_filtrate(const FiltrateOptions& opts);
std::vector<std::string> cmd_compare(const CompareOptions& opts,
                                     std::ostream& summary_out);
std::vector<std::string> cmd_simulate(const SimulateOptions& opts);
/// Times normalize -> weights -> filtration -> Betti curve on n x p standard
/// normal data. Data generation is not timed.
BenchReport cmd_bench(const BenchOptions& opts);

/// Entry point of the `sparseph` executable. Returns the process exit code:
/// 0 on success, 1 for a pipeline error, CLI11's code for usage errors.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace sparseph::cli
