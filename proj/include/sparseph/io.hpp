#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sparseph/data.hpp"
#include "sparseph/filtration.hpp"
#include "sparseph/inference.hpp"
#include "sparseph/sparse.hpp"

namespace sparseph {

using Json = nlohmann::json;

/// Full p x p matrix, both triangles written from the single stored value.
void write_edge_weights_csv(std::ostream& out, const EdgeWeights& w);
/// {"mode": ..., "p": ..., "weights": [[...], ...]}
Json to_json(const EdgeWeights& w);
EdgeWeights edge_weights_from_json(const Json& j);

/// Columns level, lambda, edges: one row per level, starting at level 0.
/// `edges` is the number of edges with weight > lambda.
void write_filtration_csv(std::ostream& out, const Filtration& f);

/// Columns lambda, beta0: one row per breakpoint.
void write_betti_curve_csv(std::ostream& out, const BettiCurve& c);
/// {"domain_max": ..., "breakpoints": [[lambda, beta0], ...]}
Json to_json(const BettiCurve& c);
BettiCurve betti_curve_from_json(const Json& j);

/// Long format: columns group, replicate, lambda, beta0.
void write_replicate_curves_csv(std::ostream& out, const std::string& group,
                                const std::vector<BettiCurve>& curves,
                                bool with_header);

/// Columns group, replicate, auc.
void write_auc_csv(std::ostream& out, const GroupComparisonResult& r);
/// {"p_value", "statistic", "method", "auc1", "auc2", "domain_max",
///  "warnings"}
Json to_json(const GroupComparisonResult& r);
std::string summary_text(const GroupComparisonResult& r);

/// {"lambda": ..., "p": ..., "gamma": [[...], ...]}
Json to_json(const SparseSolution& s);

/// Written next to every CLI output set as manifest.json.
struct RunManifest {
  static constexpr int kSchemaVersion = 1;

  int schema_version = kSchemaVersion;
  std::string command;
  std::vector<std::string> inputs;
  std::optional<std::string> mode;
  std::optional<double> domain_max;
  std::optional<std::uint64_t> seed;
  std::string tool_version;
  double duration_seconds = 0.0;
  /// Command-specific settings (simulation config, RNG identity, ...).
  Json parameters = Json::object();
  std::vector<std::string> outputs;

  friend bool operator==(const RunManifest&, const RunManifest&) = default;
};

Json to_json(const RunManifest& m);
RunManifest manifest_from_json(const Json& j);

}  // namespace sparseph
