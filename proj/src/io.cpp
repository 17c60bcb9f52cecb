#include "sparseph/io.hpp"

#include <algorithm>
#include <sstream>

#include "sparseph/error.hpp"
#include "sparseph/format.hpp"

namespace sparseph {

void write_edge_weights_csv(std::ostream& out, const EdgeWeights& w) {
  for (std::size_t j = 0; j < w.p(); ++j) {
    for (std::size_t k = 0; k < w.p(); ++k) {
      out << (k ? "," : "") << format_real(w(j, k));
    }
    out << '\n';
  }
}

Json to_json(const EdgeWeights& w) {
  Json rows = Json::array();
  for (std::size_t j = 0; j < w.p(); ++j) {
    Json row = Json::array();
    for (std::size_t k = 0; k < w.p(); ++k) row.push_back(w(j, k));
    rows.push_back(std::move(row));
  }
  return {{"mode", std::string(to_string(w.mode))}, {"p", w.p()}, {"weights", rows}};
}

EdgeWeights edge_weights_from_json(const Json& j) {
  const auto p = j.at("p").get<std::size_t>();
  EdgeWeights w{parse_weight_mode(j.at("mode").get<std::string>()),
                PackedSymmetric(p)};
  const auto& rows = j.at("weights");
  if (rows.size() != p) throw InvalidArgument("weights must have p rows");
  for (std::size_t r = 0; r < p; ++r) {
    if (rows[r].size() != p) throw InvalidArgument("weights must be p x p");
    for (std::size_t k = r + 1; k < p; ++k) {
      w.weights.set(r, k, rows[r][k].get<double>());
    }
  }
  return w;
}

void write_filtration_csv(std::ostream& out, const Filtration& f) {
  out << "level,lambda,edges\n";
  std::size_t removed = 0;
  out << 0 << ',' << format_real(0.0) << ',' << f.edges.size() << '\n';
  for (std::size_t r = 0; r < f.values.size(); ++r) {
    while (removed < f.edges.size() && f.edges[removed].weight <= f.values[r]) {
      ++removed;
    }
    out << r + 1 << ',' << format_real(f.values[r]) << ','
        << f.edges.size() - removed << '\n';
  }
}

void write_betti_curve_csv(std::ostream& out, const BettiCurve& c) {
  out << "lambda,beta0\n";
  for (const auto& b : c.breakpoints) {
    out << format_real(b.lambda) << ',' << b.beta0 << '\n';
  }
}

Json to_json(const BettiCurve& c) {
  Json bps = Json::array();
  for (const auto& b : c.breakpoints) bps.push_back(Json::array({b.lambda, b.beta0}));
  return {{"domain_max", c.domain_max}, {"breakpoints", bps}};
}

BettiCurve betti_curve_from_json(const Json& j) {
  BettiCurve c;
  c.domain_max = j.at("domain_max").get<double>();
  for (const auto& b : j.at("breakpoints")) {
    c.breakpoints.push_back({b.at(0).get<double>(), b.at(1).get<std::size_t>()});
  }
  return c;
}

void write_replicate_curves_csv(std::ostream& out, const std::string& group,
                                const std::vector<BettiCurve>& curves,
                                bool with_header) {
  if (with_header) out << "group,replicate,lambda,beta0\n";
  for (std::size_t r = 0; r < curves.size(); ++r) {
    for (const auto& b : curves[r].breakpoints) {
      out << group << ',' << r + 1 << ',' << format_real(b.lambda) << ','
          << b.beta0 << '\n';
    }
  }
}

void write_auc_csv(std::ostream& out, const GroupComparisonResult& r) {
  out << "group,replicate,auc\n";
  for (const auto* s : {&r.auc_group1, &r.auc_group2}) {
    for (std::size_t i = 0; i < s->areas.size(); ++i) {
      out << s->group_label << ',' << i + 1 << ',' << format_real(s->areas[i])
          << '\n';
    }
  }
}

Json to_json(const GroupComparisonResult& r) {
  return {{"p_value", r.p_value},
          {"statistic", r.rank_sum_statistic},
          {"method", std::string(to_string(r.method))},
          {"auc1", r.auc_group1.areas},
          {"auc2", r.auc_group2.areas},
          {"domain_max", r.auc_group1.domain_max},
          {"warnings", r.warnings}};
}

namespace {

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t h = v.size() / 2;
  return v.size() % 2 ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

}  // namespace

std::string summary_text(const GroupComparisonResult& r) {
  std::ostringstream s;
  s << "Wilcoxon rank-sum test on jackknife Betti-curve areas\n"
    << "  " << r.auc_group1.group_label << ": " << r.auc_group1.areas.size()
    << " replicates, median area " << format_real(median(r.auc_group1.areas)) << '\n'
    << "  " << r.auc_group2.group_label << ": " << r.auc_group2.areas.size()
    << " replicates, median area " << format_real(median(r.auc_group2.areas)) << '\n'
    << "  integration domain [0, " << format_real(r.auc_group1.domain_max) << "]\n"
    << "  rank-sum statistic W = " << format_real(r.rank_sum_statistic) << '\n'
    << "  two-sided p-value = " << format_real(r.p_value) << " ("
    << to_string(r.method) << ")\n";
  for (const auto& w : r.warnings) s << "  warning: " << w << '\n';
  return s.str();
}

Json to_json(const SparseSolution& s) {
  Json rows = Json::array();
  for (std::size_t j = 0; j < s.p(); ++j) {
    Json row = Json::array();
    for (std::size_t k = 0; k < s.p(); ++k) row.push_back(s.gamma(j, k));
    rows.push_back(std::move(row));
  }
  return {{"lambda", s.lambda}, {"p", s.p()}, {"gamma", rows}};
}

Json to_json(const RunManifest& m) {
  Json j = {{"schema_version", m.schema_version},
            {"command", m.command},
            {"inputs", m.inputs},
            {"tool_version", m.tool_version},
            {"duration_seconds", m.duration_seconds},
            {"parameters", m.parameters},
            {"outputs", m.outputs}};
  j["mode"] = m.mode ? Json(*m.mode) : Json(nullptr);
  j["domain_max"] = m.domain_max ? Json(*m.domain_max) : Json(nullptr);
  j["seed"] = m.seed ? Json(*m.seed) : Json(nullptr);
  return j;
}

RunManifest manifest_from_json(const Json& j) {
  RunManifest m;
  m.schema_version = j.at("schema_version").get<int>();
  if (m.schema_version != RunManifest::kSchemaVersion) {
    throw InvalidArgument("unsupported manifest schema_version " +
                          std::to_string(m.schema_version));
  }
  m.command = j.at("command").get<std::string>();
  m.inputs = j.at("inputs").get<std::vector<std::string>>();
  m.tool_version = j.at("tool_version").get<std::string>();
  m.duration_seconds = j.at("duration_seconds").get<double>();
  m.parameters = j.value("parameters", Json::object());
  m.outputs = j.value("outputs", std::vector<std::string>{});
  if (!j.at("mode").is_null()) m.mode = j.at("mode").get<std::string>();
  if (!j.at("domain_max").is_null()) m.domain_max = j.at("domain_max").get<double>();
  if (!j.at("seed").is_null()) m.seed = j.at("seed").get<std::uint64_t>();
  return m;
}

}  // namespace sparseph
