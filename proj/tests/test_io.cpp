#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "sparseph/io.hpp"
#include "sparseph/sim.hpp"
#include "sparseph/svg.hpp"

using namespace sparseph;

namespace {

BettiCurve three_node_curve() {
  return BettiCurve{{{0.0, 1}, {0.2, 1}, {0.5, 2}, {0.9, 3}}, 1.0};
}

}  // namespace

TEST_CASE("edge weights round-trip through JSON bit for bit") {
  const auto w = random_graph(7, 0.6, 9);
  const auto back = edge_weights_from_json(Json::parse(to_json(w).dump()));
  CHECK(back.mode == w.mode);
  CHECK(back.weights.packed() == w.weights.packed());
}

TEST_CASE("edge weights CSV is the full symmetric matrix") {
  PackedSymmetric s(3);
  s.set(0, 1, 0.5);
  s.set(1, 2, 0.25);
  std::ostringstream out;
  write_edge_weights_csv(out, EdgeWeights{WeightMode::Correlation, s});
  CHECK(out.str() == "0,0.5,0\n0.5,0,0.25\n0,0.25,0\n");
}

TEST_CASE("filtration CSV lists every level") {
  PackedSymmetric s(3);
  s.set(0, 1, 0.5);
  s.set(0, 2, 0.5);
  s.set(1, 2, 0.75);
  std::ostringstream out;
  write_filtration_csv(out, build_filtration(EdgeWeights{WeightMode::Correlation, s}));
  CHECK(out.str() == "level,lambda,edges\n0,0,3\n1,0.5,1\n2,0.75,0\n");
}

TEST_CASE("Betti curve CSV and JSON") {
  const auto c = three_node_curve();
  std::ostringstream out;
  write_betti_curve_csv(out, c);
  CHECK(out.str() == "lambda,beta0\n0,1\n0.20000000000000001,1\n0.5,2\n"
                     "0.90000000000000002,3\n");
  CHECK(betti_curve_from_json(Json::parse(to_json(c).dump())) == c);
}

TEST_CASE("replicate curves CSV is long format") {
  std::ostringstream out;
  write_replicate_curves_csv(out, "group1", {three_node_curve()}, true);
  const auto text = out.str();
  CHECK(text.rfind("group,replicate,lambda,beta0\n", 0) == 0);
  CHECK(text.find("group1,1,0.5,2\n") != std::string::npos);
}

TEST_CASE("comparison result JSON keys and AUC CSV") {
  GroupComparisonResult r;
  r.auc_group1 = {{1.0, 2.0}, "group1", 1.0};
  r.auc_group2 = {{3.0}, "group2", 1.0};
  r.rank_sum_statistic = 3.0;
  r.p_value = 2.0 / 3.0;
  r.method = RankSumMethod::ExactEnumeration;
  r.warnings = {"careful"};
  const auto j = to_json(r);
  for (const char* key :
       {"p_value", "statistic", "method", "auc1", "auc2", "domain_max", "warnings"}) {
    CHECK_MESSAGE(j.contains(key), key);
  }
  CHECK(j["method"] == "exact");
  CHECK(j["auc1"].size() == 2);
  CHECK(j["p_value"].get<double>() == r.p_value);

  std::ostringstream out;
  write_auc_csv(out, r);
  CHECK(out.str() == "group,replicate,auc\ngroup1,1,1\ngroup1,2,2\ngroup2,1,3\n");
  CHECK(summary_text(r).find("exact") != std::string::npos);
}

TEST_CASE("sparse solution JSON has a symmetric gamma") {
  SparseSolution s{PackedSymmetric(3), 0.1};
  s.gamma.set(0, 2, 0.4);
  const auto j = to_json(s);
  CHECK(j["lambda"].get<double>() == 0.1);
  CHECK(j["gamma"][0][2].get<double>() == 0.4);
  CHECK(j["gamma"][2][0].get<double>() == 0.4);
}

TEST_CASE("manifest round-trips") {
  RunManifest m;
  m.command = "simulate";
  m.inputs = {"a.csv"};
  m.mode = "correlation";
  m.domain_max = 1.0;
  m.seed = 18446744073709551615ULL;
  m.tool_version = "0.1.0";
  m.duration_seconds = 0.125;
  m.parameters = {{"study", 2}};
  m.outputs = {"group1.csv"};
  CHECK(manifest_from_json(Json::parse(to_json(m).dump())) == m);

  RunManifest bare;
  bare.command = "filtrate";
  const auto j = to_json(bare);
  CHECK(j["schema_version"] == 1);
  CHECK(manifest_from_json(j) == bare);
}

TEST_CASE("SVG output is deterministic and escapes text") {
  auto make = [] {
    StepPlot plot("a < b & c");
    plot.add(three_node_curve(), SeriesStyle{}, "x\"y");
    plot.add(three_node_curve(), SeriesStyle{"#d62728", "4 2"}, "x\"y");
    return plot.render();
  };
  const auto svg = make();
  CHECK(svg == make());
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("a &lt; b &amp; c") != std::string::npos);
  CHECK(svg.find("a < b") == std::string::npos);
  CHECK(svg.find("x&quot;y") != std::string::npos);
  CHECK(svg.find("stroke-dasharray=\"4 2\"") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
}
