#include <optional>
#include <string>

#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sparseph/data.hpp"
#include "sparseph/error.hpp"
#include "sparseph/filtration.hpp"
#include "sparseph/inference.hpp"
#include "sparseph/io.hpp"
#include "sparseph/sim.hpp"
#include "sparseph/sparse.hpp"
#include "sparseph/version.hpp"

namespace py = pybind11;
using namespace sparseph;

namespace {

EdgeWeights weights_from_dense(const Eigen::MatrixXd& m, WeightMode mode) {
  if (m.rows() != m.cols()) throw InvalidArgument("weight matrix must be square");
  const auto p = static_cast<std::size_t>(m.rows());
  EdgeWeights w{mode, PackedSymmetric(p)};
  for (std::size_t j = 0; j < p; ++j) {
    for (std::size_t k = j + 1; k < p; ++k) {
      const auto a = m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k));
      const auto b = m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j));
      if (a != b) throw InvalidArgument("weight matrix must be symmetric");
      if (!(a >= 0.0)) throw InvalidArgument("weights must be nonnegative");
      w.weights.set(j, k, a);
    }
  }
  return w;
}

Eigen::MatrixXd adjacency_dense(const SupportGraph& g) {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(g.p),
                                              static_cast<Eigen::Index>(g.p));
  for (std::size_t j = 0; j < g.p; ++j) {
    for (std::size_t k = 0; k < g.p; ++k) {
      out(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) =
          g.edge(j, k) ? 1.0 : 0.0;
    }
  }
  return out;
}

void python_warning(std::string_view msg) {
  py::module_::import("warnings").attr("warn")(std::string(msg));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Sparse-correlation graph filtrations, Betti-0 curves and "
            "jackknife rank-sum group comparison";
  m.attr("__version__") = kVersion;

  py::register_exception<Error>(m, "SparsephError", PyExc_ValueError);

  py::enum_<WeightMode>(m, "WeightMode")
      .value("Correlation", WeightMode::Correlation)
      .value("Covariance", WeightMode::Covariance);

  py::class_<DataMatrix>(m, "DataMatrix")
      .def(py::init<Eigen::MatrixXd, std::vector<std::string>, std::vector<std::string>>(),
           py::arg("values"), py::arg("col_labels") = std::vector<std::string>{},
           py::arg("row_labels") = std::vector<std::string>{})
      .def_property_readonly("n", &DataMatrix::n)
      .def_property_readonly("p", &DataMatrix::p)
      .def_property_readonly("values", &DataMatrix::values)
      .def_property_readonly("col_labels", &DataMatrix::col_labels)
      .def_property_readonly("row_labels", &DataMatrix::row_labels);

  py::class_<NormalizedMatrix>(m, "NormalizedMatrix")
      .def_property_readonly("n", &NormalizedMatrix::n)
      .def_property_readonly("p", &NormalizedMatrix::p)
      .def_property_readonly("values", &NormalizedMatrix::values);

  py::class_<EdgeWeights>(m, "EdgeWeights")
      .def_static("from_dense", &weights_from_dense, py::arg("matrix"),
                  py::arg("mode") = WeightMode::Correlation)
      .def_readonly("mode", &EdgeWeights::mode)
      .def_property_readonly("p", &EdgeWeights::p)
      .def("dense", [](const EdgeWeights& w) { return w.weights.dense(); })
      .def("max_weight", &EdgeWeights::max_weight)
      .def("to_json", [](const EdgeWeights& w) { return to_json(w).dump(); });

  m.def("load_csv", &load_csv, py::arg("path"), py::arg("has_header") = false);
  m.def("normalize_columns", &normalize_columns, py::arg("X"));
  m.def("edge_weights", py::overload_cast<const DataMatrix&, WeightMode>(&edge_weights),
        py::arg("X"), py::arg("mode") = WeightMode::Correlation);

  py::class_<SparseSolution>(m, "SparseSolution")
      .def_readonly("lambda_", &SparseSolution::lambda)
      .def_property_readonly("gamma",
                             [](const SparseSolution& s) { return s.gamma.dense(); });
  py::class_<SupportGraph>(m, "SupportGraph")
      .def_readonly("lambda_", &SupportGraph::lambda)
      .def_property_readonly("adjacency", &adjacency_dense)
      .def("edge_count", &SupportGraph::edge_count);

  m.def("soft_threshold", &soft_threshold, py::arg("c"), py::arg("lam"));
  m.def("oracle_minimize", &oracle_minimize, py::arg("c"), py::arg("lam"));
  m.def("sparse_correlation",
        py::overload_cast<const NormalizedMatrix&, double>(&sparse_correlation),
        py::arg("Z"), py::arg("lam"));
  m.def("support_graph", &support_graph, py::arg("solution"));
  m.def("component_count", &component_count, py::arg("graph"));

  py::class_<Filtration>(m, "Filtration")
      .def_readonly("p", &Filtration::p)
      .def_readonly("values", &Filtration::values)
      .def("levels", &Filtration::levels)
      .def_property_readonly("edges", [](const Filtration& f) {
        py::list out;
        for (const auto& e : f.edges) out.append(py::make_tuple(e.j, e.k, e.weight));
        return out;
      });

  py::class_<BettiCurve>(m, "BettiCurve")
      .def_readonly("domain_max", &BettiCurve::domain_max)
      .def_property_readonly("breakpoints", [](const BettiCurve& c) {
        py::list out;
        for (const auto& b : c.breakpoints) out.append(py::make_tuple(b.lambda, b.beta0));
        return out;
      })
      .def("value_at", &BettiCurve::value_at, py::arg("lam"))
      .def("to_json", [](const BettiCurve& c) { return to_json(c).dump(); })
      .def("__eq__", [](const BettiCurve& a, const BettiCurve& b) { return a == b; });

  m.def("build_filtration", &build_filtration, py::arg("weights"));
  m.def("betti0_at", &betti0_at, py::arg("weights"), py::arg("lam"));
  m.def("dfs_component_oracle", &dfs_component_oracle, py::arg("weights"),
        py::arg("lam"));
  m.def("betti_curve",
        py::overload_cast<const EdgeWeights&, std::optional<double>>(&betti_curve),
        py::arg("weights"), py::arg("domain_max") = py::none());
  m.def("tree_betti_oracle",
        [](const std::vector<double>& w, double domain_max) {
          return tree_betti_oracle(w, domain_max);
        },
        py::arg("tree_weights"), py::arg("domain_max") = 1.0);
  m.def("tree_betti_oracle",
        py::overload_cast<const EdgeWeights&, double>(&tree_betti_oracle),
        py::arg("weights"), py::arg("domain_max") = 1.0);

  py::enum_<RankSumMethod>(m, "RankSumMethod")
      .value("ExactEnumeration", RankSumMethod::ExactEnumeration)
      .value("NormalApproximation", RankSumMethod::NormalApproximation);

  py::class_<GroupComparisonResult>(m, "GroupComparisonResult")
      .def_readonly("p_value", &GroupComparisonResult::p_value)
      .def_readonly("rank_sum_statistic", &GroupComparisonResult::rank_sum_statistic)
      .def_readonly("method", &GroupComparisonResult::method)
      .def_readonly("warnings", &GroupComparisonResult::warnings)
      .def_property_readonly("auc1",
                             [](const GroupComparisonResult& r) { return r.auc_group1.areas; })
      .def_property_readonly("auc2",
                             [](const GroupComparisonResult& r) { return r.auc_group2.areas; })
      .def_property_readonly("domain_max",
                             [](const GroupComparisonResult& r) {
                               return r.auc_group1.domain_max;
                             })
      .def("to_json", [](const GroupComparisonResult& r) { return to_json(r).dump(); })
      .def("summary", &summary_text);

  m.def("auc", &auc, py::arg("curve"));
  m.def("jackknife_curves",
        [](const DataMatrix& X, WeightMode mode, std::optional<double> domain_max) {
          return jackknife_curves(X, mode, domain_max, python_warning);
        },
        py::arg("X"), py::arg("mode") = WeightMode::Correlation,
        py::arg("domain_max") = py::none());
  m.def("rank_sum_test",
        [](const std::vector<double>& a, const std::vector<double>& b) {
          return rank_sum_test(AucSample{a, "group1", 1.0}, AucSample{b, "group2", 1.0});
        },
        py::arg("a"), py::arg("b"));
  m.def("compare_groups",
        [](const DataMatrix& X, const DataMatrix& Y, WeightMode mode,
           std::optional<double> domain_max) {
          return compare_groups(X, Y, mode, domain_max, python_warning);
        },
        py::arg("X"), py::arg("Y"), py::arg("mode") = WeightMode::Correlation,
        py::arg("domain_max") = py::none());

  py::class_<SimConfig>(m, "SimConfig")
      .def(py::init<>())
      .def_readwrite("n", &SimConfig::n)
      .def_readwrite("m", &SimConfig::m)
      .def_readwrite("p", &SimConfig::p)
      .def_readwrite("noise_sd", &SimConfig::noise_sd)
      .def_readwrite("dependency_coefficient", &SimConfig::dependency_coefficient)
      .def_readwrite("seed", &SimConfig::seed);

  m.def("simulate_study1",
        [](const SimConfig& cfg) {
          auto g = simulate_study1(cfg);
          return py::make_tuple(std::move(g.group1), std::move(g.group2));
        },
        py::arg("config"));
  m.def("simulate_study2",
        [](const SimConfig& cfg) {
          auto g = simulate_study2(cfg);
          return py::make_tuple(std::move(g.group1), std::move(g.group2));
        },
        py::arg("config"));
  m.def("random_tree", &random_tree, py::arg("p"), py::arg("seed"));
  m.def("random_graph", &random_graph, py::arg("p"), py::arg("density"),
        py::arg("seed"), py::arg("resolution") = 1'000'000u);
}
