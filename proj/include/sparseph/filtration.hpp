#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sparseph/data.hpp"
#include "sparseph/sparse.hpp"

namespace sparseph {

struct WeightedEdge {
  std::uint32_t j = 0;
  std::uint32_t k = 0;
  double weight = 0.0;

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

/// Maximal graph filtration: the graph at level lambda keeps every edge with
/// weight strictly greater than lambda. Levels are 0 followed by each unique
/// nonzero edge weight, so there are values.size() + 1 of them.
struct Filtration {
  std::size_t p = 0;
  /// Unique nonzero edge weights, strictly increasing.
  std::vector<double> values;
  /// Nonzero-weight edges sorted by (weight, j, k).
  std::vector<WeightedEdge> edges;

  std::size_t levels() const { return values.size() + 1; }

  friend bool operator==(const Filtration&, const Filtration&) = default;
};

struct Breakpoint {
  double lambda = 0.0;
  std::size_t beta0 = 0;

  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

/// Right-continuous step function lambda -> beta0. breakpoints[0] is at 0;
/// the value on [lambda_r, lambda_{r+1}) is beta0_r, and the last value
/// holds up to domain_max.
struct BettiCurve {
  std::vector<Breakpoint> breakpoints;
  double domain_max = 1.0;

  /// Value at lambda; at a breakpoint this is the post-jump value.
  std::size_t value_at(double lambda) const;

  friend bool operator==(const BettiCurve&, const BettiCurve&) = default;
};

/// Unique-weight levels and sorted edge list. Equal weights (bitwise) share
/// one level; weight-0 pairs are never edges.
Filtration build_filtration(const EdgeWeights& w);

/// Connected components of the graph keeping edges with weight > lambda,
/// counting isolated vertices. Union-find over the edge set.
std::size_t betti0_at(const EdgeWeights& w, double lambda);

/// beta0 at 0 and at every filtration value. Edges are added in descending
/// weight order to a single union-find, so the cost after sorting is
/// near-linear in the edge count. Throws DomainTooSmall when domain_max is
/// below the largest weight.
BettiCurve betti_curve(const Filtration& f, double domain_max);

/// Domain 1 for correlation weights, the largest weight for covariance.
double default_domain_max(const EdgeWeights& w);

/// build_filtration followed by betti_curve; domain defaults per mode.
BettiCurve betti_curve(const EdgeWeights& w,
                       std::optional<double> domain_max = std::nullopt);

/// Components of a sparse-solution support graph.
std::size_t component_count(const SupportGraph& g);

/// Closed-form curve of a tree with p - 1 unique positive weights:
/// (0, 1), (rho_1, 2), ..., (rho_{p-1}, p). No graph computation.
/// Throws NotATree for repeated or nonpositive weights.
BettiCurve tree_betti_oracle(std::span<const double> tree_weights,
                             double domain_max = 1.0);

/// Same, after checking that w is a tree (p - 1 nonzero edges, connected).
BettiCurve tree_betti_oracle(const EdgeWeights& w, double domain_max = 1.0);

/// Component count of the graph with edges weight > lambda, by depth-first
/// search over the dense weight matrix. Must equal betti0_at.
std::size_t dfs_component_oracle(const EdgeWeights& w, double lambda);

}  // namespace sparseph
