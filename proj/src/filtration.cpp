#include "sparseph/filtration.hpp"

#include <algorithm>
#include <vector>

#include "sparseph/error.hpp"
#include "sparseph/union_find.hpp"

namespace sparseph {

std::size_t BettiCurve::value_at(double lambda) const {
  auto it = std::upper_bound(
      breakpoints.begin(), breakpoints.end(), lambda,
      [](double x, const Breakpoint& b) { return x < b.lambda; });
  if (it == breakpoints.begin()) return breakpoints.front().beta0;
  return std::prev(it)->beta0;
}

Filtration build_filtration(const EdgeWeights& w) {
  Filtration f;
  f.p = w.p();
  const auto& packed = w.weights.packed();
  f.edges.reserve(packed.size());
  std::size_t idx = 0;
  for (std::size_t j = 0; j < f.p; ++j) {
    for (std::size_t k = j + 1; k < f.p; ++k, ++idx) {
      if (packed[idx] > 0.0) {
        f.edges.push_back({static_cast<std::uint32_t>(j),
                           static_cast<std::uint32_t>(k), packed[idx]});
      }
    }
  }
  // Enumeration is already (j, k)-ordered, so a stable sort on weight alone
  // yields the (weight, j, k) order.
  std::stable_sort(f.edges.begin(), f.edges.end(),
                   [](const WeightedEdge& a, const WeightedEdge& b) {
                     return a.weight < b.weight;
                   });
  for (const auto& e : f.edges) {
    if (f.values.empty() || f.values.back() != e.weight) {
      f.values.push_back(e.weight);
    }
  }
  return f;
}

std::size_t betti0_at(const EdgeWeights& w, double lambda) {
  DisjointSet ds(w.p());
  const auto& packed = w.weights.packed();
  std::size_t idx = 0;
  for (std::size_t j = 0; j < w.p(); ++j) {
    for (std::size_t k = j + 1; k < w.p(); ++k, ++idx) {
      if (packed[idx] > lambda) ds.unite(j, k);
    }
  }
  return ds.set_count();
}

BettiCurve betti_curve(const Filtration& f, double domain_max) {
  if (!f.values.empty() && domain_max < f.values.back()) {
    throw DomainTooSmall(domain_max, f.values.back());
  }
  const std::size_t q = f.values.size();
  std::vector<std::size_t> beta(q);
  DisjointSet ds(f.p);
  std::size_t next = f.edges.size();
  for (std::size_t r = q; r-- > 0;) {
    // Edges heavier than values[r] are already merged.
    beta[r] = ds.set_count();
    while (next > 0 && f.edges[next - 1].weight == f.values[r]) {
      --next;
      ds.unite(f.edges[next].j, f.edges[next].k);
    }
  }
  BettiCurve curve;
  curve.domain_max = domain_max;
  curve.breakpoints.reserve(q + 1);
  curve.breakpoints.push_back({0.0, ds.set_count()});
  for (std::size_t r = 0; r < q; ++r) {
    curve.breakpoints.push_back({f.values[r], beta[r]});
  }
  return curve;
}

double default_domain_max(const EdgeWeights& w) {
  return w.mode == WeightMode::Correlation ? 1.0 : w.max_weight();
}

BettiCurve betti_curve(const EdgeWeights& w, std::optional<double> domain_max) {
  return betti_curve(build_filtration(w),
                     domain_max.value_or(default_domain_max(w)));
}

std::size_t component_count(const SupportGraph& g) {
  DisjointSet ds(g.p);
  std::size_t idx = 0;
  for (std::size_t j = 0; j < g.p; ++j) {
    for (std::size_t k = j + 1; k < g.p; ++k, ++idx) {
      if (g.adjacency[idx]) ds.unite(j, k);
    }
  }
  return ds.set_count();
}

BettiCurve tree_betti_oracle(std::span<const double> tree_weights,
                             double domain_max) {
  std::vector<double> sorted(tree_weights.begin(), tree_weights.end());
  std::sort(sorted.begin(), sorted.end());
  if (!sorted.empty() && !(sorted.front() > 0.0)) {
    throw NotATree("tree weights must be positive");
  }
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw NotATree("tree weights must be unique");
  }
  BettiCurve curve;
  curve.domain_max = domain_max;
  curve.breakpoints.push_back({0.0, 1});
  for (std::size_t r = 0; r < sorted.size(); ++r) {
    curve.breakpoints.push_back({sorted[r], r + 2});
  }
  return curve;
}

BettiCurve tree_betti_oracle(const EdgeWeights& w, double domain_max) {
  std::vector<double> weights;
  for (double v : w.weights.packed()) {
    if (v != 0.0) weights.push_back(v);
  }
  if (w.p() == 0 || weights.size() + 1 != w.p() ||
      dfs_component_oracle(w, 0.0) != 1) {
    throw NotATree("graph is not a tree");
  }
  return tree_betti_oracle(weights, domain_max);
}

std::size_t dfs_component_oracle(const EdgeWeights& w, double lambda) {
  const std::size_t p = w.p();
  std::vector<bool> seen(p, false);
  std::vector<std::size_t> stack;
  std::size_t components = 0;
  for (std::size_t start = 0; start < p; ++start) {
    if (seen[start]) continue;
    ++components;
    seen[start] = true;
    stack.push_back(start);
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t u = 0; u < p; ++u) {
        if (!seen[u] && u != v && w(v, u) > lambda) {
          seen[u] = true;
          stack.push_back(u);
        }
      }
    }
  }
  return components;
}

}  // namespace sparseph
