#include "sparseph/sparse.hpp"

#include <algorithm>
#include <cmath>

#include "sparseph/error.hpp"

namespace sparseph {

namespace {

void check_lambda(double lambda) {
  if (!(lambda >= 0.0)) throw NegativeLambda(lambda);
}

double penalized(double gamma, double c, double lambda) {
  const double d = gamma - c;
  return d * d + 2.0 * lambda * std::abs(gamma);
}

// Golden-section search for the minimum of a convex function on [lo, hi].
template <class F>
double golden_section(F f, double lo, double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  while (b - a > tol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

bool SupportGraph::edge(std::size_t j, std::size_t k) const {
  if (j == k) return false;
  if (j > k) std::swap(j, k);
  return adjacency[j * (2 * p - j - 1) / 2 + (k - j - 1)] != 0;
}

std::size_t SupportGraph::edge_count() const {
  return static_cast<std::size_t>(
      std::count(adjacency.begin(), adjacency.end(), 1));
}

double soft_threshold(double c, double lambda) {
  check_lambda(lambda);
  if (c > lambda) return c - lambda;
  if (c < -lambda) return c + lambda;
  return 0.0;
}

SparseSolution sparse_correlation(const PackedSymmetric& correlations,
                                  double lambda) {
  check_lambda(lambda);
  SparseSolution out{correlations, lambda};
  for (auto& g : out.gamma.packed()) g = soft_threshold(g, lambda);
  return out;
}

SparseSolution sparse_correlation(const NormalizedMatrix& Z, double lambda) {
  check_lambda(lambda);
  return sparse_correlation(sample_correlations(Z), lambda);
}

double sparse_objective(const PackedSymmetric& gamma,
                        const PackedSymmetric& correlations, double lambda) {
  const auto& g = gamma.packed();
  const auto& c = correlations.packed();
  double total = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) total += penalized(g[i], c[i], lambda);
  // Each unordered pair appears twice in the sum over j != k.
  return 2.0 * total;
}

SupportGraph support_graph(const SparseSolution& solution) {
  SupportGraph out;
  out.p = solution.p();
  out.lambda = solution.lambda;
  const auto& g = solution.gamma.packed();
  out.adjacency.resize(g.size());
  std::transform(g.begin(), g.end(), out.adjacency.begin(),
                 [](double v) -> unsigned char { return v != 0.0 ? 1 : 0; });
  return out;
}

double oracle_minimize(double c, double lambda) {
  auto f = [c, lambda](double g) { return penalized(g, c, lambda); };
  constexpr double tol = 1e-10;
  double best = 0.0;
  double best_value = f(0.0);
  for (double candidate : {golden_section(f, -2.0, 0.0, tol),
                           golden_section(f, 0.0, 2.0, tol)}) {
    const double value = f(candidate);
    if (value < best_value) {
      best = candidate;
      best_value = value;
    }
  }
  return best;
}

}  // namespace sparseph
