// Brute-force reference computations used only by the tests. None of these
// share code paths with the library routines they check.
#pragma once

#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include "sparseph/data.hpp"
#include "sparseph/filtration.hpp"

namespace sparseph::testing {

/// argmin of (g - c)^2 + 2 lambda |g| on a uniform grid over [-2, 2], then
/// two rounds of local grid refinement.
inline double grid_minimize(double c, double lambda) {
  auto f = [&](double g) { return (g - c) * (g - c) + 2.0 * lambda * std::abs(g); };
  double lo = -2.0;
  double hi = 2.0;
  double best = 0.0;
  for (int round = 0; round < 4; ++round) {
    const int steps = 4000;
    const double h = (hi - lo) / steps;
    double best_value = f(best);
    for (int i = 0; i <= steps; ++i) {
      const double g = lo + h * i;
      if (f(g) < best_value) {
        best_value = f(g);
        best = g;
      }
    }
    lo = best - 2 * h;
    hi = best + 2 * h;
  }
  return best;
}

/// Plain dot product of two equal-length vectors.
inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Edge set {(j, k) : w_jk > lambda} as a packed bit vector.
inline std::vector<bool> edge_set(const EdgeWeights& w, double lambda) {
  std::vector<bool> out;
  for (std::size_t j = 0; j < w.p(); ++j) {
    for (std::size_t k = j + 1; k < w.p(); ++k) out.push_back(w(j, k) > lambda);
  }
  return out;
}

/// Number of distinct binary graphs seen while sweeping lambda over a
/// uniform grid on [0, hi].
inline std::size_t distinct_graphs_on_grid(const EdgeWeights& w, double hi,
                                           int steps) {
  std::set<std::vector<bool>> seen;
  for (int i = 0; i <= steps; ++i) seen.insert(edge_set(w, hi * i / steps));
  return seen.size();
}

/// Left Riemann sum of a step curve on a uniform grid of width `step`,
/// evaluating the curve by direct breakpoint lookup.
inline double riemann_auc(const BettiCurve& c, double step) {
  auto value = [&](double x) {
    std::size_t v = c.breakpoints.front().beta0;
    for (const auto& b : c.breakpoints) {
      if (b.lambda <= x) v = b.beta0;
    }
    return static_cast<double>(v);
  };
  // Walk breakpoints alongside the grid so the sum stays linear time.
  double total = 0.0;
  std::size_t r = 0;
  const auto count = static_cast<std::int64_t>(std::floor(c.domain_max / step));
  for (std::int64_t i = 0; i < count; ++i) {
    const double x = static_cast<double>(i) * step;
    while (r + 1 < c.breakpoints.size() && c.breakpoints[r + 1].lambda <= x) ++r;
    total += static_cast<double>(c.breakpoints[r].beta0) * step;
  }
  const double tail = c.domain_max - static_cast<double>(count) * step;
  total += value(static_cast<double>(count) * step) * tail;
  return total;
}

struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 0;
};

/// Two-sided exact rank-sum tail by enumerating every n-subset of ranks
/// {1..n+m}: the fraction whose rank sum is at least as far from the null
/// mean as the observed sum `w`.
inline Ratio brute_force_rank_sum(std::size_t n, std::size_t m, std::uint64_t w) {
  const std::size_t N = n + m;
  const std::int64_t twice_mean = static_cast<std::int64_t>(n * (N + 1));
  const std::int64_t observed = std::llabs(2 * static_cast<std::int64_t>(w) - twice_mean);
  Ratio r;
  for (std::uint32_t mask = 0; mask < (1u << N); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != n) continue;
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < N; ++i) {
      if (mask & (1u << i)) sum += static_cast<std::int64_t>(i + 1);
    }
    ++r.den;
    if (std::llabs(2 * sum - twice_mean) >= observed) ++r.num;
  }
  return r;
}

}  // namespace sparseph::testing
