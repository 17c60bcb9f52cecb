#include "sparseph/inference.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <numeric>

#include "sparseph/error.hpp"

namespace sparseph {

void warn_to_stderr(std::string_view message) {
  std::cerr << "warning: " << message << '\n';
}

std::string_view to_string(RankSumMethod method) {
  return method == RankSumMethod::ExactEnumeration ? "exact"
                                                   : "normal_approximation";
}

double auc(const BettiCurve& curve) {
  const auto& bp = curve.breakpoints;
  double area = 0.0;
  for (std::size_t r = 0; r < bp.size(); ++r) {
    const double end = r + 1 < bp.size() ? bp[r + 1].lambda : curve.domain_max;
    area += static_cast<double>(bp[r].beta0) * (end - bp[r].lambda);
  }
  return area;
}

std::vector<EdgeWeights> jackknife_weights(const DataMatrix& X, WeightMode mode,
                                           const WarningSink& warn) {
  if (X.n() < 3) throw GroupTooSmall(X.n());
  if (X.n() == 3 && warn) {
    warn("jackknife with n = 3 leaves 2 subjects per replicate; every "
         "correlation magnitude is 1 and the curves are degenerate");
  }
  std::vector<EdgeWeights> out;
  out.reserve(X.n());
  for (std::size_t l = 0; l < X.n(); ++l) {
    out.push_back(edge_weights(X.without_row(l), mode));
  }
  return out;
}

namespace {

double max_weight(const std::vector<EdgeWeights>& ws) {
  double m = 0.0;
  for (const auto& w : ws) m = std::max(m, w.max_weight());
  return m;
}

std::vector<BettiCurve> curves_of(const std::vector<EdgeWeights>& ws,
                                  double domain_max) {
  std::vector<BettiCurve> out;
  out.reserve(ws.size());
  for (const auto& w : ws) out.push_back(betti_curve(w, domain_max));
  return out;
}

double default_domain(WeightMode mode, const std::vector<EdgeWeights>& ws) {
  return mode == WeightMode::Correlation ? 1.0 : max_weight(ws);
}

AucSample areas_of(const std::vector<BettiCurve>& curves, std::string label,
                   double domain_max) {
  AucSample s{{}, std::move(label), domain_max};
  s.areas.reserve(curves.size());
  for (const auto& c : curves) s.areas.push_back(auc(c));
  return s;
}

__extension__ typedef unsigned __int128 uint128;

// Number of k-subsets of {1..N}, or nullopt past 64 bits.
std::optional<std::uint64_t> binomial(std::uint64_t N, std::uint64_t k) {
  uint128 c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    c = c * (N - k + i) / i;
    if (c > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  }
  return static_cast<std::uint64_t>(c);
}

}  // namespace

std::vector<BettiCurve> jackknife_curves(const DataMatrix& X, WeightMode mode,
                                         std::optional<double> domain_max,
                                         const WarningSink& warn) {
  const auto ws = jackknife_weights(X, mode, warn);
  return curves_of(ws, domain_max.value_or(default_domain(mode, ws)));
}

std::vector<std::uint64_t> doubled_midranks(const std::vector<double>& a,
                                            const std::vector<double>& b) {
  std::vector<double> pooled(a);
  pooled.insert(pooled.end(), b.begin(), b.end());
  std::vector<std::size_t> order(pooled.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return pooled[x] < pooled[y];
  });
  std::vector<std::uint64_t> ranks(pooled.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && pooled[order[j + 1]] == pooled[order[i]]) ++j;
    // Positions i..j (0-based) share the midrank ((i+1) + (j+1)) / 2.
    for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = i + j + 2;
    i = j + 1;
  }
  return ranks;
}

std::optional<ExactRankSumTail> rank_sum_exact(const std::vector<double>& a,
                                               const std::vector<double>& b) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  const std::size_t N = n + m;
  const std::size_t s = std::min(n, m);
  if (s == 0 || s > kExactCutoff) return std::nullopt;

  const auto ranks = doubled_midranks(a, b);
  for (std::uint64_t r : ranks) {
    if (r % 2 != 0) return std::nullopt;  // a tie produced a half rank
  }
  std::vector<std::uint64_t> sorted(ranks);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return std::nullopt;
  }

  const auto total = binomial(N, s);
  if (!total) return std::nullopt;

  // Rank sum of the smaller group; its null distribution is that of the sum
  // of a uniformly random s-subset of {1..N}.
  std::uint64_t w = 0;
  if (n <= m) {
    for (std::size_t i = 0; i < n; ++i) w += ranks[i] / 2;
  } else {
    for (std::size_t i = n; i < N; ++i) w += ranks[i] / 2;
  }

  const std::size_t max_sum = s * N;
  // counts[k][t]: k-subsets of the ranks seen so far with sum t.
  std::vector<std::vector<std::uint64_t>> counts(
      s + 1, std::vector<std::uint64_t>(max_sum + 1, 0));
  counts[0][0] = 1;
  for (std::size_t r = 1; r <= N; ++r) {
    for (std::size_t k = std::min(s, r); k >= 1; --k) {
      auto& to = counts[k];
      const auto& from = counts[k - 1];
      for (std::size_t t = max_sum; t >= r; --t) to[t] += from[t - r];
    }
  }
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
  for (std::size_t t = 0; t <= max_sum; ++t) {
    if (t <= w) lower += counts[s][t];
    if (t >= w) upper += counts[s][t];
  }
  // The null distribution is symmetric about s(N+1)/2, so the two-sided
  // count is twice the smaller tail.
  const std::uint64_t smaller = std::min(lower, upper);
  const std::uint64_t extreme =
      smaller > *total / 2 ? *total : std::min(*total, 2 * smaller);
  return ExactRankSumTail{extreme, *total};
}

double rank_sum_normal_p(const std::vector<double>& a,
                         const std::vector<double>& b) {
  const double n = static_cast<double>(a.size());
  const double m = static_cast<double>(b.size());
  const double N = n + m;
  const auto ranks = doubled_midranks(a, b);

  double w = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) w += static_cast<double>(ranks[i]) / 2.0;

  std::vector<std::uint64_t> sorted(ranks);
  std::sort(sorted.begin(), sorted.end());
  double tie_term = 0.0;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    const double t = static_cast<double>(j - i);
    tie_term += t * t * t - t;
    i = j;
  }
  const double mean = n * (N + 1.0) / 2.0;
  const double var = n * m / 12.0 * ((N + 1.0) - tie_term / (N * (N - 1.0)));
  if (!(var > 0.0)) return 1.0;
  const double z = std::max(0.0, std::abs(w - mean) - 0.5) / std::sqrt(var);
  return std::erfc(z / std::sqrt(2.0));
}

GroupComparisonResult rank_sum_test(const AucSample& a, const AucSample& b) {
  if (a.areas.empty() || b.areas.empty()) throw EmptySample();
  GroupComparisonResult out;
  out.auc_group1 = a;
  out.auc_group2 = b;
  const auto ranks = doubled_midranks(a.areas, b.areas);
  std::uint64_t doubled = 0;
  for (std::size_t i = 0; i < a.areas.size(); ++i) doubled += ranks[i];
  out.rank_sum_statistic = static_cast<double>(doubled) / 2.0;

  if (const auto exact = rank_sum_exact(a.areas, b.areas)) {
    out.method = RankSumMethod::ExactEnumeration;
    out.p_value = exact->p_value();
  } else {
    out.method = RankSumMethod::NormalApproximation;
    out.p_value = rank_sum_normal_p(a.areas, b.areas);
  }
  out.p_value = std::clamp(out.p_value, std::numeric_limits<double>::min(), 1.0);
  return out;
}

JackknifeComparison compare_groups_detailed(const DataMatrix& X,
                                            const DataMatrix& Y,
                                            WeightMode mode,
                                            std::optional<double> domain_max,
                                            const WarningSink& warn) {
  if (X.p() != Y.p()) throw NodeCountMismatch(X.p(), Y.p());
  std::vector<std::string> warnings;
  const WarningSink collect = [&](std::string_view msg) {
    warnings.emplace_back(msg);
    if (warn) warn(msg);
  };
  const auto w1 = jackknife_weights(X, mode, collect);
  const auto w2 = jackknife_weights(Y, mode, collect);
  const double domain = domain_max.value_or(
      mode == WeightMode::Correlation ? 1.0
                                      : std::max(max_weight(w1), max_weight(w2)));

  JackknifeComparison out;
  out.curves1 = curves_of(w1, domain);
  out.curves2 = curves_of(w2, domain);
  out.result = rank_sum_test(areas_of(out.curves1, "group1", domain),
                             areas_of(out.curves2, "group2", domain));
  out.result.warnings = std::move(warnings);
  return out;
}

GroupComparisonResult compare_groups(const DataMatrix& X, const DataMatrix& Y,
                                     WeightMode mode,
                                     std::optional<double> domain_max,
                                     const WarningSink& warn) {
  return compare_groups_detailed(X, Y, mode, domain_max, warn).result;
}

}  // namespace sparseph
