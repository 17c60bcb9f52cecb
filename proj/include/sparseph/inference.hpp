#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sparseph/data.hpp"
#include "sparseph/filtration.hpp"

namespace sparseph {

/// Receives non-fatal diagnostics such as the n = 3 jackknife degeneracy.
using WarningSink = std::function<void(std::string_view)>;

/// Writes "warning: <message>" to stderr.
void warn_to_stderr(std::string_view message);

/// Areas under one group's jackknife Betti curves, in replicate order.
struct AucSample {
  std::vector<double> areas;
  std::string group_label;
  double domain_max = 1.0;
};

enum class RankSumMethod { ExactEnumeration, NormalApproximation };

std::string_view to_string(RankSumMethod method);

struct GroupComparisonResult {
  AucSample auc_group1;
  AucSample auc_group2;
  /// Sum of the pooled midranks of group 1.
  double rank_sum_statistic = 0.0;
  /// Two-sided, in (0, 1].
  double p_value = 1.0;
  RankSumMethod method = RankSumMethod::NormalApproximation;
  std::vector<std::string> warnings;
};

/// Exact two-sided tail of the rank-sum null distribution as a ratio of
/// subset counts: `extreme` of the `total` equally likely rank assignments
/// are at least as far from the null mean as the observed statistic.
struct ExactRankSumTail {
  std::uint64_t extreme = 0;
  std::uint64_t total = 0;

  double p_value() const {
    return static_cast<double>(extreme) / static_cast<double>(total);
  }
};

/// Samples no larger than this (in the smaller group) use exact enumeration
/// when there are no ties.
inline constexpr std::size_t kExactCutoff = 10;

/// Exact integral of the step function over [0, domain_max].
double auc(const BettiCurve& curve);

/// Leave-one-out edge weights: replicate l drops subject l and is fully
/// re-normalized. Throws GroupTooSmall when n < 3; warns at n = 3 because
/// two centered rows make every correlation magnitude 1.
std::vector<EdgeWeights> jackknife_weights(const DataMatrix& X, WeightMode mode,
                                           const WarningSink& warn = warn_to_stderr);

/// One Betti curve per left-out subject, in row order. The domain defaults
/// to 1 for correlations and to the largest replicate weight for
/// covariances.
std::vector<BettiCurve> jackknife_curves(
    const DataMatrix& X, WeightMode mode,
    std::optional<double> domain_max = std::nullopt,
    const WarningSink& warn = warn_to_stderr);

/// Midranks of the pooled sample, doubled so ties stay integral. Index i < a
/// belongs to `a`, the rest to `b`.
std::vector<std::uint64_t> doubled_midranks(const std::vector<double>& a,
                                            const std::vector<double>& b);

/// Exact tail when min(n, m) <= kExactCutoff, the pooled sample is tie-free
/// and the subset count fits in 64 bits; nullopt otherwise.
std::optional<ExactRankSumTail> rank_sum_exact(const std::vector<double>& a,
                                               const std::vector<double>& b);

/// Normal approximation with continuity correction and tie-corrected
/// variance.
double rank_sum_normal_p(const std::vector<double>& a,
                         const std::vector<double>& b);

/// Two-sided Wilcoxon rank-sum test. Throws EmptySample.
GroupComparisonResult rank_sum_test(const AucSample& a, const AucSample& b);

/// Jackknife curves of both groups together with the test result.
struct JackknifeComparison {
  std::vector<BettiCurve> curves1;
  std::vector<BettiCurve> curves2;
  GroupComparisonResult result;
};

/// Full two-group procedure: jackknife curves per group, area under each
/// curve, rank-sum test on the two area samples. In covariance mode the
/// default domain is the largest replicate weight across both groups.
/// Throws NodeCountMismatch when the groups have different node counts.
JackknifeComparison compare_groups_detailed(
    const DataMatrix& X, const DataMatrix& Y, WeightMode mode,
    std::optional<double> domain_max = std::nullopt,
    const WarningSink& warn = warn_to_stderr);

GroupComparisonResult compare_groups(
    const DataMatrix& X, const DataMatrix& Y, WeightMode mode,
    std::optional<double> domain_max = std::nullopt,
    const WarningSink& warn = warn_to_stderr);

}  // namespace sparseph
