#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <string>

#include "oracles.hpp"
#include "sparseph/error.hpp"
#include "sparseph/inference.hpp"
#include "sparseph/sim.hpp"

using namespace sparseph;

namespace {

AucSample sample(std::vector<double> v, std::string label = "g") {
  return AucSample{std::move(v), std::move(label), 1.0};
}

void no_warnings(std::string_view msg) { FAIL("unexpected warning: " << msg); }

}  // namespace

TEST_CASE("auc examples") {
  CHECK(auc(BettiCurve{{{0.0, 1}}, 1.0}) == 1.0);

  const BettiCurve two{{{0.0, 1}, {0.4, 2}}, 1.0};
  // Expected 1.6 from the fine-grid Riemann oracle.
  CHECK(testing::riemann_auc(two, 1e-5) == doctest::Approx(1.6).epsilon(1e-6));
  CHECK(auc(two) == doctest::Approx(1.6).epsilon(1e-14));

  const BettiCurve three{{{0.0, 1}, {0.2, 2}, {0.8, 3}}, 1.0};
  CHECK(testing::riemann_auc(three, 1e-5) == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(auc(three) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("auc agrees with the Riemann sum on random curves") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t p = 2 + seed % 20;
    const auto curve = betti_curve(random_graph(p, 0.5, seed));
    const double a = auc(curve);
    CHECK(std::abs(a - testing::riemann_auc(curve, 1e-5)) <= static_cast<double>(p) * 1e-4);
    CHECK(a >= curve.domain_max * 1.0);
    CHECK(a <= curve.domain_max * static_cast<double>(p));
  }
}

TEST_CASE("doubled midranks") {
  const auto r = doubled_midranks({1.0, 3.0}, {3.0, 2.0});
  // pooled 1,3,3,2 -> ranks 1, 3.5, 3.5, 2
  CHECK(r == std::vector<std::uint64_t>{2, 7, 7, 4});
}

TEST_CASE("rank_sum_test examples") {
  SUBCASE("complete separation, 3 vs 3") {
    const auto r = rank_sum_test(sample({1, 2, 3}), sample({4, 5, 6}));
    CHECK(r.method == RankSumMethod::ExactEnumeration);
    CHECK(r.rank_sum_statistic == 6.0);
    // 2 of the C(6,3) = 20 assignments are as extreme.
    const auto brute = testing::brute_force_rank_sum(3, 3, 6);
    CHECK(brute.num == 2);
    CHECK(brute.den == 20);
    CHECK(r.p_value == doctest::Approx(0.1).epsilon(1e-15));
  }
  SUBCASE("identical samples are all ties") {
    const auto r = rank_sum_test(sample({1, 2, 3}), sample({1, 2, 3}));
    CHECK(r.method == RankSumMethod::NormalApproximation);
    CHECK(r.rank_sum_statistic == 10.5);
    CHECK(r.p_value == 1.0);
  }
  SUBCASE("interleaved samples") {
    const auto r = rank_sum_test(sample({1, 3, 5, 7, 9}), sample({2, 4, 6, 8, 10}));
    const auto brute = testing::brute_force_rank_sum(5, 5, 25);
    CHECK(brute.num == 174);  // 29/42 of 252
    CHECK(brute.den == 252);
    CHECK(r.p_value == doctest::Approx(29.0 / 42.0).epsilon(1e-15));
    CHECK(r.p_value > 0.5);
  }
  SUBCASE("empty sample") {
    CHECK_THROWS_AS(rank_sum_test(sample({}), sample({1})), EmptySample);
  }
}

TEST_CASE("exact tail matches enumeration when the first group is larger") {
  const auto exact = rank_sum_exact({5, 6, 7, 8, 9}, {1, 2, 10});
  REQUIRE(exact.has_value());
  // Group 1 holds ranks 3..7, sum 25. Enumerate from its side.
  const auto brute = testing::brute_force_rank_sum(5, 3, 25);
  CHECK(exact->extreme == brute.num);
  CHECK(exact->total == brute.den);
}

TEST_CASE("rank-sum symmetry and monotone invariance") {
  std::mt19937_64 gen(8);
  std::normal_distribution<double> d;
  for (int t = 0; t < 30; ++t) {
    std::vector<double> a(3 + t % 12), b(4 + t % 9);
    for (auto& v : a) v = d(gen) + 0.3;
    for (auto& v : b) v = d(gen);
    const double p = rank_sum_test(sample(a), sample(b)).p_value;
    CHECK(p > 0.0);
    CHECK(p <= 1.0);
    CHECK(rank_sum_test(sample(b), sample(a)).p_value == doctest::Approx(p).epsilon(1e-12));
    auto ta = a;
    auto tb = b;
    for (auto& v : ta) v = std::exp(v) * 3.0 + 1.0;
    for (auto& v : tb) v = std::exp(v) * 3.0 + 1.0;
    CHECK(rank_sum_test(sample(ta), sample(tb)).p_value == p);
  }
}

TEST_CASE("exact and normal approximation agree at the cutoff") {
  std::mt19937_64 gen(99);
  std::normal_distribution<double> d;
  for (int t = 0; t < 50; ++t) {
    std::vector<double> a(10), b(10);
    for (auto& v : a) v = d(gen) + 0.1 * (t % 10);
    for (auto& v : b) v = d(gen);
    const auto exact = rank_sum_exact(a, b);
    REQUIRE(exact.has_value());
    CHECK(std::abs(exact->p_value() - rank_sum_normal_p(a, b)) <= 0.02);
  }
}

TEST_CASE("method selection") {
  std::vector<double> a(11), b(11);
  for (std::size_t i = 0; i < 11; ++i) {
    a[i] = static_cast<double>(2 * i);
    b[i] = static_cast<double>(2 * i + 1);
  }
  CHECK(rank_sum_test(sample(a), sample(b)).method == RankSumMethod::NormalApproximation);
  a.pop_back();
  CHECK(rank_sum_test(sample(a), sample(b)).method == RankSumMethod::ExactEnumeration);
  a[0] = b[0];  // introduce a tie
  CHECK(rank_sum_test(sample(a), sample(b)).method == RankSumMethod::NormalApproximation);
}

TEST_CASE("p-value stays positive for extreme separations") {
  std::vector<double> a(400), b(400);
  for (std::size_t i = 0; i < 400; ++i) {
    a[i] = static_cast<double>(i);
    b[i] = 1000.0 + static_cast<double>(i);
  }
  const auto r = rank_sum_test(sample(a), sample(b));
  CHECK(r.p_value > 0.0);
  CHECK(r.p_value < 1e-100);
}

TEST_CASE("jackknife_curves") {
  SimConfig cfg;
  cfg.p = 12;
  cfg.seed = 4;
  const auto g = simulate_study1(cfg);

  SUBCASE("one curve per subject") {
    const auto X = random_normal_matrix(3, 5, 1);
    std::vector<std::string> warnings;
    const auto curves = jackknife_curves(
        X, WeightMode::Correlation, std::nullopt,
        [&](std::string_view m) { warnings.emplace_back(m); });
    CHECK(curves.size() == 3);
    CHECK(warnings.size() == 1);
    CHECK_THROWS_AS(jackknife_curves(random_normal_matrix(2, 5, 1), WeightMode::Correlation),
                    GroupTooSmall);
  }
  SUBCASE("duplicate subjects give identical replicate curves") {
    Eigen::MatrixXd v = g.group1.values();
    v.row(3) = v.row(7);
    const auto curves = jackknife_curves(DataMatrix(v), WeightMode::Correlation,
                                         std::nullopt, no_warnings);
    CHECK(curves[3] == curves[7]);
    CHECK_FALSE(curves[3] == curves[0]);
  }
  SUBCASE("replicate l equals the curve of X without row l") {
    const auto curves = jackknife_curves(g.group1, WeightMode::Correlation,
                                         std::nullopt, no_warnings);
    REQUIRE(curves.size() == g.group1.n());
    for (std::size_t l = 0; l < curves.size(); ++l) {
      CHECK(curves[l] == betti_curve(edge_weights(g.group1.without_row(l),
                                                  WeightMode::Correlation)));
    }
    CHECK(jackknife_curves(g.group1, WeightMode::Correlation, std::nullopt,
                           no_warnings) == curves);
  }
  SUBCASE("covariance domain covers every replicate") {
    const auto curves = jackknife_curves(g.group1, WeightMode::Covariance,
                                         std::nullopt, no_warnings);
    for (const auto& c : curves) {
      CHECK(c.domain_max == curves.front().domain_max);
      CHECK(c.breakpoints.back().lambda <= c.domain_max);
    }
  }
}

TEST_CASE("compare_groups") {
  SimConfig cfg;
  cfg.p = 15;
  cfg.seed = 2;
  const auto g = simulate_study1(cfg);

  SUBCASE("identical groups tie completely") {
    const auto r = compare_groups(g.group1, g.group1, WeightMode::Correlation,
                                  std::nullopt, no_warnings);
    CHECK(r.auc_group1.areas == r.auc_group2.areas);
    CHECK(r.p_value == 1.0);
  }
  SUBCASE("node count mismatch") {
    CHECK_THROWS_AS(compare_groups(g.group1, random_normal_matrix(20, 14, 0),
                                   WeightMode::Correlation),
                    NodeCountMismatch);
  }
  SUBCASE("covariance mode integrates both groups over one domain") {
    const auto r = compare_groups(g.group1, g.group2, WeightMode::Covariance,
                                  std::nullopt, no_warnings);
    CHECK(r.auc_group1.domain_max == r.auc_group2.domain_max);
    CHECK(r.auc_group1.domain_max > 0.0);
    CHECK(r.auc_group1.areas.size() == 20);
  }
  SUBCASE("warnings are collected in the result") {
    const auto X = random_normal_matrix(3, 5, 1);
    const auto r = compare_groups(X, X, WeightMode::Correlation, std::nullopt,
                                  [](std::string_view) {});
    CHECK(r.warnings.size() == 2);
  }
}
