#include "sparseph/sim.hpp"

#include <bit>
#include <cmath>
#include <functional>
#include <numbers>
#include <queue>
#include <unordered_set>
#include <vector>

#include "sparseph/error.hpp"

namespace sparseph {

Xoshiro256StarStar::Xoshiro256StarStar(std::uint64_t seed) {
  for (auto& word : s_) {
    seed += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = seed;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    word = z ^ (z >> 31);
  }
}

std::uint64_t Xoshiro256StarStar::operator()() {
  const std::uint64_t result = std::rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = std::rotl(s_[3], 45);
  return result;
}

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // 1 - uniform() lies in (0, 1], so the log is finite.
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  // Rejection keeps the result unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

void SimConfig::validate() const {
  if (n < 4 || m < 4) throw InvalidConfig("group sizes n and m must be >= 4");
  if (m != n) {
    throw InvalidConfig("group 2 perturbs group 1 subject by subject; m must equal n");
  }
  if (p < 6) throw InvalidConfig("p must be >= 6 (dependency touches nodes 1-5)");
  if (!(noise_sd > 0.0) || !std::isfinite(noise_sd)) {
    throw InvalidConfig("noise_sd must be positive");
  }
  if (!std::isfinite(dependency_coefficient)) {
    throw InvalidConfig("dependency_coefficient must be finite");
  }
}

namespace {

Eigen::MatrixXd normal_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(rows),
                      static_cast<Eigen::Index>(cols));
  for (Eigen::Index i = 0; i < out.rows(); ++i) {
    for (Eigen::Index j = 0; j < out.cols(); ++j) out(i, j) = rng.normal();
  }
  return out;
}

struct Study1Draws {
  Eigen::MatrixXd x;
  Eigen::MatrixXd y;
};

Study1Draws draw_study1(const SimConfig& cfg, Rng& rng) {
  Study1Draws d;
  d.x = normal_matrix(rng, cfg.n, cfg.p);
  d.y = d.x;
  for (Eigen::Index i = 0; i < d.y.rows(); ++i) {
    for (Eigen::Index j = 0; j < d.y.cols(); ++j) {
      d.y(i, j) += cfg.noise_sd * rng.normal();
    }
  }
  return d;
}

}  // namespace

GroupPair simulate_study1(const SimConfig& cfg) {
  cfg.validate();
  Rng rng(cfg.seed);
  auto d = draw_study1(cfg, rng);
  return {DataMatrix(std::move(d.x)), DataMatrix(std::move(d.y))};
}

GroupPair simulate_study2(const SimConfig& cfg) {
  cfg.validate();
  Rng rng(cfg.seed);
  auto d = draw_study1(cfg, rng);
  for (Eigen::Index i = 0; i < d.y.rows(); ++i) {
    // Nodes 2..5 in 1-based numbering.
    for (Eigen::Index j = 1; j <= 4; ++j) {
      d.y(i, j) = cfg.dependency_coefficient * d.x(i, 0) +
                  cfg.noise_sd * rng.normal();
    }
  }
  return {DataMatrix(std::move(d.x)), DataMatrix(std::move(d.y))};
}

EdgeWeights random_tree(std::size_t p, std::uint64_t seed) {
  if (p < 2) throw InvalidConfig("random_tree needs p >= 2");
  if (p - 1 >= 999'999) throw InvalidConfig("random_tree supports p < 10^6");
  Rng rng(seed);

  std::vector<std::size_t> pruefer(p - 2);
  for (auto& v : pruefer) v = static_cast<std::size_t>(rng.below(p));

  std::vector<std::size_t> degree(p, 1);
  for (auto v : pruefer) ++degree[v];
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> leaves;
  for (std::size_t v = 0; v < p; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  edges.reserve(p - 1);
  for (auto v : pruefer) {
    const std::size_t leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, v);
    if (--degree[v] == 1) leaves.push(v);
  }
  const std::size_t a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());

  std::unordered_set<std::uint64_t> used;
  EdgeWeights w{WeightMode::Correlation, PackedSymmetric(p)};
  for (auto [j, k] : edges) {
    std::uint64_t grid;
    do {
      grid = 1 + rng.below(999'999);
    } while (!used.insert(grid).second);
    w.weights.set(j, k, static_cast<double>(grid) / 1e6);
  }
  return w;
}

EdgeWeights random_graph(std::size_t p, double density, std::uint64_t seed,
                         std::uint32_t resolution) {
  if (resolution < 2) throw InvalidConfig("random_graph resolution must be >= 2");
  Rng rng(seed);
  EdgeWeights w{WeightMode::Correlation, PackedSymmetric(p)};
  for (auto& v : w.weights.packed()) {
    if (rng.uniform() < density) {
      v = static_cast<double>(1 + rng.below(resolution - 1)) / resolution;
    }
  }
  return w;
}

DataMatrix random_normal_matrix(std::size_t n, std::size_t p,
                                std::uint64_t seed) {
  Rng rng(seed);
  return DataMatrix(normal_matrix(rng, n, p));
}

}  // namespace sparseph
