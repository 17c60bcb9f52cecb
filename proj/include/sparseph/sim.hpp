#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <utility>

#include "sparseph/data.hpp"

namespace sparseph {

/// xoshiro256** (Blackman and Vigna). The 256-bit state is filled from the
/// seed with four splitmix64 outputs.
class Xoshiro256StarStar {
 public:
  explicit Xoshiro256StarStar(std::uint64_t seed);
  std::uint64_t operator()();

 private:
  std::array<std::uint64_t, 4> s_{};
};

/// Seeded generator for the simulations. Raw bits come from xoshiro256**.
/// Uniforms take the top 53 bits; normals use Box-Muller and return both
/// variates of each pair in order (cosine first). The normal method must not
/// change: simulated data and acceptance thresholds depend on it.
class Rng {
 public:
  static constexpr std::string_view kName = "xoshiro256**+box_muller";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double uniform();
  /// Standard normal variate.
  double normal();
  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound);

 private:
  Xoshiro256StarStar engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

struct SimConfig {
  std::size_t n = 20;  // group 1 subjects
  std::size_t m = 20;  // group 2 subjects
  std::size_t p = 100;
  double noise_sd = 0.05;
  double dependency_coefficient = 0.5;
  std::uint64_t seed = 0;

  /// Throws InvalidConfig. Both studies perturb group 1 subject by subject,
  /// so m must equal n.
  void validate() const;
};

struct GroupPair {
  DataMatrix group1;
  DataMatrix group2;
};

/// x_ij ~ N(0, 1); y_ij = x_ij + N(0, noise_sd^2). Draw order: all of X
/// row-major, then the noise row-major.
GroupPair simulate_study1(const SimConfig& cfg);

/// Study 1's groups, then nodes 2..5 (1-based) of group 2 are overwritten
/// with dependency_coefficient * x_i1 + N(0, noise_sd^2), drawn row-major
/// after the Study 1 draws. Requires p >= 6.
GroupPair simulate_study2(const SimConfig& cfg);

/// Uniform random labeled tree on p nodes (decoded Pruefer sequence) with
/// distinct weights drawn without replacement from {k / 10^6 : 0 < k < 10^6}.
/// Mode is Correlation. Throws InvalidConfig when p < 2.
EdgeWeights random_tree(std::size_t p, std::uint64_t seed);

/// Random graph: each pair is an edge with probability `density`, carrying a
/// weight drawn from {k / resolution : 0 < k < resolution}. A small
/// resolution produces ties. Non-edges have weight 0.
EdgeWeights random_graph(std::size_t p, double density, std::uint64_t seed,
                         std::uint32_t resolution = 1'000'000);

/// n x p standard normal matrix.
DataMatrix random_normal_matrix(std::size_t n, std::size_t p,
                                std::uint64_t seed);

}  // namespace sparseph
