#pragma once

#include <cstddef>

#include <Eigen/Dense>

#include "sparseph/data.hpp"

namespace sparseph {

/// Soft-thresholded sample correlations at one sparsity level. The diagonal
/// is always zero; self-regression is excluded.
struct SparseSolution {
  PackedSymmetric gamma;
  double lambda = 0.0;

  std::size_t p() const { return gamma.p(); }
};

/// Binary adjacency a_jk = 1 iff gamma_jk != 0.
struct SupportGraph {
  std::size_t p = 0;
  std::vector<unsigned char> adjacency;  // packed upper triangle
  double lambda = 0.0;

  bool edge(std::size_t j, std::size_t k) const;
  std::size_t edge_count() const;
};

/// Closed-form minimizer of (gamma - c)^2 + 2 lambda |gamma|:
/// c - lambda above lambda, 0 on [-lambda, lambda], c + lambda below.
/// A tie |c| == lambda maps to 0. Throws NegativeLambda.
double soft_threshold(double c, double lambda);

/// Componentwise minimizer of the penalized least-squares objective over all
/// off-diagonal pairs of Z. Throws NegativeLambda.
SparseSolution sparse_correlation(const NormalizedMatrix& Z, double lambda);

/// Same, starting from precomputed signed correlations.
SparseSolution sparse_correlation(const PackedSymmetric& correlations,
                                  double lambda);

/// Penalized objective summed over j != k:
///   sum (gamma_jk - c_jk)^2 + 2 lambda |gamma_jk|
/// with the constant terms dropped.
double sparse_objective(const PackedSymmetric& gamma,
                        const PackedSymmetric& correlations, double lambda);

SupportGraph support_graph(const SparseSolution& solution);

/// Numerical argmin of (gamma - c)^2 + 2 lambda |gamma| over [-2, 2] by
/// golden-section search on each side of the kink at 0. Independent of
/// soft_threshold; tests compare the two.
double oracle_minimize(double c, double lambda);

}  // namespace sparseph
