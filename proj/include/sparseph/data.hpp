#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace sparseph {

/// Subjects x nodes measurement table. Rows are subjects, columns are nodes.
/// All entries are finite; the constructor enforces it.
class DataMatrix {
 public:
  DataMatrix() = default;

  /// Missing labels are generated: rows "1".."n", columns "1".."p".
  explicit DataMatrix(Eigen::MatrixXd values,
                      std::vector<std::string> col_labels = {},
                      std::vector<std::string> row_labels = {});

  std::size_t n() const { return static_cast<std::size_t>(values_.rows()); }
  std::size_t p() const { return static_cast<std::size_t>(values_.cols()); }

  const Eigen::MatrixXd& values() const { return values_; }
  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }

  /// Copy with subject `row` removed (jackknife replicate).
  DataMatrix without_row(std::size_t row) const;

 private:
  Eigen::MatrixXd values_;
  std::vector<std::string> col_labels_;
  std::vector<std::string> row_labels_;
};

/// Columns centered to mean zero and scaled to unit Euclidean norm, so the
/// inner product of two columns is their sample correlation.
class NormalizedMatrix {
 public:
  std::size_t n() const { return static_cast<std::size_t>(values_.rows()); }
  std::size_t p() const { return static_cast<std::size_t>(values_.cols()); }
  const Eigen::MatrixXd& values() const { return values_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }

 private:
  friend NormalizedMatrix normalize_columns(const DataMatrix&);
  NormalizedMatrix(Eigen::MatrixXd values, std::vector<std::string> labels)
      : values_(std::move(values)), col_labels_(std::move(labels)) {}

  Eigen::MatrixXd values_;
  std::vector<std::string> col_labels_;
};

/// Columns centered to mean zero but not rescaled. Input to covariance
/// weights.
class CenteredMatrix {
 public:
  std::size_t n() const { return static_cast<std::size_t>(values_.rows()); }
  std::size_t p() const { return static_cast<std::size_t>(values_.cols()); }
  const Eigen::MatrixXd& values() const { return values_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }

 private:
  friend CenteredMatrix center_columns(const DataMatrix&);
  CenteredMatrix(Eigen::MatrixXd values, std::vector<std::string> labels)
      : values_(std::move(values)), col_labels_(std::move(labels)) {}

  Eigen::MatrixXd values_;
  std::vector<std::string> col_labels_;
};

/// Symmetric p x p matrix with an implicit zero diagonal. Each off-diagonal
/// pair is stored once, so (j,k) and (k,j) read the same double.
class PackedSymmetric {
 public:
  PackedSymmetric() = default;
  explicit PackedSymmetric(std::size_t p)
      : p_(p), values_(p < 2 ? 0 : p * (p - 1) / 2, 0.0) {}

  std::size_t p() const { return p_; }
  std::size_t pair_count() const { return values_.size(); }

  /// Index of pair j < k in the packed upper triangle.
  std::size_t index(std::size_t j, std::size_t k) const {
    return j * (2 * p_ - j - 1) / 2 + (k - j - 1);
  }

  double operator()(std::size_t j, std::size_t k) const {
    if (j == k) return 0.0;
    return j < k ? values_[index(j, k)] : values_[index(k, j)];
  }

  void set(std::size_t j, std::size_t k, double value) {
    if (j == k) return;
    values_[j < k ? index(j, k) : index(k, j)] = value;
  }

  const std::vector<double>& packed() const { return values_; }
  std::vector<double>& packed() { return values_; }

  Eigen::MatrixXd dense() const;

 private:
  std::size_t p_ = 0;
  std::vector<double> values_;
};

enum class WeightMode { Correlation, Covariance };

std::string_view to_string(WeightMode mode);
/// Accepts "correlation" or "covariance"; throws InvalidArgument otherwise.
WeightMode parse_weight_mode(std::string_view text);

/// Edge weights |correlation| or |covariance| between node pairs.
struct EdgeWeights {
  WeightMode mode = WeightMode::Correlation;
  PackedSymmetric weights;

  std::size_t p() const { return weights.p(); }
  double operator()(std::size_t j, std::size_t k) const { return weights(j, k); }
  double max_weight() const;
};

/// Reads a comma-separated table. Cells may use scientific notation.
/// Throws FileNotFound, ParseError or RaggedRows.
DataMatrix load_csv(const std::string& path, bool has_header);
DataMatrix read_csv(std::istream& in, bool has_header);

/// Writes the table with 17 significant digits; a header row of column
/// labels is written when `with_header` is set.
void write_csv(std::ostream& out, const DataMatrix& X, bool with_header);

/// (x_j - mean) / ||x_j - mean|| for every column. Throws ZeroVariance for a
/// constant column and InvalidArgument when n < 2.
NormalizedMatrix normalize_columns(const DataMatrix& X);

/// x_j - mean for every column. Same preconditions as normalize_columns.
CenteredMatrix center_columns(const DataMatrix& X);

/// Signed inner products z_j'z_k of a normalized matrix, clamped to [-1, 1].
PackedSymmetric sample_correlations(const NormalizedMatrix& Z);

/// Signed sample covariances x_j'x_k / (n - 1) of a centered matrix.
PackedSymmetric sample_covariances(const CenteredMatrix& C);

/// |z_j'z_k|, mode Correlation.
EdgeWeights edge_weights(const NormalizedMatrix& Z);
/// |s_jk|, mode Covariance.
EdgeWeights edge_weights(const CenteredMatrix& C);
/// Rows sorted lexicographically. Floating-point sums then run in the same
/// order for any permutation of the subjects.
DataMatrix canonical_row_order(const DataMatrix& X);

/// Puts X in canonical row order, normalizes or centers it according to
/// `mode`, then computes weights. The result is bitwise independent of the
/// subject order.
EdgeWeights edge_weights(const DataMatrix& X, WeightMode mode);

}  // namespace sparseph
