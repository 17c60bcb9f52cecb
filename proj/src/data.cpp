#include "sparseph/data.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "sparseph/error.hpp"
#include "sparseph/format.hpp"

namespace sparseph {

namespace {

std::vector<std::string> index_labels(std::size_t count) {
  std::vector<std::string> labels(count);
  for (std::size_t i = 0; i < count; ++i) labels[i] = std::to_string(i + 1);
  return labels;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    cells.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

bool parse_real(std::string_view cell, double& out) {
  if (cell.empty()) return false;
  // from_chars rejects a leading '+', which strtod-style input allows.
  if (cell.front() == '+') cell.remove_prefix(1);
  const auto* end = cell.data() + cell.size();
  const auto [ptr, ec] = std::from_chars(cell.data(), end, out);
  return ec == std::errc() && ptr == end && std::isfinite(out);
}

void check_columns(const DataMatrix& X) {
  if (X.n() < 2) {
    throw InvalidArgument("normalization needs at least 2 subjects, got " +
                          std::to_string(X.n()));
  }
}

// Centers column j in place and returns its centered norm; throws when the
// column is constant.
double center_column(Eigen::Ref<Eigen::VectorXd> col, std::size_t j,
                     const DataMatrix& X) {
  const double scale = std::max(1.0, col.norm());
  col.array() -= col.mean();
  const double norm = col.norm();
  if (!(norm > 1e-12 * scale)) throw ZeroVariance(j, X.col_labels()[j]);
  return norm;
}

}  // namespace

DataMatrix::DataMatrix(Eigen::MatrixXd values,
                       std::vector<std::string> col_labels,
                       std::vector<std::string> row_labels)
    : values_(std::move(values)),
      col_labels_(std::move(col_labels)),
      row_labels_(std::move(row_labels)) {
  if (!values_.allFinite()) {
    for (Eigen::Index i = 0; i < values_.rows(); ++i) {
      for (Eigen::Index j = 0; j < values_.cols(); ++j) {
        if (!std::isfinite(values_(i, j))) {
          throw ParseError(static_cast<std::size_t>(i) + 1,
                           static_cast<std::size_t>(j) + 1,
                           std::to_string(values_(i, j)));
        }
      }
    }
  }
  if (col_labels_.empty()) col_labels_ = index_labels(p());
  if (row_labels_.empty()) row_labels_ = index_labels(n());
  if (col_labels_.size() != p() || row_labels_.size() != n()) {
    throw InvalidArgument("label count does not match matrix shape");
  }
}

DataMatrix DataMatrix::without_row(std::size_t row) const {
  const auto rows = values_.rows();
  const auto r = static_cast<Eigen::Index>(row);
  Eigen::MatrixXd reduced(rows - 1, values_.cols());
  reduced.topRows(r) = values_.topRows(r);
  reduced.bottomRows(rows - r - 1) = values_.bottomRows(rows - r - 1);
  auto labels = row_labels_;
  labels.erase(labels.begin() + r);
  return DataMatrix(std::move(reduced), col_labels_, std::move(labels));
}

Eigen::MatrixXd PackedSymmetric::dense() const {
  const auto n = static_cast<Eigen::Index>(p_);
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t j = 0; j < p_; ++j) {
    for (std::size_t k = j + 1; k < p_; ++k) {
      const double v = values_[index(j, k)];
      out(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) = v;
      out(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) = v;
    }
  }
  return out;
}

std::string_view to_string(WeightMode mode) {
  return mode == WeightMode::Correlation ? "correlation" : "covariance";
}

WeightMode parse_weight_mode(std::string_view text) {
  if (text == "correlation") return WeightMode::Correlation;
  if (text == "covariance") return WeightMode::Covariance;
  throw InvalidArgument("unknown weight mode '" + std::string(text) +
                        "' (expected correlation or covariance)");
}

double EdgeWeights::max_weight() const {
  const auto& v = weights.packed();
  return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end());
}

DataMatrix read_csv(std::istream& in, bool has_header) {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_no = 0;
  std::size_t width = 0;
  bool header_pending = has_header;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto cells = split_commas(line);
    if (header_pending) {
      for (auto c : cells) header.emplace_back(c);
      width = cells.size();
      header_pending = false;
      continue;
    }
    if (width == 0) width = cells.size();
    if (cells.size() != width) throw RaggedRows(line_no, width, cells.size());
    std::vector<double> row(cells.size());
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (!parse_real(cells[c], row[c])) {
        throw ParseError(line_no, c + 1, std::string(cells[c]));
      }
    }
    rows.push_back(std::move(row));
  }
  Eigen::MatrixXd values(static_cast<Eigen::Index>(rows.size()),
                         static_cast<Eigen::Index>(width));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < width; ++j) {
      values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          rows[i][j];
    }
  }
  return DataMatrix(std::move(values), std::move(header));
}

DataMatrix load_csv(const std::string& path, bool has_header) {
  std::ifstream in(path);
  if (!in) throw FileNotFound(path);
  return read_csv(in, has_header);
}

void write_csv(std::ostream& out, const DataMatrix& X, bool with_header) {
  if (with_header) {
    for (std::size_t j = 0; j < X.p(); ++j) {
      out << (j ? "," : "") << X.col_labels()[j];
    }
    out << '\n';
  }
  const auto& v = X.values();
  for (Eigen::Index i = 0; i < v.rows(); ++i) {
    for (Eigen::Index j = 0; j < v.cols(); ++j) {
      out << (j ? "," : "") << format_real(v(i, j));
    }
    out << '\n';
  }
}

NormalizedMatrix normalize_columns(const DataMatrix& X) {
  check_columns(X);
  Eigen::MatrixXd z = X.values();
  for (Eigen::Index j = 0; j < z.cols(); ++j) {
    const double norm = center_column(z.col(j), static_cast<std::size_t>(j), X);
    z.col(j) /= norm;
  }
  return NormalizedMatrix(std::move(z), X.col_labels());
}

CenteredMatrix center_columns(const DataMatrix& X) {
  check_columns(X);
  Eigen::MatrixXd c = X.values();
  for (Eigen::Index j = 0; j < c.cols(); ++j) {
    center_column(c.col(j), static_cast<std::size_t>(j), X);
  }
  return CenteredMatrix(std::move(c), X.col_labels());
}

namespace {

template <class Scale>
PackedSymmetric column_inner_products(const Eigen::MatrixXd& m, Scale scale) {
  const std::size_t p = static_cast<std::size_t>(m.cols());
  PackedSymmetric out(p);
  auto& packed = out.packed();
  std::size_t idx = 0;
  for (std::size_t j = 0; j < p; ++j) {
    const auto cj = m.col(static_cast<Eigen::Index>(j));
    for (std::size_t k = j + 1; k < p; ++k) {
      packed[idx++] = scale(cj.dot(m.col(static_cast<Eigen::Index>(k))));
    }
  }
  return out;
}

EdgeWeights absolute(PackedSymmetric signed_values, WeightMode mode) {
  for (auto& v : signed_values.packed()) v = std::abs(v);
  return EdgeWeights{mode, std::move(signed_values)};
}

}  // namespace

PackedSymmetric sample_correlations(const NormalizedMatrix& Z) {
  return column_inner_products(
      Z.values(), [](double c) { return std::clamp(c, -1.0, 1.0); });
}

PackedSymmetric sample_covariances(const CenteredMatrix& C) {
  const double denom = static_cast<double>(C.n()) - 1.0;
  return column_inner_products(C.values(),
                               [denom](double s) { return s / denom; });
}

EdgeWeights edge_weights(const NormalizedMatrix& Z) {
  return absolute(sample_correlations(Z), WeightMode::Correlation);
}

EdgeWeights edge_weights(const CenteredMatrix& C) {
  return absolute(sample_covariances(C), WeightMode::Covariance);
}

DataMatrix canonical_row_order(const DataMatrix& X) {
  const auto& v = X.values();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(v.rows()));
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<Eigen::Index>(i);
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    for (Eigen::Index j = 0; j < v.cols(); ++j) {
      if (v(a, j) != v(b, j)) return v(a, j) < v(b, j);
    }
    return false;
  });
  Eigen::MatrixXd sorted(v.rows(), v.cols());
  std::vector<std::string> labels;
  labels.reserve(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    sorted.row(static_cast<Eigen::Index>(i)) = v.row(order[i]);
    labels.push_back(X.row_labels()[static_cast<std::size_t>(order[i])]);
  }
  return DataMatrix(std::move(sorted), X.col_labels(), std::move(labels));
}

EdgeWeights edge_weights(const DataMatrix& X, WeightMode mode) {
  const DataMatrix canonical = canonical_row_order(X);
  return mode == WeightMode::Correlation ? edge_weights(normalize_columns(canonical))
                                         : edge_weights(center_columns(canonical));
}

}  // namespace sparseph
