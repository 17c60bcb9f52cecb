#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sparseph {

/// Base class for every error raised by the library. The CLI prints
/// what() as a one-line diagnostic.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FileNotFound : public Error {
 public:
  explicit FileNotFound(const std::string& path)
      : Error("file not found: " + path), path_(path) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// Row and column are 1-based, counted over the file's lines and cells.
class ParseError : public Error {
 public:
  ParseError(std::size_t row, std::size_t col, const std::string& cell)
      : Error("parse error at row " + std::to_string(row) + ", column " +
              std::to_string(col) + ": '" + cell + "' is not a finite number"),
        row_(row),
        col_(col) {}
  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

class RaggedRows : public Error {
 public:
  RaggedRows(std::size_t row, std::size_t expected, std::size_t got)
      : Error("ragged rows: row " + std::to_string(row) + " has " +
              std::to_string(got) + " cells, expected " +
              std::to_string(expected)) {}
};

/// Column index is 0-based internally; the message reports it 1-based
/// together with the column label.
class ZeroVariance : public Error {
 public:
  ZeroVariance(std::size_t column, const std::string& label)
      : Error("zero variance in column " + std::to_string(column + 1) + " ('" +
              label + "')"),
        column_(column) {}
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

class NegativeLambda : public Error {
 public:
  explicit NegativeLambda(double lambda)
      : Error("lambda must be nonnegative, got " + std::to_string(lambda)) {}
};

class DomainTooSmall : public Error {
 public:
  DomainTooSmall(double domain_max, double max_weight)
      : Error("domain_max " + std::to_string(domain_max) +
              " is smaller than the largest edge weight " +
              std::to_string(max_weight)) {}
};

class NotATree : public Error {
 public:
  using Error::Error;
};

class GroupTooSmall : public Error {
 public:
  explicit GroupTooSmall(std::size_t n)
      : Error("group has " + std::to_string(n) +
              " subjects; the jackknife needs at least 3") {}
};

class EmptySample : public Error {
 public:
  EmptySample() : Error("rank-sum test needs two non-empty samples") {}
};

class NodeCountMismatch : public Error {
 public:
  NodeCountMismatch(std::size_t p1, std::size_t p2)
      : Error("node count mismatch: " + std::to_string(p1) + " vs " +
              std::to_string(p2)) {}
};

class InvalidConfig : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace sparseph
