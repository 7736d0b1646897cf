#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "liemorse/ring.hpp"

namespace liemorse {

struct MatrixEntry {
  std::uint32_t row = 0;
  std::uint32_t col = 0;
  Scalar value;
};

/// Column-compressed sparse matrix with exact entries. Within a column,
/// entries are sorted by row; there are no explicit zeros and no duplicates.
class SparseMatrix {
 public:
  struct Entry {
    std::uint32_t row;
    Scalar value;
  };
  using Column = std::vector<Entry>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  /// Builds from unordered triplets; duplicates are summed in `ring` and zeros dropped.
  static SparseMatrix from_triplets(std::size_t rows, std::size_t cols, std::vector<MatrixEntry> triplets,
                                    const CoefficientRing& ring);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }

  const Column& column(std::size_t c) const { return columns_[c]; }
  /// Replaces a column; `entries` must be sorted by row with no zeros.
  void set_column(std::size_t c, Column entries) { columns_[c] = std::move(entries); }

  /// Zero when absent.
  Scalar at(std::size_t r, std::size_t c) const;

  /// All entries in (col, row) order.
  std::vector<MatrixEntry> triplets() const;

  SparseMatrix transpose() const;

  /// Keeps the listed rows and columns (in the given order, which must be increasing).
  SparseMatrix restrict(std::span<const std::uint32_t> keep_rows, std::span<const std::uint32_t> keep_cols) const;

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::vector<Column> columns_;
};

/// a * b computed in `ring`.
SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b, const CoefficientRing& ring);

}  // namespace liemorse
