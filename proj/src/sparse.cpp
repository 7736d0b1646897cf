#include "liemorse/sparse.hpp"

#include <algorithm>
#include <map>

#include "liemorse/errors.hpp"

namespace liemorse {

SparseMatrix SparseMatrix::from_triplets(std::size_t rows, std::size_t cols, std::vector<MatrixEntry> triplets,
                                         const CoefficientRing& ring) {
  SparseMatrix m(rows, cols);
  std::sort(triplets.begin(), triplets.end(), [](const MatrixEntry& a, const MatrixEntry& b) {
    return a.col != b.col ? a.col < b.col : a.row < b.row;
  });
  for (std::size_t i = 0; i < triplets.size();) {
    const auto& head = triplets[i];
    if (head.row >= rows || head.col >= cols) throw InvalidArgument("matrix entry out of range");
    Scalar sum = 0;
    std::size_t j = i;
    while (j < triplets.size() && triplets[j].row == head.row && triplets[j].col == head.col) sum += triplets[j++].value;
    sum = ring.reduce(sum);
    if (sum != 0) m.columns_[head.col].push_back({head.row, std::move(sum)});
    i = j;
  }
  return m;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

Scalar SparseMatrix::at(std::size_t r, std::size_t c) const {
  const auto& col = columns_[c];
  auto it = std::lower_bound(col.begin(), col.end(), r, [](const Entry& e, std::size_t row) { return e.row < row; });
  if (it == col.end() || it->row != r) return Scalar(0);
  return it->value;
}

std::vector<MatrixEntry> SparseMatrix::triplets() const {
  std::vector<MatrixEntry> out;
  out.reserve(nonzeros());
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    for (const auto& e : columns_[c]) out.push_back({e.row, static_cast<std::uint32_t>(c), e.value});
  }
  return out;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols(), rows_);
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    for (const auto& e : columns_[c]) t.columns_[e.row].push_back({static_cast<std::uint32_t>(c), e.value});
  }
  return t;
}

SparseMatrix SparseMatrix::restrict(std::span<const std::uint32_t> keep_rows,
                                    std::span<const std::uint32_t> keep_cols) const {
  constexpr auto kDropped = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> new_row(rows_, kDropped);
  for (std::size_t i = 0; i < keep_rows.size(); ++i) new_row[keep_rows[i]] = static_cast<std::uint32_t>(i);
  SparseMatrix out(keep_rows.size(), keep_cols.size());
  for (std::size_t j = 0; j < keep_cols.size(); ++j) {
    for (const auto& e : columns_[keep_cols[j]]) {
      if (new_row[e.row] != kDropped) out.columns_[j].push_back({new_row[e.row], e.value});
    }
  }
  return out;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows_ != b.rows_ || a.columns_.size() != b.columns_.size()) return false;
  for (std::size_t c = 0; c < a.columns_.size(); ++c) {
    const auto& x = a.columns_[c];
    const auto& y = b.columns_[c];
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].row != y[i].row || x[i].value != y[i].value) return false;
    }
  }
  return true;
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b, const CoefficientRing& ring) {
  if (a.cols() != b.rows()) throw InvalidArgument("matrix dimensions do not match for multiplication");
  SparseMatrix out(a.rows(), b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c) {
    std::map<std::uint32_t, Scalar> acc;
    for (const auto& be : b.column(c)) {
      for (const auto& ae : a.column(be.row)) acc[ae.row] += ae.value * be.value;
    }
    SparseMatrix::Column col;
    for (auto& [row, v] : acc) {
      Scalar r = ring.reduce(v);
      if (r != 0) col.push_back({row, std::move(r)});
    }
    out.set_column(c, std::move(col));
  }
  return out;
}

}  // namespace liemorse
