#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <tuple>
#include <vector>

#include "liemorse/sparse.hpp"

namespace liemorse::detail {

/// Sparse Gaussian elimination on a row-wise copy of a matrix. Pivots are
/// taken from the shortest row containing a unit, at its unit entry with the
/// fewest column entries. After unit elimination only non-unit entries remain;
/// the integer specialization continues with Euclidean pivoting.
template <class Ops>
class SparseEliminator {
 public:
  using T = typename Ops::Value;
  struct Item {
    std::uint32_t col;
    T val;
  };
  using Row = std::vector<Item>;

  SparseEliminator(const SparseMatrix& a, Ops ops)
      : ops_(std::move(ops)),
        rows_(a.rows()),
        col_rows_(a.cols()),
        col_count_(a.cols(), 0),
        row_active_(a.rows(), 1),
        key_(a.rows()) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      for (const auto& e : a.column(c)) {
        T v = ops_.convert(e.value);
        if (ops_.is_zero(v)) continue;
        rows_[e.row].push_back({static_cast<std::uint32_t>(c), std::move(v)});
        col_rows_[c].push_back(e.row);
        ++col_count_[c];
      }
    }
    for (std::uint32_t r = 0; r < rows_.size(); ++r) {
      if (rows_[r].empty()) {
        row_active_[r] = 0;
      } else {
        enqueue(r);
      }
    }
  }

  /// Eliminates unit pivots until none is left. Returns the number of pivots.
  std::size_t eliminate_units() {
    std::size_t pivots = 0;
    while (!queue_.empty()) {
      const auto [no_unit, len, r] = *queue_.begin();
      if (no_unit) break;
      queue_.erase(queue_.begin());
      const Item* best = nullptr;
      for (const auto& it : rows_[r]) {
        if (ops_.is_unit(it.val) && (!best || col_count_[it.col] < col_count_[best->col])) best = &it;
      }
      const std::uint32_t c = best->col;
      const T inv = ops_.inverse(best->val);
      for (std::uint32_t i : rows_in_column(c, r)) {
        T f = ops_.mul(entry(i, c), inv);
        axpy(i, r, f);
      }
      retire_row(r);
      ++pivots;
    }
    return pivots;
  }

  /// Euclidean elimination of the remaining (non-unit) entries over Z.
  /// Appends |pivot| for every pivot found.
  void eliminate_euclidean(std::vector<T>& diagonal) {
    while (true) {
      std::uint32_t r = 0;
      std::uint32_t c = 0;
      bool found = false;
      T best;
      for (std::uint32_t i = 0; i < rows_.size(); ++i) {
        if (!row_active_[i]) continue;
        for (const auto& it : rows_[i]) {
          T mag = abs(it.val);
          if (!found || mag < best) {
            best = mag;
            r = i;
            c = it.col;
            found = true;
          }
        }
      }
      if (!found) return;
      while (true) {
        const T p = entry(r, c);
        bool moved = false;
        for (std::uint32_t i : rows_in_column(c, r)) {
          T q = entry(i, c) / p;
          if (q != 0) axpy(i, r, q);
          if (has_entry(i, c)) {
            r = i;
            moved = true;
            break;
          }
        }
        if (moved) continue;
        for (auto& it : rows_[r]) {
          if (it.col == c) continue;
          T rem = it.val % p;
          if (rem != 0) {
            // column operation col_j -= q col_c touches only row r
            it.val = rem;
            c = it.col;
            moved = true;
            break;
          }
        }
        if (moved) continue;
        diagonal.push_back(abs(p));
        retire_row(r);
        break;
      }
    }
  }

  bool empty() const {
    for (std::uint32_t i = 0; i < rows_.size(); ++i) {
      if (row_active_[i] && !rows_[i].empty()) return false;
    }
    return true;
  }

 private:
  using Key = std::tuple<int, std::size_t, std::uint32_t>;

  void enqueue(std::uint32_t r) {
    const bool unit = std::any_of(rows_[r].begin(), rows_[r].end(), [&](const Item& it) { return ops_.is_unit(it.val); });
    key_[r] = Key(unit ? 0 : 1, rows_[r].size(), r);
    queue_.insert(key_[r]);
  }

  const T& entry(std::uint32_t i, std::uint32_t c) const {
    const auto& row = rows_[i];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const Item& x, std::uint32_t col) { return x.col < col; });
    return it->val;
  }

  bool has_entry(std::uint32_t i, std::uint32_t c) const {
    const auto& row = rows_[i];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const Item& x, std::uint32_t col) { return x.col < col; });
    return it != row.end() && it->col == c;
  }

  std::vector<std::uint32_t> rows_in_column(std::uint32_t c, std::uint32_t except) {
    auto& list = col_rows_[c];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    std::erase_if(list, [&](std::uint32_t i) { return !row_active_[i] || !has_entry(i, c); });
    std::vector<std::uint32_t> out;
    for (std::uint32_t i : list) {
      if (i != except) out.push_back(i);
    }
    return out;
  }

  /// row_i -= f * row_r
  void axpy(std::uint32_t i, std::uint32_t r, const T& f) {
    const Row& a = rows_[i];
    const Row& b = rows_[r];
    Row out;
    out.reserve(a.size() + b.size());
    std::size_t x = 0;
    std::size_t y = 0;
    while (x < a.size() || y < b.size()) {
      if (y == b.size() || (x < a.size() && a[x].col < b[y].col)) {
        out.push_back(a[x++]);
      } else if (x == a.size() || b[y].col < a[x].col) {
        T v = ops_.neg(ops_.mul(f, b[y].val));
        if (!ops_.is_zero(v)) {
          ++col_count_[b[y].col];
          col_rows_[b[y].col].push_back(i);
          out.push_back({b[y].col, std::move(v)});
        }
        ++y;
      } else {
        T v = ops_.sub(a[x].val, ops_.mul(f, b[y].val));
        if (ops_.is_zero(v)) {
          --col_count_[a[x].col];
        } else {
          out.push_back({a[x].col, std::move(v)});
        }
        ++x;
        ++y;
      }
    }
    if (row_active_[i]) queue_.erase(key_[i]);
    rows_[i] = std::move(out);
    if (rows_[i].empty()) {
      row_active_[i] = 0;
    } else {
      enqueue(i);
    }
  }

  void retire_row(std::uint32_t r) {
    queue_.erase(key_[r]);
    for (const auto& it : rows_[r]) --col_count_[it.col];
    rows_[r].clear();
    row_active_[r] = 0;
  }

  Ops ops_;
  std::vector<Row> rows_;
  std::vector<std::vector<std::uint32_t>> col_rows_;
  std::vector<std::uint32_t> col_count_;
  std::vector<char> row_active_;
  std::vector<Key> key_;
  std::set<Key> queue_;
};

struct IntegerOps {
  using Value = mpz_class;
  Value convert(const Scalar& s) const { return s.get_num(); }
  bool is_zero(const Value& v) const { return v == 0; }
  bool is_unit(const Value& v) const { return v == 1 || v == -1; }
  Value inverse(const Value& v) const { return v; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value neg(const Value& a) const { return -a; }
};

struct RationalOps {
  using Value = mpq_class;
  Value convert(const Scalar& s) const { return s; }
  bool is_zero(const Value& v) const { return v == 0; }
  bool is_unit(const Value& v) const { return v != 0; }
  Value inverse(const Value& v) const { return 1 / v; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value neg(const Value& a) const { return -a; }
};

struct ModularOps {
  using Value = std::uint64_t;
  std::uint64_t p;
  Value convert(const Scalar& s) const {
    mpz_class num = s.get_num() % mpz_class(static_cast<unsigned long>(p));
    if (num < 0) num += static_cast<unsigned long>(p);
    mpz_class den = s.get_den() % mpz_class(static_cast<unsigned long>(p));
    const Value n = num.get_ui();
    return den == 1 ? n : mul(n, inverse(den.get_ui()));
  }
  bool is_zero(Value v) const { return v == 0; }
  bool is_unit(Value v) const { return v != 0; }
  Value inverse(Value v) const {
    // Fermat: v^(p-2)
    Value result = 1;
    Value base = v % p;
    for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
    }
    return result;
  }
  Value mul(Value a, Value b) const {
    return static_cast<Value>(static_cast<unsigned __int128>(a) * b % p);
  }
  Value sub(Value a, Value b) const { return a >= b ? a - b : a + (p - b); }
  Value neg(Value a) const { return a == 0 ? 0 : p - a; }
};

}  // namespace liemorse::detail
