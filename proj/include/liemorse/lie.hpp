#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "liemorse/poset.hpp"
#include "liemorse/ring.hpp"

namespace liemorse {

/// Basis element of a matrix Lie algebra: the unit e_ij, or the skew unit
/// e'_ab = e_ab - e_ba (a < b). Indices are 1-based.
struct BasisLabel {
  enum class Kind { MatrixUnit, SkewUnit };

  Kind kind = Kind::MatrixUnit;
  int row = 0;
  int col = 0;

  static BasisLabel unit(int i, int j) { return {Kind::MatrixUnit, i, j}; }
  static BasisLabel skew(int a, int b) { return {Kind::SkewUnit, a, b}; }

  bool is_diagonal() const { return kind == Kind::MatrixUnit && row == col; }
  std::string name() const;

  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
  friend auto operator<=>(const BasisLabel& a, const BasisLabel& b) {
    if (auto c = a.row <=> b.row; c != 0) return c;
    if (auto c = a.col <=> b.col; c != 0) return c;
    return a.kind <=> b.kind;
  }
};

struct BracketTerm {
  int index = 0;       ///< position in the basis
  std::int64_t coeff = 0;

  friend bool operator==(const BracketTerm&, const BracketTerm&) = default;
};

using BracketTable = std::map<std::pair<int, int>, std::vector<BracketTerm>>;

/// Lie algebra with a finite ordered basis and integer structure constants.
/// Brackets are stored for ordered pairs x < y; [y,x] = -[x,y] and [x,x] = 0.
/// The same object serves every coefficient ring by reduction.
class LieAlgebra {
 public:
  LieAlgebra(std::string name, std::vector<BasisLabel> labels, const BracketTable& brackets);

  const std::string& name() const { return name_; }
  int rank() const { return static_cast<int>(labels_.size()); }
  const std::vector<BasisLabel>& labels() const { return labels_; }
  const BasisLabel& label(int index) const { return labels_[static_cast<std::size_t>(index)]; }

  /// [x, y] for any two basis positions.
  std::vector<BracketTerm> bracket(int x, int y) const;
  /// Stored terms of [x, y] for x < y.
  const std::vector<BracketTerm>& ordered_bracket(int x, int y) const {
    return table_[static_cast<std::size_t>(x) * labels_.size() + static_cast<std::size_t>(y)];
  }

  /// Position of a label, or -1.
  int index_of(const BasisLabel& label) const;
  /// Largest matrix index appearing in any label.
  int matrix_size() const { return matrix_size_; }
  bool has_skew_units() const;

 private:
  std::string name_;
  std::vector<BasisLabel> labels_;
  std::vector<std::vector<BracketTerm>> table_;
  int matrix_size_ = 0;
};

/// gl_n^P: basis {e_ij : i <= j in P} (strict: i < j).
LieAlgebra gl_poset(const Poset& poset, bool strict);
inline LieAlgebra sol(int n) { return gl_poset(Poset::chain(n), false); }
inline LieAlgebra nil(int n) { return gl_poset(Poset::chain(n), true); }
inline LieAlgebra dgn(int n) { return gl_poset(Poset::antichain(n), false); }

/// so_n in characteristic 2 with basis {e'_ab : a < b} and {e_cc}.
LieAlgebra so_char2(int n);

/// Jacobi identity on every basis triple, with coefficients reduced in `ring`.
bool validate_lie(const LieAlgebra& g, const CoefficientRing& ring = CoefficientRing::integers());

}  // namespace liemorse
