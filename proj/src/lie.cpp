#include "liemorse/lie.hpp"

#include <algorithm>

#include "liemorse/errors.hpp"

namespace liemorse {

std::string BasisLabel::name() const {
  const std::string prefix = kind == Kind::SkewUnit ? "e'" : "e";
  return prefix + std::to_string(row) + (row > 9 || col > 9 ? "," : "") + std::to_string(col);
}

LieAlgebra::LieAlgebra(std::string name, std::vector<BasisLabel> labels, const BracketTable& brackets)
    : name_(std::move(name)), labels_(std::move(labels)) {
  const auto n = labels_.size();
  if (n > 64) throw Unsupported("Lie algebras of rank above 64 are not supported");
  table_.resize(n * n);
  for (const auto& [key, terms] : brackets) {
    auto [x, y] = key;
    if (x < 0 || y < 0 || static_cast<std::size_t>(x) >= n || static_cast<std::size_t>(y) >= n || x >= y) {
      throw InvalidArgument("bracket key must be an ordered pair of basis positions");
    }
    std::vector<BracketTerm> clean;
    for (const auto& t : terms) {
      if (t.index < 0 || static_cast<std::size_t>(t.index) >= n) throw InvalidArgument("bracket term out of range");
      if (t.coeff == 0) continue;
      auto it = std::find_if(clean.begin(), clean.end(), [&](const BracketTerm& c) { return c.index == t.index; });
      if (it == clean.end()) {
        clean.push_back(t);
      } else {
        it->coeff += t.coeff;
      }
    }
    std::erase_if(clean, [](const BracketTerm& t) { return t.coeff == 0; });
    std::sort(clean.begin(), clean.end(), [](const auto& a, const auto& b) { return a.index < b.index; });
    table_[static_cast<std::size_t>(x) * n + static_cast<std::size_t>(y)] = std::move(clean);
  }
  for (const auto& l : labels_) matrix_size_ = std::max({matrix_size_, l.row, l.col});
}

std::vector<BracketTerm> LieAlgebra::bracket(int x, int y) const {
  if (x == y) return {};
  if (x < y) return ordered_bracket(x, y);
  auto terms = ordered_bracket(y, x);
  for (auto& t : terms) t.coeff = -t.coeff;
  return terms;
}

int LieAlgebra::index_of(const BasisLabel& label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || !(*it == label)) return -1;
  return static_cast<int>(it - labels_.begin());
}

bool LieAlgebra::has_skew_units() const {
  return std::any_of(labels_.begin(), labels_.end(),
                     [](const BasisLabel& l) { return l.kind == BasisLabel::Kind::SkewUnit; });
}

LieAlgebra gl_poset(const Poset& poset, bool strict) {
  const int n = poset.size();
  std::vector<BasisLabel> labels;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (strict ? poset.less(i, j) : poset.leq(i, j)) labels.push_back(BasisLabel::unit(i, j));
    }
  }
  std::sort(labels.begin(), labels.end());

  LieAlgebra shape("", labels, {});
  BracketTable table;
  for (int x = 0; x < shape.rank(); ++x) {
    for (int y = x + 1; y < shape.rank(); ++y) {
      const auto& [a, b] = std::pair(labels[static_cast<std::size_t>(x)].row, labels[static_cast<std::size_t>(x)].col);
      const auto& [c, d] = std::pair(labels[static_cast<std::size_t>(y)].row, labels[static_cast<std::size_t>(y)].col);
      // [e_ab, e_cd] = delta_bc e_ad - delta_ad e_cb
      std::vector<BracketTerm> terms;
      if (b == c) {
        if (int t = shape.index_of(BasisLabel::unit(a, d)); t >= 0) terms.push_back({t, 1});
      }
      if (a == d) {
        if (int t = shape.index_of(BasisLabel::unit(c, b)); t >= 0) terms.push_back({t, -1});
      }
      if (!terms.empty()) table[{x, y}] = std::move(terms);
    }
  }
  std::string name;
  if (poset == Poset::chain(n)) {
    name = std::string(strict ? "nil" : "sol") + std::to_string(n);
  } else if (poset == Poset::antichain(n) && !strict) {
    name = "dgn" + std::to_string(n);
  } else {
    name = std::string(strict ? "gl<" : "gl<=") + std::to_string(n);
  }
  return LieAlgebra(name, std::move(labels), table);
}

LieAlgebra so_char2(int n) {
  if (n < 1) throw InvalidArgument("so_n needs n >= 1");
  std::vector<BasisLabel> labels;
  for (int a = 1; a <= n; ++a) {
    for (int b = a; b <= n; ++b) labels.push_back(a == b ? BasisLabel::unit(a, a) : BasisLabel::skew(a, b));
  }
  std::sort(labels.begin(), labels.end());
  LieAlgebra shape("", labels, {});

  // e'_xy with x > y is -e'_yx; e'_xx vanishes.
  auto skew_term = [&](int x, int y, std::int64_t coeff, std::vector<BracketTerm>& out) {
    if (x == y) return;
    if (x > y) {
      std::swap(x, y);
      coeff = -coeff;
    }
    out.push_back({shape.index_of(BasisLabel::skew(x, y)), coeff});
  };

  BracketTable table;
  for (int x = 0; x < shape.rank(); ++x) {
    for (int y = x + 1; y < shape.rank(); ++y) {
      const auto& u = labels[static_cast<std::size_t>(x)];
      const auto& v = labels[static_cast<std::size_t>(y)];
      std::vector<BracketTerm> terms;
      if (u.is_diagonal() && v.is_diagonal()) continue;
      if (!u.is_diagonal() && !v.is_diagonal()) {
        const int a = u.row, b = u.col, c = v.row, d = v.col;
        if (b == c) skew_term(a, d, 1, terms);
        if (a == d) skew_term(b, c, 1, terms);
        if (b == d) skew_term(a, c, -1, terms);
        if (a == c) skew_term(b, d, -1, terms);
      } else {
        // [e'_ab, e_cc] = delta_bc e'_ac + delta_ac e'_bc
        const bool skew_first = !u.is_diagonal();
        const auto& s = skew_first ? u : v;
        const int c = (skew_first ? v : u).row;
        std::vector<BracketTerm> raw;
        if (s.col == c) skew_term(s.row, c, 1, raw);
        if (s.row == c) skew_term(s.col, c, 1, raw);
        for (auto& t : raw) terms.push_back({t.index, skew_first ? t.coeff : -t.coeff});
      }
      if (!terms.empty()) table[{x, y}] = std::move(terms);
    }
  }
  return LieAlgebra("so" + std::to_string(n), std::move(labels), table);
}

bool validate_lie(const LieAlgebra& g, const CoefficientRing& ring) {
  const int n = g.rank();
  std::vector<std::int64_t> acc(static_cast<std::size_t>(n));
  // [[x,y],z] accumulated into acc with the given sign
  auto add_nested = [&](int x, int y, int z) {
    for (const auto& t : g.bracket(x, y)) {
      for (const auto& u : g.bracket(t.index, z)) acc[static_cast<std::size_t>(u.index)] += t.coeff * u.coeff;
    }
  };
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      for (int z = y + 1; z < n; ++z) {
        std::fill(acc.begin(), acc.end(), 0);
        add_nested(x, y, z);
        add_nested(y, z, x);
        add_nested(z, x, y);
        for (auto v : acc) {
          if (v != 0 && !ring.is_zero(Scalar(static_cast<long>(v)))) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace liemorse
