#include "liemorse/subcomplex.hpp"

#include <algorithm>
#include <sstream>

#include "liemorse/errors.hpp"
#include "liemorse/morse.hpp"

namespace liemorse {

bool weights_divisible(const LieAlgebra& g, Cell v, std::uint64_t p) {
  const auto m = static_cast<long>(p);
  for (const auto& [x, w] : wedge_weights(g, v)) {
    if (w % m != 0) return false;
  }
  return true;
}

namespace {

void require_p(std::uint64_t p) {
  if (p < 2) throw InvalidArgument("the weight modulus must be at least 2");
}

/// Fast weight filter: per basis position the row and column index.
struct WeightFilter {
  std::vector<std::pair<int, int>> ends;
  long p;
  int n;

  WeightFilter(const LieAlgebra& g, std::uint64_t modulus) : p(static_cast<long>(modulus)), n(g.matrix_size()) {
    for (const auto& l : g.labels()) {
      if (l.kind == BasisLabel::Kind::SkewUnit) throw Unsupported("weights are defined for matrix-unit bases only");
      ends.emplace_back(l.row, l.col);
    }
  }

  bool operator()(Cell v) const {
    long w[66] = {};
    for (; v != 0; v &= v - 1) {
      const auto [a, b] = ends[static_cast<std::size_t>(std::countr_zero(v))];
      if (a == b) continue;
      --w[a];
      ++w[b];
    }
    for (int x = 1; x <= n; ++x) {
      if (w[x] % p != 0) return false;
    }
    return true;
  }
};

}  // namespace

ChainComplex p_subcomplex(std::shared_ptr<const LieAlgebra> g, const CoefficientRing& ring, std::uint64_t p,
                          BuildOptions options) {
  require_p(p);
  WeightFilter filter(*g, p);
  auto outer = std::move(options.filter);
  options.filter = [filter, outer](Cell v) { return filter(v) && (!outer || outer(v)); };
  options.filter_mode = FilterMode::Subcomplex;
  return build_ce_complex(std::move(g), ring, options);
}

ChainComplex p_subcomplex(const ChainComplex& c, std::uint64_t p) {
  require_p(p);
  if (c.kind != CellKind::Wedge || !c.algebra) throw InvalidArgument("p_subcomplex needs a Chevalley-Eilenberg complex");
  WeightFilter filter(*c.algebra, p);
  ChainComplex r = c;
  std::vector<std::vector<std::uint32_t>> keep(c.cells.size());
  for (std::size_t k = 0; k < c.cells.size(); ++k) {
    r.cells[k].clear();
    for (std::uint32_t i = 0; i < c.cells[k].size(); ++i) {
      if (filter(c.cells[k][i])) {
        keep[k].push_back(i);
        r.cells[k].push_back(c.cells[k][i]);
      }
    }
  }
  for (std::size_t k = 0; k < c.cells.size(); ++k) {
    if (k == 0) {
      r.boundary[0] = SparseMatrix(0, keep[0].size());
      continue;
    }
    std::vector<char> kept_row(c.cells[k - 1].size(), 0);
    for (auto i : keep[k - 1]) kept_row[i] = 1;
    for (auto j : keep[k]) {
      for (const auto& e : c.boundary[k].column(j)) {
        if (!kept_row[e.row]) throw PreconditionViolated("weight filter is not closed under the boundary");
      }
    }
    r.boundary[k] = c.boundary[k].restrict(keep[k - 1], keep[k]);
  }
  return r;
}

ChainComplex tensor_complex(const ChainComplex& a, const ChainComplex& b) {
  if (!(a.ring == b.ring)) throw InvalidArgument("tensor factors must have the same ring");
  if (!a.is_complete() || !b.is_complete()) throw InvalidArgument("tensor factors must be fully materialized");
  const int top = a.top_degree() + b.top_degree();
  ChainComplex t = ChainComplex::empty(a.ring, CellKind::TensorPair, top);
  t.left = std::make_shared<const ChainComplex>(a);
  t.right = std::make_shared<const ChainComplex>(b);
  for (int k = 0; k <= top; ++k) {
    auto& basis = t.cells[static_cast<std::size_t>(k)];
    for (int i = std::max(0, k - b.top_degree()); i <= std::min(k, a.top_degree()); ++i) {
      for (std::uint32_t x = 0; x < a.dim(i); ++x) {
        for (std::uint32_t y = 0; y < b.dim(k - i); ++y) basis.push_back(tensor_cell(i, x, y));
      }
    }
  }
  for (int k = 0; k <= top; ++k) {
    const auto ku = static_cast<std::size_t>(k);
    if (k == 0) {
      t.boundary[0] = SparseMatrix(0, t.dim(0));
      continue;
    }
    std::vector<MatrixEntry> entries;
    for (std::uint32_t col = 0; col < t.cells[ku].size(); ++col) {
      const Cell cell = t.cells[ku][col];
      const int i = tensor_left_degree(cell);
      const int j = k - i;
      const auto x = tensor_left(cell);
      const auto y = tensor_right(cell);
      if (i > 0) {
        for (const auto& e : a.boundary[static_cast<std::size_t>(i)].column(x)) {
          entries.push_back({*t.index_of(k - 1, tensor_cell(i - 1, e.row, y)), col, e.value});
        }
      }
      if (j > 0) {
        for (const auto& e : b.boundary[static_cast<std::size_t>(j)].column(y)) {
          entries.push_back({*t.index_of(k - 1, tensor_cell(i, x, e.row)), col, i % 2 == 0 ? e.value : Scalar(-e.value)});
        }
      }
    }
    t.boundary[ku] = SparseMatrix::from_triplets(t.dim(k - 1), t.dim(k), std::move(entries), a.ring);
  }
  return t;
}

std::string TensorReport::to_string() const {
  std::ostringstream out;
  for (const auto& d : degrees) {
    out << "deg " << d.degree << ": reduced " << d.reduced_dim << ", tensor " << d.tensor_dim
        << (d.bijective ? ", bijective" : ", NOT bijective") << (d.boundary_equal ? ", boundary equal" : ", boundary differs")
        << '\n';
  }
  out << (ok ? "factorization holds" : "factorization FAILS") << '\n';
  return out.str();
}

TensorReport verify_tensor_factorization(const Poset& poset, std::uint64_t p) {
  if (!is_prime(p)) throw CompositeModulus(std::to_string(p) + " is not prime");
  const auto ring = CoefficientRing::modular(p);
  const int n = poset.size();
  auto g = std::make_shared<const LieAlgebra>(gl_poset(poset, false));
  auto strict = std::make_shared<const LieAlgebra>(gl_poset(poset, true));
  auto diag = std::make_shared<const LieAlgebra>(gl_poset(Poset::antichain(n), false));
  const auto reduced = build_normalized_ce_complex(g, ring);
  const auto tensor = tensor_complex(p_subcomplex(strict, ring, p), build_ce_complex(diag, ring));
  const auto& left = *tensor.left;
  const auto& right = *tensor.right;

  // basis position in g -> position in strict or diag
  std::vector<int> strict_pos(static_cast<std::size_t>(g->rank()), -1);
  std::vector<int> diag_pos(static_cast<std::size_t>(g->rank()), -1);
  for (int i = 0; i < g->rank(); ++i) {
    const auto& l = g->label(i);
    (l.is_diagonal() ? diag_pos : strict_pos)[static_cast<std::size_t>(i)] =
        l.is_diagonal() ? diag->index_of(l) : strict->index_of(l);
  }

  TensorReport report;
  report.ok = true;
  // image[k][i] = (tensor index, sign) of reduced cell i in degree k
  std::vector<std::vector<std::pair<std::uint32_t, int>>> image(reduced.cells.size());
  for (int k = 0; k <= reduced.top_degree(); ++k) {
    const auto ku = static_cast<std::size_t>(k);
    TensorDegreeReport d;
    d.degree = k;
    d.reduced_dim = reduced.dim(k);
    d.tensor_dim = tensor.dim(k);
    d.bijective = d.reduced_dim == d.tensor_dim;
    std::vector<char> hit(tensor.dim(k), 0);
    for (const Cell v : reduced.cells[ku]) {
      std::vector<int> order;
      Cell a = 0;
      Cell b = 0;
      for (int i : wedge_indices(v)) {
        if (strict_pos[static_cast<std::size_t>(i)] >= 0) {
          a |= bit(strict_pos[static_cast<std::size_t>(i)]);
        } else {
          b |= bit(diag_pos[static_cast<std::size_t>(i)]);
        }
      }
      // position list in (nondiagonal..., diagonal...) order, expressed as g positions
      for (int i : wedge_indices(v)) {
        if (strict_pos[static_cast<std::size_t>(i)] >= 0) order.push_back(i);
      }
      for (int i : wedge_indices(v)) {
        if (diag_pos[static_cast<std::size_t>(i)] >= 0) order.push_back(i);
      }
      const int sign = wedge_sign(order);
      const int i = cell_degree(a);
      const auto ai = left.index_of(i, a);
      const auto bi = right.index_of(k - i, b);
      std::optional<std::uint32_t> ti;
      if (ai && bi) ti = tensor.index_of(k, tensor_cell(i, *ai, *bi));
      if (!ti || hit[*ti]) {
        d.bijective = false;
        image[ku].emplace_back(0, 0);
        continue;
      }
      hit[*ti] = 1;
      image[ku].emplace_back(*ti, sign);
    }
    report.degrees.push_back(d);
  }
  for (int k = 0; k <= reduced.top_degree(); ++k) {
    auto& d = report.degrees[static_cast<std::size_t>(k)];
    const bool maps = d.bijective && (k == 0 || report.degrees[static_cast<std::size_t>(k - 1)].bijective);
    if (maps) {
      std::vector<MatrixEntry> entries;
      for (const auto& e : reduced.boundary[static_cast<std::size_t>(k)].triplets()) {
        const auto [r, rs] = image[static_cast<std::size_t>(k - 1)][e.row];
        const auto [c, cs] = image[static_cast<std::size_t>(k)][e.col];
        entries.push_back({r, c, rs * cs == 1 ? e.value : Scalar(-e.value)});
      }
      const auto mapped = SparseMatrix::from_triplets(tensor.dim(k - 1), tensor.dim(k), std::move(entries), ring);
      d.boundary_equal = mapped == tensor.boundary[static_cast<std::size_t>(k)];
    }
    report.ok = report.ok && d.bijective && d.boundary_equal;
  }
  return report;
}

std::vector<std::size_t> predicted_mod_p_dims(const Poset& poset, std::uint64_t p, int kmax) {
  if (!is_prime(p)) throw CompositeModulus(std::to_string(p) + " is not prime");
  const int n = poset.size();
  auto strict = std::make_shared<const LieAlgebra>(gl_poset(poset, true));
  const auto sub = p_subcomplex(strict, CoefficientRing::modular(p), p);
  const auto h = homology_over_field(sub).dims();
  std::vector<std::size_t> binom(static_cast<std::size_t>(n + 1), 1);
  for (int j = 1; j <= n; ++j) {
    binom[static_cast<std::size_t>(j)] = binom[static_cast<std::size_t>(j - 1)] * static_cast<std::size_t>(n - j + 1) /
                                         static_cast<std::size_t>(j);
  }
  auto dims = kunneth_field_dims(h, binom);
  if (kmax >= 0) dims.resize(static_cast<std::size_t>(kmax + 1), 0);
  return dims;
}

HomologyTable integral_p_complex_homology(const Poset& poset, std::uint64_t p, bool strict) {
  auto g = std::make_shared<const LieAlgebra>(gl_poset(poset, strict));
  return homology_over_Z(p_subcomplex(g, CoefficientRing::integers(), p));
}

}  // namespace liemorse
