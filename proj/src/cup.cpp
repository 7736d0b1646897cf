#include "liemorse/cup.hpp"

#include <set>

#include "liemorse/errors.hpp"
#include "liemorse/morse.hpp"

namespace liemorse {

Cochain cup_product(const Cochain& a, const Cochain& b, const ChainComplex& c) {
  Cochain out;
  out.degree = a.degree + b.degree;
  if (out.degree > c.top_degree() || a.is_zero() || b.is_zero()) return out;
  const int i = a.degree;
  const int total = out.degree;
  const auto& basis = c.cells[static_cast<std::size_t>(total)];
  const int shift = c.kind == CellKind::Simplex ? c.degree_shift - 1 : 0;
  if (c.kind == CellKind::TensorPair) throw Unsupported("cup products on tensor complexes are not supported");
  for (std::uint32_t x = 0; x < basis.size(); ++x) {
    const auto factors = wedge_indices(basis[x]);
    const int width = static_cast<int>(factors.size());
    Scalar sum = 0;
    const int take = i - shift;
    if (take < 0 || take > width) continue;
    // subsets of positions of size `take`, as bitmasks over the factor list
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << width); ++s) {
      if (std::popcount(s) != take) continue;
      Cell first = 0;
      Cell second = 0;
      int position_sum = 0;
      for (int t = 0; t < width; ++t) {
        if (s & (std::uint64_t{1} << t)) {
          first |= bit(factors[static_cast<std::size_t>(t)]);
          position_sum += t;
        } else {
          second |= bit(factors[static_cast<std::size_t>(t)]);
        }
      }
      const auto fi = c.index_of(i, first);
      if (!fi) continue;
      auto av = a.values.find(*fi);
      if (av == a.values.end()) continue;
      const auto si = c.index_of(b.degree, second);
      if (!si) continue;
      auto bv = b.values.find(*si);
      if (bv == b.values.end()) continue;
      const bool odd = (position_sum - take * (take - 1) / 2) % 2 != 0;
      Scalar term = av->second * bv->second;
      sum += odd ? Scalar(-term) : term;
    }
    sum = c.ring.reduce(sum);
    if (sum != 0) out.values.emplace(x, sum);
  }
  return out;
}

Cochain negate(const Cochain& a, const CoefficientRing& ring) {
  Cochain out{a.degree, {}};
  for (const auto& [i, v] : a.values) out.values.emplace(i, ring.neg(v));
  return out;
}

std::vector<std::vector<Cochain>> cohomology_dual_basis(const ChainComplex& c) {
  for (int k = 0; k <= c.top_degree(); ++k) {
    if (!c.boundary[static_cast<std::size_t>(k)].is_zero()) {
      throw NonzeroDifferential("boundary in degree " + std::to_string(k) + " is nonzero");
    }
  }
  std::vector<std::vector<Cochain>> out(c.cells.size());
  for (int k = 0; k <= c.top_degree(); ++k) {
    for (std::uint32_t i = 0; i < c.dim(k); ++i) out[static_cast<std::size_t>(k)].push_back({k, {{i, Scalar(1)}}});
  }
  return out;
}

namespace {

std::string describe(const Cochain& a, const ChainComplex& c) {
  if (a.is_zero()) return "0";
  std::string s;
  for (const auto& [i, v] : a.values) {
    if (!s.empty()) s += " + ";
    s += v.get_str() + "*[" + c.cell_name(a.degree, i) + "]";
  }
  return s;
}

}  // namespace

ExteriorReport verify_exterior_algebra(const Poset& poset, const CoefficientRing& ring) {
  const int n = poset.size();
  const bool field_ok = ring.is_rationals() ||
                        (ring.is_modular() && is_prime(ring.modulus()) && ring.modulus() + 1 >= static_cast<std::uint64_t>(n));
  if (!field_ok) {
    throw PreconditionViolated("exterior algebra structure needs Q or Z/p with p >= n-1, got " + ring.name());
  }
  const bool extended = ring.is_modular() && ring.modulus() + 1 == static_cast<std::uint64_t>(n) && poset.is_bounded();

  auto g = std::make_shared<const LieAlgebra>(gl_poset(poset, false));
  const auto reduced = build_normalized_ce_complex(g, ring);
  const auto basis = cohomology_dual_basis(reduced);

  ExteriorReport report;
  std::vector<Cochain> gens;
  std::vector<std::string> names;
  for (int x = 1; x <= n; ++x) {
    const auto idx = reduced.index_of(1, bit(g->index_of(BasisLabel::unit(x, x))));
    if (!idx) {
      report.failure = "diagonal e" + std::to_string(x) + std::to_string(x) + " is not critical";
      return report;
    }
    gens.push_back(basis[1][*idx]);
    names.push_back("x" + std::to_string(x));
  }
  report.generators = gens.size();

  if (extended) {
    int lo = 0;
    int hi = 0;
    for (int x = 1; x <= n; ++x) {
      bool below = true;
      bool above = true;
      for (int y = 1; y <= n; ++y) {
        below = below && poset.leq(x, y);
        above = above && poset.leq(y, x);
      }
      if (below) lo = x;
      if (above) hi = x;
    }
    std::vector<int> factors{g->index_of(BasisLabel::unit(lo, hi))};
    for (int x = 1; x <= n; ++x) {
      if (x == lo || x == hi) continue;
      factors.push_back(g->index_of(BasisLabel::unit(lo, x)));
      factors.push_back(g->index_of(BasisLabel::unit(x, hi)));
    }
    const int degree = static_cast<int>(factors.size());
    const auto idx = reduced.index_of(degree, wedge_from_indices(factors));
    if (!idx) {
      report.failure = "the wedge dual to y is not critical";
      return report;
    }
    report.has_y = true;
    report.y_degree = degree;
    gens.push_back(basis[static_cast<std::size_t>(degree)][*idx]);
    names.push_back("y");
  }

  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = 0; b < gens.size(); ++b) {
      const auto prod = cup_product(gens[a], gens[b], reduced);
      report.table.push_back(names[a] + " * " + names[b] + " = " + describe(prod, reduced));
      const auto swapped = cup_product(gens[b], gens[a], reduced);
      const bool odd = (gens[a].degree * gens[b].degree) % 2 != 0;
      if (!(prod == (odd ? negate(swapped, ring) : swapped))) {
        report.failure = "graded commutativity fails for " + names[a] + ", " + names[b];
        return report;
      }
      if (a == b && !prod.is_zero()) {
        report.failure = names[a] + " squares to a nonzero class";
        return report;
      }
    }
  }
  if (report.has_y) {
    const auto& y = gens.back();
    report.y_squared_zero = cup_product(y, y, reduced).is_zero();
    report.x_times_y_nonzero = true;
    for (int x = 0; x < n; ++x) report.x_times_y_nonzero = report.x_times_y_nonzero && !cup_product(gens[static_cast<std::size_t>(x)], y, reduced).is_zero();
  }

  // every monomial is a unit multiple of a distinct dual basis element
  std::set<std::pair<int, std::uint32_t>> seen;
  const std::size_t m = gens.size();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
    Cochain prod = basis[0][0];
    for (std::size_t t = 0; t < m; ++t) {
      if (s & (std::uint64_t{1} << t)) prod = cup_product(prod, gens[t], reduced);
    }
    if (prod.values.size() != 1 || !ring.is_unit(prod.values.begin()->second)) {
      report.failure = "monomial " + std::to_string(s) + " is not a unit multiple of a basis class";
      return report;
    }
    if (!seen.insert({prod.degree, prod.values.begin()->first}).second) {
      report.failure = "two monomials give the same class";
      return report;
    }
  }
  if (seen.size() != reduced.total_cells()) {
    report.failure = "monomials span " + std::to_string(seen.size()) + " of " + std::to_string(reduced.total_cells()) +
                     " cohomology classes";
    return report;
  }
  report.ok = true;
  return report;
}

}  // namespace liemorse
