#include "liemorse/morse.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <stdexcept>

#include "liemorse/errors.hpp"
#include "liemorse/parallel.hpp"

namespace liemorse {

NormalizationRule::NormalizationRule(const LieAlgebra& g, const CoefficientRing& ring)
    : g_(&g), ring_(ring), n_(g.matrix_size()) {
  diagonal_of_.assign(static_cast<std::size_t>(n_ + 1), -1);
  for (int x = 1; x <= n_; ++x) diagonal_of_[static_cast<std::size_t>(x)] = g.index_of(BasisLabel::unit(x, x));

  auto coefficient_of_self = [&](int y, int d) {
    for (const auto& t : g.bracket(y, d)) {
      if (t.index == y) return static_cast<long>(t.coeff);
    }
    return 0L;
  };
  ends_.assign(static_cast<std::size_t>(g.rank()), {0, 0});
  contribution_.assign(static_cast<std::size_t>(g.rank()), {0, 0});
  for (int y = 0; y < g.rank(); ++y) {
    const auto& l = g.label(y);
    if (l.is_diagonal()) continue;
    for (int x : {l.row, l.col}) {
      if (diagonal_of_[static_cast<std::size_t>(x)] < 0) {
        throw MissingDiagonals(g.name() + " has no diagonal e" + std::to_string(x) + std::to_string(x) +
                               " for the normalization matching");
      }
    }
    nondiagonal_mask_ |= bit(y);
    ends_[static_cast<std::size_t>(y)] = {l.row, l.col};
    contribution_[static_cast<std::size_t>(y)] = {coefficient_of_self(y, diagonal_of_[static_cast<std::size_t>(l.row)]),
                                                  coefficient_of_self(y, diagonal_of_[static_cast<std::size_t>(l.col)])};
  }
  offset_ = 2 * static_cast<long>(g.rank()) + 2;
  unit_.resize(static_cast<std::size_t>(2 * offset_ + 1));
  for (long w = -offset_; w <= offset_; ++w) unit_[static_cast<std::size_t>(w + offset_)] = is_integer_unit(w, ring) ? 1 : 0;
}

std::vector<std::pair<int, long>> NormalizationRule::weights(Cell v) const {
  std::vector<long> w(static_cast<std::size_t>(n_ + 1), 0);
  std::vector<char> touched(static_cast<std::size_t>(n_ + 1), 0);
  for (Cell rest = v & nondiagonal_mask_; rest != 0; rest &= rest - 1) {
    const auto y = static_cast<std::size_t>(std::countr_zero(rest));
    const auto [a, b] = ends_[y];
    w[static_cast<std::size_t>(a)] += contribution_[y].first;
    w[static_cast<std::size_t>(b)] += contribution_[y].second;
    touched[static_cast<std::size_t>(a)] = touched[static_cast<std::size_t>(b)] = 1;
  }
  std::vector<std::pair<int, long>> out;
  for (int x = 1; x <= n_; ++x) {
    if (touched[static_cast<std::size_t>(x)]) out.emplace_back(x, w[static_cast<std::size_t>(x)]);
  }
  return out;
}

int NormalizationRule::toggled_diagonal(Cell v) const {
  long w[65] = {};
  std::uint64_t touched_lo = 0;
  bool touched_64 = false;
  for (Cell rest = v & nondiagonal_mask_; rest != 0; rest &= rest - 1) {
    const auto y = static_cast<std::size_t>(std::countr_zero(rest));
    const auto [a, b] = ends_[y];
    w[a] += contribution_[y].first;
    w[b] += contribution_[y].second;
    for (int x : {a, b}) {
      if (x < 64) {
        touched_lo |= std::uint64_t{1} << x;
      } else {
        touched_64 = true;
      }
    }
  }
  for (std::uint64_t t = touched_lo; t != 0; t &= t - 1) {
    const int x = std::countr_zero(t);
    if (unit_[static_cast<std::size_t>(w[x] + offset_)]) return diagonal_of_[static_cast<std::size_t>(x)];
  }
  if (touched_64 && unit_[static_cast<std::size_t>(w[64] + offset_)]) return diagonal_of_[64];
  return -1;
}

namespace {

void require_ce(const ChainComplex& c) {
  if (c.kind != CellKind::Wedge || !c.algebra) {
    throw InvalidArgument("the normalization matching needs a Chevalley-Eilenberg complex");
  }
  if (!c.is_complete()) throw InvalidArgument("the normalization matching needs every degree materialized");
}

}  // namespace

Matching normalization_matching(const ChainComplex& c) {
  require_ce(c);
  const NormalizationRule rule(*c.algebra, c.ring);
  Matching m;
  for (int k = 1; k <= c.top_degree(); ++k) {
    const auto& basis = c.cells[static_cast<std::size_t>(k)];
    for (std::uint32_t i = 0; i < basis.size(); ++i) {
      const Cell v = basis[i];
      const int d = rule.toggled_diagonal(v);
      if (d < 0 || !(v & bit(d))) continue;
      const auto lower = c.index_of(k - 1, v & ~bit(d));
      if (!lower) throw InvalidArgument("normalization partner of a wedge is missing from the complex");
      // the matched entry must be the weight up to sign
      const Scalar entry = c.boundary[static_cast<std::size_t>(k)].at(*lower, i);
      const auto& l = c.algebra->label(d);
      long w = 0;
      for (const auto& [x, wx] : rule.weights(v)) {
        if (x == l.row) w = wx;
      }
      if (entry != c.ring.reduce(w) && entry != c.ring.reduce(-w)) {
        throw std::logic_error("matched boundary entry disagrees with the weight of " + c.cell_name(k, i));
      }
      m.pairs.push_back({k, i, *lower});
    }
  }
  m.status = Matching::Status::Valid;
  return m;
}

MatchingCheck validate_matching(const ChainComplex& c, const Matching& m) {
  MatchingCheck out;
  std::set<std::pair<int, std::uint32_t>> used;
  for (const auto& p : m.pairs) {
    if (p.degree < 1 || p.degree > c.top_degree() || p.upper >= c.dim(p.degree) || p.lower >= c.dim(p.degree - 1)) {
      return {MatchingCheck::Violation::BadIndex, "pair outside the complex in degree " + std::to_string(p.degree)};
    }
    if (!used.insert({p.degree, p.upper}).second || !used.insert({p.degree - 1, p.lower}).second) {
      return {MatchingCheck::Violation::SharedEndpoint,
              "cell used twice: " + c.cell_name(p.degree, p.upper) + " -> " + c.cell_name(p.degree - 1, p.lower)};
    }
    const Scalar entry = c.boundary[static_cast<std::size_t>(p.degree)].at(p.lower, p.upper);
    if (!c.ring.is_unit(entry)) {
      return {MatchingCheck::Violation::NonUnit, "entry " + entry.get_str() + " of " + c.cell_name(p.degree, p.upper) +
                                                     " -> " + c.cell_name(p.degree - 1, p.lower) + " is not a unit"};
    }
  }
  // Acyclicity per degree: a cycle only passes through matched cells, so the
  // digraph on the pairs of d_k with A -> B when d_k[lower_B, upper_A] != 0 suffices.
  std::map<int, std::vector<const MatchedPair*>> by_degree;
  for (const auto& p : m.pairs) by_degree[p.degree].push_back(&p);
  for (const auto& [k, pairs] : by_degree) {
    std::map<std::uint32_t, std::size_t> pair_of_lower;
    for (std::size_t i = 0; i < pairs.size(); ++i) pair_of_lower[pairs[i]->lower] = i;
    const auto& d = c.boundary[static_cast<std::size_t>(k)];
    std::vector<std::vector<std::size_t>> succ(pairs.size());
    std::vector<std::size_t> indegree(pairs.size(), 0);
    for (std::size_t a = 0; a < pairs.size(); ++a) {
      for (const auto& e : d.column(pairs[a]->upper)) {
        auto it = pair_of_lower.find(e.row);
        if (it == pair_of_lower.end() || it->second == a) continue;
        succ[a].push_back(it->second);
        ++indegree[it->second];
      }
    }
    std::vector<std::size_t> ready;
    for (std::size_t a = 0; a < pairs.size(); ++a) {
      if (indegree[a] == 0) ready.push_back(a);
    }
    std::size_t seen = 0;
    while (!ready.empty()) {
      const auto a = ready.back();
      ready.pop_back();
      ++seen;
      for (auto b : succ[a]) {
        if (--indegree[b] == 0) ready.push_back(b);
      }
    }
    if (seen != pairs.size()) {
      for (std::size_t a = 0; a < pairs.size(); ++a) {
        if (indegree[a] > 0) {
          return {MatchingCheck::Violation::Cycle, "directed cycle through " + c.cell_name(k, pairs[a]->upper) +
                                                       " in degree " + std::to_string(k)};
        }
      }
    }
  }
  return out;
}

bool check_matching(const ChainComplex& c, Matching& m) {
  const auto check = validate_matching(c, m);
  m.status = check.valid() ? Matching::Status::Valid : Matching::Status::Invalid;
  m.reason = check.reason;
  return check.valid();
}

CriticalSet critical_vertices(const ChainComplex& c, const Matching& m) {
  std::vector<std::vector<char>> matched(c.cells.size());
  for (std::size_t k = 0; k < c.cells.size(); ++k) matched[k].assign(c.cells[k].size(), 0);
  for (const auto& p : m.pairs) {
    matched[static_cast<std::size_t>(p.degree)][p.upper] = 1;
    matched[static_cast<std::size_t>(p.degree - 1)][p.lower] = 1;
  }
  CriticalSet out(c.cells.size());
  for (std::size_t k = 0; k < c.cells.size(); ++k) {
    for (std::uint32_t i = 0; i < c.cells[k].size(); ++i) {
      if (!matched[k][i]) out[k].push_back(i);
    }
  }
  return out;
}

namespace {

/// Copies metadata and keeps the listed cells, with boundaries supplied by `boundary_of(k)`.
template <class F>
ChainComplex restricted_complex(const ChainComplex& c, const CriticalSet& keep, F&& boundary_of) {
  ChainComplex r = c;
  for (std::size_t k = 0; k < c.cells.size(); ++k) {
    r.cells[k].clear();
    for (auto i : keep[k]) r.cells[k].push_back(c.cells[k][i]);
  }
  for (int k = 0; k <= c.top_degree(); ++k) r.boundary[static_cast<std::size_t>(k)] = boundary_of(k);
  return r;
}

std::size_t epsilon_size(const ChainComplex& c, Cell v) {
  if (c.kind != CellKind::Wedge || !c.algebra) return 0;
  std::set<int> eps;
  for (int i : wedge_indices(v)) {
    const auto& l = c.algebra->label(i);
    if (l.is_diagonal()) continue;
    eps.insert(l.row);
    eps.insert(l.col);
  }
  return eps.size();
}

}  // namespace

ChainComplex reduce_by_matching(const ChainComplex& c, const Matching& m, const ReduceOptions& options) {
  const auto critical = critical_vertices(c, m);
  std::vector<std::vector<MatchedPair>> by_degree(c.cells.size());
  for (const auto& p : m.pairs) by_degree[static_cast<std::size_t>(p.degree)].push_back(p);

  std::vector<SparseMatrix> reduced(c.cells.size());
  parallel_for(c.cells.size(), options.threads, [&](std::size_t ku) {
    const int k = static_cast<int>(ku);
    auto pairs = by_degree[ku];
    const auto& d = c.boundary[ku];
    if (k == 0) {
      reduced[0] = SparseMatrix(0, critical[0].size());
      return;
    }
    if (options.shuffle_seed) {
      std::mt19937_64 rng(*options.shuffle_seed + ku);
      std::shuffle(pairs.begin(), pairs.end(), rng);
    } else {
      std::vector<std::size_t> eps(pairs.size());
      for (std::size_t i = 0; i < pairs.size(); ++i) eps[i] = epsilon_size(c, c.cells[ku][pairs[i].upper]);
      std::vector<std::size_t> order(pairs.size());
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return eps[a] != eps[b] ? eps[a] > eps[b] : pairs[a].upper < pairs[b].upper;
      });
      std::vector<MatchedPair> sorted;
      for (auto i : order) sorted.push_back(pairs[i]);
      pairs = std::move(sorted);
    }

    std::vector<std::map<std::uint32_t, Scalar>> cols(d.cols());
    std::vector<std::set<std::uint32_t>> rows(d.rows());
    for (std::uint32_t j = 0; j < d.cols(); ++j) {
      for (const auto& e : d.column(j)) {
        cols[j].emplace(e.row, e.value);
        rows[e.row].insert(j);
      }
    }
    for (const auto& p : pairs) {
      const std::uint32_t u = p.upper;
      const std::uint32_t l = p.lower;
      const Scalar inv = c.ring.inverse(cols[u].at(l));
      std::vector<std::pair<std::uint32_t, Scalar>> gamma;
      for (const auto& [i, v] : cols[u]) {
        if (i != l) gamma.emplace_back(i, c.ring.mul(v, inv));
      }
      std::vector<std::pair<std::uint32_t, Scalar>> beta;
      for (auto j : rows[l]) {
        if (j != u) beta.emplace_back(j, cols[j].at(l));
      }
      for (const auto& [j, b] : beta) {
        auto& col = cols[j];
        for (const auto& [i, g] : gamma) {
          auto [it, inserted] = col.try_emplace(i, 0);
          it->second = c.ring.sub(it->second, g * b);
          if (it->second == 0) {
            col.erase(it);
            rows[i].erase(j);
          } else if (inserted) {
            rows[i].insert(j);
          }
        }
      }
      for (const auto& [i, v] : cols[u]) rows[i].erase(u);
      cols[u].clear();
      for (auto j : rows[l]) cols[j].erase(l);
      rows[l].clear();
    }

    std::vector<std::uint32_t> new_row(d.rows(), UINT32_MAX);
    for (std::uint32_t i = 0; i < critical[ku - 1].size(); ++i) new_row[critical[ku - 1][i]] = i;
    SparseMatrix out(critical[ku - 1].size(), critical[ku].size());
    for (std::uint32_t j = 0; j < critical[ku].size(); ++j) {
      SparseMatrix::Column col;
      for (const auto& [i, v] : cols[critical[ku][j]]) {
        if (new_row[i] != UINT32_MAX) col.push_back({new_row[i], v});
      }
      out.set_column(j, std::move(col));
    }
    reduced[ku] = std::move(out);
  });
  return restricted_complex(c, critical, [&](int k) { return std::move(reduced[static_cast<std::size_t>(k)]); });
}

std::vector<GradientPath> gradient_paths(const ChainComplex& c, const Matching& m, int k, std::uint32_t source) {
  if (k < 1 || k > c.top_degree()) return {};
  const auto ku = static_cast<std::size_t>(k);
  std::map<std::uint32_t, std::uint32_t> upper_of_lower;  // pairs of d_k
  std::set<std::uint32_t> matched_upper;
  std::set<std::uint32_t> lower_matched_elsewhere;  // degree k-1 cells matched with degree k-2
  for (const auto& p : m.pairs) {
    if (p.degree == k) {
      upper_of_lower[p.lower] = p.upper;
      matched_upper.insert(p.upper);
    } else if (p.degree == k - 1) {
      lower_matched_elsewhere.insert(p.upper);
    }
  }
  const auto& d = c.boundary[ku];
  std::vector<GradientPath> out;
  std::vector<std::uint32_t> trail{source};
  // depth-first over zig-zags; prod carries the product of entries and inverses
  auto walk = [&](auto&& self, std::uint32_t upper, const Scalar& prod, int matched_steps) -> void {
    for (const auto& e : d.column(upper)) {
      auto partner = upper_of_lower.find(e.row);
      if (partner != upper_of_lower.end() && partner->second == upper) continue;
      const Scalar step = c.ring.mul(prod, e.value);
      if (partner == upper_of_lower.end()) {
        if (lower_matched_elsewhere.count(e.row)) continue;
        trail.push_back(e.row);
        out.push_back({trail, c.ring.reduce(matched_steps % 2 == 0 ? step : Scalar(-step))});
        trail.pop_back();
        continue;
      }
      const std::uint32_t next = partner->second;
      const Scalar inv = c.ring.inverse(d.at(e.row, next));
      trail.push_back(e.row);
      trail.push_back(next);
      self(self, next, c.ring.mul(step, inv), matched_steps + 1);
      trail.pop_back();
      trail.pop_back();
    }
  };
  walk(walk, source, Scalar(1), 0);
  return out;
}

ChainComplex reduce_by_paths(const ChainComplex& c, const Matching& m) {
  const auto critical = critical_vertices(c, m);
  return restricted_complex(c, critical, [&](int k) {
    const auto ku = static_cast<std::size_t>(k);
    if (k == 0) return SparseMatrix(0, critical[0].size());
    std::map<std::uint32_t, std::uint32_t> new_row;
    for (std::uint32_t i = 0; i < critical[ku - 1].size(); ++i) new_row[critical[ku - 1][i]] = i;
    std::vector<MatrixEntry> entries;
    for (std::uint32_t j = 0; j < critical[ku].size(); ++j) {
      for (const auto& path : gradient_paths(c, m, k, critical[ku][j])) {
        entries.push_back({new_row.at(path.vertices.back()), j, path.weight});
      }
    }
    return SparseMatrix::from_triplets(critical[ku - 1].size(), critical[ku].size(), std::move(entries), c.ring);
  });
}

ChainComplex normalization_reduce(const ChainComplex& c) {
  const auto m = normalization_matching(c);
  const auto critical = critical_vertices(c, m);
  return restricted_complex(c, critical, [&](int k) {
    const auto ku = static_cast<std::size_t>(k);
    if (k == 0) return SparseMatrix(0, critical[0].size());
    return c.boundary[ku].restrict(critical[ku - 1], critical[ku]);
  });
}

ChainComplex build_normalized_ce_complex(std::shared_ptr<const LieAlgebra> g, const CoefficientRing& ring,
                                         BuildOptions options) {
  auto rule = std::make_shared<NormalizationRule>(*g, ring);
  auto outer = std::move(options.filter);
  options.filter = [rule, outer](Cell v) { return rule->is_critical(v) && (!outer || outer(v)); };
  options.filter_mode = FilterMode::Restrict;
  return build_ce_complex(std::move(g), ring, options);
}

Matching star_matching(const ChainComplex& c, const std::string& vertex) {
  if (c.kind != CellKind::Simplex) throw InvalidArgument("star matchings need a simplicial complex");
  auto it = std::find(c.vertex_names.begin(), c.vertex_names.end(), vertex);
  if (it == c.vertex_names.end()) throw InvalidArgument("unknown vertex '" + vertex + "'");
  const Cell v = bit(static_cast<int>(it - c.vertex_names.begin()));
  Matching m;
  for (int k = 0; k < c.top_degree(); ++k) {
    const auto& basis = c.cells[static_cast<std::size_t>(k)];
    for (std::uint32_t i = 0; i < basis.size(); ++i) {
      if (basis[i] & v) continue;
      if (auto up = c.index_of(k + 1, basis[i] | v)) m.pairs.push_back({k + 1, *up, i});
    }
  }
  return m;
}

Matching matching_from_cells(const ChainComplex& c, const std::vector<std::pair<Cell, Cell>>& pairs) {
  Matching m;
  const int shift = c.kind == CellKind::Simplex ? c.degree_shift - 1 : 0;
  for (const auto& [upper, lower] : pairs) {
    const int k = cell_degree(upper) + shift;
    auto u = c.index_of(k, upper);
    auto l = c.index_of(k - 1, lower);
    if (!u || !l) throw InvalidArgument("matched cell is not part of the complex");
    m.pairs.push_back({k, *u, *l});
  }
  return m;
}

void emit_matching(std::ostream& out, const ChainComplex& c, const Matching& m) {
  const int width = c.algebra ? c.algebra->rank() : static_cast<int>(c.vertex_names.size());
  auto bits = [&](Cell x) {
    std::string s;
    for (int i = 0; i < width; ++i) s += (x & bit(i)) ? '1' : '0';
    return s;
  };
  for (const auto& p : m.pairs) {
    out << p.degree << ' ' << bits(c.cells[static_cast<std::size_t>(p.degree)][p.upper]) << ' '
        << bits(c.cells[static_cast<std::size_t>(p.degree - 1)][p.lower]) << '\n';
  }
}

}  // namespace liemorse
