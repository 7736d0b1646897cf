#include "liemorse/chain.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "liemorse/errors.hpp"
#include "liemorse/parallel.hpp"

namespace liemorse {

std::vector<int> wedge_indices(Cell c) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::popcount(c)));
  while (c != 0) {
    out.push_back(std::countr_zero(c));
    c &= c - 1;
  }
  return out;
}

Cell wedge_from_indices(const std::vector<int>& indices) {
  Cell c = 0;
  for (int i : indices) {
    if (i < 0 || i >= 64) throw InvalidArgument("wedge index out of range");
    c |= bit(i);
  }
  return c;
}

int wedge_sign(const std::vector<int>& factors) {
  int inversions = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (std::size_t j = i + 1; j < factors.size(); ++j) {
      if (factors[i] == factors[j]) return 0;
      if (factors[i] > factors[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

std::size_t ChainComplex::total_cells() const {
  std::size_t n = 0;
  for (const auto& c : cells) n += c.size();
  return n;
}

bool ChainComplex::is_complete() const {
  return std::all_of(materialized.begin(), materialized.end(), [](char m) { return m != 0; });
}

std::optional<std::uint32_t> ChainComplex::index_of(int k, Cell c) const {
  if (k < 0 || k > top_degree()) return std::nullopt;
  const auto& basis = cells[static_cast<std::size_t>(k)];
  auto it = kind == CellKind::TensorPair ? std::lower_bound(basis.begin(), basis.end(), c)
                                         : std::lower_bound(basis.begin(), basis.end(), c, wedge_less);
  if (it == basis.end() || *it != c) return std::nullopt;
  return static_cast<std::uint32_t>(it - basis.begin());
}

std::string ChainComplex::cell_name(int k, std::uint32_t index) const {
  const Cell c = cells[static_cast<std::size_t>(k)][index];
  std::string out;
  switch (kind) {
    case CellKind::Wedge:
      if (c == 0) return "1";
      for (int i : wedge_indices(c)) {
        if (!out.empty()) out += '^';
        out += algebra ? algebra->label(i).name() : "x" + std::to_string(i);
      }
      return out;
    case CellKind::Simplex:
      out = "{";
      for (int i : wedge_indices(c)) {
        if (out.size() > 1) out += ',';
        out += static_cast<std::size_t>(i) < vertex_names.size() ? vertex_names[static_cast<std::size_t>(i)]
                                                                  : std::to_string(i);
      }
      return out + "}";
    case CellKind::TensorPair: {
      const int ld = tensor_left_degree(c);
      std::string l = left ? left->cell_name(ld, tensor_left(c)) : std::to_string(tensor_left(c));
      std::string r = right ? right->cell_name(k - ld, tensor_right(c)) : std::to_string(tensor_right(c));
      return "(" + l + " | " + r + ")";
    }
  }
  return out;
}

bool ChainComplex::boundary_squared_zero() const {
  for (int k = 1; k <= top_degree(); ++k) {
    if (!boundary_known(k) || !boundary_known(k + 1) || k + 1 > top_degree()) continue;
    if (!multiply(boundary[static_cast<std::size_t>(k)], boundary[static_cast<std::size_t>(k + 1)], ring).is_zero()) {
      return false;
    }
  }
  return true;
}

ChainComplex ChainComplex::empty(const CoefficientRing& ring, CellKind kind, int top) {
  ChainComplex c;
  c.ring = ring;
  c.kind = kind;
  c.cells.assign(static_cast<std::size_t>(top + 1), {});
  c.boundary.assign(static_cast<std::size_t>(top + 1), SparseMatrix());
  c.materialized.assign(static_cast<std::size_t>(top + 1), 1);
  return c;
}

namespace {

Scalar reduce_small(std::int64_t v, const CoefficientRing& ring) {
  if (ring.is_modular()) {
    const auto m = static_cast<std::int64_t>(ring.modulus());
    return Scalar(static_cast<unsigned long>(((v % m) + m) % m));
  }
  return Scalar(static_cast<long>(v));
}

/// C(n, k) saturating at 2^62.
std::uint64_t binomial_saturating(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > (static_cast<unsigned __int128>(1) << 62)) return std::uint64_t{1} << 62;
  }
  return static_cast<std::uint64_t>(r);
}

/// Calls fn on every k-subset of {0..n-1} in lexicographic order.
template <class F>
void for_each_subset(int n, int k, F&& fn) {
  if (k > n) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  Cell mask = k == 0 ? 0 : (k == 64 ? ~Cell{0} : bit(k) - 1);
  while (true) {
    fn(mask);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    mask = 0;
    for (int j : idx) mask |= bit(j);
  }
}

SparseMatrix::Column ce_column(const LieAlgebra& g, Cell w, const std::vector<Cell>& rows, const CoefficientRing& ring,
                               FilterMode mode, bool filtered) {
  const auto idx = wedge_indices(w);
  const auto k = idx.size();
  std::vector<std::pair<Cell, std::int64_t>> terms;
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t s = r + 1; s < k; ++s) {
      const auto& bracket = g.ordered_bracket(idx[r], idx[s]);
      if (bracket.empty()) continue;
      const std::int64_t base = (r + s) % 2 == 0 ? 1 : -1;
      const Cell rest = w & ~bit(idx[r]) & ~bit(idx[s]);
      for (const auto& t : bracket) {
        const Cell b = bit(t.index);
        if (rest & b) continue;
        const std::int64_t sign = std::popcount(rest & (b - 1)) % 2 == 0 ? 1 : -1;
        terms.emplace_back(rest | b, base * sign * t.coeff);
      }
    }
  }
  std::sort(terms.begin(), terms.end());
  SparseMatrix::Column col;
  for (std::size_t i = 0; i < terms.size();) {
    std::int64_t sum = 0;
    std::size_t j = i;
    while (j < terms.size() && terms[j].first == terms[i].first) sum += terms[j++].second;
    Scalar v = reduce_small(sum, ring);
    if (v != 0) {
      auto it = std::lower_bound(rows.begin(), rows.end(), terms[i].first, wedge_less);
      if (it != rows.end() && *it == terms[i].first) {
        col.push_back({static_cast<std::uint32_t>(it - rows.begin()), std::move(v)});
      } else if (!filtered || mode == FilterMode::Subcomplex) {
        throw PreconditionViolated("cell filter is not closed under the boundary");
      }
    }
    i = j;
  }
  std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.row < b.row; });
  return col;
}

}  // namespace

ChainComplex build_ce_complex(std::shared_ptr<const LieAlgebra> g, const CoefficientRing& ring,
                              const BuildOptions& options) {
  const int n = g->rank();
  const int lo = std::max(0, options.min_degree);
  const int hi = options.max_degree < 0 ? n : std::min(n, options.max_degree);
  if (lo > hi) throw InvalidArgument("empty degree window");

  std::uint64_t space = 0;
  for (int k = lo; k <= hi; ++k) space += binomial_saturating(n, k);
  if (!options.filter && space > options.cap) {
    throw ComplexTooLarge("complex has " + std::to_string(space) + " cells, cap is " + std::to_string(options.cap));
  }
  if (options.filter && space > (std::uint64_t{1} << 34)) {
    throw ComplexTooLarge("cell enumeration space of " + std::to_string(space) + " is too large");
  }

  ChainComplex c = ChainComplex::empty(ring, CellKind::Wedge, n);
  c.algebra = g;
  std::size_t total = 0;
  for (int k = 0; k <= n; ++k) {
    const auto ku = static_cast<std::size_t>(k);
    c.materialized[ku] = k >= lo && k <= hi;
    if (!c.materialized[ku]) continue;
    auto& basis = c.cells[ku];
    for_each_subset(n, k, [&](Cell w) {
      if (!options.filter || options.filter(w)) basis.push_back(w);
    });
    total += basis.size();
    if (total > options.cap) {
      throw ComplexTooLarge("complex exceeds the cap of " + std::to_string(options.cap) + " cells");
    }
  }

  parallel_for(static_cast<std::size_t>(n + 1), options.threads, [&](std::size_t ku) {
    const int k = static_cast<int>(ku);
    const auto& cols = c.cells[ku];
    if (k == 0 || !c.boundary_known(k)) {
      c.boundary[ku] = SparseMatrix(k == 0 ? 0 : c.dim(k - 1), cols.size());
      return;
    }
    SparseMatrix m(c.dim(k - 1), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      m.set_column(j, ce_column(*g, cols[j], c.cells[ku - 1], ring, options.filter_mode,
                                static_cast<bool>(options.filter)));
    }
    c.boundary[ku] = std::move(m);
  });
  return c;
}

ChainComplex build_ce_complex(const LieAlgebra& g, const CoefficientRing& ring, const BuildOptions& options) {
  return build_ce_complex(std::make_shared<const LieAlgebra>(g), ring, options);
}

ChainComplex simplicial_chain_complex(const std::vector<std::vector<std::string>>& facets, bool reduced,
                                      const CoefficientRing& ring) {
  if (facets.empty()) throw InvalidArgument("simplicial complex needs at least one facet");
  std::vector<std::string> names;
  std::unordered_map<std::string, int> ids;
  std::unordered_set<Cell> faces;
  for (const auto& facet : facets) {
    if (facet.empty()) throw InvalidArgument("empty facet");
    Cell f = 0;
    for (const auto& v : facet) {
      auto [it, inserted] = ids.emplace(v, static_cast<int>(names.size()));
      if (inserted) {
        if (names.size() == 64) throw Unsupported("simplicial complexes are limited to 64 vertices");
        names.push_back(v);
      }
      f |= bit(it->second);
    }
    if (std::popcount(f) > 24) throw ComplexTooLarge("facet with more than 24 vertices");
    for (Cell s = f; s != 0; s = (s - 1) & f) faces.insert(s);
  }
  int top = 0;
  for (Cell s : faces) top = std::max(top, std::popcount(s) - 1);
  const int shift = reduced ? 1 : 0;
  ChainComplex c = ChainComplex::empty(ring, CellKind::Simplex, top + shift);
  c.vertex_names = names;
  c.degree_shift = shift;
  if (reduced) c.cells[0].push_back(0);
  for (Cell s : faces) c.cells[static_cast<std::size_t>(std::popcount(s) - 1 + shift)].push_back(s);
  for (auto& basis : c.cells) std::sort(basis.begin(), basis.end(), wedge_less);

  for (int k = 0; k <= c.top_degree(); ++k) {
    const auto ku = static_cast<std::size_t>(k);
    if (k == 0) {
      c.boundary[0] = SparseMatrix(0, c.dim(0));
      continue;
    }
    SparseMatrix m(c.dim(k - 1), c.dim(k));
    for (std::size_t j = 0; j < c.cells[ku].size(); ++j) {
      const auto verts = wedge_indices(c.cells[ku][j]);
      SparseMatrix::Column col;
      for (std::size_t i = 0; i < verts.size(); ++i) {
        const auto row = c.index_of(k - 1, c.cells[ku][j] & ~bit(verts[i]));
        col.push_back({*row, ring.reduce(i % 2 == 0 ? 1L : -1L)});
      }
      std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.row < b.row; });
      std::erase_if(col, [](const auto& e) { return e.value == 0; });
      m.set_column(j, std::move(col));
    }
    c.boundary[ku] = std::move(m);
  }
  return c;
}

std::vector<std::vector<std::string>> parse_facets(std::istream& in) {
  std::vector<std::vector<std::string>> facets;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream words(line);
    std::vector<std::string> facet;
    for (std::string w; words >> w;) facet.push_back(w);
    if (facet.empty()) continue;
    if (facet.size() == 1 && facet[0].size() > 1) {
      const std::string packed = facet[0];
      facet.clear();
      for (char ch : packed) facet.emplace_back(1, ch);
    }
    facets.push_back(std::move(facet));
  }
  if (facets.empty()) throw InvalidArgument("no facets found");
  return facets;
}

std::vector<std::vector<std::string>> load_facets(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open facets file '" + path + "'");
  return parse_facets(in);
}

ChainComplex dualize(const ChainComplex& c) {
  ChainComplex d = c;
  const int top = c.top_degree();
  for (int j = 0; j <= top; ++j) {
    const auto ju = static_cast<std::size_t>(j);
    const auto src = static_cast<std::size_t>(top - j);
    d.cells[ju] = c.cells[src];
    d.materialized[ju] = c.materialized[src];
  }
  for (int j = 0; j <= top; ++j) {
    const auto ju = static_cast<std::size_t>(j);
    d.boundary[ju] = j == 0 ? SparseMatrix(0, d.dim(0))
                            : c.boundary[static_cast<std::size_t>(top - j + 1)].transpose();
  }
  return d;
}

std::map<int, long> wedge_weights(const LieAlgebra& g, Cell w) {
  std::map<int, long> weights;
  for (int i : wedge_indices(w)) {
    const auto& l = g.label(i);
    if (l.kind == BasisLabel::Kind::SkewUnit) throw Unsupported("weights are defined for matrix-unit bases only");
    if (l.is_diagonal()) continue;
    weights[l.row] -= 1;
    weights[l.col] += 1;
  }
  return weights;
}

std::map<int, long> weight_vector(const ChainComplex& c, Cell w) {
  if (!c.algebra || c.kind != CellKind::Wedge) throw InvalidArgument("weight_vector needs a Chevalley-Eilenberg complex");
  return wedge_weights(*c.algebra, w);
}

void dump_complex(std::ostream& out, const ChainComplex& c) {
  for (int k = 0; k <= c.top_degree(); ++k) {
    out << "deg " << k << ": " << c.dim(k) << " wedges\n";
    for (const auto& e : c.boundary[static_cast<std::size_t>(k)].triplets()) {
      out << e.row << ' ' << e.col << ' ' << e.value << '\n';
    }
  }
}

}  // namespace liemorse
