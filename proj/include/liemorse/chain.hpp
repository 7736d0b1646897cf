#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "liemorse/lie.hpp"
#include "liemorse/ring.hpp"
#include "liemorse/sparse.hpp"

namespace liemorse {

/// A cell of a chain complex packed into 64 bits. For wedges and simplices
/// it is a bitset (bit i = basis position or vertex i). Tensor cells pack
/// (left degree, left index, right index) so that numeric order is the
/// lexicographic order of the triple.
using Cell = std::uint64_t;

inline int cell_degree(Cell c) { return std::popcount(c); }
inline Cell bit(int i) { return Cell{1} << i; }

/// Positions of the set bits, increasing.
std::vector<int> wedge_indices(Cell c);
Cell wedge_from_indices(const std::vector<int>& indices);

/// Lexicographic order on the increasing index lists of two cells of equal degree.
inline bool wedge_less(Cell a, Cell b) {
  const Cell d = a ^ b;
  return d != 0 && (a & (d & (~d + 1))) != 0;
}

/// Sign of the permutation sorting `factors` (distinct positions), i.e.
/// e_{f1}^...^e_{fk} = sign * e_sorted. Zero if a position repeats.
int wedge_sign(const std::vector<int>& factors);

enum class CellKind { Wedge, Simplex, TensorPair };

constexpr int kTensorIndexBits = 29;
inline Cell tensor_cell(int left_degree, std::uint32_t left, std::uint32_t right) {
  return (static_cast<Cell>(left_degree) << (2 * kTensorIndexBits)) | (static_cast<Cell>(left) << kTensorIndexBits) | right;
}
inline int tensor_left_degree(Cell c) { return static_cast<int>(c >> (2 * kTensorIndexBits)); }
inline std::uint32_t tensor_left(Cell c) { return static_cast<std::uint32_t>((c >> kTensorIndexBits) & ((Cell{1} << kTensorIndexBits) - 1)); }
inline std::uint32_t tensor_right(Cell c) { return static_cast<std::uint32_t>(c & ((Cell{1} << kTensorIndexBits) - 1)); }

/// Chain complex with per-degree ordered bases and exact boundary matrices.
/// boundary[k] maps degree k to degree k-1 (boundary[0] has no rows).
/// A complex may be materialized only in a window of degrees; outside the
/// window the basis is empty and the degree is flagged as not materialized.
struct ChainComplex {
  CoefficientRing ring = CoefficientRing::integers();
  CellKind kind = CellKind::Wedge;
  std::vector<std::vector<Cell>> cells;
  std::vector<SparseMatrix> boundary;
  std::vector<char> materialized;

  /// Set for Chevalley-Eilenberg complexes (and their reductions/subcomplexes).
  std::shared_ptr<const LieAlgebra> algebra;
  /// Vertex names of a simplicial complex, by vertex id.
  std::vector<std::string> vertex_names;
  /// Stored degree minus geometric degree (1 for reduced simplicial complexes).
  int degree_shift = 0;
  /// For tensor products: the two factors.
  std::shared_ptr<const ChainComplex> left;
  std::shared_ptr<const ChainComplex> right;

  int top_degree() const { return static_cast<int>(cells.size()) - 1; }
  std::size_t dim(int k) const {
    return k < 0 || k > top_degree() ? 0 : cells[static_cast<std::size_t>(k)].size();
  }
  std::size_t total_cells() const;
  bool is_materialized(int k) const {
    return k < 0 || k > top_degree() || materialized[static_cast<std::size_t>(k)] != 0;
  }
  bool is_complete() const;
  /// True when boundary[k] holds the actual differential.
  bool boundary_known(int k) const { return is_materialized(k) && is_materialized(k - 1); }
  /// H_k needs boundaries k and k+1.
  bool homology_computable(int k) const { return boundary_known(k) && boundary_known(k + 1); }

  /// Position of a cell in the degree-k basis.
  std::optional<std::uint32_t> index_of(int k, Cell c) const;
  std::string cell_name(int k, std::uint32_t index) const;

  /// d_k o d_{k+1} == 0 in the coefficient ring for all known pairs.
  bool boundary_squared_zero() const;

  /// Empty complex with degrees 0..top, everything materialized.
  static ChainComplex empty(const CoefficientRing& ring, CellKind kind, int top);
};

/// How a cell filter interacts with the boundary.
enum class FilterMode {
  /// Keep only filtered cells and drop boundary entries that leave the filter.
  Restrict,
  /// The filter must span a subcomplex; a nonzero entry leaving it is an error.
  Subcomplex,
};

struct BuildOptions {
  int min_degree = 0;
  /// Inclusive; negative means rank(g).
  int max_degree = -1;
  std::size_t cap = std::size_t{1} << 24;
  std::function<bool(Cell)> filter;
  FilterMode filter_mode = FilterMode::Restrict;
  int threads = 1;
};

/// Chevalley-Eilenberg complex Lambda^k g with
/// d(x1^...^xk) = sum_{r<s} (-1)^{r+s} [x_r,x_s]^x1^..^x_r^..^x_s^..^xk.
/// Throws ComplexTooLarge when the materialized basis exceeds options.cap.
ChainComplex build_ce_complex(std::shared_ptr<const LieAlgebra> g, const CoefficientRing& ring,
                              const BuildOptions& options = {});
ChainComplex build_ce_complex(const LieAlgebra& g, const CoefficientRing& ring, const BuildOptions& options = {});

/// Complex of all faces of the given facets with d{v0..vk} = sum (-1)^i {..^v_i..}.
/// Vertex names are numbered by first appearance. With `reduced`, the empty
/// simplex is added in stored degree 0 and every degree shifts up by one.
ChainComplex simplicial_chain_complex(const std::vector<std::vector<std::string>>& facets, bool reduced,
                                      const CoefficientRing& ring = CoefficientRing::integers());

/// Parses facets, one per line, vertices separated by whitespace or commas.
/// A line without separators is read one character per vertex ("abc").
std::vector<std::vector<std::string>> parse_facets(std::istream& in);
std::vector<std::vector<std::string>> load_facets(const std::string& path);

/// Cochain complex rewritten as a chain complex: degree j of the result is
/// degree top-j of C and its boundary is the transpose of d_{top-j+1}.
ChainComplex dualize(const ChainComplex& c);

/// epsilon(w) with weights w_x = r_x - s_x: r_x counts nondiagonal factors
/// e_ax, s_x counts nondiagonal factors e_xb. Matrix-unit bases only.
std::map<int, long> wedge_weights(const LieAlgebra& g, Cell w);
std::map<int, long> weight_vector(const ChainComplex& c, Cell w);

/// Plain-text dump: per degree "deg k: m wedges" followed by "r c v" lines of d_k.
void dump_complex(std::ostream& out, const ChainComplex& c);

}  // namespace liemorse
