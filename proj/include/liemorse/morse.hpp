#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liemorse/chain.hpp"

namespace liemorse {

/// A matched edge upper -> lower of d_degree (upper in C_degree, lower in C_{degree-1}).
struct MatchedPair {
  int degree = 0;
  std::uint32_t upper = 0;
  std::uint32_t lower = 0;

  friend bool operator==(const MatchedPair&, const MatchedPair&) = default;
  friend auto operator<=>(const MatchedPair&, const MatchedPair&) = default;
};

struct Matching {
  enum class Status { Unchecked, Valid, Invalid };

  std::vector<MatchedPair> pairs;
  Status status = Status::Unchecked;
  std::string reason;
};

struct MatchingCheck {
  enum class Violation { None, SharedEndpoint, NonUnit, Cycle, BadIndex };

  Violation violation = Violation::None;
  std::string reason;

  bool valid() const { return violation == Violation::None; }
};

/// Per-degree unmatched cell indices, increasing.
using CriticalSet = std::vector<std::vector<std::uint32_t>>;

/// Decides, for a wedge, which diagonal e_xx the normalization matching
/// toggles: the minimal matrix index x in epsilon(v) whose weight is a unit.
class NormalizationRule {
 public:
  /// Throws MissingDiagonals if some index of a nondiagonal basis element has no diagonal.
  NormalizationRule(const LieAlgebra& g, const CoefficientRing& ring);

  /// Basis position of the toggled diagonal, or -1 when v is critical.
  int toggled_diagonal(Cell v) const;
  bool is_critical(Cell v) const { return toggled_diagonal(v) < 0; }
  /// Weights w_x for x in epsilon(v), read from the bracket with the diagonals.
  std::vector<std::pair<int, long>> weights(Cell v) const;

 private:
  const LieAlgebra* g_;
  CoefficientRing ring_;
  int n_ = 0;
  std::vector<int> diagonal_of_;  // matrix index -> basis position
  Cell nondiagonal_mask_ = 0;
  // per basis position: the two matrix indices and their weight contributions
  std::vector<std::pair<int, int>> ends_;
  std::vector<std::pair<long, long>> contribution_;
  std::vector<char> unit_;  // unit_[w + offset]
  long offset_ = 0;
};

Matching normalization_matching(const ChainComplex& c);

MatchingCheck validate_matching(const ChainComplex& c, const Matching& m);
/// Runs validate_matching and stores the outcome in m.status / m.reason.
bool check_matching(const ChainComplex& c, Matching& m);

CriticalSet critical_vertices(const ChainComplex& c, const Matching& m);

struct ReduceOptions {
  /// Eliminate matched pairs in a pseudo-random order instead of the default
  /// (decreasing epsilon size, then basis order).
  std::optional<std::uint64_t> shuffle_seed;
  int threads = 1;
};

/// Reduced complex on the critical cells, by Schur-complement elimination
/// of every matched pair. The matching must be valid.
ChainComplex reduce_by_matching(const ChainComplex& c, const Matching& m, const ReduceOptions& options = {});

/// One zig-zag path from a critical cell in degree k to a critical cell in degree k-1.
struct GradientPath {
  std::vector<std::uint32_t> vertices;  ///< alternating degree k, k-1, k, ..., k-1
  Scalar weight;
};

/// All gradient paths starting at critical cell `source` of degree k, with
/// weight (-1)^{i-1} d d^{-1} ... d as a scalar of the ring.
std::vector<GradientPath> gradient_paths(const ChainComplex& c, const Matching& m, int k, std::uint32_t source);

/// Reduced complex whose boundary is the sum of gradient path weights.
/// Exponential in the worst case; intended for small complexes.
ChainComplex reduce_by_paths(const ChainComplex& c, const Matching& m);

/// Normalization reduction: critical cells of the normalization matching
/// with the boundary restricted to them.
ChainComplex normalization_reduce(const ChainComplex& c);

/// The normalization-reduced complex built directly from the algebra,
/// enumerating critical wedges only.
ChainComplex build_normalized_ce_complex(std::shared_ptr<const LieAlgebra> g, const CoefficientRing& ring,
                                         BuildOptions options = {});

/// Pairs sigma u {v} -> sigma for every face sigma not containing vertex v
/// (by vertex name) such that sigma u {v} is also a face.
Matching star_matching(const ChainComplex& c, const std::string& vertex);

/// Matching from explicit (upper, lower) cell pairs; degrees are inferred from
/// the popcount (plus the complex's degree shift). Throws InvalidArgument for
/// cells that are not in the complex.
Matching matching_from_cells(const ChainComplex& c, const std::vector<std::pair<Cell, Cell>>& pairs);

/// Lines "k upper_bits lower_bits", bit strings with basis position 0 first.
void emit_matching(std::ostream& out, const ChainComplex& c, const Matching& m);

}  // namespace liemorse
