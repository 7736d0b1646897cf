#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "liemorse/chain.hpp"
#include "liemorse/poset.hpp"

namespace liemorse {

/// Functional on C_k: basis index -> value. Missing indices are zero.
struct Cochain {
  int degree = 0;
  std::map<std::uint32_t, Scalar> values;

  bool is_zero() const { return values.empty(); }
  friend bool operator==(const Cochain&, const Cochain&) = default;
};

/// (a cup b)(x1^...^x_{i+j}) = sum over (i,j)-shuffles of sgn * a(x_S) * b(x_rest),
/// evaluated on every basis wedge of degree i+j of `c`. Wedges absent from
/// the complex evaluate to zero.
Cochain cup_product(const Cochain& a, const Cochain& b, const ChainComplex& c);

Cochain negate(const Cochain& a, const CoefficientRing& ring);

/// One dual functional per cell; requires every boundary to vanish.
std::vector<std::vector<Cochain>> cohomology_dual_basis(const ChainComplex& c);

struct ExteriorReport {
  bool ok = false;
  std::size_t generators = 0;  ///< degree-one generators x_i
  bool has_y = false;
  int y_degree = 0;
  bool y_squared_zero = false;
  bool x_times_y_nonzero = false;
  std::vector<std::string> table;  ///< pairwise generator products
  std::string failure;
};

/// Checks that H^*(gl^P; R) is the exterior algebra on x_1..x_n (and y of
/// degree 2p-1 when R = Z/p with p = n-1 and P is bounded): every monomial in
/// the generators is, up to a unit, the dual of a distinct critical wedge, and
/// together they exhaust the critical wedges.
/// Throws PreconditionViolated unless R is Q or Z/p with p >= n-1.
ExteriorReport verify_exterior_algebra(const Poset& poset, const CoefficientRing& ring);

}  // namespace liemorse
