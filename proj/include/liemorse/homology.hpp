#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "liemorse/chain.hpp"
#include "liemorse/ring.hpp"
#include "liemorse/sparse.hpp"

namespace liemorse {

/// Free rank plus elementary divisors d1 | d2 | ... (all >= 2).
struct HomologyModule {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  /// Prime-power decomposition: (prime power, multiplicity), sorted by prime then exponent.
  std::vector<std::pair<Integer, std::size_t>> primary_parts() const;
  /// "Z^10 + Z_2^23 + Z_4^3 + Z_3^3", or "0".
  std::string to_string() const;
  /// "2^23·4^3·3^3", or "" without torsion.
  std::string torsion_csv() const;

  friend bool operator==(const HomologyModule&, const HomologyModule&) = default;
};

/// Builds a module from a free rank and torsion given as (prime power, multiplicity) summands.
HomologyModule make_module(std::size_t free_rank, const std::vector<std::pair<long, std::size_t>>& primary = {});

/// Homology in consecutive degrees first_degree, first_degree+1, ...
/// Over a field only free_rank (the dimension) is used.
struct HomologyTable {
  CoefficientRing ring = CoefficientRing::integers();
  int first_degree = 0;
  std::vector<HomologyModule> modules;

  int last_degree() const { return first_degree + static_cast<int>(modules.size()) - 1; }
  bool has(int k) const { return k >= first_degree && k <= last_degree(); }
  const HomologyModule& at(int k) const { return modules[static_cast<std::size_t>(k - first_degree)]; }
  std::vector<std::size_t> dims() const;
};

struct SmithForm {
  std::vector<Integer> divisors;  ///< d1 | d2 | ... including the 1s
  std::size_t rank = 0;
};

/// Smith normal form of an integer matrix by sparse elimination.
SmithForm smith_normal_form(const SparseMatrix& a);

/// Normalizes a list of nonzero diagonal entries to d1 | d2 | ...
std::vector<Integer> normalize_divisors(std::vector<Integer> diagonal);

/// Rank over Q or Z/p.
std::size_t rank_over_field(const SparseMatrix& a, const CoefficientRing& field);

/// Degrees [lo, hi] (hi < 0 means the top degree), restricted to degrees where
/// the complex has both boundaries. Over Z uses Smith forms.
HomologyTable homology_over_Z(const ChainComplex& c, int lo = 0, int hi = -1, int threads = 1);
/// Over Q or Z/p; throws CompositeModulus for Z/m with m composite.
HomologyTable homology_over_field(const ChainComplex& c, int lo = 0, int hi = -1, int threads = 1);
/// Dispatches on the ring of the complex.
HomologyTable homology(const ChainComplex& c, int lo = 0, int hi = -1, int threads = 1);
/// H^k(C) computed as homology of the dual complex.
HomologyTable cohomology(const ChainComplex& c, int threads = 1);

/// dim H_k(-; Z_p) from an integral table by the universal coefficient theorem.
std::vector<std::size_t> betti_mod_p_from_integral(const HomologyTable& t, std::uint64_t p);

/// c_k = sum_{i+j=k} a_i b_j.
std::vector<std::size_t> kunneth_field_dims(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b);

/// Multiset of elementary divisors d >= 2 over all boundaries, restricted to powers of p
/// (each divisor contributes its p-primary part).
std::vector<Integer> p_primary_divisors(const HomologyTable& t, std::uint64_t p);

}  // namespace liemorse
