#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "liemorse/chain.hpp"
#include "liemorse/homology.hpp"
#include "liemorse/poset.hpp"

namespace liemorse {

/// True iff every weight r_x - s_x of the wedge is a multiple of p.
bool weights_divisible(const LieAlgebra& g, Cell v, std::uint64_t p);

/// C_{*,p}: wedges all of whose weights are multiples of p. Built with a
/// boundary-stability check (PreconditionViolated if the span is not a subcomplex).
ChainComplex p_subcomplex(std::shared_ptr<const LieAlgebra> g, const CoefficientRing& ring, std::uint64_t p,
                          BuildOptions options = {});
/// Restriction of an existing CE complex to the p-weight wedges.
ChainComplex p_subcomplex(const ChainComplex& c, std::uint64_t p);

/// Tensor product with d(a x b) = da x b + (-1)^|a| a x db. Degree-k basis
/// ordered by (degree of a, index of a, index of b).
ChainComplex tensor_complex(const ChainComplex& a, const ChainComplex& b);

struct TensorDegreeReport {
  int degree = 0;
  std::size_t reduced_dim = 0;
  std::size_t tensor_dim = 0;
  bool bijective = false;
  bool boundary_equal = false;
};

struct TensorReport {
  bool ok = false;
  std::vector<TensorDegreeReport> degrees;
  std::string to_string() const;
};

/// Compares the normalization-reduced complex of gl^P over Z/p with
/// C_{*,p}(gl^P strict) (x) C_*(dgn_n) under the bijection that splits a
/// critical wedge into its nondiagonal and diagonal factors (with the sign
/// of the shuffle that moves the diagonals to the end).
TensorReport verify_tensor_factorization(const Poset& poset, std::uint64_t p);

/// dim H_k(gl^P; Z_p) = sum_{i+j=k} dim H_i(C_{*,p}(gl^P strict; Z_p)) * C(n, j).
/// kmax < 0 returns every degree up to rank(gl^P).
std::vector<std::size_t> predicted_mod_p_dims(const Poset& poset, std::uint64_t p, int kmax = -1);

/// Integral homology of C_{*,p}(gl^P) (strict: of gl^P strict).
HomologyTable integral_p_complex_homology(const Poset& poset, std::uint64_t p, bool strict);

}  // namespace liemorse
