#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "liemorse/homology.hpp"

namespace liemorse::tables {

/// Published H_k(sol_n; Z) for n = 1..5, every degree 0..N.
const std::vector<HomologyModule>& sol_homology(int n);
int sol_homology_max_n();

/// dim H_k(sol_n; Z_p) = C(n,k) + sum_i c_i C(n, k - s_i).
struct ShiftedBinomial {
  int n = 0;
  std::uint64_t p = 0;
  std::vector<std::pair<std::size_t, int>> terms;  ///< (coefficient c_i, shift s_i)

  std::size_t evaluate(int k) const;
};
const std::vector<ShiftedBinomial>& shifted_binomials();

/// Published homology of C_{*,p}(nil_n; Z): nonzero degrees only, degree 0 included.
struct PComplexColumn {
  int n = 0;
  std::uint64_t p = 0;
  std::map<int, HomologyModule> nonzero;
};
const std::vector<PComplexColumn>& p_complex_homology();

std::size_t binomial(int n, int k);

}  // namespace liemorse::tables
