#include "liemorse/tables.hpp"

#include "liemorse/errors.hpp"

namespace liemorse::tables {

namespace {

using Parts = std::vector<std::pair<long, std::size_t>>;

HomologyModule M(std::size_t free, Parts parts = {}) { return make_module(free, parts); }

}  // namespace

std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

int sol_homology_max_n() { return 5; }

const std::vector<HomologyModule>& sol_homology(int n) {
  static const std::vector<std::vector<HomologyModule>> table = {
      {M(1), M(1)},
      {M(1), M(2), M(1), M(0)},
      {M(1), M(3), M(3), M(1, {{2, 1}}), M(0, {{2, 2}}), M(0, {{2, 1}}), M(0)},
      {M(1), M(4), M(6), M(4, {{2, 3}}), M(1, {{2, 11}}), M(0, {{2, 15}, {3, 1}}), M(0, {{2, 9}, {3, 3}}),
       M(0, {{2, 2}, {3, 3}}), M(0, {{3, 1}}), M(0), M(0)},
      {M(1), M(5), M(10), M(10, {{2, 6}}), M(5, {{2, 29}}), M(1, {{2, 56}, {3, 3}}), M(0, {{2, 59}, {3, 13}}),
       M(0, {{2, 51}, {4, 1}, {3, 22}}), M(0, {{2, 55}, {4, 4}, {3, 19}}), M(0, {{2, 50}, {4, 6}, {3, 11}}),
       M(0, {{2, 26}, {4, 4}, {3, 7}}), M(0, {{2, 9}, {4, 1}, {3, 4}}), M(0, {{2, 6}, {3, 1}}), M(0, {{2, 4}}),
       M(0, {{2, 1}}), M(0)},
  };
  if (n < 1 || n > sol_homology_max_n()) throw InvalidArgument("no stored table for n=" + std::to_string(n));
  return table[static_cast<std::size_t>(n - 1)];
}

std::size_t ShiftedBinomial::evaluate(int k) const {
  std::size_t total = binomial(n, k);
  for (const auto& [c, s] : terms) total += c * binomial(n, k - s);
  return total;
}

const std::vector<ShiftedBinomial>& shifted_binomials() {
  static const std::vector<ShiftedBinomial> formulas = {
      {3, 2, {{1, 3}}},
      {4, 2, {{3, 3}, {2, 4}}},
      {5, 2, {{6, 3}, {5, 4}, {5, 6}, {6, 7}, {1, 10}}},
      {6, 2, {{10, 3}, {9, 4}, {30, 6}, {61, 7}, {30, 8}, {15, 10}, {19, 11}, {5, 12}}},
      {4, 3, {{1, 5}}},
      {5, 3, {{3, 5}, {1, 6}, {1, 8}}},
      {6, 3, {{6, 5}, {3, 6}, {6, 8}, {4, 9}}},
      {6, 5, {{1, 9}}},
  };
  return formulas;
}

const std::vector<PComplexColumn>& p_complex_homology() {
  static const std::vector<PComplexColumn> columns = {
      {2, 2, {{0, M(1)}}},
      {2, 3, {{0, M(1)}}},
      {3, 2, {{0, M(1)}, {3, M(1)}}},
      {3, 3, {{0, M(1)}}},
      {4, 2, {{0, M(1)}, {3, M(2, {{2, 1}})}, {4, M(1)}}},
      {4, 3, {{0, M(1)}, {5, M(1)}}},
      {5, 2, {{0, M(1)}, {3, M(3, {{2, 3}})}, {4, M(2)}, {6, M(2, {{2, 3}})}, {7, M(3)}, {10, M(1)}}},
      {5, 3, {{0, M(1)}, {5, M(2, {{3, 1}})}, {8, M(1)}}},
      {6, 2, {{0, M(1)}, {3, M(4, {{2, 6}})}, {4, M(3)}, {6, M(5, {{2, 24}, {4, 1}, {3, 2}})},
              {7, M(10, {{2, 23}, {4, 3}, {3, 3}})}, {8, M(4)}, {10, M(4, {{2, 9}, {4, 2}, {3, 1}})},
              {11, M(4, {{2, 4}})}, {12, M(1)}}},
      {6, 3, {{0, M(1)}, {5, M(3, {{3, 3}})}, {8, M(3, {{3, 3}})}, {9, M(1)}, {10, M(0, {{2, 1}})}}},
      {6, 5, {{0, M(1)}, {9, M(1)}}},
  };
  return columns;
}

}  // namespace liemorse::tables
