#include "liemorse/homology.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "elimination.hpp"
#include "liemorse/errors.hpp"
#include "liemorse/parallel.hpp"

namespace liemorse {

namespace {

/// Prime factorization of a positive integer (trial division, then a
/// probable-prime test on the cofactor).
std::vector<std::pair<Integer, int>> factorize(Integer n) {
  std::vector<std::pair<Integer, int>> out;
  for (unsigned long d = 2; d < 1000000 && Integer(d) * d <= n; ++d) {
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(Integer(d), e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

}  // namespace

std::vector<std::pair<Integer, std::size_t>> HomologyModule::primary_parts() const {
  // key: (prime, exponent)
  std::map<std::pair<Integer, int>, std::size_t> counts;
  for (const auto& d : torsion) {
    for (const auto& [p, e] : factorize(d)) ++counts[{p, e}];
  }
  std::vector<std::pair<Integer, std::size_t>> out;
  for (const auto& [key, m] : counts) {
    Integer q;
    mpz_pow_ui(q.get_mpz_t(), key.first.get_mpz_t(), static_cast<unsigned long>(key.second));
    out.emplace_back(q, m);
  }
  return out;
}

std::string HomologyModule::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  if (free_rank > 0) {
    out << "Z";
    if (free_rank > 1) out << '^' << free_rank;
    first = false;
  }
  for (const auto& [q, m] : primary_parts()) {
    if (!first) out << " + ";
    out << "Z_" << q;
    if (m > 1) out << '^' << m;
    first = false;
  }
  return out.str();
}

std::string HomologyModule::torsion_csv() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [q, m] : primary_parts()) {
    if (!first) out << "·";
    out << q << '^' << m;
    first = false;
  }
  return out.str();
}

HomologyModule make_module(std::size_t free_rank, const std::vector<std::pair<long, std::size_t>>& primary) {
  std::vector<Integer> diag;
  for (const auto& [q, m] : primary) {
    for (std::size_t i = 0; i < m; ++i) diag.emplace_back(q);
  }
  HomologyModule h;
  h.free_rank = free_rank;
  for (auto& d : normalize_divisors(diag)) {
    if (d != 1) h.torsion.push_back(d);
  }
  return h;
}

std::vector<std::size_t> HomologyTable::dims() const {
  std::vector<std::size_t> out;
  for (const auto& m : modules) out.push_back(m.free_rank);
  return out;
}

std::vector<Integer> normalize_divisors(std::vector<Integer> diagonal) {
  for (auto& d : diagonal) d = abs(d);
  std::vector<Integer> ones;
  std::vector<Integer> rest;
  for (auto& d : diagonal) {
    if (d == 0) throw InvalidArgument("diagonal entries must be nonzero");
    (d == 1 ? ones : rest).push_back(d);
  }
  std::sort(rest.begin(), rest.end());
  // Repeated gcd/lcm sweeps until the chain condition holds.
  for (std::size_t i = 0; i < rest.size(); ++i) {
    for (std::size_t j = i + 1; j < rest.size(); ++j) {
      if (rest[j] % rest[i] == 0) continue;
      Integer g = gcd(rest[i], rest[j]);
      Integer l = lcm(rest[i], rest[j]);
      rest[i] = g;
      rest[j] = l;
    }
  }
  std::vector<Integer> out = std::move(ones);
  for (auto& d : rest) {
    if (d == 1) {
      out.insert(out.begin(), Integer(1));
    } else {
      out.push_back(d);
    }
  }
  return out;
}

SmithForm smith_normal_form(const SparseMatrix& a) {
  detail::SparseEliminator<detail::IntegerOps> elim(a, {});
  SmithForm form;
  const auto units = elim.eliminate_units();
  std::vector<Integer> diag(units, Integer(1));
  elim.eliminate_euclidean(diag);
  form.rank = diag.size();
  form.divisors = normalize_divisors(std::move(diag));
  return form;
}

std::size_t rank_over_field(const SparseMatrix& a, const CoefficientRing& field) {
  if (field.is_rationals()) {
    detail::SparseEliminator<detail::RationalOps> elim(a, {});
    return elim.eliminate_units();
  }
  if (field.is_modular() && is_prime(field.modulus())) {
    detail::SparseEliminator<detail::ModularOps> elim(a, {field.modulus()});
    return elim.eliminate_units();
  }
  if (field.is_modular()) throw CompositeModulus("Z/" + std::to_string(field.modulus()) + " is not a field");
  throw InvalidArgument("rank over a field needs Q or Z/p");
}

namespace {

std::pair<int, int> clamp_window(const ChainComplex& c, int lo, int hi) {
  lo = std::max(lo, 0);
  if (hi < 0 || hi > c.top_degree()) hi = c.top_degree();
  while (lo <= hi && !c.homology_computable(lo)) ++lo;
  while (hi >= lo && !c.homology_computable(hi)) --hi;
  for (int k = lo; k <= hi; ++k) {
    if (!c.homology_computable(k)) throw InvalidArgument("degree window is not contiguous in the complex");
  }
  return {lo, hi};
}

const SparseMatrix& boundary_or_empty(const ChainComplex& c, int k) {
  static const SparseMatrix kEmpty;
  if (k < 0 || k > c.top_degree()) return kEmpty;
  return c.boundary[static_cast<std::size_t>(k)];
}

}  // namespace

HomologyTable homology_over_Z(const ChainComplex& c, int lo, int hi, int threads) {
  if (!c.ring.is_integers()) throw InvalidArgument("homology_over_Z needs a complex over Z");
  std::tie(lo, hi) = clamp_window(c, lo, hi);
  HomologyTable t;
  t.ring = c.ring;
  t.first_degree = lo;
  if (lo > hi) return t;
  std::vector<SmithForm> forms(static_cast<std::size_t>(hi - lo + 2));
  parallel_for(forms.size(), threads, [&](std::size_t i) {
    forms[i] = smith_normal_form(boundary_or_empty(c, lo + static_cast<int>(i)));
  });
  for (int k = lo; k <= hi; ++k) {
    const auto& here = forms[static_cast<std::size_t>(k - lo)];
    const auto& above = forms[static_cast<std::size_t>(k - lo + 1)];
    HomologyModule m;
    m.free_rank = c.dim(k) - here.rank - above.rank;
    for (const auto& d : above.divisors) {
      if (d != 1) m.torsion.push_back(d);
    }
    t.modules.push_back(std::move(m));
  }
  return t;
}

HomologyTable homology_over_field(const ChainComplex& c, int lo, int hi, int threads) {
  if (c.ring.is_integers()) throw InvalidArgument("homology_over_field needs Q or Z/p coefficients");
  if (c.ring.is_modular() && !is_prime(c.ring.modulus())) {
    throw CompositeModulus("Z/" + std::to_string(c.ring.modulus()) + " is not a field");
  }
  std::tie(lo, hi) = clamp_window(c, lo, hi);
  HomologyTable t;
  t.ring = c.ring;
  t.first_degree = lo;
  if (lo > hi) return t;
  std::vector<std::size_t> ranks(static_cast<std::size_t>(hi - lo + 2));
  parallel_for(ranks.size(), threads, [&](std::size_t i) {
    ranks[i] = rank_over_field(boundary_or_empty(c, lo + static_cast<int>(i)), c.ring);
  });
  for (int k = lo; k <= hi; ++k) {
    HomologyModule m;
    m.free_rank = c.dim(k) - ranks[static_cast<std::size_t>(k - lo)] - ranks[static_cast<std::size_t>(k - lo + 1)];
    t.modules.push_back(m);
  }
  return t;
}

HomologyTable homology(const ChainComplex& c, int lo, int hi, int threads) {
  if (c.ring.is_integers()) return homology_over_Z(c, lo, hi, threads);
  return homology_over_field(c, lo, hi, threads);
}

HomologyTable cohomology(const ChainComplex& c, int threads) {
  if (!c.is_complete()) throw InvalidArgument("cohomology needs a complex materialized in every degree");
  const auto dual = homology(dualize(c), 0, -1, threads);
  HomologyTable t;
  t.ring = c.ring;
  const int top = c.top_degree();
  for (int k = 0; k <= top; ++k) t.modules.push_back(dual.at(top - k));
  return t;
}

std::vector<std::size_t> betti_mod_p_from_integral(const HomologyTable& t, std::uint64_t p) {
  if (!is_prime(p)) throw CompositeModulus(std::to_string(p) + " is not prime");
  auto divisible = [&](const HomologyModule& m) {
    std::size_t n = 0;
    for (const auto& d : m.torsion) n += mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(p)) ? 1 : 0;
    return n;
  };
  std::vector<std::size_t> out;
  for (int k = t.first_degree; k <= t.last_degree(); ++k) {
    std::size_t dim = t.at(k).free_rank + divisible(t.at(k));
    if (t.has(k - 1)) dim += divisible(t.at(k - 1));
    out.push_back(dim);
  }
  return out;
}

std::vector<std::size_t> kunneth_field_dims(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::size_t> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

std::vector<Integer> p_primary_divisors(const HomologyTable& t, std::uint64_t p) {
  std::vector<Integer> out;
  for (const auto& m : t.modules) {
    for (const auto& d : m.torsion) {
      Integer part = 1;
      Integer rest = d;
      while (mpz_divisible_ui_p(rest.get_mpz_t(), static_cast<unsigned long>(p))) {
        rest /= static_cast<unsigned long>(p);
        part *= static_cast<unsigned long>(p);
      }
      if (part > 1) out.push_back(part);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace liemorse
