#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "liemorse/cup.hpp"
#include "liemorse/homology.hpp"
#include "liemorse/morse.hpp"
#include "liemorse/subcomplex.hpp"
#include "liemorse/tables.hpp"
#include "oracle.hpp"

using namespace liemorse;

namespace {

constexpr double kRatioThreshold = 0.05;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

std::shared_ptr<const LieAlgebra> shared(LieAlgebra g) { return std::make_shared<const LieAlgebra>(std::move(g)); }

HomologyTable reduced_homology(const Poset& p, const CoefficientRing& ring, int max_degree = -1) {
  BuildOptions options;
  options.max_degree = max_degree;
  return homology(build_normalized_ce_complex(shared(gl_poset(p, false)), ring, options));
}

std::string dims_string(const std::vector<std::size_t>& d) {
  std::string s;
  for (auto x : d) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

bool has_summand(const HomologyModule& m, long q) {
  for (const auto& [order, mult] : m.primary_parts()) {
    if (order == q && mult > 0) return true;
  }
  return false;
}

Outcome integral_tables() {
  Outcome o;
  for (int n = 1; n <= tables::sol_homology_max_n(); ++n) {
    const auto t = reduced_homology(Poset::chain(n), CoefficientRing::integers());
    const auto& expected = tables::sol_homology(n);
    if (t.modules != expected) o.fail("sol_" + std::to_string(n) + " differs");
  }
  if (o.ok) o.detail = "sol_1..sol_5, all degrees exact";
  return o;
}

Outcome shifted_binomials() {
  Outcome o;
  std::size_t count = 0;
  for (const auto& f : tables::shifted_binomials()) {
    auto got = predicted_mod_p_dims(Poset::chain(f.n), f.p);
    const int top = f.n * (f.n + 1) / 2;
    got.resize(static_cast<std::size_t>(top + 1), 0);
    for (int k = 0; k <= top; ++k) {
      if (got[static_cast<std::size_t>(k)] != f.evaluate(k)) {
        o.fail("n=" + std::to_string(f.n) + " p=" + std::to_string(f.p) + " degree " + std::to_string(k));
        break;
      }
    }
    ++count;
  }
  if (o.ok) o.detail = std::to_string(count) + " formulas exact";
  return o;
}

Outcome p_complex_table() {
  Outcome o;
  std::size_t count = 0;
  for (const auto& col : tables::p_complex_homology()) {
    if (col.n > 5) continue;
    const auto t = integral_p_complex_homology(Poset::chain(col.n), col.p, true);
    for (int k = 0; k <= t.last_degree(); ++k) {
      const auto it = col.nonzero.find(k);
      const HomologyModule expected = it == col.nonzero.end() ? HomologyModule{} : it->second;
      if (!(t.at(k) == expected)) {
        o.fail("n=" + std::to_string(col.n) + " p=" + std::to_string(col.p) + " H_" + std::to_string(k) + " = " +
               t.at(k).to_string());
      }
    }
    ++count;
  }
  if (o.ok) o.detail = std::to_string(count) + " columns exact (n <= 5)";
  return o;
}

Outcome three_routes() {
  Outcome o;
  std::vector<std::pair<std::string, Poset>> cases;
  for (int n = 1; n <= 5; ++n) cases.emplace_back("sol_" + std::to_string(n), Poset::chain(n));
  cases.emplace_back("diamond", resolve_poset("diamond"));
  cases.emplace_back("bipartite:3,3", resolve_poset("bipartite:3,3"));
  for (const auto& [name, p] : cases) {
    const auto integral = reduced_homology(p, CoefficientRing::integers());
    for (std::uint64_t q : {2, 3, 5}) {
      auto direct = reduced_homology(p, CoefficientRing::modular(q)).dims();
      auto uct = betti_mod_p_from_integral(integral, q);
      auto kunneth = predicted_mod_p_dims(p, q);
      kunneth.resize(direct.size(), 0);
      if (direct != uct || direct != kunneth) {
        o.fail(name + " p=" + std::to_string(q) + ": " + dims_string(direct) + " | " + dims_string(uct) + " | " +
               dims_string(kunneth));
      }
    }
  }
  if (o.ok) o.detail = std::to_string(cases.size()) + " algebras x p in {2,3,5}";
  return o;
}

Outcome large_primes_low_degrees() {
  Outcome o;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const int n = 3 + static_cast<int>(seed % 3);
    const auto p = Poset::random(n, seed);
    for (std::uint64_t q : {5, 7}) {
      if (q < static_cast<std::uint64_t>(n)) continue;
      const auto dims = reduced_homology(p, CoefficientRing::modular(q)).dims();
      for (int k = 0; k < static_cast<int>(dims.size()); ++k) {
        if (dims[static_cast<std::size_t>(k)] != tables::binomial(n, k)) {
          o.fail("seed " + std::to_string(seed) + " p=" + std::to_string(q) + " degree " + std::to_string(k));
        }
      }
    }
    const auto z = reduced_homology(p, CoefficientRing::integers(), 4);
    if (!(z.at(1) == make_module(static_cast<std::size_t>(n)))) o.fail("seed " + std::to_string(seed) + ": H_1 = " + z.at(1).to_string());
    if (!(z.at(2) == make_module(tables::binomial(n, 2)))) o.fail("seed " + std::to_string(seed) + ": H_2 = " + z.at(2).to_string());
    const auto& h3 = z.at(3);
    const auto expected_torsion = p.comparable_noncovering_count();
    bool all_two = true;
    for (const auto& d : h3.torsion) all_two = all_two && d == 2;
    if (h3.torsion.size() != expected_torsion || !all_two) {
      o.fail("seed " + std::to_string(seed) + ": H_3 = " + h3.to_string() + ", expected " + std::to_string(expected_torsion) +
             " copies of Z_2");
    }
  }
  if (o.ok) o.detail = "10 random posets on 3..5 elements";
  return o;
}

Outcome interval_torsion() {
  Outcome o;
  const auto sol5 = reduced_homology(Poset::chain(5), CoefficientRing::integers());
  std::string literal;
  for (int t = 2; t <= 4; ++t) {
    if (!has_summand(sol5.at(2 * t - 1), t)) o.fail("no Z_" + std::to_string(t) + " in H_" + std::to_string(2 * t - 1));
    literal += " H_" + std::to_string(2 * t - 3) + (has_summand(sol5.at(2 * t - 3), t) ? ":yes" : ":no");
  }
  const auto bip = reduced_homology(resolve_poset("bipartite:3,3"), CoefficientRing::integers());
  if (!has_summand(bip.at(9), 3)) o.fail("bipartite 3x3 has no Z_3 in H_9: " + bip.at(9).to_string());
  if (o.ok) o.detail = "Z_t in H_{2t-1} for t=2,3,4 and Z_3 in H_9(bipartite 3x3); H_{2t-3} reading:" + literal;
  return o;
}

Outcome high_degrees() {
  Outcome o;
  const auto s3z2 = reduced_homology(Poset::chain(3), CoefficientRing::modular(2)).dims();
  const auto s3z3 = reduced_homology(Poset::chain(3), CoefficientRing::modular(3)).dims();
  const auto s4z2 = reduced_homology(Poset::chain(4), CoefficientRing::modular(2)).dims();
  const auto s4z3 = reduced_homology(Poset::chain(4), CoefficientRing::modular(3)).dims();
  if (s3z2[6] != 1) o.fail("H_6(sol_3;Z_2) != Z_2");
  if (s3z3[6] != 0) o.fail("H_6(sol_3;Z_3) != 0");
  if (s4z2[9] != 0 || s4z2[10] != 0) o.fail("H_9 or H_10 of sol_4 over Z_2 nonzero");
  if (s4z2[8] == 0) o.fail("H_8(sol_4;Z_2) = 0");
  if (s4z3[10] != 0) o.fail("H_10(sol_4;Z_3) != 0");
  if (s4z3[9] == 0) o.fail("H_9(sol_4;Z_3) = 0");
  if (o.ok) o.detail = "sol_3 and sol_4 top degrees";
  return o;
}

Outcome mod_p_degree_2p_minus_1() {
  Outcome o;
  const auto s3 = reduced_homology(Poset::chain(3), CoefficientRing::modular(2)).dims();
  for (int k = 0; k <= 6; ++k) {
    if (s3[static_cast<std::size_t>(k)] != tables::binomial(3, k) + tables::binomial(3, k - 3)) {
      o.fail("sol_3 over Z_2 degree " + std::to_string(k));
    }
  }
  for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 5}}) {
    const auto d = reduced_homology(Poset::chain(n), CoefficientRing::modular(static_cast<std::uint64_t>(p))).dims();
    const int k = 2 * p - 1;
    if (d[static_cast<std::size_t>(k)] != tables::binomial(n, k) + tables::binomial(n - p + 1, 2)) {
      o.fail("(p,n)=(" + std::to_string(p) + "," + std::to_string(n) + "): dim " + std::to_string(d[static_cast<std::size_t>(k)]));
    }
  }
  if (o.ok) o.detail = "sol_3/Z_2 all degrees; degree 2p-1 for (2,4),(2,5),(3,5)";
  return o;
}

// dense Smith-form homology of an unreduced complex
std::vector<HomologyModule> oracle_homology(const ChainComplex& c) {
  std::vector<std::size_t> dims;
  for (int k = 0; k <= c.top_degree(); ++k) dims.push_back(c.dim(k));
  std::vector<HomologyModule> out;
  for (const auto& g : oracle::integral_homology(c.boundary, dims)) {
    HomologyModule m;
    m.free_rank = g.free_rank;
    for (const auto& d : g.torsion) m.torsion.push_back(d);
    out.push_back(m);
  }
  return out;
}

std::vector<std::size_t> oracle_field_dims(const ChainComplex& c) {
  std::vector<std::size_t> ranks(static_cast<std::size_t>(c.top_degree() + 2), 0);
  for (int k = 1; k <= c.top_degree(); ++k) {
    const auto dense = oracle::to_dense(c.boundary[static_cast<std::size_t>(k)]);
    if (c.ring.is_rationals()) {
      ranks[static_cast<std::size_t>(k)] = oracle::smith(dense).size();
    } else {
      ranks[static_cast<std::size_t>(k)] = oracle::rank_mod_p(dense, c.ring.modulus());
    }
  }
  std::vector<std::size_t> out;
  for (int k = 0; k <= c.top_degree(); ++k) {
    out.push_back(c.dim(k) - ranks[static_cast<std::size_t>(k)] - ranks[static_cast<std::size_t>(k + 1)]);
  }
  return out;
}

std::vector<std::pair<std::string, LieAlgebra>> fixture_algebras() {
  std::vector<std::pair<std::string, LieAlgebra>> out;
  for (int n = 1; n <= 4; ++n) {
    out.emplace_back("sol_" + std::to_string(n), sol(n));
    out.emplace_back("dgn_" + std::to_string(n), dgn(n));
  }
  out.emplace_back("gl(diamond)", gl_poset(resolve_poset("diamond"), false));
  out.emplace_back("gl(random:4,8)", gl_poset(resolve_poset("random:4,8"), false));
  return out;
}

const std::vector<CoefficientRing>& fixture_rings() {
  static const std::vector<CoefficientRing> rings = {CoefficientRing::integers(), CoefficientRing::modular(2),
                                                     CoefficientRing::modular(3), CoefficientRing::modular(5),
                                                     CoefficientRing::rationals()};
  return rings;
}

ChainComplex simplicial(const std::string& text) {
  std::istringstream in(text);
  return simplicial_chain_complex(parse_facets(in), false);
}

Outcome morse_soundness() {
  Outcome o;
  std::size_t fixtures = 0;
  auto check = [&](const std::string& name, const ChainComplex& c, const Matching& m) {
    ++fixtures;
    const auto v = validate_matching(c, m);
    if (!v.valid()) return o.fail(name + ": " + v.reason);
    const auto r = reduce_by_matching(c, m);
    if (!r.boundary_squared_zero()) return o.fail(name + ": reduced boundary does not square to zero");
    if (c.ring.is_integers()) {
      if (homology(r).modules != oracle_homology(c)) o.fail(name + ": reduced homology differs from the oracle");
    } else if (homology(r).dims() != oracle_field_dims(c)) {
      o.fail(name + ": reduced homology differs from the oracle");
    }
  };
  for (const auto& [name, g] : fixture_algebras()) {
    for (const auto& ring : fixture_rings()) {
      const auto c = build_ce_complex(shared(g), ring);
      check(name + "/" + ring.name(), c, normalization_matching(c));
    }
  }
  for (int v = 2; v <= 6; ++v) {
    std::string ball;
    std::string sphere;
    for (int i = 0; i < v; ++i) ball += static_cast<char>('a' + i);
    for (int skip = 0; skip <= v; ++skip) {
      for (int i = 0; i <= v; ++i) {
        if (i != skip) sphere += static_cast<char>('a' + i);
      }
      sphere += '\n';
    }
    std::string path;
    std::string cycle;
    for (int i = 0; i < v + 1; ++i) {
      if (i < v) path += std::string{static_cast<char>('a' + i), static_cast<char>('a' + i + 1)} + "\n";
      cycle += std::string{static_cast<char>('a' + i), static_cast<char>('a' + (i + 1) % (v + 1))} + "\n";
    }
    for (const auto& [name, text] : std::vector<std::pair<std::string, std::string>>{
             {"ball", ball + "\n"}, {"sphere", sphere}, {"path", path}, {"cycle", cycle}}) {
      const auto c = simplicial(text);
      check(name + std::to_string(v), c, star_matching(c, "a"));
    }
  }

  const auto ex = simplicial("ab\nbc\ncd\nad\nde\nefg\nefh\negh\nfgh\nijkl\n");
  auto cell = [&](const std::string& names) {
    Cell v = 0;
    for (char ch : names) {
      const auto it = std::find(ex.vertex_names.begin(), ex.vertex_names.end(), std::string(1, ch));
      v |= bit(static_cast<int>(it - ex.vertex_names.begin()));
    }
    return v;
  };
  std::vector<std::pair<Cell, Cell>> pairs;
  for (const auto& [u, l] : std::vector<std::pair<std::string, std::string>>{
           {"ad", "a"}, {"bc", "b"}, {"cd", "c"}, {"de", "e"}, {"ef", "f"}, {"eg", "g"}, {"eh", "h"}, {"ij", "j"}, {"ik", "k"},
           {"il", "l"}, {"efg", "fg"}, {"efh", "fh"}, {"egh", "gh"}, {"ijk", "jk"}, {"ijl", "jl"}, {"ikl", "kl"}, {"ijkl", "jkl"}}) {
    pairs.emplace_back(cell(u), cell(l));
  }
  const auto m = matching_from_cells(ex, pairs);
  check("worked example", ex, m);
  const auto r = reduce_by_matching(ex, m);
  if (homology(r).dims() != std::vector<std::size_t>{2, 1, 1, 0}) o.fail("worked example homology");
  std::vector<Scalar> weights;
  for (const auto& path : gradient_paths(ex, m, 1, *ex.index_of(1, cell("ab")))) {
    if (path.vertices.back() == *ex.index_of(0, cell("d"))) weights.push_back(path.weight);
  }
  std::sort(weights.begin(), weights.end());
  if (weights != std::vector<Scalar>{-1, 1}) o.fail("worked example: the two zig-zag paths to d do not cancel");
  if (o.ok) o.detail = std::to_string(fixtures) + " fixtures; worked example H = 2,1,1,0 with paths -1 and +1";
  return o;
}

Outcome restriction_identity() {
  Outcome o;
  std::size_t count = 0;
  for (const auto& [name, g] : fixture_algebras()) {
    for (const auto& ring : fixture_rings()) {
      const auto c = build_ce_complex(shared(g), ring);
      const auto schur = reduce_by_matching(c, normalization_matching(c));
      const auto restricted = normalization_reduce(c);
      if (schur.cells != restricted.cells || schur.boundary != restricted.boundary) o.fail(name + "/" + ring.name());
      ++count;
    }
  }
  if (o.ok) o.detail = std::to_string(count) + " (algebra, ring) pairs entrywise identical";
  return o;
}

Outcome cup_products() {
  Outcome o;
  std::vector<std::pair<std::string, CoefficientRing>> cases;
  for (int n = 1; n <= 5; ++n) cases.emplace_back("chain:" + std::to_string(n), CoefficientRing::rationals());
  cases.emplace_back("random:5,3", CoefficientRing::rationals());
  cases.emplace_back("random:4,6", CoefficientRing::rationals());
  cases.emplace_back("chain:5", CoefficientRing::modular(5));
  cases.emplace_back("random:5,3", CoefficientRing::modular(5));
  for (const auto& [poset, ring] : cases) {
    const auto report = verify_exterior_algebra(resolve_poset(poset), ring);
    if (!report.ok) o.fail(poset + "/" + ring.name() + ": " + report.failure);
  }
  const auto y = verify_exterior_algebra(Poset::chain(4), CoefficientRing::modular(3));
  if (!y.ok || !y.has_y || y.y_degree != 5 || !y.y_squared_zero || !y.x_times_y_nonzero) {
    o.fail("chain:4/Z/3 extra generator: " + y.failure);
  }
  if (o.ok) o.detail = std::to_string(cases.size()) + " exterior algebras; chain(4)/Z_3 has y in degree 5, y^2=0, x_i y != 0";
  return o;
}

std::pair<std::size_t, std::size_t> critical_count(int n, std::uint64_t p) {
  const auto g = sol(n);
  const NormalizationRule rule(g, CoefficientRing::modular(p));
  std::size_t critical = 0;
  const std::uint64_t total = std::uint64_t{1} << g.rank();
  for (Cell v = 0; v < total; ++v) critical += rule.is_critical(v) ? 1 : 0;
  return {critical, total};
}

Outcome reduction_ratio() {
  Outcome o;
  const auto [c5, t5] = critical_count(5, 2);
  const auto [c6, t6] = critical_count(6, 2);
  const double r5 = static_cast<double>(c5) / static_cast<double>(t5);
  const double r6 = static_cast<double>(c6) / static_cast<double>(t6);
  char buf[200];
  std::snprintf(buf, sizeof buf, "sol_5/Z_2 ratio %zu/%zu = %.4f (threshold %.2f); sol_6/Z_2 ratio %zu/%zu = %.4f", c5,
                static_cast<std::size_t>(t5), r5, kRatioThreshold, c6, static_cast<std::size_t>(t6), r6);
  o.detail = buf;
  if (!(r5 < kRatioThreshold)) o.ok = false;
  return o;
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "integral homology tables", integral_tables},
      {2, "mod-p shifted-binomial formulas", shifted_binomials},
      {3, "p-complex table", p_complex_table},
      {4, "direct / UCT / Kunneth consistency", three_routes},
      {5, "large primes and low degrees on random posets", large_primes_low_degrees},
      {6, "interval torsion", interval_torsion},
      {7, "high-degree vanishing", high_degrees},
      {8, "mod-p dimensions in degree 2p-1", mod_p_degree_2p_minus_1},
      {9, "Morse engine soundness", morse_soundness},
      {10, "restricted boundary equals eliminated boundary", restriction_identity},
      {11, "cup product structure", cup_products},
      {12, "reduction ratio", reduction_ratio},
  };
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
  }
  int failed = 0;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %2d %s: %s (%.2f s)\n", out.ok ? "PASS" : "FAIL", c.id, c.name, out.detail.c_str(), seconds);
    std::fflush(stdout);
    if (!out.ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
