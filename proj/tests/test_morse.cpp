#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "liemorse/chain.hpp"
#include "liemorse/errors.hpp"
#include "liemorse/homology.hpp"
#include "liemorse/morse.hpp"
#include "oracle.hpp"

using namespace liemorse;

namespace {

ChainComplex simplicial(const std::string& text, const CoefficientRing& ring = CoefficientRing::integers()) {
  std::istringstream in(text);
  return simplicial_chain_complex(parse_facets(in), false, ring);
}

Cell cell(const ChainComplex& c, const std::string& names) {
  Cell v = 0;
  for (char ch : names) {
    const auto it = std::find(c.vertex_names.begin(), c.vertex_names.end(), std::string(1, ch));
    REQUIRE(it != c.vertex_names.end());
    v |= bit(static_cast<int>(it - c.vertex_names.begin()));
  }
  return v;
}

std::uint32_t index(const ChainComplex& c, const std::string& names) {
  const auto i = c.index_of(static_cast<int>(names.size()) - 1, cell(c, names));
  REQUIRE(i);
  return *i;
}

const char* kExample = "ab\nbc\ncd\nad\nde\nefg\nefh\negh\nfgh\nijkl\n";

Matching example_matching(const ChainComplex& c) {
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"ad", "a"},    {"bc", "b"},    {"cd", "c"},    {"de", "e"},    {"ef", "f"},    {"eg", "g"},
      {"eh", "h"},    {"ij", "j"},    {"ik", "k"},    {"il", "l"},    {"efg", "fg"},  {"efh", "fh"},
      {"egh", "gh"},  {"ijk", "jk"},  {"ijl", "jl"},  {"ikl", "kl"},  {"ijkl", "jkl"}};
  std::vector<std::pair<Cell, Cell>> cells;
  for (const auto& [u, l] : pairs) cells.emplace_back(cell(c, u), cell(c, l));
  return matching_from_cells(c, cells);
}

std::string simplex_facets(int vertices) {
  std::string s;
  for (int i = 0; i < vertices; ++i) s += static_cast<char>('a' + i);
  return s + "\n";
}

std::string sphere_facets(int vertices) {
  std::string out;
  for (int skip = 0; skip < vertices; ++skip) {
    for (int i = 0; i < vertices; ++i) {
      if (i != skip) out += static_cast<char>('a' + i);
    }
    out += '\n';
  }
  return out;
}

bool same_homology(const ChainComplex& a, const ChainComplex& b) {
  return homology(a).modules == homology(b).modules;
}

}  // namespace

TEST_CASE("worked simplicial example") {
  const auto c = simplicial(kExample);
  auto m = example_matching(c);
  CHECK(check_matching(c, m));
  CHECK(m.status == Matching::Status::Valid);
  const auto crit = critical_vertices(c, m);
  CHECK(crit[0] == std::vector<std::uint32_t>{index(c, "d"), index(c, "i")});
  CHECK(crit[1] == std::vector<std::uint32_t>{index(c, "ab")});
  CHECK(crit[2] == std::vector<std::uint32_t>{index(c, "fgh")});
  CHECK(crit[3].empty());

  const auto paths = gradient_paths(c, m, 1, index(c, "ab"));
  std::vector<Scalar> to_d;
  for (const auto& p : paths) {
    if (p.vertices.back() == index(c, "d")) to_d.push_back(p.weight);
  }
  REQUIRE(to_d.size() == 2);
  std::sort(to_d.begin(), to_d.end());
  CHECK(to_d == std::vector<Scalar>{-1, 1});

  const auto r = reduce_by_matching(c, m);
  CHECK(r.dim(0) == 2);
  CHECK(r.dim(1) == 1);
  CHECK(r.dim(2) == 1);
  CHECK(r.dim(3) == 0);
  CHECK(r.boundary[1].is_zero());
  CHECK(r.boundary[2].is_zero());
  CHECK(homology(r).dims() == std::vector<std::size_t>{2, 1, 1, 0});
  CHECK(same_homology(r, c));
  const auto by_paths = reduce_by_paths(c, m);
  CHECK(by_paths.boundary == r.boundary);
}

TEST_CASE("star matchings on balls and spheres") {
  for (int v = 2; v <= 6; ++v) {
    const auto ball = simplicial(simplex_facets(v));
    auto m = star_matching(ball, "a");
    CHECK(check_matching(ball, m));
    const auto crit = critical_vertices(ball, m);
    std::size_t total = 0;
    for (const auto& d : crit) total += d.size();
    CHECK(total == 1);
    CHECK(crit[0] == std::vector<std::uint32_t>{index(ball, "a")});
    CHECK(same_homology(reduce_by_matching(ball, m), ball));

    const auto sphere = simplicial(sphere_facets(v + 1));
    auto s = star_matching(sphere, "a");
    CHECK(check_matching(sphere, s));
    const auto sc = critical_vertices(sphere, s);
    CHECK(sc[0] == std::vector<std::uint32_t>{index(sphere, "a")});
    CHECK(sc[static_cast<std::size_t>(v - 1)] == std::vector<std::uint32_t>{index(sphere, simplex_facets(v + 1).substr(1, static_cast<std::size_t>(v)))});
    const auto r = reduce_by_matching(sphere, s);
    CHECK(r.boundary_squared_zero());
    CHECK(same_homology(r, sphere));
  }
}

TEST_CASE("cycle and path matchings") {
  for (int n = 3; n <= 8; ++n) {
    std::string facets;
    std::vector<std::pair<Cell, Cell>> pairs;
    for (int i = 0; i < n; ++i) {
      facets += std::string{static_cast<char>('a' + i), static_cast<char>('a' + (i + 1) % n)} + "\n";
    }
    const auto cycle = simplicial(facets);
    // edge {i-1, i} matched with vertex i for i = 2..n
    for (int i = 1; i < n; ++i) pairs.emplace_back(bit(i - 1) | bit(i), bit(i));
    auto m = matching_from_cells(cycle, pairs);
    CHECK(check_matching(cycle, m));
    const auto crit = critical_vertices(cycle, m);
    CHECK(crit[0].size() == 1);
    CHECK(crit[1].size() == 1);
    CHECK(*cycle.index_of(1, bit(0) | bit(n - 1)) == crit[1][0]);
    const auto r = reduce_by_matching(cycle, m);
    CHECK(homology(r).dims() == std::vector<std::size_t>{1, 1});

    const auto path = simplicial(facets.substr(0, facets.size() - 3));
    auto pm = star_matching(path, "a");
    CHECK(check_matching(path, pm));
    CHECK(same_homology(reduce_by_matching(path, pm), path));
  }
}

TEST_CASE("invalid matchings are rejected") {
  const auto c = simplicial(kExample);
  Matching shared;
  shared.pairs = {{1, index(c, "ad"), index(c, "a")}, {1, index(c, "ab"), index(c, "a")}};
  CHECK(validate_matching(c, shared).violation == MatchingCheck::Violation::SharedEndpoint);
  Matching zero;
  zero.pairs = {{1, index(c, "ab"), index(c, "c")}};
  CHECK(validate_matching(c, zero).violation == MatchingCheck::Violation::NonUnit);
  Matching out_of_range;
  out_of_range.pairs = {{1, 1000, 0}};
  CHECK(validate_matching(c, out_of_range).violation == MatchingCheck::Violation::BadIndex);
  const auto cycle = simplicial("ab\nbc\nca\n");
  const auto cycle_matching = matching_from_cells(cycle, {{bit(0) | bit(1), bit(1)}, {bit(1) | bit(2), bit(2)}, {bit(0) | bit(2), bit(0)}});
  CHECK(validate_matching(cycle, cycle_matching).violation == MatchingCheck::Violation::Cycle);
  CHECK(critical_vertices(c, Matching{})[1].size() == c.dim(1));
}

TEST_CASE("the four-wedge cycle over Z/2") {
  const auto g = std::make_shared<const LieAlgebra>(nil(4));
  const auto c = build_ce_complex(g, CoefficientRing::modular(2));
  auto w = [&](std::initializer_list<std::pair<int, int>> units) {
    Cell v = 0;
    for (auto [a, b] : units) v |= bit(g->index_of(BasisLabel::unit(a, b)));
    return v;
  };
  const Cell u1 = w({{1, 2}, {1, 3}, {2, 4}, {3, 4}});
  const Cell u2 = w({{1, 2}, {1, 4}, {2, 3}, {3, 4}});
  const Cell v1 = w({{1, 2}, {1, 4}, {2, 4}});
  const Cell v2 = w({{1, 3}, {1, 4}, {3, 4}});
  // both upper wedges hit both lower wedges
  for (Cell u : {u1, u2}) {
    for (Cell v : {v1, v2}) CHECK(c.boundary[4].at(*c.index_of(3, v), *c.index_of(4, u)) != 0);
  }
  const auto m = matching_from_cells(c, {{u1, v1}, {u2, v2}});
  CHECK(validate_matching(c, m).violation == MatchingCheck::Violation::Cycle);
  const auto single = matching_from_cells(c, {{u1, v1}});
  CHECK(validate_matching(c, single).valid());
}

TEST_CASE("normalization matching is a Morse matching with restricted boundary") {
  std::vector<LieAlgebra> algebras;
  for (int n = 1; n <= 4; ++n) {
    algebras.push_back(sol(n));
    algebras.push_back(dgn(n));
  }
  algebras.push_back(gl_poset(resolve_poset("diamond"), false));
  algebras.push_back(gl_poset(Poset::random(4, 9), false));
  for (const auto& a : algebras) {
    auto g = std::make_shared<const LieAlgebra>(a);
    for (const auto& ring : {CoefficientRing::integers(), CoefficientRing::modular(2), CoefficientRing::modular(3),
                             CoefficientRing::modular(5), CoefficientRing::rationals()}) {
      CAPTURE(a.name());
      CAPTURE(ring.name());
      const auto c = build_ce_complex(g, ring);
      auto m = normalization_matching(c);
      REQUIRE(check_matching(c, m));
      const auto schur = reduce_by_matching(c, m);
      const auto restricted = normalization_reduce(c);
      CHECK(schur.cells == restricted.cells);
      CHECK(schur.boundary == restricted.boundary);
      CHECK(restricted.boundary_squared_zero());
      CHECK(build_normalized_ce_complex(g, ring).boundary == restricted.boundary);
      CHECK(same_homology(restricted, c));
    }
  }
}

TEST_CASE("critical wedges of the normalization matching") {
  const auto s2 = build_normalized_ce_complex(std::make_shared<const LieAlgebra>(sol(2)), CoefficientRing::integers());
  CHECK(s2.dim(0) == 1);
  CHECK(s2.dim(1) == 2);
  CHECK(s2.dim(2) == 1);
  CHECK(s2.dim(3) == 0);
  CHECK(homology(s2).dims() == std::vector<std::size_t>{1, 2, 1, 0});
  for (int n = 1; n <= 5; ++n) {
    for (std::uint64_t p : {5, 7}) {
      if (p < static_cast<std::uint64_t>(n)) continue;
      const auto r = build_normalized_ce_complex(std::make_shared<const LieAlgebra>(sol(n)), CoefficientRing::modular(p));
      for (int k = 0; k <= r.top_degree(); ++k) {
        std::size_t binom = 1;
        for (int i = 1; i <= k; ++i) binom = binom * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
        CHECK(r.dim(k) == (k <= n ? binom : 0));
        CHECK(r.boundary[static_cast<std::size_t>(k)].is_zero());
      }
    }
  }
  CHECK_THROWS_AS(NormalizationRule(nil(3), CoefficientRing::integers()), MissingDiagonals);
  // over Z/2 every wedge of sol_2 touching e12 is matched: e12 has weights -1, +1
  const auto z2 = build_normalized_ce_complex(std::make_shared<const LieAlgebra>(sol(2)), CoefficientRing::modular(2));
  CHECK(z2.total_cells() == 4);
}

TEST_CASE("elimination order does not change the reduced complex") {
  const auto g = std::make_shared<const LieAlgebra>(sol(4));
  for (const auto& ring : {CoefficientRing::integers(), CoefficientRing::modular(3)}) {
    const auto c = build_ce_complex(g, ring);
    const auto m = normalization_matching(c);
    const auto reference = reduce_by_matching(c, m);
    for (std::uint64_t seed : {1, 2, 3, 99}) {
      ReduceOptions options;
      options.shuffle_seed = seed;
      CHECK(reduce_by_matching(c, m, options).boundary == reference.boundary);
    }
    ReduceOptions threaded;
    threaded.threads = 4;
    CHECK(reduce_by_matching(c, m, threaded).boundary == reference.boundary);
  }
}

TEST_CASE("reduced homology equals the dense oracle") {
  for (int n = 2; n <= 3; ++n) {
    const auto c = build_ce_complex(sol(n), CoefficientRing::integers());
    const auto r = normalization_reduce(c);
    std::vector<std::size_t> dims;
    for (int k = 0; k <= c.top_degree(); ++k) dims.push_back(c.dim(k));
    const auto expected = oracle::integral_homology(c.boundary, dims);
    const auto got = homology(r);
    for (int k = 0; k <= c.top_degree(); ++k) {
      CHECK(got.at(k).free_rank == expected[static_cast<std::size_t>(k)].free_rank);
      CHECK(got.at(k).torsion.size() == expected[static_cast<std::size_t>(k)].torsion.size());
    }
  }
}

TEST_CASE("matching dump format") {
  const auto c = build_ce_complex(std::make_shared<const LieAlgebra>(sol(2)), CoefficientRing::integers());
  std::ostringstream out;
  emit_matching(out, c, normalization_matching(c));
  std::istringstream in(out.str());
  int k = 0;
  std::string upper, lower;
  std::size_t lines = 0;
  while (in >> k >> upper >> lower) {
    CHECK(upper.size() == 3);
    CHECK(std::count(upper.begin(), upper.end(), '1') == k);
    CHECK(std::count(lower.begin(), lower.end(), '1') == k - 1);
    ++lines;
  }
  CHECK(lines == 2);
}
