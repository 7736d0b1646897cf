#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "liemorse/cup.hpp"
#include "liemorse/errors.hpp"
#include "liemorse/morse.hpp"

using namespace liemorse;

namespace {

Cochain dual(const ChainComplex& c, int k, Cell cell) { return {k, {{*c.index_of(k, cell), Scalar(1)}}}; }

Cochain coboundary(const Cochain& a, const ChainComplex& c) {
  Cochain out{a.degree + 1, {}};
  if (a.degree + 1 > c.top_degree()) return out;
  const auto& d = c.boundary[static_cast<std::size_t>(a.degree + 1)];
  for (std::uint32_t col = 0; col < d.cols(); ++col) {
    Scalar s = 0;
    for (const auto& e : d.column(col)) {
      auto it = a.values.find(e.row);
      if (it != a.values.end()) s += e.value * it->second;
    }
    s = c.ring.reduce(s);
    if (s != 0) out.values.emplace(col, s);
  }
  return out;
}

Cochain add(const Cochain& a, const Cochain& b, const CoefficientRing& r) {
  Cochain out = a;
  for (const auto& [i, v] : b.values) {
    auto s = r.add(out.values[i], v);
    if (s == 0) {
      out.values.erase(i);
    } else {
      out.values[i] = s;
    }
  }
  return out;
}

Cochain random_cochain(std::mt19937_64& gen, const ChainComplex& c, int k) {
  std::uniform_int_distribution<int> v(-2, 2);
  Cochain out{k, {}};
  for (std::uint32_t i = 0; i < c.dim(k); ++i) {
    const int x = v(gen);
    if (x != 0) out.values.emplace(i, x);
  }
  return out;
}

}  // namespace

TEST_CASE("cup products of degree-one classes on an abelian algebra") {
  const auto g = std::make_shared<const LieAlgebra>(dgn(3));
  const auto c = build_ce_complex(g, CoefficientRing::rationals());
  const auto x1 = dual(c, 1, bit(0));
  const auto x2 = dual(c, 1, bit(1));
  const auto x3 = dual(c, 1, bit(2));
  CHECK(cup_product(x1, x2, c) == dual(c, 2, bit(0) | bit(1)));
  CHECK(cup_product(x2, x1, c) == negate(dual(c, 2, bit(0) | bit(1)), c.ring));
  CHECK(cup_product(x1, x1, c).is_zero());
  const auto left = cup_product(cup_product(x1, x2, c), x3, c);
  const auto right = cup_product(x1, cup_product(x2, x3, c), c);
  CHECK(left == right);
  CHECK(left == dual(c, 3, 0b111));
  CHECK(cup_product(cup_product(x2, x1, c), x3, c) == negate(left, c.ring));
}

TEST_CASE("the coboundary is a derivation of the cup product") {
  std::mt19937_64 gen(5);
  for (const auto& ring : {CoefficientRing::rationals(), CoefficientRing::modular(5)}) {
    const auto c = build_ce_complex(std::make_shared<const LieAlgebra>(sol(3)), ring);
    for (int trial = 0; trial < 20; ++trial) {
      const int i = 1 + trial % 2;
      const int j = 1 + (trial / 2) % 2;
      const auto a = random_cochain(gen, c, i);
      const auto b = random_cochain(gen, c, j);
      const auto lhs = coboundary(cup_product(a, b, c), c);
      const auto first = cup_product(coboundary(a, c), b, c);
      auto second = cup_product(a, coboundary(b, c), c);
      if (i % 2 == 1) second = negate(second, ring);
      CHECK(lhs == add(first, second, ring));
    }
  }
}

TEST_CASE("graded commutativity on random cochains") {
  std::mt19937_64 gen(11);
  const auto c = build_ce_complex(std::make_shared<const LieAlgebra>(sol(3)), CoefficientRing::rationals());
  for (int trial = 0; trial < 20; ++trial) {
    const int i = 1 + trial % 3;
    const int j = 1 + (trial / 3) % 3;
    const auto a = random_cochain(gen, c, i);
    const auto b = random_cochain(gen, c, j);
    const auto ab = cup_product(a, b, c);
    const auto ba = cup_product(b, a, c);
    CHECK(ab == ((i * j) % 2 == 0 ? ba : negate(ba, c.ring)));
  }
}

TEST_CASE("dual bases need a zero differential") {
  const auto c = build_ce_complex(std::make_shared<const LieAlgebra>(sol(2)), CoefficientRing::rationals());
  CHECK_THROWS_AS(cohomology_dual_basis(c), NonzeroDifferential);
  const auto r = build_normalized_ce_complex(std::make_shared<const LieAlgebra>(sol(2)), CoefficientRing::rationals());
  const auto basis = cohomology_dual_basis(r);
  CHECK(basis[1].size() == 2);
}

TEST_CASE("exterior algebra structure") {
  for (int n = 1; n <= 4; ++n) {
    const auto report = verify_exterior_algebra(Poset::chain(n), CoefficientRing::rationals());
    CHECK(report.ok);
    CHECK(report.generators == static_cast<std::size_t>(n));
    CHECK_FALSE(report.has_y);
  }
  CHECK(verify_exterior_algebra(Poset::antichain(3), CoefficientRing::modular(2)).ok);
  CHECK(verify_exterior_algebra(Poset::random(4, 2), CoefficientRing::rationals()).ok);

  const auto y = verify_exterior_algebra(Poset::chain(4), CoefficientRing::modular(3));
  CHECK(y.ok);
  CHECK(y.has_y);
  CHECK(y.y_degree == 5);
  CHECK(y.y_squared_zero);
  CHECK(y.x_times_y_nonzero);
  CHECK(y.table.size() == 25);

  const auto d = verify_exterior_algebra(resolve_poset("diamond"), CoefficientRing::modular(3));
  CHECK(d.ok);
  CHECK(d.has_y);
  CHECK_FALSE(verify_exterior_algebra(Poset::antichain(4), CoefficientRing::modular(3)).has_y);

  CHECK_THROWS_AS(verify_exterior_algebra(Poset::chain(4), CoefficientRing::modular(2)), PreconditionViolated);
  CHECK_THROWS_AS(verify_exterior_algebra(Poset::chain(3), CoefficientRing::integers()), PreconditionViolated);
  CHECK_THROWS_AS(verify_exterior_algebra(Poset::chain(3), CoefficientRing::modular(4)), PreconditionViolated);
}
