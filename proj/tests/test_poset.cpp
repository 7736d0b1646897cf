#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "liemorse/errors.hpp"
#include "liemorse/poset.hpp"

using namespace liemorse;

namespace {

Poset diamond() { return Poset::from_cover_relations(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}}); }

// a < b < c witnesses counted by brute force
std::size_t triples(const Poset& p) {
  std::size_t count = 0;
  for (int a = 1; a <= p.size(); ++a) {
    for (int c = 1; c <= p.size(); ++c) {
      bool found = false;
      for (int b = 1; b <= p.size(); ++b) found = found || (p.less(a, b) && p.less(b, c));
      if (found) ++count;
    }
  }
  return count;
}

}  // namespace

TEST_CASE("closure of cover relations") {
  const auto c = Poset::from_cover_relations(3, {{1, 2}, {2, 3}});
  CHECK(c.leq(1, 3));
  CHECK(c == Poset::chain(3));
  const auto d = diamond();
  CHECK(d.leq(1, 4));
  CHECK_FALSE(d.leq(2, 3));
  CHECK_THROWS_AS(Poset::from_cover_relations(2, {{1, 2}, {2, 1}}), CycleDetected);
  CHECK_THROWS_AS(Poset::from_cover_relations(2, {{1, 3}}), InvalidArgument);
}

TEST_CASE("chains and antichains") {
  CHECK(Poset::chain(1) == Poset::antichain(1));
  CHECK(Poset::chain(3).leq(1, 3));
  const auto a = Poset::antichain(3);
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) CHECK(a.less(i, j) == false);
  }
}

TEST_CASE("intervals") {
  CHECK(Poset::chain(5).interval(1, 4) == std::vector<int>{1, 2, 3, 4});
  CHECK(diamond().interval(1, 4) == std::vector<int>{1, 2, 3, 4});
  CHECK_THROWS_AS(diamond().interval(2, 3), NotComparable);
}

TEST_CASE("comparable but not covering pairs") {
  CHECK(Poset::chain(3).comparable_noncovering_count() == 1);
  for (int n = 1; n <= 7; ++n) {
    CHECK(Poset::chain(n).comparable_noncovering_count() == static_cast<std::size_t>((n - 1) * (n - 2) / 2));
  }
  CHECK(Poset::antichain(4).comparable_noncovering_count() == 0);
  CHECK(diamond().comparable_noncovering_count() == 1);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto p = Poset::random(6, seed);
    CHECK(p.comparable_noncovering_count() == triples(p));
  }
}

TEST_CASE("boundedness") {
  CHECK(Poset::chain(4).is_bounded());
  CHECK_FALSE(Poset::antichain(2).is_bounded());
  CHECK(diamond().is_bounded());
  CHECK_FALSE(resolve_poset("bipartite:3,3").is_bounded());
}

TEST_CASE("closure is idempotent and valid on random orders") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto p = Poset::random(7, seed, 0.3);
    CHECK(p.is_valid());
    CHECK(Poset::from_cover_relations(p.size(), p.cover_relations()) == p);
    for (auto [a, b] : p.cover_relations()) CHECK(p.covers(a, b));
  }
}

TEST_CASE("text round trip and built-in names") {
  const auto d = diamond();
  std::istringstream in(d.to_text());
  CHECK(Poset::parse(in) == d);
  std::istringstream commented("# a comment\nn=3\n\n1 < 2\n2 < 3\n");
  CHECK(Poset::parse(commented) == Poset::chain(3));
  CHECK(resolve_poset("diamond") == d);
  CHECK(resolve_poset("chain:4") == Poset::chain(4));
  CHECK(resolve_poset("boolean:2") == d);
  CHECK(resolve_poset("bipartite:3,3").size() == 6);
  CHECK(resolve_poset("random:5,1") == Poset::random(5, 1));
  CHECK_THROWS(resolve_poset("/nonexistent/poset.pos"));
}

TEST_CASE("prefix restriction and relation count") {
  CHECK(Poset::chain(5).restrict_to_prefix(3) == Poset::chain(3));
  CHECK(Poset::chain(4).relation_count() == 10);
  CHECK(diamond().relation_count() == 9);
}
