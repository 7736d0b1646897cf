#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace liemorse {

/// Finite partial order on {1, ..., n}. Elements are 1-based everywhere in
/// the public interface.
class Poset {
 public:
  /// Reflexive-transitive closure of the given cover relations (a < b).
  /// Throws CycleDetected if the relations contain a directed cycle.
  static Poset from_cover_relations(int n, const std::vector<std::pair<int, int>>& covers);
  static Poset chain(int n);
  static Poset antichain(int n);
  /// Order generated by relations a < b (a < b as labels), each kept with
  /// probability `density`. Deterministic in `seed`.
  static Poset random(int n, std::uint64_t seed, double density = 0.4);

  /// Parses the text format: "n=<int>" followed by "a < b" lines;
  /// blank lines and '#' comments are ignored.
  static Poset parse(std::istream& in);
  static Poset load(const std::string& path);

  int size() const { return n_; }
  bool leq(int a, int b) const { return leq_[index(a, b)] != 0; }
  bool less(int a, int b) const { return a != b && leq(a, b); }
  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }
  /// b covers a: a < b with nothing strictly between.
  bool covers(int a, int b) const;

  /// Hasse diagram edges in lexicographic order.
  std::vector<std::pair<int, int>> cover_relations() const;

  /// {x : a <= x <= b} in label order. Throws NotComparable unless a <= b.
  std::vector<int> interval(int a, int b) const;

  /// Number of pairs (a, c) with some b such that a < b < c.
  std::size_t comparable_noncovering_count() const;

  /// Number of pairs (i, j) with i <= j.
  std::size_t relation_count() const;

  bool is_bounded() const;

  /// Restriction of the order to {1, ..., m}.
  Poset restrict_to_prefix(int m) const;

  /// Reflexive, antisymmetric and transitive.
  bool is_valid() const;

  std::string to_text() const;

  friend bool operator==(const Poset& a, const Poset& b) { return a.n_ == b.n_ && a.leq_ == b.leq_; }

 private:
  Poset(int n, std::vector<char> leq) : n_(n), leq_(std::move(leq)) {}
  std::size_t index(int a, int b) const {
    return static_cast<std::size_t>(a - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b - 1);
  }

  int n_ = 0;
  std::vector<char> leq_;
};

/// Resolves a poset argument: a file path or one of the built-in names
/// "chain:<n>", "antichain:<n>", "diamond", "bipartite:<a>,<b>" (complete
/// bipartite, lower level below upper level) and "boolean:<k>" (subsets of
/// [k] ordered by inclusion, labelled in order of their bitmask value) and
/// "random:<n>,<seed>".
Poset resolve_poset(const std::string& spec);

}  // namespace liemorse
