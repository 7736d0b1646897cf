#include "liemorse/poset.hpp"

#include <fstream>
#include <istream>
#include <random>
#include <sstream>

#include "liemorse/errors.hpp"

namespace liemorse {

Poset Poset::from_cover_relations(int n, const std::vector<std::pair<int, int>>& covers) {
  if (n < 1) throw InvalidArgument("poset size must be positive");
  const auto nn = static_cast<std::size_t>(n);
  std::vector<char> leq(nn * nn, 0);
  for (int i = 0; i < n; ++i) leq[static_cast<std::size_t>(i) * nn + static_cast<std::size_t>(i)] = 1;
  for (auto [a, b] : covers) {
    if (a < 1 || a > n || b < 1 || b > n) {
      throw InvalidArgument("cover relation " + std::to_string(a) + " < " + std::to_string(b) +
                            " out of range 1.." + std::to_string(n));
    }
    if (a == b) throw InvalidArgument("cover relation " + std::to_string(a) + " < " + std::to_string(a) + " is reflexive");
    leq[static_cast<std::size_t>(a - 1) * nn + static_cast<std::size_t>(b - 1)] = 1;
  }
  // Warshall closure
  for (std::size_t k = 0; k < nn; ++k) {
    for (std::size_t i = 0; i < nn; ++i) {
      if (!leq[i * nn + k]) continue;
      for (std::size_t j = 0; j < nn; ++j) {
        if (leq[k * nn + j]) leq[i * nn + j] = 1;
      }
    }
  }
  for (std::size_t i = 0; i < nn; ++i) {
    for (std::size_t j = i + 1; j < nn; ++j) {
      if (leq[i * nn + j] && leq[j * nn + i]) {
        throw CycleDetected("cover relations contain a cycle through " + std::to_string(i + 1) + " and " +
                            std::to_string(j + 1));
      }
    }
  }
  return Poset(n, std::move(leq));
}

Poset Poset::chain(int n) {
  std::vector<std::pair<int, int>> covers;
  for (int i = 1; i < n; ++i) covers.emplace_back(i, i + 1);
  return from_cover_relations(n, covers);
}

Poset Poset::antichain(int n) { return from_cover_relations(n, {}); }

Poset Poset::random(int n, std::uint64_t seed, double density) {
  std::mt19937_64 gen(seed);
  std::bernoulli_distribution edge(density);
  std::vector<std::pair<int, int>> relations;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      if (edge(gen)) relations.emplace_back(a, b);
    }
  }
  return from_cover_relations(n, relations);
}

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

int parse_int(const std::string& text, int line_no) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (trim(text.substr(used)).empty()) return v;
  } catch (const std::exception&) {
  }
  throw InvalidArgument("line " + std::to_string(line_no) + ": expected an integer, got '" + text + "'");
}

}  // namespace

Poset Poset::parse(std::istream& in) {
  int n = -1;
  std::vector<std::pair<int, int>> covers;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (n < 0) {
      if (line.rfind("n=", 0) != 0) {
        throw InvalidArgument("line " + std::to_string(line_no) + ": expected 'n=<int>' header");
      }
      n = parse_int(trim(line.substr(2)), line_no);
      continue;
    }
    const auto lt = line.find('<');
    if (lt == std::string::npos) {
      throw InvalidArgument("line " + std::to_string(line_no) + ": expected 'a < b'");
    }
    covers.emplace_back(parse_int(trim(line.substr(0, lt)), line_no), parse_int(trim(line.substr(lt + 1)), line_no));
  }
  if (n < 0) throw InvalidArgument("poset file has no 'n=<int>' header");
  return from_cover_relations(n, covers);
}

Poset Poset::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open poset file '" + path + "'");
  return parse(in);
}

bool Poset::covers(int a, int b) const {
  if (!less(a, b)) return false;
  for (int x = 1; x <= n_; ++x) {
    if (x != a && x != b && less(a, x) && less(x, b)) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> Poset::cover_relations() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a <= n_; ++a) {
    for (int b = 1; b <= n_; ++b) {
      if (covers(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<int> Poset::interval(int a, int b) const {
  if (a < 1 || a > n_ || b < 1 || b > n_) throw InvalidArgument("interval endpoint out of range");
  if (!leq(a, b)) {
    throw NotComparable(std::to_string(a) + " is not below " + std::to_string(b));
  }
  std::vector<int> out;
  for (int x = 1; x <= n_; ++x) {
    if (leq(a, x) && leq(x, b)) out.push_back(x);
  }
  return out;
}

std::size_t Poset::comparable_noncovering_count() const {
  std::size_t count = 0;
  for (int a = 1; a <= n_; ++a) {
    for (int c = 1; c <= n_; ++c) {
      if (less(a, c) && !covers(a, c)) ++count;
    }
  }
  return count;
}

std::size_t Poset::relation_count() const {
  std::size_t count = 0;
  for (char c : leq_) count += c != 0;
  return count;
}

bool Poset::is_bounded() const {
  bool has_min = false;
  bool has_max = false;
  for (int x = 1; x <= n_; ++x) {
    bool below_all = true;
    bool above_all = true;
    for (int y = 1; y <= n_; ++y) {
      below_all = below_all && leq(x, y);
      above_all = above_all && leq(y, x);
    }
    has_min = has_min || below_all;
    has_max = has_max || above_all;
  }
  return has_min && has_max;
}

Poset Poset::restrict_to_prefix(int m) const {
  if (m < 1 || m > n_) throw InvalidArgument("prefix size out of range");
  std::vector<char> leq(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
  for (int a = 1; a <= m; ++a) {
    for (int b = 1; b <= m; ++b) {
      leq[static_cast<std::size_t>(a - 1) * static_cast<std::size_t>(m) + static_cast<std::size_t>(b - 1)] =
          this->leq(a, b) ? 1 : 0;
    }
  }
  return Poset(m, std::move(leq));
}

bool Poset::is_valid() const {
  for (int a = 1; a <= n_; ++a) {
    if (!leq(a, a)) return false;
    for (int b = 1; b <= n_; ++b) {
      if (a != b && leq(a, b) && leq(b, a)) return false;
      for (int c = 1; c <= n_; ++c) {
        if (leq(a, b) && leq(b, c) && !leq(a, c)) return false;
      }
    }
  }
  return true;
}

std::string Poset::to_text() const {
  std::ostringstream out;
  out << "n=" << n_ << '\n';
  for (auto [a, b] : cover_relations()) out << a << " < " << b << '\n';
  return out.str();
}

namespace {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_int(trim(item), 0));
  return out;
}

}  // namespace

Poset resolve_poset(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (name == "chain" && !arg.empty()) return Poset::chain(parse_int(arg, 0));
  if (name == "antichain" && !arg.empty()) return Poset::antichain(parse_int(arg, 0));
  if (spec == "diamond") return Poset::from_cover_relations(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}});
  if (name == "bipartite" && !arg.empty()) {
    const auto sizes = parse_int_list(arg);
    if (sizes.size() != 2 || sizes[0] < 1 || sizes[1] < 1) {
      throw InvalidArgument("bipartite poset needs two positive sizes");
    }
    std::vector<std::pair<int, int>> covers;
    for (int lo = 1; lo <= sizes[0]; ++lo) {
      for (int hi = 1; hi <= sizes[1]; ++hi) covers.emplace_back(lo, sizes[0] + hi);
    }
    return Poset::from_cover_relations(sizes[0] + sizes[1], covers);
  }
  if (name == "boolean" && !arg.empty()) {
    const int k = parse_int(arg, 0);
    if (k < 0 || k > 5) throw InvalidArgument("boolean lattice rank must be in 0..5");
    const int count = 1 << k;
    std::vector<std::pair<int, int>> covers;
    for (int s = 0; s < count; ++s) {
      for (int bit = 0; bit < k; ++bit) {
        if (!(s & (1 << bit))) covers.emplace_back(s + 1, (s | (1 << bit)) + 1);
      }
    }
    return Poset::from_cover_relations(count, covers);
  }
  if (name == "random" && !arg.empty()) {
    const auto params = parse_int_list(arg);
    if (params.size() != 2 || params[0] < 1) throw InvalidArgument("random poset needs random:<n>,<seed>");
    return Poset::random(params[0], static_cast<std::uint64_t>(params[1]));
  }
  return Poset::load(spec);
}

}  // namespace liemorse
