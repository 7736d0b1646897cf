#include "liemorse/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>

#include "liemorse/cup.hpp"
#include "liemorse/errors.hpp"
#include "liemorse/homology.hpp"
#include "liemorse/morse.hpp"
#include "liemorse/parallel.hpp"
#include "liemorse/subcomplex.hpp"
#include "liemorse/tables.hpp"

namespace liemorse {

namespace {

using json = nlohmann::ordered_json;

struct JobSpec {
  std::string family;
  int n = 0;
  std::string poset;
  std::string facets;
  std::string ring = "Z";
  std::string degrees;
  std::string format = "text";
  std::string reduce = "auto";
  std::uint64_t p_subcomplex = 0;
  int threads = 0;
  std::size_t cap = std::size_t{1} << 24;
  std::string emit_matching;
};

struct Job {
  std::shared_ptr<const LieAlgebra> algebra;
  CoefficientRing ring = CoefficientRing::integers();
  std::string title;
  bool reduced = false;
};

const std::vector<std::string> kFamilies = {"sol", "nil", "gl-poset", "gl-poset-strict", "dgn", "so2", "simplicial"};

std::pair<int, int> parse_degrees(const std::string& text) {
  if (text.empty()) return {0, -1};
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty() || v < 0) throw InvalidArgument("bad degree range '" + text + "'");
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int k = to_int(text);
    return {k, k};
  }
  const int lo = to_int(text.substr(0, dots));
  const int hi = to_int(text.substr(dots + 2));
  if (hi < lo) throw InvalidArgument("empty degree range '" + text + "'");
  return {lo, hi};
}

bool has_diagonals(const std::string& family) {
  return family == "sol" || family == "dgn" || family == "gl-poset";
}

Job make_job(const JobSpec& spec) {
  if (std::find(kFamilies.begin(), kFamilies.end(), spec.family) == kFamilies.end()) {
    throw InvalidArgument("unknown family '" + spec.family + "'");
  }
  Job job;
  job.ring = CoefficientRing::parse(spec.ring);
  const bool needs_n = spec.family == "sol" || spec.family == "nil" || spec.family == "dgn" || spec.family == "so2";
  if (needs_n && spec.n < 1) throw InvalidArgument("family " + spec.family + " needs --n >= 1");
  if ((spec.family == "gl-poset" || spec.family == "gl-poset-strict") && spec.poset.empty()) {
    throw InvalidArgument("family " + spec.family + " needs --poset");
  }
  if (spec.family == "simplicial" && spec.facets.empty()) throw InvalidArgument("family simplicial needs --facets");
  if (spec.family == "so2" && !(job.ring.is_modular() && job.ring.modulus() == 2)) {
    throw InvalidArgument("family so2 is only defined over Z/2");
  }
  if (spec.reduce != "auto" && spec.reduce != "none" && spec.reduce != "normalization") {
    throw InvalidArgument("--reduce must be none or normalization");
  }
  if (spec.reduce == "normalization" && !has_diagonals(spec.family)) {
    throw InvalidArgument("family " + spec.family + " has no diagonals to normalize by");
  }
  if (spec.p_subcomplex != 0 && (spec.family == "so2" || spec.family == "simplicial")) {
    throw InvalidArgument("--p-subcomplex needs a matrix-unit family");
  }

  if (spec.family == "sol") job.algebra = std::make_shared<const LieAlgebra>(sol(spec.n));
  if (spec.family == "nil") job.algebra = std::make_shared<const LieAlgebra>(nil(spec.n));
  if (spec.family == "dgn") job.algebra = std::make_shared<const LieAlgebra>(dgn(spec.n));
  if (spec.family == "so2") job.algebra = std::make_shared<const LieAlgebra>(so_char2(spec.n));
  if (spec.family == "gl-poset" || spec.family == "gl-poset-strict") {
    job.algebra = std::make_shared<const LieAlgebra>(gl_poset(resolve_poset(spec.poset), spec.family == "gl-poset-strict"));
  }
  job.reduced = has_diagonals(spec.family) && spec.reduce != "none";
  if (job.algebra) {
    job.title = job.algebra->name() + " over " + job.ring.name();
  } else {
    job.title = "simplicial complex " + spec.facets + " over " + job.ring.name();
  }
  if (spec.p_subcomplex != 0) job.title += ", weights divisible by " + std::to_string(spec.p_subcomplex);
  return job;
}

ChainComplex build_job_complex(const JobSpec& spec, const Job& job, int lo, int hi) {
  if (!job.algebra) return simplicial_chain_complex(load_facets(spec.facets), false, job.ring);
  BuildOptions options;
  options.min_degree = std::max(0, lo - 1);
  options.max_degree = hi < 0 ? -1 : hi + 1;
  options.cap = spec.cap;
  options.threads = spec.threads;
  if (spec.p_subcomplex != 0) {
    if (spec.p_subcomplex < 2) throw InvalidArgument("--p-subcomplex must be at least 2");
    if (!job.reduced) return p_subcomplex(job.algebra, job.ring, spec.p_subcomplex, options);
    const auto g = job.algebra;
    const auto p = spec.p_subcomplex;
    options.filter = [g, p](Cell v) { return weights_divisible(*g, v, p); };
  }
  if (job.reduced) return build_normalized_ce_complex(job.algebra, job.ring, options);
  return build_ce_complex(job.algebra, job.ring, options);
}

std::string render(const HomologyModule& m, const CoefficientRing& ring) {
  if (ring.is_integers()) return m.to_string();
  if (m.is_zero()) return "0";
  const std::string base = ring.is_rationals() ? "Q" : "Z/" + std::to_string(ring.modulus());
  if (m.free_rank == 1) return base;
  const std::string wrapped = ring.is_rationals() ? base : "(" + base + ")";
  return wrapped + "^" + std::to_string(m.free_rank);
}

json module_json(const HomologyModule& m, const CoefficientRing& ring, int degree) {
  json j;
  j["degree"] = degree;
  if (ring.is_integers()) {
    j["free_rank"] = m.free_rank;
    json torsion = json::array();
    for (const auto& [q, mult] : m.primary_parts()) torsion.push_back({{"order", q.get_str()}, {"multiplicity", mult}});
    j["torsion"] = torsion;
  } else {
    j["dim"] = m.free_rank;
  }
  j["text"] = render(m, ring);
  return j;
}

void emit_matching_file(const JobSpec& spec, const Job& job, std::ostream& out) {
  if (!job.algebra || !has_diagonals(spec.family)) {
    throw InvalidArgument("--emit-matching needs a family with diagonals");
  }
  BuildOptions options;
  options.cap = spec.cap;
  options.threads = spec.threads;
  const auto full = spec.p_subcomplex != 0 ? p_subcomplex(job.algebra, job.ring, spec.p_subcomplex, options)
                                           : build_ce_complex(job.algebra, job.ring, options);
  const auto m = normalization_matching(full);
  if (spec.emit_matching == "-") {
    emit_matching(out, full, m);
    return;
  }
  std::ofstream file(spec.emit_matching);
  if (!file) throw InvalidArgument("cannot write " + spec.emit_matching);
  emit_matching(file, full, m);
}

int cmd_homology(const JobSpec& spec, std::ostream& out) {
  if (spec.format != "text" && spec.format != "csv" && spec.format != "json") {
    throw InvalidArgument("--format must be text, csv or json");
  }
  const auto [lo, hi] = parse_degrees(spec.degrees);
  const Job job = make_job(spec);
  if (!spec.emit_matching.empty()) emit_matching_file(spec, job, out);
  const auto complex = build_job_complex(spec, job, lo, hi);
  if (lo > complex.top_degree()) throw InvalidArgument("degree " + std::to_string(lo) + " exceeds the top degree");
  const auto table = homology(complex, lo, hi, spec.threads);

  if (spec.format == "json") {
    json j;
    j["title"] = job.title;
    j["ring"] = job.ring.name();
    j["reduction"] = job.reduced ? "normalization" : "none";
    json rows = json::array();
    for (int k = table.first_degree; k <= table.last_degree(); ++k) rows.push_back(module_json(table.at(k), job.ring, k));
    j["homology"] = rows;
    out << j.dump(2) << '\n';
  } else if (spec.format == "csv") {
    out << (job.ring.is_integers() ? "degree,free_rank,torsion\n" : "degree,dim\n");
    for (int k = table.first_degree; k <= table.last_degree(); ++k) {
      const auto& m = table.at(k);
      out << k << ',' << m.free_rank;
      if (job.ring.is_integers()) out << ',' << m.torsion_csv();
      out << '\n';
    }
  } else {
    out << "# " << job.title << '\n';
    for (int k = table.first_degree; k <= table.last_degree(); ++k) {
      out << "H_" << k << " = " << render(table.at(k), job.ring) << '\n';
    }
  }
  return kExitOk;
}

struct DegreeCount {
  std::size_t original = 0;
  std::size_t critical = 0;
};

std::vector<DegreeCount> reduction_counts(const JobSpec& spec, const Job& job) {
  const int r = job.algebra->rank();
  if (r > 30 || (std::size_t{1} << r) > spec.cap * 64) {
    throw ComplexTooLarge("counting 2^" + std::to_string(r) + " wedges exceeds the cap");
  }
  std::unique_ptr<NormalizationRule> rule;
  if (job.reduced) rule = std::make_unique<NormalizationRule>(*job.algebra, job.ring);
  const std::uint64_t total = std::uint64_t{1} << r;
  const int threads = spec.threads <= 0 ? default_threads() : spec.threads;
  const std::uint64_t chunks = std::min<std::uint64_t>(total, 256);
  std::vector<std::vector<DegreeCount>> partial(chunks, std::vector<DegreeCount>(static_cast<std::size_t>(r + 1)));
  parallel_for(chunks, threads, [&](std::size_t c) {
    const std::uint64_t begin = total * c / chunks;
    const std::uint64_t end = total * (c + 1) / chunks;
    auto& counts = partial[c];
    for (Cell v = begin; v < end; ++v) {
      if (spec.p_subcomplex != 0 && !weights_divisible(*job.algebra, v, spec.p_subcomplex)) continue;
      auto& d = counts[static_cast<std::size_t>(cell_degree(v))];
      ++d.original;
      if (!rule || rule->is_critical(v)) ++d.critical;
    }
  });
  std::vector<DegreeCount> counts(static_cast<std::size_t>(r + 1));
  for (const auto& p : partial) {
    for (std::size_t k = 0; k < counts.size(); ++k) {
      counts[k].original += p[k].original;
      counts[k].critical += p[k].critical;
    }
  }
  return counts;
}

int cmd_stats(const JobSpec& spec, std::ostream& out) {
  const Job job = make_job(spec);
  if (!job.algebra) throw InvalidArgument("stats needs a Lie algebra family");
  const auto start = std::chrono::steady_clock::now();
  const auto counts = reduction_counts(spec, job);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::size_t original = 0;
  std::size_t critical = 0;
  for (const auto& d : counts) {
    original += d.original;
    critical += d.critical;
  }
  const double ratio = original == 0 ? 1.0 : static_cast<double>(critical) / static_cast<double>(original);
  if (spec.format == "json") {
    json j;
    j["title"] = job.title;
    j["reduction"] = job.reduced ? "normalization" : "none";
    json rows = json::array();
    for (std::size_t k = 0; k < counts.size(); ++k) {
      rows.push_back({{"degree", k}, {"original", counts[k].original}, {"critical", counts[k].critical}});
    }
    j["degrees"] = rows;
    j["original"] = original;
    j["critical"] = critical;
    j["ratio"] = ratio;
    j["compression"] = critical == 0 ? 0.0 : 1.0 / ratio;
    out << j.dump(2) << '\n';
  } else if (spec.format == "csv") {
    out << "degree,original,critical\n";
    for (std::size_t k = 0; k < counts.size(); ++k) out << k << ',' << counts[k].original << ',' << counts[k].critical << '\n';
    out << "total," << original << ',' << critical << '\n';
  } else {
    out << "# " << job.title << (job.reduced ? ", normalization matching" : ", no reduction") << '\n';
    out << std::setw(6) << "deg" << std::setw(14) << "original" << std::setw(14) << "critical" << '\n';
    for (std::size_t k = 0; k < counts.size(); ++k) {
      out << std::setw(6) << k << std::setw(14) << counts[k].original << std::setw(14) << counts[k].critical << '\n';
    }
    out << std::setw(6) << "total" << std::setw(14) << original << std::setw(14) << critical << '\n';
    std::ostringstream r;
    r << std::setprecision(6) << ratio;
    r << ", original/critical = " << (critical == 0 ? 0.0 : 1.0 / ratio);
    out << "ratio critical/original = " << r.str() << " (counted in " << std::fixed << std::setprecision(2) << seconds
        << " s)\n";
  }
  return kExitOk;
}

// ---- verification suites ----

struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
};

std::string dims_string(const std::vector<std::size_t>& dims) {
  std::string s;
  for (auto d : dims) s += (s.empty() ? "" : " ") + std::to_string(d);
  return s;
}

void resize_to(std::vector<std::size_t>& a, std::vector<std::size_t>& b) {
  const auto len = std::max(a.size(), b.size());
  a.resize(len, 0);
  b.resize(len, 0);
}

HomologyTable normalized_homology(const Poset& poset, bool strict, const CoefficientRing& ring, int threads) {
  auto g = std::make_shared<const LieAlgebra>(gl_poset(poset, strict));
  BuildOptions options;
  options.threads = threads;
  return homology(strict ? build_ce_complex(g, ring, options) : build_normalized_ce_complex(g, ring, options), 0, -1,
                  threads);
}

std::vector<Check> suite_tables(int max_n, int threads) {
  std::vector<Check> checks;
  for (int n = 1; n <= std::min(max_n, tables::sol_homology_max_n()); ++n) {
    const auto table = normalized_homology(Poset::chain(n), false, CoefficientRing::integers(), threads);
    const auto& expected = tables::sol_homology(n);
    Check c{"integral homology of sol_" + std::to_string(n), table.modules == expected, ""};
    if (!c.ok) {
      for (int k = 0; k < static_cast<int>(expected.size()); ++k) {
        const auto got = table.has(k) ? table.at(k).to_string() : std::string("missing");
        if (!table.has(k) || !(table.at(k) == expected[static_cast<std::size_t>(k)])) {
          c.detail = "H_" + std::to_string(k) + " = " + got + ", expected " + expected[static_cast<std::size_t>(k)].to_string();
          break;
        }
      }
    }
    checks.push_back(c);
  }
  for (const auto& col : tables::p_complex_homology()) {
    if (col.n > max_n) continue;
    const auto table = integral_p_complex_homology(Poset::chain(col.n), col.p, true);
    Check c{"p-complex homology of nil_" + std::to_string(col.n) + ", p=" + std::to_string(col.p), true, ""};
    for (int k = 0; k <= table.last_degree(); ++k) {
      const auto it = col.nonzero.find(k);
      const HomologyModule expected = it == col.nonzero.end() ? HomologyModule{} : it->second;
      if (!(table.at(k) == expected)) {
        c.ok = false;
        c.detail = "H_" + std::to_string(k) + " = " + table.at(k).to_string() + ", expected " + expected.to_string();
        break;
      }
    }
    checks.push_back(c);
  }
  for (const auto& f : tables::shifted_binomials()) {
    if (f.n > max_n + 1) continue;
    auto got = predicted_mod_p_dims(Poset::chain(f.n), f.p);
    std::vector<std::size_t> expected;
    for (int k = 0; k <= f.n * (f.n + 1) / 2; ++k) expected.push_back(f.evaluate(k));
    resize_to(got, expected);
    checks.push_back({"shifted-binomial dims of sol_" + std::to_string(f.n) + " over Z/" + std::to_string(f.p),
                      got == expected, got == expected ? "" : "got " + dims_string(got) + ", expected " + dims_string(expected)});
  }
  return checks;
}

std::vector<Check> suite_uct(int max_n, int threads) {
  std::vector<std::pair<std::string, Poset>> posets;
  for (int n = 2; n <= max_n; ++n) posets.emplace_back("sol_" + std::to_string(n), Poset::chain(n));
  posets.emplace_back("diamond", resolve_poset("diamond"));
  posets.emplace_back("bipartite 3x3", resolve_poset("bipartite:3,3"));
  std::vector<Check> checks;
  for (const auto& [name, poset] : posets) {
    const auto integral = normalized_homology(poset, false, CoefficientRing::integers(), threads);
    for (std::uint64_t p : {2, 3, 5}) {
      auto direct = normalized_homology(poset, false, CoefficientRing::modular(p), threads).dims();
      auto uct = betti_mod_p_from_integral(integral, p);
      auto kunneth = predicted_mod_p_dims(poset, p);
      resize_to(direct, uct);
      resize_to(direct, kunneth);
      resize_to(uct, kunneth);
      const bool ok = direct == uct && uct == kunneth;
      checks.push_back({name + " over Z/" + std::to_string(p), ok,
                        ok ? dims_string(direct)
                           : "direct " + dims_string(direct) + " | uct " + dims_string(uct) + " | kunneth " + dims_string(kunneth)});
    }
  }
  return checks;
}

std::vector<Check> suite_tensor() {
  std::vector<Check> checks;
  for (const std::string name : {"chain:4", "diamond"}) {
    for (std::uint64_t p : {2, 3}) {
      const auto report = verify_tensor_factorization(resolve_poset(name), p);
      std::string detail;
      for (const auto& d : report.degrees) {
        if (!d.bijective || !d.boundary_equal) {
          detail = "degree " + std::to_string(d.degree) + " differs";
          break;
        }
      }
      checks.push_back({"tensor factorization of " + name + ", p=" + std::to_string(p), report.ok, detail});
    }
  }
  return checks;
}

std::vector<Check> suite_cup() {
  std::vector<std::pair<std::string, std::string>> cases;
  for (int n = 1; n <= 5; ++n) cases.emplace_back("chain:" + std::to_string(n), "Q");
  cases.emplace_back("random:4,7", "Q");
  cases.emplace_back("random:5,11", "Q");
  cases.emplace_back("chain:5", "Z/5");
  cases.emplace_back("random:5,11", "Z/5");
  cases.emplace_back("chain:4", "Z/3");
  cases.emplace_back("diamond", "Z/3");
  std::vector<Check> checks;
  for (const auto& [poset, ring] : cases) {
    const auto report = verify_exterior_algebra(resolve_poset(poset), CoefficientRing::parse(ring));
    bool ok = report.ok;
    std::string detail = report.failure;
    if (ok && report.has_y) {
      ok = report.y_squared_zero && report.x_times_y_nonzero;
      detail = "y in degree " + std::to_string(report.y_degree) + (ok ? "" : ", y relations fail");
    }
    checks.push_back({"exterior algebra for " + poset + " over " + ring, ok, detail});
  }
  return checks;
}

std::vector<Check> suite_matching(int max_n, int threads) {
  std::vector<std::pair<std::string, LieAlgebra>> algebras;
  for (int n = 1; n <= max_n; ++n) {
    algebras.emplace_back("sol_" + std::to_string(n), sol(n));
    algebras.emplace_back("dgn_" + std::to_string(n), dgn(n));
  }
  algebras.emplace_back("gl(diamond)", gl_poset(resolve_poset("diamond"), false));
  algebras.emplace_back("gl(random:4,3)", gl_poset(resolve_poset("random:4,3"), false));
  std::vector<Check> checks;
  for (const auto& [name, algebra] : algebras) {
    auto g = std::make_shared<const LieAlgebra>(algebra);
    for (const std::string ring_name : {"Z", "Z/2", "Z/3", "Z/5", "Q"}) {
      const auto ring = CoefficientRing::parse(ring_name);
      const auto full = build_ce_complex(g, ring);
      const auto m = normalization_matching(full);
      const auto check = validate_matching(full, m);
      Check c{"normalization matching of " + name + " over " + ring_name, check.valid(), check.reason};
      if (c.ok) {
        ReduceOptions options;
        options.threads = threads;
        const auto schur = reduce_by_matching(full, m, options);
        const auto restricted = normalization_reduce(full);
        c.ok = schur.boundary == restricted.boundary && schur.cells == restricted.cells;
        if (!c.ok) c.detail = "restricted boundary differs from the eliminated one";
      }
      if (c.ok) {
        c.ok = homology(full, 0, -1, threads).modules == homology(normalization_reduce(full), 0, -1, threads).modules;
        if (!c.ok) c.detail = "reduced homology differs";
      }
      checks.push_back(c);
    }
  }
  return checks;
}

int cmd_probe(std::uint64_t m, int max_n, int threads, std::ostream& out) {
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d <= m; ++d) {
    if (m % d == 0) {
      p = d;
      break;
    }
  }
  std::uint64_t rest = m;
  while (p != 0 && rest % p == 0) rest /= p;
  if (p == 0 || rest != 1) throw InvalidArgument("--m must be a prime power, got " + std::to_string(m));
  for (int n = 1; n <= max_n; ++n) {
    const auto table = normalized_homology(Poset::chain(n), false, CoefficientRing::integers(), threads);
    for (int k = 0; k <= table.last_degree(); ++k) {
      for (const auto& [q, mult] : table.at(k).primary_parts()) {
        if (q == Integer(static_cast<unsigned long>(m))) {
          out << "Z_" << m << " first appears at column n=" << n << ", row k=" << k << " (H_" << k << " = "
              << table.at(k).to_string() << ")\n";
          out << "conjectured first column: " << m + 1 << '\n';
          return kExitOk;
        }
      }
    }
  }
  out << "Z_" << m << " does not appear for n <= " << max_n << '\n';
  return kExitOk;
}

int report_checks(const std::string& suite, const std::vector<Check>& checks, std::ostream& out) {
  std::size_t failed = 0;
  for (const auto& c : checks) {
    out << (c.ok ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << '\n';
    if (!c.ok) ++failed;
  }
  out << suite << ": " << checks.size() - failed << "/" << checks.size() << " passed\n";
  return failed == 0 ? kExitOk : kExitVerifyFailed;
}

int cmd_verify(const std::string& suite, int max_n, std::uint64_t m, int threads, std::ostream& out) {
  if (suite == "tables") return report_checks(suite, suite_tables(max_n < 0 ? 5 : max_n, threads), out);
  if (suite == "uct") return report_checks(suite, suite_uct(max_n < 0 ? 5 : max_n, threads), out);
  if (suite == "tensor") return report_checks(suite, suite_tensor(), out);
  if (suite == "cup") return report_checks(suite, suite_cup(), out);
  if (suite == "matching") return report_checks(suite, suite_matching(max_n < 0 ? 4 : max_n, threads), out);
  if (suite == "conjecture-probe") {
    if (m < 2) throw InvalidArgument("conjecture-probe needs --m >= 2");
    return cmd_probe(m, max_n < 0 ? 5 : max_n, threads, out);
  }
  throw InvalidArgument("unknown verify suite '" + suite + "'");
}

int cmd_cup_table(const std::string& poset, int n, const std::string& ring, std::ostream& out) {
  if (poset.empty() && n < 1) throw InvalidArgument("cup-table needs --poset or --n");
  const Poset P = poset.empty() ? Poset::chain(n) : resolve_poset(poset);
  const auto report = verify_exterior_algebra(P, CoefficientRing::parse(ring));
  out << "# cup products of generators, " << report.generators << " in degree 1";
  if (report.has_y) out << ", y in degree " << report.y_degree;
  out << '\n';
  for (const auto& line : report.table) out << line << '\n';
  if (!report.ok) {
    out << "exterior algebra check failed: " << report.failure << '\n';
    return kExitVerifyFailed;
  }
  out << "exterior algebra check passed\n";
  return kExitOk;
}

void add_job_options(CLI::App* cmd, JobSpec& spec) {
  cmd->add_option("--family", spec.family, "sol, nil, gl-poset, gl-poset-strict, dgn, so2 or simplicial")->required();
  cmd->add_option("--n", spec.n, "matrix size");
  cmd->add_option("--poset", spec.poset, "poset file or built-in name");
  cmd->add_option("--facets", spec.facets, "facet list file");
  cmd->add_option("--ring", spec.ring, "Z, Q or Z/<m>");
  cmd->add_option("--p-subcomplex", spec.p_subcomplex, "keep wedges with all weights divisible by p");
  cmd->add_option("--reduce", spec.reduce, "none or normalization");
  cmd->add_option("--format", spec.format, "text, csv or json");
  cmd->add_option("--threads", spec.threads, "worker threads (0 = all cores)");
  cmd->add_option("--cap", spec.cap, "maximum number of cells per degree");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Homology of Lie algebras of poset matrices via discrete Morse theory", "liemorse"};
  app.require_subcommand(1);
  JobSpec spec;

  auto* homology_cmd = app.add_subcommand("homology", "compute H_k of a chain complex");
  add_job_options(homology_cmd, spec);
  homology_cmd->add_option("--deg", spec.degrees, "degree k or range lo..hi");
  homology_cmd->add_option("--emit-matching", spec.emit_matching, "write the normalization matching to a file (- for stdout)");

  auto* stats_cmd = app.add_subcommand("stats", "count original and critical wedges");
  add_job_options(stats_cmd, spec);

  std::string suite;
  int max_n = -1;
  std::uint64_t m = 0;
  int verify_threads = 0;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("suite", suite, "tables, uct, tensor, cup, matching or conjecture-probe")->required();
  verify_cmd->add_option("--max-n", max_n, "largest matrix size to include");
  verify_cmd->add_option("--m", m, "prime power for conjecture-probe");
  verify_cmd->add_option("--threads", verify_threads, "worker threads (0 = all cores)");

  std::string cup_poset;
  int cup_n = 0;
  std::string cup_ring = "Q";
  auto* cup_cmd = app.add_subcommand("cup-table", "multiplication table of cohomology generators");
  cup_cmd->add_option("--poset", cup_poset, "poset file or built-in name");
  cup_cmd->add_option("--n", cup_n, "use the chain of length n");
  cup_cmd->add_option("--ring", cup_ring, "Q or Z/p");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadSpec;
  }

  try {
    if (*homology_cmd) return cmd_homology(spec, out);
    if (*stats_cmd) return cmd_stats(spec, out);
    if (*verify_cmd) return cmd_verify(suite, max_n, m, verify_threads, out);
    if (*cup_cmd) return cmd_cup_table(cup_poset, cup_n, cup_ring, out);
  } catch (const ComplexTooLarge& e) {
    err << "error: " << e.what() << '\n';
    return kExitTooLarge;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadSpec;
  }
  return kExitBadSpec;
}

}  // namespace liemorse
