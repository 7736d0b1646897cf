#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "liemorse/cli.hpp"
#include "liemorse/cup.hpp"
#include "liemorse/errors.hpp"
#include "liemorse/homology.hpp"
#include "liemorse/morse.hpp"
#include "liemorse/subcomplex.hpp"

namespace py = pybind11;
using namespace liemorse;

namespace {

py::int_ to_python(const Integer& value) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(value.get_str().c_str(), nullptr, 10));
}

py::list table_to_list(const HomologyTable& t) {
  py::list out;
  for (int k = t.first_degree; k <= t.last_degree(); ++k) {
    const auto& m = t.at(k);
    py::dict row;
    row["degree"] = k;
    row["free_rank"] = m.free_rank;
    py::list torsion;
    for (const auto& d : m.torsion) torsion.append(to_python(d));
    row["torsion"] = torsion;
    row["text"] = m.to_string();
    out.append(row);
  }
  return out;
}

py::list poset_homology(const std::string& poset, const std::string& ring, bool strict, bool reduce, int max_degree) {
  auto g = std::make_shared<const LieAlgebra>(gl_poset(resolve_poset(poset), strict));
  const auto r = CoefficientRing::parse(ring);
  BuildOptions options;
  options.max_degree = max_degree;
  HomologyTable t;
  {
    py::gil_scoped_release release;
    t = homology(reduce ? build_normalized_ce_complex(g, r, options) : build_ce_complex(g, r, options));
  }
  return table_to_list(t);
}

py::dict exterior_algebra(const std::string& poset, const std::string& ring) {
  const auto report = verify_exterior_algebra(resolve_poset(poset), CoefficientRing::parse(ring));
  py::dict d;
  d["ok"] = report.ok;
  d["generators"] = report.generators;
  d["has_y"] = report.has_y;
  d["y_degree"] = report.y_degree;
  d["y_squared_zero"] = report.y_squared_zero;
  d["x_times_y_nonzero"] = report.x_times_y_nonzero;
  d["table"] = report.table;
  d["failure"] = report.failure;
  return d;
}

double critical_ratio(int n, std::uint64_t p) {
  const auto g = sol(n);
  if (g.rank() > 30) throw ComplexTooLarge("rank " + std::to_string(g.rank()) + " is too large to enumerate");
  const NormalizationRule rule(g, CoefficientRing::modular(p));
  const std::uint64_t total = std::uint64_t{1} << g.rank();
  std::uint64_t critical = 0;
  for (Cell v = 0; v < total; ++v) critical += rule.is_critical(v) ? 1 : 0;
  return static_cast<double>(critical) / static_cast<double>(total);
}

py::tuple run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_liemorse, m) {
  m.doc() = "Homology of Lie algebras of poset matrices";
  m.def("homology", &poset_homology, py::arg("poset"), py::arg("ring") = "Z", py::arg("strict") = false,
        py::arg("reduce") = true, py::arg("max_degree") = -1,
        "Homology of gl(P) (or its strict part) as a list of per-degree dicts.");
  m.def("predicted_mod_p_dims",
        [](const std::string& poset, std::uint64_t p) { return predicted_mod_p_dims(resolve_poset(poset), p); },
        py::arg("poset"), py::arg("p"));
  m.def("comparable_noncovering_count",
        [](const std::string& poset) { return resolve_poset(poset).comparable_noncovering_count(); }, py::arg("poset"));
  m.def("exterior_algebra", &exterior_algebra, py::arg("poset"), py::arg("ring"));
  m.def("critical_ratio", &critical_ratio, py::arg("n"), py::arg("p"),
        "Fraction of wedges of sol_n left critical by the normalization matching over Z/p.");
  m.def("run_cli", &run, py::arg("args"), "Runs the command line front end; returns (exit_code, stdout, stderr).");

  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<ComplexTooLarge>(m, "ComplexTooLarge", PyExc_RuntimeError);
}
