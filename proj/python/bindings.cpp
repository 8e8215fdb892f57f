#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "pqech/bundle.hpp"
#include "pqech/cli.hpp"
#include "pqech/generators.hpp"
#include "pqech/index.hpp"
#include "pqech/obstruction.hpp"
#include "pqech/spectrum.hpp"

namespace py = pybind11;
using namespace pqech;

namespace {

// Rationals cross the boundary as (numerator, denominator) or "p/q" strings.
Rational to_rational(const py::object& o) {
  if (py::isinstance<py::str>(o)) return Rational::parse(o.cast<std::string>());
  if (py::isinstance<py::tuple>(o)) {
    auto t = o.cast<std::pair<Int, Int>>();
    return {t.first, t.second};
  }
  return Rational(o.cast<Int>());
}

py::dict witness_dict(const TorusWitness& w) {
  py::dict d;
  d["d"] = w.d;
  d["m_plus"] = w.m_plus;
  d["m1"] = w.m1;
  d["m2"] = w.m2;
  d["m_minus"] = w.m_minus;
  return d;
}

py::dict capacity_dict(const CapacityResult& r) {
  py::dict d;
  d["lower"] = r.lower;
  d["upper"] = r.upper;
  d["exact"] = r.exact;
  d["witness_lower"] = witness_dict(r.witness_lower);
  d["witness_upper"] = witness_dict(r.witness_upper);
  return d;
}

py::dict generator_dict(const GradedGenerator& g) {
  py::dict d;
  d["orbit_set"] = g.orbit_set.str();
  d["m_plus"] = g.orbit_set.m_plus();
  d["m_hyp"] = g.orbit_set.m_hyp();
  d["m_minus"] = g.orbit_set.m_minus();
  d["degree"] = g.degree;
  d["grading"] = g.grading;
  d["action"] = py::make_tuple(g.action.leading, g.action.correction.str());
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact ECH indices, generators and capacities of prequantization bundles";
  m.attr("__version__") = "0.1.0";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<OverflowError>(m, "OverflowError", PyExc_OverflowError);
  py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);

  m.def("ech_index",
        [](Int genus, Int euler, const std::string& orbitset, Int d) {
          return ech_index(PrequantizationBundle(genus, euler), OrbitSet::parse(orbitset, genus), d);
        },
        py::arg("genus"), py::arg("euler"), py::arg("orbitset"), py::arg("d") = 0);

  m.def("relative_index",
        [](Int genus, Int euler, const std::string& alpha, const std::string& beta) {
          return relative_index(PrequantizationBundle(genus, euler), OrbitSet::parse(alpha, genus),
                                OrbitSet::parse(beta, genus));
        },
        py::arg("genus"), py::arg("euler"), py::arg("alpha"), py::arg("beta"));

  m.def("grading",
        [](Int genus, Int euler, const std::string& orbitset) {
          return grading(PrequantizationBundle(genus, euler), OrbitSet::parse(orbitset, genus));
        },
        py::arg("genus"), py::arg("euler"), py::arg("orbitset"));

  m.def("fredholm_index",
        [](Int genus, Int euler, Int genus_c, Int h_ends, Int eplus_ends, Int total_multiplicity, Int d) {
          return fredholm_index(PrequantizationBundle(genus, euler),
                                CurveEndData{genus_c, h_ends, eplus_ends, total_multiplicity, d});
        },
        py::arg("genus"), py::arg("euler"), py::arg("genus_c"), py::arg("h_ends"), py::arg("eplus_ends"),
        py::arg("total_multiplicity"), py::arg("d"));

  m.def("enumerate_by_grading",
        [](Int genus, Int euler, Int target) {
          py::list out;
          for (const auto& g : enumerate_by_grading(PrequantizationBundle(genus, euler), target))
            out.append(generator_dict(g));
          return out;
        },
        py::arg("genus"), py::arg("euler"), py::arg("grading"));

  m.def("enumerate_by_action",
        [](Int genus, Int euler, Int leading, const py::object& correction) {
          PrequantizationBundle bundle(genus, euler);
          py::list out;
          for (const auto& g :
               enumerate_by_action(bundle, MorseProfile::standard(genus), {leading, to_rational(correction)}))
            out.append(generator_dict(g));
          return out;
        },
        py::arg("genus"), py::arg("euler"), py::arg("leading"), py::arg("correction") = 0);

  m.def("sphere_pair_for_k",
        [](Int abs_e, Int k) {
          auto p = sphere_pair_for_k(abs_e, k);
          return py::make_tuple(p.m_minus, p.m_plus, p.degree);
        },
        py::arg("abs_e"), py::arg("k"));

  m.def("capacity_sphere", &capacity_sphere, py::arg("abs_e"), py::arg("k"));
  m.def("capacity_sphere_via_u", &capacity_sphere_via_u, py::arg("abs_e"), py::arg("k"));
  m.def("sphere_u_step",
        [](Int abs_e, Int m_minus, Int m_plus) -> py::object {
          auto next = sphere_u_step(abs_e, {m_minus, m_plus});
          if (!next) return py::none();
          return py::make_tuple(next->m_minus, next->m_plus);
        },
        py::arg("abs_e"), py::arg("m_minus"), py::arg("m_plus"));
  m.def("capacity_torus_bounds", [](Int abs_e, Int k) { return capacity_dict(capacity_torus_bounds(abs_e, k)); },
        py::arg("abs_e"), py::arg("k"));
  m.def("capacity_torus_closed_form", &capacity_torus_closed_form, py::arg("k"));

  m.def("ball_capacities",
        [](const py::object& a, Int k_max) {
          std::vector<std::string> out;
          for (const auto& v : ball_capacities(to_rational(a), k_max).values) out.push_back(v.str());
          return out;
        },
        py::arg("a"), py::arg("k_max"));
  m.def("ellipsoid_capacities",
        [](const py::object& a, const py::object& b, Int k_max) {
          std::vector<std::string> out;
          for (const auto& v : ellipsoid_capacities(to_rational(a), to_rational(b), k_max).values) out.push_back(v.str());
          return out;
        },
        py::arg("a"), py::arg("b"), py::arg("k_max"));

  m.def("gromov_width_report",
        [](Int genus, Int euler) {
          auto r = gromov_width_report(PrequantizationBundle(genus, euler));
          py::dict d;
          d["universal_bound"] = r.universal_bound;
          d["capacity_c1"] = r.capacity_c1 ? py::object(py::int_(*r.capacity_c1)) : py::object(py::none());
          d["best_bound"] = r.best_bound ? py::object(py::int_(*r.best_bound)) : py::object(py::none());
          d["genus_in_scope"] = r.genus_in_scope;
          return d;
        },
        py::arg("genus"), py::arg("euler"));

  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::ostringstream out;
          std::ostringstream err;
          int code = cli::run(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run a CLI command line; returns (exit_code, stdout, stderr).");
}
