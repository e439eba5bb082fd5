#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "commands.hpp"
#include "gtsh/aff2.hpp"
#include "gtsh/dihedral.hpp"
#include "gtsh/lochak_schneps.hpp"
#include "gtsh/poset.hpp"
#include "gtsh/shadow.hpp"
#include "gtsh/structure.hpp"

namespace py = pybind11;
using namespace gtsh;

PYBIND11_MODULE(_core, m) {
  m.doc() = "GT-shadows for the dihedral poset";

  py::register_exception<NotMemberError>(m, "NotMemberError", PyExc_ValueError);

  py::class_<Word>(m, "Word")
      .def(py::init<>())
      .def_static("parse", &Word::parse)
      .def_static("x", &Word::x, py::arg("e") = 1)
      .def_static("y", &Word::y, py::arg("e") = 1)
      .def_static("z", &Word::z, py::arg("e") = 1)
      .def("__str__", &Word::to_string)
      .def("__repr__", [](const Word& w) { return "Word('" + w.to_string() + "')"; })
      .def("__mul__", [](const Word& a, const Word& b) { return a * b; })
      .def("__eq__", [](const Word& a, const Word& b) { return a == b; })
      .def("__len__", [](const Word& w) { return w.length(); })
      .def("inverse", [](const Word& w) { return invert(w); })
      .def("theta", [](const Word& w) { return apply_theta(w); })
      .def("tau", [](const Word& w) { return apply_tau(w); })
      .def("abelianize", [](const Word& w) { return abelianize(w); });

  m.def("endo_E", &endo_E, py::arg("m"), py::arg("f"), py::arg("w"));
  m.def("psi_eval", [](Int n, const Word& w) { return psi_eval(n, w).to_string(); }, py::arg("n"), py::arg("w"));
  m.def("gn_order", &gn_order);

  py::class_<Shadow>(m, "Shadow")
      .def(py::init(&Shadow::make), py::arg("n"), py::arg("m"), py::arg("k"))
      .def_static("identity", &Shadow::identity)
      .def_readonly("n", &Shadow::n)
      .def_readonly("m", &Shadow::m)
      .def_readonly("k", &Shadow::k)
      .def_property_readonly("u", &Shadow::u)
      .def_property_readonly("word", &Shadow::representative_word)
      .def("__mul__", [](const Shadow& a, const Shadow& b) { return compose(a, b); })
      .def("__invert__", [](const Shadow& s) { return inverse(s); })
      .def("__eq__", [](const Shadow& a, const Shadow& b) { return a == b; })
      .def("__lt__", [](const Shadow& a, const Shadow& b) { return a < b; })
      .def("__hash__", [](const Shadow& s) { return py::hash(py::make_tuple(s.n, s.m, s.k)); })
      .def("__repr__", [](const Shadow& s) {
        return "Shadow(n=" + std::to_string(s.n) + ", m=" + std::to_string(s.m) + ", k=" + std::to_string(s.k) + ")";
      });

  m.def("kappa", &kappa);
  m.def("enumerate_closed", &enumerate_closed, py::arg("n"));
  m.def("enumerate_brute", &enumerate_brute, py::arg("n"), py::arg("bound") = kDefaultBruteBound);
  m.def("compose", &compose);
  m.def("compose_closed", &compose_closed);
  m.def("inverse", [](const Shadow& s) { return inverse(s); });
  m.def("is_isolated_witness", &is_isolated_witness);
  m.def("chi_2n", &chi_2n);
  m.def("chi_vir_n", &chi_vir_n);

  m.def("canonicalize", [](Int n) { return canonicalize(n); });
  m.def("poset_leq", &poset_leq, py::arg("q"), py::arg("n"));
  m.def("reduce_shadow", &reduce_shadow, py::arg("s"), py::arg("n"));
  m.def("fiber_report", [](Int q, Int n) {
    std::vector<std::pair<Shadow, std::size_t>> out;
    for (const auto& [t, size] : fiber_report(q, n)) out.emplace_back(t, size);
    return out;
  }, py::arg("q"), py::arg("n"));

  m.def("rho", [](const Shadow& s) {
    const AffCoord a = rho(s);
    return py::make_tuple(a.k, a.u);
  });
  m.def("structure_of", [](Int n) {
    const auto d = structure_of(n);
    py::dict out;
    out["n"] = d.n;
    out["n0"] = d.n0;
    out["alpha"] = d.alpha;
    out["factors"] = d.factors;
    out["order"] = d.order;
    return out;
  });
  m.def("index_pb3", &index_pb3);
  m.def("arith_lower_bound", &arith_lower_bound);

  m.def("ls_witness", [](const Shadow& s) {
    const auto w = ls_witness(s);
    return py::make_tuple(w.g, w.h, std::string(ls_case_name(w.which)));
  });
  m.def("ls_verify", &ls_verify, py::arg("s"), py::arg("g"), py::arg("h"));

  m.def("generator_closure", [](Int alpha, Int bound) {
    std::vector<std::pair<Int, Int>> out;
    for (const auto& a : generator_closure(alpha, bound)) out.emplace_back(a.k, a.u);
    return out;
  }, py::arg("alpha"), py::arg("bound") = kDefaultClosureBound);
  m.def("unit_decompose", [](Int u, Int alpha) {
    const auto d = unit_decompose(u, alpha);
    return py::make_tuple(d.a, d.b);
  });

  m.def("run", [](const std::string& command, py::kwargs kw) {
    cli::CommandConfig c;
    c.command = command;
    for (const auto& [key, value] : kw) {
      const auto k = key.cast<std::string>();
      if (k == "n") c.n = value.cast<Int>();
      else if (k == "q") c.q = value.cast<Int>();
      else if (k == "alpha") c.alpha = value.cast<Int>();
      else if (k == "a") c.a = value.cast<std::string>();
      else if (k == "b") c.b = value.cast<std::string>();
      else if (k == "m") c.m = value.cast<Int>();
      else if (k == "k") c.k = value.cast<Int>();
      else if (k == "format") c.format = value.cast<std::string>();
      else if (k == "bound") c.bound = value.cast<Int>();
      else if (k == "check") c.check = value.cast<bool>();
      else throw py::type_error("run: unexpected keyword `" + k + "`");
    }
    const auto r = cli::run(c);
    return py::make_tuple(r.exit_code, r.output, r.error);
  }, py::arg("command"));
}
