#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ringlab/classify.hpp"
#include "ringlab/cli.hpp"
#include "ringlab/expr.hpp"

namespace py = pybind11;
using namespace ringlab;

namespace {

std::optional<std::pair<Index, std::vector<Index>>> witness(const Ring& r, Index x, int n) {
  const auto d = n_strongly_clean_witness(r, r.element(x), n);
  if (!d) return std::nullopt;
  std::vector<Index> units;
  for (const auto& u : d->units) units.push_back(u.index);
  return std::make_pair(d->idempotent.index, units);
}

py::tuple run(const std::vector<std::string>& argv) {
  std::ostringstream out, err;
  int code = 0;
  {
    py::gil_scoped_release release;
    code = run_command(argv, out, err);
  }
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_ringlab, m) {
  m.doc() = "Finite rings over dense element indices";

  auto base = py::register_exception<Error>(m, "RingError");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ConstructionError>(m, "ConstructionError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<UnsupportedError>(m, "UnsupportedError", base.ptr());

  py::class_<Ring>(m, "Ring")
      .def_property_readonly("size", &Ring::size)
      .def_property_readonly("kind", [](const Ring& r) { return std::string(to_string(r.kind())); })
      .def_property_readonly("commutative", &Ring::commutative)
      .def_property_readonly("expression", &Ring::expression)
      .def_property_readonly("zero", &Ring::zero)
      .def_property_readonly("one", &Ring::one)
      .def("add", [](const Ring& r, Index a, Index b) { return elem_arith(r, ArithOp::add, r.element(a), r.element(b)).index; })
      .def("mul", [](const Ring& r, Index a, Index b) { return elem_arith(r, ArithOp::mul, r.element(a), r.element(b)).index; })
      .def("neg", [](const Ring& r, Index a) { return elem_arith(r, ArithOp::neg, r.element(a)).index; })
      .def("format", [](const Ring& r, Index i) { return r.format(r.element(i).index); })
      .def("inverse", [](const Ring& r, Index u) -> std::optional<Index> {
        const auto v = inverse(r, r.element(u));
        return v ? std::optional<Index>(v->index) : std::nullopt;
      })
      .def("units", [](const Ring& r) { return r.units().to_vector(); })
      .def("idempotents", [](const Ring& r) { return r.idempotents().to_vector(); })
      .def("__len__", &Ring::size)
      .def("__repr__", [](const Ring& r) { return "<Ring " + r.expression() + ">"; });

  m.def("parse_ring", [](const std::string& text) { return parse_ring(text); }, py::arg("expression"));
  m.def("canonical", [](const std::string& text) { return print_ring_expr(parse_ring_expr(text)); },
        py::arg("expression"), "Canonical spelling of a ring expression.");
  m.def("strongly_clean_index",
        [](const Ring& r, Index x, int n_max) { return strongly_clean_index(r, r.element(x), n_max); },
        py::arg("ring"), py::arg("x"), py::arg("n_max") = 4);
  m.def("witness", &witness, py::arg("ring"), py::arg("x"), py::arg("n"),
        "Canonical (idempotent, units) with exactly n units, or None.");
  m.def("u_n_set", [](const Ring& r, int n) { return u_n_set(r, n).to_vector(); }, py::arg("ring"), py::arg("n"));
  m.def("integer_index", &integer_strongly_clean_index, py::arg("k"));
  m.def("run", &run, py::arg("argv"), "Runs the command line; returns (exit_code, stdout, stderr).");
}
