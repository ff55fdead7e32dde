#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lmg/error.hpp"
#include "lmg/group.hpp"
#include "lmg/homomorphisms.hpp"

namespace py = pybind11;
using namespace lmg;

namespace {

  StandardForm parse(std::string const& word, int n) {
    return normalize(parse_group_word(word, n));
  }

}  // namespace

PYBIND11_MODULE(_lmg, m) {
  m.doc() = "Normal forms in the n-adic Lodha-Moore group";

  auto base = py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);
  (void)base;

  py::class_<StandardForm>(m, "Element")
      .def(py::init([](std::string const& word, int n) { return parse(word, n); }),
           py::arg("word"), py::arg("n") = 0,
           "Parse a word such as \"x0 y[10]^-1\" and normalize it. With n = 0 the "
           "word must start with an n=<k> header.")
      .def_property_readonly("arity", &StandardForm::arity)
      .def_property_readonly("ys",
                             [](StandardForm const& g) {
                               std::vector<std::pair<std::string, long long>> out;
                               for (auto const& y : g.ys) {
                                 out.emplace_back(to_string(y.s), y.t);
                               }
                               return out;
                             })
      .def("is_identity", &StandardForm::is_identity)
      .def("inverse", [](StandardForm const& g) { return inverse(g); })
      .def("__mul__", [](StandardForm const& a, StandardForm const& b) { return multiply(a, b); })
      .def("__pow__", [](StandardForm const& a, long long k) { return power(a, k); })
      .def("__eq__", [](StandardForm const& a, StandardForm const& b) { return equals(a, b); })
      .def("__hash__", [](StandardForm const& g) { return py::hash(py::str(to_string(g))); })
      .def("__call__",
           [](StandardForm const& g, std::string const& point) {
             return to_string(evaluate(g, parse_point(point, g.arity())));
           })
      .def("exponent_at",
           [](StandardForm const& g, std::string const& point) {
             return exponent_of_element_at(g, parse_point(point, g.arity()));
           })
      .def("calculation",
           [](StandardForm const& g, std::string const& point) {
             return to_string(calculation_of(g, parse_point(point, g.arity())));
           })
      .def("embed", [](StandardForm const& g, int q) { return embed(g, q); }, py::arg("q"))
      .def("abelianize", [](StandardForm const& g) { return abelianize(g); })
      .def("to_dot", [](StandardForm const& g) { return to_dot(g); })
      .def("__str__", [](StandardForm const& g) { return to_string(g); })
      .def("__repr__", [](StandardForm const& g) {
        return "Element('" + to_string(g) + "', n=" + std::to_string(g.arity()) + ")";
      });

  m.def("normalize", [](std::string const& word, int n) { return to_string(parse(word, n)); },
        py::arg("word"), py::arg("n") = 0);
  m.def("equal",
        [](std::string const& a, std::string const& b, int n) {
          return equals(parse(a, n), parse(b, n));
        },
        py::arg("a"), py::arg("b"), py::arg("n") = 0);
  m.def("evaluate",
        [](std::string const& word, std::string const& point, int n) {
          auto const w = parse_group_word(word, n);
          return to_string(evaluate(w, parse_point(point, w.arity())));
        },
        py::arg("word"), py::arg("point"), py::arg("n") = 0);
  m.def("embed",
        [](std::string const& word, int p, int q) {
          arity_ratio(p, q);
          return to_string(embed(parse(word, p), q));
        },
        py::arg("word"), py::arg("p"), py::arg("q"));
  m.def("abelianize", [](std::string const& word, int n) { return abelianize(parse(word, n)); },
        py::arg("word"), py::arg("n") = 0);
  m.def("is_y_index",
        [](std::string const& s, int n) { return is_y_index(parse_finite_word(s, n)); },
        py::arg("s"), py::arg("n"));
  m.def("standard_generators", [](int n) {
    GroupWord const        gens = standard_generators(n);
    std::vector<StandardForm> out;
    for (auto const& a : gens.letters()) {
      out.push_back(normalize(GroupWord(n, {a})));
    }
    return out;
  });
}
