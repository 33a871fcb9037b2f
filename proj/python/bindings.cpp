#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "liexp/algebra_io.hpp"
#include "liexp/catalog.hpp"
#include "liexp/contraction.hpp"
#include "liexp/corpus.hpp"
#include "liexp/expansion.hpp"
#include "liexp/expression.hpp"
#include "liexp/report.hpp"

namespace py = pybind11;
using namespace liexp;

namespace {

// pybind11 holders cannot be shared_ptr<const T>.
using Handle = std::shared_ptr<LieAlgebra>;

Handle share(LieAlgebra a) { return std::make_shared<LieAlgebra>(std::move(a)); }
Handle share(const AlgebraPtr& a) { return std::const_pointer_cast<LieAlgebra>(a); }

Witness with_overrides(Witness w, const std::map<std::string, std::string>& overrides) {
  for (const auto& [k, v] : overrides)
    w.values.insert_or_assign(canonical_parameter(k), Poly(parse_rational(v)));
  return w;
}

std::string expand(const std::string& driver, const std::map<std::string, std::string>& witness,
                   bool formal, bool timing) {
  ClosureReport r;
  if (driver == "poincare") {
    r = run_theorem1(with_overrides(theorem1_witness(), witness));
  } else if (driver == "euclid4") {
    r = run_euclid(with_overrides(euclid_witness(), witness));
  } else if (driver == "newton_hooke") {
    r = formal ? run_theorem2_formal() : run_theorem2(with_overrides(theorem2_witness(), witness));
  } else if (driver == "negative-nh") {
    r = run_negative_nh();
  } else {
    throw Error("unknown driver '" + driver + "'");
  }
  return closure_json(r, {timing, false});
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Lie algebra and enveloping-algebra arithmetic";

  // Translators run newest first, so subclasses are registered after Error.
  auto& error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<JacobiError>(m, "JacobiError", error.ptr());

  py::class_<UEAElement>(m, "Element")
      .def("__str__", &UEAElement::str)
      .def("__repr__", [](const UEAElement& x) { return "<Element " + x.str() + ">"; })
      .def("__eq__", [](const UEAElement& a, const UEAElement& b) { return a == b; })
      .def("__add__", [](const UEAElement& a, const UEAElement& b) { return a + b; })
      .def("__sub__", [](const UEAElement& a, const UEAElement& b) { return a - b; })
      .def("__mul__", [](const UEAElement& a, const UEAElement& b) { return product(a, b); })
      .def("__neg__", [](const UEAElement& a) { return -a; })
      .def("bracket", [](const UEAElement& a, const UEAElement& b) { return commutator(a, b); })
      .def("is_zero", &UEAElement::is_zero)
      .def("is_central", [](const UEAElement& a) { return is_central(a).central; })
      .def_property_readonly("degree", &UEAElement::degree)
      .def("__len__", &UEAElement::size);

  py::class_<LieAlgebra, Handle>(m, "Algebra")
      .def_property_readonly("name", &LieAlgebra::name)
      .def_property_readonly("generators", &LieAlgebra::generators)
      .def_property_readonly("parameters",
                             [](const LieAlgebra& a) {
                               return a.context() ? a.context()->names()
                                                  : std::vector<std::string>{};
                             })
      .def_property_readonly("metadata", &LieAlgebra::metadata)
      .def("element",
           [](const Handle& a, const std::string& text) { return parse_element(text, a); })
      .def("named", [](const Handle& a, const std::string& key) { return named_element(a, key); })
      .def("named_keys", [](const LieAlgebra& a) { return named_keys(a); })
      .def("bracket",
           [](const Handle& a, const std::string& x, const std::string& y) {
             return commutator(parse_element(x, a), parse_element(y, a)).str();
           })
      .def("normal_form",
           [](const Handle& a, const std::string& text) { return parse_element(text, a).str(); })
      .def("verify_identity",
           [](const Handle& a, const std::string& lhs, const std::string& rhs) {
             const IdentityResult r = verify_identity(a, lhs, rhs);
             return py::make_tuple(r.ok, r.residual.str());
           })
      .def("jacobi_violations",
           [](const LieAlgebra& a) { return describe(a, jacobi_check(a)); })
      .def("specialize",
           [](const LieAlgebra& a, const std::map<std::string, std::string>& values) {
             Assignment as;
             for (const auto& [k, v] : values)
               as.emplace(canonical_parameter(k), Poly(parse_rational(v)));
             return share(specialize(a, as));
           })
      .def("emit", [](const LieAlgebra& a) { return emit_algebra(a); })
      .def("structure_equals", [](const LieAlgebra& a, const LieAlgebra& b) {
        return !structure_difference(a, b).has_value();
      });

  m.def("catalog_names", &catalog_names);
  m.def("catalog", [](const std::string& name) { return share(catalog(name)); });
  m.def("parse_algebra",
        [](const std::string& text, bool allow_non_lie) {
          return share(parse_algebra(text, {allow_non_lie}));
        },
        py::arg("text"), py::arg("allow_non_lie") = false);
  m.def("load_algebra",
        [](const std::string& path, bool allow_non_lie) {
          return share(parse_algebra_file(path, {allow_non_lie}));
        },
        py::arg("path"), py::arg("allow_non_lie") = false);

  m.def("expand_json", &expand, py::arg("driver"),
        py::arg("witness") = std::map<std::string, std::string>{}, py::arg("formal") = false,
        py::arg("timing") = false,
        "Run an expansion driver and return its JSON report");

  m.def("contract",
        [](const std::string& name, std::optional<std::string> param) {
          std::vector<py::dict> out;
          for (const auto& o : contraction_roundtrips(*catalog(name), param)) {
            py::dict d;
            d["kind"] = o.kind;
            d["description"] = o.description;
            d["equals_galilei"] = o.equal();
            d["difference"] = o.difference.value_or("");
            out.push_back(d);
          }
          return out;
        },
        py::arg("name"), py::arg("param") = py::none());

  m.def("appendix_identities", [] {
    std::vector<py::tuple> out;
    for (const auto& o : check_identities(catalog("galilei"), appendix_identities()))
      out.push_back(py::make_tuple(o.identity.group + " " + o.identity.id, o.ok, o.residual));
    return out;
  });
}
