#include <optional>
#include <string>

#include <json.hpp>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "projectivoid/classical.hpp"
#include "projectivoid/literal.hpp"
#include "projectivoid/matrix.hpp"
#include "projectivoid/matrix_io.hpp"
#include "projectivoid/series.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace projectivoid;

namespace {

py::object fraction(const mpq_class& q) {
  return py::module_::import("fractions").attr("Fraction")(q.get_str());
}

Subring subring(const std::string& name) {
  if (name == "full") return Subring::Full;
  if (name == "nonneg") return Subring::NonNeg;
  if (name == "nonpos") return Subring::NonPos;
  throw py::value_error("ring must be full, nonneg or nonpos");
}

py::object valuation(Valuation v) {
  return v.is_finite() ? py::object(py::int_(v.value())) : py::object(py::none());
}

bool finite_field(const std::string& name) {
  if (name == "fp") return true;
  if (name == "q") return false;
  throw py::value_error("field must be fp or q");
}

Prime json_prime(const std::string& text) { return Prime(nlohmann::json::parse(text)["p"].get<unsigned long>()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact arithmetic in perfectoid Tate algebras and bundle transition matrices";

  static py::exception<Error> error(m, "ProjectivoidError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr ptr) {
    try {
      if (ptr) std::rethrow_exception(ptr);
    } catch (const Error& e) {
      py::object inst = py::reinterpret_borrow<py::object>(error)(e.what());
      inst.attr("code") = e.name();
      PyErr_SetObject(error.ptr(), inst.ptr());
    }
  });

  py::class_<PExp>(m, "Exponent")
      .def(py::init([](const std::string& text, unsigned long p) { return parse_exponent(text, Prime(p)); }),
           "text"_a, "p"_a)
      .def(py::init<long>())
      .def("to_fraction", [](const PExp& e) { return fraction(e.to_rational()); })
      .def_property_readonly("numerator", [](const PExp& e) { return e.num().get_str(); })
      .def_property_readonly("power", &PExp::pow)
      .def("__str__", [](const PExp& e) { return to_string(e); })
      .def("__repr__", [](const PExp& e) { return "Exponent('" + to_string(e) + "')"; })
      .def("__hash__", [](const PExp& e) { return py::hash(py::str(to_string(e))); })
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def(py::self + py::self)
      .def(-py::self);

  py::class_<PSeries>(m, "Series")
      .def(py::init([](const std::string& text, unsigned long p) { return parse_series(text, Prime(p)); }),
           "text"_a, "p"_a)
      .def_property_readonly("prime", [](const PSeries& f) { return f.prime().value(); })
      .def_property_readonly("precision", [](const PSeries& f) { return valuation(f.precision()); })
      .def_property_readonly("is_exact", &PSeries::is_exact)
      .def_property_readonly("terms",
                             [](const PSeries& f) {
                               py::list out;
                               for (const auto& [e, c] : f.terms()) out.append(py::make_tuple(e, fraction(c)));
                               return out;
                             })
      .def("truncated", [](const PSeries& f, long v) { return f.truncated(Valuation(v)); })
      .def("__str__", [](const PSeries& f) { return to_string(f); })
      .def("__repr__", [](const PSeries& f) { return "Series('" + to_string(f) + "')"; })
      .def("__len__", &PSeries::size)
      .def(py::self == py::self)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self);

  m.def("gauss_valuation", [](const PSeries& f) { return valuation(gauss_valuation(f)); });
  m.def("dominant_terms", &dominant_terms);
  m.def(
      "is_unit", [](const PSeries& f, const std::string& ring) { return is_unit(f, subring(ring)); }, "f"_a,
      "ring"_a = "full");
  m.def("monomial_factor", [](const PSeries& f) {
    UnitDecomposition d = monomial_factor(f);
    return py::make_tuple(d.e, d.u);
  });
  m.def("invert", &invert, "f"_a, "prec"_a);
  m.def("degree", &degree);
  m.def("reduce", [](const PSeries& f) { return to_string(reduce_series(f)); });

  py::class_<SMatrix>(m, "Matrix")
      .def(py::init([](const std::string& json, std::optional<unsigned long> p) {
             return parse_matrix(json, p ? std::optional<Prime>(Prime(*p)) : std::nullopt);
           }),
           "json"_a, "p"_a = py::none())
      .def_static("identity", [](unsigned long p, std::size_t m) { return SMatrix::identity(Prime(p), m); })
      .def_property_readonly("rank", &SMatrix::rank)
      .def_property_readonly("prime", [](const SMatrix& a) { return a.prime().value(); })
      .def("__getitem__", [](const SMatrix& a, std::pair<std::size_t, std::size_t> ij) {
        if (ij.first >= a.rank() || ij.second >= a.rank()) throw py::index_error();
        return a(ij.first, ij.second);
      })
      .def("to_json", [](const SMatrix& a) { return to_json(a); })
      .def("__str__", [](const SMatrix& a) { return to_json(a); })
      .def(py::self == py::self)
      .def(py::self * py::self);

  m.def("det", &det);
  m.def("is_transition", &is_transition);
  m.def("bundle_degree", [](const SMatrix& a) { return bundle_degree(a).value; });
  m.def(
      "validate_automorphism",
      [](const SMatrix& g, const std::string& side) { return validate_automorphism(g, subring(side)); }, "g"_a,
      "side"_a);
  m.def("act", &act, "v"_a, "a"_a, "u"_a);
  m.def(
      "random_automorphism",
      [](unsigned long p, std::size_t m, const std::string& side, std::size_t shears, bool diagonal,
         std::uint64_t seed) {
        return random_automorphism(Prime(p), m, subring(side), {shears, diagonal}, seed);
      },
      "p"_a, "m"_a, "side"_a = "nonneg", "shears"_a = 3, "diagonal"_a = true, "seed"_a = 0);
  m.def(
      "degree_one_family", [](unsigned long p, unsigned max_pow) { return degree_one_family(Prime(p), max_pow); },
      "p"_a, "max_pow"_a);

  m.def(
      "enumerate_antidiagonal",
      [](unsigned long p, std::size_t count) { return enumerate_antidiagonal(Prime(p), count); }, "p"_a,
      "count"_a);
  m.def(
      "enumerate_calkin_wilf",
      [](std::size_t count, std::optional<unsigned long> p) -> py::list {
        py::list out;
        if (p) {
          for (const auto& e : enumerate_calkin_wilf(count, Prime(*p))) out.append(e);
        } else {
          for (const auto& q : enumerate_calkin_wilf(count)) out.append(fraction(q));
        }
        return out;
      },
      "count"_a, "p"_a = py::none());

  m.def(
      "split",
      [](const std::string& json, const std::string& field_name) {
        LMatrix a = parse_laurent_matrix(json, finite_field(field_name));
        const Prime p = json_prime(json);
        Splitting s = split(a);
        return py::dict("type"_a = s.type.degrees, "V"_a = to_json(s.certificate.v, p),
                        "U"_a = to_json(s.certificate.u, p), "D"_a = to_json(s.certificate.d, p));
      },
      "json"_a, "field"_a = "fp");
  m.def(
      "verify_split",
      [](const std::string& a, const std::string& v, const std::string& u, const std::string& field_name) {
        const bool fp = finite_field(field_name);
        return splitting_invariance_check(parse_laurent_matrix(a, fp), parse_laurent_matrix(u, fp),
                                          parse_laurent_matrix(v, fp));
      },
      "a"_a, "v"_a, "u"_a, "field"_a = "fp");
}
