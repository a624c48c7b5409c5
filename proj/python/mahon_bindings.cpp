// Python extension exposing the exact verification engine: ring elements,
// polynomials, colored permutations, statistics, the identity catalog, and
// the verifier. Reports and catalog rows cross the boundary as plain dicts
// (via their JSON form) so Python callers get native types.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mahon/cyclotomic.hpp"
#include "mahon/json_io.hpp"
#include "mahon/selftest.hpp"
#include "mahon/verifier.hpp"

namespace py = pybind11;
using namespace mahon;

namespace {

py::object to_py(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

Stat stat_or_throw(const std::string& name) {
  const std::optional<Stat> s = stat_from_name(name);
  if (!s) throw ParseError("unknown statistic '" + name + "'");
  return *s;
}

std::int64_t py_stat(const std::string& name, const ColoredPerm& pi, const std::string& order) {
  const Stat s = stat_or_throw(name);
  if (s == Stat::Inv || s == Stat::Maj) return stat_value(s, pi, order_from_name(order));
  return stat_value(s, pi);
}

Poly2 py_distribution(const std::string& family_text, int n, const std::string& stat_text,
                      int r, const std::string& order_text) {
  const Family family = family_from_name(family_text);
  if (r == 0) {
    if (family == Family::S) r = 1;
    if (family == Family::B || family == Family::D) r = 2;
  }
  if (r < 1) throw ConstraintError("family g needs an explicit r");
  check_family_r(family, r);
  const Stat s = stat_or_throw(stat_text);
  const LetterOrder order = order_from_name(order_text);
  Poly2 dist(r);
  const CycInt one(r, 1);
  GroupStream stream(family, n, r);
  ColoredPerm pi;
  while (stream.next(pi)) {
    const std::int64_t v = (s == Stat::Inv || s == Stat::Maj) ? stat_value(s, pi, order)
                                                              : stat_value(s, pi);
    dist.add_term(static_cast<int>(v), 0, one);
  }
  return dist;
}

VerifyParams make_params(int n, int r, int a, int b) {
  VerifyParams p;
  p.n = n;
  p.r = r;
  p.a = a;
  p.b = b;
  return p;
}

}  // namespace

PYBIND11_MODULE(_mahon, m) {
  m.doc() = "Exact verification of signed Mahonian identities over the classical "
            "reflection groups and wreath products";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ConstraintError>(m, "ConstraintError", PyExc_ValueError);
  py::register_exception<UnknownIdentityError>(m, "UnknownIdentityError", PyExc_KeyError);
  py::register_exception<RingMismatchError>(m, "RingMismatchError", PyExc_ValueError);
  py::register_exception<mahon::OverflowError>(m, "ArithmeticOverflow", PyExc_OverflowError);

  py::class_<CycInt>(m, "Cyc", "Element of Z[w], w a primitive r-th root of unity")
      .def(py::init<int, std::int64_t>(), py::arg("r"), py::arg("value") = 0)
      .def_static("omega", &CycInt::omega, py::arg("r"), py::arg("k") = 1,
                  "w^k in the ring of order r")
      .def_property_readonly("order", &CycInt::order)
      .def_property_readonly("coeffs", &CycInt::coeffs)
      .def("is_zero", &CycInt::is_zero)
      .def("is_integer", &CycInt::is_integer)
      .def("integer_value", &CycInt::integer_value)
      .def("pow", &CycInt::pow, py::arg("e"))
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def("__str__", &CycInt::to_string)
      .def("__repr__", [](const CycInt& v) {
        return "Cyc(r=" + std::to_string(v.order()) + ", " + v.to_string() + ")";
      });

  py::class_<Poly2>(m, "Poly", "Polynomial in q and t over Z[w], exact arithmetic")
      .def(py::init<int>(), py::arg("r") = 1)
      .def_static("term", &Poly2::term, py::arg("c"), py::arg("q") = 0, py::arg("t") = 0)
      .def_static(
          "q_bracket",
          [](int k, const CycInt& unit, int qpow, int tpow) {
            return Poly2::q_bracket(k, unit, qpow, tpow);
          },
          py::arg("k"), py::arg("unit"), py::arg("qpow") = 1, py::arg("tpow") = 0,
          "[k]_u = 1 + u + ... + u^(k-1) with u = unit * q^qpow * t^tpow")
      .def_property_readonly("r", &Poly2::ring_order)
      .def("coeff", &Poly2::coeff, py::arg("q"), py::arg("t") = 0)
      .def("add_term", &Poly2::add_term, py::arg("q"), py::arg("t"), py::arg("c"))
      .def("is_zero", &Poly2::is_zero)
      .def("eval_one", &Poly2::eval_one, "value at q = t = 1")
      .def("transposed", &Poly2::transposed)
      .def("q_degree", &Poly2::q_degree)
      .def("t_degree", &Poly2::t_degree)
      .def("terms",
           [](const Poly2& p) {
             py::list out;
             for (const auto& [qt, c] : p.terms()) {
               out.append(py::make_tuple(qt.q, qt.t, c));
             }
             return out;
           },
           "list of (q_exp, t_exp, coefficient) in graded order")
      .def("to_dict", [](const Poly2& p) { return to_py(poly_to_json(p)); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def("__str__", &Poly2::to_string)
      .def("__repr__", [](const Poly2& p) { return "Poly(" + p.to_string() + ")"; });

  py::class_<ColoredPerm>(m, "Element",
                          "Colored permutation in window notation; r colors, n letters")
      .def(py::init([](int r, const std::string& window) {
             return ColoredPerm::parse(r, window);
           }),
           py::arg("r"), py::arg("window"))
      .def(py::init<int, std::vector<int>, std::vector<int>>(), py::arg("r"), py::arg("sigma"),
           py::arg("z"))
      .def_static("identity", &ColoredPerm::identity, py::arg("r"), py::arg("n"))
      .def_property_readonly("r", &ColoredPerm::r)
      .def_property_readonly("n", &ColoredPerm::n)
      .def_property_readonly("sigma", &ColoredPerm::sigma)
      .def_property_readonly("z", &ColoredPerm::z)
      .def("abs_perm", &ColoredPerm::abs_perm)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def("__str__", &ColoredPerm::to_string)
      .def("__repr__",
           [](const ColoredPerm& pi) {
             return "Element(r=" + std::to_string(pi.r()) + ", \"" + pi.to_string() + "\")";
           });

  m.def("stat", &py_stat, py::arg("name"), py::arg("element"), py::arg("order") = "natural",
        "Value of a statistic; inv and maj take a letter order "
        "(natural, integer, signblock, valueblock, colorblock)");

  m.def("distribution", &py_distribution, py::arg("family"), py::arg("n"), py::arg("stat"),
        py::arg("r") = 0, py::arg("order") = "natural",
        "Brute-force the distribution of a statistic over S_n, B_n, D_n or G(r,n)");

  m.def(
      "decompose",
      [](const ColoredPerm& pi, const std::string& order) {
        const Decomposed d = decompose(pi, order_from_name(order));
        return py::make_tuple(d.tau, d.rho);
      },
      py::arg("element"), py::arg("order"),
      "Split into (tau, rho) with tau the letters sorted increasingly in the "
      "given order and pi_i = tau[rho_i]");

  m.def(
      "compose",
      [](const ColoredPerm& pi, const ColoredPerm& rho) { return wreath_compose(pi, rho); },
      py::arg("pi"), py::arg("rho"), "Wreath-product composition, rho applied first");

  m.def(
      "identities",
      [](const std::string& filter) {
        py::list out;
        for (const IdentityRecord* rec : list_identities(filter)) {
          nlohmann::json j{
              {"id", rec->id},
              {"family", family_name(rec->family)},
              {"domain", domain_description(*rec)},
              {"weights", weights_description(*rec)},
              {"constraints", constraints_description(*rec)},
              {"source", rec->source},
              {"expected", rec->expected == ExpectedStatus::Match ? "match" : "known-erratum"}};
          if (!rec->note.empty()) j["note"] = rec->note;
          out.append(to_py(j));
        }
        return out;
      },
      py::arg("filter") = "",
      "Catalog rows as dicts; filter by family prefix: S, B, D, G or G5");

  m.def(
      "verify",
      [](const std::string& id, int n, int r, int a, int b) {
        return to_py(report_to_json(verify(id, make_params(n, r, a, b))));
      },
      py::arg("id"), py::arg("n"), py::arg("r") = 0, py::arg("a") = 0, py::arg("b") = 0,
      "Certify one catalog entry at (n, r, a, b); returns the report as a dict");

  m.def(
      "verify_range",
      [](const std::string& filter, int max_n, int max_r) {
        RangeOptions opts;
        opts.filter = filter;
        opts.max_n = max_n;
        opts.max_r = max_r;
        py::list out;
        for (const VerifyReport& rep : verify_range(opts)) {
          out.append(to_py(report_to_json(rep)));
        }
        return out;
      },
      py::arg("filter") = "", py::arg("max_n") = 4, py::arg("max_r") = 4,
      "Certify every matching entry over its parameter grid; list of report dicts");

  m.def(
      "selftest",
      []() {
        py::list out;
        for (const SelfCheck& c : run_selftest()) {
          out.append(py::dict(py::arg("name") = c.name, py::arg("passed") = c.passed,
                              py::arg("detail") = c.detail));
        }
        return out;
      },
      "Run the built-in health checks; list of {name, passed, detail} dicts");

  m.def("omega", &CycInt::omega, py::arg("r"), py::arg("k") = 1,
        "w^k, a primitive r-th root of unity power");

  m.def(
      "q_bracket",
      [](int k, int r) { return Poly2::q_bracket(k, CycInt(r, 1), 1, 0); },
      py::arg("k"), py::arg("r") = 1, "[k]_q = 1 + q + ... + q^(k-1) over Z[w_r]");

  m.attr("__version__") = "1.0.0";
}
