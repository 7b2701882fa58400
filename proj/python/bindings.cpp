#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "permutiple/oracle.hpp"
#include "permutiple/report.hpp"
#include "permutiple/solver.hpp"

namespace py = pybind11;
using namespace permutiple;

namespace {

py::object to_py_int(const BigInt& v) {
  const std::string s = v.str();
  PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::object>(obj);
}

PermutipleWitness checked_seed(const Numeral& num, const std::string& sigma_cycles,
                               const ProblemSpec& spec) {
  Permutation sigma = parse_cycles(sigma_cycles, num.length() - 1);
  VerifyResult result = is_permutiple(num, sigma, spec);
  if (!result.ok())
    throw Error(Errc::InvalidSeed, std::string("seed does not verify: ") + describe(result.rejection));
  return std::move(*result.witness);
}

std::string verify_json(int base, int mult, const std::string& digits, const std::string& sigma) {
  Numeral num = parse_numeral(digits, base);
  ProblemSpec spec{base, mult};
  validate(spec);

  std::vector<PermutipleWitness> witnesses;
  std::string reason = "no valid digit permutation";
  if (!sigma.empty()) {
    VerifyResult result = is_permutiple(num, parse_cycles(sigma, num.length() - 1), spec);
    if (result.ok())
      witnesses.push_back(std::move(*result.witness));
    else
      reason = describe(result.rejection);
  } else {
    witnesses = find_sigma(num, spec);
  }
  return to_json(build_verify_report(num, spec, witnesses, reason)).dump();
}

std::string solve_json(int base, int mult, const std::string& digits, const std::string& sigma,
                       bool allow_leading_zero, bool dedupe_numerals, bool show_empty) {
  Numeral num = parse_numeral(digits, base);
  ProblemSpec spec{base, mult};
  validate(spec);
  PermutipleWitness seed = checked_seed(num, sigma, spec);

  SolverOptions solver_options{allow_leading_zero};
  ReportOptions report_options{show_empty, dedupe_numerals};
  return to_json(build_solve_report(seed, find_all(seed, solver_options), report_options)).dump();
}

std::string brute_json(int base, int mult, const std::string& digits, bool allow_leading_zero) {
  Numeral num = parse_numeral(digits, base);
  ProblemSpec spec{base, mult};
  validate(spec);

  std::vector<PermutipleWitness> seeds = find_sigma(num, spec);
  if (seeds.empty()) throw Error(Errc::InvalidSeed, "seed does not verify: no valid digit permutation");

  SolverOptions options{allow_leading_zero};
  std::vector<BruteHit> hits = brute_force_same_digits(num, spec, options);
  std::vector<ConjugacyClass> classes = find_all(seeds.front(), options);
  return to_json(build_brute_report(seeds.front(), hits, classes)).dump();
}

std::string search_json(int base, int mult, int length) {
  ProblemSpec spec{base, mult};
  validate(spec);
  return to_json(build_search_report(spec, length, search_permutiples(spec, length))).dump();
}

}  // namespace

PYBIND11_MODULE(_permutiple, m) {
  m.doc() = "Permutiple search: digits, carries, and conjugacy classes";

  py::register_exception<Error>(m, "PermutipleError", PyExc_ValueError);

  py::class_<Numeral>(m, "Numeral")
      .def(py::init([](int base, std::vector<int> digits) {
             Numeral num{base, std::move(digits)};
             validate(num);
             return num;
           }),
           py::arg("base"), py::arg("digits"))
      .def_readonly("base", &Numeral::base)
      .def_readonly("digits", &Numeral::digits)
      .def_property_readonly("value", [](const Numeral& n) { return to_py_int(value(n)); })
      .def("__str__", &format_numeral)
      .def("__len__", &Numeral::length)
      .def("__eq__", [](const Numeral& a, const Numeral& b) { return a == b; })
      .def("__repr__", [](const Numeral& n) {
        return "Numeral(base=" + std::to_string(n.base) + ", '" + format_numeral(n) + "')";
      });

  py::class_<Permutation>(m, "Permutation")
      .def_static("identity", &Permutation::identity, py::arg("k"))
      .def_static("cycle_shift", &Permutation::cycle_shift, py::arg("k"))
      .def_static("reversal", &Permutation::reversal, py::arg("k"))
      .def_static("from_images", &Permutation::from_images, py::arg("images"))
      .def_property_readonly("images", &Permutation::images)
      .def("__len__", &Permutation::size)
      .def("__call__", [](const Permutation& p, int j) {
        if (j < 0 || j >= p.size()) throw Error(Errc::OutOfRange, "index out of range");
        return p(j);
      })
      .def("is_identity", &Permutation::is_identity)
      .def("__eq__", [](const Permutation& a, const Permutation& b) { return a == b; })
      .def("__str__", &format_cycles)
      .def("__repr__", [](const Permutation& p) { return "Permutation('" + format_cycles(p) + "')"; });

  m.def("parse_numeral", &parse_numeral, py::arg("text"), py::arg("base"));
  m.def("format_numeral", &format_numeral, py::arg("numeral"));
  m.def("from_value", [](const std::string& n, int base) { return from_value(BigInt(n), base); },
        py::arg("value"), py::arg("base"));
  m.def("from_value", [](long long n, int base) { return from_value(BigInt(n), base); },
        py::arg("value"), py::arg("base"));

  m.def("parse_cycles", &parse_cycles, py::arg("text"), py::arg("k"));
  m.def("format_cycles", &format_cycles, py::arg("permutation"));
  m.def("compose", &compose, py::arg("a"), py::arg("b"));
  m.def("inverse", &inverse, py::arg("p"));
  m.def("conjugate", &conjugate, py::arg("p"), py::arg("t"));
  m.def("power", &power, py::arg("p"), py::arg("e"));
  m.def("act", &act_on_vector<int>, py::arg("p"), py::arg("x"));

  m.def(
      "compute_carries",
      [](const Numeral& num, const Permutation& sigma, int mult) {
        CarryOutcome outcome = compute_carries(num, sigma, ProblemSpec{num.base, mult});
        if (!outcome.ok())
          throw Error(outcome.failure->fault == CarryFault::NotExact ? Errc::InvalidDigit
                                                                     : Errc::OutOfRange,
                      "not a permutiple: carry fails at column " +
                          std::to_string(outcome.failure->column));
        return outcome.carries;
      },
      py::arg("numeral"), py::arg("sigma"), py::arg("mult"),
      "Little-endian carries (c_0,...,c_k); raises when the numeral is not a "
      "permutiple under sigma");

  m.def("verify_json", &verify_json, py::arg("base"), py::arg("mult"), py::arg("digits"),
        py::arg("sigma") = std::string());
  m.def("solve_json", &solve_json, py::arg("base"), py::arg("mult"), py::arg("digits"),
        py::arg("sigma"), py::arg("allow_leading_zero") = false,
        py::arg("dedupe_numerals") = false, py::arg("show_empty") = false);
  m.def("brute_json", &brute_json, py::arg("base"), py::arg("mult"), py::arg("digits"),
        py::arg("allow_leading_zero") = false);
  m.def("search_json", &search_json, py::arg("base"), py::arg("mult"), py::arg("length"));

  m.attr("__version__") = "0.1.0";
}
