// Copyright 2026 The kassign Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "kassign/instance.hpp"
#include "kassign/maxpoly.hpp"
#include "kassign/oracle.hpp"
#include "kassign/report.hpp"

namespace py = pybind11;

namespace kassign {
namespace {

// Finite values come back as int when whole, Fraction otherwise; the
// missing-edge element maps to float('-inf').
py::object to_py(const ExtReal& v) {
  if (v.is_neg_inf())
    return py::float_(-std::numeric_limits<double>::infinity());
  const Rational& r = v.rational();
  if (r.den() == 1) return py::int_(r.num());
  py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(r.num(), r.den());
}

Rational rational_from_py(py::handle h) {
  if (py::isinstance<py::str>(h)) {
    auto parsed = Rational::parse(h.cast<std::string>());
    if (!parsed)
      throw py::value_error("not a rational: " + h.cast<std::string>());
    return *parsed;
  }
  if (py::isinstance<py::int_>(h)) return Rational(h.cast<long long>());
  if (py::hasattr(h, "numerator") && py::hasattr(h, "denominator")) {
    return Rational(h.attr("numerator").cast<long long>(),
                    h.attr("denominator").cast<long long>());
  }
  throw py::type_error(
      "expected int, Fraction, or a rational string like '3/2'");
}

ExtReal extreal_from_py(py::handle h) {
  if (py::isinstance<py::float_>(h)) {
    double d = h.cast<double>();
    if (d == -std::numeric_limits<double>::infinity())
      return ExtReal::neg_inf();
    throw py::type_error(
        "finite weights must be exact: pass int, Fraction, or a string");
  }
  if (py::isinstance<py::str>(h)) {
    auto parsed = ExtReal::parse(h.cast<std::string>());
    if (!parsed) throw py::value_error("not a value: " + h.cast<std::string>());
    return *parsed;
  }
  return ExtReal(rational_from_py(h));
}

WeightMatrix matrix_from_rows(py::sequence rows) {
  std::vector<std::vector<ExtReal>> cells;
  for (py::handle row : rows) {
    std::vector<ExtReal> out;
    for (py::handle v : py::cast<py::sequence>(row))
      out.push_back(extreal_from_py(v));
    cells.push_back(std::move(out));
  }
  return WeightMatrix::from_rows(cells);
}

py::list matrix_rows(const WeightMatrix& w) {
  py::list rows;
  for (int i = 0; i < w.size(); ++i) {
    py::list row;
    for (int j = 0; j < w.size(); ++j) row.append(to_py(w.at(i, j)));
    rows.append(row);
  }
  return rows;
}

std::vector<ExtReal> coeffs_from_py(py::sequence coeffs) {
  std::vector<ExtReal> out;
  for (py::handle v : coeffs) out.push_back(extreal_from_py(v));
  return out;
}

py::list extreal_list(const std::vector<ExtReal>& values) {
  py::list out;
  for (const ExtReal& v : values) out.append(to_py(v));
  return out;
}

py::list root_list(const RootList& roots) {
  py::list out;
  for (const RootEntry& r : roots)
    out.append(py::make_tuple(to_py(r.value), r.multiplicity));
  return out;
}

// Values in the source objective's domain: min instances render negated,
// with the missing-edge element becoming float('inf').
py::object display_to_py(const Transform& tr, const ExtReal& v) {
  if (tr.objective == Objective::kMax) return to_py(v);
  if (v.is_neg_inf())
    return py::float_(std::numeric_limits<double>::infinity());
  return to_py(-v);
}

py::dict report_to_dict(const RunReport& rep, bool with_matchings) {
  const Transform& tr = rep.transform;
  py::dict d;
  d["objective"] = tr.objective == Objective::kMax ? "max" : "min";
  d["rows"] = tr.rows;
  d["cols"] = tr.cols;
  d["n"] = tr.n;
  d["algorithm"] = to_string(rep.algo);

  py::list omegas;
  for (const ExtReal& v : rep.seq.omegas) omegas.append(display_to_py(tr, v));
  d["omegas"] = omegas;

  d["polynomial"] = rep.chi.text();
  d["coefficients"] = extreal_list(rep.chi.descending());

  py::list singulars;
  for (const SingularValue& s : rep.singular_values)
    singulars.append(py::make_tuple(to_py(s.value), s.multiplicity));
  d["singular_values"] = singulars;

  py::list classes;
  for (TermClass c : rep.classes) classes.append(to_string(c));
  d["classes"] = classes;

  if (with_matchings) {
    py::dict matchings;
    for (int k = 1; k <= rep.seq.n; ++k) {
      const auto& m = rep.seq.matchings[static_cast<size_t>(k)];
      if (!m) continue;
      py::list pairs;
      for (const auto& [r, c] : m->pairs())
        pairs.append(py::make_tuple(r + 1, c + 1));
      matchings[py::int_(k)] = pairs;
    }
    d["matchings"] = matchings;
  }

  py::dict timing;
  timing["solve_s"] = rep.solve_seconds;
  timing["fill_s"] = rep.fill_seconds;
  d["timing"] = timing;
  return d;
}

py::dict solve_spec(const InstanceSpec& spec, const std::string& algo,
                    bool matchings) {
  SolveOptions opt;
  opt.algo = parse_algo(algo);
  opt.want_matchings = matchings;
  return report_to_dict(solve_instance(spec, opt), matchings);
}

}  // namespace
}  // namespace kassign

PYBIND11_MODULE(_core, m) {
  using namespace kassign;  // NOLINT(build/namespaces)

  m.doc() =
      "Exact k-cardinality assignment sequences over the max-plus semifield";
  m.attr("__version__") = "0.1.0";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<SizeBoundError>(m, "SizeBoundError", PyExc_ValueError);

  py::class_<WeightMatrix>(m, "Matrix",
                           "Square max-plus weight matrix with exact rational "
                           "entries; float('-inf') marks an absent edge.")
      .def(py::init(&matrix_from_rows), py::arg("rows"),
           "Build from a square list of lists; cells may be int, Fraction, "
           "float('-inf'), or strings like '3/2' and '-inf'.")
      .def_property_readonly("n", &WeightMatrix::size)
      .def("at",
           [](const WeightMatrix& w, int i, int j) { return to_py(w.at(i, j)); },
           py::arg("i"), py::arg("j"), "Entry at 0-based (i, j).")
      .def("set",
           [](WeightMatrix& w, int i, int j, py::handle v) {
             w.at(i, j) = extreal_from_py(v);
           },
           py::arg("i"), py::arg("j"), py::arg("value"))
      .def("rows", &matrix_rows, "All entries as a list of lists.")
      .def("__eq__",
           [](const WeightMatrix& a, const WeightMatrix& b) { return a == b; },
           py::is_operator())
      .def("__repr__", [](const WeightMatrix& w) {
        std::string out = "Matrix([";
        for (int i = 0; i < w.size(); ++i) {
          out += i ? ", [" : "[";
          for (int j = 0; j < w.size(); ++j)
            out += (j ? ", " : "") + w.at(i, j).str();
          out += "]";
        }
        return out + "])";
      });

  py::class_<MaxPolynomial>(m, "Poly",
                            "Maxpolynomial max_k(c_k + k*x) with exact "
                            "coefficients, ascending by power.")
      .def(py::init([](py::sequence coeffs) {
             return MaxPolynomial(coeffs_from_py(coeffs));
           }),
           py::arg("coeffs"), "Coefficients c_0..c_d, ascending by power.")
      .def_static("from_descending",
                  [](py::sequence coeffs) {
                    return MaxPolynomial::from_descending(coeffs_from_py(coeffs));
                  },
                  py::arg("coeffs"), "Coefficients c_d..c_0, leading first.")
      .def_property_readonly("degree", &MaxPolynomial::degree)
      .def("coeffs",
           [](const MaxPolynomial& p) { return extreal_list(p.coeffs()); },
           "Coefficients ascending by power.")
      .def("descending",
           [](const MaxPolynomial& p) { return extreal_list(p.descending()); },
           "Coefficients leading first.")
      .def("eval",
           [](const MaxPolynomial& p, py::handle x) {
             return to_py(p.eval(extreal_from_py(x)));
           },
           py::arg("x"))
      .def("canonicalized", &MaxPolynomial::canonicalized,
           "Coefficientwise-maximal representation of the same function.")
      .def("is_canonical", &MaxPolynomial::is_full_canonical)
      .def("roots", [](const MaxPolynomial& p) { return root_list(p.roots()); },
           "Ascending (value, multiplicity) pairs; multiplicities sum to the "
           "effective degree.")
      .def("classes",
           [](const MaxPolynomial& p) {
             py::list out;
             for (TermClass c : p.term_classes()) out.append(to_string(c));
             return out;
           },
           "Term class per coefficient, ascending by power.")
      .def("text", &MaxPolynomial::text)
      .def("__str__", &MaxPolynomial::text)
      .def("__eq__",
           [](const MaxPolynomial& a, const MaxPolynomial& b) { return a == b; },
           py::is_operator())
      .def("__repr__", [](const MaxPolynomial& p) {
        return "Poly(" + p.text() + ")";
      });

  py::class_<InstanceSpec>(m, "Instance",
                           "A max or min assignment instance as written in a "
                           "file, possibly rectangular.")
      .def_static("parse",
                  [](const std::string& text) { return parse_instance(text); },
                  py::arg("text"))
      .def_static("from_matrix", &spec_from_matrix, py::arg("matrix"),
                  "Square max instance wrapping the given matrix.")
      .def_property_readonly("objective",
                             [](const InstanceSpec& s) {
                               return s.objective == Objective::kMax ? "max"
                                                                    : "min";
                             })
      .def_property_readonly("rows",
                             [](const InstanceSpec& s) { return s.rows; })
      .def_property_readonly("cols",
                             [](const InstanceSpec& s) { return s.cols; })
      .def_property_readonly("n",
                             [](const InstanceSpec& s) {
                               return s.rows > s.cols ? s.rows : s.cols;
                             },
                             "Side of the normalized square matrix.")
      .def("matrix",
           [](const InstanceSpec& s) { return normalize(s).first; },
           "Normalized square max-plus matrix (min instances negated, "
           "padding and infeasible cells set to -inf).")
      .def("serialize",
           [](const InstanceSpec& s, py::sequence comments) {
             std::vector<std::string> lines;
             for (py::handle c : comments)
               lines.push_back(c.cast<std::string>());
             return serialize_instance(s, lines);
           },
           py::arg("comments") = py::tuple())
      .def("solve", &solve_spec, py::arg("algo") = "auto",
           py::arg("matchings") = true,
           "Solve and report in the source objective's domain: min instances "
           "come back negated, with float('inf') marking infeasible "
           "cardinalities.")
      .def("__repr__", [](const InstanceSpec& s) {
        return "Instance(" +
               std::string(s.objective == Objective::kMax ? "max" : "min") +
               " " + std::to_string(s.rows) + "x" + std::to_string(s.cols) +
               ")";
      });

  m.def("solve",
        [](const WeightMatrix& w, const std::string& algo, bool matchings) {
          return solve_spec(spec_from_matrix(w), algo, matchings);
        },
        py::arg("matrix"), py::arg("algo") = "auto", py::arg("matchings") = true,
        "Sequence of best k-cardinality assignment weights for k = 0..n, "
        "with witnesses, the full characteristic maxpolynomial, singular "
        "values, and term classes.  algo is one of 'auto', 'brute', 'ssp', "
        "'gk', 'gk-fill'.");

  m.def("maxperm",
        [](const WeightMatrix& w, int bound) { return to_py(maxperm(w, bound)); },
        py::arg("matrix"), py::arg("bound") = kBruteForceBound,
        "Max-plus permanent by exhaustive enumeration; refuses matrices "
        "larger than bound.");

  m.def("fullchar", &brute_force_fullchar, py::arg("matrix"),
        py::arg("bound") = kBruteForceBound,
        "Full characteristic maxpolynomial by exhaustive enumeration.");

  m.def("generate",
        [](int n, long long lo, long long hi, py::handle density,
           uint64_t seed) {
          return generate_instance(n, lo, hi, rational_from_py(density), seed);
        },
        py::arg("n"), py::arg("lo"), py::arg("hi"), py::arg("density"),
        py::arg("seed"),
        "Reproducible random matrix: each cell is -inf with probability "
        "density, otherwise a uniform integer in [lo, hi] (splitmix64).");

  m.def("parse_instance",
        [](const std::string& text) { return parse_instance(text); },
        py::arg("text"), "Alias for Instance.parse.");
}
