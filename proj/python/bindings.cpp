#include "schublines/certificate.hpp"
#include "schublines/certificate_json.hpp"
#include "schublines/errors.hpp"
#include "schublines/inequalities.hpp"
#include "schublines/kostka.hpp"
#include "schublines/problem.hpp"
#include "schublines/spectral.hpp"
#include "schublines/sweep.hpp"
#include "schublines/tableau.hpp"
#include "schublines/verifier.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace schublines;

namespace {

py::int_ to_py(const BigInt& v) {
  return py::int_(py::module_::import("builtins").attr("int")(to_decimal(v)));
}

std::vector<Condition> parts(const SchubertProblem& p) {
  return {p.conditions().begin(), p.conditions().end()};
}

py::dict tableau_dict(const TwoRowTableau& t) {
  py::dict d;
  d["row1"] = t.row1;
  d["row2"] = t.row2;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Kostka numbers and Galois certificates for Schubert problems of lines";

  static py::exception<Error> base(m, "SchublinesError", PyExc_RuntimeError);
  static py::exception<InvalidProblem> invalid(m, "InvalidProblem", PyExc_ValueError);
  static py::exception<CertificateFormatError> format(m, "CertificateFormatError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InvalidProblem& e) {
      invalid(e.what());
    } catch (const CertificateFormatError& e) {
      format(e.what());
    } catch (const DomainError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const Error& e) {
      base(e.what());
    }
  });

  m.def("n_of", [](const std::vector<long long>& a) { return n_of(SchubertProblem(a)); });
  m.def("is_valid", [](const std::vector<long long>& a) { return is_valid(SchubertProblem(a)); });
  m.def("is_reduced", [](const std::vector<long long>& a) { return is_reduced(SchubertProblem(a)); });
  m.def("reduce", [](const std::vector<long long>& a) { return parts(reduce(SchubertProblem(a))); },
        "Reduced problem with the same count, as a weakly decreasing list");

  m.def("kostka", [](const std::vector<long long>& a) { return to_py(kostka(SchubertProblem(a))); },
        py::arg("conditions"), "Number of solutions K(a)");
  m.def("hook_kostka", [](std::uint32_t k, std::uint32_t b) { return to_py(hook_kostka(k, b)); },
        py::arg("num_ones"), py::arg("b"));
  m.def(
      "enumerate_tableaux",
      [](const std::vector<long long>& a, std::size_t cap) {
        py::list out;
        for (const auto& t : enumerate_tableaux(ConditionSequence(a), cap)) out.append(tableau_dict(t));
        return out;
      },
      py::arg("conditions"), py::arg("cap") = kDefaultTableauCap);
  m.def(
      "recursion_split",
      [](const std::vector<long long>& a) {
        const auto s = recursion_split(ConditionSequence(a));
        return py::make_tuple(parts(s.merged), parts(s.decremented));
      },
      "Branches (merged, decremented) of the recursion on the last two entries");

  m.def(
      "verify",
      [](const std::vector<long long>& a) {
        const auto cert = Verifier{}.verify(SchubertProblem(a));
        return py::module_::import("json").attr("loads")(serialize_certificate(*cert, false, -1));
      },
      py::arg("conditions"), "Certificate tree (as nested dicts) that the Galois group is at least alternating");
  m.def(
      "validate_certificate",
      [](const std::string& text) {
        const auto r = validate_certificate(*parse_certificate(text));
        return py::make_tuple(r.ok, r.reason);
      },
      py::arg("json_text"));
  m.def(
      "sweep",
      [](std::uint32_t n_max, unsigned workers) {
        std::vector<SweepReport> reports;
        {
          py::gil_scoped_release release;
          reports = sweep(n_max, workers);
        }
        py::list out;
        for (const auto& r : reports) {
          py::dict d;
          d["n"] = r.n;
          d["problems"] = r.problems_checked;
          d["reduced"] = r.reduced_checked;
          d["certified"] = r.all_certified;
          py::list f;
          for (const auto& p : r.failures) f.append(parts(p));
          d["failures"] = f;
          d["seconds"] = r.elapsed_seconds;
          out.append(d);
        }
        return out;
      },
      py::arg("n_max"), py::arg("workers") = 1);

  m.def("a2_difference", [](std::uint32_t mm) { return to_py(a2_difference(mm)); });
  m.def("a2_row", [](std::uint32_t mm) {
    const auto r = a2_row(mm);
    return py::make_tuple(to_py(r.merged), to_py(r.decremented), to_py(r.difference));
  });
  m.def("equal_case_check", [](std::uint32_t a, std::uint32_t mm) {
    const auto c = equal_case_check(a, mm);
    py::dict d;
    d["applicable"] = c.applicable;
    d["merged"] = to_py(c.merged);
    d["decremented"] = to_py(c.decremented);
    d["holds"] = c.holds;
    return d;
  });

  m.def("lambda_eval", &lambda_eval, py::arg("a"), py::arg("theta"));
  m.def("eigen_residual", &eigen_residual, py::arg("a"), py::arg("theta"), py::arg("size"));
  m.def(
      "kostka_integral",
      [](const std::vector<long long>& a, std::size_t nodes) {
        return kostka_integral(SchubertProblem(a), nodes, false).value;
      },
      py::arg("conditions"), py::arg("nodes") = 0);
  m.def("difference_integral_a2", &difference_integral_a2, py::arg("m"), py::arg("nodes") = 0);
  m.def("a2_bound_integrals", [](std::uint32_t mm) {
    const auto b = a2_bound_integrals(mm);
    py::dict d;
    d["lhs"] = b.lhs;
    d["rhs"] = b.rhs;
    d["holds"] = b.holds;
    return d;
  });
}
