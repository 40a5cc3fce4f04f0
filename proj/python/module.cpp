// Python bindings. Values cross the boundary as decimal strings and JSON
// text so arbitrary-precision integers survive the trip.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "padic/bounds.hpp"
#include "padic/json_io.hpp"
#include "padic/oracle.hpp"

namespace py = pybind11;
using namespace padic;
using nlohmann::json;

namespace {

mpz_class to_mpz(const std::string& s) {
  mpz_class v;
  if (mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0) {
    throw syntax_error("bad integer: " + s, 0);
  }
  return v;
}

PrecisionPolicy policy_by_name(const std::string& name) {
  PrecisionPolicy policy;
  if (name == "resultant") {
    policy.kind = PolicyKind::ExactResultant;
  } else if (name == "adaptive") {
    policy.kind = PolicyKind::AdaptiveDoubling;
  } else if (name == "yu") {
    policy.kind = PolicyKind::YuFormula;
  } else {
    throw error("policy must be resultant, adaptive, or yu");
  }
  return policy;
}

}  // namespace

PYBIND11_MODULE(_padicsolve, m) {
  m.doc() = "exact root counting and solving over Q_p for sparse polynomials";

  py::register_exception<syntax_error>(m, "PolyParseError",
                                       PyExc_ValueError);
  py::register_exception<invalid_prime_error>(m, "InvalidPrimeError",
                                              PyExc_ValueError);
  py::register_exception<unsupported_error>(m, "UnsupportedError",
                                            PyExc_NotImplementedError);
  py::register_exception<precision_not_certified_error>(
      m, "PrecisionNotCertifiedError", PyExc_RuntimeError);
  py::register_exception<budget_error>(m, "BudgetError", PyExc_RuntimeError);

  m.def(
      "solve_json",
      [](const std::string& poly, const std::string& p,
         const std::string& policy) {
        SolveReport rep =
            solve(SparsePoly::parse(poly), to_mpz(p), policy_by_name(policy));
        return report_to_json(rep).dump();
      },
      py::arg("poly"), py::arg("p"), py::arg("policy") = "resultant");

  m.def(
      "count",
      [](const std::string& poly, const std::string& p,
         const std::string& policy) {
        return solve(SparsePoly::parse(poly), to_mpz(p),
                     policy_by_name(policy))
            .root_count;
      },
      py::arg("poly"), py::arg("p"), py::arg("policy") = "resultant");

  m.def(
      "count_binomial",
      [](const std::string& poly, const std::string& p) {
        return count_binomial_roots(SparsePoly::parse(poly), to_mpz(p));
      },
      py::arg("poly"), py::arg("p"));

  m.def(
      "polygon_json",
      [](const std::string& poly, const std::string& p) {
        return polygon_to_json(lower_hull(SparsePoly::parse(poly), to_mpz(p)))
            .dump();
      },
      py::arg("poly"), py::arg("p"));

  m.def(
      "tree_json",
      [](const std::string& poly, const std::string& p, unsigned k) {
        PadicContext ctx(to_mpz(p), k);
        return tree_to_json(build_tree(SparsePoly::parse(poly), ctx)).dump();
      },
      py::arg("poly"), py::arg("p"), py::arg("k"));

  m.def(
      "bound_json",
      [](const std::string& poly, const std::string& p) {
        return bounds_to_json(SparsePoly::parse(poly), to_mpz(p)).dump();
      },
      py::arg("poly"), py::arg("p"));

  m.def(
      "lift",
      [](const std::string& poly, const std::string& p,
         const std::string& seed, unsigned target_k) {
        mpz_class z = lift_to_precision(SparsePoly::parse(poly),
                                        to_mpz(seed), target_k, to_mpz(p));
        return z.get_str();
      },
      py::arg("poly"), py::arg("p"), py::arg("seed"), py::arg("target_k"));

  m.def(
      "oracle_count",
      [](const std::string& poly, const std::string& p,
         unsigned long budget) {
        return count_qp_roots_oracle(SparsePoly::parse(poly), to_mpz(p),
                                     budget);
      },
      py::arg("poly"), py::arg("p"), py::arg("budget") = 10000000UL);

  m.def(
      "yu_valuation_bound",
      [](unsigned n, const std::string& p, const std::vector<double>& logA,
         double logB) { return yu_valuation_bound(n, to_mpz(p), logA, logB); },
      py::arg("n"), py::arg("p"), py::arg("logA"), py::arg("logB"));

  m.def(
      "tetra_separation_json",
      [](const std::string& p, long h, long d) {
        TetranomialInstance inst = make_instance(to_mpz(p), h, d);
        SeparationResult sep = measure_separation(
            inst, static_cast<unsigned>(inst.expected_gap) + 8);
        return separation_to_json(inst, sep).dump();
      },
      py::arg("p"), py::arg("h"), py::arg("d"));
}
