#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "f2lie/paperchecks.hpp"

namespace py = pybind11;
using namespace f2lie;

namespace {

py::dict report_to_dict(const VerificationReport &r) {
  py::dict params;
  for (const auto &[k, v] : r.params)
    params[py::str(k)] = v;
  py::dict detail;
  if (!r.pass) {
    detail["first_discrepancy"] = r.first_discrepancy;
    detail["lhs"] = r.lhs_value;
    detail["rhs"] = r.rhs_value;
  }
  if (!r.note.empty())
    detail["note"] = r.note;
  py::dict d;
  d["check"] = r.check;
  d["params"] = params;
  d["status"] = r.pass ? "pass" : "fail";
  d["detail"] = detail;
  return d;
}

py::list reports_to_list(const std::vector<VerificationReport> &reports) {
  py::list out;
  for (const auto &r : reports)
    out.append(report_to_dict(r));
  return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Euler-Poincare series, free graded Lie oracles and "
            "Bockstein module decompositions";

  auto base = py::register_exception<Error>(m, "F2LieError");
  py::register_exception<CapTooLarge>(m, "CapTooLargeError", base);

  m.def(
      "chi_w",
      [](int n, std::uint32_t p, int cap) {
        return chi_W(GeneratorSet::paper(n, p), cap).terms();
      },
      py::arg("n"), py::arg("p"), py::arg("cap") = 60);
  m.def(
      "chi_tensor",
      [](int n, std::uint32_t p, int cap) {
        return chi_tensor(GeneratorSet::paper(n, p), cap).terms();
      },
      py::arg("n"), py::arg("p"), py::arg("cap") = 60);
  m.def(
      "chi_symmetric",
      [](int n, std::uint32_t p, int cap) {
        return chi_symmetric(GeneratorSet::paper(n, p), cap).terms();
      },
      py::arg("n"), py::arg("p"), py::arg("cap") = 60);
  m.def(
      "closed_form_eupo",
      [](int n, std::uint32_t p, int cap) {
        return closed_form_euPO(n, p, cap).terms();
      },
      py::arg("n"), py::arg("p"), py::arg("cap") = 60);
  m.def(
      "hilbert_omega2",
      [](int n, std::uint32_t p, int cap) {
        return hilbert_omega2(n, p, cap).terms();
      },
      py::arg("n"), py::arg("p"), py::arg("cap") = 60);
  m.def(
      "hilbert_f2k",
      [](int n, std::uint32_t p, int k, int cap) {
        return hilbert_F2k(n, p, k, cap).terms();
      },
      py::arg("n"), py::arg("p"), py::arg("k"), py::arg("cap") = 60);
  m.def(
      "hilbert_omegaj",
      [](int n, std::uint32_t p, int k, int cap) {
        return hilbert_omegaJ(n, p, k, cap).terms();
      },
      py::arg("n"), py::arg("p"), py::arg("k"), py::arg("cap") = 60);

  m.def(
      "free_lie_dims",
      [](int n, std::uint32_t p, int cap) {
        return free_lie_dims_oracle(GeneratorSet::paper(n, p), cap).dims;
      },
      py::arg("n"), py::arg("p"), py::arg("cap") = 12);
  m.def(
      "commutator_dims",
      [](int n, std::uint32_t p, int cap) {
        return commutator_dims_oracle(GeneratorSet::paper(n, p), cap).dims;
      },
      py::arg("n"), py::arg("p"), py::arg("cap") = 12);

  m.def(
      "verify_eupo",
      [](int n, std::uint32_t p, int cap) {
        return report_to_dict(verify_euPO(n, p, cap));
      },
      py::arg("n"), py::arg("p"), py::arg("cap") = 60);
  m.def(
      "basis_census",
      [](int n, std::uint32_t p, int cap) {
        return report_to_dict(basis_census(n, p, cap));
      },
      py::arg("n"), py::arg("p"), py::arg("cap") = 60);
  m.def(
      "verify_homosl",
      [](int n, std::uint32_t p, int cap, int oracle_cap) {
        return report_to_dict(verify_homOSL(n, p, cap, oracle_cap));
      },
      py::arg("n"), py::arg("p"), py::arg("cap") = 60,
      py::arg("oracle_cap") = 12);
  m.def(
      "verify_filtration",
      [](int n, std::uint32_t p, int cap) {
        return report_to_dict(verify_filtration(n, p, cap));
      },
      py::arg("n"), py::arg("p"), py::arg("cap") = 60);
  m.def(
      "verify_sll",
      [](int n, std::uint32_t p) { return report_to_dict(verify_sll(n, p)); },
      py::arg("n"), py::arg("p"));
  m.def(
      "verify_smash_kl",
      [](int n, std::uint32_t p) {
        return report_to_dict(verify_smashKL(n, p));
      },
      py::arg("n"), py::arg("p"));
  m.def(
      "verify_sigma2l",
      [](int n, std::uint32_t p) {
        return report_to_dict(verify_sigma2L(n, p));
      },
      py::arg("n"), py::arg("p"));
  m.def(
      "verify_sigma_f2",
      [](int n, std::uint32_t p, int cap) {
        return report_to_dict(verify_sigmaF2(n, p, cap));
      },
      py::arg("n"), py::arg("p"), py::arg("cap") = 60);
  m.def(
      "jacobi_check",
      [](int n, std::uint32_t p) {
        auto rep = jacobi_check(GeneratorSet::paper(n, p));
        rep.params = {{"n", n}, {"p", p}};
        return report_to_dict(rep);
      },
      py::arg("n"), py::arg("p"));
  m.def(
      "run_all",
      [](int n, std::uint32_t p, int cap, int oracle_cap) {
        return reports_to_list(run_all(n, p, cap, oracle_cap));
      },
      py::arg("n"), py::arg("p"), py::arg("cap") = 60,
      py::arg("oracle_cap") = 12);
  m.def("default_grid", [] {
    py::list out;
    for (const auto &g : default_grid())
      out.append(py::make_tuple(g.n, g.p));
    return out;
  });
  m.def("not_verifiable", &not_verifiable);
}
