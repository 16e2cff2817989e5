// Python bindings for the qsym3 core: states and Majorana decomposition,
// correlation/CHSH machinery, conditional-CHSH analysis, entanglement
// invariants and the (3,2,2) Bell-expression toolkit.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qsym3/bell322.hpp"
#include "qsym3/conditional.hpp"
#include "qsym3/correlations.hpp"
#include "qsym3/invariants.hpp"
#include "qsym3/state.hpp"

namespace py = pybind11;
using namespace qsym3;

namespace {

using SpinorAmp = Eigen::Vector2cd;

Spinor spinor_from(const SpinorAmp& v) { return Spinor::normalized(v[0], v[1]); }

SpinorAmp spinor_to(const Spinor& s) { return SpinorAmp(s.a0(), s.a1()); }

PureState3 state_from(const Vec8c& amp) { return PureState3(amp); }

Party party_from(const std::string& name) {
  if (name == "A" || name == "a") return Party::A;
  if (name == "B" || name == "b") return Party::B;
  if (name == "C" || name == "c") return Party::C;
  throw DomainError("party must be A, B or C");
}

py::dict report_to_dict(const ConditionalReport& r) {
  py::dict d;
  d["p_plus"] = r.p_plus;
  d["p_minus"] = r.p_minus;
  d["T_plus"] = r.T_plus;
  d["T_minus"] = r.T_minus;
  d["eig_plus"] = r.eig_plus;
  d["eig_minus"] = r.eig_minus;
  d["chsh_c_opt"] = r.chsh_c_opt;
  d["chsh_con_opt"] = r.chsh_con_opt;
  return d;
}

std::array<PartyObservables, 3> observables_from(
    const std::vector<std::pair<Mat2c, Mat2c>>& obs) {
  if (obs.size() != 3) throw DomainError("expected observables for exactly 3 parties");
  return {PartyObservables{obs[0].first, obs[0].second},
          PartyObservables{obs[1].first, obs[1].second},
          PartyObservables{obs[2].first, obs[2].second}};
}

}  // namespace

PYBIND11_MODULE(_qsym3, m) {
  m.doc() = "Nonlocality analysis of pure symmetric three-qubit states";

  py::register_exception<Error>(m, "Qsym3Error");

  // states and Majorana structure
  m.def("spinor_from_angles",
        [](double alpha, double beta) {
          return spinor_to(Spinor::from_angles(alpha, beta));
        },
        py::arg("alpha"), py::arg("beta"),
        "cos(beta/2)|0> + exp(i alpha) sin(beta/2)|1> as a length-2 array");

  m.def("symmetrize",
        [](const SpinorAmp& s1, const SpinorAmp& s2, const SpinorAmp& s3) {
          return symmetrize({spinor_from(s1), spinor_from(s2), spinor_from(s3)})
              .amplitudes();
        },
        py::arg("s1"), py::arg("s2"), py::arg("s3"),
        "Normalized symmetric tensor sum of three spinors (index 4a + 2b + c)");

  m.def("canonical_d32",
        [](double beta) { return canonical_d32(beta).amplitudes(); }, py::arg("beta"));
  m.def("canonical_d33",
        [](double y, double alpha, double beta) {
          return canonical_d33(y, alpha, beta).amplitudes();
        },
        py::arg("y"), py::arg("alpha"), py::arg("beta"));
  m.def("ghz_state", []() { return ghz_state().amplitudes(); });
  m.def("w_state", []() { return w_state().amplitudes(); });

  m.def("majorana_roots",
        [](const Vec8c& amp, double tol) {
          std::vector<SpinorAmp> out;
          for (const Spinor& s : majorana_roots(state_from(amp), tol))
            out.push_back(spinor_to(s.canonical_phase()));
          return out;
        },
        py::arg("state"), py::arg("tol") = 1e-8);

  m.def("slocc_class",
        [](const Vec8c& amp, double tol) {
          return std::string(to_string(slocc_class(state_from(amp), tol)));
        },
        py::arg("state"), py::arg("tol") = 1e-6);

  m.def("is_permutation_symmetric",
        [](const Vec8c& amp, double tol) {
          const SymmetryCheck c = is_permutation_symmetric(state_from(amp), tol);
          return std::make_pair(c.symmetric, c.residual);
        },
        py::arg("state"), py::arg("tol") = 1e-10);

  m.def("apply_local_unitary",
        [](const Vec8c& amp, const Mat2c& ua, const Mat2c& ub, const Mat2c& uc) {
          return apply_local_unitary(state_from(amp), {ua, ub, uc}).amplitudes();
        },
        py::arg("state"), py::arg("u_a"), py::arg("u_b"), py::arg("u_c"));

  m.def("permute_qubits",
        [](const Vec8c& amp, const std::array<int, 3>& perm) {
          return permute_qubits(state_from(amp), perm).amplitudes();
        },
        py::arg("state"), py::arg("perm"));

  m.def("fidelity",
        [](const Vec8c& a, const Vec8c& b) {
          return state_from(a).fidelity(state_from(b));
        },
        py::arg("a"), py::arg("b"));

  // correlations
  m.def("reduce_to_pair",
        [](const Vec8c& amp, const std::string& traced) {
          return reduce_to_pair(state_from(amp), party_from(traced)).matrix();
        },
        py::arg("state"), py::arg("traced") = "C");

  m.def("hilbert_schmidt_decompose",
        [](const Mat4c& rho) {
          const auto d = hilbert_schmidt_decompose(TwoQubitDensity(rho));
          py::dict out;
          out["s"] = d.s;
          out["s_second"] = d.s_second;
          out["T"] = d.T;
          out["asymmetric_marginals"] = d.asymmetric_marginals;
          return out;
        },
        py::arg("rho"));

  m.def("chsh_optimum", &chsh_optimum, py::arg("T"),
        "2 sqrt(t1^2 + t2^2) from the two largest singular values of T");
  m.def("d32_t_eigenvalues", &d32_t_eigenvalues, py::arg("beta"));
  m.def("chsh_optimize_direct",
        [](const Mat4c& rho, int theta_steps, int phi_steps, int refine_rounds) {
          return chsh_optimize_direct(TwoQubitDensity(rho),
                                      DirectGrid{theta_steps, phi_steps, refine_rounds});
        },
        py::arg("rho"), py::arg("theta_steps") = 24, py::arg("phi_steps") = 48,
        py::arg("refine_rounds") = 3);

  // conditional analysis
  m.def("projector",
        [](int c, double theta, double phi) {
          return projector(c, CharlieSetting{theta, phi});
        },
        py::arg("c"), py::arg("theta"), py::arg("phi"));

  m.def("condition_on_charlie",
        [](const Vec8c& amp, int c, double theta, double phi) {
          const auto r = condition_on_charlie(state_from(amp), c, {theta, phi});
          return std::make_pair(r.p, r.rho_ab.matrix());
        },
        py::arg("state"), py::arg("c"), py::arg("theta"), py::arg("phi"));

  m.def("conditional_chsh",
        [](const Vec8c& amp, double theta, double phi) {
          return report_to_dict(conditional_chsh(state_from(amp), {theta, phi}));
        },
        py::arg("state"), py::arg("theta"), py::arg("phi"));

  m.def("closed_form_d32",
        [](double beta, double theta, double phi, int c) {
          const auto r = closed_form_d32(beta, theta, phi, c);
          py::dict out;
          out["mu"] = r.mu;
          out["p"] = r.p;
          out["t"] = r.t;
          return out;
        },
        py::arg("beta"), py::arg("theta"), py::arg("phi"), py::arg("c"));

  m.def("closed_form_d33",
        [](double beta, double theta, double phi, int c) {
          const auto r = closed_form_d33(beta, theta, phi, c);
          py::dict out;
          out["nu"] = r.nu;
          out["p"] = r.p;
          out["t"] = r.t;
          return out;
        },
        py::arg("beta"), py::arg("theta"), py::arg("phi"), py::arg("c"));

  m.def("optimize_conditional",
        [](const Vec8c& amp, int theta_steps, int phi_steps, int refine_rounds) {
          const auto best = optimize_conditional(
              state_from(amp), ConditionalGrid{theta_steps, phi_steps, refine_rounds});
          py::dict out;
          out["theta"] = best.setting.theta;
          out["phi"] = best.setting.phi;
          out["report"] = report_to_dict(best.report);
          return out;
        },
        py::arg("state"), py::arg("theta_steps") = 181, py::arg("phi_steps") = 91,
        py::arg("refine_rounds") = 3);

  m.def("quantifier_q",
        [](const Vec8c& amp, int theta_steps, int phi_steps, int refine_rounds) {
          return quantifier_q(state_from(amp),
                              ConditionalGrid{theta_steps, phi_steps, refine_rounds});
        },
        py::arg("state"), py::arg("theta_steps") = 181, py::arg("phi_steps") = 91,
        py::arg("refine_rounds") = 3);

  // invariants
  m.def("tangle_closed_d33", &tangle_closed_d33, py::arg("y"), py::arg("alpha"),
        py::arg("beta"));
  m.def("concurrence_closed_d33", &concurrence_closed_d33, py::arg("y"), py::arg("alpha"),
        py::arg("beta"));
  m.def("concurrence_closed_d32", &concurrence_closed_d32, py::arg("beta"));
  m.def("wootters_concurrence",
        [](const Mat4c& rho) { return wootters_concurrence(TwoQubitDensity(rho)); },
        py::arg("rho"));
  m.def("three_tangle",
        [](const Vec8c& amp) { return three_tangle(state_from(amp)); }, py::arg("state"));

  // (3,2,2) Bell expressions
  py::class_<BellExpression322>(m, "BellExpression322")
      .def("coefficient", &BellExpression322::coefficient, py::arg("a"), py::arg("b"),
           py::arg("c"))
      .def_property_readonly("tensor",
                             [](const BellExpression322& e) { return e.tensor(); })
      .def_property_readonly("stated_bound",
                             [](const BellExpression322& e) { return e.stated_bound(); })
      .def("__eq__", &BellExpression322::operator==)
      .def("__repr__", [](const BellExpression322& e) {
        return "<BellExpression322 '" + render_expression(e) + "'>";
      });

  m.def("parse_expression",
        [](const std::string& text) { return parse_expression(text); }, py::arg("text"));
  m.def("render_expression", &render_expression, py::arg("expression"));
  m.def("classical_bound", &classical_bound, py::arg("expression"),
        "Maximum over the 64 deterministic local strategies");

  m.def("quantum_value",
        [](const BellExpression322& expr,
           const std::vector<std::pair<Mat2c, Mat2c>>& observables, const Vec8c& amp) {
          return quantum_value(expr, observables_from(observables),
                               PureState3::normalized(amp));
        },
        py::arg("expression"), py::arg("observables"), py::arg("state"));

  m.def("builtin_class",
        [](int k) {
          const BuiltinClass b = builtin_class(k);
          py::dict out;
          out["k"] = b.k;
          out["expression"] = b.expression;
          out["observables"] = std::vector<std::pair<Mat2c, Mat2c>>{
              {b.observables[0].setting1, b.observables[0].setting2},
              {b.observables[1].setting1, b.observables[1].setting2},
              {b.observables[2].setting1, b.observables[2].setting2}};
          out["state"] = b.state.amplitudes();
          out["expected_max"] = b.expected_max;
          return out;
        },
        py::arg("k"));

  m.def("verify_symmetric_form",
        [](int k) {
          const ClassVerification v = verify_symmetric_form(k);
          py::dict out;
          out["class"] = v.k;
          out["classical_bound"] = v.classical_bound;
          out["stated_bound"] = v.stated_bound;
          out["quantum_value"] = v.quantum_value;
          out["expected_max"] = v.expected_max;
          out["fidelity"] = v.fidelity;
          out["symmetry_residual"] = v.symmetry_residual;
          out["spinor_residual"] = v.spinor_residual;
          out["pass"] = v.pass;
          out["notes"] = v.notes;
          if (v.spinor_residual_printed)
            out["spinor_residual_printed"] = *v.spinor_residual_printed;
          if (v.printed_form_fidelity)
            out["printed_form_fidelity"] = *v.printed_form_fidelity;
          if (v.alternate_quantum_values)
            out["alternate_quantum_values"] = *v.alternate_quantum_values;
          return out;
        },
        py::arg("k"));

  m.attr("BUILTIN_CLASSES") = std::vector<int>(kBuiltinClasses.begin(),
                                               kBuiltinClasses.end());
}
