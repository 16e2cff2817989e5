import math

import numpy as np
import pytest

import qsym3

TWO_SQRT2 = 2 * math.sqrt(2)


def test_canonical_states():
    ghz = qsym3.ghz_state()
    assert abs(qsym3.fidelity(ghz, qsym3.canonical_d33(1.0, 0.0, math.pi)) - 1) < 1e-12
    w = qsym3.w_state()
    assert abs(qsym3.fidelity(w, qsym3.canonical_d32(math.pi)) - 1) < 1e-12
    assert abs(np.linalg.norm(ghz) - 1) < 1e-12


def test_majorana_and_slocc():
    assert qsym3.slocc_class(qsym3.ghz_state()) == "ThreeDistinct"
    assert qsym3.slocc_class(qsym3.w_state()) == "TwoDistinct"
    roots = qsym3.majorana_roots(qsym3.w_state())
    ones = sum(1 for r in roots if abs(r[1]) > 0.999)
    assert ones == 1

    spinors = [qsym3.spinor_from_angles(0.3, 1.1), qsym3.spinor_from_angles(2.0, 0.4),
               qsym3.spinor_from_angles(4.4, 2.7)]
    state = qsym3.symmetrize(*spinors)
    rebuilt = qsym3.symmetrize(*qsym3.majorana_roots(state))
    assert abs(qsym3.fidelity(state, rebuilt) - 1) < 1e-10


def test_correlations_and_chsh():
    rho = qsym3.reduce_to_pair(qsym3.w_state(), "C")
    decomp = qsym3.hilbert_schmidt_decompose(rho)
    assert np.allclose(np.diag(decomp["T"]), [2 / 3, 2 / 3, -1 / 3], atol=1e-12)
    assert abs(qsym3.chsh_optimum(decomp["T"]) - 4 * math.sqrt(2) / 3) < 1e-12
    t = qsym3.d32_t_eigenvalues(math.pi)
    assert np.allclose(t, [2 / 3, 2 / 3, -1 / 3], atol=1e-14)
    direct = qsym3.chsh_optimize_direct(rho)
    assert abs(direct - 4 * math.sqrt(2) / 3) < 1e-3


def test_conditional_and_q():
    report = qsym3.conditional_chsh(qsym3.w_state(), 0.0, 0.0)
    assert abs(report["p_plus"] - 2 / 3) < 1e-12
    assert abs(report["chsh_c_opt"][0] - TWO_SQRT2) < 1e-9
    assert abs(report["chsh_con_opt"] - 2.552284749830794) < 1e-9

    best = qsym3.optimize_conditional(qsym3.ghz_state(), theta_steps=91, phi_steps=25)
    assert abs(best["report"]["chsh_con_opt"] - TWO_SQRT2) < 1e-6
    assert abs(best["theta"] - math.pi / 2) < 1e-6

    q = qsym3.quantifier_q(qsym3.ghz_state(), theta_steps=91, phi_steps=25)
    assert abs(q - 1) < 1e-6

    closed = qsym3.closed_form_d32(math.pi, 0.0, 0.0, 1)
    assert abs(closed["mu"] - 4) < 1e-13
    assert abs(closed["p"] - 2 / 3) < 1e-13


def test_invariants():
    assert abs(qsym3.three_tangle(qsym3.ghz_state()) - 1) < 1e-12
    assert abs(qsym3.three_tangle(qsym3.w_state())) < 1e-12
    rho = qsym3.reduce_to_pair(qsym3.w_state(), "C")
    assert abs(qsym3.wootters_concurrence(rho) - 2 / 3) < 1e-9
    assert abs(qsym3.concurrence_closed_d32(math.pi) - 2 / 3) < 1e-13
    y, alpha, beta = 0.7, 1.3, 2.1
    state = qsym3.canonical_d33(y, alpha, beta)
    assert abs(qsym3.tangle_closed_d33(y, alpha, beta) - qsym3.three_tangle(state)) < 1e-10


def test_bell322():
    expr = qsym3.parse_expression("(A1 B1 + A2 B2) C1 + (A2 B1 - A1 B2) C2 <= 2")
    assert qsym3.classical_bound(expr) == 2
    assert qsym3.parse_expression(qsym3.render_expression(expr)) == expr

    builtin = qsym3.builtin_class(2)
    value = qsym3.quantum_value(builtin["expression"], builtin["observables"],
                                builtin["state"])
    assert abs(value - 4) < 1e-12

    for k in qsym3.BUILTIN_CLASSES:
        assert qsym3.verify_symmetric_form(k)["pass"]

    with pytest.raises(Exception):
        qsym3.parse_expression("A1 A2")


def test_numpy_inputs():
    state = np.zeros(8, dtype=complex)
    state[0] = 1.0
    assert qsym3.slocc_class(state) == "Separable"
    assert abs(qsym3.quantifier_q(state, theta_steps=19, phi_steps=9)) == 0.0


def test_errors_translate():
    with pytest.raises(qsym3.Qsym3Error):
        qsym3.canonical_d32(0.0)
    with pytest.raises(qsym3.Qsym3Error):
        qsym3.canonical_d33(2.0, 0.0, 1.0)
    with pytest.raises(qsym3.Qsym3Error):
        qsym3.majorana_roots(np.eye(1, 8, 1).ravel().astype(complex))  # |001>
    with pytest.raises(qsym3.Qsym3Error):
        qsym3.parse_expression("A1 +")
