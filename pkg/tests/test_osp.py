import pytest
import sympy as sp

import superbialgebra.osp as OS
from superbialgebra import exc
from superbialgebra.grassmann import GrassmannMatrix, superinverse
from superbialgebra.utils import is_zero

HALF = sp.Rational(1, 2)


def test_representation_closes():
    assert OS.representation_check() == []


def test_representation_rejects_wrong_matrices():
    reps = OS.gl11_representation()
    reps[2] = 2 * reps[2]
    assert OS.representation_check(reps) == [(3, 4)]


def test_triangular_r():
    r = OS.triangular_r()
    assert r[0, 1] == 1
    assert r[1, 0] == -1
    assert r.is_skew()


def test_first_invariant_vanishes():
    # Str X1 = Str X2 = 0 in the representation
    invariants = OS.motion_invariants(1)
    assert list(invariants) == [1]
    assert invariants[1].is_zero()


def test_kmax_must_be_positive():
    with pytest.raises(exc.ParameterOutOfRange):
        OS.motion_invariants(0)


def test_real_chart():
    z, zb, theta, _ = [OS.DISC.coordinate(c) for c in
                       ('z', 'zb', 'theta', 'thetas')]
    X, Y = OS.REAL.coordinate('X'), OS.REAL.coordinate('Y')
    psip, psim = OS.REAL.coordinate('psip'), OS.REAL.coordinate('psim')
    assert OS.to_real_chart(z) == X + sp.I * Y
    assert OS.to_real_chart(z * zb) == X * X + Y * Y
    assert OS.to_real_chart(theta) == psip + sp.I * psim
    assert OS.CHARTS['real'] is OS.REAL


def test_impose_casimir():
    assert OS.impose_casimir(OS.ALPHA0 * OS.BETA0) == sp.I * OS.CASIMIR


def test_omega_report():
    report = OS.omega_report()
    assert set(report.ratios.values()) == set([HALF, -HALF])


def test_dynamical_variables_parity():
    S = OS.dynamical_variables()
    assert [s.parity for s in S] == [0, 0, 1, 1]


def test_superinverse_of_the_two_form():
    lower = OS.omega_lower()
    identity = GrassmannMatrix.identity(OS.DISC, OS.PARITIES)
    assert (lower * superinverse(lower)).simplify() == identity
    # the printed inverse is off by the factors in omega_report
    assert (OS.omega_inverse() * lower).body() != sp.eye(4)


def test_pde_system_holds():
    assert OS.verify_pde_system() == []


def test_pde_system_catches_rescaled_variable():
    S = OS.dynamical_variables()
    S[2] = 2 * S[2]
    # only {S3, S4} = S2 is not homogeneous in S3
    assert [failure[:2] for failure in OS.verify_pde_system(S)] == [(3, 4)]


def test_invariants_match_printed():
    assert OS.compare_printed_invariants() == []


def test_second_invariant_in_real_chart():
    invariants = OS.motion_invariants(2)
    real = OS.to_real_chart(OS.impose_casimir(invariants[2]))
    X, Y = OS.REAL.symbol('X'), OS.REAL.symbol('Y')
    body = (1 - X ** 2 - Y ** 2) ** 2
    assert is_zero(real.body() + OS.CASIMIR ** 2 * body / (2 * OS.TAU ** 2))


def test_invariants_in_involution():
    assert OS.involution_check() == []
