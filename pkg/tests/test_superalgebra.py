import pytest
import sympy as sp

import conftest
import superbialgebra.superalgebra as SA
from superbialgebra import exc

I = sp.I
PARITIES = (0, 0, 1, 1)


def test_gl11_constants(gl11):
    f = gl11.f
    assert f[0][2][2] == 1
    assert f[2][0][2] == -1
    assert f[0][3][3] == -1
    assert f[2][3][1] == I
    assert f[3][2][1] == I
    assert gl11.graded_dim == (2, 2)
    assert not gl11.is_abelian()


def test_gl11_validates(gl11):
    report = SA.validate_structure(gl11)
    assert report.passed
    assert report.matrix_agrees


def test_jacobi_violation():
    # [X3, {X3, X3}] = [X3, X1] = -X3
    bad = SA.LieSuperalgebra.from_brackets(
        'bad', PARITIES, {(3, 3): {1: 1}, (1, 3): {3: 1}})
    report = SA.validate_structure(bad)
    assert not report.passed
    assert report.jacobi
    assert not report.antisymmetry
    assert report.matrix_agrees


def test_grading_violation():
    report = SA.validate_structure(SA.LieSuperalgebra.from_brackets(
        'ungraded', PARITIES, {(1, 3): {1: 1}}))
    assert (0, 2, 0) in report.grading
    assert not report.passed


def test_antisymmetry_violation():
    f = [[[0] * 4 for _ in range(4)] for _ in range(4)]
    f[0][1][1] = 1
    report = SA.validate_structure(SA.LieSuperalgebra('skewed', PARITIES, f))
    assert report.antisymmetry == [(0, 1, 1)]


def test_construction_errors():
    with pytest.raises(exc.ParityError):
        SA.LieSuperalgebra('odd first', (1, 0),
                           [[[0, 0], [0, 0]], [[0, 0], [0, 0]]])
    with pytest.raises(exc.DimensionMismatch):
        SA.LieSuperalgebra('short', PARITIES, [[[0]]])


def test_conventions(gl11):
    ns = SA.to_nonstandard(gl11)
    assert ns.convention == SA.NONSTANDARD
    assert ns.f[2][3][1] == 1
    assert SA.to_standard(ns) == gl11
    assert SA.to_nonstandard(ns) is ns


def test_json_round_trip(gl11):
    obj = gl11.to_json()
    assert {'i': 1, 'j': 3, 'k': 3, 're': '1', 'im': '0'} in obj['brackets']
    assert {'i': 3, 'j': 4, 'k': 2, 're': '0', 'im': '1'} in obj['brackets']
    assert obj['basis'][2] == {'label': 'X3', 'parity': 1}
    back = SA.LieSuperalgebra.from_json(obj)
    assert back == gl11
    assert back.convention == SA.STANDARD


def test_symbolic_json_round_trip():
    p = sp.Symbol('p')
    g = SA.LieSuperalgebra.from_brackets('C', PARITIES,
                                         {(1, 3): {3: 1}, (1, 4): {4: p}})
    assert SA.LieSuperalgebra.from_json(g.to_json()) == g


def test_adjoint(gl11):
    ad = SA.adjoint(gl11, 0)
    assert ad[2, 2] == -1
    assert ad[3, 3] == 1
    with pytest.raises(IndexError):
        SA.adjoint(gl11, 4)


@pytest.mark.parametrize(('a', 'b', 'c'), [
    (0, 1, 1),
    (2, 3, -1),
    (sp.Rational(1, 2), -2, sp.Rational(1, 3)),
])
def test_automorphism_family(gl11, a, b, c):
    A = SA.automorphism_family(a, b, c)
    assert SA.is_automorphism(gl11, A)
    assert SA.in_automorphism_family(A)


def test_symbolic_automorphism(gl11):
    a, b, c = sp.symbols('a b c', nonzero=True)
    assert SA.is_automorphism(gl11, SA.automorphism_family(a, b, c))


def test_not_automorphism(gl11):
    swap = sp.Matrix([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1],
                      [0, 0, 1, 0]])
    assert not SA.is_automorphism(gl11, swap)
    assert not SA.in_automorphism_family(swap)
    with pytest.raises(exc.SingularMatrix):
        SA.transform(gl11, sp.zeros(4, 4))
    with pytest.raises(exc.DimensionMismatch):
        SA.transform(gl11, sp.eye(3))


def test_automorphism_grid_search(gl11):
    found = SA.automorphism_grid_search(gl11, values=(-1, 0, 1))
    # X1 -> +-X1 + a X2 with a in {-1, 0, 1}, four sign choices on the
    # odd pair, which is swapped when X1 changes sign
    assert len(found) == 24
    assert all(SA.is_automorphism(gl11, A) for A in found)


def test_automorphism_grid_search_default_grid():
    g = SA.LieSuperalgebra.from_brackets('B', (0, 1), {(1, 2): {2: 1}})
    found = SA.automorphism_grid_search(g)
    # X1 is fixed, X2 -> lambda X2 for every nonzero lambda on the grid
    assert len(found) == 4
    assert any(A[1, 1] == 2 for A in found)
    assert all(SA.is_automorphism(g, A) for A in found)


def test_jacobi_triple_vanishes(gl11):
    for i in range(4):
        for j in range(4):
            for k in range(4):
                assert all(c == 0 for c in SA.jacobi_triple(gl11, i, j, k))


def test_matrix_form_agrees_on_random_tensors(rng):
    for _ in range(100):
        g = conftest.random_structure(rng)
        assert SA.validate_structure(g).matrix_agrees


def test_rescale_odd(gl11):
    doubled = SA.rescale_odd(gl11, 2)
    assert doubled.f[2][3][1] == 2 * I
    assert doubled.f[0][2][2] == 1


def test_diff(gl11):
    other = SA.LieSuperalgebra.from_brackets(
        'gl11 variant', PARITIES,
        {(1, 3): {3: 1}, (1, 4): {4: 1}, (3, 4): {2: I}})
    assert gl11.diff(other) == [(0, 3, 3, -1, 1)]
