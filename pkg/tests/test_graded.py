import pytest
import sympy as sp

import conftest
import superbialgebra.graded as SG
from superbialgebra import exc

H = SG.H
ODD_LINE = (0, 1)
SQUARE = (0, 0, 1, 1)


def test_dimension_mismatch_names_axis():
    with pytest.raises(exc.DimensionMismatch) as e:
        SG.SuperMatrix(sp.eye(2), (0, 0, 1))
    assert e.value.axis == 'rows'
    with pytest.raises(exc.DimensionMismatch) as e:
        SG.SuperMatrix(sp.ones(2, 3), ODD_LINE, ODD_LINE)
    assert e.value.axis == 'cols'


@pytest.mark.parametrize(('matrix', 'parity'), [
    (SG.SuperMatrix.unit(0, 1, ODD_LINE), 1),
    (SG.SuperMatrix.unit(1, 1, ODD_LINE), 0),
    (SG.SuperMatrix.zeros(ODD_LINE), 0),
    (SG.SuperMatrix([[1, 1], [0, 0]], ODD_LINE), None),
])
def test_parity(matrix, parity):
    assert matrix.parity == parity


def test_gtensor_identity():
    one = SG.SuperMatrix.identity(ODD_LINE)
    assert SG.gtensor(one, one) == SG.SuperMatrix.identity((0, 1, 1, 0))


def test_gtensor_odd_sign():
    # i=0, k=1 from A and j=1, l=0 from B: (-1)^{1 (0 + 1)}
    A = SG.SuperMatrix.unit(0, 1, ODD_LINE)
    B = SG.SuperMatrix.unit(1, 0, ODD_LINE)
    m = SG.gtensor(A, B).matrix
    assert m[1, 2] == -1
    assert sum(abs(x) for x in m) == 1


def test_gtensor_even_has_no_signs():
    A = SG.SuperMatrix.diag([2, 3], ODD_LINE)
    B = SG.SuperMatrix.diag([5, 7], ODD_LINE)
    assert SG.gtensor(A, B).matrix == sp.diag(10, 14, 15, 21)


def test_graded_swap_moves_legs():
    one = SG.SuperMatrix.identity(ODD_LINE)
    P = SG.graded_swap(ODD_LINE)
    for X in (SG.SuperMatrix.unit(0, 1, ODD_LINE),
              SG.SuperMatrix.unit(1, 0, ODD_LINE),
              SG.SuperMatrix.diag([1, -1], ODD_LINE)):
        assert P * SG.gtensor(one, X) * P == SG.gtensor(X, one)
    assert P * P == SG.SuperMatrix.identity(P.row_parities)


def test_supertranspose_blocks():
    a, b, c, d = sp.symbols('a b c d')
    A = SG.SuperMatrix([[a, b], [c, d]], ODD_LINE)
    assert SG.supertranspose(A).matrix == sp.Matrix([[a, c], [-b, d]])
    assert SG.supertranspose(A, 'index').matrix == \
        sp.Matrix([[a, c], [b, -d]])
    with pytest.raises(ValueError):
        SG.supertranspose(A, 'plain')


def test_supertranspose_twice(rng):
    P = SG.parity_mask(SQUARE)
    for _ in range(50):
        A = conftest.random_supermatrix(rng, SQUARE)
        twice = SG.supertranspose(SG.supertranspose(A))
        assert twice == P * A * P
        if A.parity == 1:
            assert twice == -A


def test_supertrace():
    assert SG.supertrace(SG.SuperMatrix.diag([2, 5], ODD_LINE)) == -3
    value, odd = SG.supertrace(SG.SuperMatrix.unit(0, 1, ODD_LINE),
                               with_flag=True)
    assert value == 0
    assert odd


def test_graded_identities(rng):
    for _ in range(200):
        A = conftest.random_supermatrix(rng, SQUARE)
        B = conftest.random_supermatrix(rng, SQUARE)
        s = (-1) ** (A.parity * B.parity)
        assert SG.supertrace(A * B) == s * SG.supertrace(B * A)
        assert (A * B).is_zero() or \
            (A * B).parity == (A.parity + B.parity) % 2
        if A.parity == 0:
            assert SG.supertrace(SG.supertranspose(A)) == SG.supertrace(A)


def test_gtensor_product_law(rng):
    for _ in range(50):
        A, B, C, D = [conftest.random_supermatrix(rng, ODD_LINE)
                      for _ in range(4)]
        lhs = SG.gtensor(A, B) * SG.gtensor(C, D)
        rhs = (-1) ** (B.parity * C.parity) * SG.gtensor(A * C, B * D)
        assert lhs == rhs
        assert SG.supertrace(SG.gtensor(A, B)) == \
            SG.supertrace(A) * SG.supertrace(B)


def test_bracket():
    X3 = SG.SuperMatrix.unit(0, 1, ODD_LINE)
    X4 = SG.SuperMatrix.unit(1, 0, ODD_LINE)
    assert SG.bracket(X3, X4) == SG.SuperMatrix.identity(ODD_LINE)
    with pytest.raises(exc.ParityError):
        SG.bracket(X3 + SG.SuperMatrix.identity(ODD_LINE), X4)


def test_expm_exact():
    R = SG.expm_exact(SG.SuperMatrix.diag([H, -H], ODD_LINE))
    assert R.matrix == sp.diag(sp.exp(H), sp.exp(-H))
    N = SG.SuperMatrix.unit(0, 1, ODD_LINE)
    assert SG.expm_exact(N) == SG.SuperMatrix.identity(ODD_LINE) + N
    mixed = SG.SuperMatrix([[H, 1], [0, H]], ODD_LINE)
    assert SG.expm_exact(mixed).matrix == \
        sp.Matrix([[sp.exp(H), sp.exp(H)], [0, sp.exp(H)]])


@pytest.mark.parametrize('rows', [
    [[1, 1], [0, 2]],
    [[0, 1], [1, 0]],
    [[H, 1], [1, -H]],
])
def test_expm_exact_refuses_other_matrices(rows):
    with pytest.raises(exc.CannotExponentiate):
        SG.expm_exact(SG.SuperMatrix(rows, (0, 0)))


def test_inverse():
    A = SG.SuperMatrix([[1, 2], [3, 4]], (0, 0))
    assert A * A.inverse() == SG.SuperMatrix.identity((0, 0))
    with pytest.raises(exc.SingularMatrix):
        SG.SuperMatrix([[1, 2], [2, 4]], (0, 0)).inverse()


def test_truncate_h():
    assert SG.truncate_h(1 + H + H ** 2 + 5 * H ** 3, 2) == 1 + H + H ** 2
    assert SG.truncate_h(sp.Rational(1, 2)) == sp.Rational(1, 2)
    assert SG.h_degree(3 * H ** 2) == 2
    with pytest.raises(ValueError):
        SG.truncate_h(sp.exp(H), 2)
