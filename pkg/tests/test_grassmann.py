import itertools

import pytest
import sympy as sp

import superbialgebra.grassmann as GR
from superbialgebra import exc


@pytest.fixture
def G():
    return GR.GrassmannAlgebra(('x',), ('a', 'b'))


@pytest.fixture
def coords(G):
    return [G.coordinate(c) for c in ('x', 'a', 'b')]


def test_anticommuting(G, coords):
    x, a, b = coords
    assert a * b == -(b * a)
    assert (a * a).is_zero()
    assert x * a == a * x
    assert (a * b).coefficient('a', 'b') == 1
    assert (a * b).coefficient('b', 'a') == -1
    assert (a * b).coefficient('a', 'a') == 0


def test_parity_body_soul(G, coords):
    x, a, b = coords
    assert a.parity == 1
    assert (a * b).parity == 0
    assert (x + a).parity is None
    f = x + 3 * a * b
    assert f.body() == G.symbol('x')
    assert f.soul() == 3 * a * b


@pytest.mark.parametrize(('coord', 'left', 'right'), [
    ('a', 'b', '-b'),
    ('b', '-a', 'a'),
])
def test_odd_derivatives(G, coords, coord, left, right):
    _, a, b = coords
    images = {'a': a, 'b': b, '-a': -a, '-b': -b}
    f = a * b
    assert f.left_deriv(coord) == images[left]
    assert f.right_deriv(coord) == images[right]


def test_even_derivative(G, coords):
    x, a, _ = coords
    f = x ** 2 * a
    assert GR.left_deriv(f, 'x') == 2 * x * a
    assert GR.right_deriv(f, 'x') == 2 * x * a


def test_graded_leibniz(G, coords):
    x, a, b = coords
    samples = [x, a, b, a * b, x * a + b, x ** 2 * a * b]
    for f, g in itertools.product(samples, repeat=2):
        if f.parity is None:
            continue
        for c in ('a', 'b'):
            lhs = (f * g).left_deriv(c)
            rhs = f.left_deriv(c) * g + (-1) ** f.parity * (
                f * g.left_deriv(c))
            assert lhs == rhs


def test_compose(G, coords):
    x, a, b = coords
    T = GR.GrassmannAlgebra(('y',), ('c', 'd'))
    y, c, d = [T.coordinate(n) for n in ('y', 'c', 'd')]
    f = x * a * b
    assert f.compose(T, {'x': y ** 2, 'a': d, 'b': c}) == -(y ** 2 * c * d)
    with pytest.raises(exc.ParityError):
        f.compose(T, {'x': y + c * d, 'a': d, 'b': c})


def test_charts_do_not_mix(G, coords):
    T = GR.GrassmannAlgebra(('y',), ('c',))
    with pytest.raises(exc.DimensionMismatch):
        coords[1] + T.coordinate('c')
    with pytest.raises(exc.UnknownLabel):
        G.coordinate('z')


def test_superinverse(G, coords):
    _, a, b = coords
    M = GR.GrassmannMatrix(G, [[1, a], [b, 1]], (0, 1))
    inv = GR.superinverse(M)
    assert inv[0, 0] == 1 + a * b
    assert inv[1, 1] == 1 - a * b
    assert inv[0, 1] == -a
    assert M * inv == GR.GrassmannMatrix.identity(G, (0, 1))
    assert (M * inv).supertrace() == 0


def test_superinverse_singular_body(G, coords):
    _, a, _ = coords
    M = GR.GrassmannMatrix(G, [[0, a], [a, 0]], (0, 1))
    with pytest.raises(exc.SingularMatrix):
        GR.superinverse(M)


def test_matrix_shapes(G):
    with pytest.raises(exc.DimensionMismatch):
        GR.GrassmannMatrix(G, [[1, 0]], (0, 1))
    with pytest.raises(exc.DimensionMismatch):
        GR.GrassmannMatrix(G, [[1], [0]], (0, 1))


def test_str(G, coords):
    x, a, b = coords
    assert str(G.zero()) == '0'
    assert str(2 + a * b) == '2 + (1)*a*b'
