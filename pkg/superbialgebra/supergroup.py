# -*- coding: utf-8 -*-
'''The GL(1|1) supergroup chart, its invariant supervector fields and the
Sklyanin superbracket.

Group elements are written ``g = exp(x X1) exp(y X2) exp(psi X3)
exp(chi X4)``. Fields come in four flavours: left (L) or right (R)
invariant, with derivatives acting from the left or from the right. The
left invariant fields represent gl(1|1) in the nonstandard basis.
'''
import collections
import itertools
import logging

import sympy as sp

from superbialgebra import exc, golden
from superbialgebra.bialgebra import RMatrix, wedge
from superbialgebra.catalog import PARITIES
from superbialgebra.grassmann import GrassmannAlgebra, SuperFunction
from superbialgebra.superalgebra import LieSuperalgebra, NONSTANDARD
from superbialgebra.utils import sign

_logger = logging.getLogger(__name__)

COORDINATES = ('x', 'y', 'psi', 'chi')
LEFT = 'left'
RIGHT = 'right'
INVARIANCE = ('L', 'R')


def chart():
    return GrassmannAlgebra(('x', 'y'), ('psi', 'chi'), name='GL(1|1)')


GL11 = chart()


class SuperVectorField(object):
    '''sum_mu c_mu d/dx^mu with the coefficients to the left of a left
    derivative or to the right of a right derivative'''

    def __init__(self, components, side=LEFT, invariance=None, index=None,
                 parity=None):
        if side not in (LEFT, RIGHT):
            raise ValueError('side must be {0!r} or {1!r}'.format(LEFT,
                                                                  RIGHT))
        self.components = dict((k, v) for k, v in components.items()
                               if not v.is_zero())
        self.side = side
        self.invariance = invariance
        self.index = index
        self.parity = parity

    def __repr__(self):  # pragma: nocover
        return 'SuperVectorField({0}, {1})'.format(
            self.side, dict((k, str(v)) for k, v in
                            self.components.items()))

    def component(self, coord):
        return self.components.get(coord, GL11.zero())

    def __eq__(self, other):
        if not isinstance(other, SuperVectorField):
            return NotImplemented
        return self.side == other.side and all(
            self.component(c) == other.component(c) for c in COORDINATES)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def __neg__(self):
        return SuperVectorField(
            dict((k, -v) for k, v in self.components.items()), self.side,
            self.invariance, self.index, self.parity)

    def __call__(self, f):
        return apply_field(self, f)


def apply_field(V, f):
    '''V acting on f: sum c_mu (d/dx^mu f) for left fields and
    sum (f d/dx^mu) c_mu for right fields'''
    out = f.algebra.zero()
    for coord, c in V.components.items():
        if V.side == LEFT:
            out = out + c * f.left_deriv(coord)
        else:
            out = out + f.right_deriv(coord) * c
    return out


def field_bracket(V, W):
    '''The graded commutator read off on the coordinates: for left fields
    [V, W](x) = V(W(x)) - (-1)^{|V||W|} W(V(x)); right fields compose
    from the right.'''
    if V.side != W.side:
        raise exc.ParityError('cannot bracket a left and a right field')
    s = sign((V.parity or 0) * (W.parity or 0))
    components = {}
    for coord in COORDINATES:
        x = GL11.coordinate(coord)
        components[coord] = (apply_field(V, apply_field(W, x)) -
                             s * apply_field(W, apply_field(V, x)))
    parity = None
    if V.parity is not None and W.parity is not None:
        parity = (V.parity + W.parity) % 2
    return SuperVectorField(components, V.side, V.invariance, None, parity)


def _f(value):
    if isinstance(value, SuperFunction):
        return value
    return GL11.scalar(value)


def _field(side, invariance, index, **components):
    return SuperVectorField(
        dict((k, _f(v)) for k, v in components.items()), side, invariance,
        index, PARITIES[index])


def invariant_fields():
    '''{(invariance, side): [field of X1, .., field of X4]}'''
    x = GL11.symbol('x')
    psi, chi = GL11.coordinate('psi'), GL11.coordinate('chi')
    ex, emx = sp.exp(x), sp.exp(-x)
    fields = collections.OrderedDict()
    fields[('L', LEFT)] = [
        _field(LEFT, 'L', 0, x=1, psi=-psi, chi=chi),
        _field(LEFT, 'L', 1, y=1),
        _field(LEFT, 'L', 2, y=-chi, psi=-1),
        _field(LEFT, 'L', 3, chi=-1),
    ]
    fields[('L', RIGHT)] = [
        _field(RIGHT, 'L', 0, x=1, psi=-psi, chi=chi),
        _field(RIGHT, 'L', 1, y=1),
        _field(RIGHT, 'L', 2, y=chi, psi=-1),
        _field(RIGHT, 'L', 3, chi=-1),
    ]
    fields[('R', LEFT)] = [
        _field(LEFT, 'R', 0, x=1),
        _field(LEFT, 'R', 1, y=1),
        _field(LEFT, 'R', 2, psi=-emx),
        _field(LEFT, 'R', 3, y=psi * ex, chi=-ex),
    ]
    fields[('R', RIGHT)] = [
        _field(RIGHT, 'R', 0, x=1),
        _field(RIGHT, 'R', 1, y=1),
        _field(RIGHT, 'R', 2, psi=-emx),
        _field(RIGHT, 'R', 3, y=-psi * ex, chi=-ex),
    ]
    return fields


def _expand(V, fields):
    '''Coordinates of V in the span of ``fields`` with constant
    coefficients, or None'''
    unknowns = sp.symbols('k0:{0}'.format(len(fields)))
    equations = []
    for coord in COORDINATES:
        total = V.component(coord)
        for k, W in zip(unknowns, fields):
            total = total - W.component(coord) * k
        equations.extend(sp.expand(c) for c in total.terms.values())
    if not equations:
        return [sp.Integer(0)] * len(fields)
    solution = sp.linsolve(equations, unknowns)
    if not isinstance(solution, sp.FiniteSet) or len(solution) == 0:
        return None
    values = [sp.simplify(v) for v in next(iter(solution))]
    if any(v.free_symbols for v in values):
        return None
    return values


def field_algebra(invariance='L'):
    '''The structure constants spanned by the derivative-on-the-left
    invariant fields; for L fields this is gl(1|1) nonstandard.

    :raises SuperalgebraError: when the fields do not close
    '''
    fields = invariant_fields()[(invariance, LEFT)]
    n = len(fields)
    f = [[[sp.Integer(0)] * n for _ in range(n)] for _ in range(n)]
    for i, j in itertools.product(range(n), repeat=2):
        values = _expand(field_bracket(fields[i], fields[j]), fields)
        if values is None:
            raise exc.SuperalgebraError(
                '[{0}, {1}] leaves the span of the invariant fields'.format(
                    i + 1, j + 1))
        f[i][j] = values
    return LieSuperalgebra('fields {0}'.format(invariance), PARITIES, f,
                           convention=NONSTANDARD)


# -- the Sklyanin bracket

def sklyanin_part(r, f, h, invariance='L'):
    '''sum (f W_i) r^{ij} (V_j h) with W the right-derivative and V the
    left-derivative fields of one invariance'''
    fields = invariant_fields()
    W = fields[(invariance, RIGHT)]
    V = fields[(invariance, LEFT)]
    out = f.algebra.zero()
    n = len(W)
    left = [apply_field(W[i], f) for i in range(n)]
    right = [apply_field(V[j], h) for j in range(n)]
    for i, j in itertools.product(range(n), repeat=2):
        c = r[i, j]
        if c == 0 or left[i].is_zero() or right[j].is_zero():
            continue
        out = out + c * (left[i] * right[j])
    return out.simplify()


def sklyanin_bracket(r, f, h):
    '''{f, h} = {f, h}^L - {f, h}^R; only the skew part of r enters'''
    if not r.is_skew():
        r = r.skew_part
    return (sklyanin_part(r, f, h, 'L') -
            sklyanin_part(r, f, h, 'R')).simplify()


PAIRS = golden.TABLE_VI_PAIRS


def _coordinate(name):
    return GL11.coordinate(name)


def poisson_table(r, pairs=None):
    '''{pair: {'L': .., 'R': .., 'total': ..}} over coordinate pairs'''
    if not r.is_skew():
        r = r.skew_part
    table = collections.OrderedDict()
    for a, b in pairs or PAIRS:
        fa, fb = _coordinate(a), _coordinate(b)
        left = sklyanin_part(r, fa, fb, 'L')
        right = sklyanin_part(r, fa, fb, 'R')
        table[(a, b)] = {'L': left, 'R': right,
                         'total': (left - right).simplify()}
    return table


def table_v_r(label, p=None):
    '''A printed coboundary r-matrix as an RMatrix, in the nonstandard
    basis'''
    for name, terms, _, _ in golden.TABLE_V:
        if name == label:
            break
    else:
        raise exc.UnknownLabel(label, [row[0] for row in golden.TABLE_V])
    r = RMatrix.zero(PARITIES)
    for coeff, i, j in terms:
        r = r + wedge(i - 1, j - 1, PARITIES, coeff)
    if p is not None:
        r = r.subs(golden.P, sp.sympify(p))
    return r


def printed_value(value):
    '''A Table VI entry {monomial: coefficient} as a SuperFunction'''
    out = GL11.zero()
    for mono, coeff in value.items():
        base = GL11.one() if mono == '1' else _coordinate(mono)
        out = out + coeff * base
    return out


def compare_table_vi(label, p=None):
    '''(pair, computed, printed) for every pair where they differ'''
    r = table_v_r(label, p)
    printed = golden.TABLE_VI[label]
    out = []
    for pair, row in poisson_table(r).items():
        expected = printed_value(printed[pair])
        if p is not None:
            expected = expected.subs(golden.P, sp.sympify(p))
        if row['total'] != expected:
            out.append((pair, row['total'], expected))
    if out:
        _logger.warning('%s: %d Poisson brackets differ from the printed '
                        'ones', label, len(out))
    return out


def compare_split(label='C2_-1.ii'):
    '''The separately printed {.,.}^L and {.,.}^R of the triangular row'''
    table = poisson_table(table_v_r(label))
    out = []
    for part in ('L', 'R'):
        printed = golden.TABLE_VI_SPLIT[part]
        for pair, row in table.items():
            expected = printed_value(printed[pair])
            if row[part] != expected:
                out.append((part, pair, row[part], expected))
    return out


# -- identities of the bracket

def antisymmetry_residual(r, f, h):
    '''{f, h} + (-1)^{|f||h|} {h, f}'''
    s = sign((f.parity or 0) * (h.parity or 0))
    return (sklyanin_bracket(r, f, h) +
            s * sklyanin_bracket(r, h, f)).simplify()


def leibniz_residual(r, f, g, h):
    '''{f, gh} - {f, g} h - (-1)^{|f||g|} g {f, h}'''
    s = sign((f.parity or 0) * (g.parity or 0))
    return (sklyanin_bracket(r, f, g * h) - sklyanin_bracket(r, f, g) * h -
            s * (g * sklyanin_bracket(r, f, h))).simplify()


def jacobi_residual(r, f, g, h):
    '''Cyclic sum of (-1)^{|f||h|} {f, {g, h}}'''
    pf, pg, ph = (x.parity or 0 for x in (f, g, h))
    total = (sign(pf * ph) * sklyanin_bracket(r, f, sklyanin_bracket(r, g, h))
             + sign(pg * pf) * sklyanin_bracket(r, g,
                                                sklyanin_bracket(r, h, f))
             + sign(ph * pg) * sklyanin_bracket(r, h,
                                                sklyanin_bracket(r, f, g)))
    return total.simplify()
