'''Lie superalgebras given by graded structure constants.

The structure constants are stored as ``f[i][j][k]``, the coefficient of
``X_k`` in ``[X_i, X_j]``. Indices are 0-based in code and 1-based in
labels and printed output.
'''
import itertools
import logging

import sympy as sp
from sympy.polys.domains import QQ_I

from superbialgebra import exc
from superbialgebra.graded import SuperMatrix, parity_mask
from superbialgebra.utils import (
    is_zero, scalar_from_json, scalar_to_json, sign, simplify_scalar)

_logger = logging.getLogger(__name__)

STANDARD = 'standard'
NONSTANDARD = 'nonstandard'


def _zeros(n):
    return [[[sp.Integer(0)] * n for _ in range(n)] for _ in range(n)]


class LieSuperalgebra(object):
    '''A Lie superalgebra in a basis with all even generators first'''

    def __init__(self, name, parities, f, labels=None, convention=STANDARD):
        self.name = name
        self.parities = tuple(int(p) % 2 for p in parities)
        if list(self.parities) != sorted(self.parities):
            raise exc.ParityError(
                '{0}: even generators must precede odd ones'.format(name))
        n = len(self.parities)
        if len(f) != n or any(len(row) != n for row in f):
            raise exc.DimensionMismatch('structure tensor', n, len(f))
        self.f = [[[sp.sympify(f[i][j][k]) for k in range(n)]
                   for j in range(n)] for i in range(n)]
        self.labels = tuple(labels or ['X{0}'.format(k + 1)
                                       for k in range(n)])
        self.convention = convention

    @classmethod
    def from_brackets(cls, name, parities, brackets, labels=None,
                      convention=STANDARD, one_based=True):
        '''Builds the tensor from independent brackets.

        ``brackets`` maps ``(i, j)`` to ``{k: coefficient}``; the partner
        ``[X_j, X_i]`` is filled in by super antisymmetry.'''
        n = len(parities)
        f = _zeros(n)
        shift = 1 if one_based else 0
        for (i, j), images in brackets.items():
            i, j = i - shift, j - shift
            s = -sign(parities[i] * parities[j])
            for k, coeff in images.items():
                k -= shift
                f[i][j][k] = sp.sympify(coeff)
                f[j][i][k] = s * sp.sympify(coeff)
        return cls(name, parities, f, labels=labels, convention=convention)

    @classmethod
    def abelian(cls, name, even, odd):
        n = even + odd
        return cls(name, (0,) * even + (1,) * odd, _zeros(n))

    @property
    def dim(self):
        return len(self.parities)

    @property
    def graded_dim(self):
        odd = sum(self.parities)
        return self.dim - odd, odd

    def __repr__(self):  # pragma: nocover
        return 'LieSuperalgebra({0!r}, {1}|{2})'.format(
            self.name, *self.graded_dim)

    def structure(self, i, j, k):
        return self.f[i][j][k]

    def bracket_of(self, i, j):
        '''[X_i, X_j] as a coordinate vector'''
        return list(self.f[i][j])

    def nonzero_brackets(self):
        '''{(i, j): {k: c}} for i <= j, 0-based'''
        result = {}
        for i, j in itertools.combinations_with_replacement(
                range(self.dim), 2):
            images = dict((k, c) for k, c in enumerate(self.f[i][j])
                          if not is_zero(c))
            if images:
                result[(i, j)] = images
        return result

    def is_abelian(self):
        return not self.nonzero_brackets()

    def __eq__(self, other):
        if not isinstance(other, LieSuperalgebra):
            return NotImplemented
        if self.parities != other.parities:
            return False
        n = self.dim
        return all(is_zero(self.f[i][j][k] - other.f[i][j][k])
                   for i in range(n) for j in range(n) for k in range(n))

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def diff(self, other):
        '''Every (i, j, k) with i <= j where the two tensors disagree, as
        (i, j, k, ours, theirs)'''
        n = self.dim
        out = []
        for i, j in itertools.combinations_with_replacement(range(n), 2):
            for k in range(n):
                a, b = self.f[i][j][k], other.f[i][j][k]
                if not is_zero(a - b):
                    out.append((i, j, k, a, b))
        return out

    def map_constants(self, func, name=None, convention=None):
        n = self.dim
        f = [[[func(i, j, k, self.f[i][j][k]) for k in range(n)]
              for j in range(n)] for i in range(n)]
        return LieSuperalgebra(name or self.name, self.parities, f,
                               labels=self.labels,
                               convention=convention or self.convention)

    def subs(self, *args, **kwargs):
        return self.map_constants(
            lambda i, j, k, c: c.subs(*args, **kwargs))

    def simplify(self):
        return self.map_constants(lambda i, j, k, c: simplify_scalar(c))

    def free_symbols(self):
        symbols = set()
        for row in self.f:
            for vec in row:
                for c in vec:
                    symbols |= c.free_symbols
        return symbols

    def renamed(self, name):
        return self.map_constants(lambda i, j, k, c: c, name=name)

    def to_json(self):
        brackets = []
        for (i, j), images in sorted(self.nonzero_brackets().items()):
            for k, coeff in sorted(images.items()):
                item = {'i': i + 1, 'j': j + 1, 'k': k + 1}
                item.update(scalar_to_json(coeff))
                brackets.append(item)
        return {
            'name': self.name,
            'basis': [{'label': label, 'parity': p}
                      for label, p in zip(self.labels, self.parities)],
            'brackets': brackets,
            'convention': self.convention,
        }

    @classmethod
    def from_json(cls, obj):
        parities = [b['parity'] for b in obj['basis']]
        labels = [b['label'] for b in obj['basis']]
        brackets = {}
        for item in obj['brackets']:
            key = (item['i'], item['j'])
            brackets.setdefault(key, {})[item['k']] = scalar_from_json(item)
        return cls.from_brackets(obj['name'], parities, brackets,
                                 labels=labels,
                                 convention=obj.get('convention', STANDARD))


def bracket(g, u, v):
    '''Bracket of two coordinate vectors'''
    n = g.dim
    out = [sp.Integer(0)] * n
    for i, a in enumerate(u):
        if a == 0:
            continue
        for j, b in enumerate(v):
            if b == 0:
                continue
            for k in range(n):
                out[k] += a * b * g.f[i][j][k]
    return [sp.expand(c) for c in out]


def _basis(n, i):
    return [sp.Integer(1) if k == i else sp.Integer(0) for k in range(n)]


def jacobi_triple(g, i, j, k):
    '''[X_i,[X_j,X_k]] - [[X_i,X_j],X_k] - (-1)^{ij}[X_j,[X_i,X_k]]'''
    n = g.dim
    xi, xj, xk = _basis(n, i), _basis(n, j), _basis(n, k)
    first = bracket(g, xi, g.bracket_of(j, k))
    second = bracket(g, g.bracket_of(i, j), xk)
    third = bracket(g, xj, g.bracket_of(i, k))
    s = sign(g.parities[i] * g.parities[j])
    return [sp.expand(a - b - s * c) for a, b, c in zip(first, second, third)]


def adjoint(g, i):
    '''The adjoint matrix with entries (X_i)_j^k = -f^k_ij'''
    if not 0 <= i < g.dim:
        raise IndexError('generator index {0} out of range'.format(i))
    n = g.dim
    m = sp.Matrix(n, n, lambda j, k: -g.f[i][j][k])
    return SuperMatrix(m, g.parities)


def coadjoint(g, i):
    '''The matrix with entries (Y^i)_jk = -f^i_jk'''
    if not 0 <= i < g.dim:
        raise IndexError('generator index {0} out of range'.format(i))
    n = g.dim
    m = sp.Matrix(n, n, lambda j, k: -g.f[j][k][i])
    return SuperMatrix(m, g.parities)


def matrix_jacobi_residual(g):
    '''The super Jacobi identity written with adjoint matrices,

        -f^k_ij X_k - X_j X_i + (-1)^{ij} X_i X_j,

    one matrix per ordered pair (i, j). Its (a, b) entry is the negative
    of the X_b coefficient of jacobi_triple(i, j, a).'''
    n = g.dim
    ads = [adjoint(g, i).matrix for i in range(n)]
    out = {}
    for i, j in itertools.product(range(n), repeat=2):
        m = -(ads[j] * ads[i]) + sign(g.parities[i] * g.parities[j]) * (
            ads[i] * ads[j])
        for k in range(n):
            if g.f[i][j][k] != 0:
                m = m - g.f[i][j][k] * ads[k]
        out[(i, j)] = m.applyfunc(sp.expand)
    return out


class ValidationReport(object):
    '''Every violated identity of a structure tensor'''

    def __init__(self, name, antisymmetry, grading, jacobi, matrix_agrees):
        self.name = name
        self.antisymmetry = antisymmetry
        self.grading = grading
        self.jacobi = jacobi
        self.matrix_agrees = matrix_agrees

    @property
    def passed(self):
        return not (self.antisymmetry or self.grading or self.jacobi)

    def __repr__(self):  # pragma: nocover
        return 'ValidationReport({0!r}, passed={1})'.format(
            self.name, self.passed)


def validate_structure(g, cross_check=True):
    n = g.dim
    p = g.parities
    antisymmetry = []
    grading = []
    for i, j, k in itertools.product(range(n), repeat=3):
        c = g.f[i][j][k]
        if i <= j and not is_zero(c + sign(p[i] * p[j]) * g.f[j][i][k]):
            antisymmetry.append((i, j, k))
        if (p[i] + p[j] + p[k]) % 2 and not is_zero(c):
            grading.append((i, j, k))
    jacobi = []
    residuals = {}
    for i, j, k in itertools.product(range(n), repeat=3):
        vec = jacobi_triple(g, i, j, k)
        residuals[(i, j, k)] = vec
        for m, value in enumerate(vec):
            if not is_zero(value):
                jacobi.append((i, j, k, m, value))
    matrix_agrees = True
    if cross_check:
        for (i, j), mat in matrix_jacobi_residual(g).items():
            for a, b in itertools.product(range(n), repeat=2):
                if not is_zero(mat[a, b] + residuals[(i, j, a)][b]):
                    matrix_agrees = False
    report = ValidationReport(g.name, antisymmetry, grading, jacobi,
                              matrix_agrees)
    _logger.debug('%s: antisymmetry %d, grading %d, jacobi %d violations',
                  g.name, len(antisymmetry), len(grading), len(jacobi))
    return report


def _as_matrix(C):
    return sp.Matrix(C.matrix) if isinstance(C, SuperMatrix) else \
        sp.Matrix(C)


def transform(g, C, signed=True, name=None):
    '''Structure constants in the basis X'_i = sum_j (-1)^{|j|} C_ij X_j.

    With ``signed=False`` the rows of C are the new generators in the old
    coordinates, with no parity sign.'''
    m = _as_matrix(C)
    n = g.dim
    if m.shape != (n, n):
        raise exc.DimensionMismatch('cols', (n, n), m.shape)
    if signed:
        m = m * parity_mask(g.parities).matrix
    det = m.det()
    if is_zero(det):
        raise exc.SingularMatrix(m)
    inv = m.inv()
    f = _zeros(n)
    for i, j in itertools.product(range(n), repeat=2):
        vec = bracket(g, list(m.row(i)), list(m.row(j)))
        if all(c == 0 for c in vec):
            continue
        for l in range(n):
            f[i][j][l] = sp.expand(sum(vec[k] * inv[k, l] for k in range(n)
                                       if vec[k] != 0))
    return LieSuperalgebra(name or g.name, g.parities, f, labels=g.labels,
                           convention=g.convention)


def is_automorphism(g, A):
    return transform(g, A) == g


def is_isomorphism(g, g2, C, signed=True):
    '''True when transporting g through C yields g2'''
    if g.parities != g2.parities:
        return False
    return transform(g, C, signed=signed) == g2


def automorphism_family(a, b, c):
    '''The automorphisms of gl(1|1), X_1 -> X_1 + a X_2 and so on'''
    return SuperMatrix([[1, a, 0, 0],
                        [0, b * c, 0, 0],
                        [0, 0, b, 0],
                        [0, 0, 0, c]], (0, 0, 1, 1))


def in_automorphism_family(A):
    m = _as_matrix(A)
    return (m[0, 0] == 1 and m[1, 0] == 0 and
            m[2, 3] == 0 and m[3, 2] == 0 and
            is_zero(m[1, 1] - m[2, 2] * m[3, 3]) and
            not is_zero(m[2, 2] * m[3, 3]))


def rescale_odd(g, factor, name=None, convention=None):
    '''Multiplies every odd-odd bracket by ``factor``'''
    p = g.parities

    def scale(i, j, k, c):
        return sp.expand(factor * c) if p[i] and p[j] else c
    return g.map_constants(scale, name=name, convention=convention)


def to_nonstandard(g, name=None):
    '''Drops the factor i from odd-odd brackets'''
    if g.convention == NONSTANDARD:
        return g
    return rescale_odd(g, -sp.I, name=name, convention=NONSTANDARD)


def to_standard(g, name=None):
    if g.convention == STANDARD:
        return g
    return rescale_odd(g, sp.I, name=name, convention=STANDARD)


def automorphism_grid_search(g, values=range(-2, 3)):
    '''Searches block-diagonal matrices with entries from ``values`` for
    automorphisms of g.

    Works over the Gaussian rationals domain to stay fast. Returns the
    list of automorphism matrices found; finite-grid evidence only.'''
    n = g.dim
    even = [k for k in range(n) if g.parities[k] == 0]
    odd = [k for k in range(n) if g.parities[k] == 1]
    f = [[[QQ_I.from_sympy(g.f[i][j][k]) for k in range(n)]
          for j in range(n)] for i in range(n)]
    zero = QQ_I.zero
    values = [QQ_I.convert(v) for v in values]
    cells = [(a, b) for block in (even, odd) for a in block for b in block]
    found = []
    for choice in itertools.product(values, repeat=len(cells)):
        m = [[zero] * n for _ in range(n)]
        for (a, b), v in zip(cells, choice):
            m[a][b] = v if g.parities[b] == 0 else -v
        if not _domain_automorphism(f, m, n):
            continue
        signed = sp.Matrix(n, n, lambda a, b: QQ_I.to_sympy(m[a][b]))
        if is_zero(signed.det()):
            continue
        found.append(signed * parity_mask(g.parities).matrix)
    _logger.debug('%s: %d automorphisms on a grid of %d', g.name,
                  len(found), len(values) ** len(cells))
    return found


def _domain_automorphism(f, m, n):
    # sum_ab m_ia m_jb f^k_ab == sum_l f^l_ij m_lk
    for i, j in itertools.product(range(n), repeat=2):
        for k in range(n):
            lhs = QQ_I.zero
            for a in range(n):
                if not m[i][a]:
                    continue
                for b in range(n):
                    if m[j][b] and f[a][b][k]:
                        lhs += m[i][a] * m[j][b] * f[a][b][k]
            rhs = QQ_I.zero
            for l in range(n):
                if f[i][j][l] and m[l][k]:
                    rhs += f[i][j][l] * m[l][k]
            if lhs != rhs:
                return False
    return True
