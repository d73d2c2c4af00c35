'''Functions on a superspace chart.

A SuperFunction is a polynomial in odd coordinates whose coefficients are
ordinary sympy expressions in the even coordinates and in parameters.
Odd monomials are stored as sorted tuples of odd-coordinate indices, so
``(0, 1)`` means ``theta_0 theta_1`` and reordering signs are absorbed into
the coefficients.
'''
import itertools
import logging

import sympy as sp

from superbialgebra import exc
from superbialgebra.utils import is_zero, sign, simplify_scalar

_logger = logging.getLogger(__name__)


def _merge(left, right):
    '''Product of two sorted odd monomials: (sign, monomial) or (0, None)'''
    if set(left) & set(right):
        return 0, None
    inversions = sum(1 for i in left for j in right if i > j)
    return sign(inversions), tuple(sorted(left + right))


class GrassmannAlgebra(object):
    '''Coordinates of a superspace chart: even names become sympy symbols,
    odd names become Grassmann generators.

    Coordinates are indexed even first, odd second, matching the standard
    basis ordering used everywhere else in the package.'''

    def __init__(self, even, odd, name=None):
        self.even_names = tuple(even)
        self.odd_names = tuple(odd)
        self.name = name or ','.join(self.even_names + self.odd_names)
        self.even = tuple(sp.Symbol(n) for n in self.even_names)
        self.coordinates = self.even_names + self.odd_names
        self.parities = (0,) * len(self.even_names) + (1,) * len(
            self.odd_names)

    def __repr__(self):  # pragma: nocover
        return 'GrassmannAlgebra({0})'.format(self.name)

    def __eq__(self, other):
        return (isinstance(other, GrassmannAlgebra) and
                self.even_names == other.even_names and
                self.odd_names == other.odd_names)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.even_names, self.odd_names))

    def parity_of(self, coord):
        return self.parities[self.index(coord)]

    def index(self, coord):
        if isinstance(coord, int):
            return coord
        try:
            return self.coordinates.index(coord)
        except ValueError:
            raise exc.UnknownLabel(coord, self.coordinates)

    def symbol(self, name):
        '''The sympy symbol of an even coordinate'''
        return self.even[self.even_names.index(name)]

    def scalar(self, value):
        return SuperFunction(self, {(): sp.sympify(value)})

    def zero(self):
        return SuperFunction(self, {})

    def one(self):
        return self.scalar(1)

    def coordinate(self, coord):
        '''The coordinate function of an even or odd coordinate'''
        k = self.index(coord)
        if self.parities[k] == 0:
            return self.scalar(self.even[k])
        return SuperFunction(self, {(k - len(self.even),): sp.Integer(1)})

    def coords(self):
        return [self.coordinate(c) for c in self.coordinates]

    def monomials(self):
        '''Every sorted odd monomial, the empty one first'''
        odd = range(len(self.odd_names))
        for size in range(len(self.odd_names) + 1):
            for mono in itertools.combinations(odd, size):
                yield mono


class SuperFunction(object):
    '''An element of C(even)[odd]: a sum of coefficient times odd
    monomial'''

    def __init__(self, algebra, terms):
        self.algebra = algebra
        self.terms = {}
        for mono, coeff in terms.items():
            coeff = sp.sympify(coeff)
            if not is_zero(coeff):
                self.terms[tuple(mono)] = coeff

    def _coerce(self, other):
        if isinstance(other, SuperFunction):
            if other.algebra != self.algebra:
                raise exc.DimensionMismatch('chart', self.algebra.name,
                                            other.algebra.name)
            return other
        return self.algebra.scalar(other)

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for mono, coeff in other.terms.items():
            terms[mono] = terms.get(mono, 0) + coeff
        return SuperFunction(self.algebra, terms)

    __radd__ = __add__

    def __neg__(self):
        return SuperFunction(self.algebra,
                             dict((m, -c) for m, c in self.terms.items()))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        terms = {}
        for (m1, c1), (m2, c2) in itertools.product(self.terms.items(),
                                                    other.terms.items()):
            s, mono = _merge(m1, m2)
            if s:
                terms[mono] = terms.get(mono, 0) + s * c1 * c2
        return SuperFunction(self.algebra, terms)

    def __rmul__(self, scalar):
        return self._coerce(scalar) * self

    def __pow__(self, k):
        result = self.algebra.one()
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except (exc.DimensionMismatch, sp.SympifyError):
            return NotImplemented
        return (self - other).is_zero()

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def is_zero(self):
        return not self.terms

    @property
    def parity(self):
        '''0, 1, or None for an inhomogeneous function'''
        seen = set(len(m) % 2 for m in self.terms)
        if len(seen) > 1:
            return None
        return seen.pop() if seen else 0

    def body(self):
        '''The ordinary function left when every odd coordinate is zero'''
        return self.terms.get((), sp.Integer(0))

    def soul(self):
        return self - self.algebra.scalar(self.body())

    def coefficient(self, *odd):
        '''Coefficient of the odd monomial written as coordinate names, in
        the given order'''
        n_even = len(self.algebra.even_names)
        indices = [self.algebra.index(name) - n_even for name in odd]
        if len(set(indices)) != len(indices):
            return sp.Integer(0)
        # sign to bring the requested order to sorted order
        inversions = sum(1 for a, b in itertools.combinations(indices, 2)
                         if a > b)
        return sign(inversions) * self.terms.get(tuple(sorted(indices)),
                                                 sp.Integer(0))

    def map_coefficients(self, func):
        return SuperFunction(self.algebra,
                             dict((m, func(c)) for m, c in self.terms.items()))

    def subs(self, *args, **kwargs):
        return self.map_coefficients(lambda c: c.subs(*args, **kwargs))

    def simplify(self):
        return self.map_coefficients(simplify_scalar)

    def free_symbols(self):
        symbols = set()
        for coeff in self.terms.values():
            symbols |= coeff.free_symbols
        return symbols

    def left_deriv(self, coord):
        '''Derivative acting from the left'''
        k = self.algebra.index(coord)
        if self.algebra.parities[k] == 0:
            x = self.algebra.even[k]
            return self.map_coefficients(lambda c: sp.diff(c, x))
        odd = k - len(self.algebra.even_names)
        terms = {}
        for mono, coeff in self.terms.items():
            if odd in mono:
                pos = mono.index(odd)
                rest = mono[:pos] + mono[pos + 1:]
                terms[rest] = sign(pos) * coeff
        return SuperFunction(self.algebra, terms)

    def right_deriv(self, coord):
        '''Derivative acting from the right'''
        k = self.algebra.index(coord)
        if self.algebra.parities[k] == 0:
            return self.left_deriv(coord)
        odd = k - len(self.algebra.even_names)
        terms = {}
        for mono, coeff in self.terms.items():
            if odd in mono:
                pos = mono.index(odd)
                rest = mono[:pos] + mono[pos + 1:]
                terms[rest] = sign(len(mono) - 1 - pos) * coeff
        return SuperFunction(self.algebra, terms)

    def compose(self, target, images):
        '''Rewrites the function in another chart.

        ``images`` maps every coordinate name of this chart onto a
        SuperFunction of ``target``; even images must be bodies only.'''
        even_subs = {}
        for name, symbol in zip(self.algebra.even_names, self.algebra.even):
            image = images[name]
            if image.soul().terms:
                raise exc.ParityError(
                    'even coordinate {0} must map to a body'.format(name))
            even_subs[symbol] = image.body()
        odd_images = [images[name] for name in self.algebra.odd_names]
        result = target.zero()
        for mono, coeff in self.terms.items():
            term = target.scalar(coeff.subs(even_subs, simultaneous=True))
            for k in mono:
                term = term * odd_images[k]
            result = result + term
        return result

    def __repr__(self):  # pragma: nocover
        return 'SuperFunction({0})'.format(self)

    def __str__(self):
        if not self.terms:
            return '0'
        names = self.algebra.odd_names
        parts = []
        for mono in sorted(self.terms, key=lambda m: (len(m), m)):
            coeff = sp.sstr(simplify_scalar(self.terms[mono]))
            if not mono:
                parts.append(coeff)
            else:
                parts.append('({0})*{1}'.format(
                    coeff, '*'.join(names[k] for k in mono)))
        return ' + '.join(parts)


def left_deriv(f, coord):
    return f.left_deriv(coord)


def right_deriv(f, coord):
    return f.right_deriv(coord)


class GrassmannMatrix(object):
    '''A square matrix of SuperFunctions on a graded index set'''

    def __init__(self, algebra, rows, parities):
        self.algebra = algebra
        self.parities = tuple(parities)
        n = len(self.parities)
        self.rows = []
        for row in rows:
            if len(row) != n:
                raise exc.DimensionMismatch('cols', n, len(row))
            self.rows.append([v if isinstance(v, SuperFunction)
                              else algebra.scalar(v) for v in row])
        if len(self.rows) != n:
            raise exc.DimensionMismatch('rows', n, len(self.rows))

    @classmethod
    def from_scalar_matrix(cls, algebra, matrix, parities):
        n = len(parities)
        return cls(algebra, [[matrix[a, b] for b in range(n)]
                             for a in range(n)], parities)

    @classmethod
    def identity(cls, algebra, parities):
        return cls.from_scalar_matrix(algebra, sp.eye(len(parities)),
                                      parities)

    @property
    def size(self):
        return len(self.parities)

    def __getitem__(self, key):
        a, b = key
        return self.rows[a][b]

    def __add__(self, other):
        return GrassmannMatrix(
            self.algebra,
            [[x + y for x, y in zip(r1, r2)]
             for r1, r2 in zip(self.rows, other.rows)], self.parities)

    def __neg__(self):
        return GrassmannMatrix(self.algebra,
                               [[-x for x in row] for row in self.rows],
                               self.parities)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, GrassmannMatrix):
            return GrassmannMatrix(
                self.algebra, [[x * other for x in row] for row in self.rows],
                self.parities)
        if self.parities != other.parities:
            raise exc.DimensionMismatch('inner', self.parities,
                                        other.parities)
        n = self.size
        rows = []
        for a in range(n):
            row = []
            for c in range(n):
                value = self.algebra.zero()
                for b in range(n):
                    value = value + self.rows[a][b] * other.rows[b][c]
                row.append(value)
            rows.append(row)
        return GrassmannMatrix(self.algebra, rows, self.parities)

    def __rmul__(self, scalar):
        return GrassmannMatrix(
            self.algebra, [[scalar * x for x in row] for row in self.rows],
            self.parities)

    def __pow__(self, k):
        result = GrassmannMatrix.identity(self.algebra, self.parities)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, GrassmannMatrix):
            return NotImplemented
        return (self.parities == other.parities and
                all(x == y for r1, r2 in zip(self.rows, other.rows)
                    for x, y in zip(r1, r2)))

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def body(self):
        return sp.Matrix([[x.body() for x in row] for row in self.rows])

    def map(self, func):
        return GrassmannMatrix(self.algebra,
                               [[func(x) for x in row] for row in self.rows],
                               self.parities)

    def simplify(self):
        return self.map(lambda x: x.simplify())

    def supertrace(self):
        result = self.algebra.zero()
        for a, p in enumerate(self.parities):
            result = result + sign(p) * self.rows[a][a]
        return result

    def __repr__(self):  # pragma: nocover
        return 'GrassmannMatrix({0})'.format(
            [[str(x) for x in row] for row in self.rows])


def superinverse(M):
    '''Inverse of a Grassmann matrix with invertible body.

    With M = B + N, B the body and N nilpotent, the inverse is the finite
    series sum_k (-B^-1 N)^k B^-1.'''
    body = M.body()
    if is_zero(body.det()):
        raise exc.SingularMatrix(body, 'body of the matrix is singular')
    body_inv = GrassmannMatrix.from_scalar_matrix(
        M.algebra, body.inv().applyfunc(sp.cancel), M.parities)
    nil = M - GrassmannMatrix.from_scalar_matrix(M.algebra, body, M.parities)
    step = -(body_inv * nil)
    term = body_inv
    result = body_inv
    for k in range(len(M.algebra.odd_names)):
        term = step * term
        result = result + term
    _logger.debug('superinverse: %d nilpotent terms', len(
        M.algebra.odd_names))
    return result.simplify()
