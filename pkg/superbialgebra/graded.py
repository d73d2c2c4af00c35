'''Z2-graded linear algebra over exact sympy scalars.

Indices carry a parity, 0 for even and 1 for odd. A SuperMatrix keeps a
parity tuple for its rows and for its columns; an entry (a, b) of a
homogeneous matrix of parity p is nonzero only when
|a| + |b| = p (mod 2).
'''
import itertools
import logging

import sympy as sp

from superbialgebra import exc
from superbialgebra.utils import is_zero, sign

_logger = logging.getLogger(__name__)

H = sp.Symbol('h')
DEFAULT_ORDER = 8

# The one switch point for the supertranspose convention.
SUPERTRANSPOSE = 'dewitt'
CONVENTIONS = ('dewitt', 'index')


class SuperMatrix(object):
    '''An immutable matrix with graded row and column index sets'''

    def __init__(self, entries, row_parities, col_parities=None):
        matrix = sp.ImmutableMatrix(entries)
        row_parities = tuple(int(p) % 2 for p in row_parities)
        if col_parities is None:
            col_parities = row_parities
        col_parities = tuple(int(p) % 2 for p in col_parities)
        if matrix.rows != len(row_parities):
            raise exc.DimensionMismatch('rows', len(row_parities),
                                        matrix.rows)
        if matrix.cols != len(col_parities):
            raise exc.DimensionMismatch('cols', len(col_parities),
                                        matrix.cols)
        self.matrix = matrix
        self.row_parities = row_parities
        self.col_parities = col_parities

    @classmethod
    def identity(cls, parities):
        n = len(parities)
        return cls(sp.eye(n), parities)

    @classmethod
    def zeros(cls, row_parities, col_parities=None):
        col_parities = row_parities if col_parities is None else col_parities
        return cls(sp.zeros(len(row_parities), len(col_parities)),
                   row_parities, col_parities)

    @classmethod
    def diag(cls, values, parities):
        return cls(sp.diag(*values), parities)

    @classmethod
    def unit(cls, a, b, parities):
        '''The matrix unit E_ab'''
        n = len(parities)
        m = sp.zeros(n, n)
        m[a, b] = 1
        return cls(m, parities)

    @property
    def shape(self):
        return self.matrix.shape

    @property
    def is_square(self):
        return self.row_parities == self.col_parities

    def __getitem__(self, key):
        return self.matrix[key]

    def entries(self):
        '''(row, col, value) for every nonzero entry'''
        rows, cols = self.shape
        for a in range(rows):
            for b in range(cols):
                value = self.matrix[a, b]
                if value != 0:
                    yield a, b, value

    @property
    def parity(self):
        '''0 or 1 for homogeneous matrices, None for mixed ones. The zero
        matrix counts as even.'''
        seen = set()
        for a, b, value in self.entries():
            if not is_zero(value):
                seen.add((self.row_parities[a] + self.col_parities[b]) % 2)
        if len(seen) > 1:
            return None
        return seen.pop() if seen else 0

    def graded_part(self, p):
        '''The even (p=0) or odd (p=1) component'''
        rows, cols = self.shape
        m = sp.zeros(rows, cols)
        for a, b, value in self.entries():
            if (self.row_parities[a] + self.col_parities[b]) % 2 == p:
                m[a, b] = value
        return SuperMatrix(m, self.row_parities, self.col_parities)

    def _check_same_shape(self, other):
        if self.row_parities != other.row_parities:
            raise exc.DimensionMismatch('rows', self.row_parities,
                                        other.row_parities)
        if self.col_parities != other.col_parities:
            raise exc.DimensionMismatch('cols', self.col_parities,
                                        other.col_parities)

    def __add__(self, other):
        self._check_same_shape(other)
        return SuperMatrix(self.matrix + other.matrix,
                           self.row_parities, self.col_parities)

    def __sub__(self, other):
        self._check_same_shape(other)
        return SuperMatrix(self.matrix - other.matrix,
                           self.row_parities, self.col_parities)

    def __neg__(self):
        return SuperMatrix(-self.matrix, self.row_parities, self.col_parities)

    def __mul__(self, other):
        if isinstance(other, SuperMatrix):
            if self.col_parities != other.row_parities:
                raise exc.DimensionMismatch(
                    'inner', self.col_parities, other.row_parities)
            return SuperMatrix(self.matrix * other.matrix,
                               self.row_parities, other.col_parities)
        return SuperMatrix(self.matrix * other,
                           self.row_parities, self.col_parities)

    def __rmul__(self, scalar):
        return SuperMatrix(scalar * self.matrix,
                           self.row_parities, self.col_parities)

    def __pow__(self, k):
        result = SuperMatrix.identity(self.row_parities)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, SuperMatrix):
            return NotImplemented
        if (self.row_parities != other.row_parities or
                self.col_parities != other.col_parities):
            return False
        return (self - other).is_zero()

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def is_zero(self):
        return all(is_zero(value) for _, _, value in self.entries())

    def applyfunc(self, func):
        return SuperMatrix(self.matrix.applyfunc(func),
                           self.row_parities, self.col_parities)

    def subs(self, *args, **kwargs):
        return SuperMatrix(self.matrix.subs(*args, **kwargs),
                           self.row_parities, self.col_parities)

    def simplify(self):
        return self.applyfunc(
            lambda e: sp.expand(sp.powsimp(sp.expand(e), combine='exp')))

    def inverse(self):
        if not self.is_square:
            raise exc.DimensionMismatch('cols', self.row_parities,
                                        self.col_parities)
        if is_zero(self.matrix.det()):
            raise exc.SingularMatrix(self.matrix)
        return SuperMatrix(self.matrix.inv(), self.col_parities,
                           self.row_parities)

    def __repr__(self):  # pragma: nocover
        return 'SuperMatrix({0}, rows={1}, cols={2})'.format(
            self.matrix.tolist(), self.row_parities, self.col_parities)


def product_parities(left, right):
    '''Parities of the i-major product index set (i, j) -> i*len(right)+j'''
    return tuple((p + q) % 2 for p in left for q in right)


def gtensor(A, B):
    '''Graded tensor product of supermatrices,

        (A (x) B)_{ij;kl} = (-1)^{|j|(|i|+|k|)} A_ik B_jl

    on the product index set ordered i-major.'''
    rows = product_parities(A.row_parities, B.row_parities)
    cols = product_parities(A.col_parities, B.col_parities)
    m = sp.zeros(len(rows), len(cols))
    nb_rows, nb_cols = B.shape
    for i, k, a_ik in A.entries():
        for j, l, b_jl in B.entries():
            s = sign(B.row_parities[j] *
                     (A.row_parities[i] + A.col_parities[k]))
            m[i * nb_rows + j, k * nb_cols + l] = s * a_ik * b_jl
    return SuperMatrix(m, rows, cols)


def graded_swap(parities):
    '''The graded flip P(v_i (x) v_j) = (-1)^{|i||j|} v_j (x) v_i on the
    square of a graded space'''
    n = len(parities)
    prod = product_parities(parities, parities)
    m = sp.zeros(n * n, n * n)
    for i, j in itertools.product(range(n), repeat=2):
        m[j * n + i, i * n + j] = sign(parities[i] * parities[j])
    return SuperMatrix(m, prod)


def supertranspose(A, convention=None):
    '''Supertranspose of a supermatrix.

    'dewitt' (default): (A^st)_ab = (-1)^{|a|(|a|+|b|)} A_ba, so the block
    matrix [[P, Q], [R, S]] goes to [[P^t, R^t], [-Q^t, S^t]].

    'index': (A^st)_ab = (-1)^{|a||b|} A_ba. It differs from 'dewitt' by
    the row parity mask; the matrix forms of the mixed Jacobi identity and
    of the cobracket of an r-matrix hold literally in this reading.
    '''
    convention = convention or SUPERTRANSPOSE
    if convention not in CONVENTIONS:
        raise ValueError('Unknown supertranspose convention {0!r}'.format(
            convention))
    rows, cols = A.shape
    m = sp.zeros(cols, rows)
    for b, a, value in A.entries():
        pa, pb = A.col_parities[a], A.row_parities[b]
        if convention == 'index':
            s = sign(pa * pb)
        else:
            s = sign(pa * (pa + pb))
        m[a, b] = s * value
    return SuperMatrix(m, A.col_parities, A.row_parities)


def parity_mask(parities):
    '''diag((-1)^{|a|})'''
    return SuperMatrix.diag([sign(p) for p in parities], parities)


def supertrace(A, with_flag=False):
    '''Trace of the even block minus trace of the odd block.

    Odd matrices have supertrace 0; they are answered with 0 and, when
    ``with_flag`` is set, a True flag next to the value.'''
    if not A.is_square:
        raise exc.DimensionMismatch('cols', A.row_parities, A.col_parities)
    odd = A.parity == 1 and not A.is_zero()
    if odd:
        _logger.warning('supertrace of an odd matrix requested')
        value = sp.Integer(0)
    else:
        value = sp.Add(*[sign(p) * A.matrix[a, a]
                         for a, p in enumerate(A.row_parities)])
    if with_flag:
        return value, odd
    return value


def bracket(A, B):
    '''Graded commutator AB - (-1)^{|A||B|} BA of homogeneous matrices'''
    pa, pb = A.parity, B.parity
    if pa is None or pb is None:
        raise exc.ParityError('graded commutator needs homogeneous matrices')
    return A * B - sign(pa * pb) * (B * A)


def _is_diagonal(m):
    return all(m[a, b] == 0 for a in range(m.rows) for b in range(m.cols)
               if a != b)


def _nilpotency_index(m):
    power = m
    for k in range(1, m.rows + 1):
        if power.is_zero_matrix:
            return k
        power = (power * m).applyfunc(sp.expand)
    return None


def expm_exact(A):
    '''Exact exponential of a diagonal matrix, a nilpotent matrix or a
    commuting sum of the two. Exponentials of scalars stay symbolic e^c.

    :raises CannotExponentiate: for any other matrix
    '''
    m = sp.Matrix(A.matrix)
    if not A.is_square:
        raise exc.DimensionMismatch('cols', A.row_parities, A.col_parities)
    diag = sp.diag(*[m[a, a] for a in range(m.rows)])
    nil = m - diag
    k = _nilpotency_index(nil)
    if k is None or not (diag * nil - nil * diag).applyfunc(
            sp.expand).is_zero_matrix:
        _logger.warning('no exact exponential for a %dx%d matrix',
                        m.rows, m.cols)
        raise exc.CannotExponentiate(A.matrix)
    exp_diag = sp.diag(*[sp.exp(diag[a, a]) for a in range(m.rows)])
    exp_nil = sp.zeros(m.rows, m.cols)
    power = sp.eye(m.rows)
    for j in range(k):
        exp_nil += power / sp.factorial(j)
        power = power * nil
    return SuperMatrix((exp_diag * exp_nil).applyfunc(sp.expand),
                       A.row_parities)


def h_degree(term, h=H):
    coeff, power = term.as_coeff_exponent(h)
    if coeff.has(h):
        raise ValueError('{0} is not polynomial in {1}'.format(term, h))
    return int(power)


def truncate_h(expr, order=DEFAULT_ORDER, h=H):
    '''Drops every term of h-degree above ``order``'''
    expr = sp.expand(expr)
    if not expr.has(h):
        return expr
    return sp.Add(*[t for t in sp.Add.make_args(expr)
                    if h_degree(t, h) <= order])
