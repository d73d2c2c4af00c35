'''Lie superbialgebra structures: the mixed super Jacobi identity, classical
r-matrices, their cobrackets and the graded Schouten bracket.

Dual structure constants are stored like ordinary ones:
``g_dual.f[i][j][k]`` is f~^{ij}_k, the coefficient of X~^k in
[X~^i, X~^j].
'''
import collections
import itertools
import logging

import sympy as sp

from superbialgebra import exc
from superbialgebra.graded import SuperMatrix, parity_mask, supertranspose
from superbialgebra.superalgebra import (
    LieSuperalgebra, adjoint, coadjoint, validate_structure)
from superbialgebra.utils import is_zero, scalar_from_json, scalar_to_json, \
    sign, simplify_scalar

_logger = logging.getLogger(__name__)

# reading of the supertranspose under which the matrix forms of the
# mixed Jacobi identity and of the r-matrix equation hold literally
MATRIX_FORM_CONVENTION = 'index'

DUAL_LABELS = ('X~1', 'X~2', 'X~3', 'X~4')


def _check_dims(g, g_dual):
    if g.parities != g_dual.parities:
        raise exc.DimensionMismatch('graded dimension', g.graded_dim,
                                    g_dual.graded_dim)


def _mixed_entry(g, gd, i, j, k, l):
    '''Residual of the mixed super Jacobi identity at (j, k; i, l)'''
    n = g.dim
    p = g.parities
    f, ft = g.f, gd.f
    total = 0
    for m in range(n):
        total += f[j][k][m] * ft[i][l][m]
        total -= f[m][k][i] * ft[m][l][j]
        total -= f[j][m][l] * ft[i][m][k]
        total -= sign(p[j] * p[l]) * f[j][m][i] * ft[m][l][k]
        total -= sign(p[i] * p[k]) * f[m][k][l] * ft[i][m][j]
    return sp.expand(total)


def _matrix_form_residual(g, gd, convention):
    '''The mixed identity written with the matrices
    (Xt^j)_pq = -f~^{jp}_q and (Y^l)_ab = -f^l_ab, one matrix per (i, j)'''
    n = g.dim
    mask = parity_mask(g.parities)
    xt = [SuperMatrix(sp.Matrix(n, n, lambda a, b, j=j: -gd.f[j][a][b]),
                      g.parities) for j in range(n)]
    ys = [coadjoint(g, i) for i in range(n)]
    xt_st = [supertranspose(m, convention) for m in xt]
    out = {}
    for i, j in itertools.product(range(n), repeat=2):
        s = sign(g.parities[i] * g.parities[j])
        lhs = sp.Matrix(n, n, lambda a, b: sum(
            gd.f[i][j][l] * g.f[a][b][l] for l in range(n)))
        rhs = (-(xt_st[j] * mask * ys[i]) + ys[j] * xt[i] -
               s * (ys[i] * xt[j]) + s * (xt_st[i] * mask * ys[j]))
        out[(i, j)] = (lhs - rhs.matrix).applyfunc(sp.expand)
    return out


class MixedResidual(object):
    '''Nonzero entries of the mixed super Jacobi residual, keyed by
    (i, j, k, l) for the identity with free indices j, k below and i, l
    above'''

    def __init__(self, entries, matrix_agrees):
        self.entries = entries
        self.matrix_agrees = matrix_agrees

    @property
    def is_zero(self):
        return not self.entries

    def __len__(self):
        return len(self.entries)

    def __repr__(self):  # pragma: nocover
        return 'MixedResidual({0} nonzero)'.format(len(self.entries))


def mixed_sji_residual(g, g_dual, cross_check=True,
                       convention=MATRIX_FORM_CONVENTION):
    _check_dims(g, g_dual)
    n = g.dim
    entries = {}
    for i, j, k, l in itertools.product(range(n), repeat=4):
        value = _mixed_entry(g, g_dual, i, j, k, l)
        if not is_zero(value):
            entries[(i, j, k, l)] = value
    agrees = True
    if cross_check:
        for (i, j), mat in _matrix_form_residual(g, g_dual,
                                                 convention).items():
            for a, b in itertools.product(range(n), repeat=2):
                index_value = entries.get((i, a, b, j), 0)
                if not is_zero(mat[a, b] - index_value):
                    agrees = False
    _logger.debug('mixed Jacobi (%s, %s): %d nonzero, matrix form %s',
                  g.name, g_dual.name, len(entries),
                  'agrees' if agrees else 'disagrees')
    return MixedResidual(entries, agrees)


def is_superbialgebra(g, g_dual):
    return (validate_structure(g, cross_check=False).passed and
            validate_structure(g_dual, cross_check=False).passed and
            mixed_sji_residual(g, g_dual, cross_check=False).is_zero)


def dual_unknowns(parities):
    '''(i, j, k) with i <= j of every dual constant allowed by grading and
    super antisymmetry'''
    n = len(parities)
    out = []
    for i, j in itertools.combinations_with_replacement(range(n), 2):
        if i == j and parities[i] == 0:
            continue
        for k in range(n):
            if (parities[i] + parities[j] + parities[k]) % 2 == 0:
                out.append((i, j, k))
    return out


def _dual_from_values(parities, unknowns, values, name):
    brackets = {}
    for (i, j, k), value in zip(unknowns, values):
        if value != 0:
            brackets.setdefault((i, j), {})[k] = value
    return LieSuperalgebra.from_brackets(name, parities, brackets,
                                         labels=DUAL_LABELS[:len(parities)]
                                         if len(parities) == 4 else None,
                                         one_based=False)


class ParametrizedFamily(object):
    '''Solution space of the linear part of the dual equations.

    ``algebra`` is the general solution with parameters ``parameters``;
    ``quadratic`` lists the dual super Jacobi residuals left to impose.'''

    def __init__(self, g, unknowns, matrix, basis, parameters, algebra,
                 quadratic):
        self.g = g
        self.unknowns = unknowns
        self.matrix = matrix
        self.basis = basis
        self.parameters = parameters
        self.algebra = algebra
        self.quadratic = quadratic

    @property
    def dimension(self):
        return len(self.basis)

    def vector_of(self, g_dual):
        return sp.Matrix([g_dual.f[i][j][k] for i, j, k in self.unknowns])

    def in_linear_family(self, g_dual):
        v = self.vector_of(g_dual)
        return all(is_zero(x) for x in (self.matrix * v))

    def contains(self, g_dual):
        return (self.in_linear_family(g_dual) and
                validate_structure(g_dual, cross_check=False).passed)

    def __repr__(self):  # pragma: nocover
        return 'ParametrizedFamily({0}, dim={1}, {2} quadratic)'.format(
            self.g.name, self.dimension, len(self.quadratic))


def solve_dual_linear(g):
    '''Exact null space of the mixed super Jacobi identity, linear in the
    dual constants'''
    unknowns = dual_unknowns(g.parities)
    symbols = [sp.Symbol('ft_{0}{1}_{2}'.format(i + 1, j + 1, k + 1))
               for i, j, k in unknowns]
    generic = _dual_from_values(g.parities, unknowns, symbols, 'generic')
    residual = mixed_sji_residual(g, generic, cross_check=False)
    equations = list(residual.entries.values())
    if equations:
        matrix, _ = sp.linear_eq_to_matrix(equations, symbols)
        matrix = matrix.rref()[0]
        matrix = matrix[[r for r in range(matrix.rows)
                         if any(x != 0 for x in matrix.row(r))], :]
    else:
        matrix = sp.zeros(1, len(symbols))
    basis = matrix.nullspace()
    parameters = sp.symbols('t1:{0}'.format(len(basis) + 1))
    values = sp.zeros(len(symbols), 1)
    for t, vec in zip(parameters, basis):
        values += t * vec
    algebra = _dual_from_values(g.parities, unknowns, list(values),
                                '{0} dual family'.format(g.name))
    quadratic = []
    for _, _, _, _, value in validate_structure(
            algebra, cross_check=False).jacobi:
        value = sp.factor(value)
        if value not in quadratic and -value not in quadratic:
            quadratic.append(value)
    _logger.debug('%s: linear dual family of dimension %d, %d quadratic '
                  'constraints', g.name, len(basis), len(quadratic))
    return ParametrizedFamily(g, unknowns, matrix, basis, parameters,
                              algebra, quadratic)


class RMatrix(object):
    '''An even 2-tensor r = r^{ij} X_i (x) X_j'''

    def __init__(self, r, parities):
        self.parities = tuple(parities)
        n = len(self.parities)
        self.r = sp.ImmutableMatrix(r)
        if self.r.shape != (n, n):
            raise exc.DimensionMismatch('r', (n, n), self.r.shape)
        for i, j in itertools.product(range(n), repeat=2):
            if (self.parities[i] + self.parities[j]) % 2 and \
                    not is_zero(self.r[i, j]):
                raise exc.ParityError(
                    'r-matrices are even: r^{0}{1} must vanish'.format(
                        i + 1, j + 1))

    @classmethod
    def zero(cls, parities):
        n = len(parities)
        return cls(sp.zeros(n, n), parities)

    @classmethod
    def from_terms(cls, parities, terms):
        '''``terms`` maps 1-based (i, j) to r^{ij}'''
        n = len(parities)
        m = sp.zeros(n, n)
        for (i, j), value in terms.items():
            m[i - 1, j - 1] += sp.sympify(value)
        return cls(m, parities)

    def __getitem__(self, key):
        return self.r[key]

    def __add__(self, other):
        return RMatrix(self.r + other.r, self.parities)

    def __sub__(self, other):
        return RMatrix(self.r - other.r, self.parities)

    def __rmul__(self, scalar):
        return RMatrix(scalar * self.r, self.parities)

    def __neg__(self):
        return RMatrix(-self.r, self.parities)

    def __eq__(self, other):
        if not isinstance(other, RMatrix):
            return NotImplemented
        return self.parities == other.parities and all(
            is_zero(x) for x in (self.r - other.r))

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def flip(self):
        '''r_21, the graded flip of r'''
        n = len(self.parities)
        p = self.parities
        return RMatrix(sp.Matrix(n, n, lambda i, j: sign(p[i] * p[j]) *
                                 self.r[j, i]), p)

    @property
    def skew_part(self):
        return sp.Rational(1, 2) * (self - self.flip())

    @property
    def symmetric_part(self):
        return sp.Rational(1, 2) * (self + self.flip())

    def is_skew(self):
        return all(is_zero(x) for x in self.symmetric_part.r)

    def subs(self, *args, **kwargs):
        return RMatrix(self.r.subs(*args, **kwargs), self.parities)

    def terms(self):
        n = len(self.parities)
        return dict(((i, j), self.r[i, j])
                    for i, j in itertools.product(range(n), repeat=2)
                    if not is_zero(self.r[i, j]))

    def to_json(self):
        items = []
        for (i, j), value in sorted(self.terms().items()):
            item = {'i': i + 1, 'j': j + 1}
            item.update(scalar_to_json(value))
            items.append(item)
        return items

    @classmethod
    def from_json(cls, items, parities):
        return cls.from_terms(parities, dict(
            ((item['i'], item['j']), scalar_from_json(item))
            for item in items))

    def __repr__(self):  # pragma: nocover
        return 'RMatrix({0})'.format(
            dict(((i + 1, j + 1), v) for (i, j), v in self.terms().items()))


def wedge(i, j, parities, coefficient=1):
    '''coefficient * X_i ^ X_j = X_i (x) X_j - (-1)^{ij} X_j (x) X_i, with
    0-based i, j'''
    n = len(parities)
    m = sp.zeros(n, n)
    m[i, j] += coefficient
    m[j, i] -= sign(parities[i] * parities[j]) * coefficient
    return RMatrix(m, parities)


def cobracket_tensor(g, r):
    '''D_k^{ab} = r^{mb} f^a_km + (-1)^{|k||a|} r^{am} f^b_km, the
    coefficients of (ad_X_k (x) 1 + 1 (x) ad_X_k) r'''
    n = g.dim
    p = g.parities
    f = g.f
    out = [[[sp.Integer(0)] * n for _ in range(n)] for _ in range(n)]
    for k, a, b in itertools.product(range(n), repeat=3):
        total = 0
        for m in range(n):
            if r[m, b] != 0 and f[k][m][a] != 0:
                total += r[m, b] * f[k][m][a]
            if r[a, m] != 0 and f[k][m][b] != 0:
                total += sign(p[k] * p[a]) * r[a, m] * f[k][m][b]
        out[k][a][b] = sp.expand(total)
    return out


def cocommutator_from_r(g, r, name=None, check=True):
    '''The dual algebra of the coboundary superbialgebra defined by a skew
    r-matrix'''
    if not r.is_skew():
        raise exc.NotSkewSymmetric(
            'cocommutator_from_r needs a super skew-symmetric r')
    n = g.dim
    p = g.parities
    d = cobracket_tensor(g, r)
    f = [[[sign(p[a] * p[b]) * d[k][a][b] for k in range(n)]
          for b in range(n)] for a in range(n)]
    dual = LieSuperalgebra(name or 'dual of {0}'.format(g.name), p, f,
                           labels=DUAL_LABELS if n == 4 else None,
                           convention=g.convention)
    if check:
        residual = mixed_sji_residual(g, dual, cross_check=False)
        if not residual.is_zero:
            raise exc.MixedJacobiViolation(g, dual, residual.entries)
    return dual


def cocommutator(g, r):
    '''delta(X_i) = (-1)^{jk} f~^{jk}_i X_j (x) X_k, as one matrix per i'''
    dual = cocommutator_from_r(g, r, check=False)
    n = g.dim
    p = g.parities
    return [sp.Matrix(n, n, lambda j, k: sign(p[j] * p[k]) * dual.f[j][k][i])
            for i in range(n)]


def cocommutator_matrix_form(g, r, convention=MATRIX_FORM_CONVENTION):
    '''Evaluates Y~_i = X_i^st r + P r X_i literally, P the row parity
    mask, and reads the dual constants off as f~^{ab}_i = -(Y~_i)_ab.

    Only the 'index' supertranspose makes this agree with
    cocommutator_from_r.'''
    n = g.dim
    rm = SuperMatrix(r.r, g.parities)
    mask = parity_mask(g.parities)
    f = [[[sp.Integer(0)] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        x = adjoint(g, i)
        y = supertranspose(x, convention) * rm + mask * rm * x
        for a, b in itertools.product(range(n), repeat=2):
            f[a][b][i] = sp.expand(-y[a, b])
    return LieSuperalgebra('matrix form ({0})'.format(convention),
                           g.parities, f, convention=g.convention)


def skew_unknowns(parities):
    '''Independent entries of a skew even r: (i, j) with i < j, plus (i, i)
    for odd i'''
    n = len(parities)
    out = []
    for i, j in itertools.combinations_with_replacement(range(n), 2):
        if (parities[i] + parities[j]) % 2:
            continue
        if i == j and parities[i] == 0:
            continue
        out.append((i, j))
    return out


def _skew_from_values(parities, unknowns, values):
    n = len(parities)
    m = sp.zeros(n, n)
    for (i, j), value in zip(unknowns, values):
        m[i, j] = value
        if i != j:
            m[j, i] = -sign(parities[i] * parities[j]) * value
    return RMatrix(m, parities)


FindRResult = collections.namedtuple('FindRResult', 'r kernel')


def find_r(g, g_dual):
    '''A skew r whose cobracket is g_dual, or None when the system is
    inconsistent. ``kernel`` holds the skew r with zero cobracket.'''
    _check_dims(g, g_dual)
    unknowns = skew_unknowns(g.parities)
    symbols = [sp.Symbol('r_{0}{1}'.format(i + 1, j + 1))
               for i, j in unknowns]
    generic = _skew_from_values(g.parities, unknowns, symbols)
    n = g.dim
    p = g.parities
    d = cobracket_tensor(g, generic.r)
    equations = []
    for k, a, b in itertools.product(range(n), repeat=3):
        eq = sp.expand(sign(p[a] * p[b]) * d[k][a][b] - g_dual.f[a][b][k])
        if eq != 0:
            equations.append(eq)
    if not equations:
        return FindRResult(RMatrix.zero(p), [])
    matrix, rhs = sp.linear_eq_to_matrix(equations, symbols)
    kernel = [_skew_from_values(p, unknowns, list(v))
              for v in matrix.nullspace()]
    try:
        solution, params = matrix.gauss_jordan_solve(rhs)
    except ValueError:
        _logger.debug('find_r(%s, %s): inconsistent', g.name, g_dual.name)
        return None
    solution = solution.subs(dict((t, 0) for t in params))
    r = _skew_from_values(p, unknowns, [simplify_scalar(x)
                                        for x in solution])
    _logger.debug('find_r(%s, %s): r=%r, kernel dim %d', g.name,
                  g_dual.name, r, len(kernel))
    return FindRResult(r, kernel)


def find_r_dual(g, g_dual):
    '''The companion solve: an r on the dual whose cobracket is g'''
    return find_r(g_dual, g)


def _add(tensor, key, value):
    if value != 0:
        tensor[key] = tensor.get(key, 0) + value


def _clean(tensor):
    out = {}
    for key, value in tensor.items():
        value = sp.expand(value)
        if not is_zero(value):
            out[key] = value
    return out


def schouten(g, r):
    '''[[r, r]] = [r12, r13] + [r12, r23] + [r13, r23] as a 3-tensor
    {(a, b, c): coefficient}, 0-based'''
    p = g.parities
    f = g.f
    n = g.dim
    terms = [((i, j), r[i, j]) for i, j in itertools.product(range(n),
                                                             repeat=2)
             if r[i, j] != 0]
    out = {}
    for ((i, j), rij), ((k, l), rkl) in itertools.product(terms, repeat=2):
        c = rij * rkl
        s13 = sign(p[i] * (p[k] + p[l]) + p[j] * p[l])
        s23 = sign((p[i] + p[j]) * (p[k] + p[l]))
        for m in range(n):
            _add(out, (m, j, l), s13 * c * f[i][k][m])
            _add(out, (i, m, l), s23 * c * f[j][k][m])
            _add(out, (i, k, m), s13 * c * f[j][l][m])
    return _clean(out)


def _graded_permutation_sign(items, parities, perm):
    s = 1
    for a, b in itertools.combinations(range(len(items)), 2):
        if perm.index(a) > perm.index(b):
            s *= -sign(parities[items[a]] * parities[items[b]])
    return s


def wedge_product(items, parities):
    '''X_a ^ X_b ^ ... as a tensor, the sum over graded-signed
    permutations with no 1/n! factor'''
    out = {}
    for perm in itertools.permutations(range(len(items))):
        key = tuple(items[k] for k in perm)
        _add(out, key, _graded_permutation_sign(items, parities, perm))
    return _clean(out)


def triple_wedge(a, b, c, parities):
    return wedge_product((a, b, c), parities)


def wedge_basis(parities, degree=3):
    '''Sorted index tuples whose wedge product is nonzero'''
    n = len(parities)
    out = []
    for items in itertools.combinations_with_replacement(range(n), degree):
        if wedge_product(items, parities):
            out.append(items)
    return out


def wedge3_coefficients(tensor, parities):
    '''Rewrites a 3-tensor in the triple-wedge basis.

    Returns ({sorted triple: coefficient}, remainder); the remainder is
    empty exactly when the tensor is totally graded-skew.'''
    coefficients = {}
    remainder = dict(tensor)
    for items in wedge_basis(parities, 3):
        value = tensor.get(items, 0)
        if is_zero(value):
            continue
        w = wedge_product(items, parities)
        coeff = sp.expand(value / w[items])
        coefficients[items] = coeff
        for key, x in w.items():
            _add(remainder, key, -coeff * x)
    return coefficients, _clean(remainder)


def act_on_tensor(g, k, tensor):
    '''ad_{X_k} applied to a tensor {index tuple: coefficient}, with the
    Koszul sign for every slot passed'''
    p = g.parities
    n = g.dim
    out = {}
    for key, value in tensor.items():
        passed = 0
        for slot, a in enumerate(key):
            s = sign(p[k] * passed)
            for m in range(n):
                c = g.f[k][a][m]
                if c != 0:
                    _add(out, key[:slot] + (m,) + key[slot + 1:],
                         s * c * value)
            passed += p[a]
    return _clean(out)


def matrix_tensor(r):
    return dict(((i, j), r[i, j]) for i, j in itertools.product(
        range(r.shape[0]), repeat=2) if r[i, j] != 0)


def is_ad_invariant(g, tensor):
    if isinstance(tensor, RMatrix):
        tensor = matrix_tensor(tensor.r)
    return all(not act_on_tensor(g, k, tensor) for k in range(g.dim))


def casimir(g=None):
    '''The invariant form of gl(1|1) in the nonstandard basis,
    X1 (x) X2 + X2 (x) X1 - X3 (x) X4 + X4 (x) X3'''
    if g is not None and g.parities != (0, 0, 1, 1):
        raise exc.DimensionMismatch('graded dimension', (2, 2), g.graded_dim)
    return RMatrix.from_terms((0, 0, 1, 1), {
        (1, 2): 1, (2, 1): 1, (3, 4): -1, (4, 3): 1})


Classification = collections.namedtuple(
    'Classification', 'kind schouten skew invariant_schouten '
    'invariant_symmetric invertible_symmetric')

TRIANGULAR = 'triangular'
QUASI_TRIANGULAR = 'quasi-triangular'
FACTORIZABLE = 'factorizable'
NONE = 'none'


def classify_r(g, r):
    s = schouten(g, r)
    skew = r.is_skew()
    invariant_schouten = is_ad_invariant(g, s)
    sym = r.symmetric_part
    invariant_symmetric = is_ad_invariant(g, sym)
    invertible = not is_zero(sym.r.det())
    if skew:
        if not s:
            kind = TRIANGULAR
        elif invariant_schouten:
            kind = QUASI_TRIANGULAR
        else:
            kind = NONE
    elif not s and invariant_symmetric:
        kind = FACTORIZABLE if invertible else QUASI_TRIANGULAR
    else:
        kind = NONE
    _logger.debug('classify_r: %s', kind)
    return Classification(kind, s, skew, invariant_schouten,
                          invariant_symmetric, invertible)


def act(C, r):
    '''(alpha (x) alpha) r for alpha(X_i) = sum_j C_ij X_j'''
    C = sp.Matrix(C.matrix if isinstance(C, SuperMatrix) else C)
    return RMatrix((C.T * sp.Matrix(r.r) * C).applyfunc(sp.expand),
                   r.parities)


def transport_cobracket(g_dual, C):
    '''Dual constants of the same cobracket in the basis
    Y_i = sum_j C_ij X_j'''
    C = sp.Matrix(C.matrix if isinstance(C, SuperMatrix) else C)
    inv = C.inv()
    n = g_dual.dim
    f = [[[sp.Integer(0)] * n for _ in range(n)] for _ in range(n)]
    for a, b, i in itertools.product(range(n), repeat=3):
        total = 0
        for j in range(n):
            if C[i, j] == 0:
                continue
            for q, s in itertools.product(range(n), repeat=2):
                x = g_dual.f[q][s][j]
                if x != 0:
                    total += C[i, j] * x * inv[q, a] * inv[s, b]
        f[a][b][i] = sp.expand(total)
    return LieSuperalgebra(g_dual.name, g_dual.parities, f,
                           labels=g_dual.labels,
                           convention=g_dual.convention)


def proposition_one_holds(g, r, C):
    '''The cobracket of (alpha (x) alpha) r, read in the alpha basis, is
    the cobracket of r'''
    moved = cocommutator_from_r(g, act(C, r), check=False)
    return transport_cobracket(moved, C) == cocommutator_from_r(
        g, r, check=False)
