# -*- coding: utf-8 -*-
'''An integrable system on the superunit disc OSp(1|2)/U(1).

The disc chart is ``(z, zb | theta, thetas)`` with ``zb`` the conjugate of
``z`` and ``thetas`` the adjoint of ``theta``; ``z`` and ``zb`` are kept
as independent symbols. The dynamical variables realize the nonstandard
gl(1|1) under the Poisson superbracket of the supersymplectic form, and
the supertraces of powers of the gl(1|1)-valued function Q built from the
triangular r-matrix are the constants of motion.
'''
import collections
import itertools
import logging

import sympy as sp

from superbialgebra import exc, golden
from superbialgebra.bialgebra import wedge
from superbialgebra.catalog import PARITIES, gl11
from superbialgebra.grassmann import GrassmannAlgebra, GrassmannMatrix, \
    superinverse
from superbialgebra.superalgebra import NONSTANDARD
from superbialgebra.utils import is_zero, sign, simplify_scalar

_logger = logging.getLogger(__name__)

TAU, E, N, CASIMIR = golden.TAU, golden.E, golden.N, golden.CASIMIR
ALPHA0, BETA0 = sp.symbols('alpha0 beta0')

DISC = GrassmannAlgebra(('z', 'zb'), ('theta', 'thetas'), name='disc')
REAL = GrassmannAlgebra(('X', 'Y'), ('psip', 'psim'), name='real')

CHARTS = {'disc': DISC, 'real': REAL}


def _coords(G=DISC):
    return (G.coordinate('z'), G.coordinate('zb'), G.coordinate('theta'),
            G.coordinate('thetas'))


def omega_lower():
    '''omega_{mu nu} read off the two-form, with
    omega = (-1)^{mu nu}/2 omega_{mu nu} dx^mu ^ dx^nu'''
    z, zb, th, ths = _coords()
    b = 1 - DISC.symbol('z') * DISC.symbol('zb')
    zz = z * zb
    # dz ^ dzb
    A = (-2 * sp.I * TAU / b ** 2) * (
        DISC.one() + sp.Rational(1, 2) * (ths * th) *
        (DISC.one() + zz) * (1 / b))
    # -(coefficient of dtheta ^ dthetas)
    odd = DISC.scalar(-sp.I * TAU / b)
    # dz ^ dthetas and dtheta ^ dzb
    mixed_z = (sp.I * TAU / b ** 2) * (th * zb)
    mixed_zb = (-sp.I * TAU / b ** 2) * (z * ths)
    zero = DISC.zero()
    rows = [
        [zero, A, zero, mixed_z],
        [-A, zero, -mixed_zb, zero],
        [zero, mixed_zb, zero, odd],
        [-mixed_z, zero, odd, zero],
    ]
    return GrassmannMatrix(DISC, rows, PARITIES)


def omega_inverse():
    '''The printed omega^{mu nu}'''
    return GrassmannMatrix(DISC, golden.omega_inverse_printed(DISC),
                           PARITIES)


OmegaReport = collections.namedtuple('OmegaReport', 'computed ratios')


def omega_report():
    '''Superinverse of omega_lower next to the printed inverse, as the
    ratio printed / computed of each nonzero body entry'''
    computed = superinverse(omega_lower())
    printed = omega_inverse()
    ratios = {}
    for a, b in itertools.product(range(4), repeat=2):
        ours, theirs = computed[a, b].body(), printed[a, b].body()
        if is_zero(ours) and is_zero(theirs):
            continue
        if is_zero(ours):
            ratios[(a, b)] = sp.zoo
            continue
        ratios[(a, b)] = simplify_scalar(theirs / ours)
    if len(set(ratios.values())) > 1:
        _logger.warning('printed inverse symplectic form is not a multiple '
                        'of the computed one: %s', ratios)
    return OmegaReport(computed, ratios)


def poisson_disc(f, g, omega=None):
    '''{f, g} = (f d<-_mu) omega^{mu nu} (d->_nu g)'''
    omega = omega or omega_inverse()
    names = DISC.coordinates
    out = DISC.zero()
    right = [f.right_deriv(c) for c in names]
    left = [g.left_deriv(c) for c in names]
    for mu, nu in itertools.product(range(4), repeat=2):
        w = omega[mu, nu]
        if w.is_zero() or right[mu].is_zero() or left[nu].is_zero():
            continue
        out = out + right[mu] * w * left[nu]
    return out.simplify()


def dynamical_variables(alpha0=ALPHA0, beta0=BETA0):
    '''S_1 .. S_4 of the special solution, in the disc chart'''
    z, zb, th, ths = _coords()
    b = 1 - DISC.symbol('z') * DISC.symbol('zb')
    S1 = (2 * sp.I * TAU / b) * (ths * th)
    S2 = (alpha0 * beta0 / (2 * sp.I * TAU)) * (
        DISC.scalar(b) + sp.Rational(1, 2) * (z * zb) * (th * ths))
    S3 = alpha0 * ths
    S4 = beta0 * th
    return [S1, S2, S3, S4]


def impose_casimir(value):
    '''alpha0 beta0 = i C'''
    return value.subs(BETA0, sp.I * CASIMIR / ALPHA0)


def verify_pde_system(S=None, omega=None):
    '''(i, j, residual) for every 1-based pair where
    {S_i, S_j} != f_ij^k S_k in nonstandard gl(1|1)'''
    S = S or dynamical_variables()
    g = gl11(NONSTANDARD)
    out = []
    for i, j in itertools.combinations_with_replacement(range(4), 2):
        lhs = poisson_disc(S[i], S[j], omega)
        rhs = DISC.zero()
        for k in range(4):
            if g.f[i][j][k] != 0:
                rhs = rhs + g.f[i][j][k] * S[k]
        residual = (lhs - rhs).simplify()
        if not residual.is_zero():
            out.append((i + 1, j + 1, residual))
    _logger.debug('Poisson relations of S: %d failures', len(out))
    return out


# -- the gl(1|1) representation and Q

def gl11_representation(e=E, n=N):
    '''The (2|2)-dimensional representation, rows of parity (0, 0, 1, 1)'''
    i = sp.I
    X1 = sp.Matrix([[n, 0, 0, 0], [0, n, 0, 0], [0, 0, n - 1, 0],
                    [1, 0, -1, n + 1]])
    X2 = sp.Matrix([[0, 0, 0, 0], [-i * e, i * e, 0, 0], [0, 0, 0, 0],
                    [i * e, 0, -i * e / 2, i * e]])
    X3 = sp.Matrix([[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0],
                    [1, -1, 0, 0]])
    X4 = sp.Matrix([[0, 0, 0, 0], [-i * e, 0, i * e / 2, -i * e],
                    [0, 0, 0, 0], [0, 0, 0, 0]])
    return [X1, X2, X3, X4]


def representation_check(reps=None):
    '''(i, j) pairs, 1-based, where X_i X_j - (-1)^{ij} X_j X_i differs
    from f_ij^k X_k in nonstandard gl(1|1)'''
    reps = reps or gl11_representation()
    g = gl11(NONSTANDARD)
    out = []
    for i, j in itertools.combinations_with_replacement(range(4), 2):
        s = sign(PARITIES[i] * PARITIES[j])
        lhs = reps[i] * reps[j] - s * reps[j] * reps[i]
        rhs = sp.zeros(4, 4)
        for k in range(4):
            rhs += g.f[i][j][k] * reps[k]
        if not all(is_zero(x) for x in (lhs - rhs)):
            out.append((i + 1, j + 1))
    return out


def triangular_r():
    '''X1 ^ X2, the r-matrix of the triangular coboundary'''
    return wedge(0, 1, PARITIES)


def lie_valued_Q(S=None, r=None, reps=None):
    '''Q = (-1)^{|j|} S_i r^{ij} X_j as a Grassmann matrix'''
    S = S or dynamical_variables()
    r = r or triangular_r()
    reps = reps or gl11_representation()
    G = S[0].algebra
    rows = [[G.zero() for _ in range(4)] for _ in range(4)]
    for i, j in itertools.product(range(4), repeat=2):
        c = r[i, j]
        if c == 0:
            continue
        coeff = sign(PARITIES[j]) * c
        for a, b in itertools.product(range(4), repeat=2):
            if reps[j][a, b] != 0:
                rows[a][b] = rows[a][b] + S[i] * (coeff * reps[j][a, b])
    return GrassmannMatrix(G, rows, PARITIES)


def motion_invariants(kmax=3, Q=None):
    '''{k: Str Q^k} for 1 <= k <= kmax

    :raises ParameterOutOfRange: when kmax < 1
    '''
    if kmax < 1:
        raise exc.ParameterOutOfRange('Q', 'kmax', kmax, 'kmax >= 1')
    Q = Q or lie_valued_Q()
    out = collections.OrderedDict()
    power = Q
    for k in range(1, kmax + 1):
        if k > 1:
            power = power * Q
        out[k] = power.supertrace().simplify()
    return out


def to_real_chart(F):
    '''z = X + iY, theta = psip + i psim, thetas = -i psip - psim'''
    X, Y = REAL.coordinate('X'), REAL.coordinate('Y')
    psip, psim = REAL.coordinate('psip'), REAL.coordinate('psim')
    images = {'z': X + sp.I * Y, 'zb': X - sp.I * Y,
              'theta': psip + sp.I * psim,
              'thetas': -sp.I * psip - psim}
    return F.compose(REAL, images).simplify()


def compare_printed_invariants(kmax=3):
    '''(k, computed, printed) where the real-chart invariants differ'''
    printed = golden.invariants_printed(REAL)
    computed = motion_invariants(kmax)
    out = []
    for k in sorted(printed):
        if k > kmax:
            continue
        ours = to_real_chart(impose_casimir(computed[k]))
        if ours != printed[k]:
            out.append((k, ours, printed[k]))
    if out:
        _logger.warning('%d constants of motion differ from the printed '
                        'ones', len(out))
    return out


def involution_check(invariants=None):
    '''(j, k, bracket) for every pair not in involution'''
    invariants = invariants or motion_invariants(3)
    out = []
    for j, k in itertools.combinations(sorted(invariants), 2):
        value = poisson_disc(invariants[j], invariants[k])
        if not value.is_zero():
            out.append((j, k, value))
    return out


def independence_evidence(invariants=None, point=None):
    '''Rank of the Jacobian of the bodies, and of every odd-monomial
    coefficient, with respect to the real even coordinates at a sample
    point. Generic-point evidence only.'''
    invariants = invariants or motion_invariants(3)
    X, Y = REAL.symbol('X'), REAL.symbol('Y')
    point = point or {X: sp.Rational(1, 3), Y: sp.Rational(1, 5),
                      TAU: 1, E: 1, N: 2, CASIMIR: 1, ALPHA0: 1}
    rows = {}
    for k, value in invariants.items():
        if k < 2:
            continue
        real = to_real_chart(impose_casimir(value))
        for mono, coeff in real.terms.items():
            rows.setdefault(mono, []).append(
                [sp.diff(coeff, v).subs(point) for v in (X, Y)])
    return dict((mono, sp.Matrix(grad).rank()) for mono, grad in
                rows.items())

