# -*- coding: utf-8 -*-
'''Printed catalogs of (2|2) Lie superalgebras and of the duals of gl(1|1).

All structure constants are in the standard basis, with the factor i in
odd-odd brackets. Brackets are written 1-based, ``(i, j): {k: c}`` meaning
``[X_i, X_j] = c X_k``.
'''
import collections
import logging

import sympy as sp

from superbialgebra import exc
from superbialgebra.superalgebra import LieSuperalgebra, NONSTANDARD, \
    to_nonstandard
from superbialgebra.utils import normalize_label

_logger = logging.getLogger(__name__)

I = sp.I
HALF = sp.Rational(1, 2)
PARITIES = (0, 0, 1, 1)
DUAL_LABELS = ('X~1', 'X~2', 'X~3', 'X~4')

# sample points for parameter sweeps
GRID = (sp.Rational(1, 2), sp.Rational(-1, 2), sp.Rational(1, 3),
        sp.Rational(-2, 3), sp.Rational(3, 4))


Constraint = collections.namedtuple('Constraint', 'text check')


def _nonzero(v):
    return v != 0


Entry = collections.namedtuple(
    'Entry', 'label table params constraints build aliases comment')


def _entry(label, table, build, params=(), constraints=(), aliases=(),
           comment=''):
    return Entry(label, table, tuple(params), tuple(constraints), build,
                 tuple(aliases), comment)


ALGEBRAS = [
    # trivial indecomposable
    _entry('D5', 'I', lambda: {
        (1, 3): {3: 1}, (1, 4): {4: 1}, (2, 4): {3: 1}}),
    _entry('D6', 'I', lambda: {
        (1, 3): {3: 1}, (1, 4): {4: 1}, (2, 3): {4: -1}, (2, 4): {3: 1}}),
    _entry('D1_pq', 'I', lambda p, q: {
        (1, 2): {2: 1}, (1, 3): {3: p}, (1, 4): {4: q}},
        params=('p', 'q'),
        constraints=[Constraint('pq != 0', lambda p, q: p * q != 0),
                     Constraint('p >= q', lambda p, q: p >= q)]),
    _entry('D8_p', 'I', lambda p: {
        (1, 2): {2: 1}, (1, 3): {3: p}, (1, 4): {3: 1, 4: p}},
        params=('p',), constraints=[Constraint('p != 0', _nonzero)]),
    _entry('D9_pq', 'I', lambda p, q: {
        (1, 2): {2: 1}, (1, 3): {3: p, 4: -q}, (1, 4): {3: q, 4: p}},
        params=('p', 'q'),
        constraints=[Constraint('q > 0', lambda p, q: q > 0)]),
    _entry('D10_p', 'I', lambda p: {
        (1, 2): {2: 1}, (1, 3): {3: p + 1}, (1, 4): {4: p}, (2, 4): {3: 1}},
        params=('p',)),
    # nontrivial indecomposable
    _entry('(D7_1/2,1/2)^1', 'II', lambda: {
        (1, 2): {2: 1}, (1, 3): {3: HALF}, (1, 4): {4: HALF},
        (3, 3): {2: I}, (4, 4): {2: I}}, aliases=('D7half1',)),
    _entry('(D7_1/2,1/2)^2', 'II', lambda: {
        (1, 2): {2: 1}, (1, 3): {3: HALF}, (1, 4): {4: HALF},
        (3, 3): {2: I}, (4, 4): {2: -I}}, aliases=('D7half2',)),
    _entry('(D7_1/2,1/2)^3', 'II', lambda: {
        (1, 2): {2: 1}, (1, 3): {3: HALF}, (1, 4): {4: HALF},
        (3, 3): {2: I}}, aliases=('D7half3',)),
    _entry('(D7_1-p,p)', 'II', lambda p: {
        (1, 2): {2: 1}, (1, 3): {3: p}, (1, 4): {4: 1 - p}, (3, 4): {2: I}},
        params=('p',),
        constraints=[Constraint('p <= 1/2', lambda p: p <= HALF)],
        aliases=('D7_p',)),
    _entry('(D8_1/2)', 'II', lambda: {
        (1, 2): {2: 1}, (1, 3): {3: HALF}, (1, 4): {3: 1, 4: HALF},
        (4, 4): {2: I}}, aliases=('D8half',)),
    _entry('(D9_1/2,p)', 'II', lambda p: {
        (1, 2): {2: 1}, (1, 3): {3: HALF, 4: -p}, (1, 4): {3: p, 4: HALF},
        (3, 3): {2: I}, (4, 4): {2: I}},
        params=('p',), constraints=[Constraint('p > 0', lambda p: p > 0)],
        aliases=('D9half_p',)),
    _entry('(D10_0)^1', 'II', lambda: {
        (1, 2): {2: 1}, (1, 3): {3: 1}, (2, 4): {3: 1},
        (4, 4): {1: I}, (3, 4): {2: -I * HALF}}),
    _entry('(D10_0)^2', 'II', lambda: {
        (1, 2): {2: 1}, (1, 3): {3: 1}, (2, 4): {3: 1},
        (4, 4): {1: -I}, (3, 4): {2: I * HALF}}),
    _entry('(2A11+2A)^2', 'II', lambda: {
        (3, 3): {1: I}, (4, 4): {2: I}, (3, 4): {1: I}}),
    _entry('(2A11+2A)^3_p', 'II', lambda p: {
        (3, 3): {1: I}, (4, 4): {2: I}, (3, 4): {1: I * p, 2: I * p}},
        params=('p',), constraints=[Constraint('p > 0', lambda p: p > 0)],
        comment='Nilpotent'),
    _entry('(2A11+2A)^4_p', 'II', lambda p: {
        (3, 3): {1: I}, (4, 4): {2: I}, (3, 4): {1: I * p, 2: -I * p}},
        params=('p',), constraints=[Constraint('p > 0', lambda p: p > 0)],
        comment='Nilpotent'),
    _entry('(C1_1+A)', 'II', lambda: {
        (1, 2): {2: 1}, (1, 3): {3: 1}, (3, 4): {2: I}}),
    _entry('(C2_-1+A)', 'II', lambda: {
        (1, 3): {3: 1}, (1, 4): {4: -1}, (3, 4): {2: I}},
        aliases=('gl11', 'gl(1|1)'), comment='Jordan-Wigner quantization'),
    _entry('(C3+A)', 'II', lambda: {
        (1, 4): {3: 1}, (4, 4): {2: I}}, comment='Nilpotent'),
    _entry('(C5_0+A)', 'II', lambda: {
        (1, 3): {4: -1}, (1, 4): {3: 1}, (3, 3): {2: I}, (4, 4): {2: I}}),
    # decomposable
    _entry('I(2,2)', 'III', lambda: {}, aliases=('I22', 'abelian')),
    _entry('B+B', 'III', lambda: {(1, 3): {3: 1}, (2, 4): {4: 1}}),
    _entry('C1_p+A', 'III', lambda p: {(1, 2): {2: 1}, (1, 3): {3: p}},
           params=('p',), constraints=[Constraint('p != 0', _nonzero)]),
    _entry('C2_p+A11', 'III', lambda p: {(1, 3): {3: 1}, (1, 4): {4: p}},
           params=('p',),
           constraints=[Constraint('0 < |p| <= 1',
                                   lambda p: 0 < abs(p) <= 1)]),
    _entry('L+2A', 'III', lambda: {(1, 2): {2: 1}}),
    _entry('B+A+A11', 'III', lambda: {(1, 3): {3: 1}}),
    _entry('C3+A11', 'III', lambda: {(1, 4): {3: 1}}, comment='Nilpotent'),
    _entry('C4+A11', 'III', lambda: {(1, 3): {3: 1}, (1, 4): {3: 1, 4: 1}}),
    _entry('C5_p+A11', 'III', lambda p: {
        (1, 3): {3: p, 4: -1}, (1, 4): {3: 1, 4: p}},
        params=('p',), constraints=[Constraint('p >= 0', lambda p: p >= 0)]),
    _entry('(2A11+2A)^0', 'III', lambda: {(3, 3): {1: I}},
           comment='Nilpotent'),
    _entry('(2A11+2A)^1', 'III', lambda: {(3, 3): {1: I}, (4, 4): {2: I}},
           comment='Nilpotent'),
    _entry('B+(A11+A)', 'III', lambda: {(1, 3): {3: 1}, (4, 4): {2: I}}),
    _entry('(A11+2A)^1+A11', 'III', lambda: {
        (3, 3): {1: I}, (4, 4): {1: I}}, comment='Nilpotent'),
    _entry('(A11+2A)^2+A11', 'III', lambda: {
        (3, 3): {1: I}, (4, 4): {1: -I}}, comment='Nilpotent'),
    _entry('(C1_1/2+A)', 'III', lambda: {
        (1, 2): {2: 1}, (1, 3): {3: HALF}, (3, 3): {2: I}}),
]


# duals of gl(1|1); eps takes the values +1 and -1
DUALS = [
    _entry('I(2,2)', 'IV', lambda: {}, aliases=('I22',)),
    _entry('BAA.i', 'IV', lambda: {(2, 3): {3: 1}},
           aliases=(u'B⊕A⊕A11.i',)),
    _entry('BAA.ii', 'IV', lambda: {(2, 4): {4: 1}},
           aliases=(u'B⊕A⊕A11.ii',)),
    _entry('C2_1.i', 'IV', lambda: {(2, 3): {3: 1}, (2, 4): {4: 1}}),
    _entry('C2_-1.ii', 'IV', lambda: {(2, 3): {3: 1}, (2, 4): {4: -1}}),
    _entry('C2_p.i', 'IV', lambda p: {(2, 3): {3: 1}, (2, 4): {4: p}},
           params=('p',),
           constraints=[Constraint('0 < |p| < 1', lambda p: 0 < abs(p) < 1)]),
    _entry('C2_1/p.ii', 'IV', lambda p: {(2, 3): {3: 1}, (2, 4): {4: 1 / p}},
           params=('p',),
           constraints=[Constraint('0 < |p| < 1', lambda p: 0 < abs(p) < 1)]),
    _entry('BAA_eps.i', 'IV', lambda eps: {
        (2, 4): {4: eps}, (2, 3): {4: eps * HALF}, (3, 3): {1: I * eps}},
        params=('eps',), constraints=[Constraint('eps = +-1',
                                                 lambda e: e in (1, -1))]),
    _entry('BAA_eps.ii', 'IV', lambda eps: {
        (2, 3): {3: eps}, (2, 4): {3: -eps * HALF}, (4, 4): {1: I * eps}},
        params=('eps',), constraints=[Constraint('eps = +-1',
                                                 lambda e: e in (1, -1))]),
    _entry('C3A_eps.i', 'IV', lambda eps: {
        (2, 4): {3: eps * HALF}, (4, 4): {1: -I * eps}},
        params=('eps',), constraints=[Constraint('eps = +-1',
                                                 lambda e: e in (1, -1))],
        aliases=('(C3+A)_eps.i',), comment='Nilpotent'),
    _entry('C3A_eps.ii', 'IV', lambda eps: {
        (2, 3): {4: eps * HALF}, (3, 3): {1: I * eps}},
        params=('eps',), constraints=[Constraint('eps = +-1',
                                                 lambda e: e in (1, -1))],
        aliases=('(C3+A)_eps.ii',), comment='Nilpotent'),
    _entry('C2_-1A.i', 'IV', lambda: {
        (2, 3): {4: HALF}, (2, 4): {3: HALF}, (3, 3): {1: I},
        (4, 4): {1: -I}}, aliases=('(C2_-1+A).i',)),
    _entry('C5_0A.i', 'IV', lambda: {
        (2, 3): {4: HALF}, (2, 4): {3: -HALF}, (3, 3): {1: I},
        (4, 4): {1: I}}, aliases=('(C5_0+A).i',)),
]

TRIVIAL_DUALS = ('I(2,2)', 'BAA.i', 'BAA.ii', 'C2_1.i', 'C2_-1.ii',
                 'C2_p.i', 'C2_1/p.ii')


def _index(entries):
    index = {}
    for entry in entries:
        for key in (entry.label,) + entry.aliases:
            index[normalize_label(key)] = entry
    return index


_ALGEBRA_INDEX = _index(ALGEBRAS)
_DUAL_INDEX = _index(DUALS)


def labels(table=None):
    return [e.label for e in ALGEBRAS if table is None or e.table == table]


def dual_labels():
    return [e.label for e in DUALS]


def _lookup(index, entries, label):
    try:
        return index[normalize_label(label)]
    except KeyError:
        raise exc.UnknownLabel(label, [e.label for e in entries])


def table_of(label):
    return _lookup(_ALGEBRA_INDEX, ALGEBRAS, label).table


def _instantiate(entry, params, symbolic, name_prefix=''):
    params = dict(params or {})
    values = []
    for name in entry.params:
        if name in params:
            values.append(sp.sympify(params[name]))
        elif symbolic:
            values.append(sp.Symbol(name, real=True))
        else:
            raise exc.MissingParameter(entry.label, name)
    numeric = all(not v.free_symbols for v in values)
    if numeric:
        for constraint in entry.constraints:
            if not constraint.check(*values):
                raise exc.ParameterOutOfRange(
                    entry.label, ','.join(entry.params),
                    ','.join(str(v) for v in values), constraint.text)
    name = entry.label
    if entry.params and params:
        name = '{0}[{1}]'.format(name, ','.join(
            '{0}={1}'.format(n, v) for n, v in zip(entry.params, values)))
    return name, entry.build(*values)


def load_catalog(name, params=None, symbolic=False):
    '''A printed algebra of Tables I to III, standard basis.

    Parameterized entries need ``params`` unless ``symbolic`` is set, in
    which case missing parameters become real sympy symbols.'''
    entry = _lookup(_ALGEBRA_INDEX, ALGEBRAS, name)
    full_name, brackets = _instantiate(entry, params, symbolic)
    _logger.debug('loaded %s from table %s', full_name, entry.table)
    return LieSuperalgebra.from_brackets(full_name, PARITIES, brackets)


def gl11(convention='standard'):
    g = load_catalog('gl11').renamed('gl(1|1)')
    if convention == NONSTANDARD:
        return to_nonstandard(g)
    return g


def load_dual(label, params=None, symbolic=False, convention='standard'):
    '''A printed dual of gl(1|1)'''
    entry = _lookup(_DUAL_INDEX, DUALS, label)
    full_name, brackets = _instantiate(entry, params, symbolic)
    dual = LieSuperalgebra.from_brackets(full_name, PARITIES, brackets,
                                         labels=DUAL_LABELS)
    if convention == NONSTANDARD:
        return to_nonstandard(dual)
    return dual


def dual_entry(label):
    return _lookup(_DUAL_INDEX, DUALS, label)


def table_iv_rows(p=None):
    '''(label, params) for the seventeen rows, eps expanded to +-1. The
    p rows use ``p`` or a real symbol.'''
    p = sp.Symbol('p', real=True) if p is None else sp.sympify(p)
    rows = []
    for entry in DUALS:
        if entry.params == ('eps',):
            for eps in (1, -1):
                rows.append((entry.label, {'eps': sp.Integer(eps)}))
        elif entry.params == ('p',):
            rows.append((entry.label, {'p': p}))
        else:
            rows.append((entry.label, {}))
    return rows


def row_name(label, params):
    if not params:
        return label
    return '{0}[{1}]'.format(label, ','.join(
        '{0}={1}'.format(k, v) for k, v in sorted(params.items())))


# the four families of solutions of the dual Jacobi and mixed Jacobi
# identities; alpha and beta are real
ALPHA, BETA = sp.symbols('alpha beta', real=True)

CASES = {
    'A': lambda a, b: {(2, 3): {4: a / 2}, (2, 4): {3: -b / 2},
                       (3, 3): {1: I * a}, (4, 4): {1: I * b}},
    'B': lambda a, b: {(2, 3): {3: a}, (2, 4): {4: b}},
    'C': lambda a, b: {(2, 3): {3: a}, (2, 4): {3: -b / 2},
                       (4, 4): {1: I * b}},
    'D': lambda a, b: {(2, 4): {4: b}, (2, 3): {4: a / 2},
                       (3, 3): {1: I * a}},
}

# where each printed dual sits in the families
CASE_MEMBERSHIP = {
    'I(2,2)': ('B', 0, 0),
    'BAA.i': ('B', 1, 0),
    'BAA.ii': ('B', 0, 1),
    'C2_1.i': ('B', 1, 1),
    'C2_-1.ii': ('B', 1, -1),
    'C2_p.i': ('B', 1, 'p'),
    'C2_1/p.ii': ('B', 1, '1/p'),
    'BAA_eps.i': ('D', 'eps', 'eps'),
    'BAA_eps.ii': ('C', 'eps', 'eps'),
    'C3A_eps.i': ('C', 0, '-eps'),
    'C3A_eps.ii': ('D', 'eps', 0),
    'C2_-1A.i': ('A', 1, -1),
    'C5_0A.i': ('A', 1, 1),
}


def case_family(case, alpha=ALPHA, beta=BETA):
    try:
        build = CASES[case.upper()]
    except KeyError:
        raise exc.UnknownLabel(case, CASES)
    return LieSuperalgebra.from_brackets(
        'Case {0}'.format(case.upper()), PARITIES, build(alpha, beta),
        labels=DUAL_LABELS)


def membership(label, params=None):
    '''(case, alpha, beta) placing a printed dual inside a family'''
    params = dict(params or {})
    case, a, b = CASE_MEMBERSHIP[dual_entry(label).label]
    env = dict((k, sp.sympify(v)) for k, v in params.items())
    env.setdefault('p', sp.Symbol('p', real=True))
    env.setdefault('eps', sp.Symbol('eps', real=True))
    return (case, sp.sympify(a, locals=env), sp.sympify(b, locals=env))


C11, C12, C21, C33, C34, C43, C44 = sp.symbols(
    'c11 c12 c21 c33 c34 c43 c44', real=True)
P = sp.Symbol('p', real=True)

CaseIsomorphism = collections.namedtuple(
    'CaseIsomorphism', 'case name target target_params condition matrix')


def case_isomorphisms():
    '''The isomorphism matrices from the Case families onto printed
    algebras. ``condition`` substitutes alpha or beta so that the matrix
    applies.'''
    # f~^{33}_1 and f~^{44}_1
    f33, f44 = I * ALPHA, I * BETA
    out = []
    out.append(CaseIsomorphism(
        'A', 'C1', '(C3+A)', {}, {ALPHA: 0},
        sp.Matrix([[C11, C12, 0, 0],
                   [-I * f44 * C44 ** 2, 0, 0, 0],
                   [0, 0, I * f44 / 2 * C12 * C44, 0],
                   [0, 0, C43, C44]])))
    out.append(CaseIsomorphism(
        'A', 'C2', '(C3+A)', {}, {BETA: 0},
        sp.Matrix([[C11, C12, 0, 0],
                   [-I * f33 * C43 ** 2, 0, 0, 0],
                   [0, 0, 0, -I * f33 / 2 * C12 * C43],
                   [0, 0, C43, C44]])))
    # f~33_1 = 4 / (c12^2 f~44_1)
    out.append(CaseIsomorphism(
        'A', 'C3', '(C2_-1+A)', {}, {ALPHA: -4 / (C12 ** 2 * BETA)},
        sp.Matrix([[C11, C12, 0, 0],
                   [-2 * I * f44 * C34 * C44, 0, 0, 0],
                   [0, 0, I * f44 / 2 * C12 * C34, C34],
                   [0, 0, -I * f44 / 2 * C12 * C44, C44]])))
    # f~33_1 = -4 / (c12^2 f~44_1)
    out.append(CaseIsomorphism(
        'A', 'C4', '(C5_0+A)', {}, {ALPHA: 4 / (C12 ** 2 * BETA)},
        sp.Matrix([[C11, C12, 0, 0],
                   [-I * f44 * (C34 ** 2 + C44 ** 2), 0, 0, 0],
                   [0, 0, I * f44 / 2 * C12 * C44, C34],
                   [0, 0, -I * f44 / 2 * C12 * C34, C44]])))
    out.append(CaseIsomorphism(
        'B', 'C1', 'B+A+A11', {}, {BETA: 0},
        sp.Matrix([[C11, 1 / ALPHA, 0, 0], [C21, 0, 0, 0],
                   [0, 0, C33, 0], [0, 0, 0, C44]])))
    out.append(CaseIsomorphism(
        'B', 'C2', 'B+A+A11', {}, {ALPHA: 0},
        sp.Matrix([[C11, 1 / BETA, 0, 0], [C21, 0, 0, 0],
                   [0, 0, 0, C34], [0, 0, C43, 0]])))
    out.append(CaseIsomorphism(
        'B', 'C3', 'C2_p+A11', {'p': 1}, {ALPHA: BETA},
        sp.Matrix([[C11, 1 / BETA, 0, 0], [C21, 0, 0, 0],
                   [0, 0, C33, C34], [0, 0, C43, C44]])))
    out.append(CaseIsomorphism(
        'B', 'C4', 'C2_p+A11', {'p': P}, {BETA: P * ALPHA},
        sp.Matrix([[C11, P / (P * ALPHA), 0, 0], [C21, 0, 0, 0],
                   [0, 0, C33, 0], [0, 0, 0, C44]])))
    out.append(CaseIsomorphism(
        'B', 'C5', 'C2_p+A11', {'p': P}, {ALPHA: P * BETA},
        sp.Matrix([[C11, P / (P * BETA), 0, 0], [C21, 0, 0, 0],
                   [0, 0, 0, C34], [0, 0, C43, 0]])))
    out.append(CaseIsomorphism(
        'C', 'C1', 'B+(A11+A)', {}, {BETA: 2 * ALPHA * C43 / C44},
        sp.Matrix([[C11, 1 / ALPHA, 0, 0],
                   [2 * ALPHA * C43 * C44, 0, 0, 0],
                   [0, 0, C33, 0], [0, 0, C43, C44]])))
    out.append(CaseIsomorphism(
        'D', 'C1', 'B+(A11+A)', {}, {ALPHA: -2 * BETA * C44 / C43},
        sp.Matrix([[C11, 1 / BETA, 0, 0],
                   [-2 * BETA * C43 * C44, 0, 0, 0],
                   [0, 0, 0, C34], [0, 0, C43, C44]])))
    # the remaining Case C and D maps reuse the Case A and B matrices
    borrowed = {('A', 'C1'): 'C', ('B', 'C1'): 'C',
                ('A', 'C2'): 'D', ('B', 'C2'): 'D'}
    for iso in list(out):
        case = borrowed.get((iso.case, iso.name))
        if case:
            out.append(iso._replace(
                case=case, name='{0}.{1}'.format(iso.case, iso.name)))
    return out


def case_isomorphism_source(iso):
    '''The Case family specialized to the condition of an isomorphism'''
    return case_family(iso.case).subs(iso.condition, simultaneous=True)


def case_isomorphism_target(iso):
    return load_catalog(iso.target, iso.target_params, symbolic=True)
