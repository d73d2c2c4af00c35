# -*- coding: utf-8 -*-
import re
from fractions import Fraction

import sympy as sp
import unidecode

from superbialgebra import exc


_RATIONAL = re.compile(r'^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$')
_LABEL_NOISE = re.compile(r'[\s_{}()\[\]|^.,]')


def sign(n):
    '''(-1)**n for an integer n, without going through sympy'''
    return -1 if n % 2 else 1


def normalize_label(label):
    '''Turns a table label, possibly typed with unicode super and
    subscripts, into the lookup key used by the catalogs.

    >>> normalize_label(u'(C²₋₁+A)')
    'c2-1+a'
    '''
    text = u'{0}'.format(label).replace(u'⊕', u'+')
    text = unidecode.unidecode(text)
    text = text.replace('(+)', '+')
    text = _LABEL_NOISE.sub('', text)
    return text.lower()


def parse_rational(text):
    '''Parses an exact rational such as "1/2" or "-3" into a sympy
    Rational. Decimal points are refused, parameters are never floats.'''
    if isinstance(text, (int, Fraction)):
        return sp.Rational(text)
    if isinstance(text, sp.Basic):
        return text
    match = _RATIONAL.match(u'{0}'.format(text))
    if match is None:
        raise ValueError(
            'Expected an exact rational like 1/2, got {0!r}'.format(text))
    num, den = match.groups()
    return sp.Rational(int(num), int(den or 1))


def parse_params(pairs):
    '''Turns an iterable of "name=value" strings into a dict of exact
    rationals'''
    params = {}
    for pair in pairs or ():
        if '=' not in pair:
            raise ValueError(
                'Parameters are written name=value, got {0!r}'.format(pair))
        name, value = pair.split('=', 1)
        params[name.strip()] = parse_rational(value)
    return params


def rational_to_text(q):
    q = sp.Rational(q)
    if q.q == 1:
        return '{0}'.format(q.p)
    return '{0}/{1}'.format(q.p, q.q)


def scalar_to_json(value):
    '''Serializes an exact scalar. Gaussian rationals become "num/den"
    strings for the real and imaginary part; anything symbolic falls back
    to its sympy string form under "expr".'''
    value = sp.expand(sp.sympify(value))
    if value.free_symbols:
        return {'expr': sp.sstr(value)}
    re_part, im_part = value.as_real_imag()
    if re_part.is_Rational and im_part.is_Rational:
        return {'re': rational_to_text(re_part),
                'im': rational_to_text(im_part)}
    return {'expr': sp.sstr(value)}


def scalar_from_json(obj):
    if 'expr' in obj:
        return sp.sympify(obj['expr'])
    return parse_rational(obj['re']) + sp.I * parse_rational(obj['im'])


def simplify_scalar(expr):
    '''Brings an exact scalar into a canonical-enough shape for display and
    comparison'''
    expr = sp.sympify(expr)
    if expr.is_Rational:
        return expr
    expr = sp.powsimp(sp.expand(expr), combine='exp')
    if expr.has(sp.exp):
        return sp.expand(expr)
    return sp.factor(sp.cancel(sp.together(expr)))


def is_zero(expr):
    '''Exact zero test. Cheap paths first, full simplification last.'''
    expr = sp.sympify(expr)
    if expr == 0:
        return True
    expanded = sp.expand(expr)
    if expanded == 0:
        return True
    if expanded.is_number and expanded.is_Rational:
        return False
    combined = sp.powsimp(expanded, combine='exp')
    if sp.expand(combined) == 0:
        return True
    if not combined.has(sp.exp):
        return sp.cancel(sp.together(combined)) == 0
    return sp.simplify(combined) == 0


def scalars_equal(a, b):
    return is_zero(sp.sympify(a) - sp.sympify(b))
