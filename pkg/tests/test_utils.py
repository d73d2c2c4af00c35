# -*- coding: utf-8 -*-
import pytest
import sympy as sp

import superbialgebra.utils as SU


def test_sign():
    assert SU.sign(0) == 1
    assert SU.sign(1) == -1
    assert SU.sign(2) == 1
    assert SU.sign(-3) == -1


@pytest.mark.parametrize(('label', 'expected'), [
    ('gl11', 'gl11'),
    ('gl(1|1)', 'gl11'),
    ('C2_-1.ii', 'c2-1ii'),
    ('C2_{-1}.ii', 'c2-1ii'),
    (u'(C²₋₁+A)', 'c2-1+a'),
    (u'B⊕B', 'b+b'),
    ('(B+B)', 'b+b'),
    ('BAA_eps.i', 'baaepsi'),
])
def test_normalize_label(label, expected):
    assert SU.normalize_label(label) == expected


@pytest.mark.parametrize(('text', 'expected'), [
    ('1/2', sp.Rational(1, 2)),
    ('-3', sp.Integer(-3)),
    (' -2 / 3 ', sp.Rational(-2, 3)),
    ('+4', sp.Integer(4)),
    (5, sp.Integer(5)),
])
def test_parse_rational(text, expected):
    assert SU.parse_rational(text) == expected


@pytest.mark.parametrize('text', ['0.5', '1e3', 'half', '1/2/3', ''])
def test_parse_rational_refuses(text):
    with pytest.raises(ValueError):
        SU.parse_rational(text)


def test_parse_params():
    assert SU.parse_params(['p=1/2', 'eps = -1']) == {
        'p': sp.Rational(1, 2), 'eps': sp.Integer(-1)}
    assert SU.parse_params(None) == {}
    with pytest.raises(ValueError):
        SU.parse_params(['p'])


def test_rational_to_text():
    assert SU.rational_to_text(sp.Rational(-3, 4)) == '-3/4'
    assert SU.rational_to_text(2) == '2'


@pytest.mark.parametrize(('value', 'expected'), [
    (sp.Rational(1, 2), {'re': '1/2', 'im': '0'}),
    (sp.I, {'re': '0', 'im': '1'}),
    (sp.Rational(-1, 3) + 2 * sp.I, {'re': '-1/3', 'im': '2'}),
    (sp.Symbol('p') / 2, {'expr': 'p/2'}),
])
def test_scalar_json(value, expected):
    assert SU.scalar_to_json(value) == expected
    assert SU.scalar_from_json(expected) == value


def test_is_zero():
    h = sp.Symbol('h')
    p = sp.Symbol('p')
    assert SU.is_zero(0)
    assert SU.is_zero(sp.exp(h) * sp.exp(-h) - 1)
    assert SU.is_zero((p ** 2 - 1) / (p - 1) - p - 1)
    assert not SU.is_zero(sp.Rational(1, 7))
    assert SU.scalars_equal(sp.exp(2 * h), sp.exp(h) ** 2)


def test_simplify_scalar():
    p = sp.Symbol('p')
    assert SU.simplify_scalar(sp.Rational(3, 6)) == sp.Rational(1, 2)
    assert SU.simplify_scalar((p ** 2 - 1) / (p + 1)) == p - 1
