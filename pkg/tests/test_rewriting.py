import pytest
import sympy as sp

import superbialgebra.rewriting as RW
from superbialgebra import exc

AB = ('a', 'b')


@pytest.fixture
def commuting():
    return RW.RewritingSystem(AB, [RW.Rule(('b', 'a'), {('a', 'b'): 1})],
                              name='commuting')


def test_reduce_word(commuting):
    assert commuting.reduce_word(('b', 'a', 'b')) == {('a', 'b', 'b'): 1}
    assert commuting.reduce_word(('b', 'b', 'a', 'a')) == \
        {('a', 'a', 'b', 'b'): 1}
    assert commuting.is_normal(('a', 'a', 'b'))
    assert not commuting.is_normal(('a', 'b', 'a'))


def test_multiply(commuting):
    left = {('b',): 2, (): 1}
    right = {('a',): 3}
    assert commuting.multiply(left, right) == {('a', 'b'): 6, ('a',): 3}


def test_rules_must_decrease():
    with pytest.raises(exc.SuperalgebraError):
        RW.RewritingSystem(AB, [RW.Rule(('a', 'b'), {('b', 'a'): 1})])


def test_confluent(commuting):
    assert commuting.overlaps() == []
    assert commuting.is_confluent()


def test_critical_pair():
    # ba = -ab together with aa = a is inconsistent on baa
    system = RW.RewritingSystem(AB, [
        RW.Rule(('b', 'a'), {('a', 'b'): -1}),
        RW.Rule(('a', 'a'), {('a',): 1}),
    ])
    pairs = system.critical_pairs()
    assert pairs == [(('b', 'a', 'a'), {('a', 'b'): 1}, {('a', 'b'): -1})]
    assert not system.is_confluent()


def test_coefficient_hook():
    h = sp.Symbol('h')
    system = RW.RewritingSystem(
        AB, [RW.Rule(('b', 'a'), {('a', 'b'): 1 + h})],
        coefficient=lambda c: sp.expand(c).subs(h ** 2, 0))
    assert system.normal_form({('b', 'a', 'a'): 1}) == \
        {('a', 'a', 'b'): 1 + 2 * h}


def test_weighted_order():
    key = RW.weighted_order(AB, {'b': 2})
    assert key(('a', 'a')) < key(('b',)) < key(('a', 'a', 'a'))
    assert key(('a', 'b')) < key(('b', 'a'))
    assert RW.inversions(('b', 'b', 'a'), AB) == 2


def test_relation():
    rule = RW.Rule(('b', 'a'), {('a', 'b'): 1, (): 3})
    assert rule.relation() == {('b', 'a'): 1, ('a', 'b'): -1, (): -3}


def test_add_terms_drops_zeros():
    target = {('a',): 1}
    RW.add_terms(target, {('a',): -1, ('b',): 2})
    assert target == {('b',): 2}


def test_format_and_parse():
    assert RW.format_word(()) == '1'
    assert RW.format_terms({}) == '0'
    assert RW.format_terms({('a', 'b'): 2, (): -1}) == '(-1)*1 + (2)*a b'
    assert RW.parse_word('a*b', AB) == ('a', 'b')
    assert RW.parse_word('1', AB) == ()
    with pytest.raises(exc.UnknownLabel):
        RW.parse_word('a c', AB)
