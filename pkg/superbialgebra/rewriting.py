# -*- coding: utf-8 -*-
'''Noncommutative rewriting of words over a finite ordered alphabet.

A polynomial is a dict ``{word: coefficient}`` with words as tuples of
generator names and exact sympy coefficients. Coefficients may carry
central symbols (h, a central generator written as a scalar). A rule
rewrites one word into a polynomial of strictly smaller words; a system
of such rules is used to bring elements to a PBW-style normal form.
'''
import itertools
import logging

import sympy as sp

from superbialgebra import exc
from superbialgebra.utils import is_zero

_logger = logging.getLogger(__name__)


def add_terms(target, terms, scale=1):
    '''target += scale * terms, dropping coefficients that vanish'''
    for word, coeff in terms.items():
        value = sp.expand(target.get(word, 0) + scale * coeff)
        if value == 0:
            target.pop(word, None)
        else:
            target[word] = value
    return target


def clean(terms, coefficient=None):
    out = {}
    for word, coeff in terms.items():
        if coefficient is not None:
            coeff = coefficient(coeff)
        if not is_zero(coeff):
            out[word] = coeff
    return out


def inversions(word, alphabet):
    rank = dict((x, n) for n, x in enumerate(alphabet))
    return sum(1 for a, b in itertools.combinations(word, 2)
               if rank[a] > rank[b])


def weighted_order(alphabet, weights=None):
    '''Sort key: weighted degree, then number of inversions against the
    alphabet order, then lexicographic. Letters missing from ``weights``
    weigh 1.'''
    weights = weights or {}
    rank = dict((x, n) for n, x in enumerate(alphabet))

    def key(word):
        return (sum(weights.get(x, 1) for x in word),
                inversions(word, alphabet),
                tuple(rank[x] for x in word))
    return key


class Rule(object):
    def __init__(self, lhs, rhs):
        self.lhs = tuple(lhs)
        self.rhs = dict((tuple(w), sp.sympify(c)) for w, c in rhs.items())

    def __repr__(self):  # pragma: nocover
        return 'Rule({0} -> {1})'.format(' '.join(self.lhs) or '1',
                                         format_terms(self.rhs))

    def relation(self):
        '''lhs - rhs as a polynomial'''
        return add_terms({self.lhs: sp.Integer(1)}, self.rhs, -1)


class RewritingSystem(object):
    '''Rules over an ordered alphabet together with the sort key that
    makes every rule decreasing.

    :param coefficient: applied to coefficients after each reduction,
        for instance an h-adic truncation
    :raises SuperalgebraError: when a rule is not decreasing
    '''

    def __init__(self, alphabet, rules, key=None, coefficient=None,
                 name=None):
        self.alphabet = tuple(alphabet)
        self.key = key or weighted_order(self.alphabet)
        self.coefficient = coefficient
        self.name = name
        self.rules = {}
        for rule in rules:
            for word in rule.rhs:
                if self.key(word) >= self.key(rule.lhs):
                    raise exc.SuperalgebraError(
                        'rule {0!r} does not decrease: {1} is not below '
                        '{2}'.format(name, word, rule.lhs))
            self.rules[rule.lhs] = rule
        self._cache = {}

    def __repr__(self):  # pragma: nocover
        return 'RewritingSystem({0!r}, {1} rules)'.format(self.name,
                                                         len(self.rules))

    def _match(self, word):
        for start in range(len(word)):
            for lhs, rule in self.rules.items():
                if word[start:start + len(lhs)] == lhs:
                    return start, rule
        return None

    def is_normal(self, word):
        return self._match(tuple(word)) is None

    def _rewrite_at(self, word, start, rule):
        prefix, suffix = word[:start], word[start + len(rule.lhs):]
        out = {}
        for rhs, coeff in rule.rhs.items():
            add_terms(out, {prefix + rhs + suffix: coeff})
        return out

    def reduce_word(self, word):
        '''The normal form of a single word'''
        word = tuple(word)
        if word in self._cache:
            return self._cache[word]
        found = self._match(word)
        if found is None:
            result = {word: sp.Integer(1)}
        else:
            result = self.normal_form(self._rewrite_at(word, *found))
        self._cache[word] = result
        return result

    def normal_form(self, terms):
        out = {}
        for word, coeff in terms.items():
            for w, c in self.reduce_word(word).items():
                add_terms(out, {w: coeff * c})
        return clean(out, self.coefficient)

    def multiply(self, left, right):
        out = {}
        for (u, a), (v, b) in itertools.product(left.items(),
                                                right.items()):
            add_terms(out, {u + v: a * b})
        return self.normal_form(out)

    def overlaps(self):
        '''Words xyz where xy and yz are both left-hand sides'''
        found = []
        for u, v in itertools.product(self.rules, repeat=2):
            for k in range(1, min(len(u), len(v))):
                if u[-k:] == v[:k]:
                    found.append((u + v[k:], u, v, len(u) - k))
        return found

    def critical_pairs(self):
        '''(word, left, right) for every overlap whose two one-step
        reductions have different normal forms'''
        out = []
        for word, u, v, start in self.overlaps():
            left = self.normal_form(
                self._rewrite_at(word, 0, self.rules[u]))
            right = self.normal_form(
                self._rewrite_at(word, start, self.rules[v]))
            difference = add_terms(dict(left), right, -1)
            if clean(difference, self.coefficient):
                out.append((word, left, right))
        _logger.debug('%s: %d overlaps, %d unresolved', self.name,
                      len(self.overlaps()), len(out))
        return out

    def is_confluent(self):
        return not self.critical_pairs()


def format_word(word):
    return ' '.join(word) or '1'


def format_terms(terms):
    if not terms:
        return '0'
    parts = []
    for word, coeff in sorted(terms.items(), key=lambda t: (len(t[0]),
                                                            t[0])):
        parts.append('({0})*{1}'.format(sp.sstr(coeff), format_word(word)))
    return ' + '.join(parts)


def parse_word(text, alphabet):
    '''"X3 X4" -> ('X3', 'X4'); "1" or "" is the empty word'''
    letters = tuple(text.replace('*', ' ').split())
    if letters == ('1',):
        return ()
    for x in letters:
        if x not in alphabet:
            raise exc.UnknownLabel(x, alphabet)
    return letters
