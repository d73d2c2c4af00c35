'''Common fixtures and functions for test files'''

import itertools
import random

import pytest
import sympy as sp

import superbialgebra.catalog as SC
from superbialgebra.graded import SuperMatrix
from superbialgebra.superalgebra import LieSuperalgebra


def random_rational(rng, size=5):
    '''A small nonzero-or-zero exact rational'''
    return sp.Rational(rng.randint(-size, size), rng.randint(1, size))


def random_gaussian(rng, size=5):
    return random_rational(rng, size) + sp.I * random_rational(rng, size)


def random_supermatrix(rng, parities, parity=None):
    '''A homogeneous supermatrix, even or odd at random unless given'''
    parity = rng.randint(0, 1) if parity is None else parity
    n = len(parities)
    m = sp.zeros(n, n)
    for a, b in itertools.product(range(n), repeat=2):
        if (parities[a] + parities[b]) % 2 == parity:
            m[a, b] = random_rational(rng)
    return SuperMatrix(m, parities)


def random_structure(rng, parities=(0, 0, 1, 1)):
    '''A graded antisymmetric tensor, not necessarily satisfying Jacobi'''
    n = len(parities)
    brackets = {}
    for i, j in itertools.combinations_with_replacement(range(n), 2):
        if i == j and not parities[i]:
            continue
        images = {}
        for k in range(n):
            if (parities[i] + parities[j] + parities[k]) % 2 == 0 and \
                    rng.random() < 0.3:
                images[k] = random_rational(rng)
        if images:
            brackets[(i, j)] = images
    return LieSuperalgebra.from_brackets('random', parities, brackets,
                                         one_based=False)


@pytest.fixture
def rng():
    '''A seeded generator so every run sees the same data'''
    return random.Random(20)


@pytest.fixture
def gl11():
    return SC.gl11()


@pytest.fixture
def gl11_ns():
    return SC.gl11('nonstandard')
