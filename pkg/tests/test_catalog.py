# -*- coding: utf-8 -*-
import itertools

import pytest
import sympy as sp

import superbialgebra.catalog as SC
from superbialgebra import exc
from superbialgebra.superalgebra import is_isomorphism, validate_structure


def grid_points(label):
    '''Parameter assignments from the sample grid inside the printed
    constraints'''
    entry = SC._lookup(SC._ALGEBRA_INDEX, SC.ALGEBRAS, label)
    for values in itertools.product(SC.GRID, repeat=len(entry.params)):
        if all(c.check(*values) for c in entry.constraints):
            yield dict(zip(entry.params, values))


def test_table_sizes():
    assert len(SC.labels('I')) == 6
    assert len(SC.labels('II')) == 15
    assert len(SC.labels('III')) == 15
    assert len(SC.dual_labels()) == 13
    assert len(SC.table_iv_rows(SC.GRID[0])) == 17


@pytest.mark.parametrize('label', SC.labels())
def test_catalog_validates(label):
    points = list(grid_points(label))
    assert points
    for params in points:
        assert validate_structure(SC.load_catalog(label, params)).passed


@pytest.mark.parametrize('label', SC.labels())
def test_catalog_validates_symbolically(label):
    g = SC.load_catalog(label, symbolic=True)
    assert validate_structure(g, cross_check=False).passed


@pytest.mark.parametrize(('alias', 'label'), [
    ('gl11', '(C2_-1+A)'),
    ('gl(1|1)', '(C2_-1+A)'),
    (u'(C²₋₁+A)', '(C2_-1+A)'),
    ('(C3+A)', '(C3+A)'),
    ('D7half1', '(D7_1/2,1/2)^1'),
    ('abelian', 'I(2,2)'),
])
def test_aliases(alias, label):
    assert SC.load_catalog(alias) == SC.load_catalog(label)


def test_dual_aliases():
    assert SC.load_dual(u'B⊕A⊕A11.i') == SC.load_dual('BAA.i')
    assert SC.dual_entry('(C3+A)_eps.i').label == 'C3A_eps.i'


def test_table_of():
    assert SC.table_of('D5') == 'I'
    assert SC.table_of('gl11') == 'II'
    assert SC.table_of('B+B') == 'III'


def test_unknown_label():
    with pytest.raises(exc.UnknownLabel) as e:
        SC.load_catalog('nope')
    assert 'D5' in e.value.valid
    assert 'Valid labels' in str(e.value)
    with pytest.raises(exc.UnknownLabel):
        SC.load_dual('nope')


def test_parameter_errors():
    with pytest.raises(exc.MissingParameter):
        SC.load_dual('C2_p.i')
    with pytest.raises(exc.ParameterOutOfRange) as e:
        SC.load_dual('C2_p.i', {'p': 1})
    assert e.value.constraint == '0 < |p| < 1'
    with pytest.raises(exc.ParameterOutOfRange):
        SC.load_dual('BAA_eps.i', {'eps': 2})


def test_symbolic_parameters():
    dual = SC.load_dual('C2_p.i', symbolic=True)
    p = sp.Symbol('p', real=True)
    assert dual.f[1][3][3] == p
    assert dual.free_symbols() == set([p])


def test_gl11_nonstandard():
    g = SC.gl11('nonstandard')
    assert g.f[2][3][1] == 1
    assert g.name == 'gl(1|1)'


def test_table_iv_rows():
    rows = SC.table_iv_rows(sp.Rational(1, 3))
    assert ('BAA_eps.i', {'eps': 1}) in rows
    assert ('BAA_eps.i', {'eps': -1}) in rows
    assert ('C2_p.i', {'p': sp.Rational(1, 3)}) in rows
    assert SC.row_name('C2_p.i', {'p': sp.Rational(1, 3)}) == 'C2_p.i[p=1/3]'
    assert SC.row_name('I(2,2)', {}) == 'I(2,2)'


@pytest.mark.parametrize(('label', 'params'), SC.table_iv_rows(SC.GRID[0]))
def test_duals_in_families(label, params):
    case, a, b = SC.membership(label, params)
    assert SC.case_family(case, a, b) == SC.load_dual(label, params)


@pytest.mark.parametrize('case', sorted(SC.CASES))
def test_families_validate(case):
    assert validate_structure(SC.case_family(case),
                              cross_check=False).passed


def test_unknown_case():
    with pytest.raises(exc.UnknownLabel):
        SC.case_family('E')


@pytest.mark.parametrize(
    'iso', SC.case_isomorphisms(),
    ids=lambda iso: '{0}.{1}'.format(iso.case, iso.name))
def test_case_isomorphisms(iso):
    source = SC.case_isomorphism_source(iso)
    target = SC.case_isomorphism_target(iso)
    assert is_isomorphism(source, target, iso.matrix)
