import pytest
import sympy as sp

import superbialgebra.quantize as SQ
from superbialgebra import exc
from superbialgebra.graded import H, SuperMatrix

X2 = SQ.X2
HALF = sp.Rational(1, 2)


@pytest.fixture(scope='module')
def U():
    return SQ.QuantumGl11('P3', order=2)


def test_presets():
    p3 = SQ.proposition('P3')
    assert (p3.nu3, p3.nu4) == (-1, 0)
    p6 = SQ.proposition('P6', HALF)
    assert p6.nu4 == -HALF
    assert SQ.proposition('P6').nu4 == -SQ.LAMBDA
    assert SQ.proposition('P5printed').printed
    with pytest.raises(exc.UnknownProposition):
        SQ.proposition('P7')


def test_anticommutator_series():
    p3 = SQ.proposition('P3')
    assert SQ.anticommutator(p3, order=2) == \
        X2 - H * X2 ** 2 / 2 + H ** 2 * X2 ** 3 / 6
    assert SQ.anticommutator(SQ.proposition('P5printed')) == (1 - H) * X2
    # nu3 + nu4 = 0 leaves the classical bracket
    assert SQ.anticommutator(SQ.proposition('P5'), order=4) == X2


def test_normal_form(U):
    nf = U.normal_form('X4 X3')
    assert nf == U.element({(): SQ.anticommutator(U.prop, order=2),
                            ('X3', 'X4'): -1})
    assert U.normal_form('X3 X1') == U.element({('X1', 'X3'): 1,
                                                ('X3',): -1})
    assert U.normal_form('X3 X3').is_zero()
    assert U.normal_form('X2 X3') == U.element({('X3',): X2})
    with pytest.raises(exc.UnknownLabel):
        U.normal_form('X5')


def test_relations_are_confluent(U):
    assert U.system.is_confluent()


def test_coproduct_of_odd_generator(U):
    s1, s2 = SQ.leg_symbols(2)
    delta = U.coproduct('X3')
    assert delta == SQ.UhTensor(U, 2, {
        ((), ('X3',)): 1,
        (('X3',), ()): 1 - H * s2 + H ** 2 * s2 ** 2 / 2})
    assert U.coproduct('X2') == SQ.UhTensor(U, 2, {((), ()): s1 + s2})


def test_counit_and_antipode(U):
    assert U.counit(U.generator('X1')) == 0
    assert U.counit(U.one()) == 1
    assert U.antipode(U.generator('X1')) == U.element({('X1',): -1})
    assert U.antipode(U.generator('X2')) == U.element({(): -X2})


def test_graded_flip(U):
    t = SQ.UhTensor(U, 2, {(('X3',), ('X4',)): 1})
    assert U.flip(t) == SQ.UhTensor(U, 2, {(('X4',), ('X3',)): -1})


def test_tensor_legs_must_match(U):
    with pytest.raises(exc.DimensionMismatch):
        U.one(1) + U.one(2)


@pytest.mark.parametrize(('prop', 'order'), [('P3', 2), ('P5', 3)])
def test_hopf_axioms(prop, order):
    report = SQ.check_hopf_axioms(prop, order)
    assert report.passed
    assert report.failed() == []
    assert report.to_dict()['axioms']['coassociativity']['passed']


def test_classical_limit(U):
    assert SQ.classical_limit(U) == []


def test_cocommutator_matches_dual():
    report = SQ.compare_cocommutator('P3')
    assert report.label == 'BAA.i'
    assert report.scale == 1
    assert report.mismatches == []


@pytest.mark.parametrize(('lam', 'label', 'params'), [
    (0, 'BAA.i', {}),
    (1, 'C2_1.i', {}),
    (-1, 'C2_-1.ii', {}),
    (HALF, 'C2_p.i', {'p': HALF}),
    (2, 'C2_1/p.ii', {'p': HALF}),
])
def test_matching_dual_for_lambda(lam, label, params):
    assert SQ.matching_dual('P6', lam) == (label, params)


def test_matching_dual_needs_lambda():
    with pytest.raises(exc.MissingParameter):
        SQ.matching_dual('P6')


def test_quantum_R():
    R = SQ.quantum_R()
    assert R.matrix == sp.diag(1, sp.exp(H), sp.exp(-H), 1)
    assert R.row_parities == (0, 1, 1, 0)
    assert SQ.qybe_residual(R).is_zero()


def test_intertwiner():
    assert SQ.intertwiner_check('P5') == []
    assert SQ.intertwiner_check('P3') != []


def test_rtt_relations_match_printed():
    report = SQ.compare_rtt()
    assert report.relations
    assert report.missing == []
    assert report.unreduced == []
    assert SQ.format_relation({('a',): 1}) == '(1)*a = 0'


def test_sdet():
    assert SQ.sdet().terms == {(1, -1, 0, 0): 1,
                               (0, -2, 1, 1): -sp.exp(H)}


def test_frt_inverse():
    a, b, alpha, beta = SQ.frt_generators()
    assert a * a.inverse() == SQ.FRTElement.one()
    assert (a + alpha) * (a + alpha).inverse() == 1
    with pytest.raises(exc.NotInvertible):
        alpha.inverse()


def test_frt_odd_generators():
    _, _, alpha, beta = SQ.frt_generators()
    assert (alpha * alpha).is_zero()
    assert beta * alpha == (alpha * beta).scale(-sp.exp(2 * H))
    assert str(alpha * beta) == '(1)*alpha beta'
    with pytest.raises(exc.UnknownLabel):
        SQ.FRTElement.generator('gamma')


def test_frt_coproduct_counit():
    a = SQ.FRTElement.generator('a')
    assert SQ.frt_counit(a) == 1
    assert SQ.frt_counit(SQ.FRTElement.generator('alpha')) == 0
    delta = SQ.frt_coproduct(a)
    assert delta == SQ.frt_coproduct_generator('a')


def test_representation_is_gl11():
    X = SQ.representation()
    anti = X['X3'] * X['X4'] + X['X4'] * X['X3']
    assert anti == SuperMatrix.identity(SQ.REP_PARITIES)
    assert X['X1'] * X['X3'] - X['X3'] * X['X1'] == X['X3']


@pytest.mark.parametrize(('prop', 'lam'), [
    ('P4', None),
    ('P6', 1),
    ('P6', HALF),
    ('P6', 2),
])
def test_hopf_axioms_at_default_order(prop, lam):
    report = SQ.check_hopf_axioms(prop, lam=lam)
    assert report.order == 8
    assert report.passed


def test_p6_relation_for_lambda_one():
    # (1 - exp(-2 h X2)) / (2 h)
    assert SQ.anticommutator(SQ.proposition('P6', 1), order=2) == \
        X2 - H * X2 ** 2 + 2 * H ** 2 * X2 ** 3 / 3


@pytest.mark.parametrize('prop', ['P5', 'P5printed'])
def test_both_readings_of_p5(prop):
    report = SQ.check_hopf_axioms(prop, 3)
    assert report.passed
    assert report.name == prop


def test_frt_hopf_check():
    report = SQ.frt_hopf_check()
    assert list(report.axioms) == ['confluence', 'morphism', 'counit',
                                   'antipode', 'sdet_central']
    assert report.passed


def test_sdet_is_central():
    s = SQ.sdet()
    for x in SQ.frt_generators():
        assert s * x == x * s


def test_frt_antipode_inverts_t():
    a, b, alpha, beta = SQ.frt_generators()
    S = SQ.frt_antipode
    assert S(a) * a + S(alpha) * beta == 1
    assert S(a) * alpha + S(alpha) * b == 0
    assert S(beta) * a + S(b) * beta == 0
    assert S(beta) * alpha + S(b) * b == 1
    assert a * S(a) + alpha * S(beta) == 1
    assert beta * S(alpha) + b * S(b) == 1
