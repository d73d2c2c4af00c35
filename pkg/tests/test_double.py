import pytest
import sympy as sp

import superbialgebra.double as SD
from superbialgebra import catalog, exc, golden
from superbialgebra.superalgebra import LieSuperalgebra, validate_structure

PARITIES = (0, 0, 1, 1)


@pytest.fixture(scope='module')
def trivial_double():
    return SD.double_of('I(2,2)')


@pytest.mark.parametrize(('label', 'params'), [
    ('I(2,2)', {}),
    ('BAA.i', {}),
    ('C2_-1.ii', {}),
    ('C2_p.i', {'p': sp.Rational(1, 2)}),
])
def test_double_is_a_manin_supertriple(label, params):
    report = SD.double_of(label, params).check()
    assert list(report) == ['jacobi', 'embeds', 'isotropic',
                            'supersymmetric', 'ad_invariant']
    assert all(report.values())


def test_trivial_double_brackets(trivial_double):
    D = trivial_double
    assert D.dim == 8
    assert D.parities == SD.DOUBLE_PARITIES
    f = D.algebra.f
    # [T1, T5] = T5 and [T1, T7] = -T7 with T7 = i X~3
    assert f[0][4][4] == 1
    assert f[0][6][6] == -1
    assert D.algebra.labels[0] == 'T1'


def test_raw_pairing(trivial_double):
    D = trivial_double
    x3 = D.raw_index(SD.GENERATOR, 2)
    dx3 = D.raw_index(SD.DUAL, 2)
    x1 = D.raw_index(SD.GENERATOR, 0)
    dx1 = D.raw_index(SD.DUAL, 0)
    assert D.raw_pairing[x1, dx1] == 1
    assert D.raw_pairing[dx1, x1] == 1
    assert D.raw_pairing[x3, dx3] == -1
    assert D.raw_pairing[dx3, x3] == 1
    assert D.raw_pairing[x1, x3] == 0


def test_double_needs_a_superbialgebra(gl11):
    bad = LieSuperalgebra.from_brackets('bad', PARITIES, {(3, 4): {1: 1}})
    with pytest.raises(exc.MixedJacobiViolation):
        SD.build_double(gl11, bad)


def test_invariants_of_gl11(gl11):
    inv = SD.invariants(gl11)
    assert inv.derived_series == (4, 3, 1)
    assert inv.derived_even == 0
    assert inv.centre == 1
    assert (inv.even_odd, inv.odd_odd) == (2, 1)
    assert inv.trace_rank == 1
    assert inv.trace_inertia == (1, 0)
    assert SD.centre_dimension(LieSuperalgebra.abelian('A', 2, 2)) == 4
    assert SD.derived_series(LieSuperalgebra.abelian('A', 2, 2)) == [4, 0]


def test_identity_is_a_manin_isomorphism(trivial_double):
    D = trivial_double
    for signed in (True, False):
        result = SD.verify_manin_iso(D, D, sp.eye(8), signed=signed)
        assert result.passed
        assert result.pairing_scale == 1
        assert result.diff == []


def test_rescaling_changes_the_pairing(trivial_double):
    D = trivial_double
    # a uniform scaling doubles every structure constant
    result = SD.verify_manin_iso(D, D, 2 * sp.eye(8), signed=False)
    assert result.pairing_scale == 4
    assert not result.passed


def test_manin_iso_errors(trivial_double):
    D = trivial_double
    with pytest.raises(exc.SingularMatrix):
        SD.verify_manin_iso(D, D, sp.zeros(8, 8))
    with pytest.raises(exc.DimensionMismatch):
        SD.verify_manin_iso(D, D, sp.eye(4))


def test_printed_double_unknown_label():
    with pytest.raises(exc.UnknownLabel):
        SD.printed_double('nope')


def test_printed_double_shape():
    printed = SD.printed_double('I(2,2)')
    assert printed.parities == SD.DOUBLE_PARITIES
    assert printed.f[0][4][4] == 1
    assert printed.f[4][5][1] == sp.I


def test_appendix_matrices_are_square():
    for entry in SD.appendix_matrices():
        assert entry['matrix'].shape == (8, 8)
        assert catalog.dual_entry(entry['source'][0])
        assert catalog.dual_entry(entry['target'][0])


def test_sample_points_avoid_reserved_symbols():
    entry = SD.appendix_matrices()[0]
    for values in SD.sample_points(entry, 2):
        assert all(v in SD.SAMPLES for v in values.values())


@pytest.mark.parametrize(('form', 'expected'), [
    (sp.diag(2, 3), (2, 0)),
    (sp.diag(1, -1, 0), (1, 1)),
    (sp.Matrix([[0, 1], [1, 0]]), (1, 1)),
    (sp.zeros(0, 0), (0, 0)),
    (sp.Matrix([[sp.I]]), None),
])
def test_inertia(form, expected):
    assert SD.inertia(form) == expected


def test_trace_form_separates_doubles():
    mixed = SD.invariants(SD.double_of('C5_0A.i').algebra)
    assert mixed.trace_rank == 2
    assert mixed.trace_inertia == (1, 1)
    trivial = SD.invariants(SD.double_of('I(2,2)').algebra)
    assert trivial.trace_rank == 1
    assert trivial.derived_even == 0


@pytest.mark.parametrize('entry', golden.APPENDIX_A, ids=lambda e: '{0}->{1}'
                         .format(e['source'][0], e['target'][0]))
def test_appendix_matrices_preserve_the_pairing(entry):
    proofs = SD.verify_entry(entry, 2)
    assert proofs
    for proof in proofs:
        assert proof.result.algebra_iso
        assert proof.result.preserves_pairing
        assert proof.result.passed


def test_free_parameters_only_carry_brackets():
    entry = golden.APPENDIX_A[0]
    values = dict(zip(
        (golden.a, golden.b, golden.c, golden.d, golden.e, golden.m,
         golden.n, golden.r, golden.s),
        (2, -1, sp.Rational(1, 2), 3, sp.Rational(-1, 3), 2, -1,
         sp.Rational(1, 2), 3)))
    result = SD.verify_manin_iso(SD.double_of('I(2,2)'),
                                 SD.double_of('C2_-1.ii'),
                                 entry['matrix'].subs(values))
    assert result.algebra_iso
    assert not result.preserves_pairing
    assert not result.passed


def test_section_map_preserves_the_pairing():
    assert SD.section_map_matches_appendix()
    proofs = SD.verify_section_map(1)
    assert proofs
    assert all(p.result.passed for p in proofs)


def test_class_links():
    proofs = SD.class_links()
    assert len(proofs) == 2
    assert all(p.klass == 'Dsd1 = Dsd4' for p in proofs)
    assert all(p.result.passed for p in proofs)
    assert all(p.result.pairing_scale == 1 for p in proofs)


def test_theorem1_partition():
    partition = SD.theorem1_partition(1)
    assert list(partition.classes) == ['Dsd{0}'.format(k)
                                       for k in range(1, 7)]
    verdicts = dict(((a, b), v) for a, b, v in partition.evidence)
    assert len(verdicts) == 15
    assert verdicts[('Dsd1', 'Dsd4')].startswith('isomorphic')
    assert verdicts[('Dsd1', 'Dsd2')] == 'distinct invariants'
    assert verdicts[('Dsd5', 'Dsd6')] == 'distinct invariants'
    assert verdicts[('Dsd2', 'Dsd3')] == 'same invariants, open'
    for proofs in partition.proofs.values():
        assert all(p.result.passed for p in proofs)


@pytest.mark.parametrize(('label', 'params'), [
    ('BAA_eps.i', {'eps': 1}),
    ('BAA_eps.ii', {'eps': -1}),
    ('C2_-1A.i', {}),
    ('C5_0A.i', {}),
])
def test_printed_double_errata(label, params):
    diffs = SD.compare_printed(SD.double_of(label, params), label, params)
    assert sorted(d[:3] for d in diffs) == \
        sorted(golden.TABLE_VII_ERRATA[label])
    assert not validate_structure(SD.printed_double(label, params),
                                  cross_check=False).passed
