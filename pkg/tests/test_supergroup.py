import pytest
import sympy as sp

import superbialgebra.supergroup as SG
from superbialgebra import exc
from superbialgebra.bialgebra import RMatrix, wedge

PARITIES = (0, 0, 1, 1)


@pytest.fixture
def coords():
    return [SG.GL11.coordinate(c) for c in SG.COORDINATES]


def test_left_fields_span_gl11(gl11_ns):
    assert SG.field_algebra('L') == gl11_ns


def test_left_field_action(coords):
    x, y, psi, chi = coords
    V = SG.invariant_fields()[('L', SG.LEFT)]
    assert V[0](psi) == -psi
    assert V[0](chi) == chi
    assert V[2](y) == -chi
    assert V[3](chi * psi) == -psi


def test_field_sides():
    with pytest.raises(ValueError):
        SG.SuperVectorField({}, side='middle')
    fields = SG.invariant_fields()
    with pytest.raises(exc.ParityError):
        SG.field_bracket(fields[('L', SG.LEFT)][0],
                         fields[('L', SG.RIGHT)][0])


def test_odd_fields_anticommute_to_x2():
    V = SG.invariant_fields()[('L', SG.LEFT)]
    assert SG.field_bracket(V[2], V[3]) == V[1]
    assert SG.field_bracket(V[0], V[3]) == -V[3]


def test_zero_r_gives_zero_brackets():
    table = SG.poisson_table(RMatrix.zero(PARITIES))
    assert list(table) == SG.PAIRS
    assert all(row['total'].is_zero() for row in table.values())


def test_triangular_brackets(coords):
    x, y, psi, chi = coords
    table = SG.poisson_table(wedge(0, 1, PARITIES))
    assert table[('x', 'y')]['L'] == SG.GL11.one()
    assert table[('x', 'y')]['R'] == SG.GL11.one()
    assert table[('x', 'y')]['total'].is_zero()
    assert table[('y', 'psi')]['total'] == psi
    assert table[('y', 'chi')]['total'] == -chi
    assert table[('psi', 'chi')]['total'].is_zero()


def test_triangular_row_matches_printed():
    assert SG.compare_table_vi('C2_-1.ii') == []
    assert SG.compare_split() == []


def test_only_skew_part_enters(coords):
    _, y, psi, _ = coords
    r = RMatrix.from_terms(PARITIES, {(1, 2): 2})
    assert SG.sklyanin_bracket(r, y, psi) == psi


def test_bracket_identities(coords):
    x, y, psi, chi = coords
    r = wedge(0, 1, PARITIES)
    assert SG.antisymmetry_residual(r, y, psi).is_zero()
    assert SG.antisymmetry_residual(r, x, y).is_zero()
    assert SG.leibniz_residual(r, y, psi, chi).is_zero()
    assert SG.jacobi_residual(r, x, y, psi).is_zero()


def test_table_v_r():
    assert SG.table_v_r('C2_-1.ii') == wedge(0, 1, PARITIES)
    half = sp.Rational(1, 2)
    assert SG.table_v_r('C2_p.i', half) == \
        wedge(0, 1, PARITIES, half / 2) + \
        wedge(2, 3, PARITIES, 3 * half / 2)
    with pytest.raises(exc.UnknownLabel):
        SG.table_v_r('I(2,2)')


def test_printed_value(coords):
    _, _, psi, _ = coords
    assert SG.printed_value({'psi': -2}) == -2 * psi
    assert SG.printed_value({'1': 1}) == SG.GL11.one()
    assert SG.printed_value({}).is_zero()
