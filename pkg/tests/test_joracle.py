import pytest

from dahaknots.exactalg import LaurentQ, monomial_ratio, q, specialize_t
from dahaknots.invariants import sign_torus
from dahaknots.joracle import (
    NEWTON,
    ColorTable,
    cable_step,
    newton_to_topological,
    oracle_jones,
    unknot_jones,
)

KP_JONES = LaurentQ({14: 1, 18: 1, 22: 1, 26: 1, 42: -1, 46: -1, 50: -1, 58: 1})
KM_JONES = LaurentQ({-30: -1, -6: 1, -2: 1, 2: 1, 6: 1, 10: 1, 22: -1, 26: -1, 30: -1, 38: 1})
SPECS = [((2, 3),), ((3, 2),), ((2, 5),), ((2, -3),), ((2, 3), (2, 5)), ((2, 3), (2, -5)), ((2, 3), (3, 2))]


def test_unknot_examples():
    assert unknot_jones(1) == LaurentQ({0: 1})
    assert unknot_jones(0).is_zero()
    assert unknot_jones(2) == LaurentQ({2: -1, -2: -1})
    assert unknot_jones(-3) == -unknot_jones(3)


@pytest.mark.parametrize("m", range(1, 8))
def test_unknot_formula(m):
    lhs = unknot_jones(m).to_ratqt() * (q**2 - q**-2)
    assert lhs == (q ** (2 * m) - q ** (-2 * m)) * (-1) ** (m - 1)


def test_cable_step_trivial_color():
    inner = lambda c: unknot_jones(c)
    assert cable_step(2, 3, inner, 1) == unknot_jones(1)


@pytest.mark.parametrize("n", range(1, 6))
def test_cable_step_10_is_unknot(n):
    got = cable_step(1, 0, unknot_jones, n)
    ref = unknot_jones(n)
    assert got in (ref, -ref)


def test_trefoil_against_sign_family():
    got = oracle_jones(2, ((2, 3),))
    other = specialize_t(sign_torus(2, 2, 3), "t=1").as_laurent_q()
    assert other in (got, -got)


def test_printed_cables():
    assert oracle_jones(2, ((2, 3), (2, 5))) == KP_JONES
    assert oracle_jones(2, ((2, 3), (2, -5))) == KM_JONES


def test_newton_examples():
    assert newton_to_topological([2], [7]) == [7]
    assert newton_to_topological([2, 2], [3, 5]) == [3, 17]
    assert newton_to_topological([2, 3, 5], [1, 1, 1]) == [1, 7, 106]


def test_newton_route_uses_converted_pairs():
    assert oracle_jones(2, ((2, 3), (2, 5)), NEWTON) == oracle_jones(2, ((2, 3), (2, 17)))
    # Newton s = (3, 5) is not the printed Kp knot
    assert oracle_jones(2, ((2, 3), (2, 5)), NEWTON) not in (KP_JONES, -KP_JONES)


@pytest.mark.parametrize("spec", SPECS)
def test_color_one(spec):
    assert oracle_jones(1, spec) == LaurentQ({0: 1})


@pytest.mark.parametrize("spec", SPECS)
def test_antisymmetry_memo(spec):
    table = ColorTable(spec)
    for depth in range(len(spec) + 1):
        assert table.jones(depth, 0).is_zero()
        for m in range(1, 4):
            assert table.jones(depth, -m) == -table.jones(depth, m)
    for m in range(1, 4):
        assert table.memo[(0, m)] == unknot_jones(m)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_mirror(n):
    a = oracle_jones(n, ((2, 3),))
    b = oracle_jones(n, ((2, -3),)).mirror()
    assert monomial_ratio(a, b) in ((1, 0), (-1, 0))


def test_rejects_non_coprime():
    with pytest.raises(ValueError):
        oracle_jones(2, ((2, 4),))
