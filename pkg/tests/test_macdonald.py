import threading

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import laurent_qt
from dahaknots.exactalg import RATQT_ONE, LaurentX, q, specialize_t, t
from dahaknots.hword import Y_WORD
from dahaknots.macdonald import (
    MacdonaldTable,
    SymPoly,
    chebyshev_S,
    chebyshev_T,
    eigenvalue,
    expand_in_macdonald,
    from_macdonald,
    macdonald_operator,
    macdonald_poly,
    power_to_sym,
    sign_macdonald_poly,
)
from dahaknots.polyrep import act

P2_CONST = (1 - t**2) * (1 + q**4) / (1 - t**2 * q**4)


def test_chebyshev_examples():
    assert chebyshev_S(0) == [1]
    assert chebyshev_S(2) == [-1, 0, 1]
    assert chebyshev_S(-1) == []
    assert chebyshev_T(0) == [2]
    assert chebyshev_T(1) == [0, 1]
    assert chebyshev_T(3) == [0, -3, 0, 1]


def test_operator_examples():
    assert macdonald_operator(SymPoly.m(0)) == SymPoly.m(0).scale(t + 1 / t)
    image = macdonald_operator(SymPoly.m(1))
    assert image.coeff(1) == eigenvalue(1)
    assert set(image.coeffs) <= {0, 1}
    assert macdonald_operator(macdonald_poly(2)) == macdonald_poly(2).scale(t * q**4 + q**-4 / t)


def test_poly_examples():
    assert macdonald_poly(1) == SymPoly.m(1)
    assert macdonald_poly(2) == SymPoly({2: 1, 0: P2_CONST})
    assert macdonald_poly(3).specialize_t("t=-q^2") == power_to_sym(chebyshev_S(3))


def test_sign_examples():
    assert sign_macdonald_poly(0) == SymPoly.m(0)
    expected = (1 - t**-2) * (1 + q**4) / (1 - t**-2 * q**4)
    assert sign_macdonald_poly(2) == SymPoly({2: 1, 0: expected})
    assert sign_macdonald_poly(2).specialize_t("t=1") == macdonald_poly(2).map_coeffs(
        lambda c: c.substitute_t_monomial(-1, 0, 0)
    )


def test_expand_examples():
    assert expand_in_macdonald(macdonald_poly(3)) == {3: RATQT_ONE}
    assert expand_in_macdonald(SymPoly.m(2)) == {2: RATQT_ONE, 0: -P2_CONST}
    assert expand_in_macdonald(SymPoly()) == {}


@pytest.mark.parametrize("n", range(9))
def test_eigen_relation(n):
    p = macdonald_poly(n)
    assert macdonald_operator(p) == p.scale(eigenvalue(n))


@pytest.mark.parametrize("n", range(9))
def test_monic_triangular_parity(n):
    p = macdonald_poly(n)
    assert p.coeff(n) == RATQT_ONE
    assert all(k <= n and (n - k) % 2 == 0 for k in p.coeffs)


@pytest.mark.parametrize("n", range(9))
def test_chebyshev_specialization(n):
    assert macdonald_poly(n).specialize_t("t=-q^2") == power_to_sym(chebyshev_S(n))


@pytest.mark.parametrize("k", range(9))
def test_operator_matches_y_word(k):
    v = SymPoly.m(k)
    assert SymPoly.from_laurent(act(Y_WORD, v.to_laurent())) == macdonald_operator(v)


@given(st.dictionaries(st.integers(0, 8), laurent_qt(max_terms=2, exp=2), max_size=3))
def test_expand_roundtrip(coeffs):
    f = SymPoly(coeffs)
    assert from_macdonald(expand_in_macdonald(f)) == f


def test_from_laurent_rejects_asymmetric():
    with pytest.raises(ValueError):
        SymPoly.from_laurent(LaurentX({1: 1}))


def test_table_concurrent_fill():
    table = MacdonaldTable()
    out = {}

    def work(i):
        out[i] = table.get(5)

    threads = [threading.Thread(target=work, args=(i,)) for i in range(4)]
    for th in threads:
        th.start()
    for th in threads:
        th.join()
    assert all(v == macdonald_poly(5) for v in out.values())
