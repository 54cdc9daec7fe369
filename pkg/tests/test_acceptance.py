"""Acceptance criteria 1-10, evaluated exactly.

Run with ``pytest tests/test_acceptance.py`` (a PASS/FAIL line per criterion
is printed in the terminal summary) or directly as a script.
"""
import pytest

from dahaknots import selftest
from dahaknots.exactalg import LaurentQ, monomial_ratio, q, specialize_t, t
from dahaknots.invariants import (
    CableSpec,
    cd_newton,
    cherednik_torus,
    compute,
    iterated_topological,
    sign_torus,
)
from dahaknots.joracle import NEWTON, TOPOLOGICAL, newton_to_topological, oracle_jones, unknot_jones
from dahaknots.macdonald import SymPoly, macdonald_poly

RESULTS = {}


def record(num, ok, detail=""):
    RESULTS[num] = (ok, detail)
    return ok


# printed two-variable values
F = 1 - q**4 * t**2
J2_TREFOIL = q**12 * (t**-5 + t**-3) + q**16 * (t**-3 - t)
J3_TREFOIL_F = (
    q**24 * (-(t**-10) - t**-8)
    + q**32 * (-(t**-8) + t**-4)
    + q**28 * (t**-6 + t**-4)
    + q**36 * (-1 - t**-8 + 2 * t**-4)
    + q**40 * (-1 - t**-6 + t**-4 + t**-2)
    + q**44 * (-1 + t**-4 + t**-2 - t**2)
    + q**48 * (-1 + t**4)
)
KP_F = (
    q**32 * (t**-1 - t**3)
    + q**44 * (-(t**-15) - t**-13)
    + q**48 * (t**-11 + t**-9)
    + q**52 * (-(t**-13) + t**-9)
    + q**56 * (-(t**-13) + 2 * t**-9 - t**-5)
    + q**60 * (-(t**-11) + t**-9 + t**-7 - t**-5)
    + q**64 * (t**-9 + t**-7 - t**-5 - t**-3)
    + q**68 * (-(t**-5) + t**-1)
)
KM_F = (
    q**-28 * (t**-1 - t**3)
    + q**4 * (-(t**-5) - t**-3)
    + q**8 * (t**-1 + t)
    + q**12 * (-(t**-3) + t)
    + q**16 * (-(t**-3) + 2 * t - t**5)
    + q**20 * (-(t**-1) + t + t**3 - t**5)
    + q**24 * (t + t**3 - t**5 - t**7)
    + q**28 * (-(t**5) + t**9)
)
KP_JONES = LaurentQ({14: 1, 18: 1, 22: 1, 26: 1, 42: -1, 46: -1, 50: -1, 58: 1})
KM_JONES = LaurentQ({-30: -1, -6: 1, -2: 1, 2: 1, 6: 1, 10: 1, 22: -1, 26: -1, 30: -1, 38: 1})

# the printed cables Kp, Km: (2,5) and (2,-5) cables of the trefoil
KP = ((2, 3), (2, 5))
KM = ((2, 3), (2, -5))
TORUS = [(2, 3), (3, 2), (2, 5), (2, -3)]


def _sign_of(a, b):
    if a == b:
        return 1
    if a == -b:
        return -1
    return None


def check_1():
    expected = SymPoly({2: 1, 0: (1 - t**2) * (1 + q**4) / (1 - t**2 * q**4)})
    return record(1, macdonald_poly(2) == expected, "p_2 canonical form")


def check_2():
    got = iterated_topological(2, ((2, 3),))
    return record(2, got == J2_TREFOIL, got.to_text())


def check_3():
    got = F * iterated_topological(3, ((2, 3),))
    sign = _sign_of(got, J3_TREFOIL_F)
    return record(3, sign == 1, f"computed = {sign} * printed" if sign else "not proportional")


def check_4():
    details, ok = [], True
    for name, spec, printed in (("Kp", KP, KP_F), ("Km", KM, KM_F)):
        got = F * iterated_topological(2, spec)
        sign = _sign_of(got, printed)
        ok = ok and sign == 1
        details.append(f"{name}: computed = {sign} * printed" if sign else f"{name}: not proportional")
    return record(4, ok, "; ".join(details))


def check_5():
    details, ok = [], True
    for name, spec, printed in (("Kp", KP, KP_JONES), ("Km", KM, KM_JONES)):
        got = specialize_t(F * iterated_topological(2, spec), "t=-q^2")
        got = (got / (1 - q**8)).as_laurent_q()
        s1 = _sign_of(got, printed)
        s2 = _sign_of(oracle_jones(2, spec), printed)
        ok = ok and s1 is not None and s2 is not None
        details.append(f"{name}: computed sign {s1}, oracle sign {s2}")
    return record(5, ok, "; ".join(details))


def check_6():
    bad = []
    for n in (1, 2, 3):
        for r, s in TORUS:
            if specialize_t(cherednik_torus(n, r, s), "t=-q^2/t") != sign_torus(n, r, s):
                bad.append((n, r, s))
    return record(6, not bad, f"{12 - len(bad)}/12 identities")


def check_7():
    ratios, ok = [], True
    for pairs in (((2, 3),), ((2, 3), (2, 5))):
        for n in (1, 2):
            got = specialize_t(cd_newton(n, CableSpec(pairs, NEWTON)), "t=-q^2").as_laurent_q()
            ratio = monomial_ratio(got, oracle_jones(n, pairs, NEWTON))
            ok = ok and ratio is not None
            ratios.append(f"{pairs} n={n}: {ratio}")
    return record(7, ok, "; ".join(ratios))


def check_8():
    rows = []
    for fl in selftest.FLAVORS:
        rows += [(f"daha {k} [{fl.tag}]", v) for k, v in selftest.daha_relations(fl).items()]
        rows += [(f"{k} [{fl.tag}]", v) for k, v in selftest.bq_relations(fl).items()]
        rows.append((f"casimir [{fl.tag}]", selftest.casimir(fl)))
        rows.append((f"idempotent [{fl.tag}]", selftest.idempotency(fl)))
    rows.append(("eigen n<=8", selftest.macdonald_eigen(8)))
    rows.append(("S_n n<=8", selftest.macdonald_chebyshev(8)))
    failed = [name for name, ok in rows if not ok]
    return record(8, not failed, f"{len(rows) - len(failed)}/{len(rows)} identities" + (f", failed {failed}" if failed else ""))


def check_9():
    cases = 0
    bad = []
    for family in ("cherednik", "sign", "iterated", "cd"):
        conv = NEWTON if family == "cd" else TOPOLOGICAL
        specs = [((r, s),) for r, s in ((2, 3), (3, 2), (2, 5))]
        if family in ("iterated", "cd"):
            specs.append(KP)
        for pairs in specs:
            for n in (1, 2, 3):
                if len(pairs) > 1 and n > 2:
                    continue
                spec = CableSpec(pairs, conv)
                base = compute(family, n, spec).value
                for variant in (1, -1):
                    cases += 1
                    if compute(family, n, spec, variant).value != base:
                        bad.append((family, pairs, n, variant))
    return record(9, not bad, f"{cases - len(bad)}/{cases} unchanged")


def check_10():
    specs = [((2, 3),), ((3, 2),), ((2, 5),), ((2, -3),), KP, KM, ((2, 3), (3, 2)), ((2, 3), (2, 17))]
    ones = all(oracle_jones(1, s) == 1 for s in specs)
    unknot = all(
        unknot_jones(m).to_ratqt() * (q**2 - q**-2) == (q ** (2 * m) - q ** (-2 * m)) * (-1) ** (m - 1)
        for m in range(1, 10)
    )
    parity = True
    try:
        for s in specs:
            for n in (1, 2, 3):
                oracle_jones(n, s)
        for pairs in (((2, 3),), ((2, 3), (2, 5))):
            for n in (1, 2):
                oracle_jones(n, pairs, NEWTON)
    except AssertionError:
        parity = False
    return record(10, ones and unknot and parity, f"J_1=1 {ones}, unknot {unknot}, parity {parity}")


CHECKS = [check_1, check_2, check_3, check_4, check_5, check_6, check_7, check_8, check_9, check_10]


@pytest.mark.parametrize("num", range(1, 11))
def test_criterion(num):
    ok = CHECKS[num - 1]()
    assert ok, f"criterion {num}: {RESULTS[num][1]}"


# companions that pin what the red criteria actually observe


def test_trefoil_n3_is_minus_printed():
    assert F * iterated_topological(3, ((2, 3),)) == -J3_TREFOIL_F


@pytest.mark.parametrize("spec, printed", [(KP, KP_F), (KM, KM_F)], ids=["Kp", "Km"])
def test_cables_are_minus_printed(spec, printed):
    assert F * iterated_topological(2, spec) == -printed


def test_printed_specializations_match_oracle():
    # the printed two-variable polynomials themselves specialize to +oracle (cables) and -oracle (J_3)
    for spec, printed in ((KP, KP_F), (KM, KM_F)):
        got = (specialize_t(printed, "t=-q^2") / (1 - q**8)).as_laurent_q()
        assert got == oracle_jones(2, spec)
    got = (specialize_t(J3_TREFOIL_F, "t=-q^2") / (1 - q**8)).as_laurent_q()
    assert got == -oracle_jones(3, ((2, 3),))


def test_literal_newton_route_is_another_knot():
    assert newton_to_topological([2, 2], [3, 5]) == [3, 17]
    assert newton_to_topological([2, 2], [3, -5]) == [3, 7]
    for s2, printed in ((5, KP_JONES), (-5, KM_JONES)):
        j = oracle_jones(2, ((2, 3), (2, s2)), NEWTON)
        assert j not in (printed, -printed)
        assert monomial_ratio(j, printed) is None


if __name__ == "__main__":
    for i, fn in enumerate(CHECKS, 1):
        fn()
        ok, detail = RESULTS[i]
        print(f"criterion {i:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
