import pytest
import sympy as sp

from alphaline.families import Family, FamilySpec, generate, parse_family_range
from alphaline.formulas import (
    Prediction,
    armed_crown_odd_product,
    armed_crown_odd_sum,
    predict,
)
from alphaline.solvers import (
    MAX_BRUTEFORCE_EDGES,
    MAX_BRUTEFORCE_VERTICES,
    matching_bruteforce,
    max_matching,
    mis_bruteforce,
    mis_exact,
)


def test_examples():
    p = predict(FamilySpec.parse("wheel:n=5"))
    assert (p.sum, p.product) == (4, 4)
    p = predict(FamilySpec.parse("helm:n=3"))
    assert (p.sum, p.product) == (7, 12)
    p = predict(FamilySpec.parse("armed_crown:m=3,n=3"))
    assert (p.alpha, p.alpha_line, p.sum, p.product) == (4, 4, 8, 16)


def test_sum_and_product_are_derived():
    p = Prediction(3, 5, "x")
    assert (p.sum, p.product) == (8, 15)
    assert Prediction.from_dict({**p.to_dict(), "sum": 999}) == p


@pytest.mark.parametrize("n", range(1, 13))
def test_complete(n):
    p = predict(FamilySpec.of("complete", n=n))
    assert (p.alpha, p.alpha_line, p.sum, p.product) == (1, n // 2, n // 2 + 1, n // 2)


def test_complete_bipartite():
    for m in range(1, 9):
        for n in range(1, 9):
            p = predict(FamilySpec.of("complete_bipartite", m=m, n=n))
            assert (p.sum, p.product) == (m + n, m * n)


def test_fan_parity():
    for n in range(1, 20):
        p = predict(FamilySpec.of("fan", n=n))
        if n % 2 == 0:
            assert (p.sum, p.product) == (n, n * n // 4)
        else:
            assert (p.sum, p.product) == (n + 1, (n + 1) ** 2 // 4)


def test_path_and_cycle_auxiliaries():
    for n in range(2, 20):
        p = predict(FamilySpec.of("path", n=n))
        assert (p.alpha, p.alpha_line) == ((n + 1) // 2, n // 2)
    for n in range(3, 20):
        p = predict(FamilySpec.of("cycle", n=n))
        assert (p.alpha, p.alpha_line) == (n // 2, n // 2)


def test_armed_crown_even_cases_agree_with_published_sum_and_product():
    for m in range(2, 12):
        for n in range(3, 12):
            if m % 2 and n % 2:
                continue
            p = predict(FamilySpec.of("armed_crown", m=m, n=n))
            assert p.alpha == p.alpha_line == n * m // 2
            assert p.sum == m * n
            assert 4 * p.product == n * n * m * m


def test_armed_crown_odd_grouping_numeric():
    for m in range(3, 40, 2):
        for n in range(3, 40, 2):
            p = predict(FamilySpec.of("armed_crown", m=m, n=n))
            assert armed_crown_odd_sum(m, n) == p.sum
            assert armed_crown_odd_product(m, n) == p.product


def test_armed_crown_odd_grouping_symbolic():
    # m = 2a + 1, n = 2b + 1: floor(n/2) = b, ceil(n/2) = b + 1
    a, b = sp.symbols("a b", integer=True, nonnegative=True)
    m, n = 2 * a + 1, 2 * b + 1
    alpha = b * (m + 1) / 2 + (b + 1) * (m - 1) / 2
    nu = b + n * (m - 1) / 2
    grouped = b * ((m + 1) / 2 + 1) + ((m - 1) / 2) * (n + b + 1)
    assert sp.simplify(grouped - (alpha + nu)) == 0


ALL_SMALL = (
    parse_family_range("complete:n=1..7")
    + parse_family_range("complete_bipartite:m=1..5,n=1..5")
    + parse_family_range("path:n=2..12")
    + parse_family_range("cycle:n=3..12")
    + parse_family_range("wheel:n=3..12")
    + parse_family_range("helm:n=3..8")
    + parse_family_range("fan:n=1..12")
    + parse_family_range("sun:n=3..5")
    + parse_family_range("sunlet:n=3..12")
    + parse_family_range("armed_crown:m=2..5,n=3..6")
)


def test_predict_is_total():
    for family in Family:
        params = {"n": 6}
        if family in (Family.ARMED_CROWN, Family.COMPLETE_BIPARTITE):
            params["m"] = 3
        assert isinstance(predict(FamilySpec.of(family, **params)), Prediction)


def _odd_wheel(spec):
    return spec.family is Family.WHEEL and spec["n"] % 2 == 1


@pytest.mark.parametrize("spec", [s for s in ALL_SMALL if not _odd_wheel(s)], ids=str)
def test_prediction_matches_bruteforce(spec):
    g = generate(spec)
    p = predict(spec)
    if g.n <= MAX_BRUTEFORCE_VERTICES:
        assert mis_bruteforce(g).value == p.alpha
    else:
        assert mis_exact(g).value == p.alpha
    if g.m <= MAX_BRUTEFORCE_EDGES:
        assert matching_bruteforce(g).value == p.alpha_line
    else:
        assert max_matching(g).value == p.alpha_line


@pytest.mark.parametrize("n", [3, 5, 7, 9, 11])
def test_odd_wheel_matching_formula_is_one_short(n):
    """Recorded discrepancy: the odd-rim wheel has a perfect matching."""
    spec = FamilySpec.of("wheel", n=n)
    g = generate(spec)
    p = predict(spec)
    assert mis_bruteforce(g).value == p.alpha
    assert p.alpha_line == n // 2
    assert matching_bruteforce(g).value == (n + 1) // 2 == p.alpha_line + 1
