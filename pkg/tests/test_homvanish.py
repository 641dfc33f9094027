import pytest
import sympy

from catsl2 import _accel
from catsl2.homvanish import (
    check_convolution_conditions,
    closed_form_ok,
    degree_gap_cond1,
    degree_gap_cond2,
    discriminant_of,
    discriminants,
    gap_quadratic,
    gap_sweep,
    no_f_part_bounds,
    no_f_part_contradiction,
)


def test_cond1_example():
    r = degree_gap_cond1(0, 2, 2, 0)
    assert (r.a, r.b, r.d_max, r.d_min, r.gap_ok) == (0, 2, 0, 3, True)


def test_domain_errors():
    with pytest.raises(ValueError):
        degree_gap_cond1(0, 2, 1, 0)
    with pytest.raises(ValueError):
        degree_gap_cond1(0, 2, 2, 1)
    with pytest.raises(ValueError):
        degree_gap_cond2(0, 3, 2, 0)
    with pytest.raises(ValueError):
        discriminants(-1)


def test_symbolic_simplifications():
    lam, s, k, j = sympy.symbols("lam s k j")
    a, b = lam + s - k, lam + s
    d = s * (a - j) - (a - j) * (s - k + 2 * b - j)
    assert sympy.expand(d - (a - j) * (k - 2 * b + j)) == 0
    for h in (1, 2):
        dp = -(b - j) * (s - k) - j * (s - k + b - j) + (lam + s) * s - h
        assert sympy.expand(dp - (b * (k - j) + j ** 2 - h)) == 0
        quad = 2 * j ** 2 + 2 * j * (-2 * b + k) + k ** 2 + 2 * a * b - h
        assert sympy.expand((dp - d) - quad) == 0
        disc = sympy.discriminant(quad, j)
        assert sympy.expand(disc - (-4 * k ** 2 + 8 * h)) == 0


def test_discriminants():
    assert discriminants(2) == (-8, 0)
    assert discriminants(3) == (-28, -20)
    assert discriminants(1) == (4, 12)
    for k in range(2, 20):
        for a in range(6):
            assert discriminant_of(k, a, a + k, 1) == discriminants(k)[0]
            assert discriminant_of(k, a, a + k, 2) == discriminants(k)[1]
    assert closed_form_ok(2, 1) and not closed_form_ok(2, 2) and closed_form_ok(3, 2)


def test_quadratic_positive_on_integers():
    for k in range(2, 15):
        for b in range(k, 25):
            a = b - k
            for j in range(-30, 31):
                assert gap_quadratic(k, a, b, j, 1) > 0
                if k >= 3:
                    assert gap_quadratic(k, a, b, j, 2) > 0


def test_convolution_conditions_examples():
    assert check_convolution_conditions(2, 0).passed
    single = check_convolution_conditions(7, 7)
    assert single.passed and single.rows == []
    with pytest.raises(ValueError):
        check_convolution_conditions(3, 0)


def test_convolution_conditions_sweep():
    total = 0
    for N in range(31):
        for lam in range(N % 2, N + 1, 2):
            c = check_convolution_conditions(N, lam)
            assert c.passed and c.closed_form_agrees
            total += len(c.rows)
    assert total == 37688 + 26663


@pytest.mark.parametrize("backend", ["numpy", "numba"])
def test_sweep_backends(backend):
    if backend == "numba" and not _accel.HAVE_NUMBA:
        pytest.skip("numba unavailable")
    out = gap_sweep(30, backend)
    assert out == {"cond1_cases": 37688, "cond1_failures": 0, "cond2_cases": 26663, "cond2_failures": 0}


def test_no_f_part_bounds():
    assert no_f_part_bounds(0, 0, 1) == (-1, 1)
    assert no_f_part_contradiction(0, 0, 1)
    assert no_f_part_bounds(2, 1, 2) == (-10, 10)
    assert no_f_part_bounds(-3, 1, 2) == (0, 0)
    assert not no_f_part_contradiction(-3, 1, 2)
    with pytest.raises(ValueError):
        no_f_part_bounds(0, 0, 0)


def test_no_f_part_sweep_and_mirror():
    for lam in range(-15, 16):
        for r in range(16):
            for a in range(1, 16):
                upper, lower = no_f_part_bounds(lam, r, a)
                assert upper == -lower
                assert no_f_part_contradiction(lam, r, a) == (lam + r + a > 0)


def test_report_json():
    r = degree_gap_cond2(1, 4, 3, 1, N=9)
    d = r.to_json()
    assert d["condition"] == 2 and d["N"] == 9 and d["gap_ok"] is True
