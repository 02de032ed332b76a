import math
import os
import subprocess

import pytest

import wpbounds as wb

EPS2 = math.asinh(1.0)


def test_kernel_values():
    assert wb.riera_R(0.0) == pytest.approx(-2.0)
    assert wb.riera_R(3.0) == pytest.approx(3 * math.log(2) - 2, rel=1e-14)
    value, tail, terms = wb.a_hat(0.0)
    assert value == pytest.approx(8 / 3) and tail == 0.0
    assert wb.collar_area(EPS2) == pytest.approx(math.pi + 2, rel=1e-15)


def test_u_value_orthogonal():
    u, crossing = wb.u_value(0.0, math.inf, -1.0, 1.0)
    assert crossing and abs(u) < 1e-12
    u, crossing = wb.u_value(-1.0, 1.0, -3.0, 3.0)
    assert not crossing and u == pytest.approx(5 / 3)


def test_integrals_bracket_reference():
    h = wb.integral_H(0.0, 2 * EPS2)
    assert h.lo <= 3.2746647440491 <= h.hi
    assert h.width <= 1e-7
    assert wb.integral_K(0.0, 1 / (2 * math.pi)) == pytest.approx(1.0)
    assert wb.W2(2.42).lo >= 10.09656
    with pytest.raises(ValueError):
        wb.integral_H(1.0, 0.5)


def test_delta11():
    lo_end, hi_end = wb.delta11_elementary()
    assert lo_end.lo == pytest.approx(6.5725236033, abs=1e-9)
    b = wb.delta11_bracket(6)
    assert lo_end.lo <= b.lo <= b.hi <= hi_end.hi
    kind, v = wb.strata_separation(2, "sphere", b)
    assert kind == "exact" and v.lo == pytest.approx(math.sqrt(2) * b.lo)


def test_cosets():
    assert sorted(wb.enumerate_cosets("AA", 1)) == ["B", "b"]
    assert len(wb.enumerate_cosets("AB", 8)) == 3280
    g = wb.grad_sq_bracket(1.0, 4)
    assert 2 / math.pi <= g.lo <= g.hi <= 4 / math.pi * math.sinh(0.5)


def test_lipschitz_and_constants_table():
    assert f"{wb.systole_lipschitz_constant():.6f}".startswith("2.00423")
    names = [r["name"] for r in wb.constants()]
    assert len(names) == len(set(names))
    assert "brock_bromberg_11" in names


@pytest.mark.skipif("WPBOUNDS_CLI" not in os.environ, reason="command-line tool not built")
def test_cli_integral():
    out = subprocess.run([os.environ["WPBOUNDS_CLI"], "integral", "K", "0", "1"], capture_output=True, text=True)
    assert out.returncode == 0
    assert "K = [" in out.stdout
