import io
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vacuum_pressure.dielectric import (
    Constant,
    DrudePlasma,
    Exponential,
    Sharp,
    SmoothExponential,
    Step,
    Tabulated,
    Vacuum,
    cutoff_weight,
    effective_inverse_c_cubed,
    epsilon_at,
    load_tabulated_model,
)
from vacuum_pressure.errors import DomainError, TableParseError
from vacuum_pressure.units import C

WP = 1.5e16


def test_epsilon_examples():
    assert epsilon_at(Vacuum(), 123.0) == 1.0
    assert epsilon_at(DrudePlasma(WP), WP) == 0.0
    assert epsilon_at(DrudePlasma(WP), WP / math.sqrt(2)) == pytest.approx(-1.0, rel=1e-15)


def test_drude_singular_at_zero():
    with pytest.raises(DomainError):
        epsilon_at(DrudePlasma(WP), 0.0)


def test_step_model():
    m = Step(2.0, 0.05, WP)
    assert epsilon_at(m, 0.04 * WP) == 2.0
    assert epsilon_at(m, 0.06 * WP) == 1.0


@pytest.mark.parametrize("args", [(0.0, 0.05, WP), (2.0, 0.0, WP), (2.0, 1.0, WP), (2.0, 0.5, -1.0)])
def test_step_invariants(args):
    with pytest.raises(DomainError):
        Step(*args)


def test_constant_positive():
    with pytest.raises(DomainError):
        Constant(0.0)


def test_tabulated_interpolation_and_clamping():
    m = Tabulated((1.0, 2.0, 4.0), (1.0, 3.0, 2.0))
    assert m.epsilon(1.5) == 2.0
    assert m.epsilon(3.0) == 2.5
    assert m.epsilon(0.1) == 1.0
    assert m.epsilon(100.0) == 2.0


def test_cutoff_weight_examples():
    wc = 2.0
    assert cutoff_weight(Sharp(wc), wc / 2) == 1.0
    assert cutoff_weight(Sharp(wc), 2 * wc) == 0.0
    assert cutoff_weight(SmoothExponential(wc, 0.3), wc) == 1.0
    assert cutoff_weight(SmoothExponential(wc, 0.3), 0.0) == 1.0
    assert cutoff_weight(Exponential(wc), 0.0) == 1.0
    with pytest.raises(DomainError):
        cutoff_weight(Sharp(wc), -1.0)


@given(st.floats(0, 10), st.floats(0, 10))
def test_cutoff_weights_bounded_and_non_increasing(a, b):
    lo, hi = sorted((a, b))
    for spec in (Sharp(2.0), SmoothExponential(2.0, 0.7), Exponential(2.0)):
        w_lo, w_hi = cutoff_weight(spec, lo), cutoff_weight(spec, hi)
        assert 0 <= w_hi <= w_lo <= 1


def test_smooth_cutoff_vanishes_far_above():
    assert cutoff_weight(SmoothExponential(1.0, 0.1), 3.0) < 1e-100


# ---- effective speed


def test_effective_vacuum_is_exact():
    eff = effective_inverse_c_cubed(Vacuum(), Sharp(WP))
    assert eff.valid
    assert eff.inv_c_bar_cubed == pytest.approx(1 / C**3, rel=1e-15)
    assert eff.eps_bar == pytest.approx(1.0, rel=1e-14)


def test_effective_step_closed_form():
    # int_0^1 x^3 eps^1.5 / int_0^1 x^3 with eps = 2 on [0, 0.05]: hand integration
    expected = 1 + (2**1.5 - 1) * 0.05**4
    assert expected - 1 == pytest.approx(1.1426e-5, rel=2e-4)
    eff = effective_inverse_c_cubed(Step(2.0, 0.05, WP), Sharp(WP))
    assert eff.inv_c_bar_cubed * C**3 == pytest.approx(expected, rel=1e-13)


@pytest.mark.parametrize("eps", [0.5, 2.0, 7.3])
def test_effective_constant(eps):
    eff = effective_inverse_c_cubed(Constant(eps), Sharp(WP))
    assert eff.inv_c_bar_cubed == pytest.approx(eps**1.5 / C**3, rel=1e-13)
    assert eff.eps_bar == pytest.approx(eps, rel=1e-12)


def test_effective_drude_invalid():
    eff = effective_inverse_c_cubed(DrudePlasma(WP), Sharp(WP))
    assert not eff.valid
    assert "transparent" in eff.reason


def test_effective_tabulated_negative_invalid():
    table = Tabulated((0.0, WP), (1.0, -0.5))
    assert not effective_inverse_c_cubed(table, Sharp(WP)).valid
    # negative only above the cutoff is fine
    table = Tabulated((0.0, WP, 2 * WP), (1.0, 1.0, -0.5))
    assert effective_inverse_c_cubed(table, Sharp(WP)).valid


@settings(max_examples=25, deadline=None)
@given(st.floats(1.0, 10.0), st.floats(0.01, 0.99), st.sampled_from(["sharp", "smooth", "exp"]))
def test_effective_at_least_vacuum_when_eps_ge_1(eps_low, frac, kind):
    cutoff = {"sharp": Sharp(WP), "smooth": SmoothExponential(WP, 0.2 * WP), "exp": Exponential(WP)}[kind]
    eff = effective_inverse_c_cubed(Step(eps_low, frac, WP), cutoff)
    assert eff.inv_c_bar_cubed * C**3 >= 1 - 1e-13


@settings(max_examples=25, deadline=None)
@given(st.floats(0.1, 10.0), st.floats(0.1, 10.0), st.floats(0.01, 0.99))
def test_effective_monotone_in_eps_low(a, b, frac):
    lo, hi = sorted((a, b))
    e_lo = effective_inverse_c_cubed(Step(lo, frac, WP), Sharp(WP)).inv_c_bar_cubed
    e_hi = effective_inverse_c_cubed(Step(hi, frac, WP), Sharp(WP)).inv_c_bar_cubed
    assert e_hi >= e_lo * (1 - 1e-13)


# ---- tabulated input


def test_load_constant_table():
    m = load_tabulated_model(io.StringIO("1,1\n2,1\n"))
    assert m.omegas == (1.0, 2.0)
    assert m.epsilon(1.5) == 1.0


def test_load_with_header_and_comments(tmp_path):
    p = tmp_path / "eps.csv"
    p.write_text("# sample\nomega_rad_per_s,epsilon\n1.0,2.0\n\n# mid comment\n3.0,4.0\n", encoding="utf-8")
    m = load_tabulated_model(p)
    assert m.epsilon(2.0) == 3.0
    assert m.label() == f"table:{p}"


@pytest.mark.parametrize(
    "text, line",
    [
        ("2,1\n1,1\n", 2),
        ("1,1\n1,2\n", 2),
        ("1,1\n2,x\n", 2),
        ("1,1,1\n2,2\n", 1),
        ("1,1\n", None),
        ("", None),
        ("1,1\n2,nan\n", 2),
    ],
)
def test_load_errors(text, line):
    with pytest.raises(TableParseError) as info:
        load_tabulated_model(io.StringIO(text))
    assert info.value.line == line


def test_sampled_step_round_trip():
    step = Step(2.0, 0.05, WP)
    edge = step.edge
    # dense sampling with a narrow ramp across the discontinuity
    omegas = [i * edge / 200 for i in range(200)] + [edge * (1 - 1e-9), edge * (1 + 1e-9)] + [edge * (1 + i / 50) for i in range(1, 1000)]
    rows = "\n".join(f"{w!r},{step.epsilon(w)!r}" for w in omegas)
    table = load_tabulated_model(io.StringIO(rows))
    for w in [0.3 * edge, 0.999 * edge, 1.5 * edge, 10 * edge]:
        assert table.epsilon(w) == pytest.approx(step.epsilon(w), rel=1e-12)
    a = effective_inverse_c_cubed(step, Sharp(WP)).inv_c_bar_cubed
    b = effective_inverse_c_cubed(table, Sharp(WP)).inv_c_bar_cubed
    assert b == pytest.approx(a, rel=1e-9)
