from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from symsphere.moebius import expand, truth_table_of
from symsphere.spheres import (
    build_phi,
    build_phi_closed,
    build_rho,
    emit_table,
    expand_in_rho_basis,
    format_runs,
    format_table,
    next_pow2,
    parse_runs,
    parse_table,
    phi_factor_parts,
    phi_from_factor_parts,
)
from symsphere.symfunc import DEGREE_CAP, SymmetricPoly, eval_at_weight, poly_mul, restrict

PERIOD_TABLE = Path(__file__).parent / "data" / "period_table.txt"


@pytest.mark.parametrize(
    "t,tau,window",
    [
        (5, 8, [5, 6, 7, 8]),
        (10, 16, [10, 12, 14, 16]),
        (16, 16, [16]),
        (63, 64, [63, 64]),
        (1, 1, [1]),
        (34, 64, list(range(34, 65, 2))),
    ],
)
def test_build_phi_examples(t, tau, window):
    p = build_phi(t)
    assert p.period == tau and p.window() == window and p.constant == 0


def test_phi_zero_is_constant_one():
    p = build_phi(0)
    assert p.constant == 1 and not p.support
    assert all(eval_at_weight(p, w) == 1 for w in range(20))


def test_build_phi_rejects_out_of_range():
    with pytest.raises(ValueError):
        build_phi(-1)
    with pytest.raises(ValueError):
        build_phi(DEGREE_CAP + 1)
    with pytest.raises(ValueError):
        build_rho(DEGREE_CAP + 1)


def test_large_threshold_near_power_of_two():
    t = (1 << 31) - 1
    p = build_phi(t)
    assert p.period == 1 << 31 and p.window() == [t, t + 1]
    assert eval_at_weight(p, t) == 1 and eval_at_weight(p, t - 1) == 0
    assert build_phi(1 << 32).window() == [1 << 32]


@pytest.mark.parametrize("t", range(0, 65))
def test_phi_window_matches_subset_inversion_oracle(t):
    p = build_phi(t)
    coeffs = oracles.phi_coefficients(t, 3 * p.period)
    assert [p.coefficient(i) for i in range(len(coeffs))] == coeffs


@pytest.mark.parametrize("t", range(0, 65))
def test_indicator_property(t):
    p = build_phi(t)
    for w in range(2 * p.period + 1):
        assert eval_at_weight(p, w) == int(w >= t), w


@pytest.mark.parametrize("t", range(0, 65))
def test_shell_property(t):
    p = build_rho(t)
    for w in range(2 * p.period + 1):
        assert eval_at_weight(p, w) == int(w == t), w


@pytest.mark.parametrize("t", range(1, 129))
def test_window_identities(t):
    p = build_phi(t)
    tau = next_pow2(t)
    assert p.period == tau
    assert min(p.support) == t
    assert p.coefficient(t) == 1 and p.coefficient(tau) == 1
    assert all(p.coefficient(j * tau) == 1 for j in range(1, 5))
    e = (t & -t).bit_length() - 1
    assert all(d % (1 << e) == 0 for d in p.support)
    if t == tau:
        assert p.window() == [t]


@pytest.mark.parametrize("t", range(2, 129, 2))
def test_even_case_is_a_stretch(t):
    e = (t & -t).bit_length() - 1
    r = t >> e
    base = build_phi(r)
    p = build_phi(t)
    assert p.period == base.period << e
    assert p.support == frozenset(i << e for i in base.support)


def test_build_phi_closed_examples():
    assert build_phi_closed(8) == SymmetricPoly.periodic(8, [8])
    assert build_phi_closed(7) == SymmetricPoly.periodic(8, [7, 8])
    assert build_phi_closed(9) == SymmetricPoly.periodic(16, range(9, 17))
    assert build_phi_closed(6) is None
    assert build_phi_closed(0) is None


@pytest.mark.parametrize("t", range(1, 1025))
def test_closed_forms_agree_with_recurrence(t):
    closed = build_phi_closed(t)
    if closed is not None:
        assert closed == build_phi(t)


@pytest.mark.parametrize("t,tau,window", [(3, 4, [3]), (8, 16, list(range(8, 16))), (7, 8, [7]), (0, 1, [1])])
def test_build_rho_examples(t, tau, window):
    p = build_rho(t)
    assert p.period == tau and p.window() == window


def test_rho_zero():
    p = build_rho(0)
    assert p.constant == 1
    assert [eval_at_weight(p, w) for w in range(6)] == [1, 0, 0, 0, 0, 0]


@pytest.mark.parametrize("t", range(1, 40))
def test_rho_closed_forms_and_product_form(t):
    n = 40
    rho = restrict(build_rho(t), n)
    phi_t = restrict(build_phi(t), n)
    one_plus_next = restrict(build_phi(t + 1), n) + 1
    assert restrict(poly_mul(phi_t, one_plus_next), n) == rho


@pytest.mark.parametrize("s", range(1, 8))
def test_rho_special_cases(s):
    top = 1 << s
    assert build_rho(top) == SymmetricPoly.periodic(2 * top, range(top, 2 * top))
    assert build_rho(top - 1) == SymmetricPoly.periodic(top, [top - 1])


def test_absorption():
    for n in range(0, 13):
        for t1 in range(0, 17):
            for t2 in range(0, 17):
                prod = poly_mul(restrict(build_phi(t1), n), restrict(build_phi(t2), n))
                assert restrict(prod, n) == restrict(build_phi(max(t1, t2)), n), (n, t1, t2)


def test_emit_table_small_rows():
    rows = emit_table(4)
    assert [(r.t, r.tau_phi, r.phi, r.tau_rho, r.rho) for r in rows] == [
        (1, 1, (1,), 2, (1,)),
        (2, 2, (2,), 4, (2, 3)),
        (3, 4, (3, 4), 4, (3,)),
        (4, 4, (4,), 8, (4, 5, 6, 7)),
    ]
    assert emit_table(34)[33].phi == tuple(range(34, 65, 2))
    with pytest.raises(ValueError):
        emit_table(0)


def test_emit_table_matches_reference_file():
    assert emit_table(63) == parse_table(PERIOD_TABLE.read_text())


def test_table_rows_beyond_reference_satisfy_indicator():
    for row in emit_table(128)[63:]:
        phi = SymmetricPoly.periodic(row.tau_phi, row.phi)
        rho = SymmetricPoly.periodic(row.tau_rho, row.rho)
        for w in range(2 * row.tau_rho + 1):
            assert eval_at_weight(phi, w) == int(w >= row.t)
            assert eval_at_weight(rho, w) == int(w == row.t)


@given(st.lists(st.integers(1, 200), max_size=30, unique=True))
def test_runs_roundtrip(values):
    values = sorted(values)
    assert list(parse_runs(format_runs(values))) == values


def test_format_runs_notation():
    assert format_runs([5, 6, 7, 8]) == "5..8"
    assert format_runs([3, 4]) == "3,4"
    assert format_runs([20, 21, 22, 23, 28, 29, 30, 31]) == "20..23,28..31"
    assert format_runs([]) == ""


def test_format_table_parses_back():
    rows = emit_table(70)
    assert parse_table(format_table(rows)) == rows


def test_expand_in_rho_basis_examples():
    assert expand_in_rho_basis([0, 0, 0, 1, 1, 1, 1]) == restrict(build_phi(3), 6)
    assert expand_in_rho_basis([1, 1, 1, 1, 1]) == SymmetricPoly.finite(constant=1)
    p = expand_in_rho_basis([0, 1, 0, 1, 0])
    assert p == SymmetricPoly.finite([1])
    # Dense check over every point of 4 variables.
    tt = truth_table_of(expand(p, 4))
    assert tt.bits.tolist() == [oracles.popcount(m) % 2 for m in range(16)]


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(0, 1), min_size=1, max_size=13))
def test_rho_basis_reproduces_profile(values):
    p = expand_in_rho_basis(values)
    n = len(values) - 1
    assert all(d <= n for d in p.support)
    assert [eval_at_weight(p, w) for w in range(n + 1)] == values


def test_expand_in_rho_basis_validation():
    with pytest.raises(ValueError):
        expand_in_rho_basis([])
    with pytest.raises(ValueError):
        expand_in_rho_basis([0, 2])


def test_phi_factor_parts_examples():
    psi, eta = phi_factor_parts(8)
    assert psi == SymmetricPoly.periodic(8, [8], constant=1)
    assert eta == SymmetricPoly.finite([8])
    _, eta7 = phi_factor_parts(7)
    assert eta7 == SymmetricPoly.finite([7, 8])
    with pytest.raises(ValueError):
        phi_factor_parts(0)


@pytest.mark.parametrize("t", range(1, 34))
def test_factor_product_matches_phi_below_two_to_the_s(t):
    psi, eta = phi_factor_parts(t)
    tau = next_pow2(t)
    for n in range(0, tau):
        prod = restrict(poly_mul(restrict(psi, n), restrict(eta, n)), n)
        assert prod == restrict(build_phi(t), n)


@pytest.mark.parametrize("t", range(1, 34))
def test_plain_factor_product_misses_top_terms(t):
    # psi * sigma_(2^s) vanishes, so from n = 2^s on the plain product
    # differs from phi_t by exactly phi_(2^s).
    psi, eta = phi_factor_parts(t)
    tau = next_pow2(t)
    n = tau
    prod = restrict(poly_mul(restrict(psi, n), restrict(eta, n)), n)
    assert prod != restrict(build_phi(t), n)
    assert prod + restrict(build_phi(tau), n) == restrict(build_phi(t), n)


@pytest.mark.parametrize("t", range(1, 34))
def test_factor_parts_rebuild_phi(t):
    for n in (0, 5, 12, 31, 64, 100):
        assert phi_from_factor_parts(t, n) == restrict(build_phi(t), n)


def test_factor_parts_dense_check_t5():
    n = 12
    rebuilt = phi_from_factor_parts(5, n)
    tt = truth_table_of(expand(rebuilt, n))
    assert tt.bits.tolist() == [int(oracles.popcount(m) >= 5) for m in range(1 << n)]


def test_table_file_is_plain_ascii():
    raw = PERIOD_TABLE.read_bytes()
    assert raw.isascii() and raw.endswith(b"\n")
