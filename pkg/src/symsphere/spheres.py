"""Sphere polynomials ``phi_t`` and shell polynomials ``rho_t``.

``phi_t`` is the ANF of the symmetric function that is 0 on every point of
weight below ``t`` and 1 elsewhere; ``rho_t = phi_t + phi_(t+1)`` is the
indicator of the weight-``t`` shell.  Both are built directly in the sigma
basis and are periodic in the degree with a power-of-two period.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .symfunc import DEGREE_CAP, SymmetricPoly, binom_parity, restrict, submasks


def next_pow2(t: int) -> int:
    """Smallest power of two that is ``>= t`` (``t >= 1``)."""
    return 1 << (t - 1).bit_length()


def _check_threshold(t: int) -> None:
    if t < 0:
        raise ValueError("threshold must be non-negative")
    if t > DEGREE_CAP:
        raise ValueError(f"threshold {t} exceeds the supported cap {DEGREE_CAP}")


@lru_cache(maxsize=1024)
def _odd_window(t: int) -> tuple[int, ...]:
    """Degrees ``i`` in ``[t, 2^s]`` with ``a_(t,i) = 1``, for odd ``t``.

    ``a_(t,t) = 1`` and ``a_(t,i) = 1 + sum_(j=t)^(i-1) a_(t,j) C(i,j)``.
    Only ``j`` with odd ``C(i, j)`` matter, so each step walks whichever of
    ``[t, i)`` and the submasks of ``i`` is shorter.
    """
    tau = next_pow2(t)
    ones = {t}
    for i in range(t + 1, tau + 1):
        acc = 1
        if i - t <= 1 << min(i.bit_count(), 62):
            for j in range(t, i):
                if j in ones:
                    acc ^= binom_parity(i, j)
        else:
            for j in submasks(i):
                if t <= j < i and j in ones:
                    acc ^= 1
        if acc:
            ones.add(i)
    return tuple(sorted(ones))


def build_phi(t: int) -> SymmetricPoly:
    """``phi_t`` in periodic sigma form.

    Odd ``t`` runs the coefficient recurrence over ``[t, 2^s]``.  Even
    ``t = r * 2^e`` stretches the window of ``phi_r`` by ``2^e``.  ``phi_0``
    is the constant 1.
    """
    _check_threshold(t)
    if t == 0:
        return SymmetricPoly.periodic(1, (), constant=1)
    e = (t & -t).bit_length() - 1
    r = t >> e
    base = _odd_window(r)
    return SymmetricPoly.periodic(next_pow2(r) << e, (i << e for i in base))


def build_phi_closed(t: int) -> SymmetricPoly | None:
    """Closed form of ``phi_t`` for ``t`` in ``{2^s, 2^s - 1, 2^(s-1) + 1}``.

    Returns ``None`` for every other ``t``.
    """
    _check_threshold(t)
    if t < 1:
        return None
    if t & (t - 1) == 0:
        return SymmetricPoly.periodic(t, [t])
    tau = next_pow2(t)
    if t == tau - 1:
        return SymmetricPoly.periodic(tau, [tau - 1, tau])
    if t == tau // 2 + 1:
        return SymmetricPoly.periodic(tau, range(t, tau + 1))
    return None


def build_rho(t: int) -> SymmetricPoly:
    """``rho_t = phi_t + phi_(t+1)`` with the lcm of the two periods."""
    _check_threshold(t)
    return build_phi(t) + build_phi(t + 1)


def phi_factor_parts(t: int) -> tuple[SymmetricPoly, SymmetricPoly]:
    """Return ``(psi, eta)`` with ``psi = phi_(2^s) + 1`` and ``eta`` the window of ``phi_t``.

    ``eta = sum_(i=t)^(2^s) a_i sigma_i`` is finite and ``psi`` is periodic.
    Note that ``psi * sigma_(2^s) = 0``, so the plain product ``psi * eta``
    only matches ``phi_t`` below degree ``2^s``; in every number of
    variables ``phi_t = psi * eta + phi_(2^s)``
    (see :func:`phi_from_factor_parts`).
    """
    if t < 1:
        raise ValueError("phi_factor_parts needs t >= 1")
    _check_threshold(t)
    tau = next_pow2(t)
    psi = build_phi(tau) + 1
    eta = SymmetricPoly.finite(build_phi(t).support)
    return psi, eta


def phi_from_factor_parts(t: int, n: int) -> SymmetricPoly:
    """Rebuild ``phi_t`` in ``n`` variables as ``psi * eta + phi_(2^s)``."""
    psi, eta = phi_factor_parts(t)
    top = build_phi(next_pow2(t))
    product = restrict(psi, n) * restrict(eta, n)
    return restrict(product + restrict(top, n), n)


def expand_in_rho_basis(values: Sequence[int]) -> SymmetricPoly:
    """Symmetric polynomial in ``len(values) - 1`` variables with the given weight profile.

    ``values[w]`` is the value on points of weight ``w``; the result is the
    sum of ``rho_w`` over the weights where it is 1, restricted to ``n``.
    """
    if not values:
        raise ValueError("need at least the value at weight 0")
    n = len(values) - 1
    acc = SymmetricPoly.finite()
    for w, bit in enumerate(values):
        if bit not in (0, 1):
            raise ValueError("weight profile entries must be 0 or 1")
        if bit:
            acc = acc + restrict(build_rho(w), n)
    return acc


@dataclass(frozen=True)
class TableRow:
    t: int
    tau_phi: int
    phi: tuple[int, ...]
    tau_rho: int
    rho: tuple[int, ...]


def table_row(t: int) -> TableRow:
    phi = build_phi(t)
    rho = build_rho(t)
    assert phi.period is not None and rho.period is not None
    return TableRow(t, phi.period, tuple(phi.window()), rho.period, tuple(rho.window()))


def emit_table(max_t: int) -> list[TableRow]:
    """Rows ``1..max_t``: periods and window indices of ``phi_t`` and ``rho_t``."""
    if max_t < 1:
        raise ValueError("max_t must be at least 1")
    return [table_row(t) for t in range(1, max_t + 1)]


def format_runs(indices: Sequence[int]) -> str:
    """Comma list with runs of three or more consecutive values as ``a..b``."""
    parts: list[str] = []
    i = 0
    while i < len(indices):
        j = i
        while j + 1 < len(indices) and indices[j + 1] == indices[j] + 1:
            j += 1
        if j - i >= 2:
            parts.append(f"{indices[i]}..{indices[j]}")
            i = j + 1
        else:
            parts.append(str(indices[i]))
            i += 1
    return ",".join(parts)


def parse_runs(text: str) -> tuple[int, ...]:
    """Inverse of :func:`format_runs`; also accepts short runs such as ``3..4``."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if ".." in part:
            lo, hi = (int(x) for x in part.split(".."))
            if hi < lo:
                raise ValueError(f"bad run {part!r}")
            out.extend(range(lo, hi + 1))
        else:
            out.append(int(part))
    return tuple(out)


def format_table(rows: Sequence[TableRow]) -> str:
    """Fixed-width text, one line per row: ``t  tau  phi  tau  rho``."""
    lines = []
    for row in rows:
        lines.append(
            f"{row.t:>3} {row.tau_phi:>4}  {format_runs(row.phi):<40} "
            f"{row.tau_rho:>4}  {format_runs(row.rho)}".rstrip()
        )
    return "\n".join(lines) + "\n"


def parse_table(text: str) -> list[TableRow]:
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 5:
            raise ValueError(f"expected 5 fields, got {len(fields)}: {line!r}")
        t, tau_phi, phi, tau_rho, rho = fields
        rows.append(TableRow(int(t), int(tau_phi), parse_runs(phi), int(tau_rho), parse_runs(rho)))
    return rows
