"""Symmetric square-free polynomials over GF(2) in the elementary symmetric basis.

A symmetric Boolean polynomial is a GF(2) combination ``c + sum a_i sigma_i``
where ``sigma_i`` is the sum of all square-free monomials of degree ``i``.
Two shapes are supported:

* finite: a set of degrees with coefficient 1, valid in any number of
  variables;
* periodic: a window of residues ``1..period`` such that
  ``a_i = window[((i - 1) % period) + 1]`` for every ``i >= 1``.  This is the
  shape of the sphere polynomials in unboundedly many variables.

Binomial parity is read off the binary digits (Lucas), and products use
``sigma_i * sigma_j = sigma_(i | j)``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import reduce
from math import lcm
from typing import Iterable, Iterator

DEGREE_CAP = 1 << 32
"""Largest degree, threshold or period accepted anywhere in the package."""


def binom_parity(w: int, i: int) -> int:
    """Return ``C(w, i) mod 2`` (1 iff the bits of ``i`` are a subset of ``w``)."""
    if w < 0 or i < 0:
        raise ValueError("binom_parity expects non-negative integers")
    return int(i & w == i)


def is_subset(a: int, b: int) -> bool:
    return a & b == a


def sigma_mul(i: int, j: int) -> int:
    """Degree ``h`` with ``sigma_i * sigma_j = sigma_h``, i.e. ``i | j``."""
    if i < 1 or j < 1:
        raise ValueError("sigma_mul is defined for positive degrees only")
    return i | j


def submasks(w: int) -> Iterator[int]:
    """Yield every non-zero submask of ``w`` in decreasing order."""
    sub = w
    while sub:
        yield sub
        sub = (sub - 1) & w


def _check_degree(d: int) -> None:
    if d > DEGREE_CAP:
        raise ValueError(f"degree {d} exceeds the supported cap {DEGREE_CAP}")


@dataclass(frozen=True)
class SymmetricPoly:
    """A symmetric square-free polynomial in the sigma basis.

    ``support`` holds positive degrees (finite form) or residues in
    ``1..period`` (periodic form).  ``constant`` is the coefficient of
    ``sigma_0 = 1`` and is never stored in ``support``.
    """

    constant: int = 0
    support: frozenset[int] = frozenset()
    period: int | None = None

    def __post_init__(self) -> None:
        if self.constant not in (0, 1):
            raise ValueError("constant must be 0 or 1")
        if not isinstance(self.support, frozenset):
            object.__setattr__(self, "support", frozenset(self.support))
        if any(d < 1 for d in self.support):
            raise ValueError("support degrees must be positive")
        if self.period is not None:
            p = self.period
            if p < 1 or p & (p - 1):
                raise ValueError(f"period must be a power of two, got {p}")
            _check_degree(p)
            if any(d > p for d in self.support):
                raise ValueError("periodic window residues must lie in 1..period")
        elif self.support:
            _check_degree(max(self.support))

    @classmethod
    def finite(cls, degrees: Iterable[int] = (), constant: int = 0) -> SymmetricPoly:
        return cls(constant, frozenset(degrees), None)

    @classmethod
    def periodic(cls, period: int, window: Iterable[int], constant: int = 0) -> SymmetricPoly:
        return cls(constant, frozenset(window), period)

    @classmethod
    def sigma(cls, i: int) -> SymmetricPoly:
        if i == 0:
            return cls(1)
        return cls.finite([i])

    @property
    def is_periodic(self) -> bool:
        return self.period is not None

    @property
    def is_zero(self) -> bool:
        return not self.constant and not self.support

    def window(self) -> list[int]:
        """Sorted support (degrees, or residues for the periodic form)."""
        return sorted(self.support)

    def coefficient(self, i: int) -> int:
        if i < 0:
            raise ValueError("degree must be non-negative")
        if i == 0:
            return self.constant
        if self.period is None:
            return int(i in self.support)
        return int((i - 1) % self.period + 1 in self.support)

    def eval_at_weight(self, w: int) -> int:
        return eval_at_weight(self, w)

    def restrict(self, n: int) -> SymmetricPoly:
        return restrict(self, n)

    def __add__(self, other: SymmetricPoly | int) -> SymmetricPoly:
        if isinstance(other, int):
            if other not in (0, 1):
                return NotImplemented
            return SymmetricPoly(self.constant ^ other, self.support, self.period)
        if not isinstance(other, SymmetricPoly):
            return NotImplemented
        c = self.constant ^ other.constant
        if self.period is None and other.period is None:
            return SymmetricPoly(c, self.support ^ other.support)
        if self.period is None or other.period is None:
            raise ValueError("cannot add a finite and a periodic polynomial; restrict first")
        period = lcm(self.period, other.period)
        return SymmetricPoly(
            c,
            _unroll_window(self, period) ^ _unroll_window(other, period),
            period,
        )

    __radd__ = __add__

    def __mul__(self, other: SymmetricPoly) -> SymmetricPoly:
        if not isinstance(other, SymmetricPoly):
            return NotImplemented
        return poly_mul(self, other)

    def __str__(self) -> str:
        terms = ["1"] if self.constant else []
        terms += [f"sigma[{d}]" for d in self.window()]
        body = " + ".join(terms) if terms else "0"
        if self.period is not None:
            return f"{body} (period {self.period})"
        return body


def _unroll_window(p: SymmetricPoly, period: int) -> frozenset[int]:
    assert p.period is not None and period % p.period == 0
    reps = period // p.period
    return frozenset(r + j * p.period for r in p.support for j in range(reps))


def poly_mul(p: SymmetricPoly, q: SymmetricPoly) -> SymmetricPoly:
    """Product of two finite symmetric polynomials.

    The coefficient of ``sigma_h`` is the parity of the number of supported
    pairs ``(i, j)`` with ``i | j == h``; the constants distribute.
    """
    if p.is_periodic or q.is_periodic:
        raise ValueError("poly_mul needs finite operands; restrict periodic polynomials first")
    left = set(p.support) | ({0} if p.constant else set())
    right = set(q.support) | ({0} if q.constant else set())
    counts = Counter(i | j for i in left for j in right)
    odd = {h for h, c in counts.items() if c & 1}
    return SymmetricPoly(int(0 in odd), frozenset(odd - {0}))


def eval_at_weight(p: SymmetricPoly, w: int) -> int:
    """Value of ``p`` at any point of Hamming weight ``w``.

    Only degrees whose bits are a submask of ``w`` contribute, so the cheaper
    of the support scan and the submask walk is used.
    """
    if w < 0:
        raise ValueError("weight must be non-negative")
    acc = p.constant
    walk_cost = 1 << min(w.bit_count(), 62)
    if p.period is None:
        scan_cost = len(p.support)
    else:
        scan_cost = (w // p.period + 1) * len(p.support)
    if scan_cost < walk_cost:
        if p.period is None:
            degrees: Iterable[int] = p.support
        else:
            degrees = (d for r in p.support for d in range(r, w + 1, p.period))
        for i in degrees:
            acc ^= i & w == i
    else:
        for i in submasks(w):
            acc ^= p.coefficient(i)
    return int(acc)


def restrict(p: SymmetricPoly, n: int) -> SymmetricPoly:
    """Drop every degree above ``n``; the periodic form is unrolled up to ``n``."""
    if n < 0:
        raise ValueError("variable count must be non-negative")
    if p.period is None:
        return SymmetricPoly(p.constant, frozenset(d for d in p.support if d <= n))
    degrees = frozenset(d for r in p.support for d in range(r, n + 1, p.period))
    return SymmetricPoly(p.constant, degrees)


def from_power_basis(monomials: Iterable[Iterable[int]]) -> SymmetricPoly:
    """Evaluate ``f(y_0, ..., y_s)`` at ``y_e = sigma_(2^e)``.

    ``monomials`` lists the monomials of ``f`` as collections of exponents
    ``e``; the empty monomial is the constant 1.  Repeated monomials cancel.
    """
    acc = SymmetricPoly()
    for mono in monomials:
        exps = set(mono)
        if any(e < 0 for e in exps):
            raise ValueError("power-basis indices must be non-negative")
        degrees = [1 << e for e in sorted(exps)]
        h = reduce(sigma_mul, degrees) if degrees else 0
        acc = acc + SymmetricPoly.sigma(h)
    return acc
