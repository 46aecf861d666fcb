"""Dense and sparse algebraic normal forms and the binary Moebius transform.

Masks index both points and monomials: bit ``i`` of a mask is variable
``x_(i+1)``, so the lowest-index variable is the least significant bit.
Dense vectors are ``numpy.uint8`` arrays of length ``2**n`` holding 0/1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

import numpy as np

from .symfunc import SymmetricPoly, submasks

MAX_DENSE_VARS = 24
MAX_SYMBOLIC_VARS = 12
EXPAND_BUDGET = 1 << 22
"""Largest number of monomials :func:`expand` will materialise."""


class BudgetExceededError(ValueError):
    """Raised when an expansion or verifier would exceed its size cap."""


def _check_vars(n: int, cap: int = MAX_DENSE_VARS) -> None:
    if n < 0:
        raise ValueError("variable count must be non-negative")
    if n > cap:
        raise BudgetExceededError(f"n={n} exceeds the cap of {cap} variables")


def _as_bits(v: Sequence[int] | np.ndarray) -> np.ndarray:
    a = np.array(v, dtype=np.uint8)
    if a.ndim != 1:
        raise ValueError("expected a one-dimensional bit vector")
    if np.any(a > 1):
        raise ValueError("bit vectors hold only 0 and 1")
    return a


def _num_vars(size: int) -> int:
    if size < 1 or size & (size - 1):
        raise ValueError(f"vector length {size} is not a power of two")
    return size.bit_length() - 1


@lru_cache(maxsize=None)
def popcounts(n: int) -> np.ndarray:
    """Read-only array of Hamming weights of ``0 .. 2**n - 1``."""
    _check_vars(n)
    w = np.bitwise_count(np.arange(1 << n, dtype=np.uint32)).astype(np.uint8)
    w.flags.writeable = False
    return w


def moebius(v: Sequence[int] | np.ndarray) -> np.ndarray:
    """Binary Moebius transform: ``out[m] = XOR of v[b] over all b subset of m``.

    The transform is an involution and swaps the evaluation vector of a
    Boolean function with its ANF coefficient vector.
    """
    a = _as_bits(v)
    size = a.size
    n = _num_vars(size)
    _check_vars(n)
    h = 1
    while h < size:
        blocks = a.reshape(-1, 2, h)
        blocks[:, 1, :] ^= blocks[:, 0, :]
        h <<= 1
    return a


class _BitVector:
    """Shared plumbing for dense 2**n-bit vectors."""

    __slots__ = ("n", "bits")

    def __init__(self, n: int, bits: Sequence[int] | np.ndarray) -> None:
        _check_vars(n)
        a = _as_bits(bits)
        if a.size != 1 << n:
            raise ValueError(f"expected {1 << n} bits for n={n}, got {a.size}")
        a.flags.writeable = False
        self.n = n
        self.bits = a

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.bits, other.bits)

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, bits='{self.to_string()}')"

    def to_string(self) -> str:
        return "".join("1" if b else "0" for b in self.bits.tolist())


class TruthTable(_BitVector):
    """Evaluations of a Boolean function; bit ``m`` is ``f(point m)``."""

    def anf(self) -> DenseANF:
        return DenseANF(self.n, moebius(self.bits))


class DenseANF(_BitVector):
    """ANF coefficient vector; bit ``m`` is the coefficient of monomial ``X^m``."""

    def truth_table(self) -> TruthTable:
        return TruthTable(self.n, moebius(self.bits))

    def to_sparse(self) -> SparseANF:
        return SparseANF(self.n, frozenset(np.flatnonzero(self.bits).tolist()))


@dataclass(frozen=True)
class SparseANF:
    """Square-free polynomial in ``n`` variables as a set of monomial masks."""

    n: int
    monomials: frozenset[int] = frozenset()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("variable count must be non-negative")
        if not isinstance(self.monomials, frozenset):
            object.__setattr__(self, "monomials", frozenset(self.monomials))
        limit = 1 << self.n
        if any(m < 0 or m >= limit for m in self.monomials):
            raise ValueError(f"monomial mask outside 0..{limit - 1}")

    @classmethod
    def from_monomials(cls, n: int, masks: Iterable[int]) -> SparseANF:
        """Build from masks with F2 semantics: a repeated monomial cancels."""
        acc: set[int] = set()
        for m in masks:
            acc ^= {m}
        return cls(n, frozenset(acc))

    @classmethod
    def constant(cls, n: int, value: int = 1) -> SparseANF:
        return cls(n, frozenset({0}) if value else frozenset())

    @classmethod
    def variable(cls, n: int, i: int) -> SparseANF:
        """The monomial ``x_i`` (1-based)."""
        if not 1 <= i <= n:
            raise ValueError(f"variable x{i} outside x1..x{n}")
        return cls(n, frozenset({1 << (i - 1)}))

    def __add__(self, other: SparseANF) -> SparseANF:
        if not isinstance(other, SparseANF):
            return NotImplemented
        self._same_ring(other)
        return SparseANF(self.n, self.monomials ^ other.monomials)

    def __mul__(self, other: SparseANF) -> SparseANF:
        if not isinstance(other, SparseANF):
            return NotImplemented
        self._same_ring(other)
        acc: set[int] = set()
        for a in self.monomials:
            for b in other.monomials:
                acc ^= {a | b}
        return SparseANF(self.n, frozenset(acc))

    def _same_ring(self, other: SparseANF) -> None:
        if self.n != other.n:
            raise ValueError(f"variable counts differ: {self.n} vs {other.n}")

    def __len__(self) -> int:
        return len(self.monomials)

    def to_dense(self) -> DenseANF:
        _check_vars(self.n)
        bits = np.zeros(1 << self.n, dtype=np.uint8)
        if self.monomials:
            bits[np.fromiter(self.monomials, dtype=np.int64)] = 1
        return DenseANF(self.n, bits)

    def degree(self) -> int:
        if not self.monomials:
            return -1
        return max(m.bit_count() for m in self.monomials)


def moebius_symbolic(f: SparseANF) -> SparseANF:
    """Transform monomial by monomial: ``X^b -> (1 + X)^(~b) * X^b``.

    This is the slow closed-form route, kept as an independent check on
    :func:`moebius`; the complement product expands to every monomial that
    contains ``b``.
    """
    _check_vars(f.n, MAX_SYMBOLIC_VARS)
    full = (1 << f.n) - 1
    acc: set[int] = set()
    for b in f.monomials:
        acc ^= {b}
        for extra in submasks(full & ~b):
            acc ^= {b | extra}
    return SparseANF(f.n, frozenset(acc))


def expand(p: SymmetricPoly, n: int) -> SparseANF:
    """Explicit monomials of a finite symmetric polynomial in ``n`` variables."""
    if p.is_periodic:
        raise ValueError("expand needs a finite polynomial; restrict it to n variables first")
    _check_vars(n)
    degrees = sorted(d for d in p.support if d <= n)
    total = sum(comb(n, d) for d in degrees) + p.constant
    if total > EXPAND_BUDGET:
        raise BudgetExceededError(f"expansion needs {total} monomials, budget is {EXPAND_BUDGET}")
    weights = popcounts(n)
    selected = np.zeros(1 << n, dtype=bool)
    selected[0] = bool(p.constant)
    if degrees:
        selected |= np.isin(weights, degrees)
    return SparseANF(n, frozenset(np.flatnonzero(selected).tolist()))


def evaluate(f: SparseANF | DenseANF, point: int) -> int:
    """Value of an ANF at the point encoded by ``point``."""
    if not 0 <= point < 1 << f.n:
        raise ValueError(f"point {point} outside 0..{(1 << f.n) - 1}")
    if isinstance(f, SparseANF):
        return sum(1 for m in f.monomials if m & point == m) & 1
    acc = int(f.bits[0])
    for sub in submasks(point):
        acc ^= int(f.bits[sub])
    return acc


def truth_table_of(f: SparseANF | DenseANF) -> TruthTable:
    dense = f.to_dense() if isinstance(f, SparseANF) else f
    return dense.truth_table()


def collect(f: SparseANF | DenseANF) -> SymmetricPoly:
    """Re-collect a symmetric ANF into the sigma basis.

    Raises ``ValueError`` if some degree is only partially present, i.e. the
    polynomial is not symmetric.
    """
    dense = f.to_dense() if isinstance(f, SparseANF) else f
    weights = popcounts(dense.n)
    counts = np.bincount(weights, weights=dense.bits, minlength=dense.n + 1).astype(np.int64)
    full = np.bincount(weights, minlength=dense.n + 1)
    partial = (counts != 0) & (counts != full)
    if partial.any():
        d = int(np.flatnonzero(partial)[0])
        raise ValueError(f"not symmetric: degree {d} is only partially present")
    degrees = np.flatnonzero(counts).tolist()
    constant = int(bool(degrees) and degrees[0] == 0)
    return SymmetricPoly.finite((d for d in degrees if d > 0), constant)


def weight_indicator(n: int, weights: Iterable[int]) -> TruthTable:
    """Truth table that is 1 exactly on points whose weight is in ``weights``."""
    return TruthTable(n, np.isin(popcounts(n), list(weights)).astype(np.uint8))
