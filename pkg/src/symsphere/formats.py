"""Text formats for bit vectors, ANF polynomials and codes.

Bit-vector file (truth table or ANF coefficients)::

    n=2
    0101

ANF text: monomials such as ``x1*x3`` joined by ``" + "`` in ascending mask
order, ``1`` for the constant and ``0`` for the zero polynomial.

Generator matrix: optional ``#`` comments, optional ``k n`` header, then one
row of ``n`` characters ``0``/``1`` per line (spaces between bits allowed).

Code map: header ``k n`` then ``2**k`` lines ``<message> <image>``.  Both
fields are coordinate strings like generator rows: character ``j`` is
coordinate ``j + 1`` (the least significant mask bit).
"""

from __future__ import annotations

import re
from typing import Iterable

import numpy as np

from .mindist import CodeMap, GeneratorMatrix
from .moebius import SparseANF


class FormatError(ValueError):
    """Malformed input text."""


def _content_lines(text: str) -> list[str]:
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]


def read_bits(text: str) -> tuple[int, np.ndarray]:
    lines = _content_lines(text)
    if len(lines) != 2:
        raise FormatError("expected an 'n=<int>' line followed by one line of bits")
    m = re.fullmatch(r"n\s*=\s*(\d+)", lines[0])
    if not m:
        raise FormatError(f"bad header {lines[0]!r}; expected 'n=<int>'")
    n = int(m.group(1))
    body = lines[1]
    if set(body) - {"0", "1"}:
        raise FormatError("bit line may contain only '0' and '1'")
    if len(body) != 1 << n:
        raise FormatError(f"expected {1 << n} bits for n={n}, got {len(body)}")
    return n, np.frombuffer(body.encode(), dtype=np.uint8) - ord("0")


def write_bits(n: int, bits: Iterable[int]) -> str:
    return f"n={n}\n" + "".join("1" if b else "0" for b in bits) + "\n"


def monomial_text(mask: int) -> str:
    if mask == 0:
        return "1"
    return "*".join(f"x{j + 1}" for j in range(mask.bit_length()) if mask >> j & 1)


def anf_to_text(f: SparseANF) -> str:
    if not f.monomials:
        return "0"
    return " + ".join(monomial_text(m) for m in sorted(f.monomials))


def anf_from_text(text: str, n: int) -> SparseANF:
    """Parse ANF text; repeated monomials cancel."""
    text = text.strip()
    if not text:
        raise FormatError("empty polynomial text")
    if text == "0":
        return SparseANF(n)
    masks = []
    for term in text.split("+"):
        term = term.strip()
        if term == "1":
            masks.append(0)
            continue
        mask = 0
        for factor in term.split("*"):
            m = re.fullmatch(r"x(\d+)", factor.strip())
            if not m:
                raise FormatError(f"bad factor {factor.strip()!r} in term {term!r}")
            i = int(m.group(1))
            if not 1 <= i <= n:
                raise FormatError(f"variable x{i} outside x1..x{n}")
            mask |= 1 << (i - 1)
        masks.append(mask)
    return SparseANF.from_monomials(n, masks)


def _parse_word(s: str, width: int) -> int:
    if len(s) != width or set(s) - {"0", "1"}:
        raise FormatError(f"expected {width} binary digits, got {s!r}")
    return sum(1 << j for j, c in enumerate(s) if c == "1")


def _word_text(x: int, width: int) -> str:
    return "".join("1" if x >> j & 1 else "0" for j in range(width))


def _looks_like_header(lines: list[str]) -> bool:
    fields = lines[0].split()
    if len(fields) != 2 or not all(f.isdigit() for f in fields):
        return False
    if not set("".join(fields)) <= {"0", "1"}:
        return True
    # "1 0"-style lines are ambiguous; a header must describe the rest.
    k, n = int(fields[0]), int(fields[1])
    rest = ["".join(ln.split()) for ln in lines[1:]]
    return len(rest) == k and all(len(r) == n for r in rest)


def read_generator(text: str) -> GeneratorMatrix:
    lines = _content_lines(text)
    if not lines:
        raise FormatError("no matrix rows")
    header = None
    if _looks_like_header(lines):
        k, n = (int(x) for x in lines[0].split())
        header = (k, n)
        lines = lines[1:]
    rows = ["".join(ln.split()) for ln in lines]
    if not rows:
        raise FormatError("no matrix rows")
    n = len(rows[0])
    if header is not None and header != (len(rows), n):
        raise FormatError(f"header says {header[0]}x{header[1]}, rows are {len(rows)}x{n}")
    try:
        return GeneratorMatrix(len(rows), n, tuple(_parse_word(r, n) for r in rows))
    except FormatError:
        raise
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def write_generator(g: GeneratorMatrix) -> str:
    return f"{g.k} {g.n}\n" + "".join(_word_text(r, g.n) + "\n" for r in g.rows)


def read_code_map(text: str) -> CodeMap:
    lines = _content_lines(text)
    if not lines:
        raise FormatError("empty code map")
    try:
        k, n = (int(x) for x in lines[0].split())
    except ValueError as exc:
        raise FormatError(f"bad header {lines[0]!r}; expected 'k n'") from exc
    if k < 1 or k > 24:
        raise FormatError(f"k={k} outside 1..24")
    if len(lines) - 1 != 1 << k:
        raise FormatError(f"expected {1 << k} entries, got {len(lines) - 1}")
    images: list[int | None] = [None] * (1 << k)
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise FormatError(f"bad entry {ln!r}")
        v = _parse_word(parts[0], k)
        if images[v] is not None:
            raise FormatError(f"message {parts[0]} listed twice")
        images[v] = _parse_word(parts[1], n)
    try:
        return CodeMap(k, n, tuple(images))  # type: ignore[arg-type]
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def write_code_map(f: CodeMap) -> str:
    body = "".join(f"{_word_text(v, f.k)} {_word_text(x, f.n)}\n" for v, x in enumerate(f.images))
    return f"{f.k} {f.n}\n" + body
