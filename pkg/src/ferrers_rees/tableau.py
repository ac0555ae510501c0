"""Tableaux over the sigma order and their standardization.

A tableau is a ``tuple`` of rows, each row a lattice point; all rows have
the same length ``n``.  A tableau is semi-standard when its rows weakly
decrease in sigma (equivalently, weakly increase lexicographically), and
standard when it is the sigma-minimum among the semi-standard tableaux with
the same column multisets.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Sequence

from .core import LESS, PreconditionError, lattice_point, sigma_cmp

Row = tuple[int, ...]
Tableau = tuple[Row, ...]


def tableau(rows: Iterable[Sequence[int]], width: int | None = None) -> Tableau:
    """Validate rows and return a tableau; ``width`` fixes ``n`` for p = 0."""
    t = tuple(lattice_point(r) for r in rows)
    widths = {len(r) for r in t}
    if width is not None:
        widths.add(width)
    if len(widths) > 1:
        raise ValueError("all tableau rows must have the same length")
    return t


def _width(t: Tableau, width: int | None) -> int:
    if t:
        return len(t[0])
    if width is None:
        raise ValueError("width is required for an empty tableau")
    return width


def support(t: Tableau, width: int | None = None) -> tuple[Counter, ...]:
    """Column multisets ``supp_1, ..., supp_n``."""
    n = _width(t, width)
    return tuple(Counter(row[j] for row in t) for j in range(n))


def is_semi_standard(t: Tableau) -> bool:
    return all(sigma_cmp(t[i], t[i + 1]) != LESS for i in range(len(t) - 1))


def sort_rows(t: Tableau) -> Tableau:
    """Stable sort of the rows into weakly sigma-decreasing order."""
    return tuple(sorted(t))


def standardize(t: Tableau) -> Tableau:
    """The unique standard tableau with the same support as ``t``.

    Columns are filled left to right.  Rows sharing the same prefix form a
    block; blocks earlier in the tableau (sigma-larger prefixes) take the
    larger values of the next column, and each block stores its values in
    increasing order.
    """
    if not is_semi_standard(t):
        raise PreconditionError("standardize needs a semi-standard tableau; apply sort_rows first")
    p = len(t)
    if p <= 1:
        return t
    n = len(t[0])
    cols = [sorted((row[j] for row in t), reverse=True) for j in range(n)]
    out: list[list[int]] = [[v] for v in reversed(cols[0])]
    for j in range(1, n):
        values = cols[j]
        start = 0
        pos = 0
        while start < p:
            end = start + 1
            while end < p and out[end] == out[start]:
                end += 1
            chunk = sorted(values[pos:pos + end - start])
            for i, v in zip(range(start, end), chunk):
                out[i].append(v)
            pos += end - start
            start = end
    return tuple(tuple(r) for r in out)


def is_standard_pair(a: Sequence[int], b: Sequence[int]) -> bool:
    """Standardness of the two-row tableau ``[a, b]`` by the direct criterion.

    ``[a, b]`` is standard iff ``a == b``, or at the first difference ``k``
    we have ``a_k < b_k`` and ``a_j >= b_j`` for every later ``j``.
    """
    if sigma_cmp(a, b) == LESS:
        raise PreconditionError(f"[{tuple(a)}, {tuple(b)}] is not semi-standard")
    for k, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return all(u >= v for u, v in zip(a[k + 1:], b[k + 1:]))
    return True


def is_standard(t: Tableau) -> bool:
    if not is_semi_standard(t):
        raise PreconditionError("is_standard needs a semi-standard tableau")
    return all(
        is_standard_pair(t[h], t[k]) for h in range(len(t)) for k in range(h + 1, len(t))
    )


def subtableau(t: Tableau, rows: Iterable[int] | None = None, columns: int | None = None) -> Tableau:
    """Keep the given row indices (in order) and the first ``columns`` columns."""
    kept = t if rows is None else tuple(t[i] for i in sorted(set(rows)))
    if columns is None:
        return kept
    return tuple(r[:columns] for r in kept)


# -- text format --------------------------------------------------------------

def parse_tableau(text: str, source: str = "<tableau>") -> Tableau:
    """One row per line, space-separated positive integers; blank lines ignored."""
    rows: list[Row] = []
    width = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            row = tuple(int(tok) for tok in line.split())
        except ValueError:
            raise ValueError(f"{source}:{lineno}: expected integers, got {line.strip()!r}") from None
        if any(v < 1 for v in row):
            raise ValueError(f"{source}:{lineno}: entries must be positive integers")
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ValueError(f"{source}:{lineno}: row has {len(row)} entries, expected {width}")
        rows.append(row)
    return tuple(rows)


def format_tableau(t: Tableau) -> str:
    return "\n".join(" ".join(str(v) for v in row) for row in t)
