"""Lattice points and the sigma total order.

A lattice point is a plain ``tuple`` of positive integers.  The sigma order
ranks ``a`` above ``b`` when the first nonzero entry of ``a - b`` is
negative, i.e. sigma is the reverse of the usual lexicographic order.
"""

from __future__ import annotations

from typing import Iterable, Sequence

LatticePoint = tuple[int, ...]

LESS = -1
EQUAL = 0
GREATER = 1


class DimensionError(ValueError):
    """Raised when points or diagrams of different dimensions are mixed."""


class PreconditionError(ValueError):
    """Raised when an operation's documented precondition does not hold."""


class LimitError(RuntimeError):
    """Raised when a computation exceeds its configured resource budget."""


def lattice_point(coords: Iterable[int]) -> LatticePoint:
    """Validate ``coords`` and return them as a lattice point."""
    p = tuple(int(c) for c in coords)
    if not p:
        raise ValueError("a lattice point needs at least one coordinate")
    if any(c < 1 for c in p):
        raise ValueError(f"lattice point coordinates must be positive: {p}")
    return p


def _check_same_length(a: Sequence[int], b: Sequence[int]) -> None:
    if len(a) != len(b):
        raise DimensionError(f"cannot compare {tuple(a)} and {tuple(b)}: lengths differ")


def sigma_cmp(a: Sequence[int], b: Sequence[int]) -> int:
    """Compare two points in the sigma order.

    Returns ``GREATER`` when ``a >_sigma b``, ``LESS`` when ``a <_sigma b``
    and ``EQUAL`` otherwise.

    >>> sigma_cmp((1, 2), (2, 1))
    1
    """
    _check_same_length(a, b)
    for x, y in zip(a, b):
        if x != y:
            return GREATER if x < y else LESS
    return EQUAL


def sigma_key(a: Sequence[int]) -> tuple[int, ...]:
    """Sort key that is increasing in the sigma order."""
    return tuple(-c for c in a)


def sigma_ge(a: Sequence[int], b: Sequence[int]) -> bool:
    return sigma_cmp(a, b) != LESS


def first_difference(a: Sequence[int], b: Sequence[int]) -> int | None:
    """0-based index of the first coordinate where ``a`` and ``b`` differ."""
    _check_same_length(a, b)
    for k, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return k
    return None
