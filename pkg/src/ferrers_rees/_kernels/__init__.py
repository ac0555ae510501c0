"""Hot reduction kernel: compiled when available, pure Python otherwise.

``Reducer`` keeps a growing list of rewrite rules ``lead -> trail`` over
integer words (non-increasing tuples of variable ranks) and computes normal
forms of monomials.  Both backends pick, at every step, the rule with the
smallest index whose lead divides the current monomial, so their results
are identical.
"""

from __future__ import annotations

from . import _pyreduce

try:
    from . import _creduce
except ImportError:  # extension not built
    _creduce = None

BACKENDS = {"python": _pyreduce.Reducer}
if _creduce is not None:
    BACKENDS["cython"] = _creduce.Reducer

BACKEND = "cython" if "cython" in BACKENDS else "python"
Reducer = BACKENDS[BACKEND]


def get_reducer_class(name: str | None = None):
    """Reducer class for ``name`` (default: the backend selected at import)."""
    if name is None:
        return Reducer
    try:
        return BACKENDS[name]
    except KeyError:
        raise ValueError(f"reducer backend {name!r} is not available; have {sorted(BACKENDS)}") from None
