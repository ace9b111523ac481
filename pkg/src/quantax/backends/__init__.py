"""Kernel backend selection.

The hot lattice loops (transitive closure, meet/join table construction, the
covering-law and weak-modularity scans) exist twice: a compiled Cython
extension (``_core``) and a numpy fallback (``pure``). The compiled backend
is used when the extension built successfully; set ``QUANTAX_BACKEND=pure``
or ``QUANTAX_BACKEND=compiled`` to force one. Both produce identical results
and witness choices; ``benchmarks/bench_backends.py`` compares their speed.
"""

from __future__ import annotations

import os

from . import pure

_forced = os.environ.get("QUANTAX_BACKEND", "").strip().lower()

_compiled = None
if _forced != "pure":
    try:
        from . import _core as _compiled
    except ImportError:
        _compiled = None

if _forced == "compiled" and _compiled is None:
    raise ImportError(
        "QUANTAX_BACKEND=compiled but the quantax.backends._core extension "
        "is not built; reinstall with Cython available or use the pure backend"
    )

_impl = _compiled if _compiled is not None else pure


def active_backend() -> str:
    """Name of the backend in use: 'compiled' or 'pure'."""
    return "compiled" if _impl is not pure else "pure"


def transitive_closure(leq):
    return _impl.transitive_closure(leq)


def meet_join_tables(leq):
    return _impl.meet_join_tables(leq)


def covering_scan(leq, join, atoms):
    return _impl.covering_scan(leq, join, atoms)


def weak_modularity_scan(leq, meet, join, ortho):
    return _impl.weak_modularity_scan(leq, meet, join, ortho)
