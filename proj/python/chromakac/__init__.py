"""Chromatic polynomials through the bond lattice and Kac-Moody root
multiplicities, cross-checked with exact arithmetic.

The heavy lifting lives in the compiled ``_core`` module; this package adds
small conveniences on top (JSON outputs parsed into Python structures).
"""

import json as _json

from ._core import (
    Graph,
    Limits,
    ParseError,
    SizeLimitError,
    acyclic_orientation_count,
    chromatic,
    chromatic_all,
    coloring_count,
    coxeter_class_count,
    lattice_json,
    lattice_size,
    methods,
    mult_json,
    q_kostant,
    root_multiplicity,
    verify_json,
    verify_ok,
)

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "Limits",
    "ParseError",
    "SizeLimitError",
    "acyclic_orientation_count",
    "chromatic",
    "chromatic_all",
    "coloring_count",
    "coxeter_class_count",
    "lattice",
    "lattice_json",
    "lattice_size",
    "methods",
    "mult_json",
    "mult_table",
    "q_kostant",
    "root_multiplicity",
    "verify",
    "verify_json",
    "verify_ok",
]


def lattice(graph, limits=None):
    """Bond lattice as a list of dicts (blocks, rank, mobius, covers)."""
    args = (graph, limits) if limits is not None else (graph,)
    elements = _json.loads(lattice_json(*args))
    for element in elements:
        element["mobius"] = int(element["mobius"])
    return elements


def mult_table(graph):
    """Root multiplicity of every connected vertex subset.

    Returns a dict mapping tuples of vertices to multiplicities.
    """
    raw = _json.loads(mult_json(graph))
    return {
        tuple(_json.loads(key)): int(value)
        for key, value in raw.items()
        if key != "beta_Pi_mult"
    }


def verify(graph, timings=False, limits=None):
    """Full verification report as a dict; see ``verify_ok`` for the verdict."""
    args = (graph, timings, limits) if limits is not None else (graph, timings)
    return _json.loads(verify_json(*args))
