"""Exact subconstituent-algebra computations on Q-polynomial distance-regular graphs.

Thin wrappers over the C++ core. Every function returns plain dictionaries
decoded from the deterministic JSON documents the core emits; rationals appear
as strings like ``"3/2"`` so nothing is ever rounded.
"""

import json

from ._core import (  # noqa: F401
    __version__,
    analyze_json,
    generate_json,
    nucleus_json,
    q_binomial as _q_binomial,
    verify_json,
)


def generate(family, D=1, q=2, N=2):
    """Construct a graph family instance and return its JSON document as a dict."""
    return json.loads(generate_json(family, D=D, q=q, N=N))


def _run(fn, family, D, q, N, graph, base_vertex, large, **extra):
    graph_text = json.dumps(graph) if isinstance(graph, dict) else (graph or "")
    code, text = fn(
        family=family or "", D=D, q=q, N=N, graph=graph_text,
        base_vertex=base_vertex, large=large, **extra,
    )
    doc = json.loads(text)
    doc["exit_code"] = code
    return doc


def analyze(family=None, D=1, q=2, N=2, graph=None, base_vertex=0, large=False):
    """Intersection array, spectrum, Krein pattern, and dual eigenvalues."""
    return _run(analyze_json, family, D, q, N, graph, base_vertex, large)


def nucleus(family=None, D=1, q=2, N=2, graph=None, base_vertex=0, large=False):
    """Nucleus dimensions, module decomposition, and the projective-geometry report."""
    return _run(nucleus_json, family, D, q, N, graph, base_vertex, large)


def verify(family=None, D=1, q=2, N=2, graph=None, base_vertex=0, large=False, only=()):
    """Run every certification; ``doc["ok"]`` mirrors the process exit status."""
    return _run(verify_json, family, D, q, N, graph, base_vertex, large, only=list(only))


def q_binomial(n, k, q):
    """Gaussian binomial coefficient [n choose k]_q as an int."""
    return int(_q_binomial(n, k, q))
