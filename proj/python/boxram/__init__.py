"""Box Ramsey degrees, canonical relations and exhaustive Ramsey checks.

Structures are plain dicts in the CLI's JSON format:
``{"signature": [{"name": "E", "arity": 2}], "size": n, "relations": {"E": [[0, 1], ...]}}``.
"""

import json

from . import _core
from ._core import BoxramError, BudgetExceededError

__all__ = [
    "BoxramError",
    "BudgetExceededError",
    "automorphisms",
    "canonical_relation_count",
    "embeddings",
    "graph",
    "linear_order",
    "omega_box_degree",
    "ramsey_check",
    "run",
    "sim_classes",
    "surjection_count",
    "validate_structure",
]

surjection_count = _core.surjection_count
omega_box_degree = _core.omega_box_degree
canonical_relation_count = _core.canonical_relation_count


def _dump(structure):
    return structure if isinstance(structure, str) else json.dumps(structure)


def graph(n, edges):
    """Simple graph on n vertices; each edge is stored in both directions."""
    rel = sorted({(a, b) for x, y in edges for a, b in ((x, y), (y, x))})
    return {"signature": [{"name": "E", "arity": 2}], "size": n, "relations": {"E": [list(p) for p in rel]}}


def linear_order(n):
    rel = [[i, j] for i in range(n) for j in range(i + 1, n)]
    return {"signature": [{"name": "<", "arity": 2}], "size": n, "relations": {"<": rel}}


def validate_structure(structure):
    return json.loads(_core.validate_structure(_dump(structure)))


def embeddings(a, b):
    return _core.embeddings(_dump(a), _dump(b))


def automorphisms(structure):
    return _core.automorphisms(_dump(structure))


def sim_classes(patterns, ambient):
    return json.loads(_core.sim_classes([_dump(p) for p in patterns], _dump(ambient)))


def ramsey_check(c, b, a, colors=2, threshold=1, budget=1 << 24, reduce=True):
    return json.loads(_core.ramsey_check(_dump(c), _dump(b), _dump(a), colors, threshold, budget, reduce))


def run(*args):
    """Runs a CLI command; returns (exit code, parsed report or None, stderr)."""
    code, out, err = _core.run([str(a) for a in args])
    return code, (json.loads(out) if out.strip() else None), err
