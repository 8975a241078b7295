"""The map Z_i from weighted trees with i+1 nodes to weighted forests with i nodes and j <= 2."""
from __future__ import annotations

from typing import Sequence

from ..forests.trees import Forest
from ..forests.weights import eliminate_root, weight_orbits
from ..forests.trees import enumerate_forests
from .degree import canonicalize, degree_coefficient, multiplicity
from .param import _forest


def z_map(T, w: Sequence[int]) -> tuple[Forest, tuple, str]:
    """Eliminate the root; tag 'F1' when the root has one child, 'F2' when it ramifies."""
    F = _forest(T)
    if F.j != 1:
        raise ValueError("z_map acts on a single tree")
    G, v = eliminate_root(F.trees[0], w)
    G, v = canonicalize(G, v)
    return G, v, ("F1" if G.j == 1 else "F2")


def _key(F: Forest, w) -> tuple:
    return (F.encoding(), tuple(w))


def trace_checks(i: int) -> dict:
    """Root elimination against degrees and multiplicities.

    Sources are records with i nodes and j = 1, 2; targets are trees with i + 1
    nodes.  Target degrees over a j = 1 source sum to twice its degree, over a
    j = 2 source to its degree, and every target keeps the source multiplicity.
    """
    sources = {}
    for j in (1, 2):
        if j > i:
            continue
        for F in enumerate_forests(i, j):
            for w, _ in weight_orbits(F):
                sources[_key(F, w)] = {
                    "forest": F.bracket(), "weight": w, "j": j,
                    "c": degree_coefficient(F, w), "mu": multiplicity(F), "targets": [],
                }
    failures = []
    for T in enumerate_forests(i + 1, 1):
        for w, _ in weight_orbits(T):
            G, v, tag = z_map(T, w)
            src = sources.get(_key(G, v))
            if src is None:
                failures.append(("no source", T.bracket(), w))
                continue
            src["targets"].append({"c": degree_coefficient(T, w), "mu": multiplicity(T)})
    for s in sources.values():
        total = sum(t["c"] for t in s["targets"])
        want = 2 * s["c"] if s["j"] == 1 else s["c"]
        if total != want:
            failures.append(("degree", s["forest"], s["weight"], total, want))
        for t in s["targets"]:
            if t["mu"] != s["mu"]:
                failures.append(("multiplicity", s["forest"], s["weight"], t["mu"], s["mu"]))
    return {"i": i, "sources": len(sources), "failures": failures, "ok": not failures}
