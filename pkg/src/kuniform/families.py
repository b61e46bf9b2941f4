"""Generators for the graph families with known uniformity.

=========  ==============================  =====================
family     shape                           uniformity
=========  ==============================  =====================
matching   disjoint edges (+1 for odd n)   exactly 1
complete   all pairs (GHZ up to LU)        exactly 1
cycle      ring i -- i+1 mod n             2 for n >= 5
bilayer    two K_n joined by i -- i+n      3 for n >= 3
torus      l x m grid, periodic            4 for l, m >= 5
=========  ==============================  =====================
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .errors import GraphError
from .graph import Graph

FAMILIES = ("matching", "complete", "cycle", "bilayer", "torus")


@dataclass(frozen=True)
class FamilySpec:
    family: str
    size: int | None = None
    rows: int | None = None
    cols: int | None = None


class UniformityClaimWarning(UserWarning):
    """Graph is valid but outside the range where its family's uniformity holds."""


def matching(n: int) -> Graph:
    _require(n >= 2, "matching needs n >= 2 (a lone vertex is never 1-uniform)")
    edges = [(i, i + 1) for i in range(0, n - 1, 2)]
    if n % 2:
        edges.append((0, n - 1))
    return Graph.from_edges(n, edges)


def complete(n: int) -> Graph:
    _require(n >= 2, "complete graph needs n >= 2 (1-uniformity needs an edge)")
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle(n: int) -> Graph:
    _require(n >= 3, "cycle needs n >= 3; 2-uniformity additionally needs n >= 5")
    if n < 5:
        warnings.warn(f"C{n} is not 2-uniform; the cycle recipe needs n >= 5",
                      UniformityClaimWarning, stacklevel=2)
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def bilayer(n: int) -> Graph:
    """Two complete layers ``0..n-1`` and ``n..2n-1`` joined by ``i -- i+n``."""
    _require(n >= 2, "bilayer needs layer size n >= 2; 3-uniformity needs n >= 3")
    if n < 3:
        warnings.warn("bilayer with n=2 is not 3-uniform; the recipe needs n >= 3",
                      UniformityClaimWarning, stacklevel=2)
    edges = []
    for base in (0, n):
        edges += [(base + i, base + j) for i in range(n) for j in range(i + 1, n)]
    edges += [(i, i + n) for i in range(n)]
    return Graph.from_edges(2 * n, edges)


def torus(l: int, m: int) -> Graph:
    """Periodic ``l x m`` grid; site ``(r, c)`` is vertex ``r*m + c``."""
    _require(l >= 3 and m >= 3,
             "torus needs l, m >= 3; 4-uniformity additionally needs l, m >= 5")
    if l < 5 or m < 5:
        warnings.warn(f"torus({l},{m}) is not 4-uniform; the recipe needs l, m >= 5",
                      UniformityClaimWarning, stacklevel=2)
    edges = set()
    for r in range(l):
        for c in range(m):
            v = r * m + c
            for w in (((r + 1) % l) * m + c, r * m + (c + 1) % m):
                edges.add((min(v, w), max(v, w)))
    return Graph.from_edges(l * m, sorted(edges))


def generate_family(spec: FamilySpec) -> Graph:
    if spec.family == "torus":
        if spec.rows is None or spec.cols is None:
            raise GraphError("torus needs rows and cols")
        return torus(spec.rows, spec.cols)
    builders = {"matching": matching, "complete": complete,
                "cycle": cycle, "bilayer": bilayer}
    if spec.family not in builders:
        raise GraphError(f"unknown family {spec.family!r}; choose from {FAMILIES}")
    if spec.size is None:
        raise GraphError(f"{spec.family} needs a size")
    return builders[spec.family](spec.size)


def _require(ok: bool, msg: str) -> None:
    if not ok:
        raise GraphError(msg)
