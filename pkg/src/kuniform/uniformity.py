"""k-uniformity certification by minimum-weight enumeration of generator products.

A graph state is k-uniform iff no non-identity stabilizer element has weight
<= k. Every stabilizer element is the product of a unique generator subset,
and a product of j generators has weight >= j (its X part alone covers the j
chosen vertices). So only subsets of size <= k can produce a weight <= k
element, and checking k-uniformity needs sum_{j<=k} C(n, j) products.

The product over a subset ``s`` has X support ``s`` and Z support equal to the
symmetric difference of the neighbourhoods, i.e. the XOR of adjacency rows.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import reduce
from math import comb
from typing import Iterable, Optional

from .errors import BudgetExceeded, GraphError
from .graph import Graph
from .pauli import PauliWord, multiply

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**8
# Below this many subsets per size the process pool costs more than it saves.
PARALLEL_THRESHOLD = 200_000


def subset_product(g: Graph, s: Iterable[int]) -> PauliWord:
    """Product of the correlation operators of the vertices in ``s``."""
    s = sorted(set(s))
    if not s:
        raise GraphError("subset must be non-empty")
    for v in s:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range for n={g.n}")
    return reduce(multiply, (g.correlation_operator(v) for v in s))


def product_weight(g: Graph, s: Iterable[int]) -> int:
    x = z = 0
    for v in s:
        x |= 1 << v
        z ^= g.adj[v]
    return (x | z).bit_count()


# -- enumeration -------------------------------------------------------------

def unrank_combination(n: int, k: int, rank: int) -> list[int]:
    """The ``rank``-th k-subset of ``range(n)`` in lexicographic order."""
    out = []
    v = 0
    for i in range(k):
        while True:
            c = comb(n - v - 1, k - i - 1)
            if rank < c:
                break
            rank -= c
            v += 1
        out.append(v)
        v += 1
    return out


def _scan_chunk(adj: tuple[int, ...], n: int, k: int, start: int, count: int):
    """Minimum product weight over ``count`` k-subsets starting at lex rank ``start``.

    Returns ``(weight, rank)`` of the first subset attaining the minimum.
    """
    c = unrank_combination(n, k, start)
    px = [0] * k
    pz = [0] * k
    x = z = 0
    for i, v in enumerate(c):
        x |= 1 << v
        z ^= adj[v]
        px[i], pz[i] = x, z
    best, best_rank = n + 1, -1
    last = k - 1
    rank = start
    end = start + count
    while True:
        w = (px[last] | pz[last]).bit_count()
        if w < best:
            best, best_rank = w, rank
            if w == k:  # lower bound reached; later subsets cannot beat it
                break
        rank += 1
        if rank == end:
            break
        i = last
        while c[i] == n - k + i:
            i -= 1
        c[i] += 1
        for j in range(i + 1, k):
            c[j] = c[j - 1] + 1
        x = px[i - 1] if i else 0
        z = pz[i - 1] if i else 0
        for j in range(i, k):
            x |= 1 << c[j]
            z ^= adj[c[j]]
            px[j], pz[j] = x, z
    return best, best_rank


def _min_weight_of_size(g: Graph, k: int, workers: int) -> tuple[int, list[int]]:
    total = comb(g.n, k)
    if workers <= 1 or total < PARALLEL_THRESHOLD:
        w, r = _scan_chunk(g.adj, g.n, k, 0, total)
    else:
        nchunks = workers * 4
        bounds = [total * i // nchunks for i in range(nchunks + 1)]
        jobs = [(b0, b1 - b0) for b0, b1 in zip(bounds, bounds[1:]) if b1 > b0]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_scan_chunk, g.adj, g.n, k, s, c) for s, c in jobs]
            # (weight, rank) ordering keeps the merge independent of worker count
            w, r = min(f.result() for f in futures)
    return w, unrank_combination(g.n, k, r)


@dataclass
class ProductWeightTable:
    n: int
    min_weights: dict[int, int] = field(default_factory=dict)
    witnesses: dict[int, tuple[int, ...]] = field(default_factory=dict)
    words: dict[int, PauliWord] = field(default_factory=dict)

    @property
    def k_max_searched(self) -> int:
        return max(self.min_weights, default=0)

    def add(self, g: Graph, j: int, weight: int, subset: Iterable[int]) -> None:
        subset = tuple(subset)
        self.min_weights[j] = weight
        self.witnesses[j] = subset
        self.words[j] = subset_product(g, subset)


def enumeration_count(n: int, k: int) -> int:
    return sum(comb(n, j) for j in range(1, k + 1))


def min_weight_products(g: Graph, k: int, budget: int = DEFAULT_BUDGET,
                        workers: int = 1) -> ProductWeightTable:
    """Exhaustively find the minimum product weight for each subset size ``1..k``."""
    if not 1 <= k <= g.n // 2:
        raise ValueError(f"k must lie in [1, {g.n // 2}] for n={g.n}, got {k}")
    required = enumeration_count(g.n, k)
    if required > budget:
        raise BudgetExceeded(required, budget)
    table = ProductWeightTable(g.n)
    for j in range(1, k + 1):
        w, s = _min_weight_of_size(g, j, workers)
        table.add(g, j, w, s)
    return table


# -- certification -----------------------------------------------------------

@dataclass
class UniformityReport:
    n: int
    uniformity: int
    exact: bool
    table: ProductWeightTable
    breaking: Optional[tuple[tuple[int, ...], PauliWord]] = None
    truncated: bool = False
    k_target: Optional[int] = None

    @property
    def ame(self) -> bool:
        return self.uniformity >= 1 and self.uniformity == self.n // 2

    @property
    def uniform(self) -> Optional[bool]:
        """Verdict for ``k_target``; None when no target was requested."""
        if self.k_target is None:
            return None
        return self.uniformity >= self.k_target

    def to_dict(self) -> dict:
        t = self.table
        doc = {
            "n": self.n,
            "uniformity": self.uniformity,
            "exact": self.exact,
            "ame": self.ame,
            "min_weights": {str(j): w for j, w in sorted(t.min_weights.items())},
            "witnesses": {
                str(j): {"subset": list(t.witnesses[j]), "pauli": t.words[j].to_string()}
                for j in sorted(t.witnesses)
            },
            "breaking_witness": None,
            "truncated": self.truncated,
        }
        if self.breaking is not None:
            s, word = self.breaking
            doc["breaking_witness"] = {"subset": list(s), "pauli": word.to_string(),
                                       "weight": word.weight}
        if self.k_target is not None:
            doc["k"] = self.k_target
            doc["uniform"] = self.uniform
        return doc


def certify_uniformity(g: Graph, k_target: Optional[int] = None,
                       budget: int = DEFAULT_BUDGET, workers: int = 1) -> UniformityReport:
    """Decide k_target-uniformity, or find the exact uniformity when no target is given.

    Without a target the search climbs k until a low-weight product appears or
    ``n // 2`` is reached. If the budget runs out first the report is
    truncated and ``uniformity`` is only a lower bound. With a target, an
    exhausted budget raises :class:`BudgetExceeded`.
    """
    if g.n < 1:
        raise GraphError("graph must have at least one vertex")
    half = g.n // 2
    if k_target is not None and not 1 <= k_target <= half:
        raise ValueError(f"k must lie in [1, {half}] for n={g.n}, got {k_target}")
    limit = half if k_target is None else k_target
    if k_target is not None and enumeration_count(g.n, limit) > budget:
        raise BudgetExceeded(enumeration_count(g.n, limit), budget)

    table = ProductWeightTable(g.n)
    if g.n == 1:
        # lone vertex: generator X has weight 1, and n // 2 == 0 caps the search
        w = subset_product(g, [0])
        table.add(g, 1, w.weight, (0,))
        return UniformityReport(1, 0, True, table, ((0,), w), k_target=None)

    used = 0
    certified = 0
    for j in range(1, limit + 1):
        used += comb(g.n, j)
        if used > budget:
            log.info("budget %d exhausted before size %d", budget, j)
            return UniformityReport(g.n, certified, False, table, truncated=True,
                                    k_target=k_target)
        w, s = _min_weight_of_size(g, j, workers)
        table.add(g, j, w, s)
        # j-uniform iff every product of size <= j has weight >= j + 1
        low = [i for i in sorted(table.min_weights) if table.min_weights[i] <= j]
        if low:
            # prefer the size that just failed; otherwise an earlier weight-j product
            i = j if j in low else low[0]
            breaking = (table.witnesses[i], table.words[i])
            return UniformityReport(g.n, j - 1, True, table, breaking, k_target=k_target)
        certified = j
    return UniformityReport(g.n, certified, certified == half, table, k_target=k_target)


def breaking_witness(report: UniformityReport):
    """Subset whose product has weight <= uniformity + 1, or None for AME states."""
    return report.breaking
