"""Dense state-vector oracle for small graphs.

Basis index bit ``n-1-j`` holds qubit ``j`` so that qubit 0 is the leftmost
tensor factor, matching the letter order of Pauli words.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from .errors import CapExceeded, GraphError
from .graph import Graph
from .pauli import PauliWord
from .uniformity import subset_product

DEFAULT_CAP = 14
RDM_TOL = 1e-10


@dataclass(frozen=True)
class DenseState:
    n: int
    amplitudes: np.ndarray


@dataclass(frozen=True)
class ReducedDensityMatrix:
    subset: tuple[int, ...]
    entries: np.ndarray


def _check_cap(n: int, cap: int) -> None:
    if n > cap:
        raise CapExceeded(n, cap)


def _index_mask(n: int, qubit_mask: int) -> int:
    """Translate a qubit bitmask into a basis-index bitmask."""
    out = 0
    for j in range(n):
        if (qubit_mask >> j) & 1:
            out |= 1 << (n - 1 - j)
    return out


def _basis_bits(n: int) -> np.ndarray:
    """``bits[b, j]`` is the value of qubit j in basis state b."""
    idx = np.arange(1 << n)
    return ((idx[:, None] >> (n - 1 - np.arange(n))[None, :]) & 1).astype(np.int64)


def _parity(v: np.ndarray) -> np.ndarray:
    v = v.copy()
    shift = 32
    while shift:
        v ^= v >> shift
        shift //= 2
    return v & 1


def build_state(g: Graph, cap: int = DEFAULT_CAP) -> DenseState:
    """Graph state with amplitude ``2**(-n/2) * (-1)**(edges inside b)``."""
    _check_cap(g.n, cap)
    bits = _basis_bits(g.n)
    parity = np.zeros(1 << g.n, dtype=np.int64)
    for i, j in g.edges:
        parity ^= bits[:, i] & bits[:, j]
    amps = (1.0 - 2.0 * parity) * 2.0 ** (-g.n / 2)
    return DenseState(g.n, amps.astype(complex))


def apply_pauli(word: PauliWord, psi: np.ndarray) -> np.ndarray:
    """Apply ``word`` to a state vector without forming the matrix."""
    n = word.n
    idx = np.arange(1 << n)
    xm = _index_mask(n, word.x)
    zm = _index_mask(n, word.z)
    # word = i^(phase + #Y) X^x Z^z
    coeff = 1j ** ((word.phase + (word.x & word.z).bit_count()) % 4)
    zsign = 1 - 2 * _parity(idx & zm)
    out = np.empty_like(psi)
    out[idx ^ xm] = coeff * zsign * psi
    return out


def expectation(word: PauliWord, psi: DenseState) -> complex:
    """``<psi|word|psi>``, the Bloch coefficient of ``word`` times ``2**n``."""
    return complex(np.vdot(psi.amplitudes, apply_pauli(word, psi.amplitudes)))


def reduced_density_matrix(psi: DenseState, subset: Iterable[int]) -> ReducedDensityMatrix:
    subset = tuple(sorted(set(subset)))
    if not subset or len(subset) > psi.n - 1 or not all(0 <= v < psi.n for v in subset):
        raise GraphError(f"bad subset {list(subset)} for n={psi.n}")
    rest = [v for v in range(psi.n) if v not in subset]
    t = psi.amplitudes.reshape((2,) * psi.n).transpose(list(subset) + rest)
    m = t.reshape(1 << len(subset), -1)
    return ReducedDensityMatrix(subset, m @ m.conj().T)


def is_maximally_mixed(rho: ReducedDensityMatrix, tol: float = RDM_TOL) -> bool:
    d = rho.entries.shape[0]
    return float(np.max(np.abs(rho.entries - np.eye(d) / d))) <= tol


def von_neumann_entropy(rho: ReducedDensityMatrix) -> float:
    """Entropy in nats."""
    ev = np.linalg.eigvalsh(rho.entries)
    ev = ev[ev > 1e-15]
    return float(-np.sum(ev * np.log(ev)))


def bloch_expansion(g: Graph, cap: int = 16) -> list[PauliWord]:
    """All ``2**n`` signed stabilizer elements, each with coefficient ``2**-n``.

    Ordered by subset size, then lexicographically, starting with the identity.
    """
    _check_cap(g.n, cap)
    terms = [PauliWord.identity(g.n)]
    for k in range(1, g.n + 1):
        terms.extend(subset_product(g, s) for s in itertools.combinations(range(g.n), k))
    return terms


@dataclass
class DenseVerdict:
    uniform: bool
    failing_subset: Optional[tuple[int, ...]] = None
    max_deviation: float = 0.0


def verify_uniformity_dense(g: Graph, k: int, cap: int = DEFAULT_CAP,
                            tol: float = RDM_TOL) -> DenseVerdict:
    """Scan every k-subset RDM; stop at the first (lexicographic) failure."""
    _check_cap(g.n, cap)
    if not 1 <= k <= g.n // 2:
        raise ValueError(f"k must lie in [1, {g.n // 2}] for n={g.n}, got {k}")
    psi = build_state(g, cap)
    for s in itertools.combinations(range(g.n), k):
        rho = reduced_density_matrix(psi, s)
        if not is_maximally_mixed(rho, tol):
            dev = float(np.max(np.abs(rho.entries - np.eye(1 << k) / (1 << k))))
            return DenseVerdict(False, s, dev)
    return DenseVerdict(True)


# -- GF(2) cut rank ----------------------------------------------------------

def gf2_rank(rows: list[int]) -> int:
    """Rank over GF(2) of a matrix given as int bitset rows."""
    rank = 0
    rows = [r for r in rows if r]
    while rows:
        pivot = rows.pop()
        if not pivot:
            continue
        rank += 1
        low = pivot & -pivot
        rows = [r ^ pivot if r & low else r for r in rows]
        rows = [r for r in rows if r]
    return rank


def cut_rank_entropy(g: Graph, subset: Iterable[int]) -> int:
    """Entanglement entropy in bits of ``subset``: GF(2) rank of the cut matrix."""
    subset = sorted(set(subset))
    if not subset or len(subset) >= g.n or not all(0 <= v < g.n for v in subset):
        raise GraphError(f"subset must be a proper non-empty vertex set, got {subset}")
    inside = sum(1 << v for v in subset)
    outside = ((1 << g.n) - 1) & ~inside
    return gf2_rank([g.adj[v] & outside for v in subset])


def verify_uniformity_cutrank(g: Graph, k: int) -> DenseVerdict:
    if not 1 <= k <= g.n // 2:
        raise ValueError(f"k must lie in [1, {g.n // 2}] for n={g.n}, got {k}")
    for s in itertools.combinations(range(g.n), k):
        if cut_rank_entropy(g, s) != k:
            return DenseVerdict(False, s)
    return DenseVerdict(True)


def simulate_circuit(circuit) -> DenseState:
    """Run an H/CZ circuit on ``|0...0>``."""
    n = circuit.n
    psi = np.zeros((2,) * n, dtype=complex)
    psi[(0,) * n] = 1.0
    h = np.array([[1, 1], [1, -1]]) / np.sqrt(2)
    for gate in circuit.gates:
        if gate.name == "h":
            (q,) = gate.qubits
            psi = np.moveaxis(np.tensordot(h, psi, axes=([1], [q])), 0, q)
        elif gate.name == "cz":
            a, b = gate.qubits
            sl = [slice(None)] * n
            sl[a] = 1
            sl[b] = 1
            psi[tuple(sl)] *= -1
        else:
            raise ValueError(f"unsupported gate {gate.name!r}")
    return DenseState(n, psi.reshape(-1))
