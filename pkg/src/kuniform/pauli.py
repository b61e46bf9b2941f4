"""n-qubit Pauli words in binary symplectic form.

Qubit ``j`` is bit ``j`` of the integers ``x`` and ``z``; in text form qubit 0
is the leftmost letter. A word stands for ``i**phase`` times the tensor
product of its letters, where the letters are I, X, Y, Z and ``Y = i X Z``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import PauliParseError

_LETTERS = {(0, 0): "I", (1, 0): "X", (0, 1): "Z", (1, 1): "Y"}
_BITS = {v: k for k, v in _LETTERS.items()}
_SIGNS = {0: "+", 1: "+i", 2: "-", 3: "-i"}
_SIGN_PHASE = {"": 0, "+": 0, "+i": 1, "-": 2, "-i": 3}
_WORD_RE = re.compile(r"^([+-]i?)?([IXYZ]+)$")


@dataclass(frozen=True)
class PauliWord:
    n: int
    x: int = 0
    z: int = 0
    phase: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("qubit count must be non-negative")
        mask = (1 << self.n) - 1
        if self.x & ~mask or self.z & ~mask:
            raise ValueError("bits set beyond qubit count")
        object.__setattr__(self, "phase", self.phase % 4)

    @classmethod
    def identity(cls, n: int) -> "PauliWord":
        return cls(n)

    @classmethod
    def from_string(cls, s: str) -> "PauliWord":
        """Parse ``[+|-|+i|-i]?[IXYZ]+``; a missing sign means ``+``."""
        m = _WORD_RE.match(s.replace("−", "-"))
        if m is None:
            raise PauliParseError(f"invalid Pauli word {s!r}")
        phase = _SIGN_PHASE[m.group(1) or ""]
        x = z = 0
        for j, letter in enumerate(m.group(2)):
            xb, zb = _BITS[letter]
            x |= xb << j
            z |= zb << j
        return cls(len(m.group(2)), x, z, phase)

    def to_string(self) -> str:
        return _SIGNS[self.phase] + self.letters()

    def letters(self) -> str:
        return "".join(
            _LETTERS[(self.x >> j) & 1, (self.z >> j) & 1] for j in range(self.n)
        )

    def __str__(self) -> str:
        return self.to_string()

    @property
    def support(self) -> int:
        """Bitmask of qubits carrying a non-identity letter."""
        return self.x | self.z

    @property
    def weight(self) -> int:
        return (self.x | self.z).bit_count()

    @property
    def sign(self) -> int:
        """+1 or -1 for Hermitian words."""
        if self.phase % 2:
            raise ValueError(f"{self} is not Hermitian")
        return 1 - self.phase

    def commutes_with(self, other: "PauliWord") -> bool:
        _check_size(self, other)
        return ((self.x & other.z).bit_count() + (self.z & other.x).bit_count()) % 2 == 0

    def __mul__(self, other: "PauliWord") -> "PauliWord":
        return multiply(self, other)


def _check_size(a: PauliWord, b: PauliWord) -> None:
    if a.n != b.n:
        raise ValueError(f"qubit count mismatch: {a.n} vs {b.n}")


def multiply(a: PauliWord, b: PauliWord) -> PauliWord:
    """Exact operator product ``a * b``."""
    _check_size(a, b)
    # Go to X^x Z^z form (each Y contributes i), commute a's Z past b's X,
    # then convert back to letter form.
    x = a.x ^ b.x
    z = a.z ^ b.z
    phase = (
        a.phase + (a.x & a.z).bit_count()
        + b.phase + (b.x & b.z).bit_count()
        + 2 * (a.z & b.x).bit_count()
        - (x & z).bit_count()
    )
    return PauliWord(a.n, x, z, phase)


def weight(p: PauliWord) -> int:
    return p.weight


def to_string(p: PauliWord) -> str:
    return p.to_string()


def from_string(s: str) -> PauliWord:
    return PauliWord.from_string(s)
