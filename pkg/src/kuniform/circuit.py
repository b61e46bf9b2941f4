"""Preparation circuits for graph states: H on every qubit, then CZ per edge."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph


@dataclass(frozen=True)
class Gate:
    name: str
    qubits: tuple[int, ...]


@dataclass(frozen=True)
class Circuit:
    n: int
    gates: tuple[Gate, ...]


def emit_circuit(g: Graph) -> Circuit:
    hs = [Gate("h", (i,)) for i in range(g.n)]
    czs = [Gate("cz", e) for e in g.edges]
    return Circuit(g.n, tuple(hs + czs))


def render(c: Circuit, fmt: str = "plain") -> str:
    if fmt == "plain":
        lines = [f"{gate.name} " + " ".join(map(str, gate.qubits)) for gate in c.gates]
    elif fmt == "qasm2":
        lines = ["OPENQASM 2.0;", 'include "qelib1.inc";', f"qreg q[{c.n}];"]
        lines += [f"{gate.name} " + ",".join(f"q[{q}]" for q in gate.qubits) + ";"
                  for gate in c.gates]
    else:
        raise ValueError(f"unknown circuit format {fmt!r}")
    return "\n".join(lines) + "\n"
