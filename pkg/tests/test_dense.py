import itertools
from math import comb, log

import numpy as np
import pytest

from kuniform import (CapExceeded, Graph, GraphError, PauliWord, bilayer, bloch_expansion,
                      build_state, complete, cut_rank_entropy, cycle, is_maximally_mixed,
                      matching, min_weight_products, reduced_density_matrix, torus,
                      verify_uniformity_cutrank, verify_uniformity_dense)
from kuniform.dense import (DenseState, ReducedDensityMatrix, apply_pauli, expectation,
                            gf2_rank, von_neumann_entropy)

from conftest import random_graph, word_matrix

# the 16 signed terms of the Fig. 1 graph-state expansion, as printed
EQ5 = ["+IIII", "+XZII", "+ZXZZ", "+IZXI", "+IZIX", "+YYZZ", "+ZYYZ", "+IIXX",
       "+XIXI", "+XIIX", "+ZYZY", "-YXYZ", "-ZXYY", "+XZXX", "-YXZY", "-YYYY"]


def test_build_state_examples(fig1):
    np.testing.assert_allclose(build_state(Graph.from_edges(2, [(0, 1)])).amplitudes,
                               [0.5, 0.5, 0.5, -0.5])
    np.testing.assert_allclose(build_state(Graph.empty(3)).amplitudes, 2 ** -1.5)
    psi = build_state(fig1).amplitudes
    rho = np.outer(psi, psi.conj())
    np.testing.assert_allclose(rho, sum(word_matrix(t) for t in EQ5) / 16, atol=1e-12)


@pytest.mark.parametrize("seed", range(25))
def test_stabilizer_eigen_equation(seed):
    rng = np.random.default_rng(seed)
    g = random_graph(rng, int(rng.integers(1, 11)))
    psi = build_state(g)
    assert abs(np.linalg.norm(psi.amplitudes) - 1) < 1e-12
    assert psi.amplitudes[0].real == pytest.approx(2 ** (-g.n / 2))
    for k in g.generators():
        np.testing.assert_allclose(apply_pauli(k, psi.amplitudes), psi.amplitudes, atol=1e-12)


def test_apply_pauli_matches_matrices():
    rng = np.random.default_rng(0)
    for _ in range(50):
        n = int(rng.integers(1, 5))
        p = PauliWord(n, int(rng.integers(0, 2**n)), int(rng.integers(0, 2**n)),
                      int(rng.integers(0, 4)))
        v = rng.normal(size=2**n) + 1j * rng.normal(size=2**n)
        np.testing.assert_allclose(apply_pauli(p, v), word_matrix(p.to_string()) @ v,
                                   atol=1e-12)


def _check_rdm(rho):
    m = rho.entries
    np.testing.assert_allclose(m, m.conj().T, atol=1e-12)
    assert abs(np.trace(m) - 1) < 1e-12
    assert np.linalg.eigvalsh(m).min() >= -1e-10


def test_rdm_examples():
    psi = build_state(cycle(5))
    for s in itertools.combinations(range(5), 2):
        rho = reduced_density_matrix(psi, s)
        _check_rdm(rho)
        np.testing.assert_allclose(rho.entries, np.eye(4) / 4, atol=1e-10)
    psi = build_state(complete(4))
    for v in range(4):
        np.testing.assert_allclose(reduced_density_matrix(psi, [v]).entries,
                                   np.eye(2) / 2, atol=1e-10)
    rho = reduced_density_matrix(build_state(cycle(4)), [0, 2])
    _check_rdm(rho)
    assert np.max(np.abs(rho.entries - np.eye(4) / 4)) > 0.1


def test_rdm_rejects_bad_subsets():
    psi = build_state(cycle(5))
    for bad in ([], [0, 1, 2, 3, 4], [5]):
        with pytest.raises(GraphError):
            reduced_density_matrix(psi, bad)


def test_is_maximally_mixed():
    assert is_maximally_mixed(ReducedDensityMatrix((0,), np.eye(2) / 2))
    bell = DenseState(2, np.array([0, 1, 1, 0]) / np.sqrt(2))
    assert is_maximally_mixed(reduced_density_matrix(bell, [0]))
    assert not is_maximally_mixed(ReducedDensityMatrix((0,), np.diag([1.0, 0.0])))


def test_entropy_of_maximally_mixed():
    psi = build_state(bilayer(4))
    for k in (1, 2, 3):
        rho = reduced_density_matrix(psi, range(k))
        assert abs(von_neumann_entropy(rho) - k * log(2)) < 1e-9


def test_bloch_expansion_examples(fig1):
    assert {t.to_string() for t in bloch_expansion(fig1)} == set(EQ5)
    assert len(bloch_expansion(fig1)) == 16
    assert [t.to_string() for t in bloch_expansion(Graph.empty(1))] == ["+I", "+X"]
    edge = Graph.from_edges(2, [(0, 1)])
    terms = bloch_expansion(edge)
    assert [t.to_string() for t in terms] == ["+II", "+XZ", "+ZX", "+YY"]
    psi = build_state(edge)
    for t in terms:
        assert expectation(t, psi) == pytest.approx(t.sign, abs=1e-12)


@pytest.mark.parametrize("seed", range(8))
def test_bloch_coefficients_match_traces(seed):
    rng = np.random.default_rng(100 + seed)
    g = random_graph(rng, int(rng.integers(1, 9)))
    psi = build_state(g)
    terms = bloch_expansion(g)
    stab = {(t.x, t.z) for t in terms}
    for t in terms:
        # coefficient of the bare letter string is Tr(letters * rho) / 2^n
        bare = PauliWord(g.n, t.x, t.z)
        assert abs(expectation(bare, psi) / 2**g.n - t.sign / 2**g.n) < 1e-12
        assert expectation(t, psi) == pytest.approx(1, abs=1e-12)
    checked = 0
    while checked < 100 and len(stab) < 4**g.n:
        x, z = (int(v) for v in rng.integers(0, 2**g.n, size=2))
        if (x, z) in stab:
            continue
        assert abs(expectation(PauliWord(g.n, x, z), psi)) < 1e-12
        checked += 1


def test_verify_dense_examples():
    assert verify_uniformity_dense(cycle(5), 2).uniform
    v = verify_uniformity_dense(cycle(4), 2)
    assert not v.uniform and v.failing_subset == (0, 2)
    assert verify_uniformity_dense(bilayer(3), 3).uniform


def test_caps():
    with pytest.raises(CapExceeded):
        build_state(torus(4, 4))
    with pytest.raises(CapExceeded):
        verify_uniformity_dense(torus(4, 4), 2)
    assert build_state(torus(4, 4), cap=16).amplitudes.shape == (2**16,)
    with pytest.raises(CapExceeded):
        bloch_expansion(matching(17))


def _span_rank(rows):
    span = {0}
    for r in rows:
        span |= {s ^ r for s in span}
    return len(span).bit_length() - 1


def test_gf2_rank_against_span_size():
    rng = np.random.default_rng(7)
    for _ in range(200):
        rows = [int(v) for v in rng.integers(0, 64, size=int(rng.integers(0, 7)))]
        assert gf2_rank(rows) == _span_rank(rows)


def test_cut_rank_examples():
    g = cycle(5)
    assert all(cut_rank_entropy(g, s) == 2 for s in itertools.combinations(range(5), 2))
    e = Graph.empty(6)
    assert all(cut_rank_entropy(e, s) == 0 for s in itertools.combinations(range(6), 3))
    with pytest.raises(GraphError):
        cut_rank_entropy(g, range(5))


def test_cut_rank_torus_agrees_with_engine():
    g = torus(5, 5)
    table = min_weight_products(g, 4)
    assert min(table.min_weights.values()) >= 5
    rng = np.random.default_rng(11)
    for _ in range(500):
        s = rng.choice(25, size=4, replace=False)
        assert cut_rank_entropy(g, s.tolist()) == 4


@pytest.mark.parametrize("seed", range(10))
def test_cut_rank_equals_entropy_bits(seed):
    rng = np.random.default_rng(200 + seed)
    g = random_graph(rng, int(rng.integers(2, 9)))
    psi = build_state(g)
    for k in range(1, g.n):
        for s in itertools.islice(itertools.combinations(range(g.n), k), 10):
            bits = von_neumann_entropy(reduced_density_matrix(psi, s)) / log(2)
            assert abs(bits - cut_rank_entropy(g, s)) < 1e-9


def test_cutrank_verdicts():
    assert verify_uniformity_cutrank(cycle(5), 2).uniform
    v = verify_uniformity_cutrank(cycle(4), 2)
    assert not v.uniform and v.failing_subset == (0, 2)
