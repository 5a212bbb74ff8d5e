"""Numeric SDP layer: svec coordinates, eigensolvers, alternating projections."""

import random

import numpy as np
import pytest

from ncreal.sdp import (
    SdpProblem,
    eigen_sym,
    project_affine,
    project_psd,
    solve_feasibility,
    svec,
    svec_inverse,
)


def _rand_sym(rng, n, scale=2.0):
    M = np.array([[rng.uniform(-scale, scale) for _ in range(n)] for _ in range(n)])
    return (M + M.T) / 2.0


def test_svec_round_trip_and_inner_products():
    rng = random.Random(51)
    for _ in range(20):
        n = rng.randint(1, 6)
        S = _rand_sym(rng, n)
        T = _rand_sym(rng, n)
        assert np.allclose(svec_inverse(svec(S), n), S)
        assert np.isclose(float(svec(S) @ svec(T)), float(np.trace(S @ T)))
        assert len(svec(S)) == n * (n + 1) // 2


def test_eigen_sym_matches_lapack():
    rng = random.Random(52)
    for _ in range(15):
        n = rng.randint(2, 6)
        S = _rand_sym(rng, n)
        w, V = eigen_sym(S)
        assert np.allclose(S @ V, V * w, atol=1e-8)
        assert np.allclose(V.T @ V, np.eye(n), atol=1e-8)
        assert np.allclose(w, np.linalg.eigvalsh(S), atol=1e-8)
        assert all(w[i] <= w[i + 1] + 1e-12 for i in range(n - 1))
    with pytest.raises(ValueError):
        eigen_sym(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_project_psd():
    rng = random.Random(53)
    for _ in range(15):
        n = rng.randint(2, 5)
        S = _rand_sym(rng, n)
        P = project_psd(S)
        assert np.linalg.eigvalsh(P)[0] >= -1e-10
        assert np.allclose(project_psd(P), P, atol=1e-10)
        # projection is the positive part: S = P - N with N psd and tr(P N) = 0
        N = P - S
        assert np.linalg.eigvalsh(N)[0] >= -1e-10
        assert abs(float(np.trace(P @ N))) <= 1e-8
    already = np.diag([3.0, 0.5, 0.0])
    assert np.allclose(project_psd(already), already)


def _normalized_rows(rows, b):
    A = np.array(rows, dtype=float)
    Q, R = np.linalg.qr(A.T)
    rank = A.shape[0]
    A_on = Q[:, :rank].T
    b_on = np.linalg.solve(R[:rank, :rank].T, np.array(b, dtype=float))
    return A_on, b_on


def _trace_only_problem(n, value=1.0):
    row = svec(np.eye(n))
    A, b = _normalized_rows([row], [value])
    return SdpProblem(n, list(range(n)), A, b)


def test_trace_only_problem_is_immediately_feasible():
    prob = _trace_only_problem(4)
    res = solve_feasibility(prob)
    assert res.status == "feasible"
    assert res.iterations <= 1
    assert np.isclose(float(np.trace(res.G)), 1.0)
    assert np.linalg.eigvalsh(res.G)[0] >= -1e-8


def test_forced_negative_diagonal_is_infeasible():
    # single constraint G[0,0] = -1 cannot meet the psd cone
    n = 3
    E = np.zeros((n, n))
    E[0, 0] = 1.0
    A, b = _normalized_rows([svec(E)], [-1.0])
    res = solve_feasibility(SdpProblem(n, list(range(n)), A, b))
    assert res.status == "likely_infeasible"
    assert res.final_gap > 1e-7
    assert res.G is None


def test_inconsistent_flag_short_circuits():
    prob = _trace_only_problem(3)
    prob.inconsistent = True
    prob.affine_residual = 0.25
    res = solve_feasibility(prob)
    assert res.status == "likely_infeasible"
    assert res.iterations == 0
    assert res.final_gap == 0.25


def test_exactly_feasible_system_is_found():
    # constraints pin G to be close to a known psd matrix's affine slice
    rng = random.Random(54)
    n = 4
    L = np.array([[rng.uniform(-1, 1) for _ in range(n)] for _ in range(n)])
    target = L @ L.T
    rows, rhs = [], []
    for _ in range(6):
        C = _rand_sym(rng, n)
        rows.append(svec(C))
        rhs.append(float(svec(C) @ svec(target)))
    A, b = _normalized_rows(rows, rhs)
    res = solve_feasibility(SdpProblem(n, list(range(n)), A, b))
    assert res.status == "feasible"
    assert np.linalg.norm(A @ svec(res.G) - b) <= 1e-6
    assert np.linalg.eigvalsh(res.G)[0] >= -1e-8


def test_project_affine_is_a_projection():
    rng = random.Random(55)
    prob = _trace_only_problem(4, value=2.0)
    S = _rand_sym(rng, 4)
    H = project_affine(prob, S)
    assert np.isclose(float(np.trace(H)), 2.0)
    assert np.allclose(project_affine(prob, H), H)
    # empty systems project to the input unchanged
    empty = SdpProblem(3, list(range(3)), np.zeros((0, 6)), np.zeros(0))
    T = _rand_sym(rng, 3)
    assert np.allclose(project_affine(empty, T), T)
