"""LP feasibility oracle tests, including a rational-arithmetic reference."""

from fractions import Fraction

import numpy as np
import pytest

from regradius import Indeterminate, LinearSystem, lp_feasible
from regradius.lp import EQ, LEQ


def reference_feasible_exact(lhs, relations, rhs):
    """Phase-one simplex over the rationals; exact feasibility verdict.

    Same construction as the float solver (split variables, slacks,
    artificials, Bland's rule) but with Fraction arithmetic, so the answer
    is exact for rational data.
    """
    m = len(lhs)
    n = len(lhs[0]) if m else 0
    n_slack = sum(1 for rel in relations if rel == LEQ)
    ncols = 2 * n + n_slack + m
    T = [[Fraction(0)] * (ncols + 1) for _ in range(m)]
    k = 0
    for i in range(m):
        for j in range(n):
            T[i][j] = Fraction(lhs[i][j])
            T[i][n + j] = -Fraction(lhs[i][j])
        if relations[i] == LEQ:
            T[i][2 * n + k] = Fraction(1)
            k += 1
        T[i][ncols] = Fraction(rhs[i])
        if T[i][ncols] < 0:
            T[i] = [-v for v in T[i]]
        T[i][2 * n + n_slack + i] = Fraction(1)
    basis = list(range(2 * n + n_slack, 2 * n + n_slack + m))
    art0 = 2 * n + n_slack

    while True:
        red = [Fraction(0)] * ncols
        for j in range(art0, ncols):
            red[j] = Fraction(1)
        for i in range(m):
            if basis[i] >= art0:
                for j in range(ncols):
                    red[j] -= T[i][j]
        entering = next((j for j in range(ncols) if red[j] < 0), None)
        if entering is None:
            break
        rows = [i for i in range(m) if T[i][entering] > 0]
        assert rows, "phase one is bounded below"
        best = min(T[i][ncols] / T[i][entering] for i in rows)
        leave = min(
            (i for i in rows if T[i][ncols] / T[i][entering] == best),
            key=lambda i: basis[i],
        )
        piv = T[leave][entering]
        T[leave] = [v / piv for v in T[leave]]
        for i in range(m):
            if i != leave and T[i][entering] != 0:
                f = T[i][entering]
                T[i] = [a - f * b for a, b in zip(T[i], T[leave])]
        basis[leave] = entering

    opt = sum(T[i][ncols] for i in range(m) if basis[i] >= art0)
    return opt == 0


def test_box_feasible():
    sys_ = LinearSystem([[-1.0], [1.0]], (LEQ, LEQ), [0.0, 1.0])  # 0 <= x <= 1
    ans = lp_feasible(sys_)
    assert ans.feasible
    assert -1e-9 <= ans.witness[0] <= 1.0 + 1e-9
    assert ans.max_violation <= 1e-9


def test_contradiction_infeasible():
    sys_ = LinearSystem([[1.0], [-1.0]], (LEQ, LEQ), [-1.0, 0.0])  # x <= -1, x >= 0
    ans = lp_feasible(sys_)
    assert not ans.feasible
    assert ans.witness is None


def test_orthant_recession_example():
    # x1 + x2 = 1, x >= 0, x_i <= 0.6 (x1 + x2): feasible at x = (0.5, 0.5).
    delta = 0.6
    lhs = [
        [1.0 - delta, -delta],
        [-delta, 1.0 - delta],
        [-1.0, 0.0],
        [0.0, -1.0],
        [1.0, 1.0],
    ]
    sys_ = LinearSystem(lhs, (LEQ, LEQ, LEQ, LEQ, EQ), [0.0, 0.0, 0.0, 0.0, 1.0])
    ans = lp_feasible(sys_)
    assert ans.feasible
    np.testing.assert_allclose(ans.witness.sum(), 1.0, atol=1e-9)


def test_equality_only_system():
    sys_ = LinearSystem([[1.0, 1.0], [1.0, -1.0]], (EQ, EQ), [2.0, 0.0])
    ans = lp_feasible(sys_)
    assert ans.feasible
    np.testing.assert_allclose(ans.witness, [1.0, 1.0], atol=1e-9)


def test_determinism(rng):
    A = rng.integers(-3, 4, (6, 5)).astype(float)
    b = rng.integers(-3, 4, 6).astype(float)
    rel = tuple(LEQ if i % 2 else EQ for i in range(6))
    sys_ = LinearSystem(A, rel, b)
    first = lp_feasible(sys_)
    for _ in range(3):
        again = lp_feasible(sys_)
        assert again.feasible == first.feasible
        if first.feasible:
            np.testing.assert_array_equal(again.witness, first.witness)


def test_agreement_with_rational_reference():
    # Integer data keeps every exact basic solution's denominator small, so
    # the float verdict cannot straddle the eps_lp threshold.
    rng = np.random.default_rng(7)
    mismatches = 0
    for trial in range(200):
        m = int(rng.integers(1, 9))
        n = int(rng.integers(1, 9))
        lhs = rng.integers(-3, 4, (m, n)).astype(float)
        rhs = rng.integers(-3, 4, m).astype(float)
        rel = tuple(LEQ if rng.random() < 0.7 else EQ for _ in range(m))
        got = lp_feasible(LinearSystem(lhs, rel, rhs)).feasible
        want = reference_feasible_exact(lhs.tolist(), rel, rhs.tolist())
        assert got == want, f"trial {trial}: float={got} exact={want}"
    assert mismatches == 0


def test_iteration_limit_raises_indeterminate():
    # A system that needs at least one pivot, starved of its budget.
    sys_ = LinearSystem([[1.0, 1.0], [1.0, -1.0]], (EQ, EQ), [2.0, 0.0])
    with pytest.raises(Indeterminate):
        lp_feasible(sys_, max_pivots=0)
