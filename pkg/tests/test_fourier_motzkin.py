"""Exact strict-inequality feasibility tests."""
import random
from fractions import Fraction

import pytest

from permutonlab.errors import PreconditionError
from permutonlab.fourier_motzkin import LinearConstraint, LinearConstraintSystem, solve

F = Fraction


def system(num_vars, rows):
    return LinearConstraintSystem(num_vars, tuple(
        LinearConstraint(tuple(F(c) for c in coeffs), F(const), strict)
        for coeffs, const, strict in rows))


def satisfied(sys_, point):
    for c in sys_.constraints:
        val = sum(a * x for a, x in zip(c.coeffs, point)) + c.const
        if c.strict:
            if not val > 0:
                return False
        elif not val >= 0:
            return False
    return True


def test_simple_feasible_with_witness():
    s = system(2, [((1, 0), 0, True), ((0, 1), 0, True), ((-1, -1), 1, False)])
    res = solve(s)
    assert res.feasible
    assert satisfied(s, res.witness)


def test_strict_contradiction():
    # x > 0 and x <= 0
    s = system(1, [((1,), 0, True), ((-1,), 0, False)])
    assert not solve(s).feasible


def test_nonstrict_point_feasible():
    # x >= 0 and x <= 0 pins x = 0
    s = system(1, [((1,), 0, False), ((-1,), 0, False)])
    res = solve(s)
    assert res.feasible and res.witness == (F(0),)


def test_strict_open_interval():
    s = system(1, [((1,), F(-1, 3), True), ((-1,), F(1, 2), True)])
    res = solve(s)
    assert res.feasible
    assert F(1, 3) < res.witness[0] < F(1, 2)


def test_chained_ordering_infeasible():
    # x0 < x1 < x2 < x0
    rows = [((-1, 1, 0), 0, True), ((0, -1, 1), 0, True), ((1, 0, -1), 0, True)]
    assert not solve(system(3, rows)).feasible


def test_variable_cap():
    with pytest.raises(PreconditionError):
        LinearConstraintSystem(9, ())


def test_random_systems_witness_consistency():
    # whenever the solver says feasible, the witness must satisfy the system;
    # infeasibility is cross-checked on a rational grid
    rng = random.Random(2024)
    for _ in range(200):
        k = rng.randint(1, 3)
        rows = []
        for _ in range(rng.randint(1, 6)):
            coeffs = tuple(F(rng.randint(-3, 3)) for _ in range(k))
            rows.append((coeffs, F(rng.randint(-4, 4), rng.randint(1, 3)), rng.random() < 0.5))
        s = system(k, rows)
        res = solve(s)
        if res.feasible:
            assert satisfied(s, res.witness)
        else:
            grid = [F(n, 4) for n in range(-12, 13)]
            if k == 1:
                pts = [(g,) for g in grid]
            elif k == 2:
                pts = [(a, b) for a in grid for b in grid]
            else:
                coarse = [F(n, 2) for n in range(-6, 7)]
                pts = [(a, b, c) for a in coarse for b in coarse for c in coarse]
            assert not any(satisfied(s, p) for p in pts)
