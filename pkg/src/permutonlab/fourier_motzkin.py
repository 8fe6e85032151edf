"""Exact feasibility of small systems of rational strict/non-strict linear
inequalities via Fourier-Motzkin elimination.

A constraint stores ``sum(coeffs[i] * x_i) + const REL 0`` with REL being
``>`` (strict) or ``>=``. Elimination is exact over the rationals, strictness
propagates through combinations, and a feasible system yields a rational
witness by back-substitution.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import PreconditionError

__all__ = ["LinearConstraint", "LinearConstraintSystem", "FeasibilityResult", "solve"]

MAX_VARIABLES = 8


@dataclass(frozen=True)
class LinearConstraint:
    coeffs: tuple[Fraction, ...]
    const: Fraction
    strict: bool

    def normalized(self) -> "LinearConstraint":
        """Scale to integer entries with gcd 1 (sign preserved)."""
        denom = 1
        for f in (*self.coeffs, self.const):
            denom = denom * f.denominator // gcd(denom, f.denominator)
        nums = [int(f * denom) for f in (*self.coeffs, self.const)]
        g = 0
        for v in nums:
            g = gcd(g, abs(v))
        if g > 1:
            nums = [v // g for v in nums]
        return LinearConstraint(tuple(Fraction(v) for v in nums[:-1]), Fraction(nums[-1]), self.strict)


@dataclass(frozen=True)
class LinearConstraintSystem:
    num_vars: int
    constraints: tuple[LinearConstraint, ...]

    def __post_init__(self) -> None:
        if self.num_vars > MAX_VARIABLES:
            raise PreconditionError(f"at most {MAX_VARIABLES} variables supported")
        for c in self.constraints:
            if len(c.coeffs) != self.num_vars:
                raise PreconditionError("constraint arity mismatch")


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    witness: tuple[Fraction, ...] | None
    generated: int  # constraints produced while eliminating


def _dedupe(constraints: list[LinearConstraint]) -> list[LinearConstraint]:
    """Keep only the tightest constraint per coefficient vector."""
    best: dict[tuple[Fraction, ...], tuple[Fraction, bool]] = {}
    for c in constraints:
        n = c.normalized()
        cur = best.get(n.coeffs)
        # smaller const is tighter; on equal const, strict dominates
        if cur is None or (n.const, not n.strict) < (cur[0], not cur[1]):
            best[n.coeffs] = (n.const, n.strict)
    return [LinearConstraint(coeffs, const, strict) for coeffs, (const, strict) in best.items()]


def solve(system: LinearConstraintSystem) -> FeasibilityResult:
    """Decide feasibility over the reals (equivalently rationals) exactly."""
    k = system.num_vars
    constraints = _dedupe(list(system.constraints))
    generated = 0
    stages: list[tuple[int, list[LinearConstraint]]] = []
    for var in range(k - 1, -1, -1):
        with_var = [c for c in constraints if c.coeffs[var] != 0]
        without = [c for c in constraints if c.coeffs[var] == 0]
        stages.append((var, with_var))
        pos = [c for c in with_var if c.coeffs[var] > 0]
        neg = [c for c in with_var if c.coeffs[var] < 0]
        new = list(without)
        for p in pos:
            for q in neg:
                sp, sq = -q.coeffs[var], p.coeffs[var]
                coeffs = tuple(sp * a + sq * b for a, b in zip(p.coeffs, q.coeffs))
                combo = LinearConstraint(coeffs, sp * p.const + sq * q.const, p.strict or q.strict)
                new.append(combo)
                generated += 1
        constraints = _dedupe(new)
        for c in constraints:
            if all(a == 0 for a in c.coeffs):
                if c.const < 0 or (c.strict and c.const == 0):
                    return FeasibilityResult(False, None, generated)
    for c in constraints:
        if c.const < 0 or (c.strict and c.const == 0):
            return FeasibilityResult(False, None, generated)

    # Back-substitute a rational witness, assigning in reverse elimination order.
    values: list[Fraction | None] = [None] * k
    for var, with_var in reversed(stages):
        lower: tuple[Fraction, bool] | None = None  # (bound, strict)
        upper: tuple[Fraction, bool] | None = None
        for c in with_var:
            rest = c.const
            skip = False
            for i, a in enumerate(c.coeffs):
                if i == var or a == 0:
                    continue
                if values[i] is None:
                    skip = True  # involves a not-yet-assigned (earlier-eliminated) variable
                    break
                rest += a * values[i]
            if skip:
                continue
            a = c.coeffs[var]
            bound = -rest / a
            if a > 0:
                # largest lower bound is tightest; on ties strict dominates
                if lower is None or (bound, c.strict) > (lower[0], lower[1]):
                    lower = (bound, c.strict)
            else:
                # smallest upper bound is tightest; on ties strict dominates
                if upper is None or (bound, not c.strict) < (upper[0], not upper[1]):
                    upper = (bound, c.strict)
        values[var] = _pick(lower, upper)
    return FeasibilityResult(True, tuple(v if v is not None else Fraction(0) for v in values), generated)


def _pick(lower: tuple[Fraction, bool] | None, upper: tuple[Fraction, bool] | None) -> Fraction:
    if lower is None and upper is None:
        return Fraction(0)
    if upper is None:
        return lower[0] + 1
    if lower is None:
        return upper[0] - 1
    lo, lo_strict = lower
    hi, hi_strict = upper
    if lo == hi:
        assert not lo_strict and not hi_strict, "contradiction missed by elimination"
        return lo
    return (lo + hi) / 2
