"""Distances between permutons, Monte Carlo pattern densities, exact
avoidance certification, and the atom-choice generator for Stanley-Wilf
lower bounds.

The rectangular (cut-type) distance comes in two computable flavours:

* :func:`rect_distance_interval` -- supremum over products of *intervals*
  with endpoints restricted to the measures' breakpoints (grid lines for
  step models; piece/track breakpoints plus one image/preimage closure round
  for track models). Exact rational arithmetic throughout.
* :func:`cut_distance_bruteforce` -- exact supremum over arbitrary unions of
  grid cells for small step models, which bounds the interval variant from
  above and quantifies the restriction gap.

Certification reduces avoidance of a pattern on a track model to finitely
many strict linear systems, one per assignment of the ordered sample points
to (piece, track) slots, each refuted or witnessed exactly by
Fourier-Motzkin elimination.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Iterable, Sequence

import numpy as np

from .errors import InputError, PreconditionError
from .fourier_motzkin import LinearConstraint, LinearConstraintSystem, solve
from .models import (
    DigitSwapPermuton,
    PermutonModel,
    StepPermuton,
    TrackPermuton,
    UniformPermuton,
    _swap_prefix_int,
    fiber_at,
    model_description,
)
from .perms import Permutation, avoids, pattern_of_values

__all__ = [
    "DistanceResult",
    "DensityEstimate",
    "AssignmentResult",
    "AvoidanceCertificate",
    "SWReport",
    "rect_mass",
    "candidate_grid",
    "rect_distance_interval",
    "cut_distance_bruteforce",
    "density_monte_carlo",
    "certify_avoidance",
    "certificate_lines",
    "sw_generate",
]

ZERO = Fraction(0)
ONE = Fraction(1)

Interval = tuple[Fraction, Fraction]


# ---------------------------------------------------------------------------
# exact rectangle masses

def rect_mass(model: PermutonModel, s: Interval, t: Interval, digit_depth: int = 3) -> Fraction:
    """Exact mass of the rectangle S x T.

    Digit-swap masses are exact only for rectangles aligned to the base-4
    grid of ``digit_depth``; other endpoints are rejected.
    """
    s_lo, s_hi = max(s[0], ZERO), min(s[1], ONE)
    t_lo, t_hi = max(t[0], ZERO), min(t[1], ONE)
    if s_lo >= s_hi or t_lo >= t_hi:
        return ZERO
    if isinstance(model, TrackPermuton):
        mass = ZERO
        for piece in model.pieces:
            lo, hi = max(piece.x_lo, s_lo), min(piece.x_hi, s_hi)
            if lo >= hi:
                continue
            for tr in piece.tracks:
                if tr.a == 0:
                    if t_lo <= tr.b <= t_hi:
                        mass += tr.w * (hi - lo)
                    continue
                x0, x1 = (t_lo - tr.b) / tr.a, (t_hi - tr.b) / tr.a
                if x0 > x1:
                    x0, x1 = x1, x0
                seg = min(hi, x1) - max(lo, x0)
                if seg > 0:
                    mass += tr.w * seg
        return mass
    if isinstance(model, StepPermuton):
        n = model.base.order
        mass = ZERO
        for i in range(1, n + 1):
            dx = min(s_hi, Fraction(i, n)) - max(s_lo, Fraction(i - 1, n))
            if dx <= 0:
                continue
            v = model.base(i)
            dy = min(t_hi, Fraction(v, n)) - max(t_lo, Fraction(v - 1, n))
            if dy > 0:
                mass += n * dx * dy
        return mass
    if isinstance(model, UniformPermuton):
        return (s_hi - s_lo) * (t_hi - t_lo)
    if isinstance(model, DigitSwapPermuton):
        q = 4**digit_depth
        for e in (s_lo, s_hi, t_lo, t_hi):
            if (e * q).denominator != 1:
                raise PreconditionError(
                    f"digit-swap masses are exact only on the depth-{digit_depth} base-4 grid")
        mass = ZERO
        for cell in range(int(s_lo * q), int(s_hi * q)):
            img = _swap_prefix_int(cell, digit_depth)
            if t_lo * q <= img and img + 1 <= t_hi * q:
                mass += Fraction(1, q)
        return mass
    raise InputError(f"unknown model {model!r}")


def union_mass(model: PermutonModel, s_parts: Sequence[Interval], t_parts: Sequence[Interval],
               digit_depth: int = 3) -> Fraction:
    """Mass of (union of S intervals) x (union of T intervals); parts must be disjoint."""
    return sum((rect_mass(model, s, t, digit_depth) for s in s_parts for t in t_parts), ZERO)


@lru_cache(maxsize=1 << 18)
def _corner_mass(model: PermutonModel, x: Fraction, y: Fraction, digit_depth: int) -> Fraction:
    """Cached mass of [0, x] x [0, y]; models are frozen, hence hashable."""
    return rect_mass(model, (ZERO, x), (ZERO, y), digit_depth)


# ---------------------------------------------------------------------------
# distance results

@dataclass(frozen=True)
class DistanceResult:
    value: Fraction
    s_witness: tuple[Interval, ...]
    t_witness: tuple[Interval, ...]
    kind: str  # "intervals" or "subsets"

    def describe(self) -> str:
        def fmt(parts):
            return " u ".join(f"[{lo},{hi}]" for lo, hi in parts)

        return f"{self.value} at S={fmt(self.s_witness)} T={fmt(self.t_witness)}"


def _x_breakpoints(model: PermutonModel, digit_depth: int) -> set[Fraction]:
    if isinstance(model, TrackPermuton):
        pts = set(model.boundaries())
        pts.update(x for x, _ in model.crossings())
        return pts
    if isinstance(model, StepPermuton):
        n = model.base.order
        return {Fraction(i, n) for i in range(n + 1)}
    if isinstance(model, DigitSwapPermuton):
        q = 4**digit_depth
        return {Fraction(i, q) for i in range(q + 1)}
    return {ZERO, ONE}


def _y_breakpoints(model: PermutonModel, digit_depth: int) -> set[Fraction]:
    if isinstance(model, TrackPermuton):
        pts = {ZERO, ONE}
        for piece in model.pieces:
            for tr in piece.tracks:
                pts.update((tr.y_at(piece.x_lo), tr.y_at(piece.x_hi)))
        return pts
    return _x_breakpoints(model, digit_depth)


def _track_images(models: Iterable[PermutonModel], xs: Iterable[Fraction]) -> set[Fraction]:
    out: set[Fraction] = set()
    for model in models:
        if not isinstance(model, TrackPermuton):
            continue
        for piece in model.pieces:
            for x in xs:
                if piece.x_lo <= x <= piece.x_hi:
                    out.update(tr.y_at(x) for tr in piece.tracks)
    return out


def _track_preimages(models: Iterable[PermutonModel], ys: Iterable[Fraction]) -> set[Fraction]:
    out: set[Fraction] = set()
    for model in models:
        if not isinstance(model, TrackPermuton):
            continue
        for piece in model.pieces:
            for tr in piece.tracks:
                if tr.a == 0:
                    continue
                for y in ys:
                    x = (y - tr.b) / tr.a
                    if piece.x_lo <= x <= piece.x_hi:
                        out.add(x)
    return out


def candidate_grid(models: Sequence[PermutonModel], extra_x: Sequence[Fraction] = (),
                   extra_y: Sequence[Fraction] = (), digit_depth: int = 3, closure: bool = True):
    """Candidate interval endpoints: all breakpoints, and with ``closure``
    three image/preimage rounds through the linear tracks (enough to pin
    every endpoint chain of a piecewise-linear-optimum vertex)."""
    xs: set[Fraction] = set(extra_x) | {ZERO, ONE}
    ys: set[Fraction] = set(extra_y) | {ZERO, ONE}
    for model in models:
        xs |= _x_breakpoints(model, digit_depth)
        ys |= _y_breakpoints(model, digit_depth)
    if closure:
        ys |= _track_images(models, xs)
        new_x = _track_preimages(models, ys) - xs
        xs |= new_x
        new_y = _track_images(models, new_x) - ys
        ys |= new_y
        xs |= _track_preimages(models, new_y)
    return (tuple(sorted(x for x in xs if ZERO <= x <= ONE)),
            tuple(sorted(y for y in ys if ZERO <= y <= ONE)))


def _with_midpoints(grid: Sequence[Fraction]) -> tuple[Fraction, ...]:
    out = list(grid)
    out.extend((a + b) / 2 for a, b in zip(grid, grid[1:]))
    return tuple(sorted(out))


def rect_distance_interval(mu: PermutonModel, nu: PermutonModel,
                           extra_x: Sequence[Fraction] = (), extra_y: Sequence[Fraction] = (),
                           digit_depth: int = 3, closure: bool = True) -> DistanceResult:
    """sup |mu(S x T) - nu(S x T)| over intervals S, T with endpoints on the
    candidate grid (both measures' breakpoints plus track image/preimage
    closure rounds and one midpoint refinement).

    For step pairs the restriction is lossless: the optimum over all
    intervals is attained on grid lines, computed by a dedicated integer
    path. For pairs involving tracks the grid pins every piecewise-linear
    break; the midpoint round additionally catches interior stationary
    points on cells of uniform density. ``extra_x``/``extra_y`` let callers
    fix a common grid across several models (``closure=False`` keeps exactly
    that grid), which keeps the triangle inequality exact on the shared grid.
    """
    if isinstance(mu, StepPermuton) and isinstance(nu, StepPermuton) and not extra_x and not extra_y:
        value, (i1, i2, j1, j2), grid = _step_grid_max_rectangle(mu, nu)
        return DistanceResult(value, ((grid[i1], grid[i2]),), ((grid[j1], grid[j2]),), "intervals")

    if closure:
        X, Y = candidate_grid((mu, nu), extra_x, extra_y, digit_depth)
        X, Y = _with_midpoints(X), _with_midpoints(Y)
    else:
        xs = _x_breakpoints(mu, digit_depth) | _x_breakpoints(nu, digit_depth) | set(extra_x) | {ZERO, ONE}
        ys = _y_breakpoints(mu, digit_depth) | _y_breakpoints(nu, digit_depth) | set(extra_y) | {ZERO, ONE}
        X = tuple(sorted(x for x in xs if ZERO <= x <= ONE))
        Y = tuple(sorted(y for y in ys if ZERO <= y <= ONE))

    F = [[rect_mass(mu, (ZERO, x), (ZERO, y), digit_depth) - rect_mass(nu, (ZERO, x), (ZERO, y), digit_depth)
          for y in Y] for x in X]
    value, (i1, i2, j1, j2) = _max_rectangle(F)
    return DistanceResult(value, ((X[i1], X[i2]),), ((Y[j1], Y[j2]),), "intervals")


def _max_rectangle(F: list[list[Fraction]]) -> tuple[Fraction, tuple[int, int, int, int]]:
    """max |F[i2][j2]-F[i1][j2]-F[i2][j1]+F[i1][j1]| over i1<i2, j1<j2."""
    denom = 1
    for row in F:
        for v in row:
            denom = lcm(denom, v.denominator)
    ints = np.array([[int(v * denom) for v in row] for row in F], dtype=object)
    if denom < 2**31 and max(abs(int(v)) for row in ints for v in row) < 2**60:
        ints = ints.astype(np.int64)
    best = -1
    best_idx = (0, 0, 0, 1)
    ny = ints.shape[1]
    for j1 in range(ny - 1):
        M = ints[:, j1 + 1:] - ints[:, j1:j1 + 1]
        hi = M.argmax(axis=0)
        lo = M.argmin(axis=0)
        cols = np.arange(M.shape[1])
        vals = M[hi, cols] - M[lo, cols]
        c = int(vals.argmax())
        v = int(vals[c])
        if v > best:
            a, b = int(lo[c]), int(hi[c])
            best = v
            best_idx = (min(a, b), max(a, b), j1, j1 + 1 + c)
    return Fraction(best, denom), best_idx


def _step_refinement(mu: StepPermuton, nu: StepPermuton):
    """Common grid and integer cell-mass difference matrix, scaled by lcm^2."""
    n1, n2 = mu.base.order, nu.base.order
    scale = lcm(n1, n2)
    grid_ints = sorted({i * (scale // n1) for i in range(n1 + 1)} | {i * (scale // n2) for i in range(n2 + 1)})
    cells = len(grid_ints) - 1
    diff = np.zeros((cells, cells), dtype=np.int64)
    for perm, order, sign in ((mu.base, n1, 1), (nu.base, n2, -1)):
        unit = scale // order
        for ci in range(cells):
            col = grid_ints[ci] // unit
            band = perm(col + 1)
            y_lo, y_hi = (band - 1) * unit, band * unit
            dx = grid_ints[ci + 1] - grid_ints[ci]
            for cj in range(cells):
                dy = min(grid_ints[cj + 1], y_hi) - max(grid_ints[cj], y_lo)
                if dy > 0:
                    diff[ci, cj] += sign * order * dx * dy
    grid = tuple(Fraction(g, scale) for g in grid_ints)
    return grid, diff, scale * scale


def _step_grid_max_rectangle(mu: StepPermuton, nu: StepPermuton):
    grid, diff, denom = _step_refinement(mu, nu)
    F = np.zeros((len(grid), len(grid)), dtype=np.int64)
    F[1:, 1:] = diff.cumsum(axis=0).cumsum(axis=1)
    best = -1
    best_idx = (0, 1, 0, 1)
    for j1 in range(len(grid) - 1):
        M = F[:, j1 + 1:] - F[:, j1:j1 + 1]
        hi = M.argmax(axis=0)
        lo = M.argmin(axis=0)
        cols = np.arange(M.shape[1])
        vals = M[hi, cols] - M[lo, cols]
        c = int(vals.argmax())
        if int(vals[c]) > best:
            a, b = int(lo[c]), int(hi[c])
            best = int(vals[c])
            best_idx = (min(a, b), max(a, b), j1, j1 + 1 + c)
    return Fraction(best, denom), best_idx, grid


_CUT_CELL_LIMIT = 14


def cut_distance_bruteforce(mu: StepPermuton, nu: StepPermuton) -> DistanceResult:
    """Exact sup |mu(S x T) - nu(S x T)| over arbitrary unions of grid cells.

    For measures piecewise-constant on a grid this equals the unrestricted
    supremum over Borel S, T. Row subsets are enumerated (2^cells); for each,
    the optimal column set is just the positive (or negative) part of the
    aggregated cell masses.
    """
    grid, diff, denom = _step_refinement(mu, nu)
    cells = diff.shape[0]
    if cells > _CUT_CELL_LIMIT:
        raise PreconditionError(f"common refinement has {cells} cells; limit is {_CUT_CELL_LIMIT}")
    rows = [tuple(int(v) for v in diff[i]) for i in range(cells)]
    agg: list[tuple[int, ...]] = [tuple([0] * cells)] * (1 << cells)
    best, best_mask, best_cols = -1, 0, ()
    for mask in range(1, 1 << cells):
        low = mask & -mask
        i = low.bit_length() - 1
        prev = agg[mask ^ low]
        cur = tuple(p + r for p, r in zip(prev, rows[i]))
        agg[mask] = cur
        pos = sum(v for v in cur if v > 0)
        neg = -sum(v for v in cur if v < 0)
        val = max(pos, neg)
        if val > best:
            best = val
            best_mask = mask
            keep_pos = pos >= neg
            best_cols = tuple(j for j, v in enumerate(cur) if (v > 0 if keep_pos else v < 0))
    if best <= 0:
        return DistanceResult(ZERO, ((ZERO, ONE),), ((ZERO, ONE),), "subsets")
    s_cells = tuple(i for i in range(cells) if best_mask >> i & 1)
    return DistanceResult(
        Fraction(best, denom),
        _cells_to_intervals(s_cells, grid),
        _cells_to_intervals(best_cols, grid),
        "subsets",
    )


def _cells_to_intervals(cells: Sequence[int], grid: Sequence[Fraction]) -> tuple[Interval, ...]:
    out = []
    for c in cells:
        if out and out[-1][1] == grid[c]:
            out[-1] = (out[-1][0], grid[c + 1])
        else:
            out.append((grid[c], grid[c + 1]))
    return tuple(out)


# ---------------------------------------------------------------------------
# Monte Carlo densities

@dataclass(frozen=True)
class DensityEstimate:
    estimate: float
    sample_count: int
    ci_half_width: float  # 99% Hoeffding
    seed: int
    hits: int


_CHUNK = 1 << 16


def density_monte_carlo(pattern: Permutation, model: PermutonModel, samples: int, seed: int) -> DensityEstimate:
    """Fraction of N independent k-point draws whose left-to-right vertical
    order matches the pattern. Deterministic for a given seed.

    Rank ties (possible only for step models, whose fibers share column
    atoms) count as increasing in x-order, matching the sampler's tie rule.
    """
    if samples < 1:
        raise PreconditionError("need at least one sample")
    k = pattern.order
    rng = np.random.default_rng(seed)
    pairs = [(i, j) for i in range(k) for j in range(i + 1, k)]
    increasing = {(i, j): pattern(i + 1) < pattern(j + 1) for i, j in pairs}
    hits = 0
    remaining = samples
    while remaining > 0:
        count = min(remaining, _CHUNK)
        remaining -= count
        xs, ys = _sample_points(model, rng, count, k)
        order = np.argsort(xs, axis=1, kind="stable")
        ys_sorted = np.take_along_axis(ys, order, axis=1)
        match = np.ones(count, dtype=bool)
        for i, j in pairs:
            if increasing[(i, j)]:
                match &= ys_sorted[:, i] <= ys_sorted[:, j]
            else:
                match &= ys_sorted[:, i] > ys_sorted[:, j]
        hits += int(match.sum())
    ci = math.sqrt(math.log(2 / 0.01) / (2 * samples))
    return DensityEstimate(hits / samples, samples, ci, seed, hits)


def _sample_points(model: PermutonModel, rng: np.random.Generator, count: int, k: int):
    xs = rng.random((count, k))
    if isinstance(model, UniformPermuton):
        return xs, rng.random((count, k))
    if isinstance(model, StepPermuton):
        n = model.base.order
        cells = np.minimum((xs * n).astype(np.int64), n - 1)
        heights = np.array([(2 * v - 1) / (2 * n) for v in model.base.values])
        return xs, heights[cells]
    if isinstance(model, TrackPermuton):
        bounds = np.array([float(p.x_lo) for p in model.pieces] + [1.0])
        max_tracks = max(len(p.tracks) for p in model.pieces)
        cum = np.ones((len(model.pieces), max_tracks))
        slope = np.zeros((len(model.pieces), max_tracks))
        inter = np.zeros((len(model.pieces), max_tracks))
        for pi, piece in enumerate(model.pieces):
            acc = 0.0
            for ti, tr in enumerate(piece.tracks):
                acc += float(tr.w)
                cum[pi, ti] = acc
                slope[pi, ti] = float(tr.a)
                inter[pi, ti] = float(tr.b)
            cum[pi, len(piece.tracks) - 1] = 1.0
        piece_idx = np.clip(np.searchsorted(bounds, xs, side="right") - 1, 0, len(model.pieces) - 1)
        u = rng.random((count, k))
        choice = (u[..., None] >= cum[piece_idx]).sum(axis=-1)
        ys = slope[piece_idx, choice] * xs + inter[piece_idx, choice]
        return xs, ys
    if isinstance(model, DigitSwapPermuton):
        v = rng.integers(0, 1 << 52, size=(count, k), dtype=np.uint64)
        xs = (v + 0.5) / 2.0**52
        sv = np.zeros_like(v)
        for j in range(26):
            d = (v >> np.uint64(2 * j)) & np.uint64(3)
            s = np.where((d == 1) | (d == 2), np.uint64(3) - d, d)
            sv |= s << np.uint64(2 * j)
        ys = (sv + 0.5) / 2.0**52
        return xs, ys
    raise InputError(f"model {model!r} is not samplable")


# ---------------------------------------------------------------------------
# avoidance certification

@dataclass(frozen=True)
class AssignmentResult:
    slots: tuple[tuple[int, int], ...]  # (piece, track) per sample point
    feasible: bool
    witness_x: tuple[Fraction, ...] | None
    generated: int  # constraints produced during elimination


@dataclass(frozen=True)
class AvoidanceCertificate:
    pattern: Permutation
    model_id: str
    assignments: tuple[AssignmentResult, ...]
    certified: bool

    @property
    def witness(self) -> AssignmentResult | None:
        for res in self.assignments:
            if res.feasible:
                return res
        return None


def certify_avoidance(pattern: Permutation, model: TrackPermuton) -> AvoidanceCertificate:
    """Decide t(pattern, model) = 0 exactly.

    Every assignment of the k x-ordered sample points to (piece, track)
    slots with non-decreasing piece index spawns a strict rational linear
    system (points inside their open pieces, increasing x, y-order given by
    the pattern); the pattern has positive density iff some system is
    feasible, since the excluded boundary configurations form a null set.
    The certificate enumerates every assignment exactly once.
    """
    if not isinstance(model, TrackPermuton):
        raise PreconditionError("certification requires a track model")
    k = pattern.order
    results = []
    certified = True
    value_pos = [0] * k  # value v sits at position value_pos[v-1] (0-based)
    for i, v in enumerate(pattern.values):
        value_pos[v - 1] = i
    for slots in _slot_assignments(model, k):
        system = _assignment_system(model, slots, value_pos)
        res = solve(system)
        results.append(AssignmentResult(slots, res.feasible, res.witness, res.generated))
        if res.feasible:
            certified = False
    return AvoidanceCertificate(pattern, model_description(model), tuple(results), certified)


def _slot_assignments(model: TrackPermuton, k: int):
    out: list[tuple[tuple[int, int], ...]] = []
    prefix: list[tuple[int, int]] = []

    def rec(min_piece: int) -> None:
        if len(prefix) == k:
            out.append(tuple(prefix))
            return
        for pi in range(min_piece, len(model.pieces)):
            for ti in range(len(model.pieces[pi].tracks)):
                prefix.append((pi, ti))
                rec(pi)
                prefix.pop()

    rec(0)
    return out


def _assignment_system(model: TrackPermuton, slots, value_pos) -> LinearConstraintSystem:
    k = len(slots)
    constraints = []

    def unit(i: int, scale: Fraction) -> tuple[Fraction, ...]:
        coeffs = [ZERO] * k
        coeffs[i] = scale
        return tuple(coeffs)

    for i, (pi, _) in enumerate(slots):
        piece = model.pieces[pi]
        constraints.append(LinearConstraint(unit(i, ONE), -piece.x_lo, True))
        constraints.append(LinearConstraint(unit(i, -ONE), piece.x_hi, True))
    for i in range(k - 1):
        coeffs = [ZERO] * k
        coeffs[i], coeffs[i + 1] = -ONE, ONE
        constraints.append(LinearConstraint(tuple(coeffs), ZERO, True))
    for v in range(k - 1):
        i, j = value_pos[v], value_pos[v + 1]
        ti = model.pieces[slots[i][0]].tracks[slots[i][1]]
        tj = model.pieces[slots[j][0]].tracks[slots[j][1]]
        coeffs = [ZERO] * k
        coeffs[i] += -ti.a
        coeffs[j] += tj.a
        constraints.append(LinearConstraint(tuple(coeffs), tj.b - ti.b, True))
    return LinearConstraintSystem(k, tuple(constraints))


def certificate_lines(cert: AvoidanceCertificate) -> list[str]:
    """Human-readable report: one line per assignment."""
    lines = [f"pattern {''.join(map(str, cert.pattern.values))} on {cert.model_id}: "
             f"{'CERTIFIED' if cert.certified else 'WITNESS'}"]
    for res in cert.assignments:
        slot_txt = " ".join(f"p{pi}t{ti}" for pi, ti in res.slots)
        if res.feasible:
            xs = ", ".join(str(x) for x in res.witness_x)
            lines.append(f"  [{slot_txt}] feasible x = ({xs})")
        else:
            lines.append(f"  [{slot_txt}] infeasible ({res.generated} eliminated constraints)")
    return lines


# ---------------------------------------------------------------------------
# Stanley-Wilf generator

@dataclass(frozen=True)
class SWReport:
    n: int
    mode: str
    distinct_count: int
    per_choice_total: int
    nth_root: float
    all_avoiding: bool | None
    discarded: int  # choice vectors rejected for duplicate heights


_SW_EXHAUSTIVE_LIMIT = 1 << 24


def sw_generate(model: TrackPermuton, n: int, mode: str = "exhaustive",
                pattern: Permutation | None = None, seed: int = 0, trials: int = 0) -> SWReport:
    """Count distinct permutations obtainable by placing x_i = (i-0.5)/n and
    choosing one fiber atom per point.

    Exhaustive mode enumerates every atom-choice vector (product of fiber
    sizes, capped); random mode samples ``trials`` vectors with a seeded
    generator. distinct_count**(1/n) is the resulting growth-rate bound.
    """
    if n < 1:
        raise PreconditionError("need n >= 1")
    fibers = [fiber_at(model, Fraction(2 * i - 1, 2 * n)) for i in range(1, n + 1)]
    sizes = [len(f.atoms) for f in fibers]
    total = math.prod(sizes)
    seen: set[tuple[int, ...]] = set()
    discarded = 0

    def record(choice: Sequence[int]) -> None:
        nonlocal discarded
        ys = [fibers[i].atoms[c].y for i, c in enumerate(choice)]
        if len(set(ys)) != n:
            discarded += 1
            return
        seen.add(pattern_of_values(ys).values)

    if mode == "exhaustive":
        if total > _SW_EXHAUSTIVE_LIMIT:
            raise PreconditionError(f"{total} choice vectors exceed the exhaustive limit")
        for choice in itertools.product(*(range(m) for m in sizes)):
            record(choice)
    elif mode == "random":
        if trials < 1:
            raise PreconditionError("random mode needs trials >= 1")
        import random as _random

        rng = _random.Random(f"permutonlab.sw:{seed}")
        for _ in range(trials):
            record([rng.randrange(m) for m in sizes])
    else:
        raise InputError("mode must be 'exhaustive' or 'random'")

    all_avoiding = None
    if pattern is not None and pattern.order <= n:
        all_avoiding = all(avoids(pattern, Permutation(vals)) for vals in seen)
    return SWReport(n, mode, len(seen), total, len(seen) ** (1.0 / n), all_avoiding, discarded)
