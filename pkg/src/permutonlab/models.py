"""Representable permuton models and their fiber disintegrations.

Four model families are supported:

* :class:`TrackPermuton` -- piecewise-linear models: the x-axis is split into
  pieces, each carrying weighted linear tracks. Fibers are finite atomic
  measures ("molecules"). All geometry is exact rational.
* :class:`StepPermuton` -- the step representation of a finite permutation.
  Fibers use the single-atom convention: the fiber in column i is one atom at
  the column's band midpoint, which is what resnapping needs.
* :class:`DigitSwapPermuton` -- the measure on the graph of the base-4 map
  swapping digits 1 and 2; evaluation works on finite digit prefixes.
* :class:`UniformPermuton` -- Lebesgue measure on the square (sampling only).

Geometry is kept in :class:`fractions.Fraction`; floats appear only in
sampling.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Union

from .errors import BoundaryError, InputError, PreconditionError
from .perms import Permutation

__all__ = [
    "Track",
    "Piece",
    "TrackPermuton",
    "StepPermuton",
    "DigitSwapPermuton",
    "UniformPermuton",
    "PermutonModel",
    "Atom",
    "Fiber",
    "MarginalReport",
    "MoleculeProfile",
    "LPProfile",
    "build_step",
    "build_zigzag",
    "identity_permuton",
    "transpose_tracks",
    "canonical",
    "fiber_at",
    "molecule_profile",
    "validate_marginals",
    "sample_permutation",
    "digit_swap_eval",
    "lp_distance",
    "fiber_lp_profile",
    "fraction_to_str",
    "fraction_from_str",
    "model_to_dict",
    "model_from_dict",
    "save_model",
    "load_model",
    "model_description",
]

ZERO = Fraction(0)
ONE = Fraction(1)


# ---------------------------------------------------------------------------
# model types

@dataclass(frozen=True)
class Track:
    """A weighted linear track y = a*x + b within one piece."""

    a: Fraction
    b: Fraction
    w: Fraction

    def y_at(self, x: Fraction) -> Fraction:
        return self.a * x + self.b


@dataclass(frozen=True)
class Piece:
    """An x-interval [x_lo, x_hi] carrying tracks whose weights sum to 1."""

    x_lo: Fraction
    x_hi: Fraction
    tracks: tuple[Track, ...]

    @property
    def length(self) -> Fraction:
        return self.x_hi - self.x_lo


@dataclass(frozen=True)
class TrackPermuton:
    pieces: tuple[Piece, ...]

    def __post_init__(self) -> None:
        if not self.pieces:
            raise InputError("a track permuton needs at least one piece")
        if self.pieces[0].x_lo != 0 or self.pieces[-1].x_hi != 1:
            raise InputError("pieces must cover [0, 1]")
        prev_hi = None
        for piece in self.pieces:
            if not piece.x_lo < piece.x_hi:
                raise InputError("piece interval is empty or reversed")
            if prev_hi is not None and piece.x_lo != prev_hi:
                raise InputError("pieces must partition [0, 1] without gaps or overlaps")
            prev_hi = piece.x_hi
            if not piece.tracks:
                raise InputError("piece without tracks")
            total = ZERO
            seen: set[tuple[Fraction, Fraction]] = set()
            for t in piece.tracks:
                if t.w <= 0:
                    raise InputError("track weight must be positive")
                total += t.w
                if (t.a, t.b) in seen:
                    raise InputError("identical tracks within one piece")
                seen.add((t.a, t.b))
                for x in (piece.x_lo, piece.x_hi):
                    if not ZERO <= t.y_at(x) <= ONE:
                        raise InputError("track leaves the unit square")
            if total != 1:
                raise InputError(f"track weights in piece [{piece.x_lo},{piece.x_hi}] sum to {total}, not 1")

    def boundaries(self) -> tuple[Fraction, ...]:
        return tuple(p.x_lo for p in self.pieces) + (ONE,)

    def crossings(self) -> tuple[tuple[Fraction, int], ...]:
        """Interior x where tracks of one piece meet, with the merged atom count.

        These form a finite (null) set; fibers there have fewer atoms than the
        generic fiber of the piece.
        """
        out = []
        for piece in self.pieces:
            xs: set[Fraction] = set()
            for i, s in enumerate(piece.tracks):
                for t in piece.tracks[i + 1:]:
                    if s.a == t.a:
                        continue
                    x = (t.b - s.b) / (s.a - t.a)
                    if piece.x_lo < x < piece.x_hi:
                        xs.add(x)
            for x in sorted(xs):
                out.append((x, len({t.y_at(x) for t in piece.tracks})))
        return tuple(out)


@dataclass(frozen=True)
class StepPermuton:
    """The measure spreading mass 1/n over the n cells determined by ``base``."""

    base: Permutation


@dataclass(frozen=True)
class DigitSwapPermuton:
    """Graph of the base-4 digit map 0->0, 1->2, 2->1, 3->3."""


@dataclass(frozen=True)
class UniformPermuton:
    """Product Lebesgue measure on the unit square (sampling-only)."""


PermutonModel = Union[TrackPermuton, StepPermuton, DigitSwapPermuton, UniformPermuton]


# ---------------------------------------------------------------------------
# fibers

@dataclass(frozen=True)
class Atom:
    y: Fraction
    weight: Fraction


@dataclass(frozen=True)
class Fiber:
    """A finite atomic measure on [0, 1] (a molecule)."""

    atoms: tuple[Atom, ...]

    def __post_init__(self) -> None:
        positions = [a.y for a in self.atoms]
        if len(set(positions)) != len(positions):
            raise InputError("fiber atoms must sit at distinct positions")
        if any(a.weight <= 0 for a in self.atoms):
            raise InputError("fiber atom weights must be positive")
        if self.total_weight > 1:
            raise InputError("fiber weight exceeds 1")

    @property
    def total_weight(self) -> Fraction:
        return sum((a.weight for a in self.atoms), ZERO)

    @property
    def is_probability(self) -> bool:
        return self.total_weight == 1


def _merged_fiber(pairs: Iterable[tuple[Fraction, Fraction]]) -> Fiber:
    """Build a fiber, merging coincident positions by summing weights."""
    acc: dict[Fraction, Fraction] = {}
    for y, w in pairs:
        acc[y] = acc.get(y, ZERO) + w
    return Fiber(tuple(Atom(y, w) for y, w in sorted(acc.items())))


# ---------------------------------------------------------------------------
# builders

def build_step(perm: Permutation) -> StepPermuton:
    return StepPermuton(perm)


def build_zigzag(perm: Permutation) -> TrackPermuton:
    """Piecewise-linear permuton read off the ascent/descent word of ``perm``.

    Order k gives k-1 pieces of slope +-(k-1): piece i rises across its
    interval when perm(i) > perm(i+1) and falls when perm(i) < perm(i+1).
    The resulting model avoids ``perm`` itself (certifiable downstream) and
    has exactly uniform marginals.
    """
    k = perm.order
    if k < 2:
        raise PreconditionError("zigzag construction needs order >= 2")
    m = k - 1
    pieces = []
    for i in range(1, k):
        x_lo, x_hi = Fraction(i - 1, m), Fraction(i, m)
        if perm(i) > perm(i + 1):
            track = Track(Fraction(m), Fraction(-(i - 1)), ONE)
        else:
            track = Track(Fraction(-m), Fraction(i), ONE)
        pieces.append(Piece(x_lo, x_hi, (track,)))
    return TrackPermuton(tuple(pieces))


def identity_permuton() -> TrackPermuton:
    """The permuton supported on the diagonal y = x."""
    return TrackPermuton((Piece(ZERO, ONE, (Track(ONE, ZERO, ONE),)),))


def transpose_tracks(model: TrackPermuton) -> TrackPermuton:
    """Pushforward under (x, y) -> (y, x).

    Each strictly monotone track inverts to a track over its y-range with
    slope 1/a and fiber weight w/|a|; the output is re-partitioned at all
    image breakpoints. Requires every track to have nonzero slope and the
    y-marginal to be exactly uniform (otherwise no valid permuton results).
    """
    images = []  # (lo, hi, track)
    cuts = {ZERO, ONE}
    for piece in model.pieces:
        for t in piece.tracks:
            if t.a == 0:
                raise PreconditionError("horizontal track has no inverse; transpose undefined")
            y0, y1 = t.y_at(piece.x_lo), t.y_at(piece.x_hi)
            lo, hi = (y0, y1) if y0 < y1 else (y1, y0)
            inv = Track(1 / t.a, -t.b / t.a, t.w / abs(t.a))
            images.append((lo, hi, inv))
            cuts.update((lo, hi))
    grid = sorted(cuts)
    pieces = []
    for lo, hi in zip(grid, grid[1:]):
        acc: dict[tuple[Fraction, Fraction], Fraction] = {}
        for t_lo, t_hi, inv in images:
            if t_lo <= lo and hi <= t_hi:
                key = (inv.a, inv.b)
                acc[key] = acc.get(key, ZERO) + inv.w
        if not acc:
            raise PreconditionError(f"no mass over [{lo},{hi}]: y-marginal is not uniform")
        total = sum(acc.values(), ZERO)
        if total != 1:
            raise PreconditionError(f"y-marginal density {total} over [{lo},{hi}]: transpose needs uniform y-marginal")
        tracks = tuple(Track(a, b, w) for (a, b), w in sorted(acc.items()))
        pieces.append(Piece(lo, hi, tracks))
    return TrackPermuton(tuple(pieces))


def canonical(model: TrackPermuton) -> TrackPermuton:
    """Normal form: tracks sorted by (a, b), adjacent pieces with equal track sets merged."""
    normed = []
    for piece in model.pieces:
        tracks = tuple(sorted(piece.tracks, key=lambda t: (t.a, t.b)))
        if normed and normed[-1].tracks == tracks:
            prev = normed.pop()
            normed.append(Piece(prev.x_lo, piece.x_hi, tracks))
        else:
            normed.append(Piece(piece.x_lo, piece.x_hi, tracks))
    return TrackPermuton(tuple(normed))


# ---------------------------------------------------------------------------
# fiber queries

_DIGIT_SWAP = {0: 0, 1: 2, 2: 1, 3: 3}


def _exact(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def fiber_at(model: PermutonModel, x, depth: int = 16) -> Fiber:
    """Disintegration fiber at x (x must avoid piece/cell boundaries).

    For track models the atoms are the track heights of the containing piece,
    merged at coincidences. For step models: the single column atom. For the
    digit-swap model: one atom obtained by swapping the first ``depth``
    base-4 digits of x. Boundary x raises :class:`BoundaryError` so callers
    resolve the null-set ambiguity explicitly.
    """
    x = _exact(x)
    if not ZERO <= x <= ONE:
        raise PreconditionError(f"x={x} outside [0, 1]")
    if isinstance(model, TrackPermuton):
        if x in model.boundaries():
            raise BoundaryError(f"x={x} lies on a piece boundary")
        for piece in model.pieces:
            if piece.x_lo < x < piece.x_hi:
                return _merged_fiber((t.y_at(x), t.w) for t in piece.tracks)
        raise AssertionError("unreachable: boundaries cover the gaps")
    if isinstance(model, StepPermuton):
        n = model.base.order
        scaled = x * n
        if scaled.denominator == 1:
            raise BoundaryError(f"x={x} lies on a cell boundary")
        cell = int(scaled)  # floor for positive rationals
        return Fiber((Atom(Fraction(2 * model.base(cell + 1) - 1, 2 * n), ONE),))
    if isinstance(model, DigitSwapPermuton):
        scaled = x * 4**depth
        if scaled.denominator == 1:
            raise BoundaryError(f"x={x} is a depth-{depth} base-4 boundary")
        cell = int(scaled)
        swapped = _swap_prefix_int(cell, depth)
        y = Fraction(swapped, 4**depth) + (x - Fraction(cell, 4**depth))
        return Fiber((Atom(y, ONE),))
    raise PreconditionError("the uniform permuton has non-atomic fibers")


def _swap_prefix_int(cell: int, depth: int) -> int:
    """Apply the 1<->2 digit swap to a depth-digit base-4 integer."""
    out = 0
    for j in range(depth):
        d = (cell >> (2 * j)) & 3
        out |= _DIGIT_SWAP[d] << (2 * j)
    return out


def digit_swap_eval(digits: str) -> str:
    """Digit-wise base-4 map 0->0, 1->2, 2->1, 3->3 on a digit string.

    >>> digit_swap_eval("132")
    '231'
    """
    out = []
    for c in digits:
        if c not in "0123":
            raise InputError(f"invalid base-4 digit {c!r}")
        out.append(str(_DIGIT_SWAP[int(c)]))
    return "".join(out)


# ---------------------------------------------------------------------------
# structure reports

@dataclass(frozen=True)
class MoleculeProfile:
    direction: str
    max_atoms: int
    histogram: dict[int, Fraction]  # atom count -> total x-length
    crossings: tuple[tuple[Fraction, int], ...]  # zero-measure diagnostic set


def molecule_profile(model: PermutonModel, direction: str = "vertical") -> MoleculeProfile:
    """Atoms per fiber as a piecewise-constant function of x, exactly.

    The histogram weighs each atom count by x-length; track crossings (where
    atoms merge on a null set) are reported separately rather than counted.
    ``horizontal`` profiles the transposed model.
    """
    if direction not in ("vertical", "horizontal"):
        raise InputError("direction must be 'vertical' or 'horizontal'")
    if isinstance(model, StepPermuton):
        if direction == "horizontal":
            model = StepPermuton(_inverse(model.base))
        return MoleculeProfile(direction, 1, {1: ONE}, ())
    if not isinstance(model, TrackPermuton):
        raise PreconditionError("molecule profile needs an atomic-fiber model")
    if direction == "horizontal":
        model = transpose_tracks(model)
    histogram: dict[int, Fraction] = {}
    for piece in model.pieces:
        count = len(piece.tracks)
        histogram[count] = histogram.get(count, ZERO) + piece.length
    return MoleculeProfile(direction, max(histogram), histogram, model.crossings())


def _inverse(perm: Permutation) -> Permutation:
    out = [0] * perm.order
    for i, v in enumerate(perm.values, start=1):
        out[v - 1] = i
    return Permutation(tuple(out))


@dataclass(frozen=True)
class MarginalReport:
    x_ok: bool
    y_ok: bool
    max_deviation: Fraction
    note: str = ""


def validate_marginals(model: TrackPermuton) -> MarginalReport:
    """Verify both uniform-marginal properties symbolically.

    The x-marginal reduces to per-piece weight sums; the y-marginal density
    is assembled as a piecewise-constant rational function (each track of
    slope a spreads density w/|a| over its y-range) and compared with 1.
    """
    x_dev = ZERO
    for piece in model.pieces:
        x_dev = max(x_dev, abs(sum((t.w for t in piece.tracks), ZERO) - 1))
    segments = []  # (lo, hi, density)
    flat = False
    for piece in model.pieces:
        for t in piece.tracks:
            if t.a == 0:
                flat = True
                continue
            y0, y1 = t.y_at(piece.x_lo), t.y_at(piece.x_hi)
            lo, hi = (y0, y1) if y0 < y1 else (y1, y0)
            segments.append((lo, hi, t.w / abs(t.a)))
    cuts = sorted({ZERO, ONE, *(s[0] for s in segments), *(s[1] for s in segments)})
    y_dev = ZERO
    for lo, hi in zip(cuts, cuts[1:]):
        if hi <= ZERO or lo >= ONE:
            continue
        density = sum((d for s_lo, s_hi, d in segments if s_lo <= lo and hi <= s_hi), ZERO)
        y_dev = max(y_dev, abs(density - 1))
    if flat:
        return MarginalReport(x_dev == 0, False, max(x_dev, y_dev),
                              "zero-slope track places an atom on the y-marginal")
    return MarginalReport(x_dev == 0, y_dev == 0, max(x_dev, y_dev))


# ---------------------------------------------------------------------------
# sampling

_RETRY_CAP = 100


def sample_permutation(model: PermutonModel, n: int, seed: int | str) -> Permutation:
    """Sample n i.i.d. points from the model and read off their pattern.

    x is drawn uniformly (the x-marginal of every model here), y by atom
    weight on the fiber (uniformly for the uniform model). Null events
    (boundary x, repeated x or y) are resampled point-wise up to a retry cap.
    Rank ties in y -- which step models force whenever two points share a
    column atom -- are broken by x-order, the same secondary key used by
    resnapping. Deterministic for a given seed.
    """
    if n < 1:
        raise PreconditionError("need n >= 1 samples")
    rng = random.Random(f"permutonlab.sample:{seed}")
    xs: list = []
    ys: list = []
    seen_x: set = set()
    for _ in range(n):
        for attempt in range(_RETRY_CAP + 1):
            if attempt == _RETRY_CAP:
                raise RuntimeError("sampling retry cap exceeded: degenerate model")
            x_f = rng.random()
            if isinstance(model, UniformPermuton):
                x, y = x_f, rng.random()
            elif isinstance(model, DigitSwapPermuton):
                v = rng.getrandbits(52)
                x = (v + 0.5) / 2.0**52
                y = (_swap_prefix_int(v, 26) + 0.5) / 2.0**52
            else:
                try:
                    fiber = fiber_at(model, Fraction(x_f))
                except BoundaryError:
                    continue
                x = x_f
                u = rng.random()
                y = fiber.atoms[-1].y
                acc = 0.0
                for atom in fiber.atoms:
                    acc += float(atom.weight)
                    if u < acc:
                        y = atom.y
                        break
            if x in seen_x:
                continue
            break
        seen_x.add(x)
        xs.append(x)
        ys.append(y)
    order = sorted(range(n), key=lambda i: xs[i])
    keyed = sorted(range(n), key=lambda j: (ys[order[j]], j))
    values = [0] * n
    for rank, j in enumerate(keyed, start=1):
        values[j] = rank
    return Permutation(tuple(values))


# ---------------------------------------------------------------------------
# Levy-Prokhorov distance on fibers

_MAX_LP_ATOMS = 20


def lp_distance(alpha: Fiber, beta: Fiber) -> Fraction:
    """Exact Levy-Prokhorov distance between two atomic probability measures.

    Candidate thresholds are the pairwise cross distances; between
    consecutive thresholds the neighbourhood structure is fixed, so the
    tightest feasible epsilon there is the worst mass deficiency (a partial
    mass difference), checked by brute force over atom subsets. Scanning the
    thresholds in increasing order yields the infimum exactly, whether or
    not it is attained.
    """
    for fiber in (alpha, beta):
        if not fiber.is_probability:
            raise PreconditionError("LP distance needs probability fibers")
        if len(fiber.atoms) > _MAX_LP_ATOMS:
            raise PreconditionError(f"at most {_MAX_LP_ATOMS} atoms supported")
    ya = [_exact(a.y) for a in alpha.atoms]
    yb = [_exact(b.y) for b in beta.atoms]
    wa = [a.weight for a in alpha.atoms]
    wb = [b.weight for b in beta.atoms]
    thresholds = sorted({ZERO, *(abs(p - q) for p in ya for q in yb)})
    for idx, t in enumerate(thresholds):
        deficiency = max(
            _worst_deficiency(ya, wa, yb, wb, t),
            _worst_deficiency(yb, wb, ya, wa, t),
        )
        nxt = thresholds[idx + 1] if idx + 1 < len(thresholds) else None
        if nxt is None or deficiency <= nxt:
            return max(deficiency, t)
    raise AssertionError("unreachable: last interval is always feasible")


def _worst_deficiency(ys, ws, other_ys, other_ws, radius) -> Fraction:
    """max over subsets S of mass(S) - other_mass(S's closed radius-neighbourhood)."""
    m, om = len(ys), len(other_ys)
    nb = [0] * m
    for i, y in enumerate(ys):
        for j, oy in enumerate(other_ys):
            if abs(y - oy) <= radius:
                nb[i] |= 1 << j
    other_mass = [ZERO] * (1 << om)
    for mask in range(1, 1 << om):
        low = mask & -mask
        other_mass[mask] = other_mass[mask ^ low] + other_ws[low.bit_length() - 1]
    best = ZERO
    mass = [ZERO] * (1 << m)
    hood = [0] * (1 << m)
    for mask in range(1, 1 << m):
        low = mask & -mask
        i = low.bit_length() - 1
        mass[mask] = mass[mask ^ low] + ws[i]
        hood[mask] = hood[mask ^ low] | nb[i]
        best = max(best, mass[mask] - other_mass[hood[mask]])
    return best


@dataclass(frozen=True)
class LPProfile:
    grid: tuple[Fraction, ...]
    matrix: tuple[tuple[Fraction, ...], ...]
    delta: Fraction
    parts: tuple[tuple[int, ...], ...]  # coarsest interval partition of grid indices


def fiber_lp_profile(model: TrackPermuton, grid_count: int, delta) -> LPProfile:
    """Pairwise LP distances of fibers at grid midpoints.

    Also returns the coarsest partition of the grid into consecutive runs
    within which all pairwise distances stay below ``delta``.
    """
    if grid_count < 2:
        raise PreconditionError("need at least 2 grid points")
    delta = _exact(delta)
    grid = tuple(Fraction(2 * i - 1, 2 * grid_count) for i in range(1, grid_count + 1))
    fibers = [fiber_at(model, x) for x in grid]
    matrix = [[ZERO] * grid_count for _ in range(grid_count)]
    for i in range(grid_count):
        for j in range(i + 1, grid_count):
            d = lp_distance(fibers[i], fibers[j])
            matrix[i][j] = matrix[j][i] = d
    parts: list[tuple[int, ...]] = []
    start = 0
    for j in range(1, grid_count + 1):
        if j == grid_count or any(matrix[i][j] >= delta for i in range(start, j)):
            parts.append(tuple(range(start, j)))
            start = j
    return LPProfile(grid, tuple(tuple(row) for row in matrix), delta, tuple(parts))


# ---------------------------------------------------------------------------
# serialization

def fraction_to_str(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def fraction_from_str(s: str) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"not a rational: {s!r}") from None


def model_to_dict(model: PermutonModel) -> dict:
    if isinstance(model, TrackPermuton):
        return {
            "type": "tracks",
            "pieces": [
                {
                    "x_lo": fraction_to_str(p.x_lo),
                    "x_hi": fraction_to_str(p.x_hi),
                    "tracks": [
                        {"a": fraction_to_str(t.a), "b": fraction_to_str(t.b), "w": fraction_to_str(t.w)}
                        for t in p.tracks
                    ],
                }
                for p in model.pieces
            ],
        }
    if isinstance(model, StepPermuton):
        return {"type": "step", "perm": list(model.base.values)}
    if isinstance(model, DigitSwapPermuton):
        return {"type": "digit-swap-base4"}
    if isinstance(model, UniformPermuton):
        return {"type": "uniform"}
    raise InputError(f"unknown model {model!r}")


def model_from_dict(data: dict) -> PermutonModel:
    if not isinstance(data, dict) or "type" not in data:
        raise InputError("model JSON must be an object with a 'type' key")
    kind = data["type"]
    if kind == "tracks":
        try:
            pieces = tuple(
                Piece(
                    fraction_from_str(p["x_lo"]),
                    fraction_from_str(p["x_hi"]),
                    tuple(
                        Track(fraction_from_str(t["a"]), fraction_from_str(t["b"]), fraction_from_str(t["w"]))
                        for t in p["tracks"]
                    ),
                )
                for p in data["pieces"]
            )
        except (KeyError, TypeError):
            raise InputError("malformed tracks model") from None
        return TrackPermuton(pieces)
    if kind == "step":
        try:
            return StepPermuton(Permutation(tuple(int(v) for v in data["perm"])))
        except (KeyError, TypeError):
            raise InputError("malformed step model") from None
    if kind == "digit-swap-base4":
        return DigitSwapPermuton()
    if kind == "uniform":
        return UniformPermuton()
    raise InputError(f"unknown model type {kind!r}")


def save_model(model: PermutonModel, path) -> None:
    Path(path).write_text(json.dumps(model_to_dict(model)) + "\n")


def load_model(path) -> PermutonModel:
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read model file {path}: {exc}") from None
    return model_from_dict(data)


def model_description(model: PermutonModel) -> str:
    if isinstance(model, TrackPermuton):
        tracks = sum(len(p.tracks) for p in model.pieces)
        return f"tracks({len(model.pieces)} pieces, {tracks} tracks)"
    if isinstance(model, StepPermuton):
        return f"step(order {model.base.order})"
    if isinstance(model, DigitSwapPermuton):
        return "digit-swap-base4"
    return "uniform"
