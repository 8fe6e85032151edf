"""Permuton model tests: builders, fibers, marginals, molecules, sampling,
digit-swap map, and LP distances."""
import itertools
import json
import math
import random
import statistics
from fractions import Fraction

import pytest

from permutonlab.errors import BoundaryError, InputError, PreconditionError
from permutonlab.models import (
    Atom,
    DigitSwapPermuton,
    Fiber,
    Piece,
    StepPermuton,
    Track,
    TrackPermuton,
    UniformPermuton,
    build_step,
    build_zigzag,
    canonical,
    digit_swap_eval,
    fiber_at,
    fiber_lp_profile,
    identity_permuton,
    lp_distance,
    model_from_dict,
    model_to_dict,
    molecule_profile,
    sample_permutation,
    transpose_tracks,
    validate_marginals,
)
from permutonlab.perms import (
    Permutation,
    all_permutations,
    avoids,
    count_occurrences,
    identity,
    pattern_of_values,
)

F = Fraction


def random_perm(rng: random.Random, n: int) -> Permutation:
    vals = list(range(1, n + 1))
    rng.shuffle(vals)
    return Permutation(tuple(vals))


class TestTrackPermutonInvariants:
    def test_gap_rejected(self):
        with pytest.raises(InputError):
            TrackPermuton((Piece(F(0), F(1, 2), (Track(F(1), F(0), F(1)),)),
                           Piece(F(3, 4), F(1), (Track(F(1), F(0), F(1)),))))

    def test_weight_sum_enforced(self):
        with pytest.raises(InputError):
            TrackPermuton((Piece(F(0), F(1), (Track(F(1), F(0), F(1, 2)),)),))

    def test_unit_square_enforced(self):
        with pytest.raises(InputError):
            TrackPermuton((Piece(F(0), F(1), (Track(F(2), F(0), F(1)),)),))

    def test_identical_tracks_rejected(self):
        with pytest.raises(InputError):
            TrackPermuton((Piece(F(0), F(1), (Track(F(1), F(0), F(1, 2)),
                                              Track(F(1), F(0), F(1, 2)))),))


class TestZigzag:
    def test_identity3_pieces(self):
        z = build_zigzag(identity(3))
        assert len(z.pieces) == 2
        # both pieces fall: y = 1-2x on [0,1/2], y = 2-2x on [1/2,1]
        assert z.pieces[0].tracks == (Track(F(-2), F(1), F(1)),)
        assert z.pieces[1].tracks == (Track(F(-2), F(2), F(1)),)

    def test_single_descent_gives_identity_permuton(self):
        assert build_zigzag(Permutation((2, 1))) == identity_permuton()

    def test_slope_signs_145632(self):
        z = build_zigzag(Permutation((1, 4, 5, 6, 3, 2)))
        signs = tuple(1 if p.tracks[0].a > 0 else -1 for p in z.pieces)
        assert signs == (-1, -1, -1, 1, 1)

    def test_order_one_rejected(self):
        with pytest.raises(PreconditionError):
            build_zigzag(Permutation((1,)))

    def test_marginals_exact_for_orders_2_to_6(self):
        rng = random.Random(17)
        for k in range(2, 7):
            for perm in (identity(k), random_perm(rng, k)):
                rep = validate_marginals(build_zigzag(perm))
                assert rep.x_ok and rep.y_ok and rep.max_deviation == 0


class TestTranspose:
    def test_transpose_of_zigzag_id3(self):
        t = transpose_tracks(build_zigzag(identity(3)))
        assert len(t.pieces) == 1
        assert t.pieces[0].tracks == (
            Track(F(-1, 2), F(1, 2), F(1, 2)),  # y = (1-x)/2
            Track(F(-1, 2), F(1), F(1, 2)),     # y = 1 - x/2
        )
        rep = validate_marginals(t)
        assert rep.y_ok and rep.max_deviation == 0

    def test_identity_is_fixed(self):
        assert transpose_tracks(identity_permuton()) == identity_permuton()

    def test_involution_up_to_repartition(self):
        for perm in (Permutation((2, 3, 1)), identity(4), Permutation((3, 1, 4, 2))):
            z = build_zigzag(perm)
            assert canonical(transpose_tracks(transpose_tracks(z))) == canonical(z)

    def test_horizontal_track_rejected(self):
        flat = TrackPermuton((Piece(F(0), F(1), (Track(F(0), F(1, 2), F(1)),)),))
        with pytest.raises(PreconditionError):
            transpose_tracks(flat)

    def test_nonuniform_y_marginal_rejected(self):
        skew = TrackPermuton((Piece(F(0), F(1), (Track(F(1, 2), F(0), F(1)),)),))
        with pytest.raises(PreconditionError):
            transpose_tracks(skew)


class TestFiberAt:
    def test_transpose_fiber_at_half(self):
        t = transpose_tracks(build_zigzag(identity(3)))
        fiber = fiber_at(t, F(1, 2))
        assert fiber.atoms == (Atom(F(1, 4), F(1, 2)), Atom(F(3, 4), F(1, 2)))

    def test_zigzag_fiber_single_atom(self):
        z = build_zigzag(identity(3))
        fiber = fiber_at(z, F(1, 4))
        assert fiber.atoms == (Atom(F(1, 2), F(1)),)

    def test_step_fiber(self):
        fiber = fiber_at(build_step(Permutation((2, 1))), F(9, 10))
        assert len(fiber.atoms) == 1
        assert fiber.atoms[0].weight == 1
        assert 0 <= fiber.atoms[0].y < F(1, 2)

    def test_boundary_errors(self):
        z = build_zigzag(identity(3))
        for x in (F(0), F(1, 2), F(1)):
            with pytest.raises(BoundaryError):
                fiber_at(z, x)
        with pytest.raises(BoundaryError):
            fiber_at(build_step(identity(4)), F(1, 4))

    def test_crossing_atoms_merge(self):
        crossing = TrackPermuton((Piece(F(0), F(1), (
            Track(F(1), F(0), F(1, 2)), Track(F(-1), F(1), F(1, 2)))),))
        fiber = fiber_at(crossing, F(1, 2))
        assert fiber.atoms == (Atom(F(1, 2), F(1)),)
        off = fiber_at(crossing, F(1, 4))
        assert len(off.atoms) == 2

    def test_probability_weights_on_valid_models(self):
        rng = random.Random(23)
        for k in (3, 4, 5):
            z = build_zigzag(random_perm(rng, k))
            for model in (z, transpose_tracks(z)):
                assert validate_marginals(model).y_ok
                for _ in range(10):
                    x = F(rng.randrange(1, 720, 2), 720)
                    try:
                        fiber = fiber_at(model, x)
                    except BoundaryError:
                        continue
                    assert fiber.total_weight == 1

    def test_digit_swap_fiber(self):
        fiber = fiber_at(DigitSwapPermuton(), F(1, 5), depth=6)
        assert fiber.atoms[0].weight == 1
        with pytest.raises(BoundaryError):
            fiber_at(DigitSwapPermuton(), F(1, 4), depth=6)

    def test_uniform_has_no_atomic_fiber(self):
        with pytest.raises(PreconditionError):
            fiber_at(UniformPermuton(), F(1, 3))


class TestMoleculeProfile:
    def test_zigzag_identity_horizontal(self):
        for k in (3, 4, 5):
            prof = molecule_profile(build_zigzag(identity(k)), "horizontal")
            assert prof.max_atoms == k - 1
            assert prof.histogram == {k - 1: F(1)}

    def test_step_vertical(self):
        prof = molecule_profile(build_step(Permutation((3, 1, 2))), "vertical")
        assert prof.max_atoms == 1 and prof.histogram == {1: F(1)}

    def test_transpose_vertical(self):
        prof = molecule_profile(transpose_tracks(build_zigzag(identity(3))), "vertical")
        assert prof.max_atoms == 2
        assert prof.histogram == {2: F(1)}
        assert prof.crossings == ()

    def test_crossings_reported_separately(self):
        crossing = TrackPermuton((Piece(F(0), F(1), (
            Track(F(1), F(0), F(1, 2)), Track(F(-1), F(1), F(1, 2)))),))
        prof = molecule_profile(crossing, "vertical")
        assert prof.histogram == {2: F(1)}
        assert prof.crossings == ((F(1, 2), 1),)


class TestValidateMarginals:
    def test_identity_ok(self):
        rep = validate_marginals(identity_permuton())
        assert rep.x_ok and rep.y_ok and rep.max_deviation == 0

    def test_constructed_violation(self):
        skew = TrackPermuton((Piece(F(0), F(1), (Track(F(1, 2), F(0), F(1)),)),))
        rep = validate_marginals(skew)
        assert rep.x_ok and not rep.y_ok
        assert rep.max_deviation == 1  # density 2 on [0,1/2], 0 above

    def test_zero_slope_flagged(self):
        flat = TrackPermuton((Piece(F(0), F(1), (Track(F(0), F(1, 2), F(1)),)),))
        rep = validate_marginals(flat)
        assert not rep.y_ok and rep.note


class TestSampling:
    def test_identity_model_gives_identity(self):
        for seed in range(5):
            assert sample_permutation(identity_permuton(), 6, seed) == identity(6)

    def test_transpose_sample_has_no_long_increasing_run(self):
        t = transpose_tracks(build_zigzag(identity(3)))
        for seed in range(8):
            perm = sample_permutation(t, 30, seed)
            assert avoids(identity(3), perm)

    def test_step_identity_avoids_inversions(self):
        model = build_step(identity(5))
        for seed in range(4):
            perm = sample_permutation(model, 100, seed)
            assert avoids(Permutation((2, 1)), perm)

    def test_deterministic(self):
        t = transpose_tracks(build_zigzag(identity(3)))
        assert sample_permutation(t, 25, 42) == sample_permutation(t, 25, 42)
        assert sample_permutation(t, 25, 42) != sample_permutation(t, 25, 43)

    def test_uniform_pattern_frequencies(self):
        trials = 100_000
        counts = {p.values: 0 for p in all_permutations(3)}
        model = UniformPermuton()
        for seed in range(trials):
            counts[sample_permutation(model, 3, seed).values] += 1
        sigma = math.sqrt(trials * (1 / 6) * (5 / 6))
        for c in counts.values():
            assert abs(c - trials / 6) <= 3 * sigma

    def test_digit_swap_samplable(self):
        perm = sample_permutation(DigitSwapPermuton(), 50, 7)
        assert perm.order == 50
        assert avoids(Permutation((3, 1, 4, 2)), perm)

    def test_step_sampling_tracks_pattern_density(self):
        # mean sampled density approaches the base permutation's density
        # within the same-column collision allowance k(k-1)/(2n) plus 3 sigma
        rng = random.Random(5)
        for n in (50, 100):
            base = random_perm(rng, n)
            model = build_step(base)
            for pattern in (Permutation((2, 1)), Permutation((1, 2, 3))):
                k = pattern.order
                exact = count_occurrences(pattern, base).density
                vals = [float(count_occurrences(pattern, sample_permutation(model, n, s)).density)
                        for s in range(25)]
                mean = statistics.fmean(vals)
                sem = statistics.stdev(vals) / math.sqrt(len(vals))
                assert abs(mean - float(exact)) <= k * (k - 1) / (2 * n) + 3 * sem


class TestDigitSwap:
    def test_eval(self):
        assert digit_swap_eval("132") == "231"
        assert digit_swap_eval("030") == "030"
        assert digit_swap_eval("") == ""

    def test_invalid_digit(self):
        with pytest.raises(InputError):
            digit_swap_eval("14")

    def test_involution_small_depths(self):
        for d in range(1, 5):
            for digits in itertools.product("0123", repeat=d):
                s = "".join(digits)
                assert digit_swap_eval(digit_swap_eval(s)) == s

    def test_bijection_per_depth(self):
        for d in range(1, 6):
            images = {digit_swap_eval("".join(t)) for t in itertools.product("0123", repeat=d)}
            assert len(images) == 4**d


class TestLPDistance:
    def dirac(self, y) -> Fiber:
        return Fiber((Atom(F(y), F(1)),))

    def test_identical(self):
        t = transpose_tracks(build_zigzag(identity(3)))
        fiber = fiber_at(t, F(1, 3))
        assert lp_distance(fiber, fiber) == 0

    def test_diracs(self):
        assert lp_distance(self.dirac(F(1, 5)), self.dirac(F(1, 2))) == F(3, 10)
        assert lp_distance(self.dirac(0), self.dirac(1)) == 1

    def test_symmetry(self):
        a = Fiber((Atom(F(1, 10), F(1, 3)), Atom(F(7, 10), F(2, 3))))
        b = Fiber((Atom(F(2, 10), F(1, 2)), Atom(F(9, 10), F(1, 2))))
        assert lp_distance(a, b) == lp_distance(b, a)

    def test_mass_term_caps(self):
        # moving 1/3 of the mass across the square costs at most 1/3
        a = Fiber((Atom(F(0), F(1, 3)), Atom(F(1, 2), F(2, 3))))
        b = Fiber((Atom(F(1), F(1, 3)), Atom(F(1, 2), F(2, 3))))
        assert lp_distance(a, b) == F(1, 3)

    def test_non_probability_rejected(self):
        with pytest.raises(PreconditionError):
            lp_distance(Fiber((Atom(F(1, 2), F(1, 2)),)), self.dirac(0))

    def test_profile_identity_grid4(self):
        prof = fiber_lp_profile(identity_permuton(), 4, F(3, 10))
        for i in range(4):
            assert prof.matrix[i][i] == 0
        # atoms at 1/8, 3/8, 5/8, 7/8: adjacent distance 1/4 < 0.3 < 1/2
        assert prof.matrix[0][1] == F(1, 4)
        assert prof.parts == ((0, 1), (2, 3))

    def test_profile_transpose_shift_rate(self):
        t = transpose_tracks(build_zigzag(identity(3)))
        prof = fiber_lp_profile(t, 8, F(1, 10))
        for i in range(7):
            gap = prof.grid[i + 1] - prof.grid[i]
            assert prof.matrix[i][i + 1] == gap / 2


class TestSerialization:
    def test_round_trips(self):
        models = [
            build_zigzag(Permutation((2, 3, 1))),
            transpose_tracks(build_zigzag(identity(4))),
            build_step(Permutation((2, 1, 4, 3))),
            DigitSwapPermuton(),
            UniformPermuton(),
        ]
        for model in models:
            data = json.loads(json.dumps(model_to_dict(model)))
            assert model_from_dict(data) == model

    def test_rationals_as_p_over_q(self):
        data = model_to_dict(build_zigzag(identity(3)))
        assert data["pieces"][0]["x_hi"] == "1/2"
        assert data["pieces"][0]["tracks"][0]["a"] == "-2/1"

    def test_malformed_rejected(self):
        with pytest.raises(InputError):
            model_from_dict({"type": "nope"})
        with pytest.raises(InputError):
            model_from_dict({"type": "tracks", "pieces": [{"x_lo": "0/1"}]})
        with pytest.raises(InputError):
            model_from_dict([1, 2])
