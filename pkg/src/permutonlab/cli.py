"""Command-line surface.

Exit codes: 0 success, 1 semantic negative (witness found / pattern present /
check failed), 2 input error, 3 precondition error. Every randomized
subcommand takes an explicit seed (default 0, never time-based); identical
invocations produce byte-identical output.
"""
from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import sys
from fractions import Fraction
from pathlib import Path

from .analysis import (
    certificate_lines,
    certify_avoidance,
    cut_distance_bruteforce,
    density_monte_carlo,
    rect_distance_interval,
    sw_generate,
)
from .errors import InputError, PreconditionError
from .models import (
    Atom,
    DigitSwapPermuton,
    Fiber,
    StepPermuton,
    TrackPermuton,
    UniformPermuton,
    build_step,
    build_zigzag,
    digit_swap_eval,
    fiber_lp_profile,
    fraction_from_str,
    fraction_to_str,
    identity_permuton,
    load_model,
    lp_distance,
    model_to_dict,
    molecule_profile,
    sample_permutation,
    transpose_tracks,
    validate_marginals,
    _swap_prefix_int,
)
from .perms import (
    Permutation,
    avoids,
    count_occurrences,
    format_permutation,
    parse_pattern,
    parse_permutation,
    pattern_of_values,
)
from .removal import PerturbationSpec, removal_experiment, resnap

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_PRECONDITION = 3


def _emit(text: str) -> None:
    sys.stdout.write(text + "\n")


def _emit_json(obj) -> None:
    _emit(json.dumps(obj, sort_keys=True))


def _read_perm(path: str) -> Permutation:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    return parse_permutation(text)


def _load_fiber(path: str) -> Fiber:
    try:
        data = json.loads(Path(path).read_text())
        atoms = tuple(Atom(fraction_from_str(a["y"]), fraction_from_str(a["w"])) for a in data["atoms"])
    except (OSError, json.JSONDecodeError, KeyError, TypeError) as exc:
        raise InputError(f"cannot read fiber file {path}: {exc}") from None
    return Fiber(atoms)


# ---------------------------------------------------------------------------
# subcommands

def cmd_count(args) -> int:
    pattern = parse_pattern(args.pattern)
    perm = _read_perm(args.perm)
    res = count_occurrences(pattern, perm)
    if args.format == "json":
        _emit_json({"occurrences": res.occurrences, "total_subsets": res.total_subsets,
                    "density": fraction_to_str(res.density)})
    else:
        _emit(f"{res.occurrences} of {res.total_subsets} subsets (density {fraction_to_str(res.density)})")
    return EXIT_OK


def cmd_avoid(args) -> int:
    pattern = parse_pattern(args.pattern)
    perm = _read_perm(args.perm)
    verdict = avoids(pattern, perm)
    if args.format == "json":
        _emit_json({"avoids": verdict})
    else:
        _emit("true" if verdict else "false")
    return EXIT_OK if verdict else EXIT_NEGATIVE


def cmd_density(args) -> int:
    pattern = parse_pattern(args.pattern)
    if (args.perm is None) == (args.model is None):
        raise InputError("exactly one of --perm/--model is required")
    if args.perm is not None:
        res = count_occurrences(pattern, _read_perm(args.perm))
        if args.format == "json":
            _emit_json({"density": fraction_to_str(res.density), "occurrences": res.occurrences,
                        "total_subsets": res.total_subsets})
        else:
            _emit(fraction_to_str(res.density))
        return EXIT_OK
    model = load_model(args.model)
    est = density_monte_carlo(pattern, model, args.samples, args.seed)
    _emit_json({"estimate": est.estimate, "sample_count": est.sample_count,
                "ci_half_width": est.ci_half_width, "seed": est.seed, "hits": est.hits})
    return EXIT_OK


def cmd_sample(args) -> int:
    model = load_model(args.model)
    perm = sample_permutation(model, args.n, args.seed)
    if args.format == "json":
        _emit_json({"perm": list(perm.values), "seed": args.seed})
    else:
        _emit(format_permutation(perm))
    return EXIT_OK


def cmd_certify(args) -> int:
    pattern = parse_pattern(args.pattern)
    model = load_model(args.model)
    if not isinstance(model, TrackPermuton):
        raise InputError("certification needs a model of type 'tracks'")
    cert = certify_avoidance(pattern, model)
    if args.format == "json":
        _emit_json({
            "certified": cert.certified,
            "pattern": list(pattern.values),
            "model": cert.model_id,
            "assignments": [
                {"slots": [list(s) for s in res.slots], "feasible": res.feasible,
                 "witness_x": [fraction_to_str(x) for x in res.witness_x] if res.witness_x else None,
                 "eliminated": res.generated}
                for res in cert.assignments
            ],
        })
    else:
        for line in certificate_lines(cert):
            _emit(line)
    return EXIT_OK if cert.certified else EXIT_NEGATIVE


def cmd_distance(args) -> int:
    if args.perm_a is not None and args.perm_b is not None:
        mu = build_step(_read_perm(args.perm_a))
        nu = build_step(_read_perm(args.perm_b))
    elif args.model_a is not None and args.model_b is not None:
        mu, nu = load_model(args.model_a), load_model(args.model_b)
    else:
        raise InputError("need --perm-a/--perm-b or --model-a/--model-b")
    if args.brute:
        if not (isinstance(mu, StepPermuton) and isinstance(nu, StepPermuton)):
            raise InputError("--brute needs two step permutons")
        res = cut_distance_bruteforce(mu, nu)
    else:
        res = rect_distance_interval(mu, nu)
    if args.format == "json":
        _emit_json({"value": fraction_to_str(res.value), "kind": res.kind,
                    "s_witness": [[fraction_to_str(a), fraction_to_str(b)] for a, b in res.s_witness],
                    "t_witness": [[fraction_to_str(a), fraction_to_str(b)] for a, b in res.t_witness]})
    else:
        _emit(res.describe())
    return EXIT_OK


def cmd_lp(args) -> int:
    if args.fiber_a is not None and args.fiber_b is not None:
        d = lp_distance(_load_fiber(args.fiber_a), _load_fiber(args.fiber_b))
        if args.format == "json":
            _emit_json({"lp_distance": fraction_to_str(d)})
        else:
            _emit(fraction_to_str(d))
        return EXIT_OK
    if args.model is None:
        raise InputError("need --model with --grid/--delta, or --fiber-a/--fiber-b")
    model = load_model(args.model)
    if not isinstance(model, TrackPermuton):
        raise InputError("LP profile needs a model of type 'tracks'")
    profile = fiber_lp_profile(model, args.grid, fraction_from_str(args.delta))
    if args.format == "json":
        _emit_json({
            "grid": [fraction_to_str(x) for x in profile.grid],
            "matrix": [[fraction_to_str(v) for v in row] for row in profile.matrix],
            "delta": fraction_to_str(profile.delta),
            "parts": [list(p) for p in profile.parts],
        })
    else:
        for i, row in enumerate(profile.matrix):
            _emit(f"x={fraction_to_str(profile.grid[i])}: " + " ".join(fraction_to_str(v) for v in row))
        _emit("parts: " + " | ".join(",".join(str(i) for i in part) for part in profile.parts))
    return EXIT_OK


def cmd_swbound(args) -> int:
    model = load_model(args.model)
    if not isinstance(model, TrackPermuton):
        raise InputError("swbound needs a model of type 'tracks'")
    pattern = parse_pattern(args.pattern) if args.pattern else None
    rep = sw_generate(model, args.n, mode=args.mode, pattern=pattern, seed=args.seed, trials=args.trials)
    if args.format == "json":
        _emit_json({"n": rep.n, "mode": rep.mode, "distinct_count": rep.distinct_count,
                    "per_choice_total": rep.per_choice_total, "nth_root": rep.nth_root,
                    "all_avoiding": rep.all_avoiding, "discarded": rep.discarded})
    else:
        _emit(f"distinct={rep.distinct_count} total={rep.per_choice_total} "
              f"nth_root={rep.nth_root:.6f} all_avoiding={rep.all_avoiding} discarded={rep.discarded}")
    return EXIT_OK


def cmd_digitswap_check(args) -> int:
    if args.digits is not None:
        _emit(digit_swap_eval(args.digits))
        return EXIT_OK
    if args.check is None:
        raise InputError("need --digits or --check")
    depth = args.depth
    if args.check == "involution":
        ok = all(digit_swap_eval(digit_swap_eval(s)) == s
                 for s in ("".join(c) for c in itertools.product("0123", repeat=depth)))
        label = f"involution depth={depth}"
    elif args.check == "quotients":
        allowed = {Fraction(-2), Fraction(-1), Fraction(-1, 2), Fraction(1, 2), Fraction(1), Fraction(2)}
        ok = True
        for n in range(1, depth + 1):
            q = 4**n
            for cell in range(q):
                d = cell & 3
                for i in (-3, -2, -1, 1, 2, 3):
                    if not 0 <= d + i <= 3:
                        continue
                    quot = Fraction(_swap_prefix_int(cell, n) - _swap_prefix_int(cell + i, n), i)
                    if quot not in allowed:
                        ok = False
        label = f"quotients depth<={depth}"
    elif args.check == "patterns":
        q = 4**depth
        images = [_swap_prefix_int(c, depth) for c in range(q)]
        ok = True
        for quad in itertools.combinations(range(q), 4):
            f1, f2, f3, f4 = (images[c] for c in quad)
            if f2 < f4 < f1 < f3:
                ok = False
                break
        label = f"patterns(3142-free) depth={depth}"
    else:
        raise InputError(f"unknown check {args.check!r}")
    _emit(("PASS " if ok else "FAIL ") + label)
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_molecules(args) -> int:
    model = load_model(args.model)
    profile = molecule_profile(model, args.direction)
    if args.format == "json":
        _emit_json({
            "direction": profile.direction,
            "max_atoms": profile.max_atoms,
            "histogram": {str(k): fraction_to_str(v) for k, v in sorted(profile.histogram.items())},
            "crossings": [[fraction_to_str(x), c] for x, c in profile.crossings],
        })
    else:
        hist = " ".join(f"{k}:{fraction_to_str(v)}" for k, v in sorted(profile.histogram.items()))
        _emit(f"direction={profile.direction} max_atoms={profile.max_atoms} histogram {hist}")
        if profile.crossings:
            _emit("crossings " + " ".join(f"{fraction_to_str(x)}->{c}" for x, c in profile.crossings))
    return EXIT_OK


def cmd_marginals(args) -> int:
    model = load_model(args.model)
    if not isinstance(model, TrackPermuton):
        raise InputError("marginal validation needs a model of type 'tracks'")
    rep = validate_marginals(model)
    if args.format == "json":
        _emit_json({"x_ok": rep.x_ok, "y_ok": rep.y_ok,
                    "max_deviation": fraction_to_str(rep.max_deviation), "note": rep.note})
    else:
        _emit(f"x_ok={str(rep.x_ok).lower()} y_ok={str(rep.y_ok).lower()} "
              f"max_deviation={fraction_to_str(rep.max_deviation)}"
              + (f" note={rep.note}" if rep.note else ""))
    return EXIT_OK if rep.x_ok and rep.y_ok else EXIT_NEGATIVE


def cmd_removal(args) -> int:
    pattern = parse_pattern(args.pattern)
    model = load_model(args.model)
    if args.perm is not None:
        perm = _read_perm(args.perm)
        report = resnap(perm, model, pattern=pattern, x_mode=args.x_mode, seed=args.seed)
        if args.format == "json":
            _emit_json(report.to_dict())
        else:
            _emit(format_permutation(report.output))
            _emit(f"cost={report.cost} normalized={fraction_to_str(report.normalized_cost)} "
                  f"verified={report.avoidance_verified} ties={report.tie_events}")
        return EXIT_OK
    if not isinstance(model, TrackPermuton):
        raise InputError("the removal experiment needs a model of type 'tracks'")
    try:
        rows = removal_experiment(pattern, model, args.n, [Fraction(r) for r in args.rho],
                                  range(args.seeds))
    except PreconditionError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_NEGATIVE
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "rho", "seed", "density", "cost", "normalized_cost", "d_interval",
                     "avoidance_verified"])
    for row in rows:
        writer.writerow([
            row.n, fraction_to_str(row.rho), row.seed, fraction_to_str(row.density), row.cost,
            fraction_to_str(row.normalized_cost), fraction_to_str(row.d_interval),
            str(row.avoidance_verified).lower(),
        ])
    if args.out:
        Path(args.out).write_text(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())
    return EXIT_OK


def cmd_build(args) -> int:
    if args.zigzag:
        model = build_zigzag(parse_pattern(args.zigzag))
    elif args.step:
        model = build_step(parse_pattern(args.step))
    elif args.identity:
        model = identity_permuton()
    elif args.uniform:
        model = UniformPermuton()
    elif args.digit_swap:
        model = DigitSwapPermuton()
    else:
        raise InputError("choose one of --zigzag/--step/--identity/--uniform/--digit-swap")
    if args.transpose:
        if not isinstance(model, TrackPermuton):
            raise InputError("--transpose applies to track models only")
        model = transpose_tracks(model)
    text = json.dumps(model_to_dict(model))
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        _emit(text)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="permutonlab",
                                     description="pattern densities, permuton models, certification, removal")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(func=func)
        p.add_argument("--format", choices=("text", "json"), default="text")
        return p

    p = add("count", cmd_count, help="exact pattern occurrences in a permutation")
    p.add_argument("--pattern", required=True)
    p.add_argument("--perm", required=True)

    p = add("avoid", cmd_avoid, help="does the permutation avoid the pattern (exit 1 if not)")
    p.add_argument("--pattern", required=True)
    p.add_argument("--perm", required=True)

    p = add("density", cmd_density, help="exact density (--perm) or Monte Carlo estimate (--model)")
    p.add_argument("--pattern", required=True)
    p.add_argument("--perm")
    p.add_argument("--model")
    p.add_argument("--samples", type=int, default=100000)
    p.add_argument("--seed", type=int, default=0)

    p = add("sample", cmd_sample, help="sample a permutation from a model")
    p.add_argument("--model", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)

    p = add("certify", cmd_certify, help="exact avoidance certificate for a track model")
    p.add_argument("--pattern", required=True)
    p.add_argument("--model", required=True)

    p = add("distance", cmd_distance, help="rectangular distance (interval grid or --brute cell subsets)")
    p.add_argument("--perm-a")
    p.add_argument("--perm-b")
    p.add_argument("--model-a")
    p.add_argument("--model-b")
    p.add_argument("--brute", action="store_true")

    p = add("lp", cmd_lp, help="Levy-Prokhorov distance of fibers, or grid profile of a model")
    p.add_argument("--fiber-a")
    p.add_argument("--fiber-b")
    p.add_argument("--model")
    p.add_argument("--grid", type=int, default=8)
    p.add_argument("--delta", default="1/10")

    p = add("swbound", cmd_swbound, help="distinct permutations from fiber atom choices")
    p.add_argument("--model", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--pattern")
    p.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    p.add_argument("--trials", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)

    p = add("digitswap-check", cmd_digitswap_check, help="evaluate or verify the base-4 digit-swap map")
    p.add_argument("--digits")
    p.add_argument("--check", choices=("involution", "quotients", "patterns"))
    p.add_argument("--depth", type=int, default=3)

    p = add("molecules", cmd_molecules, help="atoms-per-fiber profile of a model")
    p.add_argument("--model", required=True)
    p.add_argument("--direction", choices=("vertical", "horizontal"), default="vertical")

    p = add("marginals", cmd_marginals, help="verify uniform marginals of a track model")
    p.add_argument("--model", required=True)

    p = add("removal", cmd_removal, help="single resnap (--perm) or the removal experiment CSV")
    p.add_argument("--pattern", required=True)
    p.add_argument("--model", required=True)
    p.add_argument("--perm")
    p.add_argument("--x-mode", choices=("midpoint", "random"), default="midpoint")
    p.add_argument("--n", type=int, nargs="+", default=[100])
    p.add_argument("--rho", nargs="+", default=["0.1"])
    p.add_argument("--seeds", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")

    p = add("build", cmd_build, help="write a model JSON file")
    p.add_argument("--zigzag")
    p.add_argument("--step")
    p.add_argument("--identity", action="store_true")
    p.add_argument("--uniform", action="store_true")
    p.add_argument("--digit-swap", action="store_true")
    p.add_argument("--transpose", action="store_true")
    p.add_argument("-o", "--out")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except PreconditionError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
