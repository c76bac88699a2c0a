"""Command line front end: enumerations, theorem checks, orbit reports.

Exit codes: 0 all requested checks pass, 1 a check fails, 2 usage error,
3 a state cap was exceeded.  All numbers are exact; averages print as
fractions.  Output is deterministic for a fixed seed and flag set.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import homomesy, posets, tableaux, words
from .errors import ExplosionGuardError, UnknownTheoremError
from .tableaux import Shape

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_CAP = 3


def parse_shape(spec: str) -> Shape:
    """Parse right:4,3,2,1 | half:5,3,1 | skew:4,3,2,1/1."""
    if ":" not in spec:
        raise ValueError(f"shape spec {spec!r} needs a mode prefix like 'right:'")
    mode, _, body = spec.partition(":")
    if mode == "skew":
        outer_part, _, inner_part = body.partition("/")
        outer = tuple(int(x) for x in outer_part.split(",") if x)
        inner = tuple(int(x) for x in inner_part.split(",") if x)
        return Shape.skew_right(outer, inner)
    parts = tuple(int(x) for x in body.split(",") if x)
    if mode == "right":
        return Shape.right(parts)
    if mode == "half":
        return Shape.half_right(parts)
    raise ValueError(f"unknown shape mode {mode!r}")


def parse_word(spec: str, rank: int, reduced: bool = False) -> words.Word:
    letters = tuple(int(x) for x in spec.split(","))
    if reduced:
        return words.make_reduced_word(letters, rank)
    return words.make_word(letters, rank)


def _fraction_str(value: Fraction) -> str:
    return str(value)


def _emit(payload: dict, fmt: str, csv_rows=None, table_lines=None) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    elif fmt == "csv":
        for row in csv_rows or []:
            print(",".join(str(x) for x in row))
    else:
        for line in table_lines or [json.dumps(payload)]:
            print(line)


def _serialise(obj) -> str:
    if isinstance(obj, words.Word):
        return words.word_to_string(obj)
    if isinstance(obj, tableaux.Tableau):
        return "|".join(" ".join(map(str, row)) for row in obj.row_values())
    if isinstance(obj, posets.LinearExtension):
        return " ".join(str(e) for e in obj.seq)
    return str(obj)


def cmd_enumerate(args) -> int:
    if args.shape:
        shape = parse_shape(args.shape)
        objects = tableaux.standard_tableaux(shape)
    elif args.class_of_word:
        if args.rank is None:
            print("--class-of-word needs --rank", file=sys.stderr)
            return EXIT_USAGE
        word = parse_word(args.class_of_word, args.rank)
        objects = words.commutation_class(word, args.cap)
    else:
        print("enumerate needs --shape or --class-of-word", file=sys.stderr)
        return EXIT_USAGE
    serialised = [_serialise(obj) for obj in objects]
    payload = {"objects": serialised, "count": len(objects)}
    _emit(
        payload,
        args.format,
        csv_rows=[("index", "object")] + list(enumerate(serialised)),
        table_lines=serialised + [f"count: {len(objects)}"],
    )
    return EXIT_PASS


def _verify_reiner(args) -> dict:
    red = words.all_reduced_words(words.Permutation.longest(args.n), args.cap)
    stats = words.braid_move_stats(red)
    return {
        "theorem": "reiner",
        "n": args.n,
        "words": len(red),
        "braid_moves": stats["total"],
        "pass": stats["total"] == len(red),
    }


def _verify_commutation_class(args) -> dict:
    cls = words.commutation_class(words.staircase_word(args.n), args.cap)
    stats = words.braid_move_stats(cls)
    return {
        "theorem": "commutation-class",
        "n": args.n,
        "class_size": len(cls),
        "braid_moves": stats["total"],
        "pass": stats["total"] == len(cls),
    }


def _verify_braid_hooks(args) -> dict:
    shape = parse_shape(args.shape)
    value = tableaux.expected_braid_hooks(shape)
    return {
        "theorem": "braid-hooks",
        "shape": args.shape,
        "expected_hooks": _fraction_str(value),
        "pass": value == 1,
    }


def _verify_half_right(args) -> dict:
    spec = args.shape if ":" in args.shape else f"half:{args.shape}"
    shape = parse_shape(spec)
    value = tableaux.expected_braid_hooks(shape)
    outer = shape.outer
    strong = len(outer) >= 2 and outer[0] >= outer[1] + 2 and outer[-1] == 1
    ok = value == Fraction(1, 2) if strong else value <= Fraction(1, 2)
    return {
        "theorem": "half-right",
        "shape": spec,
        "expected_hooks": _fraction_str(value),
        "strong_condition": strong,
        "pass": ok,
    }


def _verify_skew_balance(args) -> dict:
    shape = parse_shape(args.shape)
    report = tableaux.updown_crossing_balance(shape)
    return {
        "theorem": "skew-balance",
        "shape": args.shape,
        "tableaux": len(report["diffs"]),
        "pass": report["all_diffs_one"],
    }


def _verify_homomesy(args) -> dict:
    shape = parse_shape(args.shape)
    report = homomesy.homomesy_report(
        tableaux.standard_tableaux(shape),
        homomesy.tableau_statistic("braid-hooks"),
        args.group,
    )
    averages = sorted({str(o["average"]) for o in report["orbits"]})
    return {
        "theorem": "homomesy",
        "shape": args.shape,
        "group": args.group,
        "orbit_count": len(report["orbits"]),
        "averages": averages,
        "pass": averages == ["1"],
    }


def _verify_poset_edges(args) -> dict:
    import random

    if args.poset:
        with open(args.poset) as handle:
            poset = posets.poset_from_lines(handle.read())
        if args.ideal is None:
            return {"theorem": "poset-edges", "pass": False, "error": "--ideal required"}
        ideal = posets.parse_ideal(poset, args.ideal)
        report = posets.verify_edges(poset, ideal, args.cap)
        return {
            "theorem": "poset-edges",
            "lhs": report["lhs"],
            "rhs": report["rhs"],
            "per_orbit": [
                {"size": o["size"], "average": _fraction_str(o["average"])}
                for o in report["per_orbit"]
            ],
            "pass": report["ok"],
        }
    rng = random.Random(args.seed)
    checked = 0
    for _ in range(args.count):
        poset = posets.random_bounded_poset(rng, rng.randint(3, args.max_size))
        for ideal in posets.order_ideals(poset):
            if not ideal or len(ideal) == poset.size:
                continue
            checked += 1
            if not posets.verify_edges(poset, ideal, args.cap)["ok"]:
                return {
                    "theorem": "poset-edges",
                    "checked": checked,
                    "pass": False,
                }
    return {"theorem": "poset-edges", "posets": args.count, "checked": checked, "pass": True}


VERIFIERS = {
    "reiner": _verify_reiner,
    "commutation-class": _verify_commutation_class,
    "braid-hooks": _verify_braid_hooks,
    "half-right": _verify_half_right,
    "skew-balance": _verify_skew_balance,
    "homomesy": _verify_homomesy,
    "poset-edges": _verify_poset_edges,
}


NEEDS_SHAPE = {"braid-hooks", "half-right", "skew-balance", "homomesy"}


def cmd_verify(args) -> int:
    verifier = VERIFIERS.get(args.theorem)
    if verifier is None:
        raise UnknownTheoremError(
            f"unknown theorem {args.theorem!r}; choose from {sorted(VERIFIERS)}"
        )
    if args.theorem in NEEDS_SHAPE and not args.shape:
        print(f"verify {args.theorem} needs --shape", file=sys.stderr)
        return EXIT_USAGE
    result = verifier(args)
    _emit(
        result,
        args.format,
        csv_rows=[tuple(result.keys()), tuple(result.values())],
        table_lines=[f"{k}: {v}" for k, v in result.items()],
    )
    return EXIT_PASS if result["pass"] else EXIT_FAIL


def _orbit_report_payload(report: dict) -> dict:
    return {
        "mode": report["mode"],
        "statistic": report["statistic"],
        "orbits": [
            {
                "size": o["size"],
                "average": _fraction_str(o["average"]),
                "representative": _serialise(o["representative"]),
            }
            for o in report["orbits"]
        ],
        "homomesic": report["homomesic"],
    }


def _scan_chunk(task) -> dict | None:
    spec, start, stop, base_seed, mode = task
    shape = parse_shape(spec)
    return homomesy.find_gyration_anomaly(
        shape, max_seeds=stop, base_seed=base_seed, mode=mode, seed_start=start
    )


def cmd_orbits(args) -> int:
    if args.poset:
        with open(args.poset) as handle:
            poset = posets.poset_from_lines(handle.read())
        if args.ideal is None:
            print("--poset needs --ideal", file=sys.stderr)
            return EXIT_USAGE
        ideal = posets.parse_ideal(poset, args.ideal)
        carrier = posets.linear_extensions(poset, args.cap)
        statistic = lambda ext: len(posets.descents(ext, ideal))  # noqa: E731
        report = homomesy.homomesy_report(carrier, statistic, args.group, "descents")
    elif args.shape and args.sample:
        if not args.long_running and args.sample > 1000:
            print(
                "samples above 1000 need --long-running", file=sys.stderr
            )
            return EXIT_USAGE
        hit = _sampled_search(args)
        payload = {
            "mode": args.group,
            "statistic": args.stat,
            "sampled_seeds": args.sample,
            "found": hit is not None,
        }
        if hit is not None:
            payload["orbit"] = {
                "seed": hit["seed"],
                "size": hit["orbit_size"],
                "average": _fraction_str(hit["average"]),
                "representative": _serialise(hit["representative"]),
            }
        _emit(payload, args.format, csv_rows=[tuple(payload.keys()), tuple(payload.values())],
              table_lines=[f"{k}: {v}" for k, v in payload.items()])
        return EXIT_PASS if hit is not None else EXIT_FAIL
    elif args.shape:
        shape = parse_shape(args.shape)
        if shape.size >= 24 and not args.long_running:
            print(
                f"full enumeration on {shape.size} cells needs --long-running"
                " (or use --sample)",
                file=sys.stderr,
            )
            return EXIT_USAGE
        if args.long_running:
            print(f"enumerating all fillings of {shape.size} cells", file=sys.stderr)
        if args.stat == "braid-moves":
            carrier = homomesy.rw_class(shape)
            statistic = homomesy.word_statistic("braid-moves")
        else:
            carrier = tableaux.standard_tableaux(shape)
            statistic = homomesy.tableau_statistic("braid-hooks")
        report = homomesy.homomesy_report(carrier, statistic, args.group, args.stat)
    elif args.class_of_word:
        if args.rank is None:
            print("--class-of-word needs --rank", file=sys.stderr)
            return EXIT_USAGE
        word = parse_word(args.class_of_word, args.rank)
        carrier = words.commutation_class(word, args.cap)
        report = homomesy.homomesy_report(
            carrier, homomesy.word_statistic("braid-moves"), args.group, "braid-moves"
        )
    else:
        print("orbits needs --shape, --class-of-word, or --poset", file=sys.stderr)
        return EXIT_USAGE
    payload = _orbit_report_payload(report)
    csv_rows = [("orbit", "size", "average", "representative")] + [
        (i, o["size"], o["average"], o["representative"])
        for i, o in enumerate(payload["orbits"])
    ]
    table_lines = [
        f"orbit {i}: size {o['size']}, average {o['average']}"
        for i, o in enumerate(payload["orbits"])
    ] + [f"homomesic: {payload['homomesic']}"]
    _emit(payload, args.format, csv_rows=csv_rows, table_lines=table_lines)
    all_one = all(o["average"] == "1" for o in payload["orbits"])
    return EXIT_PASS if all_one else EXIT_FAIL


def _sampled_search(args):
    if args.threads > 1:
        from multiprocessing import Pool

        chunk = (args.sample + args.threads - 1) // args.threads
        tasks = [
            (args.shape, start, min(start + chunk, args.sample), args.seed, args.group)
            for start in range(0, args.sample, chunk)
        ]
        with Pool(args.threads) as pool:
            hits = [h for h in pool.map(_scan_chunk, tasks) if h is not None]
        return min(hits, key=lambda h: h["seed"]) if hits else None
    shape = parse_shape(args.shape)
    progress = sys.stderr if args.long_running else None
    if progress:
        print(f"scanning up to {args.sample} seeds", file=progress)
    return homomesy.find_gyration_anomaly(
        shape, max_seeds=args.sample, base_seed=args.seed, mode=args.group
    )


def cmd_window(args) -> int:
    word = parse_word(args.word, args.rank)
    table = homomesy.window_table(word)
    if args.format == "json":
        payload = {
            "word": words.word_to_string(word),
            "rows": [
                {"i": i, "word": words.word_to_string(w), "a": a, "c": c, "diff": c - a}
                for i, w, a, c in table.rows
            ],
        }
        print(json.dumps(payload, indent=2))
    else:
        print(table.to_text())
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidhooks",
        description="Exact enumeration and theorem checks for reduced words, "
        "justified tableaux, and orbit statistics.",
    )
    parser.add_argument(
        "--cap",
        type=int,
        default=None,
        help="state cap for enumerations (default: BRAIDHOOKS_CAP or 10^8)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_enum = sub.add_parser("enumerate", help="list tableaux or a commutation class")
    p_enum.add_argument("--shape", help="right:4,3,2,1 | half:5,3,1 | skew:4,3,2,1/1")
    p_enum.add_argument("--class-of-word", help="comma-separated letters")
    p_enum.add_argument("--rank", type=int)
    p_enum.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p_enum.set_defaults(func=cmd_enumerate)

    p_verify = sub.add_parser("verify", help="run a theorem verification")
    p_verify.add_argument("theorem", help="|".join(sorted(VERIFIERS)))
    p_verify.add_argument("--n", type=int, default=4)
    p_verify.add_argument("--shape")
    p_verify.add_argument("--group", choices=homomesy.MODES, default="dihedral")
    p_verify.add_argument("--poset", help="file of 'a < b' cover lines")
    p_verify.add_argument("--ideal", help="comma-separated element names")
    p_verify.add_argument("--count", type=int, default=50, help="random posets to draw")
    p_verify.add_argument("--max-size", type=int, default=7)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--format", choices=("table", "json", "csv"), default="json")
    p_verify.set_defaults(func=cmd_verify)

    p_orbits = sub.add_parser("orbits", help="orbit decomposition and averages")
    p_orbits.add_argument("--shape")
    p_orbits.add_argument("--class-of-word")
    p_orbits.add_argument("--rank", type=int)
    p_orbits.add_argument("--poset")
    p_orbits.add_argument("--ideal")
    p_orbits.add_argument("--group", choices=homomesy.MODES, default="dihedral")
    p_orbits.add_argument(
        "--stat", choices=("braid-hooks", "braid-moves", "descents"), default="braid-hooks"
    )
    p_orbits.add_argument("--sample", type=int, help="sampled orbit search (gyration)")
    p_orbits.add_argument("--seed", type=int, default=0)
    p_orbits.add_argument("--threads", type=int, default=1)
    p_orbits.add_argument("--long-running", action="store_true")
    p_orbits.add_argument("--format", choices=("table", "json", "csv"), default="json")
    p_orbits.set_defaults(func=cmd_orbits)

    p_window = sub.add_parser("window", help="moving-window table of a word")
    p_window.add_argument("--word", required=True)
    p_window.add_argument("--rank", type=int, required=True)
    p_window.add_argument("--format", choices=("table", "json"), default="table")
    p_window.set_defaults(func=cmd_window)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    saved_cap = os.environ.get("BRAIDHOOKS_CAP")
    if args.cap is not None:
        os.environ["BRAIDHOOKS_CAP"] = str(args.cap)
    try:
        return args.func(args)
    except ExplosionGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        if args.cap is not None:
            if saved_cap is None:
                os.environ.pop("BRAIDHOOKS_CAP", None)
            else:
                os.environ["BRAIDHOOKS_CAP"] = saved_cap


if __name__ == "__main__":
    sys.exit(main())
