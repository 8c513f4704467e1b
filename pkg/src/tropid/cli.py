"""Command-line interface: ``tropid <command> ...``.

Exit codes: 0 success (or identity holds), 1 identity fails (``check``
only), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import os
import sys

from . import __version__
from .enumeration import list_classes_2, list_classes_general, shortest_identity_search
from .identity import check_identity, random_morphism_test
from .minmax import class_interval, class_size
from .signature import utn_signature
from .words import format_content, parse_content, parse_word

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _threads(args) -> int:
    if getattr(args, "threads", None):
        return args.threads
    env = os.environ.get("TROPID_THREADS")
    if env:
        try:
            k = int(env)
        except ValueError:
            raise UsageError(f"TROPID_THREADS must be an integer, got {env!r}") from None
        if k < 1:
            raise UsageError("TROPID_THREADS must be positive")
        return k
    return os.cpu_count() or 1


def _words(args, *texts):
    try:
        m = args.alphabet
        if m is None:
            # the largest letter in any of the words fixes the alphabet
            m = max(parse_word(t).m for t in texts)
        return [parse_word(t, m) for t in texts]
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit_json(obj, schema):
    print(json.dumps({"schema": schema, **obj}, sort_keys=True))


# --- commands ------------------------------------------------------------------


def cmd_check(args) -> int:
    w, v = _words(args, args.w, args.v)
    holds = check_identity(w, v, args.n)
    report = {"w": str(w), "v": str(v), "n": args.n, "identity": holds}
    if args.trials:
        res = random_morphism_test(w, v, args.n, trials=args.trials, seed=args.seed)
        report["random_test"] = {"trials": args.trials, "seed": args.seed, "distinguished": res.distinguished}
    if args.json:
        _emit_json(report, "tropid.check/1")
    else:
        print(f"{w} {'~' if holds else '!~'}_{args.n} {v}: {'identity' if holds else 'not an identity'}")
        if args.trials:
            print(f"random morphisms ({args.trials} trials): {'distinguished' if report['random_test']['distinguished'] else 'no difference found'}")
    return EXIT_OK if holds else EXIT_FAIL


def cmd_signature(args) -> int:
    (w,) = _words(args, args.w)
    sig = utn_signature(w, args.n)
    if args.json:
        _emit_json({"word": str(w), **sig.to_dict()}, "tropid.signature/1")
        return EXIT_OK
    for d in sorted(sig.per_degree):
        ds = sig.per_degree[d]
        for u, poly in zip(ds.labels(), ds.entries):
            verts = " ".join("(" + ",".join(map(str, p)) + ")" for p in poly.vertices) or "empty"
            print(f"d={d} u={u}: {verts}")
    return EXIT_OK


def _binary(w):
    if w.m != 2:
        raise UsageError("this command needs a word over {a, b}")
    return w


def cmd_minmax(args) -> int:
    (w,) = _words(args, args.w)
    ci = class_interval(_binary(w))
    size = class_size(ci)
    if args.json:
        _emit_json({"word": str(w), "min": str(ci.min_word), "max": str(ci.max_word), "size": str(size)}, "tropid.minmax/1")
    else:
        print(f"min  {ci.min_word}\nmax  {ci.max_word}\nsize {size}")
    return EXIT_OK


def cmd_class(args) -> int:
    from .enumeration import equivalence_class

    (w,) = _words(args, args.w)
    members = sorted(equivalence_class(w, args.n), key=str)
    if args.json:
        _emit_json({"word": str(w), "n": args.n, "size": len(members), "members": [str(v) for v in members]}, "tropid.class/1")
    else:
        for v in members:
            print(v)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    try:
        c = parse_content(args.content)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rows = []
    if len(c) == 2 and args.n == 2:
        for k, ci in enumerate(list_classes_2(*c)):
            size = class_size(ci)
            if args.nontrivial and size < 2:
                continue
            rows.append({"class_id": k, "size": size, "min_word": str(ci.min_word), "max_word": str(ci.max_word)})
        fields = ("class_id", "size", "min_word", "max_word")
    else:
        table = list_classes_general(c, args.n)
        classes = sorted((sorted(str(w) for w in ws) for ws in table.classes()))
        for k, ws in enumerate(classes):
            if args.nontrivial and len(ws) < 2:
                continue
            rows.append({"class_id": k, "size": len(ws), "members": " ".join(ws)})
        fields = ("class_id", "size", "members")
    if args.format == "json":
        _emit_json({"content": format_content(c), "n": args.n, "classes": rows}, "tropid.enumerate/1")
    else:
        wr = csv.DictWriter(sys.stdout, fieldnames=fields, lineterminator="\n")
        wr.writeheader()
        wr.writerows(rows)
    return EXIT_OK


def cmd_shortest(args) -> int:
    def progress(la, lb, k):
        print(f"content ({la},{lb}): {k} non-singleton classes", file=sys.stderr, flush=True)

    recs = shortest_identity_search(
        args.length,
        args.n,
        canonical=args.canonical,
        threads=_threads(args),
        checkpoint=args.checkpoint,
        progress=progress,
    )
    if args.format == "json":
        _emit_json({"length": args.length, "n": args.n, "identities": [r.to_dict() for r in recs]}, "tropid.shortest/1")
    else:
        for r in recs:
            print(f"{r.w} {r.v}")
    return EXIT_OK


def cmd_stats(args) -> int:
    from . import stats

    seed = args.seed
    config = {k: v for k, v in vars(args).items() if k not in ("func",) and not callable(v)}
    if args.experiment == "isolated":
        if args.samples is None or args.samples < 1:
            raise UsageError("--samples must be a positive integer")
        try:
            c = parse_content(args.content)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        rows = [stats.isolated_fraction(c, args.n, args.samples, seed=seed, threads=_threads(args))]
        if args.exhaustive:
            if len(c) != 2 or args.n != 2:
                raise UsageError("--exhaustive supports two-letter contents with n=2")
            exact = stats.exact_isoterm_fraction(*c)
            rows.append(stats.StatRow("isoterm_exact", f"n=2;content={format_content(c)}", float(exact), 0.0, 0, None))
    elif args.experiment == "composition":
        if args.length is None:
            raise UsageError("--length is required")
        comp = stats.class_composition(args.length)
        if args.format == "json":
            _emit_json({"length": args.length, "rows": [vars(r) | {"class_ratio": r.class_ratio} for r in comp]}, "tropid.stats.composition/1")
        else:
            wr = csv.writer(sys.stdout, lineterminator="\n")
            wr.writerow(["la", "lb", "words", "classes", "isoterms", "twins", "larger", "class_ratio"])
            for r in comp:
                wr.writerow([r.la, r.lb, r.words, r.classes, r.isoterms, r.twins, r.larger, f"{r.class_ratio:.6f}"])
        _write_meta(args, config)
        return EXIT_OK
    elif args.experiment == "ratio":
        if args.length is None or args.length % 2:
            raise UsageError("--length must be an even integer")
        if args.samples is None or args.samples < 1:
            raise UsageError("--samples must be a positive integer")
        res = stats.neighbor_ratio_ut3(args.length, args.samples, seed=seed)
        if args.format == "json":
            _emit_json(
                {"length": res.length, "ratios": [str(r) for r in res.ratios], "skipped": res.skipped, "seed": seed},
                "tropid.stats.ratio/1",
            )
        else:
            wr = csv.writer(sys.stdout, lineterminator="\n")
            wr.writerow(["experiment", "param", "sample", "ratio"])
            for k, r in enumerate(res.ratios):
                wr.writerow(["ratio", f"length={res.length}", k, f"{float(r):.6f}"])
            print(f"skipped {res.skipped} samples with no UT_2-equivalent neighbour", file=sys.stderr)
        _write_meta(args, config)
        return EXIT_OK
    elif args.experiment == "largest":
        try:
            c = parse_content(args.content)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if len(c) != 2:
            raise UsageError("largest needs a two-letter content")
        ci = stats.largest_class(*c)
        _emit_json({"content": format_content(c), "min": str(ci.min_word), "max": str(ci.max_word), "size": str(class_size(ci))}, "tropid.stats.largest/1")
        return EXIT_OK
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown experiment {args.experiment}")

    if args.format == "json":
        _emit_json({"rows": [dict(zip(stats.CSV_COLUMNS, r.csv_row())) for r in rows]}, "tropid.stats/1")
    else:
        stats.write_csv(rows, sys.stdout)
    _write_meta(args, config)
    return EXIT_OK


def _write_meta(args, config):
    if args.meta:
        from .stats import metadata

        with open(args.meta, "w") as fh:
            json.dump(metadata(config), fh, sort_keys=True, indent=2)
            fh.write("\n")


def cmd_plot(args) -> int:
    from .plot import render_svg

    texts = [args.w] + ([args.v] if args.v else [])
    words = _words(args, *texts)
    try:
        svg = render_svg(words, shade=not args.no_shade, chain=args.chain)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.output == "-":
        sys.stdout.write(svg)
    else:
        with open(args.output, "w") as fh:
            fh.write(svg)
    return EXIT_OK


# --- parser --------------------------------------------------------------------


def _positive(text):
    try:
        k = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if k < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {k}")
    return k


def _degree(text):
    k = _positive(text)
    if k < 2:
        raise argparse.ArgumentTypeError("n must be at least 2")
    return k


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tropid", description="Identities of upper-triangular tropical matrix monoids.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.set_defaults(func=func)
        return sp

    def alphabet(sp):
        sp.add_argument("--alphabet", type=_positive, default=None, metavar="M", help="alphabet size (default: inferred)")

    def degree(sp, default=2):
        sp.add_argument("-n", "--n", dest="n", type=_degree, default=default, help="matrix size n (default %(default)s)")

    sp = add("check", cmd_check, "decide whether w ~_n v")
    sp.add_argument("w")
    sp.add_argument("v")
    degree(sp)
    alphabet(sp)
    sp.add_argument("--trials", type=_positive, default=None, help="also evaluate under random morphisms")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--json", action="store_true")

    sp = add("signature", cmd_signature, "print the UT_n signature of a word")
    sp.add_argument("w")
    degree(sp)
    alphabet(sp)
    sp.add_argument("--json", action="store_true")

    sp = add("minmax", cmd_minmax, "extremal words and size of a two-letter UT_2 class")
    sp.add_argument("w")
    alphabet(sp)
    sp.add_argument("--json", action="store_true")

    sp = add("class", cmd_class, "list the UT_n class of a word")
    sp.add_argument("w")
    degree(sp)
    alphabet(sp)
    sp.add_argument("--json", action="store_true")

    sp = add("enumerate", cmd_enumerate, "list all UT_n classes of a content")
    sp.add_argument("--content", required=True, help="comma-separated letter counts, e.g. 5,5")
    degree(sp)
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.add_argument("--nontrivial", action="store_true", help="only classes with two or more words")

    sp = add("shortest", cmd_shortest, "all UT_n identities of a given length (two letters)")
    sp.add_argument("--length", type=_positive, required=True)
    degree(sp, default=3)
    sp.add_argument("--canonical", action="store_true", help="one pair per letter-exchange/reversal orbit")
    sp.add_argument("--threads", type=_positive, default=None)
    sp.add_argument("--checkpoint", default=None, metavar="FILE", help="resumable state file")
    sp.add_argument("--format", choices=("text", "json"), default="text")

    sp = add("stats", cmd_stats, "sampling experiments")
    sp.add_argument("experiment", choices=("isolated", "composition", "ratio", "largest"))
    sp.add_argument("--content", default=None)
    sp.add_argument("--length", type=_positive, default=None)
    degree(sp)
    sp.add_argument("--samples", type=int, default=None)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--threads", type=_positive, default=None)
    sp.add_argument("--exhaustive", action="store_true", help="add the exact isoterm fraction (n=2)")
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.add_argument("--meta", default=None, metavar="FILE", help="write a JSON metadata sidecar")

    sp = add("plot", cmd_plot, "SVG of staircase paths and degree-1 polygons")
    sp.add_argument("w")
    sp.add_argument("v", nargs="?")
    alphabet(sp)
    sp.add_argument("-o", "--output", default="-")
    sp.add_argument("--no-shade", action="store_true")
    sp.add_argument("--chain", action="store_true", help="draw the boxes between vertex-chain points")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
    if args.command == "stats" and args.experiment in ("isolated", "largest") and not args.content:
        print("tropid: error: --content is required", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"tropid: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
