"""Command-line surface: classify, census, quadruples, witness, serve.

Exit codes: 0 success (any verdict), 2 bad input, 3 I/O failure, 4 port
unavailable.  JSON output is canonical (sorted keys, compact separators)
and byte-identical to the result payloads served over HTTP.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .classify import census, classify, write_census_csv, write_census_json
from .fixtures import FIXTURES
from .patterns import Pattern, PatternParseError
from .quadruples import catalog_all
from .witness import family_report

EXIT_OK = 0
EXIT_BAD_INPUT = 2
EXIT_IO = 3
EXIT_PORT = 4


def canonical_dumps(payload) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _parse_pattern(text: str) -> Pattern:
    if text in FIXTURES:
        return FIXTURES[text]
    if text == "-":
        text = sys.stdin.read()
    return Pattern.parse(text)


def _fail(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _grid_with_marker(pattern: Pattern, point) -> str:
    """Grid rendering with the certificate point overlaid: X inside the
    pattern, o outside."""
    rows = []
    for beta in range(3, -1, -1):
        row = ""
        for alpha in range(4):
            inside = pattern.contains((alpha, beta))
            if point is not None and (alpha, beta) == tuple(point):
                row += "X" if inside else "o"
            else:
                row += "x" if inside else "."
        rows.append(row)
    return "\n".join(rows)


def cmd_classify(args) -> int:
    try:
        pattern = _parse_pattern(args.pattern)
        result = classify(pattern, spectral=args.spectral, delta=args.delta)
    except (PatternParseError, ValueError) as exc:
        return _fail(str(exc), EXIT_BAD_INPUT)
    if args.json:
        print(canonical_dumps(result.as_json()))
        return EXIT_OK
    marker = result.violating_point or result.quadruple_free
    print(_grid_with_marker(pattern, marker))
    print(f"mask      {result.pattern.hex()}   points {result.pattern.n_points}")
    print(f"verdict   {result.verdict}")
    if result.verdict == "NPT_ENTANGLED":
        print(f"violating point {result.violating_point} "
              f"(cross count exceeds half the pattern size)")
    elif result.verdict == "PPT_ENTANGLED":
        print(f"quadruple-free point {result.quadruple_free}")
        if result.delta_estimate is not None:
            print(f"single-point witness boost ~ {result.delta_estimate:.4f}")
    elif result.verdict == "SEPARABLE":
        cov = result.covering
        print(f"covering  multiplicity {cov.multiplicity}, "
              f"{cov.cardinality} quadruples (weights sum to 1):")
        cat = catalog_all()
        for i, w in zip(cov.quadruple_indices, cov.weights):
            pts = " ".join(str(p) for p in cat.all[i].points)
            print(f"  weight {str(w):>6s}  {pts}")
    flags = result.flags
    print(f"flags     ppt={flags['ppt']} ppt2={flags['ppt2_hit']} "
          f"ppt3={flags['ppt3_hit']} lp={flags['lp_feasible']}")
    if args.spectral:
        print(f"spectral  ppt={flags['spectral_ppt']} "
              f"min eigenvalue {flags['spectral_margin']:.6g}")
    return EXIT_OK


def cmd_census(args) -> int:
    report = census(orbits_only=args.orbits, jobs=args.jobs)
    totals = report.totals
    print("verdict totals over all 65,535 nonempty patterns")
    for verdict, count in totals.items():
        print(f"  {verdict:15s} {count}")
    agree, total = report.spectral_agreement
    print(f"spectral agreement {agree}/{total}")
    print(f"single-line criteria match quadruple-free points on all "
          f"{report.ppt_pattern_count} PPT patterns: {report.final_proposition_holds}")
    print(f"orbits {len(report.orbit_rows)}, elapsed {report.elapsed_seconds:.1f}s")
    if args.out:
        try:
            os.makedirs(args.out, exist_ok=True)
            json_path = os.path.join(args.out, "census.json")
            csv_path = os.path.join(args.out, "census.csv")
            write_census_json(report, json_path)
            write_census_csv(report, csv_path)
        except OSError as exc:
            return _fail(f"cannot write census files: {exc}", EXIT_IO)
        print(f"wrote {json_path} and {csv_path}")
    return EXIT_OK


def cmd_quadruples(args) -> int:
    cat = catalog_all()
    if args.point:
        try:
            pairs = Pattern.parse(args.point).points
            if len(pairs) != 1:
                raise PatternParseError("expected a single point")
        except (PatternParseError, ValueError) as exc:
            return _fail(str(exc), EXIT_BAD_INPUT)
        indices = cat.through[pairs[0]]
        print(f"{len(indices)} special quadruples through {pairs[0]}")
    else:
        indices = range(len(cat.all))
        print(f"{len(cat.all)} special quadruples")
    for i in indices:
        quad = cat.all[i]
        pts = " ".join(str(p) for p in quad.points)
        grid = Pattern(quad.mask).grid_rows()
        print(f"[{i:02d}] {pts}   {' / '.join(grid)}")
    return EXIT_OK


def cmd_witness(args) -> int:
    try:
        pattern = _parse_pattern(args.pattern)
        if pattern.mask == 0:
            raise ValueError("empty pattern")
        params: dict = {"t": args.t, "v12_sq": args.v12_sq}
        if args.point:
            params["point"] = list(Pattern.parse(args.point).points[0])
        payload = family_report(pattern, args.family, params)
    except (PatternParseError, ValueError) as exc:
        return _fail(str(exc), EXIT_BAD_INPUT)
    print(canonical_dumps(payload))
    return EXIT_OK


def cmd_serve(args) -> int:
    try:
        import uvicorn
    except ImportError:  # pragma: no cover
        return _fail("uvicorn is not installed", EXIT_IO)
    from .server import create_app
    app = create_app(census_path=args.census_file)
    try:
        uvicorn.run(app, host=args.bind, port=args.port, log_level="warning")
    except SystemExit as exc:  # uvicorn raises on bind failure
        return EXIT_PORT if exc.code else EXIT_OK
    except OSError:
        return _fail(f"port {args.port} unavailable", EXIT_PORT)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latticestates",
        description="classify 4x4 lattice patterns and certify the verdicts")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify one pattern")
    p.add_argument("pattern", help="grid rows (use / between rows), 0xMASK, "
                                   "(a,b) pairs, a fixture name, or - for stdin")
    p.add_argument("--spectral", action="store_true",
                   help="also run the eigenvalue oracle")
    p.add_argument("--delta", action="store_true",
                   help="attach the single-point witness estimate")
    p.add_argument("--json", action="store_true", help="emit canonical JSON")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("census", help="classify all 65,535 patterns")
    p.add_argument("--orbits", action="store_true",
                   help="classify canonical orbit representatives only")
    p.add_argument("--out", help="directory for census.json and census.csv")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("quadruples", help="list the special-quadruple catalog")
    p.add_argument("point", nargs="?", help="optional point (a,b)")
    p.set_defaults(func=cmd_quadruples)

    p = sub.add_parser("witness", help="evaluate a witness family")
    p.add_argument("pattern")
    p.add_argument("--family", choices=("delta", "gamma", "phiv"),
                   required=True)
    p.add_argument("--point", help="lattice point (a,b) for the delta family")
    p.add_argument("--t", type=float, default=0.01,
                   help="time parameter of the gamma family")
    p.add_argument("--v12-sq", dest="v12_sq", type=float, default=1.0,
                   help="|v12|^2 of the phiv family")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("serve", help="serve the JSON API over HTTP")
    p.add_argument("--port", type=int, default=8787)
    p.add_argument("--bind", default="127.0.0.1")
    p.add_argument("--census-file", default="census.json",
                   help="cached census JSON for /census/summary")
    p.set_defaults(func=cmd_serve)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
