"""Command line interface.

Subcommands:

* ``generate``    write a named fixture as coloring JSON;
* ``analyze``     report homogeneous structure, critical pairs/cycles,
                  reconstructibility, and the minimal-reconstruction
                  number of a coloring file;
* ``verify``      run a named verification suite at a chosen scale;
* ``export-dot``  render a coloring file as Graphviz source.

Exit codes: 0 success / suite passed, 1 suite failed, 2 bad input or
usage.  Machine output is versioned JSON (schema_version); everything
printed to stdout is deterministic for fixed inputs, seeds, and scales.
The HOMREC_THREADS environment variable caps worker threads (0 = auto);
results do not depend on it.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .coloring import Coloring, EdgeSet, hom_signature, hom_sets
from .critical import find_critical_cycles, find_critical_pairs, witness_json
from .errors import HomrecError
from .fixtures import fixture_names, parse_fixture
from .reconstruct import SearchMode, in_R, r_value
from .structure import to_dot
from .suites import SUITES, run_suite

SCHEMA_VERSION = 1
EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT_ERROR = 2


def _dump(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _write(text: str, out: str | None) -> None:
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _load_coloring(path: str, member: str) -> Coloring:
    try:
        obj = json.loads(Path(path).read_text(encoding="utf-8"))
    except FileNotFoundError as exc:
        raise HomrecError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise HomrecError(f"{path} is not valid JSON: {exc}") from exc
    if isinstance(obj, dict) and {"phi", "psi"} <= set(obj):
        if member not in ("phi", "psi", "sum"):
            raise HomrecError(f"pair file member must be phi/psi/sum, got {member!r}")
        obj = obj[member]
    try:
        return Coloring.from_json(obj)
    except (HomrecError, ValueError, TypeError, KeyError) as exc:
        raise HomrecError(f"{path} is not a coloring file: {exc}") from exc


def cmd_generate(args: argparse.Namespace) -> int:
    fixture = parse_fixture(args.fixture)
    _write(_dump(fixture.payload("hex" if args.hex else "ones")), args.out)
    return EXIT_OK


def _analysis(phi: Coloring, mode: str, budget: int | None, max_n: int) -> dict:
    allow_n8 = max_n >= 8
    exhaustive_feasible = phi.n <= 7 or (phi.n == 8 and allow_n8)
    if mode == "auto":
        mode = "exhaustive" if exhaustive_feasible else "structural"
    search = SearchMode.EXHAUSTIVE if mode == "exhaustive" else SearchMode.STRUCTURAL_ONLY

    sig = hom_signature(phi)
    membership = in_R(phi, budget=budget, allow_n8=allow_n8)
    report = r_value(phi, search, allow_n8=allow_n8)
    return {
        "schema_version": SCHEMA_VERSION,
        "n": phi.n,
        "coloring": phi.to_json(),
        "hom": {
            "triples": sum(1 for k in sig.kinds if k),
            "maximal_sets": [
                {"vertices": list(h.vertices), "color": h.color} for h in hom_sets(phi)
            ],
        },
        "critical_pairs": [list(p) for p in find_critical_pairs(phi)],
        "critical_cycles": [witness_json(w) for w in (find_critical_cycles(phi) if phi.n >= 5 else [])],
        "membership": {
            "verdict": membership.verdict.value,
            "witness": (
                [list(p) for p in membership.witness.difference.members()]
                if membership.witness
                else None
            ),
        },
        "r_report": report.to_json(),
    }


def _analysis_lines(report: dict) -> list[str]:
    hom = report["hom"]
    rrep = report["r_report"]
    lines = [
        f"vertices            {report['n']}",
        f"homogeneous triples {hom['triples']}",
        "maximal hom sets    "
        + (
            "; ".join(
                f"{tuple(h['vertices'])} color {h['color']}" for h in hom["maximal_sets"]
            )
            or "none"
        ),
        f"critical pairs      {len(report['critical_pairs'])}"
        + (f"  {report['critical_pairs']}" if report["critical_pairs"] else ""),
        f"critical cycles     {len(report['critical_cycles'])}"
        + (
            "  "
            + "; ".join(
                f"{tuple(w['vertices'])} [{w['orientation']}]"
                for w in report["critical_cycles"]
            )
            if report["critical_cycles"]
            else ""
        ),
        f"membership          {report['membership']['verdict']}",
        f"r                   {_r_text(rrep)} (mode={rrep['mode']}, complete={rrep['complete']})",
        f"minimal witnesses   {len(rrep['witnesses'])}",
    ]
    return lines


def _r_text(rrep: dict) -> str:
    if rrep["r"] is not None:
        return str(rrep["r"])
    return "not applicable" if rrep["complete"] else "unknown"


def cmd_analyze(args: argparse.Namespace) -> int:
    phi = _load_coloring(args.path, args.member)
    report = _analysis(phi, args.mode, args.budget, args.max_n)
    if args.json:
        _write(_dump(report), args.out)
    else:
        _write("\n".join(_analysis_lines(report)) + "\n", args.out)
    return EXIT_OK


_SUITE_FLAGS = {
    "oracle": ("n_exhaustive", "samples", "seed"),
    "claws": ("n",),
    "parity": ("n", "max_m"),
    "partition-theorem": (),
    "r-sweep": ("n_exhaustive", "samples", "seed"),
    "connectivity": ("n_exhaustive", "samples", "seed"),
    "alpha": ("nmax",),
    "theorem63": ("samples", "seed"),
}


def cmd_verify(args: argparse.Namespace) -> int:
    kwargs = {}
    wanted = _SUITE_FLAGS[args.suite]
    if "n" in wanted and args.n is not None:
        kwargs["n"] = args.n
    if "n_exhaustive" in wanted and args.n is not None:
        kwargs["n_exhaustive"] = args.n
    if "samples" in wanted and args.samples is not None:
        kwargs["samples"] = args.samples
    if "seed" in wanted and args.seed is not None:
        kwargs["seed"] = args.seed
    if "nmax" in wanted and args.nmax is not None:
        kwargs["nmax"] = args.nmax
    if "max_m" in wanted and args.max_m is not None:
        kwargs["max_m"] = args.max_m
    result = run_suite(args.suite, **kwargs)
    if args.json:
        payload = {"schema_version": SCHEMA_VERSION, **result.to_json()}
        _write(_dump(payload), args.out)
    else:
        _write("\n".join(result.lines()) + "\n", args.out)
    return EXIT_OK if result.ok else EXIT_VERIFY_FAILED


def _parse_highlight(n: int, text: str) -> EdgeSet:
    pairs = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        bits = chunk.split("-")
        if len(bits) != 2:
            raise HomrecError(f"bad highlight pair {chunk!r}; use like 0-1,2-3")
        pairs.append((int(bits[0]), int(bits[1])))
    return EdgeSet.from_pairs(n, pairs)


def cmd_export_dot(args: argparse.Namespace) -> int:
    phi = _load_coloring(args.path, args.member)
    highlight = _parse_highlight(phi.n, args.highlight) if args.highlight else None
    _write(to_dot(phi, highlight), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="homrec",
        description="analyze and verify reconstruction of pair colorings "
        "from their homogeneous sets",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="write a named fixture as JSON")
    gen.add_argument("fixture", help="fixture id, one of: " + ", ".join(fixture_names()))
    gen.add_argument("--out", default=None, help="output path (default stdout)")
    gen.add_argument("--hex", action="store_true", help="hex bit-string form")
    gen.set_defaults(func=cmd_generate)

    ana = sub.add_parser("analyze", help="analyze a coloring file")
    ana.add_argument("path")
    ana.add_argument("--json", action="store_true", help="machine-readable output")
    ana.add_argument(
        "--mode",
        choices=("auto", "exhaustive", "structural"),
        default="auto",
        help="r-value search mode (auto: exhaustive when feasible)",
    )
    ana.add_argument("--budget", type=int, default=None, help="candidate cap for membership")
    ana.add_argument(
        "--max-n",
        type=int,
        default=7,
        help="exhaustive-search ceiling; 8 enables the 2^28 sweep",
    )
    ana.add_argument("--member", default="phi", help="member of a pair file (phi/psi/sum)")
    ana.add_argument("--out", default=None)
    ana.set_defaults(func=cmd_analyze)

    ver = sub.add_parser("verify", help="run a verification suite")
    ver.add_argument("suite", choices=sorted(SUITES))
    ver.add_argument("--n", type=int, default=None, help="exhaustive vertex count")
    ver.add_argument("--samples", type=int, default=None)
    ver.add_argument("--seed", type=int, default=None)
    ver.add_argument("--nmax", type=int, default=None, help="alpha truncation bound")
    ver.add_argument("--max-m", dest="max_m", type=int, default=None)
    ver.add_argument("--json", action="store_true")
    ver.add_argument("--out", default=None)
    ver.set_defaults(func=cmd_verify)

    dot = sub.add_parser("export-dot", help="render a coloring as Graphviz source")
    dot.add_argument("path")
    dot.add_argument("--highlight", default=None, help="bold edges, e.g. 0-1,1-2")
    dot.add_argument("--member", default="phi")
    dot.add_argument("--out", default=None)
    dot.set_defaults(func=cmd_export_dot)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except HomrecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
