"""Command line interface.

Subcommands:
  build    emit a unity product graph (or its complement) as DOT or JSON
  analyze  print the exact invariant report for one graph
  verify   sweep claims over ring families and report verdicts
  survey   one CSV row of invariants per ring in a family

Exit codes: 0 success (verify: no failing verdict), 1 verify found at
least one fail, 2 usage error, bad ring spec or unknown claim id,
3 ring has no unity element, 4 exhaustive search bound exceeded.

Output is deterministic: rerunning a command byte-identically reproduces
it.  Everything ends with a newline; CSV fields never contain commas.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import claims as claims_mod
from . import invariants as inv
from .claims import (
    FAIL,
    UnknownClaimError,
    builtin_claims,
    default_rings,
    lookup,
    render_csv,
    render_json,
    render_text,
    run_sweep,
)
from .graphs import (
    complement,
    decompose_matching_structure,
    export_dot,
    export_json,
    unity_product_graph,
)
from .invariants import full_report
from .rings import (
    DEFAULT_ORDER_CAP,
    FiniteRing,
    NoUnityError,
    OrderCapError,
    RingError,
    _split_top_level,
    boolean_ring,
    parse_ring_spec,
    units,
    zmod,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_NO_UNITY = 3
EXIT_BOUND = 4


class _CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code
        self.message = message


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _resolve_ring(spec: str, order_cap: int) -> FiniteRing:
    try:
        return parse_ring_spec(spec, order_cap=order_cap)
    except RingError as exc:
        # covers malformed specs, order cap violations and axiom failures
        raise _CliError(EXIT_USAGE, f"ring spec {spec!r}: {exc}") from None


def _ring_graph(ring: FiniteRing, which: str):
    try:
        group = units(ring)
    except NoUnityError:
        raise _CliError(
            EXIT_NO_UNITY, f"ring {ring.label} has no unity element"
        ) from None
    g = unity_product_graph(group)
    return complement(g) if which == "complement" else g


def cmd_build(args: argparse.Namespace) -> int:
    ring = _resolve_ring(args.ring, args.order_cap)
    g = _ring_graph(ring, args.graph)
    text = export_dot(g) if args.format == "dot" else export_json(g)
    _emit(text, args.out)
    return EXIT_OK


def cmd_analyze(
    args: argparse.Namespace,
    *,
    planarity_limit: int = inv.DEFAULT_PLANARITY_LIMIT,
    hamiltonian_limit: int = inv.DEFAULT_HAMILTONIAN_LIMIT,
) -> int:
    ring = _resolve_ring(args.ring, args.order_cap)
    g = _ring_graph(ring, args.graph)
    try:
        report = full_report(
            g, planarity_limit=planarity_limit, hamiltonian_limit=hamiltonian_limit
        )
    except inv.VertexBoundError as exc:
        raise _CliError(
            EXIT_BOUND,
            f"{exc.invariant} on ring {ring.label}: {exc.n} vertices exceeds "
            f"search bound {exc.bound}",
        ) from None
    text = report.to_text() if args.format == "text" else report.to_json()
    _emit(text, args.out)
    return EXIT_OK


def _selected_claims(claims_arg: str):
    if claims_arg == "all":
        return builtin_claims()
    selected = []
    for claim_id in _split_top_level(claims_arg):
        try:
            selected.append(lookup(claim_id))
        except UnknownClaimError:
            raise _CliError(EXIT_USAGE, f"unknown claim id {claim_id!r}") from None
    if not selected:
        raise _CliError(EXIT_USAGE, "no claim ids given")
    return tuple(selected)


def _include_specs(values) -> list[str]:
    specs: list[str] = []
    for value in values or ():
        specs.extend(s for s in _split_top_level(value) if s)
    return specs


def cmd_verify(
    args: argparse.Namespace,
    *,
    planarity_limit: int = inv.DEFAULT_PLANARITY_LIMIT,
    hamiltonian_limit: int = inv.DEFAULT_HAMILTONIAN_LIMIT,
) -> int:
    selected = _selected_claims(args.claims)
    try:
        rings = default_rings(
            zmod_max=args.zmod_max,
            order_cap=args.order_cap,
            include=_include_specs(args.include),
        )
    except RingError as exc:
        raise _CliError(EXIT_USAGE, f"bad ring spec: {exc}") from None
    verdicts = run_sweep(
        selected,
        rings,
        planarity_limit=planarity_limit,
        hamiltonian_limit=hamiltonian_limit,
    )
    renderer = {"text": render_text, "json": render_json, "csv": render_csv}[args.format]
    _emit(renderer(verdicts), args.out)
    failed = any(v.outcome == FAIL for v in verdicts)
    return EXIT_FAIL if failed else EXIT_OK


_SURVEY_COLUMNS = (
    "girth",
    "diameter",
    "radius",
    "domination_number",
    "chromatic_number",
    "clique_number",
    "planar",
    "hamiltonian",
)


def _survey_family(family: str, maximum: int, order_cap: int) -> list[FiniteRing]:
    try:
        if family == "zmod":
            return [zmod(n, order_cap=order_cap) for n in range(1, maximum + 1)]
        if family == "bool":
            return [boolean_ring(n, order_cap=order_cap) for n in range(1, maximum + 1)]
        # gf: every prime power up to the bound
        rings = []
        for q in range(2, maximum + 1):
            try:
                p, k = claims_mod._prime_power(q)
            except ValueError:
                continue
            rings.append(parse_ring_spec(f"gf:{p}^{k}", order_cap=order_cap))
        return rings
    except OrderCapError as exc:
        raise _CliError(EXIT_BOUND, f"survey bound violation: {exc}") from None


def _fmt_cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return inv.fmt_extended(value) if isinstance(value, float) else str(value)


def cmd_survey(
    args: argparse.Namespace,
    *,
    planarity_limit: int = inv.DEFAULT_PLANARITY_LIMIT,
    hamiltonian_limit: int = inv.DEFAULT_HAMILTONIAN_LIMIT,
) -> int:
    rings = _survey_family(args.family, args.max, args.order_cap)
    header = ["ring", "order", "units", "isolated", "pairs"]
    header += [f"upg_{c}" for c in _SURVEY_COLUMNS]
    header += [f"comp_{c}" for c in _SURVEY_COLUMNS]
    lines = [",".join(header)]
    for ring in rings:
        g = _ring_graph(ring, "upg")
        c = complement(g)
        deco = decompose_matching_structure(g)
        try:
            reports = [
                full_report(
                    h,
                    planarity_limit=planarity_limit,
                    hamiltonian_limit=hamiltonian_limit,
                )
                for h in (g, c)
            ]
        except inv.VertexBoundError as exc:
            raise _CliError(
                EXIT_BOUND,
                f"survey bound violation: {exc.invariant} on ring {ring.label}: "
                f"{exc.n} vertices exceeds search bound {exc.bound}",
            ) from None
        row = [ring.label, str(ring.order), str(g.n), str(deco.isolated), str(deco.pairs)]
        for report in reports:
            row.extend(_fmt_cell(getattr(report, name)) for name in _SURVEY_COLUMNS)
        lines.append(",".join(row))
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="upg",
        description="Unity product graphs of finite commutative rings: "
        "build graphs, compute exact invariants, verify claims.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--order-cap",
            type=int,
            default=DEFAULT_ORDER_CAP,
            help="largest ring order accepted (default %(default)s)",
        )
        p.add_argument("--out", help="write output to this file instead of stdout")

    p_build = sub.add_parser("build", help="emit a graph as DOT or JSON")
    p_build.add_argument("--ring", required=True, help="ring spec, e.g. zmod:16")
    p_build.add_argument("--graph", choices=("upg", "complement"), default="upg")
    p_build.add_argument("--format", choices=("dot", "json"), default="dot")
    common(p_build)
    p_build.set_defaults(func=cmd_build)

    p_analyze = sub.add_parser("analyze", help="print the invariant report")
    p_analyze.add_argument("--ring", required=True, help="ring spec, e.g. zmod:16")
    p_analyze.add_argument("--graph", choices=("upg", "complement"), default="upg")
    p_analyze.add_argument("--format", choices=("text", "json"), default="text")
    common(p_analyze)
    p_analyze.set_defaults(func=cmd_analyze)

    p_verify = sub.add_parser("verify", help="sweep claims over ring families")
    p_verify.add_argument(
        "--claims",
        default="all",
        help="comma separated claim ids, or 'all' (default)",
    )
    p_verify.add_argument(
        "--zmod-max",
        type=int,
        default=claims_mod.DEFAULT_ZMOD_MAX,
        help="sweep Z/n for n up to this bound (default %(default)s)",
    )
    p_verify.add_argument(
        "--include",
        action="append",
        default=[],
        metavar="SPECS",
        help="extra ring specs, comma separated; repeatable",
    )
    p_verify.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_survey = sub.add_parser("survey", help="per-ring invariant CSV for a family")
    p_survey.add_argument("--family", choices=("zmod", "gf", "bool"), required=True)
    p_survey.add_argument(
        "--max",
        type=int,
        required=True,
        help="zmod: largest modulus; gf: largest field order; bool: most factors",
    )
    p_survey.add_argument("--format", choices=("csv",), default="csv")
    common(p_survey)
    p_survey.set_defaults(func=cmd_survey)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _CliError as exc:
        print(f"error: {exc.message}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
