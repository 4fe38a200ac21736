"""
Command-line interface: tropgon <verb> [options]

Exit codes: 0 success, 1 a theorem-level check failed, 2 bad usage or input.
"""
import argparse
import logging
import sys
from typing import Callable, Dict, List, Optional, Tuple

from .config import (
    APP_NAME,
    APP_VERSION,
    DEFAULT_JOBS,
    DEFAULT_MAX_GENUS,
    GONALITY_VERTEX_CAP,
    TABLE_GENERA,
)
from .enumeration.corpus import table_row
from .errors import CapExceededError, FalsificationError, InputFormatError, PreconditionError
from .geometry.invariants import polygon_invariants
from .geometry.polygon import LatticePolygon, canonical_form, relax
from .graphs.certificate import gonality_certificate
from .graphs.divisors import gonality_witness
from .graphs.multigraph import MultiGraph
from .graphs.scrambles import Scramble, scramble_order
from .moduli.dimension import check_dim_bound
from .triangulation.beehive import beehive_lift, build_beehive, is_beehive
from .triangulation.dual import dual_graph, skeleton, to_dot
from .triangulation.subdivision import Triangulation
from .utils.corpus_cache import CorpusCache
from .utils.helpers import dump_json, read_json_input
from .verify import CRITERIA, Verifier

logger = logging.getLogger(__name__)

Result = Tuple[object, str]


def _polygon(args) -> LatticePolygon:
    if not args.polygon:
        raise InputFormatError("--polygon is required")
    return LatticePolygon.from_dict(read_json_input(args.polygon), args.polygon)


def _triangulation(args, P: LatticePolygon) -> Triangulation:
    if getattr(args, "triangulation", None):
        return Triangulation.from_dict(read_json_input(args.triangulation), args.triangulation)
    return build_beehive(P)


def cmd_analyze(args) -> Result:
    P = _polygon(args)
    inv = polygon_invariants(P)
    payload = {"polygon": P, "canonical_form": canonical_form(P), "invariants": inv}
    lines = [f"polygon:          {P}", f"canonical form:   {canonical_form(P)}"]
    lines += [f"{key + ':':<18}{value}" for key, value in inv.to_dict().items()]
    return payload, "\n".join(lines)


def cmd_dim(args) -> Result:
    P = _polygon(args)
    report = check_dim_bound(P)
    lines = [f"dim(M_P) = {report.dim} = {report.genus} + {report.boundary} - 3 - {report.columns}",
             f"U({report.genus}, {report.egon}) = {report.upper_bound}"]
    lines += report.witnesses
    return report, "\n".join(lines)


def cmd_relax(args) -> Result:
    P = _polygon(args)
    R = relax(P)
    if R is None:
        return {"relaxed": None}, "relaxation is not a lattice polygon"
    return {"relaxed": R}, str(R)


def cmd_enumerate(args) -> Result:
    cache = CorpusCache(args.output, max_genus=args.max_genus)
    corpus = cache.get(args.genus, args.jobs)
    lines = [f"genus {corpus.genus}: {len(corpus)} maximal non-hyperelliptic polygons"]
    for P, dim, egon in zip(corpus.polygons, corpus.dims, corpus.egons):
        lines.append(f"  {P}  egon={egon}  dim={dim}")
    return corpus, "\n".join(lines)


def cmd_table(args) -> Result:
    genera = TABLE_GENERA if args.all else [args.genus]
    if genera == [None]:
        raise InputFormatError("table needs --genus or --all")
    cache = CorpusCache(max_genus=args.max_genus)
    rows = {g: table_row(g, cache.get(g, args.jobs)) for g in genera}
    lines = [f"g={g}: " + ", ".join(f"d={d}: {v}" for d, v in sorted(row.items())) for g, row in rows.items()]
    payload = rows[genera[0]] if len(genera) == 1 else rows
    return payload, "\n".join(lines)


def cmd_beehive(args) -> Result:
    P = _polygon(args)
    t, heights = beehive_lift(P)
    payload = {"triangulation": t, "heights": list(heights.values), "beehive": is_beehive(t, P)}
    text = f"{len(t.cells)} triangles on {len(t.point_set)} points, beehive: {payload['beehive']}, regular: True"
    return payload, text


def cmd_skeleton(args) -> Result:
    P = _polygon(args)
    S = skeleton(dual_graph(_triangulation(args, P)))
    if args.format == "dot":
        return S, to_dot(S)
    text = f"{S.n} vertices, {len(S.edges)} edges, Betti number {S.betti_number}"
    return S, text


def cmd_gonality(args) -> Result:
    if not args.graph:
        raise InputFormatError("--graph is required")
    G = MultiGraph.from_dict(read_json_input(args.graph), args.graph)
    payload: Dict[str, object] = {}
    lines = []
    if args.scramble:
        s = Scramble.from_dict(read_json_input(args.scramble), args.scramble)
        payload["scramble_order"] = scramble_order(G, s)
        lines.append(f"scramble order = {payload['scramble_order']}")
    k, witness = gonality_witness(G, args.gonality_cap, jobs=args.jobs)
    payload.update({"gonality": k, "witness": witness})
    lines.append(f"gonality = {k}")
    return payload, "\n".join(lines)


def cmd_certify(args) -> Result:
    P = _polygon(args)
    cert = gonality_certificate(P, _triangulation(args, P), args.gonality_cap, jobs=args.jobs)
    text = f"{cert.describe()}  (lower: {cert.lower_witness}; upper: {cert.upper_witness})"
    return cert, text


def cmd_verify(args) -> Result:
    criteria = None if args.all or not args.criterion else args.criterion
    verifier = Verifier(args.max_genus, args.jobs, args.gonality_cap, CorpusCache(max_genus=args.max_genus))
    report = verifier.run(criteria)
    lines = [f"{'PASS' if c.passed else 'FAIL'}  {c.name:<22} {c.subject}  {c.detail}".rstrip()
             for c in report.checks]
    lines.append(f"{len(report.checks) - len(report.failures)}/{len(report.checks)} checks passed")
    if not report.passed:
        args.failed = True
    return report, "\n".join(lines)


COMMANDS: Dict[str, Tuple[Callable, str]] = {
    "analyze": (cmd_analyze, "invariants of a polygon"),
    "dim": (cmd_dim, "moduli dimension and the bound U(g, egon)"),
    "relax": (cmd_relax, "relaxed polygon"),
    "enumerate": (cmd_enumerate, "maximal non-hyperelliptic polygons of a genus"),
    "table": (cmd_table, "largest moduli dimension per gonality"),
    "beehive": (cmd_beehive, "beehive triangulation of a maximal polygon"),
    "skeleton": (cmd_skeleton, "skeleton of a triangulation"),
    "gonality": (cmd_gonality, "gonality of a graph, optionally a scramble order"),
    "certify": (cmd_certify, "scramble/egon gonality certificate"),
    "verify": (cmd_verify, "run the acceptance suite"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "dot"), default="text")
    common.add_argument("--gonality-cap", type=int, default=GONALITY_VERTEX_CAP,
                        help="largest graph handed to the exhaustive gonality search")
    common.add_argument("--jobs", type=int, default=DEFAULT_JOBS, help="worker processes")
    common.add_argument("--max-genus", type=int, default=DEFAULT_MAX_GENUS)
    common.add_argument("-v", "--verbose", action="count", default=0)

    parser = argparse.ArgumentParser(prog=APP_NAME, description="Lattice polygons, tropical curves and gonality")
    parser.add_argument("--version", action="version", version=f"{APP_NAME} {APP_VERSION}")
    verbs = parser.add_subparsers(dest="verb", required=True)
    for name, (_, help_text) in COMMANDS.items():
        sub = verbs.add_parser(name, parents=[common], help=help_text)
        if name in ("analyze", "dim", "relax", "beehive", "skeleton", "certify"):
            sub.add_argument("--polygon", help="JSON file or inline JSON {\"vertices\": [[x, y], ...]}")
        if name in ("skeleton", "certify"):
            sub.add_argument("--triangulation", help="triangulation JSON; a beehive is built when omitted")
        if name == "gonality":
            sub.add_argument("--graph", help="graph JSON {\"n\": k, \"edges\": [[u, v], ...]}")
            sub.add_argument("--scramble", help="scramble JSON {\"eggs\": [[v, ...], ...]}")
        if name == "enumerate":
            sub.add_argument("--genus", type=int, required=True)
            sub.add_argument("--output", help="directory for corpus-g{g}.json")
        if name == "table":
            sub.add_argument("--genus", type=int)
            sub.add_argument("--all", action="store_true")
        if name == "verify":
            sub.add_argument("--all", action="store_true")
            sub.add_argument("--criterion", action="append", choices=sorted(CRITERIA))
    return parser


def _configure_logging(verbosity: int):
    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)
    args.failed = False
    handler = COMMANDS[args.verb][0]
    try:
        payload, text = handler(args)
    except FalsificationError as e:
        logger.error("falsified: %s", e)
        if e.witness is not None:
            print(f"witness: {e.witness}")
        return 1
    except (InputFormatError, PreconditionError, CapExceededError) as e:
        logger.error("%s", e)
        return 2

    if args.format == "json":
        print(dump_json(payload))
    else:
        print(text)
    return 1 if args.failed else 0


if __name__ == "__main__":
    sys.exit(main())
