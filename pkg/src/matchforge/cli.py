"""Command line front end.

Every command prints one JSON document to stdout and a short human
summary to stderr.  Exit status: 0 for a positive answer, 1 for a
negative one (invalid certificate, no perfect matching, failed checks),
2 for unusable input or refused budgets.  Rational numbers appear as
{"num": "...", "den": "..."} string pairs so arbitrary precision
survives JSON.

Each document carries a manifest: argv, sha256 of file inputs, the
seed, budget settings, package version and wall time, so a run can be
reproduced from its output alone.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import DEFAULT_SEED, __version__
from .classify import (
    hamiltonian_cycle,
    is_bipartite,
    is_bridgeless,
    tait_coloring,
)
from .errors import (
    BudgetExceeded,
    MatchforgeError,
    NoPerfectMatching,
    NotCubic,
    SearchTimeout,
)
from .eta import (
    BoundCertificate,
    _frac_json,
    berge_witness,
    best_maximal_matching_bound,
    cap_certificate,
    cert_from_json,
    cert_to_json,
    eta_exact,
    eta_result_to_json,
    find_cap_matching,
    find_independent_set_bound,
    odd_component_cert,
    verify,
)
from .generators import eta_third_family, gp, named, random_cubic
from .graphs import Graph, as_cubic, format_edge_list, load_edge_list
from .matching import (
    matching_weight,
    max_weight_matching,
    max_weight_perfect_matching,
    parse_weight_csv,
    random_weights,
    uniform_weights,
    validate_weights,
)
from .mesh import dual_graph, load_off, quad_weights, quadrangulate, save_obj
from .reproduce import CHECKS, run_checks

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_BAD_INPUT = 2


def _seed_from(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("MATCHFORGE_SEED")
    if env is not None:
        try:
            return int(env, 0)
        except ValueError:
            raise MatchforgeError(f"MATCHFORGE_SEED is not an integer: {env!r}")
    return DEFAULT_SEED


def _sha256(path: str) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


class _Run:
    """Collects manifest data while a command executes."""

    def __init__(self, argv: list[str], seed: int):
        self.argv = argv
        self.seed = seed
        self.inputs: list[dict] = []
        self.budgets: dict = {}
        self.started = time.time()

    def add_input(self, path: str) -> None:
        self.inputs.append({"path": str(path), "sha256": _sha256(path)})

    def manifest(self) -> dict:
        return {
            "tool": "matchforge",
            "version": __version__,
            "argv": self.argv,
            "inputs": self.inputs,
            "seed": self.seed,
            "budgets": self.budgets,
            "elapsed_seconds": round(time.time() - self.started, 6),
        }


def _load_graph(spec: str, run: _Run, rng: random.Random) -> Graph:
    """A graph from an inline spec or an edge-list file.

    Inline forms: name:<label>, gp:<n>,<k>, family:<depth>,
    random:<n>.  Anything else is read as an edge-list path.
    """
    if spec.startswith("name:"):
        return named(spec[5:])
    if spec.startswith("gp:"):
        try:
            n, k = (int(x) for x in spec[3:].split(","))
        except ValueError:
            raise MatchforgeError(f"expected gp:<n>,<k>, got {spec!r}") from None
        return gp(n, k)
    if spec.startswith("family:"):
        g, _ = eta_third_family(int(spec[7:]))
        return g
    if spec.startswith("random:"):
        return random_cubic(int(spec[7:]), rng)
    run.add_input(spec)
    return load_edge_list(spec)


def _graph_json(g: Graph) -> dict:
    return {"n": g.n, "m": g.m, "edges": [list(e) for e in g.edges]}


def _weights_for(g: Graph, args, run: _Run, rng: random.Random):
    if getattr(args, "weights", None):
        run.add_input(args.weights)
        return parse_weight_csv(Path(args.weights).read_text(), g.m)
    if getattr(args, "random_weights", False):
        return random_weights(g, rng)
    return uniform_weights(g)


def _emit(doc: dict, run: _Run, summary: str) -> None:
    doc["manifest"] = run.manifest()
    json.dump(doc, sys.stdout, indent=2)
    sys.stdout.write("\n")
    print(summary, file=sys.stderr)


def _frac_str(x: Fraction | None) -> str:
    return "none" if x is None else str(x)


# ---------------------------------------------------------------------------
# subcommand bodies


def _cmd_gen(args, run: _Run, rng: random.Random) -> int:
    g = _load_graph(args.graph, run, rng)
    doc: dict = {"graph": _graph_json(g)}
    flags = getattr(g, "flags", None)
    if flags is not None:
        doc["flags"] = {
            "planar": flags.planar,
            "bipartite": flags.bipartite,
            "hamiltonian": flags.hamiltonian,
            "snark": flags.snark,
        }
    if args.graph.startswith("family:"):
        _, m = eta_third_family(int(args.graph[7:]))
        doc["distinguished_matching"] = sorted(m)
    if args.out:
        Path(args.out).write_text(format_edge_list(g))
    name = getattr(g, "name", args.graph)
    _emit(doc, run, f"{name}: {g.n} vertices, {g.m} edges")
    return EXIT_OK


def _cmd_classify(args, run: _Run, rng: random.Random) -> int:
    g = _load_graph(args.graph, run, rng)
    run.budgets["node_budget"] = args.node_budget
    doc: dict = {"n": g.n, "m": g.m}
    cubic = all(g.degree(v) == 3 for v in range(g.n))
    doc["cubic"] = cubic
    ok, bridge = is_bridgeless(g)
    doc["bridgeless"] = ok
    doc["bridge"] = bridge
    bip, _ = is_bipartite(g)
    doc["bipartite"] = bip
    doc["search_timeout"] = False
    doc["tait_colorable"] = None
    doc["tait_coloring"] = None
    doc["snark"] = None
    if cubic:
        try:
            tait = tait_coloring(as_cubic(g), node_budget=args.node_budget)
            doc["tait_colorable"] = tait is not None
            doc["tait_coloring"] = list(tait) if tait else None
            doc["snark"] = ok and tait is None
        except SearchTimeout:
            doc["search_timeout"] = True
    try:
        cycle = hamiltonian_cycle(g, node_budget=args.node_budget)
        doc["hamiltonian"] = cycle is not None
        doc["hamiltonian_cycle"] = list(cycle) if cycle else None
    except SearchTimeout:
        doc["hamiltonian"] = None
        doc["hamiltonian_cycle"] = None
        doc["search_timeout"] = True
    traits = [k for k in ("cubic", "bridgeless", "bipartite", "snark") if doc.get(k)]
    _emit(doc, run, f"n={g.n} m={g.m} " + (" ".join(traits) or "no marked traits"))
    return EXIT_OK


def _cmd_match(args, run: _Run, rng: random.Random) -> int:
    g = _load_graph(args.graph, run, rng)
    w = _weights_for(g, args, run, rng)
    if args.perfect:
        m = max_weight_perfect_matching(g, w)
    else:
        m = max_weight_matching(g, w)
    doc = {
        "perfect_required": args.perfect,
        "matching": sorted(m),
        "size": len(m),
        "weight": _frac_json(matching_weight(w, m)),
        "saturates_all": 2 * len(m) == g.n,
    }
    _emit(doc, run, f"matching of size {len(m)}, weight {matching_weight(w, m)}")
    return EXIT_OK


def _eta_budget_kwargs(args, run: _Run) -> dict:
    kw: dict = {}
    if args.maximal_count is not None:
        kw["maximal_count"] = args.maximal_count
    if args.perfect_count is not None:
        kw["perfect_count"] = args.perfect_count
    if args.vertex_limit is not None:
        kw["vertex_limit"] = args.vertex_limit
    run.budgets.update(kw)
    return kw


def _cmd_eta_exact(args, run: _Run, rng: random.Random) -> int:
    g = _load_graph(args.graph, run, rng)
    r = eta_exact(g, **_eta_budget_kwargs(args, run))
    doc = {"eta": eta_result_to_json(r)}
    _emit(doc, run, f"eta = {r.value}")
    return EXIT_OK


def _cmd_eta_bounds(args, run: _Run, rng: random.Random) -> int:
    g = _load_graph(args.graph, run, rng)
    kw = _eta_budget_kwargs(args, run)
    doc: dict = {"lower": None, "upper": None, "notes": []}
    lower = upper = None
    cubic = all(g.degree(v) == 3 for v in range(g.n))
    bridgeless, _ = is_bridgeless(g)
    if cubic and bridgeless:
        try:
            lower = berge_witness(
                as_cubic(g),
                **{k: v for k, v in kw.items() if k in ("perfect_count", "vertex_limit")},
            )
            doc["lower"] = cert_to_json(lower)
        except BudgetExceeded as exc:
            doc["notes"].append(f"lower bound skipped: {exc}")
    else:
        doc["notes"].append("lower bound needs a bridgeless cubic graph")
    try:
        upper = best_maximal_matching_bound(
            g, **{k: v for k, v in kw.items() if k in ("maximal_count", "vertex_limit")}
        )
        doc["upper"] = cert_to_json(upper)
    except BudgetExceeded as exc:
        doc["notes"].append(f"upper bound skipped: {exc}")
    if args.cert_out and upper is not None:
        Path(args.cert_out).write_text(json.dumps(cert_to_json(upper), indent=2) + "\n")
    lo = lower.bound if lower else None
    hi = upper.bound if upper else None
    _emit(doc, run, f"eta in [{_frac_str(lo)}, {_frac_str(hi)}]")
    return EXIT_OK


def _cmd_eta_witness(args, run: _Run, rng: random.Random) -> int:
    g = _load_graph(args.graph, run, rng)
    kw = _eta_budget_kwargs(args, run)
    cert: BoundCertificate | None
    if args.kind == "independent":
        if args.size is None:
            raise MatchforgeError("--size is required for kind independent")
        cert = find_independent_set_bound(g, args.size)
    elif args.kind == "cap":
        if args.size is None or args.max_cap is None:
            raise MatchforgeError("--size and --max-cap are required for kind cap")
        pm_kw = {k: v for k, v in kw.items() if k in ("perfect_count", "vertex_limit")}
        m = find_cap_matching(g, args.size, args.max_cap, **pm_kw)
        cert = cap_certificate(g, sorted(m)) if m is not None else None
    elif args.kind == "berge":
        pm_kw = {k: v for k, v in kw.items() if k in ("perfect_count", "vertex_limit")}
        cert = berge_witness(as_cubic(g), **pm_kw)
    else:
        if not args.edges:
            raise MatchforgeError("--edges is required for kind odd")
        edge_ids = [int(x) for x in args.edges.split(",")]
        cert = odd_component_cert(g, edge_ids)
    if cert is None:
        _emit({"certificate": None}, run, "no witness found")
        return EXIT_NEGATIVE
    if args.cert_out:
        Path(args.cert_out).write_text(json.dumps(cert_to_json(cert), indent=2) + "\n")
    _emit({"certificate": cert_to_json(cert)}, run, f"{cert.kind}: bound {cert.bound}")
    return EXIT_OK


def _cmd_cert_verify(args, run: _Run, rng: random.Random) -> int:
    g = _load_graph(args.graph, run, rng)
    run.add_input(args.certificate)
    cert = cert_from_json(json.loads(Path(args.certificate).read_text()))
    ok, reason = verify(g, cert)
    doc = {"valid": ok, "reason": reason, "kind": cert.kind, "bound": _frac_json(cert.bound)}
    _emit(doc, run, f"certificate {'accepted' if ok else 'rejected'}: {reason}")
    return EXIT_OK if ok else EXIT_NEGATIVE


def _cmd_mesh_quadrangulate(args, run: _Run, rng: random.Random) -> int:
    run.add_input(args.mesh)
    mesh = load_off(args.mesh)
    dual = dual_graph(mesh)
    weights = None
    if args.weights:
        run.add_input(args.weights)
        weights = parse_weight_csv(Path(args.weights).read_text(), dual.graph.m)
    elif args.random_weights:
        weights = random_weights(dual.graph, rng)
    quad_mesh, report = quadrangulate(mesh, mode=args.mode, weights=weights)
    if args.out:
        save_obj(quad_mesh, args.out)
    doc = {
        "dual": {"n": dual.graph.n, "m": dual.graph.m},
        "report": {
            "mode": report.mode,
            "quad_count": report.quad_count,
            "triangle_count": report.triangle_count,
            "perfect_weight": None
            if report.perfect_weight is None
            else _frac_json(report.perfect_weight),
            "maximum_weight": _frac_json(report.maximum_weight),
            "ratio": None if report.ratio is None else _frac_json(report.ratio),
        },
    }
    _emit(
        doc,
        run,
        f"{report.quad_count} quads, {report.triangle_count} triangles, "
        f"ratio {_frac_str(report.ratio)}",
    )
    return EXIT_OK


def _cmd_mesh_weights(args, run: _Run, rng: random.Random) -> int:
    run.add_input(args.mesh)
    mesh = load_off(args.mesh)
    dual = dual_graph(mesh)
    w = quad_weights(mesh, dual)
    doc = {
        "dual": {"n": dual.graph.n, "m": dual.graph.m},
        "weights": [_frac_json(x) for x in w],
    }
    if args.out:
        from .matching import format_weight_csv

        Path(args.out).write_text(format_weight_csv(w))
    _emit(doc, run, f"{dual.graph.m} quad qualities computed")
    return EXIT_OK


def _cmd_reproduce(args, run: _Run, rng: random.Random) -> int:
    ids = args.only.split(",") if args.only else None
    if ids is not None:
        known = {chk.check_id for chk in CHECKS}
        bad = [x for x in ids if x not in known]
        if bad:
            raise MatchforgeError(f"unknown check ids: {', '.join(bad)}")
    outcomes = run_checks(ids=ids, include_gated=args.full, stream=sys.stderr)
    doc = {
        "checks": [
            {
                "id": o.check_id,
                "label": o.label,
                "ok": o.ok,
                "detail": o.detail,
                "seconds": round(o.seconds, 3),
                "limit_seconds": o.limit,
            }
            for o in outcomes
        ],
        "all_ok": all(o.ok for o in outcomes),
    }
    passed = sum(1 for o in outcomes if o.ok)
    _emit(doc, run, f"{passed}/{len(outcomes)} checks passed")
    return EXIT_OK if doc["all_ok"] else EXIT_NEGATIVE


# ---------------------------------------------------------------------------
# parser


def _add_graph_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "graph",
        help="edge-list file, or name:<label> | gp:<n>,<k> | family:<d> | random:<n>",
    )


def _add_budget_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--maximal-count", type=int, default=None, metavar="N",
                   help="maximal matching enumeration budget")
    p.add_argument("--perfect-count", type=int, default=None, metavar="N",
                   help="perfect matching enumeration budget")
    p.add_argument("--vertex-limit", type=int, default=None, metavar="N",
                   help="raise the enumeration vertex limits")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matchforge",
        description="matching ratios, bound certificates and quad meshing "
        "for cubic graphs",
    )
    parser.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None,
                        help="RNG seed (default: MATCHFORGE_SEED or a fixed constant)")
    parser.set_defaults(seed=None)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_parser(name: str, **kw) -> argparse.ArgumentParser:
        return sub.add_parser(name, parents=[common], **kw)

    p = add_parser("gen", help="emit a graph from the generator library")
    _add_graph_arg(p)
    p.add_argument("--out", help="also write an edge-list file")
    p.set_defaults(func=_cmd_gen)

    p = add_parser("classify", help="degree, bridges, colorability, cycles")
    _add_graph_arg(p)
    p.add_argument("--node-budget", type=int, default=10**8)
    p.set_defaults(func=_cmd_classify)

    p = add_parser("match", help="maximum-weight (perfect) matching")
    _add_graph_arg(p)
    p.add_argument("--weights", help="CSV of edge_id,weight")
    p.add_argument("--random-weights", action="store_true")
    p.add_argument("--perfect", action="store_true")
    p.set_defaults(func=_cmd_match)

    p = sub.add_parser("eta", help="the worst-case matching ratio")
    eta_sub = p.add_subparsers(dest="eta_command", required=True)

    q = eta_sub.add_parser("exact", parents=[common], help="exact value with a witness weighting")
    _add_graph_arg(q)
    _add_budget_args(q)
    q.set_defaults(func=_cmd_eta_exact)

    q = eta_sub.add_parser("bounds", parents=[common], help="certificate bounds from both sides")
    _add_graph_arg(q)
    _add_budget_args(q)
    q.add_argument("--cert-out", help="write the upper-bound certificate to a file")
    q.set_defaults(func=_cmd_eta_bounds)

    q = eta_sub.add_parser("witness", parents=[common], help="search for one bound certificate")
    _add_graph_arg(q)
    _add_budget_args(q)
    q.add_argument("--kind", choices=("independent", "cap", "berge", "odd"),
                   required=True)
    q.add_argument("--size", type=int, help="set or matching size to search for")
    q.add_argument("--max-cap", type=int, help="cap target for kind cap")
    q.add_argument("--edges", help="comma-separated edge ids for kind odd")
    q.add_argument("--cert-out", help="write the certificate to a file")
    q.set_defaults(func=_cmd_eta_witness)

    p = sub.add_parser("cert", help="certificate operations")
    cert_sub = p.add_subparsers(dest="cert_command", required=True)
    q = cert_sub.add_parser("verify", parents=[common], help="recheck a certificate from raw data")
    _add_graph_arg(q)
    q.add_argument("certificate", help="certificate JSON file")
    q.set_defaults(func=_cmd_cert_verify)

    p = sub.add_parser("mesh", help="triangle mesh operations")
    mesh_sub = p.add_subparsers(dest="mesh_command", required=True)
    q = mesh_sub.add_parser("quadrangulate", parents=[common], help="pair triangles into quads")
    q.add_argument("mesh", help="OFF file of a closed triangle mesh")
    q.add_argument("--mode", choices=("perfect", "maximum"), default="perfect")
    q.add_argument("--weights", help="CSV of dual edge_id,weight")
    q.add_argument("--random-weights", action="store_true")
    q.add_argument("--out", help="write the quad mesh as OBJ")
    q.set_defaults(func=_cmd_mesh_quadrangulate)
    q = mesh_sub.add_parser("weights", parents=[common], help="emit computed quad qualities")
    q.add_argument("mesh", help="OFF file of a closed triangle mesh")
    q.add_argument("--out", help="write a weights CSV")
    q.set_defaults(func=_cmd_mesh_weights)

    p = add_parser("reproduce", help="re-run the documented result checks")
    p.add_argument("--full", action="store_true", help="include gated slow checks")
    p.add_argument("--only", help="comma-separated check ids")
    p.set_defaults(func=_cmd_reproduce)

    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        run = _Run(argv, _seed_from(args))
        rng = random.Random(run.seed)
        return args.func(args, run, rng)
    except (NoPerfectMatching,) as exc:
        json.dump({"error": type(exc).__name__, "message": str(exc)}, sys.stdout)
        sys.stdout.write("\n")
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    except (MatchforgeError, OSError, json.JSONDecodeError, ValueError) as exc:
        json.dump({"error": type(exc).__name__, "message": str(exc)}, sys.stdout)
        sys.stdout.write("\n")
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
