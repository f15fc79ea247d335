"""Command-line front end: compute, verify, classify, decompose, chromatic.

Output is deterministic for identical input and flags; JSON payloads are
schema-stable and render every integer as a decimal string.  Exit codes:
0 success / all checks pass, 2 parse error, 3 integrality failure,
4 feasibility refusal, 5 mathematical mismatch between routes.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .errors import (
    FeasibilityError,
    IntegralityError,
    MismatchError,
    ParseError,
)
from .formula import (
    braid_series,
    chordal_chromatic,
    chromatic_polynomial,
    graphic_exponents,
    poincare_polynomial,
)
from .graphs import (
    Graph,
    Leaf,
    clique_vector,
    decompose,
    is_chordal,
    parse_graph,
)
from .holonomy import phi_bruteforce, verify_mayer_vietoris
from .series import expand_lcs_product, expand_product, phi_from_exponents

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_INTEGRALITY = 3
EXIT_FEASIBILITY = 4
EXIT_MISMATCH = 5

_MV_VERTEX_LIMIT = 6
_MV_MAX_DEGREE = 3


@dataclass(frozen=True)
class RunConfig:
    """Resolved flags for one invocation."""

    command: str
    input_path: str = "-"
    order: int = 10
    oracle_degree: int = 4
    format: str = "text"
    strict_parse: bool = False
    max_dim: int | None = None

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be >= 1")
        if self.oracle_degree < 1:
            raise ValueError("oracle degree must be >= 1")
        if self.format not in ("text", "json"):
            raise ValueError(f"unknown format {self.format!r}")


def _read_input(cfg: RunConfig) -> str:
    if cfg.input_path == "-":
        return sys.stdin.read()
    with open(cfg.input_path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_graph(cfg: RunConfig) -> Graph:
    return parse_graph(_read_input(cfg), strict=cfg.strict_parse)


def _s(x: int) -> str:
    return str(int(x))


def _ints(xs) -> list[str]:
    return [_s(x) for x in xs]


def _graph_json(g: Graph) -> dict:
    return {
        "vertices": [g.label(v) for v in g.vertices],
        "edges": [[g.label(u), g.label(v)] for u, v in g.edges],
    }


def _check(name: str, ok: bool) -> dict:
    return {"name": name, "pass": bool(ok)}


def _render_checks(lines: list[str], checks: list[dict]):
    for c in checks:
        lines.append(f"check {c['name']}: {'PASS' if c['pass'] else 'FAIL'}")


# ---------------------------------------------------------------------------
# subcommands: each returns (json payload, text lines, exit code)

def cmd_compute(cfg: RunConfig):
    g = _load_graph(cfg)
    kappa = clique_vector(g)
    e = graphic_exponents(kappa)
    u = expand_product(e, cfg.order)
    phi = phi_from_exponents(e, cfg.order)
    consistent = expand_lcs_product(phi, cfg.order) == u
    checks = [_check("lcs-product-consistency", consistent)]
    payload = {
        "kappa": _ints(kappa),
        "e": _ints(e),
        "U": _ints(u.coeffs),
        "phi": _ints(phi),
        "checks": checks,
    }
    lines = [
        f"graph: {g.n_vertices} vertices, {g.n_edges} edges",
        "kappa: " + " ".join(_ints(kappa)),
        "e: " + " ".join(_ints(e)),
        "U: " + " ".join(_ints(u.coeffs)),
        "phi: " + " ".join(_ints(phi)),
    ]
    _render_checks(lines, checks)
    code = EXIT_OK if consistent else EXIT_MISMATCH
    return payload, lines, code


def cmd_verify(cfg: RunConfig):
    g = _load_graph(cfg)
    kappa = clique_vector(g)
    e = graphic_exponents(kappa)
    u = expand_product(e, cfg.order)
    phi = phi_from_exponents(e, max(cfg.order, cfg.oracle_degree))
    oracle = phi_bruteforce(g, cfg.oracle_degree, max_dim=cfg.max_dim)
    checks = []
    table = []
    for k in range(1, cfg.oracle_degree + 1):
        ok = phi[k - 1] == oracle[k - 1]
        checks.append(_check(f"phi-degree-{k}", ok))
        table.append((k, phi[k - 1], oracle[k - 1], ok))
    mv_reports = []
    if g.n_vertices <= _MV_VERTEX_LIMIT:
        mv_degree = min(cfg.oracle_degree, _MV_MAX_DEGREE)
        for v in g.vertices:
            rep = verify_mayer_vietoris(g, v, mv_degree, max_dim=cfg.max_dim)
            mv_reports.append((v, rep))
            checks.append(_check(f"mayer-vietoris-pivot-{g.label(v)}", rep.ok))
    all_ok = all(c["pass"] for c in checks)
    payload = {
        "kappa": _ints(kappa),
        "e": _ints(e),
        "U": _ints(u.coeffs),
        "phi": _ints(phi[: cfg.order]),
        "phi_oracle": _ints(oracle),
        "checks": checks,
    }
    lines = [
        f"graph: {g.n_vertices} vertices, {g.n_edges} edges",
        "kappa: " + " ".join(_ints(kappa)),
        "e: " + " ".join(_ints(e)),
        "degree  formula  oracle  status",
    ]
    for k, f_val, o_val, ok in table:
        lines.append(
            f"{k:<7d} {f_val:<8d} {o_val:<7d} {'PASS' if ok else 'FAIL'}"
        )
    for v, rep in mv_reports:
        dims = "; ".join(
            f"k={r.degree}: {r.dim_graph}+{r.dim_seam} vs {r.dim_left}+{r.dim_right}"
            for r in rep.rows
        )
        lines.append(
            f"mayer-vietoris pivot={g.label(v)}: "
            f"{'PASS' if rep.ok else 'FAIL'} ({dims})"
        )
    lines.append(f"result: {'PASS' if all_ok else 'FAIL'}")
    return payload, lines, EXIT_OK if all_ok else EXIT_MISMATCH


def cmd_classify(cfg: RunConfig):
    g = _load_graph(cfg)
    kappa = clique_vector(g)
    chordal, witness = is_chordal(g)
    witness_kind = "elimination-order" if chordal else "chordless-cycle"
    decomposable = len(kappa) <= 3 or kappa[3] == 0
    payload = {
        "kappa": _ints(kappa),
        "chordal": chordal,
        "supersolvable": chordal,
        "witness_kind": witness_kind,
        "witness": [g.label(v) for v in witness],
        "decomposable": decomposable,
        "checks": [],
    }
    lines = [
        f"graph: {g.n_vertices} vertices, {g.n_edges} edges",
        "kappa: " + " ".join(_ints(kappa)),
        f"chordal (supersolvable): {'yes' if chordal else 'no'}",
        f"witness ({witness_kind}): "
        + " ".join(g.label(v) for v in witness),
        f"decomposable: {'yes' if decomposable else 'no'}",
    ]
    return payload, lines, EXIT_OK


def _tree_report(tree, order: int, depth: int, lines: list[str], tag: str):
    g = tree.graph
    if isinstance(tree, Leaf):
        u = braid_series(g.n_vertices, order)
        lines.append(
            "  " * depth + f"{tag}leaf[{tree.reason}] "
            f"n={g.n_vertices} m={g.n_edges} "
            "U: " + " ".join(_ints(u.coeffs))
        )
        node = {
            "kind": "leaf",
            "reason": tree.reason,
            "graph": _graph_json(g),
            "U": _ints(u.coeffs),
        }
        return node, u
    from .formula import glue_series

    lines.append(
        "  " * depth + f"{tag}node pivot={g.label(tree.pivot)} "
        f"n={g.n_vertices} m={g.n_edges}"
    )
    left_node, lu = _tree_report(tree.left, order, depth + 1, lines, "left: ")
    right_node, ru = _tree_report(tree.right, order, depth + 1, lines, "right: ")
    seam_node, su = _tree_report(
        decompose(tree.seam), order, depth + 1, lines, "seam: "
    )
    u = glue_series(lu, ru, su)
    lines.append("  " * depth + "U: " + " ".join(_ints(u.coeffs)))
    node = {
        "kind": "node",
        "pivot": g.label(tree.pivot),
        "graph": _graph_json(g),
        "left": left_node,
        "right": right_node,
        "seam": seam_node,
        "U": _ints(u.coeffs),
    }
    return node, u


def cmd_decompose(cfg: RunConfig):
    g = _load_graph(cfg)
    tree = decompose(g)
    lines: list[str] = [f"graph: {g.n_vertices} vertices, {g.n_edges} edges"]
    root, u_tree = _tree_report(tree, cfg.order, 0, lines, "")
    direct = expand_product(graphic_exponents(clique_vector(g)), cfg.order)
    ok = u_tree == direct
    checks = [_check("glued-equals-direct", ok)]
    payload = {
        "tree": root,
        "U": _ints(u_tree.coeffs),
        "U_direct": _ints(direct.coeffs),
        "checks": checks,
    }
    lines.append("U direct: " + " ".join(_ints(direct.coeffs)))
    _render_checks(lines, checks)
    return payload, lines, EXIT_OK if ok else EXIT_MISMATCH


def cmd_chromatic(cfg: RunConfig):
    g = _load_graph(cfg)
    kappa = clique_vector(g)
    chi = chromatic_polynomial(g)
    chordal, _ = is_chordal(g)
    poincare = poincare_polynomial(g)
    checks = []
    product_coeffs = None
    if chordal:
        product = chordal_chromatic(kappa)
        product_coeffs = _ints(product.coeffs)
        checks.append(_check("chordal-product-equals-chromatic", product == chi))
        e = graphic_exponents(kappa)
        order = max(g.n_vertices, kappa[1] if len(kappa) > 1 else 0, 1)
        u = expand_product(e, order)
        neg = poincare.substitute_negated().as_series(order)
        checks.append(_check("poincare-at-minus-t-equals-U", neg == u))
    all_ok = all(c["pass"] for c in checks)
    payload = {
        "chromatic": _ints(chi.coeffs),
        "chordal": chordal,
        "chordal_product": product_coeffs,
        "poincare": _ints(poincare.coeffs),
        "checks": checks,
    }
    lines = [
        f"graph: {g.n_vertices} vertices, {g.n_edges} edges",
        f"chromatic polynomial: {chi}",
        f"chordal: {'yes' if chordal else 'no'}",
    ]
    if chordal:
        lines.append(f"chordal product form: {chordal_chromatic(kappa)}")
    lines.append(f"poincare polynomial: {poincare}")
    _render_checks(lines, checks)
    return payload, lines, EXIT_OK if all_ok else EXIT_MISMATCH


_COMMANDS = {
    "compute": cmd_compute,
    "verify": cmd_verify,
    "classify": cmd_classify,
    "decompose": cmd_decompose,
    "chromatic": cmd_chromatic,
}


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="glcs",
        description=(
            "Exact lower-central-series ranks of graphic arrangement "
            "complements, with brute-force and gluing cross-checks."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "compute": "clique vector, exponents, U series, and ranks",
        "verify": "compare the closed formula against the brute-force ranks",
        "classify": "chordal/supersolvable and decomposable classification",
        "decompose": "vertex-split tree with glued series at every node",
        "chromatic": "chromatic and Poincare polynomials with specializations",
    }
    for name in _COMMANDS:
        sp = sub.add_parser(name, help=helps[name])
        sp.add_argument("--input", default="-", metavar="PATH",
                        help="edge-list file, or - for stdin (default)")
        sp.add_argument("--degree", type=_positive_int, default=10, metavar="N",
                        help="series truncation order (default 10)")
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--strict", action="store_true",
                        help="reject duplicate edges instead of deduplicating")
        sp.add_argument("--oracle-degree", type=_positive_int, default=4,
                        metavar="D", help="brute-force degree (default 4)")
        sp.add_argument("--max-dim", type=_positive_int, default=None,
                        metavar="CAP",
                        help="free Lie dimension cap for the brute force "
                             "(default 200000; GLCS_MAX_DIM also overrides)")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(
        command=args.command,
        input_path=args.input,
        order=args.degree,
        oracle_degree=args.oracle_degree,
        format=args.format,
        strict_parse=args.strict,
        max_dim=args.max_dim,
    )
    try:
        payload, lines, code = _COMMANDS[cfg.command](cfg)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except IntegralityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTEGRALITY
    except FeasibilityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FEASIBILITY
    except MismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if cfg.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(lines))
    return code


if __name__ == "__main__":
    raise SystemExit(main())
