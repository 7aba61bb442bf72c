"""Command-line front end.

Each subcommand reads graphs/words from files or flags, runs one library
operation, and prints either a human-readable summary or, with --json, a run
report {"command", "inputs_digest", "results", "wall_time_s"}. The digest
covers inputs only, never timestamps, so identical invocations are
byte-comparable on everything except the wall time. Exit codes: 0 success,
1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time

from . import braids, raag
from .classify import betti_cross_check, classify as classify_graph
from .complexes import build_complex, connected_components, euler_characteristic
from .embed import build_embedding, gbg_chain_target, verify_embedding
from .hom import HomCandidate, conclusion_check, exponent_profile, sweep_all
from .errors import GraphBraidError
from .graphs import (
    Graph,
    is_sufficiently_subdivided,
    morse_spanning_tree,
    parse_graph,
    sufficiently_subdivide,
)
from .homology import homology
from .morse import build_matching, morse_generator_count


def _load_graph(path: str) -> tuple[Graph, str]:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    return parse_graph(text), text


def _prepared(graph: Graph, n: int, auto: bool) -> Graph:
    if n < 2:
        return graph
    ok, violations = is_sufficiently_subdivided(graph, n)
    if ok:
        return graph
    if not auto:
        from .errors import InsufficientSubdivisionError

        raise InsufficientSubdivisionError(
            f"graph is not sufficiently subdivided for {n} strands "
            "(rerun with --auto-subdivide to fix it)",
            violations,
        )
    return sufficiently_subdivide(graph, n)


def _cmd_classify(args) -> dict:
    g, _ = _load_graph(args.graph)
    result = classify_graph(g, args.strands).to_dict()
    if args.cross_check:
        result["cross_check"] = betti_cross_check(g, args.strands)
    return result


def _cmd_betti(args) -> dict:
    g, _ = _load_graph(args.graph)
    work = _prepared(g, args.strands, args.auto_subdivide)
    return homology(build_complex(work, args.strands), args.dim).to_dict()


def _cmd_complex(args) -> dict:
    g, _ = _load_graph(args.graph)
    work = _prepared(g, args.strands, args.auto_subdivide)
    c = build_complex(work, args.strands)
    out = {
        "n": c.n,
        "counts": c.cell_counts(),
        "euler": euler_characteristic(c),
        "components": connected_components(c),
    }
    if args.boundaries:
        out["boundaries"] = {
            str(d): c.boundary(d).triples() for d in range(1, c.dimension + 1)
        }
    return out


def _cmd_morse(args) -> dict:
    g, _ = _load_graph(args.graph)
    work = _prepared(g, args.strands, args.auto_subdivide)
    tree = morse_spanning_tree(work)
    c = build_complex(tree.graph, args.strands, tree.order)
    matching = build_matching(c, tree)
    return {
        "critical": matching.critical_counts(),
        "formula": morse_generator_count(work, args.strands),
        "valid": True,
    }


def _cmd_subdivide(args) -> dict:
    g, _ = _load_graph(args.graph)
    return json.loads(sufficiently_subdivide(g, args.strands).to_json())


def _cmd_embed_raag(args) -> dict:
    g, _ = _load_graph(args.graph)
    mapping = build_embedding(g, pure=not args.non_pure)
    out = {
        f"g{i + 1}": braids.braid_to_text(img)
        for i, img in enumerate(mapping.images)
    }
    out["strands"] = mapping.strands
    if args.verify:
        report = verify_embedding(mapping)
        out["verified"] = report["ok"]
    return out


def _cmd_embed_gbg(args) -> dict:
    g, _ = _load_graph(args.graph)
    gamma, strands = gbg_chain_target(g, args.strands)
    return {"gamma": json.loads(gamma.to_json()), "strands": strands}


def _cmd_braid_wp(args) -> dict:
    word = braids.parse_braid(args.word, args.strands)
    nf = braids.normal_form(word)
    return {
        "identity": nf.is_identity(),
        "pure": braids.is_pure(word),
        "normal_form": str(nf),
    }


def _cmd_raag_wp(args) -> dict:
    g, _ = _load_graph(args.graph)
    word = raag.parse_raag_word(args.word, g)
    return {"normal_form": raag.word_to_text(raag.normal_form(word))}


def _cmd_check_hom(args) -> dict:
    if args.sweep:
        return sweep_all(args.max_vertices, args.strands, args.max_len)
    if not args.gamma or not args.images:
        raise GraphBraidError("check-hom needs --gamma and --images, or --sweep")
    g, _ = _load_graph(args.gamma)
    with open(args.images, "r", encoding="utf-8") as fh:
        lines = [line.strip() for line in fh if line.strip()]
    images = tuple(raag.parse_raag_word(line, g) for line in lines)
    candidate = HomCandidate(args.strands, g, images)
    report = conclusion_check(candidate)
    matrix, columns_equal = exponent_profile(candidate)
    report["exponent_profile"] = matrix
    report["exponent_columns_equal"] = columns_equal
    if report.get("counterexample") and args.counterexample_file:
        with open(args.counterexample_file, "w", encoding="utf-8") as fh:
            json.dump(report["counterexample"], fh, indent=2)
    return report


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphbraids",
        description="Discretized configuration spaces, graph braid group "
        "classification, and Artin-group embeddings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_cmd(name, fn, help_, strands=True, auto=False):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--graph", required=True, help="graph JSON file")
        if strands:
            p.add_argument("--strands", type=int, required=True)
        if auto:
            p.add_argument("--auto-subdivide", action="store_true")
        p.add_argument("--json", action="store_true")
        p.set_defaults(fn=fn)
        return p

    p = graph_cmd(
        "classify",
        _cmd_classify,
        "is this graph braid group a classical braid group? "
        "(a circle reports case 5 even with one strand; case 3 covers the "
        "remaining one-cycle graphs)",
    )
    p.add_argument("--cross-check", action="store_true")

    p = graph_cmd("betti", _cmd_betti, "integer homology of the discretized space", auto=True)
    p.add_argument("--dim", type=int, default=1)

    p = graph_cmd("complex", _cmd_complex, "cell census of the discretized space", auto=True)
    p.add_argument("--boundaries", action="store_true")

    graph_cmd("morse", _cmd_morse, "Morse matching critical counts and formula", auto=True)
    graph_cmd("subdivide", _cmd_subdivide, "minimal sufficient subdivision")

    p = graph_cmd("embed-raag", _cmd_embed_raag, "RAAG into a pure braid group", strands=False)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--non-pure", action="store_true")

    graph_cmd("embed-gbg", _cmd_embed_gbg, "embedding target for a graph braid group")

    p = sub.add_parser("braid-wp", help="braid word problem")
    p.add_argument("--strands", type=int, required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_braid_wp)

    p = sub.add_parser("raag-wp", help="RAAG word problem")
    p.add_argument("--graph", required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_raag_wp)

    p = sub.add_parser("check-hom", help="braid-to-RAAG homomorphism checks")
    p.add_argument("--gamma", help="defining graph JSON file")
    p.add_argument("--strands", type=int, default=5)
    p.add_argument("--images", help="file with one word per line")
    p.add_argument("--sweep", action="store_true")
    p.add_argument("--max-len", type=int, default=3)
    p.add_argument("--max-vertices", type=int, default=3)
    p.add_argument("--counterexample-file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_check_hom)

    return parser


def _inputs_digest(args) -> str:
    payload = {}
    for key, value in sorted(vars(args).items()):
        if key in ("fn", "json"):
            continue
        payload[key] = value
        if key in ("graph", "gamma", "images") and value and os.path.exists(value):
            with open(value, "rb") as fh:
                payload[key + "_content"] = fh.read().decode("utf-8", "replace")
    blob = json.dumps(payload, sort_keys=True).encode("utf-8")
    return hashlib.sha256(blob).hexdigest()


def _human(results: dict, indent: int = 0) -> str:
    lines = []
    pad = "  " * indent
    for key, value in results.items():
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.append(_human(value, indent + 1))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{pad}{key}: [{len(value)} entries]")
        else:
            lines.append(f"{pad}{key}: {value}")
    return "\n".join(lines)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        results = args.fn(args)
    except GraphBraidError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    elapsed = time.perf_counter() - start
    if getattr(args, "json", False):
        report = {
            "command": args.command,
            "inputs_digest": _inputs_digest(args),
            "results": results,
            "wall_time_s": round(elapsed, 6),
        }
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print(_human(results))
    return 0


if __name__ == "__main__":
    sys.exit(main())
