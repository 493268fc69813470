"""
Command line front end.

    deodhar kl --type A --rank 3 --w "3 4 1 2" --x id
    deodhar verify01 --type A --rank 3
    deodhar heap --type A --rank 3 --word "2 1 3 2" --mask 1000 --defect-graph

Exit codes: 0 success or PASS, 1 verification FAIL, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .coxeter import CoxeterSystem, Element, build_system, element_from_word, enumerate_elements, reduced_word
from .errors import ConfigurationError, DeodharError
from .heaps import decorate, defect_graph, heap_from_word, render_ascii
from .kl import describe, kl_deodhar, kl_recursive, mu, verify_zero_one
from .masks import format_mask, is_deodhar, mu_masks, parse_mask

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
LONG_RUNNING = {("E", 6), ("E", 7), ("E", 8)}


@dataclass
class CommandConfig:
    command: str
    system: CoxeterSystem
    args: argparse.Namespace

    @property
    def json(self) -> bool:
        return self.args.format == "json"


def _element(system: CoxeterSystem, one_line: str | None, word: str | None, what: str) -> Element | None:
    if one_line is not None and word is not None:
        raise ConfigurationError(f"give --{what} or --{what}-word, not both")
    if word is not None:
        x, reduced = element_from_word(system, system.parse_word(word))
        if not reduced:
            raise ConfigurationError(f"--{what}-word is not reduced")
        return x
    if one_line is not None:
        return system.element(one_line)
    return None


def _or_identity(system: CoxeterSystem, x: Element | None) -> Element:
    return system.identity() if x is None else x


def _require(x, what):
    if x is None:
        raise ConfigurationError(f"--{what} (or --{what}-word) is required")
    return x


def _emit(cfg: CommandConfig, data: dict, text: str) -> None:
    if cfg.json:
        print(json.dumps(data, indent=2))
    else:
        print(text)


def run_kl(cfg: CommandConfig) -> int:
    a = cfg.args
    w = _require(_element(cfg.system, a.w, a.w_word, "w"), "w")
    x = _or_identity(cfg.system, _element(cfg.system, a.x, a.x_word, "x"))
    method = a.method
    if method == "auto":
        method = "masks" if is_deodhar(w) else "recursion"
    p = kl_deodhar(x, w) if method == "masks" else kl_recursive(x, w)
    _emit(cfg, {"command": "kl", "system": cfg.system.name, "x": describe(x), "w": describe(w),
                "route": method, "coefficients": list(p.coefficients), "polynomial": str(p)}, str(p))
    return EXIT_OK


def run_mu(cfg: CommandConfig) -> int:
    a = cfg.args
    w = _require(_element(cfg.system, a.w, a.w_word, "w"), "w")
    x = _or_identity(cfg.system, _element(cfg.system, a.x, a.x_word, "x"))
    value, route = mu(x, w, route=True)
    _emit(cfg, {"command": "mu", "system": cfg.system.name, "x": describe(x), "w": describe(w),
                "mu": value, "route": route}, str(value))
    return EXIT_OK


def run_deodhar(cfg: CommandConfig) -> int:
    a = cfg.args
    w = _element(cfg.system, a.w, a.w_word, "w")
    if w is not None:
        flag = is_deodhar(w)
        _emit(cfg, {"command": "deodhar", "system": cfg.system.name, "w": describe(w), "deodhar": flag},
              "deodhar" if flag else "not deodhar")
        return EXIT_OK
    found = [x for x in enumerate_elements(cfg.system) if is_deodhar(x)]
    names = [describe(x) for x in found]
    _emit(cfg, {"command": "deodhar", "system": cfg.system.name, "count": len(found), "elements": names},
          "\n".join(names + [f"count={len(found)}"]))
    return EXIT_OK


def run_verify01(cfg: CommandConfig) -> int:
    a = cfg.args
    key = (cfg.system.family, cfg.system.rank)
    if key in LONG_RUNNING and not a.force_long:
        raise ConfigurationError(f"{cfg.system.name} is not desk-scale; pass --force-long to run it anyway")
    report = verify_zero_one(cfg.system, deodhar_only=a.deodhar_only, max_length=a.max_length, jobs=a.jobs)
    if cfg.json:
        print(report.to_json())
    else:
        print(report.to_text())
        print(f"# elapsed {report.elapsed:.2f}s")
    return EXIT_OK if report.passed else EXIT_FAIL


def run_heap(cfg: CommandConfig) -> int:
    a = cfg.args
    system = cfg.system
    if a.word is not None:
        word = system.parse_word(a.word)
    else:
        word = reduced_word(_require(_element(system, a.w, None, "w"), "w"))
    mask = parse_mask(a.mask) if a.mask else (1,) * len(word)
    dec = decorate(heap_from_word(system, word), mask)
    data = {"command": "heap", "system": system.name, "word": system.format_word(word),
            "mask": format_mask(dec.mask), "diagram": render_ascii(dec).splitlines(),
            "entries": [{"position": e.id + 1, "generator": system.label(e.generator),
                         "column": e.column, "level": e.level, "status": dec.status(e.id).value}
                        for e in dec.heap]}
    lines = [render_ascii(dec).rstrip("\n")]
    if a.strings:
        diagram = dec.diagram
        bottom = sorted(diagram.paths)
        data["top"] = list(diagram.top_assignment)
        data["bottom"] = bottom
        lines.append("top: " + " ".join(map(str, diagram.top_assignment)))
        lines.append("bottom: " + " ".join(map(str, bottom)))
    if a.defect_graph:
        g = defect_graph(dec)
        verts = [v + 1 for v in g.vertices]
        edges = [(u + 1, v + 1) for u, v in g.edges]
        data["defect_graph"] = {"vertices": verts, "edges": edges}
        lines.append("v={" + ", ".join(map(str, verts)) + "}, e={"
                     + ", ".join(f"{u}-{v}" for u, v in edges) + "}")
    _emit(cfg, data, "\n".join(lines))
    return EXIT_OK


def run_mumasks(cfg: CommandConfig) -> int:
    a = cfg.args
    system = cfg.system
    if a.word is not None:
        word = system.parse_word(a.word)
    else:
        word = reduced_word(_require(_element(system, a.w, a.w_word, "w"), "w"))
    x = _or_identity(system, _element(system, a.x, a.x_word, "x"))
    found = mu_masks(system, word, x)
    bits = [format_mask(m) for m in found]
    _emit(cfg, {"command": "mumasks", "system": system.name, "word": system.format_word(word),
                "x": describe(x), "masks": bits, "mu": len(found)},
          "\n".join(bits + [f"mu={len(found)}"]))
    return EXIT_OK


COMMANDS = {
    "kl": run_kl, "mu": run_mu, "deodhar": run_deodhar,
    "verify01": run_verify01, "heap": run_heap, "mumasks": run_mumasks,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="deodhar", description="Deodhar masks and Kazhdan-Lusztig polynomials.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--type", dest="family", required=True, help="A, B, D, E, F or G")
        p.add_argument("--rank", type=int, required=True)
        p.add_argument("--format", choices=("text", "json"), default="text")

    def elements(p, x=True):
        p.add_argument("--w", help='1-line notation, e.g. "3 4 1 2", or "id"')
        p.add_argument("--w-word", help='generator word, e.g. "2 1 3 2"; "1~" is the type D fork')
        if x:
            p.add_argument("--x", help="1-line notation (default: identity)")
            p.add_argument("--x-word", help="generator word")

    p = sub.add_parser("kl", help="Kazhdan-Lusztig polynomial P_{x,w}")
    common(p)
    elements(p)
    p.add_argument("--method", choices=("auto", "masks", "recursion"), default="auto")

    p = sub.add_parser("mu", help="mu(x, w)")
    common(p)
    elements(p)

    p = sub.add_parser("deodhar", help="classify one element, or list all Deodhar elements")
    common(p)
    elements(p, x=False)

    p = sub.add_parser("verify01", help="check mu(x, w) in {0, 1} over a whole group")
    common(p)
    p.add_argument("--deodhar-only", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--max-length", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--force-long", action="store_true", help="allow E6, E7 and E8")

    p = sub.add_parser("heap", help="coalesced decorated heap")
    common(p)
    p.add_argument("--word")
    p.add_argument("--w")
    p.add_argument("--mask", help="bit string; default all ones")
    p.add_argument("--strings", action="store_true")
    p.add_argument("--defect-graph", action="store_true")

    p = sub.add_parser("mumasks", help="list the mu-masks evaluating to x")
    common(p)
    elements(p)
    p.add_argument("--word")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "jobs", 1) < 1:
            raise ConfigurationError("--jobs must be positive")
        cfg = CommandConfig(args.command, build_system(args.family, args.rank), args)
        return COMMANDS[args.command](cfg)
    except DeodharError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
