"""graycal: command line surface for the scaled simplicial set toolkit.

Exit codes: 0 = verified/constructed, 1 = a property failed (with a
counterexample in the output), 2 = input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .anodyne import is_bicategory_up_to, verify_certificate
from .canonical import digest
from .corpus import corpus_two_categories, entries, check_entry
from .filtrations import (
    case_B_pushouts,
    certify_lemma1,
    certify_lemma2,
    filtration_case_A,
    filtration_case_A_transposed,
    filtration_case_C,
)
from .formats import (
    ParseError,
    emit_cert,
    emit_scaled,
    emit_sset,
    parse_cert,
    parse_scaled,
    parse_twocat,
)
from .gray import fun_gray, gray
from .homs import hom_complex
from .invertibility import check_invertible
from .maps import SSetMap
from .nerves import duskin_nerve, oplax_nerve, oplax_scaling
from .scaled import ScaledMap, core, saturate, scale_flat
from .simplicial import nondeg
from .universal import classify_oplax_functor, triangle_classes


def _banner(args) -> dict:
    info = {"tool": f"graycal {__version__}"}
    for key in ("max_dim", "depth", "dim"):
        if hasattr(args, key) and getattr(args, key) is not None:
            info[key.replace("_", "-")] = getattr(args, key)
    return info


def _emit(args, info: dict, body_text: str | None = None):
    if args.format == "structured":
        print(json.dumps(info, indent=2, sort_keys=True))
        if body_text is not None:
            print(body_text, end="")
    else:
        for k, v in info.items():
            print(f"# {k}: {v}")
        if body_text is not None:
            print(body_text, end="")


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        print(f"error: cannot read {path}: {exc}", file=sys.stderr)
        sys.exit(2)


def _load_scaled(path: str):
    try:
        return parse_scaled(_read(path))
    except ParseError as exc:
        print(f"error: {path}: {exc}", file=sys.stderr)
        sys.exit(2)


def _write_or_print(args, text: str):
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        print(text, end="")


def cmd_core(args) -> int:
    scaled = _load_scaled(args.input)
    result = core(scaled)
    _emit(args, _banner(args) | {"command": "core", "cells": result.cell_count()})
    _write_or_print(args, emit_sset(result))
    return 0


def cmd_saturate(args) -> int:
    scaled = _load_scaled(args.input)
    result = saturate(scaled)
    info = _banner(args) | {"command": "saturate",
                            "added": sorted(result.thin - scaled.thin)}
    _emit(args, info)
    _write_or_print(args, emit_scaled(result))
    return 0


def cmd_invertible(args) -> int:
    scaled = _load_scaled(args.input)
    if not scaled.space.has_cell(args.edge) or scaled.space.dim_of(args.edge) != 1:
        print(f"error: {args.edge!r} is not an edge", file=sys.stderr)
        return 2
    verdict = check_invertible(scaled, nondeg(args.edge, 1), args.depth)
    info = _banner(args) | {"command": "invertible", "edge": args.edge,
                            "status": verdict.status}
    if verdict.witness is not None:
        info["inverse-word"] = list(verdict.witness.inverse)
    _emit(args, info)
    return 0


def cmd_hom(args) -> int:
    scaled = _load_scaled(args.input)
    try:
        hc = hom_complex(scaled, getattr(args, "from"), args.to, args.dim)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    info = _banner(args) | {
        "command": "hom",
        "cells": {str(d): len(hc.space.cells_of_dim(d)) for d in range(args.dim + 1)},
        "marked-edges": sorted(hc.marked),
    }
    _emit(args, info)
    _write_or_print(args, emit_sset(hc.space))
    return 0


def cmd_certify(args) -> int:
    note = None
    try:
        if args.case == "A":
            cert = filtration_case_A(args.m, args.n, args.i)
        elif args.case == "A-transposed":
            cert, note = filtration_case_A_transposed(args.m, args.n, args.i)
        elif args.case == "C":
            cert = filtration_case_C(args.m, args.n)
        elif args.case == "B":
            rep = case_B_pushouts()
            info = _banner(args) | {"command": "certify", "case": "B",
                                    "iso-at-2": rep.iso_at_2}
            _emit(args, info)
            _write_or_print(args, emit_cert(rep.edge_first) + emit_cert(rep.simplex_first))
            return 0 if rep.ok else 1
        elif args.case == "lemma1":
            cert = certify_lemma1()
        elif args.case == "lemma2-0":
            cert = certify_lemma2(0)
        elif args.case == "lemma2-2":
            cert = certify_lemma2(2)
        else:
            print(f"error: unknown case {args.case!r}", file=sys.stderr)
            return 2
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    info = _banner(args) | {"command": "certify", "case": args.case,
                            "steps": len(cert.steps)}
    if note:
        info["note"] = note
    _emit(args, info)
    _write_or_print(args, emit_cert(cert))
    return 0


def cmd_verify(args) -> int:
    try:
        cert = parse_cert(_read(args.cert))
    except ParseError as exc:
        print(f"error: {args.cert}: {exc}", file=sys.stderr)
        return 2
    outcome = verify_certificate(cert)
    info = _banner(args) | {"command": "verify", "accepted": outcome.ok,
                            "reason": outcome.reason}
    if outcome.failed_step is not None:
        info["failed-step"] = outcome.failed_step
    _emit(args, info)
    return 0 if outcome.ok else 1


def cmd_check_bicat(args) -> int:
    scaled = _load_scaled(args.input)
    rep = is_bicategory_up_to(scaled, args.max_dim)
    info = _banner(args) | {"command": "check-bicat", "checked": rep.checked,
                            "failures": len(rep.failures)}
    if rep.failures:
        gen, attach = rep.failures[0]
        info["first-failure"] = {
            "generator": str(gen),
            "attaching": {k: str(v) for k, v in sorted(attach.map.assign.items())},
        }
    _emit(args, info)
    return 0 if rep.ok else 1


def cmd_nerve(args) -> int:
    try:
        cat = parse_twocat(_read(args.input))
    except ParseError as exc:
        print(f"error: {args.input}: {exc}", file=sys.stderr)
        return 2
    builder = duskin_nerve if args.scaling == "duskin" else oplax_nerve
    nerve = builder(cat, args.dim)
    scaled = nerve.scaled
    if args.scaling == "oplax":
        scaled = oplax_scaling(scaled, args.depth)
    info = _banner(args) | {
        "command": "nerve", "scaling": args.scaling,
        "cells": {str(d): len(scaled.space.cells_of_dim(d)) for d in range(args.dim + 1)},
    }
    _emit(args, info)
    _write_or_print(args, emit_scaled(scaled))
    return 0


def cmd_gray(args) -> int:
    left = _load_scaled(args.left)
    right = _load_scaled(args.right)
    result = gray(left, right, args.variant, depth=args.depth)
    info = _banner(args) | {"command": "gray", "variant": args.variant,
                            "thin": len(result.thin)}
    _emit(args, info)
    _write_or_print(args, emit_scaled(result))
    return 0


def cmd_fun(args) -> int:
    left = _load_scaled(args.left)
    right = _load_scaled(args.right)
    fc = fun_gray(left, right, args.direction, args.dim)
    info = _banner(args) | {
        "command": "fun", "direction": args.direction,
        "cells": {str(d): len(fc.scaled.space.cells_of_dim(d)) for d in range(args.dim + 1)},
    }
    _emit(args, info)
    _write_or_print(args, emit_scaled(fc.scaled))
    return 0


def cmd_classify_oplax(args) -> int:
    c = _load_scaled(args.c)
    d = _load_scaled(args.d)
    e = _load_scaled(args.e)
    classes = triangle_classes(c, d, args.depth)
    assign = {}
    try:
        for lineno, line in enumerate(_read(args.phi).splitlines(), start=1):
            line = line.strip()
            if not line or line.startswith("#") or line == "MAP v1":
                continue
            parts = line.split()
            if len(parts) != 3 or parts[0] != "assign":
                raise ParseError(lineno, 1, "expected 'assign <cell> <expr>'")
            from .formats import parse_simplex
            assign[parts[1]] = parse_simplex(parts[2], e.space, lineno, 1)
        phi = ScaledMap(SSetMap(classes.product, e.space, assign), classes.oplax, e)
    except (ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    verdict = classify_oplax_functor(phi, classes, e)
    info = _banner(args) | {"command": "classify-oplax",
                            "satisfies": verdict.satisfies,
                            "agrees-with-class-criterion": verdict.consistent}
    if verdict.offending:
        info["offending"] = verdict.offending
    _emit(args, info)
    return 0 if verdict.satisfies else 1


def cmd_witness(args) -> int:
    from .universal import build_theorem_witness

    c = _load_scaled(args.c)
    d = _load_scaled(args.d)
    for name, space in ((args.alpha, c.space), (args.beta, d.space)):
        if not space.has_cell(name) or space.dim_of(name) != 2:
            print(f"error: {name!r} is not a triangle", file=sys.stderr)
            return 2
    try:
        rep = build_theorem_witness(c, d, nondeg(args.alpha, 2), nondeg(args.beta, 2),
                                    args.depth)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    info = _banner(args) | {"command": "witness", "ok": rep.ok,
                            "faces": rep.face_classes,
                            "used-duality": rep.used_duality}
    _emit(args, info)
    return 0 if rep.ok else 1


def cmd_digest(args) -> int:
    scaled = _load_scaled(args.input)
    info = _banner(args) | {"command": "digest",
                            "digest": digest(scaled.space, scaled.thin)}
    _emit(args, info)
    return 0


def cmd_corpus(args) -> int:
    if args.action == "list":
        info = _banner(args) | {"command": "corpus list",
                                "entries": [e.name for e in entries()]}
        _emit(args, info)
        return 0
    if args.action == "show":
        for e in entries():
            if e.name == args.name:
                _emit(args, _banner(args) | {"command": "corpus show", "name": e.name})
                print(e.payload, end="")
                return 0
        print(f"error: no corpus entry {args.name!r}", file=sys.stderr)
        return 2
    # run: entry property suites plus the acceptance criteria
    ok = True
    for e in entries():
        problems = check_entry(e)
        status = "ok" if not problems else f"FAILED: {problems[0]}"
        print(f"entry {e.name}: {status}")
        ok = ok and not problems
    from .acceptance import run_all
    results = run_all()
    ok = ok and all(r.ok for r in results)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graycal",
        description="Gray products, anodyne certificates and nerves for "
                    "finite scaled simplicial sets")
    parser.add_argument("--format", choices=("text", "structured"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        return p

    p = add("core", cmd_core, help="maximal subcomplex with thin 2-faces")
    p.add_argument("input")
    p.add_argument("-o", "--output")

    p = add("saturate", cmd_saturate, help="saturated closure of the scaling")
    p.add_argument("input")
    p.add_argument("-o", "--output")

    p = add("invertible", cmd_invertible, help="bounded invertibility search for an edge")
    p.add_argument("input")
    p.add_argument("--edge", required=True)
    p.add_argument("--depth", type=int, default=4)

    p = add("hom", cmd_hom, help="mapping complex between two vertices")
    p.add_argument("input")
    p.add_argument("--from", required=True)
    p.add_argument("--to", required=True)
    p.add_argument("--dim", type=int, default=3)
    p.add_argument("-o", "--output")

    p = add("certify", cmd_certify, help="emit a filtration certificate")
    p.add_argument("--case", required=True,
                   choices=("A", "A-transposed", "B", "C", "lemma1", "lemma2-0", "lemma2-2"))
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--i", type=int, default=1)
    p.add_argument("-o", "--output")

    p = add("verify", cmd_verify, help="replay a certificate")
    p.add_argument("cert")

    p = add("check-bicat", cmd_check_bicat, help="bounded extension-property check")
    p.add_argument("input")
    p.add_argument("--max-dim", type=int, default=4)

    p = add("nerve", cmd_nerve, help="nerve of a finite 2-category")
    p.add_argument("input")
    p.add_argument("--dim", type=int, default=4)
    p.add_argument("--scaling", choices=("duskin", "oplax"), default="duskin")
    p.add_argument("--depth", type=int, default=4)
    p.add_argument("-o", "--output")

    p = add("gray", cmd_gray, help="Gray product of two scaled complexes")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--variant", default="gray",
                   choices=("minus", "gray", "plus", "equiv", "verity-2"))
    p.add_argument("--depth", type=int, default=4)
    p.add_argument("-o", "--output")

    p = add("fun", cmd_fun, help="mapping complex of the Gray product")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--direction", choices=("gr", "opgr"), default="opgr")
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("-o", "--output")

    p = add("classify-oplax", cmd_classify_oplax,
            help="slice/square conditions for a map out of the oplax scaling")
    p.add_argument("c")
    p.add_argument("d")
    p.add_argument("e")
    p.add_argument("--phi", required=True, help="file of 'assign <cell> <expr>' lines")
    p.add_argument("--depth", type=int, default=4)

    p = add("witness", cmd_witness, help="the universal-property witness 4-simplex")
    p.add_argument("c")
    p.add_argument("d")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--depth", type=int, default=4)

    p = add("digest", cmd_digest, help="canonical digest of a scaled complex")
    p.add_argument("input")

    p = add("corpus", cmd_corpus, help="built-in corpus and the acceptance suite")
    p.add_argument("action", choices=("list", "show", "run"))
    p.add_argument("name", nargs="?")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
