"""Text formats: SSET v1, SCALED v1, 2CAT v1 and CERT v1."""

from __future__ import annotations

import re

from .anodyne import AnodyneCertificate, CertStep, GeneratorInstance
from .canonical import digest
from .maps import SSetMap
from .scaled import ScaledSet
from .simplicial import FiniteSimplicialSet, MonotoneMap, Simplex, nondeg
from .twocat import TwoCategory


class ParseError(ValueError):
    def __init__(self, line: int, col: int, msg: str):
        super().__init__(f"line {line}, col {col}: {msg}")
        self.line = line
        self.col = col


# ---------------------------------------------------------------------------
# Simplex expressions
# ---------------------------------------------------------------------------

def emit_simplex(x: Simplex) -> str:
    if not x.is_degenerate:
        return x.base
    digits = "".join(str(v) for v in x.eta.values)
    return f"deg({digits},{x.base})"


_DEG_RE = re.compile(r"^deg\((\d+),(.+)\)$")


def parse_simplex(expr: str, space: FiniteSimplicialSet, line: int, col: int) -> Simplex:
    m = _DEG_RE.match(expr)
    if m:
        digits, base = m.groups()
        if not space.has_cell(base):
            raise ParseError(line, col, f"dangling reference to {base!r}")
        values = tuple(int(ch) for ch in digits)
        try:
            eta = MonotoneMap(len(values) - 1, space.dim_of(base), values)
            return Simplex(eta, base)
        except ValueError as exc:
            raise ParseError(line, col, f"bad degeneracy {digits!r}: {exc}")
    if not space.has_cell(expr):
        raise ParseError(line, col, f"dangling reference to {expr!r}")
    return nondeg(expr, space.dim_of(expr))


# ---------------------------------------------------------------------------
# SSET / SCALED
# ---------------------------------------------------------------------------

def emit_sset(space: FiniteSimplicialSet, header: str = "SSET v1",
              thin: frozenset[str] | None = None) -> str:
    lines = [header]
    for name in sorted(space.cell_names, key=lambda c: (space.dim_of(c), c)):
        faces = " ".join(emit_simplex(f) for f in space.faces_of(name))
        entry = f"simplex {name} dim {space.dim_of(name)}"
        lines.append(entry + (" faces " + faces if faces else " faces"))
    if thin is not None:
        for t in sorted(thin):
            lines.append(f"thin {t}")
    return "\n".join(lines) + "\n"


def emit_scaled(scaled: ScaledSet) -> str:
    return emit_sset(scaled.space, "SCALED v1", scaled.thin)


def _records(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def parse_sset(text: str) -> FiniteSimplicialSet:
    space, thin = _parse_complex(text, "SSET v1")
    if thin:
        raise ParseError(1, 1, "thin records in a plain SSET file")
    return space


def parse_scaled(text: str) -> ScaledSet:
    space, thin = _parse_complex(text, "SCALED v1")
    bad = [t for t in thin if not space.has_cell(t) or space.dim_of(t) != 2]
    if bad:
        raise ParseError(1, 1, f"thin record names a non-2-simplex: {bad[0]}")
    return ScaledSet(space, frozenset(thin))


def _parse_complex(text: str, expect_header: str):
    records = list(_records(text))
    if not records or records[0][1] not in ("SSET v1", "SCALED v1"):
        raise ParseError(1, 1, f"missing header (expected {expect_header!r})")
    header = records[0][1]
    if header != expect_header:
        raise ParseError(records[0][0], 1, f"expected {expect_header!r}, found {header!r}")
    raw_cells: list[tuple[int, str, int, list[str]]] = []
    thin: list[str] = []
    for lineno, line in records[1:]:
        parts = line.split()
        if parts[0] == "simplex":
            if len(parts) < 5 or parts[2] != "dim" or parts[4] != "faces":
                raise ParseError(lineno, 1, "expected 'simplex <name> dim <n> faces ...'")
            try:
                dim = int(parts[3])
            except ValueError:
                raise ParseError(lineno, line.find(parts[3]) + 1, "dimension must be an integer")
            raw_cells.append((lineno, parts[1], dim, parts[5:]))
        elif parts[0] == "thin":
            if len(parts) != 2:
                raise ParseError(lineno, 1, "expected 'thin <name>'")
            thin.append(parts[1])
        else:
            raise ParseError(lineno, 1, f"unknown record {parts[0]!r}")

    cells: dict[str, tuple[Simplex, ...]] = {}
    dims: dict[str, int] = {}
    for lineno, name, dim, _ in raw_cells:
        if name in dims:
            raise ParseError(lineno, 1, f"duplicate simplex {name!r}")
        dims[name] = dim

    class _Probe:
        def has_cell(self, n):
            return n in dims

        def dim_of(self, n):
            return dims[n]

    probe = _Probe()
    for lineno, name, dim, face_exprs in raw_cells:
        if dim == 0:
            if face_exprs:
                raise ParseError(lineno, 1, "a vertex carries no faces")
            cells[name] = ()
            continue
        if len(face_exprs) != dim + 1:
            raise ParseError(lineno, 1,
                             f"{name!r} of dimension {dim} needs {dim + 1} faces")
        faces = []
        col = 1
        for expr in face_exprs:
            col = text.splitlines()[lineno - 1].find(expr) + 1
            faces.append(parse_simplex(expr, probe, lineno, col))
        cells[name] = tuple(faces)
    try:
        return FiniteSimplicialSet(cells, validate=True), thin
    except ValueError as exc:
        raise ParseError(1, 1, str(exc))


# ---------------------------------------------------------------------------
# 2CAT
# ---------------------------------------------------------------------------

def emit_twocat(cat: TwoCategory) -> str:
    lines = ["2CAT v1"]
    for x in cat.objects:
        lines.append(f"object {x}")
    for f, (s, t) in sorted(cat.one_cells.items()):
        lines.append(f"onecell {f} {s} {t}")
    for a, (s, t) in sorted(cat.two_cells.items()):
        lines.append(f"twocell {a} {s} {t}")
    for x, f in sorted(cat.id1.items()):
        lines.append(f"id1 {x} {f}")
    for f, a in sorted(cat.id2.items()):
        lines.append(f"id2 {f} {a}")
    for (g, f), h in sorted(cat._h1.items()):
        lines.append(f"hcomp1 {g} {f} {h}")
    for (b, a), c in sorted(cat._h2.items()):
        lines.append(f"hcomp2 {b} {a} {c}")
    for (b, a), c in sorted(cat._v.items()):
        lines.append(f"vcomp {b} {a} {c}")
    return "\n".join(lines) + "\n"


def parse_twocat(text: str) -> TwoCategory:
    records = list(_records(text))
    if not records or records[0][1] != "2CAT v1":
        raise ParseError(1, 1, "missing '2CAT v1' header")
    objects, one, two = [], {}, {}
    id1, id2, h1, h2, v = {}, {}, {}, {}, {}
    arity = {"object": 2, "onecell": 4, "twocell": 4, "id1": 3, "id2": 3,
             "hcomp1": 4, "hcomp2": 4, "vcomp": 4}
    for lineno, line in records[1:]:
        parts = line.split()
        kind = parts[0]
        if kind not in arity:
            raise ParseError(lineno, 1, f"unknown record {kind!r}")
        if len(parts) != arity[kind]:
            raise ParseError(lineno, 1, f"{kind} record has wrong arity")
        if kind == "object":
            objects.append(parts[1])
        elif kind == "onecell":
            one[parts[1]] = (parts[2], parts[3])
        elif kind == "twocell":
            two[parts[1]] = (parts[2], parts[3])
        elif kind == "id1":
            id1[parts[1]] = parts[2]
        elif kind == "id2":
            id2[parts[1]] = parts[2]
        elif kind == "hcomp1":
            h1[(parts[1], parts[2])] = parts[3]
        elif kind == "hcomp2":
            h2[(parts[1], parts[2])] = parts[3]
        else:
            v[(parts[1], parts[2])] = parts[3]
    return TwoCategory(objects, one, two, id1, id2, h1, h2, v)


# ---------------------------------------------------------------------------
# CERT
# ---------------------------------------------------------------------------

_GEN_RE = re.compile(r"^([a-z0-9-]+)\(([\d,]*)\)$")


def emit_cert(cert: AnodyneCertificate) -> str:
    start = cert.start
    lines = ["CERT v1",
             f"start-digest {digest(start.space, start.thin)}",
             f"end-digest {digest(cert.ambient.space, cert.ambient.thin)}",
             "begin ambient"]
    lines.append(emit_scaled(cert.ambient).rstrip("\n"))
    lines.append("end ambient")
    lines.append("begin start")
    for c in sorted(cert.start_cells):
        lines.append(f"cell {c}")
    for t in sorted(cert.start_thin):
        lines.append(f"thin {t}")
    lines.append("end start")
    for k, step in enumerate(cert.steps, start=1):
        assigns = " ".join(
            f"{name}={emit_simplex(step.attach.image_of_cell(name))}"
            for name in sorted(step.attach.source.cell_names)
        )
        lines.append(f"step {k} gen {step.gen} attach {assigns}")
    return "\n".join(lines) + "\n"


def parse_cert(text: str) -> AnodyneCertificate:
    lines = text.splitlines()
    if not lines or lines[0].strip() != "CERT v1":
        raise ParseError(1, 1, "missing 'CERT v1' header")
    idx = 1

    def expect(prefix: str) -> str:
        nonlocal idx
        while idx < len(lines) and not lines[idx].strip():
            idx += 1
        if idx >= len(lines) or not lines[idx].strip().startswith(prefix):
            raise ParseError(idx + 1, 1, f"expected {prefix!r}")
        out = lines[idx].strip()
        idx += 1
        return out

    start_digest = expect("start-digest ").split()[1]
    end_digest = expect("end-digest ").split()[1]
    expect("begin ambient")
    body = []
    while idx < len(lines) and lines[idx].strip() != "end ambient":
        body.append(lines[idx])
        idx += 1
    if idx >= len(lines):
        raise ParseError(idx, 1, "unterminated ambient block")
    idx += 1
    ambient = parse_scaled("\n".join(body) + "\n")

    expect("begin start")
    cells, thin = set(), set()
    while idx < len(lines) and lines[idx].strip() != "end start":
        parts = lines[idx].split()
        if parts and parts[0] == "cell":
            cells.add(parts[1])
        elif parts and parts[0] == "thin":
            thin.add(parts[1])
        elif parts:
            raise ParseError(idx + 1, 1, f"unexpected record {parts[0]!r} in start block")
        idx += 1
    if idx >= len(lines):
        raise ParseError(idx, 1, "unterminated start block")
    idx += 1

    steps = []
    while idx < len(lines):
        line = lines[idx].strip()
        idx += 1
        if not line:
            continue
        parts = line.split()
        if parts[0] != "step" or parts[2] != "gen" or parts[4] != "attach":
            raise ParseError(idx, 1, "expected 'step <k> gen <kind(params)> attach ...'")
        m = _GEN_RE.match(parts[3])
        if not m:
            raise ParseError(idx, 1, f"bad generator {parts[3]!r}")
        kind, params = m.groups()
        gen = GeneratorInstance(kind, tuple(int(p) for p in params.split(",") if p))
        tgt = gen.target().space
        assign = {}
        for token in parts[5:]:
            if "=" not in token:
                raise ParseError(idx, line.find(token) + 1, f"bad assignment {token!r}")
            name, expr = token.split("=", 1)
            if not tgt.has_cell(name):
                raise ParseError(idx, line.find(token) + 1,
                                 f"{name!r} is not a cell of the generator target")
            assign[name] = parse_simplex(expr, ambient.space, idx, line.find(expr) + 1)
        missing = [c for c in tgt.cell_names if c not in assign]
        if missing:
            raise ParseError(idx, 1, f"attach misses cells {missing[:3]}")
        steps.append(CertStep(gen, SSetMap(tgt, ambient.space, assign, validate=False)))

    cert = AnodyneCertificate(ambient, frozenset(cells), frozenset(thin), tuple(steps))
    actual_start = digest(cert.start.space, cert.start.thin)
    actual_end = digest(ambient.space, ambient.thin)
    if actual_start != start_digest:
        raise ParseError(2, 1, "start digest does not match the embedded data")
    if actual_end != end_digest:
        raise ParseError(3, 1, "end digest does not match the embedded data")
    return cert
