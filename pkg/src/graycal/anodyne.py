"""Generating anodyne inclusions, extension checking and certificate replay."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .maps import SSetMap, enumerate_maps
from .scaled import ScaledSet, ScaledMap, scaled_subcomplex, scaling_violations
from .simplicial import (
    FiniteSimplicialSet,
    Simplex,
    delta,
    horn,
    quotient_horn,
    quotient_simplex,
    subcomplex,
)

FIVE_TRIANGLES = ("024", "123", "013", "134", "012")
SATURATION_ADDED = ("034", "014")


@dataclass(frozen=True)
class GeneratorInstance:
    """One generating scaled-anodyne inclusion.

    kinds: ``inner-horn`` (n, i) with 0 < i < n; ``saturation-4``;
    ``quotient-horn`` (n) with n >= 3; ``derived-3-simplex`` (i) with
    i in {1, 2}, the three-thin-faces inclusion into the sharp 3-simplex.
    """

    kind: str
    params: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind == "inner-horn":
            n, i = self.params
            if not (0 < i < n):
                raise ValueError(f"inner horn needs 0 < i < n, got ({n},{i})")
        elif self.kind == "saturation-4":
            if self.params:
                raise ValueError("saturation-4 takes no parameters")
        elif self.kind == "quotient-horn":
            (n,) = self.params
            if n < 3:
                raise ValueError("quotient horn needs n >= 3")
        elif self.kind == "derived-3-simplex":
            (i,) = self.params
            if i not in (1, 2):
                raise ValueError("derived 3-simplex needs i in {1,2}")
        else:
            raise ValueError(f"unknown generator kind {self.kind!r}")

    def __str__(self):
        inner = ",".join(map(str, self.params))
        return f"{self.kind}({inner})"

    def source(self) -> ScaledSet:
        return _generator_pair(self)[0]

    def target(self) -> ScaledSet:
        return _generator_pair(self)[1]


_GEN_CACHE: dict[GeneratorInstance, tuple[ScaledSet, ScaledSet]] = {}


def _generator_pair(gen: GeneratorInstance) -> tuple[ScaledSet, ScaledSet]:
    if gen in _GEN_CACHE:
        return _GEN_CACHE[gen]
    if gen.kind == "inner-horn":
        n, i = gen.params
        tri = f"{i - 1}{i}{i + 1}"
        tgt_space = delta(n)
        src_space = horn(n, i)
        thin = frozenset({tri})
        src = ScaledSet(src_space, thin if src_space.has_cell(tri) else frozenset())
        tgt = ScaledSet(tgt_space, thin)
    elif gen.kind == "saturation-4":
        space = delta(4)
        src = ScaledSet(space, frozenset(FIVE_TRIANGLES))
        tgt = ScaledSet(space, frozenset(FIVE_TRIANGLES) | frozenset(SATURATION_ADDED))
    elif gen.kind == "quotient-horn":
        (n,) = gen.params
        tri = f"01{n}"
        tgt_space = quotient_simplex(n)
        src_space = quotient_horn(n)
        src = ScaledSet(src_space, frozenset({tri}))
        tgt = ScaledSet(tgt_space, frozenset({tri}))
    else:  # derived-3-simplex
        (i,) = gen.params
        space = delta(3)
        missing = f"0{i}3"
        faces = frozenset({"012", "013", "023", "123"})
        src = ScaledSet(space, faces - {missing})
        tgt = ScaledSet(space, faces)
    _GEN_CACHE[gen] = (src, tgt)
    return src, tgt


def inner_horn(n: int, i: int) -> GeneratorInstance:
    return GeneratorInstance("inner-horn", (n, i))


def saturation_4() -> GeneratorInstance:
    return GeneratorInstance("saturation-4")


def quotient_horn_gen(n: int) -> GeneratorInstance:
    return GeneratorInstance("quotient-horn", (n,))


def derived_3(i: int) -> GeneratorInstance:
    return GeneratorInstance("derived-3-simplex", (i,))


def generators_up_to(dim_bound: int) -> list[GeneratorInstance]:
    """The generating set, truncated to simplex dimension <= dim_bound."""
    gens = []
    for n in range(2, dim_bound + 1):
        for i in range(1, n):
            gens.append(inner_horn(n, i))
    if dim_bound >= 4:
        gens.append(saturation_4())
    for n in range(3, dim_bound + 1):
        gens.append(quotient_horn_gen(n))
    return gens


# ---------------------------------------------------------------------------
# Extension checking
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExtensionResult:
    found: bool
    extension: Optional[ScaledMap]
    generator: GeneratorInstance


def check_extension(gen: GeneratorInstance, scaled: ScaledSet, f: ScaledMap) -> ExtensionResult:
    """Search for a scaled extension of f along the generator inclusion.

    Returns the first extension found, or an exhaustion failure: the
    backtracking enumerates every candidate assignment of the cells missing
    from the source.
    """
    src, tgt = _generator_pair(gen)
    if not f.source.space.same_presentation(src.space):
        raise ValueError("attaching map does not start at the generator source")
    if not f.target.space.same_presentation(scaled.space):
        raise ValueError("attaching map does not land in the given scaled set")
    fixed = dict(f.map.assign)
    for candidate in enumerate_maps(tgt.space, scaled.space, fixed=fixed,
                                    thin_source=tgt.thin, thin_target=scaled.thin,
                                    limit=1):
        ext = ScaledMap(candidate, tgt, scaled)
        return ExtensionResult(True, ext, gen)
    return ExtensionResult(False, None, gen)


def scaled_maps_from(source: ScaledSet, target: ScaledSet) -> Iterator[ScaledMap]:
    for m in enumerate_maps(source.space, target.space,
                            thin_source=source.thin, thin_target=target.thin):
        yield ScaledMap(m, source, target)


@dataclass(frozen=True)
class BicategoryReport:
    dim_bound: int
    checked: int
    failures: tuple[tuple[GeneratorInstance, ScaledMap], ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def is_bicategory_up_to(scaled: ScaledSet, dim_bound: int = 4) -> BicategoryReport:
    """Check the extension property against every generator of dimension
    <= dim_bound, over every attaching map; failures carry their witness."""
    checked = 0
    failures = []
    for gen in generators_up_to(dim_bound):
        src = gen.source()
        for f in scaled_maps_from(src, scaled):
            checked += 1
            res = check_extension(gen, scaled, f)
            if not res.found:
                failures.append((gen, f))
    return BicategoryReport(dim_bound, checked, tuple(failures))


# ---------------------------------------------------------------------------
# Certificates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CertStep:
    gen: GeneratorInstance
    attach: SSetMap  # generator target -> ambient


@dataclass(frozen=True)
class AnodyneCertificate:
    """An ordered sequence of generator pushouts inside a fixed ambient.

    Stages are subcomplexes of the ambient; the certificate witnesses that
    the inclusion of the start stage into the full ambient is built from
    pushouts of generating anodyne maps.
    """

    ambient: ScaledSet
    start_cells: frozenset[str]
    start_thin: frozenset[str]
    steps: tuple[CertStep, ...]

    @property
    def start(self) -> ScaledSet:
        return scaled_subcomplex(ScaledSet(self.ambient.space, self.start_thin),
                                 self.start_cells)

    @property
    def end(self) -> ScaledSet:
        return self.ambient


@dataclass(frozen=True)
class VerifyOutcome:
    ok: bool
    failed_step: Optional[int]  # 0-based; None when the failure is global
    reason: str

    def __bool__(self):
        return self.ok


def verify_certificate(cert: AnodyneCertificate) -> VerifyOutcome:
    """Replay every pushout; accept iff each step is a genuine pushout of its
    generator landing in the current stage and the final stage is the ambient."""
    ambient = cert.ambient
    space = ambient.space
    for name in cert.start_cells:
        if not space.has_cell(name):
            return VerifyOutcome(False, None, f"start cell {name} not in ambient")
        for f in space.faces_of(name):
            if f.base not in cert.start_cells:
                return VerifyOutcome(False, None, f"start stage not closed under faces at {name}")
    if not cert.start_thin <= cert.start_cells:
        return VerifyOutcome(False, None, "start thin set leaves the start stage")
    if not cert.start_thin <= ambient.thin:
        return VerifyOutcome(False, None, "start thin set exceeds the ambient scaling")

    stage = set(cert.start_cells)
    thin = set(cert.start_thin)
    for k, step in enumerate(cert.steps):
        src, tgt = _generator_pair(step.gen)
        attach = step.attach
        if not attach.target.same_presentation(space):
            return VerifyOutcome(False, k, "attaching map does not land in the ambient")
        if not attach.source.same_presentation(tgt.space):
            return VerifyOutcome(False, k, "attaching map is not defined on the generator target")
        bad = attach.violations()
        if bad:
            return VerifyOutcome(False, k, f"attaching map invalid: {bad[0]}")
        # the restriction to the generator source must land in the stage
        for name in src.space.cell_names:
            if attach.image_of_cell(name).base not in stage:
                return VerifyOutcome(False, k, f"source cell {name} maps outside the stage")
        for t in src.thin:
            img = attach.image_of_cell(t)
            if not (img.is_degenerate or img.base in thin):
                return VerifyOutcome(False, k, f"source thin triangle {t} maps to a non-thin one")
        # fresh cells must be new, nondegenerate and pairwise distinct
        fresh = [n for n in tgt.space.cell_names if not src.space.has_cell(n)]
        seen = set()
        for name in fresh:
            img = attach.image_of_cell(name)
            if img.is_degenerate:
                return VerifyOutcome(False, k, f"fresh cell {name} maps to a degenerate simplex")
            if img.base in stage:
                return VerifyOutcome(False, k, f"fresh cell {name} maps into the existing stage")
            if img.base in seen:
                return VerifyOutcome(False, k, f"fresh cells collide at {img.base}")
            seen.add(img.base)
        stage.update(seen)
        for t in tgt.thin:
            img = attach.image_of_cell(t)
            if not img.is_degenerate:
                if img.base not in ambient.thin:
                    return VerifyOutcome(False, k, f"step scales {img.base}, not thin in the end")
                thin.add(img.base)
    if stage != set(space.cell_names):
        missing = sorted(set(space.cell_names) - stage)[:3]
        return VerifyOutcome(False, None, f"final stage misses cells {missing}")
    if thin != set(ambient.thin):
        missing = sorted(set(ambient.thin) - thin)[:3]
        return VerifyOutcome(False, None, f"final scaling misses triangles {missing}")
    return VerifyOutcome(True, None, "certificate replays to the claimed end")
