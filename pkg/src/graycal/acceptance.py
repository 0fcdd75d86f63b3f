"""The acceptance suite: nine exact checks over the built-in corpus.

Each criterion returns a CriterionResult; run_all prints one pass/fail line
per criterion.  Everything here is exact set arithmetic, no tolerances.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Callable

from .anodyne import (
    check_extension,
    derived_3,
    is_bicategory_up_to,
    scaled_maps_from,
    verify_certificate,
)
from .corpus import (
    corpus_two_categories,
    random_pool,
    saturation_corpus,
    sweep_complexes,
)
from .filtrations import (
    case_B_pushouts,
    case_a_sigma_order,
    certify_lemma1,
    filtration_case_A,
    filtration_case_C,
)
from .gray import check_associativity, check_duality, check_colimit_distribution, gray
from .maps import SSetMap, enumerate_maps, nondeg
from .nerves import oplax_nerve
from .scaled import (
    ScaledSet,
    ScaledMap,
    rule_instance_additions,
    saturate,
    scale_flat,
)
from .simplicial import delta, product
from .twocat import compose_oplax, enumerate_oplax_functors, identity_oplax, validate_oplax
from .universal import build_theorem_witness, classify_oplax_functor, triangle_classes


@dataclass
class CriterionResult:
    number: int
    name: str
    ok: bool
    detail: str
    seconds: float

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} criterion {self.number} ({self.name}): {self.detail} [{self.seconds:.1f}s]"


def _run(number: int, name: str, fn: Callable[[], tuple[bool, str]]) -> CriterionResult:
    t0 = time.time()
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is a failure with its reason
        ok, detail = False, f"raised {type(exc).__name__}: {exc}"
    return CriterionResult(number, name, ok, detail, time.time() - t0)


def _sweep_and_pool():
    sweep = list(sweep_complexes().values())
    pool = random_pool(50)
    return sweep, pool


# 1 -------------------------------------------------------------------------

def criterion_1() -> CriterionResult:
    def body():
        sweep, pool = _sweep_and_pool()
        cache: dict = {}
        count = 0
        for x, y, z in itertools.product(sweep, repeat=3):
            if not check_associativity(x, y, z, product_cache=cache).ok:
                return False, f"associativity failed on sweep triple #{count}"
            count += 1
        rng_triples = [pool[k::3] for k in range(3)]
        for x, y, z in zip(*rng_triples):
            if not check_associativity(x, y, z, product_cache=cache).ok:
                return False, "associativity failed on a random triple"
            count += 1
        return True, f"both bracketings and the direct rule agree on {count} triples"
    return _run(1, "gray associativity", body)


# 2 -------------------------------------------------------------------------

def criterion_2() -> CriterionResult:
    def body():
        d1 = scale_flat(delta(1))
        g = gray(d1, d1)
        tris = g.space.cells_of_dim(2)
        if len(tris) != 2:
            return False, f"expected 2 nondegenerate triangles, found {len(tris)}"
        if len(g.thin) != 1:
            return False, f"expected exactly 1 thin triangle, found {len(g.thin)}"
        t = next(iter(g.thin))
        cx, cy = g.space.components_of_cell(t)
        # the thin square sends 01 to the first-factor edge: x-component s1, y-component s0
        ok = cx.eta.values == (0, 1, 1) and cy.eta.values == (0, 0, 1)
        return ok, "the oplax square has exactly the expected thin triangle"
    return _run(2, "lax square", body)


# 3 -------------------------------------------------------------------------

def criterion_3() -> CriterionResult:
    def body():
        sweep, pool = _sweep_and_pool()
        pairs = list(itertools.product(sweep, repeat=2)) + list(zip(pool[0::2], pool[1::2]))
        for x, y in pairs:
            space = product(x.space, y.space)
            tm = gray(x, y, "minus", space=space).thin
            tg = gray(x, y, "gray", space=space).thin
            tp = gray(x, y, "plus", space=space).thin
            tv = gray(x, y, "verity-2", space=space).thin
            if not (tm <= tg <= tp):
                return False, "variant chain violated"
            if tv != tp:
                return False, "verity rule differs from the plus variant"
        # the one-triangle difference lives over the sharp 2-simplex factor
        left = ScaledSet(delta(2), frozenset({"012"}))
        right = scale_flat(delta(1))
        space = product(left.space, right.space)
        diff = gray(left, right, "gray", space=space).thin - \
            gray(left, right, "minus", space=space).thin
        if len(diff) != 1:
            return False, f"expected exactly one extra triangle, found {len(diff)}"
        cert = certify_lemma1()
        extra = cert.ambient.thin - cert.start_thin
        if extra != diff:
            return False, "lemma certificate adds a different triangle"
        return True, f"chain holds on {len(pairs)} pairs; one-triangle difference reproduced"
    return _run(3, "variant chain", body)


# 4 -------------------------------------------------------------------------

def criterion_4() -> CriterionResult:
    def body():
        for m in (2, 3, 4):
            for n in (1, 2, 3):
                for i in range(1, m):
                    cert = filtration_case_A(m, n, i)
                    if not verify_certificate(cert).ok:
                        return False, f"case A ({m},{n},{i}) rejected"
        literal = case_a_sigma_order(2, 1, 1)
        expected = [
            ((0, 0), (1, 0), (2, 1)),
            ((0, 0), (1, 0), (2, 0), (2, 1)),
            ((0, 0), (1, 0), (1, 1), (2, 1)),
            ((0, 0), (0, 1), (1, 1), (2, 1)),
        ]
        if literal != expected:
            return False, "the (2,1,1) attaching order differs from the reference sequence"
        for m in (3, 4):
            for n in (1, 2):
                if not verify_certificate(filtration_case_C(m, n)).ok:
                    return False, f"case C ({m},{n}) rejected"
        rb = case_B_pushouts()
        if not (verify_certificate(rb.edge_first).ok
                and verify_certificate(rb.simplex_first).ok and rb.iso_at_2):
            return False, "case B squares failed"
        return True, "all case A/B/C certificates replay, including the literal (2,1,1) order"
    return _run(4, "filtration certificates", body)


# 5 -------------------------------------------------------------------------

def criterion_5() -> CriterionResult:
    def body():
        corpus = saturation_corpus()
        gen = corpus["delta4-five"]
        from .simplicial import nondeg as _nd
        added = rule_instance_additions(gen, _nd("01234", 4))
        if added != frozenset({"034", "014"}):
            return False, f"the generator instance added {sorted(added)}"
        closure = saturate(gen)
        if not added <= closure.thin:
            return False, "closure misses the generator's faces"
        for name, scaled in corpus.items():
            sat = saturate(scaled)
            if saturate(sat).thin != sat.thin:
                return False, f"saturate not idempotent on {name}"
            if not scaled.thin <= sat.thin:
                return False, f"saturate not monotone on {name}"
            for i in (1, 2):
                gen3 = derived_3(i)
                for f in scaled_maps_from(gen3.source(), sat):
                    if not check_extension(gen3, sat, f).found:
                        return False, f"derived extension (i={i}) fails on {name}"
        return True, "rule additions exact; closure idempotent; derived extensions hold on 5 complexes"
    return _run(5, "saturation", body)


# 6 -------------------------------------------------------------------------

def criterion_6() -> CriterionResult:
    def body():
        cats = corpus_two_categories()
        picks = ("terminal", "walking-2cell", "walking-invertible-2cell")
        total = 0
        for name in picks:
            nerve = oplax_nerve(cats[name], 4)
            rep = is_bicategory_up_to(nerve.scaled, 4)
            total += rep.checked
            if not rep.ok:
                gen, _ = rep.failures[0]
                return False, f"nerve of {name} fails at {gen}"
        return True, f"three nerves pass the bound-4 extension property ({total} horns)"
    return _run(6, "nerve fibrancy", body)


# 7 -------------------------------------------------------------------------

def criterion_7() -> CriterionResult:
    def body():
        cats = corpus_two_categories()
        picks = ["terminal", "walking-arrow", "walking-2cell", "walking-invertible-2cell"]
        functors = {}
        for a in picks:
            for b in picks:
                functors[(a, b)] = enumerate_oplax_functors(cats[a], cats[b])
        composed = 0
        for a in picks:
            for b in picks:
                for c in picks:
                    for F in functors[(a, b)]:
                        for G in functors[(b, c)]:
                            GF = compose_oplax(G, F)  # re-validates internally
                            if validate_oplax(GF):
                                return False, f"composite invalid over ({a},{b},{c})"
                            composed += 1
        for a in picks:
            ida = identity_oplax(cats[a])
            for b in picks:
                for F in functors[(a, b)]:
                    idb = identity_oplax(cats[b])
                    if compose_oplax(F, ida).key() != F.key() or \
                       compose_oplax(idb, F).key() != F.key():
                        return False, "identity law fails"
        trip = (functors[("walking-2cell", "walking-invertible-2cell")][0],
                enumerate_oplax_functors(cats["walking-invertible-2cell"],
                                         cats["walking-arrow"])[0],
                enumerate_oplax_functors(cats["walking-arrow"], cats["terminal"])[0])
        F, G, H = trip
        lhs = compose_oplax(H, compose_oplax(G, F))
        rhs = compose_oplax(compose_oplax(H, G), F)
        if lhs.key() != rhs.key():
            return False, "associativity fails on the probe triple"
        return True, f"{composed} composites re-validate; identity and associativity hold"
    return _run(7, "oplax functor axioms", body)


# 8 -------------------------------------------------------------------------

def criterion_8() -> CriterionResult:
    def body():
        from .scaled import scale_sharp, opposite_scaled
        from .universal import TriangleClasses

        d1 = scale_flat(delta(1))
        e = scale_sharp(delta(2))
        classes = triangle_classes(d1, d1)
        checked = 0
        for m in enumerate_maps(classes.product, e.space,
                                thin_source=classes.oplax.thin, thin_target=e.thin):
            phi = ScaledMap(m, classes.oplax, e)
            verdict = classify_oplax_functor(phi, classes, e)
            if not verdict.consistent:
                return False, "slice/square verdict disagrees with the G-criterion"
            checked += 1
        if checked == 0:
            return False, "no maps enumerated"

        cats = corpus_two_categories()
        nerves = {n: oplax_nerve(cats[n], 2).scaled
                  for n in ("walking-invertible-2cell", "mixed-invertibility")}
        witnesses = 0
        for cname, c in nerves.items():
            for dname, d in nerves.items():
                classes_cd = triangle_classes(c, d)
                dual = triangle_classes(opposite_scaled(d), opposite_scaled(c))
                tris_c = c.space.simplices(2)
                tris_d = d.space.simplices(2)
                for alpha in tris_c:
                    if not c.is_thin(alpha):
                        continue
                    for beta in tris_d:
                        if not d.is_thin(beta):
                            continue
                        try:
                            rep = build_theorem_witness(c, d, alpha, beta,
                                                        classes=classes_cd,
                                                        dual_classes=dual)
                        except ValueError:
                            continue  # no invertible leg: not admissible
                        if not rep.ok:
                            return False, f"witness fails over ({cname},{dname})"
                        witnesses += 1
        if witnesses == 0:
            return False, "no admissible witness pairs found"
        return True, f"{checked} maps classified consistently; {witnesses} witnesses verified"
    return _run(8, "universal property", body)


# 9 -------------------------------------------------------------------------

def criterion_9() -> CriterionResult:
    def body():
        sweep, pool = _sweep_and_pool()
        pairs = list(itertools.product(sweep, repeat=2)) + list(zip(pool[0::2], pool[1::2]))
        for x, y in pairs:
            if not check_duality(x, y).ok:
                return False, "duality isomorphism failed"
        # pushout spans: a glued pair of triangles and a wedge of edges
        d2, d1 = delta(2), delta(1)
        edge = SSetMap(d1, d2, {"0": nondeg("0", 0), "1": nondeg("1", 0),
                                "01": nondeg("01", 1)})
        f = ScaledMap(edge, scale_flat(d1), scale_flat(d2))
        spans = [(f, f)]
        pt = delta(0)
        v = SSetMap(pt, d1, {"0": nondeg("0", 0)})
        g0 = ScaledMap(v, scale_flat(pt), scale_flat(d1))
        spans.append((g0, g0))
        for fa, ga in spans:
            for y in (sweep[1], sweep[4]):
                rep = check_colimit_distribution(fa, ga, y)
                if not rep.ok:
                    return False, rep.detail
        # the product and the tensor do not associate: exhibit a triple
        d1f = scale_flat(delta(1))
        left, right = _mixed_triple_thin_sets(d1f, d1f, d1f)
        if left == right:
            return False, "no counterexample triple found"
        return True, (f"duality holds on {len(pairs)} pairs; distribution holds; "
                      f"product/tensor non-associativity exhibited "
                      f"({len(left ^ right)} differing triples)")
    return _run(9, "duality and colimits", body)


def _mixed_triple_thin_sets(k: ScaledSet, x: ScaledSet, y: ScaledSet):
    """Flattened thin triples of K x (X . Y) and of (K x X) . Y."""
    from .universal import product_scaling

    inner = gray(x, y)
    outer = product_scaling(k, inner)
    left = set()
    for t in outer.thin:
        ck, cxy = outer.space.components_of_cell(t)
        cx, cy = inner.space.components(cxy)
        left.add((ck, cx, cy))

    kx = product_scaling(k, x)
    mixed = gray(kx, y)
    right = set()
    for t in mixed.thin:
        ckx, cy = mixed.space.components_of_cell(t)
        ck, cx = kx.space.components(ckx)
        right.add((ck, cx, cy))
    return frozenset(left), frozenset(right)


ALL = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
       criterion_6, criterion_7, criterion_8, criterion_9]


def run_all(printer=print) -> list[CriterionResult]:
    results = []
    for fn in ALL:
        res = fn()
        results.append(res)
        printer(res.line())
    return results
