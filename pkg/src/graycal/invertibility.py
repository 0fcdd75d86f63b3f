"""Bounded invertibility witnesses for edges of a scaled simplicial set.

The homotopy category of the core is presented by the nondegenerate edges,
subject to one relation per thin triangle: the long leg equals the composite
of the two short ones.  Invertibility of an edge is decided by a bounded
search over words in this presentation; the search is sound (a witness
replays to genuine thin triangles) but bounded, so the negative answer is
"not decided" rather than "not invertible".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .scaled import ScaledSet
from .simplicial import Simplex, nondeg

INVERTIBLE = "invertible-with-witness"
NOT_DECIDED = "not-decided"

# a word is a tuple of nondegenerate edge names, composed right-to-left;
# the empty word is an identity
_Word = tuple[str, ...]


@dataclass(frozen=True)
class RewriteStep:
    """Replace the subword at ``pos`` using the relation of ``triangle``.

    ``forward`` rewrites the two short legs into the long one.
    """

    pos: int
    triangle: str
    forward: bool


@dataclass(frozen=True)
class InvertibilityWitness:
    inverse: _Word
    left_chain: tuple[RewriteStep, ...]   # inverse . edge  ~>  identity
    right_chain: tuple[RewriteStep, ...]  # edge . inverse  ~>  identity


@dataclass(frozen=True)
class EdgeVerdict:
    edge: Simplex
    status: str
    witness: Optional[InvertibilityWitness]
    depth: int

    @property
    def invertible(self) -> bool:
        return self.status == INVERTIBLE


@dataclass(frozen=True)
class _Relation:
    lhs: _Word        # the long leg, or () when it is degenerate
    rhs: _Word        # (d0, d2) with degenerate legs dropped
    src: str
    tgt: str
    triangle: str


class InvertibilityOracle:
    """Memoized bounded word search over one scaled complex."""

    def __init__(self, scaled: ScaledSet, depth: int = 4):
        self.scaled = scaled
        self.depth = depth
        space = scaled.space
        self._endpoints: dict[str, tuple[str, str]] = {}
        for e in space.cells_of_dim(1):
            x = nondeg(e, 1)
            self._endpoints[e] = (space.vertex(x, 0), space.vertex(x, 1))
        self._relations = self._collect_relations()
        self._cache: dict[str, EdgeVerdict] = {}
        self._id_components: dict[str, tuple[dict, dict]] = {}

    def _collect_relations(self) -> list[_Relation]:
        space = self.scaled.space
        rels = []
        for t in sorted(self.scaled.thin):
            x = nondeg(t, 2)
            d0, d1, d2 = (space.face(x, i) for i in range(3))
            lhs = () if d1.is_degenerate else (d1.base,)
            rhs = tuple(e.base for e in (d0, d2) if not e.is_degenerate)
            if lhs == rhs:
                continue
            src, tgt = space.vertex(x, 0), space.vertex(x, 2)
            rels.append(_Relation(lhs, rhs, src, tgt, t))
        return rels

    # -- word plumbing -------------------------------------------------------

    def _gap_vertex(self, w: _Word, i: int, whole_src: str) -> str:
        if not w:
            return whole_src
        if i == len(w):
            return self._endpoints[w[-1]][0]
        return self._endpoints[w[i]][1]

    def _matches(self, w: _Word, rel: _Relation, whole_src: str) -> Iterator[tuple[_Word, RewriteStep]]:
        for pattern, replacement, forward in ((rel.rhs, rel.lhs, True),
                                              (rel.lhs, rel.rhs, False)):
            plen = len(pattern)
            if len(w) - plen + len(replacement) > self.depth:
                continue
            if plen == 0:
                if rel.src != rel.tgt:
                    continue
                for i in range(len(w) + 1):
                    if self._gap_vertex(w, i, whole_src) != rel.src:
                        continue
                    yield w[:i] + replacement + w[i:], RewriteStep(i, rel.triangle, forward)
            else:
                for i in range(len(w) - plen + 1):
                    if w[i:i + plen] != pattern:
                        continue
                    sub_src = self._endpoints[w[i + plen - 1]][0]
                    sub_tgt = self._endpoints[w[i]][1]
                    if (sub_src, sub_tgt) != (rel.src, rel.tgt):
                        continue
                    yield w[:i] + replacement + w[i + plen:], RewriteStep(i, rel.triangle, forward)

    def _identity_component(self, vertex: str) -> tuple[dict, dict]:
        """All bounded words provably equal to the identity at ``vertex``,
        with BFS predecessors for witness replay."""
        if vertex in self._id_components:
            return self._id_components[vertex]
        pred: dict[_Word, tuple[_Word, RewriteStep] | None] = {(): None}
        queue: list[_Word] = [()]
        while queue:
            w = queue.pop(0)
            for rel in self._relations:
                for new, step in self._matches(w, rel, vertex):
                    if new not in pred:
                        pred[new] = (w, step)
                        queue.append(new)
        self._id_components[vertex] = (pred, {})
        return self._id_components[vertex]

    @staticmethod
    def _chain_to(pred: dict, target: _Word) -> tuple[RewriteStep, ...]:
        """The rewrite chain carrying ``target`` back to the identity word."""
        steps = []
        at = target
        while pred[at] is not None:
            prev, step = pred[at]
            steps.append(step)
            at = prev
        # pred records identity -> target; the witness runs the other way
        return tuple(RewriteStep(s.pos, s.triangle, not s.forward) for s in steps)

    # -- public API ----------------------------------------------------------

    def verdict(self, edge: Simplex) -> EdgeVerdict:
        if edge.dim != 1:
            raise ValueError("invertibility concerns edges")
        if edge.is_degenerate:
            return EdgeVerdict(edge, INVERTIBLE,
                               InvertibilityWitness((), (), ()), self.depth)
        name = edge.base
        if name in self._cache:
            v = self._cache[name]
            return EdgeVerdict(edge, v.status, v.witness, v.depth)
        src, tgt = self._endpoints[name]
        left_pred, _ = self._identity_component(src)
        right_pred, _ = self._identity_component(tgt)
        result = EdgeVerdict(edge, NOT_DECIDED, None, self.depth)
        candidates = sorted((u for u in left_pred if u and u[-1] == name),
                            key=lambda u: (len(u), u))
        for u in candidates:
            w = u[:-1]
            v = (name,) + w
            if v in right_pred:
                witness = InvertibilityWitness(
                    w, self._chain_to(left_pred, u), self._chain_to(right_pred, v))
                result = EdgeVerdict(edge, INVERTIBLE, witness, self.depth)
                break
        self._cache[name] = result
        return result

    def invertible(self, edge: Simplex) -> bool:
        return self.verdict(edge).invertible


def check_invertible(scaled: ScaledSet, edge: Simplex, depth: int = 4) -> EdgeVerdict:
    """Sound bounded search for a two-sided inverse of an edge."""
    return InvertibilityOracle(scaled, depth).verdict(edge)


def replay_witness(scaled: ScaledSet, edge: Simplex, witness: InvertibilityWitness) -> bool:
    """Re-run a witness against the thin-triangle relations; True iff valid."""
    if edge.is_degenerate:
        return witness.inverse == () and not witness.left_chain and not witness.right_chain
    chain_len = max(len(witness.left_chain), len(witness.right_chain))
    oracle = InvertibilityOracle(scaled, depth=len(witness.inverse) + 1 + 2 * chain_len + 2)
    rels = {r.triangle: r for r in oracle._relations}
    space = scaled.space
    src, tgt = space.vertex(edge, 0), space.vertex(edge, 1)

    def run(word: _Word, whole_src: str, chain) -> _Word | None:
        for step in chain:
            rel = rels.get(step.triangle)
            if rel is None:
                return None
            applied = None
            for new, st in oracle._matches(word, rel, whole_src):
                if st == step:
                    applied = new
                    break
            if applied is None:
                return None
            word = applied
        return word

    left = run(witness.inverse + (edge.base,), src, witness.left_chain)
    right = run((edge.base,) + witness.inverse, tgt, witness.right_chain)
    return left == () and right == ()
