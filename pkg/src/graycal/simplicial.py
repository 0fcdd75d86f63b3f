"""Finite simplicial sets presented by nondegenerate cells and face data.

Every simplex is kept in Eilenberg-Zilber normal form: a surjective
degeneracy operator applied to a named nondegenerate cell.  Faces of
nondegenerate cells are stored already normalized, so degeneracy tests
are O(1) and all other simplicial operators are computed by factoring
monotone maps through the stored data.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence


# ---------------------------------------------------------------------------
# Monotone maps between finite ordinals
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class MonotoneMap:
    """A non-decreasing map [source_dim] -> [target_dim], given by its values."""

    source_dim: int
    target_dim: int
    values: tuple[int, ...]

    def __post_init__(self):
        if self.source_dim < 0 or self.target_dim < 0:
            raise ValueError("ordinals must be nonempty")
        if len(self.values) != self.source_dim + 1:
            raise ValueError("value list has wrong length")
        prev = 0
        for v in self.values:
            if v < prev or v > self.target_dim:
                raise ValueError(f"values not monotone into [{self.target_dim}]: {self.values}")
            prev = v
        object.__setattr__(self, "_hash",
                           hash((self.source_dim, self.target_dim, self.values)))

    @property
    def is_identity(self) -> bool:
        return self.source_dim == self.target_dim and self.values == tuple(range(self.source_dim + 1))

    @property
    def is_surjective(self) -> bool:
        return set(self.values) == set(range(self.target_dim + 1))

    @property
    def is_injective(self) -> bool:
        return len(set(self.values)) == len(self.values)

    def __call__(self, i: int) -> int:
        return self.values[i]

    def compose(self, inner: "MonotoneMap") -> "MonotoneMap":
        """self o inner, where inner lands in the source of self."""
        if inner.target_dim != self.source_dim:
            raise ValueError("maps not composable")
        return MonotoneMap(inner.source_dim, self.target_dim,
                           tuple(self.values[v] for v in inner.values))


MonotoneMap.__hash__ = lambda self: self._hash  # type: ignore[attr-defined]


@functools.lru_cache(maxsize=None)
def identity_map(n: int) -> MonotoneMap:
    return MonotoneMap(n, n, tuple(range(n + 1)))


@functools.lru_cache(maxsize=None)
def coface(i: int, n: int) -> MonotoneMap:
    """delta_i: [n-1] -> [n], skipping i."""
    return MonotoneMap(n - 1, n, tuple(v for v in range(n + 1) if v != i))


@functools.lru_cache(maxsize=None)
def codegeneracy(j: int, n: int) -> MonotoneMap:
    """sigma_j: [n+1] -> [n], repeating j."""
    vals = list(range(j + 1)) + list(range(j, n + 1))
    return MonotoneMap(n + 1, n, tuple(vals))


def inclusion_of(keep: Sequence[int], n: int) -> MonotoneMap:
    return MonotoneMap(len(keep) - 1, n, tuple(keep))


def constant_map(n: int, value: int, target_dim: int) -> MonotoneMap:
    return MonotoneMap(n, target_dim, tuple([value] * (n + 1)))


def surjections(n: int, m: int) -> Iterator[MonotoneMap]:
    """All surjective monotone maps [n] ->> [m]."""
    if m > n or m < 0:
        return
    # increments happen at m of the n step positions
    for incr in itertools.combinations(range(n), m):
        vals = [0] * (n + 1)
        v = 0
        pos = set(incr)
        for k in range(n):
            if k in pos:
                v += 1
            vals[k + 1] = v
        yield MonotoneMap(n, m, tuple(vals))


def epi_mono_factor(mu: MonotoneMap) -> tuple[MonotoneMap, MonotoneMap]:
    """Factor mu = iota o rho with rho surjective and iota injective."""
    image = sorted(set(mu.values))
    index = {v: k for k, v in enumerate(image)}
    rho = MonotoneMap(mu.source_dim, len(image) - 1, tuple(index[v] for v in mu.values))
    iota = MonotoneMap(len(image) - 1, mu.target_dim, tuple(image))
    return rho, iota


def opposite_surjection(eta: MonotoneMap) -> MonotoneMap:
    """Reverse-and-complement; the degeneracy operator of the opposite simplex."""
    n, m = eta.source_dim, eta.target_dim
    return MonotoneMap(n, m, tuple(m - eta.values[n - j] for j in range(n + 1)))


# ---------------------------------------------------------------------------
# Simplices in normal form
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Simplex:
    """A simplex (eta, base): the degeneracy eta applied to a nondegenerate cell."""

    eta: MonotoneMap
    base: str

    def __post_init__(self):
        if not self.eta.is_surjective:
            raise ValueError("degeneracy operator must be surjective")
        object.__setattr__(self, "_hash", hash((self.eta, self.base)))

    @property
    def dim(self) -> int:
        return self.eta.source_dim

    @property
    def base_dim(self) -> int:
        return self.eta.target_dim

    @property
    def is_degenerate(self) -> bool:
        return not self.eta.is_identity

    def __repr__(self):
        if self.eta.is_identity:
            return f"<{self.base}>"
        digits = "".join(str(v) for v in self.eta.values)
        return f"<{self.base}~{digits}>"


Simplex.__hash__ = lambda self: self._hash  # type: ignore[attr-defined]


def nondeg(base: str, dim: int) -> Simplex:
    return Simplex(identity_map(dim), base)


# ---------------------------------------------------------------------------
# The complex itself
# ---------------------------------------------------------------------------

class FiniteSimplicialSet:
    """A finite simplicial set: named nondegenerate cells with normalized face data.

    ``cells`` maps each cell name to its tuple of faces (d_0 ... d_n), each a
    Simplex of dimension one lower.  Vertices have the empty tuple.  Instances
    are immutable after construction.
    """

    def __init__(self, cells: Mapping[str, tuple[Simplex, ...]], validate: bool = True):
        dims: dict[str, int] = {}
        for name, faces in cells.items():
            if " " in name or "=" in name:
                raise ValueError(f"cell name may not contain spaces or '=': {name!r}")
            if len(faces) == 1:
                raise ValueError(f"cell {name} has exactly one face")
            dims[name] = 0 if not faces else len(faces) - 1
        self._faces = {name: tuple(faces) for name, faces in cells.items()}
        self._dims = dims
        by_dim: dict[int, list[str]] = {}
        for name in cells:
            by_dim.setdefault(dims[name], []).append(name)
        self._by_dim = {d: tuple(v) for d, v in by_dim.items()}
        self._support_cache: dict[str, frozenset[str]] = {}
        self._face_cache: dict[tuple[Simplex, int], Simplex] = {}
        if validate:
            problems = validate_complex(self)
            if problems:
                raise ValueError("invalid simplicial set: " + "; ".join(problems[:5]))

    # -- accessors ---------------------------------------------------------

    @property
    def cell_names(self) -> tuple[str, ...]:
        return tuple(self._faces)

    def cells_of_dim(self, n: int) -> tuple[str, ...]:
        return self._by_dim.get(n, ())

    @property
    def dimension(self) -> int:
        return max(self._by_dim) if self._by_dim else -1

    def dim_of(self, name: str) -> int:
        return self._dims[name]

    def faces_of(self, name: str) -> tuple[Simplex, ...]:
        return self._faces[name]

    def has_cell(self, name: str) -> bool:
        return name in self._faces

    def cell_count(self) -> int:
        return len(self._faces)

    def __contains__(self, name: str) -> bool:
        return name in self._faces

    def same_presentation(self, other: "FiniteSimplicialSet") -> bool:
        return self is other or self._faces == other._faces

    def __repr__(self):
        counts = ",".join(f"{d}:{len(self._by_dim[d])}" for d in sorted(self._by_dim))
        return f"FiniteSimplicialSet({counts})"

    # -- simplicial operators ----------------------------------------------

    def apply(self, x: Simplex, mu: MonotoneMap) -> Simplex:
        """The operator X(mu) applied to x, for any monotone mu into [dim x]."""
        if mu.target_dim != x.dim:
            raise ValueError("operator does not match simplex dimension")
        comp = x.eta.compose(mu)  # [k] -> [base_dim]
        return self._apply_to_base(x.base, comp)

    def _apply_to_base(self, base: str, mu: MonotoneMap) -> Simplex:
        rho, iota = epi_mono_factor(mu)
        face = self._injective_face(base, iota)
        return Simplex(face.eta.compose(rho), face.base)

    def _injective_face(self, base: str, iota: MonotoneMap) -> Simplex:
        m = iota.target_dim
        if iota.source_dim == m:
            return nondeg(base, m)
        present = set(iota.values)
        j = max(v for v in range(m + 1) if v not in present)
        stored = self._faces[base][j]
        shifted = MonotoneMap(iota.source_dim, m - 1,
                              tuple(v if v < j else v - 1 for v in iota.values))
        comp = stored.eta.compose(shifted)
        return self._apply_to_base(stored.base, comp)

    def face(self, x: Simplex, i: int) -> Simplex:
        key = (x, i)
        out = self._face_cache.get(key)
        if out is None:
            out = self.apply(x, coface(i, x.dim))
            self._face_cache[key] = out
        return out

    def multiface(self, x: Simplex, keep: Sequence[int]) -> Simplex:
        return self.apply(x, inclusion_of(keep, x.dim))

    def degenerate(self, x: Simplex, j: int) -> Simplex:
        return self.apply(x, codegeneracy(j, x.dim))

    def vertex(self, x: Simplex, k: int) -> str:
        return self.apply(x, constant_map(0, k, x.dim)).base

    def vertices(self, x: Simplex) -> tuple[str, ...]:
        return tuple(self.vertex(x, k) for k in range(x.dim + 1))

    def vertex_support(self, name: str) -> frozenset[str]:
        """Vertex names appearing in a nondegenerate cell."""
        cached = self._support_cache.get(name)
        if cached is None:
            cached = frozenset(self.vertices(nondeg(name, self._dims[name])))
            self._support_cache[name] = cached
        return cached

    def simplices(self, n: int) -> list[Simplex]:
        """All n-simplices: every (surjection, nondegenerate base) pair."""
        out: list[Simplex] = []
        for m in range(n + 1):
            names = self._by_dim.get(m)
            if not names:
                continue
            for eta in surjections(n, m):
                for name in names:
                    out.append(Simplex(eta, name))
        return out


def enumerate_simplices(space: FiniteSimplicialSet, n: int) -> list[Simplex]:
    return space.simplices(n)


def validate_complex(space: FiniteSimplicialSet) -> list[str]:
    """Check face dimensions, dangling bases and all simplicial identities."""
    problems = []
    for name in space.cell_names:
        n = space.dim_of(name)
        for i, f in enumerate(space.faces_of(name)):
            if f.dim != n - 1:
                problems.append(f"face {i} of {name} has dimension {f.dim}, expected {n - 1}")
            if not space.has_cell(f.base):
                problems.append(f"face {i} of {name} references missing cell {f.base}")
                continue
            if space.dim_of(f.base) != f.base_dim:
                problems.append(f"face {i} of {name} has inconsistent base dimension")
    if problems:
        return problems
    for name in space.cell_names:
        n = space.dim_of(name)
        if n < 2:
            continue
        x = nondeg(name, n)
        for j in range(n + 1):
            for i in range(j):
                left = space.face(space.face(x, j), i)
                right = space.face(space.face(x, i), j - 1)
                if left != right:
                    problems.append(f"identity d_{i} d_{j} failed on {name}")
    return problems


# ---------------------------------------------------------------------------
# Standard complexes
# ---------------------------------------------------------------------------

def _chain_name(chain: Iterable[int]) -> str:
    chain = tuple(chain)
    if any(v > 9 for v in chain):
        raise ValueError("standard complexes support vertices 0..9 only")
    return "".join(str(v) for v in chain)


def delta(n: int) -> FiniteSimplicialSet:
    """The standard n-simplex; cells are named by their vertex strings."""
    if n < 0:
        raise ValueError("n must be >= 0")
    cells: dict[str, tuple[Simplex, ...]] = {}
    for k in range(n + 1):
        for chain in itertools.combinations(range(n + 1), k + 1):
            faces = tuple(
                nondeg(_chain_name(chain[:i] + chain[i + 1:]), k - 1)
                for i in range(k + 1)
            ) if k > 0 else ()
            cells[_chain_name(chain)] = faces
    return FiniteSimplicialSet(cells, validate=False)


def subcomplex(space: FiniteSimplicialSet, keep: Iterable[str]) -> FiniteSimplicialSet:
    """The subcomplex on a downward-closed set of cell names (names preserved)."""
    keep = set(keep)
    cells = {}
    for name in space.cell_names:
        if name not in keep:
            continue
        faces = space.faces_of(name)
        for f in faces:
            if f.base not in keep:
                raise ValueError(f"{name} kept but its face base {f.base} is not")
        cells[name] = faces
    return FiniteSimplicialSet(cells, validate=False)


def boundary_delta(n: int) -> FiniteSimplicialSet:
    full = delta(n)
    return subcomplex(full, (c for c in full.cell_names if full.dim_of(c) < n))


def horn(n: int, i: int) -> FiniteSimplicialSet:
    """Lambda^n_i: the faces of Delta^n containing vertex i."""
    if not (0 <= i <= n) or n < 1:
        raise ValueError(f"invalid horn ({n},{i})")
    full = delta(n)
    top = _chain_name(range(n + 1))
    opposite_face = _chain_name(v for v in range(n + 1) if v != i)
    return subcomplex(full, (c for c in full.cell_names if c not in (top, opposite_face)))


def point() -> FiniteSimplicialSet:
    return FiniteSimplicialSet({"pt": ()}, validate=False)


def empty_complex() -> FiniteSimplicialSet:
    return FiniteSimplicialSet({}, validate=False)


def collapse_edge(n: int, a: int) -> FiniteSimplicialSet:
    """Delta^n with the edge (a, a+1) collapsed to the point ``pt``.

    Nondegenerate cells are the vertex chains of Delta^n other than a, a+1
    and their edge; the face landing on the collapsed edge becomes the
    degenerate edge at pt.  Parallel cells (like 02 and 12 when a = 0) stay
    distinct.
    """
    if n < 2 or not (0 <= a < n):
        raise ValueError("collapse needs n >= 2 and an edge (a, a+1) in range")
    dropped = {str(a), str(a + 1), f"{a}{a + 1}"}
    cells: dict[str, tuple[Simplex, ...]] = {"pt": ()}
    for v in range(n + 1):
        if v not in (a, a + 1):
            cells[str(v)] = ()
    for k in range(1, n + 1):
        for chain in itertools.combinations(range(n + 1), k + 1):
            name = _chain_name(chain)
            if name in dropped:
                continue
            faces = []
            for i in range(k + 1):
                sub = chain[:i] + chain[i + 1:]
                sub_name = _chain_name(sub)
                if sub_name == f"{a}{a + 1}":
                    faces.append(Simplex(codegeneracy(0, 0), "pt"))
                elif sub_name in (str(a), str(a + 1)):
                    faces.append(nondeg("pt", 0))
                else:
                    faces.append(nondeg(sub_name, k - 1))
            cells[name] = tuple(faces)
    return FiniteSimplicialSet(cells, validate=False)


def quotient_simplex(n: int) -> FiniteSimplicialSet:
    """Delta^n with the edge 01 collapsed to a point."""
    return collapse_edge(n, 0)


def quotient_horn(n: int) -> FiniteSimplicialSet:
    """Lambda^n_0 with the edge 01 collapsed, as a subcomplex of quotient_simplex."""
    if n < 3:
        raise ValueError("quotient horn needs n >= 3")
    full = quotient_simplex(n)
    top = _chain_name(range(n + 1))
    opposite_face = _chain_name(range(1, n + 1))
    return subcomplex(full, (c for c in full.cell_names if c not in (top, opposite_face)))


def standard_object(kind: str, n: int = 0, i: int = 0) -> FiniteSimplicialSet:
    """Build a named complex: delta, boundary, horn, quotient-simplex, quotient-horn."""
    if kind == "delta":
        return delta(n)
    if kind == "boundary":
        return boundary_delta(n)
    if kind == "horn":
        return horn(n, i)
    if kind == "quotient-simplex":
        return quotient_simplex(n)
    if kind == "quotient-horn":
        return quotient_horn(n)
    if kind == "point":
        return point()
    if kind == "empty":
        return empty_complex()
    raise ValueError(f"unknown standard object {kind!r}")


# ---------------------------------------------------------------------------
# Opposite
# ---------------------------------------------------------------------------

def opposite_simplex(x: Simplex) -> Simplex:
    return Simplex(opposite_surjection(x.eta), x.base)


def opposite(space: FiniteSimplicialSet) -> FiniteSimplicialSet:
    """Same cells, face indices reversed: d_i becomes d_{n-i}."""
    cells = {}
    for name in space.cell_names:
        faces = space.faces_of(name)
        n = space.dim_of(name)
        cells[name] = tuple(opposite_simplex(faces[n - i]) for i in range(n + 1)) if faces else ()
    return FiniteSimplicialSet(cells, validate=False)


# ---------------------------------------------------------------------------
# Products
# ---------------------------------------------------------------------------

def joint_shuffles(p: int, q: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Pairs of surjections ([d]->>[p], [d]->>[q]) that are jointly injective.

    These are the monotone staircase paths from (0,0) to (p,q) with steps
    (1,0), (0,1), (1,1); each path gives the value lists of both surjections.
    """
    def walk(a: int, b: int, xs: list[int], ys: list[int]):
        if a == p and b == q:
            yield tuple(xs), tuple(ys)
            return
        if a < p:
            yield from walk(a + 1, b, xs + [a + 1], ys + [b])
        if b < q:
            yield from walk(a, b + 1, xs + [a], ys + [b + 1])
        if a < p and b < q:
            yield from walk(a + 1, b + 1, xs + [a + 1], ys + [b + 1])

    yield from walk(0, 0, [0], [0])


def joint_normalize(fx: Simplex, fy: Simplex) -> tuple[MonotoneMap, Simplex, Simplex]:
    """Split a componentwise pair into (common degeneracy, reduced pair)."""
    d = fx.dim
    if fy.dim != d:
        raise ValueError("component dimensions differ")
    ex, ey = fx.eta.values, fy.eta.values
    keep = [0] + [j + 1 for j in range(d)
                  if not (ex[j] == ex[j + 1] and ey[j] == ey[j + 1])]
    r = len(keep) - 1
    rho_vals = []
    pos = 0
    for j in range(d + 1):
        if pos + 1 <= r and keep[pos + 1] <= j:
            pos += 1
        rho_vals.append(pos)
    rho = MonotoneMap(d, r, tuple(rho_vals))
    rx = Simplex(MonotoneMap(r, fx.base_dim, tuple(ex[k] for k in keep)), fx.base)
    ry = Simplex(MonotoneMap(r, fy.base_dim, tuple(ey[k] for k in keep)), fy.base)
    return rho, rx, ry


class ProductComplex(FiniteSimplicialSet):
    """X x Y with nondegenerate cells the jointly nondegenerate pairs."""

    def __init__(self, left: FiniteSimplicialSet, right: FiniteSimplicialSet):
        self.left = left
        self.right = right
        comp: dict[str, tuple[Simplex, Simplex]] = {}
        names: dict[tuple[Simplex, Simplex], str] = {}
        order: list[tuple[int, str, tuple[Simplex, Simplex]]] = []
        for bx in left.cell_names:
            p = left.dim_of(bx)
            for by in right.cell_names:
                q = right.dim_of(by)
                for ex, ey in joint_shuffles(p, q):
                    d = len(ex) - 1
                    cx = Simplex(MonotoneMap(d, p, ex), bx)
                    cy = Simplex(MonotoneMap(d, q, ey), by)
                    tx = bx if cx.eta.is_identity else bx + "~" + "".join(map(str, ex))
                    ty = by if cy.eta.is_identity else by + "~" + "".join(map(str, ey))
                    name = f"({tx})x({ty})"
                    comp[name] = (cx, cy)
                    names[(cx, cy)] = name
                    order.append((d, name, (cx, cy)))
        self._components = comp
        self._pair_names = names
        cells: dict[str, tuple[Simplex, ...]] = {}
        for d, name, (cx, cy) in sorted(order, key=lambda t: (t[0], t[1])):
            if d == 0:
                cells[name] = ()
                continue
            faces = []
            for i in range(d + 1):
                fx = left.face(cx, i)
                fy = right.face(cy, i)
                rho, rx, ry = joint_normalize(fx, fy)
                faces.append(Simplex(rho, names[(rx, ry)]))
            cells[name] = tuple(faces)
        super().__init__(cells, validate=False)

    def components_of_cell(self, name: str) -> tuple[Simplex, Simplex]:
        return self._components[name]

    def components(self, x: Simplex) -> tuple[Simplex, Simplex]:
        """Componentwise normal forms of an arbitrary simplex of the product."""
        cx, cy = self._components[x.base]
        return (Simplex(cx.eta.compose(x.eta), cx.base),
                Simplex(cy.eta.compose(x.eta), cy.base))

    def pair(self, cx: Simplex, cy: Simplex) -> Simplex:
        """The simplex of the product with the given componentwise normal forms."""
        rho, rx, ry = joint_normalize(cx, cy)
        return Simplex(rho, self._pair_names[(rx, ry)])


def product(left: FiniteSimplicialSet, right: FiniteSimplicialSet) -> ProductComplex:
    return ProductComplex(left, right)


# ---------------------------------------------------------------------------
# Pushouts
# ---------------------------------------------------------------------------

class PushoutComplex(FiniteSimplicialSet):
    """The pushout of X <- A -> B along a mono A -> X.

    Cells are the cells of B (prefix ``b:``) plus the cells of X outside the
    image of A (prefix ``x:``); faces through the glued part are transported
    along A -> B.
    """

    def __init__(self, f, g):
        from .maps import SSetMap  # local import to avoid a cycle
        if f.source is not g.source:
            raise ValueError("legs must share their source")
        if not f.is_mono():
            raise ValueError("first leg must be injective")
        A, X, B = f.source, f.target, g.target
        glued = {f.image_of_cell(a).base: a for a in A.cell_names}

        def transport(face: Simplex) -> Simplex:
            if face.base in glued:
                gval = g.image_of_cell(glued[face.base])
                return Simplex(gval.eta.compose(face.eta), "b:" + gval.base)
            return Simplex(face.eta, "x:" + face.base)

        cells: dict[str, tuple[Simplex, ...]] = {}
        for b in B.cell_names:
            cells["b:" + b] = tuple(Simplex(fc.eta, "b:" + fc.base) for fc in B.faces_of(b))
        for x in X.cell_names:
            if x in glued:
                continue
            cells["x:" + x] = tuple(transport(fc) for fc in X.faces_of(x))
        super().__init__(cells, validate=False)

        leg_x_assign = {}
        for x in X.cell_names:
            if x in glued:
                gval = g.image_of_cell(glued[x])
                leg_x_assign[x] = Simplex(gval.eta, "b:" + gval.base)
            else:
                leg_x_assign[x] = nondeg("x:" + x, X.dim_of(x))
        leg_b_assign = {b: nondeg("b:" + b, B.dim_of(b)) for b in B.cell_names}
        self.leg_x = SSetMap(X, self, leg_x_assign)
        self.leg_b = SSetMap(B, self, leg_b_assign)


def pushout(f, g) -> PushoutComplex:
    """Pushout of g along the mono f; legs are exposed as .leg_x and .leg_b."""
    return PushoutComplex(f, g)


def disjoint_union(x: FiniteSimplicialSet, y: FiniteSimplicialSet) -> PushoutComplex:
    from .maps import SSetMap
    e = empty_complex()
    return pushout(SSetMap(e, x, {}), SSetMap(e, y, {}))


def skeleton(space: FiniteSimplicialSet, k: int) -> FiniteSimplicialSet:
    return subcomplex(space, (c for c in space.cell_names if space.dim_of(c) <= k))


def relabel(space: FiniteSimplicialSet, mapping: Mapping[str, str]) -> FiniteSimplicialSet:
    """Rename cells; mapping must be injective on the cells it mentions."""
    new = {c: mapping.get(c, c) for c in space.cell_names}
    if len(set(new.values())) != len(new):
        raise ValueError("relabeling collides")
    cells = {}
    for name in space.cell_names:
        cells[new[name]] = tuple(Simplex(fc.eta, new[fc.base]) for fc in space.faces_of(name))
    return FiniteSimplicialSet(cells, validate=False)
