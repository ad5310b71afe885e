"""Core abstract simplicial complex machinery.

Simplices are strictly increasing tuples of integer vertex ids.  A complex is
determined by its facets (maximal faces); the full face lattice is derived on
demand and cached.  All values are immutable and every operation is a pure
function.

The empty complex is first class and carries a nominal dimension tag, so that
"an empty pseudomanifold of dimension n" is representable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from .errors import EmptyInput, NotOrientable, NotPure, RidgeDegreeViolation, SimplexNotFound

Simplex = Tuple[int, ...]


def simplex(vertices: Iterable[int]) -> Simplex:
    """Canonical form of a simplex: sorted tuple of distinct vertices."""
    return tuple(sorted(set(vertices)))


@dataclass(frozen=True)
class SimplicialComplex:
    facets: FrozenSet[Simplex]
    # Nominal dimension, only meaningful for the empty complex.
    empty_dim: int = -1

    @cached_property
    def dim(self) -> int:
        if not self.facets:
            return self.empty_dim
        return max(len(f) for f in self.facets) - 1

    @cached_property
    def vertices(self) -> Tuple[int, ...]:
        vs = set()
        for f in self.facets:
            vs.update(f)
        return tuple(sorted(vs))

    @cached_property
    def faces(self) -> FrozenSet[Simplex]:
        """All nonempty faces of all facets."""
        out = set()
        for f in self.facets:
            for k in range(1, len(f) + 1):
                out.update(itertools.combinations(f, k))
        return frozenset(out)

    @cached_property
    def _faces_by_dim(self) -> Dict[int, List[Simplex]]:
        buckets: Dict[int, List[Simplex]] = {}
        for f in self.faces:
            buckets.setdefault(len(f) - 1, []).append(f)
        for d in buckets:
            buckets[d].sort()
        return buckets

    def faces_of_dim(self, d: int) -> List[Simplex]:
        return self._faces_by_dim.get(d, [])

    def __contains__(self, s) -> bool:
        s = tuple(s)
        return s in self.faces

    def is_empty(self) -> bool:
        return not self.facets

    @cached_property
    def is_pure(self) -> bool:
        if not self.facets:
            return True
        return len({len(f) for f in self.facets}) == 1

    def f_vector(self) -> List[int]:
        return [len(self.faces_of_dim(d)) for d in range(self.dim + 1)]

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * len(self.faces_of_dim(d)) for d in range(self.dim + 1))

    def subcomplex(self, generators: Iterable[Simplex]) -> "SimplicialComplex":
        """The subcomplex generated by the given simplices (closure under faces)."""
        gens = [simplex(g) for g in generators]
        for g in gens:
            if g not in self:
                raise SimplexNotFound(f"simplex {g} not in complex")
        return build_complex(gens, empty_ok=True, empty_dim=-1)

    def relabel(self, vmap: Dict[int, int]) -> "SimplicialComplex":
        return SimplicialComplex(
            frozenset(simplex(vmap[v] for v in f) for f in self.facets), self.empty_dim
        )


def build_complex(
    facets: Iterable[Iterable[int]], empty_ok: bool = False, empty_dim: int = -1
) -> SimplicialComplex:
    """Build a complex from facet lists, deduplicating and absorbing non-maximal faces."""
    fs = sorted({simplex(f) for f in facets}, key=len, reverse=True)
    if not fs:
        if not empty_ok:
            raise EmptyInput("no facets given; pass empty_ok for the empty complex")
        return SimplicialComplex(frozenset(), empty_dim)
    maximal: List[Simplex] = []
    for f in fs:
        fset = set(f)
        if any(fset <= set(m) for m in maximal):
            continue
        maximal.append(f)
    return SimplicialComplex(frozenset(maximal))


EMPTY = SimplicialComplex(frozenset(), -1)


def empty_complex(dim: int = -1) -> SimplicialComplex:
    return SimplicialComplex(frozenset(), dim)


def link(K: SimplicialComplex, s: Iterable[int]) -> SimplicialComplex:
    """link(K, s) = { t : t disjoint from s and t ∪ s ∈ K }."""
    s = simplex(s)
    if s not in K:
        raise SimplexNotFound(f"simplex {s} not in complex")
    sset = set(s)
    out = []
    for f in K.facets:
        if sset <= set(f):
            rest = tuple(v for v in f if v not in sset)
            if rest:
                out.append(rest)
    if not out:
        return EMPTY
    return build_complex(out)


def star(K: SimplicialComplex, s: Iterable[int]) -> SimplicialComplex:
    """Closed star: subcomplex generated by facets containing s."""
    s = simplex(s)
    if s not in K:
        raise SimplexNotFound(f"simplex {s} not in complex")
    sset = set(s)
    return build_complex([f for f in K.facets if sset <= set(f)])


def _shift_map(K: SimplicialComplex, offset: int) -> Dict[int, int]:
    return {v: v + offset for v in K.vertices}


def join(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    """Join of two complexes; L is relabeled above K's vertices when they collide.

    Use join_with_maps to recover the relabeling.
    """
    return join_with_maps(K, L)[0]


def join_with_maps(K, L):
    kmap = {v: v for v in K.vertices}
    if set(K.vertices) & set(L.vertices):
        offset = (max(K.vertices) + 1 if K.vertices else 0) - (
            min(L.vertices) if L.vertices else 0
        )
        lmap = _shift_map(L, offset)
    else:
        lmap = {v: v for v in L.vertices}
    if K.is_empty() and L.is_empty():
        return EMPTY, kmap, lmap
    if K.is_empty():
        return L.relabel(lmap), kmap, lmap
    if L.is_empty():
        return K, kmap, lmap
    facets = [
        tuple(sorted(f + tuple(lmap[v] for v in g)))
        for f in K.facets
        for g in L.facets
    ]
    return build_complex(facets), kmap, lmap


def cone(K: SimplicialComplex, apex: Optional[int] = None) -> SimplicialComplex:
    """K * {apex}.  cone(∅) is a single point (the cone vertex)."""
    if apex is None:
        apex = (max(K.vertices) + 1) if K.vertices else 0
    if K.is_empty():
        return build_complex([[apex]])
    if apex in K.vertices:
        raise ValueError("apex collides with an existing vertex")
    return build_complex([f + (apex,) for f in K.facets])


def suspension(
    K: SimplicialComplex, north: Optional[int] = None, south: Optional[int] = None
) -> SimplicialComplex:
    """K * {north, south} with no edge between the two poles.  suspension(∅) = S⁰."""
    top = (max(K.vertices) + 1) if K.vertices else 0
    if north is None:
        north = top
    if south is None:
        south = max(top, north + 1)
    if north == south or north in K.vertices or south in K.vertices:
        raise ValueError("pole vertices must be fresh and distinct")
    if K.is_empty():
        return build_complex([[north], [south]])
    return build_complex(
        [f + (north,) for f in K.facets] + [f + (south,) for f in K.facets]
    )


def suspension_poles(K: SimplicialComplex) -> Tuple[int, int]:
    """The pole ids suspension(K) uses by default."""
    top = (max(K.vertices) + 1) if K.vertices else 0
    return top, top + 1


def product_vertex_map(K: SimplicialComplex, L: SimplicialComplex) -> Dict[Tuple[int, int], int]:
    """Lexicographic numbering of the vertex pairs of a product."""
    pairs = [(u, v) for u in K.vertices for v in L.vertices]
    return {p: i for i, p in enumerate(pairs)}


def product(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    """Staircase triangulation of |K|×|L| on the lexicographically ordered vertex pairs."""
    return product_with_map(K, L)[0]


def product_with_map(K, L):
    if K.is_empty() or L.is_empty():
        raise EmptyInput("product factors must be non-empty")
    vmap = product_vertex_map(K, L)
    facets = []
    for f in K.facets:
        p = len(f) - 1
        for g in L.facets:
            q = len(g) - 1
            # Monotone staircase paths from (0,0) to (p,q): choose the
            # positions of the p steps in the first factor.
            for steps in itertools.combinations(range(p + q), p):
                i = j = 0
                verts = [vmap[(f[0], g[0])]]
                for pos in range(p + q):
                    if pos in steps:
                        i += 1
                    else:
                        j += 1
                    verts.append(vmap[(f[i], g[j])])
                facets.append(verts)
    return build_complex(facets), vmap


def barycentric_subdivision(K: SimplicialComplex):
    """Barycentric subdivision, with the face-to-vertex provenance map.

    Returns (subdivided complex, provenance) where provenance maps each new
    vertex id to the face of K it subdivides.
    """
    if K.is_empty():
        return K, {}
    faces = sorted(K.faces, key=lambda f: (len(f), f))
    vertex_of = {f: i for i, f in enumerate(faces)}
    provenance = {i: f for f, i in vertex_of.items()}
    facets = []
    for f in K.facets:
        for perm in itertools.permutations(f):
            chain = [vertex_of[tuple(sorted(perm[: k + 1]))] for k in range(len(perm))]
            facets.append(chain)
    return build_complex(facets), provenance


def ridges_with_facets(K: SimplicialComplex) -> Dict[Simplex, List[Simplex]]:
    """Map each (n−1)-face to the sorted list of facets containing it."""
    out: Dict[Simplex, List[Simplex]] = {}
    for f in sorted(K.facets):
        for i in range(len(f)):
            r = f[:i] + f[i + 1 :]
            out.setdefault(r, []).append(f)
    return out


def boundary_subcomplex(K: SimplicialComplex) -> SimplicialComplex:
    """Subcomplex generated by the ridges lying in exactly one facet."""
    if K.is_empty():
        return K
    if not K.is_pure:
        raise NotPure("boundary is defined for pure complexes only")
    rim = [r for r, fs in ridges_with_facets(K).items() if len(fs) == 1]
    if not rim:
        return EMPTY
    return build_complex(rim)


def incidence(facet: Simplex, ridge: Simplex) -> int:
    """Sign of ridge in the boundary of facet, both in sorted vertex order."""
    extra = set(facet) - set(ridge)
    if len(extra) != 1:
        raise ValueError("not a ridge of the facet")
    return (-1) ** facet.index(extra.pop())


@dataclass(frozen=True)
class OrientationAssignment:
    """Signs per facet relative to the sorted vertex order of each facet."""

    signs: Dict[Simplex, int] = field(hash=False)

    def reversed(self) -> "OrientationAssignment":
        return OrientationAssignment({f: -s for f, s in self.signs.items()})

    def restrict(self, facets: Iterable[Simplex]) -> "OrientationAssignment":
        return OrientationAssignment({f: self.signs[f] for f in facets})


def verify_orientation(
    K: SimplicialComplex,
    oa: OrientationAssignment,
    skip_ridges: Optional[FrozenSet[Simplex]] = None,
) -> bool:
    """Check coherence: induced orientations cancel across every interior ridge.

    Ridges listed in skip_ridges (e.g. those inside a singular set) are exempt.
    """
    for r, fs in ridges_with_facets(K).items():
        if len(fs) != 2:
            continue
        if skip_ridges and r in skip_ridges:
            continue
        f1, f2 = fs
        if (
            oa.signs[f1] * incidence(f1, r) + oa.signs[f2] * incidence(f2, r)
            != 0
        ):
            return False
    return True


def orient(
    K: SimplicialComplex, skip_ridges: Optional[FrozenSet[Simplex]] = None
) -> OrientationAssignment:
    """Coherent orientation by sign propagation over facet-ridge adjacency.

    The first facet of each component (in sorted order) gets +1 on its sorted
    vertex order.  Raises NotOrientable with a witness facet cycle when signs
    conflict, or RidgeDegreeViolation when a non-skipped ridge lies in more
    than two facets.
    """
    if K.is_empty():
        return OrientationAssignment({})
    if not K.is_pure:
        raise NotPure("orientation is defined for pure complexes only")
    adj: Dict[Simplex, List[Tuple[Simplex, Simplex]]] = {f: [] for f in K.facets}
    for r, fs in ridges_with_facets(K).items():
        if skip_ridges and r in skip_ridges:
            continue
        if len(fs) > 2:
            raise RidgeDegreeViolation(f"ridge {r} lies in {len(fs)} facets")
        if len(fs) == 2:
            adj[fs[0]].append((fs[1], r))
            adj[fs[1]].append((fs[0], r))
    signs: Dict[Simplex, int] = {}
    parent: Dict[Simplex, Optional[Simplex]] = {}
    for root in sorted(K.facets):
        if root in signs:
            continue
        signs[root] = 1
        parent[root] = None
        queue = [root]
        while queue:
            f = queue.pop()
            for g, r in adj[f]:
                forced = -signs[f] * incidence(f, r) * incidence(g, r)
                if g not in signs:
                    signs[g] = forced
                    parent[g] = f
                    queue.append(g)
                elif signs[g] != forced:
                    witness = _facet_cycle(parent, f, g)
                    raise NotOrientable("complex is not orientable", witness)
    return OrientationAssignment(signs)


def _facet_cycle(parent, f, g):
    """Cycle of facets witnessing an orientation conflict, via tree paths."""

    def path(x):
        out = [x]
        while parent[x] is not None:
            x = parent[x]
            out.append(x)
        return out

    pf, pg = path(f), path(g)
    common = set(pf) & set(pg)
    cut_f = next(i for i, x in enumerate(pf) if x in common)
    cut_g = next(i for i, x in enumerate(pg) if x in common)
    return pf[: cut_f + 1] + list(reversed(pg[:cut_g]))


def is_orientable(K: SimplicialComplex) -> bool:
    try:
        orient(K)
        return True
    except NotOrientable:
        return False


def boundary_orientation(
    K: SimplicialComplex, oa: OrientationAssignment
) -> OrientationAssignment:
    """Induced orientation of the boundary subcomplex: sign = sign(F)·incidence."""
    signs = {}
    for r, fs in ridges_with_facets(K).items():
        if len(fs) == 1:
            f = fs[0]
            signs[r] = oa.signs[f] * incidence(f, r)
    return OrientationAssignment(signs)
