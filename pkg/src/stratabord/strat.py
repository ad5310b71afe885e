"""Filtered complexes as stratified pseudomanifolds.

Validation against the stratified pseudomanifold axioms, stratum enumeration,
links of strata, polyhedral-link desuspension, intrinsic stratification, and
orientation extension.

Sphere recognition is exact through dimension 2 (curves and closed surfaces
are classified combinatorially); above that links are checked at the level of
integral homology and results carry a `heuristic` flag.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from . import algebra
from .complexes import (
    EMPTY,
    OrientationAssignment,
    Simplex,
    SimplicialComplex,
    barycentric_subdivision,
    build_complex,
    empty_complex,
    join,
    link,
    ridges_with_facets,
    simplex,
    suspension,
    verify_orientation,
)
from .errors import (
    DifferentCarrier,
    MalformedFiltration,
    NotClassical,
    NotPseudomanifold,
    NoTopSimplex,
)


def subdiv_limit() -> int:
    try:
        return int(os.environ.get("STRATA_SUBDIV_LIMIT", "2"))
    except ValueError:
        return 2


# ---------------------------------------------------------------------------
# Filtered complexes


@dataclass(frozen=True)
class FilteredComplex:
    complex: SimplicialComplex
    # skeleta[j] for j = 0..n; skeleton −1 is the empty complex.
    skeleta: Tuple[SimplicialComplex, ...]
    boundary: Optional[SimplicialComplex] = None
    orientation: Optional[OrientationAssignment] = None
    classical: bool = True
    heuristic: bool = False

    @property
    def dim(self) -> int:
        return self.complex.dim

    def skeleton(self, j: int) -> SimplicialComplex:
        if j < 0:
            return EMPTY
        if j >= len(self.skeleta):
            return self.complex
        return self.skeleta[j]

    @property
    def singular_set(self) -> SimplicialComplex:
        return self.skeleton(self.dim - 1)

    def same_filtration(self, other: "FilteredComplex") -> bool:
        if self.complex.facets != other.complex.facets:
            return False
        n = max(self.dim, other.dim)
        return all(
            self.skeleton(j).faces == other.skeleton(j).faces for j in range(n)
        )


def make_filtered(
    K: SimplicialComplex,
    skeleta: Optional[Dict[int, Iterable[Simplex]]] = None,
    boundary: Optional[Iterable[Simplex]] = None,
    orientation: Optional[OrientationAssignment] = None,
    classical: bool = True,
    heuristic: bool = False,
) -> FilteredComplex:
    """Assemble a filtration from generating simplices per skeleton index.

    Missing indices inherit the skeleton below; the top skeleton is always the
    whole complex.
    """
    n = K.dim
    skeleta = skeleta or {}
    out: List[SimplicialComplex] = []
    prev = EMPTY
    for j in range(max(n, 0)):
        gens = list(skeleta.get(j, []))
        if gens:
            cur = K.subcomplex(list(prev.facets) + gens)
        else:
            cur = prev
        out.append(cur)
        prev = cur
    out = out + [K] if n >= 0 else []
    B = K.subcomplex(boundary) if boundary is not None else None
    return FilteredComplex(K, tuple(out), B, orientation, classical, heuristic)


def trivial_filtration(
    K: SimplicialComplex,
    boundary: Optional[Iterable[Simplex]] = None,
    orientation: Optional[OrientationAssignment] = None,
) -> FilteredComplex:
    return make_filtered(K, {}, boundary, orientation)


def subdivide_filtered(FX: FilteredComplex):
    """Barycentric subdivision with the induced filtration; returns (FX', provenance)."""
    K2, prov = barycentric_subdivision(FX.complex)
    n = FX.dim
    face_vertex = {f: v for v, f in prov.items()}

    def push(sub: SimplicialComplex) -> List[Simplex]:
        gens = []
        for f in K2.facets:
            if all(prov[v] in sub.faces for v in f):
                gens.append(f)
        # Also keep lower-dimensional pieces that are not under any facet.
        for f in sub.faces:
            gens.append((face_vertex[f],))
        return gens

    skeleta = {}
    for j in range(n):
        sk = FX.skeleton(j)
        if not sk.is_empty():
            skeleta[j] = push(sk)
    boundary = push(FX.boundary) if FX.boundary is not None else None
    out = make_filtered(K2, skeleta, boundary, None, FX.classical, FX.heuristic)
    return out, prov


# ---------------------------------------------------------------------------
# Strata


@dataclass(frozen=True)
class Stratum:
    dim: int
    simplices: FrozenSet[Simplex]
    regular: bool

    @property
    def top_simplices(self) -> List[Simplex]:
        return sorted(s for s in self.simplices if len(s) - 1 == self.dim)


def _check_skeleta(FX: FilteredComplex):
    n = FX.dim
    prev_faces: FrozenSet[Simplex] = frozenset()
    for j in range(n + 1):
        sk = FX.skeleton(j)
        if not sk.faces <= FX.complex.faces:
            raise MalformedFiltration(f"skeleton {j} is not a subcomplex of the carrier")
        if not prev_faces <= sk.faces:
            raise MalformedFiltration(f"skeleton {j-1} not contained in skeleton {j}")
        prev_faces = sk.faces


def strata(FX: FilteredComplex) -> List[Stratum]:
    """Connected components of X^j − X^{j−1} as sets of open simplices."""
    _check_skeleta(FX)
    n = FX.dim
    out: List[Stratum] = []
    for j in range(n + 1):
        opens = set(FX.skeleton(j).faces) - set(FX.skeleton(j - 1).faces)
        if not opens:
            continue
        parent = {s: s for s in opens}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for s in opens:
            for i in range(len(s)):
                f = s[:i] + s[i + 1 :]
                if f in opens:
                    parent[find(s)] = find(f)
        comps: Dict[Simplex, set] = {}
        for s in opens:
            comps.setdefault(find(s), set()).add(s)
        for comp in comps.values():
            out.append(Stratum(j, frozenset(comp), j == n))
    return sorted(out, key=lambda s: (s.dim, min(s.simplices)))


def _restrict_to_skeleta(
    FX: FilteredComplex, L: SimplicialComplex, s: Simplex
) -> FilteredComplex:
    """Filtration induced on the link L of the top stratum simplex s.

    A link simplex τ records the radial directions through the open join of s
    and τ, so it belongs to skeleton t exactly when s ∪ τ lies in
    X^{dim s + 1 + t}.  (Intersecting L with the skeleta directly would
    overcount: a link simplex can lie in the closure of a neighboring stratum
    without the germ at s pointing into it.)
    """
    n = FX.dim
    base_dim = len(s) - 1
    m = n - base_dim - 1
    skeleta = {}
    for t in range(m):
        sk = FX.skeleton(base_dim + 1 + t)
        gens = [f for f in L.faces if tuple(sorted(f + s)) in sk.faces]
        if gens:
            skeleta[t] = gens
    return make_filtered(L, skeleta, None, None, FX.classical, FX.heuristic)


def stratum_link(FX: FilteredComplex, S: Stratum) -> FilteredComplex:
    """Link of a top simplex of the stratum, with the induced shifted filtration.

    If the stratum has no top simplex, the complex is barycentrically
    subdivided (bounded by STRATA_SUBDIV_LIMIT) until one exists.
    """
    if S.regular:
        return trivial_filtration(empty_complex(-1))
    cur, cur_S, rounds = FX, S, 0
    while not cur_S.top_simplices:
        if rounds >= subdiv_limit():
            raise NoTopSimplex("stratum has no top simplex within the subdivision limit")
        ref = max(cur_S.simplices, key=len)
        cur, prov = subdivide_filtered(cur)
        rounds += 1
        vert = next(v for v, f in prov.items() if f == ref)
        cur_S = next(T for T in strata(cur) if (vert,) in T.simplices)
    s = cur_S.top_simplices[0]
    L = link(cur.complex, s)
    return _restrict_to_skeleta(cur, L, s)


# ---------------------------------------------------------------------------
# Sphere and ball surrogates


class _Flag:
    """Mutable heuristic marker threaded through recognition routines."""

    def __init__(self):
        self.heuristic = False


_sphere_memo: Dict[FrozenSet[Simplex], Tuple[bool, bool]] = {}


def connected_components(K: SimplicialComplex) -> int:
    verts = list(K.vertices)
    if not verts:
        return 0
    parent = {v: v for v in verts}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for f in K.facets:
        for v in f[1:]:
            parent[find(v)] = find(f[0])
    return len({find(v) for v in verts})


def _is_closed_pseudo(K: SimplicialComplex) -> bool:
    if not K.is_pure:
        return False
    return all(len(fs) == 2 for fs in ridges_with_facets(K).values())


def is_circle(K: SimplicialComplex) -> bool:
    if K.dim != 1 or not K.is_pure:
        return False
    deg: Dict[int, int] = {}
    for e in K.facets:
        for v in e:
            deg[v] = deg.get(v, 0) + 1
    return all(d == 2 for d in deg.values()) and connected_components(K) == 1


def _surface_type(K: SimplicialComplex):
    """(orientable, χ) of a closed connected surface, or None."""
    if K.dim != 2 or not _is_closed_pseudo(K):
        return None
    for v in K.vertices:
        if not is_circle(link(K, (v,))):
            return None
    if connected_components(K) != 1:
        return None
    from .complexes import is_orientable

    return (is_orientable(K), K.euler_characteristic())


def sphere_like(K: SimplicialComplex, flag: Optional[_Flag] = None) -> bool:
    """Is K (a candidate link) a sphere?  Exact for dim ≤ 2, homology level above."""
    key = K.facets
    hit = _sphere_memo.get(key)
    if hit is not None:
        verdict, heur = hit
        if heur and flag is not None:
            flag.heuristic = True
        return verdict
    verdict, heur = _sphere_like_raw(K)
    _sphere_memo[key] = (verdict, heur)
    if heur and flag is not None:
        flag.heuristic = True
    return verdict


def _sphere_like_raw(K: SimplicialComplex) -> Tuple[bool, bool]:
    if K.is_empty():
        return True, False
    d = K.dim
    if d == 0:
        return len(K.vertices) == 2, False
    if d == 1:
        return is_circle(K), False
    if d == 2:
        return _surface_type(K) == (True, 2), False
    if not _is_closed_pseudo(K) or connected_components(K) != 1:
        return False, False
    if K.euler_characteristic() != (2 if d % 2 == 0 else 0):
        return False, False
    groups = algebra.homology(K, algebra.ZZ)
    want = [algebra.HomologyGroup(1)] + [algebra.HomologyGroup(0)] * (d - 1) + [
        algebra.HomologyGroup(1)
    ]
    return groups == want, True


def ball_like(K: SimplicialComplex, flag: Optional[_Flag] = None) -> bool:
    """Is K plausibly a cone (contractible)?  Literal cones pass immediately."""
    if K.is_empty():
        return False
    apexes = set(K.vertices)
    for f in K.facets:
        apexes &= set(f)
        if not apexes:
            break
    if apexes:
        return True
    if connected_components(K) != 1 or K.euler_characteristic() != 1:
        return False
    groups = algebra.homology(K, algebra.ZZ, reduced=True)
    if flag is not None and K.dim > 2:
        flag.heuristic = True
    return all(g == algebra.HomologyGroup(0) for g in groups)


# ---------------------------------------------------------------------------
# Germ invariants and intrinsic stratification

_inv_memo: Dict[FrozenSet[Simplex], Tuple[object, bool]] = {}


def octahedral_sphere(d: int) -> SimplicialComplex:
    """The d-fold join of S⁰ with itself: a (d−1)-sphere on 2d vertices."""
    K = empty_complex(-1)
    for _ in range(d):
        K = suspension(K)
    return K


def complex_invariant(K: SimplicialComplex, flag: Optional[_Flag] = None):
    """A PL-homeomorphism invariant of a compact polyhedron.

    Exact classification in dimension ≤ 2 for the pseudomanifold cases; above
    that the invariant combines integral homology with the recursive multiset
    of germ invariants of the singular strata, and is heuristic.
    """
    key = K.facets
    hit = _inv_memo.get(key)
    if hit is not None:
        inv, heur = hit
        if heur and flag is not None:
            flag.heuristic = True
        return inv
    local = _Flag()
    inv = _complex_invariant_raw(K, local)
    _inv_memo[key] = (inv, local.heuristic)
    if local.heuristic and flag is not None:
        flag.heuristic = True
    return inv


def _complex_invariant_raw(K: SimplicialComplex, flag: _Flag):
    if K.is_empty():
        return ("empty",)
    d = K.dim
    if d == 0:
        return ("points", len(K.vertices))
    if d == 1 and _is_closed_pseudo(K):
        return ("curves", connected_components(K))
    if d == 2:
        t = _surface_type(K)
        if t is not None:
            return ("surface", t)
    if d >= 3:
        flag.heuristic = True
    hom = tuple((g.rank, g.torsion) for g in algebra.homology(K, algebra.ZZ))
    regular, classes = germ_partition(K, flag)
    comps = _singular_components(classes)
    multiset = sorted(
        (max(len(s) - 1 for s in comp), classes[next(iter(comp))])
        for comp in comps
    )
    return ("cx", d, hom, tuple(multiset))


def germ_invariant(K: SimplicialComplex, s: Simplex, flag: _Flag):
    """Invariant of the polyhedral link of an interior point of the face s.

    The polyhedral link is S^{d−1} * link(s) for d = dim s; it is materialized
    with an octahedral sphere factor so that literal join structure survives.
    """
    L = link(K, s)
    d = len(s) - 1
    if d == 0:
        P = L
    else:
        P = join(octahedral_sphere(d), L)
    return complex_invariant(P, flag)


def germ_partition(K: SimplicialComplex, flag: Optional[_Flag] = None):
    """Split the faces of K into regular ones and germ-invariant classes.

    Returns (regular_faces, classes) where classes maps each singular face to
    its germ invariant.
    """
    if flag is None:
        flag = _Flag()
    regular = set()
    classes: Dict[Simplex, object] = {}
    for f in sorted(K.faces, key=lambda f: (-len(f), f)):
        if sphere_like(link(K, f), flag):
            regular.add(f)
        else:
            classes[f] = germ_invariant(K, f, flag)
    return regular, classes


def _singular_components(classes: Dict[Simplex, object]) -> List[set]:
    """Connected components of same-invariant singular faces under face adjacency."""
    parent = {s: s for s in classes}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for s in classes:
        for i in range(len(s)):
            f = s[:i] + s[i + 1 :]
            if f in classes and classes[f] == classes[s]:
                parent[find(s)] = find(f)
    comps: Dict[Simplex, set] = {}
    for s in classes:
        comps.setdefault(find(s), set()).add(s)
    return list(comps.values())


def check_pseudomanifold(K: SimplicialComplex, closed: bool = True):
    """Clauses (a)–(d) for the trivial filtration; raises NotPseudomanifold."""
    if K.is_empty():
        return
    if not K.is_pure:
        raise NotPseudomanifold("complex is not pure")
    for r, fs in ridges_with_facets(K).items():
        if len(fs) > 2 or (closed and len(fs) != 2):
            raise NotPseudomanifold(f"ridge {r} lies in {len(fs)} facets")


def intrinsic_stratification(K: SimplicialComplex) -> FilteredComplex:
    """The coarsest stratification, via the iterated germ-invariant partition."""
    check_pseudomanifold(K, closed=True)
    if K.is_empty():
        return trivial_filtration(K)
    flag = _Flag()
    regular, classes = germ_partition(K, flag)
    comps = _singular_components(classes)
    n = K.dim
    skeleta: Dict[int, List[Simplex]] = {}
    for comp in comps:
        d = max(len(s) - 1 for s in comp)
        if d >= n - 1:
            raise NotPseudomanifold(
                "intrinsic partition produced a codimension-one singular class"
            )
        skeleta.setdefault(d, []).extend(sorted(comp))
    return make_filtered(K, skeleta, None, None, True, flag.heuristic)


def coarsens(FXcoarse: FilteredComplex, FXfine: FilteredComplex) -> bool:
    """True iff every stratum of the fine filtration sits inside one coarse stratum."""
    if FXcoarse.complex.facets != FXfine.complex.facets:
        raise DifferentCarrier("filtrations live on different carriers")
    where: Dict[Simplex, int] = {}
    for idx, S in enumerate(strata(FXcoarse)):
        for s in S.simplices:
            where[s] = idx
    for S in strata(FXfine):
        ids = {where[s] for s in S.simplices}
        if len(ids) != 1:
            return False
    return True


# ---------------------------------------------------------------------------
# Polyhedral link decomposition


@dataclass(frozen=True)
class LinkDecomposition:
    suspension_count: int
    core: FilteredComplex
    reconstruction_checked: Optional[bool]
    heuristic: bool


def literal_desuspension(K: SimplicialComplex) -> Tuple[int, SimplicialComplex]:
    """Strip literal {n,s}*Z join structure as often as possible."""
    j = 0
    while True:
        found = None
        if K.is_empty() or K.dim < 0:
            break
        for a in K.vertices:
            La = link(K, (a,))
            for b in K.vertices:
                if b <= a or (a, b) in K.faces:
                    continue
                if link(K, (b,)).facets != La.facets:
                    continue
                # Every facet must contain one of the poles.
                if all(a in f or b in f for f in K.facets):
                    found = La
                    break
            if found is not None:
                break
        if found is None:
            break
        K = found
        j += 1
    return j, K


def polyhedral_link_decomposition(FX: FilteredComplex, x: int) -> LinkDecomposition:
    """Desuspension of the polyhedral link of the vertex x off the boundary."""
    from .errors import BoundaryPoint

    if FX.boundary is not None and (x,) in FX.boundary.faces:
        raise BoundaryPoint(f"vertex {x} lies on the boundary")
    FXstar = intrinsic_stratification(FX.complex)
    target = None
    for S in strata(FXstar):
        if (x,) in S.simplices:
            target = S
            break
    if target is None:
        raise MalformedFiltration(f"vertex {x} not found in any stratum")
    if target.regular:
        j = FX.dim
        core = trivial_filtration(empty_complex(-1))
    else:
        j = target.dim
        core = stratum_link(FXstar, target)
    recon = None
    Lk = link(FX.complex, (x,))
    model = core.complex
    for _ in range(j):
        model = suspension(model)
    from .iso import isomorphic

    recon = isomorphic(model, Lk) is not None
    return LinkDecomposition(j, core, recon, FXstar.heuristic)


# ---------------------------------------------------------------------------
# Orientation extension


def extend_orientation_to_intrinsic(FX: FilteredComplex) -> OrientationAssignment:
    """The unique orientation of the intrinsic regular part restricting to 𝒪."""
    if not FX.classical:
        raise NotClassical("orientation extension requires a classical stratification")
    if FX.orientation is None:
        raise NotClassical("input carries no orientation")
    FXstar = intrinsic_stratification(FX.complex)
    n = FX.dim
    sing = FXstar.skeleton(n - 1)
    skip = frozenset(f for f in sing.faces if len(f) == n)
    oa = FX.orientation
    if not verify_orientation(FX.complex, oa, skip_ridges=skip):
        raise NotClassical(
            "orientation does not extend over the intrinsic regular part"
        )
    return oa


# ---------------------------------------------------------------------------
# Validation


@dataclass(frozen=True)
class ClauseResult:
    clause: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    mode: str
    passed: bool
    clauses: Tuple[ClauseResult, ...]
    heuristic: bool
    note: str = ""

    def clause(self, name: str) -> ClauseResult:
        for c in self.clauses:
            if c.clause == name:
                return c
        raise KeyError(name)

    def failing(self) -> List[str]:
        return [c.clause for c in self.clauses if not c.passed]


def _cofacet_links(K: SimplicialComplex) -> Dict[Simplex, List[Simplex]]:
    """For every face, the link facets (complements inside containing facets)."""
    import itertools

    out: Dict[Simplex, List[Simplex]] = {}
    for F in K.facets:
        for k in range(1, len(F) + 1):
            for sub in itertools.combinations(F, k):
                rest = tuple(v for v in F if v not in sub)
                out.setdefault(sub, []).append(rest)
    return out


def validate_stratified_pseudomanifold(
    FX: FilteredComplex, mode: str = "closed", _depth: int = 0
) -> ValidationReport:
    """Clause-by-clause validation; see the module docstring for exactness levels."""
    if mode not in ("closed", "with-boundary"):
        raise ValueError("mode must be 'closed' or 'with-boundary'")
    K = FX.complex
    n = FX.dim
    flag = _Flag()
    clauses: List[ClauseResult] = []

    if K.is_empty():
        clauses = [ClauseResult(c, True, "empty complex") for c in "abcdefg"[: 7]]
        return ValidationReport(mode, True, tuple(clauses), False, "empty pseudomanifold")

    # (a) nesting
    ok_a, det_a = True, ""
    prev_faces: FrozenSet[Simplex] = frozenset()
    for j in range(n + 1):
        sk = FX.skeleton(j)
        if not sk.faces <= K.faces:
            raise MalformedFiltration(f"skeleton {j} is not a subcomplex of the carrier")
        if not prev_faces <= sk.faces:
            ok_a, det_a = False, f"skeleton {j-1} not contained in skeleton {j}"
            break
        if j < n and sk.dim > j:
            ok_a, det_a = False, f"skeleton {j} has dimension {sk.dim}"
            break
        prev_faces = sk.faces
    clauses.append(ClauseResult("a", ok_a, det_a))

    # (b) totally n-dimensional
    ok_b = K.is_pure
    clauses.append(ClauseResult("b", ok_b, "" if ok_b else "carrier is not pure"))

    if not (ok_a and ok_b):
        return ValidationReport(mode, False, tuple(clauses), flag.heuristic)

    # (c) density of the regular part
    sing_faces = FX.skeleton(n - 1).faces
    regular_facets = [f for f in K.facets if f not in sing_faces]
    covered = set()
    import itertools as _it

    for f in regular_facets:
        for k in range(1, len(f) + 1):
            covered.update(_it.combinations(f, k))
    missing = K.faces - covered
    ok_c = not missing
    clauses.append(
        ClauseResult("c", ok_c, "" if ok_c else f"face {min(missing)} misses the regular part")
    )

    # (d) classical
    same = FX.skeleton(n - 1).faces == FX.skeleton(n - 2).faces
    if FX.classical:
        clauses.append(
            ClauseResult("d", same, "" if same else "codimension-one stratum present")
        )
    else:
        clauses.append(ClauseResult("d", True, "classical flag unset; not required"))

    if not all(c.passed for c in clauses):
        return ValidationReport(mode, False, tuple(clauses), flag.heuristic)

    # Ridge degrees: interior ridges in two facets, boundary ridges in one.
    boundary = FX.boundary if FX.boundary is not None else EMPTY
    ok_ridge, det_ridge = True, ""
    for r, fs in ridges_with_facets(K).items():
        if len(fs) > 2:
            ok_ridge, det_ridge = False, f"ridge {r} lies in {len(fs)} facets"
            break
        if len(fs) == 1:
            if mode == "closed" or r not in boundary.faces:
                ok_ridge, det_ridge = False, f"ridge {r} is free but not boundary"
                break
        elif r in boundary.faces:
            ok_ridge, det_ridge = False, f"boundary ridge {r} is interior"
            break

    # (e) stratum manifoldness via link checks
    all_strata = strata(FX)
    ok_e, det_e = ok_ridge, det_ridge
    if ok_e:
        for S in all_strata:
            # Links inside the open stratum, via one pass over cofaces.
            lk_map: Dict[Simplex, List[Simplex]] = {s: [] for s in S.simplices}
            for t in S.simplices:
                for k in range(1, len(t)):
                    for sub in itertools.combinations(t, k):
                        if sub in lk_map:
                            lk_map[sub].append(
                                tuple(v for v in t if v not in sub)
                            )
            for s in sorted(S.simplices):
                L = build_complex(lk_map[s], empty_ok=True)
                want = S.dim - (len(s) - 1) - 1
                on_boundary = s in boundary.faces
                if want < 0:
                    ok = L.is_empty()
                elif on_boundary:
                    ok = ball_like(L, flag)
                else:
                    ok = sphere_like(L, flag) and L.dim == want
                if not ok:
                    ok_e = False
                    det_e = f"stratum link of {s} is not a {want}-sphere"
                    break
            if not ok_e:
                break
    clauses.append(ClauseResult("e", ok_e, det_e))

    # (f) recursive link condition on singular strata
    ok_f, det_f = True, ""
    if _depth < 12:
        for S in all_strata:
            if S.regular:
                continue
            tops = S.top_simplices
            if not tops:
                try:
                    LF = stratum_link(FX, S)
                except NoTopSimplex:
                    ok_f, det_f = False, f"stratum of dim {S.dim} has no top simplex"
                    break
                sub_links = [LF]
            else:
                sub_links = []
                seen = set()
                for s in tops:
                    L = link(K, s)
                    if L.facets in seen:
                        continue
                    seen.add(L.facets)
                    sub_links.append(_restrict_to_skeleta(FX, L, s))
            for LF in sub_links:
                if LF.dim != n - S.dim - 1:
                    ok_f = False
                    det_f = f"link of stratum dim {S.dim} has dimension {LF.dim}"
                    break
                rep = validate_stratified_pseudomanifold(LF, "closed", _depth + 1)
                if rep.heuristic:
                    flag.heuristic = True
                if not rep.passed:
                    ok_f = False
                    det_f = (
                        f"link of stratum dim {S.dim} fails clauses {rep.failing()}"
                    )
                    break
            if not ok_f:
                break
    clauses.append(ClauseResult("f", ok_f, det_f))

    # (g) boundary clauses
    if mode == "with-boundary":
        ok_g, det_g = True, ""
        if FX.boundary is None:
            bd = [r for r, fs in ridges_with_facets(K).items() if len(fs) == 1]
            if bd:
                ok_g, det_g = False, "free ridges exist but no boundary is designated"
        else:
            B = FX.boundary
            # Induced filtration B^i = X^{i+1} ∩ B must make B a closed
            # stratified pseudomanifold of dimension n−1.
            bsk = {}
            for i in range(n - 1):
                gens = [f for f in B.faces if f in FX.skeleton(i + 1).faces]
                if gens:
                    bsk[i] = gens
            if B.dim != n - 1:
                ok_g, det_g = False, f"boundary has dimension {B.dim}"
            else:
                BF = make_filtered(B, bsk, None, None, FX.classical)
                rep = validate_stratified_pseudomanifold(BF, "closed", _depth + 1)
                if rep.heuristic:
                    flag.heuristic = True
                if not rep.passed:
                    ok_g, det_g = False, f"boundary fails clauses {rep.failing()}"
            if ok_g:
                # Collar necessary condition: links of boundary faces are cones.
                cof = _cofacet_links(K)
                for s in sorted(B.faces):
                    L = build_complex(
                        [t for t in cof.get(s, []) if t], empty_ok=True
                    )
                    if not ball_like(L, flag):
                        ok_g = False
                        det_g = f"link of boundary face {s} is not a cone"
                        break
        clauses.append(ClauseResult("g", ok_g, det_g))

    passed = all(c.passed for c in clauses)
    note = (
        "verified up to homology-level link checks" if passed and flag.heuristic else ""
    )
    return ValidationReport(mode, passed, tuple(clauses), flag.heuristic, note)
