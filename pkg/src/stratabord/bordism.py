"""Explicit stratified bordisms.

The central construction realizes the bordism from a stratified pseudomanifold
X to its intrinsic stratification X* on the carrier |I × X|: the cylinder is
stratified like the given filtration near one end, intrinsically near the
other, with the middle level carrying the interface strata (the truncated
half-intrinsic suspension).  On top of that sit half-intrinsic suspensions,
cylinders with collared corners, gluing along boundary pieces, and
restratification of a given bordism.

Certificates are proofs-carried-with-data: they store the filtered carrier,
labeled boundary pieces with isomorphisms and signs, and collar data, and can
be re-verified from scratch.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .complexes import (
    OrientationAssignment,
    Simplex,
    SimplicialComplex,
    boundary_orientation,
    boundary_subcomplex,
    build_complex,
    incidence,
    link,
    orient,
    product_with_map,
    ridges_with_facets,
    suspension,
    suspension_poles,
)
from .errors import (
    CollarMissing,
    DifferentCarrier,
    IncompatibleOrientations,
    InternalInvariantBreach,
    IsomorphismMissing,
    NoIsomorphism,
    NotClassical,
    NotClosed,
    NotValidated,
    SignClash,
)
from .iso import LabeledIsomorphism, isomorphic
from .strat import (
    FilteredComplex,
    _Flag,
    _singular_components,
    extend_orientation_to_intrinsic,
    germ_invariant,
    intrinsic_stratification,
    make_filtered,
    sphere_like,
    strata,
    validate_stratified_pseudomanifold,
)


# ---------------------------------------------------------------------------
# Certificates


@dataclass(frozen=True)
class CollarCertificate:
    kind: str  # "product" or "corner"
    # product: pairs (boundary vertex, inward neighbor at the next level);
    # corner: pairs of corner vertices plus the shared unfolding scheme.
    data: Tuple[Tuple[int, int], ...]


@dataclass(frozen=True)
class BoundaryPiece:
    label: str
    space: FilteredComplex
    iso: LabeledIsomorphism
    sign: int  # +1 or -1


@dataclass(frozen=True)
class BordismCertificate:
    Y: FilteredComplex
    pieces: Tuple[BoundaryPiece, ...]
    collars: Dict[str, CollarCertificate]
    provenance: str

    def piece(self, label: str) -> BoundaryPiece:
        for p in self.pieces:
            if p.label == label:
                return p
        raise KeyError(label)


def reverse_certificate(cert: BordismCertificate) -> BordismCertificate:
    """Orientation reversal: flips the carrier orientation and all piece signs."""
    oa = cert.Y.orientation.reversed() if cert.Y.orientation else None
    Y = dataclasses.replace(cert.Y, orientation=oa)
    pieces = tuple(dataclasses.replace(p, sign=-p.sign) for p in cert.pieces)
    return BordismCertificate(Y, pieces, cert.collars, f"reversed({cert.provenance})")


# The corner-unfolding scheme: a square with its upper-right quarter deleted
# (an L of three unit squares, six triangles) is simplicially homeomorphic to
# a straight strip; the bent path G-H-E-F-C becomes the flat bottom edge.
#   A(0,0) B(1,0) C(2,0) D(0,1) E(1,1) F(2,1) G(0,2) H(1,2)
_A, _B, _C, _D, _E, _F, _G, _H = range(8)
CORNER_UNFOLDING = {
    "domain_facets": (
        (_A, _B, _E),
        (_A, _D, _E),
        (_B, _C, _F),
        (_B, _E, _F),
        (_D, _E, _H),
        (_D, _G, _H),
    ),
    "domain_coords": {
        _A: (0, 0), _B: (1, 0), _C: (2, 0), _D: (0, 1),
        _E: (1, 1), _F: (2, 1), _G: (0, 2), _H: (1, 2),
    },
    "strip_coords": {
        _G: (0, 0), _H: (1, 0), _E: (2, 0), _F: (3, 0), _C: (4, 0),
        _D: (1, 1), _A: (2, 1), _B: (3, 1),
    },
}


def _signed_area2(p, q, r) -> int:
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def verify_corner_unfolding(scheme=None) -> bool:
    """The stored unfolding is a simplicial homeomorphism onto a flat strip."""
    scheme = scheme or CORNER_UNFOLDING
    dom, strip = scheme["domain_coords"], scheme["strip_coords"]
    total_dom = total_strip = 0
    for t in scheme["domain_facets"]:
        a_dom = _signed_area2(*(dom[v] for v in t))
        a_strip = _signed_area2(*(strip[v] for v in t))
        if a_dom == 0 or a_strip == 0:
            return False
        total_dom += abs(a_dom)
        total_strip += abs(a_strip)
    # Both embeddings tile a region of area 3 (doubled areas sum to 6).
    if total_dom != 6 or total_strip != 6:
        return False
    # Interior edge coherence: every interior edge lies in exactly two
    # triangles on opposite sides, in both embeddings.
    K = build_complex(scheme["domain_facets"])
    for r, fs in ridges_with_facets(K).items():
        if len(fs) != 2:
            continue
        for coords in (dom, strip):
            sides = []
            for f in fs:
                apex = next(v for v in f if v not in r)
                sides.append(_signed_area2(coords[r[0]], coords[r[1]], coords[apex]))
            if sides[0] * sides[1] >= 0:
                return False
    return True


# ---------------------------------------------------------------------------
# Half-intrinsic suspension


def half_intrinsic_suspension(FX: FilteredComplex, closed: bool = True) -> FilteredComplex:
    """Suspension of FX stratified finely on the north side, intrinsically on
    the south side.  The north pole is always a 0-stratum; the south pole
    survives only when the intrinsic stratification of the cone keeps it."""
    K = FX.complex
    if closed:
        if FX.boundary is not None and not FX.boundary.is_empty():
            raise NotClosed("input has a designated boundary")
        if not boundary_subcomplex(K).is_empty():
            raise NotClosed("input has free ridges")
    north, south = suspension_poles(K)
    SK = suspension(K, north, south)
    flag = _Flag()
    gens: Dict[int, List[Simplex]] = {}

    def add(d: int, s: Simplex):
        gens.setdefault(d, []).append(s)

    add(0, (north,))
    for S in strata(FX):
        if S.regular:
            continue
        for s in S.simplices:
            add(S.dim, s)
            add(S.dim + 1, tuple(sorted(s + (north,))))
    # South cone: germ classes of the simplices containing the south pole.
    classes = {}
    for f in sorted(SK.faces, key=lambda f: (-len(f), f)):
        if south not in f:
            continue
        if sphere_like(link(SK, f), flag):
            continue
        classes[f] = germ_invariant(SK, f, flag)
    for comp in _singular_components(classes):
        d = max(len(s) - 1 for s in comp)
        for s in comp:
            add(d, s)
    return make_filtered(
        SK, gens, None, None, FX.classical, FX.heuristic or flag.heuristic
    )


# ---------------------------------------------------------------------------
# The X -> X* bordism on the carrier |I × X|


_PATH3 = build_complex([(0, 1), (1, 2)])  # levels: 0 = intrinsic end, 2 = X end


def _face_split(f: Simplex, inv: Dict[int, Tuple[int, int]]):
    xs = tuple(sorted({inv[v][0] for v in f}))
    ts = {inv[v][1] for v in f}
    return xs, ts


def _orient_pinned(
    Yc: SimplicialComplex,
    skip: frozenset,
    pins: Dict[Simplex, int],
) -> OrientationAssignment:
    """Coherent orientation whose induced boundary orientation matches pins.

    pins maps boundary ridges of Yc to required induced signs; each
    propagation component must contain at least one pinned ridge, and all pins
    within a component must agree.
    """
    base = orient(Yc, skip_ridges=skip)
    # Propagation components over non-skipped interior ridges.
    comp: Dict[Simplex, int] = {}
    rwf = ridges_with_facets(Yc)
    adj: Dict[Simplex, List[Simplex]] = {f: [] for f in Yc.facets}
    for r, fs in rwf.items():
        if len(fs) == 2 and r not in skip:
            adj[fs[0]].append(fs[1])
            adj[fs[1]].append(fs[0])
    cid = 0
    for root in sorted(Yc.facets):
        if root in comp:
            continue
        stack = [root]
        comp[root] = cid
        while stack:
            f = stack.pop()
            for g in adj[f]:
                if g not in comp:
                    comp[g] = cid
                    stack.append(g)
        cid += 1
    flip: Dict[int, int] = {}
    for r, want in pins.items():
        fs = rwf.get(r, [])
        if len(fs) != 1:
            raise InternalInvariantBreach(f"pinned ridge {r} is not free")
        F = fs[0]
        got = base.signs[F] * incidence(F, r)
        fix = want * got  # ±1
        c = comp[F]
        if flip.setdefault(c, fix) != fix:
            raise InternalInvariantBreach(
                "conflicting orientation pins within one component"
            )
    if len(flip) != cid:
        raise InternalInvariantBreach("orientation component carries no pin")
    return OrientationAssignment(
        {f: base.signs[f] * flip[comp[f]] for f in Yc.facets}
    )


def bordism_to_intrinsic(
    FX: FilteredComplex, orientation: Optional[OrientationAssignment] = None
) -> BordismCertificate:
    """Oriented stratified bordism from FX to the intrinsic stratification X*.

    The carrier is the staircase cylinder K × path; skeleta follow the given
    filtration on the FX half, the intrinsic one on the other half, with the
    interface strata on the middle level.  Boundary pieces are literal copies.
    """
    K = FX.complex
    n = FX.dim
    if not FX.classical:
        raise NotClassical("bordism construction needs a classical input")
    if (FX.boundary is not None and not FX.boundary.is_empty()) or not (
        boundary_subcomplex(K).is_empty()
    ):
        raise NotClosed("bordism source must be closed")
    oa = orientation if orientation is not None else FX.orientation
    if oa is None:
        raise IncompatibleOrientations("bordism source carries no orientation")
    FXo = dataclasses.replace(FX, orientation=oa)
    ostar = extend_orientation_to_intrinsic(FXo)
    FXstar = dataclasses.replace(
        intrinsic_stratification(K), orientation=ostar
    )
    Yc, vmap = product_with_map(K, _PATH3)
    inv = {i: p for p, i in vmap.items()}
    N = n + 1

    gens: Dict[int, List[Simplex]] = {}
    for f in Yc.faces:
        xs, ts = _face_split(f, inv)
        for j in range(N):
            if (
                (ts <= {1, 2} and xs in FX.skeleton(j - 1).faces)
                or (ts <= {0, 1} and xs in FXstar.skeleton(j - 1).faces)
                or (ts == {1} and xs in FX.skeleton(min(j, n - 1)).faces)
            ):
                gens.setdefault(j, []).append(f)
                break
    bgens = [f for f in Yc.faces if _face_split(f, inv)[1] in ({0}, {2})]

    FY = make_filtered(
        Yc,
        gens,
        bgens,
        None,
        FX.classical,
        FX.heuristic or FXstar.heuristic,
    )
    # Orientation: pin the level-2 copy to +O_X.
    sing = FY.skeleton(N - 1).faces
    skip = frozenset(r for r in ridges_with_facets(Yc) if r in sing)
    pins = {}
    for fx, s in oa.signs.items():
        pins[tuple(sorted(vmap[(x, 2)] for x in fx))] = s
    oy = _orient_pinned(Yc, skip, pins)
    FY = dataclasses.replace(FY, orientation=oy)
    # The level-0 copy must then induce -O*.
    bo = boundary_orientation(Yc, oy)
    for fx, s in ostar.signs.items():
        r = tuple(sorted(vmap[(x, 0)] for x in fx))
        if bo.signs[r] != -s:
            raise InternalInvariantBreach(
                "intrinsic end does not induce the reversed orientation"
            )
    iso_plus = LabeledIsomorphism({x: vmap[(x, 2)] for x in K.vertices})
    iso_minus = LabeledIsomorphism({x: vmap[(x, 0)] for x in K.vertices})
    pieces = (
        BoundaryPiece("plus", FXo, iso_plus, +1),
        BoundaryPiece("minus", FXstar, iso_minus, -1),
    )
    collars = {
        "plus": CollarCertificate(
            "product", tuple(sorted((vmap[(x, 2)], vmap[(x, 1)]) for x in K.vertices))
        ),
        "minus": CollarCertificate(
            "product", tuple(sorted((vmap[(x, 0)], vmap[(x, 1)]) for x in K.vertices))
        ),
    }
    return BordismCertificate(FY, pieces, collars, "bordism_to_intrinsic")


# ---------------------------------------------------------------------------
# Cylinders


def cylinder(FX: FilteredComplex) -> BordismCertificate:
    """The product bordism I × FX with the product stratification.

    For a closed FX the boundary splits into a (+) and a (−) copy; with
    non-empty ∂FX a third "side" piece I × ∂FX appears, with the corner
    collar certified through the stored unfolding scheme.
    """
    K = FX.complex
    n = FX.dim
    if K.is_empty() or not K.is_pure:
        raise NotValidated("cylinder input must be a pure non-empty complex")
    D1 = build_complex([(0, 1)])
    Yc, vmap = product_with_map(K, D1)
    inv = {i: p for p, i in vmap.items()}
    B = FX.boundary if FX.boundary is not None else boundary_subcomplex(K)

    gens: Dict[int, List[Simplex]] = {}
    for f in Yc.faces:
        xs, _ts = _face_split(f, inv)
        for j in range(n + 1):
            if xs in FX.skeleton(j - 1).faces:
                gens.setdefault(j, []).append(f)
                break
    bgens = []
    for f in Yc.faces:
        xs, ts = _face_split(f, inv)
        if ts in ({0}, {1}) or xs in B.faces:
            bgens.append(f)
    FY = make_filtered(Yc, gens, bgens, None, FX.classical, FX.heuristic)

    oa = FX.orientation
    oy = None
    if oa is not None:
        sing = FY.skeleton(n).faces
        skip = frozenset(r for r in ridges_with_facets(Yc) if r in sing)
        pins = {
            tuple(sorted(vmap[(x, 1)] for x in fx)): s for fx, s in oa.signs.items()
        }
        oy = _orient_pinned(Yc, skip, pins)
        FY = dataclasses.replace(FY, orientation=oy)

    iso_plus = LabeledIsomorphism({x: vmap[(x, 1)] for x in K.vertices})
    iso_minus = LabeledIsomorphism({x: vmap[(x, 0)] for x in K.vertices})
    pieces = [
        BoundaryPiece("plus", FX, iso_plus, +1),
        BoundaryPiece("minus", FX, iso_minus, -1),
    ]
    collars = {
        "plus": CollarCertificate(
            "product", tuple(sorted((vmap[(x, 1)], vmap[(x, 0)]) for x in K.vertices))
        ),
        "minus": CollarCertificate(
            "product", tuple(sorted((vmap[(x, 0)], vmap[(x, 1)]) for x in K.vertices))
        ),
    }
    if not B.is_empty():
        # Side piece: the cylinder over the boundary, stratified by the
        # induced boundary filtration shifted through the product.
        side_c, side_vmap = product_with_map(B, D1)
        side_inv = {i: p for p, i in side_vmap.items()}
        sgens: Dict[int, List[Simplex]] = {}
        for f in side_c.faces:
            xs = tuple(sorted({side_inv[v][0] for v in f}))
            for j in range(n):
                # boundary skeleton index i = j-1 comes from X^{j} ∩ B
                if xs in B.faces and xs in FX.skeleton(j).faces:
                    sgens.setdefault(j, []).append(f)
                    break
        sbgens = [
            f
            for f in side_c.faces
            if {side_inv[v][1] for v in f} in ({0}, {1})
        ]
        side_space = make_filtered(
            side_c, sgens, sbgens, None, FX.classical, FX.heuristic
        )
        side_iso = LabeledIsomorphism(
            {side_vmap[(x, t)]: vmap[(x, t)] for x in B.vertices for t in (0, 1)}
        )
        pieces.append(BoundaryPiece("side", side_space, side_iso, +1))
        corner_pairs = tuple(
            sorted((vmap[(x, t)], vmap[(x, 1 - t)]) for x in B.vertices for t in (0, 1))
        )
        collars["side"] = CollarCertificate("corner", corner_pairs)
    return BordismCertificate(FY, tuple(pieces), collars, "cylinder")


# ---------------------------------------------------------------------------
# Gluing


def _filtration_labels(FX: FilteredComplex) -> Dict[int, int]:
    """Per vertex, the least skeleton index containing it (for labeled isos)."""
    out = {}
    for v in FX.complex.vertices:
        j = FX.dim
        while j > 0 and (v,) in FX.skeleton(j - 1).faces:
            j -= 1
        out[v] = j
    return out


def stratified_isomorphism(
    F1: FilteredComplex, F2: FilteredComplex
) -> Optional[LabeledIsomorphism]:
    """A simplicial isomorphism of carriers preserving the filtrations."""
    m = isomorphic(
        F1.complex, F2.complex, _filtration_labels(F1), _filtration_labels(F2)
    )
    if m is None:
        return None
    for j in range(max(F1.dim, F2.dim)):
        img = {m.apply(f) for f in F1.skeleton(j).faces}
        if img != set(F2.skeleton(j).faces):
            return None
    return m


def glue(
    Y1: BordismCertificate,
    Y2: BordismCertificate,
    along: Tuple[str, str],
    iso: Optional[LabeledIsomorphism] = None,
) -> BordismCertificate:
    """Pushout of the two carriers along matched boundary pieces.

    The designated pieces must carry opposite signs and admit (or be given) a
    stratified isomorphism; collars must be certified on both sides so the
    seam is bicollared.
    """
    l1, l2 = along
    p1, p2 = Y1.piece(l1), Y2.piece(l2)
    if p1.sign == p2.sign:
        raise SignClash(f"pieces {l1} and {l2} both carry sign {p1.sign:+d}")
    if l1 not in Y1.collars or l2 not in Y2.collars:
        raise CollarMissing("both glued pieces need collar certificates")
    if iso is None:
        if (
            p1.space.complex.facets == p2.space.complex.facets
            and p1.space.same_filtration(p2.space)
        ):
            iso = LabeledIsomorphism({v: v for v in p1.space.complex.vertices})
        else:
            iso = stratified_isomorphism(p1.space, p2.space)
        if iso is None:
            raise NoIsomorphism("no stratified isomorphism between the glued pieces")
    # Relabel Y2: seam vertices land on their Y1 partners, the rest move above
    # the Y1 vertex range.
    seam2_to_1 = {}
    for v, w in iso.vertex_map.items():
        seam2_to_1[p2.iso.vertex_map[w]] = p1.iso.vertex_map[v]
    offset = max(Y1.Y.complex.vertices) + 1
    relabel = {}
    fresh = 0
    for u in Y2.Y.complex.vertices:
        if u in seam2_to_1:
            relabel[u] = seam2_to_1[u]
        else:
            relabel[u] = offset + fresh
            fresh += 1

    def map2(s: Simplex) -> Simplex:
        return tuple(sorted(relabel[v] for v in s))

    facets = list(Y1.Y.complex.facets) + [map2(f) for f in Y2.Y.complex.facets]
    Gc = build_complex(facets)
    N = Gc.dim
    gens: Dict[int, List[Simplex]] = {}
    for j in range(N):
        g = list(Y1.Y.skeleton(j).faces) + [map2(f) for f in Y2.Y.skeleton(j).faces]
        if g:
            gens[j] = g
    seam_facets = {p1.iso.apply(f) for f in p1.space.complex.facets}
    b1 = Y1.Y.boundary.faces if Y1.Y.boundary is not None else frozenset()
    b2 = Y2.Y.boundary.faces if Y2.Y.boundary is not None else frozenset()
    drop1 = {p1.iso.apply(f) for f in p1.space.complex.faces}
    drop2 = {map2(p2.iso.apply(f)) for f in p2.space.complex.faces}
    bgens = [f for f in b1 if f not in drop1] + [
        map2(f) for f in b2 if map2(f) not in drop2
    ]

    oy = None
    if Y1.Y.orientation is not None and Y2.Y.orientation is not None:
        signs = dict(Y1.Y.orientation.signs)
        for f, s in Y2.Y.orientation.signs.items():
            signs[map2(f)] = s
        oy = OrientationAssignment(signs)
        # Seam coherence: induced orientations from the two sides must cancel.
        rwf = ridges_with_facets(Gc)
        for r in sorted(seam_facets):
            fs = rwf.get(r, [])
            if len(fs) != 2:
                raise SignClash(f"seam ridge {r} lies in {len(fs)} facets")
            total = sum(signs[f] * incidence(f, r) for f in fs)
            if total != 0:
                raise SignClash("induced orientations clash across the seam")
    FY = make_filtered(
        Gc,
        gens,
        bgens if bgens else None,
        oy,
        Y1.Y.classical and Y2.Y.classical,
        Y1.Y.heuristic or Y2.Y.heuristic,
    )
    pieces = []
    collars = {}
    used = set()
    for p in Y1.pieces:
        if p.label == l1:
            continue
        label = p.label
        while label in used:
            label += "'"
        used.add(label)
        pieces.append(dataclasses.replace(p, label=label))
        col = Y1.collars.get(p.label)
        if col is not None:
            collars[label] = col
    for p in Y2.pieces:
        if p.label == l2:
            continue
        label = p.label
        while label in used:
            label += "'"
        used.add(label)
        new_iso = LabeledIsomorphism(
            {v: relabel[w] for v, w in p.iso.vertex_map.items()}
        )
        pieces.append(BoundaryPiece(label, p.space, new_iso, p.sign))
        col = Y2.collars.get(p.label)
        if col is not None:
            collars[label] = CollarCertificate(
                col.kind,
                tuple(sorted((relabel[a], relabel[b]) for a, b in col.data)),
            )
    return BordismCertificate(
        FY, tuple(pieces), collars, f"glue({Y1.provenance},{Y2.provenance})"
    )


# ---------------------------------------------------------------------------
# Bordisms between stratifications, restratification


def bordism_between_stratifications(
    FX: FilteredComplex, FX2: FilteredComplex
) -> BordismCertificate:
    """Oriented bordism between two stratifications of the same carrier,
    glued from the two intrinsic bordisms along the shared X*."""
    if FX.complex.facets != FX2.complex.facets:
        raise DifferentCarrier("stratifications live on different carriers")
    if FX.orientation is None or FX2.orientation is None:
        raise IncompatibleOrientations("both inputs must be oriented")
    o1 = extend_orientation_to_intrinsic(FX)
    o2 = extend_orientation_to_intrinsic(FX2)
    if o1.signs != o2.signs:
        raise IncompatibleOrientations(
            "orientations do not agree through the intrinsic stratification"
        )
    Y1 = bordism_to_intrinsic(FX)
    Y2 = reverse_certificate(bordism_to_intrinsic(FX2))
    ident = LabeledIsomorphism({v: v for v in FX.complex.vertices})
    out = glue(Y1, Y2, ("minus", "minus"), ident)
    pieces = []
    collars = {}
    for p in out.pieces:
        label = "plus" if p.sign == +1 else "minus"
        pieces.append(dataclasses.replace(p, label=label))
        collars[label] = out.collars[p.label]
    return BordismCertificate(
        out.Y, tuple(pieces), collars, "bordism_between_stratifications"
    )


def restratify_bordism(
    cert: BordismCertificate,
    X: FilteredComplex,
    Z: FilteredComplex,
    isoX: Optional[LabeledIsomorphism] = None,
    isoZ: Optional[LabeledIsomorphism] = None,
) -> BordismCertificate:
    """Replace the boundary stratifications of a bordism by X and Z,
    adjoining stratification bordisms along both ends."""

    def relabeled(F: FilteredComplex, target: FilteredComplex, m, side: str):
        if F.complex.facets == target.complex.facets:
            return F
        if m is None:
            raise IsomorphismMissing(f"{side} carrier differs and no isomorphism given")
        vm = m.vertex_map
        K2 = F.complex.relabel(vm)
        if K2.facets != target.complex.facets:
            raise DifferentCarrier(f"{side} isomorphism does not match the carrier")
        sk = {}
        for j in range(F.dim):
            faces = F.skeleton(j).faces
            if faces:
                sk[j] = [tuple(sorted(vm[v] for v in f)) for f in faces]
        oa = None
        if F.orientation is not None:
            oa = OrientationAssignment(
                {
                    tuple(sorted(vm[v] for v in f)): s
                    for f, s in F.orientation.signs.items()
                }
            )
        return make_filtered(K2, sk, None, oa, F.classical, F.heuristic)

    Xp = cert.piece("plus")
    Zp = cert.piece("minus")
    X = relabeled(X, Xp.space, isoX, "X")
    Z = relabeled(Z, Zp.space, isoZ, "Z")
    B1 = bordism_between_stratifications(X, Xp.space)
    step1 = glue(B1, cert, ("minus", "plus"))
    B2 = bordism_between_stratifications(Zp.space, Z)
    step2 = glue(step1, B2, ("minus", "plus"))
    pieces = []
    collars = {}
    for p in step2.pieces:
        label = "plus" if p.sign == +1 else "minus"
        pieces.append(dataclasses.replace(p, label=label))
        collars[label] = step2.collars[p.label]
    return BordismCertificate(step2.Y, tuple(pieces), collars, "restratify_bordism")


# ---------------------------------------------------------------------------
# Verification


@dataclass(frozen=True)
class CertificateReport:
    passed: bool
    checks: Dict[str, bool]
    validation_note: str = ""
    heuristic: bool = False


def verify_certificate(cert: BordismCertificate) -> CertificateReport:
    """Re-verify a certificate from scratch: carrier validation, piece
    coverage, induced filtrations, collars, and orientation signs."""
    checks: Dict[str, bool] = {}
    rep = validate_stratified_pseudomanifold(cert.Y, "with-boundary")
    checks["carrier_validates"] = rep.passed
    Yc = cert.Y.complex
    B = cert.Y.boundary if cert.Y.boundary is not None else boundary_subcomplex(Yc)
    images = []
    for p in cert.pieces:
        images.append({p.iso.apply(f) for f in p.space.complex.facets})
    covered = set().union(*images) if images else set()
    checks["pieces_cover_boundary"] = covered == set(B.facets)
    checks["pieces_disjoint"] = sum(map(len, images)) == len(covered)
    ok_filt = True
    for p in cert.pieces:
        for j in range(p.space.dim + 1):
            img = {p.iso.apply(f) for f in p.space.skeleton(j).faces}
            induced = {
                p.iso.apply(f)
                for f in p.space.complex.faces
                if p.iso.apply(f) in cert.Y.skeleton(j + 1).faces
            }
            if img != induced:
                ok_filt = False
    checks["induced_filtrations_match"] = ok_filt
    checks["collars_present"] = all(p.label in cert.collars for p in cert.pieces)
    checks["corner_scheme_valid"] = all(
        verify_corner_unfolding()
        for c in cert.collars.values()
        if c.kind == "corner"
    )
    if cert.Y.orientation is not None:
        bo = boundary_orientation(Yc, cert.Y.orientation)
        ok_sign = True
        for p in cert.pieces:
            if p.space.orientation is None:
                continue
            for f, s in p.space.orientation.signs.items():
                if bo.signs.get(p.iso.apply(f)) != p.sign * s:
                    ok_sign = False
        checks["signs_match"] = ok_sign
    passed = all(checks.values())
    return CertificateReport(passed, checks, rep.note, rep.heuristic or cert.Y.heuristic)
