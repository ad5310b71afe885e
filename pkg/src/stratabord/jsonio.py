"""Canonical JSON serialization for complexes, filtrations and certificates.

Every emitted document re-parses to an equal value.  Vertices must be
integers; simplices serialize as sorted integer lists, complexes as facet
lists, filtrations as facet lists per skeleton.  `dumps` is canonical
(sorted keys, fixed separators), so equal values serialize byte-identically.
"""

from __future__ import annotations

import json
from typing import Any, Dict, List, Optional

from .complexes import (
    EMPTY,
    OrientationAssignment,
    SimplicialComplex,
    build_complex,
)
from .iso import LabeledIsomorphism
from .bordism import (
    BordismCertificate,
    BoundaryPiece,
    CollarCertificate,
)
from .errors import MalformedFiltration
from .strat import FilteredComplex


def _simplex_list(K: SimplicialComplex) -> List[List[int]]:
    return [list(f) for f in sorted(K.facets)]


def _complex_from_facets(facets: List[List[int]]) -> SimplicialComplex:
    if not facets:
        return EMPTY
    return build_complex([tuple(f) for f in facets])


def complex_to_json(K: SimplicialComplex) -> Dict[str, Any]:
    return {"type": "complex", "facets": _simplex_list(K)}


def complex_from_json(doc: Dict[str, Any]) -> SimplicialComplex:
    if doc.get("type") != "complex":
        raise MalformedFiltration("expected a 'complex' document")
    return _complex_from_facets(doc["facets"])


def _orientation_to_json(oa: Optional[OrientationAssignment]):
    if oa is None:
        return None
    return [[list(f), s] for f, s in sorted(oa.signs.items())]


def _orientation_from_json(doc) -> Optional[OrientationAssignment]:
    if doc is None:
        return None
    return OrientationAssignment({tuple(f): s for f, s in doc})


def filtration_to_json(FX: FilteredComplex) -> Dict[str, Any]:
    n = FX.dim
    return {
        "type": "filtered_complex",
        "facets": _simplex_list(FX.complex),
        "skeleta": [_simplex_list(FX.skeleton(j)) for j in range(max(n, 0))],
        "boundary": None if FX.boundary is None else _simplex_list(FX.boundary),
        "orientation": _orientation_to_json(FX.orientation),
        "classical": FX.classical,
        "heuristic": FX.heuristic,
    }


def filtration_from_json(doc: Dict[str, Any]) -> FilteredComplex:
    if doc.get("type") != "filtered_complex":
        raise MalformedFiltration("expected a 'filtered_complex' document")
    K = _complex_from_facets(doc["facets"])
    skeleta = tuple(_complex_from_facets(sk) for sk in doc.get("skeleta", []))
    boundary = doc.get("boundary")
    B = None if boundary is None else K.subcomplex([tuple(f) for f in boundary])
    return FilteredComplex(
        K,
        skeleta,
        B,
        _orientation_from_json(doc.get("orientation")),
        doc.get("classical", True),
        doc.get("heuristic", False),
    )


def certificate_to_json(cert: BordismCertificate) -> Dict[str, Any]:
    return {
        "type": "bordism_certificate",
        "carrier": filtration_to_json(cert.Y),
        "pieces": [
            {
                "label": p.label,
                "space": filtration_to_json(p.space),
                "iso": sorted([a, b] for a, b in p.iso.vertex_map.items()),
                "sign": p.sign,
            }
            for p in cert.pieces
        ],
        "collars": {
            label: {"kind": c.kind, "data": [list(pair) for pair in c.data]}
            for label, c in sorted(cert.collars.items())
        },
        "provenance": cert.provenance,
    }


def certificate_from_json(doc: Dict[str, Any]) -> BordismCertificate:
    if doc.get("type") != "bordism_certificate":
        raise MalformedFiltration("expected a 'bordism_certificate' document")
    pieces = tuple(
        BoundaryPiece(
            p["label"],
            filtration_from_json(p["space"]),
            LabeledIsomorphism({a: b for a, b in p["iso"]}),
            p["sign"],
        )
        for p in doc["pieces"]
    )
    collars = {
        label: CollarCertificate(c["kind"], tuple(tuple(pair) for pair in c["data"]))
        for label, c in doc["collars"].items()
    }
    return BordismCertificate(
        filtration_from_json(doc["carrier"]), pieces, collars, doc["provenance"]
    )


def dumps(doc: Any) -> str:
    """Canonical rendering: sorted keys, fixed separators, trailing newline."""
    return json.dumps(doc, sort_keys=True, separators=(",", ": "), indent=1) + "\n"


def loads(text: str) -> Any:
    return json.loads(text)


def write_file(path: str, doc: Any) -> None:
    with open(path, "w") as fh:
        fh.write(dumps(doc))


def read_file(path: str) -> Any:
    with open(path) as fh:
        return json.load(fh)
