"""Bordism constructions: the half-intrinsic suspension, the bordism to the
intrinsic stratification, cylinders, gluing and restratification, each with a
re-verifiable certificate.
"""

import dataclasses

import pytest

from stratabord import catalog
from stratabord.algebra import ZZ, homology
from stratabord.bordism import (
    CORNER_UNFOLDING,
    bordism_between_stratifications,
    bordism_to_intrinsic,
    cylinder,
    glue,
    half_intrinsic_suspension,
    restratify_bordism,
    reverse_certificate,
    verify_certificate,
    verify_corner_unfolding,
)
from stratabord.complexes import build_complex, suspension_poles
from stratabord.errors import (
    DifferentCarrier,
    NotClosed,
    SignClash,
)
from stratabord.strat import (
    make_filtered,
    strata,
    trivial_filtration,
    validate_stratified_pseudomanifold,
)


def test_corner_unfolding_scheme_is_valid():
    assert verify_corner_unfolding()
    assert len(CORNER_UNFOLDING["domain_facets"]) == 6


def test_bordism_to_intrinsic_small(entries):
    e = entries["Sigma-T2"]
    cert = bordism_to_intrinsic(e.stratifications[1])
    rep = verify_certificate(cert)
    assert rep.passed, rep.checks
    plus = cert.piece("plus")
    minus = cert.piece("minus")
    assert plus.sign == 1 and minus.sign == -1
    # the (+) piece is the input stratification, the (−) piece the intrinsic one
    assert plus.space.same_filtration(e.stratifications[1])
    # no codimension-one strata in the carrier
    n = cert.Y.dim
    assert cert.Y.skeleton(n - 1).faces == cert.Y.skeleton(n - 2).faces


def test_bordism_carrier_has_homology_of_the_space(entries):
    e = entries["Sigma-T2"]
    cert = bordism_to_intrinsic(e.stratifications[0])
    hY = [(g.rank, g.torsion) for g in homology(cert.Y.complex, ZZ)]
    hX = [(g.rank, g.torsion) for g in homology(e.complex, ZZ)]
    assert hY[: len(hX)] == hX
    assert all(r == 0 and not t for r, t in hY[len(hX) :])


def test_reverse_certificate_flips_signs(entries):
    cert = bordism_to_intrinsic(entries["Sigma-T2"].stratifications[0])
    rev = reverse_certificate(cert)
    assert {p.label: p.sign for p in rev.pieces} == {
        p.label: -p.sign for p in cert.pieces
    }
    assert verify_certificate(rev).passed


def test_cylinder_of_closed_space(entries):
    cert = cylinder(entries["T2"].stratifications[0])
    rep = verify_certificate(cert)
    assert rep.passed
    assert {p.label for p in cert.pieces} == {"plus", "minus"}


def test_cylinder_of_space_with_boundary():
    # a 1-simplex: the cylinder is a square with a side piece and corners
    D1 = trivial_filtration(build_complex([(0, 1)]))
    cert = cylinder(
        dataclasses.replace(D1, boundary=build_complex([(0,), (1,)]))
    )
    rep = verify_certificate(cert)
    assert rep.passed
    assert {p.label for p in cert.pieces} == {"plus", "minus", "side"}
    assert cert.collars["side"].kind == "corner"


def test_glue_cancels_matching_boundary(entries):
    FX = entries["Sigma-T2"].stratifications[0]
    c1, c2 = cylinder(FX), cylinder(FX)
    g = glue(c1, c2, ("plus", "minus"))
    assert verify_certificate(g).passed
    assert {p.label for p in g.pieces} == {"minus", "plus"}
    assert g.Y.complex.euler_characteristic() == FX.complex.euler_characteristic()


def test_glue_rejects_same_sign():
    FX = catalog.get("S2").stratifications[0]
    with pytest.raises(SignClash):
        glue(cylinder(FX), cylinder(FX), ("plus", "plus"))


def test_bordism_between_stratifications(entries):
    e = entries["Sigma-T2"]
    cert = bordism_between_stratifications(
        e.stratifications[0], e.stratifications[1]
    )
    assert verify_certificate(cert).passed
    assert cert.piece("plus").space.same_filtration(e.stratifications[0])
    assert cert.piece("minus").space.same_filtration(e.stratifications[1])


def test_bordism_between_requires_same_carrier(entries):
    with pytest.raises(DifferentCarrier):
        bordism_between_stratifications(
            entries["S2"].stratifications[0], entries["T2"].stratifications[0]
        )


def test_restratify_bordism(entries):
    e = entries["Sigma-T2"]
    base = cylinder(e.stratifications[0])
    out = restratify_bordism(base, e.stratifications[1], e.stratifications[0])
    assert verify_certificate(out).passed
    assert out.piece("plus").space.same_filtration(e.stratifications[1])
    assert out.piece("minus").space.same_filtration(e.stratifications[0])


def test_half_intrinsic_suspension_figure_census():
    # S¹ with a marked point: one north pole, the marked point at level 0,
    # one singular 1-stratum, one regular 2-stratum — and no south pole
    S1 = build_complex([(0, 1), (1, 2), (0, 2)])
    FX = make_filtered(S1, {0: [(0,)]}, classical=False)
    SX = half_intrinsic_suspension(FX)
    rep = validate_stratified_pseudomanifold(SX)
    assert rep.passed, rep.failing()
    census = sorted((s.dim, s.regular) for s in strata(SX))
    assert census == [(0, False), (0, False), (1, False), (2, True)]


def test_half_intrinsic_suspension_of_sphere_has_single_pole():
    S1 = build_complex([(0, 1), (1, 2), (0, 2)])
    SX = half_intrinsic_suspension(trivial_filtration(S1))
    census = sorted((s.dim, s.regular) for s in strata(SX))
    assert census == [(0, False), (2, True)]


def test_half_intrinsic_suspension_of_torus_keeps_south_pole(entries):
    SX = half_intrinsic_suspension(entries["T2"].stratifications[0])
    zero = [s for s in strata(SX) if s.dim == 0]
    assert len(zero) == 2  # the base is not a sphere: both poles survive
    assert validate_stratified_pseudomanifold(SX).passed


def test_half_intrinsic_suspension_rejects_boundary():
    D1 = build_complex([(0, 1)])
    with pytest.raises(NotClosed):
        half_intrinsic_suspension(trivial_filtration(D1))


def test_tampered_certificate_fails_verification(entries):
    cert = bordism_to_intrinsic(entries["Sigma-T2"].stratifications[0])
    bad = dataclasses.replace(
        cert,
        pieces=tuple(
            dataclasses.replace(p, sign=-p.sign) if p.label == "plus" else p
            for p in cert.pieces
        ),
    )
    rep = verify_certificate(bad)
    assert not rep.passed
    assert not rep.checks["signs_match"]


def test_missing_collar_detected(entries):
    cert = cylinder(entries["S2"].stratifications[0])
    bad = dataclasses.replace(cert, collars={})
    rep = verify_certificate(bad)
    assert not rep.passed
    assert not rep.checks["collars_present"]
