"""Acceptance gate: one test per shipped acceptance criterion.

Each test prints a single `ACCEPTANCE <n>: PASS/FAIL` line with its wall time
and asserts the stated time budget.  The criteria exercise the validator, the
homology and intersection-homology engines, the singularity-class algebra, and
the bordism constructions end to end on the shipped catalog.
"""

import io
import time
from contextlib import redirect_stdout

import pytest

from stratabord import catalog
from stratabord.algebra import GF, QQ, ZZ, homology
from stratabord.bordism import (
    bordism_to_intrinsic,
    cylinder,
    half_intrinsic_suspension,
    verify_certificate,
)
from stratabord.classes import (
    builtin,
    e_of_g,
    f_membership,
    g_of_e,
    g_of_e_membership,
    links_in_class,
    siegel_membership,
)
from stratabord.cli import run
from stratabord.complexes import EMPTY, build_complex
from stratabord.errors import IncompatibleOrientations
from stratabord.ih import intersection_homology, lower_middle
from stratabord.strat import (
    FilteredComplex,
    intrinsic_stratification,
    make_filtered,
    strata,
    stratum_link,
    trivial_filtration,
    validate_stratified_pseudomanifold,
)

# Certificates built in criterion 6 and reused in criterion 8.
_CERTS = {}


def _gate(capsys, num, desc, budget, body):
    t0 = time.monotonic()
    try:
        body()
    except BaseException:
        with capsys.disabled():
            print(f"ACCEPTANCE {num}: FAIL — {desc}")
        raise
    dt = time.monotonic() - t0
    ok = dt < budget
    with capsys.disabled():
        print(
            f"ACCEPTANCE {num}: {'PASS' if ok else 'FAIL'} — {desc} "
            f"({dt:.1f}s, budget {budget:.0f}s)"
        )
    assert ok, f"criterion {num} exceeded its budget: {dt:.1f}s > {budget}s"


@pytest.fixture(scope="module")
def loaded():
    return {name: catalog.get(name) for name in catalog.names()}


# ---------------------------------------------------------------------------
# 1. Validator: all catalog stratifications validate; ten mutations rejected
#    with the correct clause named.


def _mutations():
    """Ten broken filtrations, each with the clause expected to reject it."""
    disk = build_complex([(0, 1, 2), (1, 2, 3)])
    s2 = catalog.get("S2").complex
    sig_t2 = catalog.get("Sigma-T2").complex

    out = []

    # (1) nesting violated: skeleton 0 not contained in skeleton 1
    K = sig_t2
    sk0 = K.subcomplex([(max(K.vertices),)])
    out.append(
        ("nesting violation", FilteredComplex(K, (sk0, EMPTY, EMPTY)), "closed", "a")
    )
    # (2) over-dimensioned skeleton: an edge placed in the 0-skeleton
    e0 = K.subcomplex([min(K.faces_of_dim(1))])
    out.append(("edge in 0-skeleton", FilteredComplex(K, (e0,)), "closed", "a"))
    # (3) non-pure carrier: a triangle with a dangling edge
    impure = build_complex([(0, 1, 2), (2, 3)])
    out.append(("non-pure carrier", trivial_filtration(impure), "closed", "b"))
    # (4) codimension-one stratum in classical mode
    edge_sk = s2.subcomplex([min(s2.faces_of_dim(1))])
    out.append(
        ("codimension-one stratum", FilteredComplex(s2, (EMPTY, edge_sk)), "closed", "d")
    )
    # (5) three triangles sharing an edge: ridge in three facets
    book = build_complex([(0, 1, 2), (0, 1, 3), (0, 1, 4)])
    out.append(("ridge in three facets", trivial_filtration(book), "closed", "e"))
    # (6) a disk validated as a closed space: free ridges
    out.append(("disk validated closed", trivial_filtration(disk), "closed", "e"))
    # (7) with boundary, but an interior ridge is declared boundary
    out.append(
        (
            "interior ridge declared boundary",
            make_filtered(disk, {}, boundary=[(1, 2)]),
            "with-boundary",
            "e",
        )
    )
    # (8) with boundary, but a free ridge is missing from the boundary
    out.append(
        (
            "free ridge not in boundary",
            make_filtered(disk, {}, boundary=[(0, 1), (0, 2)]),
            "with-boundary",
            "e",
        )
    )
    # (9) suspension of a torus with the poles left unstratified
    out.append(
        ("unstratified suspension poles", trivial_filtration(sig_t2), "closed", "e")
    )
    # (10) with boundary, but no boundary designated at all
    out.append(
        ("no boundary designated", trivial_filtration(disk), "with-boundary", "g")
    )
    return out


def test_criterion_1_validator_and_mutations(capsys, loaded):
    def body():
        for name, entry in loaded.items():
            for FX in entry.stratifications:
                rep = validate_stratified_pseudomanifold(FX)
                assert rep.passed, f"{name}: {rep.failing()}"
        muts = _mutations()
        assert len(muts) == 10
        for label, FX, mode, clause in muts:
            rep = validate_stratified_pseudomanifold(FX, mode)
            assert not rep.passed, f"mutation not rejected: {label}"
            assert clause in rep.failing(), (
                f"{label}: expected clause {clause}, failing {rep.failing()}"
            )

    _gate(capsys, 1, "validator accepts catalog, rejects 10 mutations", 10, body)


# ---------------------------------------------------------------------------
# 2. Homology golden table over Z, Q and Z/2.


_GOLDEN_Z = {
    "S1": [(1, ()), (1, ())],
    "S2": [(1, ()), (0, ()), (1, ())],
    "S3": [(1, ()), (0, ()), (0, ()), (1, ())],
    "S4": [(1, ()), (0, ()), (0, ()), (0, ()), (1, ())],
    "T2": [(1, ()), (2, ()), (1, ())],
    "T3": [(1, ()), (3, ()), (3, ()), (1, ())],
    "RP2": [(1, ()), (0, (2,)), (0, ())],
    "RP3": [(1, ()), (0, (2,)), (0, ()), (1, ())],
}
_GOLDEN_Q = {
    "S1": [1, 1],
    "S2": [1, 0, 1],
    "S3": [1, 0, 0, 1],
    "S4": [1, 0, 0, 0, 1],
    "T2": [1, 2, 1],
    "T3": [1, 3, 3, 1],
    "RP2": [1, 0, 0],
    "RP3": [1, 0, 0, 1],
}
_GOLDEN_Z2 = {
    "S1": [1, 1],
    "S2": [1, 0, 1],
    "S3": [1, 0, 0, 1],
    "S4": [1, 0, 0, 0, 1],
    "T2": [1, 2, 1],
    "T3": [1, 3, 3, 1],
    "RP2": [1, 1, 1],
    "RP3": [1, 1, 1, 1],
}


def test_criterion_2_homology_golden_table(capsys, loaded):
    def body():
        for name, want in _GOLDEN_Z.items():
            K = loaded[name].complex
            got = [(g.rank, g.torsion) for g in homology(K, ZZ)]
            assert got == want, f"{name} over Z: {got}"
            got_q = [g.rank for g in homology(K, QQ)]
            assert got_q == _GOLDEN_Q[name], f"{name} over Q: {got_q}"
            got_2 = [g.rank for g in homology(K, GF(2))]
            assert got_2 == _GOLDEN_Z2[name], f"{name} over Z/2: {got_2}"

    _gate(capsys, 2, "homology golden table over Z, Q, Z/2", 60, body)


# ---------------------------------------------------------------------------
# 3. Middle-degree lower-middle-perversity IH of even-dimensional suspensions
#    vanishes over Q.


def test_criterion_3_suspension_ih_vanishing(capsys, loaded):
    def body():
        for base, susp in (("S1", "Sigma-S1"), ("T3", "Sigma-T3"), ("RP3", "Sigma-RP3")):
            FX = loaded[susp].stratifications[0]
            n = loaded[base].complex.dim
            assert FX.dim == n + 1 and FX.dim % 2 == 0
            mid = (n + 1) // 2
            table = intersection_homology(FX, lower_middle(FX.dim), QQ)
            assert table[mid].rank == 0, f"{susp}: IH_{mid} rank {table[mid].rank}"

    _gate(capsys, 3, "middle IH of even suspensions vanishes over Q", 300, body)


# ---------------------------------------------------------------------------
# 4. Class verdict table, stable across stratifications and routes.


def _class_table():
    return [
        # (entry, class name, field, expected member, witness check)
        ("Sigma-T3", "witt", QQ, True, None),
        ("Sigma-T2", "witt", QQ, False, lambda w: w["link"]["rank"] == 2),
        ("Sigma-T3", "ip", None, True, None),
        ("Sigma-RP3", "ip", None, False, lambda w: 2 in w["link"]["torsion"]),
        ("Sigma-RP2", "euler2", None, False, lambda w: w["link"]["chi"] % 2 == 1),
        ("Sigma-T2", "euler2", None, True, None),
        ("Sigma-RP2", "locally_orientable", None, False, None),
    ]


def test_criterion_4_class_verdict_table(capsys, loaded):
    def body():
        for entry, cname, field, want, check in _class_table():
            E = builtin(cname, field)
            e = loaded[entry]
            verdicts = []
            for FX in e.stratifications:
                v = links_in_class(FX, E)
                verdicts.append(v)
                assert bool(v) is want, f"{entry}/{cname}: {v.detail}"
                if not want and check is not None:
                    assert check(v.witness), f"{entry}/{cname} witness: {v.witness}"
            # route independence: the polyhedral test agrees, and `both`
            # (which raises on disagreement) returns the same verdict
            K = e.complex
            vs = f_membership(K, E, "stratified")
            vp = f_membership(K, E, "polyhedral")
            vb = f_membership(K, E, "both")
            assert bool(vs) is bool(vp) is bool(vb) is want, f"{entry}/{cname} routes"

    _gate(capsys, 4, "class verdict table, stratification- and route-stable", 600, body)


# ---------------------------------------------------------------------------
# 5. Half-intrinsic suspension: marked-circle census; validates over the
#    whole catalog.


def test_criterion_5_half_intrinsic_suspension(capsys, loaded):
    def body():
        circle = build_complex([(0, 1), (1, 2), (0, 2)])
        FX = make_filtered(circle, {0: [(0,)]}, classical=False)
        SX = half_intrinsic_suspension(FX)
        assert validate_stratified_pseudomanifold(SX).passed
        census = sorted((s.dim, s.regular) for s in strata(SX))
        # north pole, the marked point, one singular 1-stratum, one regular
        # 2-stratum — and no south-pole stratum
        assert census == [(0, False), (0, False), (1, False), (2, True)]

        for name, entry in loaded.items():
            SX = half_intrinsic_suspension(entry.stratifications[0])
            rep = validate_stratified_pseudomanifold(SX)
            assert rep.passed, f"SX of {name}: {rep.failing()}"

    _gate(capsys, 5, "half-intrinsic suspension census and validation", 120, body)


# ---------------------------------------------------------------------------
# 6. Bordism to the intrinsic stratification, fully certified.


def _h_z(K):
    return [(g.rank, g.torsion) for g in homology(K, ZZ)]


def test_criterion_6_bordism_to_intrinsic(capsys, loaded):
    closure_classes = [
        ("witt", builtin("witt", QQ)),
        ("ip", builtin("ip")),
        ("euler2", builtin("euler2")),
    ]

    def body():
        for name, entry in loaded.items():
            FX = entry.stratifications[0]
            if entry.orientable:
                cert = bordism_to_intrinsic(FX)
                _CERTS[name] = cert
                rep = verify_certificate(cert)
                assert rep.passed, f"{name}: {rep.checks}"
                assert cert.piece("plus").space.same_filtration(FX)
                assert cert.piece("minus").space.same_filtration(
                    intrinsic_stratification(FX.complex)
                )
                Y = cert.Y
                assert Y.skeleton(Y.dim - 1).faces == Y.skeleton(Y.dim - 2).faces
                hX = _h_z(FX.complex) + [(0, ())]
                assert _h_z(Y.complex) == hX, f"{name}: H(Y) differs from H(X)"
                for cname, E in closure_classes:
                    if links_in_class(FX, E):
                        v = links_in_class(Y, E)
                        assert v, f"{name}: carrier leaves {cname}: {v.detail}"
            else:
                # the construction needs an orientation; the refusal is explicit
                with pytest.raises(IncompatibleOrientations):
                    bordism_to_intrinsic(FX)

    _gate(capsys, 6, "certified bordisms to the intrinsic stratification", 300, body)


# ---------------------------------------------------------------------------
# 7. Class algebra laws on the full corpus.


def _conj_boundary_links(K, member):
    """Membership of the cone on K in the boundary class determined by
    `member`: K itself and every intrinsic stratum link of K must pass."""
    if not member(K):
        return False
    FX = intrinsic_stratification(K)
    for S in strata(FX):
        if S.regular:
            continue
        if not member(stratum_link(FX, S).complex):
            return False
    return True


def test_criterion_7_class_algebra_laws(capsys, loaded):
    classes = [
        builtin("witt", QQ),
        builtin("ip"),
        builtin("euler2"),
        builtin("locally_orientable"),
        builtin("all_pseudomanifolds"),
    ]
    susp = builtin("all_suspensions")

    def body():
        corpus = [(name, e.complex) for name, e in loaded.items()]
        assert len(corpus) >= 12
        for E in classes + [susp]:
            G = g_of_e(E)
            EG = e_of_g(G)
            G2 = g_of_e(EG)
            for name, K in corpus:
                sv = bool(siegel_membership(K, E))
                gv = bool(g_of_e_membership(K, E))
                assert not sv or gv, f"S_E ⊄ G_E at {name}/{E.name}"
                # boundary-class agreement: interior-link conditions through
                # S_E and through G_E give the same verdict
                fs = _conj_boundary_links(K, lambda L: siegel_membership(L, E))
                fg = _conj_boundary_links(K, lambda L: g_of_e_membership(L, E))
                assert fs == fg, f"F_S != F_G at {name}/{E.name}"
                # G is a fixed point of E ∘ G, and E_{G_E} refines E
                assert bool(G2.member(K)) == gv, f"G_EG != G at {name}/{E.name}"
                if EG.member(K):
                    assert E.member(K), f"E_GE ⊄ E at {name}/{E.name}"
        # strictness: the suspensions class desuspends to spheres only, so
        # a suspension with non-spherical core is lost on the round trip
        t2 = loaded["T2"].complex
        sig_t2 = loaded["Sigma-T2"].complex
        assert susp.member(sig_t2)
        assert not e_of_g(g_of_e(susp)).member(sig_t2)
        assert not g_of_e_membership(sig_t2, susp), "core T2 is not a suspension"
        assert not susp.member(t2)

    _gate(capsys, 7, "class algebra laws on the corpus", 600, body)


# ---------------------------------------------------------------------------
# 8. Euler bordism invariant: boundaries of Euler bordisms have even chi.


def test_criterion_8_euler_boundary_parity(capsys, loaded):
    e2 = builtin("euler2")

    def body():
        if not _CERTS:  # criterion 6 was not run first; build a small sample
            for name in ("S2", "T2", "Sigma-S1", "Sigma-T2"):
                _CERTS[name] = bordism_to_intrinsic(
                    catalog.get(name).stratifications[0]
                )
        checked = 0
        for name, cert in _CERTS.items():
            FX = catalog.get(name).stratifications[0]
            if not links_in_class(FX, e2):
                continue
            chi = cert.Y.boundary.euler_characteristic()
            assert chi % 2 == 0, f"{name}: chi(dY) = {chi}"
            checked += 1
        for name in ("S2", "T2", "RP2", "Sigma-T2"):
            FX = catalog.get(name).stratifications[0]
            assert links_in_class(FX, e2)
            cert = cylinder(FX)
            chi = cert.Y.boundary.euler_characteristic()
            assert chi % 2 == 0, f"cylinder {name}: chi(dY) = {chi}"
            checked += 1
        assert checked >= 8

    _gate(capsys, 8, "chi of Euler-bordism boundaries is even", 60, body)


# ---------------------------------------------------------------------------
# 9. Determinism of reports, independent of --jobs.


def _cli(argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = run(argv)
    return code, buf.getvalue()


def test_criterion_9_determinism(capsys, tmp_path):
    commands = [
        ["validate", "catalog:Sigma-T2", "--json"],
        ["homology", "catalog:T3", "--ring", "Z", "--json"],
        ["ih", "catalog:Sigma-T2", "--ring", "Q", "--json"],
        ["classify", "catalog:Sigma-RP3", "--class", "ip", "--witness", "--json"],
        ["stratify", "catalog:Sigma-T2", "--json"],
    ]

    def body():
        for argv in commands:
            c1, out1 = _cli(argv)
            c2, out2 = _cli(argv)
            c8, out8 = _cli(argv + ["--jobs", "8"])
            assert c1 == c2 == c8
            assert out1 == out2 == out8, f"nondeterministic report: {argv}"
        a, b = str(tmp_path / "a.json"), str(tmp_path / "b.json")
        assert _cli(["bordism", "to-intrinsic", "catalog:Sigma-T2", "--out", a])[0] == 0
        assert _cli(["bordism", "to-intrinsic", "catalog:Sigma-T2", "--out", b, "--jobs", "8"])[0] == 0
        with open(a, "rb") as fa, open(b, "rb") as fb:
            assert fa.read() == fb.read()

    _gate(capsys, 9, "byte-identical reports across runs and --jobs", 60, body)
