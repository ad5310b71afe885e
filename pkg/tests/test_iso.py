"""Labeled simplicial isomorphism search."""

from stratabord.complexes import build_complex
from stratabord.iso import LabeledIsomorphism, isomorphic

S1a = build_complex([(0, 1), (1, 2), (0, 2)])
S1b = build_complex([(10, 11), (11, 12), (10, 12)])
S1_4 = build_complex([(0, 1), (1, 2), (2, 3), (0, 3)])


def test_isomorphic_relabeled_circle():
    iso = isomorphic(S1a, S1b)
    assert iso is not None
    assert {iso.vertex_map[v] for v in S1a.vertices} == set(S1b.vertices)
    assert {iso.apply(f) for f in S1a.facets} == set(S1b.facets)


def test_non_isomorphic_different_sizes():
    assert isomorphic(S1a, S1_4) is None


def test_non_isomorphic_same_f_vector():
    # two triangles sharing an edge vs a path with a doubled edge shape:
    # same f-vector pairs are distinguished by the search
    K1 = build_complex([(0, 1, 2), (1, 2, 3)])
    K2 = build_complex([(0, 1, 2), (2, 3, 4)])
    assert isomorphic(K1, K2) is None


def test_labels_constrain_the_search():
    labels1 = {v: ("a" if v == 0 else "b") for v in S1a.vertices}
    # force 0 ↦ 12 by labeling
    labels2 = {v: ("a" if v == 12 else "b") for v in S1b.vertices}
    iso = isomorphic(S1a, S1b, labels1, labels2)
    assert iso is not None
    assert iso.vertex_map[0] == 12
    # contradictory labels make it impossible
    labels2_bad = {v: "c" for v in S1b.vertices}
    assert isomorphic(S1a, S1b, labels1, labels2_bad) is None


def test_apply_relabels_and_sorts_simplices():
    iso = LabeledIsomorphism({0: 7, 1: 6, 2: 5})
    assert iso.apply((0, 1)) == (6, 7)
    assert iso.apply((0, 1, 2)) == (5, 6, 7)
