"""Facet list for a 40-vertex triangulation of real projective 3-space.

Obtained once as the antipodal quotient of the barycentric subdivision of the
boundary of the 4-dimensional cross-polytope (the quotient identifies each
barycenter with the barycenter of the opposite face).  Frozen as data; the
homology H_1 = Z/2 is re-derived at catalog load.
"""

RP3_FACETS = (
    (0, 4, 16, 32), (0, 4, 16, 33), (0, 4, 17, 32), (0, 4, 17, 34),
    (0, 4, 18, 34), (0, 4, 18, 35), (0, 4, 19, 33), (0, 4, 19, 35),
    (0, 5, 16, 32), (0, 5, 16, 33), (0, 5, 20, 32), (0, 5, 20, 36),
    (0, 5, 21, 36), (0, 5, 21, 37), (0, 5, 22, 33), (0, 5, 22, 37),
    (0, 6, 17, 32), (0, 6, 17, 34), (0, 6, 20, 32), (0, 6, 20, 36),
    (0, 6, 23, 36), (0, 6, 23, 38), (0, 6, 24, 34), (0, 6, 24, 38),
    (0, 7, 21, 36), (0, 7, 21, 37), (0, 7, 23, 36), (0, 7, 23, 38),
    (0, 7, 25, 38), (0, 7, 25, 39), (0, 7, 26, 37), (0, 7, 26, 39),
    (0, 8, 18, 34), (0, 8, 18, 35), (0, 8, 24, 34), (0, 8, 24, 38),
    (0, 8, 25, 38), (0, 8, 25, 39), (0, 8, 27, 35), (0, 8, 27, 39),
    (0, 9, 19, 33), (0, 9, 19, 35), (0, 9, 22, 33), (0, 9, 22, 37),
    (0, 9, 26, 37), (0, 9, 26, 39), (0, 9, 27, 35), (0, 9, 27, 39),
    (1, 4, 16, 32), (1, 4, 16, 33), (1, 4, 17, 32), (1, 4, 17, 34),
    (1, 4, 18, 34), (1, 4, 18, 35), (1, 4, 19, 33), (1, 4, 19, 35),
    (1, 7, 21, 36), (1, 7, 21, 37), (1, 7, 23, 36), (1, 7, 23, 38),
    (1, 7, 25, 38), (1, 7, 25, 39), (1, 7, 26, 37), (1, 7, 26, 39),
    (1, 10, 16, 32), (1, 10, 16, 33), (1, 10, 25, 38), (1, 10, 25, 39),
    (1, 10, 28, 32), (1, 10, 28, 39), (1, 10, 29, 33), (1, 10, 29, 38),
    (1, 11, 17, 32), (1, 11, 17, 34), (1, 11, 26, 37), (1, 11, 26, 39),
    (1, 11, 28, 32), (1, 11, 28, 39), (1, 11, 30, 34), (1, 11, 30, 37),
    (1, 12, 18, 34), (1, 12, 18, 35), (1, 12, 21, 36), (1, 12, 21, 37),
    (1, 12, 30, 34), (1, 12, 30, 37), (1, 12, 31, 35), (1, 12, 31, 36),
    (1, 13, 19, 33), (1, 13, 19, 35), (1, 13, 23, 36), (1, 13, 23, 38),
    (1, 13, 29, 33), (1, 13, 29, 38), (1, 13, 31, 35), (1, 13, 31, 36),
    (2, 5, 16, 32), (2, 5, 16, 33), (2, 5, 20, 32), (2, 5, 20, 36),
    (2, 5, 21, 36), (2, 5, 21, 37), (2, 5, 22, 33), (2, 5, 22, 37),
    (2, 8, 18, 34), (2, 8, 18, 35), (2, 8, 24, 34), (2, 8, 24, 38),
    (2, 8, 25, 38), (2, 8, 25, 39), (2, 8, 27, 35), (2, 8, 27, 39),
    (2, 10, 16, 32), (2, 10, 16, 33), (2, 10, 25, 38), (2, 10, 25, 39),
    (2, 10, 28, 32), (2, 10, 28, 39), (2, 10, 29, 33), (2, 10, 29, 38),
    (2, 12, 18, 34), (2, 12, 18, 35), (2, 12, 21, 36), (2, 12, 21, 37),
    (2, 12, 30, 34), (2, 12, 30, 37), (2, 12, 31, 35), (2, 12, 31, 36),
    (2, 14, 20, 32), (2, 14, 20, 36), (2, 14, 27, 35), (2, 14, 27, 39),
    (2, 14, 28, 32), (2, 14, 28, 39), (2, 14, 31, 35), (2, 14, 31, 36),
    (2, 15, 22, 33), (2, 15, 22, 37), (2, 15, 24, 34), (2, 15, 24, 38),
    (2, 15, 29, 33), (2, 15, 29, 38), (2, 15, 30, 34), (2, 15, 30, 37),
    (3, 6, 17, 32), (3, 6, 17, 34), (3, 6, 20, 32), (3, 6, 20, 36),
    (3, 6, 23, 36), (3, 6, 23, 38), (3, 6, 24, 34), (3, 6, 24, 38),
    (3, 9, 19, 33), (3, 9, 19, 35), (3, 9, 22, 33), (3, 9, 22, 37),
    (3, 9, 26, 37), (3, 9, 26, 39), (3, 9, 27, 35), (3, 9, 27, 39),
    (3, 11, 17, 32), (3, 11, 17, 34), (3, 11, 26, 37), (3, 11, 26, 39),
    (3, 11, 28, 32), (3, 11, 28, 39), (3, 11, 30, 34), (3, 11, 30, 37),
    (3, 13, 19, 33), (3, 13, 19, 35), (3, 13, 23, 36), (3, 13, 23, 38),
    (3, 13, 29, 33), (3, 13, 29, 38), (3, 13, 31, 35), (3, 13, 31, 36),
    (3, 14, 20, 32), (3, 14, 20, 36), (3, 14, 27, 35), (3, 14, 27, 39),
    (3, 14, 28, 32), (3, 14, 28, 39), (3, 14, 31, 35), (3, 14, 31, 36),
    (3, 15, 22, 33), (3, 15, 22, 37), (3, 15, 24, 34), (3, 15, 24, 38),
    (3, 15, 29, 33), (3, 15, 29, 38), (3, 15, 30, 34), (3, 15, 30, 37),
)
