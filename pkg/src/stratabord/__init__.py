"""Stratified PL pseudomanifolds as filtered simplicial complexes.

Validation, intrinsic stratification, simplicial intersection homology,
singularity-class predicates, and explicit stratified bordisms.
"""

__version__ = "0.1.0"
