import random

import pytest

from stratabord import catalog
from stratabord.complexes import build_complex


@pytest.fixture(scope="session")
def entries():
    """All catalog entries, loaded (and self-verified) once per session."""
    return {name: catalog.get(name) for name in catalog.names()}


def random_complex(rng: random.Random, nverts: int = 6, nfacets: int = 5, dim: int = 2):
    """A small random pure-ish complex for property tests."""
    facets = set()
    while len(facets) < nfacets:
        facets.add(tuple(sorted(rng.sample(range(nverts), dim + 1))))
    return build_complex(sorted(facets))
