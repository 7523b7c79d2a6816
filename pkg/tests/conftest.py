import itertools

import pytest
from hypothesis import settings

from equalrank.embed import named_embedding
from equalrank.rootdata import build_root_system

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

EMBEDDINGS = ["A1>t", "A2>t", "A2>A1u1", "B2>t", "B2>A1A1", "G2>A2", "G2>A1A1"]
TYPES = ["A1", "A2", "B2", "C2", "G2", "A1xA1", "A3"]


def grid(rank, bound=3):
    return list(itertools.product(range(bound + 1), repeat=rank))


@pytest.fixture(params=EMBEDDINGS)
def emb(request):
    return named_embedding(request.param)


@pytest.fixture(params=TYPES)
def rs(request):
    return build_root_system(request.param)
