import math
from itertools import combinations

import pytest


def sigma_enumeration(vals, k):
    """Independent oracle: sum of products over all k-subsets."""
    if k == 0:
        return 1.0
    return sum(math.prod(c) for c in combinations(vals, k))


@pytest.fixture
def enum_sigma():
    return sigma_enumeration
