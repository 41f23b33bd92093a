import numpy as np
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from maxorbit.fieldmat import FieldMatrix, PhiMap
from maxorbit.partitions import Partition, enumerate_partitions

settings.register_profile(
    "repo",
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")


@st.composite
def partitions(draw, max_part=9, max_len=8, min_len=0):
    xs = draw(st.lists(st.integers(1, max_part), min_size=min_len, max_size=max_len))
    return Partition(sorted(xs, reverse=True))


def partitions_upto(n_max, start=1):
    for n in range(start, n_max + 1):
        yield from enumerate_partitions(n)


def random_increasing_phi(rng, n):
    """Random first-nonzero map that strictly increases until absorption.

    Values lie in {i+1, ..., n+1} and strictly increase while below n+1, so
    the map is nondecreasing and injective on its non-absorbed rows.  On this
    class the power-rank prediction is exact for every member of the fiber;
    ties below n+1 break it (see the tied-map regression test).
    """
    values = []
    prev = 1
    for i in range(1, n + 1):
        if prev > n:
            values.append(n + 1)
            continue
        lo = max(prev + 1, i + 1)
        v = int(rng.integers(lo, n + 2))
        values.append(v)
        prev = v
    return PhiMap(tuple(values))


def random_matrix_with_phi(rng, phi, p):
    """Strictly upper triangular matrix whose first-nonzero map is phi."""
    n = phi.n
    a = np.zeros((n, n), dtype=np.int64)
    for i in range(1, n + 1):
        v = phi.values[i - 1]
        if v <= n:
            a[i - 1, v - 1] = int(rng.integers(1, p))
            if v < n:
                a[i - 1, v:] = rng.integers(0, p, size=n - v)
    return FieldMatrix(a, p)
