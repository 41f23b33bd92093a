"""Exact dense linear algebra over a prime field GF(p).

Matrices are stored as int64 numpy arrays of residues.  Plain Gaussian
elimination is used throughout: all matrices here are desk scale, so there is
no need for anything cleverer, and exactness is what matters.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .partitions import Partition


@lru_cache(maxsize=None)
def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class FieldMatrix:
    """Dense square matrix over GF(p), p an odd prime."""

    __slots__ = ("p", "entries")

    def __init__(self, entries, p: int):
        if not is_prime(p) or p < 3:
            raise ValueError(f"modulus must be an odd prime >= 3, got {p}")
        a = np.asarray(entries, dtype=np.int64)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            if a.size == 0:
                a = a.reshape(0, 0)
            else:
                raise ValueError(f"expected a square matrix, got shape {a.shape}")
        if a.shape[0] * (p - 1) ** 2 >= 2**62:
            raise ValueError("modulus too large for exact int64 products")
        self.p = p
        self.entries = a % p

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def mul(self, other: "FieldMatrix") -> "FieldMatrix":
        if self.p != other.p or self.dim != other.dim:
            raise ValueError("matrix shapes or moduli do not match")
        return FieldMatrix(self.entries @ other.entries, self.p)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldMatrix)
            and self.p == other.p
            and self.entries.shape == other.entries.shape
            and bool(np.array_equal(self.entries, other.entries))
        )

    def __repr__(self) -> str:
        return f"FieldMatrix(dim={self.dim}, p={self.p})"

    def dump(self) -> str:
        """Debug rendering: one row per line, space-separated residues."""
        return "\n".join(" ".join(str(int(x)) for x in row) for row in self.entries)


def identity(n: int, p: int) -> FieldMatrix:
    return FieldMatrix(np.eye(n, dtype=np.int64), p)


def zero(n: int, p: int) -> FieldMatrix:
    return FieldMatrix(np.zeros((n, n), dtype=np.int64), p)


@dataclass(frozen=True)
class RankProfile:
    """Ranks of successive powers: ranks[m] == rank(M^m), starting at M^0.

    The sequence stops at the first zero or after dim+1 entries; ranks of a
    square matrix stabilise by the dim-th power, so later values equal the
    last stored one.
    """

    ranks: tuple[int, ...]

    def at(self, m: int) -> int:
        if m < 0:
            raise ValueError("power must be >= 0")
        return self.ranks[m] if m < len(self.ranks) else self.ranks[-1]

    @property
    def reaches_zero(self) -> bool:
        return self.ranks[-1] == 0


def rank(m: FieldMatrix) -> int:
    """Rank over GF(p) by Gaussian elimination."""
    a = m.entries.copy()
    p = m.p
    n = m.dim
    r = 0
    for c in range(n):
        piv = -1
        for rr in range(r, n):
            if a[rr, c]:
                piv = rr
                break
        if piv < 0:
            continue
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = (a[r] * inv) % p
        below = a[r + 1 :, c]
        if below.size:
            a[r + 1 :] = (a[r + 1 :] - np.outer(below, a[r])) % p
        r += 1
        if r == n:
            break
    return r


def rank_profile(m: FieldMatrix) -> RankProfile:
    """Ranks of M^0, M^1, ... until zero or dim+1 entries."""
    ranks = [m.dim]
    power = m
    while ranks[-1] != 0 and len(ranks) <= m.dim:
        ranks.append(rank(power))
        if ranks[-1] != 0 and len(ranks) <= m.dim:
            power = power.mul(m)
    return RankProfile(tuple(ranks))


def type_from_profile(profile: RankProfile, dim: int) -> Partition:
    """Jordan type of a nilpotent matrix from the ranks of its powers.

    The multiplicity of blocks of size >= k is rank(M^{k-1}) - rank(M^k); the
    type is the conjugate of that difference sequence.
    """
    if not profile.reaches_zero:
        raise ValueError("matrix is not nilpotent: rank profile never reaches zero")
    diffs = [
        profile.ranks[k - 1] - profile.ranks[k] for k in range(1, len(profile.ranks))
    ]
    parts = []
    for size in range(len(diffs), 0, -1):
        parts.extend([size] * (diffs[size - 1] - (diffs[size] if size < len(diffs) else 0)))
    result = Partition(parts)
    assert result.n == dim
    return result


def jordan_type(m: FieldMatrix) -> Partition:
    """Jordan type of a nilpotent matrix; raises if m is not nilpotent."""
    return type_from_profile(rank_profile(m), m.dim)


@dataclass(frozen=True)
class PhiMap:
    """First-nonzero-column map of a strictly upper triangular matrix.

    values[i-1] is the smallest column index l > i with a nonzero entry in
    row i, or n+1 when row i vanishes; so values always lie in 2..n+1 and
    exceed the row index.
    """

    values: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.values)

    def is_nondecreasing(self) -> bool:
        return all(a <= b for a, b in zip(self.values, self.values[1:]))


def phi_map(m: FieldMatrix) -> PhiMap:
    """Compute the first-nonzero map of a strictly upper triangular matrix."""
    if np.any(np.tril(m.entries)):
        raise ValueError("matrix is not strictly upper triangular")
    n = m.dim
    values = []
    for i in range(n):
        row = np.nonzero(m.entries[i])[0]
        values.append(int(row[0]) + 1 if row.size else n + 1)
    return PhiMap(tuple(values))


def phi_rank_prediction(phi: PhiMap, k: int) -> int:
    """Count of rows not absorbed after iterating the map k times (n+1 absorbs).

    Requires a nondecreasing map.  When the map strictly increases until
    absorption, this count equals rank(Y^k) for every matrix Y in the map's
    fiber; a genuine tie below n+1 packs rows into too few columns and the
    count can overshoot the rank.
    """
    if k < 1:
        raise ValueError("power must be >= 1")
    if not phi.is_nondecreasing():
        raise ValueError("rank prediction requires a nondecreasing map")
    n = phi.n
    cur = list(phi.values)
    for _ in range(k - 1):
        cur = [n + 1 if v == n + 1 else phi.values[v - 1] for v in cur]
    return sum(1 for v in cur if v != n + 1)
