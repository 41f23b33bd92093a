"""Integer partitions: parsing, dominance order, almost-rectangular structure.

A partition is a weakly decreasing sequence of positive integers.  It doubles
as the Jordan type of a nilpotent matrix: the multiset of its Jordan block
sizes.  Everything here is pure and operates on immutable values.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable, Iterator


class Partition:
    """Weakly decreasing sequence of positive integers (possibly empty)."""

    __slots__ = ("parts", "_n")

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(int(x) for x in parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts not weakly decreasing: {parts}")
        if parts and parts[-1] < 1:
            raise ValueError(f"parts must be positive integers: {parts}")
        self.parts = parts
        self._n = sum(parts)

    @property
    def n(self) -> int:
        """Weight: sum of the parts."""
        return self._n

    @property
    def t(self) -> int:
        """Number of parts."""
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"


class Ordering(enum.Enum):
    """Outcome of a dominance comparison."""

    LESS = "Less"
    EQUAL = "Equal"
    GREATER = "Greater"
    INCOMPARABLE = "Incomparable"


@dataclass(frozen=True)
class RunEncoding:
    """Run-length form of a partition.

    ``runs`` is a sequence of (value, count) with strictly decreasing values;
    ``cumulative`` holds the partial sums of the counts, so ``cumulative[-1]``
    is the number of parts.
    """

    runs: tuple[tuple[int, int], ...]
    cumulative: tuple[int, ...]

    @property
    def u(self) -> int:
        return len(self.runs)

    def value(self, i: int) -> int:
        """Part size of the i-th run (1-based)."""
        return self.runs[i - 1][0]

    def count(self, i: int) -> int:
        """Multiplicity of the i-th run (1-based)."""
        return self.runs[i - 1][1]

    def cum(self, i: int) -> int:
        """Number of parts in runs 1..i; cum(0) == 0."""
        return self.cumulative[i - 1] if i >= 1 else 0

    def expand(self) -> Partition:
        out: list[int] = []
        for v, c in self.runs:
            out.extend([v] * c)
        return Partition(out)


@dataclass(frozen=True)
class ArDecomposition:
    """Segmentation of a partition into almost rectangular pieces.

    ``breakpoints`` are the 1-based indices ending each segment; the i-th
    segment spans parts (breakpoints[i-1], breakpoints[i]].  Within a segment
    the parts differ by at most 1; the last part of a segment exceeds the last
    part of the next segment by more than 1.
    """

    breakpoints: tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.breakpoints)

    def segment_bounds(self) -> tuple[tuple[int, int], ...]:
        """1-based inclusive (start, end) pairs, left to right."""
        bounds = []
        lo = 1
        for hi in self.breakpoints:
            bounds.append((lo, hi))
            lo = hi + 1
        return tuple(bounds)


_TOKEN = re.compile(r"(-?\d+)(?:\^(-?\d+))?$")


def parse_partition(text: str) -> Partition:
    """Parse a partition from text.

    Accepts comma- or whitespace-separated positive integers, each optionally
    carrying a caret exponent ("3^4" means four parts of size 3).  Input order
    is irrelevant; the result is sorted weakly decreasing.
    """
    parts: list[int] = []
    for tok in text.replace(",", " ").split():
        m = _TOKEN.match(tok)
        if m is None:
            raise ValueError(f"invalid partition token {tok!r}")
        value = int(m.group(1))
        if value < 1:
            raise ValueError(f"part must be a positive integer: {tok!r}")
        mult = 1
        if m.group(2) is not None:
            mult = int(m.group(2))
            if mult < 1:
                raise ValueError(f"exponent must be positive: {tok!r}")
        parts.extend([value] * mult)
    parts.sort(reverse=True)
    return Partition(parts)


def format_partition(p: Partition, exponents: bool = False) -> str:
    """Render a partition as text: flat "5,4,3,3" or exponent form "5 4 3^2"."""
    if not exponents:
        return ",".join(str(x) for x in p.parts)
    pieces = []
    for v, c in run_encoding(p).runs:
        pieces.append(f"{v}^{c}" if c > 1 else str(v))
    return " ".join(pieces)


def dominance(a: Partition, b: Partition) -> Ordering:
    """Compare two partitions of the same weight in dominance order.

    a <= b holds exactly when every prefix sum of a is at most the matching
    prefix sum of b (missing parts count as zero).  Partitions of different
    weights are rejected: the order is only used within a single weight.
    """
    if a.n != b.n:
        raise ValueError(f"dominance undefined for different weights: {a.n} != {b.n}")
    le = ge = True
    sa = sb = 0
    for i in range(max(a.t, b.t)):
        sa += a.parts[i] if i < a.t else 0
        sb += b.parts[i] if i < b.t else 0
        if sa > sb:
            le = False
        if sa < sb:
            ge = False
    if le and ge:
        return Ordering.EQUAL
    if le:
        return Ordering.LESS
    if ge:
        return Ordering.GREATER
    return Ordering.INCOMPARABLE


def run_encoding(b: Partition) -> RunEncoding:
    """Group equal parts into (value, count) runs."""
    runs: list[tuple[int, int]] = []
    for x in b.parts:
        if runs and runs[-1][0] == x:
            runs[-1] = (x, runs[-1][1] + 1)
        else:
            runs.append((x, 1))
    cum: list[int] = []
    total = 0
    for _, c in runs:
        total += c
        cum.append(total)
    return RunEncoding(tuple(runs), tuple(cum))


def is_almost_rectangular(b: Partition) -> bool:
    """True when the largest and smallest parts differ by at most 1."""
    if not b:
        return True
    return b.parts[0] - b.parts[-1] <= 1


def ar_decomposition(b: Partition) -> ArDecomposition:
    """Split a partition into its canonical almost rectangular segments.

    Scanning from the right, each segment is extended leftwards as far as the
    spread stays at most 1.  This is the unique segmentation in which the last
    part of each segment drops by more than 1 to the last part of the next,
    and it uses the minimum possible number of segments.
    """
    if not b:
        raise ValueError("ar_decomposition is undefined for the empty partition")
    parts = b.parts
    ends: list[int] = []
    e = len(parts)
    while e > 0:
        target = parts[e - 1]
        start = e
        while start > 1 and parts[start - 2] - target <= 1:
            start -= 1
        ends.append(e)
        e = start - 1
    ends.reverse()
    return ArDecomposition(tuple(ends))


def s_max(b: Partition) -> int:
    """Length of the longest contiguous almost rectangular segment."""
    if not b:
        raise ValueError("s_max is undefined for the empty partition")
    parts = b.parts
    best = 1
    j = 0
    for i in range(len(parts)):
        if j < i:
            j = i
        while j + 1 < len(parts) and parts[i] - parts[j + 1] <= 1:
            j += 1
        best = max(best, j - i + 1)
    return best


def tilde(b: Partition) -> Partition:
    """Collapse each almost rectangular segment to its sum.

    The sums are re-sorted: segment order follows the original parts, but a
    short leading segment can sum below a long trailing one.
    """
    if not b:
        return Partition()
    sums = []
    for lo, hi in ar_decomposition(b).segment_bounds():
        sums.append(sum(b.parts[lo - 1 : hi]))
    sums.sort(reverse=True)
    return Partition(sums)


def power_type(n: int, s: int) -> Partition:
    """Jordan type of the s-th power of the full n x n Jordan block.

    With n = q*s + r the result has r parts equal to q+1 and s-r parts equal
    to q; zero parts are dropped.
    """
    if s < 1:
        raise ValueError("power exponent must be >= 1")
    if n < 0:
        raise ValueError("matrix size must be >= 0")
    q, r = divmod(n, s)
    parts = [q + 1] * r + [q] * (s - r)
    return Partition([x for x in parts if x > 0])


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """Yield all partitions of n in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("cannot partition a negative integer")
    if n == 0:
        yield Partition()
        return
    a = [n]
    while True:
        yield Partition(a)
        k = len(a) - 1
        while k >= 0 and a[k] == 1:
            k -= 1
        if k < 0:
            return
        x = a[k] - 1
        rem = len(a) - k  # the decremented unit plus all trailing ones
        a = a[:k] + [x]
        while rem > 0:
            c = min(x, rem)
            a.append(c)
            rem -= c
