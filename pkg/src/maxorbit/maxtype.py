"""Maximal Jordan type of a nilpotent matrix commuting with a given one.

The map Q sends a Jordan type B to the generic (dominance-maximum) Jordan
type among nilpotent matrices commuting with a nilpotent matrix of type B.
It is computed recursively: the first part of Q(B) is the generic nilpotency
index, the rest is Q of a reduced partition obtained by deleting one or two
adjacent runs and shrinking everything before them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import Partition, RunEncoding, run_encoding


@dataclass(frozen=True)
class HatSelection:
    """Choice of run window (i_tilde .. i_tilde + s) driving one reduction step.

    ``cardinality`` counts the distinguished basis vectors attached to the
    choice: two per block before the window plus every vector of the window's
    blocks.  The window maximises this count, which equals the generic
    nilpotency index.
    """

    i_tilde: int
    s: int
    cardinality: int


@dataclass(frozen=True)
class QStep:
    partition: Partition
    omega1: int
    selection: HatSelection


@dataclass(frozen=True)
class QChain:
    """Full trace of the reduction: one step per part of the result."""

    input: Partition
    steps: tuple[QStep, ...]
    result: Partition

    def to_dict(self) -> dict:
        return {
            "input": list(self.input.parts),
            "steps": [
                {
                    "partition": list(st.partition.parts),
                    "omega1": st.omega1,
                    "i_tilde": st.selection.i_tilde,
                    "s": st.selection.s,
                }
                for st in self.steps
            ],
            "result": list(self.result.parts),
        }


def omega1(b: Partition) -> int:
    """Generic nilpotency index among nilpotent matrices commuting with type B.

    Scans candidate start indices i: each contributes twice the number of
    earlier parts plus the sum of the longest spread-at-most-1 segment from i.
    A start index only qualifies while every earlier part is at least 2 (an
    earlier part of size 1 cannot contribute two boxes to a chain), which is
    exactly the run-start restriction; without it the scan overshoots on
    partitions with repeated 1s, e.g. (1,1,1).
    """
    if not b:
        raise ValueError("omega1 is undefined for the empty partition")
    parts = b.parts
    t = len(parts)
    best = 0
    for i in range(t):
        if i and parts[i - 1] < 2:
            break
        j = i
        while j + 1 < t and parts[i] - parts[j + 1] <= 1:
            j += 1
        best = max(best, 2 * i + sum(parts[i : j + 1]))
    return best


def _window_cardinality(enc: RunEncoding, i_tilde: int, s: int) -> int:
    inner = sum(enc.count(i) * enc.value(i) for i in range(i_tilde, i_tilde + s + 1))
    return 2 * enc.cum(i_tilde - 1) + inner


def hat_maximizers(b: Partition) -> tuple[HatSelection, ...]:
    """All admissible (i_tilde, s) windows achieving the maximum cardinality."""
    if not b:
        raise ValueError("selection is undefined for the empty partition")
    enc = run_encoding(b)
    found: list[HatSelection] = []
    best = -1
    for i_tilde in range(1, enc.u + 1):
        for s in (0, 1):
            if i_tilde + s > enc.u:
                continue
            if enc.value(i_tilde) - enc.value(i_tilde + s) > 1:
                continue
            card = _window_cardinality(enc, i_tilde, s)
            if card > best:
                best = card
                found = [HatSelection(i_tilde, s, card)]
            elif card == best:
                found.append(HatSelection(i_tilde, s, card))
    return tuple(found)


def select_hat(b: Partition) -> HatSelection:
    """The canonical maximiser: smallest i_tilde, then smallest s.

    Any maximiser yields the same Q(B); the tie-break only fixes which
    intermediate partitions the chain displays.
    """
    return hat_maximizers(b)[0]


def hat_with(b: Partition, selection: HatSelection) -> Partition:
    """Reduce B by a given window: drop its runs, lower earlier parts by 2.

    Runs after the window are kept as they are.  Earlier run values sit at
    least 2 above the first kept value, so the result is again a partition;
    parts that reach zero (a leading run of 2s) are dropped.
    """
    if not b:
        raise ValueError("hat is undefined for the empty partition")
    enc = run_encoding(b)
    out: list[int] = []
    for i in range(1, enc.u + 1):
        if selection.i_tilde <= i <= selection.i_tilde + selection.s:
            continue
        v = enc.value(i) - 2 if i < selection.i_tilde else enc.value(i)
        if v > 0:
            out.extend([v] * enc.count(i))
    return Partition(out)  # constructor re-checks monotonicity


def hat(b: Partition) -> Partition:
    return hat_with(b, select_hat(b))


def q_of(b: Partition) -> QChain:
    """Iterate (omega1, hat) until nothing is left; the indices form Q(B)."""
    steps: list[QStep] = []
    cur = b
    while cur:
        w = omega1(cur)
        sel = select_hat(cur)
        steps.append(QStep(cur, w, sel))
        cur = hat_with(cur, sel)
    result = Partition([st.omega1 for st in steps])
    return QChain(b, tuple(steps), result)
