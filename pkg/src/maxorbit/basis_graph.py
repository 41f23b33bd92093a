"""Leveled graph on the canonical basis attached to a Jordan type.

Basis vectors are labelled (run, j, l): run indexes a group of equal Jordan
block sizes, j a block inside the run, l the depth inside the block's chain
(l = value means the top of the chain, killed by the Jordan matrix).  A
strict partial order relates src -> dst when a generic structured nilpotent
element maps src onto a combination containing dst; the level of a vector is
the length of the longest chain ending at it.  The number of levels equals
the generic nilpotency index, giving an independent check of the formula in
:mod:`maxtype`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .maxtype import HatSelection, select_hat
from .partitions import Ordering, Partition, RunEncoding, run_encoding


@dataclass(frozen=True)
class BasisLabel:
    """One canonical basis vector: run index, block index within run, depth."""

    run: int
    j: int
    l: int


def labels_in_natural_order(enc: RunEncoding) -> tuple[BasisLabel, ...]:
    """All labels ordered as the underlying matrix coordinates.

    Runs ascend; within a run j descends (j = count maps to the run's first
    block); within a block l descends from the value, which walks the block's
    rows top to bottom.
    """
    labels = []
    for i in range(1, enc.u + 1):
        v = enc.value(i)
        for j in range(enc.count(i), 0, -1):
            for l in range(v, 0, -1):
                labels.append(BasisLabel(i, j, l))
    return tuple(labels)


def _check_label(enc: RunEncoding, lab: BasisLabel) -> None:
    if not (1 <= lab.run <= enc.u):
        raise ValueError(f"run index out of range: {lab}")
    if not (1 <= lab.j <= enc.count(lab.run)):
        raise ValueError(f"block index out of range: {lab}")
    if not (1 <= lab.l <= enc.value(lab.run)):
        raise ValueError(f"depth out of range: {lab}")


def relates(enc: RunEncoding, src: BasisLabel, dst: BasisLabel) -> bool:
    """Edge src -> dst of the basis relation.

    Writing (i, j, l) for dst and (i', j', l') for src, the edge exists when
    one of the following holds:

    * i < i'  and value(i) - l <= value(i') - l'
    * i = i', j >= j' and l > l'
    * i > i'  and l >= l'
    * i = i', j < j'  and l >= l'
    """
    _check_label(enc, src)
    _check_label(enc, dst)
    if src == dst:
        return False
    i, j, l = dst.run, dst.j, dst.l
    i2, j2, l2 = src.run, src.j, src.l
    if i < i2:
        return enc.value(i) - l <= enc.value(i2) - l2
    if i > i2:
        return l >= l2
    if j >= j2 and l > l2:
        return True
    return j < j2 and l >= l2


def prec_key(enc: RunEncoding, lab: BasisLabel) -> tuple[int, int, int]:
    """Sort key realising the upper-triangularising order.

    Vectors are grouped by distance from the top of their chain, then by run,
    then by block index.  Every edge of the relation points from a later
    vector to an earlier one in this order.
    """
    return (enc.value(lab.run) - lab.l, lab.run, lab.j)


def ll_key(enc: RunEncoding, lab: BasisLabel) -> tuple[int, int, int]:
    """Alternative total order: depth descending, then run descending, then j."""
    return (-lab.l, -lab.run, lab.j)


def _compare(ka, kb) -> Ordering:
    if ka == kb:
        return Ordering.EQUAL
    return Ordering.LESS if ka < kb else Ordering.GREATER


def prec_compare(enc: RunEncoding, x: BasisLabel, y: BasisLabel) -> Ordering:
    _check_label(enc, x)
    _check_label(enc, y)
    return _compare(prec_key(enc, x), prec_key(enc, y))


def ll_compare(enc: RunEncoding, x: BasisLabel, y: BasisLabel) -> Ordering:
    _check_label(enc, x)
    _check_label(enc, y)
    return _compare(ll_key(enc, x), ll_key(enc, y))


@dataclass(frozen=True)
class BGraph:
    """The leveled basis graph of a partition."""

    partition: Partition
    encoding: RunEncoding
    labels: tuple[BasisLabel, ...]
    edges: dict[BasisLabel, tuple[BasisLabel, ...]]
    level: dict[BasisLabel, int]
    omega1: int
    selection: HatSelection
    delta_circ: frozenset[BasisLabel]

    def rows(self) -> list[list[BasisLabel]]:
        """Labels grouped by level, each row sorted by run then j."""
        out: list[list[BasisLabel]] = [[] for _ in range(self.omega1)]
        for lab in self.labels:
            out[self.level[lab]].append(lab)
        for row in out:
            row.sort(key=lambda lab: (lab.run, lab.j))
        return out


def build_graph(b: Partition) -> BGraph:
    """Build the relation, its levels, and the distinguished subset.

    Levels come from a single longest-path sweep: processing vectors from the
    back of the triangularising order guarantees every edge source is handled
    before its target.
    """
    if not b:
        raise ValueError("the graph is undefined for the empty partition")
    enc = run_encoding(b)
    labels = labels_in_natural_order(enc)
    n = len(labels)
    order = sorted(range(n), key=lambda a: prec_key(enc, labels[a]))
    pos = {a: p for p, a in enumerate(order)}

    succ: list[list[int]] = [[] for _ in range(n)]
    pred: list[list[int]] = [[] for _ in range(n)]
    for a in range(n):
        for c in range(n):
            if a == c:
                continue
            if relates(enc, labels[a], labels[c]):
                # every edge must run against the triangularising order
                assert pos[a] > pos[c], (labels[a], labels[c])
                succ[a].append(c)
                pred[c].append(a)

    level = [0] * n
    for p in range(n - 1, -1, -1):
        dst = order[p]
        best = -1
        for src in pred[dst]:
            if level[src] > best:
                best = level[src]
        level[dst] = best + 1

    omega = 1 + max(level)
    sel = select_hat(b)
    circ = set()
    for lab in labels:
        if lab.run < sel.i_tilde:
            if lab.l == 1 or lab.l == enc.value(lab.run):
                circ.add(lab)
        elif lab.run <= sel.i_tilde + sel.s:
            circ.add(lab)

    edges = {
        labels[a]: tuple(labels[c] for c in targets) for a, targets in enumerate(succ)
    }
    levels = {labels[a]: level[a] for a in range(n)}
    return BGraph(b, enc, labels, edges, levels, omega, sel, frozenset(circ))


def _cell(g: BGraph, lab: BasisLabel) -> str:
    mark = "*" if lab in g.delta_circ else ""
    return f"v[{g.encoding.value(lab.run)},{lab.j}]^{lab.l}{mark}"


def render_graph(g: BGraph, fmt: str = "text") -> str:
    """Render the graph as an aligned text table or as JSON records.

    The text table has one row per level and one column per run, columns
    ordered by increasing block size as in hand-drawn versions; distinguished
    vectors carry a trailing ``*``.  The JSON form is a list of records
    ``{level, run, j, l, in_delta_circ}``.
    """
    if fmt == "json":
        records = [
            {
                "level": g.level[lab],
                "run": lab.run,
                "j": lab.j,
                "l": lab.l,
                "in_delta_circ": lab in g.delta_circ,
            }
            for lab in sorted(g.labels, key=lambda lab: (g.level[lab], lab.run, lab.j))
        ]
        return json.dumps(records)
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")

    cols = list(range(g.encoding.u, 0, -1))  # ascending block size
    cells: dict[tuple[int, int], str] = {}
    for lab in g.labels:
        key = (g.level[lab], lab.run)
        assert key not in cells  # one vector per run and level
        cells[key] = _cell(g, lab)
    widths = {
        run: max(
            [len(str(g.encoding.value(run)))]
            + [len(s) for (_, r), s in cells.items() if r == run]
        )
        for run in cols
    }
    lvw = len(str(g.omega1 - 1))
    lines = [
        " " * lvw
        + "  "
        + "  ".join(str(g.encoding.value(run)).ljust(widths[run]) for run in cols)
    ]
    for lv in range(g.omega1):
        row = [str(lv).rjust(lvw)]
        for run in cols:
            row.append(cells.get((lv, run), "").ljust(widths[run]))
        lines.append("  ".join(row).rstrip())
    return "\n".join(lines)
