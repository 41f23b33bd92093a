"""Structured subalgebras attached to a nilpotent Jordan matrix.

Writing a matrix in blocks matching the Jordan block sizes, the commutant of
the Jordan matrix consists of matrices whose blocks are upper triangular
Toeplitz strips (right-aligned when the block is wide, top rows when tall).
Dropping the Toeplitz constraint gives a larger algebra D; intersecting with
lower-triangularity conditions on the per-run leading-diagonal sub-blocks
carves out affine slices whose elements are automatically nilpotent and which
meet every nilpotent orbit meeting the commutant.  Variants:

* ``C``     commutant: one free parameter per block diagonal
* ``C_bar`` commutant with strictly-upper same-run leading parameters removed
* ``N_bar`` C_bar minus the same-run diagonal leading parameters (nilpotent)
* ``D``     blockwise strips, one free parameter per strip position
* ``D_bar`` D with same-run strictly-upper leading diagonals removed
* ``E_bar`` D_bar minus same-run diagonal leading diagonals (nilpotent)
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .basis_graph import labels_in_natural_order, prec_key
from .fieldmat import FieldMatrix, rank_profile
from .partitions import Partition, run_encoding

VARIANTS = ("C", "C_bar", "N_bar", "D", "D_bar", "E_bar")


@dataclass(frozen=True)
class CoordDescriptor:
    """One free parameter: a block pair, a strip diagonal, and its positions.

    ``positions`` are the global (row, col) cells this parameter fills.  For
    Toeplitz variants that is the whole diagonal of the strip; for the
    independent variants each position is its own descriptor.
    """

    h: int
    k: int
    l: int
    positions: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class SubalgebraSpec:
    """Free and constrained coordinates of one subalgebra variant."""

    variant: str
    partition: Partition
    coords: tuple[CoordDescriptor, ...]
    constrained: tuple[CoordDescriptor, ...]

    @property
    def n(self) -> int:
        return self.partition.n

    @property
    def free_count(self) -> int:
        return len(self.coords)


def _block_offsets(b: Partition) -> list[int]:
    offs = [0]
    for m in b.parts:
        offs.append(offs[-1] + m)
    return offs


def _diagonal_positions(b, offs, h, k, l):
    """Cells of the l-th strip diagonal of block (h, k), 0-based global."""
    mh, mk = b.parts[h - 1], b.parts[k - 1]
    d = min(mh, mk)
    pad = mk - d  # leading zero columns of a wide block
    return tuple(
        (offs[h - 1] + m, offs[k - 1] + pad + m + l - 1) for m in range(d - l + 1)
    )


def subalgebra_spec(b: Partition, variant: str) -> SubalgebraSpec:
    """Enumerate the free coordinates of a subalgebra variant.

    Coordinates are listed block row-major, then by diagonal, then along the
    diagonal; sampling determinism relies on this fixed order.
    """
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; expected one of {VARIANTS}")
    offs = _block_offsets(b)
    toeplitz = variant in ("C", "C_bar", "N_bar")
    free: list[CoordDescriptor] = []
    constrained: list[CoordDescriptor] = []
    for h in range(1, b.t + 1):
        for k in range(1, b.t + 1):
            same_run = b.parts[h - 1] == b.parts[k - 1]
            d = min(b.parts[h - 1], b.parts[k - 1])
            for l in range(1, d + 1):
                drop = same_run and l == 1
                if variant in ("C", "D"):
                    drop = False
                elif variant in ("C_bar", "D_bar"):
                    drop = drop and h < k
                else:  # N_bar, E_bar
                    drop = drop and h <= k
                positions = _diagonal_positions(b, offs, h, k, l)
                if toeplitz:
                    descs = [CoordDescriptor(h, k, l, positions)]
                else:
                    descs = [CoordDescriptor(h, k, l, (pos,)) for pos in positions]
                (constrained if drop else free).extend(descs)
    return SubalgebraSpec(variant, b, tuple(free), tuple(constrained))


def realize(spec: SubalgebraSpec, values, p: int) -> FieldMatrix:
    """Write one value per free coordinate into its positions."""
    values = list(values)
    if len(values) != spec.free_count:
        raise ValueError(
            f"expected {spec.free_count} values for {spec.variant}, got {len(values)}"
        )
    a = np.zeros((spec.n, spec.n), dtype=np.int64)
    for desc, val in zip(spec.coords, values):
        for r, c in desc.positions:
            a[r, c] = int(val) % p
    return FieldMatrix(a, p)


def sample(spec: SubalgebraSpec, p: int, seed) -> FieldMatrix:
    """Draw uniform independent coordinates from a seeded generator.

    ``seed`` may be an int or a sequence (e.g. (base_seed, index)), so
    parallel drawings are reproducible per index.
    """
    rng = np.random.default_rng(seed)
    return realize(spec, rng.integers(0, p, size=spec.free_count), p)


def mask(spec: SubalgebraSpec) -> str:
    """Zero/free pattern: '.' forced zero, '*' free, one row per line."""
    grid = [["."] * spec.n for _ in range(spec.n)]
    for desc in spec.coords:
        for r, c in desc.positions:
            grid[r][c] = "*"
    return "\n".join("".join(row) for row in grid)


def jordan_matrix(b: Partition, p: int) -> FieldMatrix:
    """Block-diagonal nilpotent Jordan matrix with the given block sizes."""
    a = np.zeros((b.n, b.n), dtype=np.int64)
    off = 0
    for m in b.parts:
        for r in range(m - 1):
            a[off + r, off + r + 1] = 1
        off += m
    return FieldMatrix(a, p)


def structured_nilpotency(b: Partition, x: FieldMatrix) -> bool:
    """Nilpotency test through the per-run diagonal sub-blocks.

    For a matrix in the blockwise-strip algebra D, nilpotency is equivalent to
    nilpotency of every small matrix collecting, for one run and one diagonal
    position, the corresponding leading-diagonal entries across the run's
    blocks.  Raises if x has entries outside the D pattern.
    """
    if x.dim != b.n:
        raise ValueError("matrix size does not match the partition weight")
    allowed = np.zeros((b.n, b.n), dtype=bool)
    offs = _block_offsets(b)
    for desc in subalgebra_spec(b, "D").coords:
        for r, c in desc.positions:
            allowed[r, c] = True
    if np.any(x.entries[~allowed]):
        raise ValueError("matrix has entries outside the block strip pattern")
    enc = run_encoding(b)
    for i in range(1, enc.u + 1):
        blocks = range(enc.cum(i - 1) + 1, enc.cum(i) + 1)
        for pos in range(enc.value(i)):
            sub = [
                [int(x.entries[offs[h - 1] + pos, offs[k - 1] + pos]) for k in blocks]
                for h in blocks
            ]
            if not rank_profile(FieldMatrix(sub, x.p)).reaches_zero:
                return False
    return True


def prec_permutation(b: Partition) -> tuple[int, ...]:
    """Positions of the triangularising basis order inside the natural order.

    perm[a] is the natural-order index of the a-th vector of the reordered
    basis; conjugating any strictly-lower-run-diagonal sample by it yields a
    strictly upper triangular matrix.
    """
    enc = run_encoding(b)
    labels = labels_in_natural_order(enc)
    return tuple(sorted(range(len(labels)), key=lambda a: prec_key(enc, labels[a])))


def conjugate_by_permutation(x: FieldMatrix, perm) -> FieldMatrix:
    perm = list(perm)
    if sorted(perm) != list(range(x.dim)):
        raise ValueError("not a permutation of the matrix indices")
    return FieldMatrix(x.entries[np.ix_(perm, perm)], x.p)
