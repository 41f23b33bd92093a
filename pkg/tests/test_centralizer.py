from collections import Counter
from pathlib import Path

import numpy as np
import pytest

from conftest import partitions_upto
from maxorbit.basis_graph import labels_in_natural_order, relates
from maxorbit.centralizer import (
    VARIANTS,
    conjugate_by_permutation,
    jordan_matrix,
    mask,
    prec_permutation,
    realize,
    sample,
    structured_nilpotency,
    subalgebra_spec,
)
from maxorbit.fieldmat import jordan_type, rank_profile
from maxorbit.maxtype import q_of
from maxorbit.partitions import Partition, ar_decomposition, run_encoding, s_max

P = 10007
DATA = Path(__file__).parent / "data"


class TestJordanMatrix:
    def test_single_block(self):
        j = jordan_matrix(Partition([3]), P)
        assert j.entries.tolist() == [[0, 1, 0], [0, 0, 1], [0, 0, 0]]

    def test_profile(self):
        assert rank_profile(jordan_matrix(Partition([2, 1]), P)).ranks == (3, 1, 0)

    def test_roundtrip(self):
        b = Partition([5, 4, 3, 3, 2, 1])
        assert jordan_type(jordan_matrix(b, P)) == b


class TestSubalgebraSpec:
    def test_nbar_count_fixture(self):
        assert subalgebra_spec(Partition([3, 3, 3, 2]), "N_bar").free_count == 34

    def test_single_block_counts(self):
        b = Partition([7])
        assert subalgebra_spec(b, "C").free_count == 7
        assert subalgebra_spec(b, "N_bar").free_count == 6

    def test_two_scalar_blocks(self):
        b = Partition([1, 1])
        assert subalgebra_spec(b, "C").free_count == 4
        assert subalgebra_spec(b, "N_bar").free_count == 1

    def test_unknown_variant(self):
        with pytest.raises(ValueError):
            subalgebra_spec(Partition([2]), "Z")

    def test_closed_forms(self):
        for b in partitions_upto(10):
            parts = b.parts
            c_count = sum(min(x, y) for x in parts for y in parts)
            mults = [c for _, c in run_encoding(b).runs]
            assert subalgebra_spec(b, "C").free_count == c_count
            assert subalgebra_spec(b, "C_bar").free_count == c_count - sum(
                m * (m - 1) // 2 for m in mults
            )
            assert subalgebra_spec(b, "N_bar").free_count == c_count - sum(
                m * (m + 1) // 2 for m in mults
            )
            d_count = sum(
                min(x, y) * (min(x, y) + 1) // 2 for x in parts for y in parts
            )
            assert subalgebra_spec(b, "D").free_count == d_count
            vals = {v: c for v, c in run_encoding(b).runs}
            assert subalgebra_spec(b, "D_bar").free_count == d_count - sum(
                v * (c * (c - 1) // 2) for v, c in vals.items()
            )
            assert subalgebra_spec(b, "E_bar").free_count == d_count - sum(
                v * (c * (c + 1) // 2) for v, c in vals.items()
            )

    def test_placements_disjoint_and_sized(self):
        for b in partitions_upto(8):
            for variant in VARIANTS:
                spec = subalgebra_spec(b, variant)
                seen = set()
                for desc in spec.coords:
                    for pos in desc.positions:
                        assert pos not in seen
                        seen.add(pos)
                if variant in ("C", "C_bar", "N_bar"):
                    for desc in spec.coords:
                        d = min(b.parts[desc.h - 1], b.parts[desc.k - 1])
                        assert len(desc.positions) == d - desc.l + 1


class TestRealize:
    def test_zero_values(self):
        spec = subalgebra_spec(Partition([3, 2]), "C")
        m = realize(spec, [0] * spec.free_count, P)
        assert not m.entries.any()

    def test_length_mismatch(self):
        spec = subalgebra_spec(Partition([3, 2]), "C")
        with pytest.raises(ValueError):
            realize(spec, [1, 2], P)

    def test_nbar_mask_fixture(self):
        spec = subalgebra_spec(Partition([3, 3, 3, 2]), "N_bar")
        expected = (DATA / "nbar_mask_3332.txt").read_text().strip()
        assert mask(spec) == expected
        # realizing distinct values reproduces the same nonzero pattern
        m = realize(spec, range(1, spec.free_count + 1), P)
        got = "\n".join("".join("*" if x else "." for x in row) for row in m.entries)
        assert got == expected

    def test_commutation(self):
        rng = np.random.default_rng(5)
        for b in partitions_upto(8):
            j = jordan_matrix(b, P)
            for variant in ("C", "C_bar", "N_bar"):
                spec = subalgebra_spec(b, variant)
                m = realize(spec, rng.integers(0, P, spec.free_count), P)
                assert m.mul(j) == j.mul(m), (b.parts, variant)


class TestSample:
    def test_deterministic(self):
        spec = subalgebra_spec(Partition([3, 2, 2]), "N_bar")
        assert sample(spec, P, seed=42) == sample(spec, P, seed=42)
        assert sample(spec, P, seed=(1, 2)) == sample(spec, P, seed=(1, 2))
        assert sample(spec, P, seed=1) != sample(spec, P, seed=2)

    def test_nbar_commutes_and_nilpotent(self):
        for b in partitions_upto(9):
            spec = subalgebra_spec(b, "N_bar")
            j = jordan_matrix(b, P)
            for s in range(3):
                a = sample(spec, P, seed=(11, s))
                assert a.mul(j) == j.mul(a)
                assert rank_profile(a).reaches_zero

    def test_ebar_single_block_strictly_upper(self):
        spec = subalgebra_spec(Partition([6]), "E_bar")
        a = sample(spec, P, seed=0)
        assert not np.any(np.tril(a.entries))


class TestStructuredNilpotency:
    def test_nbar_sample(self):
        b = Partition([3, 3, 2])
        assert structured_nilpotency(b, sample(subalgebra_spec(b, "N_bar"), P, 1))

    def test_zero(self):
        b = Partition([2, 2])
        spec = subalgebra_spec(b, "D")
        assert structured_nilpotency(b, realize(spec, [0] * spec.free_count, P))

    def test_nonzero_run_diagonal_scalar(self):
        b = Partition([2, 2])
        spec = subalgebra_spec(b, "D")
        values = [0] * spec.free_count
        idx = next(
            i
            for i, desc in enumerate(spec.coords)
            if desc.h == desc.k == 1 and desc.l == 1 and desc.positions[0] == (0, 0)
        )
        values[idx] = 3
        assert not structured_nilpotency(b, realize(spec, values, P))

    def test_mask_violation(self):
        b = Partition([2, 2])
        from maxorbit.fieldmat import FieldMatrix

        with pytest.raises(ValueError):
            structured_nilpotency(b, FieldMatrix(np.ones((4, 4), dtype=np.int64), P))

    def test_agrees_with_rank_profile(self):
        # structured test must match plain nilpotency on both outcomes
        rng = np.random.default_rng(17)
        for b in partitions_upto(8):
            for variant in ("D", "E_bar"):
                spec = subalgebra_spec(b, variant)
                for s in range(3):
                    m = realize(spec, rng.integers(0, P, spec.free_count), P)
                    assert structured_nilpotency(b, m) == rank_profile(m).reaches_zero


class TestPrecPermutation:
    def test_listing_prefix(self):
        b = Partition([4, 3, 3, 2, 1])
        enc = run_encoding(b)
        labs = labels_in_natural_order(enc)
        perm = prec_permutation(b)
        head = [
            (enc.value(labs[i].run), labs[i].j, labs[i].l) for i in perm[:5]
        ]
        assert head == [(4, 1, 4), (3, 1, 3), (3, 2, 3), (2, 1, 2), (1, 1, 1)]

    def test_single_block_identity(self):
        # the natural order already lists the chain top first
        assert prec_permutation(Partition([6])) == tuple(range(6))

    def test_triangularizes_nbar(self):
        b = Partition([3, 3, 3, 2])
        perm = prec_permutation(b)
        spec = subalgebra_spec(b, "N_bar")
        for s in range(10):
            conj = conjugate_by_permutation(sample(spec, P, seed=(3, s)), perm)
            assert not np.any(np.tril(conj.entries))

    def test_triangularizes_everything_small(self):
        for b in partitions_upto(10):
            perm = prec_permutation(b)
            for variant in ("N_bar", "E_bar"):
                spec = subalgebra_spec(b, variant)
                for s in range(3):
                    conj = conjugate_by_permutation(sample(spec, P, seed=(s,)), perm)
                    assert not np.any(np.tril(conj.entries))

    def test_rejects_non_permutation(self):
        with pytest.raises(ValueError):
            conjugate_by_permutation(jordan_matrix(Partition([2, 1]), P), (0, 0, 1))


class TestCrossModuleCoherence:
    def test_ebar_pattern_is_the_relation(self):
        # free cells of the strictly-lower-diagonal slice == edges of the
        # basis relation, matching matrix rows to edge targets
        for b in partitions_upto(8):
            enc = run_encoding(b)
            labs = labels_in_natural_order(enc)
            spec = subalgebra_spec(b, "E_bar")
            free = {pos for desc in spec.coords for pos in desc.positions}
            related = {
                (r, c)
                for r in range(b.n)
                for c in range(b.n)
                if relates(enc, labs[c], labs[r])
            }
            assert free == related, b.parts

    def test_modal_corank_counts_segments(self):
        for b in partitions_upto(6):
            spec = subalgebra_spec(b, "N_bar")
            coranks = Counter(
                b.n - rank_profile(sample(spec, P, seed=(23, s))).at(1)
                for s in range(25)
            )
            modal = coranks.most_common(1)[0][0]
            assert modal == ar_decomposition(b).r, b.parts

    def test_power_rank_bound(self):
        for b in partitions_upto(6):
            spec = subalgebra_spec(b, "N_bar")
            jprof = rank_profile(jordan_matrix(b, P))
            sb = s_max(b)
            for s in range(5):
                prof = rank_profile(sample(spec, P, seed=(29, s)))
                for m in range(b.n + 1):
                    assert prof.at(sb * m) <= jprof.at(m)

    def test_generic_type_is_q(self):
        b = Partition([4, 2, 1])
        spec = subalgebra_spec(b, "N_bar")
        types = {jordan_type(sample(spec, P, seed=(31, s))) for s in range(20)}
        assert q_of(b).result in types
