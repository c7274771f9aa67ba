"""Linear codes, sum-rank weights, shifts, and the distance oracle."""

import random

import pytest

from sumrank import (
    LinearCode,
    Partition,
    build_tower,
    code_from_skew_generator,
    hamming_weight,
    is_cyclic_skew_cyclic,
    min_distance_bruteforce,
    phi_shift,
    rho_shift,
    sumrank_weight,
)
from sumrank.bivar import BivarPoly, biv_mul, nu_inverse
from sumrank.codes import block_rank
from sumrank.errors import BudgetExceeded, UnequalParts, ZeroCode
from sumrank.kernels import FieldTables, min_weight


class TestWeights:
    def test_metric_interpolation(self, tower9):
        t = tower9
        c = (1, 2, 0, 0, 0, 0, 3, 3, 3)
        # Hamming: all blocks size 1; rank: one block; sum-rank in between
        assert sumrank_weight(t, c, Partition.hamming(9)) == hamming_weight(c)
        assert sumrank_weight(t, c, Partition.rank(9)) == block_rank(t, c)
        assert sumrank_weight(t, c, Partition.equal(3, 3)) == 2 + 0 + 1

    def test_tensor_weight_example(self, tower4):
        # (1, w | 1, w | 0, 0) over F4: two blocks of rank 2 over F2
        t = tower4
        vec = (1, 2, 1, 2, 0, 0)
        assert sumrank_weight(t, vec, Partition.equal(3, 2)) == 4

    def test_unequal_parts_guard(self):
        with pytest.raises(UnequalParts):
            Partition((2, 3)).equal_part()


class TestLinearCode:
    def test_rref_canonical_and_contains(self, tower9):
        t = tower9
        rows = [[1, 0, 0, 1, 0, 0, 1, 0, 0], [0, 1, 0, 0, 1, 0, 0, 1, 0]]
        C = LinearCode(t, rows, Partition.equal(3, 3))
        C2 = LinearCode(t, [rows[1], [t.F.add(a, b) for a, b in zip(*rows)]], C.partition)
        assert C == C2
        assert C.contains(rows[0])
        assert not C.contains([1] + [0] * 8)

    def test_codeword_count(self, tower9):
        C = LinearCode(
            tower9,
            [[1, 0, 0, 1, 0, 0, 1, 0, 0]],
            Partition.equal(3, 3),
        )
        assert sum(1 for _ in C.codewords()) == 8

    def test_full_space_distance_one(self, tower9):
        C = LinearCode.full_space(tower9, Partition.equal(3, 3))
        assert min_distance_bruteforce(C, budget=1 << 28) == 1

    def test_zero_code_raises(self, tower9):
        C = LinearCode(tower9, [], Partition.equal(3, 3))
        with pytest.raises(ZeroCode):
            min_distance_bruteforce(C)

    def test_budget_guard(self, tower9):
        C = LinearCode.full_space(tower9, Partition.equal(3, 3))
        with pytest.raises(BudgetExceeded):
            min_distance_bruteforce(C, budget=100)


class TestShifts:
    def test_rho_rotates_blocks(self, tower9):
        c = (1, 2, 3, 4, 5, 6, 7, 0, 1)
        assert rho_shift(c, Partition.equal(3, 3)) == (7, 0, 1, 1, 2, 3, 4, 5, 6)

    def test_phi_twists_and_rotates_in_block(self, tower9):
        t = tower9
        c = (1, 2, 3, 0, 0, 0, 0, 0, 0)
        out = phi_shift(c, Partition.equal(3, 3), t)
        assert out[:3] == (t.theta(3), t.theta(1), t.theta(2))

    def test_shift_orders(self, tower9):
        rng = random.Random(2)
        t = tower9
        part = Partition.equal(3, 3)
        c = tuple(rng.randrange(8) for _ in range(9))
        v = c
        for _ in range(3):
            v = rho_shift(v, part)
        assert v == c
        # phi^N composes theta^N on each entry; phi^(N * ord theta) = id
        v = c
        for _ in range(9):
            v = phi_shift(v, part, t)
        assert v == c


class TestGeneratedCodes:
    def test_generator_code_is_csc(self, tower9):
        t = tower9
        f1 = BivarPoly.from_x_poly(t, "F", [1, 1])
        f2 = BivarPoly.from_z_poly(t, "F", [1, 1])
        C = code_from_skew_generator(biv_mul(f1, f2), t)
        assert C.k == 4
        assert is_cyclic_skew_cyclic(C)
        assert min_distance_bruteforce(C) == 2

    def test_generator_is_codeword(self, tower9):
        t = tower9
        g = BivarPoly.from_x_poly(t, "F", [1, 1, 1])
        C = code_from_skew_generator(g, t)
        assert C.contains(list(nu_inverse(g)))


class TestKernelAgreement:
    def test_jit_and_pure_agree(self, tower9):
        rng = random.Random(77)
        t = tower9
        tables = FieldTables(t)
        for _ in range(10):
            k = rng.randrange(1, 4)
            rows = [[rng.randrange(8) for _ in range(9)] for _ in range(k)]
            C = LinearCode(t, rows, Partition.equal(3, 3))
            if C.k == 0:
                continue
            parts = C.partition.parts
            assert min_weight(C.G, tables, parts) == min_weight(
                C.G, tables, parts, pure=True
            )

    def test_oracle_matches_direct_weight_scan(self, tower9):
        # independent slow oracle: min sum-rank weight over explicit codewords
        rng = random.Random(78)
        t = tower9
        part = Partition.equal(3, 3)
        for _ in range(5):
            rows = [[rng.randrange(8) for _ in range(9)] for _ in range(2)]
            C = LinearCode(t, rows, part)
            if C.k == 0:
                continue
            slow = min(
                sumrank_weight(t, cw, part)
                for cw in C.codewords()
                if any(cw)
            )
            assert min_distance_bruteforce(C) == slow
