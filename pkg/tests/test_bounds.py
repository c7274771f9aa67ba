"""Defining sets, the three bound checkers, the search, and the rank oracles."""

import random
from math import gcd

import pytest

from sumrank import (
    build_tower,
    code_from_skew_generator,
    find_normal_element,
    min_distance_bruteforce,
    primitive_ell_root,
)
from sumrank.bivar import BivarPoly, biv_mul
from sumrank.bounds import (
    BoundParams,
    DefiningSetView,
    SearchLimits,
    bch_check,
    best_bound_search,
    ht_check,
    lrs_generator_matrix,
    roos_check,
    selection_rank_oracle,
)
from sumrank.errors import (
    GridNotContained,
    NotNormal,
    NotPrimitive,
    PreconditionViolated,
    SelectionTooSmall,
    ZeroCode,
)
from sumrank import linalg
from sumrank.product import product_generator_poly
from sumrank.skew import SkewPoly


@pytest.fixture(scope="module")
def example(tower9):
    """The product code generated by f1 = x^2+x+1, f2 = z+1 (k = 2, d = 3)."""
    t = tower9
    g = product_generator_poly(t, (1, 1, 1), SkewPoly(t, "F", (1, 1)))
    C = code_from_skew_generator(g, t)
    D = DefiningSetView.from_generator(t, g)
    return t, g, C, D


class TestDefiningSet:
    def test_x_factor_annihilates_for_all_beta(self, tower9):
        t = tower9
        a = primitive_ell_root(t).in_level("L").val
        grid = [[0] * t.N for _ in range(t.ell)]
        grid[0][0] = a
        grid[1][0] = 1  # g = x + a over L
        D = DefiningSetView.from_generator(t, BivarPoly.from_lists(t, "L", grid))
        for j in range(t.m):
            assert D.grid_member(1, j)  # a^1 is the root of x + a

    def test_unit_generator_empty_set(self, tower9):
        D = DefiningSetView.from_generator(tower9, BivarPoly.one(tower9))
        assert not any(v for row in D.grid_table() for v in row)

    def test_grid_reduction(self, example):
        _, _, _, D = example
        assert D.grid_member(0, 0) == D.grid_member(3, 3)


class TestCheckers:
    def test_delta_one_always_succeeds(self, example):
        _, _, C, D = example
        cert = bch_check(D, BoundParams("bch", 0, 1, t=1), C.code_id())
        assert cert.bound == 1 and cert.grid == ()

    def test_bch_on_example(self, example):
        _, _, C, D = example
        cert = bch_check(D, BoundParams("bch", 1, 3, t=1), C.code_id())
        assert cert.bound == 3
        assert cert.grid == ((1, 0), (2, 1))
        assert cert.bound <= min_distance_bruteforce(C)

    def test_missing_pair_reported(self, example):
        _, _, _, D = example
        with pytest.raises(GridNotContained) as err:
            bch_check(D, BoundParams("bch", 0, 3, t=1))
        assert "(0, 0)" in str(err.value)

    def test_bch_bad_step(self, example):
        _, _, _, D = example
        with pytest.raises(PreconditionViolated):
            bch_check(D, BoundParams("bch", 0, 2, t=3))  # gcd(9, 3) != 1

    def test_roos_window_violation(self, example):
        _, _, _, D = example
        with pytest.raises(PreconditionViolated):
            roos_check(D, BoundParams("roos", 0, 2, r=1, s=1, ks=(0, 5)))

    def test_ht_t2_gcd_violation(self, example):
        _, _, _, D = example
        with pytest.raises(PreconditionViolated):
            ht_check(D, BoundParams("ht", 0, 2, r=1, t1=1, t2=3))  # gcd(9,3)=3 >= 2

    def test_repeated_pairs_rejected(self, tower9):
        # with ell = m = 3 a step-pattern repeats pairs every 3 exponents;
        # an all-member predicate isolates the distinctness check
        D = DefiningSetView.from_predicate(tower9, lambda a, b: True)
        with pytest.raises(PreconditionViolated):
            bch_check(D, BoundParams("bch", 1, 5, t=1))

    def test_ht_r0_equals_bch(self, example):
        _, _, C, D = example
        b = ht_check(D, BoundParams("ht", 1, 3, r=0, t1=1, t2=1), C.code_id())
        c = bch_check(D, BoundParams("bch", 1, 3, t=1), C.code_id())
        assert b.bound == c.bound and b.grid == c.grid

    def test_roos_matches_ht_on_shared_instances(self, example):
        _, _, C, D = example
        # k_j = j * t2 with t2 = 1
        h = ht_check(D, BoundParams("ht", 1, 2, r=1, t1=1, t2=1), C.code_id())
        r = roos_check(D, BoundParams("roos", 1, 2, r=1, s=1, ks=(0, 1)), C.code_id())
        assert h.bound == r.bound
        assert sorted(h.grid) == sorted(r.grid)


class TestSearch:
    def test_search_on_example_is_tight(self, example):
        _, _, C, D = example
        cert = best_bound_search(D, code_id=C.code_id())
        assert cert.bound == 3 == min_distance_bruteforce(C)

    def test_full_space_bound_one(self, tower9):
        D = DefiningSetView.from_generator(tower9, BivarPoly.one(tower9))
        assert best_bound_search(D).bound == 1

    def test_zero_generator_rejected(self, tower9):
        D = DefiningSetView.from_generator(tower9, BivarPoly.zero(tower9))
        with pytest.raises(ZeroCode):
            best_bound_search(D)

    def test_limits_respected(self, example):
        _, _, _, D = example
        cert = best_bound_search(D, SearchLimits(delta_max=2, r_max=0))
        assert cert.bound <= 2

    def test_corpus_soundness_sample(self, tower9, corpus):
        # full-corpus soundness lives in the acceptance suite; spot-check here
        t = tower9
        f1s, f2s = corpus
        rng = random.Random(3)
        for _ in range(8):
            f1 = rng.choice(f1s)
            f2 = rng.choice(f2s)
            g = product_generator_poly(t, f1, f2)
            C = code_from_skew_generator(g, t)
            if C.k == 0:
                continue
            cert = best_bound_search(DefiningSetView.from_generator(t, g))
            assert cert.bound <= min_distance_bruteforce(C)


class TestLrsMatrix:
    def test_full_rank_all_k(self, tower_ell1):
        t = tower_ell1
        a = primitive_ell_root(t)
        beta = find_normal_element(t)
        for b in (0, 1):
            for k in range(1, t.n + 1):
                M = lrs_generator_matrix(t, a, beta, b, k)
                assert linalg.rank(M, t.L) == k

    def test_single_row_is_conjugate_basis(self, tower_ell1):
        t = tower_ell1
        a = primitive_ell_root(t)
        beta = find_normal_element(t)
        M = lrs_generator_matrix(t, a, beta, 0, 1)
        bval = beta.in_level("L").val
        assert list(M[0]) == [t.sigma(bval, j) for j in range(t.m)]

    def test_rejects_non_normal_and_non_primitive(self, tower_ell1):
        t = tower_ell1
        a = primitive_ell_root(t)
        with pytest.raises(NotNormal):
            lrs_generator_matrix(t, a, 1, 0, 1)
        t5 = build_tower(2, 1, 3, 4, 5, 3)
        with pytest.raises(NotPrimitive):
            lrs_generator_matrix(t5, 1, find_normal_element(t5), 0, 1)


class TestSelectionOracle:
    def _random_case(self, t, rng, max_total):
        import itertools

        blocks = list(
            itertools.chain.from_iterable(
                itertools.combinations(range(t.m), sz) for sz in range(t.m + 1)
            )
        )
        units = [u for u in range(1, t.n) if gcd(u, t.n) == 1]
        while True:
            sel = tuple(rng.choice(blocks) for _ in range(t.ell))
            total = sum(len(s) for s in sel)
            if not 2 <= total <= max_total:
                continue
            r = rng.randrange(0, total)
            t_steps = total - r
            pool = list(range(1, t_steps + r))
            if len(pool) < r:
                continue
            ks = (0,) + tuple(sorted(rng.sample(pool, r)))
            return sel, ks, rng.choice(units), rng.randrange(t.ell)

    def test_lemma_ranks(self, tower_ell1):
        t = tower_ell1
        a = primitive_ell_root(t)
        beta = find_normal_element(t)
        rng = random.Random(19)
        for _ in range(100):
            sel, ks, s, b = self._random_case(t, rng, 3)
            total = sum(len(x) for x in sel)
            r = len(ks) - 1
            t_steps = total - r
            assert selection_rank_oracle(t, a, beta, sel, ks, s, 0, b) == r + 1
            assert (
                selection_rank_oracle(t, a, beta, sel, ks, s, t_steps - 1, b)
                == r + t_steps
            )

    def test_lemma_ranks_multiblock(self):
        t = build_tower(2, 1, 3, 4, 5, 3)  # ell = 5 coprime to m = 3
        a = primitive_ell_root(t)
        beta = find_normal_element(t)
        rng = random.Random(29)
        for _ in range(60):
            sel, ks, s, b = self._random_case(t, rng, 5)
            total = sum(len(x) for x in sel)
            r = len(ks) - 1
            t_steps = total - r
            assert selection_rank_oracle(t, a, beta, sel, ks, s, 0, b) == r + 1
            assert (
                selection_rank_oracle(t, a, beta, sel, ks, s, t_steps - 1, b)
                == r + t_steps
            )

    def test_selection_too_small(self, tower_ell1):
        t = tower_ell1
        a = primitive_ell_root(t)
        beta = find_normal_element(t)
        with pytest.raises(SelectionTooSmall):
            selection_rank_oracle(t, a, beta, ((0,),), (0, 1), 1, 0)

    def test_noncoprime_ell_rejected(self, tower9):
        t = tower9  # ell = m = 3 violates the basis-construction hypothesis
        a = primitive_ell_root(t)
        beta = find_normal_element(t)
        with pytest.raises(PreconditionViolated):
            selection_rank_oracle(t, a, beta, ((0,), (1,), ()), (0,), 1, 0)
