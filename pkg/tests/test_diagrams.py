"""Diagram statistics, fillings, pipe dreams, walks, and the CST route."""

import random
from fractions import Fraction

import pytest

from conftest import Q, T, compositions, frac, partitions_in
from maclab import permutations as fperm
from maclab.diagrams import (
    Filling,
    box_stats,
    boxes_of,
    column_strict_tableaux,
    count,
    cst_expand,
    enumerate_fillings,
    enumerate_walks,
    filling_weight,
    filling_word,
    iter_walks,
    pipedream_convert,
    pipedream_invert,
    psi_strip,
    qt_special_count,
    u_stat,
    walk_geometry,
)
from maclab.errors import InvalidInputError
from maclab.laurent import LaurentPoly
from maclab.macdonald import compute_E, compute_E_rel, compute_P
from maclab.ratfunc import RF_ONE, RatFunc, one_minus


def word_monomial(word, n):
    out = LaurentPoly.one(n)
    for idx in word:
        out = out * LaurentPoly.x(idx, n)
    return out


class TestBoxStats:
    def test_diagram_type(self):
        from maclab.diagrams import Diagram

        d = Diagram.of((2, 0, 1))
        assert d.boxes == ((1, 1), (3, 1), (1, 2))
        assert d.coordinate[(1, 2)] == 7

    def test_nleg_formula(self):
        assert box_stats((0, 4, 5, 1, 4)).nleg[3, 2] == 3

    def test_u_values_220(self):
        bs = box_stats((2, 2, 0))
        assert bs.u == {(1, 1): 0, (2, 1): 0, (1, 2): 1, (2, 2): 1}

    def test_partition_arm_leg_bridge(self):
        # decreasing mu: narm(i,j) = mu'_{j-1} - i, nleg(i,j) = mu_i - j
        from maclab.diagrams import conjugate_partition

        mu = (4, 3, 1, 0)
        muc = conjugate_partition(mu)
        bs = box_stats(mu)
        for (i, j) in boxes_of(mu):
            assert bs.nleg[i, j] == mu[i - 1] - j
            if j > 1:
                assert bs.narm[i, j] == muc[j - 2] - i

    def test_increasing_flip_bridge(self):
        # increasing mu flips to the partition w0 mu with row i landing on
        # row n - i + 1: narm(i,j) = leg_{w0 mu}(n-i+1, j) and
        # nleg(i,j) = arm_{w0 mu}(n-i+1, j)
        from maclab.diagrams import conjugate_partition

        for mu in [(0, 1, 3, 4), (0, 0, 2, 2), (1, 2, 3)]:
            n = len(mu)
            lam = tuple(reversed(mu))
            lamc = conjugate_partition(lam)
            bs = box_stats(mu)
            for (i, j) in boxes_of(mu):
                flip = n - i + 1
                assert bs.narm[i, j] == lamc[j - 1] - flip
                assert bs.nleg[i, j] == lam[flip - 1] - j

    def test_u_respects_attack_complement(self):
        rng = random.Random(5)
        for _ in range(20):
            n = rng.randint(2, 5)
            mu = tuple(rng.randint(0, 4) for _ in range(n))
            bs = box_stats(mu)
            for b in boxes_of(mu):
                assert bs.u[b] + 1 == n - len(bs.attack[b])


class TestCounts:
    def test_big_naf(self):
        assert count((4, 3, 3, 3, 2, 2, 1, 1, 0, 0), "naf") == 3189375

    def test_term_count_row(self):
        lam = (5, 4, 2, 1, 0)
        assert count(lam, "t") == 552960
        assert count(lam, "c") == Fraction(128, 9)
        assert count(lam, "r") == Fraction(15, 2)
        assert count(lam, "cst") == 3675

    def test_zero_weight(self):
        assert count((0, 0, 0), "aw") == 1
        assert count((0, 0, 0), "naf") == 1

    def test_cst_count_matches_enumeration(self):
        assert len(column_strict_tableaux((5, 4, 2, 1, 0), 5)) == 3675
        for n in (3, 4):
            for lam in partitions_in(n, 4):
                assert len(column_strict_tableaux(lam, n)) == count(
                    tuple(list(lam) + [0] * (n - len(lam))), "cst"
                )

    def test_needs_partition(self):
        with pytest.raises(InvalidInputError):
            count((1, 2, 0), "cst")

    def test_term_count_consistency(self):
        # t(lam) = n! * #NAF_lam (distinct parts), c(lam) = #AW/#NAF, and
        # r(lam) = #NAF_rev(lam) / #NAF_lam
        from math import factorial

        lam = (5, 4, 2, 1, 0)
        n = len(lam)
        rev = (1, 2, 4, 5, 0)
        assert count(lam, "t") == factorial(n) * count(lam, "naf")
        assert count(lam, "c") == Fraction(count(lam, "aw"), count(lam, "naf"))
        assert count(lam, "r") == Fraction(
            count(rev, "naf"), count(lam, "naf")
        )


class TestFillings:
    def test_four_fillings_of_220(self):
        fills = enumerate_fillings((2, 2, 0), (1, 2, 3))
        grids = [f.as_dict() for f in fills]
        want = [
            {(1, 1): 1, (2, 1): 2, (1, 2): 1, (2, 2): 2},
            {(1, 1): 1, (2, 1): 2, (1, 2): 1, (2, 2): 3},
            {(1, 1): 1, (2, 1): 2, (1, 2): 3, (2, 2): 1},
            {(1, 1): 1, (2, 1): 2, (1, 2): 3, (2, 2): 2},
        ]
        assert grids == want

    def test_count_independent_of_basement(self):
        rng = random.Random(7)
        for _ in range(15):
            n = rng.randint(2, 4)
            mu = tuple(rng.randint(0, 3) for _ in range(n))
            naf = count(mu, "naf")
            for _ in range(3):
                z = list(range(1, n + 1))
                rng.shuffle(z)
                assert len(enumerate_fillings(mu, tuple(z))) == naf

    def test_single_column_unique(self):
        for n in (3, 4):
            for r in range(1, n + 1):
                mu = (1,) * r + (0,) * (n - r)
                assert len(enumerate_fillings(mu, fperm.identity(n))) == 1

    def test_queue_subset_and_collapse(self):
        rng = random.Random(11)
        for _ in range(15):
            n = rng.randint(2, 4)
            mu = tuple(rng.randint(0, 3) for _ in range(n))
            z = fperm.identity(n)
            naf = {f.values for f in enumerate_fillings(mu, z)}
            qt = {f.values for f in enumerate_fillings(mu, z, "queue")}
            assert qt <= naf
            if all(mu[i] != mu[i + 1] for i in range(n - 1)):
                assert qt == naf

    def test_compression_count_triples(self):
        id6 = fperm.identity(6)
        assert count((2, 2, 1, 1, 0, 0), "aw") == 16
        assert len(enumerate_fillings((2, 2, 1, 1, 0, 0), id6)) == 9
        assert len(enumerate_fillings((2, 2, 1, 1, 0, 0), id6, "queue")) == 7
        id3 = fperm.identity(3)
        for mu, triple in [
            ((1, 2, 0), (4, 3, 3)),
            ((2, 0, 1), (4, 4, 4)),
            ((2, 2, 0), (4, 4, 3)),
        ]:
            got = (
                count(mu, "aw"),
                len(enumerate_fillings(mu, id3)),
                len(enumerate_fillings(mu, id3, "queue")),
            )
            assert got == triple, mu

    def test_qt_closed_forms(self):
        for n in (2, 3, 4):
            for r in (1, 2, 3):
                zid = fperm.identity(n)
                row = (r,) + (0,) * (n - 1)
                rect = (r,) * (n - 1) + (0,)
                assert qt_special_count("row", n, r) == n ** (r - 1)
                assert len(enumerate_fillings(row, zid, "queue")) == n ** (r - 1)
                assert len(enumerate_fillings(rect, zid, "queue")) == n ** (r - 1)
                assert len(enumerate_fillings(rect, zid)) == (2 ** (n - 1)) ** (
                    r - 1
                )


class TestFillingWords:
    def test_words_201(self):
        ws = [filling_word(f)[0] for f in enumerate_fillings((2, 0, 1), (1, 2, 3))]
        assert sorted(ws) == sorted([(1, 3, 1), (1, 2, 1), (1, 3, 2), (1, 2, 3)])

    def test_words_120(self):
        ws = [filling_word(f)[0] for f in enumerate_fillings((1, 2, 0), (1, 2, 3))]
        assert sorted(ws) == sorted([(1, 2, 2), (1, 2, 1), (1, 2, 3)])

    def test_single_box_word(self):
        mu = (1, 0, 0)
        (f,) = enumerate_fillings(mu, (1, 2, 3))
        word, endpoint = filling_word(f)
        assert word == (1,)
        assert endpoint == (1, 0, 0)


class TestPipeDreams:
    def test_220_displays(self):
        fills = enumerate_fillings((2, 2, 0), (1, 2, 3))
        dreams = [pipedream_convert(f) for f in fills]
        assert dreams[0] == [[1, 1, 1], [2, 2, 2], [3, 0, 0]]
        assert dreams[1] == [[1, 1, 1], [2, 2, 0], [3, 0, 2]]
        # forced by P(k, j) = i iff T(i, j) = k
        assert dreams[2] == [[1, 1, 2], [2, 2, 0], [3, 0, 1]]
        assert dreams[3] == [[1, 1, 0], [2, 2, 2], [3, 0, 1]]

    def test_8_row_example(self):
        mu = (3, 2, 2, 2, 1, 0, 0, 0)
        z = (6, 1, 2, 7, 8, 3, 4, 5)
        grid = {
            (1, 1): 6, (1, 2): 5, (1, 3): 3,
            (2, 1): 1, (2, 2): 6,
            (3, 1): 2, (3, 2): 2,
            (4, 1): 7, (4, 2): 4,
            (5, 1): 8,
        }
        T8 = Filling(mu, z, tuple(grid[b] for b in boxes_of(mu)))
        got = pipedream_convert(T8)
        assert got == [
            [2, 2, 0, 0],
            [3, 3, 3, 0],
            [6, 0, 0, 1],
            [7, 0, 4, 0],
            [8, 0, 1, 0],
            [1, 1, 2, 0],
            [4, 4, 0, 0],
            [5, 5, 0, 0],
        ]
        assert pipedream_invert(got, mu, z) == T8

    def test_round_trip_everywhere(self):
        rng = random.Random(13)
        for _ in range(10):
            n = rng.randint(2, 4)
            mu = tuple(rng.randint(0, 3) for _ in range(n))
            z = list(range(1, n + 1))
            rng.shuffle(z)
            z = tuple(z)
            for f in enumerate_fillings(mu, z):
                assert pipedream_invert(pipedream_convert(f), mu, z) == f

    def test_empty_diagram(self):
        (f,) = enumerate_fillings((0, 0), (2, 1))
        assert pipedream_convert(f) == [[2], [1]]


class TestWalks:
    def test_30_walks(self):
        walks = enumerate_walks((3, 0), (1, 2))
        assert [w.shorthand() for w in walks] == [
            "pi s1 pi s1 pi",
            "pi s1 pi 1 pi",
            "pi 1 pi s1 pi",
            "pi 1 pi 1 pi",
        ]
        assert [sum(w.folds) for w in walks] == [0, 1, 1, 2]

    def test_count_formula(self):
        for mu, z in [((1, 2, 0), (1, 2, 3)), ((2, 0, 1), (3, 1, 2))]:
            assert len(enumerate_walks(mu, z)) == count(mu, "aw")

    def test_zero_weight_single_walk(self):
        walks = enumerate_walks((0, 0, 0), (1, 2, 3))
        assert len(walks) == 1
        assert walks[0].word == ()

    def test_geometry_mass(self):
        for w in enumerate_walks((3, 0), (1, 2)):
            geo = walk_geometry(w)
            assert sum(geo.endpoint()) == 3
            assert sum(1 for s in geo.segments if s.kind == "f") == sum(w.folds)
            for s in geo.segments:
                if s.kind != "omega":
                    assert sum(s.direction) == 0

    def test_fold_roots_on_fundamental_wall(self):
        # an immediate fold at the identity sits on eps_{i+1} - eps_i
        walks = enumerate_walks((0, 1, 0), (1, 2, 3))
        word = walks[0].word
        assert word == ("s1", "pi")
        folded = [w for w in walks if w.folds[0]][0]
        geo = walk_geometry(folded)
        root = geo.segments[0].root
        assert (root.i, root.j, root.level) == (2, 1, 0)

    def test_rho(self):
        geo = walk_geometry(enumerate_walks((0, 0, 0), (1, 2, 3))[0])
        assert geo.rho == (Fraction(1), Fraction(0), Fraction(-1))


class TestPsiAndCST:
    def test_psi_trivial(self):
        assert psi_strip((3, 1), (3, 1)) == RF_ONE
        assert psi_strip((3, 1, 0), (3, 1)) == RF_ONE

    def test_psi_single_row_is_qbinomial_factor(self):
        # the pair range is 1 <= i <= j <= l(mu); in particular a single
        # row already contributes through the diagonal pair (1,1), which
        # the P_(2,0,0) oracle pins (a strict i < j range would make this
        # 1 and break the tableau formula)
        got = psi_strip((2,), (1,))
        want = one_minus(T) * one_minus(RatFunc.q_power(2)) / (
            one_minus(RatFunc.qt_monomial(1, 1)) * one_minus(Q)
        )
        assert got == want

    def test_psi_non_strip(self):
        with pytest.raises(InvalidInputError):
            psi_strip((2, 2), (0, 0))

    def test_psi_21_over_11(self):
        got = psi_strip((2, 1), (1, 1))
        want = one_minus(RatFunc.t_power(2)) * one_minus(
            RatFunc.qt_monomial(2, 1)
        ) / (
            one_minus(RatFunc.qt_monomial(1, 2))
            * one_minus(RatFunc.qt_monomial(1, 1))
        )
        assert got == want

    def test_cst_single_row(self):
        got = cst_expand((1,), 4).poly
        want = LaurentPoly.zero(4)
        for i in range(1, 5):
            want = want + LaurentPoly.x(i, 4)
        assert got == want

    def test_cst_matches_P(self):
        for n in (3, 4):
            for lam in partitions_in(n, 4):
                if not any(lam):
                    continue
                lam_full = tuple(list(lam) + [0] * (n - len(lam)))
                got = cst_expand(lam, n).poly
                assert got == compute_P(lam_full).poly, (lam, n)


class TestTabulatedWeights:
    def test_single_box_weights_reproduce_relative_E(self):
        rng = random.Random(17)
        for n in (3, 4, 5):
            for j in range(1, n + 1):
                for _ in range(3):
                    z = list(range(1, n + 1))
                    rng.shuffle(z)
                    z = tuple(z)
                    mu = tuple(1 if k == j else 0 for k in range(1, n + 1))
                    total = LaurentPoly.zero(n)
                    for f in enumerate_fillings(mu, z):
                        word, _ = filling_word(f)
                        total = total + word_monomial(word, n).scale(
                            filling_weight(f)
                        )
                    assert total == compute_E_rel(mu, z).poly, (mu, z)

    def test_two_box_column_weights_reproduce_E(self):
        # the extra t on the descending pair below j1 is pinned by these
        # operator-route comparisons
        for n in (3, 4, 5):
            for j1 in range(1, n):
                for j2 in range(j1 + 1, n + 1):
                    mu = tuple(
                        1 if k in (j1, j2) else 0 for k in range(1, n + 1)
                    )
                    total = LaurentPoly.zero(n)
                    for f in enumerate_fillings(mu, fperm.identity(n)):
                        word, _ = filling_word(f)
                        total = total + word_monomial(word, n).scale(
                            filling_weight(f)
                        )
                    assert total == compute_E(mu).poly, mu

    def test_two_box_row_surviving_cells(self):
        # two-box-row weight cells as coefficient statements against the
        # operator route
        for n in (3, 4):
            for i in range(2, n + 1):
                mu = tuple(2 if a == i else 0 for a in range(1, n + 1))
                E = compute_E(mu).poly
                cell = (
                    one_minus(T)
                    / one_minus(RatFunc.qt_monomial(2, n - (i - 1)))
                    * frac(1, 1)
                )
                for k in range(1, i):
                    for l in range(i + 1, n + 1):
                        e = [0] * n
                        e[k - 1] = 1
                        e[l - 1] = 1
                        assert E.coeff(tuple(e)) == cell * Q
                for k in range(1, i):
                    for l in range(k + 1, i):
                        e = [0] * n
                        e[k - 1] = 1
                        e[l - 1] = 1
                        assert E.coeff(tuple(e)) == cell * (RF_ONE + Q)

    def test_weight_needs_tabulated_family(self):
        (f,) = enumerate_fillings((1, 1, 1), (1, 2, 3))
        with pytest.raises(InvalidInputError):
            filling_weight(f)
