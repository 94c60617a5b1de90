"""Exact linear algebra cross-checks: two routes must agree everywhere."""

import random
from fractions import Fraction

import pytest

from groupfft.abelian import AbelianGroup, character_matrix, character_matrix_inverse
from groupfft.cyclotomic import cyclotomic_field
from groupfft.errors import NotInvertible
from groupfft.linalg import (
    _rank_bareiss,
    _rank_plain,
    identity_matrix,
    mat_det,
    mat_eq,
    mat_inverse,
    mat_mul,
    mat_rank,
)
from groupfft.rings import QQ, PrimeField, UniPoly
from groupfft.transform import interpolate_at_roots_of_unity

F7 = PrimeField(7)


def random_rational_matrix(rng, rows, cols, lo=-6, hi=7):
    return [[Fraction(rng.randrange(lo, hi)) for _ in range(cols)] for _ in range(rows)]


class TestRank:
    def test_bareiss_agrees_with_plain_over_q(self):
        rng = random.Random(19)
        for _ in range(200):
            rows = rng.randrange(1, 6)
            cols = rng.randrange(1, 6)
            m = random_rational_matrix(rng, rows, cols, -3, 4)
            assert _rank_bareiss(m) == _rank_plain(m, QQ)

    def test_rank_of_outer_products(self):
        rng = random.Random(23)
        for _ in range(100):
            n = rng.randrange(2, 6)
            u = [Fraction(rng.randrange(-5, 6)) for _ in range(n)]
            v = [Fraction(rng.randrange(-5, 6)) for _ in range(n)]
            m = [[a * b for b in v] for a in u]
            expected = 1 if any(u) and any(v) else 0
            assert mat_rank(m, QQ) == expected

    def test_identity_rank(self):
        for n in (1, 3, 5):
            assert mat_rank(identity_matrix(n, F7), F7) == n


class TestInverse:
    def test_character_matrix_formula_vs_elimination(self):
        for group, field in [
            (AbelianGroup.cyclic(5), cyclotomic_field(5)),
            (AbelianGroup((2, 6)), PrimeField(13)),
            (AbelianGroup((2, 2)), QQ),
        ]:
            p = character_matrix(group, field)
            formula = character_matrix_inverse(group, field)
            eliminated = mat_inverse(p, field)
            assert mat_eq(formula, eliminated)

    def test_singular_rejected(self):
        m = [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]]
        with pytest.raises(NotInvertible):
            mat_inverse(m, QQ)

    def test_random_inverse_roundtrip(self):
        rng = random.Random(29)
        done = 0
        while done < 50:
            n = rng.randrange(1, 5)
            m = random_rational_matrix(rng, n, n)
            if mat_det(m, QQ) == 0:
                continue
            inv = mat_inverse(m, QQ)
            assert mat_eq(mat_mul(m, inv, QQ), identity_matrix(n, QQ))
            done += 1


class TestDeterminant:
    def test_det_multiplicative(self):
        rng = random.Random(37)
        for _ in range(100):
            n = rng.randrange(1, 5)
            a = random_rational_matrix(rng, n, n)
            b = random_rational_matrix(rng, n, n)
            assert mat_det(mat_mul(a, b, QQ), QQ) == mat_det(a, QQ) * mat_det(b, QQ)

    def test_det_of_singular(self):
        m = [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]]
        assert mat_det(m, QQ) == 0


class TestInterpolationOracle:
    def test_against_linear_solve(self):
        # independent route: solve the Vandermonde system with mat_inverse
        rng = random.Random(41)
        for field, n in [(cyclotomic_field(4), 4), (PrimeField(13), 6), (QQ, 2)]:
            from groupfft.rings import primitive_nth_root

            zeta = primitive_nth_root(n, field)
            nodes = [zeta ** k for k in range(n)]
            vand = [[nodes[r] ** c for c in range(n)] for r in range(n)]
            vand_inv = mat_inverse(vand, field)
            for _ in range(20):
                targets = [field.from_int(rng.randrange(-9, 10)) for _ in range(n)]
                coeffs = [
                    sum((vand_inv[r][c] * targets[c] for c in range(n)), field.zero)
                    for r in range(n)
                ]
                expected = UniPoly.make(coeffs, field)
                assert interpolate_at_roots_of_unity(targets, field) == expected
