"""Cyclotomic polynomials, Q(zeta_d) arithmetic, and the rational bases."""

import random
from fractions import Fraction

import pytest

from groupfft.abelian import AbelianGroup
from groupfft.cyclotomic import (
    complementary_factor,
    complementary_inverse,
    cyclotomic_field,
    cyclotomic_polynomial,
    galois_conjugates,
    norm_to_rationals,
    prime_complementary_inverse_shortcut,
    rational_basis_abelian,
    rational_basis_cyclic,
)
from groupfft.errors import NotInvertible, RingMismatch
from groupfft.numtheory import divisors, euler_phi
from groupfft.rings import QQ, UniPoly, x_pow_minus_one
from groupfft.transform import convolve, group_idempotents


def qpoly(*ints):
    return UniPoly.from_ints(ints, QQ)


class TestCyclotomicPolynomials:
    def test_small_values(self):
        assert cyclotomic_polynomial(1) == qpoly(-1, 1)
        assert cyclotomic_polynomial(3) == qpoly(1, 1, 1)

    def test_phi6_by_explicit_division(self):
        # independent derivation: divide X^6 - 1 by Phi_1 Phi_2 Phi_3 written by hand
        denom = qpoly(-1, 1) * qpoly(1, 1) * qpoly(1, 1, 1)
        q, r = divmod(x_pow_minus_one(6, QQ), denom)
        assert r.is_zero
        assert cyclotomic_polynomial(6) == q == qpoly(1, -1, 1)

    def test_product_identity_up_to_30(self):
        for n in range(1, 31):
            prod = UniPoly.constant(Fraction(1), QQ)
            for d in divisors(n):
                prod = prod * cyclotomic_polynomial(d)
            assert prod == x_pow_minus_one(n, QQ)

    def test_degrees_up_to_30(self):
        for d in range(1, 31):
            poly = cyclotomic_polynomial(d)
            assert poly.degree == euler_phi(d)
            assert poly.is_monic
            assert all(c.denominator == 1 for c in poly.coeffs)


class TestCycloArithmetic:
    def test_cube_root(self):
        k = cyclotomic_field(3)
        j = k.zeta
        assert j * j == k.from_residue([-1, -1])
        assert j * j * j == k.one

    def test_inverse_roundtrip(self):
        k = cyclotomic_field(3)
        x = k.zeta - k.one
        assert k.inv(x) * x == k.one

    def test_gaussian_square(self):
        k = cyclotomic_field(4)
        i = k.zeta
        assert (k.one + i) ** 2 == k.from_int(2) * i

    def test_conductor_mismatch(self):
        with pytest.raises(RingMismatch):
            cyclotomic_field(3).zeta + cyclotomic_field(4).zeta

    def test_zero_inverse(self):
        with pytest.raises(NotInvertible):
            cyclotomic_field(5).inv(cyclotomic_field(5).zero)


class TestGaloisConjugates:
    def test_cube_root_pair(self):
        k = cyclotomic_field(3)
        j = k.zeta
        assert galois_conjugates(j) == [j, j * j]

    def test_complex_conjugation(self):
        k = cyclotomic_field(4)
        i = k.zeta
        assert galois_conjugates(k.one + i) == [k.one + i, k.one - i]

    def test_trivial_conductor(self):
        k = cyclotomic_field(1)
        assert galois_conjugates(k.from_int(5)) == [k.from_int(5)]

    def test_norm_is_rational_and_multiplicative(self):
        rng = random.Random(5)
        for d in range(1, 13):
            k = cyclotomic_field(d)
            deg = max(k.degree, 1)
            for _ in range(200 // d + 3):
                a = k.from_residue([rng.randrange(-5, 6) for _ in range(deg)])
                b = k.from_residue([rng.randrange(-5, 6) for _ in range(deg)])
                na, nb = norm_to_rationals(a), norm_to_rationals(b)
                assert norm_to_rationals(a * b) == na * nb


class TestComplementaryFactors:
    def test_prime_n_3(self):
        assert complementary_factor(3, 1) == cyclotomic_polynomial(3)
        assert complementary_inverse(3, 1) == UniPoly.constant(Fraction(1, 3), QQ)
        assert complementary_factor(3, 3) == qpoly(-1, 1)
        assert complementary_inverse(3, 3) == UniPoly.make(
            [Fraction(-2, 3), Fraction(-1, 3)], QQ
        )

    def test_n_2(self):
        assert complementary_factor(2, 2) == qpoly(-1, 1)
        tilde = complementary_inverse(2, 2)
        assert tilde == UniPoly.constant(Fraction(-1, 2), QQ)
        # (X - 1) * (-1/2) = 1 at X = -1, the root of Phi_2
        assert (qpoly(-1, 1) * tilde).evaluate(Fraction(-1)) == 1

    def test_inverse_identity_all_n_up_to_12(self):
        for n in range(1, 13):
            for d in divisors(n):
                psi = complementary_factor(n, d)
                tilde = complementary_inverse(n, d)
                assert tilde.degree <= euler_phi(d) - 1
                assert (tilde * psi) % cyclotomic_polynomial(d) == qpoly(1)

    def test_prime_shortcut_cross_check(self):
        for p in (2, 3, 5, 7, 11, 13):
            assert prime_complementary_inverse_shortcut(p) == complementary_inverse(p, p)

    def test_non_divisor_rejected(self):
        from groupfft.errors import PreconditionError

        with pytest.raises(PreconditionError):
            complementary_factor(6, 4)


class TestRationalBasisCyclic:
    def test_n3_matches_worked_example(self):
        basis = rational_basis_cyclic(3)
        third = Fraction(1, 3)
        expected = [
            UniPoly.make([third, third, third], QQ),
            UniPoly.make([2 * third, -third, -third], QQ),
            UniPoly.make([-third, 2 * third, -third], QQ),
        ]
        assert [b.poly for b in basis] == expected
        assert [(b.d, b.j) for b in basis] == [(1, 0), (3, 0), (3, 1)]

    def test_n1(self):
        basis = rational_basis_cyclic(1)
        assert len(basis) == 1
        assert basis[0].poly == qpoly(1)

    def test_n2(self):
        basis = rational_basis_cyclic(2)
        assert basis[0].poly == UniPoly.make([Fraction(1, 2), Fraction(1, 2)], QQ)
        assert basis[1].poly == UniPoly.make([Fraction(1, 2), Fraction(-1, 2)], QQ)

    @pytest.mark.parametrize("n", range(1, 13))
    def test_idempotent_relations(self, n):
        modulus = x_pow_minus_one(n, QQ)
        heads = {b.d: b.poly for b in rational_basis_cyclic(n) if b.j == 0}
        total = UniPoly.zero(QQ)
        for d, e in heads.items():
            assert (e * e) % modulus == e
            total = total + e
            for d2, e2 in heads.items():
                if d2 != d:
                    assert ((e * e2) % modulus).is_zero
        assert total == qpoly(1)

    @pytest.mark.parametrize("n", range(1, 13))
    def test_shift_action(self, n):
        modulus = x_pow_minus_one(n, QQ)
        x = UniPoly.gen(QQ)
        basis = rational_basis_cyclic(n)
        by_key = {(b.d, b.j): b.poly for b in basis}
        for b in basis:
            if b.j < euler_phi(b.d) - 1:
                assert (b.poly * x) % modulus == by_key[(b.d, b.j + 1)]

    @pytest.mark.parametrize("n", range(1, 13))
    def test_splitting_components(self, n):
        # E_(d,j) reduces to X^j mod Phi_d and to 0 mod Phi_d' for d' != d
        for b in rational_basis_cyclic(n):
            for d2 in divisors(n):
                reduced = b.poly % cyclotomic_polynomial(d2)
                if d2 == b.d:
                    assert reduced == UniPoly.gen_pow(b.j, QQ) % cyclotomic_polynomial(d2)
                else:
                    assert reduced.is_zero


class TestRationalBasisAbelian:
    def test_c2_matches_cyclic(self):
        group = AbelianGroup.cyclic(2)
        basis = rational_basis_abelian(group)
        cyc = rational_basis_cyclic(2)
        for vec, b in zip(basis, cyc):
            assert list(vec.values) == [b.poly.coefficient(k) for k in range(2)]

    def test_c2xc2_matches_idempotents_over_q(self):
        group = AbelianGroup((2, 2))
        basis = rational_basis_abelian(group)
        idems = group_idempotents(group, QQ)
        basis_keys = sorted(tuple(v.values) for v in basis)
        idem_keys = sorted(tuple(v.values) for v in idems)
        assert basis_keys == idem_keys

    def test_c6_component_identities_sum_to_one(self):
        group = AbelianGroup.cyclic(6)
        basis = rational_basis_abelian(group)
        cyc = rational_basis_cyclic(6)
        head_indices = [k for k, b in enumerate(cyc) if b.j == 0]
        total = basis[head_indices[0]]
        for k in head_indices[1:]:
            total = total + basis[k]
        expected = tuple(
            Fraction(1) if a == group.identity else Fraction(0)
            for a in group.elements()
        )
        assert total.values == expected

    def test_tensor_idempotency_c2xc2(self):
        group = AbelianGroup((2, 2))
        basis = rational_basis_abelian(group)
        for vec in basis:
            assert convolve(vec, vec).values == vec.values
