"""Factorization of X^n - 1 and of group determinants.

Three regimes, mirroring the three fields of interest:

* over a field containing the needed roots of unity the group determinant
  splits into the n linear eigenvalue forms, one per character;
* over Q the cyclic group determinant splits into one norm form per
  divisor d of n, the norm being the product of galois conjugates of the
  generic linear form built on zeta_d;
* over F_q both X^n - 1 and the determinant split along the orbits of
  multiplication by q on Z/nZ: each minimal stable label set L gives one
  factor, computed in a splitting extension and verified to descend.

Every factorization verifies its product identity on the spot: exactly
(symbolically) up to n = 6, and at fixed pseudorandom points beyond.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .abelian import AbelianGroup, Character, character_matrix
from .cyclotomic import cyclotomic_field, cyclotomic_polynomial
from .errors import PreconditionError
from .linalg import mat_det
from .multipoly import MultiPoly, symbolic_det
from .numtheory import divisors, euler_phi, multiplicative_order
from .rings import (
    QQ,
    ExtField,
    UniPoly,
    find_irreducible,
    is_irreducible,
    primitive_nth_root,
    x_pow_minus_one,
)
from .transform import group_matrix, group_variables, symbolic_vector, GroupVector

_SYMBOLIC_VERIFY_CAP = 6
_POINT_CHECKS = 20
_VERIFY_SEED = 0x5EED


@dataclass(frozen=True)
class LinearForm:
    """The eigenvalue form of one character: sum_sigma chi(sigma) X_sigma."""

    character: Character
    coefficients: tuple  # field elements, canonical element order

    def as_multipoly(self, group: AbelianGroup, field) -> MultiPoly:
        variables = group_variables(group)
        return MultiPoly.linear(
            dict(zip(variables, self.coefficients)), variables, field
        )


@dataclass(frozen=True)
class FactorEntry:
    poly: MultiPoly
    multiplicity: int
    claimed_irreducible: bool
    label: str
    coset: tuple | None = None
    divisor: int | None = None


@dataclass(frozen=True)
class FactoredDeterminant:
    field: object
    variables: tuple[str, ...]
    factors: tuple[FactorEntry, ...]

    def product(self) -> MultiPoly:
        acc = MultiPoly.constant(self.field.one, self.variables, self.field)
        for entry in self.factors:
            acc = acc * entry.poly ** entry.multiplicity
        return acc


@dataclass(frozen=True)
class CosetFactor:
    """One irreducible factor of X^n - 1 over F_q, indexed by its label set."""

    labels: tuple[int, ...]
    poly: UniPoly


def vandermonde_det(n: int, field):
    """Determinant of the character matrix of C_n.

    Computed both from the product formula over pairs of roots of unity
    and by direct elimination; the two are asserted equal.
    """
    group = AbelianGroup.cyclic(n)
    p = character_matrix(group, field)
    direct = mat_det(p, field)
    zeta = primitive_nth_root(n, field)
    powers = [field.one]
    for _ in range(n - 1):
        powers.append(powers[-1] * zeta)
    product = field.one
    for ell in range(1, n):
        for i in range(ell):
            product = product * powers[i] * (powers[ell - i] - field.one)
    assert product == direct, "product formula disagrees with direct determinant"
    return direct


# ---------------------------------------------------------------------------
# Verification machinery
# ---------------------------------------------------------------------------

def _random_elem(field, rng: random.Random):
    if field == QQ:
        return Fraction(rng.randrange(-50, 51), rng.randrange(1, 9))
    if isinstance(field, ExtField):
        from .rings import ExtFieldElem

        return ExtFieldElem(
            tuple(_random_elem(field.base, rng) for _ in range(field.degree)), field
        )
    if getattr(field, "is_finite", False):
        return field.from_int(rng.randrange(field.order))
    # cyclotomic field: random small rational residue
    coeffs = [Fraction(rng.randrange(-9, 10)) for _ in range(max(field.degree, 1))]
    return field.from_residue(coeffs)


def verify_product_identity(fd: FactoredDeterminant, group: AbelianGroup,
                            eval_field=None, lift=None):
    """Check product(factors) = det of the group matrix.

    Symbolic comparison for groups of order <= 6; otherwise evaluated at
    fixed pseudorandom points (in eval_field when the factor coefficients
    live in an extension of the determinant's own field).
    """
    n = group.order
    field = eval_field if eval_field is not None else fd.field
    if n <= _SYMBOLIC_VERIFY_CAP:
        expected = symbolic_det(group_matrix(symbolic_vector(group, fd.field)).rows())
        assert fd.product() == expected, "factor product differs from group determinant"
        return
    rng = random.Random(_VERIFY_SEED)
    variables = fd.variables
    for _ in range(_POINT_CHECKS):
        point = {v: _random_elem(field, rng) for v in variables}
        prod_val = field.one
        for entry in fd.factors:
            poly = entry.poly if lift is None else entry.poly.map_coefficients(lift, field)
            val = poly.evaluate(point)
            for _ in range(entry.multiplicity):
                prod_val = prod_val * val
        vec = GroupVector(group, field, tuple(point[v] for v in variables))
        det_val = mat_det(group_matrix(vec).rows(), field)
        assert prod_val == det_val, "factor product disagrees with determinant at a point"


# ---------------------------------------------------------------------------
# Split-field factorization: one linear form per character
# ---------------------------------------------------------------------------

def linear_forms(group: AbelianGroup, field) -> list[LinearForm]:
    e = group.exponent
    zeta = primitive_nth_root(e, field)
    powers = [field.one]
    for _ in range(e - 1):
        powers.append(powers[-1] * zeta)
    elements = group.elements()
    out = []
    for chi in group.characters():
        coeffs = tuple(powers[group.pairing_exponent(a, chi)] for a in elements)
        assert coeffs[group.index(group.identity)] == field.one
        out.append(LinearForm(chi, coeffs))
    return out


def det_split_field(group: AbelianGroup, field=None) -> FactoredDeterminant:
    """det of the group matrix as a product of the n character linear forms."""
    if field is None:
        field = cyclotomic_field(group.exponent)
    entries = []
    for form in linear_forms(group, field):
        entries.append(
            FactorEntry(
                poly=form.as_multipoly(group, field),
                multiplicity=1,
                claimed_irreducible=True,
                label="Y_" + "_".join(str(r) for r in form.character.residues),
            )
        )
    fd = FactoredDeterminant(field, group_variables(group), tuple(entries))
    verify_product_identity(fd, group)
    return fd


# ---------------------------------------------------------------------------
# Over Q: norm forms, one per divisor of n
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def norm_form(n: int, d: int) -> MultiPoly:
    """The degree-phi(d) rational factor attached to the divisor d of n.

    Product over the galois conjugates of X_0 + zeta_d X_1 + ... +
    zeta_d^(n-1) X_(n-1), expanded in Q(zeta_d) and verified to have
    rational coefficients.
    """
    if n % d != 0:
        raise PreconditionError(f"{d} does not divide {n}")
    group = AbelianGroup.cyclic(n)
    variables = group_variables(group)
    kd = cyclotomic_field(d)
    zeta = kd.zeta
    acc = None
    for m in range(1, d + 1):
        if gcd(m, d) != 1:
            continue
        zm = zeta ** m
        coeffs = {}
        power = kd.one
        for i, v in enumerate(variables):
            coeffs[v] = power
            power = power * zm
        form = MultiPoly.linear(coeffs, variables, kd)
        acc = form if acc is None else acc * form
    assert acc.is_homogeneous(euler_phi(d))

    def to_rational(c):
        assert c.is_rational, "norm form coefficient is not rational"
        return c.rational_value

    return acc.map_coefficients(to_rational, QQ)


@lru_cache(maxsize=None)
def det_over_rationals(n: int) -> FactoredDeterminant:
    """Irreducible factorization over Q of the cyclic group determinant."""
    group = AbelianGroup.cyclic(n)
    entries = tuple(
        FactorEntry(
            poly=norm_form(n, d),
            multiplicity=1,
            claimed_irreducible=True,
            label=f"norm_d{d}",
            divisor=d,
        )
        for d in divisors(n)
    )
    fd = FactoredDeterminant(QQ, group_variables(group), entries)
    verify_product_identity(fd, group)
    return fd


# ---------------------------------------------------------------------------
# Over F_q: orbits of multiplication by q
# ---------------------------------------------------------------------------

def _check_finite(field, n: int):
    if not getattr(field, "is_finite", False):
        raise PreconditionError("expected a finite field descriptor")
    if gcd(n, field.order) != 1:
        raise PreconditionError(
            f"gcd({n}, q) > 1: the characteristic divides {n}"
        )


def q_cyclotomic_cosets(n: int, q: int) -> list[tuple[int, ...]]:
    """Minimal subsets of Z/nZ stable under multiplication by q,

    ordered by smallest member; they partition Z/nZ.
    """
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start]:
            continue
        orbit = []
        x = start
        while not seen[x]:
            seen[x] = True
            orbit.append(x)
            x = x * q % n
        out.append(tuple(sorted(orbit)))
    return out


def _splitting_extension(field, n: int):
    """(big_field, zeta_n, descend) with descend mapping constants back down."""
    s = multiplicative_order(field.order, n) if n > 1 else 1
    if s == 1:
        return field, primitive_nth_root(n, field), lambda c: c
    big = ExtField(field, find_irreducible(field, s))

    def descend(c):
        assert c.is_constant, "coefficient does not lie in the base field"
        return c.constant

    return big, primitive_nth_root(n, big), descend


def factor_xn_minus_one(n: int, field) -> list[CosetFactor]:
    """Irreducible factors of X^n - 1 over F_q, one per q-stable label set.

    Each factor is the product of X - zeta^l over its label set, computed
    in a splitting extension, verified to descend to F_q both by direct
    coefficient inspection and through the identity Q(X)^q = Q(X^q).
    """
    _check_finite(field, n)
    if n < 1:
        raise PreconditionError("n must be >= 1")
    q = field.order
    big, zeta, descend = _splitting_extension(field, n)
    x = UniPoly.gen(big)
    out = []
    for labels in q_cyclotomic_cosets(n, q):
        poly_big = UniPoly.constant(big.one, big)
        for ell in labels:
            poly_big = poly_big * (x - UniPoly.constant(zeta ** ell, big))
        poly = poly_big.map_coefficients(descend, field)
        assert poly.degree == len(labels)
        assert poly.is_monic
        # descent identity over F_q, and irreducibility of the emitted factor
        assert poly ** q == poly.substitute_power(q), "descent identity failed"
        assert is_irreducible(poly), "coset factor is not irreducible"
        out.append(CosetFactor(labels, poly))
    prod = UniPoly.constant(field.one, field)
    for cf in out:
        prod = prod * cf.poly
    assert prod == x_pow_minus_one(n, field), "coset factors do not multiply to X^n - 1"
    return out


def factor_cyclotomic(d: int, field) -> list[CosetFactor]:
    """Irreducible factors of Phi_d over F_q.

    With r the order of q modulo d and H = <q> in (Z/dZ)^*, the factors
    are the products of X - zeta_d^(m h), h in H, one per coset mH;
    there are phi(d)/r of them, all of degree r.
    """
    _check_finite(field, d)
    q = field.order
    big, zeta, descend = _splitting_extension(field, d)
    if d == 1:
        units = [0]
    else:
        units = [m for m in range(1, d) if gcd(m, d) == 1]
    r = multiplicative_order(q, d)
    # cosets of the subgroup generated by q
    h_subgroup = sorted({pow(q, k, d) for k in range(r)}) if d > 1 else [0]
    remaining = set(units)
    cosets = []
    while remaining:
        m = min(remaining)
        coset = tuple(sorted(m * h % d for h in h_subgroup))
        remaining -= set(coset)
        cosets.append(coset)
    x = UniPoly.gen(big)
    out = []
    for coset in cosets:
        poly_big = UniPoly.constant(big.one, big)
        for mh in coset:
            poly_big = poly_big * (x - UniPoly.constant(zeta ** mh, big))
        poly = poly_big.map_coefficients(descend, field)
        assert poly.degree == r and poly.is_monic
        out.append(CosetFactor(coset, poly))
    assert len(out) == euler_phi(d) // r
    prod = UniPoly.constant(field.one, field)
    for cf in out:
        prod = prod * cf.poly
    phi_mod = cyclotomic_polynomial(d).map_coefficients(
        lambda c: field.from_rational(c), field
    )
    assert prod == phi_mod, "coset factors do not multiply to Phi_d mod q"
    return out


def det_over_finite_field(n: int, field) -> FactoredDeterminant:
    """Factorization over F_q of the cyclic group determinant.

    One multivariate factor per q-stable label set L: the product over
    l in L of X_0 + zeta^l X_1 + ... + zeta^(l(n-1)) X_(n-1), computed in
    the splitting extension and verified to descend to F_q.
    """
    _check_finite(field, n)
    group = AbelianGroup.cyclic(n)
    variables = group_variables(group)
    q = field.order
    big, zeta, descend = _splitting_extension(field, n)
    entries = []
    for labels in q_cyclotomic_cosets(n, q):
        acc = None
        for ell in labels:
            coeffs = {}
            power = big.one
            zl = zeta ** ell
            for v in variables:
                coeffs[v] = power
                power = power * zl
            form = MultiPoly.linear(coeffs, variables, big)
            acc = form if acc is None else acc * form
        poly = acc.map_coefficients(descend, field)
        entries.append(
            FactorEntry(
                poly=poly,
                multiplicity=1,
                claimed_irreducible=True,
                label="L=" + ",".join(str(x) for x in labels),
                coset=labels,
            )
        )
    fd = FactoredDeterminant(field, variables, tuple(entries))
    if big is field:
        verify_product_identity(fd, group)
    else:
        verify_product_identity(fd, group, eval_field=big, lift=big.from_base)
    return fd
