"""The finite Fourier transform pair on a finite abelian group, and friends.

The forward transform maps a vector b indexed by group elements to
B_chi = sum_sigma chi(sigma) b_sigma, indexed by characters; the inverse
divides by n and uses chi(sigma^-1).  Group matrices (b_{tau^-1 sigma})
are diagonalized by the character matrix, which yields the group-ring
idempotents, the circulant shift algebra, interpolation at roots of
unity, and the weight-rank identity.

Everything here is exact and field-agnostic: vectors may hold field
elements or MultiPoly values (for symbolic identities).  The transform
is the auditable O(n^2) sum, on purpose.
"""

from __future__ import annotations

from dataclasses import dataclass

from .abelian import (
    AbelianGroup,
    Character,
    GroupElement,
    character_matrix,
    character_matrix_inverse,
)
from .errors import NoRootOfUnity, PreconditionError
from .linalg import mat_eq, mat_mul, mat_pow, mat_rank, transpose
from .multipoly import MultiPoly
from .rings import UniPoly, primitive_nth_root


@dataclass(frozen=True)
class GroupVector:
    """Values indexed by group elements (dual=False) or by characters
    (dual=True), stored in the canonical lexicographic order."""

    group: AbelianGroup
    field: object
    values: tuple
    dual: bool = False

    def __post_init__(self):
        if len(self.values) != self.group.order:
            raise PreconditionError(
                f"expected {self.group.order} values, got {len(self.values)}"
            )

    def value_at(self, key):
        if self.dual:
            if not isinstance(key, Character):
                raise PreconditionError("dual-side vector is indexed by characters")
            return self.values[self.group.char_index(key)]
        if not isinstance(key, GroupElement):
            raise PreconditionError("group-side vector is indexed by elements")
        return self.values[self.group.index(key)]

    def hamming_weight(self) -> int:
        return sum(1 for v in self.values if v)

    def __add__(self, other: "GroupVector") -> "GroupVector":
        if (self.group, self.dual) != (other.group, other.dual):
            raise PreconditionError("vector shape mismatch")
        return GroupVector(
            self.group, self.field,
            tuple(a + b for a, b in zip(self.values, other.values)), self.dual,
        )


@dataclass(frozen=True)
class GroupMatrix:
    """n x n matrix in canonical element (or character) order."""

    group: AbelianGroup
    field: object
    entries: tuple
    dual: bool = False

    def rows(self) -> list[list]:
        return [list(r) for r in self.entries]


def _scale(c, x):
    """c * x where x is a field element or a MultiPoly."""
    if isinstance(x, MultiPoly):
        return x.scale(c)
    return c * x


def _root_powers(group: AbelianGroup, field) -> list:
    e = group.exponent
    zeta = primitive_nth_root(e, field)
    powers = [field.one]
    for _ in range(e - 1):
        powers.append(powers[-1] * zeta)
    return powers


def _require_invertible_order(group: AbelianGroup, field):
    char = field.characteristic
    if char and group.order % char == 0:
        raise PreconditionError(
            f"group order {group.order} is not invertible in characteristic {char}"
        )


def fft(b: GroupVector) -> GroupVector:
    """Forward transform: B_chi = sum_sigma chi(sigma) b_sigma."""
    if b.dual:
        raise PreconditionError("input is already on the dual side")
    group, field = b.group, b.field
    powers = _root_powers(group, field)
    elements = group.elements()
    out = []
    for chi in group.characters():
        acc = None
        for a in elements:
            term = _scale(powers[group.pairing_exponent(a, chi)], b.values[group.index(a)])
            acc = term if acc is None else acc + term
        out.append(acc)
    return GroupVector(group, field, tuple(out), dual=True)


def inverse_fft(B: GroupVector) -> GroupVector:
    """Inverse transform: b_sigma = (1/n) sum_chi chi(sigma^-1) B_chi."""
    if not B.dual:
        raise PreconditionError("input is not on the dual side")
    group, field = B.group, B.field
    _require_invertible_order(group, field)
    powers = _root_powers(group, field)
    e = group.exponent
    inv_n = field.inv(field.from_int(group.order))
    characters = group.characters()
    out = []
    for a in group.elements():
        acc = None
        for chi in characters:
            t = (-group.pairing_exponent(a, chi)) % e
            term = _scale(powers[t], B.values[group.char_index(chi)])
            acc = term if acc is None else acc + term
        out.append(_scale(inv_n, acc))
    return GroupVector(group, field, tuple(out), dual=False)


def group_matrix(b: GroupVector) -> GroupMatrix:
    """M(b) with entry (row tau, column sigma) = b_{tau^-1 sigma}.

    For a cyclic group this is the circulant with first row b.
    """
    group = b.group
    if b.dual:
        elements = [GroupElement(chi.residues) for chi in group.characters()]
    else:
        elements = group.elements()
    rows = []
    for tau in elements:
        inv_tau = group.inverse(tau)
        rows.append(
            tuple(b.values[group.index(group.mul(inv_tau, sigma))] for sigma in elements)
        )
    return GroupMatrix(group, b.field, tuple(rows), dual=b.dual)


def dual_matrix(B: GroupVector) -> GroupMatrix:
    """The dual-side matrix with entry (row psi, column chi) = B_{psi^-1 chi}."""
    if not B.dual:
        raise PreconditionError("dual_matrix needs a dual-side vector")
    return group_matrix(B)


def convolve(a: GroupVector, b: GroupVector) -> GroupVector:
    """Group-ring convolution: (a * b)_rho = sum over sigma tau = rho."""
    if a.group != b.group or a.dual or b.dual:
        raise PreconditionError("convolution needs two group-side vectors on one group")
    group = a.group
    elements = group.elements()
    out = [None] * group.order
    for sigma in elements:
        va = a.values[group.index(sigma)]
        if not va:
            continue
        for tau in elements:
            vb = b.values[group.index(tau)]
            if not vb:
                continue
            k = group.index(group.mul(sigma, tau))
            term = va * vb
            out[k] = term if out[k] is None else out[k] + term
    zero = a.field.zero
    return GroupVector(group, a.field, tuple(zero if v is None else v for v in out))


def diagonalize(b: GroupVector) -> tuple:
    """Eigenvalues of M(b): verifies P^-1 M(b) P is diagonal, returns the diagonal.

    The diagonal equals the forward transform of b, in character order.
    """
    group, field = b.group, b.field
    _require_invertible_order(group, field)
    p = character_matrix(group, field)
    p_inv = character_matrix_inverse(group, field)
    m = group_matrix(b).rows()
    conj = _conjugate(p_inv, m, p, field)
    n = group.order
    expected = fft(b)
    for i in range(n):
        for j in range(n):
            if i == j:
                _assert_same(conj[i][j], expected.values[j], "diagonal mismatch")
            else:
                _assert_zero(conj[i][j], field, "off-diagonal entry is nonzero")
    return expected.values


def dual_diagonalize(b: GroupVector) -> tuple:
    """Dual-side identity: tP^-1 M^(B) tP = n * Diag(b at sigma^-1).

    Returns that diagonal (indexed by elements in canonical order).
    """
    group, field = b.group, b.field
    _require_invertible_order(group, field)
    B = fft(b)
    mhat = dual_matrix(B).rows()
    tp = transpose(character_matrix(group, field))
    tp_inv = transpose(character_matrix_inverse(group, field))
    conj = _conjugate(tp_inv, mhat, tp, field)
    n_elem = field.from_int(group.order)
    elements = group.elements()
    diag = []
    for i, sigma in enumerate(elements):
        expected = _scale(n_elem, b.values[group.index(group.inverse(sigma))])
        for j in range(group.order):
            if i == j:
                _assert_same(conj[i][j], expected, "dual diagonal mismatch")
            else:
                _assert_zero(conj[i][j], field, "dual off-diagonal entry is nonzero")
        diag.append(expected)
    return tuple(diag)


def _conjugate(left, middle, right, field):
    """left * middle * right where middle may hold MultiPoly entries."""
    if middle and isinstance(middle[0][0], MultiPoly):
        n = len(middle)
        tmp = [
            [_sum_scaled(left[i], [middle[k][j] for k in range(n)]) for j in range(n)]
            for i in range(n)
        ]
        return [
            [_sum_scaled([right[k][j] for k in range(n)], tmp[i]) for j in range(n)]
            for i in range(n)
        ]
    return mat_mul(mat_mul(left, middle, field), right, field)


def _sum_scaled(scalars, polys):
    acc = None
    for c, p in zip(scalars, polys):
        if not c:
            continue
        term = p.scale(c)
        acc = term if acc is None else acc + term
    if acc is None:
        first = polys[0]
        return MultiPoly.zero(first.variables, first.ring)
    return acc


def _assert_same(got, expected, message):
    if got != expected:
        raise AssertionError(f"{message}: {got!r} != {expected!r}")


def _assert_zero(x, field, message):
    zero = x.is_zero if isinstance(x, MultiPoly) else (not x)
    if not zero:
        raise AssertionError(message)


def symbolic_vector(group: AbelianGroup, field) -> GroupVector:
    """The generic vector of variables X_<label>; M of it is the group matrix."""
    variables = group_variables(group)
    values = tuple(
        MultiPoly.variable(f"X_{group.element_label(a)}", variables, field)
        for a in group.elements()
    )
    return GroupVector(group, field, values)


def group_variables(group: AbelianGroup) -> tuple[str, ...]:
    return tuple(f"X_{group.element_label(a)}" for a in group.elements())


def blahut_weight(b: GroupVector) -> int:
    """Hamming weight of b as the rank of the dual-side matrix of its transform.

    The rank is taken over the coefficient field itself; if the supplied
    field lacks the required root of unity, the computation is lifted to
    the minimal splitting field (which cannot change the rank).
    """
    group, field = b.group, b.field
    _require_invertible_order(group, field)
    e = group.exponent
    lifted = _lift_to_splitting_field(b, e)
    B = fft(lifted)
    rank = mat_rank(dual_matrix(B).rows(), lifted.field)
    return rank


def _lift_to_splitting_field(b: GroupVector, e: int) -> GroupVector:
    field = b.field
    try:
        field.primitive_nth_root(e)
        return b
    except NoRootOfUnity:
        pass
    if field.characteristic == 0:
        from math import lcm

        from .cyclotomic import CyclotomicField, cyclotomic_field

        if isinstance(field, CyclotomicField):
            big = cyclotomic_field(lcm(field.conductor, e))
            lift = big.embed_from
        else:
            big = cyclotomic_field(e)
            lift = big.from_rational
    else:
        from .numtheory import multiplicative_order
        from .rings import ExtField, find_irreducible

        r = multiplicative_order(field.order, e)
        big = ExtField(field, find_irreducible(field, r))
        lift = big.from_base
    return GroupVector(b.group, big, tuple(lift(v) for v in b.values), b.dual)


def group_idempotents(group: AbelianGroup, field) -> list[GroupVector]:
    """Orthogonal idempotents e_chi = (1/n) sum_sigma chi^-1(sigma) sigma.

    Returned in canonical character order; they satisfy
    e_chi * e_psi = delta * e_chi under convolution and sum to the
    identity indicator.
    """
    _require_invertible_order(group, field)
    powers = _root_powers(group, field)
    e = group.exponent
    inv_n = field.inv(field.from_int(group.order))
    elements = group.elements()
    out = []
    for chi in group.characters():
        values = tuple(
            inv_n * powers[(-group.pairing_exponent(a, chi)) % e]
            for a in elements
        )
        out.append(GroupVector(group, field, values))
    return out


def shift_matrix(n: int, field) -> GroupMatrix:
    """The circulant K with first row (0, 1, 0, ..., 0); K^n = I."""
    group = AbelianGroup.cyclic(n)
    values = tuple(
        field.one if i == (1 % n) else field.zero for i in range(n)
    )
    return group_matrix(GroupVector(group, field, values))


def circulant_idempotent_matrices(n: int, field) -> list[list[list]]:
    """The matrices E_h = (1/n) sum_l zeta^(-h l) K^l, h = 0..n-1."""
    group = AbelianGroup.cyclic(n)
    return [group_matrix(e).rows() for e in group_idempotents(group, field)]


def shift_power_from_idempotents(n: int, field, h: int) -> list[list]:
    """Reconstruct K^h as sum_l zeta^(h l) E_l and verify the identity."""
    zeta = primitive_nth_root(n, field)
    es = circulant_idempotent_matrices(n, field)
    acc = None
    for ell, e_mat in enumerate(es):
        c = zeta ** ((h * ell) % n)
        scaled = [[c * x for x in row] for row in e_mat]
        acc = scaled if acc is None else [
            [a + s for a, s in zip(ra, rs)] for ra, rs in zip(acc, scaled)
        ]
    k = shift_matrix(n, field).rows()
    expected = mat_pow(k, h, field)
    if not mat_eq(acc, expected):
        raise AssertionError("shift-power reconstruction identity failed")
    return acc


def interpolate_at_roots_of_unity(targets, field) -> UniPoly:
    """Unique P of degree <= n-1 with P(zeta^h) = targets[h] for all h.

    Built as sum_h targets[h] * P_h with P_h = (1/n) sum_l zeta^(-h l) X^l,
    the polynomial that is 1 at zeta^h and 0 at the other n-th roots.
    """
    targets = list(targets)
    n = len(targets)
    if n < 1:
        raise PreconditionError("need at least one target value")
    if field.characteristic and n % field.characteristic == 0:
        raise PreconditionError("n is not invertible in the field")
    zeta = primitive_nth_root(n, field)
    inv_n = field.inv(field.from_int(n))
    powers = [field.one]
    for _ in range(n - 1):
        powers.append(powers[-1] * zeta)
    coeffs = [field.zero] * n
    for h, bh in enumerate(targets):
        if not bh:
            continue
        for ell in range(n):
            coeffs[ell] = coeffs[ell] + bh * inv_n * powers[(-h * ell) % n]
    result = UniPoly.make(coeffs, field)
    if __debug__:
        for h, bh in enumerate(targets):
            assert result.evaluate(powers[h % n]) == bh
    return result
