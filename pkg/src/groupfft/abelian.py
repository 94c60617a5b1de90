"""Finite abelian groups as products of cyclic groups, their duals and characters.

Elements and characters are residue tuples; the canonical ordering used by
every matrix in the library is lexicographic on those tuples.  Characters
are represented additively and only evaluated into a concrete field when
one is supplied, through the pairing exponent

    t(sigma, chi) = sum_i  chi_i * sigma_i * (e / d_i)   (mod e),

where e is the group exponent; the character value is zeta_e ** t.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from math import lcm

from .errors import PreconditionError
from .numtheory import invariant_factors
from .rings import primitive_nth_root


@dataclass(frozen=True)
class GroupElement:
    residues: tuple[int, ...]


@dataclass(frozen=True)
class Character:
    """Element of the dual group, identified component-wise."""

    residues: tuple[int, ...]


@dataclass(frozen=True)
class AbelianGroup:
    """Product C_{d_1} x ... x C_{d_k} of cyclic groups.

    Any tuple of cyclic orders is accepted; ``normalized()`` converts to
    the invariant-factor chain d_1 | d_2 | ... | d_k.
    """

    divisors: tuple[int, ...]

    def __post_init__(self):
        if not self.divisors or any(d < 1 for d in self.divisors):
            raise PreconditionError(f"invalid cyclic orders {self.divisors}")

    @staticmethod
    def cyclic(n: int) -> "AbelianGroup":
        return AbelianGroup((n,))

    @property
    def order(self) -> int:
        n = 1
        for d in self.divisors:
            n *= d
        return n

    @property
    def exponent(self) -> int:
        return lcm(*self.divisors)

    @property
    def is_elementary_divisor_form(self) -> bool:
        return all(
            b % a == 0 for a, b in zip(self.divisors, self.divisors[1:])
        )

    def normalized(self) -> "AbelianGroup":
        return AbelianGroup(invariant_factors(self.divisors))

    # -- elements -------------------------------------------------------------

    def elements(self) -> list[GroupElement]:
        """All elements in lexicographic order of residue tuples."""
        return [
            GroupElement(t)
            for t in itertools.product(*(range(d) for d in self.divisors))
        ]

    def characters(self) -> list[Character]:
        return [
            Character(t)
            for t in itertools.product(*(range(d) for d in self.divisors))
        ]

    @property
    def identity(self) -> GroupElement:
        return GroupElement((0,) * len(self.divisors))

    @property
    def trivial_character(self) -> Character:
        return Character((0,) * len(self.divisors))

    def _check_tuple(self, residues: tuple[int, ...]):
        if len(residues) != len(self.divisors) or any(
            not 0 <= r < d for r, d in zip(residues, self.divisors)
        ):
            raise PreconditionError(f"{residues} is not valid for {self}")

    def mul(self, a: GroupElement, b: GroupElement) -> GroupElement:
        self._check_tuple(a.residues)
        self._check_tuple(b.residues)
        return GroupElement(
            tuple((x + y) % d for x, y, d in zip(a.residues, b.residues, self.divisors))
        )

    def inverse(self, a: GroupElement) -> GroupElement:
        self._check_tuple(a.residues)
        return GroupElement(tuple((-x) % d for x, d in zip(a.residues, self.divisors)))

    def char_mul(self, a: Character, b: Character) -> Character:
        return Character(
            tuple((x + y) % d for x, y, d in zip(a.residues, b.residues, self.divisors))
        )

    def char_inverse(self, a: Character) -> Character:
        return Character(tuple((-x) % d for x, d in zip(a.residues, self.divisors)))

    def index(self, a: GroupElement) -> int:
        """Position of a in the canonical element ordering (mixed radix)."""
        self._check_tuple(a.residues)
        idx = 0
        for r, d in zip(a.residues, self.divisors):
            idx = idx * d + r
        return idx

    def char_index(self, chi: Character) -> int:
        self._check_tuple(chi.residues)
        idx = 0
        for r, d in zip(chi.residues, self.divisors):
            idx = idx * d + r
        return idx

    def element_label(self, a: GroupElement) -> str:
        return "_".join(str(r) for r in a.residues)

    # -- the pairing ------------------------------------------------------------

    def pairing_exponent(self, a: GroupElement, chi: Character) -> int:
        """t with chi(a) = zeta_e ** t, e the group exponent."""
        self._check_tuple(a.residues)
        self._check_tuple(chi.residues)
        e = self.exponent
        t = 0
        for x, c, d in zip(a.residues, chi.residues, self.divisors):
            t += c * x * (e // d)
        return t % e

    def dual_group(self) -> "AbelianGroup":
        return AbelianGroup(self.divisors)

    def describe(self) -> str:
        return "x".join(f"C{d}" for d in self.divisors)

    def __repr__(self) -> str:
        return self.describe()


def parse_group(descriptor: str, normalize: bool = True) -> AbelianGroup:
    """Parse 'C6', 'C2xC3', 'C2xC2xC5' into a group.

    With normalize=True (the CLI default) the result is put into
    invariant-factor form, so C2xC3 becomes C6.
    """
    parts = descriptor.strip().split("x")
    orders = []
    for part in parts:
        m = re.fullmatch(r"[Cc](\d+)", part.strip())
        if not m:
            raise PreconditionError(f"bad group descriptor {descriptor!r}")
        orders.append(int(m.group(1)))
    group = AbelianGroup(tuple(orders))
    return group.normalized() if normalize else group


def bidual_identification(group: AbelianGroup) -> dict[GroupElement, Character]:
    """Canonical isomorphism from G onto the dual of its dual.

    Each element maps to the evaluation character chi -> chi(sigma); under
    the fixed pairing this is the identity on residue tuples.  The map is
    verified to be a group isomorphism compatible with the pairing.
    """
    dual = group.dual_group()
    mapping = {a: Character(a.residues) for a in group.elements()}
    # homomorphism + pairing compatibility
    elements = group.elements()
    for a in elements:
        for chi in group.characters():
            t1 = group.pairing_exponent(a, chi)
            t2 = dual.pairing_exponent(GroupElement(chi.residues), mapping[a])
            assert t1 == t2, "bidual map does not respect the pairing"
    for a in elements:
        for b in elements:
            lhs = mapping[group.mul(a, b)]
            rhs = dual.char_mul(mapping[a], mapping[b])
            assert lhs == rhs, "bidual map is not a homomorphism"
    assert len(set(mapping.values())) == group.order
    return mapping


def character_matrix(group: AbelianGroup, field) -> list[list]:
    """The n x n matrix P with entry chi(sigma): rows sigma, columns chi.

    Requires a primitive e-th root of unity in the field, e the exponent.
    """
    e = group.exponent
    zeta = primitive_nth_root(e, field)
    powers = [field.one]
    for _ in range(e - 1):
        powers.append(powers[-1] * zeta)
    elements = group.elements()
    characters = group.characters()
    return [
        [powers[group.pairing_exponent(a, chi)] for chi in characters]
        for a in elements
    ]


def character_matrix_inverse(group: AbelianGroup, field) -> list[list]:
    """P^-1 = (1/n) * transpose of (chi^-1(sigma))."""
    e = group.exponent
    n = group.order
    zeta = primitive_nth_root(e, field)
    powers = [field.one]
    for _ in range(e - 1):
        powers.append(powers[-1] * zeta)
    inv_n = field.inv(field.from_int(n))
    elements = group.elements()
    characters = group.characters()
    return [
        [
            inv_n * powers[(-group.pairing_exponent(a, chi)) % e if e > 1 else 0]
            for a in elements
        ]
        for chi in characters
    ]
