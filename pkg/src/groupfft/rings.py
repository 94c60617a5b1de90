"""Exact coefficient fields and dense univariate polynomials.

Fields implemented here: the rationals (``QQ``, elements are
:class:`fractions.Fraction`), prime fields ``F_p``, and extension fields
``F_q[Y]/(m(Y))``.  Cyclotomic fields live in :mod:`groupfft.cyclotomic`
but satisfy the same field-descriptor protocol.

A field descriptor provides: ``characteristic``, ``zero``, ``one``,
``from_int``, ``from_rational``, ``inv``, ``format_elem`` and
``primitive_nth_root``; finite fields additionally expose ``order``,
``iter_elements`` (canonical ordering) and ``order_key``.  Elements are
immutable, support ``+ - * / **`` and honest ``==``/``hash``.

No floating point is used anywhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterator

from .errors import NoRootOfUnity, NotInvertible, PreconditionError, RingMismatch
from .numtheory import is_prime, prime_factors

# The rationals are stored reduced with positive denominator and structural
# equality -- exactly what fractions.Fraction guarantees.
Rational = Fraction


# ---------------------------------------------------------------------------
# The rational field
# ---------------------------------------------------------------------------

class RationalField:
    """Descriptor for Q.  Elements are Fraction instances."""

    characteristic = 0
    is_finite = False

    zero = Fraction(0)
    one = Fraction(1)

    def from_int(self, k: int) -> Fraction:
        return Fraction(k)

    def from_rational(self, q: Fraction) -> Fraction:
        return Fraction(q)

    def inv(self, x: Fraction) -> Fraction:
        if x == 0:
            raise NotInvertible("division by zero in Q")
        return 1 / Fraction(x)

    def primitive_nth_root(self, n: int) -> Fraction:
        if n == 1:
            return self.one
        if n == 2:
            return -self.one
        raise NoRootOfUnity(f"Q contains no primitive {n}-th root of unity")

    def format_elem(self, x: Fraction) -> str:
        return str(x)

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("QQ")

    def __repr__(self) -> str:
        return "Q"


QQ = RationalField()


# ---------------------------------------------------------------------------
# Prime fields
# ---------------------------------------------------------------------------

class PrimeFieldElem:
    """Residue in F_p."""

    __slots__ = ("residue", "field")

    def __init__(self, residue: int, field: "PrimeField"):
        self.residue = residue % field.p
        self.field = field

    def _coerce(self, other):
        if isinstance(other, PrimeFieldElem):
            if other.field != self.field:
                raise RingMismatch(f"elements of {self.field} and {other.field}")
            return other
        if isinstance(other, int):
            return PrimeFieldElem(other, self.field)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElem(self.residue + o.residue, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElem(self.residue - o.residue, self.field)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElem(o.residue - self.residue, self.field)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElem(self.residue * o.residue, self.field)

    __rmul__ = __mul__

    def __neg__(self):
        return PrimeFieldElem(-self.residue, self.field)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * self.field.inv(o)

    def __pow__(self, k: int):
        if k < 0:
            return self.field.inv(self) ** (-k)
        return PrimeFieldElem(pow(self.residue, k, self.field.p), self.field)

    def __bool__(self) -> bool:
        return self.residue != 0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PrimeFieldElem)
            and other.field == self.field
            and other.residue == self.residue
        )

    def __hash__(self) -> int:
        return hash((self.field, self.residue))

    def __repr__(self) -> str:
        return f"{self.residue}"


class PrimeField:
    """Descriptor for F_p, p prime (checked at construction)."""

    is_finite = True

    def __init__(self, p: int):
        if not is_prime(p):
            raise PreconditionError(f"{p} is not prime")
        self.p = p
        self.zero = PrimeFieldElem(0, self)
        self.one = PrimeFieldElem(1, self)

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def order(self) -> int:
        return self.p

    def from_int(self, k: int) -> PrimeFieldElem:
        return PrimeFieldElem(k, self)

    def from_rational(self, q: Fraction) -> PrimeFieldElem:
        q = Fraction(q)
        if q.denominator % self.p == 0:
            raise NotInvertible(f"denominator {q.denominator} vanishes in {self}")
        return self.from_int(q.numerator) / self.from_int(q.denominator)

    def inv(self, x: PrimeFieldElem) -> PrimeFieldElem:
        if not x:
            raise NotInvertible(f"division by zero in {self}")
        return PrimeFieldElem(pow(x.residue, -1, self.p), self)

    def iter_elements(self) -> Iterator[PrimeFieldElem]:
        for r in range(self.p):
            yield PrimeFieldElem(r, self)

    def order_key(self, x: PrimeFieldElem) -> int:
        return x.residue

    def primitive_nth_root(self, n: int) -> PrimeFieldElem:
        return _finite_field_root_of_unity(self, n)

    def format_elem(self, x: PrimeFieldElem) -> str:
        return str(x.residue)

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("Fp", self.p))

    def __repr__(self) -> str:
        return f"F{self.p}"


# ---------------------------------------------------------------------------
# Univariate polynomials
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class UniPoly:
    """Dense univariate polynomial; coeffs[k] is the degree-k coefficient.

    Normalized so the leading coefficient is nonzero (the zero polynomial
    has an empty coefficient tuple and degree -1).
    """

    coeffs: tuple
    ring: object

    @staticmethod
    def make(coeffs, ring) -> "UniPoly":
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        return UniPoly(tuple(cs), ring)

    @staticmethod
    def zero(ring) -> "UniPoly":
        return UniPoly((), ring)

    @staticmethod
    def constant(c, ring) -> "UniPoly":
        return UniPoly.make((c,), ring)

    @staticmethod
    def from_ints(ints, ring) -> "UniPoly":
        return UniPoly.make([ring.from_int(k) for k in ints], ring)

    @staticmethod
    def gen(ring) -> "UniPoly":
        """The polynomial X."""
        return UniPoly.make((ring.zero, ring.one), ring)

    @staticmethod
    def gen_pow(k: int, ring) -> "UniPoly":
        """The polynomial X^k."""
        return UniPoly.make([ring.zero] * k + [ring.one], ring)

    # -- structure ---------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self):
        if self.is_zero:
            raise PreconditionError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return not self.is_zero and self.leading == self.ring.one

    def coefficient(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.ring.zero

    def _check_ring(self, other: "UniPoly"):
        if other.ring != self.ring:
            raise RingMismatch(f"polynomials over {self.ring} and {other.ring}")

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "UniPoly") -> "UniPoly":
        self._check_ring(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UniPoly.make(out, self.ring)

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple(-c for c in self.coeffs), self.ring)

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            return self.scale(other)
        self._check_ring(other)
        if self.is_zero or other.is_zero:
            return UniPoly.zero(self.ring)
        out = [self.ring.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return UniPoly.make(out, self.ring)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "UniPoly":
        if isinstance(c, int):
            c = self.ring.from_int(c)
        return UniPoly.make([c * a for a in self.coeffs], self.ring)

    def __divmod__(self, other: "UniPoly"):
        self._check_ring(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        ring = self.ring
        inv_lead = ring.inv(other.leading)
        rem = list(self.coeffs)
        dq = len(self.coeffs) - len(other.coeffs)
        if dq < 0:
            return UniPoly.zero(ring), self
        quo = [ring.zero] * (dq + 1)
        for k in range(dq, -1, -1):
            c = rem[k + other.degree]
            if not c:
                continue
            f = c * inv_lead
            quo[k] = f
            for j, b in enumerate(other.coeffs):
                rem[k + j] = rem[k + j] - f * b
        return UniPoly.make(quo, ring), UniPoly.make(rem[: other.degree], ring)

    def __floordiv__(self, other: "UniPoly") -> "UniPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return divmod(self, other)[1]

    def __pow__(self, k: int) -> "UniPoly":
        if k < 0:
            raise PreconditionError("negative polynomial power")
        result = UniPoly.constant(self.ring.one, self.ring)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- transformations ----------------------------------------------------

    def monic(self) -> "UniPoly":
        if self.is_zero:
            return self
        return self.scale(self.ring.inv(self.leading))

    def evaluate(self, x):
        """Horner evaluation at a ring element."""
        acc = self.ring.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def substitute_power(self, k: int) -> "UniPoly":
        """The polynomial p(X^k)."""
        if k < 1:
            raise PreconditionError("substitute_power needs k >= 1")
        if self.is_zero:
            return self
        out = [self.ring.zero] * (self.degree * k + 1)
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return UniPoly.make(out, self.ring)

    def derivative(self) -> "UniPoly":
        return UniPoly.make(
            [self.ring.from_int(i) * c for i, c in enumerate(self.coeffs)][1:],
            self.ring,
        )

    def map_coefficients(self, fn, new_ring) -> "UniPoly":
        return UniPoly.make([fn(c) for c in self.coeffs], new_ring)

    def __str__(self) -> str:
        return format_unipoly(self)

    def __repr__(self) -> str:
        return f"UniPoly({format_unipoly(self)!r} over {self.ring!r})"


def x_pow_minus_one(n: int, ring) -> UniPoly:
    """X^n - 1 over the given ring."""
    return UniPoly.make(
        [-ring.one] + [ring.zero] * (n - 1) + [ring.one], ring
    )


def poly_powmod(base: UniPoly, exp: int, mod: UniPoly) -> UniPoly:
    """base**exp reduced modulo mod, by square and multiply."""
    result = UniPoly.constant(base.ring.one, base.ring)
    acc = base % mod
    while exp:
        if exp & 1:
            result = (result * acc) % mod
        acc = (acc * acc) % mod
        exp >>= 1
    return result


def ext_gcd(a: UniPoly, b: UniPoly) -> tuple[UniPoly, UniPoly, UniPoly]:
    """Extended gcd over a field: returns (g, u, v) with u*a + v*b = g monic.

    The cofactors are normalized so that deg u < deg(b/g) whenever b/g is
    non-constant; when g is an associate of b the result is u = 0, v = g/b.
    """
    if a.is_zero and b.is_zero:
        raise PreconditionError("gcd(0, 0) is undefined")
    ring = a.ring
    one = UniPoly.constant(ring.one, ring)
    zero = UniPoly.zero(ring)
    r0, r1 = a, b
    s0, s1 = one, zero
    t0, t1 = zero, one
    while not r1.is_zero:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    c = ring.inv(r0.leading)
    g, u, v = r0.scale(c), s0.scale(c), t0.scale(c)
    if not b.is_zero:
        bg = b // g
        if bg.degree > 0:
            q2, u = divmod(u, bg)
            v = v + q2 * (a // g)
        else:
            u = zero
            v = UniPoly.constant(ring.inv(bg.coefficient(0)), ring)
    assert u * a + v * b == g, "Bezout identity recheck failed"
    return g, u, v


def is_irreducible(f: UniPoly) -> bool:
    """Irreducibility over a finite field.

    Uses the gcd test against X^(q^i) - X for i up to deg(f)/2: any
    reducible f has an irreducible factor of degree at most deg(f)/2,
    and every such factor divides X^(q^i) - X for its degree i.
    """
    field = f.ring
    if not getattr(field, "is_finite", False):
        raise PreconditionError("irreducibility test requires finite-field coefficients")
    n = f.degree
    if n < 1:
        raise PreconditionError("irreducibility is defined for degree >= 1")
    if n == 1:
        return True
    f = f.monic()
    q = field.order
    x = UniPoly.gen(field)
    h = x
    for _ in range(n // 2):
        h = poly_powmod(h, q, f)
        g, _, _ = ext_gcd(f, h - x)
        if g.degree > 0:
            return False
    return True


def find_irreducible(field_or_p, r: int) -> UniPoly:
    """Smallest monic irreducible polynomial of degree r over F_q.

    Candidates are scanned in lexicographic order of the coefficient
    sequence read from the highest degree down (constant term varies
    fastest), so the result is deterministic.
    """
    field = PrimeField(field_or_p) if isinstance(field_or_p, int) else field_or_p
    if r < 1:
        raise PreconditionError("degree must be >= 1")
    elems = list(field.iter_elements())
    for tail in itertools.product(elems, repeat=r):
        # tail is (c_{r-1}, ..., c_0); prepend the monic leading 1
        coeffs = list(reversed(tail)) + [field.one]
        cand = UniPoly.make(coeffs, field)
        if is_irreducible(cand):
            return cand
    raise AssertionError("unreachable: irreducible polynomials of every degree exist")


# ---------------------------------------------------------------------------
# Extension fields
# ---------------------------------------------------------------------------

class ExtFieldElem:
    """Element of F_q[Y]/(m(Y)), stored as a fixed-length coefficient tuple."""

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs: tuple, field: "ExtField"):
        self.coeffs = coeffs
        self.field = field

    def _coerce(self, other):
        if isinstance(other, ExtFieldElem):
            if other.field != self.field:
                raise RingMismatch(f"elements of {self.field} and {other.field}")
            return other
        if isinstance(other, int):
            return self.field.from_int(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExtFieldElem(
            tuple(a + b for a, b in zip(self.coeffs, o.coeffs)), self.field
        )

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExtFieldElem(
            tuple(a - b for a, b in zip(self.coeffs, o.coeffs)), self.field
        )

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.field._mul(self, o)

    __rmul__ = __mul__

    def __neg__(self):
        return ExtFieldElem(tuple(-a for a in self.coeffs), self.field)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * self.field.inv(o)

    def __pow__(self, k: int):
        if k < 0:
            return self.field.inv(self) ** (-k)
        result = self.field.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExtFieldElem)
            and other.field == self.field
            and other.coeffs == self.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    @property
    def is_constant(self) -> bool:
        return not any(self.coeffs[1:])

    @property
    def constant(self):
        """The base-field value of a constant element."""
        if not self.is_constant:
            raise PreconditionError("element does not lie in the base field")
        return self.coeffs[0]

    def __repr__(self) -> str:
        return self.field.format_elem(self)


class ExtField:
    """Descriptor for an extension F_q[Y]/(m(Y)), m monic irreducible.

    The base may itself be an extension, giving towers; the common case
    is a prime base.
    """

    is_finite = True

    def __init__(self, base, modulus: UniPoly):
        if modulus.ring != base:
            raise RingMismatch("modulus must have coefficients in the base field")
        if not modulus.is_monic or modulus.degree < 1:
            raise PreconditionError("modulus must be monic of degree >= 1")
        if modulus.degree > 1 and not is_irreducible(modulus):
            raise PreconditionError(f"modulus {modulus} is reducible over {base}")
        self.base = base
        self.modulus = modulus
        self.degree = modulus.degree
        self.order = base.order ** self.degree
        r = self.degree
        # reduction table: X^k mod modulus for k = r .. 2r-2
        self._red: list[tuple] = []
        cur = list(UniPoly.gen_pow(r, base).coeffs)
        for _ in range(r - 1):
            lead = cur[-1] if len(cur) == r + 1 else base.zero
            reduced = [
                (cur[i] if i < len(cur) - 1 else base.zero)
                - lead * modulus.coefficient(i)
                for i in range(r)
            ]
            self._red.append(tuple(reduced))
            cur = [base.zero] + reduced  # multiply by X
            cur = cur + [base.zero] * (r + 1 - len(cur))
        self.zero = ExtFieldElem((base.zero,) * r, self)
        self.one = ExtFieldElem((base.one,) + (base.zero,) * (r - 1), self)
        # the class of Y: a root of the modulus
        self.gen = (
            ExtFieldElem(tuple(base.one if i == 1 else base.zero for i in range(r)), self)
            if r > 1
            else ExtFieldElem((-modulus.coefficient(0),), self)
        )

    @property
    def characteristic(self) -> int:
        return self.base.characteristic

    def _mul(self, a: ExtFieldElem, b: ExtFieldElem) -> ExtFieldElem:
        r = self.degree
        base = self.base
        prod = [base.zero] * (2 * r - 1)
        for i, x in enumerate(a.coeffs):
            if not x:
                continue
            for j, y in enumerate(b.coeffs):
                if y:
                    prod[i + j] = prod[i + j] + x * y
        out = prod[:r]
        for k in range(r, 2 * r - 1):
            c = prod[k]
            if c:
                red = self._red[k - r]
                out = [o + c * rr for o, rr in zip(out, red)]
        return ExtFieldElem(tuple(out), self)

    def from_int(self, k: int) -> ExtFieldElem:
        return self.from_base(self.base.from_int(k))

    def from_base(self, c) -> ExtFieldElem:
        return ExtFieldElem((c,) + (self.base.zero,) * (self.degree - 1), self)

    def from_rational(self, q: Fraction) -> ExtFieldElem:
        return self.from_base(self.base.from_rational(q))

    def inv(self, x: ExtFieldElem) -> ExtFieldElem:
        if not x:
            raise NotInvertible(f"division by zero in {self}")
        poly = UniPoly.make(x.coeffs, self.base)
        g, u, _ = ext_gcd(poly, self.modulus)
        assert g.degree == 0, "modulus not coprime to nonzero residue"
        u = u.scale(self.base.inv(g.coefficient(0)))
        cs = list(u.coeffs) + [self.base.zero] * (self.degree - len(u.coeffs))
        return ExtFieldElem(tuple(cs), self)

    def iter_elements(self) -> Iterator[ExtFieldElem]:
        elems = list(self.base.iter_elements())
        for tail in itertools.product(elems, repeat=self.degree):
            yield ExtFieldElem(tuple(reversed(tail)), self)

    def order_key(self, x: ExtFieldElem):
        return tuple(self.base.order_key(c) for c in reversed(x.coeffs))

    def primitive_nth_root(self, n: int) -> ExtFieldElem:
        return _finite_field_root_of_unity(self, n)

    def format_elem(self, x: ExtFieldElem) -> str:
        return format_unipoly(UniPoly.make(x.coeffs, self.base), var="Y")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExtField)
            and other.base == self.base
            and other.modulus.coeffs == self.modulus.coeffs
        )

    def __hash__(self) -> int:
        return hash(("Ext", self.base, self.modulus.coeffs))

    def __repr__(self) -> str:
        p = self.characteristic
        if isinstance(self.base, PrimeField):
            return f"F{p}^{self.degree}"
        return f"({self.base!r})^{self.degree}"


def _finite_field_root_of_unity(field, n: int):
    """Canonical primitive n-th root of unity in a finite field.

    Returns the smallest element of multiplicative order exactly n under
    the field's total order.  All order-n elements lie in the unique
    cyclic subgroup of that order, so it suffices to find one and then
    minimize over its primitive powers.
    """
    if n < 1:
        raise PreconditionError("root-of-unity order must be >= 1")
    p = field.characteristic
    if gcd(n, p) != 1:
        raise NoRootOfUnity(f"{n} shares a factor with the characteristic {p}")
    if n == 1:
        return field.one
    q = field.order
    if (q - 1) % n != 0:
        raise NoRootOfUnity(f"{field} has no subgroup of order {n}")
    m = (q - 1) // n
    primes = prime_factors(n)
    z = None
    for g in field.iter_elements():
        if not g:
            continue
        cand = g ** m
        if not any((cand ** (n // ell)) == field.one for ell in primes):
            z = cand
            break
    assert z is not None, "cyclic group F_q^* must contain an order-n element"
    best = z
    best_key = field.order_key(z)
    w = z
    for k in range(2, n):
        w = w * z
        if gcd(k, n) == 1:
            key = field.order_key(w)
            if key < best_key:
                best, best_key = w, key
    return best


def primitive_nth_root(n: int, field):
    """Element of exact multiplicative order n in the given field."""
    zeta = field.primitive_nth_root(n)
    if __debug__ and n > 1:
        assert zeta ** n == field.one
        assert all(zeta ** (n // ell) != field.one for ell in prime_factors(n))
    return zeta


# ---------------------------------------------------------------------------
# Text format
# ---------------------------------------------------------------------------

def _coeff_pieces(c, field) -> tuple[bool, str]:
    """(negative?, magnitude string) for one coefficient."""
    if isinstance(c, (Fraction, int)):
        return c < 0, str(abs(c))
    if isinstance(c, PrimeFieldElem):
        return False, str(c.residue)
    if isinstance(c, ExtFieldElem):
        if c.is_constant:
            return _coeff_pieces(c.constant, field)
        return False, "(" + c.field.format_elem(c) + ")"
    s = field.format_elem(c) if field is not None else str(c)
    if s.startswith("-") and "+" not in s and " - " not in s[1:]:
        return True, s[1:]
    if (" " in s) or ("+" in s):
        return False, "(" + s + ")"
    return False, s


def format_unipoly(p: UniPoly, var: str = "X") -> str:
    """Sparse sum of c*X^k terms, descending degree: 'X^3 - 1', '-1/3*X - 2/3'."""
    if p.is_zero:
        return "0"
    parts: list[str] = []
    for k in range(p.degree, -1, -1):
        c = p.coefficient(k)
        if not c:
            continue
        neg, mag = _coeff_pieces(c, p.ring)
        if k == 0:
            body = mag
        else:
            xk = var if k == 1 else f"{var}^{k}"
            body = xk if mag == "1" else f"{mag}*{xk}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)
