"""Sparse multivariate polynomials and small symbolic determinants.

Terms map exponent vectors to nonzero coefficients in one of the exact
fields; printing and comparison use graded lexicographic order.  The
determinant uses cofactor expansion with memoization on column subsets,
capped at dimension 8.
"""

from __future__ import annotations

from .errors import PreconditionError, RingMismatch

DET_DIMENSION_CAP = 8


class MultiPoly:
    """Sparse multivariate polynomial over an exact field."""

    __slots__ = ("variables", "terms", "ring")

    def __init__(self, variables: tuple, terms: dict, ring):
        self.variables = tuple(variables)
        self.terms = {e: c for e, c in terms.items() if c}
        self.ring = ring

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero(variables, ring) -> "MultiPoly":
        return MultiPoly(variables, {}, ring)

    @staticmethod
    def constant(c, variables, ring) -> "MultiPoly":
        nvars = len(tuple(variables))
        return MultiPoly(variables, {(0,) * nvars: c}, ring)

    @staticmethod
    def variable(name: str, variables, ring) -> "MultiPoly":
        variables = tuple(variables)
        if name not in variables:
            raise PreconditionError(f"unknown variable {name!r}")
        exp = tuple(1 if v == name else 0 for v in variables)
        return MultiPoly(variables, {exp: ring.one}, ring)

    @staticmethod
    def linear(coeff_by_name: dict, variables, ring) -> "MultiPoly":
        """Sum of coeff * variable over the given mapping."""
        variables = tuple(variables)
        terms = {}
        for name, c in coeff_by_name.items():
            if not c:
                continue
            exp = tuple(1 if v == name else 0 for v in variables)
            terms[exp] = terms.get(exp, ring.zero) + c
        return MultiPoly(variables, terms, ring)

    # -- alignment ------------------------------------------------------------

    def _aligned_with(self, other: "MultiPoly"):
        if self.ring != other.ring:
            raise RingMismatch(f"polynomials over {self.ring} and {other.ring}")
        if self.variables == other.variables:
            return self, other
        merged = list(self.variables)
        for v in other.variables:
            if v not in merged:
                merged.append(v)
        return self._reindexed(tuple(merged)), other._reindexed(tuple(merged))

    def _reindexed(self, new_vars: tuple) -> "MultiPoly":
        if new_vars == self.variables:
            return self
        pos = {v: i for i, v in enumerate(new_vars)}
        nv = len(new_vars)
        terms = {}
        for exp, c in self.terms.items():
            out = [0] * nv
            for v, e in zip(self.variables, exp):
                if e:
                    out[pos[v]] = e
            terms[tuple(out)] = c
        return MultiPoly(new_vars, terms, self.ring)

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = self._aligned_with(other)
        terms = dict(a.terms)
        for exp, c in b.terms.items():
            cur = terms.get(exp)
            s = c if cur is None else cur + c
            if s:
                terms[exp] = s
            elif cur is not None:
                del terms[exp]
        return MultiPoly(a.variables, terms, a.ring)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return MultiPoly(self.variables, {e: -c for e, c in self.terms.items()}, self.ring)

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        a, b = self._aligned_with(other)
        terms: dict = {}
        for ea, ca in a.terms.items():
            for eb, cb in b.terms.items():
                exp = tuple(x + y for x, y in zip(ea, eb))
                prod = ca * cb
                cur = terms.get(exp)
                s = prod if cur is None else cur + prod
                if s:
                    terms[exp] = s
                elif cur is not None:
                    del terms[exp]
        return MultiPoly(a.variables, terms, a.ring)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "MultiPoly":
        if isinstance(c, int):
            c = self.ring.from_int(c)
        if not c:
            return MultiPoly.zero(self.variables, self.ring)
        return MultiPoly(self.variables, {e: c * v for e, v in self.terms.items()}, self.ring)

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise PreconditionError("negative power of a polynomial")
        result = MultiPoly.constant(self.ring.one, self.variables, self.ring)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        if self.ring != other.ring:
            return False
        a, b = self._aligned_with(other)
        return a.terms == b.terms

    def __hash__(self):
        raise TypeError("MultiPoly is not hashable; compare via sort_key()")

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- queries ---------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self, degree: int) -> bool:
        return all(sum(e) == degree for e in self.terms)

    def coefficient(self, exp: tuple):
        return self.terms.get(tuple(exp), self.ring.zero)

    def evaluate(self, assignment: dict):
        """Exact evaluation; every variable must be assigned."""
        missing = [v for v in self.variables if v not in assignment]
        if missing:
            raise PreconditionError(f"missing assignment for {missing}")
        max_deg = [0] * len(self.variables)
        for exp in self.terms:
            for i, e in enumerate(exp):
                if e > max_deg[i]:
                    max_deg[i] = e
        powers = []
        for i, v in enumerate(self.variables):
            tab = [self.ring.one]
            x = assignment[v]
            for _ in range(max_deg[i]):
                tab.append(tab[-1] * x)
            powers.append(tab)
        acc = self.ring.zero
        for exp, c in self.terms.items():
            val = c
            for i, e in enumerate(exp):
                if e:
                    val = val * powers[i][e]
            acc = acc + val
        return acc

    def map_coefficients(self, fn, new_ring) -> "MultiPoly":
        return MultiPoly(self.variables, {e: fn(c) for e, c in self.terms.items()}, new_ring)

    # -- ordering and printing ---------------------------------------------------

    def sorted_terms(self) -> list:
        """Terms in graded lexicographic order, largest first."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def sort_key(self):
        """Canonical comparison key (for multisets of factors)."""
        return (
            self.variables,
            tuple((e, repr(c)) for e, c in self.sorted_terms()),
        )

    def __str__(self) -> str:
        from .rings import _coeff_pieces

        if not self.terms:
            return "0"
        parts = []
        for exp, c in self.sorted_terms():
            neg, mag = _coeff_pieces(c, self.ring)
            factors = []
            for v, e in zip(self.variables, exp):
                if e == 1:
                    factors.append(v)
                elif e > 1:
                    factors.append(f"{v}^{e}")
            if not factors:
                body = mag
            else:
                body = "*".join(factors) if mag == "1" else "*".join([mag] + factors)
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"MultiPoly({self.__str__()!r})"


def symbolic_det(rows: list) -> MultiPoly:
    """Determinant of a square matrix of MultiPoly entries.

    Cofactor expansion memoized on the set of active columns; capped at
    dimension 8, which covers everything at desk scale.
    """
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise PreconditionError("matrix is not square")
    if n == 0:
        raise PreconditionError("empty matrix")
    if n > DET_DIMENSION_CAP:
        raise PreconditionError(f"symbolic determinant capped at dimension {DET_DIMENSION_CAP}")
    # align all entries over a common variable tuple
    merged: list = []
    for row in rows:
        for p in row:
            for v in p.variables:
                if v not in merged:
                    merged.append(v)
    vars_t = tuple(merged)
    ring = rows[0][0].ring
    grid = [[p._reindexed(vars_t) for p in row] for row in rows]
    one = MultiPoly.constant(ring.one, vars_t, ring)
    memo: dict = {}

    def minor(cols: tuple) -> MultiPoly:
        if not cols:
            return one
        cached = memo.get(cols)
        if cached is not None:
            return cached
        r = n - len(cols)
        acc = MultiPoly.zero(vars_t, ring)
        for idx, c in enumerate(cols):
            entry = grid[r][c]
            if entry.is_zero:
                continue
            sub = minor(cols[:idx] + cols[idx + 1:])
            term = entry * sub
            acc = acc + term if idx % 2 == 0 else acc - term
        memo[cols] = acc
        return acc

    return minor(tuple(range(n)))
