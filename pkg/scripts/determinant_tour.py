#!/usr/bin/env python3
"""Factor the determinant of a cyclic group matrix over several fields.

For a chosen n, shows the split-field linear forms, the rational norm
forms, and the coset factorizations over small prime fields, checking
that the rational factors reduced mod p refactor into the mod-p ones.
"""

import argparse
from math import gcd

from groupfft import (
    AbelianGroup,
    MultiPoly,
    PrimeField,
    det_over_finite_field,
    det_over_rationals,
    det_split_field,
    factor_xn_minus_one,
)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=6)
    parser.add_argument(
        "--primes", type=int, nargs="*", default=[2, 3, 5, 7, 11, 13]
    )
    args = parser.parse_args()
    n = args.n

    print(f"== determinant of the cyclic group of order {n} ==\n")
    split = det_split_field(AbelianGroup.cyclic(n))
    print(f"over {split.field}: {len(split.factors)} linear forms")
    for e in split.factors:
        print("   ", e.poly)

    rational = det_over_rationals(n)
    print(f"\nover Q: one norm form per divisor of {n}")
    for e in rational.factors:
        print(f"    d={e.divisor}:", e.poly)

    for p in args.primes:
        if gcd(n, p) != 1:
            print(f"\nover F_{p}: skipped (characteristic divides {n})")
            continue
        field = PrimeField(p)
        cosets = factor_xn_minus_one(n, field)
        print(f"\nover F_{p}: label sets {[list(c.labels) for c in cosets]}")
        print(f"    X^{n} - 1 =", "".join(f"({c.poly})" for c in cosets))
        modular = det_over_finite_field(n, field)
        for e in modular.factors:
            print(f"    L={list(e.coset)}:", e.poly)
        # consistency: each rational factor reduces to the product of the
        # modular factors sharing its divisor
        by_divisor = {}
        for e in modular.factors:
            ell = e.coset[0]
            d = n // gcd(n, ell) if ell else 1
            by_divisor.setdefault(d, []).append(e.poly)
        for entry in rational.factors:
            reduced = entry.poly.map_coefficients(field.from_rational, field)
            prod = MultiPoly.constant(field.one, modular.variables, field)
            for part in by_divisor[entry.divisor]:
                prod = prod * part
            assert prod == reduced
        print(f"    mod-{p} reduction of the rational factors: consistent")


if __name__ == "__main__":
    main()
