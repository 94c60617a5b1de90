#!/usr/bin/env python3
"""Walk through the block diagonalization of the order-6 symmetric group.

Prints the change-of-basis matrix built from matrix coefficients of the
irreducibles, the resulting blocks, the determinant identity, and the
power-sum reconstruction of the degree-2 factor.
"""

from groupfft import (
    block_diagonalize_s3,
    frobenius_factorization,
    frobenius_polynomial,
    s3,
    symbolic_det,
)


def main():
    data = s3()
    group = data.group
    print(f"group: {group.name}, elements {', '.join(group.labels)}")
    print("composition table:")
    for row in group.table:
        print("   ", " ".join(group.labels[k].ljust(4) for k in row))

    result = block_diagonalize_s3()
    print("\nchange of basis P (columns = matrix coefficients of the irreducibles):")
    for row in result.p_matrix:
        print("   ", "  ".join(str(x).rjust(7) for x in row))

    print("\nconjugating the group matrix gives Diag(L0, L1, M, M) with")
    print("  L0    =", result.l0)
    print("  L1    =", result.l1)
    print("  M[00] =", result.m_block[0][0])
    print("  M[01] =", result.m_block[0][1])
    print("  M[10] =", result.m_block[1][0])
    print("  M[11] =", result.m_block[1][1])
    print("  det M =", result.det_m)

    det_a = symbolic_det(group.symbolic_matrix(result.l0.ring))
    assert det_a == result.l0 * result.l1 * result.det_m * result.det_m
    print("\ndet A =", det_a)
    print("det A == L0 * L1 * (det M)^2: verified")

    psi = frobenius_polynomial(data.representations[2])
    print("\npower-sum form of the degree-2 factor:")
    print("  psi   =", psi.polynomial)
    print("  equals det M:", psi.polynomial == result.det_m)
    print("  raw tuple-sum / power-sum ratio:", psi.ratio)

    fd = frobenius_factorization(group, data.representations)
    print("\nfull factorization:", " * ".join(
        f"{e.label}^{e.multiplicity}" if e.multiplicity > 1 else e.label
        for e in fd.factors
    ))


if __name__ == "__main__":
    main()
