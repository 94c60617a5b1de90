"""Command-line front end.

Subcommands: cyclo phi | cyclo basis, fft, ifft, weight, idempotents,
factor-xn1, groupdet, vandermonde, frobenius.  Vectors travel in the
canonical lexicographic element order.  Exit codes: 0 success, 1 parse
error (bad arguments, malformed vectors), 2 precondition violation
(e.g. the characteristic divides the group order).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import factorize, frobenius, transform
from .abelian import AbelianGroup, parse_group
from .cyclotomic import cyclotomic_field, cyclotomic_polynomial, rational_basis_cyclic
from .errors import GroupfftError, PreconditionError
from .multipoly import symbolic_det
from .numtheory import factorization
from .rings import QQ, ExtField, PrimeField, UniPoly, find_irreducible, format_unipoly


class CLIUsageError(Exception):
    """Malformed request: wrong vector shape, unparseable field, bad payload."""


@dataclass
class CommandRequest:
    subcommand: str
    group: str | None = None
    field: str | None = None
    vector: str | None = None
    n: int | None = None
    d: int | None = None
    q: str | None = None
    over: str | None = None
    cayley: str | None = None
    json_output: bool = False
    seed: int = 0
    verify: bool = False


def parse_field_descriptor(text: str, zeta_conductor: int | None = None):
    """Q | Qzeta[:d] | Fp:<p> | Fq:<p>^<r> | F<q> (q a prime power)."""
    text = text.strip()
    if text == "Q":
        return QQ
    if text.startswith("Qzeta"):
        if text == "Qzeta":
            if zeta_conductor is None:
                raise CLIUsageError("Qzeta needs a conductor in this context")
            return cyclotomic_field(zeta_conductor)
        if text.startswith("Qzeta:"):
            return cyclotomic_field(int(text.split(":", 1)[1]))
        raise CLIUsageError(f"bad field descriptor {text!r}")
    try:
        if text.startswith("Fp:"):
            return PrimeField(int(text.split(":", 1)[1]))
        if text.startswith("Fq:"):
            base, _, exp = text.split(":", 1)[1].partition("^")
            p, r = int(base), int(exp) if exp else 1
            return _finite_field(p, r)
        if text.startswith("F"):
            q = int(text[1:])
            fact = factorization(q)
            if len(fact) != 1:
                raise CLIUsageError(f"{q} is not a prime power")
            ((p, r),) = fact.items()
            return _finite_field(p, r)
    except ValueError as exc:
        raise CLIUsageError(f"bad field descriptor {text!r}") from exc
    raise CLIUsageError(f"bad field descriptor {text!r}")


def _finite_field(p: int, r: int):
    if r == 1:
        return PrimeField(p)
    base = PrimeField(p)
    return ExtField(base, find_irreducible(base, r))


def parse_vector(text: str, group: AbelianGroup, field) -> transform.GroupVector:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != group.order:
        raise CLIUsageError(
            f"vector has {len(parts)} entries, group {group.describe()} needs {group.order}"
        )
    values = []
    for p in parts:
        try:
            values.append(field.from_rational(Fraction(p)))
        except (ValueError, ZeroDivisionError) as exc:
            raise CLIUsageError(f"bad vector entry {p!r}") from exc
    return transform.GroupVector(group, field, tuple(values))


def _format_values(vec) -> str:
    return ",".join(vec.field.format_elem(v) for v in vec.values)


def _json_values(vec) -> list[str]:
    return [vec.field.format_elem(v) for v in vec.values]


def _unipoly_json(p: UniPoly) -> list[str]:
    return [p.ring.format_elem(c) for c in p.coeffs]


def _multipoly_json(p) -> list:
    return [[list(exp), p.ring.format_elem(c)] for exp, c in p.sorted_terms()]


# ---------------------------------------------------------------------------
# Subcommand handlers
# ---------------------------------------------------------------------------

def _cmd_cyclo(req: CommandRequest) -> tuple[int, str]:
    if req.over == "phi":
        poly = cyclotomic_polynomial(req.d)
        if req.json_output:
            return 0, json.dumps({"d": req.d, "coefficients": _unipoly_json(poly)})
        return 0, format_unipoly(poly)
    basis = rational_basis_cyclic(req.n)
    if req.json_output:
        payload = [
            {"d": b.d, "j": b.j, "coefficients": _unipoly_json(b.poly)} for b in basis
        ]
        return 0, json.dumps({"n": req.n, "elements": payload})
    lines = [f"E(d={b.d},j={b.j}) = {format_unipoly(b.poly)}" for b in basis]
    return 0, "\n".join(lines)


def _transform_request(req: CommandRequest):
    group = parse_group(req.group)
    field = parse_field_descriptor(req.field, zeta_conductor=group.exponent)
    vec = parse_vector(req.vector, group, field)
    return group, field, vec


def _sampled_round_trip_check(group, field, seed: int, samples: int = 20):
    """Seeded self-test: transform then invert random vectors exactly."""
    import random

    rng = random.Random(seed)
    for _ in range(samples):
        if getattr(field, "is_finite", False):
            values = tuple(
                field.from_int(rng.randrange(field.characteristic))
                for _ in range(group.order)
            )
        else:
            values = tuple(
                field.from_rational(Fraction(rng.randrange(-9, 10)))
                for _ in range(group.order)
            )
        vec = transform.GroupVector(group, field, values)
        if transform.inverse_fft(transform.fft(vec)).values != vec.values:
            raise AssertionError("sampled round-trip self-check failed")


def _cmd_fft(req: CommandRequest) -> tuple[int, str]:
    group, field, vec = _transform_request(req)
    out = transform.fft(vec)
    if req.verify:
        back = transform.inverse_fft(out)
        if back.values != vec.values:
            raise AssertionError("round-trip self-check failed")
        _sampled_round_trip_check(group, field, req.seed)
    if req.json_output:
        return 0, json.dumps(
            {"group": group.describe(), "field": req.field, "values": _json_values(out)}
        )
    return 0, _format_values(out)


def _cmd_ifft(req: CommandRequest) -> tuple[int, str]:
    group, field, vec = _transform_request(req)
    dual_vec = transform.GroupVector(group, field, vec.values, dual=True)
    out = transform.inverse_fft(dual_vec)
    if req.verify:
        forward = transform.fft(out)
        if forward.values != dual_vec.values:
            raise AssertionError("round-trip self-check failed")
        _sampled_round_trip_check(group, field, req.seed)
    if req.json_output:
        return 0, json.dumps(
            {"group": group.describe(), "field": req.field, "values": _json_values(out)}
        )
    return 0, _format_values(out)


def _cmd_weight(req: CommandRequest) -> tuple[int, str]:
    group, field, vec = _transform_request(req)
    rank = transform.blahut_weight(vec)
    if req.verify and rank != vec.hamming_weight():
        raise AssertionError("rank does not match the direct nonzero count")
    if req.json_output:
        return 0, json.dumps(
            {
                "group": group.describe(),
                "field": req.field,
                "weight": vec.hamming_weight(),
                "rank": rank,
            }
        )
    return 0, str(rank)


def _cmd_idempotents(req: CommandRequest) -> tuple[int, str]:
    group = parse_group(req.group)
    field = parse_field_descriptor(req.field, zeta_conductor=group.exponent)
    idems = transform.group_idempotents(group, field)
    characters = group.characters()
    if req.verify:
        ident = group.identity
        total = idems[0]
        for e in idems[1:]:
            total = total + e
        expected = tuple(
            field.one if a == ident else field.zero for a in group.elements()
        )
        if total.values != expected:
            raise AssertionError("idempotents do not sum to the identity indicator")
    if req.json_output:
        payload = [
            {"character": list(chi.residues), "values": _json_values(e)}
            for chi, e in zip(characters, idems)
        ]
        return 0, json.dumps({"group": group.describe(), "field": req.field, "idempotents": payload})
    lines = [
        f"chi={chi.residues}: {_format_values(e)}"
        for chi, e in zip(characters, idems)
    ]
    return 0, "\n".join(lines)


def _cmd_factor_xn1(req: CommandRequest) -> tuple[int, str]:
    field = parse_field_descriptor(req.q if req.q.startswith(("F", "Q")) else f"F{req.q}")
    factors = factorize.factor_xn_minus_one(req.n, field)
    if req.json_output:
        payload = [
            {"labels": list(cf.labels), "coefficients": _unipoly_json(cf.poly)}
            for cf in factors
        ]
        return 0, json.dumps({"n": req.n, "q": field.order, "factors": payload})
    return 0, "".join(f"({format_unipoly(cf.poly)})" for cf in factors)


def _cmd_groupdet(req: CommandRequest) -> tuple[int, str]:
    group = parse_group(req.group)
    over = req.over
    if over == "Q":
        if len(group.divisors) != 1:
            raise PreconditionError("rational factorization is implemented for cyclic groups")
        fd = factorize.det_over_rationals(group.divisors[0])
    elif over == "split":
        field = (
            parse_field_descriptor(req.field, zeta_conductor=group.exponent)
            if req.field
            else None
        )
        fd = factorize.det_split_field(group, field)
    elif over == "Fq":
        if req.q is None:
            raise CLIUsageError("--over Fq requires --q")
        if len(group.divisors) != 1:
            raise PreconditionError("finite-field factorization is implemented for cyclic groups")
        field = parse_field_descriptor(req.q if req.q.startswith("F") else f"F{req.q}")
        fd = factorize.det_over_finite_field(group.divisors[0], field)
    else:
        raise CLIUsageError(f"unknown --over {over!r}")
    if req.json_output:
        payload = [
            {
                "label": e.label,
                "multiplicity": e.multiplicity,
                "claimed_irreducible": e.claimed_irreducible,
                "coset": list(e.coset) if e.coset else None,
                "terms": _multipoly_json(e.poly),
            }
            for e in fd.factors
        ]
        return 0, json.dumps(
            {"group": group.describe(), "over": over, "variables": list(fd.variables), "factors": payload}
        )
    pieces = []
    for e in fd.factors:
        body = f"({e.poly})"
        if e.multiplicity > 1:
            body += f"^{e.multiplicity}"
        pieces.append(body)
    return 0, "".join(pieces)


def _cmd_vandermonde(req: CommandRequest) -> tuple[int, str]:
    field = (
        parse_field_descriptor(req.field, zeta_conductor=req.n)
        if req.field
        else cyclotomic_field(req.n)
    )
    value = factorize.vandermonde_det(req.n, field)
    rendered = field.format_elem(value)
    if req.json_output:
        return 0, json.dumps({"n": req.n, "value": rendered})
    return 0, rendered


def _cmd_frobenius(req: CommandRequest) -> tuple[int, str]:
    if req.cayley:
        with open(req.cayley) as fh:
            data = json.load(fh)
        group = frobenius.FiniteGroup.from_table(
            data["labels"], data["table"], name=data.get("name", "G")
        )
        if group.order > 8:
            raise PreconditionError("symbolic determinant capped at order 8")
        det = symbolic_det(group.symbolic_matrix(QQ))
        if req.json_output:
            return 0, json.dumps(
                {"group": group.name, "order": group.order, "det": _multipoly_json(det)}
            )
        return 0, f"det A_{group.name} = {det}"
    if req.group != "S3":
        raise CLIUsageError("built-in groups: S3 (or supply --cayley FILE)")
    result = frobenius.block_diagonalize_s3()
    data = frobenius.s3()
    fact = frobenius.frobenius_factorization(data.group, data.representations)
    psi2 = frobenius.frobenius_polynomial(data.representations[2])
    identity_ok = psi2.polynomial == result.det_m
    if not identity_ok:
        raise AssertionError("power-sum factor does not reproduce det M")
    if req.json_output:
        return 0, json.dumps(
            {
                "group": "S3",
                "L0": _multipoly_json(result.l0),
                "L1": _multipoly_json(result.l1),
                "detM": _multipoly_json(result.det_m),
                "factorization": [
                    {"label": e.label, "multiplicity": e.multiplicity, "terms": _multipoly_json(e.poly)}
                    for e in fact.factors
                ],
                "verified": True,
            }
        )
    lines = [
        f"L0 = {result.l0}",
        f"L1 = {result.l1}",
        f"det M = {result.det_m}",
        "det A_S3 = L0 * L1 * (det M)^2: verified",
        "power-sum form of the degree-2 factor equals det M: verified",
    ]
    return 0, "\n".join(lines)


_HANDLERS = {
    "cyclo": _cmd_cyclo,
    "fft": _cmd_fft,
    "ifft": _cmd_ifft,
    "weight": _cmd_weight,
    "idempotents": _cmd_idempotents,
    "factor-xn1": _cmd_factor_xn1,
    "groupdet": _cmd_groupdet,
    "vandermonde": _cmd_vandermonde,
    "frobenius": _cmd_frobenius,
}


def dispatch(req: CommandRequest) -> tuple[int, str]:
    """Run one request; returns (exit_code, rendered_output)."""
    handler = _HANDLERS.get(req.subcommand)
    if handler is None:
        return 1, f"error: unknown subcommand {req.subcommand!r}"
    try:
        return handler(req)
    except CLIUsageError as exc:
        return 1, f"error: {exc}"
    except GroupfftError as exc:
        return 2, f"error: {exc}"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="groupfft",
        description=(
            "Exact Fourier analysis on finite abelian groups. Vectors are "
            "comma-separated in lexicographic element order; fields are "
            "Q, Qzeta[:d], Fp:<p>, Fq:<p>^<r> or F<q>. Elements of Q(zeta_d) "
            "print as polynomials in z, extension-field elements in Y."
        ),
    )
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--seed", type=int, default=0, help="seed for sampled self-tests")
    parser.add_argument("--verify", action="store_true", help="run redundant cross-checks")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_cyclo = sub.add_parser("cyclo", help="cyclotomic polynomials and rational bases")
    cyclo_sub = p_cyclo.add_subparsers(dest="cyclo_action", required=True)
    p_phi = cyclo_sub.add_parser("phi", help="print Phi_d")
    p_phi.add_argument("d", type=int)
    p_basis = cyclo_sub.add_parser("basis", help="rational basis of Q[X]/(X^n - 1)")
    p_basis.add_argument("n", type=int)

    for name, helptext in [
        ("fft", "forward transform"),
        ("ifft", "inverse transform"),
        ("weight", "Hamming weight via the dual-side matrix rank"),
    ]:
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--group", required=True)
        p.add_argument("--field", required=True)
        p.add_argument("--vector", required=True)

    p_idem = sub.add_parser("idempotents", help="orthogonal group-ring idempotents")
    p_idem.add_argument("--group", required=True)
    p_idem.add_argument("--field", required=True)

    p_fx = sub.add_parser("factor-xn1", help="factor X^n - 1 over F_q")
    p_fx.add_argument("--n", type=int, required=True)
    p_fx.add_argument("--q", required=True)

    p_gd = sub.add_parser("groupdet", help="factor the group determinant")
    p_gd.add_argument("--group", required=True)
    p_gd.add_argument("--over", required=True, choices=["Q", "Fq", "split"])
    p_gd.add_argument("--q")
    p_gd.add_argument("--field")

    p_vd = sub.add_parser("vandermonde", help="determinant of the character matrix of C_n")
    p_vd.add_argument("--n", type=int, required=True)
    p_vd.add_argument("--field")

    p_fr = sub.add_parser("frobenius", help="block diagonalization and factor check")
    p_fr.add_argument("--group", default="S3")
    p_fr.add_argument("--cayley", help="JSON file with labels + table")
    return parser


def request_from_args(args: argparse.Namespace) -> CommandRequest:
    req = CommandRequest(
        subcommand=args.subcommand,
        json_output=args.json,
        seed=args.seed,
        verify=args.verify,
    )
    if args.subcommand == "cyclo":
        req.over = args.cyclo_action
        if args.cyclo_action == "phi":
            req.d = args.d
        else:
            req.n = args.n
    for attr in ("group", "field", "vector", "n", "q", "over", "cayley"):
        if hasattr(args, attr) and getattr(args, attr) is not None:
            if args.subcommand == "cyclo" and attr in ("n", "over"):
                continue
            setattr(req, attr, getattr(args, attr))
    return req


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    req = request_from_args(args)
    code, output = dispatch(req)
    stream = sys.stdout if code == 0 else sys.stderr
    if output:
        print(output, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
