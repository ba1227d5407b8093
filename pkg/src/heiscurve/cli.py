"""Command-line front end.

Every computation is exact: all numeric output is integers or fractions
rendered as num/den, never floating point.  Exit codes: 0 success, 1 usage
error, 2 mathematical error (singular curve, non-integer genus, unsupported
factorization), 3 when `audit` finds any inconsistent signature claim (so a
CI run can pin the known discrepancies via an expected-verdicts file).
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction

from . import covers, elliptic, heisenberg, quadfield, words

USAGE_ERROR = 1
MATH_ERROR = 2
AUDIT_INCONSISTENT = 3


class CliError(Exception):
    def __init__(self, message, code=USAGE_ERROR):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError(message, USAGE_ERROR)


def _parse_fraction(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise CliError("bad rational %r" % (text,))


def _parse_quadnum(text, d):
    """Parse 'p', 'qr', or 'p+qr' where r stands for sqrt(d), e.g.
    '-432', '2160-2160r', '3/2+1/2r'."""
    text = text.strip().replace(" ", "")
    m = re.fullmatch(
        r"(?P<p>[+-]?\d+(?:/\d+)?)?(?:(?P<sign>[+-]?)(?P<q>\d+(?:/\d+)?)?r)?",
        text,
    )
    if not m or (m.group("p") is None and not text.endswith("r")):
        raise CliError("bad field element %r (use e.g. '2160-2160r')" % (text,))
    p = _parse_fraction(m.group("p")) if m.group("p") else Fraction(0)
    if text.endswith("r"):
        q = _parse_fraction(m.group("q")) if m.group("q") else Fraction(1)
        if m.group("sign") == "-":
            q = -q
    else:
        q = Fraction(0)
    return quadfield.QuadNum(p, q, d)


def _parse_triple(text, n):
    parts = text.split(",")
    if len(parts) != 3:
        raise CliError("element must be three comma-separated residues x,y,z")
    x, y, z = (int(v) for v in parts)
    return heisenberg.HeisenbergElement(n, x, y, z)


def _fraction_json(f):
    return {"num": f.numerator, "den": f.denominator}


def _emit(payload, text, fmt):
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _add_common(parser):
    parser.add_argument("--format", choices=("text", "json"), default="text")


def build_parser():
    parser = _Parser(prog="heiscurve", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("group", help="Heisenberg group element operations")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--op", required=True,
                   choices=("mul", "pow", "order", "abelianize", "enumerate"))
    p.add_argument("--element", help="x,y,z")
    p.add_argument("--other", help="x,y,z (for mul)")
    p.add_argument("--exp", type=int, help="exponent (for pow)")
    p.add_argument("--bound", type=int, default=None)
    _add_common(p)

    p = sub.add_parser("word", help="free-group word evaluation and lifting")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--eval", dest="eval_word", help="word like 'abAB' or 'a^3bA^2'")
    p.add_argument("--kernel", help="word to test for kernel membership")
    p.add_argument("--lift", choices=sorted(words.S3_ENDOS),
                   help="test whether the endomorphism lifts")
    p.add_argument("--nielsen", choices=sorted(words.S3_ENDOS),
                   help="commutator conjugacy witness for the endomorphism")
    _add_common(p)

    p = sub.add_parser("genus", help="genus formulas and Riemann-Hurwitz")
    p.add_argument("--fermat", type=int)
    p.add_argument("--heisenberg", type=int)
    p.add_argument("--rh", action="store_true")
    p.add_argument("--base-genus", type=int, default=0)
    p.add_argument("--order", type=int)
    p.add_argument("--indices", help="comma-separated ramification indices")
    _add_common(p)

    p = sub.add_parser("audit", help="audit every recorded signature claim")
    p.add_argument("--n-max", type=int, default=12)
    _add_common(p)

    p = sub.add_parser("c3", help="full degree-3 isogeny derivation")
    p.add_argument("--d", type=int, default=quadfield.DEFAULT_D)
    _add_common(p)

    p = sub.add_parser("torsion", help="field-rational 3-torsion of a curve")
    p.add_argument("--A", required=True)
    p.add_argument("--B", required=True)
    p.add_argument("--d", type=int, default=quadfield.DEFAULT_D)
    _add_common(p)

    p = sub.add_parser("isogeny", help="3-isogeny codomain from a kernel point")
    p.add_argument("--A", required=True)
    p.add_argument("--B", required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--d", type=int, default=quadfield.DEFAULT_D)
    _add_common(p)

    p = sub.add_parser("j", help="j-invariant of a curve")
    p.add_argument("--A", required=True)
    p.add_argument("--B", required=True)
    p.add_argument("--d", type=int, default=quadfield.DEFAULT_D)
    _add_common(p)

    return parser


def _enumeration_bound(args):
    env = os.environ.get("HEISCURVE_BOUND")
    if env is not None:
        return int(env)
    if getattr(args, "bound", None) is not None:
        return args.bound
    return heisenberg.DEFAULT_ENUMERATION_BOUND


def _run_group(args):
    n = args.n
    if args.op == "enumerate":
        elements = heisenberg.enumerate_group(n, _enumeration_bound(args))
        payload = {"n": n, "count": len(elements),
                   "elements": [[g.x, g.y, g.z] for g in elements]}
        _emit(payload, "\n".join(str(g) for g in elements), args.format)
        return 0
    if not args.element:
        raise CliError("--element is required for op %r" % args.op)
    g = _parse_triple(args.element, n)
    if args.op == "mul":
        if not args.other:
            raise CliError("--other is required for mul")
        h = _parse_triple(args.other, n)
        result = g * h
        _emit({"n": n, "result": [result.x, result.y, result.z]},
              str(result), args.format)
    elif args.op == "pow":
        if args.exp is None:
            raise CliError("--exp is required for pow")
        result = g ** args.exp
        _emit({"n": n, "result": [result.x, result.y, result.z]},
              str(result), args.format)
    elif args.op == "order":
        result = g.order()
        _emit({"n": n, "order": result}, str(result), args.format)
    elif args.op == "abelianize":
        result = g.abelianize()
        _emit({"n": n, "image": list(result)}, str(result), args.format)
    return 0


def _run_word(args):
    n = args.n
    if args.lift:
        endo = words.S3_ENDOS[args.lift]
        lifts = words.lifts_to_heisenberg_cover(endo, n)
        _emit({"endomorphism": args.lift, "n": n, "lifts": lifts},
              "lifts" if lifts else "does not lift", args.format)
        return 0
    if args.nielsen:
        endo = words.S3_ENDOS[args.nielsen]
        witness = words.commutator_conjugacy_witness(endo)
        if witness is None:
            _emit({"endomorphism": args.nielsen, "conjugate": False},
                  "no conjugacy witness", args.format)
        else:
            conj, sign = witness
            _emit({"endomorphism": args.nielsen, "conjugate": True,
                   "T": str(conj), "sign": sign},
                  "T = %s, sign = %+d" % (conj, sign), args.format)
        return 0
    if args.kernel:
        w = words.Word.from_str(args.kernel)
        in_phi = words.in_heisenberg_kernel(w, n)
        in_psi = words.in_abelianized_kernel(w, n)
        _emit({"word": str(w), "n": n,
               "in_heisenberg_kernel": in_phi, "in_abelianized_kernel": in_psi},
              "heisenberg kernel: %s, abelianized kernel: %s" % (in_phi, in_psi),
              args.format)
        return 0
    if args.eval_word:
        w = words.Word.from_str(args.eval_word)
        g = words.eval_in_heisenberg(w, n)
        ab = words.eval_in_abelianization(w, n)
        _emit({"word": str(w), "n": n,
               "heisenberg": [g.x, g.y, g.z], "abelianization": list(ab)},
              "in H_n: %s; abelianized: %s" % (g, (ab,)), args.format)
        return 0
    raise CliError("word requires one of --eval/--kernel/--lift/--nielsen")


def _run_genus(args):
    if args.fermat is not None:
        g = covers.fermat_genus(args.fermat)
        _emit({"curve": "fermat", "n": args.fermat, "genus": g}, str(g),
              args.format)
        return 0
    if args.heisenberg is not None:
        g = covers.heisenberg_genus(args.heisenberg)
        _emit({"curve": "heisenberg", "n": args.heisenberg, "genus": g}, str(g),
              args.format)
        return 0
    if args.rh:
        if args.order is None:
            raise CliError("--order is required for --rh")
        indices = tuple(
            int(v) for v in args.indices.split(",")) if args.indices else ()
        data = covers.RamificationData(args.base_genus, args.order, indices)
        g = covers.rh_genus(data)
        _emit({"base_genus": args.base_genus, "order": args.order,
               "indices": list(indices), "genus": g}, str(g), args.format)
        return 0
    raise CliError("genus requires one of --fermat/--heisenberg/--rh")


def _run_audit(args):
    verdicts = covers.audit_signature_claims(args.n_max)
    payload = [v.to_json_dict() for v in verdicts]
    lines = []
    for v in verdicts:
        status = "consistent  " if v.consistent else "INCONSISTENT"
        lines.append(
            "%s  signature=%s order=%d expected_genus=%d computed=%s  %s"
            % (status, v.signature, v.order, v.expected_genus,
               v.computed_genus, v.claim)
        )
    _emit(payload, "\n".join(lines), args.format)
    return AUDIT_INCONSISTENT if any(not v.consistent for v in verdicts) else 0


def _run_c3(args):
    report = elliptic.derive_isogenous_curves(args.d)
    _emit(report.to_json_dict(), report.to_text(), args.format)
    return 0


def _curve_from_args(args):
    a = _parse_quadnum(args.A, args.d)
    b = _parse_quadnum(args.B, args.d)
    return elliptic.Curve(a, b)


def _run_torsion(args):
    curve = _curve_from_args(args)
    torsion = elliptic.three_torsion(curve)
    payload = {
        "curve": curve.to_json_dict(),
        "points": [{"x": p.x.to_json_dict(), "y": p.y.to_json_dict()}
                   for p in torsion.points],
        "missing_y": torsion.missing_y,
        "missing_x": torsion.missing_x,
        "count_with_identity": torsion.count_with_identity(),
    }
    text = "\n".join(str(p) for p in torsion.points) or "(no field-rational points)"
    text += "\n%d point(s) including the identity" % torsion.count_with_identity()
    _emit(payload, text, args.format)
    return 0


def _run_isogeny(args):
    curve = _curve_from_args(args)
    p = curve.point(_parse_quadnum(args.x, args.d), _parse_quadnum(args.y, args.d))
    codomain = elliptic.velu3(curve, p)
    _emit({"domain": curve.to_json_dict(), "codomain": codomain.to_json_dict(),
           "j": elliptic.j_invariant(codomain).to_json_dict()},
          str(codomain), args.format)
    return 0


def _run_j(args):
    curve = _curve_from_args(args)
    j = elliptic.j_invariant(curve)
    _emit({"curve": curve.to_json_dict(), "j": j.to_json_dict()}, str(j),
          args.format)
    return 0


_DISPATCH = {
    "group": _run_group,
    "word": _run_word,
    "genus": _run_genus,
    "audit": _run_audit,
    "c3": _run_c3,
    "torsion": _run_torsion,
    "isogeny": _run_isogeny,
    "j": _run_j,
}

_MATH_ERRORS = (
    covers.NonIntegerGenus,
    covers.GroupBoundExceeded,
    elliptic.SingularCurve,
    elliptic.PointNotOnCurve,
    elliptic.BadKernelPoint,
    quadfield.NotASquare,
    quadfield.UnsupportedFactorization,
    heisenberg.EnumerationBoundExceeded,
    heisenberg.ModulusMismatch,
)


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _DISPATCH[args.command](args)
    except CliError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return exc.code
    except _MATH_ERRORS as exc:
        print("math error: %s" % exc, file=sys.stderr)
        return MATH_ERROR
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return USAGE_ERROR


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
