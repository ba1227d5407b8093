"""Exact arithmetic in an imaginary quadratic field Q(sqrt(d)).

A number is p + q*sqrt(d) with p, q reduced fractions and d a squarefree
negative integer (default -3, whose ring contains the primitive cube root
of unity needed downstream).  Real quadratic fields are rejected: the
square-root case analysis below relies on the norm p^2 - d q^2 being a sum
of positive terms.

Also provides root finding for polynomials of degree <= 4 with coefficients
in the field, by rational-root search plus explicit quadratic-formula
solving; rational quartics without linear factors go through the resolvent
cubic.  Quartics that do not split into factors of degree <= 2 over the
field raise UnsupportedFactorization.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

DEFAULT_D = -3


class NotASquare(ArithmeticError):
    """No square root exists inside the field."""


class UnsupportedFactorization(ArithmeticError):
    """Polynomial does not visibly split into degree <= 2 factors."""


def _is_squarefree(m):
    m = abs(m)
    k = 2
    while k * k <= m:
        if m % (k * k) == 0:
            return False
        k += 1
    return True


def _check_d(d):
    if d >= 0 or not _is_squarefree(d):
        raise ValueError("d must be a squarefree negative integer, got %r" % (d,))


def rational_sqrt(value):
    """Exact square root of a nonnegative rational, or None."""
    if value < 0:
        return None
    num, den = value.numerator, value.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


@dataclass(frozen=True)
class QuadNum:
    p: Fraction
    q: Fraction
    d: int = DEFAULT_D

    def __post_init__(self):
        _check_d(self.d)
        object.__setattr__(self, "p", Fraction(self.p))
        object.__setattr__(self, "q", Fraction(self.q))

    @classmethod
    def of(cls, value, d=DEFAULT_D):
        if isinstance(value, QuadNum):
            return value
        return cls(Fraction(value), Fraction(0), d)

    @classmethod
    def root(cls, d=DEFAULT_D):
        """The element sqrt(d) itself."""
        return cls(Fraction(0), Fraction(1), d)

    def _coerce(self, other):
        if isinstance(other, QuadNum):
            if other.d != self.d:
                raise ValueError("mixing fields Q(sqrt %d) and Q(sqrt %d)"
                                 % (self.d, other.d))
            return other
        if isinstance(other, (int, Fraction)):
            return QuadNum.of(other, self.d)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadNum(self.p + o.p, self.q + o.q, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadNum(-self.p, -self.q, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadNum(self.p - o.p, self.q - o.q, self.d)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadNum(
            self.p * o.p + self.d * self.q * o.q,
            self.p * o.q + self.q * o.p,
            self.d,
        )

    __rmul__ = __mul__

    def conjugate(self):
        return QuadNum(self.p, -self.q, self.d)

    def norm(self):
        return self.p * self.p - self.d * self.q * self.q

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        return QuadNum(self.p / n, -self.q / n, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = QuadNum.of(1, self.d)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, QuadNum) else other
        if not isinstance(o, QuadNum):
            return NotImplemented
        return self.d == o.d and self.p == o.p and self.q == o.q

    def __hash__(self):
        return hash((self.p, self.q, self.d))

    def is_zero(self):
        return self.p == 0 and self.q == 0

    def is_rational(self):
        return self.q == 0

    def sqrt(self):
        """A square root in the field, sign-normalized.

        Of the two roots +-r, returns the one with positive rational part,
        or positive sqrt(d)-part when the rational part vanishes.  Raises
        NotASquare when no root lies in the field.
        """
        if self.is_zero():
            return QuadNum.of(0, self.d)
        if self.q == 0:
            u = rational_sqrt(self.p)
            if u is not None:
                return QuadNum(u, Fraction(0), self.d)
            v = rational_sqrt(self.p / self.d)
            if v is not None:
                return QuadNum(Fraction(0), v, self.d)
            raise NotASquare("%s is not a square in Q(sqrt %d)" % (self, self.d))
        # (u + v sqrt d)^2 = self  =>  u^2 is a root of t^2 - p t + d q^2/4
        s = rational_sqrt(self.norm())
        if s is not None:
            for t in ((self.p + s) / 2, (self.p - s) / 2):
                u = rational_sqrt(t)
                if u is not None and u != 0:
                    v = self.q / (2 * u)
                    root = QuadNum(u, v, self.d)
                    if root * root == self:
                        return self._normalize_sign(root)
        raise NotASquare("%s is not a square in Q(sqrt %d)" % (self, self.d))

    @staticmethod
    def _normalize_sign(root):
        if root.p > 0 or (root.p == 0 and root.q > 0):
            return root
        return -root

    def to_json_dict(self):
        return {
            "p_num": self.p.numerator,
            "p_den": self.p.denominator,
            "q_num": self.q.numerator,
            "q_den": self.q.denominator,
            "d": self.d,
        }

    @classmethod
    def from_json_dict(cls, data):
        return cls(
            Fraction(data["p_num"], data["p_den"]),
            Fraction(data["q_num"], data["q_den"]),
            data["d"],
        )

    def __str__(self):
        radical = "√%d" % self.d
        if self.q == 0:
            return str(self.p)
        q_part = radical if abs(self.q) == 1 else "%s%s" % (abs(self.q), radical)
        if self.p == 0:
            return q_part if self.q > 0 else "-" + q_part
        sign = "+" if self.q > 0 else "-"
        return "%s %s %s" % (self.p, sign, q_part)


def zeta3(d=DEFAULT_D):
    """The primitive cube root of unity (-1 + sqrt(-3))/2; requires d = -3."""
    if d != -3:
        raise ValueError("a primitive cube root of unity needs d = -3")
    return QuadNum(Fraction(-1, 2), Fraction(1, 2), d)


# ---------------------------------------------------------------------------
# Polynomials over the field: coefficient lists, low degree first.
# ---------------------------------------------------------------------------

def poly_normalize(coeffs, d=DEFAULT_D):
    out = [QuadNum.of(c, d) for c in coeffs]
    while out and out[-1].is_zero():
        out.pop()
    return out


def poly_eval(coeffs, x):
    result = QuadNum.of(0, x.d)
    for c in reversed(coeffs):
        result = result * x + c
    return result


def poly_deflate(coeffs, root):
    """Divide by (x - root) via synthetic division; the remainder must
    vanish exactly."""
    quotient = []
    acc = QuadNum.of(0, root.d)
    for c in reversed(coeffs):
        acc = acc * root + c
        quotient.append(acc)
    remainder = quotient.pop()
    if not remainder.is_zero():
        raise ValueError("%s is not a root" % (root,))
    quotient.reverse()
    return quotient


def _divisors(m):
    m = abs(m)
    small, large = [], []
    k = 1
    while k * k <= m:
        if m % k == 0:
            small.append(k)
            if k != m // k:
                large.append(m // k)
        k += 1
    return small + large[::-1]


def _rational_root_candidates(coeffs):
    """Rational-root-theorem candidates for a rational-coefficient poly."""
    fracs = [c.p for c in coeffs]
    lcm = 1
    for f in fracs:
        lcm = lcm * f.denominator // gcd(lcm, f.denominator)
    ints = [int(f * lcm) for f in fracs]
    a0 = next((c for c in ints if c != 0), 0)
    lead = ints[-1]
    if a0 == 0 or lead == 0:
        return []
    for num in _divisors(a0):
        for den in _divisors(lead):
            yield Fraction(num, den)
            yield Fraction(-num, den)


def _find_linear_root(coeffs, d):
    """A root of the polynomial lying in the field, found via rational
    candidates (a rational root must be a common root of the rational and
    sqrt(d) parts of the coefficient list)."""
    rational_part = [c.p for c in coeffs]
    radical_part = [c.q for c in coeffs]
    probe = coeffs if all(q == 0 for q in radical_part) else None
    if probe is None:
        # mixed coefficients: candidates from whichever part is nonzero
        base = rational_part if any(rational_part) else radical_part
        base_poly = [QuadNum.of(c, d) for c in base]
    else:
        base_poly = coeffs
    seen = set()
    for cand in _rational_root_candidates(base_poly):
        if cand in seen:
            continue
        seen.add(cand)
        x = QuadNum.of(cand, d)
        if poly_eval(coeffs, x).is_zero():
            return x
    return None


def _solve_quadratic(coeffs, d):
    """Roots of c0 + c1 x + c2 x^2 inside the field; returns (roots, outside)."""
    c0, c1, c2 = coeffs
    disc = c1 * c1 - 4 * c2 * c0
    try:
        s = disc.sqrt()
    except NotASquare:
        return [], 2
    two_a = 2 * c2
    return [(-c1 + s) / two_a, (-c1 - s) / two_a], 0


def _split_rational_quartic(coeffs, d):
    """Split a monic rational quartic with no rational roots into two
    quadratics with coefficients in the field, via the resolvent cubic."""
    c0, c1, c2, c3 = (c.p for c in coeffs[:4])  # monic: coeffs[4] == 1
    # depress: x = y - c3/4
    shift = c3 / 4
    p = c2 - 6 * shift**2
    q = c1 - 2 * c2 * shift + 8 * shift**3
    r = c0 - c1 * shift + c2 * shift**2 - 3 * shift**4
    pairs = []
    if q == 0:
        ts, outside = _solve_quadratic(
            [QuadNum.of(r, d), QuadNum.of(p, d), QuadNum.of(1, d)], d)
        if not ts:
            raise UnsupportedFactorization("biquadratic resolvent does not split")
        for t in ts:
            pairs.append((QuadNum.of(0, d), -t))  # y^2 - t
        quadratics = [[c, b, QuadNum.of(1, d)] for b, c in pairs]
    else:
        resolvent = [QuadNum.of(-q * q, d), QuadNum.of(p * p - 4 * r, d),
                     QuadNum.of(2 * p, d), QuadNum.of(1, d)]
        z = _find_linear_root(resolvent, d)
        if z is None or z.is_zero():
            raise UnsupportedFactorization("resolvent cubic has no usable root")
        try:
            s = z.sqrt()
        except NotASquare:
            raise UnsupportedFactorization("resolvent root is not a square")
        qn = QuadNum.of(q, d)
        pn = QuadNum.of(p, d)
        t = (pn + z - qn / s) / 2
        u = (pn + z + qn / s) / 2
        quadratics = [
            [t, s, QuadNum.of(1, d)],
            [u, -s, QuadNum.of(1, d)],
        ]
    # undo the depression: y = x + shift
    shifted = []
    sh = QuadNum.of(shift, d)
    for c, b, a in quadratics:
        shifted.append([c + b * sh + sh * sh, b + 2 * sh, a])
    return shifted


def find_field_roots(coeffs, d=DEFAULT_D):
    """All roots (with multiplicity) in Q(sqrt d) of a degree <= 4 poly.

    Returns (roots, outside) where outside counts roots provably lying
    outside the field.  Raises UnsupportedFactorization when the polynomial
    cannot be split into degree <= 2 factors over the field.
    """
    poly = poly_normalize(coeffs, d)
    if len(poly) < 2:
        return [], 0
    if len(poly) > 5:
        raise UnsupportedFactorization("degree > 4 is not supported")
    roots = []
    outside = 0
    zero = QuadNum.of(0, d)
    while len(poly) >= 2 and poly[0].is_zero():
        roots.append(zero)
        poly = poly[1:]
    while len(poly) >= 4:
        root = _find_linear_root(poly, d)
        if root is not None:
            roots.append(root)
            poly = poly_deflate(poly, root)
            continue
        rational = all(c.is_rational() for c in poly)
        if len(poly) == 4 and rational:
            # rational cubic with no rational root: irreducible over Q,
            # hence no root in a quadratic extension either
            outside += 3
            poly = []
            break
        if len(poly) == 5 and rational:
            lead = poly[-1]
            monic = [c / lead for c in poly]
            for quad in _split_rational_quartic(monic, d):
                sub_roots, sub_outside = _solve_quadratic(quad, d)
                roots.extend(sub_roots)
                outside += sub_outside
            poly = []
            break
        raise UnsupportedFactorization(
            "no linear factor found for an irrational-coefficient polynomial")
    if len(poly) == 3:
        sub_roots, sub_outside = _solve_quadratic(poly, d)
        roots.extend(sub_roots)
        outside += sub_outside
    elif len(poly) == 2:
        roots.append(-poly[0] / poly[1])
    return roots, outside
