"""Riemann-Hurwitz bookkeeping for the tower over the projective line.

The objects here are purely combinatorial: genera, Galois-group orders and
multisets of ramification indices.  Everything is computed in exact rational
arithmetic and integrality of a genus is an explicitly checked postcondition,
because the main job of this module is auditing signature claims, including
at least one known-inconsistent one (see audit_signature_claims).

Triangle/Fuchsian signatures appear only as lists of periods; no hyperbolic
geometry is computed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

DEFAULT_GROUP_BOUND = 16


class NonIntegerGenus(ArithmeticError):
    """Riemann-Hurwitz data that does not yield a nonnegative integer genus."""


class GroupBoundExceeded(ValueError):
    """Asked to build a group larger than the configured cap."""


@dataclass(frozen=True)
class RamificationData:
    """Base genus, Galois group order and branch indices of a Galois cover."""

    base_genus: int
    group_order: int
    indices: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(self.indices))
        if self.base_genus < 0:
            raise ValueError("base genus must be >= 0")
        if self.group_order < 1:
            raise ValueError("group order must be >= 1")
        for e in self.indices:
            if e < 2:
                raise ValueError("ramification indices must be >= 2")
            if self.group_order % e != 0:
                raise ValueError(
                    "index %d does not divide the group order %d"
                    % (e, self.group_order)
                )


def ramification_defect(indices):
    """-2 + sum(1 - 1/e) over the indices; -2 for the empty list."""
    return Fraction(-2) + sum(Fraction(e - 1, e) for e in indices)


def rh_genus(data):
    """Genus of the cover: 2g - 2 = |G| * (2*g_base - 2 + sum(1 - 1/e_i))."""
    doubled = data.group_order * (
        Fraction(2 * data.base_genus - 2) + sum(Fraction(e - 1, e) for e in data.indices)
    )
    g = (doubled + 2) / 2
    if g.denominator != 1 or g < 0:
        raise NonIntegerGenus(
            "2g-2 = %s gives no nonnegative integer genus" % (doubled,)
        )
    return int(g)


def fermat_genus(n):
    """(n-1)(n-2)/2."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return (n - 1) * (n - 2) // 2


def heisenberg_genus(n):
    """n^2(n-3)/2 + 1 for odd n; an extra n^2/4 for even n."""
    if n < 2:
        raise ValueError("n must be >= 2")
    doubled = n * n * (n - 3)  # always even: n^2(n-3) has an even factor
    g = doubled // 2 + 1
    if n % 2 == 0:
        g += n * n // 4
    return g


# ---------------------------------------------------------------------------
# Branch points of the Fermat curve over {0, 1, infinity} and their
# stabilizers under the (Z/n)^2 action (X:Y:Z) -> (zeta^a X : zeta^b Y : Z).
#
# Coordinates of the relevant points are either 0 or powers of zeta^(1/2),
# so a point is encoded by its exponent vector: None for a zero coordinate,
# otherwise the exponent as a Fraction with denominator 1 or 2.  Projective
# rescaling shifts all exponents by a common constant.
# ---------------------------------------------------------------------------

FAMILIES = ("P", "Q", "Qprime")


@dataclass(frozen=True)
class PointClass:
    """One of the 3n labelled points: P_k over 1, Q_k over 0, Q'_k over oo."""

    family: str
    k: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError("family must be one of %s" % (FAMILIES,))
        if self.k < 0:
            raise ValueError("k must be >= 0")

    def exponents(self):
        k = Fraction(self.k)
        if self.family == "P":  # (zeta^k : 0 : 1)
            return (k, None, Fraction(0))
        if self.family == "Q":  # (0 : zeta^k : 1)
            return (None, k, Fraction(0))
        # (eps * zeta^k : 1 : 0) with eps^2 = zeta
        return (k + Fraction(1, 2), Fraction(0), None)


def _normalize_exponents(exps, n):
    pivot = next(e for e in exps if e is not None)
    return tuple(None if e is None else (e - pivot) % n for e in exps)


def _shifted(exps, a, b):
    shift = (a, b, 0)
    return tuple(
        None if e is None else e + s for e, s in zip(exps, shift)
    )


def is_fixed_by(point, a, b, n):
    exps = point.exponents()
    return _normalize_exponents(_shifted(exps, a, b), n) == _normalize_exponents(
        exps, n
    )


def stabilizer_subgroup(point, n):
    """All (a, b) in (Z/n)^2 fixing the point."""
    return {
        (a, b) for a, b in product(range(n), repeat=2) if is_fixed_by(point, a, b, n)
    }


def orbit_size(point, n):
    seen = set()
    exps = point.exponents()
    for a, b in product(range(n), repeat=2):
        seen.add(_normalize_exponents(_shifted(exps, a, b), n))
    return len(seen)


def stabilizer_generator(point, n):
    """A generator of the (cyclic, order n) stabilizer of the point."""
    subgroup = stabilizer_subgroup(point, n)
    for a, b in sorted(subgroup):
        if (a, b) == (0, 0):
            continue
        span = {((k * a) % n, (k * b) % n) for k in range(n)}
        if span == subgroup:
            return (a, b)
    if n == 1:
        return (0, 0)
    raise AssertionError("stabilizer of %s is not cyclic of order n" % (point,))


@dataclass(frozen=True)
class CoverRamification:
    """Ramification of the degree-n central cover of the Fermat curve."""

    n: int
    unramified: bool
    index: int
    branched_fermat_points: tuple
    points_above: int  # total points of the cover on the ramified fibers

    def describe(self):
        if self.unramified:
            return "unramified"
        return (
            "%d points above infinity ramified with index %d "
            "(%d branched cusps, %d points each)"
            % (
                self.points_above,
                self.index,
                len(self.branched_fermat_points),
                self.points_above // len(self.branched_fermat_points),
            )
        )


def cover_ramification(n):
    """Odd n: unramified.  Even n: the n cusps over infinity each carry
    n/2 points, all with ramification index 2."""
    if n < 2:
        raise ValueError("n must be >= 2")
    if n % 2 == 1:
        return CoverRamification(n, True, 1, (), 0)
    cusps = tuple(PointClass("Qprime", k) for k in range(n))
    return CoverRamification(n, False, 2, cusps, n * n // 2)


def modular_aut_order(n):
    """Order of the modular automorphism group and a structure tag.

    The group is an extension of G_n by a central Z/n, where G_n is the
    full Fermat automorphism group (Z/n)^2 x| S3 for odd n and only
    (Z/n)^2 x| Z/2 for even n.
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    if n % 2 == 1:
        return n * 6 * n * n, "Z/n . ((Z/n)^2 x| S3)"
    return n * 2 * n * n, "Z/n . ((Z/n)^2 x| Z/2)"


@dataclass(frozen=True)
class Verdict:
    """Outcome of auditing one signature claim; inconsistency is data."""

    claim: str
    signature: tuple
    order: int
    expected_genus: int
    computed_genus: object  # int, or None when RH yields no integer genus
    consistent: bool

    def to_json_dict(self):
        return {
            "claim": self.claim,
            "signature": list(self.signature),
            "order": self.order,
            "expected_genus": self.expected_genus,
            "computed_genus": self.computed_genus,
            "consistent": self.consistent,
        }


def signature_consistency(n, signature, order, target, claim=""):
    """Check a genus-0 quotient signature against the named curve's genus.

    target is "fermat" or "heisenberg"; the verdict records the computed
    genus (None if Riemann-Hurwitz yields no integer) and never raises.
    """
    if target == "fermat":
        expected = fermat_genus(n)
    elif target == "heisenberg":
        expected = heisenberg_genus(n)
    else:
        raise ValueError("target must be 'fermat' or 'heisenberg'")
    try:
        computed = rh_genus(RamificationData(0, order, tuple(signature)))
    except (NonIntegerGenus, ValueError):
        computed = None
    return Verdict(
        claim=claim or "signature %s, order %d vs g_%s(%d)" % (
            tuple(signature), order, target, n),
        signature=tuple(signature),
        order=order,
        expected_genus=expected,
        computed_genus=computed,
        consistent=computed == expected,
    )


def audit_signature_claims(n_max=12):
    """Audit every quotient-signature claim used by the genus bookkeeping.

    The (2n,3,3) quotient signature for the full Fermat automorphism group
    is recorded here although it is Riemann-Hurwitz inconsistent; the
    consistent variant is (2,3,2n).  Likewise the (2,n,2n) normalizer
    signature for odd n is recorded next to the consistent (2,3,2n): the
    order 6n^3 matches only the latter.  Both tensions are reported as
    verdicts, not adjudicated.
    """
    verdicts = []
    for n in range(4, n_max + 1):
        verdicts.append(
            signature_consistency(
                n, (2, 3, 2 * n), 6 * n * n, "fermat",
                "Fermat quotient signature (2,3,2n), n=%d" % n)
        )
    for n in range(3, n_max + 1, 2):
        verdicts.append(
            signature_consistency(
                n, (n, n, n), n**3, "heisenberg",
                "Heisenberg tower signature (n,n,n), odd n=%d" % n)
        )
    for n in range(4, n_max + 1, 2):
        verdicts.append(
            signature_consistency(
                n, (4 * n, n, 2), 2 * n**3, "heisenberg",
                "Heisenberg quotient signature (4n,n,2), even n=%d" % n)
        )
    for n in range(4, n_max + 1):
        verdicts.append(
            signature_consistency(
                n, (2 * n, 3, 3), 6 * n * n, "fermat",
                "claimed Fermat quotient signature (2n,3,3), n=%d" % n)
        )
    for n in range(5, n_max + 1, 2):
        verdicts.append(
            signature_consistency(
                n, (2, 3, 2 * n), 6 * n**3, "heisenberg",
                "Heisenberg normalizer order 6n^3 with (2,3,2n), odd n=%d" % n)
        )
        verdicts.append(
            signature_consistency(
                n, (2, n, 2 * n), 6 * n**3, "heisenberg",
                "claimed normalizer signature (2,n,2n), odd n=%d" % n)
        )
    return verdicts


# ---------------------------------------------------------------------------
# Bounds from the automorphism-group order argument (even n).
# ---------------------------------------------------------------------------

def m_bound(n):
    """Upper bound 2 - 5/n for the index m in the order argument."""
    if n < 4 or n % 2 != 0:
        raise ValueError("the bound applies to even n >= 4")
    return Fraction(2) - Fraction(5, n)


def b3(n):
    """Bound 3(2n-5) / (n(3n+2)) for the period-3 case."""
    if n < 4 or n % 2 != 0:
        raise ValueError("the bound applies to even n >= 4")
    return Fraction(3 * (2 * n - 5), n * (3 * n + 2))


def b4(n):
    """Bound (2n-5) / (n^2+n) for the period-4 case."""
    if n < 4 or n % 2 != 0:
        raise ValueError("the bound applies to even n >= 4")
    return Fraction(2 * n - 5, n * n + n)


# ---------------------------------------------------------------------------
# The Fermat automorphism group (Z/n)^2 x| S3, with S3 acting by coordinate
# permutations of (X : Y : Z).  A symmetry is stored as the permutation
# sending slot i of the new coordinate vector to old slot perm[i]; its
# action on translation pairs (i, j) falls out of exponent arithmetic, and
# the reported 2x2 matrix acts on *row* vectors (i, j).
# ---------------------------------------------------------------------------

_S3_PERMS = {
    "id": (0, 1, 2),
    "swap_xy": (1, 0, 2),
    "swap_xz": (2, 1, 0),
    "swap_yz": (0, 2, 1),
    "cycle_xyz": (1, 2, 0),
    "cycle_xzy": (2, 0, 1),
}

# fractional-linear symbol of the induced map on the base line
_S3_SYMBOLS = {
    "id": "x",
    "swap_xy": "1-x",
    "swap_xz": "1/x",
    "swap_yz": "x/(x-1)",
    "cycle_xyz": "1/(1-x)",
    "cycle_xzy": "(x-1)/x",
}

_PERM_NAMES = {perm: name for name, perm in _S3_PERMS.items()}


def _compose_perms(s, t):
    """Permutation of (s after t): w[i] = v[t[s[i]]]."""
    return (t[s[0]], t[s[1]], t[s[2]])


def symmetry_action(perm, pair, n):
    """Image of the translation pair (i, j) under conjugation by perm."""
    v = (pair[0], pair[1], 0)
    w = tuple(v[perm[i]] for i in range(3))
    return ((w[0] - w[2]) % n, (w[1] - w[2]) % n)


def symmetry_matrix(name, n):
    """Conjugation matrix on (Z/n)^2, acting on row vectors."""
    perm = _S3_PERMS[name]
    row0 = symmetry_action(perm, (1, 0), n)
    row1 = symmetry_action(perm, (0, 1), n)
    return (row0, row1)


@dataclass(frozen=True)
class FermatAutGroup:
    """The order-6n^2 automorphism group, elements ((i, j), perm)."""

    n: int

    @property
    def order(self):
        return 6 * self.n * self.n

    def elements(self):
        return [
            ((i, j), perm)
            for i, j in product(range(self.n), repeat=2)
            for perm in _S3_PERMS.values()
        ]

    def identity(self):
        return ((0, 0), _S3_PERMS["id"])

    def multiply(self, g, h):
        (t1, s1), (t2, s2) = g, h
        moved = symmetry_action(s1, t2, self.n)
        return (
            ((t1[0] + moved[0]) % self.n, (t1[1] + moved[1]) % self.n),
            _compose_perms(s1, s2),
        )

    def inverse(self, g):
        t, s = g
        s_inv = tuple(s.index(i) for i in range(3))
        back = symmetry_action(s_inv, t, self.n)
        return ((-back[0] % self.n, -back[1] % self.n), s_inv)

    def conjugation_report(self):
        """Per-symmetry fractional-linear symbol and row-vector matrix."""
        return {
            name: {"symbol": _S3_SYMBOLS[name], "matrix": symmetry_matrix(name, self.n)}
            for name in _S3_PERMS
        }

    def verify_axioms(self, associativity="table"):
        """Exhaustively verify closure, identity, inverses, associativity.

        associativity="table" precomputes the multiplication table so the
        |G|^3 associativity sweep is lookup-only; "skip" omits that sweep.
        """
        elems = self.elements()
        if len(set(elems)) != self.order:
            raise AssertionError("element list has duplicates")
        index = {g: i for i, g in enumerate(elems)}
        e_idx = index[self.identity()]
        table = []
        for g in elems:
            row = []
            for h in elems:
                gh = self.multiply(g, h)
                if gh not in index:
                    raise AssertionError("not closed under multiplication")
                row.append(index[gh])
            table.append(row)
        for i, g in enumerate(elems):
            if table[i][e_idx] != i or table[e_idx][i] != i:
                raise AssertionError("identity fails")
            if table[i][index[self.inverse(g)]] != e_idx:
                raise AssertionError("inverse fails")
        if associativity == "table":
            size = len(elems)
            for i in range(size):
                row_i = table[i]
                for j in range(size):
                    ij = table[i][j]
                    row_ij = table[ij]
                    row_j = table[j]
                    for k in range(size):
                        if row_ij[k] != row_i[row_j[k]]:
                            raise AssertionError("associativity fails")
        return True


def build_fermat_aut(n, bound=DEFAULT_GROUP_BOUND, verify=None):
    """Construct the group; verify=True forces the exhaustive axiom sweep
    (the default runs it for n <= 5 only)."""
    if n < 3:
        raise ValueError("n must be >= 3")
    if n > bound:
        raise GroupBoundExceeded("n=%d exceeds the group bound %d" % (n, bound))
    group = FermatAutGroup(n)
    if verify is None:
        verify = n <= 5
    if verify:
        group.verify_axioms()
    return group
