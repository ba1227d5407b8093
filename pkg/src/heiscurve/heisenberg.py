"""Arithmetic in the finite Heisenberg group of 3x3 unitriangular matrices.

An element

    [1 x z]
    [0 1 y]
    [0 0 1]        x, y, z in Z/nZ

is stored as the triple (x, y, z) of canonical residues mod n.  Values are
immutable and all operations are pure, so everything here is thread-safe.
Powers use the closed form

    g^v = (v*x, v*y, v*z + v*(v-1)/2 * x*y)

where v*(v-1)/2 is computed in unbounded integers before reduction, so no
modular division by 2 is ever needed (2 may not be invertible mod n).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

DEFAULT_ENUMERATION_BOUND = 16


class ModulusMismatch(ValueError):
    """Combining elements that live over different moduli."""


class EnumerationBoundExceeded(ValueError):
    """Asked to enumerate a group larger than the configured cap."""


@dataclass(frozen=True)
class HeisenbergElement:
    n: int
    x: int
    y: int
    z: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError("modulus must be an integer >= 1")
        object.__setattr__(self, "x", self.x % self.n)
        object.__setattr__(self, "y", self.y % self.n)
        object.__setattr__(self, "z", self.z % self.n)

    @classmethod
    def identity(cls, n):
        return cls(n, 0, 0, 0)

    @classmethod
    def generator_a(cls, n):
        """The generator with a single 1 in the top-middle slot."""
        return cls(n, 1, 0, 0)

    @classmethod
    def generator_b(cls, n):
        """The generator with a single 1 in the middle-right slot."""
        return cls(n, 0, 1, 0)

    @classmethod
    def central(cls, n, z):
        return cls(n, 0, 0, z)

    def _check_same_modulus(self, other):
        if self.n != other.n:
            raise ModulusMismatch(
                "cannot combine elements mod %d and mod %d" % (self.n, other.n)
            )

    def __mul__(self, other):
        if not isinstance(other, HeisenbergElement):
            return NotImplemented
        self._check_same_modulus(other)
        # unitriangular matrix product; only the corner picks up a cross term
        return HeisenbergElement(
            self.n,
            self.x + other.x,
            self.y + other.y,
            self.z + other.z + self.x * other.y,
        )

    def inverse(self):
        return HeisenbergElement(self.n, -self.x, -self.y, -self.z + self.x * self.y)

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        v = exponent
        corner = v * self.z + (v * (v - 1) // 2) * self.x * self.y
        return HeisenbergElement(self.n, v * self.x, v * self.y, corner)

    def is_identity(self):
        return self.x == 0 and self.y == 0 and self.z == 0

    def is_central(self):
        return self.x == 0 and self.y == 0

    def order(self):
        """Smallest v >= 1 with g^v = 1.

        The order always divides n^2 (the image in (Z/n)^2 has order
        dividing n, and central elements have order dividing n), so the
        scan below terminates quickly.
        """
        acc = self
        for v in range(1, self.n * self.n + 1):
            if acc.is_identity():
                return v
            acc = acc * self
        raise AssertionError("unreachable: order exceeds n^2")

    def abelianize(self):
        """Image in the abelianization (Z/n)^2; kills exactly the center."""
        return (self.x, self.y)

    def conjugate_by(self, h):
        return h * self * h.inverse()

    def matrix(self):
        """The 3x3 integer matrix with entries reduced mod n."""
        return ((1, self.x, self.z), (0, 1, self.y), (0, 0, 1))

    def __str__(self):
        return "(%d, %d, %d) mod %d" % (self.x, self.y, self.z, self.n)


def commutator(g, h):
    return g * h * g.inverse() * h.inverse()


def enumerate_group(n, bound=DEFAULT_ENUMERATION_BOUND):
    """All n^3 elements, ordered lexicographically by (x, y, z)."""
    if n > bound:
        raise EnumerationBoundExceeded(
            "n=%d exceeds the enumeration bound %d" % (n, bound)
        )
    return [HeisenbergElement(n, x, y, z) for x, y, z in product(range(n), repeat=3)]
