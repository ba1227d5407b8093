"""Freely reduced words in the free group on two generators a, b.

A word is a tuple of syllables (generator, exponent) with nonzero exponents
and no two adjacent syllables on the same generator; the empty tuple is the
identity.  Words evaluate homomorphically into the Heisenberg group mod n
(a -> generator_a, b -> generator_b) and into (Z/n)^2 by exponent sums.

Kernel membership for both quotient maps is decided by *evaluation* in the
finite target group, which is a genuine decision procedure.  The generating
sets a^n, b^n, [a,b]^n (Heisenberg kernel) and a^n, b^n, [a,b] (abelianized
kernel) are validated one-way in the test suite: each listed generator does
evaluate to the identity.  Whether those angle-bracket lists are meant as a
plain subgroup or as a normal closure is immaterial to evaluation, and this
module deliberately does not decide between the two readings.

String syntax: letters a, b with uppercase A, B for inverses, and optional
caret exponents, e.g. "abAB" for the commutator [a,b] or "a^3bA^2".
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .heisenberg import HeisenbergElement

_TOKEN = re.compile(r"([abAB])(?:\^(-?\d+))?")

GENERATORS = ("a", "b")


def _reduce(syllables):
    """Stack-based free reduction of (generator, exponent) pairs."""
    stack = []
    for gen, exp in syllables:
        if gen not in GENERATORS:
            raise ValueError("unknown generator %r" % (gen,))
        if exp == 0:
            continue
        if stack and stack[-1][0] == gen:
            merged = stack[-1][1] + exp
            stack.pop()
            if merged != 0:
                stack.append((gen, merged))
        else:
            stack.append((gen, exp))
    return tuple(stack)


@dataclass(frozen=True)
class Word:
    syllables: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "syllables", _reduce(self.syllables))

    @classmethod
    def from_str(cls, text):
        if not re.fullmatch(r"(?:[abAB](?:\^-?\d+)?)*", text):
            raise ValueError("bad word syntax: %r" % (text,))
        parts = []
        for letter, exp in _TOKEN.findall(text):
            e = int(exp) if exp else 1
            if letter.isupper():
                letter, e = letter.lower(), -e
            parts.append((letter, e))
        return cls(tuple(parts))

    def __mul__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return Word(self.syllables + other.syllables)

    def inverse(self):
        return Word(tuple((g, -e) for g, e in reversed(self.syllables)))

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = Word()
        for _ in range(k):
            result = result * self
        return result

    def is_identity(self):
        return not self.syllables

    def length(self):
        return sum(abs(e) for _, e in self.syllables)

    def letters(self):
        """Flat list of single letters, each a (generator, +-1) pair."""
        out = []
        for g, e in self.syllables:
            step = 1 if e > 0 else -1
            out.extend([(g, step)] * abs(e))
        return out

    def __str__(self):
        if not self.syllables:
            return "1"
        chunks = []
        for g, e in self.syllables:
            letter = g if e > 0 else g.upper()
            chunks.append(letter if abs(e) == 1 else "%s^%d" % (letter, abs(e)))
        return "".join(chunks)


A = Word((("a", 1),))
B = Word((("b", 1),))
COMMUTATOR = A * B * A.inverse() * B.inverse()


def eval_in_heisenberg(word, n):
    """Homomorphic image in the Heisenberg group mod n."""
    result = HeisenbergElement.identity(n)
    for g, e in word.syllables:
        base = (
            HeisenbergElement.generator_a(n)
            if g == "a"
            else HeisenbergElement.generator_b(n)
        )
        result = result * base**e
    return result


def eval_in_abelianization(word, n):
    """Exponent sums of a and b, reduced mod n."""
    ea = sum(e for g, e in word.syllables if g == "a")
    eb = sum(e for g, e in word.syllables if g == "b")
    return (ea % n, eb % n)


def in_heisenberg_kernel(word, n):
    return eval_in_heisenberg(word, n).is_identity()


def in_abelianized_kernel(word, n):
    return eval_in_abelianization(word, n) == (0, 0)


@dataclass(frozen=True)
class Endo:
    """An endomorphism of the free group given by images of a and b."""

    image_of_a: Word
    image_of_b: Word

    def apply(self, word):
        result = Word()
        for g, e in word.syllables:
            image = self.image_of_a if g == "a" else self.image_of_b
            result = result * image**e
        return result

    def compose(self, other):
        """self after other: (self.compose(other))(w) = self(other(w))."""
        return Endo(self.apply(other.image_of_a), self.apply(other.image_of_b))


IDENTITY_ENDO = Endo(A, B)
SWAP = Endo(B, A)  # a <-> b
FLIP = Endo(B.inverse() * A.inverse(), B)  # a -> b^-1 a^-1, b -> b

# Fixed representatives of the six outer classes generated by the two
# involutions above.  (Literal composition closure is infinite: the square
# of FLIP is an inner automorphism, not the identity substitution.)
S3_ENDOS = {
    "id": IDENTITY_ENDO,
    "i1": SWAP,
    "i2": FLIP,
    "i1i2": SWAP.compose(FLIP),
    "i2i1": FLIP.compose(SWAP),
    "i1i2i1": SWAP.compose(FLIP).compose(SWAP),
}


def heisenberg_kernel_generators(n):
    """The classical generating set a^n, b^n, [a,b]^n."""
    return (A**n, B**n, COMMUTATOR**n)


def lifts_to_heisenberg_cover(endo, n):
    """Whether the endomorphism preserves the kernel of the Heisenberg map.

    Checked on the kernel's generating set: the image of each of a^n, b^n,
    [a,b]^n must again evaluate to the identity mod n.
    """
    return all(
        in_heisenberg_kernel(endo.apply(w), n)
        for w in heisenberg_kernel_generators(n)
    )


def _letters_inverse(letters):
    return [(g, -s) for g, s in reversed(letters)]


def _cyclic_rotations(letters):
    for k in range(len(letters)):
        yield k, letters[k:] + letters[:k]


def commutator_conjugacy_witness(endo):
    """Unwind endo([a,b]) as T [a,b]^(+-1) T^-1, if possible.

    Strips matched conjugating letters off both ends, then matches the
    cyclically reduced core against rotations of [a,b] and its inverse.
    Returns (T, sign) with the verified witness, or None.
    """
    image = endo.apply(COMMUTATOR)
    letters = image.letters()
    outer = []
    while len(letters) >= 2 and letters[0] == (letters[-1][0], -letters[-1][1]):
        outer.append(letters[0])
        letters = letters[1:-1]
    for sign, base in ((1, COMMUTATOR), (-1, COMMUTATOR.inverse())):
        core = base.letters()
        if len(letters) != len(core):
            continue
        for k, rotated in _cyclic_rotations(core):
            if letters == rotated:
                # rotation by k conjugates by the first k letters of core
                conj = Word(tuple(outer)) * Word(tuple(core[:k])).inverse()
                if conj * base * conj.inverse() == image:
                    return conj, sign
    return None


def nielsen_commutator_check(endo, max_conjugator_length=None):
    """True iff endo([a,b]) is a conjugate of [a,b] or of its inverse."""
    witness = commutator_conjugacy_witness(endo)
    if witness is None:
        return False
    conj, _sign = witness
    if max_conjugator_length is not None and conj.length() > max_conjugator_length:
        return False
    return True
