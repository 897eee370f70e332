"""Hilbert symbols over Q, Hasse invariants and equivalence of ternary
diagonal forms, and the embedding criteria they decide.

(a, b)_v = +1 iff z^2 = a x^2 + b y^2 has a nontrivial solution over the
completion of Q at the place v.  Two quaternion criteria are exposed:

  * the classical one for pushing a biquadratic V4-extension into a
    quaternion Q8-extension:  [a, b, ab] ~ [1, 1, 1];
  * the triquadratic one for pushing an E8-extension into a Pauli
    extension:  [a, b, ab] ~ [1, c, c],
    together with the symbol form (abc, -1) = (a, b) and the search for
    rewritten triplets inside S_L = {a, b, ab, c, ac, bc, abc}.

Everything is decided at the finitely many relevant places: infinity, 2,
and the odd primes dividing a square-free part of a coefficient.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction

from . import arith
from .arith import Rational, SquareClass, squarefree_part


@dataclass(frozen=True)
class Place:
    """A place of Q: a prime number, or None for the real place."""

    p: int | None

    def __post_init__(self):
        if self.p is not None and not arith.is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @classmethod
    def real(cls) -> "Place":
        return cls(None)

    @classmethod
    def prime(cls, p: int) -> "Place":
        return cls(p)

    @property
    def is_real(self) -> bool:
        return self.p is None

    def __str__(self):
        return "oo" if self.p is None else str(self.p)


REAL_PLACE = Place(None)


def _square_class_int(a: Rational) -> int:
    """An integer in the square class of a (numerator times denominator)."""
    a = Fraction(a)
    if a == 0:
        raise ValueError("square class of 0 is undefined")
    return a.numerator * a.denominator


def _eps(u: int) -> int:
    return ((u - 1) // 2) % 2


def _omega(u: int) -> int:
    return ((u * u - 1) // 8) % 2


def hilbert(a: Rational, b: Rational, place: Place) -> int:
    """The Hilbert symbol (a, b)_v by the standard local unit formulas."""
    a = _square_class_int(a)
    b = _square_class_int(b)
    if place.is_real:
        return -1 if a < 0 and b < 0 else 1
    p = place.p
    alpha, u = 0, a
    while u % p == 0:
        u //= p
        alpha += 1
    beta, w = 0, b
    while w % p == 0:
        w //= p
        beta += 1
    if p == 2:
        exponent = _eps(u) * _eps(w) + alpha * _omega(w) + beta * _omega(u)
        return -1 if exponent % 2 else 1
    sign = 1
    if alpha * beta % 2 and (p - 1) // 2 % 2:
        sign = -sign
    if beta % 2:
        sign *= arith.legendre(u, p)
    if alpha % 2:
        sign *= arith.legendre(w, p)
    return sign


def relevant_places(*values: Rational) -> list[Place]:
    """Infinity, 2, and every odd prime dividing a square-free part; the
    Hilbert symbols of the given values are +1 everywhere else."""
    primes = set()
    for v in values:
        rep = squarefree_part(v).representative
        for p, _ in arith.factor(rep).exponents:
            if p != 2:
                primes.add(p)
    return [REAL_PLACE, Place(2)] + [Place(p) for p in sorted(primes)]


@lru_cache(maxsize=None)
def _square_set(q: int) -> frozenset:
    return frozenset(z * z % q for z in range(q))


@lru_cache(maxsize=None)
def local_solubility_search(a: int, b: int, p: int) -> bool:
    """Brute-force decision of z^2 = a x^2 + b y^2 over Q_p, independent of
    the symbol formulas: search nonsingular solutions mod p (which lift by
    Hensel), then search primitive solutions mod p^(2B+1), a depth at which
    existence is equivalent to p-adic solubility."""
    a = squarefree_part(Fraction(a)).representative
    b = squarefree_part(Fraction(b)).representative
    # fast path: a zero mod p with nonzero gradient lifts
    squares = {}
    for z in range(p):
        squares.setdefault(z * z % p, z)
    for x in range(p):
        for y in range(p):
            t = (a * x * x + b * y * y) % p
            z = squares.get(t)
            if z is None:
                continue
            if (x % p, y % p, z % p) == (0, 0, 0):
                continue
            if any(g % p for g in (2 * a * x, 2 * b * y, 2 * z)):
                return True
    # primitive search at the certified depth: a primitive solution has a
    # unit coordinate, which scaling normalizes to 1
    B = (1 if p == 2 else 0) + max(abs_val(a, p), abs_val(b, p))
    q = p ** (2 * B + 1)
    sq = _square_set(q)
    a_sq = {a * s % q for s in sq}
    b_sq = {b * s % q for s in sq}
    if not {(1 - s) % q for s in a_sq}.isdisjoint(b_sq):
        return True  # z = 1
    if not {(a + s) % q for s in b_sq}.isdisjoint(sq):
        return True  # x = 1
    if not {(b + s) % q for s in a_sq}.isdisjoint(sq):
        return True  # y = 1
    return False


def abs_val(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


@dataclass(frozen=True)
class TernaryForm:
    """A nondegenerate diagonal form <a, b, c> over Q."""

    a: Fraction
    b: Fraction
    c: Fraction

    @classmethod
    def of(cls, a, b, c) -> "TernaryForm":
        a, b, c = Fraction(a), Fraction(b), Fraction(c)
        if 0 in (a, b, c):
            raise ValueError("form coefficients must be nonzero")
        return cls(a, b, c)

    @property
    def coefficients(self):
        return (self.a, self.b, self.c)

    def reduced(self) -> tuple[int, int, int]:
        return tuple(squarefree_part(x).representative for x in self.coefficients)

    def __str__(self):
        return f"[{self.a}, {self.b}, {self.c}]"


def hasse_invariant(f: TernaryForm, place: Place) -> int:
    """prod over i < j of (f_i, f_j)_v."""
    a, b, c = f.coefficients
    return hilbert(a, b, place) * hilbert(a, c, place) * hilbert(b, c, place)


def signature(f: TernaryForm) -> tuple[int, int]:
    pos = sum(1 for x in f.coefficients if x > 0)
    return (pos, 3 - pos)


def discriminant_class(f: TernaryForm) -> SquareClass:
    return squarefree_part(f.a * f.b * f.c)


def equivalent(f: TernaryForm, g: TernaryForm) -> bool:
    """Rational equivalence of ternary forms: same discriminant class, same
    signature, same Hasse invariant at every relevant place."""
    if discriminant_class(f) != discriminant_class(g):
        return False
    if signature(f) != signature(g):
        return False
    places = relevant_places(*f.coefficients, *g.coefficients)
    return all(hasse_invariant(f, v) == hasse_invariant(g, v) for v in places)


def isotropic(f: TernaryForm) -> bool:
    """Does f represent 0 nontrivially over Q?  Local-global: at the real
    place this means indefinite; at p it means the Hasse invariant equals
    (-1, -disc)_p."""
    if signature(f)[0] in (0, 3):
        return False
    d = f.a * f.b * f.c
    for v in relevant_places(*f.coefficients):
        if v.is_real:
            continue
        if hasse_invariant(f, v) != hilbert(Fraction(-1), -d, v):
            return False
    return True


def isotropy_witness(f: TernaryForm, bound: int = 30):
    """A small nontrivial integer zero of f (signs are immaterial for a
    diagonal form), or None within the bound."""
    scale = math.lcm(*(q.denominator for q in f.coefficients))
    A, B, C = (int(q * scale) for q in f.coefficients)
    squares = [n * n for n in range(bound + 1)]
    for x in range(bound + 1):
        ax = A * squares[x]
        for y in range(bound + 1):
            target = -(ax + B * squares[y])
            if target % C:
                continue
            t = target // C
            if t < 0 or t > squares[-1]:
                continue
            z = math.isqrt(t)
            if z * z == t and (x, y, z) != (0, 0, 0):
                return (x, y, z)
    return None


def _independent_classes(values) -> bool:
    """Do the square classes generate a subgroup of Q*/(Q*)^2 of full rank,
    i.e. 2^len(values)?  Checked by multiplying out all subsets."""
    classes = set()
    for mask in range(1, 2 ** len(values)):
        prod = Fraction(1)
        for i, v in enumerate(values):
            if mask >> i & 1:
                prod *= Fraction(v)
        rep = squarefree_part(prod).representative
        if rep == 1:
            return False
        classes.add(rep)
    return len(classes) == 2 ** len(values) - 1


def witt_embeddable(a1: Rational, a2: Rational) -> bool:
    """Can the biquadratic field Q(sqrt(a1), sqrt(a2)) be pushed into a
    quaternion Q8-extension of Q?  Holds iff [a1, a2, a1*a2] ~ [1, 1, 1]."""
    a1, a2 = Fraction(a1), Fraction(a2)
    if not _independent_classes([a1, a2]):
        raise ValueError(
            "a1, a2 must be quadratically independent non-squares"
            " (the V4 hypothesis fails)")
    return equivalent(TernaryForm.of(a1, a2, a1 * a2), TernaryForm.of(1, 1, 1))


def pauli_embeddable(a: Rational, b: Rational, c: Rational) -> bool:
    """Embedding criterion for Q(sqrt(a), sqrt(b), sqrt(c)) into a Pauli
    extension with the quaternion part over Q(sqrt(c)):
    [a, b, ab] ~ [1, c, c]."""
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if not _independent_classes([a, b, c]):
        raise ValueError("a, b, c must be quadratically independent")
    return equivalent(TernaryForm.of(a, b, a * b), TernaryForm.of(1, c, c))


def brauer_condition(a: Rational, b: Rational, c: Rational) -> bool:
    """The quaternion-algebra form of the criterion: (abc, -1) = (a, b) as
    Hilbert symbols at every relevant place."""
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if not _independent_classes([a, b, c]):
        raise ValueError("a, b, c must be quadratically independent")
    places = relevant_places(a, b, c, Fraction(-1), a * b * c)
    return all(hilbert(a * b * c, Fraction(-1), v) == hilbert(a, b, v)
               for v in places)


def sl_classes(a: Rational, b: Rational, c: Rational) -> list[int]:
    """The seven nontrivial square classes {a, b, ab, c, ac, bc, abc} of the
    triquadratic field generated by a, b, c."""
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if not _independent_classes([a, b, c]):
        raise ValueError("a, b, c must be quadratically independent")
    reps = []
    for u in (a, b, a * b, c, a * c, b * c, a * b * c):
        reps.append(squarefree_part(u).representative)
    return reps


def sl_search(a: Rational, b: Rational, c: Rational) -> list[tuple[int, int, int]]:
    """All ordered triplets (u, v, x) of pairwise-distinct, quadratically
    independent classes from S_L with [u, v, uv] ~ [1, x, x].  A nonempty
    result rewrites the generating triplet so the embedding criterion holds
    for the same field."""
    classes = sl_classes(a, b, c)
    hits = []
    for u, v, x in itertools.permutations(classes, 3):
        uv = squarefree_part(Fraction(u) * v).representative
        if x == uv:
            continue  # u, v, x dependent
        if equivalent(TernaryForm.of(u, v, Fraction(u) * v),
                      TernaryForm.of(1, x, x)):
            hits.append((u, v, x))
    return hits
