"""Irreducibility of pure polynomials X^n + c over Q and the complete
Galois-group classification for the octic family X^8 + c.

For irreducible X^8 + c the Galois group is determined by the square class
of c alone:

    c = d^4          -> C4 x C2 (abelian, splitting degree 8)
    c = 2 d^2        -> dihedral of order 16
    c = -2 d^2       -> quasidihedral of order 16
    c = k^2 (else)   -> Pauli group of order 16
    otherwise        -> Hol(C8), order 32

The branches are mutually exclusive: 2d^2 = k^2 and d^4 = 2e^2 have no
rational solutions.  The mod-p Frobenius census in `oracle` independently
checks every verdict.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import arith, groups
from .arith import Rational

TAG_REDUCIBLE = "Reducible"
TAG_K8 = "K8"
TAG_D16 = "D16"
TAG_QD16 = "QD16"
TAG_PAULI = "Pauli"
TAG_B32 = "B32"

_DEGREES = {TAG_K8: 8, TAG_D16: 16, TAG_QD16: 16, TAG_PAULI: 16, TAG_B32: 32}
_GROUP_ORDERS = {TAG_K8: 8, TAG_D16: 16, TAG_QD16: 16, TAG_PAULI: 16, TAG_B32: 32}


@dataclass(frozen=True)
class GaloisTag:
    """Classifier verdict for X^8 + c, with predicted splitting degree."""

    name: str
    splitting_degree: int | None

    def __str__(self):
        if self.splitting_degree is None:
            return self.name
        return f"{self.name} (degree {self.splitting_degree})"

    @property
    def group_order(self) -> int | None:
        return _GROUP_ORDERS.get(self.name)


def _prime_divisors(n: int) -> list[int]:
    return [p for p, _ in arith.factor(n).exponents]


def is_irreducible_binomial(n: int, c: Rational) -> bool:
    """Irreducibility of X^n + c over Q: -c must not be a q-th power for any
    prime q | n, and when 4 | n, c must not be of the form 4*lambda^4."""
    c = Fraction(c)
    if n < 1:
        raise ValueError("degree must be positive")
    if c == 0:
        raise ValueError("X^n alone is not a binomial: c must be nonzero")
    for q in _prime_divisors(n):
        if arith.is_nth_power(-c, q):
            return False
    if n % 4 == 0 and arith.is_fourth_power(c / 4):
        return False
    return True


def irreducibility_report(c: Rational) -> dict:
    """Clause-by-clause irreducibility diagnosis for X^8 + c."""
    c = Fraction(c)
    if c == 0:
        raise ValueError("c must be nonzero")
    mu = arith.nth_root(-c, 2)
    lam = arith.nth_root(c / 4, 4)
    return {
        "square_root_of_minus_c": mu,     # criterion (a) witness, q = 2
        "lambda_with_c_eq_4lambda4": lam,  # criterion (b) witness
        "irreducible": mu is None and lam is None,
    }


def pauli_condition(k: Rational) -> bool:
    """True iff k > 0 is neither a rational square nor twice one: exactly the
    values for which X^8 + k^2 has the Pauli group as Galois group."""
    k = Fraction(k)
    if k <= 0:
        raise ValueError("k must be positive")
    return not arith.is_square(k) and not arith.is_square(k / 2)


def pauli_condition_violation(k: Rational) -> str | None:
    """Human-readable violated clause, or None when the condition holds."""
    k = Fraction(k)
    if k <= 0:
        return "k must be positive"
    r = arith.nth_root(k, 2)
    if r is not None:
        return f"k = {k} is a rational square ({r}^2)"
    r = arith.nth_root(k / 2, 2)
    if r is not None:
        return f"k = {k} is twice a rational square (2*{r}^2)"
    return None


def classify_octic(c: Rational) -> GaloisTag:
    """Galois group of X^8 + c over Q, for any nonzero rational c."""
    c = Fraction(c)
    if c == 0:
        raise ValueError("c must be nonzero")
    if not is_irreducible_binomial(8, c):
        return GaloisTag(TAG_REDUCIBLE, None)
    if arith.is_fourth_power(c):
        return GaloisTag(TAG_K8, 8)
    if arith.is_square(c / 2):
        return GaloisTag(TAG_D16, 16)
    if arith.is_square(-c / 2):
        return GaloisTag(TAG_QD16, 16)
    if arith.is_square(c):
        # k = sqrt(c) automatically satisfies the Pauli condition here:
        # k square would make c a fourth power, k = 2*l^2 would make c = 4*l^4
        return GaloisTag(TAG_PAULI, 16)
    return GaloisTag(TAG_B32, 32)


def classification_branch(c: Rational) -> str:
    """The matched branch of the classification list, as a display string."""
    c = Fraction(c)
    tag = classify_octic(c)
    if tag.name == TAG_REDUCIBLE:
        rep = irreducibility_report(c)
        if rep["square_root_of_minus_c"] is not None:
            return f"-c = {rep['square_root_of_minus_c']}^2 is a square (criterion a)"
        return f"c = 4*lambda^4 with lambda = {rep['lambda_with_c_eq_4lambda4']} (criterion b)"
    if tag.name == TAG_K8:
        return f"c = d^4 with d = {arith.nth_root(c, 4)}"
    if tag.name == TAG_D16:
        return f"c = 2*d^2 with d = {arith.nth_root(c / 2, 2)}"
    if tag.name == TAG_QD16:
        return f"c = -2*d^2 with d = {arith.nth_root(-c / 2, 2)}"
    if tag.name == TAG_PAULI:
        k = arith.nth_root(c, 2)
        return f"c = k^2 with k = {k}, k neither a square nor twice a square"
    return "c is not in any square class of the list (generic case)"


def schinzel_abelian(n: int, c: Rational) -> bool:
    """Abelianity test for the Galois group of X^n + c: true iff c^2 is an
    n-th power in Q.  For irreducible X^n + c this forces a cyclic group when
    4 does not divide n, and C2 x C(n/2) otherwise."""
    c = Fraction(c)
    if n < 1:
        raise ValueError("degree must be positive")
    if c == 0:
        raise ValueError("c must be nonzero")
    return arith.is_nth_power(c * c, n)


@lru_cache(maxsize=None)
def _hol_subgroup_fingerprints() -> set:
    hol = groups.hol_c8_model()
    return {groups.fingerprint(H) for H, _ in hol.subgroups()}


_TAG_MODEL = {
    TAG_K8: lambda: groups.direct_product(groups.cyclic(4), groups.cyclic(2)),
    TAG_D16: lambda: groups.order16_stock_models()["D16"],
    TAG_QD16: lambda: groups.order16_stock_models()["QD16"],
    TAG_PAULI: groups.pauli_matrix_group,
    TAG_B32: groups.hol_c8_model,
}


def full_subgroup_bound(tag: GaloisTag | str) -> bool:
    """Check that the tagged group's order divides |Hol(C8)| = 32 and that a
    subgroup of the Hol(C8) model has the tagged group's fingerprint."""
    name = tag.name if isinstance(tag, GaloisTag) else tag
    if name == TAG_REDUCIBLE:
        raise ValueError("reducible polynomials carry no transitive group")
    model = _TAG_MODEL[name]()
    if 32 % model.order != 0:
        return False
    return groups.fingerprint(model) in _hol_subgroup_fingerprints()
