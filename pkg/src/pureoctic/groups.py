"""A small exact engine for permutation groups on at most 32 points.

Provides multiplication closure, subgroup-lattice enumeration, quotients,
and an isomorphism fingerprint strong enough to tell apart all 14 groups
of order 16.  The 16-element group generated by the three 2x2 Pauli spin
matrices is built over exact Gaussian integers and identified by three
structural criteria: no element of order 8, some non-normal subgroup, and
a quaternion Q8 subgroup.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache


class Perm:
    """A permutation of {0..n-1}, stored as its tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images}")
        self.images = images

    @classmethod
    def _unchecked(cls, images: tuple) -> "Perm":
        # products and inverses of bijections need no re-validation
        p = object.__new__(cls)
        p.images = images
        return p

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls._unchecked(tuple(range(n)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Perm") -> "Perm":
        # function composition: (p*q)(x) = p(q(x))
        if len(self.images) != len(other.images):
            raise ValueError("permutation degrees differ")
        images = self.images
        return Perm._unchecked(tuple(images[j] for j in other.images))

    def inverse(self) -> "Perm":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm._unchecked(tuple(inv))

    def cycle_type(self) -> tuple[int, ...]:
        """Cycle lengths in decreasing order (a partition of the degree)."""
        seen = [False] * len(self.images)
        lengths = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            length = 0
            x = start
            while not seen[x]:
                seen[x] = True
                x = self.images[x]
                length += 1
            lengths.append(length)
        return tuple(sorted(lengths, reverse=True))

    def order(self) -> int:
        return math.lcm(*self.cycle_type())

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __lt__(self, other):
        return self.images < other.images

    def __repr__(self):
        return f"Perm{self.images}"


def closure(generators) -> "FinGroup":
    """Smallest composition-closed set of permutations containing the
    generators and the identity (breadth-first multiplication closure)."""
    gens = sorted(set(generators))
    if not gens:
        raise ValueError("need at least one generator")
    degrees = {g.degree for g in gens}
    if len(degrees) != 1:
        raise ValueError("generators act on different point sets")
    n = degrees.pop()
    els = {Perm.identity(n)}
    els.update(gens)
    boundary = sorted(els)
    while boundary:
        fresh = []
        for a in gens:
            for b in boundary:
                c = a * b
                if c not in els:
                    els.add(c)
                    fresh.append(c)
        boundary = fresh
    return FinGroup(els, generators=gens)


class FinGroup:
    """A finite permutation group given by its full (closed) element set."""

    def __init__(self, elements, generators=None):
        elements = sorted(set(elements))
        if not elements:
            raise ValueError("empty element set")
        n = elements[0].degree
        members = frozenset(elements)
        if any(g.degree != n for g in elements):
            raise ValueError("elements act on different point sets")
        if Perm.identity(n) not in members:
            raise ValueError("identity missing")
        for a in elements:
            if a.inverse() not in members:
                raise ValueError("not closed under inversion")
            for b in elements:
                if a * b not in members:
                    raise ValueError("not closed under composition")
        self.elements = tuple(elements)
        self._members = members
        self.degree = n
        self.generators = tuple(generators) if generators else self.elements
        self._subgroups: list | None = None

    @property
    def order(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, g):
        return g in self._members

    def __eq__(self, other):
        return isinstance(other, FinGroup) and self._members == other._members

    def __hash__(self):
        return hash(self._members)

    def __repr__(self):
        return f"<FinGroup of order {self.order} on {self.degree} points>"

    def identity(self) -> Perm:
        return Perm.identity(self.degree)

    def is_subgroup(self, other: "FinGroup") -> bool:
        return self._members <= other._members

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a * b == b * a for a in gens for b in gens)

    def element_orders(self) -> Counter:
        return Counter(g.order() for g in self.elements)

    def center(self) -> "FinGroup":
        central = [g for g in self.elements
                   if all(g * h == h * g for h in self.generators)]
        return FinGroup(central)

    def commutator_subgroup(self) -> "FinGroup":
        comms = {a * b * a.inverse() * b.inverse()
                 for a in self.elements for b in self.elements}
        return closure(comms)

    def is_normal_subgroup(self, H: "FinGroup") -> bool:
        if not H.is_subgroup(self):
            raise ValueError("not a subgroup")
        return all(g * h * g.inverse() in H
                   for g in self.generators for h in H.elements)

    def is_transitive(self) -> bool:
        orbit = {0}
        frontier = [0]
        while frontier:
            x = frontier.pop()
            for g in self.generators:
                y = g(x)
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
        return len(orbit) == self.degree

    def subgroups(self) -> list[tuple["FinGroup", bool]]:
        """All subgroups with normality flags, by breadth-first closure over
        extensions of known subgroups (seeded at the trivial subgroup)."""
        if self.order > 64:
            raise ValueError("subgroup enumeration supported up to order 64")
        if self._subgroups is not None:
            return self._subgroups
        trivial = FinGroup([self.identity()])
        found = {trivial._members: trivial}
        frontier = [trivial]
        while frontier:
            H = frontier.pop()
            if H.order == self.order:
                continue
            for g in self.elements:
                if g in H:
                    continue
                K = closure(set(H.elements) | {g})
                if K._members not in found:
                    found[K._members] = K
                    frontier.append(K)
        subs = sorted(found.values(), key=lambda H: (H.order, H.elements))
        self._subgroups = [(H, self.is_normal_subgroup(H)) for H in subs]
        return self._subgroups


# ---------------------------------------------------------------------------
# constructions


def from_multiplication(elements, mult) -> FinGroup:
    """The left-regular permutation representation of an abstract group
    given as a list of hashable elements with a multiplication function."""
    index = {e: i for i, e in enumerate(elements)}
    if len(index) != len(elements):
        raise ValueError("duplicate elements")
    perms = []
    for g in elements:
        images = [index[mult(g, h)] for h in elements]
        perms.append(Perm(images))
    return FinGroup(perms)


def regular_representation(G: FinGroup) -> FinGroup:
    """The same abstract group acting on itself by left multiplication."""
    return from_multiplication(list(G.elements), lambda a, b: a * b)


def cyclic(n: int) -> FinGroup:
    gen = Perm([(i + 1) % n for i in range(n)])
    return closure([gen])


def direct_product(G: FinGroup, H: FinGroup) -> FinGroup:
    """G x H acting on the disjoint union of the two point sets."""
    n, m = G.degree, H.degree
    els = []
    for g in G.elements:
        for h in H.elements:
            els.append(Perm(list(g.images) + [n + x for x in h.images]))
    gens = [Perm(list(g.images) + list(range(n, n + m))) for g in G.generators]
    gens += [Perm(list(range(n)) + [n + x for x in h.images]) for h in H.generators]
    return FinGroup(els, generators=gens)


def quotient_group(G: FinGroup, N: FinGroup) -> FinGroup:
    """G/N as a permutation group (regular action on cosets); N normal."""
    if not G.is_normal_subgroup(N):
        raise ValueError("subgroup is not normal")
    coset_of = {}
    cosets = []
    for g in G.elements:
        if g in coset_of:
            continue
        coset = frozenset(g * n for n in N.elements)
        for h in coset:
            coset_of[h] = coset
        cosets.append(coset)
    keys = [min(c).images for c in cosets]
    key_of = {c: min(c).images for c in cosets}

    def mult(k1, k2):
        g = Perm(k1) * Perm(k2)
        return key_of[coset_of[g]]

    return from_multiplication(sorted(keys), mult)


def relabel(G: FinGroup, pi: Perm) -> FinGroup:
    """Conjugate every element by a relabeling of the point set."""
    inv = pi.inverse()
    return FinGroup([pi * g * inv for g in G.elements],
                    generators=[pi * g * inv for g in G.generators])


def affine_group_mod8(pairs) -> FinGroup:
    """Permutations m -> s*m + t of Z/8 for the given (t, s) pairs."""
    gens = [Perm([(s * m + t) % 8 for m in range(8)]) for t, s in pairs]
    return closure(gens)


# ---------------------------------------------------------------------------
# Pauli matrices over the Gaussian integers


class GaussianMatrix:
    """A 2x2 matrix with exact Gaussian-integer entries (re, im) pairs."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        self.entries = tuple(tuple(e) for e in entries)
        if len(self.entries) != 4 or any(len(e) != 2 for e in self.entries):
            raise ValueError("need 4 Gaussian-integer entries (row major)")

    def __mul__(self, other: "GaussianMatrix") -> "GaussianMatrix":
        a, b, c, d = self.entries
        e, f, g, h = other.entries

        def gm(u, v):
            return (u[0] * v[0] - u[1] * v[1], u[0] * v[1] + u[1] * v[0])

        def ga(u, v):
            return (u[0] + v[0], u[1] + v[1])

        return GaussianMatrix([
            ga(gm(a, e), gm(b, g)), ga(gm(a, f), gm(b, h)),
            ga(gm(c, e), gm(d, g)), ga(gm(c, f), gm(d, h)),
        ])

    def __eq__(self, other):
        return isinstance(other, GaussianMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"GaussianMatrix{self.entries}"


PAULI_X = GaussianMatrix([(0, 0), (1, 0), (1, 0), (0, 0)])
PAULI_Y = GaussianMatrix([(0, 0), (0, -1), (0, 1), (0, 0)])
PAULI_Z = GaussianMatrix([(1, 0), (0, 0), (0, 0), (-1, 0)])


def _matrix_closure(gens):
    els = set(gens)
    boundary = list(els)
    while boundary:
        fresh = []
        for a in gens:
            for b in boundary:
                c = a * b
                if c not in els:
                    els.add(c)
                    fresh.append(c)
        boundary = fresh
    return els


@lru_cache(maxsize=None)
def pauli_matrix_group() -> FinGroup:
    """The 16-element matrix group <X, Y, Z> in its regular representation."""
    matrices = _matrix_closure([PAULI_X, PAULI_Y, PAULI_Z])
    if len(matrices) != 16:
        raise AssertionError(f"Pauli closure has {len(matrices)} elements")
    elements = sorted(matrices, key=lambda m: m.entries)
    return from_multiplication(elements, lambda a, b: a * b)


@lru_cache(maxsize=None)
def quaternion_group() -> FinGroup:
    """Q8 = <iX, iY> in its regular representation (8 points)."""
    i = GaussianMatrix([(0, 1), (0, 0), (0, 0), (0, 1)])
    matrices = _matrix_closure([i * PAULI_X, i * PAULI_Y])
    if len(matrices) != 8:
        raise AssertionError("quaternion closure is wrong")
    elements = sorted(matrices, key=lambda m: m.entries)
    return from_multiplication(elements, lambda a, b: a * b)


@lru_cache(maxsize=None)
def hol_c8_model() -> FinGroup:
    """Hol(C8): all affine maps m -> s*m + t on Z/8, order 32, on 8 points."""
    G = affine_group_mod8([(t, s) for t in range(8) for s in (1, 3, 5, 7)])
    if G.order != 32:
        raise AssertionError("Hol(C8) model has wrong order")
    return G


@lru_cache(maxsize=None)
def pauli_affine_model() -> FinGroup:
    """The full subgroup {(t, s): s = 2t+1 mod 4} of Hol(C8), on 8 points."""
    pairs = [(t, s) for t in range(8) for s in (1, 3, 5, 7)
             if (s - 2 * t - 1) % 4 == 0]
    return affine_group_mod8(pairs)


# ---------------------------------------------------------------------------
# abelian invariants and naming


def _exact_log(n: int, p: int) -> int:
    e = 0
    while n > 1:
        if n % p:
            raise ArithmeticError(f"{n} is not a power of {p}")
        n //= p
        e += 1
    return e


def abelian_invariants(G: FinGroup) -> tuple[int, ...]:
    """Primary decomposition of an abelian group: prime powers, descending."""
    if not G.is_abelian():
        raise ValueError("group is not abelian")
    orders = [g.order() for g in G.elements]
    powers = []
    for p, mult in _int_factor_pairs(G.order):
        part = p ** mult
        # #{g : g^(p^j) = 1} = p^(sum_i min(j, e_i)) determines the e_i
        logs = [0]
        j = 1
        while p ** logs[-1] < part:
            pj = p ** j
            logs.append(_exact_log(sum(1 for o in orders if pj % o == 0), p))
            j += 1
        at_least = [logs[i] - logs[i - 1] for i in range(1, len(logs))]
        for i, cnt in enumerate(at_least):
            nxt = at_least[i + 1] if i + 1 < len(at_least) else 0
            powers.extend([p ** (i + 1)] * (cnt - nxt))
    return tuple(sorted(powers, reverse=True))


def _int_factor_pairs(n: int):
    pairs = []
    d = 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        if e:
            pairs.append((d, e))
        d += 1
    if n > 1:
        pairs.append((n, 1))
    return pairs


def abelian_name(invariants: tuple[int, ...]) -> str:
    if not invariants:
        return "C1"
    if len(invariants) >= 2 and all(q == 2 for q in invariants):
        return {2: "V4", 3: "E8", 4: "E16", 5: "E32"}[len(invariants)]
    return "x".join(f"C{q}" for q in invariants)


# ---------------------------------------------------------------------------
# fingerprint and identification


@dataclass(frozen=True)
class Fingerprint:
    """Isomorphism-invariant profile; separates all 14 groups of order 16."""

    order: int
    element_orders: tuple[tuple[int, int], ...]
    center_type: str
    abelianization: str
    subgroup_profile: tuple[tuple[tuple[int, bool], int], ...]
    has_q8_subgroup: bool
    has_order8_element: bool


def _looks_like_q8(H: FinGroup) -> bool:
    # Q8 is the unique order-8 group with a single involution
    return H.order == 8 and H.element_orders() == Counter({1: 1, 2: 1, 4: 6})


@lru_cache(maxsize=None)
def fingerprint(G: FinGroup) -> Fingerprint:
    if G.order > 32:
        raise ValueError("fingerprint supported up to order 32")
    orders = G.element_orders()
    subs = G.subgroups()
    profile = Counter((H.order, normal) for H, normal in subs)
    center = G.center()
    ab = quotient_group(G, G.commutator_subgroup())
    return Fingerprint(
        order=G.order,
        element_orders=tuple(sorted(orders.items())),
        center_type=abelian_name(abelian_invariants(center)),
        abelianization=abelian_name(abelian_invariants(ab)),
        subgroup_profile=tuple(sorted(profile.items())),
        has_q8_subgroup=any(_looks_like_q8(H) for H, _ in subs),
        has_order8_element=orders.get(8, 0) > 0,
    )


def pauli_criteria(G: FinGroup) -> tuple[bool, bool, bool]:
    """(no element of order 8, has non-normal subgroups, has a Q8 subgroup):
    an order-16 group is the Pauli group iff all three hold."""
    subs = G.subgroups()
    return (
        G.element_orders().get(8, 0) == 0,
        any(not normal for _, normal in subs),
        any(_looks_like_q8(H) for H, _ in subs),
    )


def _q16_model() -> FinGroup:
    els = [(i, j) for i in range(8) for j in range(2)]

    def mult(a, b):
        (i1, j1), (i2, j2) = a, b
        if j1 == 0:
            return ((i1 + i2) % 8, j2)
        return ((i1 - i2 + 4 * j2) % 8, (j1 + j2) % 2)

    return from_multiplication(els, mult)


def _c4_semi_c4_model() -> FinGroup:
    els = [(i, j) for i in range(4) for j in range(4)]

    def mult(a, b):
        (i1, j1), (i2, j2) = a, b
        sign = -1 if j1 % 2 else 1
        return ((i1 + sign * i2) % 4, (j1 + j2) % 4)

    return from_multiplication(els, mult)


def _v4_semi_c4_model() -> FinGroup:
    els = [(x, y, j) for x in range(2) for y in range(2) for j in range(4)]

    def mult(a, b):
        (x1, y1, j1), (x2, y2, j2) = a, b
        if j1 % 2:
            x2, y2 = y2, x2
        return ((x1 + x2) % 2, (y1 + y2) % 2, (j1 + j2) % 4)

    return from_multiplication(els, mult)


def _dihedral8() -> FinGroup:
    return closure([Perm([1, 2, 3, 0]), Perm([0, 3, 2, 1])])


@lru_cache(maxsize=None)
def order16_stock_models() -> dict[str, FinGroup]:
    """Faithful permutation models of all fourteen groups of order 16."""
    c2, c4, c8 = cyclic(2), cyclic(4), cyclic(8)
    return {
        "C16": cyclic(16),
        "C8xC2": direct_product(c8, c2),
        "C4xC4": direct_product(c4, c4),
        "C4xC2xC2": direct_product(direct_product(c4, c2), c2),
        "E16": direct_product(direct_product(direct_product(c2, c2), c2), c2),
        "D16": affine_group_mod8([(t, s) for t in range(8) for s in (1, 7)]),
        "QD16": affine_group_mod8([(t, s) for t in range(8) for s in (1, 3)]),
        "M4(2)": affine_group_mod8([(t, s) for t in range(8) for s in (1, 5)]),
        "Q16": _q16_model(),
        "D8xC2": direct_product(_dihedral8(), c2),
        "Q8xC2": direct_product(quaternion_group(), c2),
        "Pauli": pauli_matrix_group(),
        "C4:C4": _c4_semi_c4_model(),
        "C2^2:C4": _v4_semi_c4_model(),
    }


@lru_cache(maxsize=None)
def _nonabelian_registry() -> dict[tuple[int, Fingerprint], str]:
    registry = {}
    for name, model in [("D8", _dihedral8()), ("Q8", quaternion_group())]:
        registry[(8, fingerprint(model))] = name
    for name, model in order16_stock_models().items():
        if not model.is_abelian():
            registry[(16, fingerprint(model))] = name
    registry[(32, fingerprint(hol_c8_model()))] = "B32"
    return registry


def identify(G: FinGroup) -> str:
    """Canonical name of a group of order <= 32.

    Abelian groups are named from their invariants; for order 16 the Pauli
    verdict comes from the three structural criteria, everything else from
    the fingerprint registry of stock models.
    """
    if G.order > 32:
        raise ValueError("identification supported up to order 32")
    if G.is_abelian():
        return abelian_name(abelian_invariants(G))
    if G.order == 16 and all(pauli_criteria(G)):
        return "Pauli"
    name = _nonabelian_registry().get((G.order, fingerprint(G)))
    if name is None:
        raise LookupError(f"unrecognized group of order {G.order}")
    return name


def quotient_type(G: FinGroup, N: FinGroup) -> str:
    """Isomorphism type of G/N (N must be normal in G)."""
    return identify(quotient_group(G, N))


def subgroup_count_conventions(G: FinGroup) -> dict[str, int]:
    """Subgroup tallies under both readings of 'proper subgroups'."""
    subs = G.subgroups()
    total = len(subs)
    return {
        "total": total,
        "proper": total - 1,
        "proper_nontrivial": total - 2,
        "normal_total": sum(1 for _, nrm in subs if nrm),
        "normal_proper_nontrivial": sum(
            1 for H, nrm in subs if nrm and 1 < H.order < G.order),
    }
