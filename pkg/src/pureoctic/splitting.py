"""Exact arithmetic in the degree-16 splitting field E = Q(w, a) of
X^8 + k^2, where a is a root and w is a primitive 8th root of unity.

Elements are 16-vectors of rationals over the basis a^j * w^e (j = 0..7,
e = 0..1), with the reduction rules a^8 = -k^2 and w^2 = a^4 / k.  The
16 automorphisms a -> a*w^t, w -> w^s (s = 2t+1 mod 4) are realized as
exact 16x16 matrices; fixed fields of subgroups come out of nullspace
computations, and the full subgroup <-> subfield correspondence is
assembled into a lattice report.

The module also certifies the quadratic-form change-of-basis matrix T over
Q(sqrt(-2)) (det 1, transforms diag(2, k, 1/2k) to the identity) and the
factorization rho * beta = (a - abar)^2 * (w * (1 + sqrt(2k)))^2 that
exhibits E as a square-root extension of its triquadratic subfield.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import binomial, groups, linalg
from .arith import Rational, squarefree_part
from .groups import FinGroup, Perm


@dataclass(frozen=True)
class AffineAut:
    """The automorphism a -> a*w^t, w -> w^s; on root indices m -> s*m + t.

    The compatibility of a^2 = w * v^2 with sigma(v^2) = +-v^2 forces
    s = 2t+1 (mod 4); the 16 admissible pairs form the Galois group.
    """

    t: int
    s: int

    def __post_init__(self):
        if not (0 <= self.t < 8 and 0 <= self.s < 8):
            raise ValueError("t, s must be residues mod 8")
        if self.s % 2 == 0:
            raise ValueError("s must be odd")
        if (self.s - 2 * self.t - 1) % 4 != 0:
            raise ValueError(f"(t={self.t}, s={self.s}) violates s = 2t+1 mod 4")

    def compose(self, other: "AffineAut") -> "AffineAut":
        # self after other
        return AffineAut((self.s * other.t + self.t) % 8,
                         (self.s * other.s) % 8)

    def inverse(self) -> "AffineAut":
        s_inv = pow(self.s, -1, 8)
        return AffineAut((-s_inv * self.t) % 8, s_inv)

    def is_identity(self) -> bool:
        return self.t == 0 and self.s == 1

    def root_permutation(self) -> Perm:
        return Perm([(self.s * m + self.t) % 8 for m in range(8)])

    def __str__(self):
        return f"({self.t},{self.s})"


IDENTITY_AUT = AffineAut(0, 1)


class FieldElt:
    """An element of E as 16 rational coordinates over the a^j*w^e basis."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: "SplittingField", coeffs):
        self.field = field
        self.coeffs = tuple(Fraction(c) for c in coeffs)
        if len(self.coeffs) != 16:
            raise ValueError("need 16 coordinates")

    def _check(self, other):
        if self.field.k != other.field.k:
            raise ValueError("elements live in different splitting fields")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.rational(other)
        self._check(other)
        return FieldElt(self.field, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElt(self.field, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.rational(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return FieldElt(self.field, tuple(Fraction(other) * x for x in self.coeffs))
        self._check(other)
        out = [Fraction(0)] * 16
        table = self.field._mul_table
        for i, ci in enumerate(self.coeffs):
            if ci == 0:
                continue
            row = table[i]
            for j, cj in enumerate(other.coeffs):
                if cj == 0:
                    continue
                idx, scale = row[j]
                out[idx] += ci * cj * scale
        return FieldElt(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return self * other.inverse()

    def inverse(self) -> "FieldElt":
        """Multiplicative inverse, by solving (mult-by-self) x = 1."""
        if self.is_zero():
            raise ZeroDivisionError("inversion of 0 in the splitting field")
        cols = [(self * self.field.basis_element(j)).coeffs for j in range(16)]
        matrix = [[cols[j][i] for j in range(16)] for i in range(16)]
        rhs = [Fraction(0)] * 16
        rhs[0] = Fraction(1)
        x = linalg.solve(matrix, rhs)
        if x is None:
            raise ArithmeticError("multiplication matrix is singular")
        return FieldElt(self.field, x)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is irrational")
        return self.coeffs[0]

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.rational(other)
        if not isinstance(other, FieldElt):
            return NotImplemented
        return self.field.k == other.field.k and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        terms = []
        for idx, c in enumerate(self.coeffs):
            if c == 0:
                continue
            j, e = divmod(idx, 2)
            name = ""
            if j == 1:
                name = "a"
            elif j > 1:
                name = f"a^{j}"
            if e:
                name = f"{name}*w" if name else "w"
            if not name:
                terms.append(str(c))
            elif c == 1:
                terms.append(name)
            elif c == -1:
                terms.append(f"-{name}")
            else:
                terms.append(f"{c}*{name}")
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out

    def __repr__(self):
        return f"<{self} in Q(w, a), a^8 = {-self.field.k ** 2}>"


class SplittingField:
    """Multiplication-ready context for E = Q(w, a) with a^8 = -k^2."""

    def __init__(self, k: Rational):
        k = Fraction(k)
        if k <= 0:
            raise ValueError(f"k = {k} rejected: k must be positive")
        violation = binomial.pauli_condition_violation(k)
        if violation is not None:
            raise ValueError(f"k = {k} rejected: {violation}")
        self.k = k
        self._mul_table = self._build_mul_table(k)
        self._aut_matrices: dict[AffineAut, tuple] = {}
        self._w_pow = self._build_w_powers()
        self._galois = tuple(
            AffineAut(t, s) for t in range(8) for s in (1, 3, 5, 7)
            if (s - 2 * t - 1) % 4 == 0)
        self._verify_construction()

    @staticmethod
    def _build_mul_table(k):
        # product of basis monomials is a single monomial times a scalar
        table = []
        for i1 in range(16):
            j1, e1 = divmod(i1, 2)
            row = []
            for i2 in range(16):
                j2, e2 = divmod(i2, 2)
                j, e = j1 + j2, e1 + e2
                scale = Fraction(1)
                if e == 2:
                    j += 4
                    e = 0
                    scale /= k       # w^2 = a^4 / k
                while j >= 8:
                    j -= 8
                    scale *= -k * k  # a^8 = -k^2
                row.append((2 * j + e, scale))
            table.append(tuple(row))
        return tuple(table)

    def _build_w_powers(self):
        powers = [self.one()]
        for _ in range(7):
            powers.append(powers[-1] * self.w)
        return tuple(powers)

    # --- element constructors -------------------------------------------

    def element(self, coeffs) -> FieldElt:
        return FieldElt(self, coeffs)

    def zero(self) -> FieldElt:
        return FieldElt(self, [0] * 16)

    def one(self) -> FieldElt:
        return self.rational(1)

    def rational(self, q) -> FieldElt:
        coeffs = [Fraction(0)] * 16
        coeffs[0] = Fraction(q)
        return FieldElt(self, coeffs)

    def basis_element(self, idx: int) -> FieldElt:
        coeffs = [Fraction(0)] * 16
        coeffs[idx] = Fraction(1)
        return FieldElt(self, coeffs)

    def monomial(self, j: int, e: int, coeff=1) -> FieldElt:
        coeffs = [Fraction(0)] * 16
        coeffs[2 * j + e] = Fraction(coeff)
        return FieldElt(self, coeffs)

    @property
    def a(self) -> FieldElt:
        return self.monomial(1, 0)

    @property
    def w(self) -> FieldElt:
        return self.monomial(0, 1)

    @property
    def i(self) -> FieldElt:
        """sqrt(-1) = a^4 / k."""
        return self.monomial(4, 0, Fraction(1, 1) / self.k)

    @property
    def r(self) -> FieldElt:
        """sqrt(2) = w + conj(w) = w * (1 - a^4/k)."""
        return self.monomial(0, 1) - self.monomial(4, 1, Fraction(1) / self.k)

    @property
    def v2(self) -> FieldElt:
        """sqrt(k) = -i * a^2 * w = -a^6 * w / k."""
        return self.monomial(6, 1, -Fraction(1) / self.k)

    @property
    def a_bar(self) -> FieldElt:
        """Complex conjugate of a: a * w^7 = -a^5 * w / k."""
        return self.monomial(5, 1, -Fraction(1) / self.k)

    def sqrt_of(self, d) -> FieldElt:
        """An exact square root of d, for d in the seven square classes
        {-1, 2, -2, k, -k, 2k, -2k} attached to the field."""
        d = Fraction(d)
        k = self.k
        roots = {
            Fraction(-1): self.i,
            Fraction(2): self.r,
            Fraction(-2): self.i * self.r,
            k: self.v2,
            -k: self.monomial(2, 1),
            2 * k: self.r * self.v2,
            -2 * k: self.i * self.r * self.v2,
        }
        if d not in roots:
            raise KeyError(f"no stored square root of {d}")
        return roots[d]

    def roots(self) -> list[FieldElt]:
        """The eight roots a * w^m of X^8 + k^2."""
        return [self.a * self._w_pow[m] for m in range(8)]

    def defining_polynomial_check(self) -> bool:
        """Expand prod(X - a*w^m) in exact field arithmetic and compare
        against X^8 + k^2 coefficient-wise."""
        poly = [self.one()]
        for root in self.roots():
            new = [self.zero()] * (len(poly) + 1)
            for i, coeff in enumerate(poly):
                new[i + 1] = new[i + 1] + coeff
                new[i] = new[i] - root * coeff
            poly = new
        want = [self.rational(self.k ** 2)] + [self.zero()] * 7 + [self.one()]
        return poly == want

    # --- Galois action ---------------------------------------------------

    def galois_group(self) -> tuple[AffineAut, ...]:
        return self._galois

    def _matrix_for(self, aut: AffineAut) -> tuple:
        cols = self._aut_matrices.get(aut)
        if cols is not None:
            return cols
        a_img = self.a * self._w_pow[aut.t]
        w_img = self._w_pow[aut.s]
        a_powers = [self.one()]
        for _ in range(7):
            a_powers.append(a_powers[-1] * a_img)
        cols = []
        for idx in range(16):
            j, e = divmod(idx, 2)
            img = a_powers[j] * w_img if e else a_powers[j]
            cols.append(img.coeffs)
        cols = tuple(cols)
        self._aut_matrices[aut] = cols
        return cols

    def apply(self, aut: AffineAut, u: FieldElt) -> FieldElt:
        """Image of u under a -> a*w^t, w -> w^s (an exact ring map)."""
        cols = self._matrix_for(aut)
        out = [Fraction(0)] * 16
        for idx, c in enumerate(u.coeffs):
            if c == 0:
                continue
            col = cols[idx]
            for i in range(16):
                if col[i]:
                    out[i] += c * col[i]
        return FieldElt(self, out)

    def orbit(self, u: FieldElt) -> set:
        return {self.apply(s, u).coeffs for s in self._galois}

    def _verify_construction(self):
        # generator relations imply each matrix is a ring homomorphism
        minus_k2 = self.rational(-self.k ** 2)
        for aut in self._galois:
            a_img = self.a * self._w_pow[aut.t]
            w_img = self._w_pow[aut.s]
            if a_img ** 8 != minus_k2:
                raise AssertionError(f"{aut}: image of a is not a root")
            if w_img * w_img != (a_img ** 4) / self.k:
                raise AssertionError(f"{aut}: images break w^2 = a^4/k")
        perm_group = groups.closure([aut.root_permutation() for aut in self._galois])
        if perm_group.order != 16:
            raise AssertionError("affine maps do not close to order 16")
        if groups.identify(perm_group) != "Pauli":
            raise AssertionError("root action lacks the Pauli fingerprint")

    def galois_permutation_group(self) -> FinGroup:
        return groups.closure([aut.root_permutation() for aut in self._galois])

    def aut_from_permutation(self, p: Perm) -> AffineAut:
        # m -> s*m + t reads off t = p(0), s = p(1) - p(0)
        aut = AffineAut(p(0) % 8, (p(1) - p(0)) % 8)
        if aut.root_permutation() != p:
            raise ValueError(f"{p} is not an affine map of Z/8")
        return aut

    # --- fixed fields -----------------------------------------------------

    def fixed_field(self, subgroup) -> "FixedField":
        """Basis, degree and a certified primitive element of the subfield
        fixed by the given set of automorphisms."""
        auts = sorted(set(subgroup), key=lambda s: (s.t, s.s))
        if IDENTITY_AUT not in auts:
            raise ValueError("subgroup must contain the identity")
        members = set(auts)
        for s1 in auts:
            for s2 in auts:
                if s1.compose(s2) not in members:
                    raise ValueError("set of automorphisms is not closed")
        rows = []
        for aut in auts:
            if aut.is_identity():
                continue
            cols = self._matrix_for(aut)
            for i in range(16):
                row = [cols[j][i] - (1 if i == j else 0) for j in range(16)]
                rows.append(row)
        if rows:
            basis_vecs = linalg.nullspace(rows, 16)
        else:
            basis_vecs = [tuple(Fraction(1) if i == j else Fraction(0) for i in range(16))
                          for j in range(16)]
        degree = 16 // len(auts)
        if len(basis_vecs) != degree:
            raise AssertionError(
                f"fixed space has dimension {len(basis_vecs)}, expected {degree}")
        basis = [FieldElt(self, v) for v in basis_vecs]
        primitive = self._primitive_element(basis, degree)
        return FixedField(tuple(auts), degree, basis, primitive,
                          self._match_label(basis_vecs, degree))

    def _primitive_element(self, basis, degree) -> FieldElt:
        if degree == 1:
            return self.one()
        for idxs, coeffs in _combination_stream(len(basis)):
            u = self.zero()
            for i, c in zip(idxs, coeffs):
                u = u + c * basis[i]
            if u.is_rational():
                continue
            if len(self.orbit(u)) == degree:
                return u
        raise RuntimeError("primitive element search exhausted")

    def _label_table(self):
        k = self.k
        quad_classes = [Fraction(-1), Fraction(2), Fraction(-2), k, -k, 2 * k, -2 * k]
        table = []
        for d in quad_classes:
            table.append((_field_name([d]), [self.sqrt_of(d)], 2))
        for d1, d2 in itertools.combinations(quad_classes, 2):
            plane = sorted({squarefree_part(d).representative for d in (d1, d2, d1 * d2)},
                           key=lambda x: (abs(x), x < 0))
            label = _field_name(plane[:2])
            if any(lbl == label for lbl, _, _ in table):
                continue
            table.append((label, [self.sqrt_of(d1), self.sqrt_of(d2)], 4))
        table.append(("Q(i, sqrt(2), sqrt(%s))" % _display_class(k),
                      [self.i, self.r, self.v2], 8))
        table.append(("Q(a)", [self.a], 8))
        table.append(("Q(w*a)", [self.a * self.w], 8))
        table.append(("Q(a+abar)", [self.a + self.a_bar], 8))
        table.append(("Q(a-abar)", [self.a - self.a_bar], 8))
        return table

    def _match_label(self, basis_vecs, degree):
        for label, gens, label_degree in self._label_table():
            if label_degree != degree:
                continue
            if all(linalg.in_span(list(basis_vecs), g.coeffs) for g in gens):
                return label
        return None

    # --- lattice ----------------------------------------------------------

    def lattice_report(self) -> "LatticeReport":
        """The full subgroup <-> fixed-field correspondence."""
        G = self.galois_permutation_group()
        rows = []
        for H, normal in G.subgroups():
            auts = tuple(sorted((self.aut_from_permutation(p) for p in H),
                                key=lambda s: (s.t, s.s)))
            fixed = self.fixed_field(auts)
            rows.append(LatticeRow(
                subgroup=auts,
                order=len(auts),
                normal=normal,
                degree=fixed.degree,
                primitive=fixed.primitive,
                label=fixed.label,
                generators=_generating_pairs(auts),
            ))
        rows.sort(key=lambda row: (row.order, [(s.t, s.s) for s in row.subgroup]))
        return LatticeReport(self.k, tuple(rows))


def _display_class(q: Fraction) -> str:
    return str(squarefree_part(q).representative)


def _field_name(classes) -> str:
    parts = []
    for d in sorted((squarefree_part(Fraction(d)).representative for d in classes),
                    key=lambda x: (abs(x), x < 0)):
        parts.append("i" if d == -1 else f"sqrt({d})")
    return "Q(" + ", ".join(parts) + ")"


def _combination_stream(nbasis: int):
    """Deterministic candidates for the primitive-element search: small
    supports first, integer coefficients with expanding bound."""
    for bound in (1, 2, 4, 8):
        values = [v for r in range(1, bound + 1) for v in (r, -r)]
        for support in range(1, min(nbasis, 4) + 1):
            for idxs in itertools.combinations(range(nbasis), support):
                for coeffs in itertools.product(values, repeat=support):
                    if coeffs[0] < 0:
                        continue
                    if bound > 1 and all(abs(c) < bound for c in coeffs):
                        continue  # already tried at a smaller bound
                    yield idxs, coeffs


def _generating_pairs(auts) -> tuple[AffineAut, ...]:
    """A small generating set of a subgroup given as a closed tuple."""
    members = set(auts)
    chosen = []
    generated = {IDENTITY_AUT}
    for aut in auts:
        if aut in generated:
            continue
        chosen.append(aut)
        frontier = [aut]
        generated.add(aut)
        while frontier:
            x = frontier.pop()
            for g in list(generated):
                for y in (x.compose(g), g.compose(x)):
                    if y not in generated:
                        generated.add(y)
                        frontier.append(y)
        if generated == members:
            break
    return tuple(chosen) if chosen else (IDENTITY_AUT,)


@dataclass
class FixedField:
    """The subfield of E fixed pointwise by a subgroup of automorphisms."""

    subgroup: tuple[AffineAut, ...]
    degree: int
    basis: list
    primitive: FieldElt
    label: str | None


@dataclass(frozen=True)
class LatticeRow:
    subgroup: tuple[AffineAut, ...]
    order: int
    normal: bool
    degree: int
    primitive: FieldElt
    label: str | None
    generators: tuple[AffineAut, ...]

    def field_display(self) -> str:
        if self.label:
            return self.label
        if self.degree == 1:
            return "Q"
        if self.degree == 16:
            return "E = Q(w, a)"
        return f"Q({self.primitive})"


@dataclass(frozen=True)
class LatticeReport:
    k: Fraction
    rows: tuple[LatticeRow, ...]

    def degree_counts(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for row in self.rows:
            if 1 < row.degree < 16:
                counts[row.degree] = counts.get(row.degree, 0) + 1
        return counts

    def as_text(self) -> str:
        lines = [
            f"splitting field of X^8 + {self.k ** 2} = Q(w, a), degree 16 over Q",
            "Galois group: 16 affine maps (t,s): a -> a*w^t, w -> w^s"
            " (Pauli fingerprint)",
            f"subgroups: {len(self.rows)} total,"
            f" {len(self.rows) - 2} proper nontrivial,"
            f" {sum(1 for r in self.rows if r.normal and 1 < r.order < 16)}"
            " of those normal",
        ]
        for row in self.rows:
            gens = ",".join(str(s) for s in row.generators)
            nflag = "normal    " if row.normal else "non-normal"
            lines.append(
                f"  [order {row.order:2d}] <{gens}> {nflag}"
                f" fixes degree-{row.degree} field {row.field_display()}")
        return "\n".join(lines)

    def as_dict(self) -> dict:
        return {
            "k": str(self.k),
            "polynomial": f"X^8 + {self.k ** 2}",
            "subgroup_count": len(self.rows),
            "rows": [
                {
                    "order": row.order,
                    "normal": row.normal,
                    "generators": [str(s) for s in row.generators],
                    "elements": [str(s) for s in row.subgroup],
                    "fixed_field_degree": row.degree,
                    "fixed_field": row.field_display(),
                    "primitive_element": str(row.primitive),
                }
                for row in self.rows
            ],
        }

    def as_dot(self) -> str:
        """The subgroup lattice as a DOT digraph, edges = covering relations."""
        ids = {row.subgroup: f"H{i}" for i, row in enumerate(self.rows)}
        lines = [
            "digraph subgroup_lattice {",
            "  rankdir=BT;",
            "  node [shape=box, fontname=monospace];",
        ]
        for row in self.rows:
            gens = ",".join(str(s) for s in row.generators)
            shape = ", peripheries=2" if row.normal else ""
            lines.append(
                f'  {ids[row.subgroup]} [label="order {row.order}\\n<{gens}>\\n'
                f'{row.field_display()}"{shape}];')
        for lo in self.rows:
            for hi in self.rows:
                if lo.order >= hi.order:
                    continue
                if not set(lo.subgroup) <= set(hi.subgroup):
                    continue
                covered = any(
                    set(lo.subgroup) < set(mid.subgroup) < set(hi.subgroup)
                    for mid in self.rows
                    if lo.order < mid.order < hi.order)
                if not covered:
                    lines.append(f"  {ids[lo.subgroup]} -> {ids[hi.subgroup]};")
        lines.append("}")
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# the change-of-basis matrix over Q(sqrt(-2)) and the square-root generator


@dataclass(frozen=True)
class QuadExtElt:
    """x + y*sqrt(-2) with rational x, y: the ground field Q(sqrt(-2))."""

    x: Fraction
    y: Fraction

    @classmethod
    def of(cls, x, y=0) -> "QuadExtElt":
        return cls(Fraction(x), Fraction(y))

    def __add__(self, other):
        return QuadExtElt(self.x + other.x, self.y + other.y)

    def __sub__(self, other):
        return QuadExtElt(self.x - other.x, self.y - other.y)

    def __neg__(self):
        return QuadExtElt(-self.x, -self.y)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QuadExtElt.of(other)
        return QuadExtElt(self.x * other.x - 2 * self.y * other.y,
                          self.x * other.y + self.y * other.x)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadExtElt":
        return QuadExtElt(self.x, -self.y)

    def is_rational(self) -> bool:
        return self.y == 0

    def __str__(self):
        if self.y == 0:
            return str(self.x)
        if self.x == 0:
            return f"{self.y}*sqrt(-2)"
        sign = "+" if self.y > 0 else "-"
        return f"{self.x} {sign} {abs(self.y)}*sqrt(-2)"


def witt_T(k: Rational):
    """The determinant-1 matrix over Q(sqrt(-2)) carrying the diagonal form
    <2, k, 1/2k> to <1, 1, 1>; K = k + 1/2, kappa = k - 1/2."""
    k = Fraction(k)
    if not binomial.pauli_condition(k):
        raise ValueError(binomial.pauli_condition_violation(k))
    K = k + Fraction(1, 2)
    kap = k - Fraction(1, 2)
    half = Fraction(-1, 2)
    rows = [
        [QuadExtElt.of(1), QuadExtElt.of(1), QuadExtElt.of(0)],
        [QuadExtElt.of(-K / k), QuadExtElt.of(K / k), QuadExtElt.of(0, -kap / k)],
        [QuadExtElt.of(0, kap), QuadExtElt.of(0, -kap), QuadExtElt.of(-2 * K)],
    ]
    return [[half * entry for entry in row] for row in rows]


def _det3(m):
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def witt_matrix_identities(k: Rational) -> dict[str, bool]:
    """Exact checks: det(T) = 1 and T^t diag(2, k, 1/2k) T = identity."""
    k = Fraction(k)
    T = witt_T(k)
    diag = [Fraction(2), k, Fraction(1) / (2 * k)]
    product = [[QuadExtElt.of(0)] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            acc = QuadExtElt.of(0)
            for l in range(3):
                acc = acc + diag[l] * T[l][i] * T[l][j]
            product[i][j] = acc
    identity = all(
        product[i][j] == QuadExtElt.of(1 if i == j else 0)
        for i in range(3) for j in range(3))
    return {
        "det_is_one": _det3(T) == QuadExtElt.of(1),
        "congruence_is_identity": identity,
    }


@dataclass(frozen=True)
class WittCertificate:
    beta: FieldElt
    rho: QuadExtElt
    sqrt_rho_beta: FieldElt
    factorization_holds: bool
    beta_matches_matrix_diagonal: bool
    a_minus_abar_nonzero: bool
    generates_E_over_L: bool

    def all_hold(self) -> bool:
        return (self.factorization_holds and self.beta_matches_matrix_diagonal
                and self.a_minus_abar_nonzero and self.generates_E_over_L)


def witt_beta_rho(field: SplittingField) -> WittCertificate:
    """Certify rho * beta = (a - abar)^2 * (w(1 + sqrt(2k)))^2 exactly and
    that its square root generates E over the triquadratic subfield."""
    k = field.k
    K = k + Fraction(1, 2)
    r, v2, w = field.r, field.v2, field.w
    beta = (field.one() - Fraction(1, 2) * r
            - (K / (2 * k)) * v2 + (K / (2 * k)) * (r * v2))
    T = witt_T(k)
    sqrt_a3 = (r * v2) / (2 * k)  # sqrt(1/2k) = sqrt(2k)/(2k)
    beta_from_T = (field.one() + T[0][0].x * r + T[1][1].x * v2
                   + T[2][2].x * sqrt_a3)
    rho = QuadExtElt.of(0, -4 * k)           # -4k * sqrt(-2)
    rho_elt = (-4 * k) * (field.i * field.r)  # the same element inside E
    sqrt_rho_beta = (field.a - field.a_bar) * w * (field.one() + r * v2)
    factorization = rho_elt * beta == sqrt_rho_beta * sqrt_rho_beta
    # Gal(E/L) is generated by a -> -a, w -> w; the generator must flip the root
    flip = field.apply(AffineAut(4, 1), sqrt_rho_beta)
    return WittCertificate(
        beta=beta,
        rho=rho,
        sqrt_rho_beta=sqrt_rho_beta,
        factorization_holds=factorization,
        beta_matches_matrix_diagonal=beta == beta_from_T,
        a_minus_abar_nonzero=not (field.a - field.a_bar).is_zero(),
        generates_E_over_L=(flip == -sqrt_rho_beta
                            and not sqrt_rho_beta.is_zero()),
    )
