"""The deformed cycle algebra and its 4m-element monomial basis.

The quiver is a cycle on m vertices with a forward arrow a_i (i -> i+1)
and a backward arrow abar_i (i+1 -> i) for each i.  The algebra is the
path algebra modulo the ideal generated by

    a_i a_{i+1},    abar_{i-1} abar_{i-2},    q_i a_i abar_i - abar_{i-1} a_{i-1}

for a tuple q of m nonzero rationals.  A monomial basis is given by the
vertices e_i, the arrows a_i and abar_i, and the loops z_i = a_i abar_i;
the third relation rewrites abar_{i-1} a_{i-1} as q_i z_i.

The product of the deformation parameters, zeta, governs everything: the
finiteness theorems hold exactly when zeta is not a root of unity, which
over the rationals means zeta not in {1, -1}.
"""

from dataclasses import dataclass, field
from fractions import Fraction

VERTEX = "e"
ARROW = "a"
BAR = "abar"
LOOP = "z"

_KIND_ORDER = {VERTEX: 0, ARROW: 1, BAR: 2, LOOP: 3}


class NonGenericParameters(Exception):
    """Raised when a theorem-level operation is asked to run with zeta a
    root of unity and no explicit override."""


@dataclass(frozen=True)
class BasisMonomial:
    """One of e_i, a_i, abar_i, z_i.  Vertex indices live in 0..m-1."""

    kind: str
    index: int

    def origin(self, m):
        if self.kind == BAR:
            return (self.index + 1) % m
        return self.index

    def terminus(self, m):
        if self.kind == ARROW:
            return (self.index + 1) % m
        if self.kind == BAR:
            return self.index
        return self.index

    def sort_key(self):
        return (_KIND_ORDER[self.kind], self.index)

    def __repr__(self):
        return f"{self.kind}{self.index}"


def e(i):
    return BasisMonomial(VERTEX, i)


def a(i):
    return BasisMonomial(ARROW, i)


def abar(i):
    return BasisMonomial(BAR, i)


def z(i):
    return BasisMonomial(LOOP, i)


class AlgebraElement:
    """A finitely supported rational combination of basis monomials."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {}
        if coeffs:
            for mono, c in coeffs.items():
                c = Fraction(c)
                if c:
                    self.coeffs[mono] = c

    @classmethod
    def of(cls, mono, coeff=1):
        return cls({mono: Fraction(coeff)})

    def coefficient(self, mono):
        return self.coeffs.get(mono, Fraction(0))

    def is_zero(self):
        return not self.coeffs

    def __add__(self, other):
        out = dict(self.coeffs)
        for mono, c in other.coeffs.items():
            s = out.get(mono, Fraction(0)) + c
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        res = AlgebraElement()
        res.coeffs = out
        return res

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        res = AlgebraElement()
        res.coeffs = {mono: -c for mono, c in self.coeffs.items()}
        return res

    def scale(self, s):
        s = Fraction(s)
        res = AlgebraElement()
        if s:
            res.coeffs = {mono: c * s for mono, c in self.coeffs.items()}
        return res

    def __eq__(self, other):
        return isinstance(other, AlgebraElement) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = [f"{c}*{mono}" for mono, c in sorted(self.coeffs.items(), key=lambda kv: kv[0].sort_key())]
        return " + ".join(parts)


@dataclass(frozen=True)
class AlgebraSpec:
    """Input data: vertex count m and deformation parameters q."""

    m: int
    q: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "q", tuple(Fraction(v) for v in self.q))
        if self.m < 1:
            raise ValueError("m must be at least 1")
        if len(self.q) != self.m:
            raise ValueError("q must have exactly m entries")
        if any(v == 0 for v in self.q):
            raise ValueError("zero deformation parameter")

    @property
    def zeta(self):
        prod = Fraction(1)
        for v in self.q:
            prod *= v
        return prod

    @property
    def generic(self):
        """zeta not a root of unity; over the rationals that is zeta not in {1,-1}."""
        return self.zeta not in (Fraction(1), Fraction(-1))


class Algebra:
    """Structure constants of the quotient algebra on its 4m-monomial basis."""

    def __init__(self, spec):
        self.spec = spec
        self.m = spec.m
        self.q = spec.q
        self.zeta = spec.zeta
        self.generic = spec.generic
        self.basis = (
            [e(i) for i in range(self.m)]
            + [a(i) for i in range(self.m)]
            + [abar(i) for i in range(self.m)]
            + [z(i) for i in range(self.m)]
        )
        self.basis_index = {mono: k for k, mono in enumerate(self.basis)}
        self._table = {}
        for x in self.basis:
            for y in self.basis:
                p = self._monomial_product(x, y)
                if p is not None:
                    self._table[(x, y)] = p
        self._into = {v: [mono for mono in self.basis if mono.terminus(self.m) == v] for v in range(self.m)}
        self._from = {v: [mono for mono in self.basis if mono.origin(self.m) == v] for v in range(self.m)}
        self.cache = {}

    def require_generic(self, allow_non_generic=False):
        if not self.generic and not allow_non_generic:
            raise NonGenericParameters(
                f"zeta = {self.zeta} is a root of unity; pass allow_non_generic to proceed"
            )

    def _monomial_product(self, x, y):
        """Product of two basis monomials as {mono: coeff}, or None if zero."""
        m = self.m
        if x.terminus(m) != y.origin(m):
            return None
        if x.kind == VERTEX:
            return {y: Fraction(1)}
        if y.kind == VERTEX:
            return {x: Fraction(1)}
        # socle kills the radical on both sides
        if x.kind == LOOP or y.kind == LOOP:
            return None
        if x.kind == ARROW and y.kind == BAR:
            # a_i abar_i = z_i (composability forces the indices to agree)
            return {z(x.index): Fraction(1)}
        if x.kind == BAR and y.kind == ARROW:
            # abar_j a_j = q_{j+1} z_{j+1}
            j1 = (x.index + 1) % m
            return {z(j1): self.q[j1]}
        # a_i a_{i+1} and abar_i abar_{i-1} are relations
        return None

    def multiply(self, x, y):
        out = {}
        for mx, cx in x.coeffs.items():
            for my, cy in y.coeffs.items():
                prod = self._table.get((mx, my))
                if prod is None:
                    continue
                cxy = cx * cy
                for mono, c in prod.items():
                    s = out.get(mono, Fraction(0)) + cxy * c
                    if s:
                        out[mono] = s
                    else:
                        out.pop(mono, None)
        res = AlgebraElement()
        res.coeffs = out
        return res

    def monomial_multiply(self, mx, my):
        prod = self._table.get((mx, my))
        if prod is None:
            return AlgebraElement()
        return AlgebraElement(prod)

    def element(self, mono, coeff=1):
        return AlgebraElement.of(mono, coeff)

    def zero(self):
        return AlgebraElement()

    def unit(self):
        return AlgebraElement({e(i): Fraction(1) for i in range(self.m)})

    def corner_basis(self, i, j):
        """Monomial basis of e_i . Algebra . e_j.

        The congruences are mod m, so m = 1 and m = 2 get their enlarged
        corners from the same logic.
        """
        m = self.m
        out = []
        if i == j:
            out.append(e(i))
        if j == (i + 1) % m:
            out.append(a(i))
        if j == (i - 1) % m:
            out.append(abar(j))
        if i == j:
            out.append(z(i))
        # m = 1 needs the canonical basis order e, a, abar, z
        out.sort(key=BasisMonomial.sort_key)
        return out

    def monomials_into(self, v):
        """Basis of Algebra . e_v (monomials with terminus v)."""
        return self._into[v]

    def monomials_from(self, v):
        """Basis of e_v . Algebra (monomials with origin v)."""
        return self._from[v]

    def element_coords(self, x):
        """Coordinates of x over the full 4m basis."""
        return [x.coefficient(mono) for mono in self.basis]

    def __repr__(self):
        return f"Algebra(m={self.m}, q={self.q}, zeta={self.zeta})"


def build_algebra(spec):
    return Algebra(spec)


def algebra(m, q):
    """Convenience constructor from raw m and a q sequence."""
    return Algebra(AlgebraSpec(m, tuple(q)))
