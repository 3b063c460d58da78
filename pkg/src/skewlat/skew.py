"""Skew polynomials over a QuotientRing.

SkewPoly is the ring R[x; sigma] with multiplication twisted by
x*s = sigma(s)*x, so (a x^i)(b x^j) = a sigma^i(b) x^(i+j).  OppositePoly is
the same construction in a variable w with the inverse twist
w*s = sigma^(-1)(s)*w; opposite() embeds R[x; sigma] into it reversing
products, which is how parity-check data turns into dual generators.

Left and right division require a divisor whose leading coefficient is a
unit; the quotient/remainder pair is then unique, which makes polynomials of
degree below n canonical representatives modulo the central x^n - u.

The zero polynomial has an empty coefficient tuple and degree -inf (a float
sentinel, so degree comparisons in division loops need no special casing).
"""

from __future__ import annotations

from itertools import product

from .errors import DivisionByZero, NonUnitLeading, NotInvertible, TooLarge
from .number_ring import ENUMERATION_BOUND, QuotientRing, RingElement

NEG_INF = float("-inf")


class SkewPoly:
    TWIST = 1
    VAR = "x"

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: QuotientRing, coeffs=()):
        self.ring = ring
        cs = [ring.coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, ring):
        return cls(ring)

    @classmethod
    def one(cls, ring):
        return cls(ring, (1,))

    @classmethod
    def monomial(cls, ring, degree, coeff=1):
        return cls(ring, (0,) * degree + (coeff,))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def lead(self) -> RingElement:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == self.ring.one

    def coeff(self, i) -> RingElement:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.ring.zero

    def _coerce(self, other):
        if isinstance(other, SkewPoly):
            if type(other) is not type(self):
                raise ValueError("cannot mix polynomials with different twists")
            return other
        if isinstance(other, (RingElement, int)):
            return type(self)(self.ring, (other,))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return type(self)(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)(self.ring, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return type(self).zero(self.ring)
        ring = self.ring
        out = [ring.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * ring.sigma(b, self.TWIST * i)
        return type(self)(ring, out)

    def __rmul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self

    def __eq__(self, other):
        return (
            type(other) is type(self)
            and self.ring == other.ring
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((type(self).__name__, self.coeffs))

    def _check_divisor(self, g):
        if g.is_zero:
            raise DivisionByZero("division by the zero polynomial")
        try:
            return g.lead.inverse()
        except NotInvertible:
            raise NonUnitLeading(
                f"leading coefficient {g.lead!r} is not a unit"
            ) from None

    def right_divmod(self, g: "SkewPoly"):
        """Unique (q, r) with self = q*g + r and deg r < deg g."""
        g = self._coerce(g)
        lead_inv = self._check_divisor(g)
        ring = self.ring
        q = type(self).zero(ring)
        r = self
        l = g.degree
        while not r.is_zero and r.degree >= l:
            shift = r.degree - l
            c = r.lead * ring.sigma(lead_inv, self.TWIST * shift)
            term = type(self).monomial(ring, shift, c)
            q = q + term
            r = r - term * g
        return q, r

    def left_divmod(self, g: "SkewPoly"):
        """Unique (q, r) with self = g*q + r and deg r < deg g."""
        g = self._coerce(g)
        lead_inv = self._check_divisor(g)
        ring = self.ring
        q = type(self).zero(ring)
        r = self
        l = g.degree
        while not r.is_zero and r.degree >= l:
            shift = r.degree - l
            c = ring.sigma(r.lead * lead_inv, -self.TWIST * l)
            term = type(self).monomial(ring, shift, c)
            q = q + term
            r = r - g * term
        return q, r

    def mod_central(self, n: int, u) -> "SkewPoly":
        """Canonical representative of degree < n modulo x^n - u."""
        if self.degree < n:
            return self
        return self.right_divmod(central_poly(self.ring, n, u, cls=type(self)))[1]

    def padded_coeffs(self, length):
        if self.degree >= length:
            raise ValueError("polynomial degree too large for requested length")
        return self.coeffs + (self.ring.zero,) * (length - len(self.coeffs))

    def to_lists(self):
        return [c.to_list() for c in self.coeffs]

    def __str__(self):
        if self.is_zero:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            cs = str(c)
            if i == 0:
                terms.append(cs if ("+" not in cs) else f"({cs})")
                continue
            var = self.VAR if i == 1 else f"{self.VAR}^{i}"
            if cs == "1":
                terms.append(var)
            elif "+" in cs or "*" in cs:
                terms.append(f"({cs})*{var}")
            else:
                terms.append(f"{cs}*{var}")
        return " + ".join(terms)

    def __repr__(self):
        return f"{type(self).__name__}({self})"


class OppositePoly(SkewPoly):
    """Polynomials in w with the inverse twist w*s = sigma^(-1)(s)*w."""

    TWIST = -1
    VAR = "w"


def opposite(f: SkewPoly) -> OppositePoly:
    """Product-reversing embedding: sum a_i x^i maps to sum sigma^(-i)(a_i) w^i.

    Additive, and reverses multiplication: opposite(f*g) = opposite(g)*opposite(f).
    """
    ring = f.ring
    return OppositePoly(ring, tuple(ring.sigma(c, -i) for i, c in enumerate(f.coeffs)))


def central_poly(ring: QuotientRing, n: int, u, cls=SkewPoly) -> SkewPoly:
    """The polynomial x^n - u; requires sigma(u) = u so it is central."""
    u = ring.coerce(u)
    if ring.sigma(u) != u:
        raise ValueError("u must be fixed by sigma for x^n - u to be central")
    return cls(ring, (-u,) + (0,) * (n - 1) + (1,))


def monic_right_divisors(ring: QuotientRing, n: int, u, degree: int, bound=ENUMERATION_BOUND):
    """All monic right divisors of x^n - u of the given degree, brute force.

    Candidates are scanned lexicographically by coefficient vector, so the
    result order is deterministic.
    """
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    if ring.size**degree > bound:
        raise TooLarge(f"{ring.size}^{degree} candidates exceeds bound {bound}")
    central = central_poly(ring, n, u)
    lower = [list(ring.elements(bound))] * degree if degree else []
    out = []
    for tail in product(*lower):
        g = SkewPoly(ring, tuple(tail) + (ring.one,))
        if central.right_divmod(g)[1].is_zero:
            out.append(g)
    return out
