"""Constacyclic codes: left ideals (g(x))/(x^n - u) of the skew quotient.

A code is built from a monic right divisor g of x^n - u.  The parity check h
is the quotient of x^n - u by g; it satisfies h*g = g*h = x^n - u and a vector
is a codeword exactly when its polynomial kills h on the right.  Codewords are
plain tuples of RingElement of length n.

Everything here is exact and, at the configured sizes, exhaustively checkable:
enumerate_codewords and brute_force_dual are the independent oracles against
which the algebraic shortcuts (parity check, dual generator) are validated.
"""

from __future__ import annotations

from itertools import product

from .errors import LengthMismatch, NonUnitLeading, NotADivisor, NotInvertible, TooLarge, UnsupportedU
from .number_ring import ENUMERATION_BOUND, QuotientRing
from .skew import SkewPoly, central_poly


class ConstacyclicCode:
    """The code of length n generated by the monic right divisor g of x^n - u."""

    def __init__(self, ring: QuotientRing, n: int, u, g: SkewPoly, h: SkewPoly, k: int):
        self.ring = ring
        self.n = n
        self.u = u
        self.g = g
        self.h = h
        self.k = k

    @classmethod
    def from_generator(cls, g: SkewPoly, n: int | None = None, u=None) -> "ConstacyclicCode":
        """Build the code, computing the parity check by right division.

        A non-monic g with unit leading coefficient is normalized to the monic
        generator of the same ideal.  Raises NotADivisor when g does not right
        divide x^n - u.
        """
        ring = g.ring
        if n is None:
            n = ring.n
        u = ring.coerce(u if u is not None else ring.spec.u)
        if not g.is_monic:
            try:
                g = g.lead.inverse() * g
            except NotInvertible:
                raise NonUnitLeading(
                    "generator leading coefficient is not a unit"
                ) from None
        if g.degree > n:
            raise NotADivisor(f"degree {g.degree} exceeds length {n}")
        central = central_poly(ring, n, u)
        h, r = central.right_divmod(g)
        if not r.is_zero:
            raise NotADivisor(f"{g} does not right divide {central}")
        if g * h != central:
            raise NotADivisor(f"{g} is only a one-sided divisor of {central}")
        return cls(ring, n, u, g, h, n - int(g.degree))

    # -- vector / polynomial conversions --------------------------------

    def to_poly(self, v) -> SkewPoly:
        if len(v) != self.n:
            raise LengthMismatch(f"expected length {self.n}, got {len(v)}")
        return SkewPoly(self.ring, v)

    def to_codeword(self, f: SkewPoly):
        return f.mod_central(self.n, self.u).padded_coeffs(self.n)

    # -- core operations -------------------------------------------------

    def encode(self, msg):
        """Codeword of the message polynomial b(x): coefficients of b*g."""
        if len(msg) != self.k:
            raise LengthMismatch(f"expected {self.k} message symbols, got {len(msg)}")
        b = SkewPoly(self.ring, msg)
        return self.to_codeword(b * self.g)

    def is_codeword(self, v) -> bool:
        """Parity test: a(x)*h(x) = 0 modulo x^n - u."""
        a = self.to_poly(v)
        return (a * self.h).mod_central(self.n, self.u).is_zero

    def shift(self, v):
        """The twisted shift (u*sigma(a_{n-1}), sigma(a_0), ..., sigma(a_{n-2}))."""
        if len(v) != self.n:
            raise LengthMismatch(f"expected length {self.n}, got {len(v)}")
        ring = self.ring
        v = [ring.coerce(c) for c in v]
        return (self.u * ring.sigma(v[-1]),) + tuple(ring.sigma(c) for c in v[:-1])

    def codewords(self, bound=ENUMERATION_BOUND):
        """All |R|^k codewords, in lexicographic message order."""
        if self.ring.size**self.k > bound:
            raise TooLarge(f"{self.ring.size}^{self.k} codewords exceeds bound {bound}")
        elems = list(self.ring.elements(bound)) if self.k else []
        for msg in product(elems, repeat=self.k):
            yield self.encode(msg)

    # -- duality -----------------------------------------------------------

    def dual_generator(self) -> SkewPoly:
        """Generator of the Euclidean dual, 1 + sum sigma^i(h_{k-i}) x^i.

        Only valid when u*u = 1.  The returned polynomial has constant term 1;
        it is not monic in general, but its leading coefficient is a unit and
        from_generator normalizes it.
        """
        if self.u * self.u != self.ring.one:
            raise UnsupportedU("dual generator formula requires u*u = 1")
        ring = self.ring
        coeffs = [ring.one]
        for i in range(1, self.k + 1):
            coeffs.append(ring.sigma(self.h.coeff(self.k - i), i))
        return SkewPoly(ring, coeffs)

    def dual_code(self) -> "ConstacyclicCode":
        return ConstacyclicCode.from_generator(self.dual_generator(), self.n, self.u)

    def is_self_dual(self) -> bool:
        return self == self.dual_code()

    def __eq__(self, other):
        """Codeword-set equality, decided by mutual generator membership."""
        if not isinstance(other, ConstacyclicCode):
            return NotImplemented
        if self.ring != other.ring or self.n != other.n or self.u != other.u:
            return False
        return self.is_codeword(self.to_codeword(other.g)) and other.is_codeword(
            other.to_codeword(self.g)
        )

    __hash__ = None

    def to_dict(self):
        return {
            "n": self.n,
            "u": self.u.to_list(),
            "g": self.g.to_lists(),
            "h": self.h.to_lists(),
            "k": self.k,
        }

    def __repr__(self):
        return f"ConstacyclicCode(n={self.n}, k={self.k}, g={self.g})"


def inner_product(v, w):
    """Euclidean scalar product sum v_i * w_i in R."""
    if len(v) != len(w):
        raise LengthMismatch("vectors have different lengths")
    acc = None
    for a, b in zip(v, w):
        term = a * b
        acc = term if acc is None else acc + term
    return acc


def brute_force_dual(code: ConstacyclicCode, bound=ENUMERATION_BOUND):
    """The exact Euclidean dual, by testing every vector against every codeword.

    Deliberately independent of dual_generator(); this is the oracle the
    algebraic dual is checked against.
    """
    ring = code.ring
    if ring.size**code.n > bound:
        raise TooLarge(f"{ring.size}^{code.n} vectors exceeds bound {bound}")
    words = list(code.codewords(bound))
    elems = list(ring.elements(bound))
    zero = ring.zero
    out = []
    for v in product(elems, repeat=code.n):
        if all(inner_product(c, v) == zero for c in words):
            out.append(v)
    return out
