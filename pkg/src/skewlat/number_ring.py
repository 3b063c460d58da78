"""Exact arithmetic in the finite quotient R = Z[y]/(p, m(y)).

The ring is configured by an AlgebraSpec: a monic integer polynomial m of
degree n (the minimal polynomial of the generator, written `a` when printed),
an automorphism given by its image s(y) of the generator, a unit constant u
and a rational prime p.  Elements are coefficient vectors of length n with
entries reduced into [0, p), constant term first.  That canonical form makes
equality, hashing and enumeration order deterministic.

Depending on how p factors, R is a finite field (p inert), a product of
fields (p split) or a local ring with nilpotents (p ramified); decompose()
exposes that structure together with the projections onto the local factors.

All values are immutable after construction and safe to share across threads.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import product
from math import gcd, isqrt

from . import intpoly
from .errors import (
    InvalidSigma,
    InvalidSpec,
    NonUnitU,
    NotInvertible,
    NotIrreducible,
    NotPrime,
    TooLarge,
    Unsupported,
)

ENUMERATION_BOUND = 10**6


def _as_int_tuple(values, field_name):
    if isinstance(values, (int, str)):
        raise InvalidSpec(f"{field_name} must be a sequence of integers")
    try:
        return tuple(int(v) for v in values)
    except (TypeError, ValueError):
        raise InvalidSpec(f"{field_name} must be a sequence of integers") from None


@dataclass(frozen=True)
class AlgebraSpec:
    """Configuration of the cyclic algebra and of its coefficient ring.

    min_poly: monic integer coefficients of m(y), constant first, degree n.
    sigma_image: integer coefficients of s(y), the image of the generator
        under the automorphism.
    u: integer constant with e^n = u in the ambient algebra.
    p: rational prime defining the quotient.
    conjugation_mode: "complex" (conjugate = sigma, imaginary quadratic) or
        "identity" (totally real); used only by the trace form.
    assume_division: caller's assertion that the algebra is division; this
        library never proves it, see norm_witnesses().
    """

    min_poly: tuple
    sigma_image: tuple
    u: int
    p: int
    conjugation_mode: str = "complex"
    assume_division: bool = False

    def __post_init__(self):
        object.__setattr__(self, "min_poly", _as_int_tuple(self.min_poly, "min_poly"))
        object.__setattr__(self, "sigma_image", _as_int_tuple(self.sigma_image, "sigma_image"))
        object.__setattr__(self, "u", int(self.u))
        object.__setattr__(self, "p", int(self.p))

    @property
    def n(self):
        return len(self.min_poly) - 1


def _is_prime(p):
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def _check_irreducible(m):
    n = len(m) - 1
    if n == 2:
        disc = m[1] * m[1] - 4 * m[0]
        if disc >= 0 and isqrt(disc) ** 2 == disc:
            raise NotIrreducible(f"discriminant {disc} is a perfect square")
    else:
        warnings.warn(
            "irreducibility over Q is only verified for quadratic polynomials; "
            f"degree {n} is trusted",
            stacklevel=3,
        )


def _check_sigma(m, s):
    """s must satisfy m(s(y)) = 0 mod m(y) over Z and have order exactly n."""
    n = len(m) - 1
    if intpoly.compose_mod(m, s, m) != ():
        raise InvalidSigma("m(s(y)) is not divisible by m(y)")
    y = (0, 1)
    iterate = intpoly.mod_monic(s, m)
    order = None
    for k in range(1, n + 1):
        if iterate == y:
            order = k
            break
        iterate = intpoly.compose_mod(iterate, s, m)
    if order != n:
        raise InvalidSigma(f"automorphism order is {order}, expected {n}")


class RingElement:
    """Element of a QuotientRing, reduced coefficient vector of length n."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs):
        self.ring = ring
        self.coeffs = ring._reduce(coeffs)

    def _coerce(self, other):
        if isinstance(other, RingElement):
            if other.ring is self.ring or other.ring == self.ring:
                return other
            raise ValueError("elements belong to different rings")
        if isinstance(other, int):
            return self.ring.from_int(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        p = self.ring.p
        return self.ring._make(tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        p = self.ring.p
        return self.ring._make(tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        p = self.ring.p
        return self.ring._make(tuple(-a % p for a in self.coeffs))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.ring._make(self.ring._mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        out = self.ring.one
        base = self
        e = exponent
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            return self == self.ring.from_int(other)
        return (
            isinstance(other, RingElement)
            and self.coeffs == other.coeffs
            and self.ring == other.ring
        )

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def sigma(self, power=1):
        return self.ring.sigma(self, power)

    def inverse(self):
        return self.ring.inverse(self)

    def is_unit(self):
        try:
            self.ring.inverse(self)
            return True
        except NotInvertible:
            return False

    def to_list(self):
        return list(self.coeffs)

    def __str__(self):
        terms = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if j == 0:
                terms.append(str(c))
            else:
                var = "a" if j == 1 else f"a^{j}"
                terms.append(var if c == 1 else f"{c}*{var}")
        return " + ".join(terms) if terms else "0"

    def __repr__(self):
        return f"RingElement({self} mod {self.ring.p})"


class QuotientRing:
    """The ring R = Z[y]/(p, m(y)) with its automorphism sigma.

    Validates the full configuration on construction: p prime, u a unit mod p,
    m monic irreducible (quadratic case checked, higher degrees trusted with a
    warning), and s(y) inducing an automorphism of order exactly n.
    """

    def __init__(self, spec: AlgebraSpec):
        n = spec.n
        if n < 2:
            raise InvalidSpec("min_poly must have degree at least 2")
        if spec.min_poly[-1] != 1:
            raise InvalidSpec("min_poly must be monic")
        if spec.conjugation_mode not in ("complex", "identity"):
            raise InvalidSpec("conjugation_mode must be 'complex' or 'identity'")
        if spec.conjugation_mode == "complex" and n != 2:
            raise InvalidSpec("complex conjugation mode requires a quadratic field")
        if not _is_prime(spec.p):
            raise NotPrime(f"p = {spec.p} is not prime")
        if gcd(spec.u, spec.p) != 1:
            raise NonUnitU(f"u = {spec.u} is not a unit modulo p = {spec.p}")
        _check_irreducible(spec.min_poly)
        _check_sigma(spec.min_poly, spec.sigma_image)

        self.spec = spec
        self.p = spec.p
        self.n = n
        self.modulus = tuple(c % spec.p for c in spec.min_poly)
        self.sigma_poly = tuple(
            (c % spec.p)
            for c in intpoly.pad(intpoly.mod_monic(spec.sigma_image, spec.min_poly), n)
        )

        # y^(n+t) mod (p, m) for t = 0 .. n-2, used to fold products.
        self._yn = tuple(-c % self.p for c in self.modulus[:n])
        self._high_powers = [self._yn]
        for _ in range(n - 2):
            self._high_powers.append(self._times_y(self._high_powers[-1]))

        # sigma^k applied to the basis powers y^j, for k = 0 .. n-1.
        first = [intpoly.pad((1,), n)]
        for _ in range(n - 1):
            first.append(self._mul(first[-1], self.sigma_poly))
        tables = [tuple(intpoly.pad((0,) * j + (1,), n) for j in range(n)), tuple(first)]
        for _ in range(n - 2):
            prev = tables[-1]
            tables.append(tuple(self._apply_table(vec, tables[1]) for vec in prev))
        self._sigma_tables = tables[:n]

        self._decomposition = None

    # -- raw coefficient arithmetic ------------------------------------

    def _reduce(self, coeffs):
        if isinstance(coeffs, RingElement):
            if coeffs.ring == self:
                return coeffs.coeffs
            raise ValueError("element belongs to a different ring")
        c = [int(v) for v in coeffs]
        if len(c) > self.n:
            c = list(intpoly.mod_monic(c, self.spec.min_poly))
        c += [0] * (self.n - len(c))
        return tuple(v % self.p for v in c)

    def _make(self, reduced):
        el = object.__new__(RingElement)
        el.ring = self
        el.coeffs = reduced
        return el

    def _times_y(self, vec):
        top = vec[-1]
        out = [0] + list(vec[:-1])
        if top:
            out = [(o + top * c) % self.p for o, c in zip(out, self._yn)]
        return tuple(v % self.p for v in out)

    def _mul(self, a, b):
        n, p = self.n, self.p
        conv = [0] * (2 * n - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    conv[i + j] += ai * bj
        out = conv[:n]
        for t in range(n, 2 * n - 1):
            c = conv[t]
            if c:
                red = self._high_powers[t - n]
                for j in range(n):
                    out[j] += c * red[j]
        return tuple(v % p for v in out)

    def _apply_table(self, vec, table):
        out = [0] * self.n
        for j, c in enumerate(vec):
            if c:
                img = table[j]
                for i in range(self.n):
                    out[i] += c * img[i]
        return tuple(v % self.p for v in out)

    # -- public API ----------------------------------------------------

    @property
    def size(self):
        return self.p**self.n

    def element(self, coeffs) -> RingElement:
        return RingElement(self, coeffs)

    def from_int(self, value) -> RingElement:
        return self._make(((value % self.p),) + (0,) * (self.n - 1))

    @property
    def zero(self):
        return self._make((0,) * self.n)

    @property
    def one(self):
        return self.from_int(1)

    @property
    def gen(self):
        """The image of y, the generator of the ring over F_p."""
        return self._make(self._reduce((0, 1)))

    @property
    def u(self):
        return self.from_int(self.spec.u)

    def coerce(self, value) -> RingElement:
        if isinstance(value, RingElement):
            if value.ring == self:
                return value
            raise ValueError("element belongs to a different ring")
        if isinstance(value, int):
            return self.from_int(value)
        return self.element(value)

    def sigma(self, a: RingElement, power=1) -> RingElement:
        k = power % self.n
        if k == 0:
            return self.coerce(a)
        a = self.coerce(a)
        return self._make(self._apply_table(a.coeffs, self._sigma_tables[k]))

    def inverse(self, a: RingElement) -> RingElement:
        a = self.coerce(a)
        cols = []
        vec = a.coeffs
        for _ in range(self.n):
            cols.append(vec)
            vec = self._times_y(vec)
        matrix = [[cols[j][i] for j in range(self.n)] for i in range(self.n)]
        rhs = [1] + [0] * (self.n - 1)
        sol = _solve_mod_p(matrix, rhs, self.p)
        if sol is None:
            raise NotInvertible(f"{a!r} is not a unit")
        return self._make(tuple(sol))

    def elements(self, bound=ENUMERATION_BOUND):
        """All p^n elements, lexicographic by coefficient vector."""
        if self.size > bound:
            raise TooLarge(f"{self.size} elements exceeds bound {bound}")
        for coeffs in product(range(self.p), repeat=self.n):
            yield self._make(coeffs)

    def decompose(self) -> "RingDecomposition":
        if self._decomposition is None:
            self._decomposition = RingDecomposition(self)
        return self._decomposition

    def __eq__(self, other):
        return (
            isinstance(other, QuotientRing)
            and self.p == other.p
            and self.modulus == other.modulus
            and self.sigma_poly == other.sigma_poly
        )

    def __hash__(self):
        return hash((self.p, self.modulus, self.sigma_poly))

    def __repr__(self):
        return f"QuotientRing(p={self.p}, m={list(self.modulus)})"


def _solve_mod_p(matrix, rhs, p):
    """Solve M x = rhs over F_p by Gaussian elimination; None if unsolvable."""
    n = len(matrix)
    aug = [row[:] + [rhs[i]] for i, row in enumerate(matrix)]
    pivot_cols = []
    row = 0
    for col in range(n):
        pivot = next((r for r in range(row, n) if aug[r][col] % p), None)
        if pivot is None:
            continue
        aug[row], aug[pivot] = aug[pivot], aug[row]
        inv = pow(aug[row][col], -1, p)
        aug[row] = [(v * inv) % p for v in aug[row]]
        for r in range(n):
            if r != row and aug[r][col] % p:
                factor = aug[r][col]
                aug[r] = [(a - factor * b) % p for a, b in zip(aug[r], aug[row])]
        pivot_cols.append(col)
        row += 1
        if row == n:
            break
    for r in range(row, n):
        if aug[r][n] % p:
            return None
    sol = [0] * n
    for r, col in enumerate(pivot_cols):
        sol[col] = aug[r][n] % p
    return sol


# -- factorization of m mod p and the local projections ----------------


def _fp_trim(c, p):
    out = [v % p for v in c]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _fp_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _fp_trim(out, p)


def _fp_divmod(a, b, p):
    """Divide by b with invertible leading coefficient, over F_p."""
    a = list(_fp_trim(a, p))
    b = _fp_trim(b, p)
    inv = pow(b[-1], -1, p)
    db = len(b) - 1
    q = [0] * max(len(a) - db, 0)
    while len(a) - 1 >= db and a:
        shift = len(a) - 1 - db
        c = (a[-1] * inv) % p
        q[shift] = c
        for j, bj in enumerate(b):
            a[shift + j] = (a[shift + j] - c * bj) % p
        while a and a[-1] == 0:
            a.pop()
    return _fp_trim(q, p), _fp_trim(a, p)


def _factor_mod_p(m, p, search_bound=ENUMERATION_BOUND):
    """Monic irreducible factors of m over F_p, with multiplicities.

    Exhaustive root search first (roots in ascending order), then monic
    divisors of growing degree; adequate at the small sizes this library
    targets.  Factors come out in discovery order, which is deterministic.
    """
    rem = _fp_trim(m, p)
    factors = []

    def record(f):
        if factors and factors[-1][0] == f:
            factors[-1][1] += 1
        else:
            factors.append([f, 1])

    def divide_out(cand):
        nonlocal rem
        while len(rem) - 1 >= len(cand) - 1:
            q, s = _fp_divmod(rem, cand, p)
            if s != ():
                break
            record(cand)
            rem = q

    for r in range(p):
        divide_out(((-r) % p, 1))

    # No linear factors remain, so the lexicographically first monic divisor
    # of each degree d (scanned in ascending d) is irreducible.
    d = 2
    while 2 * d <= len(rem) - 1:
        if p**d > search_bound:
            raise TooLarge(f"factor search over {p}^{d} candidates exceeds bound")
        for tail in product(range(p), repeat=d):
            divide_out(tail + (1,))
        d += 1
    if len(rem) > 1:
        record(rem)
    return [(tuple(f), e) for f, e in factors]


class RingDecomposition:
    """How p factors in the ring: irreducible factors of m mod p with their
    multiplicities, and the projections of R onto the local quotients
    F_p[y]/(f_i^{e_i})."""

    def __init__(self, ring: QuotientRing):
        self.ring = ring
        self.factors = _factor_mod_p(ring.modulus, ring.p)
        self.moduli = []
        for f, e in self.factors:
            q = (1,)
            for _ in range(e):
                q = _fp_mul(q, f, ring.p)
            self.moduli.append(q)

    @property
    def num_primes(self):
        return len(self.factors)

    def ramification(self) -> str:
        if any(e > 1 for _, e in self.factors):
            return "ramified"
        if len(self.factors) == 1:
            return "inert"
        return "split"

    def project(self, a: RingElement):
        """Image of a in each local factor, as coefficient tuples."""
        a = self.ring.coerce(a)
        out = []
        for q in self.moduli:
            _, r = _fp_divmod(a.coeffs, q, self.ring.p)
            out.append(tuple(r) + (0,) * (len(q) - 1 - len(r)))
        return tuple(out)

    def __repr__(self):
        parts = ", ".join(f"{list(f)}^{e}" for f, e in self.factors)
        return f"RingDecomposition({self.ramification()}: {parts})"


def norm_witnesses(spec: AlgebraSpec, bound: int):
    """Search |a|,|b| <= bound for field norms N(a + b*theta) equal to u^i.

    Returns all witnesses (a, b, i) with i in 1..n-1.  An empty list is
    consistent with, but does not prove, the division property.  Quadratic
    fields only.
    """
    if spec.n != 2:
        raise Unsupported("norm search is implemented for quadratic fields only")
    c0, c1 = spec.min_poly[0], spec.min_poly[1]
    targets = [(spec.u**i, i) for i in range(1, spec.n)]
    out = []
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            nm = a * a - a * b * c1 + b * b * c0
            for value, i in targets:
                if nm == value:
                    out.append((a, b, i))
    return out
