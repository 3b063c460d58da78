"""Integer lattices from codes: the Construction A lift and its geometry.

The natural order is O_K + O_K e + ... + O_K e^(n-1) with e^n = u and
e*t = sigma(t)*e.  An OrderElement stores an n x n integer matrix whose row i
holds the coordinates of the O_K component of e^i in powers of the field
generator.  Flattened row-major, that gives coordinates in the Z-basis
{theta^j e^i} of the order, N = n^2 of them, ordered 1, theta, ...,
theta^(n-1), e, theta e, ...

Lifting a codeword takes its canonical representatives in [0, p) as integer
coordinates; reducing an order element mods every coordinate by p.  The
lattice attached to a code is spanned by the lifts of the k generator
codewords x^i g together with p times the standard basis, normalized by
Hermite Normal Form.

HNF convention: column style, lower triangular, positive diagonal, entries to
the left of each pivot reduced into [0, pivot).  That canonical form makes
lattice equality a plain matrix comparison.  All arithmetic is arbitrary
precision; Gram determinants overflow machine words even at small sizes.

The trace form used for Gram matrices is
    B(sum a_i e^i, sum b_i e^i) = sum_i w^i * Tr(a_i * conj(b_i))
with conj = sigma for imaginary quadratic fields ("complex" mode), identity
for totally real ones, and w an optional positive e-block weight (default 1).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import intpoly
from .codes import ConstacyclicCode, brute_force_dual
from .errors import IndefiniteForm, InvalidSpec, LengthMismatch
from .number_ring import ENUMERATION_BOUND, AlgebraSpec, QuotientRing


class NaturalOrder:
    """Exact arithmetic in the order, over Z (no reduction modulo p)."""

    def __init__(self, spec: AlgebraSpec):
        self.spec = spec
        self.n = spec.n
        self.p = spec.p
        self.u = spec.u
        self.min_poly = spec.min_poly
        n = self.n

        s_red = intpoly.pad(intpoly.mod_monic(spec.sigma_image, spec.min_poly), n)
        powers = [intpoly.pad((1,), n)]
        for _ in range(n - 1):
            powers.append(self._reduce(intpoly.mul(powers[-1], s_red)))
        tables = [tuple(intpoly.pad((0,) * j + (1,), n) for j in range(n)), tuple(powers)]
        for _ in range(n - 2):
            tables.append(tuple(self._combine(vec, tables[1]) for vec in tables[-1]))
        self._sigma_tables = tables[:n]

        # Tr(theta^j) for j < n via Newton's identities.
        sums = [n]
        m = spec.min_poly
        for k in range(1, n):
            acc = k * m[n - k]
            for i in range(1, k):
                acc += m[n - i] * sums[k - i]
            sums.append(-acc)
        self.trace_sums = tuple(sums)

    # -- O_K coefficient vectors (length n integer tuples) ---------------

    def _reduce(self, coeffs):
        return intpoly.pad(intpoly.mod_monic(coeffs, self.min_poly), self.n)

    def _combine(self, vec, table):
        out = [0] * self.n
        for j, c in enumerate(vec):
            if c:
                img = table[j]
                for i in range(self.n):
                    out[i] += c * img[i]
        return tuple(out)

    def ok_mul(self, a, b):
        return self._reduce(intpoly.mul(a, b))

    def ok_sigma(self, vec, power=1):
        k = power % self.n
        if k == 0:
            return tuple(vec)
        return self._combine(vec, self._sigma_tables[k])

    def ok_trace(self, vec) -> int:
        return sum(c * t for c, t in zip(vec, self.trace_sums))

    def ok_conj(self, vec):
        if self.spec.conjugation_mode == "complex":
            return self.ok_sigma(vec, 1)
        return tuple(vec)

    def ok_norm(self, vec) -> int:
        """Field norm, as the determinant of the multiplication matrix."""
        basis = [intpoly.pad((0,) * j + (1,), self.n) for j in range(self.n)]
        cols = [self.ok_mul(vec, b) for b in basis]
        return det_int([[cols[j][i] for j in range(self.n)] for i in range(self.n)])

    # -- order elements ---------------------------------------------------

    def element(self, rows) -> "OrderElement":
        if len(rows) != self.n:
            raise LengthMismatch(f"expected {self.n} rows")
        return OrderElement(self, tuple(self._reduce(tuple(int(v) for v in row)) for row in rows))

    @property
    def zero(self):
        return self.element([[0] * self.n] * self.n)

    @property
    def one(self):
        rows = [[0] * self.n for _ in range(self.n)]
        rows[0][0] = 1
        return self.element(rows)

    def basis_element(self, flat_index) -> "OrderElement":
        vec = [0] * (self.n * self.n)
        vec[flat_index] = 1
        return self.from_flat(vec)

    def from_flat(self, vec) -> "OrderElement":
        n = self.n
        if len(vec) != n * n:
            raise LengthMismatch(f"expected {n * n} coordinates")
        return self.element([vec[i * n : (i + 1) * n] for i in range(n)])

    def __eq__(self, other):
        return isinstance(other, NaturalOrder) and self.spec == other.spec

    def __hash__(self):
        return hash(self.spec)

    def __repr__(self):
        return f"NaturalOrder(m={list(self.min_poly)}, u={self.u})"


class OrderElement:
    """An element sum_i a_i e^i of the order, rows holding the a_i coordinates."""

    __slots__ = ("order", "rows")

    def __init__(self, order: NaturalOrder, rows):
        self.order = order
        self.rows = rows

    def _coerce(self, other):
        if isinstance(other, OrderElement):
            if other.order == self.order:
                return other
            raise ValueError("elements belong to different orders")
        if isinstance(other, int):
            rows = [[0] * self.order.n for _ in range(self.order.n)]
            rows[0][0] = other
            return self.order.element(rows)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return OrderElement(
            self.order,
            tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.rows, other.rows)),
        )

    __radd__ = __add__

    def __neg__(self):
        return OrderElement(self.order, tuple(tuple(-a for a in row) for row in self.rows))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return OrderElement(
                self.order, tuple(tuple(other * a for a in row) for row in self.rows)
            )
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        order = self.order
        n = order.n
        acc = [[0] * n for _ in range(n)]
        for i, a_i in enumerate(self.rows):
            if not any(a_i):
                continue
            for j, b_j in enumerate(other.rows):
                if not any(b_j):
                    continue
                c = order.ok_mul(a_i, order.ok_sigma(b_j, i))
                t = i + j
                if t >= n:
                    t -= n
                    c = tuple(order.u * v for v in c)
                for idx in range(n):
                    acc[t][idx] += c[idx]
        return order.element(acc)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        return (
            isinstance(other, OrderElement)
            and self.order == other.order
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash(self.rows)

    def flatten(self):
        return tuple(v for row in self.rows for v in row)

    def to_lists(self):
        return [list(row) for row in self.rows]

    def __str__(self):
        def ok_str(vec):
            terms = []
            for j, c in enumerate(vec):
                if c == 0:
                    continue
                if j == 0:
                    terms.append(str(c))
                else:
                    var = "y" if j == 1 else f"y^{j}"
                    terms.append(var if c == 1 else f"{c}*{var}")
            return " + ".join(terms) if terms else "0"

        blocks = []
        for i, row in enumerate(self.rows):
            if not any(row):
                continue
            body = ok_str(row)
            if i == 0:
                blocks.append(body)
            else:
                e = "e" if i == 1 else f"e^{i}"
                blocks.append(e if body == "1" else f"({body})*{e}")
        return " + ".join(blocks) if blocks else "0"

    def __repr__(self):
        return f"OrderElement({self})"


# -- lifting and reduction ---------------------------------------------


def lift_codeword(order: NaturalOrder, codeword) -> OrderElement:
    """Canonical integer representative of a codeword, coordinates in [0, p)."""
    if len(codeword) != order.n:
        raise LengthMismatch(f"expected length {order.n}")
    return order.element([c.to_list() for c in codeword])


def reduce_element(a: OrderElement, ring: QuotientRing):
    """Coordinatewise reduction modulo p; inverse of lift_codeword on
    canonical representatives."""
    return tuple(ring.element(row) for row in a.rows)


# -- exact integer linear algebra ----------------------------------------


def _xgcd(a, b):
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


def hnf(mat):
    """Column Hermite Normal Form of the integer column span of mat.

    Input and output are row-major; columns are the generators.  Zero columns
    are dropped, so the result has exactly rank(mat) columns, each with a
    positive pivot strictly below the previous column's pivot and with the
    entries to the left of every pivot reduced into [0, pivot).
    """
    nrows = len(mat)
    pool = [list(col) for col in zip(*mat)]
    placed = []  # (pivot_row, column)
    for r in range(nrows):
        cand = [c for c in pool if c[r] != 0]
        pool = [c for c in pool if c[r] == 0]
        if not cand:
            continue
        piv = cand[0]
        for c in cand[1:]:
            x, y, g = _xgcd(piv[r], c[r])
            pr, cr = piv[r], c[r]
            new_piv = [x * a + y * b for a, b in zip(piv, c)]
            new_c = [-(cr // g) * a + (pr // g) * b for a, b in zip(piv, c)]
            piv = new_piv
            pool.append(new_c)
        if piv[r] < 0:
            piv = [-v for v in piv]
        for _, earlier in placed:
            q = earlier[r] // piv[r]
            if q:
                for i in range(nrows):
                    earlier[i] -= q * piv[i]
        placed.append((r, piv))
    if not placed:
        return [[] for _ in range(nrows)]
    return [[col[i] for _, col in placed] for i in range(nrows)]


def det_int(mat) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(mat)
    if n == 0:
        return 1
    a = [list(map(int, row)) for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def lattice_contains(basis_rows, vec) -> bool:
    """Whether vec lies in the lattice spanned by the HNF basis columns."""
    cols = list(zip(*basis_rows)) if basis_rows and basis_rows[0] else []
    v = list(vec)
    for col in cols:
        r = next(i for i, e in enumerate(col) if e != 0)
        if v[r] % col[r]:
            return False
        t = v[r] // col[r]
        if t:
            v = [a - t * b for a, b in zip(v, col)]
    return not any(v)


# -- Construction A -------------------------------------------------------


@dataclass
class LatticeBasis:
    """Canonical basis of a full-rank sublattice of the order.

    basis: N x N column-HNF matrix, columns are generators in the flat basis.
    gram: Gram matrix of those columns under the trace form.
    det: determinant of the Gram matrix.
    index: index of the lattice in the full order (product of HNF pivots).
    """

    basis: list
    gram: list
    det: int
    index: int

    def to_dict(self):
        return {
            "basis": [list(r) for r in self.basis],
            "gram": [list(r) for r in self.gram],
            "det": self.det,
            "index": self.index,
        }


def gram_matrix(basis, spec: AlgebraSpec, e_weight: int = 1):
    """Gram matrix of the basis columns under the trace form.

    Raises IndefiniteForm when a diagonal entry is nonpositive, which signals
    a conjugation_mode inconsistent with the field.
    """
    rows = basis.basis if isinstance(basis, LatticeBasis) else basis
    if e_weight < 1:
        raise InvalidSpec("e_weight must be a positive integer")
    order = NaturalOrder(spec)
    elems = [order.from_flat(col) for col in zip(*rows)]
    weights = [e_weight**i for i in range(order.n)]

    def form(x, y):
        total = 0
        for i in range(order.n):
            total += weights[i] * order.ok_trace(order.ok_mul(x.rows[i], order.ok_conj(y.rows[i])))
        return total

    size = len(elems)
    gram = [[0] * size for _ in range(size)]
    for r in range(size):
        for s in range(r, size):
            gram[r][s] = gram[s][r] = form(elems[r], elems[s])
        if gram[r][r] <= 0:
            raise IndefiniteForm(
                f"diagonal entry {gram[r][r]} <= 0; check conjugation_mode"
            )
    return gram


def _basis_from_generators(generators, spec: AlgebraSpec, e_weight: int) -> LatticeBasis:
    order = NaturalOrder(spec)
    N = order.n * order.n
    cols = [list(g) for g in generators]
    for r in range(N):
        unit = [0] * N
        unit[r] = spec.p
        cols.append(unit)
    rows = [[col[i] for col in cols] for i in range(N)]
    basis = hnf(rows)
    index = 1
    for i in range(N):
        index *= basis[i][i]
    gram = gram_matrix(basis, spec, e_weight)
    return LatticeBasis(basis=basis, gram=gram, det=det_int(gram), index=index)


def construction_a_basis(code: ConstacyclicCode, e_weight: int = 1) -> LatticeBasis:
    """Basis of the preimage lattice of the code under reduction modulo p.

    Generated by p times the standard order basis together with the lifts of
    the codewords theta^j x^i g, which span the code as an additive group
    (the x^i g alone only span it as an R-module).  The index in the full
    order is p^(n(n-k)) when the code is a free module of rank k.
    """
    spec = code.ring.spec
    ring = code.ring
    order = NaturalOrder(spec)
    from .skew import SkewPoly

    generators = []
    for i in range(code.k):
        for j in range(ring.n):
            scalar = ring.gen**j if j else ring.one
            f = SkewPoly.monomial(ring, i, scalar) * code.g
            generators.append(lift_codeword(order, code.to_codeword(f)).flatten())
    return _basis_from_generators(generators, spec, e_weight)


def dual_lattice_basis(
    code: ConstacyclicCode, e_weight: int = 1, bound=ENUMERATION_BOUND
) -> LatticeBasis:
    """Basis of the preimage lattice of the Euclidean dual code.

    Built from the brute-force dual so it stays valid even when u*u != 1 and
    no dual generator formula applies.
    """
    spec = code.ring.spec
    order = NaturalOrder(spec)
    generators = [lift_codeword(order, v).flatten() for v in brute_force_dual(code, bound)]
    return _basis_from_generators(generators, spec, e_weight)


def dual_lattice_inclusion_check(
    code_a: ConstacyclicCode, code_b: ConstacyclicCode, bound=ENUMERATION_BOUND
) -> bool:
    """Whether the lattice of code_a is contained in the lattice of code_b's dual.

    True whenever every codeword of code_a is orthogonal to code_b; in
    particular a self-dual code against itself gives equal lattices.
    """
    if code_a.ring != code_b.ring or code_a.n != code_b.n:
        raise InvalidSpec("codes must share the same ring and length")
    target = dual_lattice_basis(code_b, bound=bound).basis
    source = construction_a_basis(code_a).basis
    return all(lattice_contains(target, col) for col in zip(*source))
