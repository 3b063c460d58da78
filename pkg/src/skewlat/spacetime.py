"""Matrix representations of order elements and coset encoding.

matrix_rep(a) is the classical n x n codeword matrix of a = sum a_i e^i over
O_K: column c holds the coordinates of e^c * a, so entry (r, c) is
sigma^c(a_{r-c}) on and below the diagonal and u * sigma^c(a_{n-c+r}) above
it.  The map is additive and injective and reverses products,
matrix_rep(a*b) = matrix_rep(b) * matrix_rep(a), because column c tracks
right multiplication acting on e^c.

min_det_sample probes the space-time design criterion: over a division
algebra the determinant of M(a) - M(a') never vanishes for a != a'.  The
probe is a sample, never a certificate.

Coset encoding splits a lattice point into an information codeword plus a
random offset in p times the order, the wiretap-coding primitive.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, product

from . import intpoly
from .codes import ConstacyclicCode
from .errors import LengthMismatch, NotInLattice, TooLarge
from .lattice import (
    NaturalOrder,
    OrderElement,
    construction_a_basis,
    det_int,
    lift_codeword,
    reduce_element,
)
from .number_ring import ENUMERATION_BOUND


class SpaceTimeMatrix:
    """n x n matrix with O_K entries, each an integer coordinate vector."""

    __slots__ = ("order", "entries")

    def __init__(self, order: NaturalOrder, entries):
        self.order = order
        self.entries = tuple(tuple(tuple(int(v) for v in e) for e in row) for row in entries)

    def __add__(self, other):
        self._check(other)
        return SpaceTimeMatrix(
            self.order,
            [
                [intpoly.pad(intpoly.add(a, b), self.order.n) for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ],
        )

    def __sub__(self, other):
        self._check(other)
        return SpaceTimeMatrix(
            self.order,
            [
                [intpoly.pad(intpoly.sub(a, b), self.order.n) for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ],
        )

    def __mul__(self, other):
        self._check(other)
        order = self.order
        n = order.n
        out = []
        for r in range(n):
            row = []
            for s in range(n):
                acc = (0,) * n
                for t in range(n):
                    acc = intpoly.pad(
                        intpoly.add(acc, order.ok_mul(self.entries[r][t], other.entries[t][s])),
                        n,
                    )
                row.append(acc)
            out.append(row)
        return SpaceTimeMatrix(order, out)

    def _check(self, other):
        if not isinstance(other, SpaceTimeMatrix) or other.order != self.order:
            raise ValueError("matrices belong to different orders")

    def __eq__(self, other):
        return (
            isinstance(other, SpaceTimeMatrix)
            and self.order == other.order
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash(self.entries)

    def det(self):
        """Determinant in O_K by cofactor expansion (exact)."""
        order = self.order

        def rec(rows):
            if len(rows) == 1:
                return rows[0][0]
            acc = (0,) * order.n
            for j, top in enumerate(rows[0]):
                if not any(top):
                    continue
                minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
                term = order.ok_mul(top, rec(minor))
                if j % 2:
                    term = tuple(-v for v in term)
                acc = intpoly.pad(intpoly.add(acc, term), order.n)
            return acc

        return rec([list(row) for row in self.entries])

    def norm_det(self) -> int:
        """The rational norm of the determinant."""
        return self.order.ok_norm(self.det())

    def to_lists(self):
        return [[list(e) for e in row] for row in self.entries]

    def __repr__(self):
        return f"SpaceTimeMatrix({self.to_lists()})"


def matrix_rep(a: OrderElement) -> SpaceTimeMatrix:
    """The codeword matrix M(a); requires the integer constant u of the order."""
    order = a.order
    n = order.n
    u = order.u
    entries = []
    for r in range(n):
        row = []
        for c in range(n):
            if r >= c:
                vec = order.ok_sigma(a.rows[r - c], c)
            else:
                vec = tuple(u * v for v in order.ok_sigma(a.rows[n - c + r], c))
            row.append(vec)
        entries.append(row)
    return SpaceTimeMatrix(order, entries)


def right_multiplication_det(a: OrderElement) -> int:
    """Determinant of right multiplication by a on the full order, over Z.

    Independent of matrix_rep; used to cross-check norm_det values.
    """
    order = a.order
    N = order.n * order.n
    cols = [(order.basis_element(i) * a).flatten() for i in range(N)]
    return det_int([[cols[j][i] for j in range(N)] for i in range(N)])


def min_det_sample(
    code: ConstacyclicCode,
    coeff_bound: int,
    *,
    seed: int = 0,
    samples: int = 2000,
    enumeration_bound: int = ENUMERATION_BOUND,
    exhaustive: bool | None = None,
) -> int:
    """Minimum |norm(det(M(a) - M(a')))| over distinct pairs of lattice points.

    Points are integer combinations of the code's lattice basis with
    coefficients in [-coeff_bound, coeff_bound].  When the coefficient box is
    small enough the sweep is exhaustive over all pairs, otherwise `samples`
    random pairs are drawn from a generator seeded with `seed`.  Strictly
    positive output is expected for division configurations; zero exhibits a
    concrete rank-deficient difference.
    """
    basis = construction_a_basis(code).basis
    cols = list(zip(*basis))
    N = len(cols)
    space = (2 * coeff_bound + 1) ** N
    if exhaustive is None:
        exhaustive = space <= enumeration_bound
    elif exhaustive and space > enumeration_bound:
        raise TooLarge(f"{space} box points exceeds bound {enumeration_bound}")
    order = NaturalOrder(code.ring.spec)

    def point(zs):
        flat = [0] * N
        for z, col in zip(zs, cols):
            if z:
                for i in range(N):
                    flat[i] += z * col[i]
        return order.from_flat(flat)

    best = None
    if exhaustive:
        mats = [
            matrix_rep(point(zs))
            for zs in product(range(-coeff_bound, coeff_bound + 1), repeat=N)
        ]
        pairs = combinations(range(len(mats)), 2)
        for i, j in pairs:
            if mats[i] == mats[j]:
                continue
            value = abs((mats[i] - mats[j]).norm_det())
            if best is None or value < best:
                best = value
            if best == 0:
                break
    else:
        rng = random.Random(seed)
        done = 0
        while done < samples:
            z1 = tuple(rng.randint(-coeff_bound, coeff_bound) for _ in range(N))
            z2 = tuple(rng.randint(-coeff_bound, coeff_bound) for _ in range(N))
            if z1 == z2:
                continue
            value = abs((matrix_rep(point(z1)) - matrix_rep(point(z2))).norm_det())
            if best is None or value < best:
                best = value
            done += 1
            if best == 0:
                break
    if best is None:
        raise ValueError("no distinct pairs available; increase coeff_bound")
    return best


@dataclass
class CosetEncoding:
    """A lattice point split as information codeword plus offset in p*order."""

    codeword: tuple
    offset: OrderElement
    point: OrderElement

    def to_dict(self):
        return {
            "codeword": [c.to_list() for c in self.codeword],
            "offset": self.offset.to_lists(),
            "point": self.point.to_lists(),
        }


def coset_encode(code: ConstacyclicCode, msg, offset_coords) -> CosetEncoding:
    """Map (information, randomness) to the lattice point lift(encode(msg)) +
    p * offset, with offset given by integer coordinates in the order basis."""
    order = NaturalOrder(code.ring.spec)
    N = order.n * order.n
    if len(offset_coords) != N:
        raise LengthMismatch(f"expected {N} offset coordinates")
    codeword = code.encode(msg)
    offset = order.from_flat([code.ring.p * int(c) for c in offset_coords])
    point = lift_codeword(order, codeword) + offset
    return CosetEncoding(codeword=codeword, offset=offset, point=point)


def coset_decode_label(code: ConstacyclicCode, point: OrderElement):
    """Recover (codeword, offset) from a lattice point; the offset lies in
    p*order.  Raises NotInLattice when the reduction is not a codeword."""
    codeword = reduce_element(point, code.ring)
    if not code.is_codeword(codeword):
        raise NotInLattice("point does not reduce to a codeword")
    offset = point - lift_codeword(point.order, codeword)
    return codeword, offset


def sample_offsets(seed: int, count: int, box: int, dims: int):
    """Deterministic uniform integer vectors in [-box, box]^dims."""
    rng = random.Random(seed)
    return [[rng.randint(-box, box) for _ in range(dims)] for _ in range(count)]
