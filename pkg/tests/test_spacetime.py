import random
from math import sqrt

import pytest

from skewlat import (
    ConstacyclicCode,
    NaturalOrder,
    SkewPoly,
    coset_decode_label,
    coset_encode,
    matrix_rep,
    min_det_sample,
    reduce_element,
    right_multiplication_det,
    sample_offsets,
)
from skewlat.errors import LengthMismatch, NotInLattice, TooLarge
from skewlat.fixtures import FIXTURE_SPECS, GAUSSIAN_P3_U1, fixture_code
from skewlat.number_ring import QuotientRing

from helpers import random_message

QUATERNION = FIXTURE_SPECS["gaussian-p3-inert"]


def random_order_element(order, rng, span=5):
    return order.element(
        [[rng.randrange(-span, span + 1) for _ in range(order.n)] for _ in range(order.n)]
    )


def test_quaternion_matrix_form():
    order = NaturalOrder(QUATERNION)
    rng = random.Random(1)
    for _ in range(100):
        a = [rng.randrange(-5, 6), rng.randrange(-5, 6)]
        b = [rng.randrange(-5, 6), rng.randrange(-5, 6)]
        m = matrix_rep(order.element([a, b]))
        conj = lambda v: (v[0], -v[1])
        assert m.entries == (
            (tuple(a), tuple(-c for c in conj(b))),
            (tuple(b), conj(a)),
        )


def test_identity_matrix():
    order = NaturalOrder(QUATERNION)
    m = matrix_rep(order.one)
    assert m.entries == (((1, 0), (0, 0)), ((0, 0), (1, 0)))


def test_matrix_rep_additive_and_reverses_products():
    order = NaturalOrder(QUATERNION)
    rng = random.Random(2)
    for _ in range(300):
        q1 = random_order_element(order, rng)
        q2 = random_order_element(order, rng)
        assert matrix_rep(q1 + q2) == matrix_rep(q1) + matrix_rep(q2)
        # the pinned matrix layout reverses products
        assert matrix_rep(q1 * q2) == matrix_rep(q2) * matrix_rep(q1)


def test_matrix_rep_injectivity_witness():
    order = NaturalOrder(QUATERNION)
    zero = matrix_rep(order.zero)
    rng = random.Random(3)
    for _ in range(200):
        q = random_order_element(order, rng)
        assert (matrix_rep(q) == zero) == (q == order.zero)


def test_worked_product_matrix():
    """(a + be)(1+i+e) has the displayed codeword matrix, for concrete a, b."""
    order = NaturalOrder(QUATERNION)
    gen = order.element([[1, 1], [1, 0]])  # 1 + i + e
    rng = random.Random(4)
    for _ in range(100):
        a0, a1, b0, b1 = (rng.randrange(-5, 6) for _ in range(4))
        q = order.element([[a0, a1], [b0, b1]])
        t = q * gen
        # a(1+i) - b  and  a + b(1 - i), with conjugates in the second column
        assert t.rows[0] == (a0 - a1 - b0, a0 + a1 - b1)
        assert t.rows[1] == (a0 + b0 + b1, a1 - b0 + b1)
        m = matrix_rep(t)
        top_right = (-(a0 + b0 + b1), a1 - b0 + b1)  # -(conj(a) + conj(b)(1+i))
        assert m.entries[0][1] == top_right
        assert m.entries[1][1] == (a0 - a1 - b0, -(a0 + a1 - b1))
        assert matrix_rep(t) == matrix_rep(gen) * matrix_rep(q)


def test_determinant_two_ways():
    order = NaturalOrder(QUATERNION)
    rng = random.Random(5)
    for _ in range(60):
        q = random_order_element(order, rng, span=3)
        assert right_multiplication_det(q) == order.ok_norm(matrix_rep(q).det())


def test_min_det_positive_for_division_configuration():
    value = min_det_sample(fixture_code("gaussian-p3-inert"), 1)
    assert value > 0


def test_min_det_zero_for_zero_divisor_configuration():
    ring = QuotientRing(GAUSSIAN_P3_U1)
    code = ConstacyclicCode.from_generator(SkewPoly.one(ring))
    assert min_det_sample(code, 1) == 0
    # witness: 1 + e is a zero divisor when e^2 = 1
    order = NaturalOrder(GAUSSIAN_P3_U1)
    m = matrix_rep(order.element([[1, 0], [1, 0]]))
    assert m.entries == (((1, 0), (1, 0)), ((1, 0), (1, 0)))
    assert order.ok_norm(m.det()) == 0


def test_min_det_sampled_mode_is_deterministic():
    code = fixture_code("gaussian-p3-inert")
    kw = dict(seed=99, samples=40, enumeration_bound=10)
    assert min_det_sample(code, 2, **kw) == min_det_sample(code, 2, **kw)
    with pytest.raises(TooLarge):
        min_det_sample(code, 2, enumeration_bound=10, exhaustive=True)


def test_coset_encode_examples():
    code = fixture_code("gaussian-p3-inert")
    ring = code.ring
    order = NaturalOrder(QUATERNION)
    enc = coset_encode(code, [ring.one], [0, 0, 0, 0])
    assert enc.point == order.element([[1, 1], [1, 0]])  # 1 + i + e
    assert enc.offset == order.zero

    enc0 = coset_encode(code, [ring.zero], [0, 0, 0, 0])
    assert enc0.point == order.zero

    enc1 = coset_encode(code, [ring.one], [1, 0, 0, 0])
    assert enc1.point == order.element([[4, 1], [1, 0]])  # 4 + i + e
    with pytest.raises(LengthMismatch):
        coset_encode(code, [ring.one], [0, 0])


def test_coset_decode_examples():
    code = fixture_code("gaussian-p3-inert")
    ring = code.ring
    order = NaturalOrder(QUATERNION)
    cw, off = coset_decode_label(code, order.element([[1, 1], [1, 0]]))
    assert cw == (ring.gen + 1, ring.one)
    assert off == order.zero

    w = order.element([[2, -1], [7, 0]])
    cw0, off0 = coset_decode_label(code, 3 * w)
    assert all(not c for c in cw0)
    assert off0 == 3 * w

    with pytest.raises(NotInLattice):
        coset_decode_label(code, order.element([[1, 1], [0, 0]]))  # 1 + i


def test_coset_round_trip(fixture_name):
    code = fixture_code(fixture_name)
    ring = code.ring
    N = code.n * code.n
    rng = random.Random(6)
    for _ in range(100):
        msg = random_message(code, rng)
        offset = [rng.randrange(-4, 5) for _ in range(N)]
        enc = coset_encode(code, msg, offset)
        assert reduce_element(enc.point, ring) == enc.codeword
        assert all(v % ring.p == 0 for row in enc.offset.rows for v in row)
        cw, off = coset_decode_label(code, enc.point)
        assert cw == enc.codeword == code.encode(msg)
        assert off == enc.offset


def test_sample_offsets_contract():
    assert sample_offsets(5, 0, 3, 4) == []
    assert sample_offsets(5, 10, 3, 4) == sample_offsets(5, 10, 3, 4)
    assert sample_offsets(5, 10, 3, 4) != sample_offsets(6, 10, 3, 4)
    draws = sample_offsets(5, 50, 2, 4)
    assert all(len(v) == 4 and all(-2 <= c <= 2 for c in v) for v in draws)


def test_sample_offsets_uniformity_within_five_sigma():
    box = 3
    count = 10**4
    dims = 4
    draws = sample_offsets(12345, count, box, dims)
    total = count * dims
    prob = 1 / (2 * box + 1)
    expected = total * prob
    sigma = sqrt(total * prob * (1 - prob))
    for value in range(-box, box + 1):
        observed = sum(v.count(value) for v in draws)
        assert abs(observed - expected) < 5 * sigma
