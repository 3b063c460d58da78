"""Shared random generators for the test suite (seeded, deterministic)."""

from skewlat import SkewPoly


def random_element(ring, rng):
    return ring.element([rng.randrange(ring.p) for _ in range(ring.n)])


def random_poly(ring, rng, max_degree=4):
    degree = rng.randrange(max_degree + 1)
    return SkewPoly(ring, [random_element(ring, rng) for _ in range(degree + 1)])


def random_unit_lead_poly(ring, rng, max_degree=3):
    degree = rng.randrange(max_degree + 1)
    while True:
        lead = random_element(ring, rng)
        if lead.is_unit():
            break
    return SkewPoly(ring, [random_element(ring, rng) for _ in range(degree)] + [lead])


def random_message(code, rng):
    return [random_element(code.ring, rng) for _ in range(code.k)]
