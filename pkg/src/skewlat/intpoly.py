"""Dense integer polynomials as coefficient tuples, constant term first.

Arbitrary precision throughout; reduction is only supported modulo monic
polynomials so every operation stays in Z.
"""


def trim(coeffs):
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(coeffs):
    return len(trim(coeffs)) - 1


def pad(coeffs, length):
    c = tuple(coeffs)
    if len(c) > length:
        raise ValueError(f"cannot pad length-{len(c)} polynomial to {length}")
    return c + (0,) * (length - len(c))


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] += v
    return trim(out)


def neg(a):
    return tuple(-v for v in a)


def sub(a, b):
    return add(a, neg(b))


def mul(a, b):
    a, b = trim(a), trim(b)
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return trim(out)


def mod_monic(a, m):
    """Remainder of a modulo the monic polynomial m, computed over Z."""
    m = trim(m)
    if not m or m[-1] != 1:
        raise ValueError("modulus must be monic")
    n = len(m) - 1
    out = list(a)
    for d in range(len(out) - 1, n - 1, -1):
        c = out[d]
        if c:
            for j in range(n):
                out[d - n + j] -= c * m[j]
            out[d] = 0
    return trim(out[:n])


def compose(f, g):
    """f(g(y)) by Horner evaluation."""
    f = trim(f)
    if not f:
        return ()
    out = (f[-1],)
    for c in reversed(f[:-1]):
        out = add(mul(out, g), (c,))
    return out


def compose_mod(f, g, m):
    return mod_monic(compose(f, g), m)


def eval_at(coeffs, x):
    out = 0
    for c in reversed(coeffs):
        out = out * x + c
    return out
