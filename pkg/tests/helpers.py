"""Shared random generators for the test suite (deterministic seeds)."""

from fractions import Fraction

from hyperq.germ import Germ


def random_fraction(rng, span=9):
    return Fraction(rng.randint(-span, span), rng.randint(1, span))


def random_poly(rng, max_deg=2, span=9):
    deg = rng.randint(0, max_deg)
    coeffs = [random_fraction(rng, span) for _ in range(deg + 1)]
    return tuple(coeffs)


def random_germ(rng, max_deg=2, nonzero=False, span=9):
    while True:
        num = random_poly(rng, max_deg, span)
        den = random_poly(rng, max_deg, span)
        if not any(c != 0 for c in den):
            continue
        g = Germ(num, den)
        if nonzero and g.is_zero():
            continue
        return g


def random_limited_germ(rng, max_deg=2, nonzero=False):
    while True:
        g = random_germ(rng, max_deg, nonzero=nonzero)
        num_deg = len(g.num) - 1
        den_deg = len(g.den) - 1
        if g.is_zero() or num_deg <= den_deg:
            if not (nonzero and g.is_zero()):
                return g


def random_natural_germ(rng, max_deg=2):
    # integer coefficients, eventually nonnegative
    deg = rng.randint(0, max_deg)
    coeffs = [Fraction(rng.randint(-5, 5)) for _ in range(deg + 1)]
    g = Germ(tuple(coeffs))
    if g.is_zero():
        return g
    from hyperq.germ import ZERO, compare

    return g if compare(g, ZERO) >= 0 else -g
