# Internal polynomial helpers. A polynomial is a tuple of Fractions,
# lowest degree first, with no trailing zeros; () is the zero polynomial.
# Bivariate polynomials are tuples of univariate ones: entry i is the
# coefficient (a polynomial in the second variable) of the first
# variable raised to i.

from fractions import Fraction

ZERO = ()
ONE = (Fraction(1),)
VAR = (Fraction(0), Fraction(1))


def trim(coeffs):
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def const(q):
    q = Fraction(q)
    return (q,) if q != 0 else ZERO


def degree(p):
    # -1 for the zero polynomial
    return len(p) - 1


def lc(p):
    return p[-1]


def add(p, q):
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return trim(out)


def neg(p):
    return tuple(-c for c in p)


def sub(p, q):
    return add(p, neg(q))


def mul(p, q):
    if not p or not q:
        return ZERO
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return trim(out)


def scale(p, c):
    c = Fraction(c)
    if c == 0:
        return ZERO
    return tuple(a * c for a in p)


def mul_xk(p, k):
    if not p:
        return ZERO
    return (Fraction(0),) * k + p


def divmod_(p, q):
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p)
    quo = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    dq, cq = degree(q), lc(q)
    while len(rem) - 1 >= dq and any(c != 0 for c in rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) - 1 < dq:
            break
        shift = len(rem) - 1 - dq
        factor = rem[-1] / cq
        quo[shift] = factor
        for i, c in enumerate(q):
            rem[shift + i] -= factor * c
        rem.pop()
    return trim(quo), trim(rem)


def monic(p):
    if not p:
        return ZERO
    return tuple(c / lc(p) for c in p)


def gcd(p, q):
    a, b = p, q
    while b:
        a, b = b, divmod_(a, b)[1]
    return monic(a)


def eval_at(p, x):
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def compose(p, q):
    # p(q(x))
    acc = ZERO
    for c in reversed(p):
        acc = add(mul(acc, q), const(c))
    return acc


def pow_(p, n):
    acc = ONE
    for _ in range(n):
        acc = mul(acc, p)
    return acc


def cauchy_bound(p):
    # All real roots of p lie in [-B, B]; 0 for (near-)constant p.
    if degree(p) <= 0:
        return Fraction(0)
    top = abs(lc(p))
    worst = max(abs(c) for c in p[:-1])
    return 1 + worst / top


# -- bivariate layer ---------------------------------------------------

B_ZERO = ()
B_ONE = (ONE,)


def b_trim(polys):
    ps = list(polys)
    while ps and ps[-1] == ZERO:
        ps.pop()
    return tuple(ps)


def b_const(p):
    return (p,) if p else B_ZERO


def b_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, p in enumerate(b):
        out[i] = add(out[i], p)
    return b_trim(out)


def b_neg(a):
    return tuple(neg(p) for p in a)


def b_sub(a, b):
    return b_add(a, b_neg(b))


def b_mul(a, b):
    if not a or not b:
        return B_ZERO
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, p in enumerate(a):
        if p == ZERO:
            continue
        for j, q in enumerate(b):
            out[i + j] = add(out[i + j], mul(p, q))
    return b_trim(out)


def b_eval_first(a, x):
    # substitute a rational for the first variable
    x = Fraction(x)
    acc = ZERO
    for p in reversed(a):
        acc = add(scale(acc, x), p)
    return acc


def b_diag(a):
    # substitute the second variable for the first
    acc = ZERO
    for i, p in enumerate(a):
        acc = add(acc, mul_xk(p, i))
    return acc
