"""Exact rational arithmetic helpers.

All scalar arithmetic in this package is done with arbitrary-precision
rationals.  We use gmpy2's mpq when available (much faster) and fall back to
the stdlib Fraction otherwise; both expose .numerator/.denominator and keep
values reduced with a positive denominator.
"""

import math

try:
    from gmpy2 import mpq as Rat
    from gmpy2 import isqrt as _isqrt

    def _int_is_square(n):
        from gmpy2 import is_square
        return n >= 0 and is_square(n)

    HAVE_GMPY2 = True
except ImportError:  # pragma: no cover - exercised only without gmpy2
    from fractions import Fraction as Rat

    def _isqrt(n):
        return math.isqrt(n)

    def _int_is_square(n):
        return n >= 0 and math.isqrt(n) ** 2 == n

    HAVE_GMPY2 = False


QQ0 = Rat(0)
QQ1 = Rat(1)


def rat(value, den=None):
    """Coerce ints, strings like '-81/2', or rationals to Rat."""
    if den is not None:
        return Rat(value, den)
    if isinstance(value, str):
        return Rat(value)
    return Rat(value)


def rat_str(q):
    """Canonical 'p' or 'p/q' string."""
    q = Rat(q)
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


def int_sqrt(n):
    """Floor square root of a nonnegative int."""
    return int(_isqrt(n))


def is_int_square(n):
    return _int_is_square(int(n))


def rat_sqrt(q):
    """Exact square root of a rational, or None if q is not a square."""
    q = Rat(q)
    if q < 0:
        return None
    num, den = int(q.numerator), int(q.denominator)
    if not (_int_is_square(num) and _int_is_square(den)):
        return None
    return Rat(int(_isqrt(num)), int(_isqrt(den)))


def is_rat_square(q):
    return rat_sqrt(q) is not None


def factorize(n):
    """Prime factorization of a positive int by trial division.

    Inputs here are small (conic coefficients, discriminant supports), so
    trial division is entirely adequate.
    """
    n = int(n)
    assert n >= 1
    out = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        f += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def squarefree_part(n):
    """Squarefree s with n = s * t^2 (sign preserved); returns (s, t)."""
    n = int(n)
    assert n != 0
    sign = -1 if n < 0 else 1
    s, t = sign, 1
    for p, e in factorize(abs(n)).items():
        if e % 2:
            s *= p
        t *= p ** (e // 2)
    return s, t


def rat_squarefree_split(q):
    """Write a nonzero rational q as s * c^2 with s a squarefree integer.

    Returns (s, c) with c a positive rational.
    """
    q = Rat(q)
    assert q != 0
    n = int(q.numerator) * int(q.denominator)
    s, t = squarefree_part(n)
    # q = n / den^2 with n = s t^2, so q = s * (t/den)^2
    return s, Rat(t, int(q.denominator))


def is_prime(n):
    n = int(n)
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True

