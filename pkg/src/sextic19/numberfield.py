"""Exact arithmetic in Q and in towers of number fields.

Fields are either the rationals or an extension base[g]/(m(g)) with m monic
and squarefree over the base.  Corpus fields are Q[a]/(m) with deg m <= 6,
optionally with a quadratic generator on top (two-generator fields), and the
singularity analysis adjoins one more quadratic root when a curve's special
parameters live in a quadratic extension.

Raw element representations are kept deliberately plain so the inner loops
stay fast: an element of Q is an mpq, an element of an extension is a tuple
of base elements (power basis, low degree first).  The FieldElement wrapper
provides operator syntax on top of that.
"""

from .rationals import (
    QQ0,
    QQ1,
    Rat,
    int_sqrt,
    is_prime,
    rat,
    rat_sqrt,
    rat_str,
)


class FieldError(Exception):
    pass


class FieldMismatch(FieldError):
    pass


# ----------------------------------------------------------------------
# dense list-polynomial helpers over an arbitrary field (used for modulus
# reduction and extended-Euclid inversion; the public UniPoly class in
# polynomial.py builds on fields defined here, so this module keeps its own
# minimal kernel to avoid a circular import)


def _plist_normalize(field, coeffs):
    coeffs = list(coeffs)
    while coeffs and field.is_zero(coeffs[-1]):
        coeffs.pop()
    return coeffs


def _plist_divmod(field, num, den):
    num = list(num)
    dn = len(den) - 1
    inv_lead = field.inv(den[-1])
    quo = [field.zero] * max(0, len(num) - dn)
    while len(num) - 1 >= dn and num:
        if field.is_zero(num[-1]):
            num.pop()
            continue
        shift = len(num) - 1 - dn
        q = field.mul(num[-1], inv_lead)
        quo[shift] = q
        for i in range(dn + 1):
            num[shift + i] = field.sub(num[shift + i], field.mul(q, den[i]))
        num.pop()
    return quo, _plist_normalize(field, num)


def _plist_invmod(field, a, modulus):
    """Inverse of the polynomial a modulo `modulus` over `field`.

    Requires gcd(a, modulus) constant; the moduli used here are verified
    irreducible before an extension is built, so a nontrivial gcd is a bug.
    """
    r0, r1 = list(modulus), _plist_normalize(field, a)
    s0, s1 = [], [field.one]
    while r1:
        q, r = _plist_divmod(field, r0, r1)
        r0, r1 = r1, r
        # s0 - q*s1
        prod = [field.zero] * (len(q) + len(s1) - 1) if q and s1 else []
        for i, qi in enumerate(q):
            if field.is_zero(qi):
                continue
            for j, sj in enumerate(s1):
                prod[i + j] = field.add(prod[i + j], field.mul(qi, sj))
        ns = list(s0) + [field.zero] * max(0, len(prod) - len(s0))
        for i, pi in enumerate(prod):
            ns[i] = field.sub(ns[i], pi)
        s0, s1 = s1, _plist_normalize(field, ns)
    if len(r0) != 1:
        raise FieldError("modulus is reducible: gcd has degree %d" % (len(r0) - 1))
    c = field.inv(r0[0])
    return [field.mul(c, s) for s in s0]


# ----------------------------------------------------------------------


class RationalField:
    """The field Q.  Raw elements are mpq values."""

    base = None
    name = None
    degree = 1
    degree_over_q = 1

    def __init__(self):
        self.zero = QQ0
        self.one = QQ1

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def add(self, x, y):
        return x + y

    def sub(self, x, y):
        return x - y

    def mul(self, x, y):
        return x * y

    def neg(self, x):
        return -x

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("division by zero in QQ")
        return 1 / x

    def div(self, x, y):
        if y == 0:
            raise ZeroDivisionError("division by zero in QQ")
        return x / y

    def is_zero(self, x):
        return x == 0

    def eq(self, x, y):
        return x == y

    def from_int(self, n):
        return Rat(n)

    def from_rat(self, q):
        return Rat(q)

    def scalar_mul(self, q, x):
        return q * x

    def tower_chain(self):
        return [self]

    def coerce(self, x, src):
        if src == self:
            return x
        raise FieldMismatch("cannot coerce from %r to QQ" % (src,))

    def to_str(self, x):
        return rat_str(x)

    def random(self, rng, height=10):
        return Rat(rng.randint(-height, height), rng.randint(1, height))


QQ = RationalField()


class ExtensionField:
    """base[g]/(m(g)) with m monic squarefree over base.

    Raw elements are tuples of `degree` base elements in the power basis
    1, g, ..., g^(degree-1).
    """

    def __init__(self, base, modulus, name):
        modulus = list(modulus)
        if len(modulus) < 3:
            raise FieldError("extension degree must be at least 2")
        if not base.eq(modulus[-1], base.one):
            raise FieldError("modulus must be monic")
        self.base = base
        self.modulus = tuple(modulus)
        self.name = name
        self.degree = len(modulus) - 1
        self.degree_over_q = self.degree * base.degree_over_q
        d = self.degree
        self.zero = tuple([base.zero] * d)
        self.one = tuple([base.one] + [base.zero] * (d - 1))
        self.gen = tuple(
            [base.zero, base.one] + [base.zero] * (d - 2)
        ) if d >= 2 else None
        # reduction rows: g^(d+i) in the power basis, for i = 0..d-2
        rows = []
        cur = [base.neg(c) for c in modulus[:-1]]  # g^d
        rows.append(list(cur))
        for _ in range(d - 2):
            head = cur[-1]
            cur = [base.zero] + cur[:-1]
            for j in range(d):
                cur[j] = base.add(cur[j], base.mul(head, rows[0][j]))
            rows.append(list(cur))
        self._red = rows
        self._inv_cache = {}

    def __repr__(self):
        return "%r[%s]" % (self.base, self.name)

    def __eq__(self, other):
        return (
            isinstance(other, ExtensionField)
            and self.name == other.name
            and self.base == other.base
            and len(self.modulus) == len(other.modulus)
            and all(
                self.base.eq(a, b) for a, b in zip(self.modulus, other.modulus)
            )
        )

    def __hash__(self):
        return hash((self.name, self.degree, self.base))

    def add(self, x, y):
        b = self.base
        return tuple(b.add(xi, yi) for xi, yi in zip(x, y))

    def sub(self, x, y):
        b = self.base
        return tuple(b.sub(xi, yi) for xi, yi in zip(x, y))

    def neg(self, x):
        b = self.base
        return tuple(b.neg(xi) for xi in x)

    def mul(self, x, y):
        b = self.base
        d = self.degree
        full = [b.zero] * (2 * d - 1)
        for i, xi in enumerate(x):
            if b.is_zero(xi):
                continue
            for j, yj in enumerate(y):
                full[i + j] = b.add(full[i + j], b.mul(xi, yj))
        out = full[:d]
        for i in range(d, 2 * d - 1):
            hi = full[i]
            if b.is_zero(hi):
                continue
            row = self._red[i - d]
            for j in range(d):
                out[j] = b.add(out[j], b.mul(hi, row[j]))
        return tuple(out)

    def inv(self, x):
        if self.is_zero(x):
            raise ZeroDivisionError("division by zero in %r" % self)
        key = x
        cached = self._inv_cache.get(key)
        if cached is not None:
            return cached
        inv = _plist_invmod(self.base, list(x), list(self.modulus))
        inv = tuple(inv + [self.base.zero] * (self.degree - len(inv)))
        if len(self._inv_cache) < 4096:
            self._inv_cache[key] = inv
        return inv

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def is_zero(self, x):
        b = self.base
        return all(b.is_zero(xi) for xi in x)

    def eq(self, x, y):
        b = self.base
        return all(b.eq(xi, yi) for xi, yi in zip(x, y))

    def from_int(self, n):
        return tuple(
            [self.base.from_int(n)] + [self.base.zero] * (self.degree - 1)
        )

    def from_rat(self, q):
        return tuple(
            [self.base.from_rat(q)] + [self.base.zero] * (self.degree - 1)
        )

    def scalar_mul(self, q, x):
        b = self.base
        return tuple(b.scalar_mul(q, xi) for xi in x)

    def tower_chain(self):
        return self.base.tower_chain() + [self]

    def coerce(self, x, src):
        if src == self:
            return x
        if src in self.base.tower_chain():
            lifted = self.base.coerce(x, src)
            return tuple(
                [lifted] + [self.base.zero] * (self.degree - 1)
            )
        raise FieldMismatch("cannot coerce from %r to %r" % (src, self))

    def to_str(self, x):
        b = self.base
        parts = []
        for i, xi in enumerate(x):
            if b.is_zero(xi):
                continue
            cs = b.to_str(xi)
            if i == 0:
                parts.append(cs)
            else:
                mon = self.name if i == 1 else "%s^%d" % (self.name, i)
                if cs == "1":
                    parts.append(mon)
                elif cs == "-1":
                    parts.append("-" + mon)
                elif ("+" in cs[1:]) or ("-" in cs[1:]) or "*" in cs:
                    parts.append("(%s)*%s" % (cs, mon))
                else:
                    parts.append("%s*%s" % (cs, mon))
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def random(self, rng, height=10):
        return tuple(self.base.random(rng, height) for _ in range(self.degree))


def field_pow(field, x, n):
    n = int(n)
    if n < 0:
        return field_pow(field, field.inv(x), -n)
    out = field.one
    acc = x
    while n:
        if n & 1:
            out = field.mul(out, acc)
        acc = field.mul(acc, acc)
        n >>= 1
    return out


def coerce_into(field, value, src=None):
    """Coerce ints/rationals/raw reps into `field` raw representation."""
    if src is not None:
        return field.coerce(value, src)
    if isinstance(value, FieldElement):
        return field.coerce(value.rep, value.field)
    if isinstance(value, int):
        return field.from_int(value)
    return field.from_rat(Rat(value))


class FieldElement:
    """Operator-friendly wrapper around a raw field representation."""

    __slots__ = ("field", "rep")

    def __init__(self, field, rep):
        self.field = field
        self.rep = rep

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.field == self.field:
                return other.rep
            return self.field.coerce(other.rep, other.field)
        if isinstance(other, (int, Rat)) or type(other).__name__ == "Fraction":
            return coerce_into(self.field, other)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field.add(self.rep, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(self.rep, o))

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(o, self.rep))

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field.mul(self.rep, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field.div(self.rep, o))

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field.div(o, self.rep))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.rep))

    def __pow__(self, n):
        return FieldElement(self.field, field_pow(self.field, self.rep, n))

    def __eq__(self, other):
        try:
            return self.field.eq(self.rep, self._other(other))
        except FieldMismatch:
            return NotImplemented

    def __hash__(self):
        return hash((self.field, self.rep))

    def is_zero(self):
        return self.field.is_zero(self.rep)

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.rep))

    def __repr__(self):
        return self.field.to_str(self.rep)


def element(field, value):
    return FieldElement(field, coerce_into(field, value))


def generator(field):
    if not isinstance(field, ExtensionField):
        raise FieldError("QQ has no generator")
    return FieldElement(field, field.gen)


# ----------------------------------------------------------------------
# construction helpers


def minpoly_is_squarefree(coeffs):
    """gcd(m, m') constant test for a monic rational polynomial."""
    f = [Rat(c) for c in coeffs]
    g = [Rat(i) * f[i] for i in range(1, len(f))]

    def norm(p):
        while p and p[-1] == 0:
            p.pop()
        return p

    a, b = norm(list(f)), norm(list(g))
    while b:
        # a mod b
        a = list(a)
        while len(a) >= len(b):
            if a[-1] == 0:
                a.pop()
                continue
            q = a[-1] / b[-1]
            s = len(a) - len(b)
            for i in range(len(b)):
                a[s + i] -= q * b[i]
            a.pop()
        a, b = b, norm(a)
    return len(a) == 1


def number_field(minpoly, name="a"):
    """Q[name]/(m) for a monic squarefree rational minpoly (low-first coeffs)."""
    coeffs = [rat(c) for c in minpoly]
    if coeffs[-1] != 1:
        raise FieldError("minimal polynomial must be monic")
    if len(coeffs) - 1 < 1 or len(coeffs) - 1 > 6:
        raise FieldError("supported degrees are 1..6")
    if len(coeffs) == 2:
        return QQ
    if not minpoly_is_squarefree(coeffs):
        raise FieldError("minimal polynomial is not squarefree")
    return ExtensionField(QQ, coeffs, name)


def extend(base, minpoly_over_base, name):
    """base[name]/(m) for monic m with coefficients already in `base`."""
    return ExtensionField(base, minpoly_over_base, name)


def build_tower(generators):
    """Build Q(g1)(g2)... from [(name, rational minpoly coeffs), ...]."""
    field = QQ
    for name, mp in generators:
        coeffs = [coerce_into(field, rat(c)) for c in mp]
        field = ExtensionField(field, coeffs, name)
    return field


# ----------------------------------------------------------------------
# exact square roots / squareness decisions


def _sqrt_quadratic_ext(field, x):
    """Square root in a quadratic extension via reduction to the base field."""
    base = field.base
    half = base.from_rat(Rat(1, 2))
    b1, b0 = field.modulus[1], field.modulus[0]
    # centered generator h = g + B/2 with h^2 = e = B^2/4 - C
    e = base.sub(base.mul(base.mul(b1, b1), base.mul(half, half)), b0)
    # x = y0 + y1*h with y1 = x[1], y0 = x[0] - x[1]*B/2
    y1 = x[1]
    y0 = base.sub(x[0], base.mul(x[1], base.mul(b1, half)))

    def back(u, v):
        # u + v*h = (u + v*B/2) + v*g
        return (base.add(u, base.mul(v, base.mul(b1, half))), v)

    if base.is_zero(y1):
        r = field_sqrt(base, y0)
        if r is not None:
            return back(r, base.zero)
        if base.is_zero(y0):
            return field.zero
        r = field_sqrt(base, base.div(y0, e))
        if r is not None:
            return back(base.zero, r)
        return None
    # (u + v h)^2 = u^2 + v^2 e + 2uv h
    nrm = field_sqrt(base, base.sub(base.mul(y0, y0), base.mul(e, base.mul(y1, y1))))
    if nrm is None:
        return None
    for sgn in (nrm, base.neg(nrm)):
        w = base.div(base.mul(base.add(y0, sgn), half), e)
        v = field_sqrt(base, w)
        if v is not None and not base.is_zero(v):
            u = base.mul(base.div(y1, v), half)
            return back(u, v)
    return None


def _mod_inverse(a, m):
    return pow(a % m, -1, m)


def _tonelli_shanks(n, p):
    """Square root of n mod odd prime p, or None for a non-residue."""
    n %= p
    if n == 0:
        return 0
    if pow(n, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        return pow(n, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(n, q, p), pow(n, (q + 1) // 2, p)
    while t != 1:
        t2, i = t, 0
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def _rational_reconstruct(c, modulus):
    """Recover p/q from c mod modulus with |p|, q <= sqrt(modulus/2)."""
    bound = int_sqrt(modulus // 2)
    r0, r1 = modulus, c % modulus
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    num, den = r1, s1
    if den < 0:
        num, den = -num, -den
    from math import gcd

    if gcd(abs(num), den) != 1:
        return None
    return Rat(num, den)


def _poly_mod_p(coeffs, p):
    out = []
    for c in coeffs:
        den = int(c.denominator) % p
        if den == 0:
            return None
        out.append(int(c.numerator) % p * _mod_inverse(den, p) % p)
    return out


def _eval_mod(coeffs_mod, r, p):
    acc = 0
    for c in reversed(coeffs_mod):
        acc = (acc * r + c) % p
    return acc


def _sqrt_simple_ext(field, x):
    """Square root in Q[a]/(m), deg m >= 3, decided through degree-one primes.

    Any prime with a simple root of m gives a residue map to F_p; a
    non-residue value there certifies x is not a square, and for a genuine
    non-square such a witness prime exists (take a Frobenius class fixing
    the field but moving sqrt(x) in the Galois closure).  At completely
    split primes the root values are Hensel-lifted, the coordinate vector is
    solved from the Vandermonde system mod p^k over all sign choices,
    rationally reconstructed, and verified exactly.
    """
    d = field.degree
    mc = list(field.modulus)
    xs = list(x)
    p = 101
    while True:
        p += 2
        if p > 2_000_000:  # pragma: no cover - safety stop
            raise FieldError(
                "square decision did not converge for %s" % field.to_str(x)
            )
        if not is_prime(p):
            continue
        m_mod = _poly_mod_p(mc, p)
        x_mod = _poly_mod_p(xs, p)
        if m_mod is None or x_mod is None:
            continue
        roots = [r for r in range(p) if _eval_mod(m_mod, r, p) == 0]
        if not roots:
            continue
        mder_mod = [(i * c) % p for i, c in enumerate(m_mod)][1:]
        roots = [r for r in roots if _eval_mod(mder_mod, r, p) != 0]
        vals = [_eval_mod(x_mod, r, p) for r in roots]
        pairs = [(r, v) for r, v in zip(roots, vals) if v != 0]
        for _r, v in pairs:
            if pow(v, (p - 1) // 2, p) != 1:
                return None  # certified non-square at a degree-one prime
        if len(pairs) != d:
            continue
        sqrts = [_tonelli_shanks(v, p) for _r, v in pairs]
        result = _try_reconstruct_sqrt(
            field, xs, mc, p, [r for r, _v in pairs], sqrts
        )
        if result is not None:
            return result


def _try_reconstruct_sqrt(field, xs, mc, p, roots, sqrts):
    d = field.degree
    mder = [(i * int(c.numerator) % p) * _mod_inverse(int(c.denominator), p) % p
            for i, c in enumerate(mc)][1:]
    for k in (6, 12, 24, 48, 96):
        M = p ** k
        # lift roots of m to mod M by Newton iteration
        lroots = []
        for r in roots:
            rr, prec = r, 1
            while prec < k:
                prec = min(2 * prec, k)
                mm = p ** prec
                num = _eval_rat_poly_mod(mc, rr, mm)
                den = _eval_rat_poly_mod(
                    [Rat(i) * mc[i] for i in range(1, len(mc))], rr, mm
                )
                rr = (rr - num * _mod_inverse(den, mm)) % mm
            lroots.append(rr)
        # lift square roots by Newton iteration on s^2 = x(root)
        lsq = []
        for r, s in zip(lroots, sqrts):
            ss, prec = s, 1
            while prec < k:
                prec = min(2 * prec, k)
                mm = p ** prec
                val = _eval_rat_poly_mod(xs, r % mm, mm)
                ss = (ss + val * _mod_inverse(ss, mm)) % mm
                ss = ss * _mod_inverse(2, mm) % mm
            lsq.append(ss)
        for mask in range(1 << (d - 1)):
            targets = [lsq[0]]
            for i in range(1, d):
                targets.append(M - lsq[i] if (mask >> (i - 1)) & 1 else lsq[i])
            coords = _solve_vandermonde_mod(lroots, targets, M, p)
            if coords is None:
                continue
            cand = []
            ok = True
            for c in coords:
                q = _rational_reconstruct(c, M)
                if q is None:
                    ok = False
                    break
                cand.append(q)
            if not ok:
                continue
            rep = tuple(cand)
            if field.eq(field.mul(rep, rep), tuple(xs)):
                return rep
    return None


def _eval_rat_poly_mod(coeffs, r, m):
    acc = 0
    for c in reversed(coeffs):
        cv = int(c.numerator) % m * _mod_inverse(int(c.denominator) % m, m) % m
        acc = (acc * r + cv) % m
    return acc


def _solve_vandermonde_mod(nodes, values, M, p):
    """Solve sum_j c_j * r_i^j = v_i mod M (nodes distinct mod p)."""
    d = len(nodes)
    rows = [[pow(r, j, M) for j in range(d)] + [v] for r, v in zip(nodes, values)]
    for col in range(d):
        piv = None
        for i in range(col, d):
            if rows[i][col] % p != 0:
                piv = i
                break
        if piv is None:
            return None
        rows[col], rows[piv] = rows[piv], rows[col]
        inv = _mod_inverse(rows[col][col], M)
        rows[col] = [v * inv % M for v in rows[col]]
        for i in range(d):
            if i != col and rows[i][col]:
                f = rows[i][col]
                rows[i] = [(a - f * b) % M for a, b in zip(rows[i], rows[col])]
    return [rows[i][d] for i in range(d)]


def field_sqrt(field, x):
    """Exact square root of a raw element, or None if x is not a square."""
    if field == QQ:
        return rat_sqrt(x)
    if field.is_zero(x):
        return field.zero
    if field.degree == 2:
        return _sqrt_quadratic_ext(field, x)
    if field.base == QQ:
        return _sqrt_simple_ext(field, x)
    raise FieldError("square roots implemented over Q-towers with quadratic tops")


def is_square(field, x):
    return field_sqrt(field, x) is not None


# ----------------------------------------------------------------------


def adjoin_root(base_field, quad, name="th"):
    """Adjoin a root of a squarefree polynomial of degree <= 3 over base_field.

    `quad` is a low-first list of raw base_field elements.  Returns
    (field, roots) where `roots` lists every root representable in `field`:
    both roots for a quadratic (split or not), the distinguished root only
    for an irreducible cubic over Q.
    """
    coeffs = [c for c in quad]
    while coeffs and base_field.is_zero(coeffs[-1]):
        coeffs.pop()
    deg = len(coeffs) - 1
    if deg == 1:
        root = base_field.neg(base_field.div(coeffs[0], coeffs[1]))
        return base_field, [root]
    if deg == 2:
        a2, a1, a0 = coeffs[2], coeffs[1], coeffs[0]
        inv2 = base_field.inv(a2)
        b = base_field.mul(a1, inv2)
        c = base_field.mul(a0, inv2)
        disc = base_field.sub(
            base_field.mul(b, b), base_field.scalar_mul(Rat(4), c)
        )
        if base_field.is_zero(disc):
            raise FieldError("quadratic is not squarefree")
        s = field_sqrt(base_field, disc)
        half = base_field.from_rat(Rat(1, 2))
        if s is not None:
            r1 = base_field.mul(base_field.sub(s, b), half)
            r2 = base_field.mul(base_field.sub(base_field.neg(s), b), half)
            return base_field, [r1, r2]
        ext = ExtensionField(base_field, [c, b, base_field.one], name)
        th = ext.gen
        other = ext.sub(ext.neg(ext.coerce(b, base_field)), th)
        return ext, [th, other]
    if deg == 3 and base_field == QQ:
        a3 = coeffs[3]
        mon = [c / a3 for c in coeffs]
        # rational root test decides reducibility for a cubic; scale to
        # integer coefficients to enumerate candidate roots p/q
        from math import lcm

        L = lcm(*(int(c.denominator) for c in mon))
        ic = [int(c * L) for c in mon]  # L*mon, integer
        # roots p/q with q | L and p | ic[0]
        if ic[0] == 0:
            return base_field, [QQ0]
        divs_p = _divisors(abs(ic[0]))
        divs_q = _divisors(L)
        for pp in divs_p:
            for qq in divs_q:
                for sgn in (1, -1):
                    r = Rat(sgn * pp, qq)
                    if _eval_rat(mon, r) == 0:
                        return base_field, [r]
        ext = ExtensionField(base_field, mon, name)
        return ext, [ext.gen]
    raise FieldError("adjoin_root supports degree 2 generally, degree 3 over Q")


def _divisors(n):
    out = []
    f = 1
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            if f != n // f:
                out.append(n // f)
        f += 1
    return sorted(out)


def _eval_rat(coeffs, r):
    acc = Rat(0)
    for c in reversed(coeffs):
        acc = acc * r + c
    return acc
