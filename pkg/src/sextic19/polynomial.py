"""Dense univariate and trivariate polynomial arithmetic over a field.

UniPoly holds coefficients low-degree-first as raw field representations.
TriPoly holds homogeneous-or-not trivariate polynomials as a term map.
Resultants come in three flavours: a remainder-sequence resultant over a
field (the workhorse), a fraction-free Sylvester/Bareiss determinant over
any ring with exact division (used for trivariate resultants), and
interpolation drivers for bivariate eliminations where only specialized
field resultants are ever computed.
"""

from .numberfield import QQ, field_pow
from .rationals import Rat


class PolynomialError(Exception):
    pass


class InexactDivision(PolynomialError):
    pass


class UniPoly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs, normalize=True):
        if normalize:
            coeffs = list(coeffs)
            while coeffs and field.is_zero(coeffs[-1]):
                coeffs.pop()
            coeffs = tuple(coeffs)
        self.field = field
        self.coeffs = tuple(coeffs)

    # -- constructors

    @classmethod
    def zero(cls, field):
        return cls(field, (), normalize=False)

    @classmethod
    def one(cls, field):
        return cls(field, (field.one,), normalize=False)

    @classmethod
    def x(cls, field):
        return cls(field, (field.zero, field.one), normalize=False)

    @classmethod
    def const(cls, field, c):
        return cls(field, (c,))

    @classmethod
    def from_ints(cls, field, ints):
        return cls(field, [field.from_int(n) for n in ints])

    # -- basic queries

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def lc(self):
        if not self.coeffs:
            raise PolynomialError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero

    def __eq__(self, other):
        return (
            isinstance(other, UniPoly)
            and self.field == other.field
            and len(self.coeffs) == len(other.coeffs)
            and all(self.field.eq(a, b) for a, b in zip(self.coeffs, other.coeffs))
        )

    def __hash__(self):
        return hash((self.field, self.coeffs))

    # -- ring operations

    def __add__(self, other):
        f = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = f.add(out[i], c)
        return UniPoly(f, out)

    def __sub__(self, other):
        f = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        out = []
        for i in range(n):
            out.append(f.sub(self.coeff(i), other.coeff(i)))
        return UniPoly(f, out)

    def __neg__(self):
        f = self.field
        return UniPoly(f, [f.neg(c) for c in self.coeffs], normalize=False)

    def __mul__(self, other):
        f = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly.zero(f)
        out = [f.zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if f.is_zero(ai):
                continue
            for j, bj in enumerate(b):
                out[i + j] = f.add(out[i + j], f.mul(ai, bj))
        return UniPoly(f, out)

    def scale(self, c):
        f = self.field
        if f.is_zero(c):
            return UniPoly.zero(f)
        return UniPoly(f, [f.mul(c, x) for x in self.coeffs], normalize=False)

    def shift_up(self, k):
        """Multiply by t^k."""
        if self.is_zero():
            return self
        return UniPoly(self.field, (self.field.zero,) * k + self.coeffs,
                       normalize=False)

    def __pow__(self, n):
        out = UniPoly.one(self.field)
        acc = self
        n = int(n)
        while n:
            if n & 1:
                out = out * acc
            acc = acc * acc
            n >>= 1
        return out

    def derivative(self):
        f = self.field
        return UniPoly(
            f, [f.scalar_mul(Rat(i), self.coeffs[i]) for i in range(1, len(self.coeffs))]
        )

    def eval(self, x):
        f = self.field
        acc = f.zero
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, x), c)
        return acc

    def compose(self, other):
        """self(other(t))."""
        f = self.field
        acc = UniPoly.zero(f)
        for c in reversed(self.coeffs):
            acc = acc * other + UniPoly.const(f, c)
        return acc

    def taylor_shift(self, t0):
        """self(t + t0)."""
        f = self.field
        shift = UniPoly(f, (t0, f.one))
        return self.compose(shift)

    def reverse(self, n=None):
        """t^n * self(1/t); n defaults to the degree."""
        if self.is_zero():
            return self
        if n is None:
            n = self.degree
        if n < self.degree:
            raise PolynomialError("reverse needs n >= degree")
        pad = (self.field.zero,) * (n - self.degree)
        return UniPoly(self.field, pad + tuple(reversed(self.coeffs)))

    def divmod(self, other):
        f = self.field
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        num = list(self.coeffs)
        den = other.coeffs
        dn = len(den) - 1
        inv_lead = f.inv(den[-1])
        if len(num) - 1 < dn:
            return UniPoly.zero(f), self
        quo = [f.zero] * (len(num) - dn)
        while len(num) - 1 >= dn and num:
            if f.is_zero(num[-1]):
                num.pop()
                continue
            s = len(num) - 1 - dn
            q = f.mul(num[-1], inv_lead)
            quo[s] = q
            for i in range(dn + 1):
                num[s + i] = f.sub(num[s + i], f.mul(q, den[i]))
            num.pop()
        return UniPoly(f, quo), UniPoly(f, num)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other):
        q, r = self.divmod(other)
        if not r.is_zero():
            raise InexactDivision("division had a nonzero remainder")
        return q

    def monic(self):
        if self.is_zero():
            return self
        return self.scale(self.field.inv(self.lc()))

    def map_field(self, new_field):
        if new_field == self.field:
            return self
        return UniPoly(
            new_field,
            [new_field.coerce(c, self.field) for c in self.coeffs],
            normalize=False,
        )

    def to_str(self, var="t"):
        f = self.field
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeff(i)
            if f.is_zero(c):
                continue
            cs = f.to_str(c)
            if i == 0:
                parts.append(cs)
                continue
            mon = var if i == 1 else "%s^%d" % (var, i)
            if cs == "1":
                parts.append(mon)
            elif cs == "-1":
                parts.append("-" + mon)
            else:
                if ("+" in cs[1:]) or ("-" in cs[1:]) or "*" in cs or "/" in cs:
                    cs = "(%s)" % cs
                parts.append("%s*%s" % (cs, mon))
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self):
        return self.to_str()


def poly_gcd(a, b):
    """Monic gcd over the coefficient field."""
    if a.is_zero() and b.is_zero():
        raise PolynomialError("gcd(0, 0) undefined")
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def resultant(a, b):
    """Classical resultant of two nonzero univariate polynomials.

    Remainder-sequence algorithm over the coefficient field; exact.
    """
    f = a.field
    if a.is_zero() or b.is_zero():
        raise PolynomialError("resultant needs nonzero inputs")
    m, n = a.degree, b.degree
    if m == 0 and n == 0:
        return f.one
    if m == 0:
        return field_pow(f, a.lc(), n)
    if n == 0:
        return field_pow(f, b.lc(), m)
    sign_flip = (m % 2 == 1) and (n % 2 == 1)
    if m < n:
        inner = resultant(b, a)
        return f.neg(inner) if sign_flip else inner
    r = a % b
    if r.is_zero():
        return f.zero
    lead = field_pow(f, b.lc(), m - r.degree)
    inner = resultant(b, r)
    out = f.mul(lead, inner)
    return f.neg(out) if sign_flip else out


def discriminant(a):
    """(-1)^(n(n-1)/2) * Res(a, a') / lc(a)."""
    f = a.field
    n = a.degree
    if n < 1:
        raise PolynomialError("discriminant needs degree >= 1")
    da = a.derivative()
    if da.is_zero():
        return f.zero
    res = resultant(a, da)
    res = f.div(res, a.lc())
    if (n * (n - 1) // 2) % 2:
        res = f.neg(res)
    return res


def squarefree_decomposition(a):
    """Yun's algorithm.  Returns (lc, [(monic factor, multiplicity), ...])."""
    f = a.field
    if a.is_zero():
        raise PolynomialError("squarefree decomposition of zero")
    lead = a.lc()
    a = a.monic()
    if a.degree == 0:
        return lead, []
    g = poly_gcd(a, a.derivative())
    out = []
    c = a.exact_div(g)
    d = a.derivative().exact_div(g) - c.derivative()
    i = 1
    while c.degree > 0:
        ai = poly_gcd(c, d) if not d.is_zero() else c.monic()
        if ai.degree > 0:
            out.append((ai, i))
        c = c.exact_div(ai)
        d = d.exact_div(ai) - c.derivative()
        i += 1
    return lead, out


def squarefree_odd_even_split(a):
    """Write a = lc * O * S^2 with O the monic product of odd-multiplicity
    factors and S monic.  Returns (lc, O, S)."""
    lead, parts = squarefree_decomposition(a)
    f = a.field
    odd = UniPoly.one(f)
    even = UniPoly.one(f)
    for fac, mult in parts:
        if mult % 2:
            odd = odd * fac
        even = even * fac ** (mult // 2)
    return lead, odd, even


def lagrange_interpolate(field, xs, ys):
    """Interpolating polynomial through (xs[i], ys[i]) by Newton differences."""
    n = len(xs)
    coeffs = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            num = field.sub(coeffs[i], coeffs[i - 1])
            den = field.sub(xs[i], xs[i - j])
            coeffs[i] = field.div(num, den)
    # Newton form to dense coefficients
    poly = UniPoly.zero(field)
    for i in range(n - 1, -1, -1):
        node = UniPoly(field, (field.neg(xs[i]), field.one))
        poly = poly * node + UniPoly.const(field, coeffs[i])
    return poly


# ----------------------------------------------------------------------
# trivariate polynomials


class TriPoly:
    """Trivariate polynomial as a map (ex, ey, ez) -> coefficient."""

    __slots__ = ("field", "terms")

    def __init__(self, field, terms, normalize=True):
        if normalize:
            terms = {e: c for e, c in terms.items() if not field.is_zero(c)}
        self.field = field
        self.terms = terms

    @classmethod
    def zero(cls, field):
        return cls(field, {}, normalize=False)

    @classmethod
    def monomial(cls, field, exp, coeff):
        return cls(field, {exp: coeff})

    @classmethod
    def variable(cls, field, index):
        exp = tuple(1 if i == index else 0 for i in range(3))
        return cls(field, {exp: field.one}, normalize=False)

    def is_zero(self):
        return not self.terms

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self):
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def __eq__(self, other):
        if not isinstance(other, TriPoly) or self.field != other.field:
            return False
        if set(self.terms) != set(other.terms):
            return False
        return all(self.field.eq(c, other.terms[e]) for e, c in self.terms.items())

    def __add__(self, other):
        f = self.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            if e in out:
                out[e] = f.add(out[e], c)
            else:
                out[e] = c
        return TriPoly(f, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        f = self.field
        return TriPoly(f, {e: f.neg(c) for e, c in self.terms.items()},
                       normalize=False)

    def __mul__(self, other):
        f = self.field
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                prod = f.mul(c1, c2)
                if e in out:
                    out[e] = f.add(out[e], prod)
                else:
                    out[e] = prod
        return TriPoly(f, out)

    def scale(self, c):
        f = self.field
        if f.is_zero(c):
            return TriPoly.zero(f)
        return TriPoly(f, {e: f.mul(c, v) for e, v in self.terms.items()},
                       normalize=False)

    def __pow__(self, n):
        out = TriPoly(self.field, {(0, 0, 0): self.field.one}, normalize=False)
        acc = self
        n = int(n)
        while n:
            if n & 1:
                out = out * acc
            acc = acc * acc
            n >>= 1
        return out

    def eval(self, xyz):
        f = self.field
        acc = f.zero
        for (ex, ey, ez), c in self.terms.items():
            term = c
            for v, e in zip(xyz, (ex, ey, ez)):
                if e:
                    term = f.mul(term, field_pow(f, v, e))
            acc = f.add(acc, term)
        return acc

    def lead_term(self):
        """Lexicographically largest exponent and its coefficient."""
        e = max(self.terms)
        return e, self.terms[e]

    def exact_div(self, other):
        """Exact multivariate division (single divisor, no remainder)."""
        f = self.field
        if other.is_zero():
            raise ZeroDivisionError("trivariate division by zero")
        rem = dict(self.terms)
        out = {}
        de, dc = other.lead_term()
        dc_inv = f.inv(dc)
        while rem:
            e = max(rem)
            c = rem[e]
            q = tuple(a - b for a, b in zip(e, de))
            if any(v < 0 for v in q):
                raise InexactDivision("trivariate division is not exact")
            qc = f.mul(c, dc_inv)
            out[q] = qc
            for oe, oc in other.terms.items():
                te = (q[0] + oe[0], q[1] + oe[1], q[2] + oe[2])
                val = f.mul(qc, oc)
                cur = rem.get(te)
                new = f.sub(cur, val) if cur is not None else f.neg(val)
                if cur is not None and f.is_zero(new):
                    del rem[te]
                elif f.is_zero(new):
                    pass
                else:
                    rem[te] = new
        return TriPoly(f, out)

    def strip_z_power(self):
        """Divide out the largest Z^k dividing every term; returns (poly, k)."""
        if self.is_zero():
            return self, 0
        k = min(e[2] for e in self.terms)
        if k == 0:
            return self, 0
        return TriPoly(
            self.field,
            {(e[0], e[1], e[2] - k): c for e, c in self.terms.items()},
            normalize=False,
        ), k

    def normalized(self):
        """Scalar-normalize: integer-primitive with positive lex-lead over Q,
        monic lex-lead otherwise."""
        if self.is_zero():
            return self
        f = self.field
        if f == QQ:
            from math import gcd, lcm

            dens = [int(c.denominator) for c in self.terms.values()]
            L = 1
            for d in dens:
                L = lcm(L, d)
            nums = [abs(int(c * L)) for c in self.terms.values()]
            g = 0
            for n in nums:
                g = gcd(g, n)
            scale = Rat(L, g)
            _, lead = self.lead_term()
            if lead * scale < 0:
                scale = -scale
            return self.scale(scale)
        _, lead = self.lead_term()
        return self.scale(f.inv(lead))

    def scalar_multiple_of(self, other):
        """Return c with self == c*other, or None."""
        f = self.field
        if self.is_zero() or other.is_zero():
            return f.one if (self.is_zero() and other.is_zero()) else None
        if set(self.terms) != set(other.terms):
            return None
        e0 = next(iter(self.terms))
        c = f.div(self.terms[e0], other.terms[e0])
        for e, v in self.terms.items():
            if not f.eq(v, f.mul(c, other.terms[e])):
                return None
        return c

    def restrict_to_line(self, p0, p1):
        """UniPoly in s: self(p0 + s*p1) for points given as raw triples."""
        f = self.field
        lines = [UniPoly(f, (a, b)) for a, b in zip(p0, p1)]
        acc = UniPoly.zero(f)
        cache = {}

        def power(i, e):
            key = (i, e)
            if key not in cache:
                cache[key] = lines[i] ** e
            return cache[key]

        for (ex, ey, ez), c in self.terms.items():
            term = UniPoly.const(f, c)
            for idx, e in ((0, ex), (1, ey), (2, ez)):
                if e:
                    term = term * power(idx, e)
            acc = acc + term
        return acc

    def apply_linear(self, matrix):
        """Substitute variables by the linear forms given by a 3x3 matrix:
        X_i -> sum_j matrix[i][j] * X_j."""
        f = self.field
        forms = [
            TriPoly(f, {
                (1, 0, 0): matrix[i][0],
                (0, 1, 0): matrix[i][1],
                (0, 0, 1): matrix[i][2],
            })
            for i in range(3)
        ]
        acc = TriPoly.zero(f)
        cache = {}

        def power(i, e):
            key = (i, e)
            if key not in cache:
                cache[key] = forms[i] ** e
            return cache[key]

        for (ex, ey, ez), c in self.terms.items():
            term = TriPoly(f, {(0, 0, 0): c}, normalize=False)
            for idx, e in ((0, ex), (1, ey), (2, ez)):
                if e:
                    term = term * power(idx, e)
            acc = acc + term
        return acc

    def map_field(self, new_field):
        if new_field == self.field:
            return self
        return TriPoly(
            new_field,
            {e: new_field.coerce(c, self.field) for e, c in self.terms.items()},
            normalize=False,
        )

    def to_str(self, names=("X", "Y", "Z")):
        if self.is_zero():
            return "0"
        f = self.field
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mon = "*".join(
                (names[i] if e[i] == 1 else "%s^%d" % (names[i], e[i]))
                for i in range(3)
                if e[i]
            )
            cs = f.to_str(c)
            if not mon:
                parts.append(cs)
            elif cs == "1":
                parts.append(mon)
            elif cs == "-1":
                parts.append("-" + mon)
            else:
                if ("+" in cs[1:]) or ("-" in cs[1:]) or "*" in cs or "/" in cs:
                    cs = "(%s)" % cs
                parts.append("%s*%s" % (cs, mon))
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self):
        return self.to_str()


def tripoly_kth_root(F, k):
    """Exact k-th root of a trivariate polynomial, or None.

    Greedy Newton peeling in lex order: the leading coefficient must have a
    k-th root in the field, and every further term is forced by exact
    division.  Verified by re-expansion before returning.
    """
    if k == 1:
        return F
    f = F.field
    e_lead, c_lead = F.lead_term()
    if any(v % k for v in e_lead):
        return None
    root_c = _field_kth_root(f, c_lead, k)
    if root_c is None:
        return None
    g_lead_exp = tuple(v // k for v in e_lead)
    G = TriPoly(f, {g_lead_exp: root_c}, normalize=False)
    denom = f.scalar_mul(Rat(k), field_pow(f, root_c, k - 1))
    for _ in range(len(F.terms) * k + 4):
        r = F - G ** k
        if r.is_zero():
            return G
        e_r, c_r = r.lead_term()
        new_exp = tuple(
            a - (k - 1) * b for a, b in zip(e_r, g_lead_exp)
        )
        if any(v < 0 for v in new_exp) or new_exp >= g_lead_exp:
            return None
        G = G + TriPoly(f, {new_exp: f.div(c_r, denom)}, normalize=False)
    return None


def _field_kth_root(field, c, k):
    while k % 2 == 0:
        from .numberfield import field_sqrt

        c = field_sqrt(field, c)
        if c is None:
            return None
        k //= 2
    if k == 1:
        return c
    if field == QQ:
        num, den = int(c.numerator), int(c.denominator)
        rn = round(abs(num) ** (1.0 / k))
        rd = round(den ** (1.0 / k))
        for dn in (rn - 1, rn, rn + 1):
            for dd in (rd - 1, rd, rd + 1):
                if dn <= 0 or dd <= 0:
                    continue
                cand = Rat((-dn if num < 0 else dn), dd)
                if cand ** k == c:
                    return cand
        return None
    return None


def homogenize_xy(field, xy_terms, degree):
    """Lift {(ex, ey): coeff} to a homogeneous TriPoly of the given degree."""
    out = {}
    for (ex, ey), c in xy_terms.items():
        ez = degree - ex - ey
        if ez < 0:
            raise PolynomialError("terms exceed the homogenization degree")
        out[(ex, ey, ez)] = c
    return TriPoly(field, out)


# ----------------------------------------------------------------------
# resultants over rings (fraction-free) and convenience wrappers


class _TriRing:
    def __init__(self, field):
        self.field = field
        self.one = TriPoly(field, {(0, 0, 0): field.one}, normalize=False)
        self.zero = TriPoly.zero(field)

    def is_zero(self, x):
        return x.is_zero()

    def add(self, x, y):
        return x + y

    def sub(self, x, y):
        return x - y

    def mul(self, x, y):
        return x * y

    def neg(self, x):
        return -x

    def exact_div(self, x, y):
        return x.exact_div(y)


def bareiss_determinant(matrix, ring):
    """Fraction-free Gaussian elimination determinant over a ring."""
    n = len(matrix)
    m = [row[:] for row in matrix]
    sign = 1
    prev = ring.one
    for k in range(n - 1):
        if ring.is_zero(m[k][k]):
            piv = None
            for i in range(k + 1, n):
                if not ring.is_zero(m[i][k]):
                    piv = i
                    break
            if piv is None:
                return ring.zero
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = ring.sub(
                    ring.mul(m[k][k], m[i][j]), ring.mul(m[i][k], m[k][j])
                )
                m[i][j] = ring.exact_div(num, prev)
            m[i][k] = ring.zero
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return ring.neg(det) if sign < 0 else det


def sylvester_matrix(a_coeffs, b_coeffs, ring):
    """Sylvester matrix for coefficient lists (low-first) over a ring."""
    m = len(a_coeffs) - 1
    n = len(b_coeffs) - 1
    size = m + n
    rows = []
    arow = list(reversed(a_coeffs))
    brow = list(reversed(b_coeffs))
    for i in range(n):
        rows.append([ring.zero] * i + arow + [ring.zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([ring.zero] * i + brow + [ring.zero] * (size - n - 1 - i))
    return rows


def tri_resultant_pair(a_coeffs, b_coeffs, field):
    """Resultant in an eliminated variable of two polynomials whose
    coefficients are TriPoly values (lists low-first).  Exact, via a
    fraction-free Sylvester determinant."""
    ring = _TriRing(field)
    a = list(a_coeffs)
    b = list(b_coeffs)
    while a and ring.is_zero(a[-1]):
        a.pop()
    while b and ring.is_zero(b[-1]):
        b.pop()
    if not a or not b:
        raise PolynomialError("resultant needs inputs nonzero in the variable")
    if len(a) == 1 and len(b) == 1:
        return ring.one
    if len(a) == 1:
        det = a[0]
        out = ring.one
        for _ in range(len(b) - 1):
            out = ring.mul(out, det)
        return out
    if len(b) == 1:
        det = b[0]
        out = ring.one
        for _ in range(len(a) - 1):
            out = ring.mul(out, det)
        return out
    return bareiss_determinant(sylvester_matrix(a, b, ring), ring)
