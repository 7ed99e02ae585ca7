"""Exact scalar domains: Q(zeta_11), Z[nu] and Q(nu) with nu = (-1+sqrt(-11))/2.

All arithmetic is exact.  Rational numbers are `fractions.Fraction`,
integers are plain python ints; no floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction


class ParseError(ValueError):
    """Malformed scalar text; `position` is the offending character index."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _fmt_rat(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# The imaginary quadratic ring Z[nu] and its fraction field Q(nu)
# ---------------------------------------------------------------------------

class QuadInt:
    """a + b*nu with a, b integers; nu^2 = -nu - 3, N(a+b*nu) = a^2 - ab + 3b^2."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = int(a)
        self.b = int(b)

    def __repr__(self):
        return f"QuadInt({self.a}, {self.b})"

    def __str__(self):
        return format_scalar(QuadRat(self.a, self.b))

    def __hash__(self):
        return hash((self.a, self.b, "qi"))

    def __eq__(self, other):
        other = _as_quadint(other)
        if other is None:
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __bool__(self):
        return bool(self.a or self.b)

    def __neg__(self):
        return QuadInt(-self.a, -self.b)

    def __add__(self, other):
        other = _as_quadint(other)
        if other is None:
            return NotImplemented
        return QuadInt(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_quadint(other)
        if other is None:
            return NotImplemented
        return QuadInt(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        other = _as_quadint(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _as_quadint(other)
        if other is None:
            return NotImplemented
        a, b, c, d = self.a, self.b, other.a, other.b
        return QuadInt(a * c - 3 * b * d, a * d + b * c - b * d)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a quadratic integer")
        result = QuadInt(1, 0)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> QuadInt:
        return QuadInt(self.a - self.b, -self.b)

    def norm(self) -> int:
        return self.a * self.a - self.a * self.b + 3 * self.b * self.b

    def is_unit(self) -> bool:
        return self.norm() == 1

    def to_quadrat(self) -> QuadRat:
        return QuadRat(self.a, self.b)

    def __divmod__(self, other):
        return quad_div_rem(self, other)

    def __floordiv__(self, other):
        return quad_div_rem(self, other)[0]

    def __mod__(self, other):
        return quad_div_rem(self, other)[1]


def _as_quadint(x):
    if isinstance(x, QuadInt):
        return x
    if isinstance(x, int):
        return QuadInt(x, 0)
    return None


class QuadRat:
    """a + b*nu with a, b rational; the fraction field of Z[nu]."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    def __repr__(self):
        return f"QuadRat({self.a!r}, {self.b!r})"

    def __str__(self):
        return format_scalar(self)

    def __hash__(self):
        return hash((self.a, self.b, "qr"))

    def __eq__(self, other):
        other = _as_quadrat(other)
        if other is None:
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __bool__(self):
        return bool(self.a or self.b)

    def __neg__(self):
        return QuadRat(-self.a, -self.b)

    def __add__(self, other):
        other = _as_quadrat(other)
        if other is None:
            return NotImplemented
        return QuadRat(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_quadrat(other)
        if other is None:
            return NotImplemented
        return QuadRat(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        other = _as_quadrat(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _as_quadrat(other)
        if other is None:
            return NotImplemented
        a, b, c, d = self.a, self.b, other.a, other.b
        return QuadRat(a * c - 3 * b * d, a * d + b * c - b * d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_quadrat(other)
        if other is None:
            return NotImplemented
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(nu)")
        num = self * other.conj()
        return QuadRat(num.a / n, num.b / n)

    def __rtruediv__(self, other):
        other = _as_quadrat(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, n: int):
        if n < 0:
            return (QuadRat(1) / self) ** (-n)
        result = QuadRat(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> QuadRat:
        return QuadRat(self.a - self.b, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a - self.a * self.b + 3 * self.b * self.b

    def is_integral(self) -> bool:
        return self.a.denominator == 1 and self.b.denominator == 1

    def to_quadint(self) -> QuadInt:
        if not self.is_integral():
            raise ValueError(f"{self} is not integral over Z[nu]")
        return QuadInt(self.a.numerator, self.b.numerator)

    def to_cyclotomic(self) -> CycElem:
        return embed_quadratic(self)


def _as_quadrat(x):
    if isinstance(x, QuadRat):
        return x
    if isinstance(x, (int, Fraction)):
        return QuadRat(x, 0)
    if isinstance(x, QuadInt):
        return QuadRat(x.a, x.b)
    return None


NU = QuadInt(0, 1)
ONE_PLUS_2NU = QuadInt(1, 2)  # = sqrt(-11); N = 11


def _round_half_away(x: Fraction) -> int:
    # deterministic nearest integer, ties away from zero
    n, d = x.numerator, x.denominator
    if n >= 0:
        return (2 * n + d) // (2 * d)
    return -((-2 * n + d) // (2 * d))


def quad_div_rem(x: QuadInt, y: QuadInt) -> tuple[QuadInt, QuadInt]:
    """Euclidean division in Z[nu]: x = q*y + r with N(r) < N(y).

    The remainder is canonical: among all representatives of x mod y it
    has minimal norm, ties broken by (a, b).  Canonicity makes remainder
    reduction idempotent, which the Hermite normal form relies on.
    """
    x = _as_quadint(x)
    y = _as_quadint(y)
    ny = y.norm()
    if ny == 0:
        raise ZeroDivisionError("division by zero in Z[nu]")
    # exact quotient in Q(nu)
    num = x * y.conj()
    qa = Fraction(num.a, ny)
    qb = Fraction(num.b, ny)
    ra, rb = _round_half_away(qa), _round_half_away(qb)
    best = None
    # +-2 covers every closest-vector candidate for the norm form a^2-ab+3b^2
    for da in (-2, -1, 0, 1, 2):
        for db in (-2, -1, 0, 1, 2):
            q = QuadInt(ra + da, rb + db)
            r = x - q * y
            key = (r.norm(), r.a, r.b)
            if best is None or key < best[0]:
                best = (key, q, r)
    _, q, r = best
    if r.norm() >= ny:
        raise AssertionError("Euclidean property failed in Z[nu]")
    return q, r


def quad_unit_normalize(x: QuadInt) -> QuadInt:
    """Scale by a unit (+-1) so that a > 0, or a == 0 and b > 0."""
    if x.a < 0 or (x.a == 0 and x.b < 0):
        return -x
    return x


def quad_gcd(x: QuadInt, y: QuadInt) -> QuadInt:
    """Euclidean gcd in Z[nu], unit-normalized."""
    x = _as_quadint(x)
    y = _as_quadint(y)
    if not x and not y:
        raise ValueError("gcd(0, 0) is undefined")
    while y:
        x, y = y, quad_div_rem(x, y)[1]
    return quad_unit_normalize(x)


# ---------------------------------------------------------------------------
# The degree-10 cyclotomic field Q(zeta_11)
# ---------------------------------------------------------------------------

_ZERO10 = (Fraction(0),) * 10


class CycElem:
    """Element of Q(zeta_11) in the power basis 1, z, ..., z^9.

    Reduction uses z^10 = -(1 + z + ... + z^9), i.e. the minimal polynomial
    1 + x + ... + x^10, so every element has a unique coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = tuple(Fraction(c) for c in coeffs)
        if len(cs) != 10:
            raise ValueError("CycElem needs exactly 10 coefficients")
        self.coeffs = cs

    @staticmethod
    def zero() -> CycElem:
        return CycElem(_ZERO10)

    @staticmethod
    def one() -> CycElem:
        return CycElem((Fraction(1),) + (Fraction(0),) * 9)

    @staticmethod
    def from_rational(x) -> CycElem:
        return CycElem((Fraction(x),) + (Fraction(0),) * 9)

    @staticmethod
    def zeta(k: int = 1) -> CycElem:
        """zeta^k for the fixed primitive 11th root of unity zeta."""
        k %= 11
        if k == 10:
            return CycElem((Fraction(-1),) * 10)
        cs = [Fraction(0)] * 10
        cs[k] = Fraction(1)
        return CycElem(cs)

    def __repr__(self):
        return f"CycElem({list(self.coeffs)})"

    def __hash__(self):
        return hash(self.coeffs)

    def __eq__(self, other):
        other = _as_cyc(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __bool__(self):
        return any(self.coeffs)

    def __neg__(self):
        return CycElem(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        other = _as_cyc(other)
        if other is None:
            return NotImplemented
        return CycElem(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_cyc(other)
        if other is None:
            return NotImplemented
        return CycElem(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        other = _as_cyc(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _as_cyc(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        prod = [Fraction(0)] * 19
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if bj:
                    prod[i + j] += ai * bj
        return CycElem(_reduce_power_coeffs(prod))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_cyc(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _as_cyc(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = CycElem.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def galois(self, t: int) -> CycElem:
        """Field automorphism zeta -> zeta^t, for t not divisible by 11."""
        t %= 11
        if t == 0:
            raise ValueError("galois exponent must be invertible mod 11")
        buckets = [Fraction(0)] * 11
        for k, c in enumerate(self.coeffs):
            if c:
                buckets[(k * t) % 11] += c
        return CycElem(_reduce_power_coeffs(buckets))

    def conj(self) -> CycElem:
        """Complex conjugation zeta -> zeta^10."""
        return self.galois(10)

    def inverse(self) -> CycElem:
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(zeta_11)")
        # extended Euclid against 1 + x + ... + x^10 in Q[x]
        s = _poly_invert_mod_phi(list(self.coeffs))
        return CycElem(_reduce_power_coeffs(s))

    def try_rational(self) -> Fraction:
        if any(self.coeffs[1:]):
            raise ValueError("element is not rational")
        return self.coeffs[0]

    def try_quadratic(self) -> QuadRat:
        """Partial inverse of `embed_quadratic`; fails outside Q(nu)."""
        c = self.coeffs
        b = c[1]
        if (
            c[3] != b or c[4] != b or c[5] != b or c[9] != b
            or c[2] or c[6] or c[7] or c[8]
        ):
            raise ValueError("element is not in the quadratic subfield Q(nu)")
        return QuadRat(c[0], b)


def _as_cyc(x):
    if isinstance(x, CycElem):
        return x
    if isinstance(x, (int, Fraction)):
        return CycElem.from_rational(x)
    return None


def _reduce_power_coeffs(coeffs) -> tuple:
    """Reduce coefficients on powers zeta^0.. to the canonical 10-tuple."""
    out = [Fraction(0)] * 10
    for k, c in enumerate(coeffs):
        if not c:
            continue
        k %= 11
        if k == 10:
            for i in range(10):
                out[i] -= c
        else:
            out[k] += c
    return tuple(out)


_PHI11 = [Fraction(1)] * 11  # 1 + x + ... + x^10


def _poly_trim(p):
    while p and not p[-1]:
        p.pop()
    return p


def _poly_divmod(a, b):
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    q = [Fraction(0)] * max(len(a) - db, 0)
    for i in range(len(a) - db - 1, -1, -1):
        c = a[i + db] / lb
        if c:
            q[i] = c
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    return q, _poly_trim(a)


def _poly_invert_mod_phi(a):
    """Inverse of the polynomial a modulo 1 + x + ... + x^10 over Q."""
    r0, r1 = list(_PHI11), _poly_trim(list(a))
    s0, s1 = [], [Fraction(1)]
    while True:
        if len(r1) == 1:
            inv = [c / r1[0] for c in s1]
            return inv + [Fraction(0)] * (10 - len(inv))
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        # s_next = s0 - q*s1
        s = list(s0) + [Fraction(0)] * max(0, len(q) + len(s1) - 1 - len(s0))
        for i, qi in enumerate(q):
            if qi:
                for j, sj in enumerate(s1):
                    s[i + j] -= qi * sj
        s0, s1 = s1, _poly_trim(s)


_NU_SUPPORT = (1, 3, 4, 5, 9)  # nu = z + z^3 + z^4 + z^5 + z^9


def embed_quadratic(q) -> CycElem:
    """Ring embedding Q(nu) -> Q(zeta_11), nu -> z + z^3 + z^4 + z^5 + z^9."""
    q = _as_quadrat(q)
    cs = [Fraction(0)] * 10
    cs[0] = q.a
    for k in _NU_SUPPORT:
        cs[k] = q.b
    return CycElem(cs)


# ---------------------------------------------------------------------------
# Prime fields (used for F_11 lattice quotients and mod-p Groebner passes)
# ---------------------------------------------------------------------------

class ModP:
    """Residue in F_p; the modulus travels with the element."""

    __slots__ = ("val", "p")

    def __init__(self, val: int, p: int):
        self.p = p
        self.val = val % p

    def __repr__(self):
        return f"ModP({self.val}, {self.p})"

    def __hash__(self):
        return hash((self.val, self.p, "modp"))

    def __eq__(self, other):
        if isinstance(other, int):
            return self.val == other % self.p
        if isinstance(other, ModP):
            return self.p == other.p and self.val == other.val
        return NotImplemented

    def __bool__(self):
        return self.val != 0

    def __neg__(self):
        return ModP(-self.val, self.p)

    def _lift(self, other):
        if isinstance(other, ModP):
            if other.p != self.p:
                raise ValueError("mixed moduli")
            return other
        if isinstance(other, int):
            return ModP(other, self.p)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return ModP(self.val + other.val, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return ModP(self.val - other.val, self.p)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return ModP(self.val * other.val, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if other.val == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return ModP(self.val * pow(other.val, self.p - 2, self.p), self.p)

    def __pow__(self, n: int):
        if n < 0:
            return (ModP(1, self.p) / self) ** (-n)
        return ModP(pow(self.val, n, self.p), self.p)


# ---------------------------------------------------------------------------
# Scalar text grammar:  term (('+'|'-') term)*
#   term = rat | rat '*' 'nu' | 'nu',   rat = int ('/' posint)?
# ---------------------------------------------------------------------------

def _tokenize(text: str):
    toks = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "+-*/":
            toks.append((ch, ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(("num", text[i:j], i))
            i = j
            continue
        if text.startswith("nu", i):
            toks.append(("nu", "nu", i))
            i += 2
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    return toks


class _TokenStream:
    def __init__(self, toks, length):
        self.toks = toks
        self.i = 0
        self.length = length

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None, self.length)

    def next(self):
        tok = self.peek()
        self.i += 1
        return tok


def _parse_rat(ts: _TokenStream, sign: int) -> Fraction:
    kind, value, pos = ts.next()
    if kind != "num":
        raise ParseError("expected a number", pos)
    num = sign * int(value)
    if ts.peek()[0] == "/":
        ts.next()
        kind, value, pos = ts.next()
        if kind != "num":
            raise ParseError("expected a denominator", pos)
        den = int(value)
        if den == 0:
            raise ParseError("zero denominator", pos)
        return Fraction(num, den)
    return Fraction(num)


def _parse_term(ts: _TokenStream, sign: int) -> QuadRat:
    kind, _, pos = ts.peek()
    if kind == "nu":
        ts.next()
        return QuadRat(0, sign)
    rat = _parse_rat(ts, sign)
    if ts.peek()[0] == "*":
        ts.next()
        kind, _, pos = ts.next()
        if kind != "nu":
            raise ParseError("expected 'nu' after '*'", pos)
        return QuadRat(0, rat)
    return QuadRat(rat, 0)


def parse_scalar(text: str) -> QuadRat:
    """Parse an element of Q(nu), e.g. '3/2-5*nu', 'nu', '-1/7'."""
    ts = _TokenStream(_tokenize(text), len(text))
    if ts.peek()[0] is None:
        raise ParseError("empty scalar", 0)
    sign = 1
    if ts.peek()[0] in ("+", "-"):
        sign = -1 if ts.next()[0] == "-" else 1
    result = _parse_term(ts, sign)
    while ts.peek()[0] is not None:
        kind, _, pos = ts.next()
        if kind not in ("+", "-"):
            raise ParseError("expected '+' or '-'", pos)
        result = result + _parse_term(ts, -1 if kind == "-" else 1)
    return result


def format_scalar(q) -> str:
    """Print an element of Q(nu) in the grammar accepted by `parse_scalar`."""
    q = _as_quadrat(q)
    parts = []
    if q.a:
        parts.append(_fmt_rat(q.a))
    if q.b:
        mag = abs(q.b)
        if not parts:
            if q.b == 1:
                parts.append("nu")
            else:
                parts.append(f"{_fmt_rat(q.b)}*nu")
        else:
            sign = "+" if q.b > 0 else "-"
            parts.append(sign + ("nu" if mag == 1 else f"{_fmt_rat(mag)}*nu"))
    return "".join(parts) if parts else "0"
