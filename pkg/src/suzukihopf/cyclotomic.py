"""Exact arithmetic in the cyclotomic field Q(z), z a primitive M-th root of unity.

Numbers are stored in the power basis 1, z, ..., z^(phi(M)-1) as a tuple of
integer numerators over one positive common denominator, reduced so that the
representation is unique.  Text form::

    0            zero
    -1/2         rational
    z^1          z
    1/2-3*z^2    sums in ascending powers of z
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd
import re


class ParseError(ValueError):
    def __init__(self, message, text, position):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


def _poly_divmod(num, den):
    """Divide integer polynomials (lowest degree first); den must be monic."""
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1]
        q[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    return q, num[: len(den) - 1]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m):
    """Coefficients of the m-th cyclotomic polynomial, lowest degree first."""
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly, rem = _poly_divmod(poly, cyclotomic_polynomial(d))
            assert not any(rem)
    return tuple(poly)


class FieldContext:
    """Conductor M together with the reduction data for Q(z_M).

    Contexts are cached per conductor, so ``FieldContext(4) is FieldContext(4)``.
    """

    _instances = {}

    def __new__(cls, M):
        M = int(M)
        if M < 1:
            raise ValueError(f"conductor must be positive, got {M}")
        ctx = cls._instances.get(M)
        if ctx is None:
            ctx = super().__new__(cls)
            ctx._setup(M)
            cls._instances[M] = ctx
        return ctx

    def _setup(self, M):
        self.M = M
        self.cyclotomic_modulus = cyclotomic_polynomial(M)
        self.degree = len(self.cyclotomic_modulus) - 1
        # powers[k] = z^k written in the power basis, k in 0..M-1
        deg = self.degree
        powers = []
        cur = [1] + [0] * (deg - 1)
        for _ in range(M):
            powers.append(tuple(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for j in range(deg):
                    cur[j] -= top * self.cyclotomic_modulus[j]
        self._powers = powers
        self._zero = CycNumber._raw(self, (0,) * deg, 1)
        self._one = CycNumber._raw(self, (1,) + (0,) * (deg - 1), 1)

    def __repr__(self):
        return f"FieldContext({self.M})"

    def __reduce__(self):
        return (FieldContext, (self.M,))

    @property
    def zero(self):
        return self._zero

    @property
    def one(self):
        return self._one

    def __call__(self, value):
        """Coerce an int, Fraction or CycNumber into this field."""
        if isinstance(value, CycNumber):
            if value.ctx is not self:
                raise ValueError(f"cannot mix conductors {value.ctx.M} and {self.M}")
            return value
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, int):
            return CycNumber._make(self, [value] + [0] * (self.degree - 1), 1)
        if isinstance(value, Fraction):
            return CycNumber._make(
                self, [value.numerator] + [0] * (self.degree - 1), value.denominator
            )
        raise TypeError(f"cannot coerce {type(value).__name__} into Q(z_{self.M})")

    def zeta_power(self, k):
        """z^k for any integer k."""
        return CycNumber._raw(self, self._powers[k % self.M], 1)

    def root_of_unity(self, k):
        """The primitive k-th root z^(M/k)."""
        if k < 1 or self.M % k:
            raise ValueError(f"{k} does not divide the conductor {self.M}")
        return self.zeta_power(self.M // k)

    def enumerate_roots(self, k):
        """All k-th roots of unity, as powers of root_of_unity(k) in order."""
        if k < 1 or self.M % k:
            raise ValueError(f"{k} does not divide the conductor {self.M}")
        step = self.M // k
        return [self.zeta_power(step * j) for j in range(k)]

    def sqrt_of_sign(self, sign):
        """1 for +1 and z^(M/4) for -1; squares to sign."""
        if sign == 1:
            return self.one
        if sign == -1:
            return self.root_of_unity(4)
        raise ValueError(f"expected +1 or -1, got {sign}")

    def parse(self, text):
        return _parse(self, text)


def conductor_for(N):
    """Smallest conductor covering the 2N-th roots of unity and sqrt(-1)."""
    two_n = 2 * N
    return 4 * two_n // gcd(4, two_n)


class CycNumber:
    """Immutable element of Q(z_M)."""

    __slots__ = ("ctx", "num", "den", "_hash")

    @classmethod
    def _raw(cls, ctx, num, den):
        self = object.__new__(cls)
        self.ctx = ctx
        self.num = tuple(num)
        self.den = den
        self._hash = None
        return self

    @classmethod
    def _make(cls, ctx, num, den):
        g = den
        for c in num:
            if c:
                g = gcd(g, c)
                if g == 1:
                    break
        if den < 0:
            g = -g
        if g != 1:
            num = [c // g for c in num]
            den //= g
        if not any(num):
            den = 1
        return cls._raw(ctx, num, den)

    @classmethod
    def from_coefficients(cls, ctx, coeffs):
        """Build from rational power-basis coefficients (any length; reduced mod the modulus)."""
        fr = [Fraction(c) for c in coeffs]
        den = 1
        for c in fr:
            den = den * c.denominator // gcd(den, c.denominator)
        acc = [0] * ctx.degree
        for k, c in enumerate(fr):
            if c:
                v = c.numerator * (den // c.denominator)
                p = ctx._powers[k % ctx.M]
                for j in range(ctx.degree):
                    if p[j]:
                        acc[j] += v * p[j]
        return cls._make(ctx, acc, den)

    @property
    def coeffs(self):
        """Power-basis coefficients as Fractions."""
        return tuple(Fraction(c, self.den) for c in self.num)

    def is_zero(self):
        return not any(self.num)

    def is_rational(self):
        return not any(self.num[1:])

    def as_fraction(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.num[0], self.den)

    def __bool__(self):
        return any(self.num)

    def _coerce(self, other):
        if isinstance(other, CycNumber):
            if other.ctx is not self.ctx:
                raise ValueError(
                    f"cannot mix conductors {self.ctx.M} and {other.ctx.M}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx(other)
        return None

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self.num[0], self.den))
            else:
                self._hash = hash((self.ctx.M, self.num, self.den))
        return self._hash

    def __neg__(self):
        return CycNumber._raw(self.ctx, [-c for c in self.num], self.den)

    def __pos__(self):
        return self

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return CycNumber._make(
                self.ctx, [a + b for a, b in zip(self.num, o.num)], self.den
            )
        return CycNumber._make(
            self.ctx,
            [a * o.den + b * self.den for a, b in zip(self.num, o.num)],
            self.den * o.den,
        )

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        ctx = self.ctx
        deg = ctx.degree
        a, b = self.num, o.num
        if not any(a[1:]):
            return CycNumber._make(ctx, [a[0] * c for c in b], self.den * o.den)
        if not any(b[1:]):
            return CycNumber._make(ctx, [b[0] * c for c in a], self.den * o.den)
        prod = [0] * (2 * deg - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        acc = prod[:deg]
        powers = ctx._powers
        for k in range(deg, 2 * deg - 1):
            c = prod[k]
            if c:
                p = powers[k]
                for j in range(deg):
                    if p[j]:
                        acc[j] += c * p[j]
        return CycNumber._make(ctx, acc, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if self.is_rational():
            return self.ctx(Fraction(self.den, self.num[0]))
        # extended Euclid over Q[x]: find u with u*a = 1 mod modulus
        modulus = [Fraction(c) for c in self.ctx.cyclotomic_modulus]
        a = _trim([Fraction(c, self.den) for c in self.num])
        r0, r1 = modulus, a
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1 or r1[0] == 0:
            q, r = _qdivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _trim(_qsub(s0, _qmul(q, s1)))
        # r1 is a nonzero constant
        c = r1[0]
        return CycNumber.from_coefficients(self.ctx, [x / c for x in s1])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = self.ctx.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __str__(self):
        return serialize(self)

    def __repr__(self):
        return f"CycNumber({serialize(self)!r}, M={self.ctx.M})"

    def __reduce__(self):
        return (_rebuild, (self.ctx.M, self.num, self.den))


def _rebuild(M, num, den):
    return CycNumber._raw(FieldContext(M), num, den)


def _trim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p or [Fraction(0)]


def _qsub(a, b):
    n = max(len(a), len(b))
    return [
        (a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)
    ]


def _qmul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _qdivmod(a, b):
    a = list(a)
    b = _trim(b)
    if len(a) < len(b):
        return [Fraction(0)], _trim(a)
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] / lead
        q[i] = c
        if c:
            for j, d in enumerate(b):
                a[i + j] -= c * d
    return q, _trim(a[: len(b) - 1] or [Fraction(0)])


def _rational_text(f):
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def serialize(a):
    """Canonical text: ascending powers, zero terms omitted, '0' for zero."""
    parts = []
    for k, c in enumerate(a.coeffs):
        if not c:
            continue
        if k == 0:
            body = _rational_text(abs(c))
        elif abs(c) == 1:
            body = f"z^{k}"
        else:
            body = f"{_rational_text(abs(c))}*z^{k}"
        sign = "-" if c < 0 else "+"
        if not parts:
            parts.append(body if sign == "+" else "-" + body)
        else:
            parts.append(sign + body)
    return "".join(parts) or "0"


_TERM = re.compile(r"(\d+)(?:/(\d+))?(?:\*z\^(\d+))?|z\^(\d+)")


def _parse(ctx, text):
    if not isinstance(text, str):
        raise TypeError("expected text")
    pos = 0
    n = len(text)
    if n == 0:
        raise ParseError("empty input", text, 0)
    coeffs = {}
    first = True
    while pos < n:
        sign = 1
        if text[pos] in "+-":
            sign = -1 if text[pos] == "-" else 1
            pos += 1
        elif not first:
            raise ParseError("expected '+' or '-'", text, pos)
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError("expected a term", text, pos)
        if m.group(4) is not None:
            c, k = Fraction(1), int(m.group(4))
        else:
            den = int(m.group(2)) if m.group(2) else 1
            if den == 0:
                raise ParseError("zero denominator", text, m.start(2))
            c = Fraction(int(m.group(1)), den)
            k = int(m.group(3)) if m.group(3) else 0
        coeffs[k] = coeffs.get(k, Fraction(0)) + sign * c
        pos = m.end()
        first = False
    top = max(coeffs) if coeffs else 0
    return CycNumber.from_coefficients(ctx, [coeffs.get(k, 0) for k in range(top + 1)])
