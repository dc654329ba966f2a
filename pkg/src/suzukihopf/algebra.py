"""The Suzuki algebras A_{Nn}^{mu lambda}: words, normal forms, structure constants.

Basis elements are ``BasisIndex(family, s, t)`` with family ``"E"`` for
x11^s chi22^t and ``"O"`` for x12^s chi21^t, where 1 <= s <= 2N and
0 <= t <= n-1.

Normal form of a word (letters x11, x12, x21, x22):

1. an adjacent pair with odd index sum kills the word;
2. otherwise all letters share a parity, and adjacent equal letters are
   pulled out as the central square (x11^2 = x22^2, resp. x12^2 = x21^2);
3. the alternating remainder is shortened with chi11^n = chi22^n
   (resp. chi21^n = lambda chi12^n), which always creates a new square;
4. the power of the square is folded into 1..2N using the unit relation
   x11^2N + mu x12^2N = 1.
"""

from dataclasses import dataclass, field
from enum import IntEnum
from math import gcd
from typing import NamedTuple

from .cyclotomic import FieldContext, conductor_for


class Generator(IntEnum):
    X11 = 0
    X12 = 1
    X21 = 2
    X22 = 3

    @property
    def i(self):
        return 1 if self in (Generator.X11, Generator.X12) else 2

    @property
    def j(self):
        return 1 if self in (Generator.X11, Generator.X21) else 2

    @property
    def parity(self):
        return (self.i + self.j) % 2

    @classmethod
    def of(cls, i, j):
        return _BY_INDEX[(i, j)]

    @property
    def transpose(self):
        return Generator.of(self.j, self.i)

    def __str__(self):
        return f"x{self.i}{self.j}"


X11, X12, X21, X22 = Generator.X11, Generator.X12, Generator.X21, Generator.X22
_BY_INDEX = {(g.i, g.j): g for g in Generator}

# the two letters of each family: (leading letter, partner)
_FAMILY_LETTERS = {"E": (X11, X22), "O": (X12, X21)}


def alternating(i, j, m):
    """Letters of chi_{ij}^m: the alternating word of length m starting at x_ij."""
    first = Generator.of(i, j)
    other = Generator.of(3 - i, 3 - j)
    return tuple(first if k % 2 == 0 else other for k in range(m))


@dataclass(frozen=True)
class AlgebraParams:
    N: int
    n: int
    mu: int
    lam: int

    def __post_init__(self):
        if not isinstance(self.N, int) or self.N < 1:
            raise ValueError(f"N must be an integer >= 1, got {self.N!r}")
        if not isinstance(self.n, int) or self.n < 2:
            raise ValueError(f"n must be an integer >= 2, got {self.n!r}")
        if self.mu not in (1, -1):
            raise ValueError(f"mu must be +1 or -1, got {self.mu!r}")
        if self.lam not in (1, -1):
            raise ValueError(f"lambda must be +1 or -1, got {self.lam!r}")

    @property
    def dim(self):
        return 4 * self.N * self.n

    @property
    def m(self):
        return self.n // 2

    def label(self):
        sign = lambda v: "+" if v == 1 else "-"
        return f"A_{{{self.N},{self.n}}}^{{{sign(self.mu)}{sign(self.lam)}}}"

    def as_dict(self):
        return {"N": self.N, "n": self.n, "mu": self.mu, "lambda": self.lam}


class BasisIndex(NamedTuple):
    family: str
    s: int
    t: int

    def word(self):
        lead, _ = _FAMILY_LETTERS[self.family]
        tail_start = X22 if self.family == "E" else X21
        return (lead,) * self.s + alternating(tail_start.i, tail_start.j, self.t)

    def __str__(self):
        return f"{self.family}{self.s},{self.t}"


def basis_indices(params):
    """Basis in the fixed export order: family E then O, ascending (s, t)."""
    return [
        BasisIndex(fam, s, t)
        for fam in ("E", "O")
        for s in range(1, 2 * params.N + 1)
        for t in range(params.n)
    ]


def normal_form(word, params):
    """Reduce a word to ``None`` (zero), ``"unit"``, or ``(BasisIndex, sign)``.

    ``sign`` is an integer +-1 collected from the lambda and mu relations.
    """
    word = tuple(Generator(g) for g in word)
    if not word:
        return "unit"
    parity = word[0].parity
    for g in word:
        if g.parity != parity:
            return None
    family = "E" if parity == 0 else "O"
    lead, partner = _FAMILY_LETTERS[family]
    swap_sign = 1 if family == "E" else params.lam
    n = params.n

    squares, alt = _cancel_squares(word, 0)
    sign = 1
    while alt:
        r = len(alt)
        if r < n or (r == n and alt[0] == lead):
            break
        head = alt[:n]
        swapped = tuple(lead if g == partner else partner for g in head)
        sign *= swap_sign
        squares, alt = _cancel_squares(swapped + alt[n:], squares)

    if not alt:
        s, t = 2 * squares, 0
    elif alt[0] == lead:
        s, t = 2 * squares + 1, len(alt) - 1
    else:
        s, t = 2 * squares, len(alt)

    fold_sign = 1 if family == "E" else params.mu
    two_n = 2 * params.N
    if s == 0:
        s = two_n
        sign *= fold_sign
    while s > two_n:
        s -= two_n
        sign *= fold_sign
    return BasisIndex(family, s, t), sign


def _cancel_squares(letters, squares):
    stack = []
    for g in letters:
        if stack and stack[-1] == g:
            stack.pop()
            squares += 1
        else:
            stack.append(g)
    return squares, tuple(stack)


class Element:
    """A finite linear combination of basis elements of one algebra."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms=None):
        self.algebra = algebra
        ctx = algebra.ctx
        clean = {}
        if terms:
            for b, c in terms.items():
                c = ctx(c)
                if c:
                    clean[b] = c
        self.terms = clean

    @classmethod
    def _trusted(cls, algebra, terms):
        self = object.__new__(cls)
        self.algebra = algebra
        self.terms = terms
        return self

    def __iter__(self):
        return iter(sorted(self.terms))

    def items(self):
        return sorted(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def coefficient(self, b):
        return self.terms.get(b, self.algebra.ctx.zero)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _check(self, other):
        if other.algebra is not self.algebra and other.algebra.params != self.algebra.params:
            raise ValueError("elements of different algebras")

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.algebra.params == other.algebra.params and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if isinstance(other, Element):
            self._check(other)
            out = dict(self.terms)
            for b, c in other.terms.items():
                v = out.get(b)
                v = c if v is None else v + c
                if v:
                    out[b] = v
                else:
                    out.pop(b, None)
            return Element._trusted(self.algebra, out)
        if other == 0:
            return self
        return self + self.algebra.scalar(other)

    __radd__ = __add__

    def __neg__(self):
        return Element._trusted(self.algebra, {b: -c for b, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, Element):
            return self + (-other)
        return self + (-self.algebra.scalar(other))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = self.algebra.ctx(c)
        if not c:
            return self.algebra.zero()
        return Element._trusted(self.algebra, {b: c * v for b, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Element):
            return self.algebra.multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = self.algebra.unit()
        for _ in range(k):
            result = result * self
        return result

    def __repr__(self):
        return f"Element({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{b}" for b, c in self.items())

    def to_json(self):
        return [[str(b), str(c)] for b, c in self.items()]


class SuzukiAlgebra:
    """A_{Nn}^{mu lambda} with its multiplication table.

    ``conductor`` may be raised above the default lcm(4, 2N) when larger
    roots of unity are needed as scalars (it must stay a multiple of it).
    ``mono`` takes a precomputed basis product table (see cache.py).
    """

    def __init__(self, params, conductor=None, mono=None):
        base = conductor_for(params.N)
        if conductor is None:
            conductor = base
        if conductor % base:
            raise ValueError(f"conductor {conductor} is not a multiple of {base}")
        self.params = params
        self.ctx = FieldContext(conductor)
        self.basis = basis_indices(params)
        self.position = {b: k for k, b in enumerate(self.basis)}
        self.dim = len(self.basis)
        self._words = {b: b.word() for b in self.basis}
        self.tables = build_structure_tables(self, mono)

    def __repr__(self):
        return f"SuzukiAlgebra({self.params.label()}, M={self.ctx.M})"

    def scalar(self, c):
        return self.unit().scale(c)

    def zero(self):
        return Element._trusted(self, {})

    def basis_element(self, b):
        return Element._trusted(self, {b: self.ctx.one})

    def word_of(self, b):
        return self._words[b]

    def unit(self):
        return self.tables.unit

    def normalize(self, word):
        nf = normal_form(word, self.params)
        if nf is None:
            return self.zero()
        if nf == "unit":
            return self.tables.unit
        b, sign = nf
        return Element._trusted(self, {b: self.ctx(sign)})

    def word(self, *letters):
        return self.normalize(letters)

    def generator(self, g):
        return self.normalize((Generator(g),))

    def chi(self, i, j, m):
        if m < 0:
            raise ValueError("m must be >= 0")
        return self.normalize(alternating(i, j, m))

    def multiply(self, x, y):
        if x.algebra is not self or y.algebra is not self:
            if x.algebra.params != self.params or y.algebra.params != self.params:
                raise ValueError("parameter mismatch in multiply")
        mono = self.tables.mono
        out = {}
        for bx, cx in x.terms.items():
            for by, cy in y.terms.items():
                entry = mono[bx, by]
                if entry is None:
                    continue
                bz, sign = entry
                c = cx * cy
                if sign < 0:
                    c = -c
                v = out.get(bz)
                v = c if v is None else v + c
                if v:
                    out[bz] = v
                else:
                    out.pop(bz, None)
        return Element._trusted(self, out)

    def product(self, elements):
        result = self.unit()
        for e in elements:
            result = result * e
        return result


@dataclass(frozen=True)
class StructureTables:
    params: AlgebraParams
    unit: Element
    mult: dict = field(repr=False)
    # (b1, b2) -> (b3, sign) or None; every product of basis words is a signed basis word
    mono: dict = field(repr=False)


def build_structure_tables(algebra, mono=None):
    params = algebra.params
    ctx = algebra.ctx
    two_n = 2 * params.N
    unit = Element._trusted(
        algebra,
        {BasisIndex("E", two_n, 0): ctx.one, BasisIndex("O", two_n, 0): ctx(params.mu)},
    )
    given = mono
    mono = {}
    mult = {}
    words = algebra._words
    for b1 in algebra.basis:
        for b2 in algebra.basis:
            if given is None:
                nf = normal_form(words[b1] + words[b2], params)
            else:
                nf = given[b1, b2]
            # words of length >= 2 never normalize to the bare unit
            mono[b1, b2] = nf
            if nf is None:
                mult[b1, b2] = Element._trusted(algebra, {})
            else:
                mult[b1, b2] = Element._trusted(algebra, {nf[0]: ctx(nf[1])})
    return StructureTables(params=params, unit=unit, mult=mult, mono=mono)


def export_tables(algebra):
    """Canonical JSON-ready dict of the multiplication table."""
    pos = algebra.position
    mult = []
    for b1 in algebra.basis:
        for b2 in algebra.basis:
            e = algebra.tables.mult[b1, b2]
            if e:
                mult.append([pos[b1], pos[b2], [[pos[b], str(c)] for b, c in e.items()]])
    return {
        "params": algebra.params.as_dict(),
        "conductor": algebra.ctx.M,
        "basis": [[b.family, b.s, b.t] for b in algebra.basis],
        "unit": [[pos[b], str(c)] for b, c in algebra.unit().items()],
        "mult": mult,
    }


def coprime(a, b):
    return gcd(a, b) == 1
