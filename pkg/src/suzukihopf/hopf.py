"""Coproduct, counit and antipode of A_{Nn}^{mu lambda}, and the Hopf axiom sweep."""

from dataclasses import dataclass, field

from .algebra import Element, Generator, X11, X12, X21, X22, alternating


class Tensor:
    """Sparse element of A^{(x)k}: {(b_1, ..., b_k): coefficient}."""

    __slots__ = ("algebra", "arity", "terms")

    def __init__(self, algebra, arity, terms=None):
        self.algebra = algebra
        self.arity = arity
        self.terms = {}
        if terms:
            for key, c in terms.items():
                c = algebra.ctx(c)
                if c:
                    self.terms[tuple(key)] = c

    @classmethod
    def _trusted(cls, algebra, arity, terms):
        self = object.__new__(cls)
        self.algebra = algebra
        self.arity = arity
        self.terms = terms
        return self

    @classmethod
    def pure(cls, *elements):
        """x_1 (x) x_2 (x) ... for Elements x_i."""
        alg = elements[0].algebra
        terms = {(): alg.ctx.one}
        for e in elements:
            nxt = {}
            for key, c in terms.items():
                for b, v in e.terms.items():
                    _acc(nxt, key + (b,), c * v)
            terms = nxt
        return cls._trusted(alg, len(elements), terms)

    def __eq__(self, other):
        if isinstance(other, Tensor):
            return self.arity == other.arity and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    __hash__ = None

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            _acc(out, k, v)
        return Tensor._trusted(self.algebra, self.arity, out)

    def __neg__(self):
        return Tensor._trusted(self.algebra, self.arity, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = self.algebra.ctx(c)
        out = {k: c * v for k, v in self.terms.items()} if c else {}
        return Tensor._trusted(self.algebra, self.arity, out)

    def __mul__(self, other):
        if not isinstance(other, Tensor):
            return self.scale(other)
        if other.arity != self.arity:
            raise ValueError("tensor arity mismatch")
        mono = self.algebra.tables.mono
        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                key = []
                sign = 1
                for a, b in zip(k1, k2):
                    e = mono[a, b]
                    if e is None:
                        break
                    key.append(e[0])
                    sign *= e[1]
                else:
                    c = c1 * c2
                    _acc(out, tuple(key), c if sign > 0 else -c)
        return Tensor._trusted(self.algebra, self.arity, out)

    def apply(self, position, fn):
        """Apply a linear map fn: BasisIndex -> Tensor/Element at one leg."""
        out = {}
        for key, c in self.terms.items():
            image = fn(key[position])
            if isinstance(image, Element):
                items = (((b,), v) for b, v in image.terms.items())
            else:
                items = image.terms.items()
            for sub, v in items:
                _acc(out, key[:position] + tuple(sub) + key[position + 1 :], c * v)
        width = None
        for key in out:
            width = len(key)
            break
        if width is None:
            # arity of a zero result: infer from fn on any basis element
            probe = fn(self.algebra.basis[0])
            width = self.arity - 1 + (1 if isinstance(probe, Element) else probe.arity)
        return Tensor._trusted(self.algebra, width, out)

    def contract(self, position):
        """Multiply legs position and position+1 together."""
        mono = self.algebra.tables.mono
        out = {}
        for key, c in self.terms.items():
            e = mono[key[position], key[position + 1]]
            if e is None:
                continue
            _acc(out, key[:position] + (e[0],) + key[position + 2 :], c if e[1] > 0 else -c)
        return Tensor._trusted(self.algebra, self.arity - 1, out)

    def to_element(self):
        if self.arity != 1:
            raise ValueError("only 1-tensors convert to elements")
        return Element._trusted(self.algebra, {k[0]: v for k, v in self.terms.items()})

    def to_json(self):
        return [[[str(b) for b in k], str(v)] for k, v in sorted(self.terms.items())]

    def __repr__(self):
        return f"Tensor({self.to_json()})"


def _acc(d, key, value):
    v = d.get(key)
    v = value if v is None else v + value
    if v:
        d[key] = v
    else:
        d.pop(key, None)


@dataclass
class HopfTables:
    coproduct: dict = field(repr=False)
    counit: dict = field(repr=False)
    antipode: dict = field(repr=False)


def build_hopf_tables(algebra):
    params = algebra.params
    ctx = algebra.ctx
    coproduct = {}
    counit = {}
    antipode = {}
    for b in algebra.basis:
        s, t = b.s, b.t
        e_word = algebra.basis_element(b._replace(family="E"))
        o_word = algebra.basis_element(b._replace(family="O"))
        if b.family == "E":
            # x11^s chi22^t (x) same + x12^s chi21^t (x) x21^s chi12^t
            right = algebra.normalize((X21,) * s + alternating(1, 2, t))
            coproduct[b] = Tensor.pure(e_word, e_word) + Tensor.pure(o_word, right)
            counit[b] = ctx.one
        else:
            # x11^s chi22^t (x) x12^s chi21^t + x12^s chi21^t (x) x22^s chi11^t
            right = algebra.normalize((X22,) * s + alternating(1, 1, t))
            coproduct[b] = Tensor.pure(e_word, o_word) + Tensor.pure(o_word, right)
            counit[b] = ctx.zero
        antipode[b] = algebra.normalize(antipode_word(algebra.word_of(b), params.N))
    return HopfTables(coproduct=coproduct, counit=counit, antipode=antipode)


def antipode_word(word, N):
    """S is anti-multiplicative with S(x_ij) = x_ji^(4N-1)."""
    out = ()
    for g in reversed(word):
        out += (Generator(g).transpose,) * (4 * N - 1)
    return out


def hopf_tables(algebra):
    tables = getattr(algebra, "_hopf", None)
    if tables is None:
        tables = build_hopf_tables(algebra)
        algebra._hopf = tables
    return tables


def coproduct(algebra, x, hopf=None):
    hopf = hopf or hopf_tables(algebra)
    out = Tensor._trusted(algebra, 2, {})
    for b, c in x.terms.items():
        out = out + hopf.coproduct[b].scale(c)
    return out


def counit(algebra, x, hopf=None):
    hopf = hopf or hopf_tables(algebra)
    total = algebra.ctx.zero
    for b, c in x.terms.items():
        total = total + c * hopf.counit[b]
    return total


def antipode(algebra, x, hopf=None):
    hopf = hopf or hopf_tables(algebra)
    out = algebra.zero()
    for b, c in x.terms.items():
        out = out + hopf.antipode[b].scale(c)
    return out


AXIOMS = (
    "associativity",
    "unit",
    "coassociativity",
    "counit",
    "delta_multiplicative",
    "counit_multiplicative",
    "antipode_left",
    "antipode_right",
)


@dataclass
class AxiomReport:
    verdicts: dict
    counterexamples: dict

    @property
    def ok(self):
        return all(self.verdicts.values())

    def to_json(self):
        return {
            "verdicts": {k: self.verdicts[k] for k in AXIOMS},
            "counterexamples": {k: self.counterexamples[k] for k in AXIOMS if k in self.counterexamples},
        }


def _elem_json(x):
    if isinstance(x, (Element, Tensor)):
        return x.to_json()
    return str(x)


def verify_hopf(algebra, hopf=None):
    """Exhaustive check of the Hopf algebra axioms on basis tuples."""
    hopf = hopf or hopf_tables(algebra)
    basis = algebra.basis
    mono = algebra.tables.mono
    ctx = algebra.ctx
    unit = algebra.unit()
    verdicts = {k: True for k in AXIOMS}
    cex = {}

    def fail(name, inputs, lhs, rhs):
        if verdicts[name]:
            verdicts[name] = False
            cex[name] = {
                "inputs": [str(b) for b in inputs],
                "lhs": _elem_json(lhs),
                "rhs": _elem_json(rhs),
            }

    def mul_mono(e1, e2):
        if e1 is None or e2 is None:
            return None
        r = mono[e1[0], e2[0]]
        if r is None:
            return None
        return r[0], r[1] * e1[1] * e2[1]

    elems = {b: algebra.basis_element(b) for b in basis}
    for x in basis:
        for y in basis:
            xy = mono[x, y]
            for z in basis:
                left = mul_mono(xy, (z, 1))
                right = mul_mono((x, 1), mono[y, z])
                if left != right:
                    fail("associativity", (x, y, z), elems[x] * elems[y] * elems[z],
                         elems[x] * (elems[y] * elems[z]))
                    break
            if not verdicts["associativity"]:
                break
        if not verdicts["associativity"]:
            break

    for x in basis:
        if unit * elems[x] != elems[x] or elems[x] * unit != elems[x]:
            fail("unit", (x,), unit * elems[x], elems[x])

    delta = hopf.coproduct
    counit_tab = hopf.counit

    def d(b):
        return delta[b]

    for b in basis:
        left = delta[b].apply(0, d)
        right = delta[b].apply(1, d)
        if left != right:
            fail("coassociativity", (b,), left, right)
        # (eps (x) id) Delta(b) = b = (id (x) eps) Delta(b)
        le = _counit_leg(delta[b], 0, counit_tab, algebra)
        re = _counit_leg(delta[b], 1, counit_tab, algebra)
        if le != elems[b] or re != elems[b]:
            fail("counit", (b,), le if le != elems[b] else re, elems[b])

    one_one = Tensor.pure(unit, unit)
    if coproduct(algebra, unit, hopf) != one_one:
        fail("delta_multiplicative", ("1",), coproduct(algebra, unit, hopf), one_one)
    if counit(algebra, unit, hopf) != 1:
        fail("counit_multiplicative", ("1",), counit(algebra, unit, hopf), ctx.one)
    for x in basis:
        for y in basis:
            xy = elems[x] * elems[y]
            lhs = coproduct(algebra, xy, hopf)
            rhs = delta[x] * delta[y]
            if lhs != rhs:
                fail("delta_multiplicative", (x, y), lhs, rhs)
            el = counit(algebra, xy, hopf)
            er = counit_tab[x] * counit_tab[y]
            if el != er:
                fail("counit_multiplicative", (x, y), el, er)

    S = hopf.antipode
    for b in basis:
        expect = unit.scale(counit_tab[b])
        left = delta[b].apply(0, lambda k: S[k]).contract(0).to_element()
        right = delta[b].apply(1, lambda k: S[k]).contract(0).to_element()
        if left != expect:
            fail("antipode_left", (b,), left, expect)
        if right != expect:
            fail("antipode_right", (b,), right, expect)
    if antipode(algebra, unit, hopf) != unit:
        fail("antipode_left", ("1",), antipode(algebra, unit, hopf), unit)

    return AxiomReport(verdicts=verdicts, counterexamples=cex)


def _counit_leg(tensor, position, counit_tab, algebra):
    out = {}
    for key, c in tensor.terms.items():
        e = counit_tab[key[position]]
        if e:
            _acc(out, key[1 - position], c * e)
    return Element._trusted(algebra, out)
