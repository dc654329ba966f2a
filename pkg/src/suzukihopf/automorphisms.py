"""The Psi / Phi / Gamma automorphism families, their side conditions, the
ansatz residual system, enumeration of the classified group and its table.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Optional

from .algebra import X11, X12, X21, X22, Generator
from .coalgebra import subcoalgebra_span
from .groups import identify, identity_index
from .morphisms import (
    compose,
    from_generator_images,
    verify_hopf_morphism,
)

VARIABLES = ("a1", "a2", "a3", "b1", "b2", "b3", "d1", "d2", "d3", "e1", "e2", "e3")


@dataclass(frozen=True)
class AutDescriptor:
    variant: str  # "Psi", "Phi" or "Gamma"
    s: int
    t: int = 1
    xi: Optional[object] = None
    theta1: int = 1
    theta2: int = 1

    def label(self):
        if self.variant == "Gamma":
            return f"Gamma[{self.theta1:+d},{self.theta2:+d},s={self.s}]"
        return f"{self.variant}[s={self.s},t={self.t},xi={self.xi}]"

    def to_json(self):
        out = {"variant": self.variant, "s": self.s, "t": self.t}
        if self.variant == "Gamma":
            out.update(theta1=self.theta1, theta2=self.theta2)
        else:
            out["xi"] = str(self.xi)
        return out


def _check_st(algebra, s, t):
    N, n = algebra.params.N, algebra.params.n
    if not (1 <= s <= N and 1 <= t <= n - 1):
        raise ValueError(f"(s, t) = ({s}, {t}) outside 1..{N} x 1..{n - 1}")


def psi_images(algebra, s, t, xi):
    c1, c2, c3, c4 = subcoalgebra_span(algebra, s, t)
    xi = algebra.ctx(xi)
    return {X11: c1, X22: c3, X12: c2.scale(xi), X21: c4.scale(xi.inverse())}


def phi_images(algebra, s, t, xi):
    c1, c2, c3, c4 = subcoalgebra_span(algebra, s, t)
    xi = algebra.ctx(xi)
    return {X11: c3, X22: c1, X12: c4.scale(xi), X21: c2.scale(xi.inverse())}


def gamma_images(algebra, theta1, theta2, s):
    c1, c2, c3, c4 = subcoalgebra_span(algebra, s, 1)
    half = Fraction(1, 2)
    even_sum, odd_sum = c1 + c3, c2 + c4
    even_diff, odd_diff = c1 - c3, c2 - c4
    return {
        X11: (even_sum + odd_sum.scale(theta2)).scale(half),
        X22: (even_sum - odd_sum.scale(theta2)).scale(half),
        X12: (even_diff - odd_diff.scale(theta2)).scale(half * theta1),
        X21: (even_diff + odd_diff.scale(theta2)).scale(half * theta1),
    }


def make_psi(algebra, s, t, xi):
    _check_st(algebra, s, t)
    if not algebra.ctx(xi):
        raise ValueError("xi must be nonzero")
    return from_generator_images(algebra, psi_images(algebra, s, t, xi))[0]


def make_phi(algebra, s, t, xi):
    _check_st(algebra, s, t)
    if not algebra.ctx(xi):
        raise ValueError("xi must be nonzero")
    return from_generator_images(algebra, phi_images(algebra, s, t, xi))[0]


def make_gamma(algebra, theta1, theta2, s):
    if theta1 not in (1, -1) or theta2 not in (1, -1):
        raise ValueError("theta1, theta2 must be +1 or -1")
    _check_st(algebra, s, 1)
    return from_generator_images(algebra, gamma_images(algebra, theta1, theta2, s))[0]


def instantiate(algebra, d):
    if d.variant == "Psi":
        return make_psi(algebra, d.s, d.t, d.xi)
    if d.variant == "Phi":
        return make_phi(algebra, d.s, d.t, d.xi)
    if d.variant == "Gamma":
        return make_gamma(algebra, d.theta1, d.theta2, d.s)
    raise ValueError(f"unknown variant {d.variant!r}")


def _root_order_divides(x, k):
    return x ** k == 1


def conditions_hold(d, params):
    """The side conditions under which the classification lists d."""
    N, n = params.N, params.n
    if not 1 <= d.s <= N:
        return False
    if d.variant == "Gamma":
        return (
            n == 2
            and params.mu == 1
            and params.lam == 1
            and gcd(2 * d.s + 1, N) == 1
            and d.theta1 in (1, -1)
            and d.theta2 in (1, -1)
        )
    if d.variant not in ("Psi", "Phi"):
        return False
    t, xi = d.t, d.xi
    if not 1 <= t <= n - 1 or t % 2 == 0:
        return False
    if gcd(2 * d.s + t, N) != 1:
        return False
    if n == 2:
        return _root_order_divides(xi, 2 * N)
    if 2 * t == n:
        return False
    if n % 2 == 0:
        return _root_order_divides(xi, 2 * N)
    return xi == 1 or xi == -1


@dataclass
class AnsatzCoefficients:
    s: int
    t: int
    values: dict  # variable name -> CycNumber

    def __getattr__(self, name):
        if name in VARIABLES:
            return self.values[name]
        raise AttributeError(name)

    def replace(self, **changes):
        vals = dict(self.values)
        vals.update(changes)
        return AnsatzCoefficients(self.s, self.t, vals)

    def to_json(self):
        return {"s": self.s, "t": self.t, **{k: str(self.values[k]) for k in VARIABLES}}


def ansatz_images(algebra, c):
    c1, c2, c3, c4 = subcoalgebra_span(algebra, c.s, c.t)
    v = {k: algebra.ctx(c.values[k]) for k in VARIABLES}
    one = algebra.ctx.one

    def combo(k1, k3, k2, k4):
        return c1.scale(k1) + c3.scale(k3) + c2.scale(k2) + c4.scale(k4)

    return {
        X11: combo(v["a1"], one - v["a1"], v["a2"], v["a3"]),
        X22: combo(v["b1"], one - v["b1"], v["b2"], v["b3"]),
        X12: combo(v["d1"], -v["d1"], v["d2"], v["d3"]),
        X21: combo(v["e1"], -v["e1"], v["e2"], v["e3"]),
    }


def _slot_index(algebra):
    """basis index -> (s, t, slot, sign) for the basis words spanning each C_st."""
    out = {}
    N, n = algebra.params.N, algebra.params.n
    for s in range(1, N + 1):
        for t in range(1, n):
            for slot, e in enumerate(subcoalgebra_span(algebra, s, t)):
                ((b, c),) = e.terms.items()
                out[b] = (s, t, slot, c)
    return out


def extract_ansatz(f):
    """Read the ansatz coefficients off a map's generator images.

    Returns (AnsatzCoefficients, None) or (None, reason).
    """
    alg = f.algebra
    slots = _slot_index(alg)
    images = {g: f(alg.generator(g)) for g in Generator}
    st = None
    coords = {}
    for g, img in images.items():
        row = [alg.ctx.zero] * 4
        for b, c in img.terms.items():
            where = slots.get(b)
            if where is None:
                return None, f"image of {g} leaves the simple subcoalgebras"
            if st is None:
                st = where[:2]
            elif where[:2] != st:
                return None, f"images span several subcoalgebras"
            row[where[2]] = c / where[3]
        coords[g] = row
    if st is None:
        return None, "zero images"
    one = alg.ctx.one
    vals = {}
    for g, names, pair in (
        (X11, ("a1", "a2", "a3"), one),
        (X22, ("b1", "b2", "b3"), one),
        (X12, ("d1", "d2", "d3"), None),
        (X21, ("e1", "e2", "e3"), None),
    ):
        k1, k2, k3, k4 = coords[g]
        expected3 = one - k1 if pair is not None else -k1
        if k3 != expected3:
            return None, f"image of {g} is outside the ansatz"
        vals[names[0]], vals[names[1]], vals[names[2]] = k1, k2, k4
    return AnsatzCoefficients(st[0], st[1], vals), None


def _clauses():
    """(equation, clause label, t-parity, t vs n/2 selector, residual fn(v, lam))."""
    C = []

    def add(eq, label, parity, half, fn):
        C.append((eq, label, parity, half, fn))

    # t odd
    add(1, "(a1-b1)(1-a1-b1)", "odd", "any", lambda v, l: (v.a1 - v.b1) * (1 - v.a1 - v.b1))
    add(1, "a2^2+a3^2-b2^2-b3^2", "odd", "any", lambda v, l: v.a2 * v.a2 + v.a3 * v.a3 - v.b2 * v.b2 - v.b3 * v.b3)
    add(1, "a2a3-b2b3", "odd", "neq", lambda v, l: v.a2 * v.a3 - v.b2 * v.b3)
    add(1, "(1+lam)(a2a3-b2b3)", "odd", "eq", lambda v, l: (1 + l) * (v.a2 * v.a3 - v.b2 * v.b3))
    add(2, "d1^2-e1^2", "odd", "any", lambda v, l: v.d1 * v.d1 - v.e1 * v.e1)
    add(2, "d2^2+d3^2-e2^2-e3^2", "odd", "any", lambda v, l: v.d2 * v.d2 + v.d3 * v.d3 - v.e2 * v.e2 - v.e3 * v.e3)
    add(2, "d2d3-e2e3", "odd", "neq", lambda v, l: v.d2 * v.d3 - v.e2 * v.e3)
    add(2, "(1+lam)(d2d3-e2e3)", "odd", "eq", lambda v, l: (1 + l) * (v.d2 * v.d3 - v.e2 * v.e3))
    for eq, p, q in ((3, "a", "d"), (4, "b", "d"), (5, "a", "e"), (6, "b", "e")):
        _mixed_clauses(add, eq, p, q, "odd")
    # t even
    add(7, "(a1-b1)(1-a1-b1)", "even", "any", lambda v, l: (v.a1 - v.b1) * (1 - v.a1 - v.b1))
    add(7, "a2a3-b2b3", "even", "any", lambda v, l: v.a2 * v.a3 - v.b2 * v.b3)
    add(7, "a1-b1", "even", "neq", lambda v, l: v.a1 - v.b1)
    add(7, "a2^2-b2^2", "even", "neq", lambda v, l: v.a2 * v.a2 - v.b2 * v.b2)
    add(7, "a3^2-b3^2", "even", "neq", lambda v, l: v.a3 * v.a3 - v.b3 * v.b3)
    add(7, "a2^2+lam a3^2-b2^2-lam b3^2", "even", "eq",
        lambda v, l: v.a2 * v.a2 + l * v.a3 * v.a3 - v.b2 * v.b2 - l * v.b3 * v.b3)
    add(8, "d1^2-e1^2", "even", "any", lambda v, l: v.d1 * v.d1 - v.e1 * v.e1)
    add(8, "d2d3-e2e3", "even", "any", lambda v, l: v.d2 * v.d3 - v.e2 * v.e3)
    add(8, "d2^2-e2^2", "even", "neq", lambda v, l: v.d2 * v.d2 - v.e2 * v.e2)
    add(8, "d3^2-e3^2", "even", "neq", lambda v, l: v.d3 * v.d3 - v.e3 * v.e3)
    add(8, "d2^2+lam d3^2-e2^2-lam e3^2", "even", "eq",
        lambda v, l: v.d2 * v.d2 + l * v.d3 * v.d3 - v.e2 * v.e2 - l * v.e3 * v.e3)
    for eq, p, q in ((9, "a", "d"), (10, "b", "d"), (11, "a", "e"), (12, "b", "e")):
        _mixed_clauses(add, eq, p, q, "even")
    # coproduct compatibility on x11^2s chi11^t and x12^2s chi12^t
    for label, fn in (
        ("a1^2+d1e1-a1", lambda v, l: v.a1 * v.a1 + v.d1 * v.e1 - v.a1),
        ("a2a1+d2e1", lambda v, l: v.a2 * v.a1 + v.d2 * v.e1),
        ("a1a2+d1e2-a2", lambda v, l: v.a1 * v.a2 + v.d1 * v.e2 - v.a2),
        ("a2^2+d2e2", lambda v, l: v.a2 * v.a2 + v.d2 * v.e2),
        ("a1a3+d1e3", lambda v, l: v.a1 * v.a3 + v.d1 * v.e3),
        ("a2a3+d2e3-a1", lambda v, l: v.a2 * v.a3 + v.d2 * v.e3 - v.a1),
        ("a3a1+d3e1-a3", lambda v, l: v.a3 * v.a1 + v.d3 * v.e1 - v.a3),
        ("a3a2+d3e2-(1-a1)", lambda v, l: v.a3 * v.a2 + v.d3 * v.e2 - (1 - v.a1)),
        ("a3^2+d3e3", lambda v, l: v.a3 * v.a3 + v.d3 * v.e3),
    ):
        add(13, label, "any", "any", fn)
    for label, fn in (
        ("a1d1+d1b1-d1", lambda v, l: v.a1 * v.d1 + v.d1 * v.b1 - v.d1),
        ("a1d2+d1b2-d2", lambda v, l: v.a1 * v.d2 + v.d1 * v.b2 - v.d2),
        ("a1d3+d1b3", lambda v, l: v.a1 * v.d3 + v.d1 * v.b3),
        ("a2d1+d2b1", lambda v, l: v.a2 * v.d1 + v.d2 * v.b1),
        ("a2d2+d2b2", lambda v, l: v.a2 * v.d2 + v.d2 * v.b2),
        ("a2d3+d2b3-d1", lambda v, l: v.a2 * v.d3 + v.d2 * v.b3 - v.d1),
        ("a3d1+d3b1-d3", lambda v, l: v.a3 * v.d1 + v.d3 * v.b1 - v.d3),
        ("a3d2+d3b2+d1", lambda v, l: v.a3 * v.d2 + v.d3 * v.b2 + v.d1),
        ("a3d3+d3b3", lambda v, l: v.a3 * v.d3 + v.d3 * v.b3),
    ):
        add(14, label, "any", "any", fn)
    return C


def _mixed_clauses(add, eq, p, q, parity):
    """phi(x_p x_q) = 0 clauses; odd t pairs (2,2),(3,3), even t pairs (2,3),(3,2)."""
    P = lambda v, k: getattr(v, f"{p}{k}")
    Q = lambda v, k: getattr(v, f"{q}{k}")
    add(eq, f"(1-2{p}1){q}1", parity, "any", lambda v, l: (1 - 2 * P(v, 1)) * Q(v, 1))
    if parity == "odd":
        add(eq, f"{p}2{q}2+{p}3{q}3", parity, "any", lambda v, l: P(v, 2) * Q(v, 2) + P(v, 3) * Q(v, 3))
        add(eq, f"{q}1", parity, "neq", lambda v, l: Q(v, 1))
        add(eq, f"{p}2{q}3", parity, "neq", lambda v, l: P(v, 2) * Q(v, 3))
        add(eq, f"{p}3{q}2", parity, "neq", lambda v, l: P(v, 3) * Q(v, 2))
        add(eq, f"{p}2{q}3+lam {p}3{q}2", parity, "eq", lambda v, l: P(v, 2) * Q(v, 3) + l * P(v, 3) * Q(v, 2))
    else:
        add(eq, f"{p}2{q}3+{p}3{q}2", parity, "any", lambda v, l: P(v, 2) * Q(v, 3) + P(v, 3) * Q(v, 2))
        add(eq, f"{q}1", parity, "neq", lambda v, l: Q(v, 1))
        add(eq, f"{p}2{q}2", parity, "neq", lambda v, l: P(v, 2) * Q(v, 2))
        add(eq, f"{p}3{q}3", parity, "neq", lambda v, l: P(v, 3) * Q(v, 3))
        add(eq, f"{p}2{q}2+lam {p}3{q}3", parity, "eq", lambda v, l: P(v, 2) * Q(v, 2) + l * P(v, 3) * Q(v, 3))


_CLAUSES = _clauses()


@dataclass
class ResidualVector:
    case: dict
    entries: list  # (equation, label, value)

    @property
    def zero(self):
        return all(not v for _, _, v in self.entries)

    def nonzero(self):
        return [(eq, label, v) for eq, label, v in self.entries if v]

    def to_json(self):
        return {
            "case": self.case,
            "entries": [[eq, label, str(v)] for eq, label, v in self.entries],
            "all_zero": self.zero,
        }


def residuals(c, params, ctx):
    """Evaluate every clause of the case selected by t's parity and t vs n/2."""
    t, n = c.t, params.n
    parity = "odd" if t % 2 else "even"
    half = "eq" if 2 * t == n else "neq"
    vals = _Coeffs({k: ctx(v) for k, v in c.values.items()})
    entries = []
    for eq, label, par, sel, fn in _CLAUSES:
        if par not in ("any", parity) or sel not in ("any", half):
            continue
        entries.append((eq, label, ctx(fn(vals, params.lam))))
    case = {
        "t_parity": parity,
        "t_equals_half_n": half == "eq",
        # for odd n no integer t equals n/2
        "half_n_branch_reachable": n % 2 == 0,
    }
    return ResidualVector(case, entries)


class _Coeffs:
    __slots__ = ("_v",)

    def __init__(self, v):
        self._v = v

    def __getattr__(self, name):
        return self._v[name]


# --- enumeration ---------------------------------------------------------


@dataclass
class Candidate:
    descriptor: AutDescriptor
    map: object
    well_defined: object
    report: object

    @property
    def verified(self):
        return self.well_defined.ok and self.report.ok

    def first_failure(self):
        if not self.well_defined.ok:
            return f"relation: {self.well_defined.violated[0]}"
        failure = self.report.first_failure()
        return None if failure is None else f"axiom: {failure}"


def descriptor_space(algebra):
    """Every (variant, s, t, xi in G_2N) plus the Gamma labels; no conditions applied."""
    p = algebra.params
    roots = algebra.ctx.enumerate_roots(2 * p.N)
    out = []
    for variant in ("Psi", "Phi"):
        for s in range(1, p.N + 1):
            for t in range(1, p.n):
                for xi in roots:
                    out.append(AutDescriptor(variant, s, t, xi))
    for s in range(1, p.N + 1):
        for th1 in (1, -1):
            for th2 in (1, -1):
                out.append(AutDescriptor("Gamma", s, 1, None, th1, th2))
    return out


def classified_descriptors(algebra):
    return [d for d in descriptor_space(algebra) if conditions_hold(d, algebra.params)]


def check_candidate(algebra, d):
    f = instantiate(algebra, d)
    report = verify_hopf_morphism(f)
    return Candidate(d, f, f.well_defined, report)


@dataclass
class Classification:
    params: object
    candidates: list
    automorphisms: list  # distinct verified maps, sorted by key
    labels: dict  # map key -> descriptor labels
    discrepancies: list
    xi_report: list = field(default_factory=list)

    def dedup_stats(self):
        return {
            "candidates": len(self.candidates),
            "verified_candidates": sum(1 for c in self.candidates if c.verified),
            "distinct_automorphisms": len(self.automorphisms),
        }


def enumerate_classified(algebra, xi_probe=True):
    """Instantiate and verify everything the classification lists."""
    cands = [check_candidate(algebra, d) for d in classified_descriptors(algebra)]
    distinct = {}
    labels = {}
    discrepancies = []
    for c in cands:
        if c.verified:
            k = c.map.key()
            distinct.setdefault(k, c.map)
            labels.setdefault(k, []).append(c.descriptor.label())
        else:
            discrepancies.append(
                {"descriptor": c.descriptor.to_json(), "label": c.descriptor.label(),
                 "first_failure": c.first_failure()}
            )
    autos = [distinct[k] for k in sorted(distinct)]
    xi_report = xi_probe_report(algebra, cands) if xi_probe else []
    return Classification(algebra.params, cands, autos, labels, discrepancies, xi_report)


def xi_probe_report(algebra, candidates=None):
    """For each Psi/Phi (s, t) meeting the non-xi conditions: listed xi vs verified xi."""
    p = algebra.params
    roots = algebra.ctx.enumerate_roots(2 * p.N)
    known = {}
    for c in candidates or ():
        known[c.descriptor] = c
    out = []
    for variant in ("Psi", "Phi"):
        for s in range(1, p.N + 1):
            for t in range(1, p.n):
                # the non-xi conditions: test with xi = 1, which always qualifies
                if not conditions_hold(AutDescriptor(variant, s, t, algebra.ctx.one), p):
                    continue
                listed, verified = [], []
                for xi in roots:
                    d = AutDescriptor(variant, s, t, xi)
                    if conditions_hold(d, p):
                        listed.append(str(xi))
                    c = known.get(d) or check_candidate(algebra, d)
                    if c.verified:
                        verified.append(str(xi))
                out.append({
                    "variant": variant, "s": s, "t": t,
                    "listed_xi": listed, "verified_xi": verified,
                    "agree": listed == verified,
                })
    return out


# --- group structure ------------------------------------------------------


@dataclass
class GroupTable:
    elements: list
    table: list  # table[i][j] = index of elements[i] o elements[j], or None
    closed: bool
    missing: list
    identity: Optional[int]
    inverses: bool

    @property
    def order(self):
        return len(self.elements)

    @property
    def is_group(self):
        return self.closed and self.identity is not None and self.inverses

    def to_json(self):
        return {
            "order": self.order,
            "closed": self.closed,
            "identity": self.identity,
            "inverses": self.inverses,
            "table": self.table,
            "missing": self.missing,
        }


def group_table(maps):
    elements = []
    index = {}
    for f in maps:
        k = f.key()
        if k not in index:
            index[k] = len(elements)
            elements.append(f)
    table = []
    missing = {}
    for i, f in enumerate(elements):
        row = []
        for j, g in enumerate(elements):
            h = compose(f, g)
            hk = h.key()
            k = index.get(hk)
            if k is None:
                # one entry per distinct missing composite, with its first witness
                entry = missing.setdefault(hk, {"left": i, "right": j, "pairs": 0, "composite": h.to_json()})
                entry["pairs"] += 1
            row.append(k)
        table.append(row)
    missing = [missing[k] for k in sorted(missing)]
    closed = not missing
    ident = None
    inverses = False
    if closed:
        ident = identity_index(table)
        if ident is not None:
            inverses = all(ident in row for row in table)
    return GroupTable(elements, table, closed, missing, ident, inverses)


def group_invariants(g):
    if not g.is_group:
        raise ValueError("not a group")
    return identify(g.table)


# --- power identities used for Gamma --------------------------------------


def n2_power_identities(algebra, theta, l):
    """(x11 + th x22)^(2l+1) = 4^l x11^2l (x11 + th x22), same for x12, x21."""
    out = {}
    for a, b, name in ((X11, X22, "x11,x22"), (X12, X21, "x12,x21")):
        base = algebra.generator(a) + algebra.generator(b).scale(theta)
        lhs = base ** (2 * l + 1)
        rhs = (algebra.generator(a) ** (2 * l) * base).scale(4 ** l)
        out[name] = lhs == rhs
    return out


def generated_group(maps, limit=10000):
    """Closure of the maps under composition (finite groups only); None past limit."""
    elements = {}
    for f in maps:
        elements.setdefault(f.key(), f)
    frontier = list(elements.values())
    gens = list(elements.values())
    while frontier:
        nxt = []
        for f in frontier:
            for g in gens:
                h = compose(f, g)
                k = h.key()
                if k not in elements:
                    elements[k] = h
                    nxt.append(h)
                    if len(elements) > limit:
                        return None
        frontier = nxt
    return [elements[k] for k in sorted(elements)]
