"""Group-likes, the simple subcoalgebras C_st, the comodules Lambda_st and supports."""

from dataclasses import dataclass

from .algebra import X11, X12, alternating
from .hopf import Tensor, coproduct, counit, hopf_tables
from .linalg import Echelon, rank, same_span


class TableError(RuntimeError):
    """A structural identity failed; the tables themselves are wrong."""


@dataclass(frozen=True)
class GroupLike:
    element: object
    kind: str  # "g" for x11^2s +- x12^2s, "h" for the chi-tail family
    s: int
    sign: int

    @property
    def label(self):
        return f"{self.kind}_{self.s}^{'+' if self.sign > 0 else '-'}"


def group_likes(algebra):
    """The 4N listed group-likes, each checked to satisfy Delta g = g (x) g and eps(g) = 1."""
    N, n, lam = algebra.params.N, algebra.params.n, algebra.params.lam
    root = algebra.ctx.sqrt_of_sign(lam)
    out = []
    for s in range(1, N + 1):
        a = algebra.normalize((X11,) * (2 * s))
        b = algebra.normalize((X12,) * (2 * s))
        for sign in (1, -1):
            out.append(GroupLike(a + b.scale(sign), "g", s, sign))
        a = algebra.normalize((X11,) * (2 * s + 1) + alternating(2, 2, n - 1))
        b = algebra.normalize((X12,) * (2 * s + 1) + alternating(2, 1, n - 1))
        for sign in (1, -1):
            out.append(GroupLike(a + b.scale(root * sign), "h", s, sign))
    hopf = hopf_tables(algebra)
    for g in out:
        if coproduct(algebra, g.element, hopf) != Tensor.pure(g.element, g.element):
            raise TableError(f"{g.label} is not group-like")
        if counit(algebra, g.element, hopf) != 1:
            raise TableError(f"{g.label} has counit != 1")
    return out


def collisions(glikes):
    """Pairs of labels naming the same element."""
    seen = {}
    found = []
    for g in glikes:
        key = frozenset(g.element.terms.items())
        if key in seen:
            found.append((seen[key], g.label))
        else:
            seen[key] = g.label
    return found


def lemma_group_likes(algebra):
    """The h_s^{+-} as written in the odd-n and even-n Yetter-Drinfeld lemmas.

    odd n = 2m+1:  x11^(2s+1) chi22^(2m) +- sqrt(lam) x12^(2s+1) chi21^(2m)
    even n = 2m:   x11^(2s) chi11^(2m)    +- sqrt(lam) x12^(2s) chi12^(2m)
    """
    N, n, lam = algebra.params.N, algebra.params.n, algebra.params.lam
    m = n // 2
    root = algebra.ctx.sqrt_of_sign(lam)
    out = {}
    for s in range(1, N + 1):
        if n % 2:
            a = algebra.normalize((X11,) * (2 * s + 1) + alternating(2, 2, 2 * m))
            b = algebra.normalize((X12,) * (2 * s + 1) + alternating(2, 1, 2 * m))
        else:
            a = algebra.normalize((X11,) * (2 * s) + alternating(1, 1, 2 * m))
            b = algebra.normalize((X12,) * (2 * s) + alternating(1, 2, 2 * m))
        for sign in (1, -1):
            out[s, sign] = a + b.scale(root * sign)
    return out


@dataclass(frozen=True)
class SimpleSubcoalgebra:
    s: int
    t: int
    span: tuple  # x11^2s chi11^t, x12^2s chi12^t, x11^2s chi22^t, x12^2s chi21^t


def subcoalgebra_span(algebra, s, t):
    return (
        algebra.normalize((X11,) * (2 * s) + alternating(1, 1, t)),
        algebra.normalize((X12,) * (2 * s) + alternating(1, 2, t)),
        algebra.normalize((X11,) * (2 * s) + alternating(2, 2, t)),
        algebra.normalize((X12,) * (2 * s) + alternating(2, 1, t)),
    )


def simple_subcoalgebra(algebra, s, t):
    N, n = algebra.params.N, algebra.params.n
    if not (1 <= s <= N and 1 <= t <= n - 1):
        raise ValueError(f"(s, t) = ({s}, {t}) outside 1..{N} x 1..{n - 1}")
    return SimpleSubcoalgebra(s, t, subcoalgebra_span(algebra, s, t))


def is_subcoalgebra(algebra, span):
    """Delta(span) lies in span (x) span."""
    keys = set()
    for e in span:
        keys.update(e.terms)
    # span elements here are signed basis words, so span (x) span is spanned by key pairs
    ech = Echelon()
    for e in span:
        ech.add(e.terms)
    if ech.rank != len(keys):
        raise ValueError("span is not spanned by basis words")
    hopf = hopf_tables(algebra)
    for e in span:
        for (b1, b2) in coproduct(algebra, e, hopf).terms:
            if b1 not in keys or b2 not in keys:
                return False
    return True


def all_subcoalgebras(algebra):
    N, n = algebra.params.N, algebra.params.n
    return [simple_subcoalgebra(algebra, s, t) for s in range(1, N + 1) for t in range(1, n)]


def decompose(algebra):
    """Check that the group-likes and the C_st together span the algebra as a direct sum."""
    glikes = group_likes(algebra)
    coalgs = all_subcoalgebras(algebra)
    vectors = [g.element.terms for g in glikes]
    g_rank = rank(vectors)
    c_ranks = []
    closed = True
    for c in coalgs:
        c_ranks.append(rank([e.terms for e in c.span]))
        closed = closed and is_subcoalgebra(algebra, c.span)
        vectors.extend(e.terms for e in c.span)
    total = rank(vectors)
    dim = algebra.dim
    expected_total = g_rank + sum(c_ranks)
    return {
        "dim": dim,
        "group_likes": len(glikes),
        "group_like_rank": g_rank,
        "subcoalgebras": len(coalgs),
        "subcoalgebra_ranks": c_ranks,
        "total_rank": total,
        "direct": total == expected_total,
        "closed_under_coproduct": closed,
        "collisions": collisions(glikes),
        "ok": total == dim and total == expected_total and closed,
    }


class Comodule:
    """Left comodule on w_1..w_r with rho(w_j) = sum_i matrix[i][j] (x) w_i."""

    def __init__(self, algebra, matrix, name=""):
        self.algebra = algebra
        self.matrix = tuple(tuple(row) for row in matrix)
        self.rank = len(self.matrix)
        self.name = name

    def coaction(self, j):
        return [(self.matrix[i][j], i) for i in range(self.rank)]

    def entries(self):
        return [e for row in self.matrix for e in row]

    def check_axioms(self):
        """Returns (coassociative, counital) verdicts."""
        alg = self.algebra
        hopf = hopf_tables(alg)
        r = self.rank
        coassoc = True
        counital = True
        for i in range(r):
            for j in range(r):
                lhs = coproduct(alg, self.matrix[i][j], hopf)
                rhs = Tensor._trusted(alg, 2, {})
                for k in range(r):
                    rhs = rhs + Tensor.pure(self.matrix[k][j], self.matrix[i][k])
                if lhs != rhs:
                    coassoc = False
                if counit(alg, self.matrix[i][j], hopf) != (1 if i == j else 0):
                    counital = False
        return coassoc, counital

    def to_json(self):
        return {
            "name": self.name,
            "rank": self.rank,
            "matrix": [[e.to_json() for e in row] for row in self.matrix],
        }


def comodule_lambda(algebra, s, t):
    c11, c21, c22, c12 = simple_subcoalgebra(algebra, s, t).span
    # rho(w1) = c11 (x) w1 + c21 (x) w2 ; rho(w2) = c22 (x) w2 + c12 (x) w1
    com = Comodule(algebra, [[c11, c12], [c21, c22]], name=f"Lambda_{s},{t}")
    coassoc, counital = com.check_axioms()
    if not (coassoc and counital):
        raise TableError(f"Lambda_{s},{t} violates the comodule axioms")
    return com


def trivial_comodule(algebra):
    return Comodule(algebra, [[algebra.unit()]], name="trivial")


@dataclass(frozen=True)
class Support:
    subspace: tuple
    dimension: int

    def equals(self, other):
        return same_span([e.terms for e in self.subspace], [e.terms for e in other.subspace])


def support(comodule):
    entries = tuple(e for e in comodule.entries() if e)
    return Support(entries, rank([e.terms for e in entries]))


def span_support(elements):
    elements = tuple(e for e in elements if e)
    return Support(elements, rank([e.terms for e in elements]))


def locate_subcoalgebra(algebra, supp):
    """The (s, t) with Supp == C_st, or None."""
    for c in all_subcoalgebras(algebra):
        if supp.equals(span_support(c.span)):
            return c.s, c.t
    return None
