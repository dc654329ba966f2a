"""Linear endomorphisms of A_{Nn}^{mu lambda}, Hopf-morphism checks, comodule twists."""

from dataclasses import dataclass, field

from .algebra import Element, Generator, X11, X12, X21, X22, alternating
from .coalgebra import Comodule, span_support, support
from .hopf import coproduct, counit, hopf_tables
from .linalg import invert


class SingularMapError(ValueError):
    pass


class LinearMap:
    """Linear map given by the images of the basis (column k = image of basis[k])."""

    def __init__(self, algebra, columns):
        self.algebra = algebra
        self.columns = {b: columns[b] for b in algebra.basis}
        self._inverse = None
        # set by from_generator_images
        self.well_defined = None

    def __call__(self, x):
        out = self.algebra.zero()
        for b, c in x.terms.items():
            out = out + self.columns[b].scale(c)
        return out

    def __eq__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        return self.algebra.params == other.algebra.params and self.columns == other.columns

    def __hash__(self):
        return hash(self.key())

    def key(self):
        """Canonical hashable form, also the deterministic sort key."""
        return tuple(
            tuple((tuple(b), str(c)) for b, c in self.columns[b0].items())
            for b0 in self.algebra.basis
        )

    def matrix(self):
        """Dense matrix of coefficient texts, rows = target basis, columns = source basis."""
        basis = self.algebra.basis
        return [[str(self.columns[src].coefficient(tgt)) for src in basis] for tgt in basis]

    def to_json(self):
        pos = self.algebra.position
        return {
            "basis_order": "E then O, ascending (s, t)",
            "columns": [
                [[pos[b], str(c)] for b, c in self.columns[src].items()] for src in self.algebra.basis
            ],
        }

    def is_identity(self):
        return all(self.columns[b] == self.algebra.basis_element(b) for b in self.algebra.basis)


def identity_map(algebra):
    return LinearMap(algebra, {b: algebra.basis_element(b) for b in algebra.basis})


def compose(f, g):
    """f after g."""
    return LinearMap(f.algebra, {b: f(g.columns[b]) for b in f.algebra.basis})


def inverse(f):
    if f._inverse is None:
        alg = f.algebra
        cols = invert([f.columns[b] for b in alg.basis], alg.basis, alg.ctx.one)
        if cols is None:
            raise SingularMapError("map is not invertible")
        f._inverse = LinearMap(alg, {b: Element(alg, cols[k]) for k, b in enumerate(alg.basis)})
    return f._inverse


def is_invertible(f):
    try:
        inverse(f)
    except SingularMapError:
        return False
    return True


def defining_relations(algebra):
    """Name -> (lhs word(s), rhs) pairs; each evaluates an image-based residual."""
    p = algebra.params
    rels = [
        ("x11^2 = x22^2", [((X11, X11), 1), ((X22, X22), -1)], 0),
        ("x12^2 = x21^2", [((X12, X12), 1), ((X21, X21), -1)], 0),
        ("chi21^n = lambda chi12^n", [(alternating(2, 1, p.n), 1), (alternating(1, 2, p.n), -p.lam)], 0),
        ("chi11^n = chi22^n", [(alternating(1, 1, p.n), 1), (alternating(2, 2, p.n), -1)], 0),
        ("x11^2N + mu x12^2N = 1", [((X11,) * (2 * p.N), 1), ((X12,) * (2 * p.N), p.mu)], 1),
    ]
    for g in Generator:
        for h in Generator:
            if (g.i + g.j + h.i + h.j) % 2:
                rels.append((f"{g}{h} = 0", [((g, h), 1)], 0))
    return rels


@dataclass
class WellDefinedness:
    ok: bool
    violated: list = field(default_factory=list)


def from_generator_images(algebra, images):
    """Extend generator images multiplicatively along basis words.

    Returns (LinearMap, WellDefinedness); the map is only meaningful when the
    images satisfy every defining relation.
    """
    images = {Generator(g): v for g, v in images.items()}
    if set(images) != set(Generator):
        raise ValueError("images required for all four generators")
    violated = []
    for name, terms, rhs in defining_relations(algebra):
        total = algebra.zero()
        for word, c in terms:
            total = total + algebra.product(images[g] for g in word).scale(c)
        target = algebra.unit() if rhs == 1 else algebra.zero()
        if total != target:
            violated.append(name)
    columns = {}
    cache = {(): algebra.unit()}
    for b in algebra.basis:
        word = algebra.word_of(b)
        # basis words share prefixes; reuse partial products
        k = len(word)
        while word[:k] not in cache:
            k -= 1
        acc = cache[word[:k]]
        for j in range(k, len(word)):
            acc = acc * images[word[j]]
            cache[word[: j + 1]] = acc
        columns[b] = acc
    f = LinearMap(algebra, columns)
    f.well_defined = WellDefinedness(not violated, violated)
    return f, f.well_defined


MORPHISM_CHECKS = (
    "is_algebra_map",
    "is_coalgebra_map",
    "commutes_with_antipode",
    "is_bijective",
    "is_unital",
    "is_counital",
)


@dataclass
class MorphismReport:
    verdicts: dict
    counterexamples: dict

    @property
    def ok(self):
        return all(self.verdicts.values())

    def first_failure(self):
        for k in MORPHISM_CHECKS:
            if not self.verdicts[k]:
                return k
        return None

    def to_json(self):
        return {
            "verdicts": {k: self.verdicts[k] for k in MORPHISM_CHECKS},
            "counterexamples": {k: self.counterexamples[k] for k in MORPHISM_CHECKS if k in self.counterexamples},
        }


def verify_hopf_morphism(f, stop_early=False):
    """Exhaustive basis sweep of the Hopf-morphism conditions for f."""
    alg = f.algebra
    hopf = hopf_tables(alg)
    verdicts = {k: True for k in MORPHISM_CHECKS}
    cex = {}

    def fail(name, inputs, lhs, rhs):
        if verdicts[name]:
            verdicts[name] = False
            cex[name] = {
                "inputs": [str(b) for b in inputs],
                "lhs": lhs.to_json() if hasattr(lhs, "to_json") else str(lhs),
                "rhs": rhs.to_json() if hasattr(rhs, "to_json") else str(rhs),
            }

    unit = alg.unit()
    fu = f(unit)
    if fu != unit:
        fail("is_unital", ("1",), fu, unit)
    for b in alg.basis:
        if counit(alg, f.columns[b], hopf) != hopf.counit[b]:
            fail("is_counital", (b,), counit(alg, f.columns[b], hopf), hopf.counit[b])
            break
    if stop_early and not all(verdicts.values()):
        return MorphismReport(verdicts, cex)

    for b in alg.basis:
        lhs = coproduct(alg, f.columns[b], hopf)
        rhs = hopf.coproduct[b].apply(0, lambda k: f.columns[k]).apply(1, lambda k: f.columns[k])
        if lhs != rhs:
            fail("is_coalgebra_map", (b,), lhs, rhs)
            break
    if stop_early and not all(verdicts.values()):
        return MorphismReport(verdicts, cex)

    mono = alg.tables.mono
    cols = f.columns
    for x in alg.basis:
        fx = cols[x]
        for y in alg.basis:
            e = mono[x, y]
            lhs = alg.zero() if e is None else cols[e[0]].scale(e[1])
            rhs = fx * cols[y]
            if lhs != rhs:
                fail("is_algebra_map", (x, y), lhs, rhs)
                break
        if not verdicts["is_algebra_map"]:
            break
    if stop_early and not all(verdicts.values()):
        return MorphismReport(verdicts, cex)

    S = hopf.antipode
    for b in alg.basis:
        lhs = f(S[b])
        rhs = _apply_antipode(alg, cols[b], S)
        if lhs != rhs:
            fail("commutes_with_antipode", (b,), lhs, rhs)
            break

    if not is_invertible(f):
        verdicts["is_bijective"] = False
        cex["is_bijective"] = {"inputs": [], "lhs": "singular", "rhs": "invertible"}
    return MorphismReport(verdicts, cex)


def _apply_antipode(alg, x, S):
    out = alg.zero()
    for b, c in x.terms.items():
        out = out + S[b].scale(c)
    return out


def twist_comodule(psi, comodule):
    """V^psi: same space, coaction (psi^{-1} (x) id) rho."""
    try:
        inv = inverse(psi)
    except SingularMapError:
        raise SingularMapError("twisting needs a bijective map") from None
    matrix = [[inv(e) for e in row] for row in comodule.matrix]
    name = f"{comodule.name}^psi" if comodule.name else "twisted"
    return Comodule(comodule.algebra, matrix, name=name)


def support_transport(psi, comodule):
    """Compare Supp(V^psi) with psi^{-1}(Supp V) and with psi(Supp V).

    Also checks psi(Supp(V^{psi^{-1}})) = Supp V.
    """
    inv = inverse(psi)
    base = support(comodule)
    twisted = twist_comodule(psi, comodule)
    tsupp = support(twisted)
    pre = span_support([inv(e) for e in base.subspace])
    img = span_support([psi(e) for e in base.subspace])
    back = twist_comodule(inv, comodule)
    back_img = span_support([psi(e) for e in support(back).subspace])
    coassoc, counital = twisted.check_axioms()
    return {
        "twisted": twisted,
        "twisted_support": tsupp,
        "comodule_axioms": coassoc and counital,
        "dimension_preserved": tsupp.dimension == base.dimension,
        "equals_inverse_image": tsupp.equals(pre),
        "equals_image": tsupp.equals(img),
        "inverse_twist_maps_back": back_img.equals(base),
    }
