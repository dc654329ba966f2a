"""Exhaustive grid search over the 12 ansatz coefficients.

The pruning constraints are derived mechanically from the ansatz images:
the quadratic defining relations (x11^2 = x22^2, x12^2 = x21^2 and the
eight mixed-parity products), the counit and coproduct compatibility on
the four generators.  Each basis coordinate of each residual is a
polynomial of degree <= 2 in the coefficients.  Survivors are then fully
instantiated and verified; the higher-degree relations are left to that
step.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from . import kernels
from .algebra import SuzukiAlgebra, Generator, X11, X12, X21, X22
from .automorphisms import VARIABLES, AnsatzCoefficients, ansatz_images
from .hopf import Tensor, coproduct, counit, hopf_tables
from .morphisms import from_generator_images, verify_hopf_morphism

GRID_PRESETS = ("default", "small", "roots")


def search_conductor(N):
    return lcm(4, 4 * N)


def search_algebra(params):
    """The algebra over a field large enough for the default grid."""
    return SuzukiAlgebra(params, conductor=search_conductor(params.N))


def coefficient_grid(algebra, preset="default"):
    """Grid values, deduplicated, in a fixed order."""
    ctx = algebra.ctx
    N = algebra.params.N
    half = Fraction(1, 2)
    base = [ctx(0), ctx(1), ctx(-1), ctx(half), ctx(-half)]
    if preset == "small":
        vals = base
    elif preset == "roots":
        vals = [ctx(0)] + _roots(ctx, 4 * N)
    elif preset == "default":
        roots = _roots(ctx, 4 * N)
        vals = base + roots + [r * half for r in roots]
    else:
        raise ValueError(f"unknown grid preset {preset!r}; expected one of {GRID_PRESETS}")
    out = []
    for v in vals:
        if v not in out:
            out.append(v)
    return out


def _roots(ctx, k):
    if ctx.M % k:
        raise ValueError(f"the field Q(z_{ctx.M}) lacks the {k}-th roots of unity")
    return ctx.enumerate_roots(k)


# --- symbolic ansatz -------------------------------------------------------

# a polynomial is {monomial: coefficient}, monomial = () | (v,) | (v, w) with v <= w


def _affine_images(algebra, s, t):
    """generator -> (constant Element, {variable: Element})."""
    zero = {k: 0 for k in VARIABLES}
    const = ansatz_images(algebra, AnsatzCoefficients(s, t, zero))
    lin = {g: {} for g in Generator}
    for v in VARIABLES:
        unit = dict(zero, **{v: 1})
        imgs = ansatz_images(algebra, AnsatzCoefficients(s, t, unit))
        for g in Generator:
            d = imgs[g] - const[g]
            if d:
                lin[g][v] = d
    return {g: (const[g], lin[g]) for g in Generator}


def _mono(*vs):
    return tuple(sorted(vs, key=VARIABLES.index))


def _add(polys, key, mono, c):
    p = polys.setdefault(key, {})
    v = p.get(mono)
    v = c if v is None else v + c
    if v:
        p[mono] = v
    else:
        p.pop(mono, None)


def _add_element(polys, tag, mono, x, sign=1):
    for b, c in x.terms.items():
        _add(polys, (tag, b), mono, c if sign == 1 else -c)


def _add_product(polys, tag, A, B, sign=1):
    """polys[tag] += sign * A * B for affine A, B."""
    (a0, av), (b0, bv) = A, B
    _add_element(polys, tag, (), a0 * b0, sign)
    for v, x in av.items():
        _add_element(polys, tag, _mono(v), x * b0, sign)
    for v, x in bv.items():
        _add_element(polys, tag, _mono(v), a0 * x, sign)
    for v, x in av.items():
        for w, y in bv.items():
            _add_element(polys, tag, _mono(v, w), x * y, sign)


def _add_tensor(polys, tag, mono, tensor, sign=1):
    for key, c in tensor.terms.items():
        _add(polys, (tag, key), mono, c if sign == 1 else -c)


def derive_constraints(algebra, s, t):
    """All scalar constraints (each a polynomial that must vanish) for (s, t)."""
    img = _affine_images(algebra, s, t)
    hopf = hopf_tables(algebra)
    polys = {}
    _add_product(polys, "x11^2-x22^2", img[X11], img[X11])
    _add_product(polys, "x11^2-x22^2", img[X22], img[X22], -1)
    _add_product(polys, "x12^2-x21^2", img[X12], img[X12])
    _add_product(polys, "x12^2-x21^2", img[X21], img[X21], -1)
    for g in Generator:
        for h in Generator:
            if (g.i + g.j + h.i + h.j) % 2:
                _add_product(polys, f"{g}{h}", img[g], img[h])
    for g in Generator:
        c0, cv = img[g]
        tag = f"eps({g})"
        e0 = counit(algebra, c0, hopf) - (1 if g.i == g.j else 0)
        if e0:
            _add(polys, (tag, ()), (), algebra.ctx(e0))
        for v, x in cv.items():
            e = counit(algebra, x, hopf)
            if e:
                _add(polys, (tag, ()), _mono(v), algebra.ctx(e))
        tag = f"Delta({g})"
        _add_tensor(polys, tag, (), coproduct(algebra, c0, hopf))
        for v, x in cv.items():
            _add_tensor(polys, tag, _mono(v), coproduct(algebra, x, hopf))
        for k in (1, 2):
            A, B = img[Generator.of(g.i, k)], img[Generator.of(k, g.j)]
            (a0, av), (b0, bv) = A, B
            _add_tensor(polys, tag, (), Tensor.pure(a0, b0), -1)
            for v, x in av.items():
                _add_tensor(polys, tag, _mono(v), Tensor.pure(x, b0), -1)
            for v, x in bv.items():
                _add_tensor(polys, tag, _mono(v), Tensor.pure(a0, x), -1)
            for v, x in av.items():
                for w, y in bv.items():
                    _add_tensor(polys, tag, _mono(v, w), Tensor.pure(x, y), -1)
    out = []
    seen = set()
    for key in sorted(polys, key=repr):
        p = polys[key]
        if not p:
            continue
        canon = _canonical(p)
        if canon in seen:
            continue
        seen.add(canon)
        out.append((key[0], p))
    return out


def _canonical(p):
    """Key identifying p up to a nonzero scalar multiple."""
    lead = min(p, key=lambda m: (len(m), [VARIABLES.index(v) for v in m]))
    inv = p[lead].inverse()
    return tuple(sorted((m, str(c * inv)) for m, c in p.items()))


# --- integer compilation ---------------------------------------------------


@dataclass
class Problem:
    s: int
    t: int
    order: tuple  # variable assigned at each level
    ngrid: int
    deg: int
    values: list
    level_checks: list
    con_terms: list
    infeasible: bool = False
    constraints: int = 0

    def kernel_args(self):
        return (len(self.order), self.ngrid, self.deg, self.values, self.level_checks, self.con_terms)


def _variable_order(constraints):
    """Greedy: next variable completes the most constraints, then occurs most."""
    varsets = [frozenset(v for m in p for v in m) for _, p in constraints]
    chosen = []
    left = [v for v in VARIABLES if any(v in vs for vs in varsets)]
    done = set()
    while left:
        def score(v):
            now = done | {v}
            completes = sum(1 for vs in varsets if v in vs and vs <= now)
            occurs = sum(1 for vs in varsets if v in vs)
            return (completes, occurs, -VARIABLES.index(v))

        v = max(left, key=score)
        chosen.append(v)
        done.add(v)
        left.remove(v)
    # variables unconstrained by the pruning set still need a value
    chosen += [v for v in VARIABLES if v not in chosen]
    return tuple(chosen)


def compile_problem(algebra, s, t, grid):
    constraints = derive_constraints(algebra, s, t)
    order = _variable_order(constraints)
    level = {v: k for k, v in enumerate(order)}
    ctx = algebra.ctx
    deg = ctx.degree
    ng = len(grid)
    D = 1
    for g in grid:
        D = lcm(D, g.den)
    values = []
    level_checks = [[] for _ in order]
    con_terms = []
    infeasible = False

    def block(c):
        if c.den != 1:
            raise AssertionError("non-integral table entry")
        values.extend(c.num)

    for _, p in constraints:
        L = 1
        for c in p.values():
            L = lcm(L, c.den)
        scale = L * D * D
        terms = []
        for mono, c in sorted(p.items(), key=lambda mc: [level[v] for v in mc[0]]):
            c = c * scale
            off = len(values)
            if len(mono) == 0:
                block(c)
                terms.append((0, 0, 0, off))
            elif len(mono) == 1:
                for g in grid:
                    block(c * g)
                terms.append((1, level[mono[0]], 0, off))
            else:
                l1, l2 = level[mono[0]], level[mono[1]]
                # the table is symmetric (g h = h g), so level order is free
                l1, l2 = min(l1, l2), max(l1, l2)
                for g in grid:
                    for h in grid:
                        block(c * g * h)
                terms.append((2, l1, l2, off))
        top = max((level[v] for m in p for v in m), default=-1)
        if top < 0:
            infeasible = True
            continue
        level_checks[top].append(len(con_terms))
        con_terms.append(tuple(terms))
    return Problem(s, t, order, ng, deg, values, level_checks, con_terms, infeasible, len(constraints))


def run_kernel(problem, kernel=None):
    if problem.infeasible:
        return [], 0
    kernel = kernel or kernels.search
    return kernel(*problem.kernel_args())


# --- driver ----------------------------------------------------------------


@dataclass
class SearchResult:
    maps: list
    grid: list
    backend: str
    per_st: list = field(default_factory=list)

    def keys(self):
        return [f.key() for f in self.maps]

    def to_json(self):
        return {
            "backend": self.backend,
            "grid": [str(g) for g in self.grid],
            "per_subcoalgebra": self.per_st,
            "found": len(self.maps),
        }


def exhaustive_search(algebra, grid=None, preset="default", kernel=None):
    """All verified automorphisms whose coefficients lie on the grid."""
    if grid is None:
        grid = coefficient_grid(algebra, preset)
    grid = [algebra.ctx(g) for g in grid]
    found = {}
    per_st = []
    N, n = algebra.params.N, algebra.params.n
    for s in range(1, N + 1):
        for t in range(1, n):
            prob = compile_problem(algebra, s, t, grid)
            sols, nodes = run_kernel(prob, kernel)
            verified = 0
            for sol in sols:
                vals = {prob.order[k]: grid[g] for k, g in enumerate(sol)}
                f, wd = from_generator_images(algebra, ansatz_images(algebra, AnsatzCoefficients(s, t, vals)))
                if not wd.ok:
                    continue
                if not verify_hopf_morphism(f, stop_early=True).ok:
                    continue
                verified += 1
                found.setdefault(f.key(), f)
            per_st.append({
                "s": s, "t": t, "constraints": prob.constraints,
                "nodes": nodes, "survivors": len(sols), "verified": verified,
            })
    maps = [found[k] for k in sorted(found)]
    backend = "custom" if kernel is not None else kernels.BACKEND
    return SearchResult(maps, grid, backend, per_st)
