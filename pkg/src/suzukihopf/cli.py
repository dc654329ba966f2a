"""Command-line front end.  Every command prints one canonical JSON envelope

    {"tool_version", "command", "params", "payload"}

and exits 0 on success, 1 when a verdict is false or a discrepancy was
logged, 2 on invalid arguments.
"""

import argparse
import json
import random
import sys

from . import __version__, kernels
from .algebra import X11, X12, X21, X22, AlgebraParams, Element, export_tables
from .automorphisms import (
    AutDescriptor,
    conditions_hold,
    enumerate_classified,
    extract_ansatz,
    generated_group,
    group_invariants,
    group_table,
    instantiate,
    residuals,
)
from .cache import load_algebra
from .coalgebra import (
    TableError,
    collisions,
    comodule_lambda,
    decompose,
    group_likes,
    lemma_group_likes,
    locate_subcoalgebra,
)
from .hopf import antipode, coproduct, verify_hopf
from .morphisms import support_transport, verify_hopf_morphism
from .search import GRID_PRESETS, exhaustive_search, search_conductor

COMMANDS = (
    "algebra-build",
    "algebra-verify",
    "algebra-export",
    "coalgebra-grouplikes",
    "coalgebra-decompose",
    "comodule-twist",
    "aut-list",
    "aut-verify",
    "aut-table",
    "aut-search",
)

DEFAULT_MAX_DIM = 200


class UsageError(Exception):
    pass


def _sign(text):
    if text not in ("+1", "-1"):
        raise argparse.ArgumentTypeError(f"expected +1 or -1, got {text!r}")
    return int(text)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-N", type=int, required=True)
    common.add_argument("-n", type=int, required=True)
    common.add_argument("--mu", type=_sign, required=True, metavar="{+1,-1}")
    common.add_argument("--lambda", dest="lam", type=_sign, required=True, metavar="{+1,-1}")
    common.add_argument("--out", help="write JSON here instead of stdout")
    common.add_argument("--format", choices=("json",), default="json")
    common.add_argument("--seed", type=int, help="seed for the randomized spot checks")
    common.add_argument("--cache-dir", help="table cache directory (also $SUZUKIHOPF_CACHE_DIR)")
    common.add_argument("--max-dim", type=int, default=DEFAULT_MAX_DIM)

    parser = argparse.ArgumentParser(prog="suzukihopf", description="Suzuki Hopf algebra workbench")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name == "comodule-twist":
            p.add_argument("--s", type=int, help="Lambda_{s,t} to twist (default s = N)")
            p.add_argument("--t", type=int, default=1)
        elif name == "aut-verify":
            p.add_argument("--variant", choices=("Psi", "Phi", "Gamma"), required=True)
            p.add_argument("--s", type=int, required=True)
            p.add_argument("--t", type=int, default=1)
            p.add_argument("--xi", default="1", help="cyclotomic text, e.g. 1, -1, z^2")
            p.add_argument("--theta1", type=_sign, default=1, metavar="{+1,-1}")
            p.add_argument("--theta2", type=_sign, default=1, metavar="{+1,-1}")
        elif name == "aut-search":
            p.add_argument("--grid", choices=GRID_PRESETS, default="default")
            p.add_argument("--backend", choices=("auto", "cython", "python"), default="auto")
    return parser


# --- commands: each returns (payload, ok) ----------------------------------


def cmd_algebra_build(alg, args):
    x = alg.generator
    return {
        "dim": alg.dim,
        "conductor": alg.ctx.M,
        "basis": [str(b) for b in alg.basis],
        "basis_words": [" ".join(str(g) for g in alg.word_of(b)) or "1" for b in alg.basis],
        "unit": alg.unit().to_json(),
        "generators": {str(g): x(g).to_json() for g in (X11, X12, X21, X22)},
    }, True


def cmd_algebra_verify(alg, args):
    report = verify_hopf(alg)
    payload = report.to_json()
    ok = report.ok
    if args.seed is not None:
        spot = _random_checks(alg, args.seed)
        payload["randomized"] = spot
        ok = ok and all(spot["verdicts"].values())
    return payload, ok


def _random_checks(alg, seed, rounds=20):
    """Delta and S on random integer combinations: multiplicative / anti-multiplicative."""
    rng = random.Random(seed)

    def sample():
        return Element(alg, {b: rng.randint(-3, 3) for b in rng.sample(alg.basis, min(4, alg.dim))})

    verdicts = {"delta_multiplicative": True, "antipode_antimultiplicative": True}
    for _ in range(rounds):
        x, y = sample(), sample()
        if coproduct(alg, x * y) != coproduct(alg, x) * coproduct(alg, y):
            verdicts["delta_multiplicative"] = False
        if antipode(alg, x * y) != antipode(alg, y) * antipode(alg, x):
            verdicts["antipode_antimultiplicative"] = False
    return {"seed": seed, "rounds": rounds, "verdicts": verdicts}


def cmd_algebra_export(alg, args):
    return export_tables(alg), True


def cmd_coalgebra_grouplikes(alg, args):
    try:
        glikes = group_likes(alg)
    except TableError as exc:
        return {"error": str(exc)}, False
    lemma = lemma_group_likes(alg)
    listed = {(g.s, g.sign): g.element for g in glikes if g.kind == "h"}
    return {
        "count": len(glikes),
        "group_likes": [{"label": g.label, "element": g.element.to_json()} for g in glikes],
        "collisions": [list(c) for c in collisions(glikes)],
        "lemma_variants_agree": {
            f"h_{s}^{'+' if sign > 0 else '-'}": lemma[s, sign] == listed[s, sign] for (s, sign) in sorted(lemma)
        },
    }, len(glikes) == 4 * alg.params.N


def cmd_coalgebra_decompose(alg, args):
    try:
        d = decompose(alg)
    except TableError as exc:
        return {"error": str(exc)}, False
    d["collisions"] = [list(c) for c in d["collisions"]]
    return d, d["ok"]


def cmd_comodule_twist(alg, args):
    N, n = alg.params.N, alg.params.n
    s = args.s if args.s is not None else N
    t = args.t
    if not (1 <= s <= N and 1 <= t <= n - 1):
        raise UsageError(f"(s, t) = ({s}, {t}) outside 1..{N} x 1..{n - 1}")
    lam = comodule_lambda(alg, s, t)
    result = enumerate_classified(alg, xi_probe=False)
    rows = []
    ok = True
    for f in result.automorphisms:
        tr = support_transport(f, lam)
        where = locate_subcoalgebra(alg, tr["twisted_support"])
        row = {
            "automorphism": result.labels[f.key()],
            "twisted_support": None if where is None else {"s": where[0], "t": where[1]},
            "support_dimension": tr["twisted_support"].dimension,
            "comodule_axioms": tr["comodule_axioms"],
            "equals_inverse_image": tr["equals_inverse_image"],
            "equals_image": tr["equals_image"],
            "inverse_twist_maps_back": tr["inverse_twist_maps_back"],
        }
        rows.append(row)
        ok = ok and tr["comodule_axioms"] and where is not None and (tr["equals_inverse_image"] or tr["equals_image"])
    return {"comodule": {"s": s, "t": t}, "twists": rows}, ok and not result.discrepancies


def _classification_payload(result):
    rows = []
    index = {f.key(): k for k, f in enumerate(result.automorphisms)}
    for c in result.candidates:
        rows.append({
            "descriptor": c.descriptor.to_json(),
            "label": c.descriptor.label(),
            "verified": c.verified,
            "first_failure": c.first_failure(),
            "element": index.get(c.map.key()) if c.verified else None,
        })
    return {
        "candidates": rows,
        "dedup": result.dedup_stats(),
        "discrepancies": result.discrepancies,
        "xi_report": result.xi_report,
    }


def cmd_aut_list(alg, args):
    result = enumerate_classified(alg)
    return _classification_payload(result), not result.discrepancies


def cmd_aut_verify(alg, args):
    ctx = alg.ctx
    if args.variant == "Gamma":
        d = AutDescriptor("Gamma", args.s, 1, None, args.theta1, args.theta2)
    else:
        try:
            xi = ctx.parse(args.xi)
        except ValueError as exc:
            raise UsageError(f"bad --xi: {exc}") from None
        if not xi:
            raise UsageError("xi must be nonzero")
        d = AutDescriptor(args.variant, args.s, args.t, xi)
    try:
        f = instantiate(alg, d)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = verify_hopf_morphism(f)
    payload = {
        "descriptor": d.to_json(),
        "conditions_hold": conditions_hold(d, alg.params),
        "well_defined": f.well_defined.ok,
        "violated_relations": f.well_defined.violated,
        "report": report.to_json(),
        "is_identity": f.is_identity(),
    }
    coeffs, why = extract_ansatz(f)
    if coeffs is not None:
        payload["ansatz"] = coeffs.to_json()
        payload["residuals"] = residuals(coeffs, alg.params, ctx).to_json()
    else:
        payload["ansatz"] = None
        payload["ansatz_note"] = why
    return payload, f.well_defined.ok and report.ok


def cmd_aut_table(alg, args):
    result = enumerate_classified(alg, xi_probe=False)
    g = group_table(result.automorphisms)
    payload = {
        "group": g.to_json(),
        "elements": [result.labels[f.key()] for f in g.elements],
        "dedup": result.dedup_stats(),
        "discrepancies": result.discrepancies,
    }
    if g.is_group:
        payload["invariants"] = group_invariants(g)
    else:
        closure = generated_group(result.automorphisms)
        payload["generated_group_order"] = None if closure is None else len(closure)
    return payload, g.is_group and not result.discrepancies


def cmd_aut_search(alg, args):
    kernel = None
    if args.backend == "python":
        kernel = kernels.python_search
    elif args.backend == "cython":
        if kernels.compiled_search is None:
            raise UsageError("the compiled kernel is not built")
        kernel = kernels.compiled_search
    found = exhaustive_search(alg, preset=args.grid, kernel=kernel)
    classified = enumerate_classified(alg, xi_probe=False)
    ck = {f.key() for f in classified.automorphisms}
    sk = set(found.keys())
    pos = {k: i for i, k in enumerate(found.keys())}
    extra = [found.maps[pos[k]] for k in sorted(sk - ck)]
    payload = found.to_json()
    payload["backend"] = "python" if args.backend == "python" else ("cython" if args.backend == "cython" else kernels.BACKEND)
    payload.update({
        "classified": len(ck),
        "found_contains_classified": ck <= sk,
        "equal": ck == sk,
        "missing_from_search": len(ck - sk),
        "extra_in_search": [_ansatz_json(f) for f in extra],
        "discrepancies": classified.discrepancies,
    })
    return payload, ck == sk and not classified.discrepancies


def _ansatz_json(f):
    coeffs, why = extract_ansatz(f)
    return coeffs.to_json() if coeffs is not None else {"note": why}


HANDLERS = {
    "algebra-build": cmd_algebra_build,
    "algebra-verify": cmd_algebra_verify,
    "algebra-export": cmd_algebra_export,
    "coalgebra-grouplikes": cmd_coalgebra_grouplikes,
    "coalgebra-decompose": cmd_coalgebra_decompose,
    "comodule-twist": cmd_comodule_twist,
    "aut-list": cmd_aut_list,
    "aut-verify": cmd_aut_verify,
    "aut-table": cmd_aut_table,
    "aut-search": cmd_aut_search,
}


def render(envelope):
    return json.dumps(envelope, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def run(argv=None, stdout=None):
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        params = AlgebraParams(args.N, args.n, args.mu, args.lam)
    except ValueError as exc:
        print(f"suzukihopf: error: {exc}", file=sys.stderr)
        return 2
    if params.dim > args.max_dim:
        print(f"suzukihopf: error: dimension {params.dim} exceeds --max-dim {args.max_dim}", file=sys.stderr)
        return 2
    conductor = search_conductor(params.N) if args.command == "aut-search" else None
    alg = load_algebra(params, args.cache_dir, conductor=conductor)
    try:
        payload, ok = HANDLERS[args.command](alg, args)
    except UsageError as exc:
        print(f"suzukihopf: error: {exc}", file=sys.stderr)
        return 2
    envelope = {
        "tool_version": __version__,
        "command": args.command,
        "params": params.as_dict(),
        "payload": payload,
    }
    text = render(envelope)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return 0 if ok else 1


def main():
    sys.exit(run())
