"""Exact computations in the Suzuki Hopf algebras A_{Nn}^{mu lambda}.

Scalars live in Q(z_M) with M = lcm(4, 2N) by default; every comparison is
exact.  The main entry points:

    SuzukiAlgebra(AlgebraParams(N, n, mu, lam))   basis, multiplication
    verify_hopf(algebra)                          exhaustive axiom sweep
    decompose(algebra)                            coalgebra decomposition
    enumerate_classified(algebra)                 the Psi / Phi / Gamma maps
    exhaustive_search(search_algebra(params))     grid search for automorphisms
"""

from .algebra import AlgebraParams, BasisIndex, Element, Generator, SuzukiAlgebra, export_tables
from .automorphisms import (
    AutDescriptor,
    conditions_hold,
    enumerate_classified,
    extract_ansatz,
    group_invariants,
    group_table,
    make_gamma,
    make_phi,
    make_psi,
    residuals,
)
from .coalgebra import comodule_lambda, decompose, group_likes, support
from .cyclotomic import CycNumber, FieldContext, ParseError, conductor_for
from .hopf import antipode, coproduct, counit, verify_hopf
from .morphisms import (
    LinearMap,
    compose,
    from_generator_images,
    identity_map,
    inverse,
    support_transport,
    twist_comodule,
    verify_hopf_morphism,
)
from .search import exhaustive_search, search_algebra

__version__ = "0.1.0"
