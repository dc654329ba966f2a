import pytest

from suzukihopf.algebra import X11, X12, X21, X22
from suzukihopf.automorphisms import make_phi, make_psi
from suzukihopf.coalgebra import comodule_lambda, locate_subcoalgebra, support
from suzukihopf.morphisms import (
    MORPHISM_CHECKS, SingularMapError, compose, from_generator_images, identity_map, inverse,
    is_invertible, twist_comodule, support_transport, verify_hopf_morphism,
)

from conftest import algebra


def gens(alg):
    return {g: alg.generator(g) for g in (X11, X12, X21, X22)}


@pytest.mark.parametrize("N,n,mu,lam", [(1, 2, 1, -1), (2, 3, -1, 1)])
def test_identity_from_generators(N, n, mu, lam):
    alg = algebra(N, n, mu, lam)
    f, wd = from_generator_images(alg, gens(alg))
    assert wd.ok and wd.violated == []
    assert f.is_identity() and f == identity_map(alg)
    report = verify_hopf_morphism(f)
    assert report.ok and set(report.verdicts) == set(MORPHISM_CHECKS)


def test_scaled_x12_violates_relation():
    alg = algebra(1, 3)
    images = gens(alg)
    images[X12] = images[X12].scale(2)
    f, wd = from_generator_images(alg, images)
    assert not wd.ok
    assert "x12^2 = x21^2" in wd.violated
    report = verify_hopf_morphism(f)
    assert not report.verdicts["is_algebra_map"]
    assert "is_algebra_map" in report.counterexamples


def test_missing_generator_rejected():
    alg = algebra(1, 2)
    images = gens(alg)
    del images[X21]
    with pytest.raises(ValueError):
        from_generator_images(alg, images)


def test_compose_and_inverse():
    alg = algebra(2, 4)
    f = make_psi(alg, 1, 1, alg.ctx.root_of_unity(4))
    g = make_phi(alg, 2, 3, -1)
    ident = identity_map(alg)
    assert compose(f, inverse(f)) == ident
    assert compose(inverse(g), g) == ident
    fg = compose(f, g)
    assert inverse(fg) == compose(inverse(g), inverse(f))
    x = alg.generator(X12) * alg.generator(X21) + alg.generator(X11)
    assert fg(x) == f(g(x))


def test_singular_map():
    alg = algebra(1, 2)
    zero = from_generator_images(alg, {g: alg.zero() for g in (X11, X12, X21, X22)})[0]
    assert not is_invertible(zero)
    with pytest.raises(SingularMapError):
        inverse(zero)
    report = verify_hopf_morphism(zero)
    assert not report.verdicts["is_bijective"] and not report.verdicts["is_unital"]


def test_twist_by_identity_is_trivial():
    alg = algebra(2, 3)
    lam = comodule_lambda(alg, 2, 1)
    tw = twist_comodule(identity_map(alg), lam)
    assert tw.matrix == lam.matrix


def test_support_transport_psi():
    alg = algebra(2, 3)
    lam = comodule_lambda(alg, 2, 1)
    psi = make_psi(alg, 1, 1, 1)
    tr = support_transport(psi, lam)
    assert tr["comodule_axioms"] and tr["dimension_preserved"]
    assert tr["equals_inverse_image"] and tr["inverse_twist_maps_back"]
    assert tr["twisted_support"].dimension == 4
    assert locate_subcoalgebra(alg, tr["twisted_support"]) is not None
    assert locate_subcoalgebra(alg, support(lam)) == (2, 1)
