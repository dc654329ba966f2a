import pytest

from suzukihopf.algebra import X11
from suzukihopf.coalgebra import (
    Comodule, all_subcoalgebras, collisions, comodule_lambda, decompose, group_likes,
    is_subcoalgebra, lemma_group_likes, locate_subcoalgebra, simple_subcoalgebra, support,
    trivial_comodule,
)
from suzukihopf.hopf import Tensor, coproduct

from conftest import GRID, algebra, grid_id


@pytest.mark.parametrize("p", GRID, ids=grid_id)
def test_group_likes_and_decomposition(p):
    alg = algebra(p.N, p.n, p.mu, p.lam)
    glikes = group_likes(alg)
    assert len(glikes) == 4 * p.N
    assert collisions(glikes) == []
    d = decompose(alg)
    assert d["ok"] and d["direct"] and d["closed_under_coproduct"]
    assert d["total_rank"] == 4 * p.N * p.n
    assert d["subcoalgebras"] == p.N * (p.n - 1)
    assert d["subcoalgebra_ranks"] == [4] * (p.N * (p.n - 1))


def test_g_plus_is_unit_for_n1_mu_plus():
    alg = algebra(1, 3, 1, -1)
    g = {x.label: x.element for x in group_likes(alg)}
    assert g["g_1^+"] == alg.unit()
    assert g["g_1^-"] != alg.unit()


@pytest.mark.parametrize("N,n,lam", [(1, 2, 1), (1, 3, -1), (2, 4, -1), (2, 5, 1)])
def test_lemma_variants_match(N, n, lam):
    alg = algebra(N, n, 1, lam)
    listed = {(g.s, g.sign): g.element for g in group_likes(alg) if g.kind == "h"}
    assert lemma_group_likes(alg) == listed


def test_subcoalgebra_coproduct_matrix_form():
    alg = algebra(2, 3, -1, 1)
    c11, c21, c22, c12 = simple_subcoalgebra(alg, 2, 1).span
    c = {(1, 1): c11, (1, 2): c12, (2, 1): c21, (2, 2): c22}
    for i in (1, 2):
        for j in (1, 2):
            # comodule convention: Delta(c_ij) = sum_k c_kj (x) c_ik
            rhs = Tensor.pure(c[1, j], c[i, 1]) + Tensor.pure(c[2, j], c[i, 2])
            assert coproduct(alg, c[i, j]) == rhs


def test_subcoalgebra_range_checked():
    alg = algebra(1, 3)
    with pytest.raises(ValueError):
        simple_subcoalgebra(alg, 2, 1)
    with pytest.raises(ValueError):
        simple_subcoalgebra(alg, 1, 3)


def test_non_subcoalgebra_detected():
    alg = algebra(1, 3)
    x11 = alg.generator(X11)
    assert not is_subcoalgebra(alg, [x11])


@pytest.mark.parametrize("N,n,mu,lam", [(1, 2, 1, 1), (2, 3, -1, 1), (2, 4, 1, -1)])
def test_lambda_comodules(N, n, mu, lam):
    alg = algebra(N, n, mu, lam)
    for c in all_subcoalgebras(alg):
        com = comodule_lambda(alg, c.s, c.t)
        assert com.check_axioms() == (True, True)
        supp = support(com)
        assert supp.dimension == 4
        assert locate_subcoalgebra(alg, supp) == (c.s, c.t)


def test_trivial_comodule():
    alg = algebra(1, 2)
    com = trivial_comodule(alg)
    assert com.check_axioms() == (True, True)
    assert support(com).dimension == 1
    assert locate_subcoalgebra(alg, support(com)) is None


def test_broken_comodule_detected():
    alg = algebra(1, 3)
    c11, c21, c22, c12 = simple_subcoalgebra(alg, 1, 1).span
    # transposed coaction breaks coassociativity
    bad = Comodule(alg, [[c11, c21], [c12, c22]])
    coassoc, counital = bad.check_axioms()
    assert not coassoc and counital
