import copy
import dataclasses

import pytest

from suzukihopf.algebra import X11, X12, X21, X22, BasisIndex, Element
from suzukihopf.hopf import (
    AXIOMS, HopfTables, Tensor, antipode, antipode_word, coproduct, counit, hopf_tables, verify_hopf,
)

from conftest import algebra


def gen(alg, g):
    return alg.generator(g)


def test_coproduct_examples():
    alg = algebra(1, 3, 1, -1)
    x11, x12, x21, x22 = (gen(alg, g) for g in (X11, X12, X21, X22))
    assert coproduct(alg, x11) == Tensor.pure(x11, x11) + Tensor.pure(x12, x21)
    assert coproduct(alg, x12) == Tensor.pure(x11, x12) + Tensor.pure(x12, x22)
    sq11, sq12 = x11 * x11, x12 * x12
    assert coproduct(alg, sq11) == Tensor.pure(sq11, sq11) + Tensor.pure(sq12, sq12)


@pytest.mark.parametrize("N,n", [(1, 2), (2, 3), (2, 4)])
def test_generator_coproduct_matrix_form(N, n):
    alg = algebra(N, n, -1, -1)
    for i in (1, 2):
        for j in (1, 2):
            g = lambda a, b: gen(alg, {(1, 1): X11, (1, 2): X12, (2, 1): X21, (2, 2): X22}[a, b])
            rhs = Tensor.pure(g(i, 1), g(1, j)) + Tensor.pure(g(i, 2), g(2, j))
            assert coproduct(alg, g(i, j)) == rhs


def test_counit_examples():
    alg = algebra(2, 3)
    assert counit(alg, gen(alg, X11)) == 1
    assert counit(alg, gen(alg, X12)) == 0
    assert counit(alg, alg.unit()) == 1


def test_antipode_examples():
    alg = algebra(1, 3)
    # N = 1: x11^3 folds back to x11 since s only runs over 1..2
    assert antipode(alg, gen(alg, X11)) == gen(alg, X11)
    big = algebra(2, 3)
    assert antipode(big, gen(big, X11)) == Element(big, {BasisIndex("E", 3, 0): 1})
    assert antipode(alg, alg.unit()) == alg.unit()
    assert antipode(alg, gen(alg, X12)) == Element(alg, {BasisIndex("O", 2, 1): 1})
    assert antipode_word((X11, X12), 1) == (X21,) * 3 + (X11,) * 3


def test_unit_structure():
    alg = algebra(2, 2, -1, 1)
    one = alg.unit()
    assert coproduct(alg, one) == Tensor.pure(one, one)
    assert counit(alg, one) == 1
    assert antipode(alg, one) == one


@pytest.mark.parametrize("N,n,mu,lam", [(1, 2, 1, 1), (2, 3, -1, -1), (1, 5, -1, 1), (2, 4, 1, -1)])
def test_verify_hopf(N, n, mu, lam):
    report = verify_hopf(algebra(N, n, mu, lam))
    assert report.ok, report.to_json()
    assert set(report.to_json()["verdicts"]) == set(AXIOMS)


def test_mutated_multiplication_detected():
    alg = algebra(1, 3)
    bad = copy.copy(alg)
    mono = dict(alg.tables.mono)
    key = (alg.basis[1], alg.basis[2])
    b, sign = mono[key]
    mono[key] = (b, -sign)
    bad.tables = dataclasses.replace(alg.tables, mono=mono)
    report = verify_hopf(bad)
    assert not report.ok
    failed = [k for k, v in report.verdicts.items() if not v]
    assert failed and all(k in report.counterexamples for k in failed)


def test_mutated_coproduct_detected():
    alg = algebra(1, 2)
    good = hopf_tables(alg)
    cop = dict(good.coproduct)
    b = alg.basis[0]
    cop[b] = cop[b].scale(-1)
    report = verify_hopf(alg, HopfTables(cop, good.counit, good.antipode))
    assert not report.ok


def test_mutated_antipode_detected():
    alg = algebra(1, 2)
    good = hopf_tables(alg)
    S = dict(good.antipode)
    b = alg.basis[1]
    S[b] = S[b].scale(2)
    report = verify_hopf(alg, HopfTables(good.coproduct, good.counit, S))
    assert not report.verdicts["antipode_left"] or not report.verdicts["antipode_right"]
