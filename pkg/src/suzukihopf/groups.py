"""Finite groups as Cayley tables, invariants, and a catalog of all groups of order <= 16."""

from collections import Counter
from functools import lru_cache
from itertools import permutations, product


def cayley_table(elements, mul):
    index = {e: k for k, e in enumerate(elements)}
    return [[index[mul(a, b)] for b in elements] for a in elements]


def identity_index(table):
    n = len(table)
    for e in range(n):
        if all(table[e][k] == k and table[k][e] == k for k in range(n)):
            return e
    return None


def element_orders(table):
    e = identity_index(table)
    orders = []
    for g in range(len(table)):
        k, cur = 1, g
        while cur != e:
            cur = table[cur][g]
            k += 1
        orders.append(k)
    return orders


def signature(table):
    n = len(table)
    abelian = all(table[a][b] == table[b][a] for a in range(n) for b in range(a + 1, n))
    center = sum(1 for a in range(n) if all(table[a][b] == table[b][a] for b in range(n)))
    return (n, abelian, tuple(sorted(element_orders(table))), center)


def _cyclic(m):
    return list(range(m)), lambda a, b: (a + b) % m


def _direct(g, h):
    (ge, gm), (he, hm) = g, h
    return [(a, b) for a in ge for b in he], lambda x, y: (gm(x[0], y[0]), hm(x[1], y[1]))


def _cyclic_semidirect(m, r, k):
    """C_m x| C_k where the generator of C_k acts by a -> r*a."""
    assert pow(r, k, m) == 1 % m
    els = [(a, b) for a in range(m) for b in range(k)]
    return els, lambda x, y: ((x[0] + pow(r, x[1], m) * y[0]) % m, (x[1] + y[1]) % k)


def _dicyclic(n):
    """Order 4n: <a, x | a^2n = 1, x^2 = a^n, x a x^-1 = a^-1>."""
    m = 2 * n

    def mul(p, q):
        (a, x), (b, y) = p, q
        if x == 0:
            return ((a + b) % m, y)
        if y == 0:
            return ((a - b) % m, 1)
        return ((a - b + n) % m, 0)

    return [(a, x) for a in range(m) for x in (0, 1)], mul


def _alternating4():
    els = [p for p in permutations(range(4)) if _parity(p) == 0]
    return els, lambda p, q: tuple(p[q[i]] for i in range(4))


def _parity(p):
    inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return inv % 2


def _klein_by_c4():
    """C2^2 x| C4 with the generator swapping the two factors."""
    els = [(a, b, k) for a in (0, 1) for b in (0, 1) for k in range(4)]

    def act(k, a, b):
        return (b, a) if k % 2 else (a, b)

    def mul(x, y):
        ya, yb = act(x[2], y[0], y[1])
        return ((x[0] + ya) % 2, (x[1] + yb) % 2, (x[2] + y[2]) % 4)

    return els, mul


def _pauli():
    """Pauli group {+-1, +-i} x {I, X, Y, Z} (central product C4 o D4)."""
    # products of Pauli matrices: (p, q) -> (phase exponent of i, result)
    table = {}
    names = "IXYZ"
    for p in names:
        table["I", p] = (0, p)
        table[p, "I"] = (0, p)
        table[p, p] = (0, "I")
    for a, b, c in (("X", "Y", "Z"), ("Y", "Z", "X"), ("Z", "X", "Y")):
        table[a, b] = (1, c)
        table[b, a] = (3, c)
    els = [(k, p) for k in range(4) for p in names]

    def mul(x, y):
        k, p = table[x[1], y[1]]
        return ((x[0] + y[0] + k) % 4, p)

    return els, mul


def _catalog_groups():
    C = _cyclic
    D = lambda n: _cyclic_semidirect(n, n - 1, 2)
    return [
        ("C1", C(1)), ("C2", C(2)), ("C3", C(3)), ("C4", C(4)), ("C2xC2", _direct(C(2), C(2))),
        ("C5", C(5)), ("C6", C(6)), ("S3", D(3)), ("C7", C(7)),
        ("C8", C(8)), ("C4xC2", _direct(C(4), C(2))), ("C2xC2xC2", _direct(_direct(C(2), C(2)), C(2))),
        ("D4", D(4)), ("Q8", _dicyclic(2)),
        ("C9", C(9)), ("C3xC3", _direct(C(3), C(3))),
        ("C10", C(10)), ("D5", D(5)), ("C11", C(11)),
        ("C12", C(12)), ("C6xC2", _direct(C(6), C(2))), ("D6", D(6)), ("Dic3", _dicyclic(3)),
        ("A4", _alternating4()), ("C13", C(13)), ("C14", C(14)), ("D7", D(7)), ("C15", C(15)),
        ("C16", C(16)), ("C8xC2", _direct(C(8), C(2))), ("C4xC4", _direct(C(4), C(4))),
        ("C4xC2xC2", _direct(_direct(C(4), C(2)), C(2))),
        ("C2^4", _direct(_direct(C(2), C(2)), _direct(C(2), C(2)))),
        ("D8", D(8)), ("Q16", _dicyclic(4)), ("SD16", _cyclic_semidirect(8, 3, 2)),
        ("M16", _cyclic_semidirect(8, 5, 2)), ("C4:C4", _cyclic_semidirect(4, 3, 4)),
        ("C2^2:C4", _klein_by_c4()), ("C2xD4", _direct(C(2), D(4))),
        ("C2xQ8", _direct(C(2), _dicyclic(2))), ("Pauli", _pauli()),
    ]


@lru_cache(maxsize=None)
def catalog():
    """signature -> sorted names of the catalog groups sharing it."""
    out = {}
    for name, (els, mul) in _catalog_groups():
        sig = signature(cayley_table(els, mul))
        out.setdefault(sig, []).append(name)
    return {k: tuple(sorted(v)) for k, v in out.items()}


def identify(table):
    """Invariant report: order, abelian flag, element orders, center size, candidates."""
    sig = signature(table)
    n, abelian, orders, center = sig
    return {
        "order": n,
        "abelian": abelian,
        "element_orders": dict(sorted(Counter(orders).items())),
        "center_size": center,
        "candidates": list(catalog().get(sig, ())) if n <= 16 else [],
    }


def is_group(table):
    n = len(table)
    e = identity_index(table)
    if e is None:
        return False
    for a, b, c in product(range(n), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            return False
    return all(any(table[a][b] == e for b in range(n)) for a in range(n))
