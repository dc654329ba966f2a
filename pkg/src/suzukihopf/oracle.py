"""Brute-force ground truth for normal forms.

Works only with the raw defining relations.  All instances u*(lhs - rhs)*v
up to a length bound are collected, row-reduced over the rationals, and a
word is reduced modulo that span.  A word whose residue is supported on
basis words is thereby *proved* equal to that combination in the algebra.
No code is shared with :func:`suzukihopf.algebra.normal_form`.
"""

from fractions import Fraction
from itertools import product

from .algebra import X11, X12, X21, X22, alternating

_MIXED = {(a, b) for a in (X11, X22) for b in (X12, X21)}
_MIXED |= {(b, a) for a, b in _MIXED}


def _is_killed(word):
    return any((word[k], word[k + 1]) in _MIXED for k in range(len(word) - 1))


def _pure_words(max_len):
    out = [()]
    for letters in ((X11, X22), (X12, X21)):
        for length in range(1, max_len + 1):
            out.extend(product(letters, repeat=length))
    return out


def raw_relations(params):
    """The defining relations as {word: coefficient} dicts (each equal to 0)."""
    N, n, mu, lam = params.N, params.n, params.mu, params.lam
    rels = [
        {(X11, X11): 1, (X22, X22): -1},
        {(X12, X12): 1, (X21, X21): -1},
        {alternating(1, 1, n): 1, alternating(2, 2, n): -1},
        {alternating(2, 1, n): 1, alternating(1, 2, n): -lam},
        {(X11,) * (2 * N): 1, (X12,) * (2 * N): mu, (): -1},
    ]
    return [{w: Fraction(c) for w, c in r.items()} for r in rels]


class RewritingOracle:
    """Reduce words modulo every relation instance of total length <= max_len."""

    def __init__(self, params, max_len):
        self.params = params
        self.max_len = max_len
        self._basis_words = {}
        for fam, lead, tail in (("E", X11, (2, 2)), ("O", X12, (2, 1))):
            for s in range(1, 2 * params.N + 1):
                for t in range(params.n):
                    w = (lead,) * s + alternating(tail[0], tail[1], t)
                    self._basis_words[w] = (fam, s, t)
        self._pivots = {}
        self._build()

    def _key(self, word):
        return (word not in self._basis_words, len(word), word)

    def _build(self):
        affixes = _pure_words(self.max_len)
        for rel in raw_relations(self.params):
            span = max(len(w) for w in rel)
            for u in affixes:
                if len(u) + span > self.max_len:
                    continue
                for v in affixes:
                    if len(u) + len(v) + span > self.max_len:
                        continue
                    row = {}
                    for w, c in rel.items():
                        full = u + w + v
                        if _is_killed(full):
                            continue
                        row[full] = row.get(full, 0) + c
                    row = {w: c for w, c in row.items() if c}
                    if row:
                        self._insert(row)

    def _insert(self, row):
        pivots = self._pivots
        while row:
            top = max(row, key=self._key)
            pr = pivots.get(top)
            if pr is None:
                c = row[top]
                pivots[top] = {w: v / c for w, v in row.items()}
                return
            c = row[top]
            for w, v in pr.items():
                nv = row.get(w, 0) - c * v
                if nv:
                    row[w] = nv
                else:
                    row.pop(w, None)

    def reduce(self, word):
        """Residue of ``word``: {basis label (fam, s, t): Fraction}.

        Raises ``ValueError`` if the bound was too small to reach basis words.
        """
        word = tuple(word)
        if len(word) > self.max_len:
            raise ValueError("word longer than the oracle bound")
        if _is_killed(word):
            return {}
        row = {word: Fraction(1)}
        residue = {}
        while row:
            top = max(row, key=self._key)
            pr = self._pivots.get(top)
            c = row.pop(top)
            if pr is None:
                if top not in self._basis_words:
                    raise ValueError(f"bound {self.max_len} too small for {word}")
                residue[self._basis_words[top]] = c
                continue
            for w, v in pr.items():
                if w == top:
                    continue
                nv = row.get(w, 0) - c * v
                if nv:
                    row[w] = nv
                else:
                    row.pop(w, None)
        return residue


def default_bound(params, word_len):
    return max(word_len, 2 * params.N + params.n) + 1


def compare_with_normal_form(algebra, max_word_len):
    """Check normalize against the oracle on every word up to max_word_len.

    Returns (words checked, list of mismatching words).
    """
    params = algebra.params
    oracle = RewritingOracle(params, default_bound(params, max_word_len))
    letters = (X11, X12, X21, X22)
    checked = 0
    bad = []
    for length in range(max_word_len + 1):
        for word in product(letters, repeat=length):
            want = oracle.reduce(word)
            got = algebra.normalize(word)
            have = {tuple(b): c.as_fraction() for b, c in got.terms.items()}
            checked += 1
            if have != want:
                bad.append(word)
    return checked, bad
