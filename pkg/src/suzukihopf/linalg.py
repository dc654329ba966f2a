"""Exact linear algebra over Q(z_M) on sparse vectors ({key: CycNumber})."""

from fractions import Fraction
from math import gcd


def _content(row):
    """Positive rational g with row/g having coprime integer numerators."""
    den_l = 1
    for c in row.values():
        den_l = den_l * c.den // gcd(den_l, c.den)
    # every coefficient is (integer vector)/den; scale by den_l first
    g = 0
    for c in row.values():
        f = den_l // c.den
        for v in c.num:
            if v:
                g = gcd(g, v * f)
    return Fraction(g, den_l) if g else Fraction(1)


class Echelon:
    """Incremental fraction-free row echelon form.

    Rows are reduced by cross-multiplication (p*row - c*pivot_row) and then
    divided by their rational content, so no field inversions happen.
    """

    def __init__(self, order=None):
        self.rows = {}  # pivot key -> row
        self._order = order

    def _lead(self, row):
        if self._order is None:
            return min(row)
        return min(row, key=self._order)

    def reduce(self, vec):
        row = {k: v for k, v in vec.items() if v}
        while row:
            lead = self._lead(row)
            prow = self.rows.get(lead)
            if prow is None:
                return row
            p = prow[lead]
            c = row[lead]
            new = {}
            for k, v in row.items():
                new[k] = v * p
            for k, v in prow.items():
                nv = new.get(k)
                nv = -(c * v) if nv is None else nv - c * v
                if nv:
                    new[k] = nv
                else:
                    new.pop(k, None)
            if new:
                g = _content(new)
                if g != 1:
                    new = {k: v * (1 / g) for k, v in new.items()}
            row = new
        return row

    def add(self, vec):
        """Insert a vector; returns True if it increased the rank."""
        row = self.reduce(vec)
        if not row:
            return False
        self.rows[self._lead(row)] = row
        return True

    @property
    def rank(self):
        return len(self.rows)

    def contains(self, vec):
        return not self.reduce(vec)


def rank(vectors, order=None):
    ech = Echelon(order)
    for v in vectors:
        ech.add(v)
    return ech.rank


def same_span(a, b):
    ea = Echelon()
    for v in a:
        ea.add(v)
    if not all(ea.contains(v) for v in b):
        return False
    return rank(b) == ea.rank


def invert(columns, keys, one):
    """Invert the square matrix whose k-th column is the sparse vector columns[k].

    ``keys`` lists the row keys in the same order as the columns' source
    basis.  Returns the inverse as a list of columns, or None if singular.
    Gauss-Jordan on [A | I] with field division.
    """
    n = len(keys)
    # rows of the augmented matrix, built from columns
    rows = [dict() for _ in range(n)]
    pos = {k: i for i, k in enumerate(keys)}
    for j, col in enumerate(columns):
        for k, v in col.items():
            if v:
                rows[pos[k]][j] = v
    aug = [dict() for _ in range(n)]
    for i in range(n):
        aug[i][i] = one
    for col in range(n):
        piv = None
        for r in range(col, n):
            if col in rows[r]:
                piv = r
                break
        if piv is None:
            return None
        rows[col], rows[piv] = rows[piv], rows[col]
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = rows[col][col].inverse()
        rows[col] = {k: v * inv for k, v in rows[col].items()}
        aug[col] = {k: v * inv for k, v in aug[col].items()}
        for r in range(n):
            if r == col:
                continue
            c = rows[r].get(col)
            if c is None:
                continue
            for src, dst in ((rows[col], rows[r]), (aug[col], aug[r])):
                for k, v in src.items():
                    nv = dst.get(k)
                    nv = -(c * v) if nv is None else nv - c * v
                    if nv:
                        dst[k] = nv
                    else:
                        dst.pop(k, None)
    # aug now holds A^{-1} as rows; convert to columns keyed by basis keys
    out = [dict() for _ in range(n)]
    for i in range(n):
        for j, v in aug[i].items():
            out[j][keys[i]] = v
    return out
