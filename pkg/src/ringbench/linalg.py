"""Sparse exact linear algebra over the coefficient fields.

Vectors are dicts {column index: nonzero scalar}.  The Eliminator keeps a
row-echelon set with deterministic pivoting (least column index first, no
column swaps, insertion order = feed order), which is what makes every
rank, kernel, and span computation downstream reproducible bit for bit.
"""


def vec_add_scaled(dst, src, c, field):
    """dst += c * src, in place, dropping created zeros."""
    for k, v in src.items():
        acc = field.add(dst.get(k, field.zero), field.mul(c, v))
        if field.is_zero(acc):
            dst.pop(k, None)
        else:
            dst[k] = acc
    return dst


def vec_scale(v, c, field):
    return {k: field.mul(c, x) for k, x in v.items()}


class Eliminator:
    """Incremental Gaussian elimination with optional combination tags.

    Feed rows via reduce()/insert(); rows that survive reduction become
    pivots.  When tags are supplied, each stored or returned tag expresses
    the reduced row as a combination of the fed rows, which is how kernels
    fall out: a row reducing to zero hands back its combination.
    """

    def __init__(self, field):
        self.field = field
        self.rows = []  # (pivot col, row dict, tag dict or None)
        self.pivot_cols = {}

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, row, tag=None):
        """Return (residue row, residue tag) without inserting."""
        field = self.field
        row = dict(row)
        tag = dict(tag) if tag is not None else None
        while row:
            p = min(row)
            hit = self.pivot_cols.get(p)
            if hit is None:
                break
            prow, ptag = self.rows[hit][1], self.rows[hit][2]
            c = field.neg(row[p])
            vec_add_scaled(row, prow, c, field)
            if tag is not None and ptag is not None:
                vec_add_scaled(tag, ptag, c, field)
        return row, tag

    def insert(self, row, tag=None):
        """Reduce and, if nonzero, store as a new (normalized) pivot row.

        Returns the residue tag when the row vanished, else None.
        """
        row, tag = self.reduce(row, tag)
        if not row:
            return tag if tag is not None else {}
        field = self.field
        p = min(row)
        inv = field.inv(row[p])
        row = vec_scale(row, inv, field)
        if tag is not None:
            tag = vec_scale(tag, inv, field)
        self.pivot_cols[p] = len(self.rows)
        self.rows.append((p, row, tag))
        return None

    def contains(self, row):
        residue, _ = self.reduce(row)
        return not residue


def rank_of_rows(rows, field):
    el = Eliminator(field)
    for r in rows:
        el.insert(r)
    return el.rank


def nullspace_of_rows(rows, field):
    """Basis of {c : sum_i c[i] * rows[i] = 0}, as sparse dicts on the row
    index set.  Deterministic in the feed order."""
    el = Eliminator(field)
    out = []
    for i, r in enumerate(rows):
        tag = el.insert(r, {i: field.one})
        if tag is not None:
            out.append(tag)
    return out


def span_basis(rows, field):
    """Echelonized basis of the row span, in insertion-discovery order."""
    el = Eliminator(field)
    for r in rows:
        el.insert(r)
    return [row for (_, row, _) in el.rows]


def solve_in_span(basis_rows, target, field):
    """Coefficients expressing target over basis_rows, or None.

    basis_rows need not be echelonized; tags do the bookkeeping.
    """
    el = Eliminator(field)
    for i, r in enumerate(basis_rows):
        el.insert(r, {i: field.one})
    tag = el.insert(target, {})
    if tag is None:
        return None
    # target + sum tag[i] * basis[i] = 0
    return {i: field.neg(c) for i, c in tag.items()}


def is_invertible_dense(matrix_cols, n, field):
    """matrix given as list of n sparse column dicts; True iff rank n."""
    if len(matrix_cols) != n:
        return False
    rows = [{} for _ in range(n)]
    for j, col in enumerate(matrix_cols):
        for i, c in col.items():
            rows[i][j] = c
    return rank_of_rows(rows, field) == n
