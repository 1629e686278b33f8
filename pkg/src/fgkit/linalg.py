"""Sparse exact linear algebra over a :mod:`fgkit.coeff` field.

Vectors are dicts ``column -> raw value`` with no stored zeros.  Columns must
be mutually comparable; elimination always clears the largest column first,
which is what the Groebner-style callers rely on.
"""

from __future__ import annotations


def axpy(K, target, c, vec):
    """``target += c * vec`` in place."""
    add, mul, is_zero = K.add, K.mul, K.is_zero
    for col, v in vec.items():
        w = target.get(col)
        if w is None:
            target[col] = mul(c, v)
        else:
            s = add(w, mul(c, v))
            if is_zero(s):
                del target[col]
            else:
                target[col] = s


def scale(K, c, vec):
    mul = K.mul
    return {col: mul(c, v) for col, v in vec.items()}


class Echelon:
    """Incremental echelon form; each pivot row is monic at its largest column."""

    def __init__(self, K):
        self.K = K
        self.pivots = {}

    def reduce(self, vec):
        """Reduce a copy of ``vec`` until its leading column is not a pivot."""
        K = self.K
        vec = dict(vec)
        pivots = self.pivots
        while vec:
            col = max(vec)
            row = pivots.get(col)
            if row is None:
                return vec
            axpy(K, vec, K.neg(vec[col]), row)
        return vec

    def reduce_full(self, vec):
        """Reduce every pivot column out of ``vec``."""
        K = self.K
        vec = dict(vec)
        pivots = self.pivots
        done = {}
        while vec:
            col = max(vec)
            row = pivots.get(col)
            if row is None:
                done[col] = vec.pop(col)
            else:
                axpy(K, vec, K.neg(vec[col]), row)
        return done

    def add(self, vec):
        """Insert ``vec``; return its leading column, or ``None`` if dependent."""
        vec = self.reduce(vec)
        if not vec:
            return None
        col = max(vec)
        c = vec[col]
        if not self.K.is_one(c):
            vec = scale(self.K, self.K.inv(c), vec)
        self.pivots[col] = vec
        return col

    def __len__(self):
        return len(self.pivots)

    def interreduce(self):
        """Turn the pivot rows into reduced row echelon form."""
        for col in sorted(self.pivots):
            row = self.pivots[col]
            lead = row.pop(col)
            row = self.reduce_full(row)
            row[col] = lead
            self.pivots[col] = row
        return self


def rank(K, vectors):
    ech = Echelon(K)
    for v in vectors:
        ech.add(v)
    return len(ech)


def kernel(K, vectors):
    """Basis of ``{c : sum_j c_j vectors[j] == 0}`` as dicts ``j -> c_j``.

    The basis is returned in reduced echelon form over the index set.
    """
    ech = Echelon(K)
    relations = Echelon(K)
    # tag columns are (0, j) and sort below all data columns (1, col)
    for j, v in enumerate(vectors):
        row = {(1, col): val for col, val in v.items()}
        row[(0, j)] = K.one
        red = ech.reduce(row)
        if red and max(red)[0] == 1:
            ech.add(red)
        elif red:
            relations.add({key[1]: val for key, val in red.items()})
    relations.interreduce()
    return [relations.pivots[c] for c in sorted(relations.pivots)]


def solve_particular(K, vectors, target):
    """Coefficients ``c`` with ``sum_j c_j vectors[j] == target``, or ``None``."""
    ech = Echelon(K)
    for j, v in enumerate(vectors):
        row = {(1, col): val for col, val in v.items()}
        row[(0, j)] = K.one
        ech.add(row)
    red = ech.reduce_full({(1, col): val for col, val in target.items()})
    if any(key[0] == 1 for key in red):
        return None
    # red = target - sum c_j v_j expressed via tag columns with sign flipped
    return {key[1]: K.neg(val) for key, val in red.items()}


def in_span(K, vectors, target):
    ech = Echelon(K)
    for v in vectors:
        ech.add(v)
    return not ech.reduce(target)


def determinant(K, matrix):
    """Determinant of a dense square matrix (list of lists of raw values)."""
    n = len(matrix)
    m = [list(r) for r in matrix]
    det = K.one
    for i in range(n):
        piv = next((r for r in range(i, n) if not K.is_zero(m[r][i])), None)
        if piv is None:
            return K.zero
        if piv != i:
            m[i], m[piv] = m[piv], m[i]
            det = K.neg(det)
        det = K.mul(det, m[i][i])
        inv = K.inv(m[i][i])
        for r in range(i + 1, n):
            if K.is_zero(m[r][i]):
                continue
            f = K.mul(m[r][i], inv)
            for c in range(i, n):
                m[r][c] = K.sub(m[r][c], K.mul(f, m[i][c]))
    return det
