"""Exact spectral trichotomy for symmetric nonnegative integer matrices.

For connected ``E`` the Perron eigenvalue ``lam`` satisfies ``lam < 2`` iff
``2I - E`` is positive definite, and ``lam == 2`` iff ``2I - E`` has a strictly
positive kernel vector.  Every verdict carries a certificate checkable with
integer arithmetic.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import gcd

import numpy as np

LT2, EQ2, GT2 = "lt2", "eq2", "gt2"


class MatrixError(ValueError):
    pass


@dataclass
class BensonVerdict:
    cls: str
    certificate: dict = dc_field(default_factory=dict)
    diagram: tuple | None = None

    def to_dict(self):
        out = {"class": self.cls, "certificate": self.certificate}
        if self.diagram is not None:
            out["diagram"] = {"name": self.diagram[0], "n": self.diagram[1]}
        return out

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def _validate(E):
    n = len(E)
    if n == 0 or any(len(row) != n for row in E):
        raise MatrixError("matrix must be square and nonempty")
    for i in range(n):
        for j in range(n):
            x = E[i][j]
            if not isinstance(x, (int, np.integer)) or x < 0:
                raise MatrixError("entries must be nonnegative integers")
            if E[j][i] != x:
                raise MatrixError("matrix must be symmetric")
    seen, stack = {0}, [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if E[i][j] and j not in seen:
                seen.add(j)
                stack.append(j)
    if len(seen) != n:
        raise MatrixError("underlying graph must be connected")
    return [[int(x) for x in row] for row in E]


def _two_minus(E):
    n = len(E)
    return [[(2 if i == j else 0) - E[i][j] for j in range(n)] for i in range(n)]


def _leading_minors(M):
    n = len(M)
    out = []
    for k in range(1, n + 1):
        out.append(_det([row[:k] for row in M[:k]]))
    return out


def _det(M):
    n = len(M)
    m = [[Fraction(x) for x in row] for row in M]
    det = Fraction(1)
    for i in range(n):
        piv = next((r for r in range(i, n) if m[r][i] != 0), None)
        if piv is None:
            return 0
        if piv != i:
            m[i], m[piv] = m[piv], m[i]
            det = -det
        det *= m[i][i]
        for r in range(i + 1, n):
            f = m[r][i] / m[i][i]
            if f:
                for c in range(i, n):
                    m[r][c] -= f * m[i][c]
    return int(det) if det.denominator == 1 else det


def _kernel(M):
    """Rational kernel basis of an integer matrix."""
    n = len(M)
    m = [[Fraction(x) for x in row] for row in M]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, n) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        lead = m[r][c]
        m[r] = [x / lead for x in m[r]]
        for i in range(n):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -m[i][f]
        basis.append(v)
    return basis


def _primitive(v):
    den = 1
    for x in v:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    ints = [x // g for x in ints]
    if ints and ints[0] < 0:
        ints = [-x for x in ints]
    return ints


def quadratic_form(M, v):
    n = len(M)
    return sum(v[i] * M[i][j] * v[j] for i in range(n) for j in range(n))


def perron_estimate(E):
    """Floating-point largest eigenvalue (cross-check only)."""
    return float(np.linalg.eigvalsh(np.array(E, dtype=float)).max())


def _negative_vector(M, E):
    n = len(M)
    for i in range(n):
        if M[i][i] < 0:
            return [1 if k == i else 0 for k in range(n)]
    vals, vecs = np.linalg.eigh(np.array(E, dtype=float))
    perron = np.abs(vecs[:, int(np.argmax(vals))])
    for scale in (1, 2, 5, 10, 100, 1000, 10 ** 4, 10 ** 6):
        v = [int(round(x * scale / perron.max())) for x in perron]
        if any(v) and quadratic_form(M, v) < 0:
            return v
    if n <= 8:
        for v in itertools.product(range(4), repeat=n):
            if any(v) and quadratic_form(M, list(v)) < 0:
                return list(v)
    raise ArithmeticError("no negative vector found")


def spectral_class(E):
    E = _validate(E)
    M = _two_minus(E)
    minors = _leading_minors(M)
    if all(m > 0 for m in minors):
        return BensonVerdict(LT2, {"leading_minors": [str(m) for m in minors]})
    ker = _kernel(M)
    if len(ker) == 1:
        v = _primitive(ker[0])
        if all(x > 0 for x in v) or all(x < 0 for x in v):
            v = [abs(x) for x in v]
            verdict = BensonVerdict(EQ2, {"kernel_vector": v})
            verdict.diagram = recognize_diagram(E, _checked=True)
            return verdict
    v = _negative_vector(M, E)
    return BensonVerdict(GT2, {"vector": v, "value": quadratic_form(M, v)})


def verify_certificate(E, verdict):
    M = _two_minus(_validate(E))
    c = verdict.certificate
    if verdict.cls == LT2:
        return all(m > 0 for m in _leading_minors(M))
    if verdict.cls == EQ2:
        v = c["kernel_vector"]
        return all(x > 0 for x in v) and all(sum(M[i][j] * v[j] for j in range(len(v))) == 0
                                             for i in range(len(v)))
    return quadratic_form(M, c["vector"]) < 0


# ---- Euclidean diagrams ---------------------------------------------------


def _from_edges(n, edges, loops=()):
    E = [[0] * n for _ in range(n)]
    for i, j in edges:
        E[i][j] += 1
        E[j][i] += 1
    for i in loops:
        E[i][i] += 1
    return E


def diagram_matrix(name, n=None):
    """Adjacency matrix (loops on the diagonal) of a Euclidean diagram."""
    if name == "A~":
        if n < 1:
            raise ValueError("A~_n needs n >= 1")
        return _from_edges(n + 1, [(i, (i + 1) % (n + 1)) for i in range(n + 1)])
    if name == "D~":
        if n < 4:
            raise ValueError("D~_n needs n >= 4")
        edges = [(0, 2), (1, 2)] + [(i, i + 1) for i in range(2, n - 2)] + [(n - 2, n - 1), (n - 2, n)]
        return _from_edges(n + 1, edges)
    if name == "E6~":
        return _from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6)])
    if name == "E7~":
        return _from_edges(8, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (3, 7)])
    if name == "E8~":
        return _from_edges(9, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 8)])
    if name == "Z~":
        if n == 0:
            return [[2]]
        return _from_edges(n + 1, [(i, i + 1) for i in range(n)], loops=(0, n))
    if name == "DZ~":
        if n < 2:
            raise ValueError("DZ~_n needs n >= 2")
        edges = [(0, 2), (1, 2)] + [(i, i + 1) for i in range(2, n)]
        return _from_edges(n + 1, edges, loops=(n,))
    raise ValueError(f"unknown diagram {name!r}")


def _candidates(size):
    n = size - 1
    out = []
    if n >= 1:
        out.append(("A~", n))
    if n >= 4:
        out.append(("D~", n))
    if size == 7:
        out.append(("E6~", None))
    if size == 8:
        out.append(("E7~", None))
    if size == 9:
        out.append(("E8~", None))
    out.append(("Z~", n))
    if n >= 2:
        out.append(("DZ~", n))
    return out


def _invariants(E):
    n = len(E)
    return (sorted(E[i][i] for i in range(n)), sorted(sum(E[i]) for i in range(n)),
            sorted(tuple(sorted(row)) for row in E))


def isomorphic(E, F):
    n = len(E)
    if len(F) != n or _invariants(E) != _invariants(F):
        return None
    perm = [-1] * n
    used = [False] * n

    def extend(i):
        if i == n:
            return True
        for j in range(n):
            if used[j] or E[i][i] != F[j][j]:
                continue
            if all(E[i][k] == F[j][perm[k]] for k in range(i)):
                perm[i] = j
                used[j] = True
                if extend(i + 1):
                    return True
                used[j] = False
        perm[i] = -1
        return False

    return list(perm) if extend(0) else None


def recognize_diagram(E, _checked=False):
    if not _checked:
        E = _validate(E)
        if spectral_class(E).cls != EQ2:
            raise MatrixError("recognize_diagram needs an eq2 matrix")
    for name, n in _candidates(len(E)):
        if isomorphic(E, diagram_matrix(name, n)) is not None:
            return name, n
    return None
