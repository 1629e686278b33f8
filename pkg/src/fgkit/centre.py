"""Graded centre, degree by degree.

A homogeneous ``z`` of degree ``d`` is graded-central iff it lies in
``sum_i e_i A e_i`` and ``z a = (-1)^d a z`` for every arrow ``a``; the algebra
is generated in degrees 0 and 1 so these equations suffice.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field

from .groebner import InhomogeneousError
from .linalg import axpy, kernel


def _sign(K, d):
    return K.one if d % 2 == 0 else K.neg(K.one)


def _arrow_vectors(A):
    return [A.path_vector((a,))[1] for a in range(len(A.quiver.arrows))]


def _commutator(A, d, vec, a, avec, sign):
    """``z a - sign * a z`` for ``z`` given as a degree-``d`` vector."""
    K = A.field
    out = A.right_mul(d, vec, a)
    out = dict(out)
    axpy(K, out, K.neg(sign), A.mul(1, avec, d, vec))
    return out


def graded_centre_component(A, d):
    """Reduced-echelon basis of degree-``d`` graded-central elements (as FreeElements)."""
    A._check(d + 1)
    K = A.field
    unknowns = [k for k in range(A.dim(d)) if A.src[d][k] == A.tgt[d][k]]
    sign = _sign(K, d)
    arrows = _arrow_vectors(A)
    columns = []
    for k in unknowns:
        col = {}
        for a, avec in enumerate(arrows):
            for c, v in _commutator(A, d, {k: K.one}, a, avec, sign).items():
                col[(a, c)] = v
        columns.append(col)
    basis = []
    for kv in kernel(K, columns):
        basis.append(A.to_element(d, {unknowns[j]: c for j, c in kv.items()}))
    return basis


def is_graded_central(A, z):
    """``(True, None)`` or ``(False, witness)`` with the failing arrow/idempotent and difference."""
    vecs = A.to_vectors(z)
    if len(vecs) > 1 or (not z.is_homogeneous()):
        raise InhomogeneousError("decompose the element into homogeneous components first")
    if not vecs:
        return True, None
    (d, vec), = vecs.items()
    A._check(d + 1)
    K = A.field
    q = A.quiver
    off = {k: c for k, c in vec.items() if A.src[d][k] != A.tgt[d][k]}
    if off:
        k = next(iter(off))
        v = A.src[d][k]
        return False, {"idempotent": f"e_{q.vertices[v]}",
                       "difference": A.to_element(d, off).format(A.order)}
    sign = _sign(K, d)
    for a, avec in enumerate(_arrow_vectors(A)):
        diff = _commutator(A, d, vec, a, avec, sign)
        if diff:
            return False, {"arrow": q.arrows[a], "difference": A.to_element(d + 1, diff).format(A.order)}
    return True, None


def is_central_element(A, z):
    """Every homogeneous component is graded-central."""
    for comp in z.homogeneous_components().values():
        ok, _ = is_graded_central(A, comp)
        if not ok:
            return False
    return True


@dataclass
class CentreReport:
    field: str
    max_degree: int
    bases: dict = dc_field(default_factory=dict)

    def dims(self):
        return {d: len(b) for d, b in sorted(self.bases.items())}

    def to_dict(self, order=None):
        return {
            "field": self.field,
            "max_degree": self.max_degree,
            "dims": {str(d): n for d, n in self.dims().items()},
            "bases": {str(d): [z.format(order) for z in b] for d, b in sorted(self.bases.items())},
        }

    def to_json(self, order=None):
        return json.dumps(self.to_dict(order), indent=2, sort_keys=True)


def graded_centre(A, D=None):
    """Centre report for degrees ``0 .. D`` (default: one below the truncation)."""
    D = A.D - 1 if D is None else D
    rep = CentreReport(A.field.descriptor, D)
    for d in range(D + 1):
        rep.bases[d] = graded_centre_component(A, d)
    return rep
