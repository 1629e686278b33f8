"""Finite generation of a truncated algebra over a set of central elements.

``q_d = dim E_d - dim sum_j z_j E_{d - deg z_j}``.  By graded Nakayama the
algebra is module-finite over ``k[z_1..z_k]`` iff ``q_d`` vanishes for all
large ``d``; at a truncation we can only observe a trailing window.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field as dc_field

from .centre import is_graded_central
from .groebner import InhomogeneousError
from .linalg import Echelon

FG = "finitely-generated-up-to-bound"
NOT_FG = "not-finitely-generated-up-to-bound"
INCONCLUSIVE = "inconclusive"


class NonCentralError(ValueError):
    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


class DegenerateGeneratorError(ValueError):
    pass


@dataclass
class FgReport:
    generator_degrees: list
    max_degree: int
    window: int
    dims: list = dc_field(default_factory=list)
    quotient_dims: list = dc_field(default_factory=list)
    verdict: str = INCONCLUSIVE
    field: str = ""
    note: str = ""

    def to_dict(self):
        return {
            "field": self.field,
            "generator_degrees": self.generator_degrees,
            "max_degree": self.max_degree,
            "window": self.window,
            "dims": self.dims,
            "quotient_dims": self.quotient_dims,
            "verdict": self.verdict,
            "note": self.note,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def table(self):
        lines = ["degree  dim  q_d"]
        for d, (n, qd) in enumerate(zip(self.dims, self.quotient_dims)):
            lines.append(f"{d:6d} {n:4d} {qd:4d}")
        lines.append(f"verdict: {self.verdict} (window {self.window})")
        return "\n".join(lines)


def _prepare(A, Z, check):
    gens = []
    for z in Z:
        if z.is_zero():
            raise DegenerateGeneratorError("zero generator")
        if not z.is_homogeneous():
            raise InhomogeneousError(f"generator {z} is not homogeneous")
        vec = A.to_vector(z)
        if not vec:
            raise DegenerateGeneratorError(f"generator {z} is zero in the algebra")
        d = z.degree
        if check:
            ok, wit = is_graded_central(A, z)
            if not ok:
                raise NonCentralError(f"generator {z.format(A.order)} is not graded-central", wit)
        if d == 0:
            continue
        gens.append((d, vec))
    return gens


def _window_verdict(qs, D, W, has_positive):
    window = qs[D - W + 1:D + 1] if W <= D else qs[:D + 1]
    if has_positive and all(x == 0 for x in window):
        return FG
    if not has_positive or (all(x > 0 for x in window)
                            and all(a <= b for a, b in zip(window, window[1:]))):
        return NOT_FG
    return INCONCLUSIVE


def module_quotient_dims(A, Z, D=None, W=None, check=True, corner=None):
    """Report ``q_d`` for ``d <= D`` and a verdict over the trailing window of width ``W``.

    ``corner`` restricts to ``e_i A e_i`` (vertex index).
    """
    D = A.D if D is None else D
    A._check(D)
    gens = _prepare(A, Z, check)
    if W is None:
        W = max((d for d, _ in gens), default=1)
    W = max(W, 1)
    K = A.field
    dims, qs = [], []
    for d in range(D + 1):
        idx = (A.basis_between(d, corner, corner) if corner is not None else list(range(A.dim(d))))
        allowed = set(idx)
        ech = Echelon(K)
        for dz, zv in gens:
            if dz > d:
                continue
            src = A.basis_between(d - dz, corner, corner) if corner is not None else range(A.dim(d - dz))
            for m in src:
                prod = A.mul(dz, zv, d - dz, {m: K.one})
                if corner is not None:
                    prod = {k: c for k, c in prod.items() if k in allowed}
                if prod:
                    ech.add(prod)
        dims.append(len(idx))
        qs.append(len(idx) - len(ech))
    rep = FgReport([d for d, _ in gens], D, W, dims, qs, field=K.descriptor)
    rep.verdict = _window_verdict(qs, D, W, bool(gens))
    return rep


def local_subalgebra(A, vertex):
    return A.local(vertex)


# ---- span statements ----------------------------------------------------


def monomials(A, gens, max_factors, D):
    """Products of 1..``max_factors`` of the ``(deg, vec)`` generators, up to degree ``D``.

    Returns ``{degree: [vec, ...]}``; the empty product is left to the caller.
    """
    out = {}
    layer = [(0, None)]
    for _ in range(max_factors):
        nxt = []
        for d, v in layer:
            for dg, gv in gens:
                if d + dg > D:
                    continue
                prod = gv if v is None else A.mul(d, v, dg, gv)
                if prod:
                    nxt.append((d + dg, prod))
                    out.setdefault(d + dg, []).append(prod)
        layer = nxt
    return out


def central_span_dims(A, central, spanning, D, corner=None):
    """Per degree ``d <= D``: ``(dim target, dim of k[central]-span of spanning)``.

    ``central`` and ``spanning`` are ``(deg, vec)`` lists; ``spanning`` is a
    dict ``degree -> [vec]``.  The target is ``A_d`` or ``e_i A_d e_i``.
    """
    K = A.field
    spans = []
    result = []
    for d in range(D + 1):
        ech = Echelon(K)
        for v in spanning.get(d, []):
            ech.add(v)
        for dz, zv in central:
            if 0 < dz <= d:
                for row in spans[d - dz]:
                    prod = A.mul(dz, zv, d - dz, row)
                    if prod:
                        ech.add(prod)
        spans.append(list(ech.pivots.values()))
        target = len(A.basis_between(d, corner, corner)) if corner is not None else A.dim(d)
        result.append((target, len(ech)))
    return result


def generated_subalgebra_dims(A, gens, D, vertex=None):
    """Degreewise dims of the subalgebra generated by ``gens`` (plus ``e_vertex`` or 1)."""
    K = A.field
    q = A.quiver
    if vertex is None:
        unit = {v: K.one for v in range(len(q.vertices))}
    else:
        unit = {vertex: K.one}
    spans = [[unit]]
    out = [1]
    for d in range(1, D + 1):
        ech = Echelon(K)
        for dg, gv in gens:
            if 0 < dg <= d:
                for row in spans[d - dg]:
                    prod = A.mul(dg, gv, d - dg, row)
                    if prod:
                        ech.add(prod)
        spans.append(list(ech.pivots.values()))
        out.append(len(ech))
    return out


def words_in(alphabet, max_len):
    """All words of length ``<= max_len`` over ``alphabet`` (tuples)."""
    for n in range(max_len + 1):
        yield from itertools.product(alphabet, repeat=n)


def local_span_report(A, vertex, central, generators, max_factors, D):
    """Does ``e_v A e_v`` lie in the ``k[central]``-span of short monomials?

    ``central`` and ``generators`` are homogeneous FreeElements at ``vertex``.
    Returns ``(ok, [(dim e_v A_d e_v, dim span), ...])``.
    """
    A._check(D)
    K = A.field

    def pairs(elems):
        out = []
        for z in elems:
            for d, v in A.to_vectors(z).items():
                out.append((d, v))
        return out

    span = monomials(A, pairs(generators), max_factors, D)
    span.setdefault(0, []).append({vertex: K.one})
    rows = central_span_dims(A, pairs(central), span, D, corner=vertex)
    return all(t == s for t, s in rows), rows
