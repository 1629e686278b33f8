"""Quadratic duals: the orthogonal complement of the relation space.

The pairing is ``<ab, cd> = [a == c][b == d]`` on length-2 paths, and the
complement is presented on the same quiver.  With this convention ``R^perp``
presents ``E(Lambda)^op``; for the cyclic family this reproduces the textbook
dual presentation verbatim, so no extra signs are introduced.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import TruncatedAlgebra
from .freealg import FreeElement
from .linalg import kernel, rank
from .quiver import MonomialOrder, Presentation


class NotQuadraticError(ValueError):
    pass


@dataclass
class QuadraticData:
    presentation: Presentation
    blocks: dict       # (i, j) -> (paths in increasing order, relation vectors over path positions)

    def relation_rank(self, i, j):
        paths, vecs = self.blocks.get((i, j), ([], []))
        return rank(self.presentation.field, vecs)


def quadratic_data(p, order=None):
    q = p.quiver
    order = order or MonomialOrder(q)
    for r in p.relations:
        if r.degree != 2:
            raise NotQuadraticError(f"relation {r} is not quadratic")
    blocks = {}
    for path in q.paths_of_length(2):
        key = (q.path_source(path), q.path_target(path))
        blocks.setdefault(key, ([], []))[0].append(path)
    for key, (paths, _) in blocks.items():
        paths.sort(key=order.key)
    for r in p.relations:
        (key,) = r.endpoints()
        paths, vecs = blocks[key]
        pos = {pp: i for i, pp in enumerate(paths)}
        vecs.append({pos[pp]: c for pp, c in r.terms.items()})
    return QuadraticData(p, blocks)


def quadratic_dual(p, order=None, name=None):
    """Presentation whose relations span ``R^perp`` on the same quiver."""
    q = p.quiver
    K = p.field
    order = order or MonomialOrder(q)
    data = quadratic_data(p, order)
    relations = []
    for key in sorted(data.blocks):
        paths, vecs = data.blocks[key]
        # columns of the relation matrix, one per path
        cols = [{} for _ in paths]
        for ri, v in enumerate(vecs):
            for j, c in v.items():
                cols[j][ri] = c
        perp = kernel(K, cols)
        r = rank(K, vecs)
        if r + len(perp) != len(paths):
            raise ArithmeticError(f"dimension check failed at {key}")
        for kv in sorted(perp, key=lambda v: max(v), reverse=True):
            relations.append(FreeElement(q, K, {paths[j]: c for j, c in kv.items()}))
    return Presentation(K, q, relations, dict(p.constants), name if name is not None else
                        (f"dual({p.name})" if p.name else ""))


def same_ideal(p1, p2, D=8, order=None):
    """Equal reduced truncated Groebner bases (as printed text) up to degree ``D``."""
    if p1.quiver != p2.quiver:
        return False
    order = order or MonomialOrder(p1.quiver)
    g1 = TruncatedAlgebra(p1, D, order).groebner_elements()
    g2 = TruncatedAlgebra(p2, D, order).groebner_elements()
    return [g.terms for g in g1] == [g.terms for g in g2]


def dual_text(p, order=None):
    return quadratic_dual(p, order).to_text()
