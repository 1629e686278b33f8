"""Catalog of weakly symmetric radical-cube-zero algebras of Euclidean type.

Each family yields ``Lambda`` and the stated presentation of ``E(Lambda)^op``
on the same quiver, plus recipes for the explicit central elements.  Arrow
names: ``a0``, ``abar0`` (reverse of ``a0``), loops ``b``/``c``, ``x1`` etc.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field as dc_field
from functools import reduce
from math import lcm

from .algebra import TruncatedAlgebra
from .coeff import Scalar, field_from_spec, unity_order, is_root_of_unity
from .freealg import FreeElement
from .koszul import quadratic_data, quadratic_dual
from .linalg import rank
from .quiver import MonomialOrder, Presentation, Quiver

FAMILIES = ("A~", "Z~", "DZ~", "D~", "E6~", "E7~", "E8~", "qext", "radsq")


class CatalogError(ValueError):
    pass


@dataclass
class FamilySpec:
    family: str
    params: dict
    field: object
    lambda_presentation: Presentation
    dual_presentation: Presentation
    expected_fg: bool
    recipes: dict = dc_field(default_factory=dict)
    order: MonomialOrder = None
    notes: list = dc_field(default_factory=list)
    _algebras: dict = dc_field(default_factory=dict, repr=False)

    @property
    def quiver(self):
        return self.dual_presentation.quiver

    def el(self, text):
        """Element of the dual's path algebra from text."""
        return self.dual_presentation.element(text)

    def dual_algebra(self, D):
        hit = self._algebras.get(("dual", D))
        if hit is None:
            for (kind, d), A in self._algebras.items():
                if kind == "dual" and d >= D:
                    return A
            hit = TruncatedAlgebra(self.dual_presentation, D, self.order)
            self._algebras[("dual", D)] = hit
        return hit

    def lambda_algebra(self, D=4):
        hit = self._algebras.get(("lambda", D))
        if hit is None:
            hit = TruncatedAlgebra(self.lambda_presentation, D, self.order)
            self._algebras[("lambda", D)] = hit
        return hit

    def element_names(self):
        return sorted(self.recipes)

    def describe(self):
        return {
            "family": self.family,
            "params": {k: str(v) for k, v in self.params.items()},
            "field": self.field.descriptor,
            "vertices": len(self.quiver.vertices),
            "arrows": len(self.quiver.arrows),
            "lambda_relations": len(self.lambda_presentation.relations),
            "dual_relations": len(self.dual_presentation.relations),
            "expected_fg": self.expected_fg,
            "elements": self.element_names(),
            "notes": self.notes,
        }


# ---- helpers ------------------------------------------------------------


def _rels(P, texts):
    out = []
    seen = set()
    for t in texts:
        if t in seen:
            continue
        seen.add(t)
        out.append(P(t))
    return out


def shortest_path(quiver, s, t):
    """Arrow tuple of a shortest path ``s -> t`` (trivial path when equal)."""
    if s == t:
        return quiver.trivial(s)
    prev = {s: None}
    queue = deque([s])
    while queue:
        v = queue.popleft()
        for a in quiver.out_arrows[v]:
            w = quiver.target[a]
            if w not in prev:
                prev[w] = (v, a)
                if w == t:
                    path = []
                    while prev[w] is not None:
                        v0, a0 = prev[w]
                        path.append(a0)
                        w = v0
                    return tuple(reversed(path))
                queue.append(w)
    raise CatalogError(f"no path from {s} to {t}")


def transport(w, s):
    """``w[s]``: conjugate a cycle ``w`` at its vertex ``v`` to vertex ``s`` along shortest paths."""
    q = w.quiver
    K = w.field
    ends = w.endpoints()
    if len(ends) != 1:
        raise CatalogError("transport needs an element supported on cycles at one vertex")
    (v, v2), = ends
    if v != v2:
        raise CatalogError("transport needs a cycle")
    s = q.vindex[str(s)] if not isinstance(s, int) else s
    there = FreeElement(q, K, {shortest_path(q, s, v): K.one})
    back = FreeElement(q, K, {shortest_path(q, v, s): K.one})
    return there * w * back


def _sum(elements, quiver, K):
    return reduce(lambda a, b: a + b, elements, FreeElement(quiver, K))


def _field(field, default="Q"):
    if field is None:
        return field_from_spec(default)
    if isinstance(field, str):
        return field_from_spec(field)
    return field


def _scalar(K, q, default=1):
    if q is None:
        q = default
    if isinstance(q, str):
        return K.parse(q, {})
    return K.coerce(q)


def _presentation(K, quiver, rel_texts, constants, name):
    def P(text):
        from .freealg import parse_element
        return parse_element(quiver, K, text, constants)
    return Presentation(K, quiver, _rels(P, rel_texts), dict(constants), name)


def _arm_map(quiver, pairs):
    """Arrow-name map swapping arrows pairwise (both directions listed once)."""
    m = {a: a for a in quiver.arrows}
    for x, y in pairs:
        m[x], m[y] = y, x
    return m


def apply_arrow_map(w, mapping):
    q = w.quiver
    K = w.field
    images = {a: FreeElement(q, K, {(q.aindex[mapping[a]],): K.one}) for a in q.arrows}
    return w.map_arrows(q, images)


# ---- families -----------------------------------------------------------


def _a_tilde(n, q, K):
    if n < 1:
        raise CatalogError("A~_n needs n >= 1")
    N = n + 1
    verts = [str(i) for i in range(N)]
    arrows = [(f"abar{i}", str((i + 1) % N), str(i)) for i in range(N)]
    arrows += [(f"a{i}", str(i), str((i + 1) % N)) for i in range(N)]
    Q = Quiver(verts, arrows)
    consts = {"q": q}
    lam = [f"a{i}*a{(i + 1) % N}" for i in range(N)]
    lam += [f"abar{(i + 1) % N}*abar{i}" for i in range(N)]
    lam += [f"a{i}*abar{i} + abar{i - 1}*a{i - 1}" for i in range(1, N)]
    lam += [f"a0*abar0 + q*abar{n}*a{n}"]
    dual = [f"a{i}*abar{i} - abar{i - 1}*a{i - 1}" for i in range(1, N)]
    dual += [f"q*a0*abar0 - abar{n}*a{n}"]
    L = _presentation(K, Q, lam, consts, f"A~{n}")
    E = _presentation(K, Q, dual, consts, f"E(A~{n})^op")

    def cyc(i, bar):
        if not bar:
            names = [f"a{(i + k) % N}" for k in range(N)]
        else:
            names = [f"abar{(i - 1 - k) % N}" for k in range(N)]
        return "*".join(names)

    recipes = {
        "x": lambda s: _sum([s.el(cyc(i, False)) for i in range(N)], Q, K),
        "y": lambda s: _sum([s.el(cyc(i, True)) for i in range(N)], Q, K),
    }
    return L, E, recipes


def _z_tilde(n, q, K):
    if n < 1:
        raise CatalogError("Z~_n needs n >= 1 (n = 0 is the two-variable quantum exterior algebra)")
    verts = [str(i) for i in range(n + 1)]
    arrows = [("b", "0", "0"), ("c", str(n), str(n))]
    arrows += [(f"abar{i}", str(i + 1), str(i)) for i in range(n)]
    arrows += [(f"a{i}", str(i), str(i + 1)) for i in range(n)]
    Q = Quiver(verts, arrows)
    consts = {"q": q}
    m = n - 1
    lam = ["b*b + a0*abar0", "b*a0", "abar0*b"]
    lam += [f"a{i}*a{i + 1}" for i in range(n - 1)]
    lam += [f"abar{i}*abar{i - 1}" for i in range(1, n)]
    lam += [f"a{i}*abar{i} + abar{i - 1}*a{i - 1}" for i in range(1, n)]
    lam += [f"a{m}*c", f"c*abar{m}", f"c*c + q*abar{m}*a{m}"]
    dual = ["b*b - a0*abar0"]
    dual += [f"a{i}*abar{i} - abar{i - 1}*a{i - 1}" for i in range(1, n)]
    dual += [f"q*c*c - abar{m}*a{m}"]
    L = _presentation(K, Q, lam, consts, f"Z~{n}")
    E = _presentation(K, Q, dual, consts, f"E(Z~{n})^op")

    def x(s):
        return _sum([s.el(f"abar{m}*a{m}")] + [s.el(f"a{i}*abar{i}") for i in range(n)], Q, K)

    def y(s):
        b, c = s.el("b"), s.el("c")
        terms = []
        for i in range(n + 1):
            bi, ci = transport(b, i), transport(c, i)
            terms += [bi * ci, ci * bi]
        return _sum(terms, Q, K)

    return L, E, {"x": x, "y": y}


def _dz_tilde(n, q, K):
    if n < 2:
        raise CatalogError("DZ~_n needs n >= 2")
    verts = [str(i) for i in range(n + 1)]
    arrows = [("a0", "0", "2"), ("a1", "1", "2")]
    arrows += [(f"a{i}", str(i), str(i + 1)) for i in range(2, n)]
    arrows += [("abar0", "2", "0"), ("abar1", "2", "1")]
    arrows += [(f"abar{i}", str(i + 1), str(i)) for i in range(2, n)]
    arrows += [("b", str(n), str(n))]
    Q = Quiver(verts, arrows)
    consts = {"q": q}
    if n == 2:
        dual = ["a0*abar0", "a1*abar1", "abar0*a0 + b*b + abar1*a1"]
        E = _presentation(K, Q, dual, consts, "E(DZ~2)^op")
        L = quadratic_dual(E, name="DZ~2")
    else:
        m = n - 1
        lam = ["a0*abar1", "a0*a2", "a1*abar0", "abar2*abar1", "abar0*a0 - abar1*a1",
               "abar2*abar0", "abar1*a1 - a2*abar2"]
        lam += [f"a{i}*a{i + 1}" for i in range(1, n - 1)]
        lam += [f"abar{i}*abar{i - 1}" for i in range(2, n)]
        lam += [f"abar{i - 1}*a{i - 1} + a{i}*abar{i}" for i in range(3, n)]
        lam += [f"a{m}*b", f"abar{m}*a{m} + q*b*b", f"b*abar{m}"]
        dual = ["a0*abar0", "a1*abar1", "abar0*a0 + abar1*a1 + a2*abar2"]
        dual += [f"abar{i - 1}*a{i - 1} - a{i}*abar{i}" for i in range(3, n)]
        dual += [f"q*abar{m}*a{m} - b*b"]
        L = _presentation(K, Q, lam, consts, f"DZ~{n}")
        E = _presentation(K, Q, dual, consts, f"E(DZ~{n})^op")

    def greek(s):
        al, be = s.el("abar0*a0"), s.el("abar1*a1")
        ga = s.el("a2*abar2") if n > 2 else s.el("b*b")
        return al, be, ga

    recipes = {}
    if n == 2:
        def xs(s):
            al, be, ga = greek(s)
            # signs at the outer vertices chosen so the sum is central
            return [-transport(ga, 0), -transport(ga, 1), ga * ga]

        def ys(s):
            al, be, ga = greek(s)
            b = s.el("b")
            return [transport(b * al * b, 0), transport(b * be * b, 1),
                    (b * al - al * b) * (b * al - al * b)]
    else:
        def xs(s):
            al, be, ga = greek(s)
            out = [s.el("a0") * be * s.el("abar0"), s.el("a1") * al * s.el("abar1")]
            for i in range(2, n):
                t = s.el(f"a{i}*abar{i}")
                out.append(t * t)
            t = s.el(f"abar{n - 1}*a{n - 1}")
            out.append(t * t)
            return out

        def yprime(s):
            al, be, ga = greek(s)
            b = s.el("b")
            out = [transport(b, 0), transport(b, 1)]
            for i in range(2, n + 1):
                bi, ai, bti = transport(b, i), transport(al, i), transport(be, i)
                out.append(bi * ai - ai * bi if i % 2 == 0 else bi * bti - ai * bi)
            return out

        def ys(s):
            yp = _sum(yprime(s), Q, K)
            yy = yp * yp
            return [_restrict(yy, i) for i in range(n + 1)]
        recipes["y'"] = lambda s: _sum(yprime(s), Q, K)
    recipes["x"] = lambda s: _sum(xs(s), Q, K)
    recipes["y"] = lambda s: _sum(ys(s), Q, K)
    for i in range(n + 1):
        recipes[f"x_{i}"] = (lambda i: lambda s: xs(s)[i])(i)
        recipes[f"y_{i}"] = (lambda i: lambda s: ys(s)[i])(i)
    recipes["alpha"] = lambda s: greek(s)[0]
    recipes["beta"] = lambda s: greek(s)[1]
    recipes["gamma"] = lambda s: greek(s)[2]
    recipes["b[2]"] = lambda s: transport(s.el("b"), 2)
    return L, E, recipes


def _restrict(w, v):
    """``e_v w e_v``."""
    q = w.quiver
    return FreeElement(q, w.field, {p: c for p, c in w.terms.items()
                                    if q.path_source(p) == v and q.path_target(p) == v})


def _d_tilde(n, K):
    if n < 4:
        raise CatalogError("D~_n needs n >= 4")
    verts = [str(i) for i in range(n + 1)]
    arrows = [("a0", "0", "2"), ("a1", "1", "2")]
    arrows += [(f"a{i}", str(i), str(i + 1)) for i in range(2, n - 2)]
    arrows += [(f"a{n - 2}", str(n - 2), str(n - 1)), ("b", str(n - 2), str(n))]
    arrows += [("abar0", "2", "0"), ("abar1", "2", "1")]
    arrows += [(f"abar{i}", str(i + 1), str(i)) for i in range(2, n - 2)]
    arrows += [(f"abar{n - 2}", str(n - 1), str(n - 2)), ("bbar", str(n), str(n - 2))]
    Q = Quiver(verts, arrows)
    k = n - 2
    j = n - 3
    if n == 4:
        lam = ["a0*abar1", "a0*a2", "a0*b", "a1*abar0", "a1*a2", "a1*b", "abar2*abar0",
               "abar2*abar1", "abar2*b", "bbar*abar0", "bbar*abar1", "bbar*a2",
               "abar0*a0 - abar1*a1", "abar1*a1 - b*bbar", "b*bbar - a2*abar2"]
        dual = ["a0*abar0", "a1*abar1", "abar2*a2", "bbar*b",
                "abar0*a0 + abar1*a1 + a2*abar2 + b*bbar"]
    else:
        lam = ["a0*abar1", "a0*a2", "a1*abar0", "abar2*abar1", "abar0*a0 - abar1*a1",
               "abar2*abar0", "abar1*a1 - a2*abar2"]
        lam += [f"a{i}*a{i + 1}" for i in range(1, n - 2)]
        lam += [f"abar{i}*abar{i - 1}" for i in range(2, n - 1)]
        lam += [f"abar{i - 1}*a{i - 1} + a{i}*abar{i}" for i in range(3, n - 2)]
        lam += [f"abar{k}*b", f"bbar*a{k}", f"a{j}*b", f"bbar*abar{j}",
                f"a{k}*abar{k} - b*bbar", f"b*bbar - abar{j}*a{j}"]
        dual = ["a0*abar0", "a1*abar1", "abar0*a0 + abar1*a1 + a2*abar2"]
        dual += [f"abar{i - 1}*a{i - 1} - a{i}*abar{i}" for i in range(3, n - 2)]
        dual += [f"abar{k}*a{k}", "bbar*b", f"a{k}*abar{k} + b*bbar + abar{j}*a{j}"]
    L = _presentation(K, Q, lam, {}, f"D~{n}")
    E = _presentation(K, Q, dual, {}, f"E(D~{n})^op")

    def greek(s):
        return {
            "alpha": s.el("abar0*a0"), "beta": s.el("abar1*a1"), "gamma": s.el("a2*abar2"),
            "delta": s.el(f"a{k}*abar{k}"), "omega": s.el("b*bbar"), "eta": s.el(f"abar{j}*a{j}"),
        }

    def xs(s):
        g = greek(s)
        out = [s.el("a0") * g["beta"] * s.el("abar0"), s.el("a1") * g["alpha"] * s.el("abar1")]
        for i in range(2, n - 2):
            t = s.el(f"a{i}*abar{i}")
            out.append(t * t)
        if n == 4:
            # eta = beta squares to zero here; the central component is delta*omega + omega*delta
            out.append(g["delta"] * g["omega"] + g["omega"] * g["delta"])
        else:
            out.append(g["eta"] * g["eta"])
        out.append(s.el(f"abar{k}") * g["omega"] * s.el(f"a{k}"))
        out.append(s.el("bbar") * g["delta"] * s.el("b"))
        return out

    def ws(s):
        g = greek(s)
        ad = g["alpha"] + g["delta"]
        return [s.el("a0") * g["delta"] * s.el("abar0"), s.el("a1") * g["omega"] * s.el("abar1"),
                ad * ad, s.el("abar2") * g["alpha"] * s.el("a2"), s.el("bbar") * g["beta"] * s.el("b")]

    def rho(s, name, r):
        return transport(greek(s)[name], r)

    def ys(s):
        out = [rho(s, "delta", 0), rho(s, "omega", 1)]
        for r in range(2, n - 1):
            al, be, de, om = (rho(s, x, r) for x in ("alpha", "beta", "delta", "omega"))
            if n % 2 == 0:
                out.append(al * de + de * al if r % 2 == 0 else al * de + om * be)
            else:
                out.append(al * de - om * al if r % 2 == 0 else be * om - om * al)
        out += [rho(s, "alpha", n - 1), rho(s, "beta", n)]
        return out

    recipes = {"x": lambda s: _sum(xs(s), Q, K)}
    for i in range(n + 1):
        recipes[f"x_{i}"] = (lambda i: lambda s: xs(s)[i])(i)
    if n == 4:
        recipes["w"] = lambda s: _sum(ws(s), Q, K)
        for i in range(5):
            recipes[f"w_{i}"] = (lambda i: lambda s: ws(s)[i])(i)
    else:
        recipes["y"] = lambda s: _sum(ys(s), Q, K)
        for i in range(n + 1):
            recipes[f"y_{i}"] = (lambda i: lambda s: ys(s)[i])(i)
    for name in ("alpha", "beta", "gamma", "delta", "omega", "eta"):
        recipes[name] = (lambda name: lambda s: greek(s)[name])(name)
    recipes["delta[2]"] = lambda s: rho(s, "delta", 2)
    recipes["omega[2]"] = lambda s: rho(s, "omega", 2)
    return L, E, recipes


def _tree(K, name, nverts, edges, lam_extra, dual_extra):
    """Common constructor for the E~ trees; ``edges`` are (index, source, target)."""
    verts = [str(i) for i in range(nverts)]
    arrows = [(f"a{i}", str(s), str(t)) for i, s, t in edges]
    arrows += [(f"abar{i}", str(t), str(s)) for i, s, t in edges]
    Q = Quiver(verts, arrows)
    lam = []
    # all composable zero relations a_i a_{i+1} and abar_{i+1} abar_i along the indexing
    idx = {i: (s, t) for i, s, t in edges}
    for i in sorted(idx):
        if i + 1 in idx and idx[i][1] == idx[i + 1][0]:
            lam.append(f"a{i}*a{i + 1}")
            lam.append(f"abar{i + 1}*abar{i}")
    lam += lam_extra
    L = _presentation(K, Q, lam, {}, name)
    E = _presentation(K, Q, dual_extra, {}, f"E({name})^op")
    return Q, L, E


def _e6(K):
    edges = [(0, 0, 1), (1, 1, 2), (2, 2, 3), (3, 3, 4), (4, 2, 5), (5, 5, 6)]
    lam = [f"abar{i - 1}*a{i - 1} + a{i}*abar{i}" for i in (1, 3, 5)]
    lam += ["a1*a4", "abar2*a4", "abar4*a2", "abar4*abar1", "abar1*a1 - a2*abar2",
            "a2*abar2 - a4*abar4"]
    dual = ["a0*abar0", "abar3*a3", "abar5*a5"]
    dual += [f"abar{i - 1}*a{i - 1} - a{i}*abar{i}" for i in (1, 3, 5)]
    dual += ["abar1*a1 + a2*abar2 + a4*abar4"]
    Q, L, E = _tree(K, "E6~", 7, edges, lam, dual)
    sigma = _arm_map(Q, [("a0", "abar3"), ("abar0", "a3"), ("a1", "abar2"), ("abar1", "a2")])
    tau = _arm_map(Q, [("a0", "abar5"), ("abar0", "a5"), ("a1", "abar4"), ("abar1", "a4")])

    def greek(s):
        return s.el("abar1*a1"), s.el("a4*abar4"), s.el("a2*abar2")

    def xs(s):
        al, be, ga = greek(s)
        return [transport(ga, 0), transport(al * ga + ga * al, 1),
                al * al * ga + al * ga * al + ga * al * al,
                -transport(al * ga + ga * al, 3), -transport(al, 4),
                transport(al * be + be * al, 5), transport(al, 6)]

    def ys(s):
        al, be, ga = greek(s)
        y0 = transport(ga * ga, 0)
        y1 = -transport(ga * al * ga, 1)
        y2 = ga * ga * al * al - al * ga * al * ga
        A = s.dual_algebra(9)
        out = [y0, y1, y2]
        for m in (sigma, tau):
            img = apply_arrow_map(y2, m)
            sign = 1 if A.equal(img, y2) else -1
            if sign == -1 and not A.equal(img, -y2):
                raise CatalogError("arm symmetry does not fix y_2 up to sign")
            out += [apply_arrow_map(y1, m) * sign, apply_arrow_map(y0, m) * sign]
        return out

    recipes = _tree_recipes(Q, K, xs, ys, greek, 7)
    return L, E, recipes


def _e7(K):
    edges = [(0, 0, 1), (1, 1, 2), (2, 2, 3), (3, 3, 4), (4, 3, 5), (5, 5, 6), (6, 6, 7)]
    lam = [f"abar{i - 1}*a{i - 1} + a{i}*abar{i}" for i in (1, 2, 5, 6)]
    lam += ["a2*a4", "abar3*a4", "abar4*a3", "abar4*abar2", "abar2*a2 - a3*abar3",
            "a3*abar3 - a4*abar4"]
    dual = ["a0*abar0", "abar3*a3", "abar6*a6"]
    dual += [f"abar{i - 1}*a{i - 1} - a{i}*abar{i}" for i in (1, 2, 5, 6)]
    dual += ["abar2*a2 + a3*abar3 + a4*abar4"]
    Q, L, E = _tree(K, "E7~", 8, edges, lam, dual)

    def greek(s):
        return s.el("abar2*a2"), s.el("a4*abar4"), s.el("a3*abar3")

    def xs(s):
        al, be, ga = greek(s)
        return [transport(ga, 0), transport(al * ga + ga * al, 1),
                transport(al * al * ga + al * ga * al + ga * al * al, 2),
                al ** 3 * ga + al * al * ga * al + al * ga * al * al + ga * al ** 3,
                -transport(al * ga * al, 4),
                transport(be * be * ga + be * ga * be + ga * be * be, 5),
                transport(be * ga + ga * be, 6), transport(ga, 7)]

    def ys(s):
        al, be, ga = greek(s)
        a2, b2 = al * al, be * be
        return [-transport(ga * al * ga, 0), transport(ga * a2 * ga, 1),
                transport(-a2 * ga * a2 - a2 * ga * al * ga + ga * a2 * ga * al, 2),
                a2 * ga * a2 * ga + ga * a2 * ga * a2,
                transport(a2 * ga * a2, 4),
                transport(-b2 * ga * b2 - b2 * ga * be * ga + ga * b2 * ga * be, 5),
                transport(ga * b2 * ga, 6), -transport(ga * be * ga, 7)]

    return L, E, _tree_recipes(Q, K, xs, ys, greek, 8)


def e8_elements(s):
    """The named local elements at the branch vertex of E8~."""
    al, ga, be = s.el("abar1*a1"), s.el("a2*abar2"), s.el("a3*abar3")
    rho = ga * al * al + al * ga * al + al * al * ga
    zeta = rho * rho
    omega = al * al * ga * al * ga + al * ga * al * ga * al + ga * al * ga * al * al
    return {"alpha": al, "beta": be, "gamma": ga, "rho": rho, "zeta": zeta, "omega": omega}


def _e8(K):
    edges = [(0, 0, 1), (1, 1, 2), (2, 2, 3), (3, 2, 4), (4, 4, 5), (5, 5, 6), (6, 6, 7), (7, 7, 8)]
    lam = [f"abar{i - 1}*a{i - 1} + a{i}*abar{i}" for i in (1, 4, 5, 6, 7)]
    lam += ["a1*a3", "abar2*a3", "abar3*a2", "abar3*abar1", "abar1*a1 - a2*abar2",
            "a2*abar2 - a3*abar3"]
    dual = ["a0*abar0", "abar2*a2", "abar7*a7"]
    dual += [f"abar{i - 1}*a{i - 1} - a{i}*abar{i}" for i in (1, 4, 5, 6, 7)]
    dual += ["abar1*a1 + a2*abar2 + a3*abar3"]
    Q, L, E = _tree(K, "E8~", 9, edges, lam, dual)

    def greek(s):
        g = e8_elements(s)
        return g["alpha"], g["beta"], g["gamma"]

    def bsum(be, mid, top, v):
        return transport(_sum([be ** (top - i) * mid * be ** i for i in range(top + 1)], Q, K), v)

    def xs(s):
        g = e8_elements(s)
        al, be, ga, zeta = g["alpha"], g["beta"], g["gamma"], g["zeta"]
        ag = al * ga
        return [transport(ga * al * al * ga, 0),
                transport(al * ga * al * al * ga + ga * al * al * ga * al + ag * ag * al, 1),
                zeta,
                -transport(ag * ag * al, 3),
                bsum(be, ga, 4, 4), bsum(be, ga, 3, 5), bsum(be, ga, 2, 6),
                transport(be * ga + ga * be, 7), transport(ga, 8)]

    def ys(s):
        g = e8_elements(s)
        al, be, ga, om = g["alpha"], g["beta"], g["gamma"], g["omega"]
        a2 = al * al
        ag = al * ga
        core = ga * al * ga * a2 * ga * al * ga
        mid = a2 * ga * a2
        y3 = (a2 * ga * al * ga * a2 * ga * al + al * ga * a2 * ga * a2 * ga * al
              + al * ga * a2 * ga * al * ga * a2)
        y4 = _sum([be ** (4 - i) * mid * be ** i for i in range(5)], Q, K) + be ** 4 * ga * be ** 4 * 2
        return [transport(core, 0),
                transport(al * core + core * al + ag ** 4 * al, 1),
                om * om,
                transport(y3, 3),
                transport(y4, 4),
                bsum(be, mid, 3, 5), bsum(be, mid, 2, 6), bsum(be, mid, 1, 7),
                transport(mid, 8)]

    recipes = _tree_recipes(Q, K, xs, ys, greek, 9)
    for name in ("rho", "zeta", "omega"):
        recipes[name] = (lambda name: lambda s: e8_elements(s)[name])(name)
    return L, E, recipes


def _tree_recipes(Q, K, xs, ys, greek, nv):
    recipes = {"x": lambda s: _sum(xs(s), Q, K), "y": lambda s: _sum(ys(s), Q, K)}
    for i in range(nv):
        recipes[f"x_{i}"] = (lambda i: lambda s: xs(s)[i])(i)
        recipes[f"y_{i}"] = (lambda i: lambda s: ys(s)[i])(i)
    for j, name in enumerate(("alpha", "beta", "gamma")):
        recipes[name] = (lambda j: lambda s: greek(s)[j])(j)
    return recipes


def _qmatrix(K, n, q, qmatrix):
    out = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if qmatrix is not None and (i, j) in qmatrix:
                v = qmatrix[(i, j)]
                out[(i, j)] = K.parse(v, {}) if isinstance(v, str) else K.coerce(v)
            else:
                out[(i, j)] = _scalar(K, q)
            if K.is_zero(out[(i, j)]):
                raise CatalogError("q_ij must be nonzero")
    return out


def _qext(n, qm, K):
    if n < 1:
        raise CatalogError("qext needs n >= 1")
    Q = Quiver(["0"], [(f"x{i}", "0", "0") for i in range(1, n + 1)])
    consts = {f"q{i}{j}": v for (i, j), v in qm.items()}
    lam = [f"x{i}*x{j} + q{i}{j}*x{j}*x{i}" for (i, j) in sorted(qm)]
    lam += [f"x{i}*x{i}" for i in range(1, n + 1)]
    # the dual is stated as E itself; on one vertex E^op reverses every word
    dual = [f"x{j}*x{i} - q{i}{j}*x{i}*x{j}" for (i, j) in sorted(qm)]
    L = _presentation(K, Q, lam, consts, f"qext{n}")
    E = _presentation(K, Q, dual, consts, f"E(qext{n})^op")
    recipes = {f"x{i}": (lambda i: lambda s: s.el(f"x{i}"))(i) for i in range(1, n + 1)}
    return L, E, recipes


def e_presentation_qext(spec):
    """``E(Lambda)`` for the quantum exterior family, relations ``x_i x_j - q_ij x_j x_i``."""
    K = spec.field
    Q = spec.quiver
    qm = spec.params["qmatrix"]
    return _presentation(K, Q, [f"x{i}*x{j} - q{i}{j}*x{j}*x{i}" for (i, j) in sorted(qm)],
                         spec.dual_presentation.constants, spec.dual_presentation.name[:-3])


def _radsq(params, K):
    arrows = params.get("arrows")
    if arrows is None:
        L_ = params.get("n", 1)
        if L_ < 1:
            raise CatalogError("cycle length must be >= 1")
        verts = [str(i) for i in range(L_)]
        arrows = [(f"c{i}", str(i), str((i + 1) % L_)) for i in range(L_)]
    else:
        verts = params.get("vertices") or sorted({str(s) for _, s, _ in arrows} | {str(t) for _, _, t in arrows})
    Q = Quiver(verts, arrows)
    lam = [Q.format_path(p) for p in Q.paths_of_length(2)]
    L = _presentation(K, Q, lam, {}, "radsq")
    E = Presentation(K, Q, [], {}, "E(radsq)^op")
    recipes = {}
    if is_oriented_cycle(Q):
        N = len(verts)

        def T(s):
            # sum of the simple cycles at each vertex
            out = []
            for v in range(N):
                path, w = [], v
                for _ in range(N):
                    a = Q.out_arrows[w][0]
                    path.append(a)
                    w = Q.target[a]
                out.append(FreeElement(Q, K, {tuple(path): K.one}))
            return _sum(out, Q, K)
        recipes["T"] = T
    return L, E, recipes


def is_oriented_cycle(quiver):
    n = len(quiver.vertices)
    return (len(quiver.arrows) == n and all(len(quiver.out_arrows[v]) == 1 and len(quiver.in_arrows[v]) == 1
                                            for v in range(n))
            and _connected(quiver))


def _connected(quiver):
    n = len(quiver.vertices)
    seen, stack = {0}, [0]
    while stack:
        v = stack.pop()
        for a in quiver.out_arrows[v] + quiver.in_arrows[v]:
            for w in (quiver.source[a], quiver.target[a]):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    return len(seen) == n


def _has_cycle(quiver):
    n = len(quiver.vertices)
    colour = [0] * n

    def visit(v):
        colour[v] = 1
        for a in quiver.out_arrows[v]:
            w = quiver.target[a]
            if colour[w] == 1 or (colour[w] == 0 and visit(w)):
                return True
        colour[v] = 2
        return False

    return any(colour[v] == 0 and visit(v) for v in range(n))


# ---- public API -----------------------------------------------------------


def _root_of_unity(K, q, bound):
    if unity_order(Scalar(K, q), bound) is not None:
        return True
    try:
        verdict, _ = is_root_of_unity(Scalar(K, q))
    except ValueError as exc:
        raise CatalogError("order of q undetermined; instance rejected") from exc
    return verdict


def expected_fg(family, params, K, unity_bound=1000):
    """Predicted (Fg) verdict for a family instance."""
    if family == "A~":
        return _root_of_unity(K, params["q"], unity_bound)
    if family == "qext":
        return all(_root_of_unity(K, v, unity_bound) for v in params["qmatrix"].values())
    if family == "radsq":
        return is_oriented_cycle(params["quiver"])
    return True


def build_family(name, n=None, q=None, field=None, qmatrix=None, check=True, **extra):
    """Construct a :class:`FamilySpec`; ``check`` compares the computed and stated duals."""
    if name not in FAMILIES:
        raise CatalogError(f"unknown family {name!r}; expected one of {', '.join(FAMILIES)}")
    K = _field(field)
    params = {}
    notes = []
    if name in ("A~", "Z~", "DZ~", "D~", "qext", "radsq") and n is None:
        n = {"A~": 1, "Z~": 1, "DZ~": 3, "D~": 4, "qext": 2, "radsq": 1}[name]
    if name == "A~":
        qv = _scalar(K, q)
        if K.is_zero(qv):
            raise CatalogError("q must be nonzero")
        params = {"n": n, "q": qv}
        L, E, recipes = _a_tilde(n, qv, K)
    elif name == "Z~":
        qv = _scalar(K, q)
        if K.is_zero(qv):
            raise CatalogError("q must be nonzero")
        params = {"n": n, "q": qv}
        L, E, recipes = _z_tilde(n, qv, K)
    elif name == "DZ~":
        qv = _scalar(K, q)
        if K.is_zero(qv):
            raise CatalogError("q must be nonzero")
        if n == 2 and not K.is_one(qv):
            notes.append("q is not used for n = 2")
        params = {"n": n, "q": qv}
        L, E, recipes = _dz_tilde(n, qv, K)
    elif name == "D~":
        params = {"n": n}
        L, E, recipes = _d_tilde(n, K)
    elif name == "E6~":
        L, E, recipes = _e6(K)
    elif name == "E7~":
        L, E, recipes = _e7(K)
    elif name == "E8~":
        L, E, recipes = _e8(K)
    elif name == "qext":
        qm = _qmatrix(K, n, q, qmatrix)
        params = {"n": n, "qmatrix": qm}
        L, E, recipes = _qext(n, qm, K)
        if n == 2:
            notes.append("n = 2 is the Z~0 case")
    else:
        params = dict(extra, n=n)
        L, E, recipes = _radsq(params, K)
        params["quiver"] = L.quiver
        if not _has_cycle(L.quiver):
            notes.append("quiver has no oriented cycle; finite global dimension")
    fg = expected_fg(name, params, K)
    spec = FamilySpec(name, params, K, L, E, fg, recipes, MonomialOrder(E.quiver), notes)
    if check and not same_relation_space(quadratic_dual(L), E):
        raise CatalogError(f"computed dual of {name} differs from the stated presentation")
    return spec


def same_relation_space(p1, p2):
    """Quadratic presentations generate the same ideal iff their degree-2 spans agree."""
    if p1.quiver != p2.quiver:
        return False
    K = p1.field
    d1, d2 = quadratic_data(p1), quadratic_data(p2)
    for key in set(d1.blocks) | set(d2.blocks):
        v1 = d1.blocks.get(key, ([], []))[1]
        v2 = d2.blocks.get(key, ([], []))[1]
        r1, r2 = rank(K, v1), rank(K, v2)
        if r1 != r2 or rank(K, v1 + v2) != r1:
            return False
    return True


_POWER = re.compile(r"^(.+?)\^(\d+)$")


def central_element(spec, name):
    """Named element of the dual; ``name^k`` gives a power."""
    m = _POWER.match(name)
    if m and m.group(1) in spec.recipes:
        base = spec.recipes[m.group(1)](spec)
        return base ** int(m.group(2)) if int(m.group(2)) else FreeElement.one(spec.quiver, spec.field)
    if name not in spec.recipes:
        raise CatalogError(f"{spec.family} has no element {name!r}; known: {', '.join(spec.element_names())}")
    return spec.recipes[name](spec)


def qext_central_criterion(K, qmatrix, i, p):
    """Whether ``x_i^p`` is graded-central in ``E`` via the three sign conditions."""
    if p < 1:
        raise ValueError("p must be positive")
    n = max([j for pair in qmatrix for j in pair], default=i)
    n = max(n, i)
    sign = K.one if p % 2 == 0 else K.neg(K.one)
    if not K.is_one(sign):
        return False
    for j in range(1, n + 1):
        if j > i:
            if K.mul(sign, K.inv(K.pow(qmatrix[(i, j)], p))) != K.one:
                return False
        elif j < i:
            if K.inv(K.pow(qmatrix[(j, i)], p)) != sign:
                return False
    return True


def nakayama_qext(K, qmatrix, n):
    """Scalars ``nu_i`` with ``nu(x_i) = nu_i x_i``."""
    sign = K.one if (n - 1) % 2 == 0 else K.neg(K.one)
    out = []
    for i in range(1, n + 1):
        num = K.one
        for j in range(i + 1, n + 1):
            num = K.mul(num, qmatrix[(i, j)])
        den = K.one
        for j in range(1, i):
            den = K.mul(den, qmatrix[(j, i)])
        out.append(K.mul(sign, K.div(num, den)))
    return out


def qext_generating_exponent(K, qmatrix, bound=1000):
    """Least common even multiple ``N`` of the orders of the ``q_ij`` (``None`` if some has none)."""
    N = 2
    for v in qmatrix.values():
        d = unity_order(Scalar(K, v), bound)
        if d is None:
            return None
        N = lcm(N, d)
    return N


def catalog_grid():
    """The acceptance-grid instances as ``(family, kwargs)`` pairs."""
    return [
        ("A~", {"n": 1, "q": 1}), ("A~", {"n": 2, "q": 1}), ("A~", {"n": 3, "q": 1}),
        ("A~", {"n": 1, "q": 2, "field": "F7"}), ("A~", {"n": 2, "q": 2, "field": "F7"}),
        ("A~", {"n": 1, "q": "t", "field": "Q(t)"}),
        ("Z~", {"n": 1}), ("Z~", {"n": 2}), ("Z~", {"n": 3}),
        ("DZ~", {"n": 2}), ("DZ~", {"n": 3}), ("DZ~", {"n": 4}),
        ("D~", {"n": 4}), ("D~", {"n": 5}), ("D~", {"n": 6}),
        ("E6~", {}), ("E7~", {}), ("E8~", {}),
        ("qext", {"n": 2, "q": -1}), ("qext", {"n": 2, "q": "t", "field": "Q(t)"}),
    ]


# ---- identity suites ------------------------------------------------------


def identity_suite(spec):
    """Labelled ``(label, lhs, rhs)`` identities expected to hold in the dual."""
    fam = spec.family
    g = lambda name: central_element(spec, name)
    Q, K = spec.quiver, spec.field
    zero = FreeElement(Q, K)
    out = []
    if fam == "DZ~":
        al, be, ga = g("alpha"), g("beta"), g("gamma")
        out += [("dagger.1", al * ga, -(al * be)), ("dagger.2", -(al * be), ga * be),
                ("ddagger.1", be * ga, -(be * al)), ("ddagger.2", -(be * al), ga * al)]
    elif fam == "D~":
        n = spec.params["n"]
        for r in range(2, n - 1):
            al, be, de, om = (transport(g(x), r) for x in ("alpha", "beta", "delta", "omega"))
            s1 = al if (n - r - 1) % 2 == 0 else be
            s2 = de if (r - 1) % 2 == 0 else om
            out.append((f"(1) r={r}", al * (de + om), (de + om) * s1))
            out.append((f"(2) r={r}", de * (al + be), (al + be) * s2))
    elif fam == "E6~":
        al, be, ga = g("alpha"), g("beta"), g("gamma")
        out += [("dagger", al * al * ga + al * ga * al + ga * al * al,
                 -(al * ga * ga + ga * al * ga + ga * ga * al)),
                ("gamma^2 alpha", ga * ga * al, -(ga * ga * be)),
                ("gamma alpha gamma", ga * al * ga, -(ga * be * ga)),
                ("alpha gamma^2", al * ga * ga, -(be * ga * ga))]
        out += [(f"{nm}^3", x ** 3, zero) for nm, x in (("alpha", al), ("beta", be), ("gamma", ga))]
    elif fam == "E7~":
        al, be, ga = g("alpha"), g("beta"), g("gamma")
        out += [("alpha^4", al ** 4, zero), ("beta^4", be ** 4, zero), ("gamma^2", ga * ga, zero)]
        lhs = be ** 3 * ga + be * be * ga * be + be * ga * be * be + ga * be ** 3
        bg, ag = be * ga + ga * be, al * ga + ga * al
        chain = [lhs, -((be * ga) ** 2 + ga * be * be * ga + (ga * be) ** 2), -(bg * bg), -(ag * ag),
                 -((al * ga) ** 2 + ga * al * al * ga + (ga * al) ** 2),
                 al ** 3 * ga + al * al * ga * al + al * ga * al * al + ga * al ** 3]
        out += [(f"dagger.{i}", chain[i], chain[i + 1]) for i in range(len(chain) - 1)]
    elif fam == "E8~":
        e = e8_elements(spec)
        al, be, ga, rho, zeta, om = (e[k] for k in ("alpha", "beta", "gamma", "rho", "zeta", "omega"))
        a2 = al * al
        ag, gaa = al * ga, ga * al
        out += [("alpha^3", al ** 3, zero), ("gamma^2", ga * ga, zero), ("beta^6", be ** 6, zero)]
        dag = (ga * a2 * ga * a2 + a2 * ga * a2 * ga + al * ga * al * ga * a2 + a2 * ga * al * ga * al
               + ga * a2 * ga * al * ga + ga * al * ga * a2 * ga + al * ga * a2 * ga * al + gaa ** 3 + ag ** 3)
        out.append(("dagger", dag, zero))
        out += [("ddagger.1", -(be ** 3) + ga * be * ga, -(be ** 3) - ga * al * ga),
                ("ddagger.2", -(be ** 3) - ga * al * ga, rho)]
        tri1 = (ga * a2 * ga * a2 + a2 * ga * a2 * ga + a2 * ga * al * ga * al + al * ga * a2 * ga * al
                + al * ga * al * ga * a2)
        tri2 = -(ga * a2 * ga * al * ga + ga * al * ga * a2 * ga + gaa ** 3 + ag ** 3)
        out += [("triangle.1", zeta, tri1), ("triangle.2", tri1, tri2), ("triangle.3", tri2, rho * rho)]
        out.append(("square", ga * om + om * ga, -zeta))
        pent = ag ** 3 * a2 * ga * al + al * ga * a2 * gaa ** 3 + al * ga * al * ga * a2 * ga * al * ga * al
        out.append(("pentagon", pent, zero))
        mid = a2 * ga * a2
        A_rhs = (_sum([be ** (5 - i) * mid * be ** i for i in range(6)], Q, K)
                 + (be ** 5 * ga * be ** 4 + be ** 4 * ga * be ** 5) * 2)
        out.append(("A", om * om, A_rhs))
        T = (a2 * ga * al * ga * a2 * ga * al + al * ga * a2 * ga * a2 * ga * al
             + al * ga * a2 * ga * al * ga * a2)
        out.append(("B", om * om, ga * T + T * ga))
        out += [("omega alpha", om * al, al * om), ("rho alpha", rho * al, al * rho),
                ("omega rho", om * rho + rho * om, zeta * a2 * (-3)),
                ("gamma rho", ga * rho, rho * ga + gaa * gaa - ag * ag),
                ("zeta beta", zeta, _sum([be ** (5 - i) * ga * be ** i for i in range(6)], Q, K))]
    else:
        raise CatalogError(f"no identity suite for {fam}")
    return out


def default_generators(spec):
    """Names of the central elements used for the finite-generation check."""
    fam, K = spec.family, spec.field
    if not spec.expected_fg:
        return []
    if fam == "A~":
        d = unity_order(Scalar(K, spec.params["q"]), 10 ** 4)
        return [f"x^{2 * d}", f"y^{2 * d}"]
    if fam == "D~" and spec.params["n"] == 4:
        return ["x", "w"]
    if fam == "qext":
        N = qext_generating_exponent(K, spec.params["qmatrix"])
        return [f"x{i}^{N}" for i in range(1, spec.params["n"] + 1)]
    if fam == "radsq":
        L_ = len(spec.quiver.vertices)
        return [f"T^{lcm(L_, 2) // L_}"]
    return ["x", "y"]


def fg_check(spec, D, W=None, names=None):
    """Quotient-dimension report of the dual over named central elements.

    Without names, the predicted generators are used; when none are predicted
    the computed graded centre up to degree ``D`` is used instead.
    """
    from .centre import graded_centre_component
    from .fingen import module_quotient_dims
    names = default_generators(spec) if names is None else names
    A = spec.dual_algebra(D + 1)
    if names:
        Z = [central_element(spec, nm) for nm in names]
    else:
        Z = [z for d in range(1, D + 1) for z in graded_centre_component(A, d)]
    return module_quotient_dims(A, Z, D=D, W=W)
