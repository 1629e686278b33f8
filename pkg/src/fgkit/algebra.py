"""Truncated graded quotients kQ/I built degree by degree with exact linear algebra.

Degree ``d`` of the quotient is computed as ``(E_{d-1} (x) kQ_1)`` modulo the
images of ``c * r`` for normal words ``c`` and relations ``r``.  Candidate
columns are indexed so that column order agrees with the monomial order, so
the pivot columns of the reduced echelon form are exactly the tips of the
ideal and the free columns are the normal words.
"""

from __future__ import annotations

import json
import logging
import random

from .freealg import FreeElement
from .groebner import TruncationError, InhomogeneousError
from .linalg import Echelon, axpy, kernel, determinant, solve_particular
from .quiver import MonomialOrder, validate_relation

log = logging.getLogger(__name__)


class InfiniteAlgebraError(ValueError):
    pass


class TruncatedAlgebra:
    """Graded pieces ``B_0 .. B_D`` of ``kQ/I`` with multiplication."""

    def __init__(self, presentation, D, order=None):
        if D < 0:
            raise ValueError("truncation degree must be nonnegative")
        self.presentation = presentation
        self.quiver = q = presentation.quiver
        self.field = presentation.field
        self.order = order if order is not None else MonomialOrder(q)
        self.D = D
        for r in presentation.relations:
            if not r.is_homogeneous():
                raise InhomogeneousError(f"relation {r} is not homogeneous")
            validate_relation(q, r)
        nv = len(q.vertices)
        self.words = [[q.trivial(v) for v in range(nv)]]
        self.index = [{w: i for i, w in enumerate(self.words[0])}]
        self.src = [list(range(nv))]
        self.tgt = [list(range(nv))]
        self.rmul = [None]
        self.tips = [[]]          # (tip path, normal-form vector) per degree
        self._prod = {}
        self.finite = False
        self.top_degree = None
        by_degree = {}
        for r in presentation.relations:
            by_degree.setdefault(r.degree, []).append(r)
        self._rels = by_degree
        for d in range(1, D + 1):
            self._build_degree(d)
        if self.finite:
            self.top_degree = max(d for d in range(D + 1) if self.words[d])
        log.debug("analyzed to degree %d: dims %s", D, self.dims())

    # ---- construction ----

    def _build_degree(self, d):
        K = self.field
        q = self.quiver
        nA = len(q.arrows)
        rank = self.order.rank
        prev = self.words[d - 1]
        ptgt = self.tgt[d - 1]
        psrc = self.src[d - 1]
        cols = {}
        for u in range(len(prev)):
            for a in q.out_arrows[ptgt[u]]:
                cols[u * nA + rank[a]] = (u, a)
        ech = Echelon(K)
        for k, rels in self._rels.items():
            if k > d:
                continue
            for r in rels:
                (s, _t), = r.endpoints()
                for c in range(len(self.words[d - k])):
                    if self.tgt[d - k][c] != s:
                        continue
                    vec = {}
                    for p, lam in r.terms.items():
                        v = {c: K.one}
                        for i, a in enumerate(p[:-1]):
                            v = self.right_mul(d - k + i, v, a)
                            if not v:
                                break
                        last = rank[p[-1]]
                        for uidx, val in v.items():
                            axpy(K, vec, lam, {uidx * nA + last: val})
                    if vec:
                        ech.add(vec)
        ech.interreduce()
        free = sorted(c for c in cols if c not in ech.pivots)
        newidx = {c: i for i, c in enumerate(free)}
        words, src, tgt = [], [], []
        for c in free:
            u, a = cols[c]
            w = prev[u] + (a,) if d > 1 else (a,)
            words.append(w)
            src.append(psrc[u])
            tgt.append(q.target[a])
        table = {}
        tips = []
        for c, (u, a) in cols.items():
            if c in newidx:
                table[(u, a)] = {newidx[c]: K.one}
            else:
                row = ech.pivots[c]
                vec = {newidx[col]: K.neg(val) for col, val in row.items() if col != c}
                table[(u, a)] = vec
                w = prev[u] + (a,) if d > 1 else (a,)
                tips.append((w, vec))
        self.words.append(words)
        self.index.append({w: i for i, w in enumerate(words)})
        self.src.append(src)
        self.tgt.append(tgt)
        self.rmul.append(table)
        self.tips.append(tips)
        if not words:
            self.finite = True

    # ---- basic access ----

    def dim(self, d):
        self._check(d)
        return len(self.words[d])

    def dims(self):
        return [len(w) for w in self.words]

    def total_dim(self):
        if not self.finite:
            raise InfiniteAlgebraError("algebra is not known to be finite-dimensional")
        return sum(self.dims())

    def basis(self, d):
        self._check(d)
        return list(self.words[d])

    def basis_between(self, d, i=None, j=None):
        """Indices of degree-``d`` normal words from vertex ``i`` to vertex ``j``."""
        self._check(d)
        return [k for k in range(len(self.words[d]))
                if (i is None or self.src[d][k] == i) and (j is None or self.tgt[d][k] == j)]

    def _check(self, d):
        if d > self.D:
            raise TruncationError(f"degree {d} exceeds truncation {self.D}")
        if d < 0:
            raise ValueError("negative degree")

    # ---- multiplication ----

    def right_mul(self, d, vec, a):
        """Degree-``d`` vector times arrow ``a`` (index), a degree ``d+1`` vector."""
        self._check(d + 1)
        K = self.field
        table = self.rmul[d + 1]
        out = {}
        for u, c in vec.items():
            img = table.get((u, a))
            if img:
                axpy(K, out, c, img)
        return out

    def word_product(self, i, u, j, w):
        """Product of basis word ``u`` of degree ``i`` with basis word ``w`` of degree ``j``."""
        key = (i, u, j, w)
        hit = self._prod.get(key)
        if hit is not None:
            return hit
        if j == 0:
            res = {u: self.field.one} if self.tgt[i][u] == w else {}
        elif i == 0:
            res = {w: self.field.one} if self.src[j][w] == u else {}
        else:
            word = self.words[j][w]
            if j == 1:
                res = self.right_mul(i, {u: self.field.one}, word[0])
            else:
                pre = self.index[j - 1][word[:-1]]
                res = self.right_mul(i + j - 1, self.word_product(i, u, j - 1, pre), word[-1])
        self._prod[key] = res
        return res

    def mul(self, i, f, j, g):
        """Product of homogeneous vectors ``f`` (degree ``i``) and ``g`` (degree ``j``)."""
        self._check(i + j)
        K = self.field
        out = {}
        for u, c in f.items():
            for w, e in g.items():
                axpy(K, out, K.mul(c, e), self.word_product(i, u, j, w))
        return out

    def mul_graded(self, f, g):
        out = {}
        for i, fv in f.items():
            for j, gv in g.items():
                prod = self.mul(i, fv, j, gv)
                if prod:
                    acc = out.setdefault(i + j, {})
                    axpy(self.field, acc, self.field.one, prod)
                    if not acc:
                        del out[i + j]
        return out

    def path_vector(self, p):
        """Normal form of a single path as ``(degree, vector)``."""
        q = self.quiver
        if p[0] < 0:
            return 0, {~p[0]: self.field.one}
        d = len(p)
        self._check(d)
        vec = {q.source[p[0]]: self.field.one}
        for i, a in enumerate(p):
            vec = self.right_mul(i, vec, a)
            if not vec:
                break
        return d, vec

    def to_vectors(self, f):
        """FreeElement -> ``{degree: vector}`` in the normal-word basis."""
        if f.quiver != self.quiver:
            raise ValueError("element lives over a different quiver")
        K = self.field
        out = {}
        for p, c in f.terms.items():
            d, v = self.path_vector(p)
            acc = out.setdefault(d, {})
            axpy(K, acc, c, v)
        return {d: v for d, v in out.items() if v}

    def to_vector(self, f, d=None):
        """Homogeneous element -> vector; ``d`` fixes the degree of the zero element."""
        vecs = self.to_vectors(f)
        if len(vecs) > 1:
            raise InhomogeneousError("element is not homogeneous")
        if not vecs:
            return {}
        (deg, v), = vecs.items()
        if d is not None and deg != d:
            raise ValueError(f"element has degree {deg}, expected {d}")
        return v

    def to_element(self, d, vec):
        words = self.words[d]
        return FreeElement(self.quiver, self.field, {words[i]: c for i, c in vec.items()})

    def normal_form(self, f):
        out = FreeElement(self.quiver, self.field)
        for d, v in self.to_vectors(f).items():
            out = out + self.to_element(d, v)
        return out

    def equal(self, f, g):
        return self.to_vectors(f - g) == {}

    # ---- derived data ----

    def groebner_elements(self, up_to=None):
        """Reduced Groebner basis elements with tip degree <= ``up_to``."""
        up_to = self.D if up_to is None else up_to
        out = []
        K = self.field
        for d in range(1, up_to + 1):
            for w, vec in self.tips[d]:
                if d > 1 and w[1:] not in self.index[d - 1]:
                    continue
                terms = {w: K.one}
                for i, c in vec.items():
                    terms[self.words[d][i]] = K.neg(c)
                out.append(FreeElement(self.quiver, K, terms))
        key = self.order.key
        out.sort(key=lambda g: key(g.tip(self.order)))
        return out

    def radical_series(self):
        """Dimensions of ``r^m`` for ``m = 0 .. top+1`` (finite algebras only)."""
        if not self.finite:
            raise InfiniteAlgebraError("radical series needs a finite-dimensional algebra")
        dims = self.dims()
        return [sum(dims[m:]) for m in range(self.top_degree + 2)]

    def local(self, vertex):
        return LocalAlgebra(self, vertex)

    def report(self):
        out = {
            "field": self.field.descriptor,
            "order": list(self.order.ranking),
            "max_degree": self.D,
            "dims": self.dims(),
            "finite": self.finite,
        }
        if self.finite:
            out["total_dim"] = self.total_dim()
            out["radical_series"] = self.radical_series()
            out["weakly_symmetric"] = check_weakly_symmetric(self)
        out["ext1_matrix"] = ext1_matrix(self)
        return out


class LocalAlgebra:
    """The corner ``e_i A e_i`` viewed inside its parent algebra."""

    def __init__(self, parent, vertex):
        q = parent.quiver
        if isinstance(vertex, str):
            if vertex not in q.vindex:
                raise ValueError(f"unknown vertex {vertex!r}")
            vertex = q.vindex[vertex]
        if not 0 <= vertex < len(q.vertices):
            raise ValueError(f"unknown vertex {vertex!r}")
        self.parent = parent
        self.vertex = vertex
        self.D = parent.D
        self.field = parent.field

    def basis_indices(self, d):
        return self.parent.basis_between(d, self.vertex, self.vertex)

    def basis(self, d):
        return [self.parent.words[d][k] for k in self.basis_indices(d)]

    def dim(self, d):
        return len(self.basis_indices(d))

    def dims(self):
        return [self.dim(d) for d in range(self.D + 1)]

    def mul(self, i, f, j, g):
        return self.parent.mul(i, f, j, g)


def analyze(presentation, D, order=None):
    return TruncatedAlgebra(presentation, D, order)


def check_weakly_symmetric(A):
    """Each ``e_i A`` has a one-dimensional socle spanned by cycles at ``i``."""
    if not A.finite:
        raise InfiniteAlgebraError("weak symmetry needs a finite-dimensional algebra")
    q = A.quiver
    K = A.field
    for i in range(len(q.vertices)):
        socle = []
        for d in range(A.top_degree + 1):
            idx = A.basis_between(d, i)
            if not idx:
                continue
            images = []
            for k in idx:
                img = {}
                if d < A.D:
                    for a in range(len(q.arrows)):
                        for col, val in A.right_mul(d, {k: K.one}, a).items():
                            img[(a, col)] = val
                images.append(img)
            for kv in kernel(K, images):
                socle.append((d, {idx[j]: c for j, c in kv.items()}))
        if len(socle) != 1:
            return False
        d, vec = socle[0]
        if any(A.tgt[d][k] != i for k in vec):
            return False
    return True


def ext1_matrix(A):
    """Arrow counts ``i -> j``; equals dim Ext^1(S_i, S_j) for admissible presentations."""
    return A.quiver.adjacency()


# ---------------------------------------------------------------------------
# right modules given by matrices


class RepresentationError(ValueError):
    pass


def _matmul(K, A, B, n, m, p):
    out = [[K.zero] * p for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        row = out[i]
        for k in range(m):
            a = Ai[k]
            if K.is_zero(a):
                continue
            Bk = B[k]
            for j in range(p):
                b = Bk[j]
                if not K.is_zero(b):
                    row[j] = K.add(row[j], K.mul(a, b))
    return out


class Representation:
    """Right module: ``dims[v]`` per vertex and a ``dim(source) x dim(target)`` matrix per arrow.

    Vectors are rows; ``v . a = v @ mats[a]``.
    """

    def __init__(self, presentation, dims, mats, check=True):
        self.presentation = presentation
        q = presentation.quiver
        K = presentation.field
        self.field = K
        self.dims = list(dims)
        if len(self.dims) != len(q.vertices):
            raise RepresentationError("dimension vector has wrong length")
        self.mats = {}
        for i, a in enumerate(q.arrows):
            m = mats.get(a, mats.get(i)) if isinstance(mats, dict) else mats[i]
            s, t = self.dims[q.source[i]], self.dims[q.target[i]]
            if m is None:
                m = [[K.zero] * t for _ in range(s)]
            m = [[K.coerce(x) for x in row] for row in m]
            if len(m) != s or any(len(row) != t for row in m):
                raise RepresentationError(f"matrix for {a} must be {s}x{t}")
            self.mats[i] = m
        if check:
            for r in presentation.relations:
                if not self._is_zero_action(r):
                    raise RepresentationError(f"relation {r} does not act as zero")

    def path_matrix(self, p):
        q = self.presentation.quiver
        K = self.field
        if p[0] < 0:
            n = self.dims[~p[0]]
            return [[K.one if i == j else K.zero for j in range(n)] for i in range(n)]
        m = self.mats[p[0]]
        for a in p[1:]:
            m = _matmul(K, m, self.mats[a], self.dims[q.source[p[0]]], self.dims[q.source[a]],
                        self.dims[q.target[a]])
        return m

    def _is_zero_action(self, r):
        K = self.field
        q = self.presentation.quiver
        (s, t), = r.endpoints()
        acc = [[K.zero] * self.dims[t] for _ in range(self.dims[s])]
        for p, c in r.terms.items():
            m = self.path_matrix(p)
            for i in range(len(acc)):
                for j in range(len(acc[i])):
                    acc[i][j] = K.add(acc[i][j], K.mul(c, m[i][j]))
        del q
        return all(K.is_zero(x) for row in acc for x in row)

    @property
    def dimension(self):
        return sum(self.dims)

    def act(self, v, vec, a):
        """Row vector ``vec`` at vertex ``v`` times arrow ``a`` (index)."""
        K = self.field
        m = self.mats[a]
        out = [K.zero] * len(m[0]) if m else [K.zero] * self.dims[self.presentation.quiver.target[a]]
        for i, x in enumerate(vec):
            if K.is_zero(x):
                continue
            for j, y in enumerate(m[i]):
                if not K.is_zero(y):
                    out[j] = K.add(out[j], K.mul(x, y))
        return out

    def radical_images(self):
        """Per vertex, the sparse vectors spanning ``(M J)_v``."""
        q = self.presentation.quiver
        out = [[] for _ in q.vertices]
        for a in range(len(q.arrows)):
            for row in self.mats[a]:
                vec = {j: x for j, x in enumerate(row) if not self.field.is_zero(x)}
                if vec:
                    out[q.target[a]].append(vec)
        return out

    def top_generators(self):
        """Per vertex, standard basis vectors completing a basis of ``(MJ)_v`` (deterministic)."""
        K = self.field
        gens = []
        for v, imgs in enumerate(self.radical_images()):
            ech = Echelon(K)
            for vec in imgs:
                ech.add(vec)
            chosen = []
            for j in range(self.dims[v]):
                if ech.add({j: K.one}) is not None:
                    chosen.append(j)
            # ``Echelon.add`` uses the largest column as pivot, so fresh unit
            # vectors are independent exactly when they fall outside the span
            gens.append(chosen)
        return gens

    def top_dims(self):
        return [len(g) for g in self.top_generators()]


def simple_module(presentation, vertex):
    q = presentation.quiver
    v = q.vindex[str(vertex)] if not isinstance(vertex, int) else vertex
    dims = [1 if i == v else 0 for i in range(len(q.vertices))]
    return Representation(presentation, dims, {})


def _ensure_finite(A):
    if not A.finite:
        raise InfiniteAlgebraError("resolutions need a finite-dimensional algebra")


def syzygy(A, M):
    """Kernel of the projective cover ``P -> M`` as a representation, plus ``P``'s top."""
    _ensure_finite(A)
    K = A.field
    q = A.quiver
    nv = len(q.vertices)
    gens = M.top_generators()
    # P = sum over generators (v, j) of e_v A; basis at vertex w: (g, d, k) with word k from v to w
    pbasis = [[] for _ in range(nv)]
    gen_list = [(v, j) for v in range(nv) for j in gens[v]]
    for g, (v, j) in enumerate(gen_list):
        for d in range(A.top_degree + 1):
            for k in A.basis_between(d, v):
                pbasis[A.tgt[d][k]].append((g, d, k))
    pindex = [{b: i for i, b in enumerate(pb)} for pb in pbasis]
    # image of each P basis element in M: generator vector acted on by the word
    images = [[] for _ in range(nv)]
    gen_vec = []
    for v, j in gen_list:
        vec = [K.zero] * M.dims[v]
        vec[j] = K.one
        gen_vec.append(vec)
    for w in range(nv):
        for g, d, k in pbasis[w]:
            v = gen_list[g][0]
            vec = gen_vec[g]
            cur = v
            for a in A.words[d][k] if d else ():
                vec = M.act(cur, vec, a)
                cur = q.target[a]
            images[w].append({i: x for i, x in enumerate(vec) if not K.is_zero(x)})
    # kernel basis per vertex
    kern = []
    for w in range(nv):
        kern.append(kernel(K, images[w]))
    kdims = [len(kv) for kv in kern]
    # arrow matrices: express (kernel vector) . a in the kernel basis at the target
    mats = {}
    for a in range(len(q.arrows)):
        s, t = q.source[a], q.target[a]
        tgt_basis = [dict(kv) for kv in kern[t]]
        rows = []
        for kv in kern[s]:
            img = {}
            for pi, c in kv.items():
                g, d, k = pbasis[s][pi]
                if d + 1 > A.top_degree:
                    continue
                for k2, val in A.right_mul(d, {k: K.one}, a).items():
                    key = pindex[t][(g, d + 1, k2)]
                    axpy(K, img, K.mul(c, val), {key: K.one})
            coeffs = solve_particular(K, tgt_basis, img) if img else {}
            if coeffs is None:
                raise RepresentationError("kernel is not a submodule (internal error)")
            rows.append([coeffs.get(i, K.zero) for i in range(kdims[t])])
        mats[a] = rows
    omega = Representation(M.presentation, kdims, mats, check=False)
    pdims = [len(pb) for pb in pbasis]
    return omega, [len(g) for g in gens], pdims


def betti_sequence(A, M, N):
    """Betti numbers ``b_0 .. b_N`` plus dimension vectors of ``Omega^k M``."""
    _ensure_finite(A)
    bettis, tops, dimvecs, pdims = [], [], [list(M.dims)], []
    cur = M
    for _ in range(N + 1):
        nxt, top, pd = syzygy(A, cur)
        tops.append(top)
        bettis.append(sum(top))
        pdims.append(pd)
        dimvecs.append(list(nxt.dims))
        cur = nxt
    return {"betti": bettis, "tops": tops, "syzygy_dims": dimvecs, "projective_dims": pdims}


def syzygies(A, M, N):
    out = [M]
    for _ in range(N):
        out.append(syzygy(A, out[-1])[0])
    return out


def hom_space(M, N):
    """Basis of module maps ``M -> N`` as per-vertex matrices."""
    K = M.field
    q = M.presentation.quiver
    nv = len(q.vertices)
    offs, n = [], 0
    for v in range(nv):
        offs.append(n)
        n += M.dims[v] * N.dims[v]

    def var(v, i, j):
        return offs[v] + i * N.dims[v] + j

    # M_a X_t - X_s N_a = 0, one equation per (a, i, j)
    eqs = []
    for a in range(len(q.arrows)):
        s, t = q.source[a], q.target[a]
        Ma, Na = M.mats[a], N.mats[a]
        for i in range(M.dims[s]):
            for j in range(N.dims[t]):
                eq = {}
                for k in range(M.dims[t]):
                    c = Ma[i][k]
                    if not K.is_zero(c):
                        axpy(K, eq, c, {var(t, k, j): K.one})
                for k in range(N.dims[s]):
                    c = Na[k][j]
                    if not K.is_zero(c):
                        axpy(K, eq, K.neg(c), {var(s, i, k): K.one})
                if eq:
                    eqs.append(eq)
    # kernel of the transpose system: columns are variables
    cols = [{} for _ in range(n)]
    for e, eq in enumerate(eqs):
        for x, c in eq.items():
            cols[x][e] = c
    basis = kernel(K, cols)
    out = []
    for kv in basis:
        X = []
        for v in range(nv):
            X.append([[kv.get(var(v, i, j), K.zero) for j in range(N.dims[v])] for i in range(M.dims[v])])
        out.append(X)
    return out


def is_isomorphic(M, N, trials=12, seed=0):
    """Decide ``M ~ N`` by certifying an invertible intertwiner.

    A random combination of Hom basis elements is invertible with high
    probability when an isomorphism exists; a ``True`` answer is certified by
    nonzero determinants, ``False`` is probabilistic.
    """
    if M.dims != N.dims:
        return False
    K = M.field
    basis = hom_space(M, N)
    if not basis:
        return all(d == 0 for d in M.dims)
    rng = random.Random(seed)
    nv = len(M.dims)
    for _ in range(trials):
        coeffs = [K.from_int(rng.randint(-50, 50)) for _ in basis]
        ok = True
        for v in range(nv):
            n = M.dims[v]
            if n == 0:
                continue
            X = [[K.zero] * n for _ in range(n)]
            for c, B in zip(coeffs, basis):
                if K.is_zero(c):
                    continue
                for i in range(n):
                    for j in range(n):
                        X[i][j] = K.add(X[i][j], K.mul(c, B[v][i][j]))
            if K.is_zero(determinant(K, X)):
                ok = False
                break
        if ok:
            return True
    return False


def detect_periodicity(A, M, N):
    """Smallest ``1 <= p <= N`` with ``Omega^p M ~ M``, else ``None``."""
    cur = M
    for p in range(1, N + 1):
        cur = syzygy(A, cur)[0]
        if cur.dims == M.dims and is_isomorphic(cur, M):
            return p
    return None


def report_json(A, indent=2):
    return json.dumps(A.report(), indent=indent, sort_keys=True)
