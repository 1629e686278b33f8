"""Degree-truncated noncommutative Groebner bases for homogeneous ideals of kQ.

Completion is Buchberger style: overlap ambiguities are resolved degree by
degree, every new element is fully reduced (hence tip-reduced) before it is
added, and the result is interreduced.  For homogeneous input, resolving all
overlaps of length <= D gives unique normal forms in degrees <= D.
"""

from __future__ import annotations

import logging

from .freealg import FreeElement
from .quiver import validate_relation

log = logging.getLogger(__name__)


class TruncationError(ValueError):
    """A query exceeds the degree up to which the basis is known to be complete."""


class InhomogeneousError(ValueError):
    pass


def _check_relations(relations):
    for r in relations:
        if not r.is_homogeneous():
            raise InhomogeneousError(f"relation {r} is not homogeneous")
    quivers = {id(r.quiver) for r in relations}
    if len({r.quiver for r in relations}) > 1 or len({id(r.field) for r in relations}) > 1:
        raise ValueError("relations over different quivers or fields")
    del quivers


class _Rewriter:
    """Tip table plus the reduction loop shared by completion and verification."""

    def __init__(self, K, order):
        self.K = K
        self.order = order
        self.tails = {}        # tip -> dict of the remaining terms (element = tip + tail)
        self.lengths = []

    def add(self, tip, tail):
        self.tails[tip] = tail
        if len(tip) not in self.lengths:
            self.lengths.append(len(tip))
            self.lengths.sort()

    def remove(self, tip):
        del self.tails[tip]
        self.lengths = sorted({len(t) for t in self.tails})

    def find(self, m, skip=None):
        if m[0] < 0:
            return None
        tails = self.tails
        n = len(m)
        for i in range(n):
            for L in self.lengths:
                if i + L > n:
                    break
                sub = m[i:i + L]
                if sub in tails and sub != skip:
                    return i, sub
        return None

    def reduce(self, terms, trace=None, skip=None):
        """Fully reduce ``terms``; rewrite the largest reducible monomial first."""
        K = self.K
        key = self.order.key
        f = dict(terms)
        result = {}
        while f:
            m = max(f, key=key)
            c = f.pop(m)
            hit = self.find(m, skip)
            if hit is None:
                result[m] = c
                continue
            i, tip = hit
            u, v = m[:i], m[i + len(tip):]
            if trace is not None:
                trace.append((c, u, tip, v))
            negc = K.neg(c)
            for p, d in self.tails[tip].items():
                w = u + p + v
                val = K.mul(negc, d)
                old = f.get(w)
                if old is None:
                    f[w] = val
                else:
                    s = K.add(old, val)
                    if K.is_zero(s):
                        del f[w]
                    else:
                        f[w] = s
        return result


def _monic_split(K, order, terms):
    tip = max(terms, key=order.key)
    inv = K.inv(terms[tip])
    tail = {p: K.mul(inv, c) for p, c in terms.items() if p != tip}
    return tip, tail


def _overlap_spoly(K, s, s_tail, t, t_tail, k):
    """(s + s_tail)*t[k:] - s[:-k]*(t + t_tail) with the common word cancelled."""
    right = t[k:]
    left = s[:len(s) - k]
    out = {}
    for p, c in s_tail.items():
        w = p + right
        out[w] = K.add(out.get(w, K.zero), c)
    for p, c in t_tail.items():
        w = left + p
        out[w] = K.sub(out.get(w, K.zero), c)
    return {w: c for w, c in out.items() if not K.is_zero(c)}


class GroebnerBasis:
    """Reduced, tip-reduced generating set, complete in degrees ``<= complete_below``."""

    def __init__(self, quiver, field, order, rewriter, truncation_degree, complete_below=None):
        self.quiver = quiver
        self.field = field
        self.order = order
        self._rw = rewriter
        self.truncation_degree = truncation_degree
        self.complete_below = truncation_degree if complete_below is None else complete_below

    @property
    def elements(self):
        key = self.order.key
        out = []
        for tip in sorted(self._rw.tails, key=key):
            terms = dict(self._rw.tails[tip])
            terms[tip] = self.field.one
            out.append(FreeElement(self.quiver, self.field, terms))
        return out

    @property
    def tips(self):
        return sorted(self._rw.tails, key=self.order.key)

    def __len__(self):
        return len(self._rw.tails)

    def _check_degree(self, d):
        if d > self.complete_below:
            raise TruncationError(f"degree {d} exceeds completeness bound {self.complete_below}")

    def normal_form(self, f, trace=None):
        for d in f.degrees():
            self._check_degree(d)
        return FreeElement(self.quiver, self.field, self._rw.reduce(f.terms, trace))

    def is_normal(self, path):
        return self._rw.find(path) is None

    def monomial_basis(self, d):
        """Degree-``d`` paths containing no tip, in increasing order."""
        self._check_degree(d)
        q = self.quiver
        layer = [q.trivial(v) for v in range(len(q.vertices))]
        tails = self._rw.tails
        lengths = self._rw.lengths
        for step in range(1, d + 1):
            nxt = []
            for p in layer:
                outs = q.out_arrows[q.path_target(p)]
                base = () if p[0] < 0 else p
                for a in outs:
                    w = base + (a,)
                    n = len(w)
                    if not any(L <= n and w[n - L:] in tails for L in lengths):
                        nxt.append(w)
            layer = nxt
        return sorted(layer, key=self.order.key)

    def hilbert(self, D=None):
        D = self.complete_below if D is None else D
        return [len(self.monomial_basis(d)) for d in range(D + 1)]

    def format(self):
        return "\n".join(g.format(self.order) for g in self.elements)


def complete_truncated(relations, order, D, trace=None):
    """Buchberger completion resolving every overlap whose word has length <= ``D``.

    ``trace``, when a list, receives text lines for each overlap processed and
    each element added.
    """
    relations = [r for r in relations if not r.is_zero()]
    _check_relations(relations)
    quiver = order.quiver
    K = relations[0].field if relations else None
    if K is None:
        return GroebnerBasis(quiver, None, order, _Rewriter(None, order), D)
    for r in relations:
        validate_relation(quiver, r)
    rw = _Rewriter(K, order)
    by_degree = {}
    for r in relations:
        by_degree.setdefault(r.degree, []).append(r.terms)
    for d in range(1, D + 1):
        candidates = [(None, t) for t in by_degree.get(d, [])]
        tips = list(rw.tails)
        for s in tips:
            for t in tips:
                k = len(s) + len(t) - d
                if 1 <= k < min(len(s), len(t)) and s[len(s) - k:] == t[:k]:
                    spoly = _overlap_spoly(K, s, rw.tails[s], t, rw.tails[t], k)
                    candidates.append(((s, t, k), spoly))
        for origin, terms in candidates:
            red = rw.reduce(terms)
            if trace is not None and origin is not None:
                s, t, k = origin
                trace.append(f"overlap {quiver.format_path(s)} / {quiver.format_path(t)} "
                             f"(shared {k}): {'resolves' if not red else 'new element'}")
            if not red:
                continue
            tip, tail = _monic_split(K, order, red)
            rw.add(tip, tail)
            if trace is not None:
                trace.append("add " + FreeElement(quiver, K, {**tail, tip: K.one}).format(order))
    # interreduce tails
    for tip in sorted(rw.tails, key=order.key):
        rw.tails[tip] = rw.reduce(rw.tails[tip], skip=tip)
    log.debug("completed %d elements up to degree %d", len(rw.tails), D)
    return GroebnerBasis(quiver, K, order, rw, D)


def verify_groebner(relations, order, D):
    """Check that ``relations`` (made monic, not completed) are a Groebner basis up to ``D``.

    Returns ``(ok, failures)``; each failure is ``(description, remainder)``.
    """
    relations = [r for r in relations if not r.is_zero()]
    _check_relations(relations)
    quiver = order.quiver
    if not relations:
        return True, []
    K = relations[0].field
    rw = _Rewriter(K, order)
    failures = []
    pending = []
    for r in relations:
        tip, tail = _monic_split(K, order, r.terms)
        if tip in rw.tails:
            pending.append((f"inclusion {quiver.format_path(tip)}", {**tail, tip: K.one}))
        else:
            rw.add(tip, tail)
    # a tip properly containing another tip is an inclusion ambiguity
    for big in list(rw.tails):
        for small in rw.tails:
            if small == big or len(small) >= len(big):
                continue
            for i in range(len(big) - len(small) + 1):
                if big[i:i + len(small)] == small:
                    u, v = big[:i], big[i + len(small):]
                    diff = {p: c for p, c in rw.tails[big].items()}
                    for p, c in rw.tails[small].items():
                        w = u + p + v
                        diff[w] = K.sub(diff.get(w, K.zero), c)
                    pending.append((f"inclusion {quiver.format_path(small)} in {quiver.format_path(big)}",
                                    {w: c for w, c in diff.items() if not K.is_zero(c)}))
    tips = list(rw.tails)
    for s in tips:
        for t in tips:
            for k in range(1, min(len(s), len(t))):
                if len(s) + len(t) - k > D:
                    continue
                if s[len(s) - k:] == t[:k]:
                    spoly = _overlap_spoly(K, s, rw.tails[s], t, rw.tails[t], k)
                    pending.append((f"overlap {quiver.format_path(s)} / {quiver.format_path(t)} shared {k}", spoly))
    for desc, terms in pending:
        red = rw.reduce(terms)
        if red:
            failures.append((desc, FreeElement(quiver, K, red)))
    return not failures, failures


def normal_form(f, G):
    return G.normal_form(f)


def monomial_basis(G, d):
    return G.monomial_basis(d)
