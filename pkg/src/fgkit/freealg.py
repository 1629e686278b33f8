"""Elements of a path algebra kQ: sparse maps from paths to nonzero scalars."""

from __future__ import annotations

from fractions import Fraction

from .coeff import FieldError, Scalar


class QuiverMismatch(ValueError):
    pass


class FreeElement:
    """Finite linear combination of paths with raw coefficients of ``field``."""

    __slots__ = ("quiver", "field", "terms")

    def __init__(self, quiver, field, terms=None):
        self.quiver = quiver
        self.field = field
        if terms:
            is_zero = field.is_zero
            self.terms = {p: c for p, c in terms.items() if not is_zero(c)}
        else:
            self.terms = {}

    # ---- constructors ----

    @classmethod
    def zero(cls, quiver, field):
        return cls(quiver, field)

    @classmethod
    def one(cls, quiver, field):
        return cls(quiver, field, {quiver.trivial(v): field.one for v in range(len(quiver.vertices))})

    @classmethod
    def from_path(cls, quiver, field, path, coeff=None):
        if not quiver.is_path(path):
            raise ValueError(f"not a path: {path!r}")
        return cls(quiver, field, {path: field.one if coeff is None else coeff})

    # ---- structure ----

    def _check(self, other):
        if other.quiver != self.quiver:
            raise QuiverMismatch("elements live over different quivers")
        if other.field is not self.field:
            raise FieldError("elements live over different fields")

    def _coerce_scalar(self, s):
        if isinstance(s, Scalar):
            if s.field is not self.field:
                raise FieldError("cross-field arithmetic")
            return s.value
        if isinstance(s, (int, Fraction, str)) and not isinstance(s, bool):
            return self.field.coerce(s)
        raise TypeError(f"cannot multiply a path-algebra element by {s!r}")

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def copy(self):
        return FreeElement(self.quiver, self.field, dict(self.terms))

    def coefficient(self, path):
        return Scalar(self.field, self.terms.get(path, self.field.zero))

    def paths(self, order=None):
        """Support, largest first under ``order`` (default: declaration ranking)."""
        key = order.key if order is not None else self.quiver.default_key
        return sorted(self.terms, key=key, reverse=True)

    def degrees(self):
        return {self.quiver.path_length(p) for p in self.terms}

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    @property
    def degree(self):
        degs = self.degrees()
        if len(degs) != 1:
            raise ValueError("element is zero or not homogeneous")
        return next(iter(degs))

    def homogeneous_components(self):
        comps = {}
        for p, c in self.terms.items():
            comps.setdefault(self.quiver.path_length(p), {})[p] = c
        return {d: FreeElement(self.quiver, self.field, t) for d, t in sorted(comps.items())}

    def tip(self, order):
        if not self.terms:
            raise ValueError("zero element has no tip")
        return max(self.terms, key=order.key)

    def endpoints(self):
        """Set of (source, target) vertex pairs occurring in the support."""
        q = self.quiver
        return {(q.path_source(p), q.path_target(p)) for p in self.terms}

    # ---- arithmetic ----

    def __add__(self, other):
        if not isinstance(other, FreeElement):
            return NotImplemented
        self._check(other)
        K = self.field
        out = dict(self.terms)
        for p, c in other.terms.items():
            w = out.get(p)
            if w is None:
                out[p] = c
            else:
                s = K.add(w, c)
                if K.is_zero(s):
                    del out[p]
                else:
                    out[p] = s
        return FreeElement(self.quiver, K, out)

    def __neg__(self):
        K = self.field
        return FreeElement(self.quiver, K, {p: K.neg(c) for p, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, FreeElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c):
        """Multiply by a raw field value."""
        K = self.field
        if K.is_zero(c):
            return FreeElement(self.quiver, K)
        return FreeElement(self.quiver, K, {p: K.mul(c, v) for p, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, FreeElement):
            return self.multiply(other)
        return self.scale(self._coerce_scalar(other))

    def __rmul__(self, other):
        return self.scale(self._coerce_scalar(other))

    def multiply(self, other):
        """Bilinear extension of concatenation; non-composable pairs give 0."""
        self._check(other)
        K = self.field
        compose = self.quiver.compose
        out = {}
        for p, c in self.terms.items():
            for q, d in other.terms.items():
                pq = compose(p, q)
                if pq is None:
                    continue
                v = K.mul(c, d)
                w = out.get(pq)
                out[pq] = v if w is None else K.add(w, v)
        return FreeElement(self.quiver, K, out)

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        result = FreeElement.one(self.quiver, self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, FreeElement):
            return NotImplemented
        return (self.quiver == other.quiver and self.field is other.field
                and self.terms == other.terms)

    __hash__ = None

    def opposite(self, opposite_quiver=None):
        """Reverse every path; an anti-automorphism kQ -> kQ^op."""
        opq = opposite_quiver if opposite_quiver is not None else self.quiver.opposite()
        return FreeElement(opq, self.field, {self.quiver.reverse_path(p): c for p, c in self.terms.items()})

    def map_arrows(self, target_quiver, images):
        """Substitute each arrow by an element of ``target_quiver``'s path algebra.

        ``images`` maps arrow names to :class:`FreeElement`; vertices map by label.
        """
        K = self.field
        q = self.quiver
        result = FreeElement(target_quiver, K)
        for p, c in self.terms.items():
            if q.path_length(p) == 0:
                v = q.vertices[q.path_source(p)]
                term = FreeElement(target_quiver, K, {target_quiver.trivial(target_quiver.vindex[v]): K.one})
            else:
                term = images[q.arrows[p[0]]]
                for a in p[1:]:
                    term = term * images[q.arrows[a]]
            result = result + term.scale(c)
        return result

    # ---- printing ----

    def format(self, order=None):
        if not self.terms:
            return "0"
        K = self.field
        out = []
        for p in self.paths(order):
            c = self.terms[p]
            cs = K.format(c)
            neg = cs.startswith("-") and K.is_atomic(c)
            if neg:
                cs = cs[1:]
            elif not K.is_atomic(c):
                cs = f"({cs})"
            ps = self.quiver.format_path(p)
            body = ps if cs == "1" else f"{cs}*{ps}"
            if not out:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"FreeElement({self.format()})"


def _split_top(text, seps):
    """Split at top-level separator characters, keeping each separator with its part."""
    parts, depth, cur = [], 0, ""
    prev = ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and ch in seps and not (ch in "+-" and prev in "^*/(+-") and cur.strip():
            parts.append(cur)
            cur = ch
        else:
            cur += ch
        if not ch.isspace():
            prev = ch
    if cur.strip():
        parts.append(cur)
    return parts


def parse_element(quiver, field, text, constants=None):
    """Parse ``2*a*b - q*c*d + e_v`` style text into a :class:`FreeElement`."""
    constants = constants or {}
    text = text.strip()
    if text == "0":
        return FreeElement(quiver, field)
    result = FreeElement(quiver, field)
    for term in _split_top(text, "+-"):
        term = term.strip()
        sign = 1
        if term[0] in "+-":
            sign = -1 if term[0] == "-" else 1
            term = term[1:].strip()
        path_names, scalars = [], []
        for factor in _split_top(term, "*"):
            factor = factor.strip().lstrip("*").strip()
            if quiver.is_path_token(factor):
                path_names.append(factor)
            else:
                if path_names:
                    raise ValueError(f"scalar factor {factor!r} after path factors in {term!r}")
                scalars.append(f"({factor})")
        if not path_names:
            raise ValueError(f"term {term!r} has no path")
        coeff = field.parse("*".join(scalars), constants) if scalars else field.one
        if sign < 0:
            coeff = field.neg(coeff)
        path = quiver.parse_path("*".join(path_names))
        result = result + FreeElement(quiver, field, {path: coeff})
    return result
