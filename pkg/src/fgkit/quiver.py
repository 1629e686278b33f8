"""Quivers, paths, length-left-lexicographic orders and textual presentations.

Paths are tuples of arrow indices read left to right: ``(a, b)`` traverses
``a`` first, so ``target(a) == source(b)``.  The trivial path at vertex ``v``
is the one-element tuple ``(~v,)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field

from .coeff import field_from_spec
from .freealg import FreeElement, parse_element


class QuiverError(ValueError):
    pass


class Quiver:
    def __init__(self, vertices, arrows):
        self.vertices = tuple(str(v) for v in vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise QuiverError("vertex labels must be unique")
        self.vindex = {v: i for i, v in enumerate(self.vertices)}
        names, src, tgt = [], [], []
        for name, s, t in arrows:
            name, s, t = str(name), str(s), str(t)
            if s not in self.vindex or t not in self.vindex:
                raise QuiverError(f"arrow {name}: unknown vertex")
            names.append(name)
            src.append(self.vindex[s])
            tgt.append(self.vindex[t])
        if len(set(names)) != len(names) or set(names) & set(self.vertices):
            raise QuiverError("arrow labels must be unique and distinct from vertex labels")
        self.arrows = tuple(names)
        self.aindex = {a: i for i, a in enumerate(names)}
        self.source = tuple(src)
        self.target = tuple(tgt)
        self.out_arrows = [[a for a in range(len(names)) if src[a] == v] for v in range(len(self.vertices))]
        self.in_arrows = [[a for a in range(len(names)) if tgt[a] == v] for v in range(len(self.vertices))]

    def __eq__(self, other):
        return (isinstance(other, Quiver) and self.vertices == other.vertices
                and self.arrows == other.arrows and self.source == other.source
                and self.target == other.target)

    def __hash__(self):
        return hash((self.vertices, self.arrows, self.source, self.target))

    def __repr__(self):
        return f"Quiver({len(self.vertices)} vertices, {len(self.arrows)} arrows)"

    # ---- paths ----

    @staticmethod
    def trivial(v):
        return (~v,)

    @staticmethod
    def path_length(p):
        return 0 if p[0] < 0 else len(p)

    def path_source(self, p):
        return ~p[0] if p[0] < 0 else self.source[p[0]]

    def path_target(self, p):
        return ~p[0] if p[0] < 0 else self.target[p[-1]]

    def is_path(self, p):
        if not isinstance(p, tuple) or not p:
            return False
        if p[0] < 0:
            return len(p) == 1 and ~p[0] < len(self.vertices)
        if any(a < 0 or a >= len(self.arrows) for a in p):
            return False
        return all(self.target[p[i]] == self.source[p[i + 1]] for i in range(len(p) - 1))

    def compose(self, p, q):
        if p[0] < 0:
            return q if self.path_source(q) == ~p[0] else None
        if q[0] < 0:
            return p if self.target[p[-1]] == ~q[0] else None
        if self.target[p[-1]] != self.source[q[0]]:
            return None
        return p + q

    def reverse_path(self, p):
        return p if p[0] < 0 else p[::-1]

    def path(self, *names):
        """Path from arrow names (or a single ``e_<v>``); raises if not composable."""
        if len(names) == 1 and names[0].startswith("e_") and names[0][2:] in self.vindex:
            return self.trivial(self.vindex[names[0][2:]])
        try:
            p = tuple(self.aindex[n] for n in names)
        except KeyError as exc:
            raise QuiverError(f"unknown arrow {exc.args[0]!r}") from None
        if not p:
            raise QuiverError("empty path")
        if not self.is_path(p):
            raise QuiverError(f"non-composable path {'*'.join(names)}")
        return p

    def is_path_token(self, tok):
        return tok in self.aindex or (tok.startswith("e_") and tok[2:] in self.vindex)

    def parse_path(self, text):
        toks = [t.strip() for t in text.split("*")]
        return self.path(*toks)

    def format_path(self, p):
        if p[0] < 0:
            return f"e_{self.vertices[~p[0]]}"
        return "*".join(self.arrows[a] for a in p)

    def default_key(self, p):
        if p[0] < 0:
            return (0, (~p[0],))
        return (len(p), p)

    def paths_of_length(self, d):
        """All paths of length ``d`` (brute force; small quivers only)."""
        if d == 0:
            return [self.trivial(v) for v in range(len(self.vertices))]
        layer = [(a,) for a in range(len(self.arrows))]
        for _ in range(d - 1):
            layer = [p + (b,) for p in layer for b in self.out_arrows[self.target[p[-1]]]]
        return layer

    # ---- derived quivers ----

    def opposite(self):
        return Quiver(self.vertices, [(a, self.vertices[self.target[i]], self.vertices[self.source[i]])
                                      for i, a in enumerate(self.arrows)])

    def adjacency(self):
        """Integer matrix whose (i, j) entry counts arrows i -> j."""
        n = len(self.vertices)
        m = [[0] * n for _ in range(n)]
        for a in range(len(self.arrows)):
            m[self.source[a]][self.target[a]] += 1
        return m

    def element(self, field, text, constants=None):
        return parse_element(self, field, text, constants)

    def arrow(self, field, name):
        return FreeElement(self, field, {(self.aindex[name],): field.one})

    def idempotent(self, field, v):
        return FreeElement(self, field, {self.trivial(self.vindex[str(v)]): field.one})


class MonomialOrder:
    """Length-left-lexicographic order; vertices sit below every arrow."""

    def __init__(self, quiver, ranking=None):
        self.quiver = quiver
        if ranking is None:
            ranking = quiver.arrows
        ranking = list(ranking)
        if sorted(ranking) != sorted(quiver.arrows):
            raise QuiverError("ranking must list every arrow exactly once")
        self.ranking = tuple(ranking)
        self.rank = [0] * len(quiver.arrows)
        for r, name in enumerate(ranking):
            self.rank[quiver.aindex[name]] = r
        self._identity = self.rank == list(range(len(self.rank)))

    def key(self, p):
        if p[0] < 0:
            return (0, (~p[0],))
        if self._identity:
            return (len(p), p)
        rank = self.rank
        return (len(p), tuple(rank[a] for a in p))

    def __repr__(self):
        return f"MonomialOrder({' < '.join(self.ranking)})"


def path_compare(order, p, q):
    """-1, 0 or 1 as ``p`` is less than, equal to, or greater than ``q``."""
    qv = order.quiver
    if not (qv.is_path(p) and qv.is_path(q)):
        raise QuiverError("paths do not belong to the order's quiver")
    kp, kq = order.key(p), order.key(q)
    return (kp > kq) - (kp < kq)


@dataclass
class Presentation:
    """A quiver with relations over a field: the algebra kQ/I."""

    field: object
    quiver: Quiver
    relations: list
    constants: dict = dc_field(default_factory=dict)
    name: str = ""

    def __post_init__(self):
        for r in self.relations:
            validate_relation(self.quiver, r)

    def opposite(self):
        opq = self.quiver.opposite()
        return Presentation(self.field, opq, [r.opposite(opq) for r in self.relations],
                            dict(self.constants), (self.name + "^op") if self.name else "")

    def element(self, text):
        return parse_element(self.quiver, self.field, text, self.constants)

    def gens(self):
        """Arrow name -> element; vertex label ``e_<v>`` -> idempotent."""
        out = {a: self.quiver.arrow(self.field, a) for a in self.quiver.arrows}
        for v in self.quiver.vertices:
            out[f"e_{v}"] = self.quiver.idempotent(self.field, v)
        return out

    def to_text(self):
        lines = [f"field {self.field.descriptor}"]
        for k, v in self.constants.items():
            lines.append(f"const {k} = {self.field.format(self.field.as_value(v))}")
        lines.append("vertex " + " ".join(self.quiver.vertices))
        q = self.quiver
        for i, a in enumerate(q.arrows):
            lines.append(f"arrow {a}: {q.vertices[q.source[i]]} -> {q.vertices[q.target[i]]}")
        for r in self.relations:
            lines.append(f"relation {r.format()}")
        return "\n".join(lines) + "\n"


class PresentationError(ValueError):
    def __init__(self, msg, line=None):
        super().__init__(f"line {line}: {msg}" if line is not None else msg)
        self.line = line


def validate_relation(quiver, r):
    """Relations must be nonzero, homogeneous and made of parallel paths."""
    if r.quiver != quiver:
        raise PresentationError("relation lives over a different quiver")
    if r.is_zero():
        raise PresentationError("zero relation")
    if not r.is_homogeneous():
        raise PresentationError(f"relation {r} is not homogeneous")
    if r.degree == 0:
        raise PresentationError(f"relation {r} has degree 0")
    if len(r.endpoints()) != 1:
        raise PresentationError(f"relation {r} mixes non-parallel paths")


def parse_presentation(text):
    """Read the line-oriented presentation format (see README)."""
    K = None
    constants = {}
    vertices, arrows, rel_lines = [], [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        kw, _, rest = line.partition(" ")
        rest = rest.strip()
        try:
            if kw == "field":
                K = field_from_spec(rest)
            elif kw == "const":
                m = re.fullmatch(r"([A-Za-z_]\w*)\s*=\s*(.+)", rest)
                if not m:
                    raise PresentationError("malformed const", lineno)
                if K is None:
                    raise PresentationError("const before field", lineno)
                constants[m.group(1)] = K.parse(m.group(2), constants)
            elif kw == "vertex":
                vertices.extend(rest.split())
            elif kw == "arrow":
                m = re.fullmatch(r"(\S+)\s*:\s*(\S+)\s*->\s*(\S+)", rest)
                if not m:
                    raise PresentationError("malformed arrow", lineno)
                arrows.append((m.group(1), m.group(2), m.group(3)))
            elif kw == "relation":
                rel_lines.append((lineno, rest))
            else:
                raise PresentationError(f"unknown keyword {kw!r}", lineno)
        except PresentationError:
            raise
        except ValueError as exc:
            raise PresentationError(str(exc), lineno) from None
    if K is None:
        K = field_from_spec("Q")
    try:
        quiver = Quiver(vertices, arrows)
    except QuiverError as exc:
        raise PresentationError(str(exc)) from None
    relations = []
    for lineno, body in rel_lines:
        try:
            r = parse_element(quiver, K, body, constants)
            validate_relation(quiver, r)
        except PresentationError as exc:
            raise PresentationError(str(exc), lineno) from None
        except ValueError as exc:
            raise PresentationError(str(exc), lineno) from None
        relations.append(r)
    return Presentation(K, quiver, relations, constants)
