"""Exact coefficient fields.

A field object owns the arithmetic; its elements are plain Python values
(``int``/``Fraction`` for Q, ``int`` for F_p, tuples of base values for
polynomial quotients, ``(num, den)`` pairs for rational functions).  Keeping
elements as raw values makes the hot loops of the linear algebra cheap.
:class:`Scalar` wraps a raw value together with its field for user-facing
arithmetic.

Descriptor grammar::

    Q | F<p> | <field>[t]/(<monic poly>) | <field>(t)

Only one layer may introduce the indeterminate ``t``.
"""

from __future__ import annotations

import re
from fractions import Fraction


class FieldError(ValueError):
    pass


class ZeroDivisorError(ZeroDivisionError):
    """Inversion hit a non-unit of a quotient ring."""


def _is_prime(p):
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class Field:
    """Common interface; subclasses implement the primitive operations."""

    descriptor = "?"
    characteristic = 0
    has_t = False

    # primitives: add, neg, mul, inv, zero, one, from_int

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a):
        return a == self.zero

    def is_one(self, a):
        return a == self.one

    def pow(self, a, n):
        if n < 0:
            a, n = self.inv(a), -n
        result = self.one
        while n:
            if n & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            n >>= 1
        return result

    def from_fraction(self, x):
        x = Fraction(x)
        return self.div(self.from_int(x.numerator), self.from_int(x.denominator))

    def gen(self):
        raise FieldError(f"field {self.descriptor} has no indeterminate t")

    def coerce(self, x):
        """Raw value from an int, Fraction, string or Scalar."""
        if isinstance(x, Scalar):
            if x.field is not self:
                raise FieldError("cross-field arithmetic")
            return x.value
        if isinstance(x, bool):
            raise TypeError("bool is not a scalar")
        if isinstance(x, int):
            return self.from_int(x)
        if isinstance(x, Fraction):
            return self.from_fraction(x)
        if isinstance(x, str):
            return self.parse(x)
        raise TypeError(f"cannot coerce {x!r} into {self.descriptor}")

    def __call__(self, x):
        return Scalar(self, self.coerce(x))

    def as_value(self, x):
        """Like ``coerce`` but raw field values pass through unchanged."""
        if isinstance(x, (Scalar, int, Fraction, str)):
            return self.coerce(x)
        return x

    def parse(self, text, constants=None):
        return _ExprParser(self, text, constants or {}).parse()

    def format(self, a):
        raise NotImplementedError

    def is_atomic(self, a):
        """True when the printed form needs no parentheses inside a product."""
        s = self.format(a)
        return re.fullmatch(r"-?[0-9]+|-?[0-9]+/[0-9]+|-?t(\^[0-9]+)?", s) is not None

    def __repr__(self):
        return f"<field {self.descriptor}>"


class RationalField(Field):
    descriptor = "Q"
    characteristic = 0
    zero = 0
    one = 1

    @staticmethod
    def _norm(x):
        if x.__class__ is Fraction and x.denominator == 1:
            return x.numerator
        return x

    def add(self, a, b):
        s = a + b
        return s if s.__class__ is int else self._norm(s)

    def neg(self, a):
        return -a

    def sub(self, a, b):
        s = a - b
        return s if s.__class__ is int else self._norm(s)

    def mul(self, a, b):
        s = a * b
        return s if s.__class__ is int else self._norm(s)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        if a == 1 or a == -1:
            return int(a)
        return self._norm(Fraction(1) / a)

    def from_int(self, n):
        return n

    def from_fraction(self, x):
        return self._norm(Fraction(x))

    def format(self, a):
        return str(a)


class PrimeField(Field):
    zero = 0
    one = 1

    def __init__(self, p):
        if not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.descriptor = f"F{p}"

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(a, -1, self.p)

    def from_int(self, n):
        return n % self.p

    def format(self, a):
        return str(a)


# ---------- univariate polynomials over a base field (tuples, low degree first) ----------

def _ptrim(K, a):
    a = list(a)
    while a and K.is_zero(a[-1]):
        a.pop()
    return tuple(a)


def _padd(K, a, b):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else K.zero
        y = b[i] if i < len(b) else K.zero
        out.append(K.add(x, y))
    return _ptrim(K, out)


def _pneg(K, a):
    return tuple(K.neg(x) for x in a)


def _pmul(K, a, b):
    if not a or not b:
        return ()
    out = [K.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if K.is_zero(x):
            continue
        for j, y in enumerate(b):
            out[i + j] = K.add(out[i + j], K.mul(x, y))
    return _ptrim(K, out)


def _pdivmod(K, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by 0")
    a = list(a)
    lead_inv = K.inv(b[-1])
    q = [K.zero] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        c = K.mul(a[-1], lead_inv)
        shift = len(a) - len(b)
        q[shift] = c
        for i, y in enumerate(b):
            a[shift + i] = K.sub(a[shift + i], K.mul(c, y))
        a = list(_ptrim(K, a))
    return _ptrim(K, q), tuple(a)


def _pmonic(K, a):
    if not a:
        return a, K.one
    c = K.inv(a[-1])
    return tuple(K.mul(c, x) for x in a), a[-1]


def _pgcd(K, a, b):
    while b:
        a, b = b, _pdivmod(K, a, b)[1]
    return _pmonic(K, a)[0]


def _pformat(K, a, var="t"):
    if not a:
        return "0"
    parts = []
    for i in range(len(a) - 1, -1, -1):
        c = a[i]
        if K.is_zero(c):
            continue
        cs = K.format(c)
        neg = cs.startswith("-")
        if neg:
            cs = cs[1:]
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if mono and cs == "1":
            body = mono
        elif mono:
            body = f"{cs}*{mono}"
        else:
            body = cs
        parts.append(("-" if neg else "+", body))
    sign, body = parts[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        out += f"{sign}{body}"
    return out


class ExtensionField(Field):
    """Quotient ``base[t]/(m(t))`` for a monic ``m``; a field when ``m`` is irreducible."""

    has_t = True

    def __init__(self, base, modulus):
        if base.has_t:
            raise FieldError("only one layer may introduce t")
        modulus = _ptrim(base, modulus)
        if len(modulus) < 2:
            raise FieldError("extension polynomial must have degree >= 1")
        if not base.is_one(modulus[-1]):
            raise FieldError("extension polynomial must be monic")
        self.base = base
        self.modulus = modulus
        self.degree = len(modulus) - 1
        self.characteristic = base.characteristic
        self.zero = ()
        self.one = (base.one,)
        self.descriptor = f"{base.descriptor}[t]/({_pformat(base, modulus)})"

    def _reduce(self, a):
        return _pdivmod(self.base, a, self.modulus)[1]

    def add(self, a, b):
        return _padd(self.base, a, b)

    def neg(self, a):
        return _pneg(self.base, a)

    def mul(self, a, b):
        return self._reduce(_pmul(self.base, a, b))

    def inv(self, a):
        K = self.base
        if not a:
            raise ZeroDivisionError("inverse of 0")
        # extended Euclid on (a, m)
        r0, r1 = self.modulus, a
        s0, s1 = (), (K.one,)
        while r1:
            q, r = _pdivmod(K, r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _padd(K, s0, _pneg(K, _pmul(K, q, s1)))
        if len(r0) != 1:
            raise ZeroDivisorError(f"{self.format(a)} is a zero divisor in {self.descriptor}")
        c = K.inv(r0[0])
        return self._reduce(tuple(K.mul(c, x) for x in s0))

    def from_int(self, n):
        return _ptrim(self.base, (self.base.from_int(n),))

    def from_fraction(self, x):
        return _ptrim(self.base, (self.base.from_fraction(x),))

    def gen(self):
        return self._reduce((self.base.zero, self.base.one))

    def embed(self, c):
        return _ptrim(self.base, (c,))

    def format(self, a):
        return _pformat(self.base, a)


class FractionField(Field):
    """Rational functions ``base(t)``, stored as reduced ``(num, den)`` with monic ``den``."""

    has_t = True

    def __init__(self, base):
        if base.has_t:
            raise FieldError("only one layer may introduce t")
        self.base = base
        self.characteristic = base.characteristic
        self.zero = ((), (base.one,))
        self.one = ((base.one,), (base.one,))
        self.descriptor = f"{base.descriptor}(t)"

    def _make(self, num, den):
        K = self.base
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return self.zero
        g = _pgcd(K, num, den)
        if len(g) > 1:
            num = _pdivmod(K, num, g)[0]
            den = _pdivmod(K, den, g)[0]
        den, lead = _pmonic(K, den)
        if not K.is_one(lead):
            c = K.inv(lead)
            num = tuple(K.mul(c, x) for x in num)
        return (num, den)

    def add(self, a, b):
        K = self.base
        if a[1] == b[1]:
            return self._make(_padd(K, a[0], b[0]), a[1])
        return self._make(_padd(K, _pmul(K, a[0], b[1]), _pmul(K, b[0], a[1])),
                          _pmul(K, a[1], b[1]))

    def neg(self, a):
        return (_pneg(self.base, a[0]), a[1])

    def mul(self, a, b):
        K = self.base
        return self._make(_pmul(K, a[0], b[0]), _pmul(K, a[1], b[1]))

    def inv(self, a):
        if not a[0]:
            raise ZeroDivisionError("inverse of 0")
        return self._make(a[1], a[0])

    def from_int(self, n):
        return self._make(_ptrim(self.base, (self.base.from_int(n),)), (self.base.one,))

    def from_fraction(self, x):
        return self._make(_ptrim(self.base, (self.base.from_fraction(x),)), (self.base.one,))

    def gen(self):
        return ((self.base.zero, self.base.one), (self.base.one,))

    def embed(self, c):
        return self._make(_ptrim(self.base, (c,)), (self.base.one,))

    def is_constant(self, a):
        return len(a[0]) <= 1 and len(a[1]) == 1

    def format(self, a):
        num = _pformat(self.base, a[0])
        if len(a[1]) == 1:
            return num
        if len([c for c in a[0] if not self.base.is_zero(c)]) > 1:
            num = f"({num})"
        return f"{num}/({_pformat(self.base, a[1])})"


# ---------- parsing ----------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


class _ExprParser:
    """Recursive descent over + - * / ^ and parentheses."""

    def __init__(self, field, text, constants):
        self.K = field
        self.constants = constants
        self.tokens = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                break
            self.tokens.append(m.group(1) or m.group(2) or m.group(3))
            pos = m.end()
        self.i = 0
        self.text = text

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def error(self, msg):
        raise FieldError(f"cannot parse scalar {self.text!r}: {msg}")

    def parse(self):
        if not self.tokens:
            self.error("empty")
        v = self.expr()
        if self.peek() is not None:
            self.error(f"unexpected {self.peek()!r}")
        return v

    def expr(self):
        K = self.K
        if self.peek() in ("+", "-"):
            sign = self.take()
            v = self.term()
            if sign == "-":
                v = K.neg(v)
        else:
            v = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            w = self.term()
            v = K.add(v, w) if op == "+" else K.sub(v, w)
        return v

    def term(self):
        v = self.power()
        while self.peek() in ("*", "/"):
            op = self.take()
            w = self.power()
            v = self.K.mul(v, w) if op == "*" else self.K.div(v, w)
        return v

    def power(self):
        v = self.atom()
        if self.peek() == "^":
            self.take()
            sign = 1
            if self.peek() == "-":
                self.take()
                sign = -1
            tok = self.take()
            if tok is None or not tok.isdigit():
                self.error("exponent must be an integer")
            v = self.K.pow(v, sign * int(tok))
        return v

    def atom(self):
        tok = self.take()
        if tok is None:
            self.error("unexpected end")
        if tok.isdigit():
            return self.K.from_int(int(tok))
        if tok == "(":
            v = self.expr()
            if self.take() != ")":
                self.error("missing )")
            return v
        if tok == "-":
            return self.K.neg(self.atom())
        if tok in self.constants:
            return self.K.as_value(self.constants[tok])
        if tok == "t":
            return self.K.gen()
        self.error(f"unknown symbol {tok!r}")


class _PolyRing(Field):
    """``base[t]``; only used to read extension polynomials."""

    has_t = True

    def __init__(self, base):
        self.base = base
        self.zero = ()
        self.one = (base.one,)
        self.descriptor = f"{base.descriptor}[t]"

    def add(self, a, b):
        return _padd(self.base, a, b)

    def neg(self, a):
        return _pneg(self.base, a)

    def mul(self, a, b):
        return _pmul(self.base, a, b)

    def inv(self, a):
        if len(a) != 1:
            raise FieldError("division by a non-constant polynomial")
        return (self.base.inv(a[0]),)

    def from_int(self, n):
        return _ptrim(self.base, (self.base.from_int(n),))

    def gen(self):
        return (self.base.zero, self.base.one)

    def format(self, a):
        return _pformat(self.base, a)


def field_from_spec(spec):
    """Build a field from a textual descriptor such as ``"F7"`` or ``"Q(t)"``."""
    s = spec.replace(" ", "")
    if s == "Q":
        return RationalField()
    m = re.fullmatch(r"F(\d+)", s)
    if m:
        return PrimeField(int(m.group(1)))
    if s.endswith("(t)") and len(s) > 3:
        return FractionField(field_from_spec(s[:-3]))
    m = re.fullmatch(r"(.+)\[t\]/\((.+)\)", s)
    if m:
        base = field_from_spec(m.group(1))
        if base.has_t:
            raise FieldError("only one layer may introduce t")
        return ExtensionField(base, _PolyRing(base).parse(m.group(2)))
    raise FieldError(f"malformed field descriptor {spec!r}")


def cyclotomic(d):
    """Integer coefficients (low degree first) of the d-th cyclotomic polynomial."""
    # x^d - 1 = prod_{e | d} Phi_e
    num = [-1] + [0] * (d - 1) + [1]
    for e in range(1, d):
        if d % e == 0:
            den = cyclotomic(e)
            num = _int_exact_div(num, den)
    return num


def _int_exact_div(a, b):
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    while len(a) >= len(b):
        c = a[-1] // b[-1]
        shift = len(a) - len(b)
        q[shift] = c
        for i, y in enumerate(b):
            a[shift + i] -= c * y
        while a and a[-1] == 0:
            a.pop()
    return q


def cyclotomic_field(d, base="Q"):
    """``base[t]/(Phi_d(t))``; ``t`` is then a primitive d-th root of unity."""
    coeffs = cyclotomic(d)
    terms = "+".join(f"({c})*t^{i}" for i, c in enumerate(coeffs) if c)
    return field_from_spec(f"{base}[t]/({terms})") if d > 1 else field_from_spec(base)


# ---------- Scalar ----------

class Scalar:
    """An element of a field; arithmetic across different fields is an error."""

    __slots__ = ("field", "value")

    def __init__(self, field, value):
        self.field = field
        self.value = value

    def _other(self, other):
        if isinstance(other, Scalar):
            if other.field is not self.field:
                raise FieldError("cross-field arithmetic")
            return other.value
        return self.field.coerce(other)

    def __add__(self, other):
        return Scalar(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return Scalar(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return Scalar(self.field, self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        if not isinstance(other, (Scalar, int, Fraction, str)):
            return NotImplemented
        return Scalar(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return Scalar(self.field, self.field.div(self.value, self._other(other)))

    def __rtruediv__(self, other):
        return Scalar(self.field, self.field.div(self._other(other), self.value))

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.value))

    def __pow__(self, n):
        return Scalar(self.field, self.field.pow(self.value, n))

    def inverse(self):
        return Scalar(self.field, self.field.inv(self.value))

    def is_zero(self):
        return self.field.is_zero(self.value)

    def __eq__(self, other):
        try:
            return self.value == self._other(other)
        except (TypeError, FieldError):
            return NotImplemented

    def __hash__(self):
        return hash((id(self.field), self.value))

    def __str__(self):
        return self.field.format(self.value)

    def __repr__(self):
        return f"Scalar({self.field.descriptor}, {self})"


def unity_order(q, bound):
    """Smallest ``1 <= d <= bound`` with ``q**d == 1``, or ``None``."""
    if isinstance(q, Scalar):
        K, v = q.field, q.value
    else:
        raise TypeError("unity_order expects a Scalar")
    if K.is_zero(v):
        raise ValueError("0 has no multiplicative order")
    power = v
    for d in range(1, bound + 1):
        if K.is_one(power):
            return d
        power = K.mul(power, v)
    return None


def is_root_of_unity(q):
    """Exact decision, where the field structure allows it.

    Returns ``(True, order)`` or ``(False, None)``; raises ``ValueError`` when
    undecidable by the built-in arguments.
    """
    K = q.field
    if isinstance(K, PrimeField):
        return True, unity_order(q, K.p - 1)
    if isinstance(K, RationalField):
        d = unity_order(q, 2)
        return (d is not None), d
    if isinstance(K, FractionField):
        if not K.is_constant(q.value):
            return False, None
        c = Scalar(K.base, q.value[0][0])
        return is_root_of_unity(c)
    if isinstance(K, ExtensionField):
        if isinstance(K.base, PrimeField):
            # finite ring: every unit has finite order
            d = unity_order(q, K.base.p ** K.degree)
            return (d is not None), d
        # an n-th root of unity in a degree-k number field has phi(n) <= k, so n <= 2k^2
        bound = max(6, 2 * K.degree * K.degree)
        d = unity_order(q, bound)
        return (d is not None), d
    raise ValueError(f"cannot decide root-of-unity status in {K.descriptor}")
