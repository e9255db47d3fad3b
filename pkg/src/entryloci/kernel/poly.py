"""Sparse exact multivariate polynomials over Q or a prime field.

A :class:`RingContext` fixes the variable names, coefficient field and active
monomial order.  :class:`Polynomial` values are immutable; their term list is
kept sorted in descending order so the leading term is O(1).
"""

from __future__ import annotations

import re

from .errors import CoefficientError, ParseError, RingMismatchError
from .fields import QQ, PrimeField, Rationals
from .orders import GREVLEX

_NAME_RE = re.compile(r"[a-zA-Z][a-zA-Z0-9_]*")
_TOKEN_RE = re.compile(r"\s*(?:(?P<name>[a-zA-Z][a-zA-Z0-9_]*)|(?P<int>\d+)|(?P<op>[-+*/^]))")


class RingContext:
    """An ordered polynomial ring k[x_0, ..., x_n] with an active monomial order."""

    __slots__ = ("names", "field", "order", "nvars", "_index", "_zero_mono")

    def __init__(self, names, field=QQ, order=GREVLEX):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("variable names must be unique")
        for nm in names:
            if not _NAME_RE.fullmatch(nm):
                raise ValueError(f"bad variable name {nm!r}")
        self.names = names
        self.field = field
        self.order = order
        self.nvars = len(names)
        self._index = {nm: i for i, nm in enumerate(names)}
        self._zero_mono = (0,) * len(names)

    def __eq__(self, other):
        return (
            isinstance(other, RingContext)
            and self.names == other.names
            and self.field == other.field
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.names, self.field, self.order))

    def __repr__(self):
        return f"RingContext({','.join(self.names)}; {self.field}; {self.order})"

    def with_order(self, order) -> "RingContext":
        return RingContext(self.names, self.field, order)

    def with_field(self, field) -> "RingContext":
        return RingContext(self.names, field, self.order)

    def subring(self, start: int) -> "RingContext":
        """Ring in the variables from position ``start`` on (grevlex order)."""
        return RingContext(self.names[start:], self.field, GREVLEX)

    def extend(self, extra_names, front: bool = False) -> "RingContext":
        names = tuple(extra_names) + self.names if front else self.names + tuple(extra_names)
        return RingContext(names, self.field, self.order)

    def var_index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise CoefficientError(f"unknown variable {name!r}") from None

    # -- constructors ------------------------------------------------------

    def zero(self) -> "Polynomial":
        return Polynomial(self, ())

    def one(self) -> "Polynomial":
        return self.constant(self.field.one)

    def constant(self, c) -> "Polynomial":
        c = self.field.coerce(c)
        if c == self.field.zero:
            return self.zero()
        return Polynomial(self, ((self._zero_mono, c),))

    def variable(self, i) -> "Polynomial":
        if isinstance(i, str):
            i = self.var_index(i)
        mono = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Polynomial(self, ((mono, self.field.one),))

    def gens(self):
        return [self.variable(i) for i in range(self.nvars)]

    def monomial(self, exps, coeff=None) -> "Polynomial":
        exps = tuple(exps)
        if len(exps) != self.nvars or any(e < 0 for e in exps):
            raise ValueError("bad exponent vector")
        c = self.field.one if coeff is None else self.field.coerce(coeff)
        if c == self.field.zero:
            return self.zero()
        return Polynomial(self, ((exps, c),))

    def from_dict(self, data) -> "Polynomial":
        field = self.field
        cleaned = {}
        for mono, c in data.items():
            c = field.coerce(c)
            if c != field.zero:
                cleaned[tuple(mono)] = c
        key = self.order.key
        terms = tuple(sorted(cleaned.items(), key=lambda t: key(t[0]), reverse=True))
        return Polynomial(self, terms)

    def from_string(self, text: str) -> "Polynomial":
        return parse_polynomial(text, self)


class Polynomial:
    """Immutable sparse polynomial: sorted ((exponents, coefficient), ...)."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: RingContext, terms):
        self.ring = ring
        self.terms = terms

    # -- inspection --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def leading_term(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return self.terms[0]

    def leading_monomial(self):
        return self.leading_term()[0]

    def leading_coeff(self):
        return self.leading_term()[1]

    def constant_value(self):
        """Coefficient of the constant monomial (zero if absent)."""
        zero_mono = self.ring._zero_mono
        for mono, c in self.terms:
            if mono == zero_mono:
                return c
        return self.ring.field.zero

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m, _ in self.terms)

    def degree_in(self, i: int) -> int:
        if not self.terms:
            return -1
        return max(m[i] for m, _ in self.terms)

    def variables_used(self):
        used = set()
        for m, _ in self.terms:
            for i, e in enumerate(m):
                if e:
                    used.add(i)
        return sorted(used)

    def is_homogeneous(self) -> bool:
        if not self.terms:
            return True
        d = sum(self.terms[0][0])
        return all(sum(m) == d for m, _ in self.terms)

    def homogeneous_components(self):
        """Split into homogeneous parts, highest degree first."""
        buckets = {}
        for m, c in self.terms:
            buckets.setdefault(sum(m), {})[m] = c
        return [self.ring.from_dict(buckets[d]) for d in sorted(buckets, reverse=True)]

    def num_terms(self) -> int:
        return len(self.terms)

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise RingMismatchError(f"rings differ: {self.ring} vs {other.ring}")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = self.ring.constant(other)
        self._check(other)
        field = self.ring.field
        acc = dict(self.terms)
        for m, c in other.terms:
            s = field.add(acc.get(m, field.zero), c)
            if s == field.zero:
                acc.pop(m, None)
            else:
                acc[m] = s
        return self.ring.from_dict(acc)

    __radd__ = __add__

    def __neg__(self):
        neg = self.ring.field.neg
        return Polynomial(self.ring, tuple((m, neg(c)) for m, c in self.terms))

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = self.ring.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        field = self.ring.field
        mul = field.mul
        add = field.add
        zero = field.zero
        acc = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = tuple(a + b for a, b in zip(m1, m2))
                prod = mul(c1, c2)
                s = add(acc.get(m, zero), prod)
                if s == zero:
                    acc.pop(m, None)
                else:
                    acc[m] = s
        return self.ring.from_dict(acc)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        field = self.ring.field
        c = field.coerce(c)
        if c == field.zero:
            return self.ring.zero()
        mul = field.mul
        return Polynomial(self.ring, tuple((m, mul(coef, c)) for m, coef in self.terms))

    def monic(self):
        if not self.terms:
            return self
        lc = self.leading_coeff()
        if lc == self.ring.field.one:
            return self
        return self.scale(self.ring.field.inv(lc))

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, self.terms))

    def proportional_to(self, other: "Polynomial") -> bool:
        """True if self = c * other for a nonzero constant c."""
        self._check(other)
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        if len(self.terms) != len(other.terms):
            return False
        field = self.ring.field
        ratio = field.div(self.leading_coeff(), other.leading_coeff())
        for (m1, c1), (m2, c2) in zip(self.terms, other.terms):
            if m1 != m2 or c1 != field.mul(ratio, c2):
                return False
        return True

    # -- substitution / evaluation -----------------------------------------

    def evaluate(self, point):
        """Evaluate at a tuple of field elements."""
        field = self.ring.field
        point = [field.coerce(v) for v in point]
        total = field.zero
        for m, c in self.terms:
            v = c
            for i, e in enumerate(m):
                if e:
                    v = field.mul(v, pow_field(field, point[i], e))
            total = field.add(total, v)
        return total

    def substitute(self, images, target: RingContext | None = None) -> "Polynomial":
        """Map variable i to ``images[i]`` (a Polynomial of the target ring)."""
        target = target if target is not None else images[0].ring
        if len(images) != self.ring.nvars:
            raise ValueError("need one image per variable")
        field = target.field
        result = target.zero()
        cache = [dict() for _ in images]
        for m, c in self.terms:
            part = target.constant(self.ring_coeff_to(field, c))
            for i, e in enumerate(m):
                if not e:
                    continue
                powed = cache[i].get(e)
                if powed is None:
                    powed = images[i] ** e
                    cache[i][e] = powed
                part = part * powed
            result = result + part
        return result

    def ring_coeff_to(self, field, c):
        """Move a coefficient between identical fields (no cross-field maps here)."""
        if field == self.ring.field:
            return c
        raise RingMismatchError("cannot move coefficients between different fields")

    def reduce_mod(self, target: RingContext) -> "Polynomial":
        """Image of a Q-polynomial in an F_p ring with the same variables."""
        if self.ring.names != target.names:
            raise RingMismatchError("variable mismatch in modular reduction")
        field = target.field
        out = {}
        for m, c in self.terms:
            if isinstance(self.ring.field, Rationals) and isinstance(field, PrimeField):
                v = field.from_rational(c.numerator, c.denominator)
            else:
                v = field.coerce(c)
            if v != field.zero:
                out[m] = v
        return target.from_dict(out)

    def derivative(self, i: int) -> "Polynomial":
        field = self.ring.field
        out = {}
        for m, c in self.terms:
            e = m[i]
            if not e:
                continue
            new = list(m)
            new[i] = e - 1
            v = field.mul(c, field.coerce(e))
            if v != field.zero:
                out[tuple(new)] = v
        return self.ring.from_dict(out)

    # -- pretty printing ----------------------------------------------------

    def __repr__(self):
        return self.to_string()

    def to_string(self) -> str:
        if not self.terms:
            return "0"
        names = self.ring.names
        parts = []
        for m, c in self.terms:
            factors = []
            for i, e in enumerate(m):
                if e == 1:
                    factors.append(names[i])
                elif e > 1:
                    factors.append(f"{names[i]}^{e}")
            cstr = str(c)
            if factors and cstr == "1":
                body = "*".join(factors)
            elif factors and cstr == "-1":
                body = "-" + "*".join(factors)
            elif factors:
                body = cstr + "*" + "*".join(factors)
            else:
                body = cstr
            parts.append(body)
        out = parts[0]
        for body in parts[1:]:
            out += " - " + body[1:] if body.startswith("-") else " + " + body
        return out


def pow_field(field, base, e: int):
    if isinstance(field, PrimeField):
        return pow(base, e, field.p)
    return base**e


# -- parsing ----------------------------------------------------------------


def parse_polynomial(text: str, ring: RingContext) -> Polynomial:
    """Parse ``text`` against the grammar

        poly   := ['+'|'-'] term (('+'|'-') term)*
        term   := coeff ('*' varpow)* | varpow ('*' varpow)*
        varpow := name ('^' uint)?
        coeff  := int | int '/' uint

    Rational literals are rejected in prime-field rings.
    """
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ParseError(f"unexpected character {text[pos]!r}", pos)
            break
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    return _Parser(tokens, ring, len(text)).parse()


class _Parser:
    def __init__(self, tokens, ring, end):
        self.tokens = tokens
        self.ring = ring
        self.end = end
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, self.end)

    def next(self):
        tok = self.peek()
        self.i += 1
        return tok

    def parse(self) -> Polynomial:
        result = self.ring.zero()
        sign = 1
        kind, val, pos = self.peek()
        if kind == "op" and val in "+-":
            self.next()
            sign = -1 if val == "-" else 1
        elif kind is None:
            raise ParseError("empty polynomial", pos)
        while True:
            term = self.parse_term(pos)
            result = result + (term if sign == 1 else -term)
            kind, val, pos = self.peek()
            if kind is None:
                return result
            if kind != "op" or val not in "+-":
                raise ParseError(f"expected '+' or '-', found {val!r}", pos)
            self.next()
            sign = -1 if val == "-" else 1

    def parse_term(self, start_pos) -> Polynomial:
        kind, val, pos = self.peek()
        if kind == "int":
            factor = self.parse_coeff()
        elif kind == "name":
            factor = self.parse_varpow()
        else:
            raise ParseError("expected a coefficient or a variable", pos)
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val == "*":
                self.next()
                factor = factor * self.parse_varpow()
            else:
                return factor

    def parse_coeff(self) -> Polynomial:
        kind, val, pos = self.next()
        num = int(val)
        kind2, val2, pos2 = self.peek()
        if kind2 == "op" and val2 == "/":
            self.next()
            kind3, val3, pos3 = self.next()
            if kind3 != "int":
                raise ParseError("expected an integer denominator", pos3)
            den = int(val3)
            if den == 0:
                raise ParseError("zero denominator", pos3)
            if isinstance(self.ring.field, PrimeField):
                raise ParseError("rational literal not allowed in prime-field ring", pos)
            return self.ring.constant(self.ring.field.from_rational(num, den))
        return self.ring.constant(num)

    def parse_varpow(self) -> Polynomial:
        kind, val, pos = self.next()
        if kind != "name":
            raise ParseError("expected a variable name", pos)
        try:
            idx = self.ring.var_index(val)
        except CoefficientError:
            raise ParseError(f"unknown variable {val!r}", pos) from None
        kind2, val2, _ = self.peek()
        exp = 1
        if kind2 == "op" and val2 == "^":
            self.next()
            kind3, val3, pos3 = self.next()
            if kind3 != "int":
                raise ParseError("expected an integer exponent", pos3)
            exp = int(val3)
        mono = tuple(exp if j == idx else 0 for j in range(self.ring.nvars))
        return self.ring.monomial(mono)
