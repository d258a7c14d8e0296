"""Exact base rings: the integers, Z/m, multivariate integer polynomials and
their fraction fields.

Elements are plain Python objects that support the arithmetic operators
(``int``, :class:`Mod`, :class:`Poly`, :class:`fractions.Fraction`,
:class:`RatFunc`).  A context object describes where an element lives and
supplies the operations that operators cannot express (exact division,
content, parsing, formatting).
"""

from __future__ import annotations

import math
import re
from fractions import Fraction


class NotDivisible(ArithmeticError):
    """Raised by ``exact_div`` when no exact quotient exists."""


class ContextError(ValueError):
    """Raised for operands or operations a context does not support."""


# ---------------------------------------------------------------------------
# Z/m elements


class Mod:
    __slots__ = ("v", "m")

    def __init__(self, v, m):
        self.v = v % m
        self.m = m

    def _coerce(self, other):
        if isinstance(other, Mod):
            if other.m != self.m:
                raise ContextError(f"modulus mismatch: {self.m} vs {other.m}")
            return other.v
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(self.v + o, self.m)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(self.v - o, self.m)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(o - self.v, self.m)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(self.v * o, self.m)

    __rmul__ = __mul__

    def __neg__(self):
        return Mod(-self.v, self.m)

    def __pow__(self, e):
        return Mod(pow(self.v, e, self.m), self.m)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        return (self.v - o) % self.m == 0

    def __hash__(self):
        return hash((self.v, self.m))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"Mod({self.v}, {self.m})"

    def __str__(self):
        return str(self.v)


# ---------------------------------------------------------------------------
# sparse multivariate polynomials over Z


class Poly:
    """Sparse polynomial: ``{exponent tuple: nonzero int}`` over a :class:`PolyRing`."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    @classmethod
    def _clean(cls, ring, terms):
        return cls(ring, {e: c for e, c in terms.items() if c})

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.ring is not self.ring and other.ring.names != self.ring.names:
                raise ContextError("polynomials from different rings")
            return other
        if isinstance(other, int):
            return self.ring.from_int(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        out = dict(self.terms)
        for e, c in o.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return Poly(self.ring, {})
            return Poly(self.ring, {e: c * other for e, c in self.terms.items()})
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Poly._clean(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ContextError("negative power of a polynomial")
        result = self.ring.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.from_int(other)
        if not isinstance(other, Poly):
            return False
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise ContextError("polynomial is not constant")
        return next(iter(self.terms.values()), 0)

    def leading(self):
        e = max(self.terms)
        return e, self.terms[e]

    def sorted_terms(self):
        return sorted(self.terms.items(), reverse=True)

    def __repr__(self):
        return f"Poly({self.ring.format(self)!r})"

    def __str__(self):
        return self.ring.format(self)


def _poly_exact_div(a, b):
    """Quotient q with a = b*q, by repeated lex-leading-term division."""
    if not b.terms:
        raise ZeroDivisionError("division by the zero polynomial")
    eb, cb = b.leading()
    rem = dict(a.terms)
    q = {}
    while rem:
        ea = max(rem)
        ca = rem[ea]
        if ca % cb or any(x < y for x, y in zip(ea, eb)):
            raise NotDivisible(f"{a} is not divisible by {b}")
        et = tuple(x - y for x, y in zip(ea, eb))
        ct = ca // cb
        q[et] = ct
        for e, c in b.terms.items():
            e2 = tuple(x + y for x, y in zip(e, et))
            s = rem.get(e2, 0) - c * ct
            if s:
                rem[e2] = s
            else:
                rem.pop(e2, None)
    return Poly(a.ring, q)


def _poly_int_content(p):
    g = 0
    for c in p.terms.values():
        g = math.gcd(g, c)
    return g


def _poly_monomial_content(p):
    it = iter(p.terms)
    m = list(next(it))
    for e in it:
        m = [min(x, y) for x, y in zip(m, e)]
    return tuple(m)


# ---------------------------------------------------------------------------
# rational functions (fraction field of a PolyRing)


class RatFunc:
    """Quotient of polynomials.

    Reduced by integer content, common monomial factors and exact division
    of numerator by denominator.  Remaining common factors are not removed,
    so equality is decided by cross multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den):
        if not den.terms:
            raise ZeroDivisionError("zero denominator")
        self.num, self.den = _reduce_ratfunc(num, den)

    @property
    def ring(self):
        return self.num.ring

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Poly)):
            n = other if isinstance(other, Poly) else self.ring.from_int(other)
            return RatFunc(n, self.ring.one)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o.den == self.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if not o.num.terms:
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o / self

    def __pow__(self, k):
        if k < 0:
            return RatFunc(self.den ** (-k), self.num ** (-k))
        return RatFunc(self.num**k, self.den**k)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        return self.num * o.den == o.num * self.den

    __hash__ = None

    def __bool__(self):
        return bool(self.num.terms)

    def is_polynomial(self):
        return self.den.is_constant() and self.den.constant_value() in (1, -1)

    def as_polynomial(self):
        if not self.is_polynomial():
            raise NotDivisible(f"{self} is not a polynomial")
        return self.num * self.den.constant_value()

    def __repr__(self):
        return f"RatFunc({self.num}, {self.den})"

    def __str__(self):
        if self.den == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"


def _reduce_ratfunc(num, den):
    if not num.terms:
        return num, num.ring.one
    g = math.gcd(_poly_int_content(num), _poly_int_content(den))
    mono = tuple(min(a, b) for a, b in zip(_poly_monomial_content(num),
                                            _poly_monomial_content(den)))
    if g != 1 or any(mono):
        num = Poly(num.ring, {tuple(x - y for x, y in zip(e, mono)): c // g
                              for e, c in num.terms.items()})
        den = Poly(den.ring, {tuple(x - y for x, y in zip(e, mono)): c // g
                              for e, c in den.terms.items()})
    if not den.is_constant():
        try:
            num = _poly_exact_div(num, den)
            den = den.ring.one
        except NotDivisible:
            pass
    if den.leading()[1] < 0:
        num, den = -num, -den
    return num, den


# ---------------------------------------------------------------------------
# contexts


class Integers:
    kind = "integers"
    is_domain = True
    descriptor = "ZZ"
    zero = 0
    one = 1

    def from_int(self, i):
        return int(i)

    def coerce(self, x):
        if isinstance(x, bool) or not isinstance(x, int):
            raise ContextError(f"not an integer: {x!r}")
        return x

    def contains(self, x):
        return isinstance(x, int) and not isinstance(x, bool)

    def exact_div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("exact_div by zero")
        q, r = divmod(a, b)
        if r:
            raise NotDivisible(f"{a} is not divisible by {b}")
        return q

    def is_unit(self, x):
        return x in (1, -1)

    def content(self, v):
        g = 0
        for x in v:
            g = math.gcd(g, x)
        return g

    def parse(self, s):
        return int(s)

    def format(self, x):
        return str(x)

    def to_json(self, x):
        return x

    def from_json(self, x):
        return int(x)

    def __eq__(self, other):
        return isinstance(other, Integers)

    def __hash__(self):
        return hash("ZZ")

    def __repr__(self):
        return "Integers()"


ZZ = Integers()


class IntegersMod:
    kind = "integers-mod-m"

    def __init__(self, m):
        if m < 2:
            raise ContextError("modulus must be at least 2")
        self.m = m
        self.zero = Mod(0, m)
        self.one = Mod(1, m)

    @property
    def is_domain(self):
        m = self.m
        return m > 1 and all(m % p for p in range(2, math.isqrt(m) + 1))

    @property
    def descriptor(self):
        return f"ZZ/{self.m}"

    def from_int(self, i):
        return Mod(int(i), self.m)

    def coerce(self, x):
        if isinstance(x, Mod):
            if x.m != self.m:
                raise ContextError(f"element of Z/{x.m} given to Z/{self.m}")
            return x
        if isinstance(x, int):
            return Mod(x, self.m)
        raise ContextError(f"not an element of Z/{self.m}: {x!r}")

    def contains(self, x):
        return isinstance(x, Mod) and x.m == self.m

    def exact_div(self, a, b):
        a, b = self.coerce(a), self.coerce(b)
        m = self.m
        g = math.gcd(b.v, m)
        if a.v % g:
            raise NotDivisible(f"{a} is not divisible by {b} in Z/{m}")
        mg = m // g
        if mg == 1:
            return Mod(0, m)
        q = (a.v // g) * pow(b.v // g, -1, mg) % mg
        return Mod(q, m)

    def is_unit(self, x):
        return math.gcd(self.coerce(x).v, self.m) == 1

    def content(self, v):
        g = self.m
        for x in v:
            g = math.gcd(g, self.coerce(x).v)
        return g

    def parse(self, s):
        return Mod(int(s), self.m)

    def format(self, x):
        return str(self.coerce(x).v)

    def to_json(self, x):
        return self.coerce(x).v

    def from_json(self, x):
        return Mod(int(x), self.m)

    def __eq__(self, other):
        return isinstance(other, IntegersMod) and other.m == self.m

    def __hash__(self):
        return hash(("ZZ/", self.m))

    def __repr__(self):
        return f"IntegersMod({self.m})"


_TERM_RE = re.compile(r"\s*([+-])?\s*([^+-]+)")


class PolyRing:
    kind = "polynomials"
    is_domain = True

    def __init__(self, names):
        self.names = tuple(names)
        self.nvars = len(self.names)
        self._zero_exp = (0,) * self.nvars
        self.zero = Poly(self, {})
        self.one = Poly(self, {self._zero_exp: 1})

    @property
    def descriptor(self):
        return "ZZ[" + ",".join(self.names) + "]"

    def gens(self):
        out = []
        for i in range(self.nvars):
            e = [0] * self.nvars
            e[i] = 1
            out.append(Poly(self, {tuple(e): 1}))
        return out

    def gen(self, name):
        return self.gens()[self.names.index(name)]

    def from_int(self, i):
        i = int(i)
        return Poly(self, {self._zero_exp: i} if i else {})

    def coerce(self, x):
        if isinstance(x, Poly):
            if x.ring.names != self.names:
                raise ContextError("polynomial from a different ring")
            return x
        if isinstance(x, int) and not isinstance(x, bool):
            return self.from_int(x)
        raise ContextError(f"not a polynomial: {x!r}")

    def contains(self, x):
        return isinstance(x, Poly) and x.ring.names == self.names

    def exact_div(self, a, b):
        return _poly_exact_div(self.coerce(a), self.coerce(b))

    def is_unit(self, x):
        x = self.coerce(x)
        return x.is_constant() and x.constant_value() in (1, -1)

    def content(self, v):
        raise ContextError("content is only defined over ZZ and ZZ/m")

    def format(self, p):
        p = self.coerce(p)
        if not p.terms:
            return "0"
        parts = []
        for e, c in p.sorted_terms():
            mono = "*".join(n if k == 1 else f"{n}^{k}"
                            for n, k in zip(self.names, e) if k)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def parse(self, s):
        """Parse the output of :meth:`format` (sums of ``c*x^k*y`` terms)."""
        text = s.replace(" ", "")
        if text in ("", "0"):
            return self.zero
        out = {}
        pos = 0
        for m in _TERM_RE.finditer(text):
            if m.start() != pos:
                raise ContextError(f"cannot parse polynomial at position {pos}: {s!r}")
            pos = m.end()
            sign = -1 if m.group(1) == "-" else 1
            coeff = 1
            e = [0] * self.nvars
            for factor in m.group(2).split("*"):
                if factor.isdigit():
                    coeff *= int(factor)
                    continue
                name, _, k = factor.partition("^")
                if name not in self.names:
                    raise ContextError(f"unknown variable {name!r} in {s!r}")
                e[self.names.index(name)] += int(k) if k else 1
            key = tuple(e)
            out[key] = out.get(key, 0) + sign * coeff
        if pos != len(text):
            raise ContextError(f"cannot parse polynomial at position {pos}: {s!r}")
        return Poly._clean(self, out)

    def to_json(self, x):
        return self.format(x)

    def from_json(self, x):
        if isinstance(x, int):
            return self.from_int(x)
        return self.parse(x)

    def __eq__(self, other):
        return isinstance(other, PolyRing) and other.names == self.names

    def __hash__(self):
        return hash(("poly",) + self.names)

    def __repr__(self):
        return f"PolyRing({list(self.names)!r})"


def universal_ring(n):
    """``Z[f0, ..., fn]``, the coefficient ring of the universal n-ic form."""
    return _universal_cache.setdefault(n, PolyRing([f"f{i}" for i in range(n + 1)]))


_universal_cache = {}


class FractionField:
    kind = "fraction-field"
    is_domain = True

    def __init__(self, base):
        if not base.is_domain:
            raise ContextError("fraction field of a non-domain")
        self.base = base
        if isinstance(base, Integers):
            self.zero, self.one = Fraction(0), Fraction(1)
        elif isinstance(base, PolyRing):
            self.zero = RatFunc(base.zero, base.one)
            self.one = RatFunc(base.one, base.one)
        else:
            raise ContextError(f"fraction field of {base!r} is not supported")

    @property
    def descriptor(self):
        return f"Frac({self.base.descriptor})"

    def from_int(self, i):
        return self.coerce(int(i))

    def coerce(self, x):
        if isinstance(self.base, Integers):
            if isinstance(x, (int, Fraction)):
                return Fraction(x)
        else:
            if isinstance(x, RatFunc):
                return x
            if isinstance(x, (int, Poly)):
                return RatFunc(self.base.coerce(x), self.base.one)
        raise ContextError(f"not an element of {self.descriptor}: {x!r}")

    def contains(self, x):
        if isinstance(self.base, Integers):
            return isinstance(x, Fraction)
        return isinstance(x, RatFunc)

    def div(self, a, b):
        return self.coerce(a) / self.coerce(b)

    exact_div = div

    def is_unit(self, x):
        return bool(x)

    def content(self, v):
        raise ContextError("content is not defined over a field")

    def to_base(self, x):
        """Return x as an element of the base ring or raise NotDivisible."""
        x = self.coerce(x)
        if isinstance(self.base, Integers):
            if x.denominator != 1:
                raise NotDivisible(f"{x} is not integral")
            return x.numerator
        return x.as_polynomial()

    def format(self, x):
        return str(self.coerce(x))

    def __eq__(self, other):
        return isinstance(other, FractionField) and other.base == self.base

    def __hash__(self):
        return hash(("frac", self.base))

    def __repr__(self):
        return f"FractionField({self.base!r})"


def parse_context(spec):
    """Context from a descriptor such as ``ZZ``, ``ZZ/12`` or ``ZZ[f0,f1]``."""
    s = spec.strip()
    if s in ("ZZ", "Z", "int", "integers"):
        return ZZ
    m = re.fullmatch(r"(?:ZZ|Z|mod)[/:](\d+)", s)
    if m:
        return IntegersMod(int(m.group(1)))
    m = re.fullmatch(r"ZZ\[(.*)\]", s)
    if m:
        return PolyRing([v.strip() for v in m.group(1).split(",") if v.strip()])
    m = re.fullmatch(r"Frac\((.*)\)", s)
    if m:
        return FractionField(parse_context(m.group(1)))
    raise ContextError(f"unknown context descriptor {spec!r}")


def ring_ops(ctx):
    """The arithmetic contract of ``ctx`` as a dict of callables."""
    return {
        "add": lambda a, b: a + b,
        "sub": lambda a, b: a - b,
        "mul": lambda a, b: a * b,
        "neg": lambda a: -a,
        "zero": ctx.zero,
        "one": ctx.one,
        "eq": lambda a, b: a == b,
        "exact_div": ctx.exact_div,
        "pow": lambda a, k: a**k,
    }


def content(v, ctx=ZZ):
    """``(gcd, is_unit)`` of a coefficient vector over ZZ or ZZ/m."""
    if not isinstance(ctx, (Integers, IntegersMod)):
        raise ContextError(f"content is not supported over {ctx.descriptor}")
    g = ctx.content(v)
    return g, g == 1
