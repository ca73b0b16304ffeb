"""Exact multivariate polynomial arithmetic over Q or GF(p).

A ring fixes an ordered tuple of variable names and a coefficient field.
Monomials are dense exponent tuples indexed by that variable list; polynomials
are term maps with nonzero coefficients only.  Everything is immutable after
construction and safe to share between workers.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Iterator

DEFAULT_PRIME = 32003


class RingError(ValueError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class Field:
    """The rationals (p is None) or a prime field GF(p).

    Rational elements are `fractions.Fraction`; GF(p) elements are ints in
    [0, p).
    """

    __slots__ = ("p",)

    def __init__(self, p: int | None = None):
        if p is not None and not _is_prime(p):
            raise RingError(f"characteristic {p} is not prime")
        self.p = p

    @staticmethod
    def rationals() -> "Field":
        return Field(None)

    @staticmethod
    def gf(p: int = DEFAULT_PRIME) -> "Field":
        return Field(p)

    @staticmethod
    def from_spec(spec: str) -> "Field":
        spec = spec.strip()
        if spec == "rational":
            return Field(None)
        if spec.startswith("gf:"):
            return Field(int(spec[3:]))
        raise RingError(f"unknown field spec {spec!r} (want 'rational' or 'gf:<p>')")

    @property
    def spec(self) -> str:
        return "rational" if self.p is None else f"gf:{self.p}"

    def of(self, value) -> Fraction | int:
        """Coerce an int, Fraction, or 'a/b' string into a field element."""
        if isinstance(value, str):
            value = Fraction(value)
        if self.p is None:
            return Fraction(value)
        if isinstance(value, Fraction):
            return value.numerator % self.p * pow(value.denominator, -1, self.p) % self.p
        return int(value) % self.p

    def add(self, a, b):
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p is None else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p is None else (a * b) % self.p

    def neg(self, a):
        return -a if self.p is None else (-a) % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero field element")
        return 1 / Fraction(a) if self.p is None else pow(a, -1, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    @property
    def zero(self):
        return Fraction(0) if self.p is None else 0

    @property
    def one(self):
        return Fraction(1) if self.p is None else 1

    def format(self, a) -> str:
        """Canonical text: rationals as 'a' or 'a/b', GF(p) symmetric in (-p/2, p/2]."""
        if self.p is None:
            return str(a)
        return str(a if a <= self.p // 2 else a - self.p)

    def __eq__(self, other):
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return f"Field({self.spec})"


_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")


class PolyRing:
    """K[x_1, ..., x_m] for a fixed ordered variable list."""

    __slots__ = ("variables", "field", "index")

    def __init__(self, variables: Iterable[str], field: Field):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise RingError("duplicate variable names")
        for v in variables:
            if not _NAME_RE.fullmatch(v):
                raise RingError(f"invalid variable name {v!r}")
        self.variables = variables
        self.field = field
        self.index = {v: i for i, v in enumerate(variables)}

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.variables == other.variables
            and self.field == other.field
        )

    def __hash__(self):
        return hash((self.variables, self.field))

    def __repr__(self):
        return f"PolyRing({','.join(self.variables)}; {self.field.spec})"

    # -- monomial helpers (monomials are plain exponent tuples) --

    def mono_one(self) -> tuple:
        return (0,) * self.nvars

    def mono_var(self, name: str) -> tuple:
        i = self.index[name]
        return tuple(1 if j == i else 0 for j in range(self.nvars))

    def mono_mul(self, a: tuple, b: tuple) -> tuple:
        return tuple(x + y for x, y in zip(a, b))

    def mono_divides(self, a: tuple, b: tuple) -> bool:
        return all(x <= y for x, y in zip(a, b))

    def mono_div(self, a: tuple, b: tuple) -> tuple:
        q = tuple(x - y for x, y in zip(a, b))
        if any(e < 0 for e in q):
            raise RingError("monomial division with negative exponent")
        return q

    def mono_lcm(self, a: tuple, b: tuple) -> tuple:
        return tuple(max(x, y) for x, y in zip(a, b))

    def mono_degree(self, a: tuple) -> int:
        return sum(a)

    def format_monomial(self, mono: tuple) -> str:
        parts = []
        for v, e in zip(self.variables, mono):
            if e == 1:
                parts.append(v)
            elif e > 1:
                parts.append(f"{v}^{e}")
        return "*".join(parts) if parts else "1"

    # -- polynomial constructors --

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c) -> "Polynomial":
        c = self.field.of(c)
        return Polynomial(self, {} if c == 0 else {self.mono_one(): c})

    def variable(self, name: str) -> "Polynomial":
        if name not in self.index:
            raise RingError(f"{name!r} is not a variable of {self!r}")
        return Polynomial(self, {self.mono_var(name): self.field.one})

    def monomial(self, mono: tuple, coeff=1) -> "Polynomial":
        c = self.field.of(coeff)
        if len(mono) != self.nvars or any(e < 0 for e in mono):
            raise RingError("bad exponent tuple")
        return Polynomial(self, {} if c == 0 else {tuple(mono): c})

    def from_terms(self, terms: dict) -> "Polynomial":
        out = {}
        for mono, c in terms.items():
            c = self.field.of(c)
            if c != 0:
                out[tuple(mono)] = c
        return Polynomial(self, out)

    def extend(self, *names: str) -> "PolyRing":
        return PolyRing(self.variables + names, self.field)

    def embed(self, f: "Polynomial", target: "PolyRing") -> "Polynomial":
        """Map f into a ring whose variables include all of f's (matched by name)."""
        pos = [target.index[v] for v in self.variables]
        terms = {}
        for mono, c in f.terms.items():
            new = [0] * target.nvars
            for p, e in zip(pos, mono):
                new[p] = e
            terms[tuple(new)] = c
        return Polynomial(target, terms)

    def parse(self, text: str) -> "Polynomial":
        return parse_polynomial(text, self)


class Polynomial:
    """Immutable multivariate polynomial with exact coefficients."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def _check(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise RingError("mixed ambient rings")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        fld = self.ring.field
        out = dict(self.terms)
        for mono, c in other.terms.items():
            s = fld.add(out.get(mono, fld.zero), c)
            if s == 0:
                out.pop(mono, None)
            else:
                out[mono] = s
        return Polynomial(self.ring, out)

    def __neg__(self) -> "Polynomial":
        fld = self.ring.field
        return Polynomial(self.ring, {m: fld.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        fld = self.ring.field
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = fld.add(out.get(m, fld.zero), fld.mul(c1, c2))
                if s == 0:
                    out.pop(m, None)
                else:
                    out[m] = s
        return Polynomial(self.ring, out)

    def __rmul__(self, other) -> "Polynomial":
        return self.scale(other)

    def scale(self, c) -> "Polynomial":
        fld = self.ring.field
        c = fld.of(c)
        if c == 0:
            return self.ring.zero()
        return Polynomial(self.ring, {m: fld.mul(v, c) for m, v in self.terms.items()})

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise RingError("negative power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def total_degree(self) -> int:
        if not self.terms:
            raise RingError("degree of zero polynomial")
        return max(sum(m) for m in self.terms)

    def constant_term(self):
        return self.terms.get(self.ring.mono_one(), self.ring.field.zero)

    def is_constant(self) -> bool:
        return not self.terms or self.terms.keys() == {self.ring.mono_one()}

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def support_variables(self) -> set:
        out = set()
        for m in self.terms:
            for v, e in zip(self.ring.variables, m):
                if e:
                    out.add(v)
        return out

    def substitute(self, subs: dict) -> "Polynomial":
        """Substitute variables by polynomials (or field constants/ints)."""
        ring = self.ring
        table = {}
        for name, value in subs.items():
            i = ring.index[name]
            if not isinstance(value, Polynomial):
                value = ring.const(value)
            elif value.ring != ring:
                raise RingError("substitution value in a different ring")
            table[i] = value
        out = ring.zero()
        for mono, c in self.terms.items():
            piece = ring.monomial(
                tuple(0 if i in table else e for i, e in enumerate(mono)), c
            )
            for i, value in table.items():
                if mono[i]:
                    piece = piece * value ** mono[i]
            out = out + piece
        return out

    def kill_variables(self, names: Iterable[str]) -> "Polynomial":
        """Set the given variables to zero (drops every term they divide)."""
        idx = [self.ring.index[v] for v in names]
        kept = {m: c for m, c in self.terms.items() if all(m[i] == 0 for i in idx)}
        return Polynomial(self.ring, kept)

    def leading(self, order: "TermOrder") -> tuple:
        """(monomial, coefficient) of the order-maximal term; error on zero."""
        if not self.terms:
            raise RingError("leading term of the zero polynomial")
        key = order.key
        mono = max(self.terms, key=key)
        return mono, self.terms[mono]

    def sorted_terms(self) -> list:
        """Terms sorted descending in grevlex; the canonical display order."""
        return sorted(self.terms.items(), key=lambda mc: _grevlex_key(mc[0]), reverse=True)

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"<poly {format_polynomial(self)}>"


def _grevlex_key(mono: tuple):
    return (sum(mono), tuple(-e for e in reversed(mono)))


def _lex_key(mono: tuple):
    return mono


class TermOrder:
    """lex, grevlex, or weight-then-tiebreak; total, multiplicative, 1 minimal."""

    __slots__ = ("kind", "weights", "tiebreak")

    def __init__(self, kind: str, weights: tuple | None = None, tiebreak: str = "grevlex"):
        if kind not in ("lex", "grevlex", "weight"):
            raise RingError(f"unknown order kind {kind!r}")
        if kind == "weight":
            if weights is None:
                raise RingError("weight order needs a weight vector")
            weights = tuple(int(w) for w in weights)
            if tiebreak not in ("lex", "grevlex"):
                raise RingError(f"unknown tiebreak {tiebreak!r}")
        self.kind = kind
        self.weights = weights
        self.tiebreak = tiebreak if kind == "weight" else None

    def key(self, mono: tuple):
        if self.kind == "lex":
            return _lex_key(mono)
        if self.kind == "grevlex":
            return _grevlex_key(mono)
        w = sum(wi * e for wi, e in zip(self.weights, mono))
        tail = _lex_key(mono) if self.tiebreak == "lex" else _grevlex_key(mono)
        return (w, tail)

    def greater(self, a: tuple, b: tuple) -> bool:
        return self.key(a) > self.key(b)

    @property
    def spec(self) -> str:
        if self.kind != "weight":
            return self.kind
        return "weight:" + ",".join(str(w) for w in self.weights) + ";" + self.tiebreak

    @staticmethod
    def from_spec(spec: str, nvars: int) -> "TermOrder":
        spec = spec.strip()
        if spec == "lex":
            return TermOrder("lex")
        if spec == "grevlex":
            return TermOrder("grevlex")
        if spec.startswith("weight:"):
            body = spec[len("weight:"):]
            tiebreak = "grevlex"
            if ";" in body:
                body, tiebreak = body.split(";", 1)
            weights = tuple(int(x) for x in body.split(","))
            if len(weights) != nvars:
                raise RingError(
                    f"weight vector has {len(weights)} entries, ring has {nvars} variables"
                )
            return TermOrder("weight", weights, tiebreak.strip())
        raise RingError(f"unknown order spec {spec!r}")

    def __repr__(self):
        return f"TermOrder({self.spec})"


def weight_homogenize(f: Polynomial, weights, t_ring: PolyRing | None = None) -> Polynomial:
    """Homogenize f for the weight vector by padding low-weight terms with t.

    The result lives in f's ring extended by a final variable 't' (deg t = 1);
    terms of maximal weight carry t^0 and setting t=1 recovers f.
    """
    ring = f.ring
    weights = tuple(int(w) for w in weights)
    if len(weights) != ring.nvars:
        raise RingError("weight vector length mismatch")
    if t_ring is None:
        t_ring = ring.extend("t")
    if f.is_zero():
        return t_ring.zero()
    wdeg = {m: sum(w * e for w, e in zip(weights, m)) for m in f.terms}
    top = max(wdeg.values())
    terms = {m + (top - wdeg[m],): c for m, c in f.terms.items()}
    return Polynomial(t_ring, terms)


# -- plain-text grammar ------------------------------------------------------
#
#   poly   := ['-'] term (('+'|'-') term)*
#   term   := factor ('*' factor)*
#   factor := coeff | name ['^' int]
#   coeff  := int ['/' int]
#
# Canonical output: terms descending in grevlex, '*' products, '^' powers,
# unit coefficients elided, GF(p) coefficients in symmetric form.

_TOKEN_RE = re.compile(r"\s*(\d+|[A-Za-z_][A-Za-z_0-9]*|[-+*/^()])")


def _tokenize(text: str) -> list[str]:
    tokens, pos = [], 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise RingError(f"bad character in polynomial text at {text[pos:pos + 8]!r}")
        tokens.append(m.group(1))
        pos = m.end()
    return tokens


def parse_polynomial(text: str, ring: PolyRing) -> Polynomial:
    tokens = _tokenize(text)
    if not tokens:
        raise RingError("empty polynomial text")
    fld = ring.field
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take():
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        return tok

    def parse_term():
        coeff = fld.one
        mono = [0] * ring.nvars
        consumed = False
        while True:
            tok = peek()
            if tok is None or tok in "+-":
                break
            if tok == "*":
                take()
                continue
            take()
            consumed = True
            if tok.isdigit():
                num = int(tok)
                if peek() == "/":
                    take()
                    den = take()
                    if not den.isdigit():
                        raise RingError("bad rational coefficient")
                    coeff = fld.mul(coeff, fld.of(Fraction(num, int(den))))
                else:
                    coeff = fld.mul(coeff, fld.of(num))
            elif _NAME_RE.fullmatch(tok):
                if tok not in ring.index:
                    raise RingError(f"unknown variable {tok!r}")
                e = 1
                if peek() == "^":
                    take()
                    exp = take()
                    if not exp.isdigit():
                        raise RingError("bad exponent")
                    e = int(exp)
                mono[ring.index[tok]] += e
            else:
                raise RingError(f"unexpected token {tok!r}")
        return tuple(mono), coeff

    total: dict = {}
    sign = 1
    if peek() in ("+", "-"):
        sign = -1 if take() == "-" else 1
    while True:
        mono, coeff = parse_term()
        if sign < 0:
            coeff = fld.neg(coeff)
        s = fld.add(total.get(mono, fld.zero), coeff)
        if s == 0:
            total.pop(mono, None)
        else:
            total[mono] = s
        tok = peek()
        if tok is None:
            break
        sign = -1 if take() == "-" else 1
    return Polynomial(ring, total)


def format_polynomial(f: Polynomial) -> str:
    if f.is_zero():
        return "0"
    ring, fld = f.ring, f.ring.field
    pieces = []
    for mono, coeff in f.sorted_terms():
        ctext = fld.format(coeff)
        negative = ctext.startswith("-")
        if negative:
            ctext = ctext[1:]
        mtext = ring.format_monomial(mono)
        if mtext == "1":
            body = ctext
        elif ctext == "1":
            body = mtext
        else:
            body = f"{ctext}*{mtext}"
        if not pieces:
            pieces.append(("-" if negative else "") + body)
        else:
            pieces.append(("- " if negative else "+ ") + body)
    return " ".join(pieces)
