"""Exact multivariate polynomial arithmetic over the rationals.

Sparse term-map representation: a polynomial is a map from exponent tuples to
nonzero Fractions.  Everything here is immutable after construction and every
operation is a pure function, so values are safe to share across threads.

Grammar accepted by parse_polynomial (whitespace ignored)::

    expr     := ['+'|'-'] term (('+'|'-') term)*
    term     := factor ('*' factor | parenfactor)*
    factor   := base ('^' uint)?
    base     := rational | ident | '(' expr ')'
    rational := uint ('/' uint)?

Multiplication needs an explicit '*' except directly before a parenthesized
factor; bare juxtaposition of names like ``xy`` lexes as the single identifier
``xy`` (variable names are declared up front, so this is unambiguous).
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .config import NotDivisibleError, ParseError

# The coefficient type.  fractions.Fraction already maintains the invariants
# required here: always reduced, denominator > 0, arbitrary precision.
Rational = Fraction

Monomial = tuple  # exponent tuple, length == ring.n
Scalar = Union[int, Fraction]

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class Ring:
    """An ordered tuple of distinct variable names."""

    __slots__ = ("names", "n", "_index")

    def __init__(self, names: Sequence[str]):
        names = tuple(names)
        if len(names) < 1:
            raise ValueError("a ring needs at least one variable")
        seen = set()
        for name in names:
            if not _NAME_RE.match(name):
                raise ValueError(f"invalid variable name: {name!r}")
            if name in seen:
                raise ValueError(f"duplicate variable name: {name!r}")
            seen.add(name)
        self.names = names
        self.n = len(names)
        self._index = {name: i for i, name in enumerate(names)}

    def __eq__(self, other):
        return isinstance(other, Ring) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"Ring({', '.join(self.names)})"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r} in {self!r}") from None

    # -- constructors -------------------------------------------------------

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c: Scalar) -> "Polynomial":
        c = Fraction(c)
        if c == 0:
            return Polynomial(self, {})
        return Polynomial(self, {(0,) * self.n: c})

    def variable(self, name_or_index) -> "Polynomial":
        i = name_or_index if isinstance(name_or_index, int) else self.index(name_or_index)
        if not 0 <= i < self.n:
            raise IndexError(f"variable index {i} out of range for {self!r}")
        exps = [0] * self.n
        exps[i] = 1
        return Polynomial(self, {tuple(exps): Fraction(1)})

    def variables(self) -> tuple:
        return tuple(self.variable(i) for i in range(self.n))

    def monomial(self, exponents: Sequence[int], coeff: Scalar = 1) -> "Polynomial":
        exponents = tuple(int(e) for e in exponents)
        if len(exponents) != self.n or any(e < 0 for e in exponents):
            raise ValueError(f"bad exponent vector {exponents} for {self!r}")
        c = Fraction(coeff)
        if c == 0:
            return Polynomial(self, {})
        return Polynomial(self, {exponents: c})

    def point(self, coords: Sequence) -> "Point":
        return Point(self, coords)

    def extend(self, extra_names: Sequence[str], prepend=False) -> "Ring":
        """New ring with extra variables appended (or prepended)."""
        if prepend:
            return Ring(tuple(extra_names) + self.names)
        return Ring(self.names + tuple(extra_names))

    def fresh_names(self, stems: Sequence[str]) -> list:
        """Variable names based on stems, renamed until they avoid clashes."""
        taken = set(self.names)
        out = []
        for stem in stems:
            name = stem
            while name in taken:
                name = name + "_"
            taken.add(name)
            out.append(name)
        return out


class Point:
    """A rational point of the ring's affine space."""

    __slots__ = ("ring", "coordinates")

    def __init__(self, ring: Ring, coords: Sequence):
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) != ring.n:
            raise ValueError(
                f"point has {len(coords)} coordinates, ring has {ring.n} variables"
            )
        self.ring = ring
        self.coordinates = coords

    def __eq__(self, other):
        return (
            isinstance(other, Point)
            and self.ring == other.ring
            and self.coordinates == other.coordinates
        )

    def __hash__(self):
        return hash((self.ring, self.coordinates))

    def __repr__(self):
        return "(" + ", ".join(str(c) for c in self.coordinates) + ")"


# ---------------------------------------------------------------------------
# Monomial orders
# ---------------------------------------------------------------------------


class MonomialOrder:
    """A monomial order, exposed through ``heapkey``.

    heapkey(m) is a tuple that compares *inversely* to the order: the largest
    monomial has the smallest heapkey.  This lets both heapq (min-heap) and
    ``min`` pick leading monomials directly.
    """

    kind = "abstract"

    def heapkey(self, m: Monomial):
        raise NotImplementedError

    def greater(self, a: Monomial, b: Monomial) -> bool:
        return self.heapkey(a) < self.heapkey(b)

    def sorted_descending(self, monomials: Iterable[Monomial]) -> list:
        return sorted(monomials, key=self.heapkey)

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self.cache_key() == other.cache_key()

    def __hash__(self):
        return hash(self.cache_key())

    def cache_key(self):
        return (self.kind,)

    def __repr__(self):
        return self.kind


class DegRevLex(MonomialOrder):
    kind = "degrevlex"

    def heapkey(self, m):
        return (-sum(m), m[::-1])


class Lex(MonomialOrder):
    kind = "lex"

    def heapkey(self, m):
        return tuple(-e for e in m)


class Block(MonomialOrder):
    """Elimination order: degrevlex on the first k variables dominates
    degrevlex on the rest, so a Groebner basis eliminates those k variables."""

    kind = "block"

    def __init__(self, k: int):
        if k < 1:
            raise ValueError("block split must be >= 1")
        self.k = k

    def heapkey(self, m):
        a, b = m[: self.k], m[self.k :]
        return (-sum(a), a[::-1], -sum(b), b[::-1])

    def cache_key(self):
        return (self.kind, self.k)

    def __repr__(self):
        return f"block({self.k})"


DEGREVLEX = DegRevLex()
LEX = Lex()


def block(k: int) -> Block:
    return Block(k)


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


class Polynomial:
    """Sparse exact polynomial; ``terms`` maps exponent tuples to nonzero
    Fractions.  Treat instances as immutable."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: dict, _clean: bool = True):
        self.ring = ring
        if _clean:
            cleaned = {}
            for m, c in terms.items():
                c = Fraction(c)
                if c:
                    cleaned[tuple(m)] = c
            terms = cleaned
        self.terms = terms
        self._hash = None

    # -- basics --------------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        return format_polynomial(self)

    def __str__(self):
        return format_polynomial(self)

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("polynomials from different rings")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return None

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for m, c in other.terms.items():
            v = terms.get(m, 0) + c
            if v:
                terms[m] = v
            else:
                terms.pop(m, None)
        return Polynomial(self.ring, terms, _clean=False)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(
            self.ring, {m: -c for m, c in self.terms.items()}, _clean=False
        )

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return self.ring.zero()
            return Polynomial(
                self.ring, {m: v * c for m, v in self.terms.items()}, _clean=False
            )
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for ma, ca in a.items():
            for mb, cb in b.items():
                m = _mono_mul(ma, mb)
                v = out.get(m, 0) + ca * cb
                if v:
                    out[m] = v
                else:
                    del out[m]
        return Polynomial(self.ring, out, _clean=False)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative polynomial power")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # -- structure -----------------------------------------------------------

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.ring.n, Fraction(0))

    def is_constant(self) -> bool:
        return all(sum(m) == 0 for m in self.terms)

    def homogeneous_component(self, d: int) -> "Polynomial":
        return Polynomial(
            self.ring,
            {m: c for m, c in self.terms.items() if sum(m) == d},
            _clean=False,
        )

    def leading_monomial(self, order: MonomialOrder = DEGREVLEX) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return min(self.terms, key=order.heapkey)

    def leading_coefficient(self, order: MonomialOrder = DEGREVLEX) -> Fraction:
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: MonomialOrder = DEGREVLEX) -> "Polynomial":
        if not self.terms:
            return self
        lc = self.leading_coefficient(order)
        if lc == 1:
            return self
        return self * Fraction(1, 1) / lc

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                raise ZeroDivisionError("division by zero scalar")
            return self * (Fraction(1) / c)
        return NotImplemented

    def _diff(self, j: int) -> "Polynomial":
        """Formal partial derivative with respect to variable index j (0-based)."""
        out = {}
        for m, c in self.terms.items():
            e = m[j]
            if e:
                mm = m[:j] + (e - 1,) + m[j + 1 :]
                v = out.get(mm, 0) + c * e
                if v:
                    out[mm] = v
                else:
                    del out[mm]
        return Polynomial(self.ring, out, _clean=False)


# ---------------------------------------------------------------------------
# Spec-level operations
# ---------------------------------------------------------------------------


def partial_derivative(f: Polynomial, i: int) -> Polynomial:
    """Formal derivative with respect to the i-th variable, i in 1..n."""
    if not 1 <= i <= f.ring.n:
        raise IndexError(f"variable index {i} out of range 1..{f.ring.n}")
    return f._diff(i - 1)


def gradient(f: Polynomial) -> tuple:
    return tuple(f._diff(j) for j in range(f.ring.n))


def evaluate(f: Polynomial, p: Point) -> Fraction:
    """Evaluate f at a rational point (a ring homomorphism)."""
    if p.ring != f.ring:
        raise ValueError("point does not belong to the polynomial's ring")
    coords = p.coordinates
    n = f.ring.n
    # cache coordinate powers across terms
    powers = [{0: Fraction(1)} for _ in range(n)]
    total = Fraction(0)
    for m, c in f.terms.items():
        v = c
        for j in range(n):
            e = m[j]
            if e:
                pw = powers[j]
                if e not in pw:
                    pw[e] = coords[j] ** e
                v *= pw[e]
        total += v
    return total


def exact_divide(f: Polynomial, g: Polynomial) -> Optional[Polynomial]:
    """Exact quotient f/g, or None when g does not divide f."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if f.ring != g.ring:
        raise ValueError("polynomials from different rings")
    if f.is_zero():
        return f.ring.zero()
    order = DEGREVLEX
    lm_g = g.leading_monomial(order)
    lc_g = g.terms[lm_g]
    quotient = {}
    rem = dict(f.terms)
    # If g | f, each leading term of the running remainder is divisible by
    # lt(g); the first failure proves indivisibility.
    while rem:
        m = min(rem, key=order.heapkey)
        if any(e < d for e, d in zip(m, lm_g)):
            return None
        q_mono = tuple(e - d for e, d in zip(m, lm_g))
        q_coef = rem[m] / lc_g
        quotient[q_mono] = q_coef
        for mg, cg in g.terms.items():
            mm = _mono_mul(mg, q_mono)
            v = rem.get(mm, 0) - q_coef * cg
            if v:
                rem[mm] = v
            else:
                rem.pop(mm, None)
    return Polynomial(f.ring, quotient, _clean=False)


def exact_divide_or_raise(f: Polynomial, g: Polynomial) -> Polynomial:
    q = exact_divide(f, g)
    if q is None:
        raise NotDivisibleError(f"{g} does not divide {f}")
    return q


def is_homogeneous(f: Polynomial):
    """(True, d) when every term of f has total degree d, else (False, None)."""
    if f.is_zero():
        raise ValueError("is_homogeneous is undefined for the zero polynomial")
    degrees = {sum(m) for m in f.terms}
    if len(degrees) == 1:
        return True, degrees.pop()
    return False, None


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))"
)


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise ParseError(f"unexpected character {stripped[0]!r}", pos)
        if m.lastgroup == "int":
            tokens.append(("int", m.group("int"), m.start("int")))
        elif m.lastgroup == "name":
            tokens.append(("name", m.group("name"), m.start("name")))
        else:
            tokens.append(("op", m.group("op"), m.start("op")))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: Ring):
        self.tokens = _tokenize(text)
        self.i = 0
        self.ring = ring

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, val, pos = self.next()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}, found {val!r}", pos)

    def parse(self) -> Polynomial:
        p = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected trailing input {val!r}", pos)
        return p

    def expr(self) -> Polynomial:
        sign = 1
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.next()
            sign = -1 if val == "-" else 1
        p = self.term() * sign
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.next()
                q = self.term()
                p = p + q if val == "+" else p - q
            else:
                return p

    def term(self) -> Polynomial:
        p = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.next()
                p = p * self.factor()
            elif kind == "op" and val == "(":
                # juxtaposition with a parenthesized factor
                p = p * self.factor()
            else:
                return p

    def factor(self) -> Polynomial:
        p = self.base()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.next()
            k, v, pos = self.next()
            if k != "int":
                raise ParseError(f"expected exponent, found {v!r}", pos)
            p = p ** int(v)
        return p

    def base(self) -> Polynomial:
        kind, val, pos = self.next()
        if kind == "int":
            num = int(val)
            k, v, _ = self.peek()
            if k == "op" and v == "/":
                self.next()
                k2, v2, pos2 = self.next()
                if k2 != "int":
                    raise ParseError(f"expected denominator, found {v2!r}", pos2)
                den = int(v2)
                if den == 0:
                    raise ParseError("zero denominator", pos2)
                return self.ring.constant(Fraction(num, den))
            return self.ring.constant(num)
        if kind == "name":
            if val not in self.ring._index:
                raise ParseError(f"unknown variable {val!r}", pos)
            return self.ring.variable(val)
        if kind == "op" and val == "(":
            p = self.expr()
            self.expect_op(")")
            return p
        raise ParseError(f"unexpected token {val!r}", pos)


def parse_polynomial(text: str, ring: Ring) -> Polynomial:
    """Parse text into a polynomial of the given ring (see module docstring)."""
    return _Parser(text, ring).parse()


# ---------------------------------------------------------------------------
# Formatting
# ---------------------------------------------------------------------------


def _format_monomial(ring: Ring, m: Monomial) -> str:
    parts = []
    for name, e in zip(ring.names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_polynomial(f: Polynomial) -> str:
    """Canonical string form: terms in descending degrevlex order.

    parse_polynomial(format_polynomial(f), f.ring) == f.
    """
    if not f.terms:
        return "0"
    chunks = []
    for m in DEGREVLEX.sorted_descending(f.terms):
        c = f.terms[m]
        mono = _format_monomial(f.ring, m)
        if mono:
            if c == 1:
                body = mono
            elif c == -1:
                body = f"-{mono}"
            else:
                body = f"{c}*{mono}"
        else:
            body = str(c)
        chunks.append(body)
    out = chunks[0]
    for body in chunks[1:]:
        if body.startswith("-"):
            out += " - " + body[1:]
        else:
            out += " + " + body
    return out
