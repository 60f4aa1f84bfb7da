"""Exact multivariate polynomials over Q in a d x n grid of variables.

Monomials are packed into Python integers: variable x[r,c] owns an 8-bit
field, the first variable x[1,1] in the most significant field.  With this
layout plain integer comparison *is* the lexicographic order with
x[1,1] > x[1,2] > ... > x[1,n] > x[2,1] > ..., multiplication of monomials
is integer addition, and divisibility is one subtraction against a mask of
guard bits.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Iterator, Mapping

FIELD_BITS = 8
MAX_EXPONENT = (1 << (FIELD_BITS - 1)) - 1


def normalize_coeff(c):
    """Return ``c`` as an ``int`` when it is integral, else as a ``Fraction``."""
    if isinstance(c, int):
        return c
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


@dataclass(frozen=True)
class VarId:
    row: int
    col: int


@lru_cache(maxsize=None)
def _masks(nvars: int) -> tuple[int, int]:
    guard = 0
    low = 0
    for v in range(nvars):
        shift = (nvars - 1 - v) * FIELD_BITS
        guard |= 1 << (shift + FIELD_BITS - 1)
        low |= 1 << shift
    return guard, low


class Ring:
    """Polynomial ring Q[x[r,c] : 1 <= r <= d, 1 <= c <= n] with lex order."""

    __slots__ = ("d", "n", "nvars", "guard", "low", "_field")

    def __init__(self, d: int, n: int):
        if d < 1 or n < 1:
            raise ValueError(f"grid must be at least 1x1, got {d}x{n}")
        self.d = d
        self.n = n
        self.nvars = d * n
        self.guard, self.low = _masks(self.nvars)
        self._field = (1 << FIELD_BITS) - 1

    def __eq__(self, other):
        return isinstance(other, Ring) and (self.d, self.n) == (other.d, other.n)

    def __hash__(self):
        return hash((self.d, self.n))

    def __repr__(self):
        return f"Ring(d={self.d}, n={self.n})"

    # -- variables and monomials ------------------------------------------
    def var_index(self, row: int, col: int) -> int:
        if not (1 <= row <= self.d and 1 <= col <= self.n):
            raise ValueError(f"x[{row},{col}] outside the {self.d}x{self.n} grid")
        return (row - 1) * self.n + (col - 1)

    def _shift(self, v: int) -> int:
        return (self.nvars - 1 - v) * FIELD_BITS

    def monomial(self, exponents: Mapping[tuple[int, int] | VarId, int]) -> int:
        m = 0
        for key, e in exponents.items():
            if isinstance(key, VarId):
                key = (key.row, key.col)
            if e < 0 or e > MAX_EXPONENT:
                raise ValueError(f"exponent {e} out of range")
            m += e << self._shift(self.var_index(*key))
        return m

    def var_monomial(self, row: int, col: int) -> int:
        return 1 << self._shift(self.var_index(row, col))

    def exponents(self, m: int) -> dict[tuple[int, int], int]:
        """Unpack a monomial into ``{(row, col): exponent}`` with no zeros."""
        out = {}
        for v, e in self.iter_vars(m):
            out[(v // self.n + 1, v % self.n + 1)] = e
        return out

    def iter_vars(self, m: int) -> Iterator[tuple[int, int]]:
        """Yield ``(variable index, exponent)`` for the support of ``m``."""
        v = self.nvars - 1
        field = self._field
        while m:
            e = m & field
            if e:
                yield v, e
            m >>= FIELD_BITS
            v -= 1

    def degree(self, m: int) -> int:
        return sum(e for _, e in self.iter_vars(m))

    def divides(self, a: int, b: int) -> bool:
        """True iff monomial ``a`` divides monomial ``b``."""
        g = self.guard
        return ((b | g) - a) & g == g

    def support_mask(self, m: int) -> int:
        g = self.guard
        return ((m | g) - self.low) & g

    def coprime(self, a: int, b: int) -> bool:
        return self.support_mask(a) & self.support_mask(b) == 0

    def lcm(self, a: int, b: int) -> int:
        field = self._field
        out = 0
        shift = 0
        while a or b:
            ea, eb = a & field, b & field
            out |= (ea if ea > eb else eb) << shift
            a >>= FIELD_BITS
            b >>= FIELD_BITS
            shift += FIELD_BITS
        return out

    def is_squarefree(self, m: int) -> bool:
        return all(e == 1 for _, e in self.iter_vars(m))

    def format_monomial(self, m: int) -> str:
        parts = []
        for (r, c), e in sorted(self.exponents(m).items()):
            parts.append(f"x[{r},{c}]" + (f"^{e}" if e > 1 else ""))
        return " * ".join(parts)

    # -- constructors -------------------------------------------------------
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return Polynomial(self, {0: 1})

    def const(self, c) -> "Polynomial":
        c = normalize_coeff(c)
        return Polynomial(self, {0: c} if c else {})

    def var(self, row: int, col: int) -> "Polynomial":
        return Polynomial(self, {self.var_monomial(row, col): 1})

    def from_terms(self, terms: Iterable[tuple[object, Mapping]]) -> "Polynomial":
        out: dict[int, object] = {}
        for c, exps in terms:
            m = self.monomial(exps)
            out[m] = out.get(m, 0) + normalize_coeff(c)
        return Polynomial(self, {m: c for m, c in out.items() if c})


class LexOrder:
    """Lex order on the variable sequence x[1,1] > x[1,2] > ... > x[d,n]."""

    name = "lex"

    @staticmethod
    def key(m: int) -> int:
        return m

    @staticmethod
    def compare(a: int, b: int) -> int:
        return (a > b) - (a < b)


LEX = LexOrder()


def compare_monomials(a: int, b: int, order: LexOrder = LEX) -> int:
    """Return 1, 0 or -1 as ``a`` is greater than, equal to or less than ``b``."""
    return order.compare(a, b)


class Polynomial:
    """Immutable polynomial; ``terms`` maps packed monomials to nonzero rationals."""

    __slots__ = ("ring", "_terms", "_lm", "_hash")

    def __init__(self, ring: Ring, terms: dict[int, object]):
        self.ring = ring
        self._terms = terms
        self._lm = None
        self._hash = None

    # -- inspection ----------------------------------------------------
    @property
    def terms(self) -> Mapping[int, object]:
        return self._terms

    def sorted_terms(self) -> list[tuple[object, int]]:
        """``(coefficient, monomial)`` pairs in strictly decreasing lex order."""
        return [(self._terms[m], m) for m in sorted(self._terms, reverse=True)]

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def leading_monomial(self) -> int:
        if self._lm is None:
            if not self._terms:
                raise ValueError("zero polynomial has no leading term")
            self._lm = max(self._terms)
        return self._lm

    def leading_coefficient(self):
        return self._terms[self.leading_monomial()]

    def leading_term(self) -> tuple[object, int]:
        m = self.leading_monomial()
        return self._terms[m], m

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(self.ring.degree(m) for m in self._terms)

    def evaluate(self, matrix) -> Fraction | int:
        """Evaluate at a d x n matrix given as ``matrix[r][c]`` (0-based)."""
        ring = self.ring
        n = ring.n
        total = 0
        for m, c in self._terms.items():
            val = c
            for v, e in ring.iter_vars(m):
                val *= matrix[v // n][v % n] ** e
                if not val:
                    break
            total += val
        return normalize_coeff(total)

    # -- arithmetic -----------------------------------------------------
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("polynomials live in different rings")
            return other
        if isinstance(other, (int, Rational)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self._terms or not other._terms:
            return self.ring.zero()
        out: dict[int, object] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 + m2
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        if any(self._overflow(m) for m in out):
            raise OverflowError(f"exponent exceeds {MAX_EXPONENT}")
        return Polynomial(self.ring, {m: normalize_coeff(c) for m, c in out.items()})

    __rmul__ = __mul__

    def _overflow(self, m: int) -> bool:
        return (m & self.ring.guard) != 0

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        out = self.ring.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base if e > 1 else base
            e >>= 1
        return out

    def scale(self, c) -> "Polynomial":
        c = normalize_coeff(c)
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {m: normalize_coeff(v * c) for m, v in self._terms.items()})

    def shift(self, mono: int, c=1) -> "Polynomial":
        """Return ``c * mono * self``."""
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {m + mono: normalize_coeff(v * c) for m, v in self._terms.items()})

    def monic(self) -> "Polynomial":
        lc = self.leading_coefficient()
        if lc == 1:
            return self
        return self.scale(Fraction(1) / lc)

    # -- comparison / hashing -----------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int, Rational)):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    def __getstate__(self):
        return (self.ring.d, self.ring.n, self._terms)

    def __setstate__(self, state):
        d, n, terms = state
        self.ring = Ring(d, n)
        self._terms = terms
        self._lm = None
        self._hash = None

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"


def format_polynomial(p: Polynomial) -> str:
    """Render as ``c * x[r,c]^e * ...`` terms joined by ``+``/``-``, lex order."""
    if p.is_zero():
        return "0"
    pieces = []
    for i, (c, m) in enumerate(p.sorted_terms()):
        neg = c < 0
        mag = -c if neg else c
        mono = p.ring.format_monomial(m)
        body = f"{mag} * {mono}" if mono else f"{mag}"
        if i == 0:
            pieces.append(("-" if neg else "") + body)
        else:
            pieces.append((" - " if neg else " + ") + body)
    return "".join(pieces)


def parse_polynomial(ring: Ring, text: str) -> Polynomial:
    """Inverse of :func:`format_polynomial` (whitespace-tolerant)."""
    import re

    s = text.replace(" ", "")
    if s in ("", "0"):
        return ring.zero()
    if s[0] not in "+-":
        s = "+" + s
    chunks = re.findall(r"[+-][^+-]+", s)
    if "".join(chunks) != s:
        raise ValueError(f"cannot parse polynomial: {text!r}")
    out = ring.zero()
    for chunk in chunks:
        sign = -1 if chunk[0] == "-" else 1
        coeff = Fraction(1)
        exps: dict[tuple[int, int], int] = {}
        for factor in chunk[1:].split("*"):
            mv = re.fullmatch(r"x\[(\d+),(\d+)\](?:\^(\d+))?", factor)
            if mv:
                key = (int(mv.group(1)), int(mv.group(2)))
                exps[key] = exps.get(key, 0) + int(mv.group(3) or 1)
            else:
                try:
                    coeff *= Fraction(factor)
                except ValueError as exc:
                    raise ValueError(f"bad factor {factor!r} in {text!r}") from exc
        out = out + ring.from_terms([(sign * coeff, exps)])
    return out
