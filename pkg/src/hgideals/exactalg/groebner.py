"""Division, S-polynomials and Buchberger's algorithm under the lex order."""

from __future__ import annotations

import heapq
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .polynomial import LEX, LexOrder, Polynomial, Ring, normalize_coeff


class BudgetExceeded(RuntimeError):
    """A degree or pair-count cap was hit before the computation finished."""

    def __init__(self, message: str, pairs: int = 0):
        super().__init__(message)
        self.pairs = pairs


@dataclass(frozen=True)
class Budget:
    max_degree: int | None = 12
    max_pairs: int = 50_000


CHECK_BUDGET = Budget(max_degree=None, max_pairs=50_000)


def _quot(c, lc):
    if lc == 1:
        return c
    if lc == -1:
        return -c
    return normalize_coeff(Fraction(c) / lc)


class _Divisor:
    __slots__ = ("lm", "lc", "tail")

    def __init__(self, g: Polynomial):
        self.lm = g.leading_monomial()
        self.lc = g.terms[self.lm]
        self.tail = [(m - self.lm, c) for m, c in g.terms.items() if m != self.lm]


def _reduce(ring: Ring, f: dict, divisors: Sequence[_Divisor], quotients: list | None = None) -> dict:
    """Full reduction of the term dict ``f`` (consumed) by ``divisors``."""
    guard = ring.guard
    rem: dict[int, object] = {}
    while f:
        m = max(f)
        c = f.pop(m)
        mg = m | guard
        for idx, g in enumerate(divisors):
            if (mg - g.lm) & guard == guard:
                t = m - g.lm
                q = _quot(c, g.lc)
                if quotients is not None:
                    qd = quotients[idx]
                    s = qd.get(t, 0) + q
                    if s:
                        qd[t] = s
                    else:
                        del qd[t]
                for dm, dc in g.tail:
                    key = dm + m
                    s = f.get(key, 0) - q * dc
                    if s:
                        f[key] = s
                    else:
                        del f[key]
                break
        else:
            rem[m] = c
    return rem


def divide(f: Polynomial, divisors: Sequence[Polynomial], order: LexOrder = LEX):
    """Multivariate division: ``f = sum(q_i * g_i) + r``.

    At each step the first divisor in list order whose leading monomial
    divides the current leading monomial is used; otherwise the leading term
    moves to the remainder.  Returns ``(quotients, remainder)``.
    """
    if any(g.is_zero() for g in divisors):
        raise ValueError("division by the zero polynomial")
    ring = f.ring
    divs = [_Divisor(g) for g in divisors]
    qs: list[dict] = [{} for _ in divisors]
    rem = _reduce(ring, dict(f.terms), divs, qs)
    quotients = [Polynomial(ring, {m: normalize_coeff(c) for m, c in q.items()}) for q in qs]
    return quotients, Polynomial(ring, {m: normalize_coeff(c) for m, c in rem.items()})


def s_polynomial(g1: Polynomial, g2: Polynomial, order: LexOrder = LEX) -> Polynomial:
    """``lcm/LT(g1) * g1 - lcm/LT(g2) * g2`` with both leading coefficients scaled to 1."""
    if g1.is_zero() or g2.is_zero():
        raise ValueError("S-polynomial of the zero polynomial")
    ring = g1.ring
    m1, m2 = g1.leading_monomial(), g2.leading_monomial()
    lcm = ring.lcm(m1, m2)
    a = g1.shift(lcm - m1, _quot(1, g1.terms[m1]))
    b = g2.shift(lcm - m2, _quot(1, g2.terms[m2]))
    return a - b


def _s_terms(ring: Ring, g1: Polynomial, g2: Polynomial) -> dict:
    m1, m2 = g1.leading_monomial(), g2.leading_monomial()
    lcm = ring.lcm(m1, m2)
    t1, t2 = lcm - m1, lcm - m2
    c1, c2 = _quot(1, g1.terms[m1]), _quot(1, g2.terms[m2])
    out: dict[int, object] = {}
    for m, c in g1.terms.items():
        if m != m1:
            out[m + t1] = c * c1
    for m, c in g2.terms.items():
        if m != m2:
            key = m + t2
            s = out.get(key, 0) - c * c2
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return out


@dataclass
class GBVerdict:
    is_gb: bool
    failing_pair: tuple[int, int] | None = None
    remainder: Polynomial | None = None
    pairs_reduced: int = 0
    pairs_skipped: int = 0

    def __bool__(self):
        return self.is_gb


@dataclass
class GroebnerBasis:
    generators: list[Polynomial]
    verified: bool = True
    stats: dict = field(default_factory=dict)

    def __post_init__(self):
        self._divs = [_Divisor(g) for g in self.generators]

    @property
    def ring(self) -> Ring:
        return self.generators[0].ring

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def leading_monomials(self) -> list[int]:
        return [g.leading_monomial() for g in self.generators]

    def normal_form(self, f: Polynomial) -> Polynomial:
        if not self.generators:
            return f
        rem = _reduce(f.ring, dict(f.terms), self._divs)
        return Polynomial(f.ring, {m: normalize_coeff(c) for m, c in rem.items()})

    def contains(self, f: Polynomial) -> bool:
        return self.normal_form(f).is_zero()


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    """Remainder of ``f`` modulo a Gröbner basis; zero iff ``f`` is in the ideal."""
    return gb.normal_form(f)


def _candidate_pairs(ring: Ring, gens: Sequence[Polynomial]):
    lms = [g.leading_monomial() for g in gens]
    masks = [ring.support_mask(m) for m in lms]
    skipped = 0
    pairs = []
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if masks[i] & masks[j]:
                pairs.append((i, j))
            else:
                skipped += 1
    return pairs, skipped


def _check_chunk(args):
    gens, pairs = args
    ring = gens[0].ring
    divs = [_Divisor(g) for g in gens]
    for i, j in pairs:
        rem = _reduce(ring, _s_terms(ring, gens[i], gens[j]), divs)
        if rem:
            return (i, j), Polynomial(ring, {m: normalize_coeff(c) for m, c in rem.items()})
    return None


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("HGI_THREADS", "1")))
    except ValueError:
        return 1


def buchberger_check(gens: Sequence[Polynomial], order: LexOrder = LEX,
                     budget: Budget = CHECK_BUDGET, threads: int | None = None) -> GBVerdict:
    """Decide whether ``gens`` is a Gröbner basis by Buchberger's criterion.

    Pairs with coprime leading monomials are skipped.  Pairs are visited in
    lexicographic order of their index pairs and the smallest failing pair is
    reported.  Raises :class:`BudgetExceeded` when more than
    ``budget.max_pairs`` reductions would be needed.
    """
    gens = [g for g in gens]
    if any(g.is_zero() for g in gens):
        raise ValueError("generators must be nonzero")
    if len(gens) < 2:
        return GBVerdict(True)
    ring = gens[0].ring
    pairs, skipped = _candidate_pairs(ring, gens)
    if len(pairs) > budget.max_pairs:
        raise BudgetExceeded(f"{len(pairs)} S-pairs exceed the cap of {budget.max_pairs}", len(pairs))
    threads = _threads() if threads is None else threads
    if threads > 1 and len(pairs) > 200:
        size = -(-len(pairs) // (threads * 4))
        chunks = [(gens, pairs[k:k + size]) for k in range(0, len(pairs), size)]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_check_chunk, chunks))
        failures = [r for r in results if r is not None]
        if failures:
            pair, rem = min(failures, key=lambda r: r[0])
            return GBVerdict(False, pair, rem, len(pairs), skipped)
        return GBVerdict(True, None, None, len(pairs), skipped)
    divs = [_Divisor(g) for g in gens]
    for count, (i, j) in enumerate(pairs, 1):
        rem = _reduce(ring, _s_terms(ring, gens[i], gens[j]), divs)
        if rem:
            r = Polynomial(ring, {m: normalize_coeff(c) for m, c in rem.items()})
            return GBVerdict(False, (i, j), r, count, skipped)
    return GBVerdict(True, None, None, len(pairs), skipped)


def interreduce(gens: Sequence[Polynomial]) -> list[Polynomial]:
    """Reduced Gröbner basis form of a Gröbner basis: monic, nothing reducible."""
    gs = [g.monic() for g in gens if not g.is_zero()]
    if not gs:
        return []
    ring = gs[0].ring
    # drop elements whose leading monomial is divisible by another one
    gs.sort(key=lambda g: g.leading_monomial())
    keep: list[Polynomial] = []
    for g in gs:
        lm = g.leading_monomial()
        if not any(ring.divides(h.leading_monomial(), lm) for h in keep):
            keep.append(g)
    out = []
    for idx, g in enumerate(keep):
        others = [_Divisor(h) for k, h in enumerate(keep) if k != idx]
        lm = g.leading_monomial()
        tail = {m: c for m, c in g.terms.items() if m != lm}
        rem = _reduce(ring, tail, others)
        rem[lm] = 1
        out.append(Polynomial(ring, {m: normalize_coeff(c) for m, c in rem.items()}))
    out.sort(key=lambda g: g.leading_monomial(), reverse=True)
    return out


def buchberger_complete(gens: Sequence[Polynomial], order: LexOrder = LEX,
                        budget: Budget = Budget()) -> GroebnerBasis:
    """Buchberger completion with the normal selection strategy.

    Pairs are processed by smallest lcm degree, ties broken by index pair,
    with the product criterion and the Gebauer-Möller chain criterion.
    The result is the reduced (auto-reduced, monic) basis.
    """
    basis = [g.monic() for g in gens if not g.is_zero()]
    if not basis:
        return GroebnerBasis([], stats={"pairs": 0})
    ring = basis[0].ring
    if budget.max_degree is not None:
        too_big = [g for g in basis if g.total_degree() > budget.max_degree]
        if too_big:
            raise BudgetExceeded(f"input degree {too_big[0].total_degree()} exceeds cap {budget.max_degree}")
    divs = [_Divisor(g) for g in basis]
    lms = [g.leading_monomial() for g in basis]
    pending: set[tuple[int, int]] = set()
    heap: list[tuple[int, int, int]] = []

    def push(i, j):
        pending.add((i, j))
        heapq.heappush(heap, (ring.degree(ring.lcm(lms[i], lms[j])), i, j))

    for j in range(len(basis)):
        for i in range(j):
            push(i, j)
    reduced = 0

    while heap:
        _, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        lcm = ring.lcm(lms[i], lms[j])
        if ring.coprime(lms[i], lms[j]):
            continue
        # chain criterion: some k with lm_k | lcm and both (i,k), (j,k) already handled
        chained = False
        for k in range(len(basis)):
            if k in (i, j) or not ring.divides(lms[k], lcm):
                continue
            if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
                chained = True
                break
        if chained:
            continue
        reduced += 1
        if reduced > budget.max_pairs:
            raise BudgetExceeded(f"completion exceeded {budget.max_pairs} pair reductions", reduced)
        rem = _reduce(ring, _s_terms(ring, basis[i], basis[j]), divs)
        if not rem:
            continue
        h = Polynomial(ring, {m: normalize_coeff(c) for m, c in rem.items()}).monic()
        if budget.max_degree is not None and h.total_degree() > budget.max_degree:
            raise BudgetExceeded(f"new basis element of degree {h.total_degree()} exceeds cap "
                                 f"{budget.max_degree}", reduced)
        new = len(basis)
        basis.append(h)
        divs.append(_Divisor(h))
        lms.append(h.leading_monomial())
        for k in range(new):
            push(k, new)
    final = interreduce(basis)
    return GroebnerBasis(final, stats={"pairs": reduced, "size": len(final)})


def groebner_basis_from_verified(gens: Sequence[Polynomial], **kw) -> GroebnerBasis:
    """Wrap ``gens`` as a Gröbner basis after confirming Buchberger's criterion."""
    verdict = buchberger_check(gens, **kw)
    if not verdict.is_gb:
        raise ValueError(f"generators are not a Gröbner basis (pair {verdict.failing_pair})")
    return GroebnerBasis(list(gens), stats={"pairs": verdict.pairs_reduced})


def is_radical_by_squarefree_initials(gb: GroebnerBasis | Sequence[Polynomial]) -> bool:
    """Sufficient test: square-free initial ideal implies a radical ideal.

    ``False`` only means the test is inconclusive.
    """
    gens = gb.generators if isinstance(gb, GroebnerBasis) else list(gb)
    if not gens:
        return True
    ring = gens[0].ring
    return all(ring.is_squarefree(g.leading_monomial()) for g in gens)
