"""
Monodromy tuples of semistable elliptic fibrations over P^1.

A tuple (M_1, ..., M_k) of trace +2 parabolics in SL(2, Z) whose ordered
product is the identity.  The built-in tuple is the X_1(6) one; the search
at the bottom looks for all four-fiber tuples with Euler number 12.
"""

from __future__ import annotations

import math
import os
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .congruence import Cusp, INFINITY, is_member
from .sl2_arith import (
    IDENTITY, Kind, UniMat, classify, conjugate, invert,
    parabolic_from_params, parabolic_width_class, product,
)

# Local monodromies of the X_1(6) family around -8, inf, 1, 0 (in that
# cyclic order), labelled by cusp width.
M1 = UniMat(1, 1, 0, 1)
M6 = UniMat(1, 0, -6, 1)
M2 = UniMat(-5, 2, -18, 7)
M3 = UniMat(-5, 3, -12, 7)

MONODROMY_BY_WIDTH = {1: M1, 2: M2, 3: M3, 6: M6}


@dataclass(frozen=True)
class MonodromyTuple:
    entries: tuple[UniMat, ...]
    level: int | None = None
    anchor: tuple[Cusp, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        if self.anchor is not None:
            object.__setattr__(self, "anchor", tuple(self.anchor))
            if len(self.anchor) != len(self.entries):
                raise ValueError("anchor and entries differ in length")

    def __len__(self):
        return len(self.entries)

    def product(self) -> UniMat:
        return product(self.entries)

    def widths(self) -> tuple[int, ...]:
        return tuple(parabolic_width_class(m) for m in self.entries)


# Base points -8, inf, 1, 0 of P^1 for the four loops.
X16_TUPLE = MonodromyTuple(
    (M1, M6, M2, M3),
    level=6,
    anchor=(Cusp(-8, 1), INFINITY, Cusp(1, 1), Cusp(0, 1)),
)


@dataclass
class EntryReport:
    kind: str
    width: int | None
    member: bool | None


@dataclass
class TupleReport:
    product_is_identity: bool
    entries: list[EntryReport]
    width_multiset: tuple[int, ...]
    violations: list[str] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.valid


def validate_tuple(t: MonodromyTuple) -> TupleReport:
    if not t.entries:
        raise ValueError("empty monodromy tuple")
    violations = []
    entries = []
    widths = []
    for i, m in enumerate(t.entries):
        cls = classify(m)
        width = None
        if cls.kind is not Kind.PARABOLIC:
            violations.append(f"entry {i}: not parabolic ({cls.kind.value})")
        elif m.trace != 2:
            violations.append(f"entry {i}: parabolic with trace -2")
        else:
            width = parabolic_width_class(m)
            widths.append(width)
            if width < 0:
                violations.append(f"entry {i}: negative width class {width}")
        member = None
        if t.level is not None:
            member = is_member(t.level, m)
            if not member:
                violations.append(f"entry {i}: not in Gamma_1({t.level})")
        entries.append(EntryReport(cls.kind.value, width, member))
    is_id = t.product() == IDENTITY
    if not is_id:
        violations.append(f"product is {t.product()!r}, not the identity")
    return TupleReport(is_id, entries, tuple(sorted(widths, reverse=True)), violations)


def conjugate_tuple(t: MonodromyTuple, g: UniMat) -> MonodromyTuple:
    # the anchor describes base points, which conjugation does not move
    return MonodromyTuple(tuple(conjugate(g, m) for m in t.entries), t.level, t.anchor)


def hurwitz_move(t: MonodromyTuple, i: int, inverse: bool = False) -> MonodromyTuple:
    """Braid move on positions i, i+1.

    Forward:  (A, B) -> (A B A^-1, A)
    Inverse:  (A, B) -> (B, B^-1 A B)
    """
    if not 0 <= i < len(t) - 1:
        raise IndexError(f"hurwitz move index {i} out of range for length {len(t)}")
    e = list(t.entries)
    a, b = e[i], e[i + 1]
    if inverse:
        e[i], e[i + 1] = b, conjugate(invert(b), a)
    else:
        e[i], e[i + 1] = conjugate(a, b), a
    anchor = t.anchor
    if anchor is not None:
        anchor = list(anchor)
        anchor[i], anchor[i + 1] = anchor[i + 1], anchor[i]
        anchor = tuple(anchor)
    return MonodromyTuple(tuple(e), t.level, anchor)


# ---------------------------------------------------------------------------
# search for four-fiber factorizations of the identity

MIN_ENTRY_BOUND = 36
DEFAULT_ENTRY_BOUND = 100
EULER_NUMBER = 12
FIBER_COUNT = 4


def bounded_parabolics(entry_bound: int, max_width: int) -> list[tuple[tuple[int, int, int, int], int]]:
    """All trace +2 parabolics with |entries| <= entry_bound and width <= max_width.

    Enumerated through I + k*[[-ag, a^2], [-g^2, ag]], one (a, g) per +-pair.
    """
    out = []
    for k in range(1, max_width + 1):
        r = math.isqrt(entry_bound // k)
        for a in range(0, r + 1):
            for g in range(-r, r + 1):
                if a == 0 and g <= 0:
                    continue
                if math.gcd(a, g) != 1:
                    continue
                m = parabolic_from_params(a, g, k)
                if max(map(abs, m.entries())) <= entry_bound:
                    out.append((m.entries(), k))
    return out


def _mul(m, n):
    a, b, c, d = m
    e, f, g, h = n
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def _pair_table(pars, budget):
    table = defaultdict(set)
    for C, wc in pars:
        for D, wd in pars:
            if wc + wd <= budget:
                table[_mul(C, D)].add((wc, wd))
    return table


def _search_chunk(args):
    first, pars, entry_bound = args
    max_width = EULER_NUMBER - (FIBER_COUNT - 1)
    table = _pair_table(pars, max_width + 1)
    found = set()
    for A, wa in first:
        for B, wb in pars:
            s = wa + wb
            if s > EULER_NUMBER - 2:
                continue
            a, b, c, d = _mul(A, B)
            for wc, wd in table.get((d, -b, -c, a), ()):
                if s + wc + wd == EULER_NUMBER:
                    found.add(tuple(sorted((wa, wb, wc, wd), reverse=True)))
    return found


@dataclass(frozen=True)
class SearchResult:
    entry_bound: int
    multisets: frozenset[tuple[int, ...]]
    note: str = "complete only up to entry_bound"

    def sorted(self) -> list[tuple[int, ...]]:
        return sorted(self.multisets, reverse=True)


def beauville_search(entry_bound: int = DEFAULT_ENTRY_BOUND, workers: int = 1) -> SearchResult:
    """Width multisets of 4-tuples A B C D = I of trace +2 parabolics, sum of widths 12.

    Meet in the middle: (C, D) pairs are tabulated by product, then every
    (A, B) looks up (A B)^-1.  Equivalent to deriving D = (A B C)^-1 and
    bounding it, since D is drawn from the same bounded list.
    """
    if entry_bound < MIN_ENTRY_BOUND:
        raise ValueError(f"entry_bound must be >= {MIN_ENTRY_BOUND}")
    max_width = EULER_NUMBER - (FIBER_COUNT - 1)
    pars = bounded_parabolics(entry_bound, max_width)
    workers = max(1, workers)
    chunks = [(pars[i::workers], pars, entry_bound) for i in range(workers)]
    if workers == 1:
        found = _search_chunk(chunks[0])
    else:
        found = set()
        with ProcessPoolExecutor(max_workers=min(workers, os.cpu_count() or 1)) as ex:
            for part in ex.map(_search_chunk, chunks):
                found |= part
    return SearchResult(entry_bound, frozenset(found))


def width_multiset(t: MonodromyTuple) -> Counter:
    return Counter(t.widths())
