"""
The congruence subgroups Gamma_1(N) of SL(2, Z).

Cosets are enumerated through the action of PSL(2, Z) on +-classes of
primitive vectors in (Z/N)^2; cusps are decided by brute force over
residues mod N.  Nothing here is clever, because N <= 12 is all we need.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .sl2_arith import (
    IDENTITY, S, T, UniMat, compose, conjugate, parabolic_from_params,
)


class NotInGammaError(ValueError):
    pass


class IrregularCuspError(ValueError):
    """The stabilizer in Gamma_1(N) has no trace +2 generator of the cusp's width."""


@dataclass(frozen=True, slots=True)
class Cusp:
    """Point p/q of P^1(Q) in lowest terms; Cusp(1, 0) is infinity."""

    p: int
    q: int

    def __post_init__(self):
        if math.gcd(self.p, self.q) != 1:
            raise ValueError(f"({self.p}, {self.q}) not in lowest terms")
        if self.q < 0 or (self.q == 0 and self.p != 1):
            raise ValueError(f"({self.p}, {self.q}) not normalized")

    @classmethod
    def normalize(cls, p: int, q: int) -> "Cusp":
        if p == 0 and q == 0:
            raise ValueError("(0, 0) is not a point of P^1")
        g = math.gcd(p, q)
        p, q = p // g, q // g
        if q < 0 or (q == 0 and p < 0):
            p, q = -p, -q
        return cls(p, q)

    @classmethod
    def parse(cls, text: str) -> "Cusp":
        text = text.strip().lower()
        if text in ("inf", "infinity", "oo", "i*inf", "1/0"):
            return INFINITY
        if "/" in text:
            p, q = text.split("/")
            return cls.normalize(int(p), int(q))
        return cls.normalize(int(text), 1)

    @property
    def is_infinity(self) -> bool:
        return self.q == 0

    def __str__(self):
        if self.q == 0:
            return "inf"
        if self.q == 1:
            return str(self.p)
        return f"{self.p}/{self.q}"

    def __repr__(self):
        return f"Cusp({self})"


INFINITY = Cusp(1, 0)


def _check_level(N: int):
    if N < 1:
        raise ValueError(f"level must be positive, got {N}")


def is_member(N: int, m: UniMat) -> bool:
    _check_level(N)
    return (m.a - 1) % N == 0 and (m.d - 1) % N == 0 and m.c % N == 0


def require_member(N: int, m: UniMat):
    if not is_member(N, m):
        raise NotInGammaError(f"{m!r} is not in Gamma_1({N})")


# ---------------------------------------------------------------------------
# cosets

def _pm_class(x: int, y: int, N: int) -> tuple[int, int]:
    v = (x % N, y % N)
    w = ((-x) % N, (-y) % N)
    return min(v, w)


def coset_label(N: int, g: UniMat) -> tuple[int, int]:
    """Label of the coset g Gamma_1(N): the +-class of g (1, 0)^T mod N."""
    return _pm_class(g.a, g.c, N)


def psl_index(N: int) -> int:
    """[PSL(2, Z) : image of Gamma_1(N)], by orbit enumeration of (1, 0)."""
    _check_level(N)
    start = _pm_class(1, 0, N)
    seen = {start}
    queue = deque([start])
    while queue:
        x, y = queue.popleft()
        for gen in (S, T):
            nxt = _pm_class(gen.a * x + gen.b * y, gen.c * x + gen.d * y, N)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return len(seen)


class TransversalError(ValueError):
    pass


@dataclass(frozen=True)
class CosetTable:
    level: int
    representatives: tuple[UniMat, ...]

    @property
    def labels(self) -> tuple[tuple[int, int], ...]:
        return tuple(coset_label(self.level, g) for g in self.representatives)


def coset_transversal(N: int) -> CosetTable:
    """Breadth-first transversal of the left cosets g Gamma_1(N) in PSL(2, Z)."""
    _check_level(N)
    reps = {coset_label(N, IDENTITY): IDENTITY}
    queue = deque([IDENTITY])
    while queue:
        g = queue.popleft()
        for gen in (S, T):
            h = compose(gen, g)
            lab = coset_label(N, h)
            if lab not in reps:
                reps[lab] = h
                queue.append(h)
    return CosetTable(N, tuple(reps.values()))


def check_transversal(table: CosetTable):
    """Raise TransversalError naming the first colliding pair, or a count mismatch."""
    seen = {}
    for i, lab in enumerate(table.labels):
        if lab in seen:
            j = seen[lab]
            raise TransversalError(
                f"representatives {j} and {i} lie in the same coset (label {lab}): "
                f"{table.representatives[j]!r}, {table.representatives[i]!r}")
        seen[lab] = i
    expected = psl_index(table.level)
    if len(seen) != expected:
        raise TransversalError(
            f"{len(seen)} representatives but index is {expected}")


def verify_transversal(table: CosetTable) -> bool:
    try:
        check_transversal(table)
    except TransversalError:
        return False
    return True


# Coset representatives for Gamma_1(6) as printed with the fundamental
# domain construction for X_1(6).  Transcribed by hand; the test suite
# checks that they form a transversal.
LISTED_GAMMA1_6_REPS = tuple(UniMat.from_rows(r) for r in (
    ((1, 0), (0, 1)),
    ((0, 1), (-1, 0)),
    ((-1, 1), (-1, 0)),
    ((-2, 1), (-1, 0)),
    ((-3, 1), (-1, 0)),
    ((-4, 1), (-1, 0)),
    ((-5, 1), (-1, 0)),
    ((-5, 3), (-2, 1)),
    ((-7, 4), (-2, 1)),
    ((-9, 5), (-2, 1)),
    ((-11, 4), (-3, 1)),
    ((-14, 5), (-3, 1)),
))

LISTED_TABLE = CosetTable(6, LISTED_GAMMA1_6_REPS)


# ---------------------------------------------------------------------------
# cusps

def cusps_equivalent(N: int, x: Cusp, y: Cusp) -> bool:
    """Gamma_1(N)-equivalence: (p', q') = +-(p + j q, q) mod N for some j."""
    _check_level(N)
    for sign in (1, -1):
        if (y.q - sign * x.q) % N:
            continue
        for j in range(N):
            if (y.p - sign * (x.p + j * x.q)) % N == 0:
                return True
    return False


def _candidate_cusps(N: int) -> Iterable[Cusp]:
    yield INFINITY
    for q in range(1, N + 1):
        for p in range(q):
            if math.gcd(p, q) == 1:
                yield Cusp(p, q)


def sigma_for(cusp: Cusp) -> UniMat:
    """A det-1 matrix sending infinity to the cusp."""
    p, q = cusp.p, cusp.q
    # solve p*y - x*q = 1
    g, s, t = ext_gcd(p, q)
    assert g == 1
    return UniMat(p, -t, q, s)


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        qt, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - qt * x1
        y0, y1 = y1, y0 - qt * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def cusp_width(N: int, cusp: Cusp) -> int:
    """Least h > 0 with sigma T^h sigma^-1 in +-Gamma_1(N)."""
    sigma = sigma_for(cusp)
    bound = psl_index(N)
    for h in range(1, bound + 1):
        m = conjugate(sigma, UniMat(1, h, 0, 1))
        if is_member(N, m) or is_member(N, -m):
            return h
    raise RuntimeError(f"no width <= {bound} for {cusp} at level {N}")


def cusp_classes(N: int) -> list[tuple[Cusp, int]]:
    """One representative per Gamma_1(N)-class of cusps, with its width."""
    _check_level(N)
    reps: list[Cusp] = []
    for c in _candidate_cusps(N):
        if not any(cusps_equivalent(N, r, c) for r in reps):
            reps.append(c)
    return [(c, cusp_width(N, c)) for c in reps]


def class_representative(N: int, cusp: Cusp) -> tuple[Cusp, int]:
    for rep, width in cusp_classes(N):
        if cusps_equivalent(N, rep, cusp):
            return rep, width
    raise RuntimeError(f"{cusp} matched no cusp class at level {N}")


def cusp_stabilizer_generator(N: int, cusp: Cusp) -> UniMat:
    """Trace +2 generator of the Gamma_1(N)-stabilizer of the cusp."""
    _, width = class_representative(N, cusp)
    m = parabolic_from_params(cusp.p, cusp.q, width)
    if is_member(N, m):
        return m
    if is_member(N, -m):
        raise IrregularCuspError(
            f"cusp {cusp} of Gamma_1({N}) is irregular: stabilizer generator has trace -2")
    raise RuntimeError(f"cannot normalize stabilizer of {cusp} into Gamma_1({N})")


def generator_L(N: int = 6) -> UniMat:
    """Lower unipotent [[1, 0], [N, 1]], a member of Gamma_1(N)."""
    return UniMat(1, 0, N, 1)
