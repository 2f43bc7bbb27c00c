"""
Exact arithmetic in SL(2, Z).

Matrices are immutable 2x2 integer matrices of determinant one.  Python
integers are arbitrary precision, so long conjugation words never overflow.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple


class NotUnimodularError(ValueError):
    pass


@dataclass(frozen=True, slots=True)
class UniMat:
    """Row-major 2x2 integer matrix ((a, b), (c, d)) with a*d - b*c == 1."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise NotUnimodularError(f"det != 1 for {self.rows()}")

    @classmethod
    def from_rows(cls, rows) -> "UniMat":
        (a, b), (c, d) = rows
        return cls(int(a), int(b), int(c), int(d))

    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.a, self.b), (self.c, self.d))

    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    @property
    def trace(self) -> int:
        return self.a + self.d

    def __matmul__(self, other: "UniMat") -> "UniMat":
        return compose(self, other)

    def __neg__(self) -> "UniMat":
        return UniMat(-self.a, -self.b, -self.c, -self.d)

    def __pow__(self, k: int) -> "UniMat":
        return power(self, k)

    def __repr__(self):
        return f"UniMat({self.rows()})"


IDENTITY = UniMat(1, 0, 0, 1)
MINUS_IDENTITY = UniMat(-1, 0, 0, -1)
T = UniMat(1, 1, 0, 1)
S = UniMat(0, -1, 1, 0)


def compose(m: UniMat, n: UniMat) -> UniMat:
    return UniMat(
        m.a * n.a + m.b * n.c,
        m.a * n.b + m.b * n.d,
        m.c * n.a + m.d * n.c,
        m.c * n.b + m.d * n.d,
    )


def invert(m: UniMat) -> UniMat:
    return UniMat(m.d, -m.b, -m.c, m.a)


def power(m: UniMat, k: int) -> UniMat:
    """m**k by repeated squaring; negative k uses the inverse."""
    if k < 0:
        m, k = invert(m), -k
    result = IDENTITY
    while k:
        if k & 1:
            result = compose(result, m)
        m = compose(m, m)
        k >>= 1
    return result


def conjugate(g: UniMat, m: UniMat) -> UniMat:
    """g m g^-1"""
    return compose(compose(g, m), invert(g))


def product(mats) -> UniMat:
    result = IDENTITY
    for m in mats:
        result = compose(result, m)
    return result


# ---------------------------------------------------------------------------
# classification

class Kind(enum.Enum):
    IDENTITY = "identity"
    MINUS_IDENTITY = "minus_identity"
    ELLIPTIC = "elliptic"
    PARABOLIC = "parabolic"
    HYPERBOLIC = "hyperbolic"


class ElementClass(NamedTuple):
    kind: Kind
    order: int | None = None  # exact multiplicative order when finite


def _order_by_composition(m: UniMat, limit: int = 12) -> int | None:
    acc = m
    for r in range(1, limit + 1):
        if acc == IDENTITY:
            return r
        acc = compose(acc, m)
    return None


def classify(m: UniMat) -> ElementClass:
    if m == IDENTITY:
        return ElementClass(Kind.IDENTITY, 1)
    if m == MINUS_IDENTITY:
        return ElementClass(Kind.MINUS_IDENTITY, 2)
    t = abs(m.trace)
    if t < 2:
        order = _order_by_composition(m, 6)
        assert order in (3, 4, 6), (m, order)
        return ElementClass(Kind.ELLIPTIC, order)
    if t == 2:
        return ElementClass(Kind.PARABOLIC)
    return ElementClass(Kind.HYPERBOLIC)


def is_parabolic(m: UniMat) -> bool:
    return classify(m).kind is Kind.PARABOLIC


# companion matrices x^2 - t x + 1 for the three elliptic traces
_ELLIPTIC_REPS = {t: UniMat(0, -1, 1, t) for t in (-1, 0, 1)}


def finite_order_witnesses() -> dict[int, UniMat]:
    """One element of each finite order occurring in SL(2, Z).

    A finite-order element other than +-1 has |trace| < 2, so the three
    companion matrices and the two central elements exhaust the orders.
    """
    witnesses = {1: IDENTITY, 2: MINUS_IDENTITY}
    for m in _ELLIPTIC_REPS.values():
        cls = classify(m)
        witnesses[cls.order] = m
    return dict(sorted(witnesses.items()))


def max_finite_order() -> int:
    return max(finite_order_witnesses())


# ---------------------------------------------------------------------------
# parabolics

class NotPositiveParabolicError(ValueError):
    pass


def parabolic_width_class(m: UniMat) -> int:
    """Signed k with m conjugate in SL(2, Z) to T**k.

    Only trace +2 parabolics are accepted; negate a trace -2 element first.
    """
    if not is_parabolic(m) or m.trace != 2:
        raise NotPositiveParabolicError(f"{m!r} is not a trace +2 parabolic")
    # m - I = k * [[-ag, a^2], [-g^2, ag]] with gcd(a, g) = 1
    upper, lower = m.b, m.c
    k = math.gcd(m.a - 1, upper, lower, m.d - 1)
    if upper != 0:
        return k if upper > 0 else -k
    return k if -lower > 0 else -k


def parabolic_from_params(alpha: int, gamma: int, k: int) -> UniMat:
    """I + k*[[-alpha*gamma, alpha^2], [-gamma^2, alpha*gamma]].

    Fixes the point alpha/gamma of P^1(Q) and has width class k when
    gcd(alpha, gamma) = 1.
    """
    return UniMat(1 - k * alpha * gamma, k * alpha * alpha,
                  -k * gamma * gamma, 1 + k * alpha * gamma)


def parabolic_fixed_point(m: UniMat) -> tuple[int, int]:
    """Fixed point (p, q) of a parabolic, coprime with q >= 0, (1, 0) for infinity."""
    if not is_parabolic(m):
        raise NotPositiveParabolicError(f"{m!r} is not parabolic")
    # the image of m - +-I is spanned by the fixed vector
    sign = 1 if m.trace == 2 else -1
    n = (m.a - sign, m.b, m.c, m.d - sign)
    p, q = (n[0], n[2]) if (n[0], n[2]) != (0, 0) else (n[1], n[3])
    g = math.gcd(p, q)
    p, q = p // g, q // g
    if q < 0 or (q == 0 and p < 0):
        p, q = -p, -q
    return p, q


# ---------------------------------------------------------------------------
# lattice Z^2 with its symplectic form

class LatticeVec(NamedTuple):
    x: int
    y: int


def symplectic_pairing(v: LatticeVec, w: LatticeVec) -> int:
    return v[0] * w[1] - v[1] * w[0]


def apply(m: UniMat, v: LatticeVec) -> LatticeVec:
    return LatticeVec(m.a * v[0] + m.b * v[1], m.c * v[0] + m.d * v[1])


def transvection_apply(ell: LatticeVec, k: int, v: LatticeVec) -> LatticeVec:
    """k-th power of the symplectic transvection along ell, applied to v."""
    s = k * symplectic_pairing(v, ell)
    return LatticeVec(v[0] + s * ell[0], v[1] + s * ell[1])


def transvection_matrix(ell: LatticeVec, k: int = 1) -> UniMat:
    x, y = ell
    # v -> v + k <v, ell> ell, with <v, ell> = v_x y - v_y x
    return UniMat(1 + k * x * y, -k * x * x, k * y * y, 1 - k * x * y)
