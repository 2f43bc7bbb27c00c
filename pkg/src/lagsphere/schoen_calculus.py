"""
Fiber products S x_{P^1} S twisted by a Moebius automorphism phi.

Topological and Hodge bookkeeping for the singular threefold X, its
projective small resolution Xhat, and the Schoen smoothing Y.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .sl2_arith import max_finite_order
from .surfaces import (
    BEAUVILLE_X16, MoebiusQ, RatPoint, SurfaceDesc, euler_char,
    fiber_component_data, generic_fiber_picard_rank, moebius_apply,
)


class SchoenError(ValueError):
    pass


class IdentityPhiError(SchoenError):
    """phi = id glues the I_1 fibers together: a smoothing problem, not a conifold construction."""


class TransitionInconsistency(SchoenError):
    pass


@dataclass(frozen=True)
class MatchedFiber:
    t: RatPoint
    b: int
    b_prime: int

    @property
    def conifolds(self) -> int:
        # nodes of I_b times nodes of I_b'
        return self.b * self.b_prime

    @property
    def lacks_small_resolution(self) -> bool:
        # fiber components are Cartier unless both b, b' > 1
        return min(self.b, self.b_prime) == 1


@dataclass(frozen=True)
class FiberProduct:
    surface: SurfaceDesc
    phi: MoebiusQ
    matched: tuple[MatchedFiber, ...]
    unmatched_critical: tuple[RatPoint, ...]

    @property
    def flags(self) -> list[RatPoint]:
        return [m.t for m in self.matched if m.lacks_small_resolution]


def build_fiber_product(s: SurfaceDesc, phi: MoebiusQ) -> FiberProduct:
    """Pair nu with phi o nu; the fiber over t is I_{b(t)} x I_{b(phi^-1 t)}."""
    if phi.is_identity():
        raise IdentityPhiError(
            "phi = identity: every critical value, including the I_1 fiber, is "
            "matched with itself; this is not a conifold construction")
    inv = phi.inverse()
    crit = s.critical_values
    second = [moebius_apply(phi, t) for t in crit]
    matched = []
    for t in crit:
        b_prime = s.fiber_type(moebius_apply(inv, t))
        if b_prime is not None:
            matched.append(MatchedFiber(t, s.fiber_type(t), b_prime))
    matched_pts = {m.t for m in matched}
    unmatched = [t for t in crit if t not in matched_pts]
    unmatched += [t for t in second if t not in matched_pts and t not in unmatched]
    return FiberProduct(s, phi, tuple(matched), tuple(unmatched))


def conifold_count(fp: FiberProduct) -> int:
    return sum(m.conifolds for m in fp.matched)


def euler_char_singular(fp: FiberProduct) -> int:
    """chi(X): only fibers I_b x I_b' contribute, each b * b'.

    A fiber with a smooth elliptic factor has Euler number 0.
    """
    return sum(euler_char_pair(m.b, m.b_prime) for m in fp.matched)


def euler_char_pair(b: int, b_prime: int) -> int:
    return b * b_prime


Betti = tuple[int, int, int, int, int, int, int]


@dataclass(frozen=True)
class HodgeSummary:
    n: int
    h11: int
    h12: int
    betti: Betti
    chi: int

    def __post_init__(self):
        if self.chi != 2 * (self.h11 - self.h12):
            raise SchoenError(f"chi {self.chi} != 2 (h11 - h12)")
        expected = (1, 0, self.h11, 2 + 2 * self.h12, self.h11, 0, 1)
        if tuple(self.betti) != expected:
            raise SchoenError(f"Betti numbers {self.betti} inconsistent with Hodge numbers")
        if alternating_sum(self.betti) != self.chi:
            raise SchoenError("chi is not the alternating Betti sum")

    def as_dict(self) -> dict:
        return {"n": self.n, "h11": self.h11, "h12": self.h12,
                "betti": list(self.betti), "chi": self.chi}


def alternating_sum(betti) -> int:
    return sum((-1) ** i * b for i, b in enumerate(betti))


def calabi_yau_betti(h11: int, h12: int) -> Betti:
    return (1, 0, h11, 2 + 2 * h12, h11, 0, 1)


def hodge_of_resolution(n: int, surface: SurfaceDesc = BEAUVILLE_X16) -> HodgeSummary:
    """Hodge data of the small resolution Xhat of X with n conifold points."""
    if n < 1:
        raise SchoenError("need at least one conifold point")
    comps, rels = fiber_component_data(surface)
    generic = generic_fiber_picard_rank(surface.picard_rank, comps, rels)
    # n exceptional divisors over the three shared singular fibers, tied by
    # 2 relations, plus the generic Picard group of each elliptic factor
    h11 = (n - 2) + 2 * generic
    chi = 2 * n  # chi(X) = n and each node is replaced by a P^1
    h12 = h11 - chi // 2
    return HodgeSummary(n, h11, h12, calabi_yau_betti(h11, h12), chi)


def hodge_of_fiber_product(fp: FiberProduct) -> HodgeSummary:
    n = conifold_count(fp)
    summary = hodge_of_resolution(n, fp.surface)
    chi_x = euler_char_singular(fp)
    if summary.chi != chi_x + n:
        raise SchoenError(f"chi(Xhat) = {summary.chi} but chi(X) + n = {chi_x + n}")
    return summary


def schoen_smoothing_invariants(surface: SurfaceDesc = BEAUVILLE_X16) -> HodgeSummary:
    """Hodge data of the smooth fiber product Y = S x S' with disjoint critical values."""
    comps, rels = fiber_component_data(surface)
    generic = generic_fiber_picard_rank(surface.picard_rank, comps, rels)
    fibers = 2 * len(surface.fibers)
    components = 2 * euler_char(surface)
    h11 = (components - (fibers - 1)) + 2 * generic
    chi = 0  # every fiber of Y has a smooth elliptic factor
    h12 = h11 - chi // 2
    return HodgeSummary(0, h11, h12, calabi_yau_betti(h11, h12), chi)


@dataclass(frozen=True)
class TransitionData:
    n: int
    r: int
    betti_Y: Betti
    betti_Xhat: Betti

    def as_dict(self) -> dict:
        return {"n": self.n, "r": self.r,
                "betti_Y": list(self.betti_Y), "betti_Xhat": list(self.betti_Xhat)}


def transition_solve_r(betti_Y, betti_Xhat, n: int) -> TransitionData:
    """Rank r of the span of the vanishing spheres, from b3(Xhat) = b3(Y) - 2r.

    The other two transition formulas are then checked.
    """
    betti_Y, betti_Xhat = tuple(betti_Y), tuple(betti_Xhat)
    diff = betti_Y[3] - betti_Xhat[3]
    if diff < 0 or diff % 2:
        raise TransitionInconsistency(
            f"b3(Y) - b3(Xhat) = {diff} must be even and nonnegative")
    r = diff // 2
    if betti_Xhat[2] != betti_Y[2] + n - r:
        raise TransitionInconsistency(
            f"b2(Xhat) = b2(Y) + n - r fails: {betti_Xhat[2]} != {betti_Y[2]} + {n} - {r}")
    if betti_Xhat[4] != betti_Y[4] + n - r:
        raise TransitionInconsistency(
            f"b4(Xhat) = b4(Y) + n - r fails: {betti_Xhat[4]} != {betti_Y[4]} + {n} - {r}")
    if n - r < 0:
        raise TransitionInconsistency(f"r = {r} exceeds n = {n}")
    return TransitionData(n, r, betti_Y, betti_Xhat)


# ---------------------------------------------------------------------------
# automorphisms

@dataclass(frozen=True)
class AbelianGroup:
    """Direct product of cyclic groups Z/f."""

    factors: tuple[int, ...]

    @property
    def order(self) -> int:
        return math.prod(self.factors)

    @property
    def exponent(self) -> int:
        return math.lcm(*self.factors) if self.factors else 1

    @property
    def is_finite(self) -> bool:
        return all(f > 0 for f in self.factors)

    def __str__(self):
        parts = [f"Z/{f}" for f in self.factors if f != 1]
        return " x ".join(parts) if parts else "trivial"


class AutomorphismArgumentError(SchoenError):
    pass


def automorphism_group(source: SurfaceDesc | FiberProduct) -> AbelianGroup:
    """Aut(Xhat) = MW(S_eta) x MW(S_eta) once automorphisms must preserve pi fiberwise.

    That needs at least three pairwise non-isomorphic singular fibers; for a
    fiber product these are the ordered types (b, b') of the matched fibers.
    """
    if isinstance(source, FiberProduct):
        types = {(m.b, m.b_prime) for m in source.matched}
        surface = source.surface
    else:
        types = {b for _, b in source.fibers}
        surface = source
    if len(types) < 3:
        raise AutomorphismArgumentError("fibration-preserving argument inapplicable")
    t = surface.mw_torsion_order
    return AbelianGroup((t, t))


def degeneration_bound(aut: AbelianGroup) -> int:
    """Bound on the order of the monodromy of a degeneration, acting on H_3."""
    if not aut.is_finite:
        raise SchoenError("automorphism group must be finite")
    return min(aut.exponent, max_finite_order())
