"""
Rational semistable elliptic surfaces as finite descriptors.

A surface is its list of singular fibers (location, Kodaira type I_b), its
Mordell-Weil torsion order and Picard rank, and optionally a monodromy
tuple.  Automorphisms of the base P^1 over Q are integer Moebius matrices.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Mapping

from .congruence import Cusp, INFINITY
from .monodromy import MonodromyTuple, validate_tuple
from .sl2_arith import UniMat

RatPoint = Cusp

ZERO = RatPoint(0, 1)
ONE = RatPoint(1, 1)
BASE_TRIPLE = (INFINITY, ZERO, ONE)


class SurfaceError(ValueError):
    pass


@dataclass(frozen=True)
class SurfaceDesc:
    name: str
    fibers: tuple[tuple[RatPoint, int], ...]
    mw_torsion_order: int
    picard_rank: int
    tuple_ref: MonodromyTuple | None = None
    cusp_dictionary: tuple[tuple[Cusp, RatPoint], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "fibers", tuple(self.fibers))
        points = [p for p, _ in self.fibers]
        if len(set(points)) != len(points):
            raise SurfaceError(f"{self.name}: repeated fiber location")
        if any(b < 1 for _, b in self.fibers):
            raise SurfaceError(f"{self.name}: fiber type I_b needs b >= 1")

    @property
    def critical_values(self) -> tuple[RatPoint, ...]:
        return tuple(p for p, _ in self.fibers)

    def fiber_type(self, t: RatPoint) -> int | None:
        for p, b in self.fibers:
            if p == t:
                return b
        return None


def euler_char(s: SurfaceDesc) -> int:
    """Euler number of the surface: each I_b fiber contributes b."""
    return sum(b for _, b in s.fibers)


def generic_fiber_picard_rank(total_rank: int, fiber_component_count: int, relations: int) -> int:
    """Rank of Pic of the generic fiber, from the split sequence 0 -> A -> Pic -> Pic_eta -> 0.

    A is spanned by fiber_component_count classes subject to `relations`
    independent relations.
    """
    span = fiber_component_count - relations
    if span < 0 or total_rank < span:
        raise SurfaceError(
            f"inconsistent Picard data: total {total_rank}, "
            f"{fiber_component_count} components, {relations} relations")
    return total_rank - span


def fiber_component_data(s: SurfaceDesc) -> tuple[int, int]:
    """(number of fiber components, relations among them) for the singular fibers.

    Components of one fiber sum to the fiber class, and all fibers are
    linearly equivalent over P^1, giving (#singular fibers - 1) relations.
    """
    return euler_char(s), len(s.fibers) - 1


# ---------------------------------------------------------------------------
# Moebius transformations over Q

def _normalize_entries(a, b, c, d):
    g = math.gcd(a, b, c, d)
    a, b, c, d = a // g, b // g, c // g, d // g
    first = next(x for x in (a, b, c, d) if x)
    if first < 0:
        a, b, c, d = -a, -b, -c, -d
    return a, b, c, d


@dataclass(frozen=True, slots=True)
class MoebiusQ:
    """z -> (a z + b) / (c z + d), stored with content 1 and first nonzero entry positive."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c == 0:
            raise SurfaceError("singular Moebius matrix")
        if (self.a, self.b, self.c, self.d) != _normalize_entries(self.a, self.b, self.c, self.d):
            raise SurfaceError("Moebius matrix not normalized; use MoebiusQ.make")

    @classmethod
    def make(cls, a, b, c, d) -> "MoebiusQ":
        if a * d - b * c == 0:
            raise SurfaceError("singular Moebius matrix")
        return cls(*_normalize_entries(a, b, c, d))

    def __matmul__(self, other: "MoebiusQ") -> "MoebiusQ":
        return moebius_compose(self, other)

    def __call__(self, p: RatPoint) -> RatPoint:
        return moebius_apply(self, p)

    def is_identity(self) -> bool:
        return (self.a, self.b, self.c, self.d) == (1, 0, 0, 1)

    def inverse(self) -> "MoebiusQ":
        return MoebiusQ.make(self.d, -self.b, -self.c, self.a)

    def rows(self):
        return ((self.a, self.b), (self.c, self.d))


MOEBIUS_IDENTITY = MoebiusQ(1, 0, 0, 1)


def moebius_compose(m: MoebiusQ, n: MoebiusQ) -> MoebiusQ:
    return MoebiusQ.make(
        m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
        m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d,
    )


def moebius_apply(m: MoebiusQ, p: RatPoint) -> RatPoint:
    return RatPoint.normalize(m.a * p.p + m.b * p.q, m.c * p.p + m.d * p.q)


def _frame(points) -> tuple[int, int, int, int]:
    """Matrix sending inf, 0, 1 to the three given distinct points."""
    A, B, C = ((p.p, p.q) for p in points)
    det_ab = A[0] * B[1] - A[1] * B[0]
    if det_ab == 0:
        raise SurfaceError("frame points are not distinct")
    lam = C[0] * B[1] - C[1] * B[0]
    mu = A[0] * C[1] - A[1] * C[0]
    if lam == 0 or mu == 0:
        raise SurfaceError("frame points are not distinct")
    return (lam * A[0], mu * B[0], lam * A[1], mu * B[1])


def moebius_from_points(src, dst) -> MoebiusQ:
    """Unique Moebius map over Q with src[i] -> dst[i] for three distinct points."""
    sa, sb, sc, sd = _frame(src)
    da, db, dc, dd = _frame(dst)
    # dst_frame * adj(src_frame)
    ia, ib, ic, id_ = sd, -sb, -sc, sa
    return MoebiusQ.make(
        da * ia + db * ic, da * ib + db * id_,
        dc * ia + dd * ic, dc * ib + dd * id_,
    )


def moebius_from_permutation(images: Mapping[RatPoint, RatPoint]) -> MoebiusQ:
    """The Moebius map realizing a permutation of {inf, 0, 1}."""
    if set(images) != set(BASE_TRIPLE) or set(images.values()) != set(BASE_TRIPLE):
        raise SurfaceError("images must be a bijection of {inf, 0, 1}")
    return moebius_from_points(BASE_TRIPLE, tuple(images[p] for p in BASE_TRIPLE))


def all_base_permutations() -> list[dict[RatPoint, RatPoint]]:
    return [dict(zip(BASE_TRIPLE, perm)) for perm in itertools.permutations(BASE_TRIPLE)]


# Named automorphisms permuting {inf, 0, 1}.
PERMUTATIONS = {
    "identity": {INFINITY: INFINITY, ZERO: ZERO, ONE: ONE},
    "swap01": {INFINITY: INFINITY, ZERO: ONE, ONE: ZERO},
    "swap0inf": {INFINITY: ZERO, ZERO: INFINITY, ONE: ONE},
    "swap1inf": {INFINITY: ONE, ZERO: ZERO, ONE: INFINITY},
    "cycle": {INFINITY: ZERO, ZERO: ONE, ONE: INFINITY},
    "cycle2": {INFINITY: ONE, ZERO: INFINITY, ONE: ZERO},
}
ADMISSIBLE_PHIS = ("swap01", "swap0inf", "swap1inf", "cycle", "cycle2")


def named_moebius(name: str) -> MoebiusQ:
    try:
        return moebius_from_permutation(PERMUTATIONS[name])
    except KeyError:
        raise SurfaceError(
            f"unknown permutation {name!r}; choose from {sorted(PERMUTATIONS)}") from None


# ---------------------------------------------------------------------------
# catalog

def _catalog_text(path: str | Path | None) -> str:
    if path is None:
        return resources.files("lagsphere.data").joinpath("catalog.json").read_text()
    return Path(path).read_text()


def surface_from_record(rec: dict) -> SurfaceDesc:
    fibers = tuple((RatPoint.parse(f["point"]), int(f["b"])) for f in rec["fibers"])
    tuple_ref = None
    mono = rec.get("monodromy")
    if mono:
        anchor = mono.get("anchor")
        tuple_ref = MonodromyTuple(
            tuple(UniMat.from_rows(e) for e in mono["entries"]),
            level=mono.get("level"),
            anchor=tuple(RatPoint.parse(p) for p in anchor) if anchor else None,
        )
    cusp_dict = tuple(
        (Cusp.parse(k), RatPoint.parse(v))
        for k, v in rec.get("cusp_to_critical_value", {}).items())
    return SurfaceDesc(
        name=rec["name"],
        fibers=fibers,
        mw_torsion_order=int(rec["mw_torsion_order"]),
        picard_rank=int(rec["picard_rank"]),
        tuple_ref=tuple_ref,
        cusp_dictionary=cusp_dict,
    )


def load_catalog(path: str | Path | None = None) -> dict[str, SurfaceDesc]:
    data = json.loads(_catalog_text(path))
    return {rec["name"]: surface_from_record(rec) for rec in data["surfaces"]}


BEAUVILLE_X16 = load_catalog()["X1_6"]


def check_surface(s: SurfaceDesc) -> list[str]:
    """Consistency problems of a descriptor; empty when it is sound."""
    problems = []
    if euler_char(s) != 12:
        problems.append(f"Euler number {euler_char(s)} != 12 for a rational surface")
    if s.tuple_ref is not None:
        rep = validate_tuple(s.tuple_ref)
        problems.extend(f"monodromy: {v}" for v in rep.violations)
        if rep.valid:
            if s.tuple_ref.anchor is not None:
                for p, w in zip(s.tuple_ref.anchor, s.tuple_ref.widths()):
                    if s.fiber_type(p) != w:
                        problems.append(
                            f"monodromy width {w} at {p} but fiber type is I_{s.fiber_type(p)}")
            elif sorted(rep.width_multiset) != sorted(b for _, b in s.fibers):
                problems.append("monodromy widths do not match fiber types")
    return problems
