"""
Intersection certificates for the Lagrangian spheres and the resulting
obstruction to nodal degenerations.

The pairing of the two spheres reduces to lower-left entries of conjugated
local monodromies, and those are invariant mod 36 under conjugation by
Gamma_1(6).  Everything is exact integer arithmetic; randomness only picks
which conjugators get sampled.
"""

from __future__ import annotations

import enum
import random
from dataclasses import asdict, dataclass, field

from .congruence import ext_gcd, generator_L, is_member, require_member
from .monodromy import MONODROMY_BY_WIDTH
from .schoen_calculus import automorphism_group, degeneration_bound
from .sl2_arith import (
    IDENTITY, T, LatticeVec, UniMat, compose, conjugate, invert, max_finite_order,
    symplectic_pairing, transvection_apply,
)
from .surfaces import BEAUVILLE_X16

LEVEL = 6
MODULUS = 36
ADMISSIBLE_WIDTHS = (2, 3, 6)
DEFAULT_SAMPLES = 1000
DEFAULT_SEED = 0
MAX_WORD_LENGTH = 12
E1 = LatticeVec(1, 0)


class CertificateError(ValueError):
    pass


def lower_left(m: UniMat) -> int:
    return m.c


def expected_lower_left_residue(b: int, modulus: int = MODULUS) -> int:
    return (-MODULUS // b) % modulus


def _monodromy(b: int) -> UniMat:
    try:
        return MONODROMY_BY_WIDTH[b]
    except KeyError:
        raise CertificateError(f"no local monodromy of width {b}") from None


def residue_invariance_check(b: int, g: UniMat, modulus: int = MODULUS) -> bool:
    """lower_left(g M_b g^-1) == lower_left(M_b) mod `modulus`, for g in Gamma_1(6)."""
    require_member(LEVEL, g)
    m = _monodromy(b)
    return (lower_left(conjugate(g, m)) - lower_left(m)) % modulus == 0


def intersection_pairing(b: int, b_prime: int, g: UniMat = IDENTITY, h: UniMat = IDENTITY) -> int:
    """e1 . g M_b g^-1 e1  +  e1 . h^-1 M_b'^-1 h e1 under the symplectic form."""
    if b == b_prime:
        raise CertificateError("the two fibers must have different types (b != b')")
    for w in (b, b_prime):
        if w not in ADMISSIBLE_WIDTHS:
            raise CertificateError(f"width {w} not in {ADMISSIBLE_WIDTHS}")
    require_member(LEVEL, g)
    require_member(LEVEL, h)
    first = conjugate(g, _monodromy(b))
    second = conjugate(invert(h), invert(_monodromy(b_prime)))
    return lower_left(first) + lower_left(second)


def pairing_via_form(m: UniMat, v: LatticeVec = E1) -> int:
    """v . (m v) for the standard symplectic form; equals lower_left(m) at v = e1."""
    mv = LatticeVec(m.a * v.x + m.b * v.y, m.c * v.x + m.d * v.y)
    return symplectic_pairing(v, mv)


# ---------------------------------------------------------------------------
# conjugator sampling

def random_word_member(rng: random.Random, max_len: int = MAX_WORD_LENGTH) -> UniMat:
    """Random word in T^{+-1}, L^{+-1} with L = [[1, 0], [6, 1]]."""
    L = generator_L(LEVEL)
    letters = (T, invert(T), L, invert(L))
    g = IDENTITY
    for _ in range(rng.randint(0, max_len)):
        g = compose(g, rng.choice(letters))
    return g


def random_bounded_member(rng: random.Random, bound: int = 10 ** 4) -> UniMat:
    """Rejection-sample a bottom row, complete it to det 1, keep it if in Gamma_1(6)."""
    while True:
        c = rng.randint(-bound, bound)
        d = rng.randint(-bound, bound)
        g_, s, t = ext_gcd(d, c)
        if g_ != 1:
            continue
        # s d + t c = 1, so a = s, b = -t; shifting by the bottom row keeps det 1
        shift = rng.randint(-3, 3)
        g = UniMat(s + shift * c, -t + shift * d, c, d)
        if is_member(LEVEL, g):
            return g


def sample_conjugators(n: int, seed: int = DEFAULT_SEED) -> list[UniMat]:
    """n members of Gamma_1(6), alternating the two samplers."""
    rng = random.Random(seed)
    out = []
    for i in range(n):
        out.append(random_word_member(rng) if i % 2 == 0 else random_bounded_member(rng))
    return out


# ---------------------------------------------------------------------------
# certificates

@dataclass
class EssentialityCertificate:
    b: int
    b_prime: int
    residue_mod36: int
    base_value: int
    is_multiple_of_6: bool
    is_nonzero_mod36: bool
    sampled_conjugators: int
    residues_stable: bool = True
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures and self.is_multiple_of_6 and self.is_nonzero_mod36 \
            and self.residues_stable

    def as_dict(self) -> dict:
        d = asdict(self)
        d["passed"] = self.passed
        return d


def essentiality_certificate(b: int, b_prime: int, samples: int = DEFAULT_SAMPLES,
                             seed: int = DEFAULT_SEED) -> EssentialityCertificate:
    if b == b_prime:
        raise CertificateError("the two fibers must have different types (b != b')")
    base = intersection_pairing(b, b_prime)
    residue = base % MODULUS
    failures = []
    expected = (-MODULUS // b + MODULUS // b_prime) % MODULUS
    if residue != expected:
        failures.append(f"residue {residue} != -36/b + 36/b' = {expected} mod 36")
    mult6 = residue % 6 == 0
    nonzero = residue != 0
    if not mult6:
        failures.append("pairing is not a multiple of 6")
    if not nonzero:
        failures.append("pairing vanishes mod 36")
    gs = sample_conjugators(samples, seed)
    hs = sample_conjugators(samples, seed + 1)
    stable = True
    for g, h in zip(gs, hs):
        if intersection_pairing(b, b_prime, g, h) % MODULUS != residue:
            stable = False
            failures.append(f"residue changed under conjugation by {g!r}, {h!r}")
            break
    return EssentialityCertificate(b, b_prime, residue, base, mult6, nonzero,
                                   len(gs), stable, failures)


def all_certificates(samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED):
    return [essentiality_certificate(b, bp, samples, seed)
            for b in ADMISSIBLE_WIDTHS for bp in ADMISSIBLE_WIDTHS if b != bp]


class Verdict(str, enum.Enum):
    NODAL_DEGENERATION_IMPOSSIBLE = "NodalDegenerationImpossible"
    INCONCLUSIVE = "Inconclusive"


@dataclass
class ObstructionReport:
    certificate: EssentialityCertificate
    twist_infinite_order: bool
    allowed_monodromy_order: int
    verdict: Verdict
    witness: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "certificate": self.certificate.as_dict(),
            "twist_infinite_order": self.twist_infinite_order,
            "allowed_monodromy_order": self.allowed_monodromy_order,
            "verdict": self.verdict.value,
            "witness": self.witness,
        }


def twist_witness(pairing: int) -> tuple[LatticeVec, LatticeVec]:
    """Vectors ell, v of the rank-2 lattice H_3 with <v, ell> = pairing.

    ell stands for [L] and v for [L'].  Only the value of the pairing
    enters the displacement of the twist, so a model pair suffices.
    """
    ell = LatticeVec(1, 0)
    v = LatticeVec(0, -pairing)
    assert symplectic_pairing(v, ell) == pairing
    return ell, v


def nodal_obstruction(cert: EssentialityCertificate) -> ObstructionReport:
    aut = automorphism_group(BEAUVILLE_X16)
    allowed = degeneration_bound(aut)
    if not cert.passed:
        return ObstructionReport(cert, False, allowed, Verdict.INCONCLUSIVE,
                                 {"reason": "certificate failed"})
    ell, v = twist_witness(cert.base_value)
    # displacement of the k-th twist is k <v, ell> ell, nonzero for k != 0
    horizon = 2 * max_finite_order()
    moved = all(transvection_apply(ell, k, v) != v
                for k in range(-horizon, horizon + 1) if k != 0)
    infinite = moved and symplectic_pairing(v, ell) != 0 and ell != LatticeVec(0, 0)
    verdict = (Verdict.NODAL_DEGENERATION_IMPOSSIBLE
               if infinite and aut.is_finite else Verdict.INCONCLUSIVE)
    witness = {
        "ell": list(ell), "v": list(v),
        "pairing": symplectic_pairing(v, ell),
        "checked_powers": horizon,
        "automorphism_group": str(aut),
        "automorphism_order": aut.order,
    }
    return ObstructionReport(cert, infinite, allowed, verdict, witness)
