import itertools
import random

import pytest
import sympy

from lagsphere.certificates import (
    ADMISSIBLE_WIDTHS, CertificateError, EssentialityCertificate, Verdict, all_certificates,
    essentiality_certificate, expected_lower_left_residue, intersection_pairing, lower_left,
    nodal_obstruction, pairing_via_form, random_bounded_member, random_word_member,
    residue_invariance_check, sample_conjugators, twist_witness,
)
from lagsphere.congruence import NotInGammaError, is_member
from lagsphere.monodromy import M1, M2, M3, M6, MONODROMY_BY_WIDTH
from lagsphere.sl2_arith import S, T, UniMat, conjugate, parabolic_width_class, symplectic_pairing


def test_lower_left_values():
    assert [lower_left(MONODROMY_BY_WIDTH[b]) for b in (2, 3, 6)] == [-18, -12, -6]
    assert lower_left(M1) == 0
    assert {b: expected_lower_left_residue(b) for b in (1, 2, 3, 6)} == {1: 0, 2: 18, 3: 24, 6: 30}


def test_conjugation_by_T():
    assert conjugate(T, M6) == UniMat(-5, 6, -6, 7)
    assert residue_invariance_check(6, T)


def test_residue_check_rejects_nonmember():
    with pytest.raises(NotInGammaError):
        residue_invariance_check(2, S)


def test_pairing_base_values():
    assert intersection_pairing(2, 6) == -12
    assert intersection_pairing(6, 2) == 12
    with pytest.raises(CertificateError):
        intersection_pairing(3, 3)


@pytest.mark.parametrize("b, bp", [(b, bp) for b in ADMISSIBLE_WIDTHS for bp in ADMISSIBLE_WIDTHS if b != bp])
def test_pairing_antisymmetric_at_identity(b, bp):
    assert intersection_pairing(b, bp) == -intersection_pairing(bp, b)


def test_pairing_via_form_matches_lower_left():
    for m in (M1, M2, M3, M6, conjugate(T, M2)):
        assert pairing_via_form(m) == lower_left(m)


def test_samplers_stay_in_gamma1_6():
    rng = random.Random(5)
    for _ in range(300):
        assert is_member(6, random_word_member(rng))
        assert is_member(6, random_bounded_member(rng))
    assert sample_conjugators(10, 3) == sample_conjugators(10, 3)


def test_residue_invariance_sweep():
    gs = sample_conjugators(1000, seed=11)
    for b in (1, 2, 3, 6):
        assert all(residue_invariance_check(b, g) for g in gs)


def test_sampled_pairing_matches_residue():
    gs, hs = sample_conjugators(300, 1), sample_conjugators(300, 2)
    for b, bp in itertools.permutations(ADMISSIBLE_WIDTHS, 2):
        want = (-36 // b + 36 // bp) % 36
        assert all(intersection_pairing(b, bp, g, h) % 36 == want for g, h in zip(gs, hs))


def test_symbolic_lower_left_identity():
    a, b, c, d, al, ga, k = sympy.symbols("a b c d alpha gamma k")
    g = sympy.Matrix([[a, b], [c, d]])
    m = sympy.Matrix([[1 - k * al * ga, k * al ** 2], [-k * ga ** 2, 1 + k * al * ga]])
    ginv = sympy.Matrix([[d, -b], [-c, a]])  # inverse when ad - bc = 1
    ll = (g * m * ginv)[1, 0]
    ll = sympy.expand(ll.subs(a, (1 + b * c) / d) * d) / d  # impose det = 1
    assert sympy.simplify(ll - (-k * (c * al + d * ga) ** 2)) == 0


def test_residue_invariance_exhaustive_mod36():
    # lower-left of g M g^-1 is -k (c alpha + d gamma)^2; with c = 0, d = 1 mod 6
    # the residue mod 36 only depends on c, d mod 36 and the monodromy parameters
    params = {b: None for b in (1, 2, 3, 6)}
    for b, m in MONODROMY_BY_WIDTH.items():
        k = parabolic_width_class(m)
        for al in range(-10, 11):
            for ga in range(-10, 11):
                if k * al * al == m.b and -k * ga * ga == m.c and -k * al * ga == m.a - 1:
                    params[b] = (al, ga, k)
    assert all(params.values())
    for b, (al, ga, k) in params.items():
        base = (-k * ga * ga) % 36
        for c in range(0, 36, 6):
            for d in range(1, 36, 6):
                assert (-k * (c * al + d * ga) ** 2) % 36 == base


def test_all_certificates_pass():
    certs = all_certificates(samples=200)
    assert len(certs) == 6
    for cert in certs:
        assert cert.passed, cert.failures
        assert cert.residue_mod36 % 6 == 0 and cert.residue_mod36 != 0
    residues = {(c.b, c.b_prime): c.residue_mod36 for c in certs}
    assert residues == {(2, 3): 30, (2, 6): 24, (3, 2): 6, (3, 6): 30, (6, 2): 12, (6, 3): 6}


def test_certificate_equal_widths_rejected():
    with pytest.raises(CertificateError):
        essentiality_certificate(2, 2)


def test_obstruction_verdict():
    rep = nodal_obstruction(essentiality_certificate(2, 6, samples=100))
    assert rep.verdict is Verdict.NODAL_DEGENERATION_IMPOSSIBLE
    assert rep.twist_infinite_order and rep.allowed_monodromy_order == 6
    assert rep.witness["automorphism_order"] == 36
    assert rep.as_dict()["verdict"] == "NodalDegenerationImpossible"


def test_obstruction_inconclusive_on_failed_certificate():
    bad = EssentialityCertificate(2, 6, 0, 0, True, False, 0, True, ["pairing vanishes mod 36"])
    rep = nodal_obstruction(bad)
    assert rep.verdict is Verdict.INCONCLUSIVE


def test_twist_witness():
    for p in (-12, 6, 30):
        ell, v = twist_witness(p)
        assert symplectic_pairing(v, ell) == p
