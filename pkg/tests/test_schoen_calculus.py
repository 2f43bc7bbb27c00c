import itertools

import pytest

from lagsphere.schoen_calculus import (
    AbelianGroup, AutomorphismArgumentError, IdentityPhiError, TransitionInconsistency,
    alternating_sum, automorphism_group, build_fiber_product, conifold_count,
    degeneration_bound, euler_char_singular, hodge_of_fiber_product, hodge_of_resolution,
    schoen_smoothing_invariants, transition_solve_r,
)
from lagsphere.surfaces import (
    ADMISSIBLE_PHIS, BEAUVILLE_X16, INFINITY, MOEBIUS_IDENTITY, ONE, ZERO, RatPoint,
    SurfaceDesc, named_moebius,
)

FIBERS = {INFINITY: 6, ZERO: 3, ONE: 2}


def brute_force_n(images):
    """Oracle: sum over t in {inf, 0, 1} of b(t) * b(phi^-1(t)) from the permutation table."""
    inverse = {v: k for k, v in images.items()}
    return sum(FIBERS[t] * FIBERS[inverse[t]] for t in FIBERS)


def fp(name):
    return build_fiber_product(BEAUVILLE_X16, named_moebius(name))


def test_three_cycle_matching():
    f = fp("cycle")
    pairs = {(m.b, m.b_prime) for m in f.matched}
    assert pairs == {(6, 2), (3, 6), (2, 3)}
    assert f.unmatched_critical[0] == RatPoint(-8, 1)
    assert set(f.unmatched_critical) == {RatPoint(-8, 1), RatPoint(1, 9)}


def test_swap_inf0_has_2x2():
    f = fp("swap0inf")
    assert {m.t: (m.b, m.b_prime) for m in f.matched}[ONE] == (2, 2)


def test_swap01_no_flags():
    f = fp("swap01")
    assert f.flags == []
    assert all(m.b > 1 and m.b_prime > 1 for m in f.matched)


@pytest.mark.parametrize("name, n", [("cycle", 36), ("cycle2", 36), ("swap1inf", 33),
                                     ("swap0inf", 40), ("swap01", 48)])
def test_conifold_counts(name, n):
    from lagsphere.surfaces import PERMUTATIONS
    assert brute_force_n(PERMUTATIONS[name]) == n
    assert conifold_count(fp(name)) == n


def test_counts_over_all_permutations():
    counts = {conifold_count(fp(p)) for p in ADMISSIBLE_PHIS}
    assert counts == {33, 36, 40, 48}
    assert conifold_count(fp("cycle")) == conifold_count(fp("cycle2")) == 36


def test_identity_rejected():
    with pytest.raises(IdentityPhiError):
        build_fiber_product(BEAUVILLE_X16, MOEBIUS_IDENTITY)


@pytest.mark.parametrize("name", ADMISSIBLE_PHIS)
def test_five_critical_values(name):
    f = fp(name)
    assert {m.t for m in f.matched} == {INFINITY, ZERO, ONE}
    assert len(f.matched) + len(f.unmatched_critical) == 5
    assert f.flags == []


@pytest.mark.parametrize("n, chi", [(36, 72), (33, 66), (40, 80), (48, 96)])
def test_hodge_of_resolution(n, chi):
    h = hodge_of_resolution(n)
    assert (h.chi, h.h11, h.h12, h.betti[3]) == (chi, n, 0, 2)
    assert alternating_sum(h.betti) == h.chi


def test_hodge_bijection_with_counts():
    pairs = {(h.n, h.chi) for h in (hodge_of_fiber_product(fp(p)) for p in ADMISSIBLE_PHIS)}
    assert pairs == {(33, 66), (36, 72), (40, 80), (48, 96)}
    for p in ADMISSIBLE_PHIS:
        assert euler_char_singular(fp(p)) == conifold_count(fp(p))


def test_schoen_smoothing():
    y = schoen_smoothing_invariants()
    assert y.betti == (1, 0, 19, 40, 19, 0, 1)
    assert (y.chi, y.h11, y.h12) == (0, 19, 19)
    assert alternating_sum(y.betti) == 0


@pytest.mark.parametrize("n", [33, 36, 40, 48])
def test_transition_r(n):
    y = schoen_smoothing_invariants()
    td = transition_solve_r(y.betti, hodge_of_resolution(n).betti, n)
    assert td.r == 19
    assert td.betti_Xhat[2] == y.betti[2] + n - td.r == n
    assert td.r <= y.betti[3] // 2 and n - td.r >= 0


def test_transition_trivial_case():
    b = (1, 0, 5, 8, 5, 0, 1)
    assert transition_solve_r(b, b, 0).r == 0


def test_transition_inconsistency_named():
    y = schoen_smoothing_invariants()
    with pytest.raises(TransitionInconsistency, match="b2"):
        transition_solve_r(y.betti, (1, 0, 30, 2, 30, 0, 1), 36)
    with pytest.raises(TransitionInconsistency, match="even"):
        transition_solve_r(y.betti, (1, 0, 36, 3, 36, 0, 1), 36)


def test_automorphism_group():
    g = automorphism_group(BEAUVILLE_X16)
    assert g.factors == (6, 6) and g.order == 36
    for p in ADMISSIBLE_PHIS:
        assert automorphism_group(fp(p)) == g
    # element orders in (Z/6)^2 by enumeration
    orders = {6 // __import__("math").gcd(6, x, y) for x, y in itertools.product(range(6), repeat=2)}
    assert max(orders) == g.exponent == 6


def test_automorphism_trivial_torsion():
    s = SurfaceDesc("t1", ((INFINITY, 6), (ZERO, 3), (ONE, 2), (RatPoint(2, 1), 1)), 1, 10)
    assert automorphism_group(s).order == 1


def test_automorphism_precondition():
    s = SurfaceDesc("few", ((INFINITY, 6), (ZERO, 6)), 6, 10)
    with pytest.raises(AutomorphismArgumentError, match="inapplicable"):
        automorphism_group(s)


def test_degeneration_bound():
    assert degeneration_bound(AbelianGroup((6, 6))) == 6
    assert degeneration_bound(AbelianGroup((1, 1))) == 1
    assert degeneration_bound(AbelianGroup((7, 5))) == 6
