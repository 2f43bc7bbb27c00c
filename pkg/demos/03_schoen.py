"""Twisted fiber products of the level-6 surface with itself.

For each Moebius map phi permuting {0, 1, inf} the script counts conifold
points, then reads off Hodge numbers and the transition rank r.

Run: python demos/03_schoen.py
"""

from lagsphere.schoen_calculus import (
    automorphism_group, build_fiber_product, conifold_count, degeneration_bound,
    hodge_of_fiber_product, schoen_smoothing_invariants, transition_solve_r,
)
from lagsphere.surfaces import ADMISSIBLE_PHIS, BEAUVILLE_X16, named_moebius

y = schoen_smoothing_invariants()
print(f"smooth fiber product Y: h11 = {y.h11}, h12 = {y.h12}, betti {y.betti}\n")

matched = "matched (b, b')"
print(f"{'phi':9} {matched:28} {'n':>3} {'chi':>4} {'h11':>4} {'h12':>4} {'r':>3}")
for name in ADMISSIBLE_PHIS:
    fp = build_fiber_product(BEAUVILLE_X16, named_moebius(name))
    h = hodge_of_fiber_product(fp)
    td = transition_solve_r(y.betti, h.betti, h.n)
    pairs = ", ".join(f"{m.b}x{m.b_prime}" for m in fp.matched)
    print(f"{name:9} {pairs:28} {conifold_count(fp):>3} {h.chi:>4} {h.h11:>4} {h.h12:>4} {td.r:>3}")

aut = automorphism_group(BEAUVILLE_X16)
print(f"\nAut(Xhat) = {aut}, order {aut.order}; "
      f"finite monodromy of a degeneration has order <= {degeneration_bound(aut)}")
