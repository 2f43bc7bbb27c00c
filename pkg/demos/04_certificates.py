"""Why the two Lagrangian spheres must intersect, and what that rules out.

Run: python demos/04_certificates.py
"""

from lagsphere import certificates as ct
from lagsphere.sl2_arith import T, conjugate
from lagsphere.monodromy import M6

# Conjugating by Gamma_1(6) moves the lower-left entry, but only by multiples of 36.
g = T
print("T M6 T^-1 =", conjugate(g, M6).rows(), "lower-left", ct.lower_left(conjugate(g, M6)))
for b in (2, 3, 6):
    print(f"b = {b}: lower-left {ct.lower_left(ct.MONODROMY_BY_WIDTH[b])}, "
          f"residue mod 36 {ct.expected_lower_left_residue(b)}")

print("\ncertificates (1000 sampled conjugator pairs each):")
for cert in ct.all_certificates():
    print(f"  (b, b') = ({cert.b}, {cert.b_prime}): base {cert.base_value:>4}, "
          f"residue {cert.residue_mod36:>2}, stable {cert.residues_stable}")

rep = ct.nodal_obstruction(ct.essentiality_certificate(2, 6))
print("\ntwist witness:", rep.witness)
print("verdict:", rep.verdict.value)
