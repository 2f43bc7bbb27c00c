"""Cosets and cusps of Gamma_1(N), with N = 6 in focus.

Run: python demos/02_gamma1_6.py
"""

from lagsphere import congruence as cg

print("index of Gamma_1(N) in PSL(2, Z):", {n: cg.psl_index(n) for n in range(1, 13)})

table = cg.LISTED_TABLE
print("12 listed representatives form a transversal:", cg.verify_transversal(table))
for g, label in zip(table.representatives, table.labels):
    print(f"  {g.rows()}  ->  first column mod 6, up to sign: {label}")

# A duplicated representative is caught and named.
broken = cg.CosetTable(6, table.representatives[:5] + table.representatives[2:3]
                       + table.representatives[6:])
try:
    cg.check_transversal(broken)
except cg.TransversalError as exc:
    print("broken table:", exc)

print("\ncusps of Gamma_1(6):")
for cusp, width in cg.cusp_classes(6):
    gen = cg.cusp_stabilizer_generator(6, cusp)
    print(f"  {str(cusp):>3}  width {width}  stabilizer {gen.rows()}")

# Level 4 has an irregular cusp: its stabilizer contains only -T^w conjugates.
try:
    cg.cusp_stabilizer_generator(4, cg.Cusp(1, 2))
except cg.IrregularCuspError as exc:
    print("\nlevel 4:", exc)
