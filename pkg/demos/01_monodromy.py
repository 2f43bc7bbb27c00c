"""Local monodromies of the level-6 surface and what they are made of.

Run: python demos/01_monodromy.py
"""

from lagsphere import sl2_arith as sl2
from lagsphere.monodromy import X16_TUPLE, hurwitz_move, validate_tuple

# The four loops around -8, inf, 1, 0 give these matrices.
for point, m in zip(X16_TUPLE.anchor, X16_TUPLE.entries):
    cls = sl2.classify(m)
    print(f"t = {str(point):>3}: {m.rows()}  {cls.kind.value}, width class "
          f"{sl2.parabolic_width_class(m)}, fixed point {sl2.parabolic_fixed_point(m)}")

print("ordered product:", X16_TUPLE.product().rows())

# Braid moves reorder the factorization but keep the product and the widths.
t = hurwitz_move(hurwitz_move(X16_TUPLE, 0), 2, inverse=True)
report = validate_tuple(t)
print("after two Hurwitz moves:", t.widths(), "valid:", report.valid)

# Finite-order elements of SL(2, Z) stop at 6; this caps any finite monodromy.
for n, w in sl2.finite_order_witnesses().items():
    print(f"order {n}: {w.rows()} (trace {w.trace})")
