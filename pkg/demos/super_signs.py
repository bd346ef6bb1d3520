"""
Where the symmetry enters: the C2-graded monoid k[t]/(t^2 - 1) on the
category with objects e, g and s_{g,g} = +1 or -1.

    python3 demos/super_signs.py
"""

from functorhh import fixtures as fx
from functorhh.hochschild import HochschildComplex, commutant, hh_compute
from functorhh.monoids import opposite_monoid
from functorhh.products import cup_product

for sign in (False, True):
    A = fx.graded_monoid(None, sign)
    label = "s_{g,g} = -1" if sign else "s_{g,g} = +1"
    print(label)
    print("  commutant dims:", {x: commutant(A, None, x).dim for x in A.category.objects})
    print("  HH^0..2:", hh_compute(A, None, 2).dims)
    print("  opposite product at (g,g):", opposite_monoid(A).product[("g", "g")].tolist())

# The cup product of two degree-one cochains at g carries the sign on the (g,g) block.
A = fx.graded_monoid(None, True)
hc = HochschildComplex(A)
f = hc.cochain_from_coordinates(1, "g", [1, 2])
g = hc.cochain_from_coordinates(1, "g", [3, 5])
p = cup_product(f, g)
for Z in p.space.layout.tuples:
    print(f"  (f cup g) on {Z}: {p.block(Z)[0, 0]}")
