"""
Hochschild cohomology of k[x]/(x^2), seen as a monoid on the one-object
category, and what its low-degree classes mean.

    python3 demos/dual_numbers.py
"""

from functorhh import fixtures as fx
from functorhh.extensions import extension_equivalence, extension_from_cocycle, zero_cocycle
from functorhh.hochschild import HochschildComplex, cohomology_group, derivation_spaces, hh_compute
from functorhh.linalg import Field
from functorhh.products import cup_product

for field in (Field(), Field(2)):
    A = fx.dual_numbers_monoid(field)
    rep = hh_compute(A, None, max_degree=4)
    print(f"HH^0..4 of k[x]/(x^2) over {field}: {rep.dims['1']}")

# Over Q the single class in degree one is the Euler derivation x -> x.
A = fx.dual_numbers_monoid()
der, inn, hh1 = derivation_spaces(A, None, "1").dims
print(f"Der = {der}, Inn = {inn}, HH^1 = {hh1}")

# A 2-cocycle gives a square-zero extension; the nonzero class does not split.
hc = HochschildComplex(A)
rep2 = cohomology_group(hc, 2, "1").representatives[0]
f = hc.cochain_from_coordinates(2, "1", rep2)
E = extension_from_cocycle(f)
E0 = extension_from_cocycle(zero_cocycle(hc, "1"))
print("E_f values:", dict(E.total.functor.dims), "unit:", [str(v) for v in E.total.unit])
print("E_f equivalent to the semidirect product:", extension_equivalence(E, E0, hc, "1") is not None)

# In characteristic 2 the square of the degree-one class survives.
A2 = fx.dual_numbers_monoid(Field(2))
h2 = HochschildComplex(A2)
H2 = cohomology_group(h2, 2, "1")
for r in cohomology_group(h2, 1, "1").representatives:
    u = h2.cochain_from_coordinates(1, "1", r)
    print("class of u cup u over GF(2):", [int(v) for v in H2.coordinates(cup_product(u, u).coordinates())])
