"""
Separability witnesses in (A (x) A)(1), found by solving a linear system,
and their transport along a surjective monoid morphism.

    python3 demos/separability.py
"""

from functorhh import fixtures as fx
from functorhh.day import DayCache, separability_witness, transport_separability
from functorhh.hochschild import hh_compute
from functorhh.linalg import Field
from functorhh.monoids import validate_monoid_morphism

QQ = Field()

for name, A in [("M2(Q)", fx.matrix_monoid()), ("Q[C2]", fx.group_algebra_monoid()),
                ("Q[x]/(x^2)", fx.dual_numbers_monoid()), ("super-graded C2", fx.graded_monoid(None, True))]:
    cache = DayCache(A)
    w = separability_witness(A, cache)
    one = A.category.unit
    print(f"{name}: (A(x)A)(1) has dim {cache[one].dim};", end=" ")
    if w is None:
        print("no witness")
    else:
        print("xi =", [str(v) for v in w.xi])
    # a witness forces HH^n = 0 for n > 0
    print("   HH:", hh_compute(A, None, 2).dims)

# The augmentation Q[C2] -> Q pushes 1/2 (1(x)1 + g(x)g) to 1(x)1.
B, k = fx.group_algebra_monoid(), fx.ground_monoid()
aug = validate_monoid_morphism(B, k, {"1": QQ.from_rows([[1, 1]])})
print("transported witness for Q:", transport_separability(aug, separability_witness(B).xi))
