"""
The functorial pipeline against the classical Hochschild complex
Hom(A^n, M), on named and seed-fixed random algebras.

    python3 demos/oracle_crosscheck.py
"""

from functorhh.linalg import Field
from functorhh.oracle import crosscheck, dual_numbers, group_algebra_c2, matrix_algebra, random_algebra

cases = [dual_numbers(Field()), dual_numbers(Field(2)), group_algebra_c2(Field(2)), matrix_algebra(Field(), 2)]
cases += [random_algebra(seed, f) for seed, f in enumerate([Field(), Field(2), Field(3), Field(), Field(5)])]
for alg in cases:
    print(f"{alg.name or 'algebra'} (dim {alg.dim}) over {alg.field}: {crosscheck(alg, 3)}")
