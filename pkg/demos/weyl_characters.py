"""The Weyl character formula as a fixed-point identity.

The fixed points of a maximal-torus action on the flag variety are indexed
by the Weyl group; summing local terms e^{w lam} / prod(1 - e^{-w alpha})
over them reproduces the character of the irreducible representation.  All
computations happen in the exact group algebra of the weight lattice.
"""

from lefschetz import (BundleSpec, ProjScenario, RationalFunction,
                       WeightPolynomial, build_root_system,
                       denominator_product, fixed_point_character_sum,
                       freudenthal_multiplicities, lefschetz_lhs, rf_equal,
                       weyl_character, weyl_denominator, weyl_dimension,
                       weyl_group)

# The denominator identity: the signed exponential sum over the Weyl group
# equals the product over positive roots.
for label in ["A1", "A2", "B2", "G2"]:
    rs = build_root_system(label)
    lhs, rhs = weyl_denominator(rs), denominator_product(rs)
    print(f"{label}: |W| = {len(weyl_group(rs))}, "
          f"denominator identity holds: {lhs == rhs}")
print()

# The adjoint representation of A2 (dimension 8) three ways: character
# formula, fixed-point sum, Freudenthal recursion.
rs = build_root_system("A2")
lam = (1, 1)
chi = weyl_character(rs, lam)
fps = fixed_point_character_sum(rs, lam)
mult = freudenthal_multiplicities(rs, lam)
print(f"A2 highest weight {lam}:")
print(f"  character = {chi}")
print(f"  fixed-point sum agrees: {chi == fps}")
print(f"  Freudenthal multiplicities agree: {chi.terms == mult}")
print(f"  dimension = {chi.coefficient_sum()} "
      f"(product formula: {weyl_dimension(rs, lam)})")
print()

# G2: the 14-dimensional adjoint representation.
rs = build_root_system("G2")
chi = weyl_character(rs, (1, 0))
print(f"G2 (1,0): dimension {chi.coefficient_sum()}, "
      f"fixed-point sum agrees: {chi == fixed_point_character_sum(rs, (1, 0))}")
print()

# Bridge to the projective line: the rank-one character of highest weight n,
# shifted by the global monomial e^{n omega} and written in q = e^{2 omega},
# is the trace on sections of O(n) under the scaling with eigenvalues (q, 1).
rs = build_root_system("A1")
q = RationalFunction.variable("q")
sc = ProjScenario(1, [q, 1])
for n in range(5):
    shifted = weyl_character(rs, (n,)) * WeightPolynomial.exponential((n,))
    total = RationalFunction.const(0)
    for (m,), c in shifted.terms.items():
        total = total + RationalFunction.const(c) * q ** (m // 2)
    sections = lefschetz_lhs(sc, BundleSpec.line(n))
    print(f"n = {n}: character in q = {total}, sections trace = {sections}, "
          f"equal: {rf_equal(total, sections)}")
