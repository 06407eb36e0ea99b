"""The rotation of the projective line, step by step.

A diagonal automorphism with eigenvalues (q, 1) fixes the two coordinate
points.  For the line bundle O(n) the fixed-point formula says that the
trace of the action on cohomology equals a sum of two local terms.  This
script walks through both sides for a range of twists.
"""

from lefschetz import (BundleSpec, ProjScenario, RationalFunction, ab_rhs,
                       cohomology_action, euler_trace, fixed_points,
                       lambda_x, lefschetz_lhs, local_term, rf_equal,
                       verify_identity)

q = RationalFunction.variable("q")
sc = ProjScenario(1, [q, 1])

# The two fixed points and their local weights 1/det(1 - d_x f).
print("fixed point data:")
for x in fixed_points(sc):
    print(f"  point e_{x.index}: tangent eigenvalues "
          f"{[str(t) for t in x.tangent_eigenvalues]}, "
          f"lambda = {lambda_x(sc, x)}")
print()

# Positive twists: H^0 is spanned by the monomials of degree n, and the
# trace of the action is the geometric sum 1 + q + ... + q^n.
for n in [0, 1, 2, 3, 5]:
    action = cohomology_action(sc, n)
    lhs = euler_trace(action)
    rhs = ab_rhs(sc, BundleSpec.line(n))
    print(f"O({n}):  sections trace = {lhs}")
    for x in fixed_points(sc):
        print(f"         local term at e_{x.index}: "
              f"{local_term(sc, BundleSpec.line(n), x)}")
    assert rf_equal(lhs, rhs)
    closed = (q ** (n + 1) - 1) / (q - 1)
    assert rf_equal(lhs, closed)
    print(f"         both sides equal (q^{n + 1} - 1)/(q - 1)")
print()

# O(-1) has no cohomology at all, yet the two local terms still cancel.
r = verify_identity(sc, BundleSpec.line(-1))
print(f"O(-1): lhs = {r.lhs}, rhs = {r.rhs}  (acyclic, both vanish)")
print()

# Deep negative twists live in H^1; the trace picks up a sign.
for n in [-2, -3, -5]:
    r = verify_identity(sc, BundleSpec.line(n))
    print(f"O({n}): lhs = {r.lhs}")
    assert r.verdict == "equal"
print()

# If two eigenvalues coincide the fixed locus is not isolated and the
# right-hand side is undefined; the verdict records this.
degenerate = ProjScenario(1, [q, q])
r = verify_identity(degenerate, BundleSpec.line(2))
print(f"eigenvalues (q, q): verdict = {r.verdict}")
