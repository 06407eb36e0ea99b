"""Traces in the discrete kernel 2-category.

Finite sets stand in for schemes, integer matrices of dimensions for
integral-transform kernels, and every coherence isomorphism is an explicit
permutation matrix.  The categorical trace of a lax square is assembled by
pasting evaluation, coevaluation and interchange cells; here we watch it
reproduce elementary linear algebra.
"""

import random

from lefschetz import (FinObj, chern_character, chern_direct,
                       check_triangle_identities, compose_kernels, integrate,
                       lefschetz_discrete, pushforward_kernel, rf_equal,
                       trace_of_kernel)
from lefschetz.linalg import Matrix
from lefschetz.sampling import random_kernel, random_matrix

rng = random.Random(7)

# Trace of a pushforward kernel counts fixed points.
f = [0, 2, 2, 1]
space = trace_of_kernel(pushforward_kernel(f))
print(f"f = {f}: trace dimension = {space.total_dim()} "
      f"(fixed points: {[s for s, v in enumerate(f) if v == s]})")
print()

# One point, one vector space: the Chern character is the matrix trace.
a = random_matrix(rng, 3, 3)
ch = chern_character([3], [a], [0])
print(f"single fiber of dim 3: ch = {ch[0]}")
assert rf_equal(ch[0], a.trace())
print()

# A sheaf on a 4-point set, lax-equivariant along f.  The categorical trace
# lands in the span of the fixed points; its components are the traces of
# the twist at each fixed point, and integrating gives the Lefschetz number
# of the assembled linear map.
dims = [2, 1, 3, 2]
twists = [random_matrix(rng, dims[s], dims[f[s]]) for s in range(4)]
cat = chern_character(dims, twists, f)
direct = chern_direct(dims, twists, f)
print("equivariant sheaf on 4 points:")
for c, d in zip(cat, direct):
    print(f"  categorical component {c}  ==  direct trace {d}")
    assert rf_equal(c, d)

weights = integrate(f)
total = sum((weights[0, j] * c for j, c in enumerate(cat)), start=cat[0] * 0)
lef = lefschetz_discrete(dims, twists, f)
print(f"  integral of ch = {total}, Lefschetz number = {lef}")
assert rf_equal(total, lef)
print()

# Duality is entrywise: every kernel has a dual satisfying both triangle
# identities, verified as honest matrix equations.
for _ in range(3):
    k = random_kernel(rng, FinObj(2), FinObj(3))
    print(f"triangle identities for {k}: {check_triangle_identities(k)}")

# Cyclicity of the trace, at the level of dimensions.
s, t = FinObj(3), FinObj(2)
k, l = random_kernel(rng, s, t), random_kernel(rng, t, s)
lk = trace_of_kernel(compose_kernels(l, k)).total_dim()
kl = trace_of_kernel(compose_kernels(k, l)).total_dim()
print(f"dim Tr(L o K) = {lk} = dim Tr(K o L) = {kl}")
