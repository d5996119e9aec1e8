"""Rediscovering relations numerically, and eliminating with resultants.

The space of degree-N/2 theta products with fixed characteristics is finite
dimensional, so sampled value vectors must be linearly dependent; the SVD
nullspace of a sample matrix recovers the relation coefficients.  Resultants
then eliminate a shared theta ratio between two quadratics.
"""

from fractions import Fraction

from theta5 import (Argument, Characteristic, ThetaFactor, discover_relations,
                    resultant_2x2, sample_tau, sample_zeta, shared_root_ratio,
                    theta_quadratics)

C = Characteristic.of
eps = Fraction(1, 5)
slots = [(1, 3), (3, 9), (9, 7), (7, 1)]
monomials = [[ThetaFactor(C(eps, Fraction(a, 5)), 2, Argument.SYMBOLIC_ZETA),
              ThetaFactor(C(eps, Fraction(b, 5)), 1, Argument.SYMBOLIC_ZETA)]
             for a, b in slots]

tau = sample_tau(3, 1)[0]
rel = discover_relations(monomials, tau, 9)
print(f"four monomials theta^2[1/5;a/5] theta[1/5;b/5](zeta) at tau={tau:.4f}")
print(f"sample matrix rank {len(monomials) - rel.nullity}, "
      f"nullity {rel.nullity}")
print("relation coefficients (normalized):")
for c in rel.coefficients:
    print(f"  {c:+.9f}")

print("\ntwo quadratics sharing the root theta[1;1/5]/theta[1;3/5]:")
z, w = sample_zeta(3, 2)
fq, gq = theta_quadratics(tau, z, w)
x = shared_root_ratio(tau)
scale = max(abs(c) for c in (*fq, *gq))
print(f"  f(root) = {abs(fq[0]*x*x + fq[1]*x + fq[2]):.2e}")
print(f"  g(root) = {abs(gq[0]*x*x + gq[1]*x + gq[2]):.2e}")
print(f"  |Res(f,g)| / scale^4 = {abs(resultant_2x2(fq, gq))/scale**4:.2e}")
