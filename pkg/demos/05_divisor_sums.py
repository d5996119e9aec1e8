"""The arithmetic consequence: a divisor-sum convolution.

Comparing q-coefficients of the cubic theta relations yields

    sigma(3n+2) = 3 * sum_k delta(3k+1) delta(3(n-k)+1)

where delta counts divisors 1 mod 3 minus divisors 2 mod 3.
"""

from theta5 import delta, sigma, verify_sigma_convolution

print("n   sigma(3n+2)   3*convolution")
for n in range(8):
    conv = 3 * sum(delta(3 * k + 1) * delta(3 * (n - k) + 1)
                   for k in range(n + 1))
    print(f"{n}   {sigma(3*n+2):11d}   {conv:13d}")

rep = verify_sigma_convolution(500)
print(f"\nchecked n <= {rep.n_max}: "
      f"{'all agree' if rep.passed else f'{len(rep.failures)} failures'}")
