"""Theta q-expansions: defining sum, triple product, derivative.

Every series here is exact: coefficients are cyclotomic numbers and
exponents are rationals, truncated at an inclusive x-exponent cutoff.
"""

from fractions import Fraction

from theta5 import (Characteristic, ThetaMode, theta_deriv_series,
                    theta_product_series, theta_series)

C = Characteristic.of

print("theta[0;0] as a series in x = exp(pi i tau):")
print(theta_series(C(0, 0), ThetaMode.CONSTANT, 9).to_text())

print("\ntheta[1/5;3/5] picks up 100th roots of unity and x^(k/100) exponents:")
print(theta_series(C(Fraction(1, 5), Fraction(3, 5)),
                   ThetaMode.CONSTANT, 2).to_text())

print("\nJacobi triple product agrees with the defining sum, exactly:")
char = C(Fraction(3, 5), Fraction(7, 5))
diff = (theta_series(char, ThetaMode.FUNCTION, 6)
        - theta_product_series(char, ThetaMode.FUNCTION, 6))
print(f"  sum - product for theta{char} at cutoff 6 is zero: "
      f"{diff.scrubbed().is_zero()}")

print("\nzeta-derivative series theta'/(2 pi i) of theta[1;1] "
      "(vanishes at zeta=0, so the constant term is gone):")
print(theta_deriv_series(C(1, 1), Fraction(9, 4)).to_text())
