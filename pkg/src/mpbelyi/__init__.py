"""Exact derivation and certification of genus-1 clean Belyi pairs.

The package re-derives, from an undetermined-coefficients ansatz over
y^2 = quartic, the pair of degree-8 clean Belyi maps whose zero/pole
pattern is (5,3;-7,-1), and independently certifies the closed-form
answer over Q(sqrt(105)).  All load-bearing arithmetic is exact;
floating point enters only at explicitly requested binary precision.
"""

__version__ = "0.1.0"
