"""Adomian polynomials, rendering, and the Taylor-series cross-check.

Run:  python demos/02_adomian_polynomials.py
"""
import math

from adomianpoly import adomian, generating_series_check, monomial_count, render

for m in range(5):
    print(f"A_{m} = {render(adomian(m))}")

print()
print("monomials in A_m, m = 1..12:", [monomial_count(m) for m in range(1, 13)])
print("A_3 as JSON:", render(adomian(3), "json"))


# F = exp, so every derivative at u0 is exp(u0).
def exp_oracle(k, x):
    return math.exp(x)


u = [0.3, -0.2, 0.5, 0.1, -0.4, 0.25]
print()
print(" m   A_m evaluated        eps^m coefficient of F(u0 + sum eps^i u_i)")
for m, (a, b) in enumerate(generating_series_check(exp_oracle, 0.7, u, 6)):
    print(f"{m:2d}   {a: .15f}   {b: .15f}")
