"""Reduced polynomials Z_{m,k} from the diophantine enumerator.

Run:  python demos/01_reduced_polynomials.py
"""
from adomianpoly import closed_form, count, enumerate_solutions, instantiate, reduced_polynomial

# Each monomial of Z_{m,k} is one solution (n_1, n_2, ...) of
#   n_1 + n_2 + ... = k   and   n_1 + 2 n_2 + ... = m.
for v in enumerate_solutions(7, 3):
    print(f"{str(v):24s} partition {v.partition()}")

print()
print("Z_{7,3} =", reduced_polynomial(7, 3))

# The closed form for j = m - k = 5 holds for any m once negative powers
# of u1 are dropped.  At m = 7 only three terms survive.
template = closed_form(5)
print("Z_{m,m-5} template has", len(template.terms), "terms")
print("instantiated at m=7:", instantiate(template, 7))
print("enumerated Z_{7,2}: ", reduced_polynomial(7, 2))

# No closed form is tabulated for j = 6, but the term count settles at 11.
print("count(m, m-6) for m = 7..16:", [count(m, m - 6) for m in range(7, 17)])
