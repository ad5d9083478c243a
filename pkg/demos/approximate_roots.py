"""Approximate roots: the unique monic g of degree n/d with deg(f - g^d) < n - n/d."""


from quasiord.cli import parse_poly
from quasiord.gadic import approximate_root, approximate_root_by_iteration, g_adic, tschirnhausen
from quasiord.polyring import format_ypoly

f = parse_poly("y^8 - 2*x1*x2*y^4 + x1^2*x2^2 - x1^3*x2^2")

for d in (1, 2, 4, 8):
    g = approximate_root(f, d)
    rest = f - g ** d
    print(f"d = {d}: root {format_ypoly(g)}")
    print(f"       deg(f - g^{d}) = {rest.degree if rest else '-inf'} < {f.degree - f.degree // d}")

# The Tschirnhausen step fixes the root and converges to it from any start.
g = approximate_root(f, 4)
assert tschirnhausen(f, g) == g
assert approximate_root_by_iteration(f, 4) == g

# Expansion in powers of the degree-2 root, e.g. f = g^4 + a_1 g^3 + ... + a_4.
exp = g_adic(f, g)
for i in range(exp.d + 1):
    print(f"a_{i} = {format_ypoly(exp.a(i))}")
assert exp.reconstruct() == f

# Roots with rational coefficients.
h = parse_poly("y^6 + 3*x1*y^5 + x1^2*y^3 - 7/2*x1^3")
print("cube root of", format_ypoly(h), "is", format_ypoly(approximate_root(h, 3)))
