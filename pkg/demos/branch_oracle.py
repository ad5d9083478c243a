"""Build a polynomial from one of its fractional power series roots and check it.

The root y = t1^2 t2^2 + t1^6 t2^2 with x_i = t_i^8 has 8 conjugates; their
product is a quasi-ordinary polynomial whose characteristic data can be read
both from the series and from the irreducibility test.
"""

from quasiord import analyze
from quasiord import oracle
from quasiord.gadic import approximate_root
from quasiord.polyring import format_ypoly

spec = """
n = 8
# coefficient  p1 p2  (exponents of t1, t2)
1   2 2
1   6 2
"""
branch = oracle.parse_branch_spec(spec)
f = oracle.branch_to_poly(branch)
print("minimal polynomial:", format_ypoly(f))
print("characteristic exponents from the series:",
      [tuple(str(a) for a in v) for v in oracle.characteristic_exponents(branch)])

rep = analyze(f)
print("verdict:", rep.verdict.value)
print("r sequence:", [tuple(str(a) for a in r) for r in rep.r_seq])

# Orders of the approximate roots along the branch agree with r_k.
for k, r_k in enumerate(rep.r_seq, start=1):
    g = approximate_root(f, rep.d_seq[k - 1])
    print(f"order of {format_ypoly(g)} along the branch: {oracle.order_of(g, branch)}  (r_{k} = {r_k})")

# A truncated binomial root, (x1 x2)^(1/4) * (1 + x1^2 x2)^(1/2).
series = oracle.binomial_branch(4, (1, 1), (8, 4), "1/2", truncation=40)
print()
print(oracle.format_branch_spec(series))
print("its polynomial is irreducible:", analyze(oracle.branch_to_poly(series)).irreducible)
