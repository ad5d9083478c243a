"""With one x variable, compare the test with a Newton-Puiseux irreducibility check."""


from quasiord import analyze
from quasiord.cli import parse_poly
from quasiord.oracle import newton_puiseux_irreducible_e1
from quasiord.polyring import format_ypoly

curves = [
    "y^2 - x^3",
    "y^4 - 2*x^3*y^2 - 4*x^5*y + x^6 - x^7",
    "y^4 - 2*x^3*y^2 + x^6 - x^7",
    "y^6 - x^4",
    "y^3 - x^2 - x^5*y",
]

for text in curves:
    f = parse_poly(text.replace("x", "x1"))
    ours = analyze(f).irreducible
    classical = newton_puiseux_irreducible_e1(f)
    flag = "ok" if ours == classical else "MISMATCH"
    print(f"{format_ypoly(f):45s} irreducible={ours!s:5s} classical={classical!s:5s} {flag}")
