"""Walk through the irreducibility test on three polynomials in y over Q[x1, x2].

The first is irreducible, the second fails because the lattice stops
shrinking, and the third fails because a Newton polygon bends.
"""

from quasiord import analyze
from quasiord.cli import parse_poly
from quasiord.criterion import polygon_to_dict
from quasiord.polyring import format_ypoly

CASES = {
    "irreducible": "y^8 - 2*x1*x2*y^4 + x1^2*x2^2 - x1^3*x2^2",
    "stagnating lattice": "y^8 - 2*x1*x2*y^4 + x1^2*x2^2 - x1^4*x2^2 - x1^5*x2^3",
    "bent polygon": "y^8 - 2*x1*x2*y^4 + x1^3*x2^2 - x1*y^5",
}


def show(label, text):
    f = parse_poly(text)
    rep = analyze(f)
    print(f"== {label}: {text}")
    print(f"   verdict   {rep.verdict.value}")
    print(f"   D         {rep.D_seq}")
    print(f"   d         {rep.d_seq}")
    print(f"   r         {[tuple(str(a) for a in r) for r in rep.r_seq]}")
    for g in rep.approximate_roots:
        print(f"   root      {format_ypoly(g)}")
    for k, p in rep.polygons:
        pts = polygon_to_dict(k, p)["points"]
        print(f"   polygon {k} with {len(pts)} points")
    if rep.reason is not None:
        print(f"   stopped at step {rep.reason.step}: {rep.reason.kind.value}")
    if rep.char_data is not None:
        print(f"   m         {[tuple(str(a) for a in m) for m in rep.char_data.m_seq]}")
    print()


if __name__ == "__main__":
    for label, text in CASES.items():
        show(label, text)
