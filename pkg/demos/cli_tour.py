"""Run the command-line tool on a few inputs and print what it says.

The same commands work from a shell, e.g.
    quasiord analyze "y^4 - x1*x2^3" --format text
"""

import io

from quasiord.cli import run

EX1 = "y^8 - 2*x1*x2*y^4 + x1^2*x2^2 - x1^3*x2^2"

commands = [
    ["analyze", EX1, "--format", "text"],
    ["approx-root", EX1, "-d", "2"],
    ["expand", EX1, "--base", "y^4 - x1*x2"],
    ["gnp", EX1, "-k", "3"],
    ["semigroup", EX1, "--member", "12,8"],
    ["discriminant", "y^3 - x1^2*x2"],
    ["analyze", "y^2 - x1*x2 +"],
    ["oracle-branch", "n = 8\n1 2 2\n1 6 2\n"],
    ["oracle-verify", "n = 8\n1 2 2\n1 6 2\n"],
]

for argv in commands:
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, out, err)
    print("$ quasiord " + " ".join(repr(a) if " " in a or "\n" in a else a for a in argv))
    print(out.getvalue().rstrip() or err.getvalue().rstrip())
    print(f"(exit {code})\n")
