"""Command-line interface: ``quasiord <command> [options] [EXPR]``.

Polynomials use the variables ``x1..x9`` and ``y``, integer or rational
literals, ``+ - * / ^`` and parentheses.  Multiplication is always explicit.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from . import oracle
from .charseq import ExponentVector, semigroup_membership
from .criterion import Config, FailureKind, InternalError, analyze, polygon_to_dict
from .gadic import G_adic, approximate_root, g_adic, tschirnhausen
from .polyring import (
    ContractError,
    MPoly,
    UndefinedOrderError,
    YPoly,
    discriminant_y,
    format_mpoly,
    format_ypoly,
    monomial_unit_split,
)

MAX_VARS = 9


class ParseError(ValueError):
    def __init__(self, message: str, pos: int, text: str = ""):
        self.pos = pos
        self.text = text
        super().__init__(f"{message} at position {pos}")

    def pointer(self) -> str:
        """The input with a caret under the offending position."""
        return f"{self.text}\n{' ' * self.pos}^"


_TOKEN = re.compile(r"\s*(?:(\d+)|(x\d+|y|[A-Za-z_]\w*)|(\*\*|[-+*/^()]))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        if text[pos:].isspace():
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", start, text)
        kind = "num" if m.group(1) else "name" if m.group(2) else "op"
        tok = m.group(m.lastindex)
        tokens.append((kind, "^" if tok == "**" else tok, m.start(m.lastindex)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, e: int):
        self.text = text
        self.e = e
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, tok[2], self.text)

    def parse(self) -> YPoly:
        if self.peek()[0] == "end":
            self.fail("empty expression")
        p = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected {self.peek()[1]!r}")
        return p

    def expr(self) -> YPoly:
        p = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> YPoly:
        p = self.unary()
        while self.peek()[1] in ("*", "/"):
            op = self.take()
            q = self.unary()
            if op[1] == "*":
                p = p * q
            else:
                if q.degree > 0 or q.coeff(0).total_degree() > 0 or not q:
                    self.fail("division is only allowed by a nonzero constant", op)
                p = p / q.coeff(0).constant_term()
        if self.peek()[0] in ("num", "name") or self.peek()[1] == "(":
            self.fail("implicit multiplication is not allowed; use '*'")
        return p

    def unary(self) -> YPoly:
        if self.peek()[1] == "-":
            self.take()
            return -self.unary()
        if self.peek()[1] == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> YPoly:
        base = self.atom()
        if self.peek()[1] == "^":
            self.take()
            tok = self.take()
            if tok[0] != "num":
                self.fail("exponent must be a nonnegative integer literal", tok)
            base = base ** int(tok[1])
        return base

    def atom(self) -> YPoly:
        kind, val, pos = tok = self.take()
        if kind == "num":
            return YPoly.from_mpoly(MPoly.constant(Fraction(int(val)), self.e))
        if kind == "name":
            if val == "y":
                return YPoly.y(self.e)
            m = re.fullmatch(r"x([1-9])", val)
            if not m or int(m.group(1)) > self.e:
                self.fail(f"unknown variable {val!r} (expected y or x1..x{self.e})", tok)
            return YPoly.from_mpoly(MPoly.var(int(m.group(1)) - 1, self.e))
        if val == "(":
            p = self.expr()
            if self.peek()[1] != ")":
                self.fail("expected ')'")
            self.take()
            return p
        self.fail(f"unexpected {val!r}" if kind != "end" else "unexpected end of input", tok)


def infer_vars(text: str) -> int:
    """Largest ``xi`` index mentioned in ``text`` (at least 1)."""
    found = [int(i) for i in re.findall(r"\bx([1-9])\b", text)]
    return max(found, default=1)


def parse_poly(text: str, e: Optional[int] = None, require_monic: bool = True) -> YPoly:
    """Parse ``text`` into a polynomial in ``y`` over ``Q[x1..xe]``."""
    if e is None:
        e = infer_vars(text)
    if not 1 <= e <= MAX_VARS:
        raise ParseError(f"variable count must be between 1 and {MAX_VARS}", 0, text)
    poly = _Parser(text, e).parse()
    if require_monic and not poly.is_monic():
        raise ParseError("polynomial is not monic in y", 0, text)
    return poly


# -- output helpers --------------------------------------------------------------

def _vec(v) -> List[str]:
    return [str(Fraction(c)) for c in v]


def _emit(doc: Dict[str, Any], fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
        return
    for key in sorted(doc):
        out.write(f"{key}: {_text_value(doc[key])}\n")


def _text_value(v) -> str:
    if isinstance(v, (dict, list)):
        return json.dumps(v, sort_keys=True)
    return "null" if v is None else str(v)


# -- commands --------------------------------------------------------------------

def _config(args) -> Config:
    return Config(strictness=args.strict_order)


def cmd_analyze(args, f: YPoly):
    report = analyze(f, _config(args))
    doc = report.to_dict()
    ambiguous = report.reason is not None and report.reason.kind is FailureKind.AMBIGUOUS_INITIAL_MONOMIAL
    return doc, 2 if ambiguous else 0


def cmd_approx_root(args, f: YPoly):
    if args.d is None:
        raise ContractError("approx-root needs -d")
    g = approximate_root(f, args.d)
    rest = f - g ** args.d
    return {
        "d": args.d,
        "approximate_root": format_ypoly(g),
        "remainder_degree": rest.degree if rest else None,
        "degree_bound": f.degree - f.degree // args.d,
        "tschirnhausen_fixed": tschirnhausen(f, g) == g,
    }, 0


def cmd_expand(args, f: YPoly):
    e = f.nvars
    if args.base:
        bases = [parse_poly(b, e) for b in args.base]
    elif args.d is not None:
        bases = [approximate_root(f, args.d)]
    else:
        raise ContractError("expand needs --base or -d")
    if len(bases) == 1:
        exp = g_adic(f, bases[0])
        return {
            "base": format_ypoly(bases[0]),
            "d": exp.d,
            "coefficients": [format_ypoly(exp.a(i)) for i in range(1, exp.d + 1)],
        }, 0
    sup = G_adic(f, bases)
    return {
        "bases": [format_ypoly(g) for g in bases],
        "bounds": [b for b in sup.bounds],
        "entries": [{"theta": list(theta), "coefficient": format_mpoly(sup.entries[theta])}
                    for theta in sup.support()],
    }, 0


def cmd_gnp(args, f: YPoly):
    report = analyze(f, _config(args))
    polys = [polygon_to_dict(k, p) for k, p in report.polygons if args.k is None or k == args.k]
    if args.k is not None and not polys:
        raise ContractError(f"no polygon was computed at k = {args.k}")
    return {"verdict": report.verdict.value, "polygons": polys}, 0


def cmd_discriminant(args, f: YPoly):
    disc = discriminant_y(f)
    split = monomial_unit_split(disc) if disc else None
    return {
        "discriminant": format_mpoly(disc),
        "monomial_times_unit": split is not None,
        "monomial_exponent": list(split[0]) if split else None,
        "unit_constant": str(split[1].constant_term()) if split else None,
    }, 0


def cmd_semigroup(args, f: YPoly):
    report = analyze(f, _config(args))
    if not report.irreducible:
        return {"verdict": report.verdict.value, "semigroup_generators": None,
                "reason": report.to_dict()["reason"]}, 0
    doc = {"verdict": report.verdict.value,
           "semigroup_generators": [_vec(v) for v in report.semigroup_generators]}
    if args.member:
        v = ExponentVector(Fraction(a) for a in args.member.split(","))
        if len(v) != f.nvars:
            raise ContractError(f"--member needs {f.nvars} comma-separated entries")
        doc["member"] = _vec(v)
        doc["is_member"] = semigroup_membership(report.semigroup_generators, v)
    return doc, 0


def cmd_oracle_branch(args, branch: oracle.BranchSeries):
    bp = oracle.branch_to_poly_detailed(branch)
    exps = oracle.characteristic_exponents(branch)
    return {
        "n": branch.n,
        "truncation": branch.truncation,
        "polynomial": format_ypoly(bp.polynomial),
        "precision": list(bp.precision),
        "quasi_ordinary": oracle.is_quasi_ordinary_branch(branch),
        "characteristic_exponents": [_vec(m) for m in exps],
    }, 0


def cmd_oracle_verify(args, branch: oracle.BranchSeries):
    f = oracle.branch_to_poly(branch)
    report = analyze(f, _config(args))
    checks = []
    if report.irreducible:
        for k, r_k in enumerate(report.r_seq):
            g = approximate_root(f, report.d_seq[k])
            o = oracle.order_of(g, branch)
            checks.append({"k": k + 1, "r_k": _vec(r_k), "oracle_order": None if o is None else _vec(o),
                           "agree": o == r_k})
    ok = report.irreducible and all(c["agree"] for c in checks)
    return {
        "polynomial": format_ypoly(f),
        "verdict": report.verdict.value,
        "order_checks": checks,
        "consistent": ok,
    }, 0


POLY_COMMANDS = {
    "analyze": cmd_analyze,
    "approx-root": cmd_approx_root,
    "expand": cmd_expand,
    "gnp": cmd_gnp,
    "discriminant": cmd_discriminant,
    "semigroup": cmd_semigroup,
}
BRANCH_COMMANDS = {
    "oracle-branch": cmd_oracle_branch,
    "oracle-verify": cmd_oracle_verify,
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="quasiord",
                                 description="Irreducibility of quasi-ordinary polynomials.")
    ap.add_argument("command", choices=sorted(POLY_COMMANDS) + sorted(BRANCH_COMMANDS))
    ap.add_argument("expr", nargs="?", help="polynomial (or branch spec) text; use --input for files")
    ap.add_argument("--input", metavar="FILE", help="read the input from a UTF-8 file")
    ap.add_argument("--vars", type=int, metavar="E", help="number of x variables (default: inferred)")
    ap.add_argument("--strict-order", choices=("weak", "strong"), default="weak")
    ap.add_argument("--format", choices=("json", "text"), default="json")
    ap.add_argument("--truncation", type=int, metavar="N", help="total-degree bound for branch input")
    ap.add_argument("-d", type=int, help="root index for approx-root / expand")
    ap.add_argument("--base", action="append", help="expansion base (repeat for a G-adic expansion)")
    ap.add_argument("-k", type=int, help="select one polygon index for gnp")
    ap.add_argument("--member", metavar="V", help="comma-separated vector to test for semigroup membership")
    return ap


def _read_input(args) -> str:
    if args.input:
        with open(args.input, encoding="utf-8") as fh:
            return fh.read()
    if args.expr is None:
        raise ContractError("no input: give an expression or --input FILE")
    return args.expr


def _strip_comments(text: str) -> str:
    return " ".join(line.split("#", 1)[0] for line in text.splitlines())


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_intermixed_args(argv)
    try:
        text = _read_input(args)
        if args.command in BRANCH_COMMANDS:
            branch = oracle.parse_branch_spec(text, args.truncation)
            doc, status = BRANCH_COMMANDS[args.command](args, branch)
        else:
            f = parse_poly(_strip_comments(text).strip(), args.vars)
            doc, status = POLY_COMMANDS[args.command](args, f)
    except ParseError as exc:
        err.write(f"parse error: {exc}\n{exc.pointer()}\n")
        return 1
    except (ContractError, UndefinedOrderError, oracle.TruncationError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return 1
    except (InternalError, ArithmeticError) as exc:
        err.write(f"internal error: {exc}\n")
        return 2
    _emit(doc, args.format, out)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
