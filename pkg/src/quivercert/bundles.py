"""Expression language for tensor constructions on the universal bundles.

Expressions are trees over the leaves U1, U2 (the rank-2 and rank-3
universal bundles) and O(n) (powers of the ample generator of the
Picard group, normalized so that O(-1) = det U1 = det U2), closed under
dual, tensor, direct sum, det, traceless endomorphisms sl, Sym^2 and
Wedge^2, and twisting by O(n).

Two evaluation semantics live elsewhere: one-parameter-subgroup weight
multisets (strata module) and Chern characters (chow module).  Here we
provide the trees, a parser, ranks, and the weight calculus given base
weights for U1 and U2 on a stratum.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class BundleExpr:
    op: str
    args: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if self.op == "sl" and rank_of(self.args[0]) < 1:
            raise ValueError("sl needs an argument of rank at least 1")

    def __str__(self) -> str:
        if self.op in ("U1", "U2"):
            return self.op
        if self.op == "O":
            return f"O({self.args[0]})"
        return f"{self.op}({','.join(str(a) for a in self.args)})"


U1 = BundleExpr("U1")
U2 = BundleExpr("U2")


def O(n: int) -> BundleExpr:  # noqa: E743  (mathematical name)
    return BundleExpr("O", (int(n),))


def _fold(op: str, factors):
    if len(factors) < 2:
        raise ValueError(f"{op} needs at least two operands")
    out = factors[0]
    for f in factors[1:]:
        out = BundleExpr(op, (out, f))
    return out


def tensor(*factors: BundleExpr) -> BundleExpr:
    return _fold("tensor", factors)


def direct_sum(*summands: BundleExpr) -> BundleExpr:
    return _fold("sum", summands)


def dual(e: BundleExpr) -> BundleExpr:
    return BundleExpr("dual", (e,))


def det(e: BundleExpr) -> BundleExpr:
    return BundleExpr("det", (e,))


def sl(e: BundleExpr) -> BundleExpr:
    return BundleExpr("sl", (e,))


def sym2(e: BundleExpr) -> BundleExpr:
    return BundleExpr("sym2", (e,))


def wedge2(e: BundleExpr) -> BundleExpr:
    return BundleExpr("wedge2", (e,))


def twist(e: BundleExpr, n: int) -> BundleExpr:
    """Sugar: twist(e, n) = tensor(e, O(n))."""
    return tensor(e, O(n))


def rank_of(e: BundleExpr) -> int:
    if e.op == "U1":
        return 2
    if e.op == "U2":
        return 3
    if e.op == "O":
        return 1
    if e.op == "dual":
        return rank_of(e.args[0])
    if e.op == "tensor":
        return rank_of(e.args[0]) * rank_of(e.args[1])
    if e.op == "sum":
        return rank_of(e.args[0]) + rank_of(e.args[1])
    if e.op == "det":
        return 1
    if e.op == "sl":
        r = rank_of(e.args[0])
        return r * r - 1
    if e.op == "sym2":
        r = rank_of(e.args[0])
        return r * (r + 1) // 2
    if e.op == "wedge2":
        r = rank_of(e.args[0])
        return r * (r - 1) // 2
    raise ValueError(f"unknown operator {e.op!r}")


@dataclass(frozen=True)
class StratumWeights:
    """Base weights of the universal bundles on one stratum's fixed locus.

    The weight of O(1) is minus the total U1 weight (O(-1) = det U1).
    """

    u1: tuple[int, ...]
    u2: tuple[int, ...]

    @property
    def o1(self) -> int:
        return -sum(self.u1)


def weights_of(e: BundleExpr, base: StratumWeights) -> tuple[int, ...]:
    """Weight multiset of an expression, sorted descending.

    dual negates, tensor adds pairwise, sum unions, det totals;
    sl(e) with weights {w_i} gives {w_i - w_j : i != j} plus rank-1
    zeros; sym2 / wedge2 give {w_i + w_j} over i <= j / i < j.
    """
    ws = _weights(e, base)
    return tuple(sorted(ws, reverse=True))


def _weights(e: BundleExpr, base: StratumWeights) -> list[int]:
    if e.op == "U1":
        return list(base.u1)
    if e.op == "U2":
        return list(base.u2)
    if e.op == "O":
        return [e.args[0] * base.o1]
    if e.op == "dual":
        return [-w for w in _weights(e.args[0], base)]
    if e.op == "tensor":
        left = _weights(e.args[0], base)
        right = _weights(e.args[1], base)
        return [a + b for a in left for b in right]
    if e.op == "sum":
        return _weights(e.args[0], base) + _weights(e.args[1], base)
    if e.op == "det":
        return [sum(_weights(e.args[0], base))]
    if e.op == "sl":
        ws = _weights(e.args[0], base)
        out = [a - b for i, a in enumerate(ws) for j, b in enumerate(ws) if i != j]
        out.extend([0] * (len(ws) - 1))
        return out
    if e.op == "sym2":
        ws = _weights(e.args[0], base)
        return [ws[i] + ws[j] for i in range(len(ws)) for j in range(i, len(ws))]
    if e.op == "wedge2":
        ws = _weights(e.args[0], base)
        return [ws[i] + ws[j] for i in range(len(ws)) for j in range(i + 1, len(ws))]
    raise ValueError(f"unknown operator {e.op!r}")


# -- parser -------------------------------------------------------------------

_FUNCTIONS = {"dual", "tensor", "sum", "det", "sl", "sym2", "wedge2", "twist"}


class ExprSyntaxError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            raise ExprSyntaxError(f"expected {ch!r}", self.pos)
        self.pos += 1

    def name(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (
            self.text[self.pos].isalnum() or self.text[self.pos] == "_"
        ):
            self.pos += 1
        if start == self.pos:
            raise ExprSyntaxError("expected identifier", self.pos)
        return self.text[start:self.pos]

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        if self.peek() in "+-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        token = self.text[start:self.pos]
        try:
            return int(token)
        except ValueError:
            raise ExprSyntaxError("expected integer", start) from None

    def expr(self) -> BundleExpr:
        start = self.pos
        ident = self.name()
        if ident == "U1":
            return U1
        if ident == "U2":
            return U2
        if ident == "O":
            self.expect("(")
            n = self.integer()
            self.expect(")")
            return O(n)
        if ident not in _FUNCTIONS:
            raise ExprSyntaxError(f"unknown identifier {ident!r}", start)
        self.expect("(")
        first = self.expr()
        rest = []
        while self.peek() == ",":
            self.pos += 1
            if ident == "twist" and not rest:
                rest.append(self.integer())
            else:
                rest.append(self.expr())
        self.expect(")")
        args = [first] + rest
        if ident in ("dual", "det", "sl", "sym2", "wedge2"):
            if len(args) != 1:
                raise ExprSyntaxError(f"{ident} takes one argument", start)
            return BundleExpr(ident, tuple(args))
        if ident == "twist":
            if len(args) != 2 or not isinstance(args[1], int):
                raise ExprSyntaxError("twist takes an expression and an integer", start)
            return twist(args[0], args[1])
        if len(args) < 2:
            raise ExprSyntaxError(f"{ident} takes at least two arguments", start)
        return _fold(ident, args)


def parse_expr(text: str) -> BundleExpr:
    """Parse the function-style grammar, e.g. ``tensor(dual(U1),U2)``."""
    p = _Parser(text)
    e = p.expr()
    p.skip_ws()
    if p.pos != len(text):
        raise ExprSyntaxError("trailing input", p.pos)
    return e
