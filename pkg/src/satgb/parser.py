"""Input-file parser for polynomial systems.

The grammar is deliberately small: one clause per statement, each
terminated by ';'. Powers use '^', multiplication may be implicit.

    spec    := ring order grading? gens
    ring    := "ring" name ("," name)* "over" ("Q" | "Zp" int) ";"
    order   := "order" ("Lex" | "DegLex" | "DegRevLex" | "matrix" rows) ";"
    grading := "grading" rows ";"
    gens    := "gens:" poly ("," poly)* ";"
    rows    := "[" int+ (";" int+)* "]"
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import ModuleVector, RingContext, ring
from .errors import SatGBError
from .fields import QQ, PrimeField
from .grading import Grading, standard_grading
from .ordering import DEGLEX, DEGREVLEX, LEX, OrderSpec


class ParseError(SatGBError):
    def __init__(self, message: str, line: int = 0, col: int = 0):
        super().__init__(f"{line}:{col}: {message}" if line else message)
        self.line = line
        self.col = col


@dataclass(frozen=True)
class ProblemSpec:
    """A parsed input system: ring, ordering, grading, generators."""

    ctx: RingContext
    order: OrderSpec
    generators: tuple[ModuleVector, ...]
    name: str = ""

    def __eq__(self, other):
        return (
            isinstance(other, ProblemSpec)
            and self.ctx == other.ctx
            and self.order == other.order
            and self.generators == other.generators
        )


_SYMBOLS = ",;:^+-*/[]"


def _tokenize(text: str):
    tokens = []
    line, col = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            col += 1
            i += 1
            continue
        if ch == "#":
            while i < len(text) and text[i] != "\n":
                i += 1
            continue
        start_col = col
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("INT", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("NAME", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch in _SYMBOLS:
            tokens.append(("SYM", ch, line, start_col))
            col += 1
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(("EOF", "", line, col))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, message: str):
        _, _, line, col = self.peek()
        raise ParseError(message, line, col)

    def expect_sym(self, sym: str):
        kind, val, _, _ = self.peek()
        if kind != "SYM" or val != sym:
            self.fail(f"expected {sym!r}")
        return self.next()

    def expect_name(self, word: str | None = None):
        kind, val, _, _ = self.peek()
        if kind != "NAME" or (word is not None and val != word):
            self.fail(f"expected {word or 'a name'}")
        return self.next()

    def expect_int(self) -> int:
        sign = 1
        kind, val, _, _ = self.peek()
        if kind == "SYM" and val == "-":
            self.next()
            sign = -1
            kind, val, _, _ = self.peek()
        if kind != "INT":
            self.fail("expected an integer")
        self.next()
        return sign * int(val)

    def at_sym(self, sym: str) -> bool:
        kind, val, _, _ = self.peek()
        return kind == "SYM" and val == sym

    def at_name(self, word: str | None = None) -> bool:
        kind, val, _, _ = self.peek()
        return kind == "NAME" and (word is None or val == word)

    # -- clauses --------------------------------------------------------

    def parse_rows(self):
        self.expect_sym("[")
        rows = []
        row = []
        while True:
            kind, val, _, _ = self.peek()
            if kind == "SYM" and val == "]":
                self.next()
                if row:
                    rows.append(tuple(row))
                break
            if kind == "SYM" and val == ";":
                self.next()
                rows.append(tuple(row))
                row = []
                continue
            row.append(self.expect_int())
        if not rows:
            self.fail("empty matrix")
        return tuple(rows)

    def parse_ring(self):
        self.expect_name("ring")
        names = [self.expect_name()[1]]
        while self.at_sym(","):
            self.next()
            names.append(self.expect_name()[1])
        self.expect_name("over")
        kind, val, _, _ = self.peek()
        if kind == "NAME" and val == "Q":
            self.next()
            field = QQ
        elif kind == "NAME" and val == "Zp":
            self.next()
            p = self.expect_int()
            try:
                field = PrimeField(p)
            except ValueError as exc:
                self.fail(str(exc))
        else:
            self.fail("expected Q or Zp <prime>")
        self.expect_sym(";")
        return names, field

    def parse_order(self, n: int) -> OrderSpec:
        self.expect_name("order")
        kind, val, _, _ = self.peek()
        named = {"Lex": LEX, "DegLex": DEGLEX, "DegRevLex": DEGREVLEX}
        if kind == "NAME" and val in named:
            self.next()
            spec = named[val]
        elif kind == "NAME" and val == "matrix":
            self.next()
            rows = self.parse_rows()
            if len(rows) != n or any(len(r) != n for r in rows):
                self.fail(f"ordering matrix must be {n}x{n}")
            try:
                spec = OrderSpec("matrix", rows)
            except SatGBError as exc:
                self.fail(str(exc))
        else:
            self.fail("expected Lex, DegLex, DegRevLex or matrix [...]")
        self.expect_sym(";")
        return spec

    def parse_grading(self, n: int) -> Grading:
        self.expect_name("grading")
        rows = self.parse_rows()
        if any(len(r) != n for r in rows):
            self.fail(f"grading rows must have {n} entries")
        try:
            g = Grading(rows)
        except SatGBError as exc:
            self.fail(str(exc))
        self.expect_sym(";")
        return g

    def parse_poly(self, ctx: RingContext, names: list[str], key):
        field = ctx.field
        n = len(names)
        index = {nm: i for i, nm in enumerate(names)}
        terms = []

        def parse_term(sign: int):
            coeff = field.of(sign)
            exps = [0] * n
            saw_factor = False
            while True:
                kind, val, line, col = self.peek()
                if kind == "INT":
                    self.next()
                    num = int(val)
                    den = 1
                    if self.at_sym("/"):
                        self.next()
                        den = self.expect_int()
                        if den == 0:
                            raise ParseError("zero denominator", line, col)
                    coeff = field.mul(coeff, field.of(num, den))
                    saw_factor = True
                elif kind == "NAME":
                    self.next()
                    if val not in index:
                        raise ParseError(f"unknown indeterminate {val!r}", line, col)
                    e = 1
                    if self.at_sym("^"):
                        self.next()
                        e = self.expect_int()
                        if e < 0:
                            raise ParseError("negative exponent", line, col)
                    exps[index[val]] += e
                    saw_factor = True
                elif kind == "SYM" and val == "*":
                    self.next()
                else:
                    break
            if not saw_factor:
                self.fail("expected a term")
            return coeff, tuple(exps)

        sign = 1
        if self.at_sym("+") or self.at_sym("-"):
            sign = -1 if self.next()[1] == "-" else 1
        terms.append(parse_term(sign))
        while self.at_sym("+") or self.at_sym("-"):
            sign = -1 if self.next()[1] == "-" else 1
            terms.append(parse_term(sign))

        acc = {}
        for c, exps in terms:
            t = ctx.term(exps, 0)
            acc[t] = field.add(acc.get(t, field.zero), c)
        return ModuleVector.from_map(acc, field, key)

    def parse_spec(self) -> ProblemSpec:
        names, field = self.parse_ring()
        order = self.parse_order(len(names))
        if self.at_name("grading"):
            grading = self.parse_grading(len(names))
        else:
            grading = standard_grading(len(names))
        try:
            ctx = ring(names, field, grading)
        except SatGBError as exc:
            self.fail(str(exc))
        key = order.key_func(ctx)
        self.expect_name("gens")
        self.expect_sym(":")
        gens = []
        while True:
            kind, val, line, col = self.peek()
            poly = self.parse_poly(ctx, list(names), key)
            if poly.is_zero():
                raise ParseError("zero generator", line, col)
            gens.append(poly)
            if self.at_sym(","):
                self.next()
                continue
            break
        self.expect_sym(";")
        kind, _, _, _ = self.peek()
        if kind != "EOF":
            self.fail("trailing input after the generator list")
        return ProblemSpec(ctx=ctx, order=order, generators=tuple(gens))


def parse_system(text: str, name: str = "") -> ProblemSpec:
    spec = _Parser(text).parse_spec()
    if name:
        spec = ProblemSpec(spec.ctx, spec.order, spec.generators, name)
    return spec


def _rows_text(rows) -> str:
    return "[" + "; ".join(" ".join(str(v) for v in row) for row in rows) + "]"


def emit_problem(spec: ProblemSpec) -> str:
    """Render a ProblemSpec back to the input grammar (round-trips)."""
    from .core import format_vector

    ctx = spec.ctx
    field = "Q" if ctx.field == QQ else f"Zp {ctx.field.p}"
    lines = [f"ring {','.join(ctx.xnames)} over {field};"]
    if spec.order.kind == "matrix":
        lines.append(f"order matrix {_rows_text(spec.order.matrix)};")
    else:
        lines.append(f"order {spec.order.display()};")
    if spec.ctx.grading != standard_grading(ctx.n):
        lines.append(f"grading {_rows_text(ctx.grading.weights)};")
    polys = ", ".join(format_vector(v, ctx) for v in spec.generators)
    lines.append(f"gens: {polys};")
    return "\n".join(lines) + "\n"
