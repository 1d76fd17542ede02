"""The problem-file language and the matching printers.

Grammar (informally):

    ring <Z | Z/<N> | F2[y]/y^<r> | Z_(<p>)> ;
    vars <name> <name> ... ;          # first name is lex-greatest
    rank <m> ;                        # optional, default 1
    <name> = <vector> ;  ...          # named generators

A vector of rank 1 is a polynomial; otherwise `[p1, ..., pm]`.
Polynomials use + - * ^, integer (or fraction) literals, the declared
variables, and `y` for the F2[y]/(y^r) nilpotent. Everything printed by
`format_vector` re-parses to an equal value.
"""

from __future__ import annotations

import re
from typing import NamedTuple

from .errors import ParseError, UsageError
from .poly import Ambient, Mono, Term, TopLex, Vector
from .rings import Integers, IntegersLocalizedAt, IntegersMod, TruncatedF2y

_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)|(?P<comment>#[^\n]*)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<int>\d+)|(?P<sym>[;=+\-*^/\[\](),])"
)


class Token(NamedTuple):
    kind: str
    text: str
    line: int
    column: int


def tokenize(text):
    tokens = []
    line, col = 1, 1
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        chunk = m.group()
        if kind not in ("ws", "comment"):
            tokens.append(Token(kind, chunk, line, col))
        newlines = chunk.count("\n")
        if newlines:
            line += newlines
            col = len(chunk) - chunk.rfind("\n")
        else:
            col += len(chunk)
        pos = m.end()
    tokens.append(Token("eof", "", line, col))
    return tokens


class ProblemFile(NamedTuple):
    ring: object
    var_names: tuple
    rank: int
    order: TopLex
    ambient: Ambient
    poly_ambient: Ambient
    generators: tuple  # of (name, Vector)


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, tok.line, tok.column)

    def expect(self, kind, text=None):
        tok = self.next()
        if tok.kind != kind or (text is not None and tok.text != text):
            want = text or kind
            raise ParseError(f"expected {want!r}, found {tok.text or 'end of input'!r}", tok.line, tok.column)
        return tok

    def accept(self, kind, text=None):
        tok = self.peek()
        if tok.kind == kind and (text is None or tok.text == text):
            self.i += 1
            return tok
        return None

    # -- statements ---------------------------------------------------------

    def parse_problem(self):
        ring = None
        var_names = None
        rank = None
        raw_gens = []
        while self.peek().kind != "eof":
            head = self.expect("name")
            if head.text == "ring":
                if ring is not None:
                    self.fail("duplicate ring declaration", head)
                ring = self.parse_ring()
            elif head.text == "vars":
                if var_names is not None:
                    self.fail("duplicate vars declaration", head)
                var_names = self.parse_vars(ring)
            elif head.text == "rank":
                if rank is not None:
                    self.fail("duplicate rank declaration", head)
                tok = self.expect("int")
                rank = int(tok.text)
                if rank < 1:
                    self.fail("rank must be >= 1", tok)
            else:
                if ring is None:
                    self.fail("ring must be declared before generators", head)
                if var_names is None:
                    self.fail("vars must be declared before generators", head)
                if any(tok.text == head.text for tok, _ in raw_gens):
                    self.fail(f"duplicate generator name {head.text!r}", head)
                self.expect("sym", "=")
                raw_gens.append((head, self.parse_pending_vector()))
            self.expect("sym", ";")
        if ring is None:
            self.fail("missing ring declaration")
        if var_names is None:
            self.fail("missing vars declaration")
        rank = rank or 1
        order = TopLex(len(var_names))
        ambient = Ambient(ring, len(var_names), rank)
        poly_ambient = Ambient(ring, len(var_names), 1)
        problem = ProblemFile(ring, tuple(var_names), rank, order, ambient, poly_ambient, ())
        gens = []
        for head, pending in raw_gens:
            gens.append((head.text, _assemble_vector(problem, pending, head)))
        return problem._replace(generators=tuple(gens))

    def parse_ring(self):
        tok = self.expect("name")
        if tok.text == "Z":
            if self.accept("sym", "/"):
                n = self.expect("int")
                try:
                    return IntegersMod(int(n.text))
                except UsageError as exc:
                    self.fail(str(exc), n)
            return Integers()
        if tok.text == "Z_":
            self.expect("sym", "(")
            p = self.expect("int")
            self.expect("sym", ")")
            try:
                return IntegersLocalizedAt(int(p.text))
            except UsageError as exc:
                self.fail(str(exc), p)
        if tok.text == "F2":
            self.expect("sym", "[")
            y = self.expect("name")
            if y.text != "y":
                self.fail("expected 'y'", y)
            self.expect("sym", "]")
            self.expect("sym", "/")
            y = self.expect("name")
            if y.text != "y":
                self.fail("expected 'y'", y)
            self.expect("sym", "^")
            r = self.expect("int")
            try:
                return TruncatedF2y(int(r.text))
            except UsageError as exc:
                self.fail(str(exc), r)
        self.fail(f"unknown ring {tok.text!r}", tok)

    def parse_vars(self, ring):
        names = []
        while True:
            tok = self.peek()
            if tok.kind != "name":
                break
            if tok.text in ("ring", "vars", "rank"):
                self.fail(f"{tok.text!r} is a keyword", tok)
            if isinstance(ring, TruncatedF2y) and tok.text == "y":
                self.fail("'y' is reserved for the coefficient ring", tok)
            if tok.text in names:
                self.fail(f"duplicate variable {tok.text!r}", tok)
            names.append(self.next().text)
        if not names:
            self.fail("vars needs at least one variable name")
        return names

    def parse_pending_vector(self):
        """Collect tokens of a vector literal; evaluation waits for the ambient."""
        if self.accept("sym", "["):
            parts = [self.parse_expr_tokens(stop={",", "]"})]
            while self.accept("sym", ","):
                parts.append(self.parse_expr_tokens(stop={",", "]"}))
            self.expect("sym", "]")
            return parts
        return [self.parse_expr_tokens(stop={";"})]

    def parse_expr_tokens(self, stop):
        depth = 0
        toks = []
        while True:
            tok = self.peek()
            if tok.kind == "eof":
                if toks and depth == 0:
                    return toks
                self.fail("unterminated expression", tok)
            if depth == 0 and tok.kind == "sym" and tok.text in stop:
                if not toks:
                    self.fail("empty expression", tok)
                return toks
            if tok.kind == "sym" and tok.text == "(":
                depth += 1
            elif tok.kind == "sym" and tok.text == ")":
                depth -= 1
                if depth < 0:
                    self.fail("unbalanced ')'", tok)
            toks.append(self.next())


def _assemble_vector(problem, pending, head):
    if len(pending) != problem.rank and not (problem.rank == 1 and len(pending) == 1):
        raise ParseError(
            f"generator {head.text!r} has {len(pending)} components, rank is {problem.rank}",
            head.line,
            head.column,
        )
    terms = []
    for pos, toks in enumerate(pending):
        poly = _ExprParser(toks, problem).parse()
        for c, m in poly.terms:
            terms.append(Term(c, Mono(m.exps, pos)))
    return Vector(problem.ambient, problem.order, terms)


class _ExprParser:
    """Recursive-descent evaluation of a polynomial expression."""

    def __init__(self, tokens, problem):
        self.tokens = list(tokens) + [Token("eof", "", tokens[-1].line, tokens[-1].column)]
        self.i = 0
        self.problem = problem

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, tok.line, tok.column)

    def parse(self):
        value = self.expr()
        if self.peek().kind != "eof":
            self.fail(f"unexpected {self.peek().text!r}")
        return value

    def expr(self):
        negate = False
        tok = self.peek()
        if tok.kind == "sym" and tok.text == "-":
            self.next()
            negate = True
        value = self.term()
        if negate:
            value = value.neg()
        while True:
            tok = self.peek()
            if tok.kind == "sym" and tok.text in "+-":
                self.next()
                rhs = self.term()
                value = value.add(rhs) if tok.text == "+" else value.sub(rhs)
            else:
                return value

    def term(self):
        value = self.factor()
        while True:
            tok = self.peek()
            if tok.kind == "sym" and tok.text == "*":
                self.next()
                value = value.mul(self.factor())
            else:
                return value

    def factor(self):
        value = self.atom()
        if self.peek().kind == "sym" and self.peek().text == "^":
            self.next()
            e = self.next()
            if e.kind != "int":
                self.fail("exponent must be a nonnegative integer", e)
            value = _power(value, int(e.text))
        return value

    def atom(self):
        tok = self.next()
        problem = self.problem
        if tok.kind == "int":
            if self.peek().kind == "sym" and self.peek().text == "/":
                self.next()
                den = self.next()
                if den.kind != "int":
                    self.fail("expected integer denominator", den)
                try:
                    coeff = problem.ring.from_fraction(int(tok.text), int(den.text))
                except UsageError as exc:
                    raise ParseError(str(exc), tok.line, tok.column) from None
                return _constant(problem, coeff)
            return _constant(problem, problem.ring.from_int(int(tok.text)))
        if tok.kind == "name":
            if tok.text in problem.var_names:
                idx = problem.var_names.index(tok.text)
                exps = tuple(1 if k == idx else 0 for k in range(len(problem.var_names)))
                return Vector.monomial(problem.poly_ambient, problem.order, problem.ring.one(), exps)
            if tok.text == "y" and isinstance(problem.ring, TruncatedF2y):
                return _constant(problem, problem.ring.y())
            self.fail(f"unknown variable {tok.text!r}", tok)
        if tok.kind == "sym" and tok.text == "(":
            value = self.expr()
            close = self.next()
            if close.kind != "sym" or close.text != ")":
                self.fail("expected ')'", close)
            return value
        self.fail(f"unexpected {tok.text or 'end of input'!r}", tok)


def _constant(problem, coeff):
    zero = tuple([0] * len(problem.var_names))
    if problem.ring.is_zero(coeff):
        return Vector.zero(problem.poly_ambient, problem.order)
    return Vector.monomial(problem.poly_ambient, problem.order, coeff, zero)


def _power(value, e):
    out = _constant_like(value)
    base = value
    while e:
        if e & 1:
            out = out.mul(base)
        base = base.mul(base)
        e >>= 1
    return out


def _constant_like(v):
    zero = tuple([0] * v.ambient.nvars)
    return Vector.monomial(v.ambient, v.order, v.ambient.ring.one(), zero)


def parse_problem(text):
    return _Parser(tokenize(text)).parse_problem()


def parse_vector_literal(text, problem):
    """Parse a standalone vector in the context of a parsed problem."""
    parser = _Parser(tokenize(text))
    pending = parser.parse_pending_vector()
    if parser.peek().kind == "sym" and parser.peek().text == ";":
        parser.next()
    if parser.peek().kind != "eof":
        parser.fail("trailing input after vector")
    head = Token("name", "<target>", 1, 1)
    return _assemble_vector(problem, pending, head)


# ---------------------------------------------------------------------------
# printing
# ---------------------------------------------------------------------------


def format_monomial(exps, names):
    factors = []
    for e, name in zip(exps, names):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    return "*".join(factors)


def format_term(ring, coeff, exps, names):
    mono = format_monomial(exps, names)
    cs = ring.format(coeff)
    if not mono:
        return cs
    if cs == "1":
        return mono
    if any(ch in cs for ch in "+- "):
        cs = f"({cs})"
    return f"{cs}*{mono}"


def format_poly(ring, terms, names):
    """terms: iterable of (coeff, exps), already in display order."""
    pieces = []
    signed = isinstance(ring, (Integers, IntegersLocalizedAt))
    for coeff, exps in terms:
        if signed and coeff < 0:
            text = format_term(ring, ring.neg(coeff), exps, names)
            pieces.append(("-", text))
        else:
            pieces.append(("+", format_term(ring, coeff, exps, names)))
    if not pieces:
        return "0"
    sign, first = pieces[0]
    out = first if sign == "+" else f"-{first}"
    for sign, text in pieces[1:]:
        out += f" {sign} {text}"
    return out


def format_vector(v, names):
    ring = v.ambient.ring
    if v.ambient.rank == 1:
        return format_poly(ring, [(c, m.exps) for c, m in v.terms], names)
    comps = []
    for pos in range(v.ambient.rank):
        comps.append(
            format_poly(ring, [(c, m.exps) for c, m in v.terms if m.pos == pos], names)
        )
    return "[" + ", ".join(comps) + "]"


def format_lt_module(elements, names):
    """Leading terms grouped by position: `<gens>e1 (+) <gens>e2 ...`."""
    if not elements:
        return "<0>"
    by_pos = {}
    for v in elements:
        lt = v.lt()
        by_pos.setdefault(lt.mono.pos, []).append(
            format_term(v.ambient.ring, lt.coeff, lt.mono.exps, names)
        )
    rank = elements[0].ambient.rank
    parts = []
    for pos in sorted(by_pos):
        gens = ", ".join(by_pos[pos])
        if rank == 1:
            parts.append(f"<{gens}>")
        else:
            parts.append(f"<{gens}>e{pos + 1}")
    return " (+) ".join(parts)


def order_from_names(problem, names_spec):
    """Build a TopLex priority from a list like "Y,X" of the problem's vars."""
    wanted = [w for w in re.split(r"[\s,]+", names_spec.strip()) if w]
    if sorted(wanted) != sorted(problem.var_names):
        raise UsageError(
            f"order spec {names_spec!r} must be a permutation of {' '.join(problem.var_names)}"
        )
    priority = tuple(problem.var_names.index(w) for w in wanted)
    return TopLex(len(problem.var_names), priority)
