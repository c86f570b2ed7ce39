"""Text grammar for polynomials, ring declarations and ideal files.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' INT)?
    atom   := INT | IDENT | '(' expr ')'

Division is only allowed by a nonzero constant.  Juxtaposition (``2x``) is
rejected.
"""

from __future__ import annotations

import re

from .field import Field
from .orders import parse_order
from .poly import MAX_EXPONENT, DegreeOverflowError, Polynomial, PolyRing


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownVariableError(ParseError):
    pass


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(\S))")


def _tokenize(text: str):
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        if m.group(1) is not None:
            toks.append(("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            toks.append(("id", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", m.start(3))
            toks.append(("op", ch, m.start(3)))
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str, ring: PolyRing):
        self.toks = _tokenize(text)
        self.i = 0
        self.ring = ring

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect_op(self, ch):
        t = self.take()
        if t != ("op", ch, t[2]):
            raise ParseError(f"expected {ch!r}", t[2])

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            raise ParseError("empty expression", 0)
        p = self.expr()
        t = self.peek()
        if t[0] != "end":
            raise ParseError(f"unexpected token {t[1]!r}", t[2])
        return p

    def expr(self):
        p = self.term()
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] in "+-":
                self.take()
                q = self.term()
                p = p + q if t[1] == "+" else p - q
            else:
                return p

    def term(self):
        p = self.unary()
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] in "*/":
                self.take()
                q = self.unary()
                if t[1] == "*":
                    p = p * q
                else:
                    if not q.is_constant() or q.is_zero():
                        raise ParseError("division only by a nonzero constant", t[2])
                    p = p.scale(self.ring.field.inv(q.constant_coeff()))
            elif t[0] in ("int", "id") or (t[0] == "op" and t[1] == "("):
                raise ParseError("implicit multiplication is not allowed", t[2])
            else:
                return p

    def unary(self):
        t = self.peek()
        if t[0] == "op" and t[1] in "+-":
            self.take()
            p = self.unary()
            return -p if t[1] == "-" else p
        return self.power()

    def power(self):
        base = self.atom()
        t = self.peek()
        if t[0] == "op" and t[1] == "^":
            self.take()
            e = self.take()
            if e[0] != "int":
                raise ParseError("exponent must be a nonnegative integer", e[2])
            k = int(e[1])
            if k >= MAX_EXPONENT:
                raise DegreeOverflowError("exponent exceeds 2^16")
            return base ** k
        return base

    def atom(self):
        t = self.take()
        if t[0] == "int":
            return self.ring.const(int(t[1]))
        if t[0] == "id":
            if t[1] not in self.ring.names:
                raise UnknownVariableError(f"unknown variable {t[1]!r}", t[2])
            return self.ring.var(t[1])
        if t == ("op", "(", t[2]):
            p = self.expr()
            self.expect_op(")")
            return p
        if t[0] == "end":
            raise ParseError("unexpected end of input", t[2])
        raise ParseError(f"unexpected token {t[1]!r}", t[2])


def parse_polynomial(text: str, ring: PolyRing) -> Polynomial:
    return _Parser(text, ring).parse()


_RING_RE = re.compile(r"^\s*ring\s+(\S+)\s*\[([^\]]*)\]\s*(?:order\s+(.+?))?\s*$")


def parse_ring(line: str) -> PolyRing:
    """``ring QQ [x, y, z, w] order grevlex``"""
    m = _RING_RE.match(line)
    if not m:
        raise ParseError("expected 'ring <field> [vars] order <order>'", 0)
    field = Field.parse(m.group(1))
    names = [v.strip() for v in m.group(2).split(",") if v.strip()]
    for v in names:
        if not re.fullmatch(r"[A-Za-z][A-Za-z0-9_]*", v):
            raise ParseError(f"bad variable name {v!r}", line.find(v))
    order = parse_order(m.group(3) or "grevlex", names)
    return PolyRing(names, field, order)


def format_ring(ring: PolyRing) -> str:
    return repr(ring)


def parse_ideal_text(text: str, field: Field | None = None, order: str | None = None):
    """Parse an ideal file: ring line, then one generator per line; ``#`` comments.

    ``field`` and ``order`` override the declaration in the file.
    """
    from .ideal import Ideal
    ring = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ring is None:
            try:
                ring = parse_ring(line)
            except ParseError as exc:
                raise ParseError(f"line {lineno}: {exc}", exc.position) from None
            if field is not None or order is not None:
                ring = PolyRing(ring.names, field or ring.field,
                                parse_order(order, ring.names) if order else ring.order)
            continue
        try:
            p = parse_polynomial(line, ring)
        except ParseError as exc:
            raise type(exc)(f"line {lineno}: {exc}", exc.position) from None
        if p:
            gens.append(p)
    if ring is None:
        raise ParseError("missing ring declaration", 0)
    return Ideal(ring, gens)


def format_ideal(ideal) -> str:
    lines = [format_ring(ideal.ring)]
    lines += [str(g) for g in ideal.gens]
    return "\n".join(lines) + "\n"
