"""Surface syntax for scalars and algebra elements.

Grammar (whitespace insensitive)::

    expr   := ['-'] term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := atom ('^' integer)?
    atom   := 'q' | 'x1' | 'x0' | 'xm1' | integer | '(' expr ')'

``xm1`` denotes the generator x_{-1}.  Scalars and generators may be mixed
freely in a product; scalars commute out while generator order is kept and
normally ordered on the fly.  Division is scalar-only, and generators never
carry negative exponents.
"""

from __future__ import annotations

import re

from .algebra import AlgElem, mul
from .qfield import ONE, RatFunc, q_power


class ExprError(ValueError):
    """Syntax or semantics error in a surface expression, with position."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


_TOKEN = re.compile(r"\s*(?:(\d+)|([a-zA-Z][a-zA-Z0-9]*)|([+\-*/^()]))")

_ATOMS = {"q", "x1", "x0", "xm1"}


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ExprError(f"unexpected character {text[pos:].lstrip()[0]!r}",
                                pos)
            break
        if m.group(1):
            tokens.append(("int", m.group(1), m.start(1)))
        elif m.group(2):
            name = m.group(2)
            if name not in _ATOMS:
                raise ExprError(f"unknown name {name!r}", m.start(2))
            tokens.append(("name", name, m.start(2)))
        else:
            tokens.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    return tokens


# Parsed values are either pure scalars or algebra elements.  A scalar is
# promoted to scalar * 1 only when it has to combine with an element.


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.k = 0

    def _peek(self):
        return self.tokens[self.k] if self.k < len(self.tokens) else ("end", "", len(self.text))

    def _next(self):
        tok = self._peek()
        self.k += 1
        return tok

    def parse(self):
        value = self.expr()
        kind, val, pos = self._peek()
        if kind != "end":
            raise ExprError(f"unexpected {val!r}", pos)
        return value

    def expr(self):
        kind, val, _ = self._peek()
        negate = False
        if kind == "op" and val == "-":
            self._next()
            negate = True
        acc = self.term()
        if negate:
            acc = _scale(acc, RatFunc(-1))
        while True:
            kind, val, _ = self._peek()
            if kind == "op" and val in "+-":
                self._next()
                rhs = self.term()
                if val == "-":
                    rhs = _scale(rhs, RatFunc(-1))
                acc = _add(acc, rhs)
            else:
                return acc

    def term(self):
        acc = self.factor()
        while True:
            kind, val, pos = self._peek()
            if kind == "op" and val in "*/":
                self._next()
                rhs = self.factor()
                if val == "*":
                    acc = _mul(acc, rhs)
                else:
                    if isinstance(rhs, AlgElem):
                        raise ExprError("division by an algebra element", pos)
                    if not rhs:
                        raise ExprError("division by zero", pos)
                    if isinstance(acc, AlgElem):
                        acc = acc.scale(ONE / rhs)
                    else:
                        acc = acc / rhs
            else:
                return acc

    def factor(self):
        base, base_pos = self.atom()
        kind, val, _ = self._peek()
        if kind == "op" and val == "^":
            self._next()
            exp = self._exponent()
            if isinstance(base, AlgElem):
                if exp < 0:
                    raise ExprError("negative exponent on an algebra element",
                                    base_pos)
                out = AlgElem.basis(0, 0)
                for _ in range(exp):
                    out = mul(out, base)
                return out
            return base ** exp
        return base

    def _exponent(self) -> int:
        kind, val, pos = self._next()
        sign = 1
        if kind == "op" and val == "-":
            sign = -1
            kind, val, pos = self._next()
        if kind != "int":
            raise ExprError("expected an integer exponent", pos)
        return sign * int(val)

    def atom(self):
        kind, val, pos = self._next()
        if kind == "int":
            return RatFunc(int(val)), pos
        if kind == "name":
            if val == "q":
                return q_power(1), pos
            j = {"x1": (0, 1), "x0": (1, 0), "xm1": (0, -1)}[val]
            return AlgElem.basis(*j), pos
        if kind == "op" and val == "(":
            inner = self.expr()
            kind, val, pos2 = self._next()
            if not (kind == "op" and val == ")"):
                raise ExprError("expected ')'", pos2)
            return inner, pos
        raise ExprError(f"unexpected {val!r}" if val else "unexpected end of input",
                        pos)


def _scale(v, c: RatFunc):
    return v.scale(c) if isinstance(v, AlgElem) else v * c


def _add(a, b):
    if isinstance(a, AlgElem) or isinstance(b, AlgElem):
        return _promote(a) + _promote(b)
    return a + b


def _mul(a, b):
    if isinstance(a, AlgElem):
        if isinstance(b, AlgElem):
            return mul(a, b)
        return a.scale(b)
    if isinstance(b, AlgElem):
        return b.scale(a)
    return a * b


def _promote(v) -> AlgElem:
    return v if isinstance(v, AlgElem) else AlgElem.scalar(v)


def parse(text: str) -> AlgElem:
    """Parse a surface expression into a canonical algebra element."""
    return _promote(_Parser(text).parse())


def parse_scalar(text: str) -> RatFunc:
    """Parse a pure scalar expression (no generators allowed)."""
    value = _Parser(text).parse()
    if isinstance(value, AlgElem):
        raise ExprError("expected a scalar expression", 0)
    return value


def _monomial_str(i: int, j: int) -> str:
    parts = []
    if i:
        parts.append("x0" if i == 1 else f"x0^{i}")
    if j > 0:
        parts.append("x1" if j == 1 else f"x1^{j}")
    elif j < 0:
        parts.append("xm1" if j == -1 else f"xm1^{-j}")
    return "*".join(parts)


def _coeff_str(c: RatFunc) -> str:
    s = str(c)
    if any(ch in s[1:] for ch in "+-") or "/" in s or "*" in s:
        return f"({s})"
    return s


def render_scalar(c: RatFunc) -> str:
    return str(c)


def render(a: AlgElem) -> str:
    """Canonical deterministic rendering; parse(render(a)) == a."""
    if a.is_zero():
        return "0"
    chunks = []
    for (i, j) in sorted(a.terms, key=lambda k: (-k[0], -k[1])):
        c = a.terms[(i, j)]
        mono = _monomial_str(i, j)
        if not mono:
            body = _coeff_str(c)
        elif c == ONE:
            body = mono
        elif c == RatFunc(-1):
            body = f"-{mono}"
        else:
            body = f"{_coeff_str(c)}*{mono}"
        chunks.append(body)
    out = chunks[0]
    for body in chunks[1:]:
        if body.startswith("-"):
            out += f" - {body[1:]}"
        else:
            out += f" + {body}"
    return out
