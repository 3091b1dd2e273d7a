"""Textual literals for sets, piecewise functions and filter bases.

Grammar (whitespace is free everywhere):

    set       := 'empty' | item ('u' item)*
    item      := interval | '{' rat '}'
    interval  := ('[' | '(') bound ',' bound (']' | ')')
    bound     := '-inf' | 'inf' | '+inf' | rat
    rat       := ['-'] digits ['/' digits]

    piecewise := piece (';' piece)*            # u(x) = a*x + b on each part
    piece     := interval rat rat              # interval, slope a, intercept b

    base      := bpart ('u' bpart)*            # B(l), endpoints affine in l
    bpart     := ('[' | '(') bexpr ',' bexpr (']' | ')')
    bexpr     := bterm (('+' | '-') bterm)*    # e.g. 1/2 - 1/l,  3*l
    bterm     := rat | rat '/' 'l' | rat '*' 'l' | 'l' | 'inf' | '-inf'

Rendering uses the same syntax, so every value in a report parses back.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from .piecewise import PiecewiseFn
from .restriction import BaseFormula, BasePart, EndFn
from .sets import Domain, Interval, IntervalSet, NEG_INF, POS_INF, ivl


class LiteralError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at column {pos + 1})")
        self.pos = pos


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.i = 0

    def skip_ws(self):
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.i] if self.i < len(self.text) else ""

    def take(self, ch: str):
        self.skip_ws()
        if not self.text.startswith(ch, self.i):
            raise LiteralError(f"expected {ch!r}", self.i)
        self.i += len(ch)

    def try_take(self, ch: str) -> bool:
        self.skip_ws()
        if self.text.startswith(ch, self.i):
            self.i += len(ch)
            return True
        return False

    def try_word(self, word: str) -> bool:
        self.skip_ws()
        end = self.i + len(word)
        if self.text[self.i:end].lower() == word and \
                (end >= len(self.text) or not self.text[end].isalnum()):
            self.i = end
            return True
        return False

    def rat(self) -> Fraction:
        self.skip_ws()
        start = self.i
        if self.i < len(self.text) and self.text[self.i] in "+-":
            self.i += 1
        digits0 = self.i
        while self.i < len(self.text) and self.text[self.i].isdigit():
            self.i += 1
        if self.i == digits0:
            raise LiteralError("expected a number", start)
        num = int(self.text[start:self.i])
        if self.i < len(self.text) and self.text[self.i] == "/" and \
                self.i + 1 < len(self.text) and self.text[self.i + 1].isdigit():
            self.i += 1
            d0 = self.i
            while self.i < len(self.text) and self.text[self.i].isdigit():
                self.i += 1
            return Fraction(num, int(self.text[d0:self.i]))
        return Fraction(num)

    def done(self):
        self.skip_ws()
        if self.i < len(self.text):
            raise LiteralError(f"unexpected trailing input {self.text[self.i:]!r}",
                               self.i)


def parse_rat(text: str) -> Fraction:
    sc = _Scanner(text)
    out = sc.rat()
    sc.done()
    return out


def _parse_bound(sc: _Scanner):
    if sc.try_word("-inf"):
        return NEG_INF
    if sc.try_word("+inf") or sc.try_word("inf"):
        return POS_INF
    return sc.rat()


def _parse_item(sc: _Scanner) -> Optional[Interval]:
    start = sc.i
    if sc.try_take("{"):
        x = sc.rat()
        sc.take("}")
        return ivl(x, x, True, True)
    sc.skip_ws()
    ch = sc.peek()
    if ch == "[":
        sc.take("[")
        lo_closed = True
    elif ch == "(":
        sc.take("(")
        lo_closed = False
    else:
        raise LiteralError("expected '[', '(' or '{'", sc.i)
    lo = _parse_bound(sc)
    sc.take(",")
    hi = _parse_bound(sc)
    if sc.try_take("]"):
        hi_closed = True
    elif sc.try_take(")"):
        hi_closed = False
    else:
        raise LiteralError("expected ']' or ')'", sc.i)
    out = ivl(lo, hi, lo_closed, hi_closed)
    if out is None:
        raise LiteralError("interval literal denotes the empty set", start)
    return out


def parse_set(text: str) -> IntervalSet:
    sc = _Scanner(text)
    if sc.try_word("empty"):
        sc.done()
        return IntervalSet.empty()
    parts = [_parse_item(sc)]
    while sc.try_word("u"):
        parts.append(_parse_item(sc))
    sc.done()
    return IntervalSet.of(*parts)


def format_set(s: IntervalSet) -> str:
    return str(s)


def parse_interval(text: str) -> Interval:
    sc = _Scanner(text)
    out = _parse_item(sc)
    sc.done()
    if out is None:
        raise LiteralError("interval is empty", 0)
    return out


def parse_piecewise(text: str, domain: Domain) -> PiecewiseFn:
    sc = _Scanner(text)
    triples = []
    while True:
        iv = _parse_item(sc)
        a = sc.rat()
        b = sc.rat()
        triples.append((iv, a, b))
        if not sc.try_take(";"):
            break
    sc.done()
    return PiecewiseFn.from_pieces(domain, triples)


def format_piecewise(u: PiecewiseFn) -> str:
    return " ; ".join(f"{p.interval} {p.slope} {p.intercept}" for p in u.pieces)


def _parse_base_expr(sc: _Scanner):
    """Affine-in-l endpoint; returns EndFn, NEG_INF or POS_INF."""
    if sc.try_word("-inf"):
        return NEG_INF
    if sc.try_word("inf") or sc.try_word("+inf"):
        return POS_INF
    const = Fraction(0)
    inv = Fraction(0)
    lin = Fraction(0)
    sign = Fraction(1)
    first = True
    while True:
        sc.skip_ws()
        if not first:
            if sc.try_take("+"):
                sign = Fraction(1)
            elif sc.try_take("-"):
                sign = Fraction(-1)
            else:
                break
        first = False
        if sc.try_word("l"):
            lin += sign
            continue
        coef = sc.rat()
        if sc.try_take("/l"):
            inv += sign * coef
        elif sc.try_take("*l"):
            lin += sign * coef
        elif sc.try_take("/"):
            sc.take("l")
            inv += sign * coef
        else:
            const += sign * coef
    return EndFn(const, inv, lin)


def _parse_base_part(sc: _Scanner) -> BasePart:
    ch = sc.peek()
    if ch == "[":
        sc.take("[")
        lo_closed = True
    elif ch == "(":
        sc.take("(")
        lo_closed = False
    else:
        raise LiteralError("expected '[' or '('", sc.i)
    lo = _parse_base_expr(sc)
    sc.take(",")
    hi = _parse_base_expr(sc)
    if sc.try_take("]"):
        hi_closed = True
    elif sc.try_take(")"):
        hi_closed = False
    else:
        raise LiteralError("expected ']' or ')'", sc.i)
    lo_fn = None if lo == NEG_INF else lo
    hi_fn = None if hi == POS_INF else hi
    if lo == POS_INF or hi == NEG_INF:
        raise LiteralError("endpoint infinities are the wrong way around", sc.i)
    return BasePart(lo_fn, hi_fn, lo_closed and lo_fn is not None,
                    hi_closed and hi_fn is not None)


def parse_base_formula(text: str, index_shift: int = 0) -> BaseFormula:
    sc = _Scanner(text)
    parts = [_parse_base_part(sc)]
    while sc.try_word("u"):
        parts.append(_parse_base_part(sc))
    sc.done()
    return BaseFormula(tuple(parts), index_shift)


def format_end_fn(f) -> str:
    if f is None:
        return "?"
    bits = []
    if f.const != 0 or (f.inv == 0 and f.lin == 0):
        bits.append(str(f.const))
    if f.inv != 0:
        bits.append(("+" if f.inv > 0 and bits else "") + f"{f.inv}/l")
    if f.lin != 0:
        bits.append(("+" if f.lin > 0 and bits else "") + f"{f.lin}*l")
    return "".join(bits)


def format_base_formula(bf: BaseFormula) -> str:
    out = []
    for p in bf.parts:
        lo = "-inf" if p.lo is None else format_end_fn(p.lo)
        hi = "inf" if p.hi is None else format_end_fn(p.hi)
        out.append("%s%s,%s%s" % ("[" if p.lo_closed else "(", lo, hi,
                                  "]" if p.hi_closed else ")"))
    return " u ".join(out)
