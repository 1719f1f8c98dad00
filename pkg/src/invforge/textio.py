"""Polynomial text and JSON formats.

Text grammar (output is bit-exact; parsing is whitespace-insensitive and
also accepts a bare coefficient term and a leading sign):

    poly   := term (('+'|'-') term)*
    term   := [coeff ['*']] factor ('*' factor)* | coeff
    factor := var ['^' uint]
    var    := 'x'uint | 'u'uint | 't' | generator name
    coeff  := int | int '/' uint

't' aliases x0.  Output renders terms in descending canonical order with
explicit '*' separators.  The JSON schema is
{"ring":{"kind":"x|u|gen","n":N},"terms":[{"c":"num[/den]","e":[...]}]}
with the same term order.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterator

from .rings import Polynomial, VarContext


class PolyParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|([+\-*/^()]))")


def _tokenize(text: str):
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == m.start():
            rest = text[pos:]
            stripped = rest.lstrip()
            if not stripped:
                break
            at = pos + (len(rest) - len(stripped))
            raise PolyParseError(f"unexpected character {stripped[0]!r}", at)
        if m.group(1) is not None:
            out.append(("int", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            out.append(("name", m.group(2), m.start(2)))
        else:
            out.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


def _slot_table(ctx: VarContext) -> dict:
    table = {ctx.slot_name(i): i for i in range(ctx.slot_count)}
    if "x0" in table:
        table.setdefault("t", table["x0"])
    return table


def parse_poly(text: str, ctx: VarContext) -> Polynomial:
    """Exact parse of the text grammar into the given context."""
    tokens = _tokenize(text)
    slots = _slot_table(ctx)
    k = 0

    def peek():
        return tokens[k]

    def take():
        nonlocal k
        tok = tokens[k]
        k += 1
        return tok

    def parse_factor():
        kind, val, pos = take()
        if kind != "name":
            raise PolyParseError("expected a variable name", pos)
        if val not in slots:
            raise PolyParseError(f"unknown variable {val!r} for this ring", pos)
        slot = slots[val]
        power = 1
        if peek()[0] == "op" and peek()[1] == "^":
            take()
            kind, val, pos = take()
            if kind != "int":
                raise PolyParseError("expected an exponent", pos)
            power = val
        return slot, power

    def parse_term(sign: int):
        coeff = None
        if peek()[0] == "int":
            coeff = take()[1]
            if peek()[0] == "op" and peek()[1] == "/":
                take()
                kind, val, pos = take()
                if kind != "int":
                    raise PolyParseError("expected a denominator", pos)
                if val == 0:
                    raise PolyParseError("zero denominator", pos)
                coeff = Fraction(coeff, val)
            if peek()[0] == "op" and peek()[1] == "*":
                take()
                if peek()[0] != "name":
                    raise PolyParseError("expected a variable after '*'", peek()[2])
        exps = [0] * ctx.slot_count
        saw_factor = False
        while peek()[0] == "name":
            slot, power = parse_factor()
            exps[slot] += power
            saw_factor = True
            if peek()[0] == "op" and peek()[1] == "*":
                take()
                if peek()[0] != "name":
                    raise PolyParseError("expected a variable after '*'", peek()[2])
        if coeff is None:
            if not saw_factor:
                raise PolyParseError("expected a term", peek()[2])
            coeff = 1
        return tuple(exps), sign * coeff

    terms = {}
    sign = 1
    if peek()[0] == "op" and peek()[1] in "+-":
        sign = -1 if take()[1] == "-" else 1
    while True:
        e, c = parse_term(sign)
        s = terms.get(e, 0) + c
        if s:
            terms[e] = s
        elif e in terms:
            del terms[e]
        kind, val, pos = peek()
        if kind == "end":
            break
        if kind == "op" and val in "+-":
            take()
            sign = -1 if val == "-" else 1
            continue
        raise PolyParseError(f"unexpected {val!r}", pos)
    return Polynomial(ctx, terms)


def _coeff_str(c) -> str:
    if isinstance(c, Fraction) and c.denominator != 1:
        return f"{c.numerator}/{c.denominator}"
    return str(int(c))


def iter_format_text(f: Polynomial) -> Iterator[str]:
    """Stream the text rendering term by term, leading term first."""
    if f.is_zero():
        yield "0"
        return
    ctx = f.context
    first = True
    for e, c in f.sorted_terms():
        neg = c < 0
        mag = -c if neg else c
        if first:
            prefix = "-" if neg else ""
            first = False
        else:
            prefix = " - " if neg else " + "
        factors = []
        for i, k in enumerate(e):
            if k == 0:
                continue
            name = ctx.slot_name(i)
            factors.append(name if k == 1 else f"{name}^{k}")
        if not factors:
            yield f"{prefix}{_coeff_str(mag)}"
        elif mag == 1:
            yield prefix + "*".join(factors)
        else:
            yield f"{prefix}{_coeff_str(mag)}*" + "*".join(factors)


def _ring_json(ctx: VarContext) -> str:
    kind = {"x": "x", "u": "u", "gen": "gen"}.get(ctx.kind.value)
    if kind is None:
        raise ValueError("only x, u and generator rings serialize to JSON")
    return f'{{"kind":"{kind}","n":{ctx.n}}}'


def iter_format_json(f: Polynomial) -> Iterator[str]:
    """Stream the JSON rendering without buffering the whole object."""
    yield f'{{"ring":{_ring_json(f.context)},"terms":['
    first = True
    for e, c in f.sorted_terms():
        sep = "" if first else ","
        first = False
        exps = ",".join(str(k) for k in e)
        yield f'{sep}{{"c":"{_coeff_str(c)}","e":[{exps}]}}'
    yield "]}"


def format_poly(f: Polynomial, style: str = "text") -> str:
    if style == "text":
        return "".join(iter_format_text(f))
    if style == "json":
        return "".join(iter_format_json(f))
    raise ValueError(f"unknown style {style!r}")


def parse_poly_json(data, ctx: VarContext) -> Polynomial:
    """Inverse of the JSON rendering, given the matching context."""
    import json as _json
    if isinstance(data, str):
        data = _json.loads(data)
    terms = {}
    for t in data["terms"]:
        c = t["c"]
        coeff = Fraction(c) if "/" in c else int(c)
        terms[tuple(t["e"])] = coeff
    return Polynomial(ctx, terms)
