"""Expression grammar, pretty-printers and JSON encoding for ring elements.

Grammar (CLI and files):

    expr    := ['-'] product (('+' | '-') product)*
    product := power ('*' power)*
    power   := atom ['^' ['-'] integer]
    atom    := 'cw' | 'cxw' | 'cwm2' | 'cxwm2' | 'e' | 'xi' | 'kappa'
             | integer | '(' expr ')'

Negative exponents are permitted on the atoms cwm2 and cxwm2 only (they name
the divisible classes).  Parsing yields a raw Scalar-combination of exponent
vectors; all ring relations are left to normalize.
"""

from __future__ import annotations

import re

from .ring import Element, Monomial, Vec
from .scalar import KAPPA, ONE, Scalar, E, XI


class ExprSyntaxError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


RawCombination = list[tuple[Scalar, Vec]]

_ZERO_VEC: Vec = (0, 0, 0, 0)

_GENERATOR_VECS: dict[str, Vec] = {
    "cwm2": (1, 0, 0, 0),
    "cxwm2": (0, 1, 0, 0),
    "cw": (0, 0, 1, 0),
    "cxw": (0, 0, 0, 1),
}

_SCALAR_ATOMS: dict[str, Scalar] = {"e": E, "xi": XI, "kappa": KAPPA}

_LAURENT_ATOMS = ("cwm2", "cxwm2")


def raw_mul(x: RawCombination, y: RawCombination) -> RawCombination:
    out: RawCombination = []
    for sx, vx in x:
        for sy, vy in y:
            out.append((sx * sy, (vx[0] + vy[0], vx[1] + vy[1], vx[2] + vy[2], vx[3] + vy[3])))
    return out


def raw_neg(x: RawCombination) -> RawCombination:
    return [(-s, v) for s, v in x]


_TOKEN_RE = re.compile(r"(\d+)|([A-Za-z_][A-Za-z_0-9]*)|([()+\-*^])|(\S)")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    for match in _TOKEN_RE.finditer(text):
        pos = match.start()
        if match.group(1):
            tokens.append(("int", match.group(1), pos))
        elif match.group(2):
            tokens.append(("name", match.group(2), pos))
        elif match.group(3):
            tokens.append(("op", match.group(3), pos))
        else:
            raise ExprSyntaxError(f"unexpected character {match.group(4)!r}", pos)
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.idx = 0

    def peek(self):
        return self.tokens[self.idx]

    def next(self):
        tok = self.tokens[self.idx]
        self.idx += 1
        return tok

    def expect_op(self, op: str):
        kind, value, pos = self.next()
        if kind != "op" or value != op:
            raise ExprSyntaxError(f"expected {op!r}", pos)

    def parse(self) -> RawCombination:
        out = self.sum_()
        kind, value, pos = self.peek()
        if kind != "end":
            raise ExprSyntaxError(f"trailing input {value!r}", pos)
        return out

    def sum_(self) -> RawCombination:
        negate = False
        kind, value, _ = self.peek()
        if kind == "op" and value in "+-":
            self.next()
            negate = value == "-"
        out = self.product()
        if negate:
            out = raw_neg(out)
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value in "+-":
                self.next()
                term = self.product()
                out = out + (raw_neg(term) if value == "-" else term)
            else:
                return out

    def product(self) -> RawCombination:
        out = self.power()
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value == "*":
                self.next()
                out = raw_mul(out, self.power())
            else:
                return out

    def power(self) -> RawCombination:
        base, tag = self.atom()
        kind, value, pos = self.peek()
        if not (kind == "op" and value == "^"):
            return base
        self.next()
        sign = 1
        kind, value, pos = self.peek()
        if kind == "op" and value == "-":
            self.next()
            sign = -1
        kind, value, pos = self.next()
        if kind != "int":
            raise ExprSyntaxError("expected integer exponent", pos)
        exponent = sign * int(value)
        if exponent < 0:
            if tag not in _LAURENT_ATOMS:
                raise ExprSyntaxError(
                    f"negative exponents are only allowed on {_LAURENT_ATOMS}", pos
                )
            vec = _GENERATOR_VECS[tag]
            return [(ONE, tuple(exponent * x for x in vec))]
        out: RawCombination = [(ONE, _ZERO_VEC)]
        for _ in range(exponent):
            out = raw_mul(out, base)
        return out

    def atom(self) -> tuple[RawCombination, str | None]:
        kind, value, pos = self.next()
        if kind == "int":
            return [(Scalar.from_int(int(value)), _ZERO_VEC)], None
        if kind == "name":
            if value in _GENERATOR_VECS:
                return [(ONE, _GENERATOR_VECS[value])], value
            if value in _SCALAR_ATOMS:
                return [(_SCALAR_ATOMS[value], _ZERO_VEC)], value
            raise ExprSyntaxError(f"unknown symbol {value!r}", pos)
        if kind == "op" and value == "(":
            inner = self.sum_()
            self.expect_op(")")
            return inner, None
        raise ExprSyntaxError(f"unexpected token {value!r}", pos)


def parse_expr(text: str) -> RawCombination:
    """Parse an expression into a raw Scalar-combination of exponent vectors."""
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# Text form.

def _power_text(name: str, k: int) -> str:
    if k == 1:
        return name
    return f"{name}^{k}" if k >= 0 else f"{name}^{k}"


def monomial_text(mono: Monomial | Vec) -> str:
    a, b, m, n = mono
    parts = []
    if a:
        parts.append(_power_text("cwm2", a))
    if b:
        parts.append(_power_text("cxwm2", b))
    if m:
        parts.append(_power_text("cw", m))
    if n:
        parts.append(_power_text("cxw", n))
    return "*".join(parts) if parts else "1"


def _scalar_term_text(i: int, j: int, c: int, lead: bool) -> str:
    body = []
    if i:
        body.append(_power_text("e", i))
    if j:
        body.append(_power_text("xi", j))
    mag = abs(c)
    if mag != 1 or not body:
        body.insert(0, str(mag))
    text = "*".join(body)
    if lead:
        return text if c > 0 else f"-{text}"
    return ("+" if c > 0 else "-") + text


def scalar_text(s: Scalar) -> str:
    """Compact sum of e^i*xi^j terms in (j, i)-lexicographic order, kappa
    last."""
    if s.is_zero():
        return "0"
    parts = []
    for (i, j), c in s.poly_items():
        parts.append(_scalar_term_text(i, j, c, lead=not parts))
    if s.kappa:
        mag = abs(s.kappa)
        text = "kappa" if mag == 1 else f"{mag}*kappa"
        if not parts:
            parts.append(text if s.kappa > 0 else f"-{text}")
        else:
            parts.append(("+" if s.kappa > 0 else "-") + text)
    return "".join(parts)


def element_text(el: Element) -> str:
    if el.is_zero():
        return "0"
    chunks = []
    for mono, s in el.items():
        mono_txt = monomial_text(mono)
        coeff_txt = scalar_text(s)
        multi = ("+" in coeff_txt[1:]) or ("-" in coeff_txt[1:])
        if mono_txt == "1":
            piece = f"({coeff_txt})" if multi else coeff_txt
        elif multi:
            piece = f"({coeff_txt})*{mono_txt}"
        elif coeff_txt == "1":
            piece = mono_txt
        elif coeff_txt == "-1":
            piece = f"-{mono_txt}"
        else:
            piece = f"{coeff_txt}*{mono_txt}"
        chunks.append(piece)
    out = chunks[0]
    for piece in chunks[1:]:
        if piece.startswith("-"):
            out += f" - {piece[1:]}"
        else:
            out += f" + {piece}"
    return out


# ---------------------------------------------------------------------------
# LaTeX form, mirroring the c_omega notation.

_LATEX_NAMES = ("c_{\\omega-2}", "c_{\\chi\\omega-2}", "c_{\\omega}", "c_{\\chi\\omega}")


def _latex_power(name: str, k: int) -> str:
    return name if k == 1 else f"{name}^{{{k}}}"


def monomial_latex(mono: Monomial | Vec) -> str:
    parts = [
        _latex_power(name, k) for name, k in zip(_LATEX_NAMES, mono) if k
    ]
    return " ".join(parts) if parts else "1"


def scalar_latex(s: Scalar) -> str:
    if s.is_zero():
        return "0"
    parts = []
    for (i, j), c in s.poly_items():
        body = []
        if i:
            body.append(_latex_power("e", i))
        if j:
            body.append(_latex_power("\\xi", j))
        mag = abs(c)
        if mag != 1 or not body:
            body.insert(0, str(mag))
        text = " ".join(body)
        parts.append((("-" if c < 0 else "") if not parts else ("+" if c > 0 else "-")) + text)
    if s.kappa:
        mag = abs(s.kappa)
        text = "\\kappa" if mag == 1 else f"{mag}\\kappa"
        sign = ("-" if s.kappa < 0 else "") if not parts else ("+" if s.kappa > 0 else "-")
        parts.append(sign + text)
    return "".join(parts)


def element_latex(el: Element) -> str:
    if el.is_zero():
        return "0"
    chunks = []
    for mono, s in el.items():
        mono_txt = monomial_latex(mono)
        coeff = scalar_latex(s)
        multi = ("+" in coeff[1:]) or ("-" in coeff[1:])
        if multi:
            coeff = f"({coeff})"
        if mono_txt == "1":
            chunks.append(coeff)
        elif coeff == "1":
            chunks.append(mono_txt)
        elif coeff == "-1":
            chunks.append(f"-{mono_txt}")
        else:
            chunks.append(f"{coeff} {mono_txt}")
    out = chunks[0]
    for piece in chunks[1:]:
        out += f" - {piece[1:]}" if piece.startswith("-") else f" + {piece}"
    return out


# ---------------------------------------------------------------------------
# JSON encoding.

def scalar_json(s: Scalar) -> dict:
    return {
        "poly": [[i, j, c] for (i, j), c in s.poly_items()],
        "kappa": s.kappa,
    }


def element_json(el: Element) -> dict:
    return {
        "grading": list(el.grading.astuple()) if el.grading is not None else None,
        "terms": [
            {"coeff": scalar_json(s), "mono": list(mono)} for mono, s in el.items()
        ],
    }


def print_element(el: Element, fmt: str = "text") -> str:
    if fmt == "text":
        return element_text(el)
    if fmt == "latex":
        return element_latex(el)
    if fmt == "json":
        import json

        return json.dumps(element_json(el), separators=(",", ":"))
    raise ValueError(f"unknown format {fmt!r}")
