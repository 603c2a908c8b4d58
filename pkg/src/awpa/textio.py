"""Text format for elements of A_n(F).

A term is "coef * x1^a1 * ... * xn^an * b(w1,...,wn) * s[one-line]" with
trivial pieces omitted: zero exponents, the all-units word, the identity
permutation, and a coefficient of 1.  The permutation part also parses as
"perm[...]".  The parser evaluates factors left to right with the engine
product, so any product of generators in any order is accepted; printing
always emits canonical normal-form terms, so round-tripping is exact.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .engine import AwpaAlgebra, AwpaElem
from .errors import ParseError
from .scalars import parse_scalar

_X_RE = re.compile(r"^x(\d+)(?:\^(\d+))?$")
_WORD_RE = re.compile(r"^b\((.*)\)$")
_PERM_RE = re.compile(r"^(?:s|perm)\[(.*)\]$")


def _split_top(text: str, seps: str):
    """Split on separators at bracket depth zero."""
    parts = []
    depth = 0
    cur = []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if depth == 0 and ch in seps:
            parts.append("".join(cur))
            parts.append(ch)
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def parse_element(ctx: AwpaAlgebra, text: str) -> AwpaElem:
    text = text.strip()
    if not text:
        raise ParseError("empty element")
    if text == "0":
        return ctx.zero()
    out = ctx.zero()
    sign = 1
    for piece in _split_top(text, "+-"):
        piece = piece.strip()
        if piece == "":
            continue
        if piece == "+":
            continue
        if piece == "-":
            sign = -sign
            continue
        out = out + sign * _parse_term(ctx, piece)
        sign = 1
    return out


def _parse_term(ctx: AwpaAlgebra, text: str) -> AwpaElem:
    factors = [f.strip() for f in _split_top(text, "*")]
    factors = [f for f in factors if f and f != "*"]
    # labels may contain '*' (e.g. Taft's y*g); re-join word factors split apart
    merged = []
    for f in factors:
        if merged and merged[-1].count("(") > merged[-1].count(")"):
            merged[-1] += "*" + f
        else:
            merged.append(f)
    elem = ctx.one()
    for f in merged:
        elem = ctx.mul(elem, _parse_factor(ctx, f))
    return elem


def _parse_factor(ctx: AwpaAlgebra, f: str) -> AwpaElem:
    m = _X_RE.match(f)
    if m:
        i = int(m.group(1))
        e = int(m.group(2) or 1)
        if not 1 <= i <= ctx.n:
            raise ParseError(f"no generator x{i} for n={ctx.n}")
        return ctx.x(i, e)
    m = _WORD_RE.match(f)
    if m:
        labels = [s.strip() for s in _split_top(m.group(1), ",") if s.strip() != ","]
        labels = [s for s in labels if s]
        if len(labels) != ctx.n:
            raise ParseError(f"word needs {ctx.n} slots, got {len(labels)}")
        word = []
        for lbl in labels:
            if lbl not in ctx.F.basis_labels:
                raise ParseError(f"unknown basis label {lbl!r}")
            word.append(ctx.F.basis_labels.index(lbl))
        return ctx.monomial(ctx.zero_alpha, word, ctx.identity_perm)
    m = _PERM_RE.match(f)
    if m:
        try:
            oneline = tuple(int(v) for v in m.group(1).split(","))
        except ValueError as exc:
            raise ParseError(f"bad permutation {f!r}") from exc
        if sorted(oneline) != list(range(1, ctx.n + 1)):
            raise ParseError(f"{f!r} is not a permutation of 1..{ctx.n}")
        return ctx.perm_elem(oneline)
    try:
        return ctx.scalar_elem(parse_scalar(f, ctx.F.conductor))
    except ParseError as exc:
        raise ParseError(f"cannot parse factor {f!r}") from exc


def _coeff_parts(c) -> tuple[int, str]:
    """(sign, magnitude-string); sign only extracted for rational coefficients."""
    if c.is_rational():
        r = c.rational_part()
        mag = -r if r < 0 else r
        return (-1 if r < 0 else 1), str(mag)
    return 1, f"({c})"


def term_str(ctx: AwpaAlgebra, key, coeff) -> tuple[int, str]:
    alpha, word, pi = key
    sign, mag = _coeff_parts(coeff)
    bits = []
    if mag != "1":
        bits.append(mag)
    for i, e in enumerate(alpha):
        if e == 1:
            bits.append(f"x{i + 1}")
        elif e > 1:
            bits.append(f"x{i + 1}^{e}")
    unit_word = ctx.F.unit.count(ctx.F.scalar(1)) == 1 and all(
        (c == 1 or not c) for c in ctx.F.unit
    )
    if unit_word:
        unit_idx = next(i for i, c in enumerate(ctx.F.unit) if c)
        word_trivial = all(b == unit_idx for b in word)
    else:
        word_trivial = False
    if not word_trivial:
        labels = ",".join(ctx.F.basis_labels[b] for b in word)
        bits.append(f"b({labels})")
    if pi != ctx.identity_perm:
        bits.append("s[" + ",".join(map(str, pi)) + "]")
    if not bits:
        bits = [mag]
    return sign, "*".join(bits)


def sort_key(key):
    """Canonical term order: descending in the exponent vector, then by
    basis-word index and one-line permutation."""
    alpha, word, pi = key
    return (tuple(-a for a in alpha), word, pi)


def element_str(elem: AwpaElem) -> str:
    if not elem.terms:
        return "0"
    ctx = elem.ctx
    pieces = []
    for key in sorted(elem.terms, key=sort_key):
        sign, body = term_str(ctx, key, elem.terms[key])
        if not pieces:
            pieces.append(body if sign > 0 else f"-{body}")
        else:
            pieces.append(("+ " if sign > 0 else "- ") + body)
    return " ".join(pieces)
