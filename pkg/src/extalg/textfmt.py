"""Canonical text forms for multivectors, vectors and Plücker relations.

Multivector grammar (whitespace is ignored)::

    mv     := [sign] term (sign term)*
    term   := coeff ["*" blade] | blade
    coeff  := int ["/" posint]            (rational field)
            | "(" rat sign rat "i" ")"    (gaussian field; plain rationals also accepted)
    blade  := "1" | "e" digits            (digits form only when dim <= 9)
            | "e{" int ("," int)* "}"

Canonical output sorts terms by grade, then by index tuple, writes
coefficients in lowest terms, drops unit coefficients on non-scalar blades and
uses the brace form whenever ``dim > 9``.
"""

import re
from fractions import Fraction

from .errors import DomainError
from .indices import from_mask, grade, to_mask
from .scalars import Gaussian


class ParseError(DomainError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


_RAT = r"\d+(?:/\d+)?"
_TOKEN = re.compile(
    r"\s*(?:"
    rf"(?P<gauss>\(\s*(?P<gre>[+-]?{_RAT})\s*(?P<gsign>[+-])\s*(?P<gim>{_RAT})\s*i\s*\))"
    rf"|(?P<rat>{_RAT})"
    r"|(?P<brace>e\{\s*\d+(?:\s*,\s*\d+)*\s*\})"
    r"|(?P<compact>e\d+)"
    r"|(?P<sign>[+-])"
    r"|(?P<star>\*)"
    r")"
)


def _tokens(text):
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos:pos + 1]!r}", pos)
        kind = next(name for name in ("gauss", "rat", "brace", "compact", "sign", "star")
                    if m.group(name) is not None)
        start = m.start(kind)
        yield kind, m, start
        pos = m.end()


def _blade_mask(kind, m, start, dim):
    if kind == "compact":
        if dim > 9:
            raise ParseError("compact blade form needs dim <= 9; use e{...}", start)
        idx = [int(ch) for ch in m.group("compact")[1:]]
    else:
        idx = [int(x) for x in re.findall(r"\d+", m.group("brace"))]
    if any(k < 1 or k > dim for k in idx):
        raise ParseError(f"blade index outside 1..{dim}", start)
    if len(set(idx)) != len(idx):
        raise ParseError("repeated index in blade", start)
    inversions = sum(1 for a in range(len(idx)) for b in range(a + 1, len(idx)) if idx[a] > idx[b])
    return to_mask(sorted(idx)), (-1 if inversions % 2 else 1)


def parse_multivector(text: str, dim: int, field: str = "rational"):
    """Parse the text form into a :class:`Multivector` of dimension ``dim``."""
    from .multivector import Multivector

    if field not in ("rational", "gaussian"):
        raise DomainError(f"unknown field {field!r}")
    toks = list(_tokens(text))
    if not toks:
        raise ParseError("empty input", 0)
    terms = {}
    i = 0
    first = True
    while i < len(toks):
        sign = 1
        kind, m, start = toks[i]
        if kind == "sign":
            sign = -1 if m.group("sign") == "-" else 1
            i += 1
            if i == len(toks):
                raise ParseError("dangling sign", start)
            kind, m, start = toks[i]
        elif not first:
            raise ParseError("expected '+' or '-'", start)
        first = False
        coeff = Fraction(1)
        mask = None
        if kind == "rat":
            coeff = Fraction(m.group("rat"))
            i += 1
            if i < len(toks) and toks[i][0] == "star":
                i += 1
                if i == len(toks):
                    raise ParseError("expected blade after '*'", toks[i - 1][2])
                kind, m, start = toks[i]
                if kind == "rat" and m.group("rat") == "1":
                    mask = 0
                elif kind in ("compact", "brace"):
                    mask, s = _blade_mask(kind, m, start, dim)
                    coeff *= s
                else:
                    raise ParseError("expected blade after '*'", start)
                i += 1
            else:
                mask = 0
        elif kind == "gauss":
            if field != "gaussian":
                raise ParseError("complex coefficient requires the gaussian field", start)
            im = Fraction(m.group("gim"))
            if m.group("gsign") == "-":
                im = -im
            coeff = Gaussian(Fraction(m.group("gre")), im)
            i += 1
            if i < len(toks) and toks[i][0] == "star":
                i += 1
                if i == len(toks):
                    raise ParseError("expected blade after '*'", toks[i - 1][2])
                kind, m, start = toks[i]
                if kind == "rat" and m.group("rat") == "1":
                    mask = 0
                elif kind in ("compact", "brace"):
                    mask, s = _blade_mask(kind, m, start, dim)
                    coeff = coeff * s
                else:
                    raise ParseError("expected blade after '*'", start)
                i += 1
            else:
                mask = 0
        elif kind in ("compact", "brace"):
            mask, s = _blade_mask(kind, m, start, dim)
            coeff = Fraction(s)
            i += 1
        else:
            raise ParseError("expected a term", start)
        value = coeff * sign
        if field == "gaussian" and not isinstance(value, Gaussian):
            value = Gaussian(value, 0)
        terms[mask] = terms.get(mask, 0) + value
    return Multivector(dim, terms)


def format_blade(mask: int, dim: int) -> str:
    idx = from_mask(mask)
    if not idx:
        return "1"
    if dim <= 9:
        return "e" + "".join(str(k) for k in idx)
    return "e{" + ",".join(str(k) for k in idx) + "}"


def format_gaussian(z) -> str:
    if not isinstance(z, Gaussian):
        z = Gaussian(z, 0)
    sign = "-" if z.im < 0 else "+"
    return f"({z.re}{sign}{abs(z.im)}i)"


def format_multivector(m, field: str = None) -> str:
    if field is None:
        field = "gaussian" if any(isinstance(v, Gaussian) and v.im != 0
                                  for _, v in m.items()) else "rational"
    items = m.items()
    if not items:
        return "0"
    parts = []
    for mask, c in items:
        blade = format_blade(mask, m.dim)
        if field == "gaussian":
            text = format_gaussian(c) if mask == 0 else f"{format_gaussian(c)}*{blade}"
            parts.append(("+", text))
            continue
        c = Fraction(c.re) if isinstance(c, Gaussian) else c
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if mask == 0:
            text = str(a)
        elif a == 1:
            text = blade
        else:
            text = f"{a}*{blade}"
        parts.append((sign, text))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, text in parts[1:]:
        out += f" {sign} {text}"
    return out


def format_scalar(c) -> str:
    if isinstance(c, Gaussian):
        return format_gaussian(c)
    return str(c)


def format_vector(v) -> str:
    return "(" + ", ".join(format_scalar(x) for x in v) + ")"


def format_index_list(i) -> str:
    return "[" + ",".join(str(k) for k in i) + "]"


def parse_index_list(text: str):
    """Accept ``2347``, ``2,3,4,7`` or ``[2,3,4,7]``; the empty list is ``[]`` or ``-``."""
    t = text.strip().strip("[]").strip()
    if t in ("", "-"):
        return ()
    if "," in t:
        parts = [p.strip() for p in t.split(",")]
    else:
        parts = list(t)
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise ParseError(f"bad index list {text!r}", 0) from None


def parse_vector(text: str, dim: int):
    """Parse a comma-separated coordinate vector like ``1,-1/2,0``."""
    parts = [p.strip() for p in text.strip().strip("()").split(",")]
    if len(parts) != dim:
        raise ParseError(f"expected {dim} coordinates, got {len(parts)}", 0)
    try:
        return tuple(Fraction(p) for p in parts)
    except ValueError:
        raise ParseError(f"bad coordinate in {text!r}", 0) from None


def blade_grade(mask):
    return grade(mask)
