"""Creation/annihilation operators on the Fock basis ``v_s`` and their
supercommutators.

``a+_r`` is ``v_r ^ .`` and ``a_r`` is ``v_r -| .``.  A
:class:`NormalOrderedOperator` is a finite sum ``sum c * a+_r a_s`` (order tag
``"ca"``) or ``sum c * a_s a+_r`` (order tag ``"ac"``); the tag is kept rather
than re-ordering, since re-ordering is exactly what the commutation identities
describe.
"""

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, ResourceLimitError
from .indices import (difference, intersection, mask_sign, pairs_gt, subsets, symdiff,
                      to_mask, union)
from .multivector import Multivector, lcontr, wedge
from .scalars import as_scalar

MAX_MATRIX_DIM = 12
ORDERS = ("ca", "ac")


def _check_index(r, n):
    r = tuple(r)
    if any(not isinstance(k, int) or k < 1 or k > n for k in r):
        raise DomainError(f"index tuple {r} must have entries in 1..{n}")
    if len(set(r)) != len(r):
        raise DomainError(f"index tuple {r} repeats an index")
    return r


def create(r, m: Multivector) -> Multivector:
    """``a+_r m = v_r ^ m``; ``r`` may be unordered (concatenation sign)."""
    r = _check_index(r, m.dim)
    return wedge(Multivector.blade(m.dim, r), m)


def annihilate(r, m: Multivector) -> Multivector:
    """``a_r m = v_r -| m``."""
    r = _check_index(r, m.dim)
    return lcontr(Multivector.blade(m.dim, r), m)


def _increasing(i):
    i = tuple(i)
    if any(b <= a for a, b in zip(i, i[1:])) or any(k < 1 for k in i):
        raise DomainError(f"{i} is not an increasing tuple of positive indices")
    return i


class NormalOrderedOperator:
    """``sum c * a+_create a_annihilate`` (tag ``ca``) or ``sum c * a_annihilate a+_create`` (tag ``ac``)."""

    __slots__ = ("terms", "order")

    def __init__(self, terms=(), order="ca"):
        if order not in ORDERS:
            raise DomainError(f"order tag must be one of {ORDERS}")
        acc = {}
        for c, cr, an in terms:
            key = (_increasing(cr), _increasing(an))
            acc[key] = acc.get(key, 0) + as_scalar(c)
        self.terms = tuple((c, cr, an) for (cr, an), c in sorted(acc.items()) if c != 0)
        self.order = order

    @classmethod
    def identity(cls, order="ca"):
        return cls([(1, (), ())], order)

    @classmethod
    def zero(cls, order="ca"):
        return cls([], order)

    def is_zero(self):
        return not self.terms

    def max_index(self):
        return max((k for _, cr, an in self.terms for k in cr + an), default=0)

    def parity(self):
        ps = {(len(cr) + len(an)) % 2 for _, cr, an in self.terms}
        if len(ps) > 1:
            raise DomainError("supercommutator requires homogeneous parity")
        return ps.pop() if ps else 0

    def __eq__(self, other):
        if not isinstance(other, NormalOrderedOperator):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return self.order == other.order and self.terms == other.terms

    def __hash__(self):
        return hash((self.order, self.terms))

    def __neg__(self):
        return NormalOrderedOperator([(-c, cr, an) for c, cr, an in self.terms], self.order)

    def scale(self, k):
        return NormalOrderedOperator([(k * c, cr, an) for c, cr, an in self.terms], self.order)

    def __add__(self, other):
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.order != other.order:
            raise DomainError("cannot add operators with different order tags")
        return NormalOrderedOperator(self.terms + other.terms, self.order)

    def apply(self, m: Multivector) -> Multivector:
        if self.max_index() > m.dim:
            raise DomainError(f"operator index {self.max_index()} exceeds dimension {m.dim}")
        out = Multivector.zero(m.dim)
        for c, cr, an in self.terms:
            if self.order == "ca":
                t = create(cr, annihilate(an, m))
            else:
                t = annihilate(an, create(cr, m))
            out = out + t.scale(c)
        return out

    def __call__(self, m):
        return self.apply(m)

    def __str__(self):
        return format_operator(self)

    def __repr__(self):
        return f"NormalOrderedOperator({format_operator(self)!r}, order={self.order!r})"


def _fmt_list(r):
    return "[" + ",".join(str(k) for k in r) + "]"


def format_operator(op: NormalOrderedOperator) -> str:
    """Text form: ``-1 a+[2,4,7] a[1,6]``; ``Id`` for the identity term, ``0`` for zero."""
    if op.is_zero():
        return "0"
    parts = []
    for c, cr, an in op.terms:
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if not cr and not an:
            body = "Id" if mag == 1 else f"{mag} Id"
        else:
            f_cr = f"a+{_fmt_list(cr)}" if cr else ""
            f_an = f"a{_fmt_list(an)}" if an else ""
            facs = [f_cr, f_an] if op.order == "ca" else [f_an, f_cr]
            body = f"{mag} " + " ".join(f for f in facs if f)
        parts.append(sign + body)
    if parts[0] == "+Id":
        parts[0] = "Id"
    return " ".join(parts)


_OP_TERM = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?P<coef>\d+(?:/\d+)?)?\s*"
    r"(?P<body>Id|(?:a\+?\[[\d,\s]*\]\s*)+)"
)
_FACTOR = re.compile(r"a(\+?)\[([\d,\s]*)\]")


def parse_operator(text: str) -> NormalOrderedOperator:
    from .textfmt import ParseError
    t = text.strip()
    if t == "0":
        return NormalOrderedOperator.zero()
    pos, terms, order = 0, [], None
    while pos < len(t):
        m = _OP_TERM.match(t, pos)
        if not m or m.end() == pos:
            raise ParseError("expected an operator term", pos)
        if terms and not m.group("sign"):
            raise ParseError("expected '+' or '-' between terms", pos)
        c = Fraction(m.group("coef") or 1) * (-1 if m.group("sign") == "-" else 1)
        cr, an, seq = (), (), []
        if m.group("body") != "Id":
            for f in _FACTOR.finditer(m.group("body")):
                idx = tuple(int(x) for x in f.group(2).replace(" ", "").split(",") if x)
                seq.append("c" if f.group(1) else "a")
                if f.group(1):
                    cr = idx
                else:
                    an = idx
            if len(seq) > 2 or len(set(seq)) != len(seq):
                raise ParseError("a term has at most one a+[..] and one a[..]", m.start("body"))
            if len(seq) == 2:
                tag = "ca" if seq[0] == "c" else "ac"
                if order and order != tag:
                    raise ParseError("mixed a+a and aa+ orderings", m.start("body"))
                order = tag
        terms.append((c, cr, an))
        pos = m.end()
    try:
        return NormalOrderedOperator(terms, order or "ca")
    except DomainError as e:
        raise ParseError(str(e), 0) from None


# -- named operators ------------------------------------------------------

def op_create(r) -> NormalOrderedOperator:
    return NormalOrderedOperator([(1, _increasing(r), ())])


def op_annihilate(r) -> NormalOrderedOperator:
    return NormalOrderedOperator([(1, (), _increasing(r))])


def vacancy(i) -> NormalOrderedOperator:
    """``m_i = a_i a+_i``: projects onto states with no index of ``i``."""
    i = _increasing(i)
    return NormalOrderedOperator([(1, i, i)], "ac")


def occupancy(i) -> NormalOrderedOperator:
    """``n_i = a+_i a_i``: projects onto states containing all of ``i``."""
    i = _increasing(i)
    return NormalOrderedOperator([(1, i, i)], "ca")


# -- supercommutators ------------------------------------------------------

def scom_apply(s: NormalOrderedOperator, t: NormalOrderedOperator, m: Multivector) -> Multivector:
    """``[[S, T]] m = S T m - (-1)^(|S||T|) T S m``."""
    sign = -1 if s.parity() * t.parity() else 1
    return s.apply(t.apply(m)) - t.apply(s.apply(m)).scale(sign)


def scom_expand(i, j, order="ca") -> NormalOrderedOperator:
    """Expansion of ``[[a+_i, a_j]]`` in ``a+ a`` terms (``order="ca"``) or of
    ``[[a_i, a+_j]]`` in ``a a+`` terms (``order="ac"``)."""
    i, j = _increasing(i), _increasing(j)
    if order not in ORDERS:
        raise DomainError(f"order must be one of {ORDERS}")
    sd = symdiff(i, j)
    terms = []
    for l in subsets(intersection(i, j)):
        if not l:
            continue
        p = pairs_gt(sd, l) if order == "ca" else pairs_gt(l, sd)
        c = -1 if (1 + len(l) + p) % 2 else 1
        if order == "ca":
            terms.append((c, difference(i, l), difference(j, l)))
        else:
            terms.append((c, difference(j, l), difference(i, l)))
    return NormalOrderedOperator(terms, order)


def scom_expand_diagonal(i, variant="dagger-first") -> NormalOrderedOperator:
    """``[[a_i, a+_i]] = sum_{j < i} (-1)^|j| a+_j a_j`` (``dagger-first``) or
    ``[[a+_i, a_i]] = sum_{j < i} (-1)^|j| a_j a+_j`` (``plain-first``).

    The empty ``i`` gives the zero operator (``a_() = Id``)."""
    i = _increasing(i)
    if variant not in ("dagger-first", "plain-first"):
        raise DomainError("variant must be 'dagger-first' or 'plain-first'")
    order = "ca" if variant == "dagger-first" else "ac"
    if not i:
        return NormalOrderedOperator.zero(order)
    terms = [((-1) ** len(j), j, j) for j in subsets(i) if j != i]
    return NormalOrderedOperator(terms, order)


@dataclass(frozen=True)
class VennPartition:
    a: tuple
    b: tuple
    c: tuple
    d: tuple
    e: tuple
    x: tuple
    y: tuple

    def as_dict(self):
        return {k: getattr(self, k) for k in "abcdexy"}


def venn_partition(i, j, k) -> VennPartition:
    i, j, k = _increasing(i), _increasing(j), _increasing(k)
    si, sj, sk = set(i), set(j), set(k)
    srt = lambda s: tuple(sorted(s))  # noqa: E731
    return VennPartition(
        a=srt(si - sj - sk),
        b=srt((sj & sk) - si),
        c=srt(si & sj & sk),
        d=srt((si & sj) - sk),
        e=srt(sk - si - sj),
        x=srt(sj - si - sk),
        y=srt((si & sk) - sj),
    )


def scom_direct(i, j, k):
    """``[[a+_i, a_j]] v_k`` in closed form: ``(coefficient, target)``; ``(0, None)`` when it vanishes."""
    vp = venn_partition(i, j, k)
    if vp.x or vp.y:
        return 0, None
    coef = (not vp.d) - (not vp.c)
    if coef == 0:
        return 0, None
    sign = (-1) ** (len(vp.d) + pairs_gt(union(vp.a, vp.b), union(vp.d, vp.e)))
    return coef * sign, union(union(vp.a, vp.c), vp.e)


# -- brute-force matrix oracle ----------------------------------------------

def _require_numpy():
    import numpy
    return numpy


def _elementary(n, r, kind):
    np = _require_numpy()
    size = 1 << n
    mat = np.zeros((size, size), dtype=np.int64)
    rm = to_mask(r)
    for s in range(size):
        if kind == "c":
            if rm & s:
                continue
            mat[rm | s, s] = mask_sign(rm, s)
        else:
            if rm & s != rm:
                continue
            mat[s ^ rm, s] = mask_sign(rm, s ^ rm)
    return mat


def operator_matrix(op: NormalOrderedOperator, n: int):
    """Matrix of ``op`` on the ``2^n`` basis states, indexed by blade bitset.

    Integer coefficients give an ``int64`` array; otherwise an object array of
    exact scalars.
    """
    if n > MAX_MATRIX_DIM:
        raise ResourceLimitError(f"operator matrices are capped at n = {MAX_MATRIX_DIM}")
    if op.max_index() > n:
        raise DomainError(f"operator index {op.max_index()} exceeds dimension {n}")
    np = _require_numpy()
    size = 1 << n
    integral = all(Fraction(c).denominator == 1 if not hasattr(c, "im") else False
                   for c, _, _ in op.terms)
    out = np.zeros((size, size), dtype=np.int64 if integral else object)
    if not integral:
        out[:, :] = Fraction(0)
    for c, cr, an in op.terms:
        ce, ae = _elementary(n, cr, "c"), _elementary(n, an, "a")
        prod = ce @ ae if op.order == "ca" else ae @ ce
        out = out + (int(c) if integral else c) * prod
    return out


def scom_matrix(s, t, n):
    """Matrix of ``[[S, T]]`` built from the matrices of ``S`` and ``T``."""
    sign = -1 if s.parity() * t.parity() else 1
    ms, mt = operator_matrix(s, n), operator_matrix(t, n)
    return ms @ mt - sign * (mt @ ms)


def basis_state(n, k) -> Multivector:
    return Multivector.blade(n, _increasing(k))


def mask_scom_sign(i, j):
    """``(-1)^(1+|i||j|)``: relates ``[[a+_i, a_j]]`` to ``[[a_i, a+_j]]``."""
    return -1 if (1 + len(i) * len(j)) % 2 else 1


__all__ = [
    "create", "annihilate", "NormalOrderedOperator", "format_operator", "parse_operator",
    "op_create", "op_annihilate", "vacancy", "occupancy", "scom_apply", "scom_expand",
    "scom_expand_diagonal", "VennPartition", "venn_partition", "scom_direct",
    "operator_matrix", "scom_matrix", "basis_state", "mask_scom_sign", "MAX_MATRIX_DIM",
]
