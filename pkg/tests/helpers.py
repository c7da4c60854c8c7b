"""Shared hypothesis strategies and small constructors for the tests."""

from collections import Counter
from fractions import Fraction

from hypothesis import strategies as st

from extalg import Multivector, parse_multivector, wedge
from extalg.indices import from_mask

small_int = st.integers(-3, 3)
rational = st.builds(Fraction, st.integers(-4, 4), st.integers(1, 3))


def mv(text, dim):
    return parse_multivector(text, dim)


@st.composite
def multivectors(draw, n, grades=None, max_terms=5, coeffs=small_int):
    """Sparse multivector in dimension ``n`` with coefficients from ``coeffs``."""
    masks = [m for m in range(1 << n) if grades is None or bin(m).count("1") in grades]
    chosen = draw(st.lists(st.sampled_from(masks), max_size=max_terms, unique=True))
    return Multivector(n, {m: draw(coeffs) for m in chosen})


@st.composite
def vectors(draw, n, coeffs=small_int):
    return Multivector.vector([draw(coeffs) for _ in range(n)])


@st.composite
def blades(draw, n, p=None, coeffs=small_int):
    """Wedge of ``p`` random vectors (possibly zero)."""
    if p is None:
        p = draw(st.integers(0, n))
    out = Multivector.scalar(n, draw(st.integers(1, 3)))
    for _ in range(p):
        out = wedge(out, draw(vectors(n, coeffs)))
    return out


@st.composite
def nonzero_blades(draw, n, p=None):
    b = draw(blades(n, p))
    if b.is_zero():
        # a coordinate blade keeps the search going instead of filtering
        q = p if p is not None else draw(st.integers(0, n))
        b = Multivector.blade(n, tuple(range(1, q + 1)))
    return b


@st.composite
def dims(draw, lo=1, hi=5):
    return draw(st.integers(lo, hi))


def indices_of(mask):
    return from_mask(mask)


# instances exercised per property, reported by the acceptance runner
TALLY = Counter()


def tally(name):
    TALLY[name] += 1
