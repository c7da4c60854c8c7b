"""Blade factorizations ``M = B ^ N``, blade carvings ``M = N -| B`` and
balanced blade decompositions."""

from dataclasses import dataclass
from itertools import combinations

from .errors import (DomainError, NotAFactorizationError, NotInnerBladeError,
                     NotOuterBladeError)
from .linalg import Subspace, solve
from .multivector import Multivector, blade_from_vectors, lcontr, rcontr, wedge
from .scalars import conj
from .spaces import blade_space, inner_space, is_blade, outer_space


@dataclass(frozen=True)
class Factorization:
    """``M = B ^ N`` with its classification flags."""
    B: Multivector
    N: Multivector
    tight: bool
    orthogonal: bool
    maximal: bool


@dataclass(frozen=True)
class Carving:
    """``M = N -| B`` with its classification flags."""
    N: Multivector
    B: Multivector
    tight: bool
    internal: bool
    minimal: bool


def _nonzero(m, what="multivector"):
    if m.is_zero():
        raise DomainError(f"{what} must be nonzero")


def subspace_blade(space: Subspace) -> Multivector:
    """Wedge of the canonical basis of ``space`` (the scalar 1 for ``{0}``)."""
    return blade_from_vectors(space.n, space.basis)


def exterior_basis(space: Subspace):
    """Wedges of all subsets of the canonical basis of ``space``."""
    vecs = space.basis
    return [blade_from_vectors(space.n, [vecs[k] for k in c])
            for p in range(len(vecs) + 1) for c in combinations(range(len(vecs)), p)]


def maximal_inner_blade(m: Multivector) -> Multivector:
    _nonzero(m)
    return subspace_blade(inner_space(m))


def minimal_outer_blade(m: Multivector) -> Multivector:
    _nonzero(m)
    return subspace_blade(outer_space(m))


def _check_blade(b):
    if not is_blade(b):
        raise DomainError("B must be a nonzero blade")


def orthogonal_factor(m: Multivector, b: Multivector) -> Multivector:
    """``(B -| M) / |B|^2``, the ``N`` of the orthogonal factorization by ``B``."""
    _check_blade(b)
    if not blade_space(b) <= inner_space(m):
        raise NotInnerBladeError("B is not an inner blade of M")
    return lcontr(b, m) / b.norm2()


def internal_carving(m: Multivector, b: Multivector) -> Multivector:
    """``(B |- M) / |B|^2``, the ``N`` of the internal carving of ``B``."""
    _check_blade(b)
    if not outer_space(m) <= blade_space(b):
        raise NotOuterBladeError("B is not an outer blade of M")
    return rcontr(b, m) / b.norm2()


def classify_factorization(m: Multivector, b: Multivector, n: Multivector) -> Factorization:
    _check_blade(b)
    if wedge(b, n) != m:
        raise NotAFactorizationError("B ^ N != M: not a factorization of M")
    span = blade_space(b)
    on = outer_space(n)
    return Factorization(
        B=b, N=n,
        tight=(on & span).dim == 0,
        orthogonal=on <= span.perp(),
        maximal=span == inner_space(m),
    )


def classify_carving(m: Multivector, n: Multivector, b: Multivector) -> Carving:
    _check_blade(b)
    if lcontr(n, b) != m:
        raise NotAFactorizationError("N -| B != M: not a carving of M")
    span = blade_space(b)
    on = outer_space(n)
    return Carving(
        N=n, B=b,
        tight=(on & span.perp()).dim == 0,
        internal=on <= span,
        minimal=span == outer_space(m),
    )


def factor_maximal_orthogonal(m: Multivector) -> Factorization:
    """The maximal orthogonal blade factorization, with ``[B]`` the inner space."""
    b = maximal_inner_blade(m)
    n = lcontr(b, m) / b.norm2()
    return classify_factorization(m, b, n)


def carve_minimal_internal(m: Multivector) -> Carving:
    """The minimal internal blade carving, with ``[B]`` the outer space."""
    b = minimal_outer_blade(m)
    n = rcontr(b, m) / b.norm2()
    return classify_carving(m, n, b)


def _solve_in(m, columns, space):
    masks = sorted({k for c in columns for k in c.terms} | set(m.terms))
    rows = [[c.coeff(k) for c in columns] for k in masks]
    rhs = [m.coeff(k) for k in masks]
    x = solve(rows, rhs, len(columns))
    if x is None:
        raise DomainError("no solution in the exterior algebra of the complement")
    return x


def factor_in_complement(m: Multivector, b: Multivector, complement: Subspace = None) -> Multivector:
    """The unique ``N`` in ``Λ complement`` with ``B ^ N = M``.

    ``complement`` defaults to ``[B]^⊥``.
    """
    _check_blade(b)
    span = blade_space(b)
    if not span <= inner_space(m):
        raise NotInnerBladeError("B is not an inner blade of M")
    v = span.perp() if complement is None else complement
    if not v.is_complement_of(span):
        raise DomainError("V is not a complement of [B]")
    basis = exterior_basis(v)
    x = _solve_in(m, [wedge(b, w) for w in basis], v)
    out = Multivector.zero(m.dim)
    for c, w in zip(x, basis):
        out = out + w.scale(c)
    return out


def carve_in_complement(m: Multivector, b: Multivector, complement: Subspace = None) -> Multivector:
    """The unique ``N`` in ``Λ complement`` with ``N -| B = M``.

    ``complement`` must complement ``[B]^⊥``; it defaults to ``[B]``.
    """
    _check_blade(b)
    span = blade_space(b)
    if not outer_space(m) <= span:
        raise NotOuterBladeError("B is not an outer blade of M")
    v = span if complement is None else complement
    if not v.is_complement_of(span.perp()):
        raise DomainError("V is not a complement of [B]^⊥")
    basis = exterior_basis(v)
    # N -| B is conjugate-linear in N: solve for the conjugated coefficients
    x = _solve_in(m, [lcontr(w, b) for w in basis], v)
    out = Multivector.zero(m.dim)
    for c, w in zip(x, basis):
        out = out + w.scale(conj(c))
    return out


def balanced_blade_decomposition(m: Multivector) -> list:
    """Blades ``B ^ A_i`` summing to ``M``, balanced both inside and outside.

    ``B`` is the maximal inner blade, ``N = (B -| M)/|B|^2`` is expanded in the
    exterior basis of ``O(M) ∩ [B]^⊥``, which equals ``O(N)``.
    """
    f = factor_maximal_orthogonal(m)
    space = outer_space(m) & blade_space(f.B).perp()
    basis = exterior_basis(space)
    x = _solve_in(f.N, basis, space)
    return [wedge(f.B, w.scale(c)) for c, w in zip(x, basis) if c != 0]


def bivector_rank(h: Multivector) -> int:
    """Largest ``k`` with ``H ^ ... ^ H`` (``k`` factors) nonzero."""
    if h.is_zero() or h.grades() != [2]:
        raise DomainError("bivector_rank needs a nonzero homogeneous grade-2 multivector")
    k, power = 1, h
    while True:
        nxt = wedge(power, h)
        if nxt.is_zero():
            return k
        k, power = k + 1, nxt
