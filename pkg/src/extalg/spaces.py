"""Inner and outer spaces, generalized grades and balance predicates."""

from dataclasses import dataclass
from functools import reduce

from .errors import DomainError
from .linalg import Subspace, nullspace
from .multivector import Multivector, lcontr, wedge
from .scalars import conj


def _unit_vectors(n):
    return [Multivector(n, {1 << k: 1}) for k in range(n)]


def _kernel(images, n):
    """Kernel of ``x -> sum_k x_k images[k]`` as coordinate vectors."""
    masks = sorted({m for img in images for m in img.terms})
    rows = [[img.coeff(m) for img in images] for m in masks]
    return nullspace(rows, n)


def inner_space(m: Multivector) -> Subspace:
    """``{v : v ^ m = 0}``.  The zero multivector gives the whole space."""
    n = m.dim
    if m.is_zero():
        return Subspace.full(n)
    return Subspace(n, _kernel([wedge(e, m) for e in _unit_vectors(n)], n))


def outer_space(m: Multivector) -> Subspace:
    """Orthogonal complement of ``{v : v -| m = 0}``; smallest ``V`` with ``m`` in ``ΛV``."""
    n = m.dim
    if m.is_zero():
        return Subspace.zero(n)
    # v -| m is conjugate-linear in v, so the kernel is conj of the matrix kernel
    ker = _kernel([lcontr(e, m) for e in _unit_vectors(n)], n)
    return Subspace(n, [tuple(conj(x) for x in v) for v in ker]).perp()


@dataclass(frozen=True)
class GradeProfile:
    igrade: int
    bgrade: int
    tgrade: int
    ograde: int

    def as_tuple(self):
        return (self.igrade, self.bgrade, self.tgrade, self.ograde)


def grade_profile(m: Multivector) -> GradeProfile:
    if m.is_zero():
        raise DomainError("grades undefined at zero")
    g = m.grades()
    return GradeProfile(inner_space(m).dim, g[0], g[-1], outer_space(m).dim)


def is_pperp(u: Subspace, v: Subspace) -> bool:
    """Partial orthogonality: ``v^⊥ ∩ u != {0}``."""
    return (v.perp() & u).dim > 0


def is_blade(m: Multivector) -> bool:
    """Nonzero and simple (scalars count as blades)."""
    return not m.is_zero() and inner_space(m) == outer_space(m)


def blade_space(b: Multivector) -> Subspace:
    """``[B]`` for a nonzero blade."""
    if not is_blade(b):
        raise DomainError("not a nonzero blade")
    return inner_space(b)


def _total(parts):
    if not parts:
        raise DomainError("need at least one part")
    return reduce(lambda a, b: a + b, parts)


def is_inner_balanced(parts) -> bool:
    total = _total(parts)
    common = reduce(lambda a, b: a & b, (inner_space(p) for p in parts))
    return inner_space(total) == common


def is_outer_balanced(parts) -> bool:
    total = _total(parts)
    span = reduce(lambda a, b: a + b, (outer_space(p) for p in parts))
    return outer_space(total) == span


def is_balanced(parts) -> bool:
    return is_inner_balanced(parts) and is_outer_balanced(parts)
