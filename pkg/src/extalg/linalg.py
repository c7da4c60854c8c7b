"""Exact Gaussian elimination and canonical subspaces.

Matrices are lists of rows; entries are exact scalars (Fraction or Gaussian).
"""

from fractions import Fraction

from .errors import DomainError, MAX_DIM
from .scalars import as_scalar, conj


def rref(rows, ncols=None):
    """Reduced row-echelon form.  Returns ``(nonzero_rows, pivot_columns)``."""
    m = [[as_scalar(x) for x in row] for row in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return [tuple(row) for row in m[:r]], pivots


def nullspace(rows, ncols):
    """Basis of ``{x : A x = 0}`` for the matrix with the given rows."""
    red, pivots = rref(rows, ncols) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(red, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def solve(rows, rhs, ncols):
    """Solve ``A x = b``.  Returns one solution (free variables zero) or None."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    x = [Fraction(0)] * ncols
    for row, p in zip(red, pivots):
        x[p] = row[ncols]
    return tuple(x)


def rank(rows, ncols=None) -> int:
    return len(rref(rows, ncols)[0]) if rows else 0


def matmul(a, b):
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in zip(*b)]
            for row in a]


def conj_transpose(a):
    return [[conj(x) for x in col] for col in zip(*a)]


def inverse(a):
    n = len(a)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(a)]
    red, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(red) < n:
        raise DomainError("matrix is singular")
    return [list(row[n:]) for row in red]


def hdot(u, v):
    """Hermitian pairing, conjugate-linear in the first argument."""
    return sum((conj(a) * b for a, b in zip(u, v)), Fraction(0))


class Subspace:
    """A subspace of the ``n``-dimensional coordinate space, stored in RREF."""

    __slots__ = ("n", "basis", "pivots")

    def __init__(self, n: int, vectors=()):
        if n < 0 or n > MAX_DIM:
            raise DomainError(f"dimension {n} outside 0..{MAX_DIM}")
        vectors = [tuple(v) for v in vectors]
        for v in vectors:
            if len(v) != n:
                raise DomainError(f"vector of length {len(v)} in dimension {n}")
        red, pivots = rref(vectors, n) if vectors else ([], [])
        self.n = n
        self.basis = tuple(red)
        self.pivots = tuple(pivots)

    @classmethod
    def full(cls, n):
        return cls(n, [_unit(n, k) for k in range(n)])

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def coordinate(cls, n, indices):
        """Span of the basis vectors ``e_k`` for 1-based ``k`` in ``indices``."""
        return cls(n, [_unit(n, k - 1) for k in indices])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _check(self, other):
        if self.n != other.n:
            raise DomainError(f"ambient dimensions differ: {self.n} vs {other.n}")

    def contains(self, v) -> bool:
        v = tuple(v)
        return rank(list(self.basis) + [v], self.n) == self.dim

    def __contains__(self, v):
        return self.contains(v)

    def __le__(self, other) -> bool:
        self._check(other)
        return all(other.contains(b) for b in self.basis)

    def __ge__(self, other) -> bool:
        return other <= self

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.n == other.n and self.basis == other.basis

    def __hash__(self):
        return hash((self.n, self.basis))

    def __add__(self, other):
        self._check(other)
        return Subspace(self.n, self.basis + other.basis)

    def perp(self):
        """Orthogonal complement under the Hermitian pairing."""
        rows = [tuple(conj(x) for x in b) for b in self.basis]
        return Subspace(self.n, nullspace(rows, self.n))

    def __and__(self, other):
        self._check(other)
        return (self.perp() + other.perp()).perp()

    def is_complement_of(self, other) -> bool:
        self._check(other)
        return self.dim + other.dim == self.n and (self + other).dim == self.n

    def image(self, matrix):
        """Image under a linear map given as an ``m x n`` matrix."""
        m = len(matrix)
        return Subspace(m, [tuple(sum((row[k] * b[k] for k in range(self.n)), Fraction(0))
                                  for row in matrix) for b in self.basis])

    def __repr__(self):
        rows = ", ".join("(" + ", ".join(str(x) for x in b) + ")" for b in self.basis)
        return f"Subspace(n={self.n}, [{rows}])"


def _unit(n, k):
    return tuple(Fraction(int(i == k)) for i in range(n))
