"""Sparse exact multivectors over an orthonormal basis.

A :class:`Multivector` maps basis-blade bitsets to nonzero exact scalars.
Conventions (checked by the identity suite in the tests):

* ``v_r ^ v_s = eps_{rs} v_{<rs>}`` when ``r`` and ``s`` are disjoint;
* ``v_r -| v_s = eps_{r(s\\r)} v_{s\\r}`` (left contraction, adjoint of ``v_r ^``);
* ``v_s |- v_r = eps_{(s\\r)r} v_{s\\r}`` (right contraction, adjoint of ``^ v_r``);
* contractions and the pairing are conjugate-linear in the contracted factor.
"""

from fractions import Fraction

from .errors import DomainError, MAX_DIM
from .indices import from_mask, grade, mask_pairs_gt, mask_sign, to_mask
from .scalars import as_scalar, conj


class Multivector:
    __slots__ = ("dim", "_terms", "_hash")

    def __init__(self, dim: int, terms=None):
        if not 1 <= dim <= MAX_DIM:
            raise DomainError(f"dimension {dim} outside 1..{MAX_DIM}")
        full = (1 << dim) - 1
        clean = {}
        for mask, c in (terms or {}).items():
            if mask & ~full or mask < 0:
                raise DomainError(f"blade {from_mask(mask)} exceeds dimension {dim}")
            c = as_scalar(c)
            if c != 0:
                clean[mask] = c
        self.dim = dim
        self._terms = clean
        self._hash = None

    # -- construction ------------------------------------------------------

    @classmethod
    def _raw(cls, dim, terms):
        obj = cls.__new__(cls)
        obj.dim = dim
        obj._terms = {k: v for k, v in terms.items() if v != 0}
        obj._hash = None
        return obj

    @classmethod
    def scalar(cls, dim, value=1):
        return cls(dim, {0: value})

    @classmethod
    def zero(cls, dim):
        return cls(dim)

    @classmethod
    def blade(cls, dim, indices, coeff=1):
        """``coeff * v_{i1} ^ ... ^ v_{ip}``; indices may be unordered."""
        indices = tuple(indices)
        mask = to_mask(indices)
        sign = 1 if sum(1 for a in range(len(indices)) for b in range(a + 1, len(indices))
                        if indices[a] > indices[b]) % 2 == 0 else -1
        return cls(dim, {mask: sign * as_scalar(coeff)})

    @classmethod
    def vector(cls, coords):
        coords = list(coords)
        return cls(len(coords), {1 << k: c for k, c in enumerate(coords)})

    @classmethod
    def pseudoscalar(cls, dim):
        return cls(dim, {(1 << dim) - 1: 1})

    # -- container protocol -----------------------------------------------

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: (grade(kv[0]), from_mask(kv[0])))

    def coeff(self, mask: int):
        return self._terms.get(mask, Fraction(0))

    def coeff_of(self, indices):
        return self.coeff(to_mask(sorted(indices)))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def grades(self):
        return sorted({grade(m) for m in self._terms})

    def is_homogeneous(self) -> bool:
        return len(self.grades()) <= 1

    def to_vector(self):
        """Coordinates of a grade-1 multivector."""
        if any(grade(m) != 1 for m in self._terms):
            raise DomainError("not a vector")
        return tuple(self.coeff(1 << k) for k in range(self.dim))

    def __eq__(self, other):
        if isinstance(other, Multivector):
            return self.dim == other.dim and self._terms == other._terms
        if isinstance(other, (int, Fraction)) or hasattr(other, "conjugate"):
            try:
                return self._terms == Multivector.scalar(self.dim, other)._terms
            except TypeError:
                return NotImplemented
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.dim, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        from .textfmt import format_multivector
        return f"Multivector({self.dim}, {format_multivector(self)!r})"

    def __str__(self):
        from .textfmt import format_multivector
        return format_multivector(self)

    # -- linear structure --------------------------------------------------

    def _check(self, other):
        if not isinstance(other, Multivector):
            raise TypeError(f"expected Multivector, got {type(other).__name__}")
        if other.dim != self.dim:
            raise DomainError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def _lift(self, other):
        if isinstance(other, Multivector):
            self._check(other)
            return other
        return Multivector.scalar(self.dim, other)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, 0) + v
        return Multivector._raw(self.dim, out)

    __radd__ = __add__

    def __neg__(self):
        return Multivector._raw(self.dim, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def scale(self, c):
        c = as_scalar(c)
        return Multivector._raw(self.dim, {k: c * v for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return clifford(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, c):
        c = as_scalar(c)
        return Multivector._raw(self.dim, {k: v / c for k, v in self._terms.items()})

    def __xor__(self, other):
        return wedge(self, self._lift(other))

    def __rxor__(self, other):
        return wedge(self._lift(other), self)

    def __lshift__(self, other):
        """``M << N`` is the left contraction ``M -| N``."""
        return lcontr(self, self._lift(other))

    def __rshift__(self, other):
        """``M >> N`` is the right contraction ``M |- N``."""
        return rcontr(self, self._lift(other))

    def conjugate(self):
        return Multivector._raw(self.dim, {k: conj(v) for k, v in self._terms.items()})

    def norm2(self):
        return inner(self, self)

    # -- grade operations --------------------------------------------------

    def grade_part(self, p: int):
        return Multivector._raw(self.dim, {k: v for k, v in self._terms.items() if grade(k) == p})

    def grade_involution(self, k: int = 1):
        """``k``-fold grade involution."""
        if k % 2 == 0:
            return self
        return Multivector._raw(self.dim, {m: (-v if grade(m) % 2 else v)
                                           for m, v in self._terms.items()})

    def reversion(self):
        return Multivector._raw(self.dim, {m: (-v if (grade(m) * (grade(m) - 1) // 2) % 2 else v)
                                           for m, v in self._terms.items()})


def _bilinear(m, n, rule, conj_left=False, conj_right=False):
    m._check(n)
    out = {}
    for a, x in m._terms.items():
        if conj_left:
            x = conj(x)
        for b, y in n._terms.items():
            if conj_right:
                y = conj(y)
            r = rule(a, b)
            if r is None:
                continue
            mask, sign = r
            c = x * y
            out[mask] = out.get(mask, 0) + (c if sign > 0 else -c)
    return Multivector._raw(m.dim, out)


def _wedge_rule(a, b):
    if a & b:
        return None
    return a | b, mask_sign(a, b)


def _lcontr_rule(r, s):
    if r & ~s:
        return None
    rest = s & ~r
    return rest, mask_sign(r, rest)


def _rcontr_rule(s, r):
    if r & ~s:
        return None
    rest = s & ~r
    return rest, mask_sign(rest, r)


def _clifford_rule(a, b):
    return a ^ b, (-1 if mask_pairs_gt(a, b) & 1 else 1)


def wedge(m: Multivector, n: Multivector) -> Multivector:
    """Exterior product."""
    return _bilinear(m, n, _wedge_rule)


def lcontr(m: Multivector, n: Multivector) -> Multivector:
    """Left contraction ``m -| n``; conjugate-linear in ``m``."""
    return _bilinear(m, n, _lcontr_rule, conj_left=True)


def rcontr(m: Multivector, n: Multivector) -> Multivector:
    """Right contraction ``m |- n``; conjugate-linear in ``n``."""
    return _bilinear(m, n, _rcontr_rule, conj_right=True)


def clifford(m: Multivector, n: Multivector) -> Multivector:
    """Euclidean geometric product (basis vectors square to +1)."""
    return _bilinear(m, n, _clifford_rule)


def inner(m: Multivector, n: Multivector):
    """Hermitian pairing with orthonormal basis blades; conjugate-linear in ``m``."""
    m._check(n)
    total = Fraction(0)
    for k, x in m._terms.items():
        y = n._terms.get(k)
        if y is not None:
            total = total + conj(x) * y
    return total


def wedge_all(dim, factors):
    out = Multivector.scalar(dim)
    for f in factors:
        out = wedge(out, f)
    return out


def hodge_right(m: Multivector) -> Multivector:
    """Right dual ``m -| Omega``."""
    return lcontr(m, Multivector.pseudoscalar(m.dim))


def hodge_left(m: Multivector) -> Multivector:
    """Left dual ``Omega |- m``."""
    return rcontr(Multivector.pseudoscalar(m.dim), m)


def grade_part(m: Multivector, p: int) -> Multivector:
    return m.grade_part(p)


def grade_involution(m: Multivector, k: int = 1) -> Multivector:
    return m.grade_involution(k)


def reversion(m: Multivector) -> Multivector:
    return m.reversion()


def blade_from_vectors(dim, vectors) -> Multivector:
    """Wedge of coordinate vectors (an empty list gives the scalar 1)."""
    return wedge_all(dim, [Multivector.vector(v) for v in vectors])


class LinearMap:
    """A linear map ``X -> Y`` given by its ``m x n`` matrix in canonical bases."""

    __slots__ = ("matrix", "source_dim", "target_dim")

    def __init__(self, matrix):
        rows = [tuple(as_scalar(x) for x in row) for row in matrix]
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise DomainError("matrix must be a non-empty rectangular list of rows")
        self.matrix = tuple(rows)
        self.target_dim = len(rows)
        self.source_dim = len(rows[0])

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    def column(self, k):
        return tuple(row[k] for row in self.matrix)

    def apply_vector(self, v):
        return tuple(sum((row[k] * v[k] for k in range(self.source_dim)), Fraction(0))
                     for row in self.matrix)


def outermorphism_apply(t: LinearMap, m: Multivector) -> Multivector:
    """Extend ``t`` to the exterior algebra and apply it to ``m``."""
    if t.source_dim != m.dim:
        raise DomainError(f"map source dimension {t.source_dim} != multivector dimension {m.dim}")
    images = [Multivector.vector(t.column(k)) for k in range(t.source_dim)]
    out = Multivector.zero(t.target_dim)
    for mask, c in m._terms.items():
        out = out + wedge_all(t.target_dim, [images[i - 1] for i in from_mask(mask)]).scale(c)
    return out


def projector_matrix(space):
    """Matrix of the orthogonal projection onto a subspace."""
    from .linalg import conj_transpose, inverse, matmul
    n = space.n
    if space.dim == 0:
        return [[Fraction(0)] * n for _ in range(n)]
    a = [list(col) for col in zip(*space.basis)]          # n x k, basis as columns
    ah = conj_transpose(a)
    return matmul(matmul(a, inverse(matmul(ah, a))), ah)


def project(m: Multivector, space) -> Multivector:
    """Orthogonal projection of ``m`` onto the exterior algebra of ``space``."""
    if space.n != m.dim:
        raise DomainError(f"subspace dimension {space.n} != multivector dimension {m.dim}")
    return outermorphism_apply(LinearMap(projector_matrix(space)), m)


def basis_blades(dim, p=None):
    """All basis blades (optionally of one grade) as multivectors."""
    from itertools import combinations
    grades = range(dim + 1) if p is None else [p]
    out = []
    for q in grades:
        if 0 <= q <= dim:
            for c in combinations(range(1, dim + 1), q):
                out.append(Multivector(dim, {to_mask(c): 1}))
    return out
