"""Index tuples, permutation signs and ordered set operations.

Tuples hold 1-based indices.  Blades are addressed by bitsets where index
``i`` is bit ``i - 1``; the helpers at the bottom convert between the two.
"""

from itertools import combinations

from .errors import DomainError, MAX_DIM

IndexTuple = tuple


def increasing_tuples(q: int, p: int) -> list:
    """All strictly increasing ``p``-tuples from ``1..q`` in lexicographic order."""
    if p < 0 or p > q:
        raise DomainError(f"need 0 <= p <= q, got p={p}, q={q}")
    return list(combinations(range(1, q + 1), p))


def all_increasing_tuples(q: int) -> list:
    """Every increasing tuple from ``1..q``, by length then lexicographically."""
    return [t for p in range(q + 1) for t in combinations(range(1, q + 1), p)]


def _check_distinct(r):
    if len(set(r)) != len(r):
        raise DomainError(f"repeated index in {tuple(r)}")


def sort_with_sign(r) -> tuple:
    """Return ``(sorted(r), sign)`` with ``sign`` the parity of the sorting permutation."""
    r = tuple(r)
    _check_distinct(r)
    inversions = sum(1 for a, b in combinations(r, 2) if a > b)
    return tuple(sorted(r)), (-1 if inversions % 2 else 1)


def pairs_gt(r, s) -> int:
    """Number of pairs ``(i, j)`` with ``i`` in ``r``, ``j`` in ``s`` and ``i > j``."""
    return sum(1 for i in r for j in s if i > j)


def check_increasing(i):
    i = tuple(i)
    if any(a >= b for a, b in zip(i, i[1:])):
        raise DomainError(f"index tuple {i} is not strictly increasing")
    return i


def union(i, j):
    check_increasing(i), check_increasing(j)
    return tuple(sorted(set(i) | set(j)))


def intersection(i, j):
    check_increasing(i), check_increasing(j)
    return tuple(sorted(set(i) & set(j)))


def difference(i, j):
    check_increasing(i), check_increasing(j)
    return tuple(sorted(set(i) - set(j)))


def symdiff(i, j):
    check_increasing(i), check_increasing(j)
    return tuple(sorted(set(i) ^ set(j)))


def complement(i, q: int):
    check_increasing(i)
    if i and (i[0] < 1 or i[-1] > q):
        raise DomainError(f"{i} is not contained in 1..{q}")
    return tuple(k for k in range(1, q + 1) if k not in i)


def subsets(i):
    """All increasing sub-tuples of ``i``, by length then lexicographically."""
    i = tuple(i)
    return [c for p in range(len(i) + 1) for c in combinations(i, p)]


# -- bitset encoding ---------------------------------------------------------

def to_mask(r) -> int:
    mask = 0
    for k in r:
        if k < 1 or k > MAX_DIM:
            raise DomainError(f"index {k} outside 1..{MAX_DIM}")
        bit = 1 << (k - 1)
        if mask & bit:
            raise DomainError(f"repeated index in {tuple(r)}")
        mask |= bit
    return mask


def from_mask(mask: int) -> tuple:
    out = []
    k = 1
    while mask:
        if mask & 1:
            out.append(k)
        mask >>= 1
        k += 1
    return tuple(out)


def grade(mask: int) -> int:
    return mask.bit_count()


def mask_pairs_gt(a: int, b: int) -> int:
    """``pairs_gt`` on bitsets: pairs with the element of ``a`` above the one of ``b``."""
    count = 0
    a >>= 1
    while a:
        count += (a & b).bit_count()
        a >>= 1
    return count


def mask_sign(a: int, b: int) -> int:
    """Sign of the concatenation ``ab`` of two disjoint increasing tuples."""
    return -1 if mask_pairs_gt(a, b) & 1 else 1
