"""Plücker-type quadratic relation systems on grade-``p`` coefficients.

Four generators are provided:

``classical``          sum over k in K\\J of (-1)^<J△K|k> λ_{J∪k} λ_{K\\k},  |J|=p-1, |K|=p+1
``classical-signed``   sum_i (-1)^i λ_{J k_i} λ_{K\\k_i} with signed, unordered λ's
``reduced``            sum over 2-subsets K2 of K\\J of (-1)^<J△K|K2> λ_{J∪K2} λ_{K\\K2},
                       |J|=p-2, |K|=p+2
``reduced-expanded``   sum_{i<l} (-1)^(i+l) λ_{J k_i k_l} λ_{K\\k_i k_l}

Relations are kept in a canonical form: monomials ``c * λ_a λ_b`` with
``a <= b``, like monomials combined, zeros dropped, monomials sorted, and the
leading coefficient positive.
"""

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd

from .errors import DomainError
from .indices import increasing_tuples, pairs_gt, sort_with_sign, symdiff
from .multivector import Multivector

FORMS = ("classical", "classical-signed", "reduced", "reduced-expanded")


@dataclass(frozen=True)
class PluckerRelation:
    """``sum c * λ_a * λ_b = 0`` on the coefficients of a grade-``p`` element of dim ``n``."""
    p: int
    n: int
    monomials: tuple   # ((coeff, a, b), ...), canonical

    def __len__(self):
        return len(self.monomials)

    def primitive(self):
        """Same relation with coefficients divided by their gcd."""
        g = 0
        for c, _, _ in self.monomials:
            g = gcd(g, c)
        if g <= 1:
            return self
        return PluckerRelation(self.p, self.n, tuple((c // g, a, b) for c, a, b in self.monomials))

    def evaluate(self, h: Multivector):
        total = Fraction(0)
        for c, a, b in self.monomials:
            total = total + c * h.coeff_of(a) * h.coeff_of(b)
        return total

    def __str__(self):
        parts = []
        for c, a, b in self.monomials:
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            parts.append(f"{sign}{mag}l{{{','.join(map(str, a))}}}*l{{{','.join(map(str, b))}}}")
        return " ".join(parts) + " = 0"


def canonical(p, n, raw) -> PluckerRelation:
    """Canonical relation from raw ``(coeff, a, b)`` triples; may be empty."""
    acc = Counter()
    for c, a, b in raw:
        key = (a, b) if a <= b else (b, a)
        acc[key] += c
    mons = sorted((k, c) for k, c in acc.items() if c != 0)
    if mons and mons[0][1] < 0:
        mons = [(k, -c) for k, c in mons]
    return PluckerRelation(p, n, tuple((c, a, b) for (a, b), c in mons))


def _signed_lambda(indices):
    """``λ_r`` for an unordered tuple: ``(sign, sorted)`` or None when an index repeats."""
    if len(set(indices)) != len(indices):
        return None
    srt, sign = sort_with_sign(indices)
    return sign, srt


def _raw_terms(p, j, k, form):
    if form == "classical":
        jk = symdiff(j, k)
        for x in k:
            if x in j:
                continue
            sign = -1 if pairs_gt(jk, (x,)) % 2 else 1
            yield sign, tuple(sorted(j + (x,))), tuple(y for y in k if y != x)
    elif form == "classical-signed":
        for i, x in enumerate(k):
            lam = _signed_lambda(j + (x,))
            if lam is None:
                continue
            s, a = lam
            yield (-1) ** i * s, a, tuple(y for y in k if y != x)
    elif form == "reduced":
        jk = symdiff(j, k)
        free = [x for x in k if x not in j]
        for k2 in combinations(free, 2):
            sign = -1 if pairs_gt(jk, k2) % 2 else 1
            yield sign, tuple(sorted(j + k2)), tuple(y for y in k if y not in k2)
    elif form == "reduced-expanded":
        for i, l in combinations(range(len(k)), 2):
            lam = _signed_lambda(j + (k[i], k[l]))
            if lam is None:
                continue
            s, a = lam
            yield (-1) ** (i + l) * s, a, tuple(y for y in k if y not in (k[i], k[l]))
    else:
        raise DomainError(f"unknown relation form {form!r}; expected one of {FORMS}")


def _shapes(p, form):
    return (p - 1, p + 1) if form.startswith("classical") else (p - 2, p + 2)


def plucker_relation(p: int, n: int, j, k, form: str = "reduced") -> PluckerRelation:
    """The canonical relation attached to one index pair ``(j, k)``."""
    lj, lk = _shapes(p, form)
    j, k = tuple(j), tuple(k)
    if len(j) != lj or len(k) != lk or list(j) != sorted(set(j)) or list(k) != sorted(set(k)):
        raise DomainError(f"{form} relations need increasing j of length {lj} and k of length {lk}")
    if (j and j[-1] > n) or (k and k[-1] > n) or (j and j[0] < 1) or (k and k[0] < 1):
        raise DomainError(f"indices must lie in 1..{n}")
    return canonical(p, n, _raw_terms(p, j, k, form))


def index_pairs(p: int, n: int, form: str):
    """All ``(j, k)`` pairs of the shapes used by ``form``."""
    lj, lk = _shapes(p, form)
    if lj < 0 or lk > n:
        return []
    return [(j, k) for j in increasing_tuples(n, lj) for k in increasing_tuples(n, lk)]


def plucker_generate(p: int, n: int, form: str = "reduced", with_sources: bool = False):
    """All nontrivial canonical relations of ``form``, in ``(j, k)`` order.

    With ``with_sources`` the items are ``((j, k), relation)`` pairs.
    """
    if form not in FORMS:
        raise DomainError(f"unknown relation form {form!r}; expected one of {FORMS}")
    if not 1 <= p <= n:
        raise DomainError(f"need 1 <= p <= n, got p={p}, n={n}")
    out = []
    for j, k in index_pairs(p, n, form):
        rel = canonical(p, n, _raw_terms(p, j, k, form))
        if rel.monomials:
            out.append(((j, k), rel) if with_sources else rel)
    return out


def _sort_key(rel):
    return (len(rel.monomials), rel.monomials)


def plucker_dedupe(rels) -> list:
    """Distinct relations (canonical-form equality), sorted deterministically."""
    return sorted(set(rels), key=_sort_key)


def monomial_histogram(rels) -> dict:
    """``{number of monomials: number of relations}``."""
    return dict(sorted(Counter(len(r) for r in rels).items()))


def plucker_evaluate(rels, h: Multivector) -> list:
    """Value of each relation at the coefficients of ``h``."""
    rels = list(rels)
    if not rels:
        return []
    p, n = rels[0].p, rels[0].n
    if h.dim != n:
        raise DomainError(f"relations are for dimension {n}, multivector has {h.dim}")
    if not h.is_zero() and h.grades() != [p]:
        raise DomainError(f"relations are for grade {p}; multivector grades {h.grades()}")
    return [r.evaluate(h) for r in rels]
