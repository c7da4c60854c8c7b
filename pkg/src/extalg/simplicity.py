"""Deciding simplicity: spaces, Cartan-type criteria, a blade-contraction
sampler and (re-exported) Plücker relation systems."""

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .multivector import Multivector, basis_blades, inner, lcontr, wedge, wedge_all
from .plucker import (FORMS, PluckerRelation, monomial_histogram, plucker_dedupe,  # noqa: F401
                      plucker_evaluate, plucker_generate, plucker_relation)
from .spaces import inner_space, outer_space


def is_simple(m: Multivector) -> bool:
    if m.is_zero():
        raise DomainError("simplicity is not defined for the zero multivector")
    return inner_space(m) == outer_space(m)


def _grade_of(h):
    if h.is_zero():
        raise DomainError("H must be nonzero")
    g = h.grades()
    if len(g) != 1:
        raise DomainError(f"H must be homogeneous, has grades {g}")
    return g[0]


def _criteria(h, lower, upper):
    """The three equivalent conditions with F over basis(lower), G over basis(upper)."""
    fs = [lcontr(f, h) for f in basis_blades(h.dim, lower)] if lower >= 0 else []
    gs = [lcontr(h, g) for g in basis_blades(h.dim, upper)] if upper <= h.dim else []
    fs = [x for x in fs if not x.is_zero()]
    gs = [x for x in gs if not x.is_zero()]
    return {
        "i": all(wedge(x, h).is_zero() for x in fs),
        "ii": all(lcontr(y, h).is_zero() for y in gs),
        "iii": all(inner(x, y) == 0 for x in fs for y in gs),
    }


def cartan_first_order(h: Multivector) -> dict:
    """``{"i": ..., "ii": ..., "iii": ...}`` with F of grade p-1 and G of grade p+1."""
    p = _grade_of(h)
    return _criteria(h, p - 1, p + 1)


def cartan_second_order_criteria(h: Multivector) -> dict:
    """Same three conditions with F of grade p-2 and G of grade p+2."""
    p = _grade_of(h)
    if p < 2:
        return {"i": True, "ii": True, "iii": True}
    return _criteria(h, p - 2, p + 2)


def cartan_second_order(h: Multivector) -> bool:
    crit = cartan_second_order_criteria(h)
    if len(set(crit.values())) != 1:   # the three are equivalent; disagreement is a bug
        raise AssertionError(f"second-order criteria disagree: {crit}")
    return crit["i"]


@dataclass(frozen=True)
class EastwoodResult:
    """One-sided verdict: ``passed`` False proves H is not simple."""
    passed: bool
    tested: int       # samples with B -| H != 0
    trials: int
    vacuous: bool     # nothing was actually tested

    def __bool__(self):
        return self.passed


def _random_vector(rng, n):
    return Multivector.vector([Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(n)])


def eastwood_sample(h: Multivector, r: int, trials: int, seed=0) -> EastwoodResult:
    """Test ``B -| H`` for simplicity on ``trials`` random ``r``-blades ``B``."""
    p = _grade_of(h)
    if p < 3:
        raise DomainError(f"the blade-contraction test needs grade >= 3, got {p}")
    if not 1 <= r <= p - 2:
        raise DomainError(f"r must satisfy 1 <= r <= p-2 = {p - 2}, got {r}")
    if trials < 0:
        raise DomainError("trials must be nonnegative")
    rng = random.Random(seed)
    tested = 0
    for _ in range(trials):
        b = wedge_all(h.dim, [_random_vector(rng, h.dim) for _ in range(r)])
        c = lcontr(b, h)
        if c.is_zero():
            continue
        tested += 1
        if not is_simple(c):
            return EastwoodResult(False, tested, trials, False)
    return EastwoodResult(True, tested, trials, tested == 0)


def is_simple_by(h: Multivector, criterion: str) -> bool:
    """Decide simplicity of a homogeneous ``h`` with a named decider."""
    if criterion == "spaces":
        return is_simple(h)
    p = _grade_of(h)
    if criterion == "cartan1":
        crit = cartan_first_order(h)
        if len(set(crit.values())) != 1:
            raise AssertionError(f"first-order criteria disagree: {crit}")
        return crit["i"]
    if criterion == "cartan2":
        return cartan_second_order(h)
    if criterion in ("plucker-classical", "plucker-reduced"):
        form = criterion.split("-", 1)[1]
        rels = plucker_generate(p, h.dim, form) if p >= 1 else []
        return all(v == 0 for v in plucker_evaluate(rels, h))
    raise DomainError(f"unknown criterion {criterion!r}")


DECIDERS = ("spaces", "cartan1", "cartan2", "plucker-classical", "plucker-reduced")
